//! Exact linear algebra: fraction-free row echelon forms over the integers
//! and a small rational solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Divides a row by the gcd of its entries and makes the leading entry
/// positive.
fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Clears denominators of a rational vector.
pub fn integer_multiple(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    v.iter().map(|r| r.numer() * (&l / r.denom())).collect()
}

/// Row echelon form built by successive insertion. Every stored row is
/// primitive and vanishes on the pivot columns of all earlier rows.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_in_place(&self, v: &mut [BigInt]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = &row[*pivot];
            let b = v[*pivot].clone();
            // v <- a*v - b*row  (cross-multiplication, no division)
            for (x, r) in v.iter_mut().zip(row.iter()) {
                if r.is_zero() {
                    if !x.is_zero() {
                        *x *= a;
                    }
                } else {
                    *x = &*x * a - &b * r;
                }
            }
            make_primitive(v);
        }
    }

    /// Reduces `v` against the basis; a zero result means `v` is in the
    /// row space.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        make_primitive(&mut v);
        self.reduce_in_place(&mut v);
        v
    }

    /// Adds a row, returning `true` when it increased the rank.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.contains_int(&integer_multiple(v))
    }

    /// Integer basis of the orthogonal complement `{h : h·r = 0 for all rows r}`.
    pub fn annihilator(&self) -> Vec<Vec<BigInt>> {
        // Back-substitute to reduced row echelon form over the rationals.
        let mut rref: Vec<(usize, Vec<Rational>)> = self
            .rows
            .iter()
            .map(|(p, r)| {
                let lead = Rational::from_integer(r[*p].clone());
                (*p, r.iter().map(|x| Rational::from_integer(x.clone()) / &lead).collect())
            })
            .collect();
        rref.sort_by_key(|(p, _)| *p);
        for idx in (0..rref.len()).rev() {
            let (pivot, row) = rref[idx].clone();
            for (_, other) in rref.iter_mut().take(idx) {
                let factor = other[pivot].clone();
                if factor.is_zero() {
                    continue;
                }
                for (x, r) in other.iter_mut().zip(row.iter()) {
                    *x -= &factor * r;
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for (p, _) in &rref {
            is_pivot[*p] = true;
        }
        (0..self.cols)
            .filter(|c| !is_pivot[*c])
            .map(|free| {
                let mut h = vec![Rational::zero(); self.cols];
                h[free] = Rational::one();
                for (p, row) in &rref {
                    h[*p] = -row[free].clone();
                }
                let mut ints = integer_multiple(&h);
                make_primitive(&mut ints);
                ints
            })
            .collect()
    }
}

/// Rank of an integer matrix.
pub fn rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut e = RowEchelon::new(cols);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// Solves the square system `a x = b` exactly; `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let lead = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &lead;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                *x -= &factor * p;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}
