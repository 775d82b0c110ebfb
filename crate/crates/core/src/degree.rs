//! Exact degree of slice functions.
//!
//! The degree of `f` is the least `t` such that `f` is a linear combination
//! of `t`-pencils `f_{T,V}`, `#T = t`. [`degree_via_span`] decides this by
//! exact elimination against the pencil row space; the closed forms for basic
//! and paired functions live next to it so they can be checked against it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::combinatorics::{enumerate_slice, Block};
use crate::error::Result;
use crate::linalg::{integer_multiple, RowEchelon};
use crate::slice_fn::{paired, PairedSpec, SliceFunction};

/// A degree in `{-∞, 0, 1, …}`. `NegInfinity` orders below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(t) => Some(t),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(t) => write!(f, "{t}"),
        }
    }
}

/// Row space of the `t`-pencils on `C(V, k)`, rows as dense colex vectors.
#[derive(Debug)]
pub struct PencilBasis {
    n: usize,
    k: usize,
    t: usize,
    echelon: RowEchelon,
    parity: OnceLock<Option<ParityCheck>>,
}

impl PencilBasis {
    /// Dense 0/1 row of the pencil focussed at `focus`.
    pub fn pencil_row(blocks: &[Block], focus: Block) -> Vec<BigInt> {
        blocks
            .iter()
            .map(|b| if focus.is_subset(*b) { BigInt::one() } else { BigInt::zero() })
            .collect()
    }

    pub fn build(n: usize, k: usize, t: usize) -> Result<Self> {
        let blocks: Vec<Block> = enumerate_slice(n, k)?.collect();
        let mut echelon = RowEchelon::new(blocks.len());
        if t <= n {
            for focus in enumerate_slice(n, t)? {
                if echelon.rank() == blocks.len() {
                    break;
                }
                echelon.insert(Self::pencil_row(&blocks, focus));
            }
        }
        Ok(Self {
            n,
            k,
            t,
            echelon,
            parity: OnceLock::new(),
        })
    }

    /// Cached per `(n, k, t)`.
    pub fn get(n: usize, k: usize, t: usize) -> Result<Arc<PencilBasis>> {
        type Cache = Mutex<HashMap<(usize, usize, usize), Arc<PencilBasis>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().expect("cache poisoned").get(&(n, k, t)) {
            return Ok(b.clone());
        }
        let basis = Arc::new(Self::build(n, k, t)?);
        Ok(cache
            .lock()
            .expect("cache poisoned")
            .entry((n, k, t))
            .or_insert(basis)
            .clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &RowEchelon {
        &self.echelon
    }

    pub fn contains(&self, f: &SliceFunction) -> bool {
        debug_assert_eq!((f.n(), f.k()), (self.n, self.k));
        self.echelon.contains_int(&integer_multiple(&f.dense()))
    }

    /// Machine-word parity check for fast membership of block sets, if the
    /// annihilator entries fit in `i64`.
    pub fn parity_check(&self) -> Option<&ParityCheck> {
        self.parity
            .get_or_init(|| ParityCheck::from_annihilator(&self.echelon.annihilator()))
            .as_ref()
    }
}

/// Columns of an integer matrix `H` whose kernel is the pencil row space:
/// a vector `v` has degree at most `t` iff `H v = 0`.
#[derive(Debug, Clone)]
pub struct ParityCheck {
    columns: Vec<Vec<i64>>,
    checks: usize,
}

impl ParityCheck {
    fn from_annihilator(rows: &[Vec<BigInt>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::with_capacity(rows.len()); cols];
        for row in rows {
            for (c, v) in row.iter().enumerate() {
                columns[c].push(v.to_i64()?);
            }
        }
        Some(Self {
            columns,
            checks: rows.len(),
        })
    }

    pub fn checks(&self) -> usize {
        self.checks
    }

    /// Syndrome of the indicator of the given block indices.
    pub fn syndrome(&self, indices: impl IntoIterator<Item = usize>) -> Vec<i64> {
        let mut s = vec![0i64; self.checks];
        for idx in indices {
            for (acc, v) in s.iter_mut().zip(&self.columns[idx]) {
                *acc += v;
            }
        }
        s
    }

    pub fn column(&self, idx: usize) -> &[i64] {
        &self.columns[idx]
    }

    pub fn accepts(&self, indices: impl IntoIterator<Item = usize>) -> bool {
        self.checks == 0 || self.syndrome(indices).iter().all(|&v| v == 0)
    }
}

/// Least `t` such that `f` lies in the span of the `t`-pencils; `-∞` for the
/// zero function.
pub fn degree_via_span(f: &SliceFunction) -> Result<Degree> {
    if f.is_zero() {
        return Ok(Degree::NegInfinity);
    }
    let cap = f.k().min(f.n() - f.k());
    for t in 0..cap {
        if PencilBasis::get(f.n(), f.k(), t)?.contains(f) {
            return Ok(Degree::Finite(t));
        }
    }
    Ok(Degree::Finite(cap))
}

/// Degree of `f_{I,J}` with `#I = i`, `#J = j`.
pub fn basic_degree_formula(n: usize, k: usize, i: usize, j: usize) -> Degree {
    if i > k || j < k {
        return Degree::NegInfinity;
    }
    Degree::Finite((i + (n - j)).min(k).min(n - k))
}

/// Degree of `p_{I,J}` with `#I = i`, `#J = j`; zero paired functions map to
/// `-∞`.
pub fn paired_degree_formula(n: usize, k: usize, i: usize, j: usize) -> Degree {
    let low = k.min(n - k);
    let high = k.max(n - k);
    if i.min(j) > low || i.max(j) > high {
        return Degree::NegInfinity;
    }
    let s = i + j;
    let t = if s % 2 == 1 && s <= low {
        s - 1
    } else if k % 2 == 1 && n == 2 * k && s >= k {
        k - 1
    } else {
        s.min(low)
    };
    Degree::Finite(t)
}

/// `min(i + j, k, n - k)`.
pub fn elementary_bound(n: usize, k: usize, i: usize, j: usize) -> usize {
    (i + j).min(k).min(n - k)
}

/// `I = {0..i}`, `J = {i..i+j}`.
pub fn standard_pair(i: usize, j: usize) -> PairedSpec {
    PairedSpec::new(Block::initial(i), Block::range(i, j)).expect("ranges are disjoint")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCase {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub by_span: Degree,
    pub by_formula: Degree,
}

#[derive(Debug, Clone, Default)]
pub struct TheoremReport {
    pub cases: usize,
    pub mismatches: Vec<TheoremCase>,
}

impl TheoremReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the span degree of every `p_{I,J}` with the closed form, over all
/// `n <= max_n`, `0 <= k <= n` and sizes `i + j <= n`.
pub fn verify_paired_theorem(max_n: usize) -> Result<TheoremReport> {
    let mut params = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for i in 0..=n {
                for j in 0..=n - i {
                    params.push((n, k, i, j));
                }
            }
        }
    }
    let results: Vec<TheoremCase> = params
        .par_iter()
        .map(|&(n, k, i, j)| {
            let p = paired(standard_pair(i, j), n, k)?;
            Ok(TheoremCase {
                n,
                k,
                i,
                j,
                by_span: degree_via_span(&p)?,
                by_formula: paired_degree_formula(n, k, i, j),
            })
        })
        .collect::<Result<_>>()?;
    Ok(TheoremReport {
        cases: results.len(),
        mismatches: results.into_iter().filter(|c| c.by_span != c.by_formula).collect(),
    })
}
