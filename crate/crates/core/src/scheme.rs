//! Johnson scheme `J(n, k)`: second eigenmatrix, inner and dual
//! distributions, and the design/degree predicates built on them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::combinatorics::binom;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::rational::{big, to_pq, Rational};
use crate::slice_fn::{dual, SliceFunction};

fn require_standard(n: usize, k: usize) -> Result<()> {
    if 2 * k > n {
        return Err(Error::NeedsStandardRange { n, k });
    }
    Ok(())
}

/// `Q_ℓ(i)` of `J(n, k)` for `2k <= n` and `0 <= ℓ, i <= k`.
pub fn q_eigenvalue(n: usize, k: usize, l: usize, i: usize) -> Result<Rational> {
    require_standard(n, k)?;
    if l > k || i > k {
        return Err(Error::Precondition(format!("indices ℓ = {l}, i = {i} exceed k = {k}")));
    }
    let (n, k, l, i) = (n as i64, k as i64, l as i64, i as i64);
    let lead = big(binom(n, l) - binom(n, l - 1));
    let mut sum = Rational::zero();
    for j in 0..=l {
        let num = binom(l, j) * binom(n + 1 - l, j) * binom(i, j);
        if num.is_zero() {
            continue;
        }
        let term = Rational::new(num, binom(k, j) * binom(n - k, j));
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(lead * sum)
}

/// Second eigenmatrix, rows indexed by `ℓ` and columns by `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    k: usize,
    entries: Vec<Vec<Rational>>,
}

impl QMatrix {
    fn compute(n: usize, k: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(k + 1);
        for l in 0..=k {
            let row = (0..=k).map(|i| q_eigenvalue(n, k, l, i)).collect::<Result<_>>()?;
            entries.push(row);
        }
        Ok(Self { n, k, entries })
    }

    /// Cached per `(n, k)`.
    pub fn get(n: usize, k: usize) -> Result<Arc<QMatrix>> {
        require_standard(n, k)?;
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<QMatrix>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(q) = cache.lock().expect("cache poisoned").get(&(n, k)) {
            return Ok(q.clone());
        }
        let q = Arc::new(Self::compute(n, k)?);
        Ok(cache
            .lock()
            .expect("cache poisoned")
            .entry((n, k))
            .or_insert(q)
            .clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, l: usize, i: usize) -> &Rational {
        &self.entries[l][i]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `Q a`.
    pub fn apply(&self, a: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(a).fold(Rational::zero(), |acc, (q, x)| acc + q * x))
            .collect()
    }
}

/// `(a_0, …, a_k)`: `a_i` is the number of ordered pairs of blocks meeting in
/// `k - i` points, divided by `#Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDistribution(pub Vec<Rational>);

/// `(b_0, …, b_k) = Q (a_0, …, a_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDistribution(pub Vec<Rational>);

impl InnerDistribution {
    pub fn to_pq(&self) -> Vec<String> {
        self.0.iter().map(to_pq).collect()
    }
}

impl DualDistribution {
    pub fn to_pq(&self) -> Vec<String> {
        self.0.iter().map(to_pq).collect()
    }
}

fn require_nonempty_set(y: &SliceFunction) -> Result<()> {
    if !y.is_boolean() {
        return Err(Error::NotBoolean);
    }
    if y.is_zero() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

pub fn inner_distribution(y: &SliceFunction) -> Result<InnerDistribution> {
    require_nonempty_set(y)?;
    let k = y.k();
    let blocks: Vec<_> = y.support().collect();
    let mut counts = vec![0u64; k + 1];
    for a in &blocks {
        for b in &blocks {
            counts[k - a.intersection(*b).len()] += 1;
        }
    }
    let size = Rational::from_integer(blocks.len().into());
    Ok(InnerDistribution(
        counts
            .into_iter()
            .map(|c| Rational::from_integer(c.into()) / &size)
            .collect(),
    ))
}

pub fn dual_distribution(y: &SliceFunction) -> Result<DualDistribution> {
    let q = QMatrix::get(y.n(), y.k())?;
    let a = inner_distribution(y)?;
    Ok(DualDistribution(q.apply(&a.0)))
}

/// Largest `ℓ` with `b_ℓ != 0`; `-∞` for the empty set. Sets with `2k > n`
/// are dualized first.
pub fn degree_via_dual(y: &SliceFunction) -> Result<Degree> {
    if !y.is_boolean() {
        return Err(Error::NotBoolean);
    }
    if y.is_zero() {
        return Ok(Degree::NegInfinity);
    }
    let b = if 2 * y.k() > y.n() {
        dual_distribution(&dual(y))?
    } else {
        dual_distribution(y)?
    };
    let top = b.0.iter().rposition(|x| !x.is_zero()).expect("b_0 = #Y > 0");
    Ok(Degree::Finite(top))
}

/// `b_1 = … = b_t = 0`. Requires `t <= min(k, n-k)`; sets with `2k > n` are
/// dualized first.
pub fn is_design_scheme(y: &SliceFunction, t: usize) -> Result<bool> {
    let (n, k) = (y.n(), y.k());
    if t > k.min(n - k) {
        return Err(Error::Precondition(format!("t = {t} exceeds min(k, n-k)")));
    }
    let b = if 2 * k > n {
        dual_distribution(&dual(y))?
    } else {
        dual_distribution(y)?
    };
    Ok(b.0[1..=t].iter().all(Zero::is_zero))
}

/// `Q_ℓ(0) = C(n, ℓ) - C(n, ℓ - 1)`, the multiplicity of the `ℓ`-th
/// eigenspace.
pub fn multiplicity(n: usize, l: usize) -> Rational {
    big(binom(n as i64, l as i64) - binom(n as i64, l as i64 - 1))
}

/// `Q_0(i) = 1` for every `i`.
pub fn is_normalized(q: &QMatrix) -> bool {
    q.rows()[0].iter().all(One::is_one)
}
