//! Bounds on `m₁(n, k, t)`, the least size of a non-empty Boolean function of
//! degree at most `t` on `C(V, k)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binom, binom_u64, slice_blocks};
use crate::degree::{paired_degree_formula, Degree, ParityCheck, PencilBasis};
use crate::error::{Error, Result};
use crate::lp::{LpProblem, LpSolution, Sense};
use crate::rational::{int, round_2dp, to_pq, Rational};
use crate::scheme::QMatrix;
use crate::slice_fn::SliceFunction;

fn b(n: usize, k: usize) -> BigInt {
    binom(n as i64, k as i64)
}

fn bi(n: i64, k: i64) -> BigInt {
    binom(n, k)
}

/// `gcd C(n-i, k-i)` over `i = 0..=t`; divides the size of every non-empty
/// Boolean function of degree at most `t`.
pub fn delta(n: usize, k: usize, t: usize) -> Result<BigInt> {
    if t > k || k > n {
        return Err(Error::Precondition(format!("need t <= k <= n, got ({n}, {k}, {t})")));
    }
    Ok((0..=t).fold(BigInt::zero(), |g, i| g.gcd(&b(n - i, k - i))))
}

/// Size of a `t`-pencil or dual `t`-pencil, whichever is smaller.
pub fn pencil_size(n: usize, k: usize, t: usize) -> Result<BigInt> {
    let low = k.min(n.saturating_sub(k));
    if k > n || t > low {
        return Err(Error::Precondition(format!("need t <= min(k, n-k), got ({n}, {k}, {t})")));
    }
    Ok(b(n - t, low - t))
}

/// Size of the smallest paired function of degree `t` of the shape
/// `p_{t+1,0}` (`t` even) or `p_{t,0}` (`t` odd).
pub fn paired_min_size(n: usize, k: usize, t: usize) -> Result<BigInt> {
    if 2 * k > n || t == 0 || t > k {
        return Err(Error::Precondition(format!("need 2k <= n and 1 <= t <= k, got ({n}, {k}, {t})")));
    }
    let (n, k, t) = (n as i64, k as i64, t as i64);
    Ok(if t % 2 == 0 {
        bi(n - t - 1, k) + bi(n - t - 1, k - t - 1)
    } else {
        bi(n - t, k) + bi(n - t, k - t)
    })
}

/// `#p_{I,J}` for `#I = i`, `#J = j`: the two leg sizes added.
pub fn paired_size(n: usize, k: usize, i: usize, j: usize) -> BigInt {
    let (n, k, i, j) = (n as i64, k as i64, i as i64, j as i64);
    bi(n - i - j, k - i) + bi(n - i - j, k - j)
}

/// The linear program minimizing `Σ a_i` over inner distributions with
/// `a_0 = 1` whose dual distribution vanishes above `t`.
pub fn lp_problem(n: usize, k: usize, t: usize) -> Result<LpProblem> {
    if t > k {
        return Err(Error::Precondition(format!("t = {t} exceeds k = {k}")));
    }
    let q = QMatrix::get(n, k)?;
    let mut p = LpProblem::new(vec![int(1); k + 1]);
    let mut unit = vec![int(0); k + 1];
    unit[0] = int(1);
    p.push(unit, Sense::Eq, int(1));
    for (l, row) in q.rows().iter().enumerate() {
        let sense = if l > t { Sense::Eq } else { Sense::Ge };
        p.push(row.clone(), sense, int(0));
    }
    Ok(p)
}

/// Solves [`lp_problem`] and checks the optimality certificate.
pub fn lp_solve(n: usize, k: usize, t: usize) -> Result<(LpProblem, LpSolution)> {
    let p = lp_problem(n, k, t)?;
    let s = p.solve()?;
    if !p.certify(&s) {
        return Err(Error::Precondition(format!("no optimality certificate for ({n}, {k}, {t})")));
    }
    Ok((p, s))
}

/// Exact optimum of the linear programming bound.
pub fn lp_bound(n: usize, k: usize, t: usize) -> Result<Rational> {
    Ok(lp_solve(n, k, t)?.1.value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M1Result {
    pub size: u64,
    pub witness: SliceFunction,
}

/// Depth-first search over block index sets of a fixed size with running
/// syndromes.
struct M1Search<'a> {
    check: &'a ParityCheck,
    total: usize,
}

impl M1Search<'_> {
    fn extend(&self, chosen: &mut Vec<usize>, syndrome: &mut [i64], remaining: usize) -> bool {
        if remaining == 0 {
            return syndrome.iter().all(|&v| v == 0);
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        for idx in start..=self.total - remaining {
            let col = self.check.column(idx);
            for (s, v) in syndrome.iter_mut().zip(col) {
                *s += v;
            }
            chosen.push(idx);
            if self.extend(chosen, syndrome, remaining - 1) {
                return true;
            }
            chosen.pop();
            for (s, v) in syndrome.iter_mut().zip(col) {
                *s -= v;
            }
        }
        false
    }
}

/// Exact `m₁(n, k, t)` if it is at most `size_cap`, by exhaustive search.
///
/// Block `{1..k}` is always included: every non-empty set is a point
/// permutation away from one that contains it.
pub fn m1_bruteforce(n: usize, k: usize, t: usize, size_cap: u64) -> Result<Option<M1Result>> {
    if k > n {
        return Err(Error::InvalidSlice { n, k });
    }
    let total = binom_u64(n, k);
    let within = (total <= 36 && size_cap <= 6) || (total <= 20 && size_cap <= 10);
    if !within {
        return Err(Error::BoundExceeded(format!(
            "C({n}, {k}) = {total} with cap {size_cap} is outside the brute-force range"
        )));
    }
    let blocks = slice_blocks(n, k)?;
    let low = k.min(n - k);
    if t >= low {
        if size_cap == 0 {
            return Ok(None);
        }
        let witness = SliceFunction::from_blocks(n, k, [blocks[0]])?;
        return Ok(Some(M1Result { size: 1, witness }));
    }
    let step = delta(n, k, t)?.to_u64().unwrap_or(u64::MAX);
    let basis = PencilBasis::get(n, k, t)?;
    let check = basis
        .parity_check()
        .ok_or_else(|| Error::BoundExceeded("parity check entries overflow i64".into()))?;
    let search = M1Search {
        check,
        total: blocks.len(),
    };
    for size in (step..=size_cap.min(total)).step_by(step.max(1) as usize) {
        let rest = size as usize - 1;
        let hit = if rest == 0 {
            check.accepts([0]).then(|| vec![0])
        } else {
            (1..=blocks.len() - rest).into_par_iter().find_map_first(|second| {
                let mut chosen = vec![0, second];
                let mut syndrome = check.syndrome([0, second]);
                search.extend(&mut chosen, &mut syndrome, rest - 1).then_some(chosen)
            })
        };
        if let Some(indices) = hit {
            let witness = SliceFunction::from_blocks(n, k, indices.iter().map(|&i| blocks[i]))?;
            return Ok(Some(M1Result { size, witness }));
        }
    }
    Ok(None)
}

/// How a degree-`t` paired function compares in size to a `t`-pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairedVsPencil {
    Smaller,
    Equal,
    Larger,
    NotDegreeT,
}

impl fmt::Display for PairedVsPencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairedVsPencil::Smaller => "smaller",
            PairedVsPencil::Equal => "equal",
            PairedVsPencil::Larger => "larger",
            PairedVsPencil::NotDegreeT => "not-degree-t",
        };
        f.write_str(s)
    }
}

/// Case analysis for `p_{I,J}` with `#I = i`, `#J = j` against a `t`-pencil,
/// where `2k <= n` and `1 <= t <= k - 1`.
pub fn classify_paired_vs_pencil(n: usize, k: usize, t: usize, i: usize, j: usize) -> Result<PairedVsPencil> {
    if 2 * k > n || t == 0 || t + 1 > k {
        return Err(Error::Precondition(format!(
            "need 2k <= n and 1 <= t <= k-1, got ({n}, {k}, {t})"
        )));
    }
    if i + j > n {
        return Err(Error::Precondition(format!("i + j = {} exceeds n = {n}", i + j)));
    }
    if paired_degree_formula(n, k, i, j) != Degree::Finite(t) {
        return Ok(PairedVsPencil::NotDegreeT);
    }
    let even = t.is_multiple_of(2);
    let (hi, lo) = (i.max(j), i.min(j));
    let main = hi == t + 1 && lo == 0;
    let middle = n == 2 * k;
    let root = even && middle && k == t + 1;
    let superdiagonal = |strict: bool| {
        let inside = (1..k).contains(&i) && (1..k).contains(&j);
        let above = if strict { i + j > k } else { i + j >= k };
        inside && above && 2 * k >= i + j
    };
    let twice_binom = || BigInt::from(2) * b(2 * k - i - j, k - i);
    // C(2k-i-j, k-i) compared with (k+1)/2, doubled to stay integral
    let k_plus_one = BigInt::from(k + 1);
    if even && middle && (main || (k == t + 1 && hi == t + 1)) {
        return Ok(PairedVsPencil::Smaller);
    }
    if root && superdiagonal(true) && twice_binom() < k_plus_one {
        return Ok(PairedVsPencil::Smaller);
    }
    if even && n == 2 * k + 1 && main {
        return Ok(PairedVsPencil::Equal);
    }
    if root && superdiagonal(false) && twice_binom() == k_plus_one {
        return Ok(PairedVsPencil::Equal);
    }
    Ok(PairedVsPencil::Larger)
}

/// Conjectured value of `m₁(n, k, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjectured(pub BigInt);

impl fmt::Display for Conjectured {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (conjectured)", self.0)
    }
}

pub fn conjecture_value(n: usize, k: usize, t: usize) -> Result<Conjectured> {
    let low = k.min(n.saturating_sub(k));
    if k > n || t > low {
        return Err(Error::Precondition(format!("need t <= min(k, n-k), got ({n}, {k}, {t})")));
    }
    let v = if n == 2 * k && t.is_multiple_of(2) && t != k {
        BigInt::from(2) * b(2 * k - t - 1, k)
    } else {
        b(n - t, low - t)
    };
    Ok(Conjectured(v))
}

/// One row of a bound table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub pencil: BigInt,
    pub paired: BigInt,
    pub delta: BigInt,
    pub lp: Rational,
    pub m1_exact: Option<BigInt>,
    /// Externally supplied value for the lattice-search column.
    pub sd: Option<String>,
}

#[derive(Serialize)]
struct RowJson<'a> {
    n: usize,
    k: usize,
    t: usize,
    pencil: String,
    paired: String,
    delta: String,
    lp_exact: String,
    lp_2dp: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m1_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sd: Option<&'a str>,
}

impl BoundRow {
    pub fn compute(n: usize, k: usize, t: usize) -> Result<Self> {
        Ok(Self {
            n,
            k,
            t,
            pencil: pencil_size(n, k, t)?,
            paired: paired_min_size(n, k, t)?,
            delta: delta(n, k, t)?,
            lp: lp_bound(n, k, t)?,
            m1_exact: None,
            sd: None,
        })
    }

    pub fn lp_2dp(&self) -> String {
        round_2dp(&self.lp)
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.t,
            self.pencil,
            self.paired,
            self.delta,
            to_pq(&self.lp),
            self.lp_2dp()
        )
    }

    fn json(&self) -> RowJson<'_> {
        RowJson {
            n: self.n,
            k: self.k,
            t: self.t,
            pencil: self.pencil.to_string(),
            paired: self.paired.to_string(),
            delta: self.delta.to_string(),
            lp_exact: to_pq(&self.lp),
            lp_2dp: self.lp_2dp(),
            m1_exact: self.m1_exact.as_ref().map(ToString::to_string),
            sd: self.sd.as_deref(),
        }
    }
}

pub const CSV_HEADER: &str = "n,k,t,pencil,paired,delta,lp_exact,lp_2dp";

/// Rows computed in parallel, returned in input order.
pub fn bound_table(t: usize, rows: &[(usize, usize)]) -> Result<Vec<BoundRow>> {
    rows.par_iter().map(|&(n, k)| BoundRow::compute(n, k, t)).collect()
}

pub fn table_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

pub fn table_json(rows: &[BoundRow]) -> String {
    let items: Vec<_> = rows.iter().map(BoundRow::json).collect();
    serde_json::to_string_pretty(&items).expect("plain data serializes")
}

/// The `(n, k)` rows tabulated for `t = 2, 3, 4`.
pub fn default_rows(t: usize) -> Vec<(usize, usize)> {
    let spans: &[(usize, std::ops::RangeInclusive<usize>)] = match t {
        2 => &[(3, 6..=13), (4, 8..=13), (5, 10..=13), (6, 12..=14)],
        3 => &[(4, 8..=13), (5, 10..=13), (6, 12..=15)],
        4 => &[(5, 10..=13), (6, 12..=15)],
        _ => &[],
    };
    spans
        .iter()
        .flat_map(|(k, ns)| ns.clone().map(move |n| (n, *k)))
        .collect()
}

/// Checks `lp <= candidate <= min(pencil, paired)` for a claimed size.
pub fn within_sandwich(row: &BoundRow, candidate: &BigInt) -> bool {
    let upper = row.pencil.clone().min(row.paired.clone());
    Rational::from_integer(candidate.clone()) >= row.lp && *candidate <= upper
}
