//! Combinatorial `t`-designs: parameters, intersection numbers, the
//! Mendelsohn system, design orthogonality, and a small exhaustive search.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::combinatorics::{binom, complement, enumerate_slice, slice_blocks, Block};
use crate::degree::{degree_via_span, Degree};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::rational::{big, Rational};
use crate::slice_fn::SliceFunction;

/// Numerical parameters `t-(v, k, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
}

impl DesignParams {
    pub fn new(t: usize, v: usize, k: usize, lambda: u64) -> Result<Self> {
        if t > k || k > v {
            return Err(Error::Precondition(format!(
                "need t <= k <= v, got {t}-({v},{k},{lambda})"
            )));
        }
        Ok(Self { t, v, k, lambda })
    }

    /// `C(v - t, k - t)`, the index of the complete design.
    pub fn lambda_max(&self) -> BigInt {
        binom((self.v - self.t) as i64, (self.k - self.t) as i64)
    }

    /// `λ_i = λ · C(v-i, t-i) / C(k-i, t-i)`.
    pub fn lambda_i(&self, i: usize) -> Result<Rational> {
        if i > self.t {
            return Err(Error::Precondition(format!("i = {i} exceeds t = {}", self.t)));
        }
        let (v, k, t, i) = (self.v as i64, self.k as i64, self.t as i64, i as i64);
        Ok(Rational::new(
            BigInt::from(self.lambda) * binom(v - i, t - i),
            binom(k - i, t - i),
        ))
    }

    /// All of `λ_0, …, λ_t` are integers.
    pub fn is_admissible(&self) -> bool {
        (0..=self.t).all(|i| self.lambda_i(i).map(|l| l.is_integer()).unwrap_or(false))
            && BigInt::from(self.lambda) <= self.lambda_max()
    }

    /// `#D = λ_0`.
    pub fn block_count(&self) -> Rational {
        self.lambda_i(0).expect("0 <= t")
    }

    /// `λ_max / λ = 2`.
    pub fn is_halving(&self) -> bool {
        BigInt::from(self.lambda) * 2 == self.lambda_max()
    }
}

pub fn lambda_i(params: &DesignParams, i: usize) -> Result<Rational> {
    params.lambda_i(i)
}

fn require_set(d: &SliceFunction) -> Result<()> {
    if !d.is_boolean() {
        return Err(Error::NotBoolean);
    }
    Ok(())
}

/// `λ` if every `t`-subset lies in the same number of blocks of `D`.
pub fn is_design(d: &SliceFunction, t: usize) -> Result<Option<u64>> {
    require_set(d)?;
    if t > d.n() {
        return Ok(None);
    }
    let blocks: Vec<Block> = d.support().collect();
    let mut common = None;
    for target in enumerate_slice(d.n(), t)? {
        let count = blocks.iter().filter(|b| target.is_subset(**b)).count() as u64;
        match common {
            None => common = Some(count),
            Some(c) if c != count => return Ok(None),
            _ => {}
        }
    }
    Ok(common)
}

/// `α_i(S) = #{B ∈ D : #(S ∩ B) = i}` for `i = 0, …, k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile(pub Vec<u64>);

impl IntersectionProfile {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn intersection_numbers(d: &SliceFunction, s: Block) -> Result<IntersectionProfile> {
    require_set(d)?;
    let mut alpha = vec![0u64; d.k() + 1];
    for b in d.support() {
        alpha[b.intersection(s).len()] += 1;
    }
    Ok(IntersectionProfile(alpha))
}

/// Outcome of checking `Σ_j C(j, i) α_j(S) = C(s, i) λ_i` for `i = 0..=t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MendelsohnCheck {
    Holds,
    Fails { i: usize },
}

impl MendelsohnCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MendelsohnCheck::Holds)
    }
}

/// Checks the Mendelsohn equations of `D` relative to `S` against the
/// `λ_i` of `params`, reporting the first failing `i`.
pub fn mendelsohn_check(d: &SliceFunction, s: Block, params: &DesignParams) -> Result<MendelsohnCheck> {
    if (d.n(), d.k()) != (params.v, params.k) {
        return Err(Error::ParameterMismatch(format!(
            "set lives on ({}, {}), parameters are for ({}, {})",
            d.n(),
            d.k(),
            params.v,
            params.k
        )));
    }
    let alpha = intersection_numbers(d, s)?;
    for i in 0..=params.t {
        let lhs: BigInt = alpha
            .0
            .iter()
            .enumerate()
            .map(|(j, a)| binom(j as i64, i as i64) * BigInt::from(*a))
            .sum();
        let rhs = big(binom(s.len() as i64, i as i64)) * params.lambda_i(i)?;
        if big(lhs) != rhs {
            return Ok(MendelsohnCheck::Fails { i });
        }
    }
    Ok(MendelsohnCheck::Holds)
}

/// Solves the Mendelsohn system for `α_0, …, α_t` given the high intersection
/// numbers `α_{t+1}, …, α_k` of a set of size `s`.
pub fn koehler_alpha(params: &DesignParams, s: usize, high: &[u64]) -> Result<Vec<Rational>> {
    let (t, k) = (params.t, params.k);
    if high.len() != k - t {
        return Err(Error::Precondition(format!(
            "expected {} high intersection numbers, got {}",
            k - t,
            high.len()
        )));
    }
    if !params.is_admissible() {
        return Err(Error::ParameterMismatch(format!(
            "{t}-({},{},{}) is not admissible",
            params.v, k, params.lambda
        )));
    }
    let coeff = |i: usize, j: usize| big(binom(j as i64, i as i64));
    let mut matrix = Vec::with_capacity(t + 1);
    let mut rhs = Vec::with_capacity(t + 1);
    for i in 0..=t {
        matrix.push((0..=t).map(|j| coeff(i, j)).collect::<Vec<_>>());
        let mut r = big(binom(s as i64, i as i64)) * params.lambda_i(i)?;
        for (offset, a) in high.iter().enumerate() {
            r -= coeff(i, t + 1 + offset) * big(BigInt::from(*a));
        }
        rhs.push(r);
    }
    solve(&matrix, &rhs).ok_or_else(|| Error::Precondition("singular Mendelsohn system".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub intersection: usize,
    pub expected: Rational,
    pub lambda: u64,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        Rational::from_integer(self.intersection.into()) == self.expected
    }
}

/// For `deg(A) <= t` and a `t`-design `D`: `#(A ∩ D) = (λ / λ_max) #A`.
pub fn design_orthogonality_check(a: &SliceFunction, d: &SliceFunction, t: usize) -> Result<OrthogonalityReport> {
    require_set(a)?;
    let degree = degree_via_span(a)?;
    if degree > Degree::Finite(t) {
        return Err(Error::Precondition(format!("deg(A) = {degree} exceeds t = {t}")));
    }
    let lambda = is_design(d, t)?
        .ok_or_else(|| Error::Precondition(format!("D is not a {t}-design")))?;
    let params = DesignParams::new(t, d.n(), d.k(), lambda)?;
    let expected = Rational::new(BigInt::from(lambda), params.lambda_max())
        * Rational::from_integer(a.support_len().into());
    Ok(OrthogonalityReport {
        intersection: a.common_support(d)?,
        expected,
        lambda,
    })
}

/// `K ∈ D ⟺ K^∁ ∉ D` for a root-case halving `(k-1)-(2k, k, 2^{a-1})` with
/// `k = 2^a - 1`.
pub fn hartman_anticomplementary_check(d: &SliceFunction) -> Result<bool> {
    require_set(d)?;
    let (n, k) = (d.n(), d.k());
    let mismatch = || Error::ParameterMismatch(format!("set on ({n}, {k}) is not a root-case halving"));
    if n != 2 * k || k == 0 || !(k + 1).is_power_of_two() {
        return Err(mismatch());
    }
    let expected_lambda = (k as u64).div_ceil(2);
    if is_design(d, k - 1)? != Some(expected_lambda) {
        return Err(mismatch());
    }
    let g = d.ground();
    Ok(enumerate_slice(n, k)?.all(|b| d.contains(b) != d.contains(complement(b, g))))
}

/// Every `t-(v, k, λ)` design on the labelled point set, in colex order of
/// their block lists. Restricted to `C(v, k) <= 24` and `λ_0 <= 12`.
pub fn search_designs(params: &DesignParams) -> Result<Vec<SliceFunction>> {
    let DesignParams { t, v, k, lambda } = *params;
    let slice_len = binom(v as i64, k as i64);
    if slice_len > BigInt::from(24) {
        return Err(Error::BoundExceeded(format!("C({v},{k}) = {slice_len} > 24")));
    }
    let b0 = params.block_count();
    if b0 > big(BigInt::from(12)) {
        return Err(Error::BoundExceeded(format!("λ_0 = {b0} > 12")));
    }
    if !params.is_admissible() {
        return Ok(Vec::new());
    }
    let target = b0.to_integer().to_usize().expect("small");
    let blocks = slice_blocks(v, k)?;
    let t_sets = slice_blocks(v, t)?;
    // covers[b] = indices of t-subsets inside block b
    let covers: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            t_sets
                .iter()
                .enumerate()
                .filter(|(_, ts)| ts.is_subset(*b))
                .map(|(idx, _)| idx)
                .collect()
        })
        .collect();

    let search = Search {
        blocks: &blocks,
        covers: &covers,
        lambda,
        target,
        t_count: t_sets.len(),
    };
    if target == 0 {
        return Ok(vec![SliceFunction::zero(v, k)?]);
    }
    // Fan out over the colex-first block of the design.
    let found: Vec<Vec<Vec<usize>>> = (0..blocks.len())
        .into_par_iter()
        .map(|first| {
            let mut state = SearchState {
                coverage: vec![0; search.t_count],
                chosen: Vec::with_capacity(target),
                out: Vec::new(),
            };
            if search.try_add(&mut state, first) {
                search.extend(&mut state, first + 1);
            }
            state.out
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .map(|idx| SliceFunction::from_blocks(v, k, idx.into_iter().map(|i| blocks[i])))
        .collect()
}

struct Search<'a> {
    blocks: &'a [Block],
    covers: &'a [Vec<usize>],
    lambda: u64,
    target: usize,
    t_count: usize,
}

struct SearchState {
    coverage: Vec<u64>,
    chosen: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn try_add(&self, st: &mut SearchState, b: usize) -> bool {
        if self.covers[b].iter().any(|&c| st.coverage[c] >= self.lambda) {
            return false;
        }
        for &c in &self.covers[b] {
            st.coverage[c] += 1;
        }
        st.chosen.push(b);
        true
    }

    fn remove_last(&self, st: &mut SearchState) {
        let b = st.chosen.pop().expect("non-empty");
        for &c in &self.covers[b] {
            st.coverage[c] -= 1;
        }
    }

    fn extend(&self, st: &mut SearchState, next: usize) {
        if st.chosen.len() == self.target {
            if st.coverage.iter().all(|&c| c == self.lambda) {
                st.out.push(st.chosen.clone());
            }
            return;
        }
        let needed = self.target - st.chosen.len();
        if self.blocks.len() - next < needed {
            return;
        }
        for b in next..=self.blocks.len() - needed {
            if self.try_add(st, b) {
                self.extend(st, b + 1);
                self.remove_last(st);
            }
        }
    }
}
