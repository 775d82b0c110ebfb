//! Independent oracles and exhaustive property suites shared by the
//! integration test targets.
#![allow(dead_code)]

use std::collections::HashMap;

use johnson_slice::degree::{paired_degree_formula, Degree};
use johnson_slice::slice_fn::{derive, dual, recover_paired_legs, residual};
use johnson_slice::{basic, paired, BasicSpec, Block, Error, PairedSpec, Rational, SliceFunction};
use rayon::prelude::*;

/// Pascal's triangle in `u128`, rows `0..=MAX`.
pub fn pascal(n: i64, k: i64) -> u128 {
    const MAX: usize = 64;
    static TABLE: std::sync::OnceLock<Vec<Vec<u128>>> = std::sync::OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut rows = vec![vec![1u128]];
        for r in 1..=MAX {
            let prev = &rows[r - 1];
            let mut row = vec![1u128; r + 1];
            for c in 1..r {
                row[c] = prev[c - 1] + prev[c];
            }
            rows.push(row);
        }
        rows
    });
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    t[n as usize][k as usize]
}

/// All `k`-subsets of `{0..n}` as masks, increasing.
pub fn masks(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

fn full(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Every ordered pair of disjoint subsets of `{0..n}`.
pub fn disjoint_pairs(n: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for i in 0u64..1 << n {
        let rest = full(n) & !i;
        let mut j = rest;
        loop {
            out.push((i, j));
            if j == 0 {
                break;
            }
            j = (j - 1) & rest;
        }
    }
    out
}

/// Every pair `I ⊆ J ⊆ {0..n}`.
pub fn nested_pairs(n: usize) -> Vec<(u64, u64)> {
    disjoint_pairs(n).into_iter().map(|(i, d)| (i, i | d)).collect()
}

pub fn blk(bits: u64) -> Block {
    Block::from_bits(bits)
}

/// `{K : I ⊆ K ⊆ J}` by filtering.
pub fn oracle_basic(n: usize, k: usize, i: u64, j: u64) -> SliceFunction {
    let blocks = masks(n, k).into_iter().filter(|&m| m & i == i && m & !j == 0);
    SliceFunction::from_blocks(n, k, blocks.map(blk)).unwrap()
}

/// `f_{I,J^∁} + f_{J,I^∁}` by counting, point by point.
pub fn oracle_paired(n: usize, k: usize, i: u64, j: u64) -> SliceFunction {
    let entries = masks(n, k).into_iter().filter_map(|m| {
        let v = (m & i == i && m & j == 0) as i64 + (m & j == j && m & i == 0) as i64;
        (v > 0).then(|| (blk(m), Rational::from_integer(v.into())))
    });
    SliceFunction::from_entries(n, k, entries).unwrap()
}

/// Removes point `x` and shifts higher points down.
pub fn drop_point(bits: u64, x: usize) -> u64 {
    let low = bits & ((1u64 << x) - 1);
    let high = (bits >> (x + 1)) << x;
    low | high
}

pub fn bspec(i: u64, j: u64) -> BasicSpec {
    BasicSpec::new(blk(i), blk(j)).unwrap()
}

pub fn pspec(i: u64, j: u64) -> PairedSpec {
    PairedSpec::new(blk(i), blk(j)).unwrap()
}

pub fn sum_values(f: &SliceFunction) -> Rational {
    f.size()
}

/// Outcome of one exhaustive suite.
#[derive(Debug, Default)]
pub struct Suite {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            ..Default::default()
        }
    }

    fn absorb(&mut self, results: Vec<Option<String>>) {
        self.cases += results.len();
        self.failures.extend(results.into_iter().flatten());
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!("{}: {} cases, {} failures", self.name, self.cases, self.failures.len())
    }

    pub fn assert_ok(&self) {
        assert!(
            self.ok(),
            "{}\nfirst failures:\n{}",
            self.summary(),
            self.failures.iter().take(10).cloned().collect::<Vec<_>>().join("\n")
        );
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

fn slices(max_n: usize) -> Vec<(usize, usize)> {
    (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).collect()
}

/// Basic and paired Pascal decompositions, plus the constructors against the
/// filtering oracles and the closed-form sizes.
pub fn pascal_splits(max_n: usize) -> Suite {
    let mut suite = Suite::new("pascal splits");
    let results: Vec<Option<String>> = slices(max_n)
        .into_par_iter()
        .flat_map_iter(|(n, k)| {
            let mut out = Vec::new();
            for (i, j) in nested_pairs(n) {
                let f = basic(bspec(i, j), n, k).unwrap();
                let (si, sj) = (i.count_ones() as i64, j.count_ones() as i64);
                out.push(check(f == oracle_basic(n, k, i, j), || format!("basic {n} {k} {i:b} {j:b}")));
                out.push(check(
                    f.support_len() as u128 == pascal(sj - si, k as i64 - si),
                    || format!("basic size {n} {k} {i:b} {j:b}"),
                ));
                let mut free = j & !i;
                while free != 0 {
                    let x = free & free.wrapping_neg();
                    free &= free - 1;
                    let a = basic(bspec(i | x, j), n, k).unwrap();
                    let b = basic(bspec(i, j & !x), n, k).unwrap();
                    let ok = a.common_support(&b).unwrap() == 0 && a.add(&b).unwrap() == f;
                    out.push(check(ok, || format!("basic split {n} {k} {i:b} {j:b} x={x:b}")));
                }
            }
            for (i, j) in disjoint_pairs(n) {
                let p = paired(pspec(i, j), n, k).unwrap();
                out.push(check(p == oracle_paired(n, k, i, j), || format!("paired {n} {k} {i:b} {j:b}")));
                out.push(check(p == paired(pspec(j, i), n, k).unwrap(), || format!("symmetry {i:b} {j:b}")));
                let (si, sj) = (i.count_ones() as i64, j.count_ones() as i64);
                let (nn, kk) = (n as i64, k as i64);
                let size = pascal(nn - si - sj, kk - si) + pascal(nn - si - sj, kk - sj);
                out.push(check(sum_values(&p) == Rational::from_integer((size as u64).into()), || {
                    format!("paired size {n} {k} {i:b} {j:b}")
                }));
                let mut free = full(n) & !(i | j);
                while free != 0 {
                    let x = free & free.wrapping_neg();
                    free &= free - 1;
                    let a = paired(pspec(i | x, j), n, k).unwrap();
                    let b = paired(pspec(i, j | x), n, k).unwrap();
                    out.push(check(a.add(&b).unwrap() == p, || format!("paired split {n} {k} {i:b} {j:b} x={x:b}")));
                }
            }
            out
        })
        .collect();
    suite.absorb(results);
    suite
}

/// Dual, derived and residual functions of basic and paired functions.
pub fn modification_identities(max_n: usize) -> Suite {
    let mut suite = Suite::new("dual/derive/residual identities");
    let results: Vec<Option<String>> = slices(max_n)
        .into_par_iter()
        .flat_map_iter(|(n, k)| {
            let mut out = Vec::new();
            let v = full(n);
            for (i, j) in nested_pairs(n) {
                let f = basic(bspec(i, j), n, k).unwrap();
                let expected = oracle_basic(n, n - k, v & !j, v & !i);
                out.push(check(dual(&f) == expected, || format!("basic dual {n} {k} {i:b} {j:b}")));
                for x in 0..n {
                    let bit = 1u64 << x;
                    let (di, dj) = (drop_point(i, x), drop_point(j, x));
                    if k >= 1 {
                        let want = if j & bit != 0 {
                            oracle_basic(n - 1, k - 1, di, dj)
                        } else {
                            SliceFunction::zero(n - 1, k - 1).unwrap()
                        };
                        out.push(check(derive(&f, x).unwrap() == want, || {
                            format!("basic der {n} {k} {i:b} {j:b} x={x}")
                        }));
                    }
                    if n > k {
                        let want = if i & bit != 0 {
                            SliceFunction::zero(n - 1, k).unwrap()
                        } else {
                            oracle_basic(n - 1, k, di, dj)
                        };
                        out.push(check(residual(&f, x).unwrap() == want, || {
                            format!("basic res {n} {k} {i:b} {j:b} x={x}")
                        }));
                    }
                }
            }
            for (i, j) in disjoint_pairs(n) {
                let p = paired(pspec(i, j), n, k).unwrap();
                out.push(check(dual(&p) == oracle_paired(n, n - k, i, j), || {
                    format!("paired dual {n} {k} {i:b} {j:b}")
                }));
                out.push(check(dual(&dual(&p)) == p, || format!("dual involution {i:b} {j:b}")));
                for x in 0..n {
                    let bit = 1u64 << x;
                    let vx = full(n - 1);
                    let (di, dj) = (drop_point(i, x), drop_point(j, x));
                    let der = (k >= 1).then(|| derive(&p, x).unwrap());
                    let res = (n > k).then(|| residual(&p, x).unwrap());
                    if let Some(der) = &der {
                        let want = if i & bit != 0 {
                            oracle_basic(n - 1, k - 1, di, vx & !dj)
                        } else if j & bit != 0 {
                            oracle_basic(n - 1, k - 1, dj, vx & !di)
                        } else {
                            oracle_paired(n - 1, k - 1, di, dj)
                        };
                        out.push(check(*der == want, || format!("paired der {n} {k} {i:b} {j:b} x={x}")));
                    }
                    if let Some(res) = &res {
                        let want = if i & bit != 0 {
                            oracle_basic(n - 1, k, dj, vx & !di)
                        } else if j & bit != 0 {
                            oracle_basic(n - 1, k, di, vx & !dj)
                        } else {
                            oracle_paired(n - 1, k, di, dj)
                        };
                        out.push(check(*res == want, || format!("paired res {n} {k} {i:b} {j:b} x={x}")));
                    }
                    if let (Some(der), Some(res)) = (&der, &res) {
                        let total = sum_values(der) + sum_values(res);
                        out.push(check(total == sum_values(&p), || format!("der+res size {n} {k} {i:b} {j:b}")));
                    }
                }
            }
            out
        })
        .collect();
    suite.absorb(results);
    suite
}

/// Emptiness of legs and the size-1 and size-2 characterizations.
pub fn size_classifications(max_n: usize) -> Suite {
    let mut suite = Suite::new("size classifications");
    let results: Vec<Option<String>> = slices(max_n)
        .into_par_iter()
        .flat_map_iter(|(n, k)| {
            let mut out = Vec::new();
            let v = full(n);
            let (lo, hi) = (k.min(n - k), k.max(n - k));
            for (i, j) in disjoint_pairs(n) {
                let (a, b) = (i.count_ones() as usize, j.count_ones() as usize);
                let first = oracle_basic(n, k, i, v & !j);
                let second = oracle_basic(n, k, j, v & !i);
                let p = paired(pspec(i, j), n, k).unwrap();
                let tag = || format!("{n} {k} {i:b} {j:b}");
                out.push(check(first.is_zero() == (k < a || b > n - k), || format!("first leg {}", tag())));
                out.push(check(second.is_zero() == (k < b || a > n - k), || format!("second leg {}", tag())));
                out.push(check(p.is_zero() == (a.min(b) > lo || a.max(b) > hi), || format!("zero {}", tag())));
                let one_leg = first.is_zero() != second.is_zero();
                out.push(check(one_leg == (a.min(b) <= lo && lo < a.max(b) && a.max(b) <= hi), || {
                    format!("one leg {}", tag())
                }));
                let both = !first.is_zero() && !second.is_zero();
                out.push(check(both == (a.max(b) <= lo), || format!("both legs {}", tag())));

                let size = sum_values(&p);
                let is1 = (a.min(b) == lo && lo < a.max(b) && a.max(b) <= hi)
                    || (a.min(b) <= lo && lo < a.max(b) && a.max(b) == hi);
                out.push(check((size == Rational::from_integer(1.into())) == is1, || format!("size 1 {}", tag())));
                let third = n + 1 != 2 * k
                    && n != 2 * k
                    && n != 2 * k + 1
                    && a.min(b) + 1 == lo
                    && a.max(b) + 1 == hi;
                let is2 = (a == b && a == lo) || (n == 2 * k && a.max(b) == k && a != b) || third;
                out.push(check((size == Rational::from_integer(2.into())) == is2, || format!("size 2 {}", tag())));
            }
            out
        })
        .collect();
    suite.absorb(results);
    suite
}

/// Meet and join of paired sets whose legs are both non-empty.
pub fn meet_join(max_n: usize) -> Suite {
    let mut suite = Suite::new("meet/join");
    let results: Vec<Option<String>> = slices(max_n)
        .into_par_iter()
        .flat_map_iter(|(n, k)| {
            let mut out = Vec::new();
            let v = full(n);
            let lo = k.min(n - k);
            for (i, j) in disjoint_pairs(n) {
                let (a, b) = (i.count_ones() as usize, j.count_ones() as usize);
                if a.max(b) > lo {
                    continue;
                }
                let p = paired(pspec(i, j), n, k).unwrap();
                let meet = if a == n - k && b == n - k { v & !(i | j) } else { 0 };
                let join = if a == k && b == k { i | j } else { v };
                // independent intersection/union of the support
                let sup: Vec<u64> = p.support().map(Block::bits).collect();
                let m = sup.iter().fold(v, |acc, s| acc & s);
                let u = sup.iter().fold(0, |acc, s| acc | s);
                out.push(check(m == meet && u == join, || format!("meet/join {n} {k} {i:b} {j:b}")));
                out.push(check(p.meet().bits() == m && p.join().bits() == u, || {
                    format!("meet/join accessors {n} {k} {i:b} {j:b}")
                }));
            }
            out
        })
        .collect();
    suite.absorb(results);
    suite
}

fn canonical(a: u64, b: u64) -> (u64, u64) {
    let key = |x: u64| (x.count_ones(), x);
    if key(a) <= key(b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Leg recovery: exhaustive over all disjoint pairs, with uniqueness decided
/// by grouping every pair by the function it produces.
pub fn leg_recovery(max_n: usize) -> Suite {
    let mut suite = Suite::new("leg recovery");
    let results: Vec<Option<String>> = slices(max_n)
        .into_par_iter()
        .flat_map_iter(|(n, k)| {
            let mut out = Vec::new();
            let mut groups: HashMap<Vec<(u64, i64)>, Vec<(u64, u64)>> = HashMap::new();
            let key = |f: &SliceFunction| -> Vec<(u64, i64)> {
                f.entries().map(|(b, v)| (b.bits(), v.to_integer().try_into().unwrap())).collect()
            };
            for (i, j) in disjoint_pairs(n) {
                let p = paired(pspec(i, j), n, k).unwrap();
                let pair = canonical(i, j);
                let g = groups.entry(key(&p)).or_default();
                if !g.contains(&pair) {
                    g.push(pair);
                }
            }
            let all_one = SliceFunction::ones(n, k).unwrap();
            for (i, j) in disjoint_pairs(n) {
                if canonical(i, j) != (i, j) {
                    continue;
                }
                let p = paired(pspec(i, j), n, k).unwrap();
                let tag = || format!("{n} {k} {i:b} {j:b}");
                let size = sum_values(&p);
                let got = recover_paired_legs(&p);
                if i == 0 && j == 0 {
                    out.push(check(matches!(got, Ok(Some((a, b))) if a.is_empty() && b.is_empty()), || {
                        format!("constant two {}", tag())
                    }));
                    continue;
                }
                if size < Rational::from_integer(3.into()) || p == all_one {
                    out.push(check(matches!(got, Err(Error::Ambiguous(_))), || format!("ambiguous {}", tag())));
                    continue;
                }
                let reps = &groups[&key(&p)];
                out.push(check(reps.len() == 1, || format!("not unique {} {reps:?}", tag())));
                out.push(check(
                    matches!(got, Ok(Some((a, b))) if (a.bits(), b.bits()) == (i, j)),
                    || format!("recover {} got {got:?}", tag()),
                ));
            }
            out
        })
        .collect();
    suite.absorb(results);
    suite
}

/// Direct comparison of `#p_{I,J}` with the pencil size for degree-`t` pairs.
pub fn direct_comparison(n: usize, k: usize, t: usize, i: usize, j: usize) -> Option<std::cmp::Ordering> {
    if paired_degree_formula(n, k, i, j) != Degree::Finite(t) {
        return None;
    }
    let (nn, kk, ii, jj, tt) = (n as i64, k as i64, i as i64, j as i64, t as i64);
    let size = pascal(nn - ii - jj, kk - ii) + pascal(nn - ii - jj, kk - jj);
    let pencil = pascal(nn - tt, kk - tt);
    Some(size.cmp(&pencil))
}
