//! Rational-valued functions on the slice `C(V, k)`.
//!
//! A [`SliceFunction`] is stored sparsely: blocks absent from the map take
//! the value zero. Functions remember their `(n, k)` and refuse arithmetic
//! across different slices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{complement, enumerate_slice, Block, GroundSet};
use crate::error::{Error, Result};
use crate::rational::{int, parse_pq, to_pq, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct SliceFunction {
    n: usize,
    k: usize,
    values: BTreeMap<Block, Rational>,
}

fn check_slice(n: usize, k: usize) -> Result<GroundSet> {
    let g = GroundSet::new(n)?;
    if k > n {
        return Err(Error::InvalidSlice { n, k });
    }
    Ok(g)
}

impl SliceFunction {
    /// The zero function on `C(V, k)` with `#V = n`.
    pub fn zero(n: usize, k: usize) -> Result<Self> {
        check_slice(n, k)?;
        Ok(Self {
            n,
            k,
            values: BTreeMap::new(),
        })
    }

    pub fn constant(n: usize, k: usize, c: Rational) -> Result<Self> {
        let mut f = Self::zero(n, k)?;
        if !c.is_zero() {
            for b in enumerate_slice(n, k)? {
                f.values.insert(b, c.clone());
            }
        }
        Ok(f)
    }

    pub fn ones(n: usize, k: usize) -> Result<Self> {
        Self::constant(n, k, Rational::one())
    }

    /// Characteristic function of a block set. Repeated blocks are ignored.
    pub fn from_blocks<I: IntoIterator<Item = Block>>(n: usize, k: usize, blocks: I) -> Result<Self> {
        Self::from_entries(n, k, blocks.into_iter().map(|b| (b, Rational::one())))
    }

    /// Later entries for the same block overwrite earlier ones.
    pub fn from_entries<I>(n: usize, k: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Block, Rational)>,
    {
        let g = check_slice(n, k)?;
        let mut values = BTreeMap::new();
        for (b, v) in entries {
            if !g.contains(b) {
                let point = b.points().last().unwrap_or(0) + 1;
                return Err(Error::PointOutOfRange { point, n });
            }
            if b.len() != k {
                return Err(Error::WrongBlockSize {
                    expected: k,
                    found: b.len(),
                });
            }
            if v.is_zero() {
                values.remove(&b);
            } else {
                values.insert(b, v);
            }
        }
        Ok(Self { n, k, values })
    }

    /// Dense colex-ordered vector of length `C(n, k)`.
    pub fn from_dense(n: usize, k: usize, dense: &[Rational]) -> Result<Self> {
        let blocks: Vec<Block> = enumerate_slice(n, k)?.collect();
        if blocks.len() != dense.len() {
            return Err(Error::Precondition(format!(
                "dense vector has length {}, slice has {} blocks",
                dense.len(),
                blocks.len()
            )));
        }
        Self::from_entries(n, k, blocks.into_iter().zip(dense.iter().cloned()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.n).expect("validated at construction")
    }

    pub fn value(&self, b: Block) -> Rational {
        self.values.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero entries in colex order.
    pub fn entries(&self) -> impl Iterator<Item = (Block, &Rational)> {
        self.values.iter().map(|(b, v)| (*b, v))
    }

    pub fn support(&self) -> impl Iterator<Item = Block> + '_ {
        self.values.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// `#f`, the sum of all values.
    pub fn size(&self) -> Rational {
        self.values.values().fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_boolean(&self) -> bool {
        self.values.values().all(|v| v.is_one())
    }

    /// True when the function takes the value `c` on every block.
    pub fn is_constant(&self, c: &Rational) -> bool {
        if c.is_zero() {
            return self.is_zero();
        }
        let total = crate::combinatorics::binom_u64(self.n, self.k) as usize;
        self.values.len() == total && self.values.values().all(|v| v == c)
    }

    pub fn contains(&self, b: Block) -> bool {
        self.values.contains_key(&b)
    }

    /// Intersection of all support blocks; the full ground set when empty.
    pub fn meet(&self) -> Block {
        self.support()
            .fold(self.ground().full(), |acc, b| acc.intersection(b))
    }

    /// Union of all support blocks; empty when the support is empty.
    pub fn join(&self) -> Block {
        self.support().fold(Block::EMPTY, |acc, b| acc.union(b))
    }

    pub fn dense(&self) -> Vec<Rational> {
        enumerate_slice(self.n, self.k)
            .expect("validated at construction")
            .map(|b| self.value(b))
            .collect()
    }

    fn same_slice(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::SliceMismatch(self.n, self.k, other.n, other.k));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Result<Self> {
        self.same_slice(other)?;
        let mut values = self.values.clone();
        for (b, v) in &other.values {
            let entry = values.entry(*b).or_insert_with(Rational::zero);
            *entry += sign * v;
            if entry.is_zero() {
                values.remove(b);
            }
        }
        Ok(Self {
            n: self.n,
            k: self.k,
            values,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let values = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.values.iter().map(|(b, v)| (*b, v * c)).collect()
        };
        Self {
            n: self.n,
            k: self.k,
            values,
        }
    }

    /// `#(supp f ∩ supp g)`.
    pub fn common_support(&self, other: &Self) -> Result<usize> {
        self.same_slice(other)?;
        Ok(self.support().filter(|b| other.contains(*b)).count())
    }
}

impl fmt::Debug for SliceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SliceFunction(n={}, k={}, ", self.n, self.k)?;
        if self.is_boolean() {
            f.debug_set().entries(self.values.keys()).finish()?;
        } else {
            f.debug_map()
                .entries(self.values.iter().map(|(b, v)| (b, v.to_string())))
                .finish()?;
        }
        write!(f, ")")
    }
}

/// Bounds `I ⊆ J` of a basic function `f_{I,J}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicSpec {
    lower: Block,
    upper: Block,
}

impl BasicSpec {
    pub fn new(lower: Block, upper: Block) -> Result<Self> {
        if !lower.is_subset(upper) {
            return Err(Error::NotSubset);
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> Block {
        self.lower
    }

    pub fn upper(&self) -> Block {
        self.upper
    }
}

/// Disjoint pair `(I, J)` of a paired function `p_{I,J}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairedSpec {
    first: Block,
    second: Block,
}

impl PairedSpec {
    pub fn new(first: Block, second: Block) -> Result<Self> {
        if !first.is_disjoint(second) {
            return Err(Error::NotDisjoint);
        }
        Ok(Self { first, second })
    }

    pub fn first(&self) -> Block {
        self.first
    }

    pub fn second(&self) -> Block {
        self.second
    }
}

/// Deposits the low bits of `pattern` onto the set bits of `mask`.
fn deposit(pattern: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    let mut bit = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if pattern >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
        m &= m - 1;
    }
    out
}

/// Characteristic function of `{K : I ⊆ K ⊆ J}`.
pub fn basic(spec: BasicSpec, n: usize, k: usize) -> Result<SliceFunction> {
    let g = check_slice(n, k)?;
    if !g.contains(spec.upper) {
        let point = spec.upper.points().last().unwrap_or(0) + 1;
        return Err(Error::PointOutOfRange { point, n });
    }
    let mut f = SliceFunction::zero(n, k)?;
    let (i, j) = (spec.lower.len(), spec.upper.len());
    if i > k || j < k {
        return Ok(f);
    }
    let free = spec.upper.difference(spec.lower);
    for choice in enumerate_slice(free.len(), k - i)? {
        let b = Block::from_bits(deposit(choice.bits(), free.bits())).union(spec.lower);
        f.values.insert(b, Rational::one());
    }
    Ok(f)
}

/// `p_{I,J} = f_{I,J^∁} + f_{J,I^∁}`.
pub fn paired(spec: PairedSpec, n: usize, k: usize) -> Result<SliceFunction> {
    let g = check_slice(n, k)?;
    let (i, j) = (spec.first, spec.second);
    let first_leg = basic(BasicSpec::new(i, complement(j, g))?, n, k)?;
    let second_leg = basic(BasicSpec::new(j, complement(i, g))?, n, k)?;
    first_leg.add(&second_leg)
}

/// `f^⊥ : C(V, n-k) → ℚ, B ↦ f(B^∁)`.
pub fn dual(f: &SliceFunction) -> SliceFunction {
    let g = f.ground();
    SliceFunction {
        n: f.n,
        k: f.n - f.k,
        values: f
            .values
            .iter()
            .map(|(b, v)| (complement(*b, g), v.clone()))
            .collect(),
    }
}

fn check_point(f: &SliceFunction, x: usize) -> Result<()> {
    if x >= f.n {
        return Err(Error::PointOutOfRange { point: x + 1, n: f.n });
    }
    Ok(())
}

/// `K ↦ f(K ∪ {x})` on `C(V∖{x}, k-1)`; points above `x` are relabelled down
/// by one.
pub fn derive(f: &SliceFunction, x: usize) -> Result<SliceFunction> {
    check_point(f, x)?;
    if f.k == 0 {
        return Err(Error::Precondition("derived function needs k >= 1".into()));
    }
    Ok(SliceFunction {
        n: f.n - 1,
        k: f.k - 1,
        values: f
            .values
            .iter()
            .filter(|(b, _)| b.contains(x))
            .map(|(b, v)| (b.squeeze(x), v.clone()))
            .collect(),
    })
}

/// Restriction of `f` to `C(V∖{x}, k)`; points above `x` are relabelled down
/// by one.
pub fn residual(f: &SliceFunction, x: usize) -> Result<SliceFunction> {
    check_point(f, x)?;
    if f.k == f.n {
        return Err(Error::Precondition("residual function needs n - k >= 1".into()));
    }
    Ok(SliceFunction {
        n: f.n - 1,
        k: f.k,
        values: f
            .values
            .iter()
            .filter(|(b, _)| !b.contains(x))
            .map(|(b, v)| (b.squeeze(x), v.clone()))
            .collect(),
    })
}

/// Whether `f` equals some basic function `f_{I,J}`.
pub fn is_basic(f: &SliceFunction) -> bool {
    if !f.is_boolean() {
        return false;
    }
    if f.is_zero() {
        return true;
    }
    let spec = BasicSpec::new(f.meet(), f.join()).expect("meet is inside join");
    basic(spec, f.n, f.k).map(|b| &b == f).unwrap_or(false)
}

fn canonical_pair(a: Block, b: Block) -> (Block, Block) {
    if (a.len(), a.bits()) <= (b.len(), b.bits()) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Recovers the unique unordered pair `{I, J}` with `g = p_{I,J}`.
///
/// Returns `Ok(None)` when `g` is not a paired function. Inputs of size 0, 1
/// or 2 and the all-one function are rejected with [`Error::Ambiguous`]
/// since the pair need not be unique there.
pub fn recover_paired_legs(g: &SliceFunction) -> Result<Option<(Block, Block)>> {
    let n = g.n;
    if g.is_constant(&int(2)) {
        return Ok(Some((Block::EMPTY, Block::EMPTY)));
    }
    if !g.is_boolean() {
        return Err(Error::NotBoolean);
    }
    let size = g.support_len();
    if size <= 2 {
        return Err(Error::Ambiguous(format!("support of size {size}")));
    }
    if g.is_constant(&Rational::one()) {
        return Err(Error::Ambiguous("the all-one function".into()));
    }
    let ground = g.ground();

    let verify = |i: Block, j: Block| -> Result<Option<(Block, Block)>> {
        let spec = PairedSpec::new(i, j)?;
        Ok((&paired(spec, n, g.k)? == g).then(|| canonical_pair(i, j)))
    };

    if is_basic(g) {
        // One leg is empty: g = f_{I, J^∁}.
        return verify(g.meet(), complement(g.join(), ground));
    }

    // Points of I ∪ J are exactly those whose derived and residual
    // functions are both basic.
    let mut union = Block::EMPTY;
    for x in 0..n {
        if is_basic(&derive(g, x)?) && is_basic(&residual(g, x)?) {
            union = union.with(x);
        }
    }
    // On C([4],2), p_{{a},{b}} = p_{{c},{d}} for {a,b,c,d} = [4]: the
    // three matchings give three sets, each with two representations.
    if n == 4 && g.k == 2 {
        for y in 0..n {
            for z in y + 1..n {
                if verify(Block::EMPTY.with(y), Block::EMPTY.with(z))?.is_some() {
                    return Err(Error::Ambiguous("singleton legs on C([4],2)".into()));
                }
            }
        }
    }
    let Some(x) = union.points().next() else {
        return Ok(None);
    };
    let reduced = GroundSet::new(n - 1)?;
    let der = derive(g, x)?;
    let res = residual(g, x)?;
    // Taking x ∈ I: Der_x(g) = f_{I∖{x}, J^∁} and Res_x(g) = f_{J, (I∖{x})^∁}.
    let (i, j) = if der.support_len() >= 2 {
        let i = der.meet().expand(x).with(x);
        let j = complement(der.join(), reduced).expand(x);
        (i, j)
    } else if res.support_len() >= 2 {
        let j = res.meet().expand(x);
        let i = complement(res.join(), reduced).expand(x).with(x);
        (i, j)
    } else {
        return Ok(None);
    };
    if !i.is_disjoint(j) {
        return Ok(None);
    }
    verify(i, j)
}

#[derive(Debug, Serialize, Deserialize)]
struct EntryJson {
    block: Vec<usize>,
    value: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct SliceFunctionJson {
    n: usize,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    blocks: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    entries: Option<Vec<EntryJson>>,
}

impl SliceFunction {
    /// `{"n":..,"k":..,"blocks":[[1,2,3],..]}` for Boolean functions,
    /// otherwise `{"n":..,"k":..,"entries":[{"block":[..],"value":"p/q"}]}`.
    pub fn to_json(&self) -> String {
        let mut doc = SliceFunctionJson {
            n: self.n,
            k: self.k,
            blocks: None,
            entries: None,
        };
        if self.is_boolean() {
            doc.blocks = Some(self.support().map(Block::labels).collect());
        } else {
            doc.entries = Some(
                self.entries()
                    .map(|(b, v)| EntryJson {
                        block: b.labels(),
                        value: to_pq(v),
                    })
                    .collect(),
            );
        }
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SliceFunctionJson = serde_json::from_str(text)?;
        let mut entries = Vec::new();
        match (doc.blocks, doc.entries) {
            (Some(blocks), None) => {
                for labels in blocks {
                    entries.push((Block::from_labels(&labels, doc.n)?, Rational::one()));
                }
            }
            (None, Some(list)) => {
                for e in list {
                    entries.push((Block::from_labels(&e.block, doc.n)?, parse_pq(&e.value)?));
                }
            }
            (None, None) => {}
            (Some(_), Some(_)) => {
                return Err(Error::Parse("give either \"blocks\" or \"entries\", not both".into()))
            }
        }
        Self::from_entries(doc.n, doc.k, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(l: &[usize]) -> Block {
        Block::from_labels(l, 62).unwrap()
    }

    fn set(n: usize, k: usize, blocks: &[&[usize]]) -> SliceFunction {
        SliceFunction::from_blocks(n, k, blocks.iter().map(|l| labels(l))).unwrap()
    }

    #[test]
    fn basic_example_listing() {
        let f = basic(BasicSpec::new(Block::EMPTY, labels(&[1, 2, 3, 4])).unwrap(), 7, 3).unwrap();
        assert_eq!(f, set(7, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]));
    }

    #[test]
    fn basic_edge_cases() {
        let big_lower = basic(BasicSpec::new(labels(&[1, 2, 3, 4]), labels(&[1, 2, 3, 4, 5])).unwrap(), 7, 3).unwrap();
        assert!(big_lower.is_zero());
        let small_upper = basic(BasicSpec::new(Block::EMPTY, labels(&[1, 2])).unwrap(), 7, 3).unwrap();
        assert!(small_upper.is_zero());
        let all = basic(BasicSpec::new(Block::EMPTY, Block::initial(7)).unwrap(), 7, 3).unwrap();
        assert_eq!(all, SliceFunction::ones(7, 3).unwrap());
        assert!(BasicSpec::new(labels(&[1]), labels(&[2])).is_err());
        assert!(basic(BasicSpec::new(Block::EMPTY, labels(&[8])).unwrap(), 7, 3).is_err());
    }

    #[test]
    fn paired_example_listings() {
        let p = paired(PairedSpec::new(Block::EMPTY, labels(&[1, 2, 3])).unwrap(), 6, 3).unwrap();
        assert_eq!(p, set(6, 3, &[&[1, 2, 3], &[4, 5, 6]]));

        // this listing is the one with second leg {5,6,7}
        let p = paired(PairedSpec::new(Block::EMPTY, labels(&[5, 6, 7])).unwrap(), 7, 3).unwrap();
        assert_eq!(p, set(7, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[5, 6, 7]]));
        let p = paired(PairedSpec::new(Block::EMPTY, labels(&[1, 2, 3])).unwrap(), 7, 3).unwrap();
        assert_eq!(p, set(7, 3, &[&[1, 2, 3], &[4, 5, 6], &[4, 5, 7], &[4, 6, 7], &[5, 6, 7]]));

        let p = paired(PairedSpec::new(labels(&[1]), labels(&[6, 7])).unwrap(), 7, 3).unwrap();
        let expected = set(
            7,
            3,
            &[
                &[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5], &[1, 4, 5],
                &[2, 6, 7], &[3, 6, 7], &[4, 6, 7], &[5, 6, 7],
            ],
        );
        assert_eq!(p, expected);
        assert_eq!(p.support_len(), 10);
    }

    #[test]
    fn paired_empty_empty_is_constant_two() {
        let p = paired(PairedSpec::new(Block::EMPTY, Block::EMPTY).unwrap(), 5, 2).unwrap();
        assert!(p.is_constant(&int(2)));
        assert!(!p.is_boolean());
        assert_eq!(p.size(), int(20));
        assert!(PairedSpec::new(labels(&[1]), labels(&[1, 2])).is_err());
    }

    #[test]
    fn dual_basic_and_paired() {
        let g = GroundSet::new(7).unwrap();
        let (i, j) = (labels(&[1]), labels(&[1, 2, 5, 6]));
        let f = basic(BasicSpec::new(i, j).unwrap(), 7, 3).unwrap();
        let expected = basic(BasicSpec::new(complement(j, g), complement(i, g)).unwrap(), 7, 4).unwrap();
        assert_eq!(dual(&f), expected);
        assert_eq!(dual(&dual(&f)), f);
        assert_eq!(dual(&f).size(), f.size());

        let spec = PairedSpec::new(labels(&[1]), labels(&[6, 7])).unwrap();
        assert_eq!(dual(&paired(spec, 7, 3).unwrap()), paired(spec, 7, 4).unwrap());
    }

    #[test]
    fn derive_and_residual_of_paired() {
        let g6 = GroundSet::new(6).unwrap();
        let (i, j) = (labels(&[1, 2]), labels(&[6, 7]));
        let p = paired(PairedSpec::new(i, j).unwrap(), 7, 3).unwrap();

        // x = 1 ∈ I, relabelled ground set drops point 0
        let x = 0;
        let expected = basic(
            BasicSpec::new(i.without(x).squeeze(x), complement(j.squeeze(x), g6)).unwrap(),
            6,
            2,
        )
        .unwrap();
        assert_eq!(derive(&p, x).unwrap(), expected);
        let expected = basic(
            BasicSpec::new(j.squeeze(x), complement(i.without(x).squeeze(x), g6)).unwrap(),
            6,
            3,
        )
        .unwrap();
        assert_eq!(residual(&p, x).unwrap(), expected);

        // x = 3 ∉ I ∪ J
        let x = 2;
        let spec = PairedSpec::new(i.squeeze(x), j.squeeze(x)).unwrap();
        assert_eq!(derive(&p, x).unwrap(), paired(spec, 6, 2).unwrap());
        assert_eq!(residual(&p, x).unwrap(), paired(spec, 6, 3).unwrap());

        let ones = SliceFunction::ones(7, 3).unwrap();
        assert_eq!(derive(&ones, 4).unwrap(), SliceFunction::ones(6, 2).unwrap());
        assert_eq!(residual(&ones, 4).unwrap(), SliceFunction::ones(6, 3).unwrap());
    }

    #[test]
    fn derive_residual_preconditions() {
        let f = SliceFunction::ones(4, 0).unwrap();
        assert!(derive(&f, 0).is_err());
        let f = SliceFunction::ones(4, 4).unwrap();
        assert!(residual(&f, 0).is_err());
        assert!(derive(&f, 4).is_err());
    }

    #[test]
    fn mixed_slice_arithmetic_is_rejected() {
        let a = SliceFunction::ones(5, 2).unwrap();
        let b = SliceFunction::ones(5, 3).unwrap();
        assert!(matches!(a.add(&b), Err(Error::SliceMismatch(5, 2, 5, 3))));
        assert!(a.common_support(&b).is_err());
    }

    #[test]
    fn recover_example_listings() {
        let g = set(7, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[5, 6, 7]]);
        assert_eq!(recover_paired_legs(&g).unwrap(), Some((Block::EMPTY, labels(&[5, 6, 7]))));

        let p = paired(PairedSpec::new(labels(&[6, 7]), labels(&[1])).unwrap(), 7, 3).unwrap();
        assert_eq!(recover_paired_legs(&p).unwrap(), Some((labels(&[1]), labels(&[6, 7]))));

        let two = set(6, 3, &[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(recover_paired_legs(&two), Err(Error::Ambiguous(_))));
        let ones = SliceFunction::ones(6, 3).unwrap();
        assert!(matches!(recover_paired_legs(&ones), Err(Error::Ambiguous(_))));

        let not_paired = set(6, 3, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6]]);
        assert_eq!(recover_paired_legs(&not_paired).unwrap(), None);
    }

    #[test]
    fn four_cycles_on_c42_have_two_leg_pairs() {
        let a = paired(PairedSpec::new(labels(&[1]), labels(&[4])).unwrap(), 4, 2).unwrap();
        let b = paired(PairedSpec::new(labels(&[2]), labels(&[3])).unwrap(), 4, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.support_len(), 4);
        assert!(matches!(recover_paired_legs(&a), Err(Error::Ambiguous(_))));
        // the ambiguity check only fires on genuine singleton pairs
        let g = set(4, 2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]]);
        assert!(!matches!(recover_paired_legs(&g), Err(Error::Ambiguous(_))));
    }

    #[test]
    fn recover_basic_paired_with_empty_leg() {
        // i = 4 > k = 3 empties the first leg
        let (i, j) = (labels(&[1, 2, 3, 4]), labels(&[5]));
        let p = paired(PairedSpec::new(i, j).unwrap(), 9, 3).unwrap();
        assert_eq!(p.support_len(), 6);
        assert!(is_basic(&p));
        assert!(p.support_len() >= 3);
        assert_eq!(recover_paired_legs(&p).unwrap(), Some((j, i)));
    }

    #[test]
    fn json_round_trip_and_formats() {
        let f = set(7, 3, &[&[1, 2, 3], &[5, 6, 7]]);
        let text = f.to_json();
        assert_eq!(text, r#"{"n":7,"k":3,"blocks":[[1,2,3],[5,6,7]]}"#);
        assert_eq!(SliceFunction::from_json(&text).unwrap(), f);

        let p = f.scale(&crate::rational::parse_pq("3/2").unwrap());
        let text = p.to_json();
        assert!(text.contains(r#""value":"3/2""#));
        assert_eq!(SliceFunction::from_json(&text).unwrap(), p);

        assert!(SliceFunction::from_json(r#"{"n":7,"k":3,"blocks":[[1,2]]}"#).is_err());
        assert!(SliceFunction::from_json(r#"{"n":7,"k":3,"blocks":[[1,2,8]]}"#).is_err());
        assert!(SliceFunction::from_json(r#"{"n":7,"k":3}"#).unwrap().is_zero());
    }
}
