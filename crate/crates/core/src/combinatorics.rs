//! Ground-set arithmetic: exact binomials, bit-set blocks and colex enumeration
//! of the slice.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest supported ground set; a block always fits in one `u64`.
pub const MAX_POINTS: usize = 62;

/// Binomial coefficient `C(n, k)` as a big integer.
///
/// Returns 0 whenever `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for step in 0..k {
        acc *= n - step;
        acc /= step + 1;
    }
    acc
}

/// Binomial coefficient for the machine-word range used by block indexing.
pub fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for step in 0..k as u128 {
        acc = acc * (n as u128 - step) / (step + 1);
    }
    u64::try_from(acc).expect("binomial exceeds u64")
}

/// The point set `{0, …, n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        Ok(Self { n })
    }

    pub fn size(self) -> usize {
        self.n
    }

    pub fn mask(self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    pub fn full(self) -> Block {
        Block(self.mask())
    }

    pub fn contains(self, b: Block) -> bool {
        b.0 & !self.mask() == 0
    }
}

/// A finite subset of the ground set, stored as a bit set.
///
/// The derived ordering on the raw word is exactly colex order among
/// blocks of equal size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Block(u64);

impl Block {
    pub const EMPTY: Block = Block(0);

    pub const fn from_bits(bits: u64) -> Self {
        Block(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a block from 0-based points.
    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        let mut bits = 0u64;
        for p in points {
            assert!(p < MAX_POINTS, "point {p} out of range");
            bits |= 1 << p;
        }
        Block(bits)
    }

    /// Builds a block from 1-based labels, validating them against `n`.
    pub fn from_labels(labels: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &l in labels {
            if l == 0 || l > n {
                return Err(Error::PointOutOfRange { point: l, n });
            }
            bits |= 1 << (l - 1);
        }
        Ok(Block(bits))
    }

    /// The first `m` points `{0, …, m-1}`.
    pub fn initial(m: usize) -> Self {
        GroundSet { n: m }.full()
    }

    /// Points `{start, …, start+len-1}`.
    pub fn range(start: usize, len: usize) -> Self {
        Block(Block::initial(len).0 << start)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        point < 64 && self.0 >> point & 1 == 1
    }

    pub fn is_subset(self, other: Block) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Block) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Block) -> Block {
        Block(self.0 | other.0)
    }

    pub fn intersection(self, other: Block) -> Block {
        Block(self.0 & other.0)
    }

    pub fn difference(self, other: Block) -> Block {
        Block(self.0 & !other.0)
    }

    pub fn with(self, point: usize) -> Block {
        Block(self.0 | 1 << point)
    }

    pub fn without(self, point: usize) -> Block {
        Block(self.0 & !(1 << point))
    }

    /// 0-based points in increasing order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.points().map(|p| p + 1).collect()
    }

    /// Removes `point` and shifts every larger point down by one, so the
    /// result lives on the ground set of size `n - 1`.
    pub fn squeeze(self, point: usize) -> Block {
        let low = self.0 & ((1u64 << point) - 1);
        let high = (self.0 >> (point + 1)) << point;
        Block(low | high)
    }

    /// Inverse of [`Block::squeeze`]: opens a gap at `point`, which stays
    /// empty.
    pub fn expand(self, point: usize) -> Block {
        let low = self.0 & ((1u64 << point) - 1);
        let high = (self.0 >> point) << (point + 1);
        Block(low | high)
    }

    /// Position of the block in colex order among blocks of its size.
    pub fn colex_rank(self) -> usize {
        self.points()
            .enumerate()
            .map(|(i, p)| binom_u64(p, i + 1) as usize)
            .sum()
    }

    /// Inverse of [`Block::colex_rank`] for blocks of size `k`.
    pub fn colex_unrank(mut rank: usize, k: usize) -> Block {
        let mut bits = 0u64;
        for i in (1..=k).rev() {
            let mut p = i - 1;
            while binom_u64(p + 1, i) as usize <= rank {
                p += 1;
            }
            rank -= binom_u64(p, i) as usize;
            bits |= 1 << p;
        }
        Block(bits)
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, l) in self.labels().into_iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// `V \ b` inside the ground set `g`.
pub fn complement(b: Block, g: GroundSet) -> Block {
    Block(!b.0 & g.mask())
}

/// Colex iterator over all `k`-subsets of `{0, …, n-1}`.
#[derive(Debug, Clone)]
pub struct SliceIter {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for SliceIter {
    type Item = Block;

    fn next(&mut self) -> Option<Block> {
        let cur = self.next?;
        // Gosper's hack: next word with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let nxt = (((ripple ^ cur) >> 2) / low) | ripple;
            (nxt < self.limit).then_some(nxt)
        };
        Some(Block(cur))
    }
}

/// Every `k`-subset of the `n`-set exactly once, in colex order.
pub fn enumerate_slice(n: usize, k: usize) -> Result<SliceIter> {
    if n > MAX_POINTS {
        return Err(Error::GroundSetTooLarge(n));
    }
    if k > n {
        return Err(Error::InvalidSlice { n, k });
    }
    Ok(SliceIter {
        next: Some(Block::initial(k).0),
        limit: 1u64 << n,
    })
}

/// Every block of the slice collected in colex order.
pub fn slice_blocks(n: usize, k: usize) -> Result<Vec<Block>> {
    Ok(enumerate_slice(n, k)?.collect())
}
