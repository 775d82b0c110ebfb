//! Exact computations with real-valued functions on the slice `C(V, k)`:
//! basic and paired functions, their degrees, combinatorial designs, and
//! bounds on the least size of a Boolean function of given degree.
//!
//! All arithmetic is exact. Blocks are bitsets over at most 62 points.

pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod degree;
pub mod designs;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod rational;
pub mod scheme;
pub mod slice_fn;

pub use combinatorics::{binom, Block, GroundSet};
pub use degree::{degree_via_span, Degree};
pub use error::{Error, Result};
pub use rational::Rational;
pub use slice_fn::{basic, paired, BasicSpec, PairedSpec, SliceFunction};
