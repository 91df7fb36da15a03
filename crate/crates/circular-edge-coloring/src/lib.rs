//! Constructive (7,2)-circular edge-colorings of cubic graphs.
//!
//! A circular (p,q)-edge-coloring assigns colors from `Z_p` to edges so
//! that adjacent edges keep circular distance at least `q`; the circular
//! chromatic index is the least attainable ratio `p/q`. This crate
//! constructs (7,2)-colorings for every cubic bridgeless graph whose
//! 2-factor avoids 3- and 5-cycles — in particular all cubic bridgeless
//! graphs of girth at least 6 — and for subcubic graphs of odd-girth at
//! least 7, via compatible trail decompositions of the abstract map
//! obtained by contracting the 2-factor.
//!
//! The crate also ships independent verifiers and exact small-instance
//! oracles (a rational-search circular chromatic index solver and a
//! brute-force decomposition search), a graph catalog with generators,
//! text formats, and a thin `cec` command-line binary. Start with the
//! runnable programs in `examples/`.

#![forbid(unsafe_code)]

pub mod cli;
pub mod coloring;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod rotation;
pub mod trails;

pub use coloring::{color_cubic, color_subcubic, CircularEdgeColoring};
pub use graph::{analyze, MultiGraph, StructureReport};
pub use matching::{admissible_two_factor, perfect_matching, two_factor, TwoFactor};
pub use oracle::{exact_index, verify_pq, Fraction};
pub use rotation::{contract_two_factor, RotationMap};
pub use trails::{decompose, is_compatible, Decomposition};
