//! Exact linking data of closed braids.
//!
//! Everything in this crate is exact symbolic computation: braid words and
//! their permutations, the ring `Z[t_1^{±1},…,t_μ^{±1}]` with fraction-free
//! determinants, the Artin action on free groups with Fox derivatives (giving
//! the Magnus and link representations), two independent linking-number
//! computations for two-component closed braids, generalized Lefschetz
//! numbers, and Handel's forcing order on pseudo-Anosov 3-braid words in L-R
//! form.
//!
//! The crate is `no_std` (it allocates, but performs no IO); file formats and
//! the command-line front end live in the companion `braidlink` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod catalog;
pub mod forcing;
pub mod fox;
pub mod laurent;
pub mod linking;

pub use braid::{BraidWord, Permutation, StrandSet};
pub use forcing::LRWord;
pub use fox::Coloring;
pub use laurent::{LaurentPoly, RingMatrix};
pub use linking::TwoComponentSplit;
