//! Presentations of finite groups from transitive actions.
//!
//! The crate turns a permutation action into a presentation through the
//! double-coset polygroup of a point stabilizer, and ships verified emitters
//! for a number of linear groups, deformed groups and the Mathieu groups.
//! See the guide in `book/` for a walk-through.

pub mod actpres;
pub mod catalog;
pub mod deform;
pub mod ffield;
pub mod fpres;
pub mod glgg;
pub mod matgrp;
pub mod perm;
pub mod polygroup;
pub mod witt;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/polygroups.md")]
    mod polygroups {}
    #[doc = include_str!("../../../book/src/linear.md")]
    mod linear {}
    #[doc = include_str!("../../../book/src/deformations.md")]
    mod deformations {}
    #[doc = include_str!("../../../book/src/mathieu.md")]
    mod mathieu {}
    #[doc = include_str!("../../../book/src/glgg.md")]
    mod glgg {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coset enumeration overflow: more than {0} live cosets")]
    Overflow(usize),
    #[error("size bound exceeded: {0}")]
    TooLarge(String),
    #[error("{0}")]
    Invalid(String),
}
