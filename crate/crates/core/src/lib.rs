//! Exact intersection of double wedges in the plane, and the segment
//! stabbing problems that dualize to it.
//!
//! Start with [`algorithms::intersect_auto`] for intersections and
//! [`algorithms::solve_sas`] for stabbing. The [`oracle`] module has
//! brute-force checks, and [`constructions`] builds the extremal examples.

pub mod algorithms;
pub mod arrangement;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rationals.md")]
    mod rationals {}
    #[doc = include_str!("../../../book/src/double-wedges.md")]
    mod double_wedges {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/intersection.md")]
    mod intersection {}
    #[doc = include_str!("../../../book/src/stabbing.md")]
    mod stabbing {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/piercing.md")]
    mod piercing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
