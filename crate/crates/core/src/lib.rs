//! Exact symbolic engine for finite-dimensional Lie algebras, their
//! enveloping algebras and chain groups.
//!
//! The crate is organized bottom-up:
//!
//! - [`lie`]: structure constants, center, series, nilradical, quotients, `θ`.
//! - [`enveloping`]: PBW normal forms, Hopf structure and truncated ideals of `U(g)`.
//! - [`rep`]: matrix, induced and shift modules; truncated kernels and weak containment.
//! - [`orbit`]: polarizations, Dixmier ideals and the nilpotent/solvable relation checks.
//! - [`highest_weight`]: root systems of type A1/A2, Verma modules, Harish-Chandra data.
//! - [`chain`]: chain presentations, Smith normal form and the `can` check.
//! - [`cli`]: the command-line front end used by the `liechain` binary.

#![allow(clippy::needless_range_loop)]

pub mod chain;
pub mod cli;
pub mod enveloping;
pub mod error;
pub mod highest_weight;
pub mod lie;
pub mod linalg;
pub mod orbit;
pub mod rep;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;
