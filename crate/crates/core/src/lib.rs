//! Exact symbolic computation for the two-parameter Jordanian quantum group
//! `GL_{h,s}(2)` and its coloured realization.
//!
//! Everything here is exact: scalars are rational functions in the deformation
//! parameters `h`, `s` and an open set of colour symbols, with arbitrary
//! precision rational coefficients. The crate constructs the coloured Jordanian
//! R-matrix, the fundamental representation of `U_{h,s}gl(2)`, the coloured RTT
//! algebra, and machine-checks the identities these structures are supposed to
//! satisfy: coloured Yang-Baxter equations, Hopf-algebra axioms,
//! quasitriangularity, braid-operator spectral facts, RTT span equivalence and
//! quantum-determinant identities. Checks return [`report::VerificationReport`]
//! values instead of aborting, so one failing identity never masks the rest.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON and the command line live in
//! the companion `jordanian-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;
pub mod matrix;
pub mod rep;
pub mod coloured;
pub mod rtt;
pub mod report;

pub use matrix::ParamMatrix;
pub use report::{ReportEntry, Residual, VerificationReport};
pub use scalar::{Monomial, Polynomial, RationalFunction, Symbol};
