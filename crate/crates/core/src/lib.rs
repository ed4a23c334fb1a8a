//! Numerical laboratory for the prime number theorem and its Gaussian-integer
//! analogue.
//!
//! The crate is organised bottom-up:
//!
//! * [`sieve`] builds the rational-prime substrate (prime tables, Mangoldt,
//!   Möbius and Liouville functions).
//! * [`rational`] evaluates Chebyshev's functions, Mertens' estimates, the
//!   logarithmic integral and the elementary lower bounds for `π(x)`.
//! * [`dirichlet`] is the Dirichlet-series engine: `ζ`, `−ζ′/ζ`, the
//!   three-four-one functional, the Mellin bridge between `ψ` and `−ζ′/ζ`,
//!   stabilized series and the Tauberian integral.
//! * [`gaussian`] implements arithmetic in `ℤ[i]`: classification, canonical
//!   associates, norm balls, the generalized Mangoldt function and `r(n)`.
//! * [`hecke`] covers Hecke's angular series `Ξ(h, z)`, `ζ_i`, Weyl sums and
//!   the angular equidistribution of Gaussian primes.
//! * [`report`], [`experiments`], [`verify`] and [`cli`] turn all of the above
//!   into deterministic CSV/JSON tables and a pass/fail verification suite.
//!
//! Every empirical constant standing in for an `O(·)` bound lives in
//! [`envelopes`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dirichlet;
pub mod envelopes;
pub mod error;
pub mod experiments;
pub mod gaussian;
pub mod hecke;
pub mod numeric;
pub mod rational;
pub mod report;
pub mod sieve;
pub mod verify;

pub use error::{LabError, Result};
pub use num_complex::Complex64;
