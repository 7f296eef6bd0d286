//! Exact-arithmetic engine for Mneimneh-type binomial sums over harmonic
//! numbers and their relatives.
//!
//! The library computes the underlying sequence families exactly (generalized
//! and alternating harmonic numbers, unsigned Stirling numbers of the first
//! kind, Bell polynomials, multiple harmonic sums) and verifies a catalog of
//! closed-form identities for them in two independent ways:
//!
//! * **symbolic** — both sides of an identity are built as sparse polynomials
//!   in `x`, `y`, `z` with exact rational coefficients and compared
//!   structurally, which proves the identity for *all* real parameter values
//!   at that `n`;
//! * **pointwise** — both sides are evaluated at explicit rational parameters
//!   and compared as reduced fractions.
//!
//! The companion [`quadrature`] module validates the integral representations
//! behind the catalog with double-exponential (tanh-sinh) quadrature.
//!
//! Concurrency: all computations are pure given the memoization tables in
//! [`sequences::SequenceTables`]. Tables are cheap; sweeps construct one per
//! worker rather than sharing one behind a lock.

pub mod identity_catalog;
pub mod nested_sums;
pub mod polyalg;
pub mod quadrature;
pub mod rational;
pub mod report;
pub mod sequences;
