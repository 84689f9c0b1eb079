//! Coherent-state families of four solvable quantum models, built directly
//! from classical-polynomial generating functions, together with a numerical
//! harness that verifies every identity the construction rests on:
//! generating-function expansions, normalizations, overlaps, ladder
//! eigenvalue relations, resolution-of-identity measures, orthogonality
//! relations, and the flat-band energy spectrum.
//!
//! Module map:
//! - [`specfun`]: scalar special-function kernels (orthogonal polynomials,
//!   Bessel J, Gauss 2F1, spherical harmonics, log-domain factorials)
//! - [`series`]: truncated power-series arithmetic
//! - [`genfun`]: generating-function closed forms, defining series, and
//!   Taylor-coefficient extraction (the only route to the two-index
//!   Bessel functions of the flat-band model)
//! - [`fock`]: truncated Fock-space algebra with abstract ladder operators
//! - [`states`]: the coherent-state families, normalizations, overlap
//!   kernels, measure densities, and position-space evaluation
//! - [`verify`]: quadrature engines and the check registry
//! - [`cli`]: the `gfstates` command-line tool

pub mod cli;
pub mod error;
pub mod fock;
pub mod genfun;
pub mod series;
pub mod specfun;
pub mod states;
pub mod verify;
