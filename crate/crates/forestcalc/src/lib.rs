//! Exact-arithmetic engine for forest polynomials and their Schubert
//! calculus: indexed forests, slide and Schubert polynomials, an insertion
//! correspondence on barred words with its parking procedure, reduction
//! modulo the ideal of positive-degree quasisymmetric polynomials, divided
//! symmetrization, and the permutahedral coefficients computed by three
//! independent routes.

pub mod applications;
pub mod bases;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod forest;
pub mod nvector;
pub mod perm;
pub mod poly;
pub mod quotient;
pub mod selftest;
pub mod word;

pub use error::{Error, Result};
