//! Exact-arithmetic library for cyclotomic and inverse cyclotomic
//! polynomials, the component decomposition of ℚ[X]/(Xⁿ−1), and
//! mechanical verification of the orthogonality relations between the
//! shifted cofactors X^l·Ψ_{n,d}, with machine-readable certificates.

pub mod cli;
pub mod cyclo;
pub mod error;
pub mod numtheory;
pub mod polyring;
pub mod structure;

pub use error::{Error, Result};
