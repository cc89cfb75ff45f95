//! Exact dense polynomial arithmetic over the integers and rationals.
//!
//! Integer polynomials are the default representation everywhere; promotion
//! to rational coefficients is explicit via [`IntPoly::to_rat`]. The zero
//! polynomial is the empty coefficient sequence and its degree is `None`,
//! never an ordinary integer.

mod int;
mod rat;

pub use int::{IntPoly, Sign, DEFAULT_KARATSUBA_THRESHOLD};
pub use rat::{extended_gcd, RatPoly};
