//! Exact scalar and sparse Laurent-polynomial arithmetic.
//!
//! Everything downstream works in the ring `Q(i)[x^±1, y^±1, t^±1]`. Tau
//! functions only ever need nonnegative `x`, `y` exponents, but closed-form
//! intermediates divide by powers of `u` and `v`, so a single Laurent type is
//! used throughout.

mod poly;
mod scalar;
mod text;

pub use poly::{BasisDirection, LaurentPoly, Monomial, Substitution, Var};
pub use scalar::GaussianRational;
pub use text::{parse, serialize};
