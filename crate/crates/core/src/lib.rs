//! Exact verification engine for Toda-molecule tau functions and the
//! Tomimatsu-Sato bilinear identities built from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: Gaussian-rational scalars and sparse Laurent polynomials
//!   in `x`, `y`, `t`.
//! * [`operators`]: `L_X`, `L_Y`, `L_±`, Hirota derivatives and the bilinear
//!   operator `F`.
//! * [`wronskian`]: two-directional Wronskians, determinants and the cached
//!   [`TauFamily`](wronskian::TauFamily).
//! * [`closedform`]: closed-form reference polynomials.
//! * [`verifier`]: the identity-checking harness producing
//!   [`CheckReport`](verifier::CheckReport)s.

pub mod closedform;
pub mod error;
pub mod exactalg;
pub mod operators;
pub mod verifier;
pub mod wronskian;

pub use error::{
    AlgebraError, CacheError, DegenerateParams, MatrixError, OrderwiseError, ParseError,
};
pub use exactalg::{GaussianRational, LaurentPoly, Monomial};
pub use operators::{DiffOp, FOperator};
pub use verifier::{CheckReport, Status};
pub use wronskian::TauFamily;
