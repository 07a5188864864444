//! Identity-checking harness. Every check compares two exact polynomials and
//! reports the leading term of a nonzero residual.

pub mod conjecture;
pub mod ernst;
pub mod orderwise;
mod report;
pub mod su11;
pub mod suites;
pub mod symmetry;
pub mod toda;

pub use conjecture::{check_conjecture, check_conjecture_pair};
pub use ernst::{ernst_residual_numeric, ErnstPoint, ErnstSample};
pub use orderwise::{
    check_orderwise_nakamura, check_orderwise_toda, NakamuraCase, Parent, TodaFamily,
};
pub use report::{CheckReport, Status};
pub use su11::{check_su11, su11_transform, Su11Params};
pub use suites::{run_suites, Suite, SuiteConfig, UnknownSuite};
pub use symmetry::check_symmetries;
pub use toda::{check_mixed, check_toda};
