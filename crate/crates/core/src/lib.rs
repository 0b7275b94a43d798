//! Exact computation of Genocchi-type polynomial families and mechanical
//! verification of the identities relating them.
//!
//! All arithmetic is over arbitrary-precision rationals. Families are
//! realized as truncated exponential generating functions in `t` whose
//! coefficients are polynomials in `x` and `y`.

pub mod error;
pub mod families;
pub mod poly;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec, FamilyValue, Kernel};
pub use poly::{BivarPoly, Exponents, TermRecord, Var};
pub use rational::Rational;
pub use series::EgfSeries;
pub use verify::{IdentityId, IdentityReport, Status, VerifierConfig};
