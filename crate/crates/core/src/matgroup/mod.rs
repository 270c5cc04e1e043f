//! Finite subgroups of `U(2)` acting freely on `S^3`: construction from the
//! named unitary generators, conjugacy classes, abelianization and
//! presentation checks.

mod abelian;
mod family;
mod group;
pub mod iso;
mod matrix;
mod presentation;
mod snf;

use thiserror::Error;

pub use abelian::{abelianization, Abelianization};
pub use family::FamilySpec;
pub use group::{conjugacy_classes, ConjugacyClasses, MatGroup, ProductInfo, DEFAULT_ELEMENT_CAP};
pub use matrix::{eta, iota, omega, phi, psi, sigma, sqrt2, sqrt5, tau, Matrix, UMat2};
pub use presentation::{
    check_isomorphism, d_family, p_prime, polyhedral, quaternion, triangle, verify_isomorphism,
    IsoCheck, Presentation, Word,
};
pub use snf::{invariant_factors, smith_diagonal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("group closure exceeded the element cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("generator is not unitary: {0}")]
    NotUnitary(String),
    #[error("expected a group of order {expected}, found {found}")]
    OrderMismatch { expected: u64, found: u64 },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("no image assigned to generator '{0}'")]
    MissingAssignment(String),
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("abelianization error: {0}")]
    Abelianization(String),
}
