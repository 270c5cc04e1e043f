//! Defects, reduced xi-invariants and CCS-numbers of irreducible
//! representations.
//!
//! For `rho` of degree `k`,
//! `xi(rho) = (1/|G|) sum_{g != 1} (Tr rho(g) - k) s(g) / (1 - Tr g + det g)`
//! where `s` is a degree-one character with `s^2 = det` on the natural
//! representation. The first CCS-numbers are the logarithms of `det rho` on
//! the abelianization generators, and the second is
//! `xi(rho) - xi(det rho)` modulo 1.

mod analysis;
mod ccs;
mod labels;
mod ratmod1;
mod spin;
mod table;
mod xi;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::CycError;
use crate::matgroup::GroupError;
use crate::reptheory::RepError;

pub use analysis::{Analysis, AnalyzedIrrep};
pub use ccs::{
    ccs_vector, first_ccs, second_ccs, telescoping_identity_check, tensor_chern_first_check,
};
pub use labels::{polyhedral_reference, ReferenceColumn};
pub use ratmod1::RatMod1;
pub use spin::{spin_sqrt_character, SpinOverride, SpinSqrt};
pub use table::{InvariantRow, InvariantTable};
pub use xi::{defect, xi_closed_form_bd, xi_closed_form_d, xi_tilde, xi_tilde_raw, DefectTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("no degree-one character squares to the determinant: {0}")]
    NoSpinCharacter(String),
    #[error("the defect is undefined at the identity")]
    FixedPoint,
    #[error("xi is not rational: {0}")]
    IrrationalXi(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("cannot parse '{0}'")]
    Parse(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// `(rank; first CCS-numbers; second CCS-number)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CcsVector {
    pub rank: u64,
    pub first: Vec<RatMod1>,
    pub second: RatMod1,
}

#[cfg(test)]
mod tests;
