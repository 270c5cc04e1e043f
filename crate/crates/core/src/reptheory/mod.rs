//! Characters and irreducible representations.
//!
//! Catalogs are explicit for the cyclic, binary dihedral, `D` and `P'` families
//! (matrices on the presentation generators, extended to every element and
//! checked to be homomorphisms), character-only for the binary polyhedral
//! groups (Burnside-Brauer from the natural character), and tensor products
//! for `<base>xC:l`.

mod burnside;
mod catalog;
mod character;
mod det;
mod table;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cyclo::CycError;
use crate::matgroup::{GroupError, Matrix};

pub use burnside::burnside_brauer;
pub use catalog::{irrep_catalog, linear_characters, verify_catalog, Catalog};
pub use character::{inner_product, tensor_decompose, Character};
pub use det::{det_character, newton_det};
pub use table::{CharRow, CharTable, ClassInfo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("characters belong to different groups")]
    GroupMismatch,
    #[error("{0} does not extend to a homomorphism")]
    NotAHomomorphism(String),
    #[error("irreducible characters found cover {found} of the group order {order}")]
    IncompleteCatalog { found: u64, order: u64 },
    #[error("character has degree {0}, above the search bound")]
    DegreeBound(u64),
    #[error("character does not decompose into the catalog")]
    NotDecomposable,
    #[error("cannot parse table: {0}")]
    Parse(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Name of an irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    /// One-dimensional `alpha_j`.
    Alpha(u64),
    /// Binary dihedral `rho_t`.
    Rho(u64),
    /// Two-dimensional `varrho_{t,s}` of the `D` family.
    RhoTS { t: u64, s: u64 },
    /// Two-dimensional `varrho_s` of `P'`.
    PRho(u64),
    /// Three-dimensional `varsigma_s` of `P'`.
    PSigma(u64),
    /// `chi_j` before a binary polyhedral catalog is put in reference order.
    Provisional(u64),
    /// `inner (x) alpha_j` on `Gamma x C_l`.
    Tensor(Box<IrrepLabel>, u64),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Alpha(j) => write!(f, "alpha_{j}"),
            IrrepLabel::Rho(t) => write!(f, "rho_{t}"),
            IrrepLabel::RhoTS { t, s } => write!(f, "varrho_{{{t},{s}}}"),
            IrrepLabel::PRho(s) => write!(f, "varrho_{s}"),
            IrrepLabel::PSigma(s) => write!(f, "varsigma_{s}"),
            IrrepLabel::Provisional(j) => write!(f, "chi_{j}"),
            IrrepLabel::Tensor(inner, j) => write!(f, "{inner}⊗alpha_{j}"),
        }
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An irreducible representation: its character and, when known explicitly,
/// the images of every group element.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub label: IrrepLabel,
    pub degree: u64,
    pub character: Character,
    pub images: Option<Vec<Matrix>>,
}
