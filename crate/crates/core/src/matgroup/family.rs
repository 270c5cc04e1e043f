//! Family descriptors for the finite subgroups of `U(2)` acting freely on `S^3`.
//!
//! Text syntax: `C:n,q`, `BD:q`, `BT`, `BO`, `BI`, `D:k,r`, `P:k`, and
//! `<base>xC:l` for a product with a cyclic group of coprime order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::cyclo::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Lens space group generated by `diag(z_n, z_n^q)`.
    Cyclic {
        n: u64,
        q: u64,
    },
    /// Binary dihedral group of order `4q`.
    BinaryDihedral {
        q: u64,
    },
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// `D_{2^(k+1)(2r+1)}`.
    DFamily {
        k: u32,
        r: u64,
    },
    /// `P'_{8 3^k}`.
    PPrime {
        k: u32,
    },
    /// Direct product with the scalar cyclic group of order `l`.
    Product {
        inner: Box<FamilySpec>,
        l: u64,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidSpec(msg));
        match self {
            FamilySpec::Cyclic { n, q } => {
                if *n == 0 {
                    return bad("C:n,q needs n >= 1".into());
                }
                if gcd(*q % n, *n) != 1 && *n > 1 {
                    return bad(format!("C:{n},{q} needs gcd(n, q) = 1"));
                }
            }
            FamilySpec::BinaryDihedral { q } if *q < 2 => return bad("BD:q needs q >= 2".into()),
            FamilySpec::DFamily { k, r } if *k < 2 || *r < 1 => {
                return bad(format!("D:{k},{r} needs k >= 2 and r >= 1"));
            }
            FamilySpec::PPrime { k } if *k < 2 => return bad(format!("P:{k} needs k >= 2")),
            FamilySpec::Product { inner, l } => {
                if matches!(**inner, FamilySpec::Product { .. }) {
                    return bad("nested products are not supported".into());
                }
                inner.validate()?;
                if *l < 2 {
                    return bad("xC:l needs l >= 2".into());
                }
                if gcd(*l, inner.order()) != 1 {
                    return bad(format!(
                        "xC:{l} needs l coprime to the order {}",
                        inner.order()
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        match self {
            FamilySpec::Cyclic { n, .. } => *n,
            FamilySpec::BinaryDihedral { q } => 4 * q,
            FamilySpec::BinaryTetrahedral => 24,
            FamilySpec::BinaryOctahedral => 48,
            FamilySpec::BinaryIcosahedral => 120,
            FamilySpec::DFamily { k, r } => (1u64 << (k + 1)) * (2 * r + 1),
            FamilySpec::PPrime { k } => 8 * 3u64.pow(*k),
            FamilySpec::Product { inner, l } => inner.order() * l,
        }
    }

    /// Whether the group lies in `SU(2)`.
    pub fn is_special_unitary(&self) -> bool {
        match self {
            FamilySpec::Cyclic { n, q } => (1 + q) % n == 0,
            FamilySpec::BinaryDihedral { .. }
            | FamilySpec::BinaryTetrahedral
            | FamilySpec::BinaryOctahedral
            | FamilySpec::BinaryIcosahedral => true,
            _ => false,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Cyclic { .. } => "cyclic",
            FamilySpec::BinaryDihedral { .. } => "binary_dihedral",
            FamilySpec::BinaryTetrahedral => "binary_tetrahedral",
            FamilySpec::BinaryOctahedral => "binary_octahedral",
            FamilySpec::BinaryIcosahedral => "binary_icosahedral",
            FamilySpec::DFamily { .. } => "d_family",
            FamilySpec::PPrime { .. } => "p_prime",
            FamilySpec::Product { .. } => "product",
        }
    }

    pub fn inner(&self) -> &FamilySpec {
        match self {
            FamilySpec::Product { inner, .. } => inner,
            other => other,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic { n, q } => write!(f, "C:{n},{q}"),
            FamilySpec::BinaryDihedral { q } => write!(f, "BD:{q}"),
            FamilySpec::BinaryTetrahedral => write!(f, "BT"),
            FamilySpec::BinaryOctahedral => write!(f, "BO"),
            FamilySpec::BinaryIcosahedral => write!(f, "BI"),
            FamilySpec::DFamily { k, r } => write!(f, "D:{k},{r}"),
            FamilySpec::PPrime { k } => write!(f, "P:{k}"),
            FamilySpec::Product { inner, l } => write!(f, "{inner}xC:{l}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<FamilySpec, GroupError> {
        let s = s.trim();
        let err = || GroupError::InvalidSpec(format!("cannot parse group spec '{s}'"));
        if let Some(pos) = s.rfind("xC:") {
            let inner: FamilySpec = s[..pos].parse()?;
            let l = s[pos + 3..].parse().map_err(|_| err())?;
            let spec = FamilySpec::Product {
                inner: Box::new(inner),
                l,
            };
            spec.validate()?;
            return Ok(spec);
        }
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (
                h,
                a.split(',')
                    .map(|x| x.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| err())?,
            ),
            None => (s, Vec::new()),
        };
        let spec = match (head, args.as_slice()) {
            ("C", [n, q]) => FamilySpec::Cyclic { n: *n, q: *q },
            ("BD", [q]) => FamilySpec::BinaryDihedral { q: *q },
            ("BT", []) => FamilySpec::BinaryTetrahedral,
            ("BO", []) => FamilySpec::BinaryOctahedral,
            ("BI", []) => FamilySpec::BinaryIcosahedral,
            ("D", [k, r]) => FamilySpec::DFamily {
                k: u32::try_from(*k).map_err(|_| err())?,
                r: *r,
            },
            ("P", [k]) => FamilySpec::PPrime {
                k: u32::try_from(*k).map_err(|_| err())?,
            },
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in [
            "C:5,2",
            "BD:3",
            "BT",
            "BO",
            "BI",
            "D:2,2",
            "P:2",
            "BTxC:5",
            "D:3,1xC:5",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("D:3,2".parse::<FamilySpec>().unwrap().order(), 80);
        assert_eq!("BIxC:7".parse::<FamilySpec>().unwrap().order(), 840);
    }

    #[test]
    fn rejects_invalid() {
        for s in [
            "C:4,2",
            "BD:1",
            "D:1,2",
            "P:1",
            "BTxC:3",
            "BTxC:5xC:7",
            "X:1",
            "BD:a",
        ] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s}");
        }
    }
}
