//! Class functions with exact values.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{Irrep, IrrepLabel, RepError};
use crate::cyclo::{lcm, Cyc};
use crate::matgroup::MatGroup;

/// A class function, one value per conjugacy class in the group's class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Character {
    #[serde(skip)]
    group_id: u64,
    values: Vec<Cyc>,
}

impl Character {
    pub fn new(g: &MatGroup, values: Vec<Cyc>) -> Character {
        assert_eq!(values.len(), g.classes().len());
        Character {
            group_id: g.id(),
            values,
        }
    }

    pub fn from_class_fn(g: &MatGroup, f: impl FnMut(usize) -> Cyc) -> Character {
        Character::new(g, (0..g.classes().len()).map(f).collect())
    }

    pub fn trivial(g: &MatGroup) -> Character {
        Character::from_class_fn(g, |_| Cyc::one())
    }

    /// Trace of the defining matrix representation.
    pub fn natural(g: &MatGroup) -> Character {
        let classes = g.classes();
        Character::from_class_fn(g, |c| g.element(classes.representative(c)).trace())
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyc {
        &self.values[class]
    }

    /// Value at the identity, when it is a non-negative integer.
    pub fn degree(&self) -> Option<u64> {
        self.values[0]
            .as_rational()
            .ok()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_u64())
    }

    fn check(&self, other: &Character) -> Result<(), RepError> {
        if self.group_id != other.group_id {
            return Err(RepError::GroupMismatch);
        }
        Ok(())
    }

    fn zip(&self, other: &Character, f: impl Fn(&Cyc, &Cyc) -> Cyc) -> Result<Character, RepError> {
        self.check(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Character {
            group_id: self.group_id,
            values,
        })
    }

    pub fn tensor(&self, other: &Character) -> Result<Character, RepError> {
        self.zip(other, |a, b| a * b)
    }

    pub fn add(&self, other: &Character) -> Result<Character, RepError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Character) -> Result<Character, RepError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Cyc) -> Character {
        Character {
            group_id: self.group_id,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn conj(&self) -> Character {
        Character {
            group_id: self.group_id,
            values: self.values.iter().map(Cyc::conj).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyc::is_zero)
    }

    /// Least common conductor of the values.
    pub fn conductor(&self) -> u64 {
        self.values.iter().fold(1, |acc, v| lcm(acc, v.conductor()))
    }

    /// Image under `z -> z^a` for `a` coprime to [`Character::conductor`].
    pub fn galois(&self, a: i64) -> Result<Character, RepError> {
        let values = self
            .values
            .iter()
            .map(|v| v.galois(a))
            .collect::<Result<_, _>>()?;
        Ok(Character {
            group_id: self.group_id,
            values,
        })
    }
}

/// `<a, b> = (1/|G|) sum_g a(g) conj(b(g))`, exact.
pub fn inner_product(a: &Character, b: &Character, g: &MatGroup) -> Result<Cyc, RepError> {
    a.check(b)?;
    if a.group_id != g.id() {
        return Err(RepError::GroupMismatch);
    }
    let classes = g.classes();
    let conj: Vec<Cyc> = b.values.iter().map(Cyc::conj).collect();
    let sum = Cyc::dot((0..classes.len()).map(|c| (a.value(c), &conj[c], classes.size(c) as i64)));
    Ok(&sum * &Cyc::ratio(1, g.order() as i64))
}

/// Multiset of catalog labels in `a * b`, with multiplicities, checked to
/// account for the whole product.
pub fn tensor_decompose(
    a: &Character,
    b: &Character,
    catalog: &[Irrep],
    g: &MatGroup,
) -> Result<Vec<(IrrepLabel, u64)>, RepError> {
    let product = a.tensor(b)?;
    let mut residual = product.clone();
    let mut out = Vec::new();
    for irrep in catalog {
        let m = inner_product(&product, &irrep.character, g)?;
        let m: BigRational = m.as_rational().map_err(|_| RepError::NotDecomposable)?;
        if !m.is_integer() || m < BigRational::from_integer(0.into()) {
            return Err(RepError::NotDecomposable);
        }
        let m = m.to_integer().to_u64().ok_or(RepError::NotDecomposable)?;
        if m > 0 {
            residual = residual.sub(&irrep.character.scale(&Cyc::from_int(m as i64)))?;
            out.push((irrep.label.clone(), m));
        }
    }
    if !residual.is_zero() {
        return Err(RepError::NotDecomposable);
    }
    Ok(out)
}
