//! Determinant characters.

use super::{Character, Irrep, RepError};
use crate::cyclo::Cyc;
use crate::matgroup::MatGroup;

/// `det(rho)`: from the explicit images when available, otherwise from the
/// character through Newton's identities.
pub fn det_character(irrep: &Irrep, g: &MatGroup) -> Result<Character, RepError> {
    match &irrep.images {
        Some(images) => {
            let classes = g.classes();
            Ok(Character::from_class_fn(g, |c| {
                images[classes.representative(c)].det()
            }))
        }
        None => newton_det(&irrep.character, g),
    }
}

/// Determinant from power sums: with `p_k = chi(g^k)`,
/// `k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i` and `det = e_d`.
pub fn newton_det(chi: &Character, g: &MatGroup) -> Result<Character, RepError> {
    if chi.group_id() != g.id() {
        return Err(RepError::GroupMismatch);
    }
    let d = chi.degree().ok_or(RepError::NotDecomposable)? as i64;
    let values = (0..g.classes().len())
        .map(|c| {
            let p: Vec<Cyc> = (1..=d)
                .map(|k| chi.value(g.power_class(c, k)).clone())
                .collect();
            let mut e = vec![Cyc::one()];
            for k in 1..=d as usize {
                let mut acc = Cyc::zero();
                for i in 1..=k {
                    let term = &e[k - i] * &p[i - 1];
                    acc = if i % 2 == 1 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                e.push(&acc * &Cyc::ratio(1, k as i64));
            }
            e.pop().expect("degree at least zero")
        })
        .collect();
    Ok(Character::new(g, values))
}
