//! First and second CCS-numbers and the identities they satisfy.

use super::{xi_tilde, CcsVector, DefectTable, InvariantError, RatMod1};
use crate::cyclo::Cyc;
use crate::matgroup::{abelianization, Abelianization, FamilySpec, MatGroup};
use crate::reptheory::{irrep_catalog, newton_det, Character, Irrep};

/// `log(det rho(g_i)) / 2 pi i` on each abelianization generator `g_i`.
pub fn first_ccs(
    det: &Character,
    ab: &Abelianization,
    g: &MatGroup,
) -> Result<Vec<RatMod1>, InvariantError> {
    ab.generators
        .iter()
        .map(|(_, idx)| {
            let (n, e) = det.value(g.classes().class_of[*idx]).root_of_unity_log()?;
            Ok(RatMod1::ratio(e as i64, n as i64))
        })
        .collect()
}

/// `xi(rho) - xi(det rho)` modulo 1.
pub fn second_ccs(
    chi: &Character,
    det: &Character,
    table: &DefectTable,
) -> Result<RatMod1, InvariantError> {
    Ok(xi_tilde(chi, table)? - xi_tilde(det, table)?)
}

/// The vector of CCS-numbers of an irreducible representation with the
/// given determinant character.
pub fn ccs_vector(
    irrep: &Irrep,
    det: &Character,
    g: &MatGroup,
    ab: &Abelianization,
    table: &DefectTable,
) -> Result<CcsVector, InvariantError> {
    Ok(CcsVector {
        rank: irrep.degree,
        first: first_ccs(det, ab, g)?,
        second: second_ccs(&irrep.character, det, table)?,
    })
}

/// Exact check of
/// `(2 - z^{tj} - z^{-tj}) / (2 - z^j - z^{-j})
///   = sum_{i=0}^{t-1} (t-i) z^{ij} + sum_{l=1}^{t-1} (t-l) z^{-lj}`
/// with `z = z_n`.
pub fn telescoping_identity_check(n: u64, t: u64, j: i64) -> Result<bool, InvariantError> {
    if n == 0 || t == 0 {
        return Err(InvariantError::OutOfRange(format!("n = {n}, t = {t}")));
    }
    let z = |e: i64| Cyc::root_of_unity(n, e);
    let two = Cyc::from_int(2);
    let ti = t as i64;
    let den = &(&two - &z(j)) - &z(-j);
    let lhs = (&(&two - &z(ti * j)) - &z(-ti * j)).div(&den)?;
    let mut rhs = Cyc::zero();
    for i in 0..ti {
        rhs = &rhs + &(&Cyc::from_int(ti - i) * &z(i * j));
    }
    for l in 1..ti {
        rhs = &rhs + &(&Cyc::from_int(ti - l) * &z(-l * j));
    }
    Ok(lhs == rhs)
}

/// On `Gamma x C_l`, check `c1(rho (x) sigma) = c1(rho) + deg(rho) c1(sigma)`
/// for every irreducible `rho` of `Gamma` and every character `sigma` of `C_l`.
/// Only characters enter, so `l` need not be coprime to `|Gamma|`.
pub fn tensor_chern_first_check(
    gamma: &FamilySpec,
    l: u64,
    cap: usize,
) -> Result<bool, InvariantError> {
    let g = MatGroup::build_direct_product(gamma, l, cap)?;
    let ab = abelianization(&g)?;
    let info = g.product_info().expect("product group");
    let inner = info.inner.clone();
    let classes = g.classes();
    let inner_catalog = irrep_catalog(&inner)?;
    for rho in &inner_catalog {
        let pulled = Character::from_class_fn(&g, |c| {
            let x = classes.representative(c);
            rho.character
                .value(inner.classes().class_of[info.inner_of[x]])
                .clone()
        });
        let c1_rho = first_ccs(&newton_det(&pulled, &g)?, &ab, &g)?;
        for a in 0..l {
            let sigma = Character::from_class_fn(&g, |c| {
                Cyc::root_of_unity(l, (a * info.cyc_of[classes.representative(c)]) as i64)
            });
            let c1_sigma = first_ccs(&sigma, &ab, &g)?;
            let product = pulled.tensor(&sigma)?;
            let c1_product = first_ccs(&newton_det(&product, &g)?, &ab, &g)?;
            let expected: Vec<RatMod1> = c1_rho
                .iter()
                .zip(&c1_sigma)
                .map(|(x, y)| x + &y.times(rho.degree as i64))
                .collect();
            if c1_product != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
