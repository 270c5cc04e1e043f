//! Defects and the reduced xi-invariant.

use num_rational::BigRational;

use super::{InvariantError, RatMod1, SpinSqrt};
use crate::cyclo::Cyc;
use crate::matgroup::MatGroup;
use crate::reptheory::{Character, RepError};

/// `s(g) / (1 - Tr g + det g)` for a non-identity element.
pub fn defect(g: &MatGroup, s: &SpinSqrt, elem: usize) -> Result<Cyc, InvariantError> {
    let m = g.element(elem);
    let denom = &(&Cyc::one() - &m.trace()) + &m.det();
    if denom.is_zero() {
        return Err(InvariantError::FixedPoint);
    }
    let value = s.character.value(g.classes().class_of[elem]);
    Ok(value.div(&denom)?)
}

/// Defects per conjugacy class, weighted by class size and divided by the
/// group order; the identity class carries zero.
#[derive(Debug, Clone)]
pub struct DefectTable {
    group_id: u64,
    weights: Vec<Cyc>,
}

impl DefectTable {
    pub fn new(g: &MatGroup, s: &SpinSqrt) -> Result<DefectTable, InvariantError> {
        let classes = g.classes();
        let scale = Cyc::ratio(1, g.order() as i64);
        let weights = (0..classes.len())
            .map(|c| {
                let rep = classes.representative(c);
                if rep == g.identity() {
                    return Ok(Cyc::zero());
                }
                let d = defect(g, s, rep)?;
                Ok(&(&d * &Cyc::from_int(classes.size(c) as i64)) * &scale)
            })
            .collect::<Result<_, InvariantError>>()?;
        Ok(DefectTable {
            group_id: g.id(),
            weights,
        })
    }

    /// `(1/|G|) sum_{g in class} def(g)`.
    pub fn weight(&self, class: usize) -> &Cyc {
        &self.weights[class]
    }
}

/// The exact sum `(1/|G|) sum_{g != 1} (chi(g) - chi(1)) def(g)`, before
/// reduction modulo 1.
pub fn xi_tilde_raw(chi: &Character, table: &DefectTable) -> Result<BigRational, InvariantError> {
    if chi.group_id() != table.group_id {
        return Err(RepError::GroupMismatch.into());
    }
    let k = chi.value(0);
    let sum: Cyc = chi
        .values()
        .iter()
        .zip(&table.weights)
        .map(|(v, w)| &(v - k) * w)
        .sum();
    sum.as_rational()
        .map_err(|_| InvariantError::IrrationalXi(sum.to_string()))
}

/// The reduced xi-invariant in `Q/Z`.
pub fn xi_tilde(chi: &Character, table: &DefectTable) -> Result<RatMod1, InvariantError> {
    Ok(RatMod1::new(&xi_tilde_raw(chi, table)?))
}

/// `(t^2 - 2qt - 2q) / (4q)` modulo 1, the value on `rho_t` of the binary
/// dihedral group of order `4q`.
pub fn xi_closed_form_bd(q: u64, t: u64) -> Result<RatMod1, InvariantError> {
    if q < 2 || t < 1 || t >= q {
        return Err(InvariantError::OutOfRange(format!("q = {q}, t = {t}")));
    }
    let (q, t) = (q as i64, t as i64);
    Ok(RatMod1::ratio(t * t - 2 * q * t - 2 * q, 4 * q))
}

/// The closed triple sum for `varrho_{t,s}` of `D_{2^(k+1)(2r+1)}`, with
/// `K = 2^k` and `m = 2r + 1`:
///
/// ```text
/// N xi = sum_{l=1}^{K-1} ((-1)^{tl} 2 z_K^{ls} - 2) / (z_K^l + z_K^-l - 2 (-1)^l)
///      + sum_{q=1}^{2r} sum_{l=0}^{K-1}
///          ((-1)^{tl} z_K^{ls} (z_m^{tq} + z_m^-tq) - 2) / (z_K^l + z_K^-l - (-1)^l (z_m^q + z_m^-q))
///      - sum_{q=0}^{2r} sum_{l=0}^{K-1} 2 / (z_2K^(2l+1) + z_2K^-(2l+1))
/// ```
pub fn xi_closed_form_d(k: u32, r: u64, t: u64, s: u64) -> Result<RatMod1, InvariantError> {
    if k < 2 || r < 1 || t < 1 || t > 2 * r || s >= 1 << (k - 1) {
        return Err(InvariantError::OutOfRange(format!(
            "k = {k}, r = {r}, t = {t}, s = {s}"
        )));
    }
    let kk = 1u64 << k;
    let m = 2 * r + 1;
    let z = Cyc::root_of_unity;
    let sign = |e: u64| Cyc::from_int(if e.is_multiple_of(2) { 1 } else { -1 });
    let two = Cyc::from_int(2);
    let zk = |e: u64| &z(kk, e as i64) + &z(kk, -(e as i64));
    let zm = |e: u64| &z(m, e as i64) + &z(m, -(e as i64));
    let mut total = Cyc::zero();
    for l in 1..kk {
        let num = &(&(&sign(t * l) * &two) * &z(kk, (l * s) as i64)) - &two;
        let den = &zk(l) - &(&sign(l) * &two);
        total = &total + &num.div(&den)?;
    }
    for q in 1..=2 * r {
        for l in 0..kk {
            let num = &(&(&sign(t * l) * &z(kk, (l * s) as i64)) * &zm(t * q)) - &two;
            let den = &zk(l) - &(&sign(l) * &zm(q));
            total = &total + &num.div(&den)?;
        }
    }
    for _ in 0..m {
        for l in 0..kk {
            let e = (2 * l + 1) as i64;
            let den = &z(2 * kk, e) + &z(2 * kk, -e);
            total = &total - &two.div(&den)?;
        }
    }
    let raw = (&total * &Cyc::ratio(1, (2 * kk * m) as i64))
        .as_rational()
        .map_err(|_| InvariantError::IrrationalXi(total.to_string()))?;
    Ok(RatMod1::new(&raw))
}
