//! The isomorphisms between the abstract presentations and the matrix groups:
//!
//! * `<2,3,n> -> P_{24n/(6-n)}` by `x -> bc, y -> c^-1` for `n = 3, 4, 5`,
//! * `D_{4(2r+1)} <-> BD_{2(2r+1)}` and `P'_24 <-> P_24` in both directions,
//! * `D_{2^(k+1) q} x C_l -> <psi_2q, tau phi_4m>` with `m = 2^(k-1) l`,
//! * `P'_{8 3^k} x C_l -> <psi_4, tau, eta phi_6m>` with `m = 3^(k-1) l`.

use serde::Serialize;

use super::family::FamilySpec;
use super::group::MatGroup;
use super::matrix::{eta, phi, psi, tau};
use super::presentation::{
    check_isomorphism, d_family, p_prime, polyhedral, quaternion, triangle, IsoCheck, Presentation,
    Word,
};
use super::GroupError;
use crate::cyclo::gcd;

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub name: String,
    pub relators_hold: bool,
    pub surjective: bool,
    pub orders_match: bool,
    /// For two-way maps: the composite is the identity on generators.
    pub round_trip: Option<bool>,
}

impl IsoReport {
    fn new(name: String, check: IsoCheck, round_trip: Option<bool>) -> IsoReport {
        IsoReport {
            name,
            relators_hold: check.relators_hold,
            surjective: check.surjective,
            orders_match: check.orders_match,
            round_trip,
        }
    }

    pub fn passed(&self) -> bool {
        self.relators_hold
            && self.surjective
            && self.orders_match
            && self.round_trip.unwrap_or(true)
    }
}

fn family(spec: &str, cap: usize) -> Result<MatGroup, GroupError> {
    MatGroup::build(&spec.parse::<FamilySpec>()?, cap)
}

fn eval(g: &MatGroup, word: &str) -> Result<usize, GroupError> {
    Word::parse(word)?.evaluate(g, &|c| g.named_element(&c.to_string()))
}

/// `<2,3,n>` realized by the binary polyhedral group maps onto
/// `P_{24n/(6-n)}` by `x -> bc, y -> c^-1`.
pub fn polyhedral_lemma(n: u64, cap: usize) -> Result<Vec<IsoReport>, GroupError> {
    let spec = match n {
        3 => "BT",
        4 => "BO",
        5 => "BI",
        _ => {
            return Err(GroupError::InvalidSpec(format!(
                "no binary polyhedral group for n = {n}"
            )))
        }
    };
    let g = family(spec, cap)?;
    Ok(vec![
        IsoReport::new(
            format!("<2,3,{n}> -> {spec}"),
            check_isomorphism(&triangle(3, n), &[('b', "b"), ('c', "c")], &g)?,
            None,
        ),
        IsoReport::new(
            format!("P_{} -> {spec} by x -> bc, y -> c^-1", 24 * n / (6 - n)),
            check_isomorphism(&polyhedral(n), &[('x', "bc"), ('y', "c^-1")], &g)?,
            None,
        ),
    ])
}

/// Binary dihedral presentations: `<2,2,q>` and `Q_{4q}`.
pub fn binary_dihedral(q: u64, cap: usize) -> Result<Vec<IsoReport>, GroupError> {
    let g = family(&format!("BD:{q}"), cap)?;
    Ok(vec![
        IsoReport::new(
            format!("<2,2,{q}> -> BD:{q}"),
            check_isomorphism(&triangle(2, q), &[('b', "b"), ('c', "c")], &g)?,
            None,
        ),
        IsoReport::new(
            format!("Q_{} -> BD:{q}", 4 * q),
            check_isomorphism(&quaternion(q), &[('x', "b"), ('y', "c")], &g)?,
            None,
        ),
    ])
}

/// `D_{4(2r+1)} -> BD_{2(2r+1)}` by `x -> b, y -> c^2`, and back by
/// `b -> x, c -> y^(r+1) x^2`.
pub fn d_to_binary_dihedral(r: u64, cap: usize) -> Result<Vec<IsoReport>, GroupError> {
    let q = 2 * r + 1;
    let mut g = family(&format!("BD:{q}"), cap)?;
    let forward = check_isomorphism(&d_family(1, r), &[('x', "b"), ('y', "c^2")], &g)?;
    let (b, c) = (eval(&g, "b")?, eval(&g, "c")?);
    g.set_name("X", b);
    g.set_name("Y", eval(&g, "c^2")?);
    let back_c = format!("Y^{}X^2", r + 1);
    let backward = check_isomorphism(&triangle(2, q), &[('b', "X"), ('c', &back_c)], &g)?;
    let round_trip = eval(&g, "X")? == b && eval(&g, &back_c)? == c;
    Ok(vec![
        IsoReport::new(format!("D_{} -> BD:{q}", 4 * q), forward, None),
        IsoReport::new(format!("BD:{q} -> D_{}", 4 * q), backward, Some(round_trip)),
    ])
}

/// `P'_24 -> P_24` by `X -> y x y^-1, Y -> x, Z -> y^2`, and back by
/// `x -> Y, y -> X^-1 Z^-1 Y^-1`, with `P_24` realized in `BT` through
/// `x = bc, y = c^-1`.
pub fn p_prime_to_p24(cap: usize) -> Result<Vec<IsoReport>, GroupError> {
    let mut g = family("BT", cap)?;
    let (x, y) = (eval(&g, "bc")?, eval(&g, "c^-1")?);
    g.set_name("x", x);
    g.set_name("y", y);
    let forward = check_isomorphism(
        &p_prime(1),
        &[('x', "yxy^-1"), ('y', "x"), ('z', "y^2")],
        &g,
    )?;
    g.set_name("X", eval(&g, "yxy^-1")?);
    g.set_name("Y", x);
    g.set_name("Z", eval(&g, "y^2")?);
    let backward = check_isomorphism(&polyhedral(3), &[('x', "Y"), ('y', "X^-1Z^-1Y^-1")], &g)?;
    let round_trip = eval(&g, "Y")? == x && eval(&g, "X^-1Z^-1Y^-1")? == y;
    Ok(vec![
        IsoReport::new("P'_24 -> P_24".into(), forward, None),
        IsoReport::new("P_24 -> P'_24".into(), backward, Some(round_trip)),
    ])
}

/// `D_{2^(k+1) q} x C_l -> <psi_2q, tau phi_4m>`, `m = 2^(k-1) l`, by
/// `x -> (tau phi_4m)^l, y -> psi_q, z -> (tau phi_4m)^(2^(k+1))`.
pub fn d_product(k: u32, q: u64, l: u64, cap: usize) -> Result<IsoReport, GroupError> {
    if q.is_multiple_of(2) || l.is_multiple_of(2) || gcd(l, q) != 1 {
        return Err(GroupError::InvalidSpec(format!(
            "need q, l odd and coprime, got q = {q}, l = {l}"
        )));
    }
    let m = (1u64 << (k - 1)) * l;
    let t = tau().mul(&phi(4 * m));
    let mut g = MatGroup::from_generators(&[psi(2 * q), t.clone()], cap)?;
    let t_idx = g.index_of(&t).expect("generator");
    let y_idx = g
        .index_of(&psi(q))
        .ok_or_else(|| GroupError::InvalidSpec("psi_q missing".into()))?;
    g.set_name("T", t_idx);
    g.set_name("Y", y_idx);
    let base = d_family(k, (q - 1) / 2);
    let x_word = format!("T^{l}");
    let z_word = format!("T^{}", 1u64 << (k + 1));
    let (pres, assignment): (Presentation, Vec<(char, &str)>) = if l == 1 {
        (base, vec![('x', &x_word), ('y', "Y")])
    } else {
        (
            base.with_central_cyclic('z', l),
            vec![('x', &x_word), ('y', "Y"), ('z', &z_word)],
        )
    };
    let name = format!("D_{} x C_{l} -> D_({},{q})", (1u64 << (k + 1)) * q, m + q);
    Ok(IsoReport::new(
        name,
        check_isomorphism(&pres, &assignment, &g)?,
        None,
    ))
}

/// `P'_{8 3^k} x C_l -> <psi_4, tau, eta phi_6m>`, `m = 3^(k-1) l`. For
/// `l = 2 (mod 3)`: `x -> psi_4, y -> tau`; for `l = 1 (mod 3)`:
/// `x -> tau^-1, y -> psi_4^-1`; in both cases `z -> (eta phi_6m)^(2l)` and
/// `w -> (eta phi_6m)^(2 3^k)`.
pub fn p_product(k: u32, l: u64, cap: usize) -> Result<IsoReport, GroupError> {
    if gcd(l, 6) != 1 {
        return Err(GroupError::InvalidSpec(format!(
            "need l coprime to 6, got {l}"
        )));
    }
    let m = 3u64.pow(k - 1) * l;
    let e = eta().mul(&phi(6 * m));
    let mut g = MatGroup::from_generators(&[psi(4), tau(), e.clone()], cap)?;
    g.set_name("P", g.index_of(&psi(4)).expect("generator"));
    g.set_name("T", g.index_of(&tau()).expect("generator"));
    g.set_name("E", g.index_of(&e).expect("generator"));
    let z_word = format!("E^{}", 2 * l);
    let w_word = format!("E^{}", 2 * 3u64.pow(k));
    let (x_word, y_word) = if l % 3 == 2 {
        ("P", "T")
    } else {
        ("T^-1", "P^-1")
    };
    let base = p_prime(k);
    let (pres, assignment): (Presentation, Vec<(char, &str)>) = if l == 1 {
        (base, vec![('x', x_word), ('y', y_word), ('z', &z_word)])
    } else {
        (
            base.with_central_cyclic('w', l),
            vec![('x', x_word), ('y', y_word), ('z', &z_word), ('w', &w_word)],
        )
    };
    let case = if l % 3 == 2 { 1 } else { 2 };
    let name = format!("P'_{} x C_{l} -> T_{m} (case {case})", 8 * 3u64.pow(k));
    Ok(IsoReport::new(
        name,
        check_isomorphism(&pres, &assignment, &g)?,
        None,
    ))
}

/// Every isomorphism check over the default parameter ranges:
/// `q <= 9`, `l <= 7`, `k <= 3`.
pub fn all_checks(cap: usize) -> Result<Vec<IsoReport>, GroupError> {
    let mut out = Vec::new();
    for n in 3..=5 {
        out.extend(polyhedral_lemma(n, cap)?);
    }
    for q in 2..=9 {
        out.extend(binary_dihedral(q, cap)?);
    }
    for r in 1..=4 {
        out.extend(d_to_binary_dihedral(r, cap)?);
    }
    out.extend(p_prime_to_p24(cap)?);
    for k in 2..=3 {
        for q in (3..=9).step_by(2) {
            for l in (1..=7).step_by(2) {
                if gcd(l, q) == 1 {
                    out.push(d_product(k, q, l, cap)?);
                }
            }
        }
        for l in [1, 5, 7] {
            out.push(p_product(k, l, cap)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_ELEMENT_CAP;

    #[test]
    fn small_instances() {
        for r in polyhedral_lemma(3, DEFAULT_ELEMENT_CAP).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
        for r in d_to_binary_dihedral(2, DEFAULT_ELEMENT_CAP).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
        for r in p_prime_to_p24(DEFAULT_ELEMENT_CAP).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
        assert!(d_product(2, 5, 1, DEFAULT_ELEMENT_CAP).unwrap().passed());
        assert!(d_product(2, 3, 5, DEFAULT_ELEMENT_CAP).unwrap().passed());
        assert!(p_product(2, 1, DEFAULT_ELEMENT_CAP).unwrap().passed());
        assert!(p_product(2, 5, DEFAULT_ELEMENT_CAP).unwrap().passed());
    }

    #[test]
    fn wrong_map_is_rejected() {
        let g = family("BD:3", DEFAULT_ELEMENT_CAP).unwrap();
        let check = check_isomorphism(&d_family(1, 1), &[('x', "c"), ('y', "b")], &g).unwrap();
        assert!(!check.is_isomorphism());
    }
}
