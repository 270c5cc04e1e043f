use proptest::prelude::*;

use super::*;
use crate::cyclo::Cyc;
use crate::matgroup::{abelianization, FamilySpec, MatGroup, Matrix, DEFAULT_ELEMENT_CAP};
use crate::reptheory::{newton_det, Character, IrrepLabel};

fn analysis(s: &str) -> Analysis {
    Analysis::build(&s.parse().unwrap(), DEFAULT_ELEMENT_CAP, None).unwrap()
}

fn rt(t: u64, s: u64) -> IrrepLabel {
    IrrepLabel::RhoTS { t, s }
}

#[test]
fn spin_character_choice() {
    assert_eq!(analysis("BD:4").spin.exponents, vec![0, 0]);
    let d = analysis("D:2,2");
    assert_eq!(d.spin.exponents, vec![1]);
    let x = d.group.named_element("x").unwrap();
    assert_eq!(
        d.spin.character.value(d.group.classes().class_of[x]),
        &Cyc::root_of_unity(8, 1)
    );
    let trivial = analysis("C:1,1");
    assert!(trivial.spin.exponents.is_empty());
    assert_eq!(trivial.irreps[0].xi, RatMod1::zero());
}

#[test]
fn spin_override() {
    let spec: FamilySpec = "D:2,2".parse().unwrap();
    let other: SpinOverride = "x=5/8".parse().unwrap();
    let a = Analysis::build(&spec, DEFAULT_ELEMENT_CAP, Some(&other)).unwrap();
    assert_eq!(a.spin.exponents, vec![5]);
    let bad: SpinOverride = "x=1/4".parse().unwrap();
    assert!(matches!(
        Analysis::build(&spec, DEFAULT_ELEMENT_CAP, Some(&bad)),
        Err(InvariantError::NoSpinCharacter(_))
    ));
    assert!("x=1".parse::<SpinOverride>().is_err());
}

#[test]
fn defect_values() {
    let bd = analysis("BD:3");
    let g = &bd.group;
    let minus = g.index_of(&Matrix::scalar(2, Cyc::from_int(-1))).unwrap();
    assert_eq!(defect(g, &bd.spin, minus).unwrap(), Cyc::ratio(1, 4));
    for x in 0..g.order() {
        if g.element(x).trace().is_zero() {
            assert_eq!(defect(g, &bd.spin, x).unwrap(), Cyc::ratio(1, 2));
        }
    }
    assert_eq!(
        defect(g, &bd.spin, g.identity()),
        Err(InvariantError::FixedPoint)
    );

    let d = analysis("D:2,2");
    let x = d.group.named_element("x").unwrap();
    let z8 = Cyc::root_of_unity(8, 1);
    let expected = z8.div(&(&Cyc::one() + &Cyc::root_of_unity(8, 2))).unwrap();
    assert_eq!(defect(&d.group, &d.spin, x).unwrap(), expected);
}

#[test]
fn defect_matches_eigenvalue_form() {
    // With eigenvalues a, b: 1 - Tr + det = (1 - a)(1 - b).
    let d = analysis("D:2,1xC:5");
    let g = &d.group;
    for x in 1..g.order() {
        let m = g.element(x);
        let (a, b) = (m.get(0, 0), m.get(1, 1));
        if !m.get(0, 1).is_zero() {
            continue;
        }
        let den = &(&Cyc::one() - a) * &(&Cyc::one() - b);
        let s = d.spin.character.value(g.classes().class_of[x]);
        assert_eq!(defect(g, &d.spin, x).unwrap(), s.div(&den).unwrap());
    }
}

#[test]
fn xi_examples() {
    let bd = analysis("BD:5");
    assert_eq!(
        bd.irrep(&IrrepLabel::Rho(1)).unwrap().xi,
        RatMod1::ratio(1, 20)
    );
    assert_eq!(bd.irrep(&IrrepLabel::Alpha(0)).unwrap().xi, RatMod1::zero());
    let d = analysis("D:2,2");
    assert_eq!(d.irrep(&rt(1, 0)).unwrap().xi, RatMod1::ratio(9, 10));
    let expected = [
        ((1, 0), -4),
        ((1, 1), -9),
        ((2, 0), -16),
        ((2, 1), -1),
        ((3, 0), 4),
        ((3, 1), -1),
        ((4, 0), 16),
        ((4, 1), -9),
    ];
    for ((t, s), v) in expected {
        let irrep = d.irrep(&rt(t, s)).unwrap();
        assert_eq!(irrep.xi, RatMod1::ratio(v, 40), "({t},{s})");
        assert_eq!(
            d.scaled_xi(irrep),
            num_rational::BigRational::from_integer(v.into())
        );
    }
}

#[test]
fn bd_closed_form() {
    assert_eq!(xi_closed_form_bd(2, 1).unwrap(), RatMod1::ratio(1, 8));
    assert_eq!(xi_closed_form_bd(5, 1).unwrap(), RatMod1::ratio(1, 20));
    assert!(xi_closed_form_bd(5, 5).is_err());
    for q in 2..=8 {
        let a = analysis(&format!("BD:{q}"));
        for t in 1..q {
            assert_eq!(
                a.irrep(&IrrepLabel::Rho(t)).unwrap().xi,
                xi_closed_form_bd(q, t).unwrap(),
                "q={q} t={t}"
            );
        }
    }
}

#[test]
fn d_closed_form() {
    assert_eq!(
        xi_closed_form_d(2, 2, 2, 0).unwrap(),
        RatMod1::ratio(-16, 40)
    );
    assert_eq!(
        xi_closed_form_d(3, 2, 1, 1).unwrap(),
        RatMod1::ratio(31, 80)
    );
    assert_eq!(
        xi_closed_form_d(3, 1, 1, 0).unwrap(),
        RatMod1::ratio(-32, 48)
    );
    assert!(xi_closed_form_d(2, 2, 5, 0).is_err());
    assert!(xi_closed_form_d(2, 2, 1, 2).is_err());
    let a = analysis("D:2,1");
    for t in 1..=2 {
        for s in 0..2 {
            assert_eq!(
                a.irrep(&rt(t, s)).unwrap().xi,
                xi_closed_form_d(2, 1, t, s).unwrap()
            );
        }
    }
}

#[test]
fn first_ccs_examples() {
    let c = analysis("C:7,3");
    for (j, irrep) in c.irreps.iter().enumerate() {
        assert_eq!(irrep.ccs.first, vec![RatMod1::ratio(j as i64, 7)]);
    }
    let bd = analysis("BD:4");
    assert_eq!(
        bd.irrep(&IrrepLabel::Alpha(3)).unwrap().ccs.first,
        vec![RatMod1::ratio(1, 2), RatMod1::ratio(1, 2)]
    );
    let d = analysis("D:3,1");
    for s in 0..4 {
        assert_eq!(
            d.irrep(&rt(1, s)).unwrap().ccs.first,
            vec![RatMod1::ratio(s as i64, 8)]
        );
    }
}

#[test]
fn second_ccs_examples() {
    for s in ["C:6,5", "BD:3", "BD:4", "BT", "BO", "D:2,1", "P:2"] {
        for irrep in analysis(s).irreps.iter().filter(|i| i.irrep.degree == 1) {
            assert!(irrep.ccs.second.is_zero(), "{s} {}", irrep.label());
        }
    }
    assert_eq!(
        analysis("BT")
            .irrep(&IrrepLabel::Alpha(4))
            .unwrap()
            .ccs
            .second,
        RatMod1::ratio(1, 24)
    );
    assert_eq!(
        analysis("BI")
            .irrep(&IrrepLabel::Alpha(2))
            .unwrap()
            .ccs
            .second,
        RatMod1::ratio(1, 120)
    );
}

#[test]
fn ccs_vector_examples() {
    let c = analysis("C:5,2");
    assert_eq!(
        c.irreps[0].ccs,
        CcsVector {
            rank: 1,
            first: vec![RatMod1::zero()],
            second: RatMod1::zero()
        }
    );
    let bd = analysis("BD:3");
    assert_eq!(
        bd.irrep(&IrrepLabel::Alpha(1)).unwrap().ccs,
        CcsVector {
            rank: 1,
            first: vec![RatMod1::ratio(1, 4)],
            second: RatMod1::zero()
        }
    );
    let bo = analysis("BO");
    assert_eq!(
        bo.irrep(&IrrepLabel::Alpha(8)).unwrap().ccs,
        CcsVector {
            rank: 4,
            first: vec![RatMod1::zero()],
            second: RatMod1::ratio(5, 24)
        }
    );
}

#[test]
fn polyhedral_reference_order() {
    for s in ["BT", "BO", "BI"] {
        let a = analysis(s);
        assert!(a.reference_order, "{s}");
        let reference = polyhedral_reference(a.group.spec().unwrap()).unwrap();
        for (irrep, col) in a.irreps.iter().zip(&reference) {
            assert_eq!(irrep.label(), &IrrepLabel::Alpha(col.index));
            assert_eq!(irrep.ccs.rank, col.degree);
            assert_eq!(irrep.ccs.first.first(), col.first.as_ref());
            assert_eq!(irrep.ccs.second, col.second);
        }
    }
}

#[test]
fn product_labels_follow_inner_reference() {
    let a = analysis("BTxC:5");
    assert_eq!(a.irreps.len(), 35);
    assert_eq!(
        a.irreps[0].label(),
        &IrrepLabel::Tensor(Box::new(IrrepLabel::Alpha(1)), 0)
    );
    let natural = a
        .irrep(&IrrepLabel::Tensor(Box::new(IrrepLabel::Alpha(4)), 0))
        .unwrap();
    assert_eq!(natural.irrep.degree, 2);
}

#[test]
fn first_ccs_equals_det_first_ccs() {
    for s in ["BD:3", "BT", "D:2,1", "P:2", "C:8,3"] {
        let a = analysis(s);
        let g = &a.group;
        for irrep in &a.irreps {
            let from_det = first_ccs(&irrep.det, &a.ab, g).unwrap();
            let newton = newton_det(&irrep.irrep.character, g).unwrap();
            assert_eq!(newton, irrep.det, "{s} {}", irrep.label());
            assert_eq!(irrep.ccs.first, from_det);
        }
    }
}

#[test]
fn telescoping_examples() {
    assert!(telescoping_identity_check(10, 3, 1).unwrap());
    assert!(telescoping_identity_check(7, 5, 3).unwrap());
    assert!(telescoping_identity_check(9, 1, 4).unwrap());
    assert!(telescoping_identity_check(6, 2, 6).is_err());
}

#[test]
fn tensor_first_chern() {
    assert!(
        tensor_chern_first_check(&FamilySpec::BinaryTetrahedral, 5, DEFAULT_ELEMENT_CAP).unwrap()
    );
    assert!(
        tensor_chern_first_check(&FamilySpec::BinaryDihedral { q: 3 }, 7, DEFAULT_ELEMENT_CAP)
            .unwrap()
    );
}

#[test]
fn xi_is_additive() {
    let a = analysis("BO");
    let g: &MatGroup = &a.group;
    for x in &a.irreps {
        for y in &a.irreps {
            let sum: Character = x.irrep.character.add(&y.irrep.character).unwrap();
            assert_eq!(xi_tilde(&sum, &a.defects).unwrap(), &x.xi + &y.xi);
        }
    }
    assert_eq!(abelianization(g).unwrap().factors, vec![2]);
}

proptest! {
    #[test]
    fn telescoping_holds(n in 2u64..30, t in 1u64..8, j in 1i64..60) {
        prop_assume!(j % n as i64 != 0);
        prop_assert!(telescoping_identity_check(n, t, j).unwrap());
    }

    #[test]
    fn ratmod1_group_laws(a in -200i64..200, b in 1i64..50, c in -200i64..200, d in 1i64..50) {
        let x = RatMod1::ratio(a, b);
        let y = RatMod1::ratio(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert!(*x.value() >= num_rational::BigRational::from_integer(0.into()));
        prop_assert!(*x.value() < num_rational::BigRational::from_integer(1.into()));
    }
}
