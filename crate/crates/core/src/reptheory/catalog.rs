//! Catalogs of irreducible representations for each family.

use super::{burnside_brauer, inner_product, Character, Irrep, IrrepLabel, RepError};
use crate::cyclo::Cyc;
use crate::matgroup::{abelianization, FamilySpec, MatGroup, Matrix};

pub type Catalog = Vec<Irrep>;

fn z(n: u64, e: i64) -> Cyc {
    Cyc::root_of_unity(n, e)
}

fn int(v: i64) -> Cyc {
    Cyc::from_int(v)
}

fn m1(c: Cyc) -> Matrix {
    Matrix::diag(vec![c])
}

fn m2(a: Cyc, b: Cyc, c: Cyc, d: Cyc) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

fn m3(rows: [[i64; 3]; 3]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    )
}

/// Extend generator images to every element along a spanning tree of the
/// Cayley graph, checking every edge so that the result is a homomorphism.
fn extend(
    g: &MatGroup,
    gens: &[(usize, Matrix)],
    label: &IrrepLabel,
) -> Result<Vec<Matrix>, RepError> {
    let dim = gens[0].1.dim();
    let mut images: Vec<Option<Matrix>> = vec![None; g.order()];
    images[0] = Some(Matrix::identity(dim));
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, m) in gens {
            let y = g.mul(x, *s);
            let candidate = images[x].as_ref().expect("visited").mul(m);
            match &images[y] {
                Some(existing) if *existing != candidate => {
                    return Err(RepError::NotAHomomorphism(label.to_string()))
                }
                Some(_) => {}
                None => {
                    images[y] = Some(candidate);
                    queue.push(y);
                }
            }
        }
        i += 1;
    }
    images
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| RepError::NotAHomomorphism(label.to_string()))
}

fn explicit(
    g: &MatGroup,
    reps: Vec<(IrrepLabel, Vec<(&str, Matrix)>)>,
) -> Result<Catalog, RepError> {
    let classes = g.classes();
    reps.into_iter()
        .map(|(label, gens)| {
            let gens = gens
                .into_iter()
                .map(|(name, m)| {
                    Ok((
                        g.named_element(name)
                            .ok_or_else(|| RepError::NotAHomomorphism(label.to_string()))?,
                        m,
                    ))
                })
                .collect::<Result<Vec<_>, RepError>>()?;
            let images = extend(g, &gens, &label)?;
            let character =
                Character::from_class_fn(g, |c| images[classes.representative(c)].trace());
            Ok(Irrep {
                degree: gens[0].1.dim() as u64,
                label,
                character,
                images: Some(images),
            })
        })
        .collect()
}

fn binary_dihedral(q: u64) -> Vec<(IrrepLabel, Vec<(&'static str, Matrix)>)> {
    let ones: [(i64, i64); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let mut reps: Vec<(IrrepLabel, Vec<(&str, Matrix)>)> = if q.is_multiple_of(2) {
        ones.iter()
            .enumerate()
            .map(|(j, &(b, c))| {
                (
                    IrrepLabel::Alpha(j as u64),
                    vec![("b", m1(z(2, b))), ("c", m1(z(2, c)))],
                )
            })
            .collect()
    } else {
        [(0, 0), (1, 2), (2, 0), (3, 2)]
            .iter()
            .enumerate()
            .map(|(j, &(b, c))| {
                (
                    IrrepLabel::Alpha(j as u64),
                    vec![("b", m1(z(4, b))), ("c", m1(z(4, c)))],
                )
            })
            .collect()
    };
    for t in 1..q {
        let b = m2(
            Cyc::zero(),
            Cyc::one(),
            int(if t % 2 == 0 { 1 } else { -1 }),
            Cyc::zero(),
        );
        let c = Matrix::diag(vec![z(2 * q, t as i64), z(2 * q, -(t as i64))]);
        reps.push((IrrepLabel::Rho(t), vec![("b", b), ("c", c)]));
    }
    reps
}

fn d_family(k: u32, r: u64) -> Vec<(IrrepLabel, Vec<(&'static str, Matrix)>)> {
    let n = 1u64 << (k + 1);
    let q = 2 * r + 1;
    let mut reps: Vec<(IrrepLabel, Vec<(&str, Matrix)>)> = (0..n)
        .map(|j| {
            (
                IrrepLabel::Alpha(j),
                vec![("x", m1(z(n, j as i64))), ("y", m1(Cyc::one()))],
            )
        })
        .collect();
    for t in 1..=2 * r {
        for s in 0..(1u64 << (k - 1)) {
            let sign = int(if t % 2 == 0 { 1 } else { -1 });
            let x = m2(Cyc::zero(), Cyc::one(), sign, Cyc::zero()).scale(&z(n, s as i64));
            let y = Matrix::diag(vec![z(q, t as i64), z(q, -(t as i64))]);
            reps.push((IrrepLabel::RhoTS { t, s }, vec![("x", x), ("y", y)]));
        }
    }
    reps
}

fn p_prime(k: u32) -> Vec<(IrrepLabel, Vec<(&'static str, Matrix)>)> {
    let n = 3u64.pow(k);
    let w = |e: i64| z(3, e);
    let one = || m1(Cyc::one());
    let mut reps: Vec<(IrrepLabel, Vec<(&str, Matrix)>)> = (0..n)
        .map(|j| {
            (
                IrrepLabel::Alpha(j),
                vec![("x", one()), ("y", one()), ("z", m1(z(n, j as i64)))],
            )
        })
        .collect();
    for s in 0..n {
        let x = m2(Cyc::zero(), w(2), -w(1), Cyc::zero());
        let y = m2(w(2), Cyc::one(), w(2), -w(2));
        let zz = m2(Cyc::zero(), w(1), -w(2), int(-1)).scale(&z(n, s as i64));
        reps.push((IrrepLabel::PRho(s), vec![("x", x), ("y", y), ("z", zz)]));
    }
    for s in 0..n / 3 {
        let x = m3([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]);
        let y = m3([[0, 0, 1], [-1, -1, -1], [1, 0, 0]]);
        let zz = m3([[-1, -1, -1], [0, 1, 0], [1, 0, 0]]).scale(&z(n, s as i64));
        reps.push((IrrepLabel::PSigma(s), vec![("x", x), ("y", y), ("z", zz)]));
    }
    reps
}

/// Degree-one characters of the group, from its abelianization, in
/// lexicographic order of the exponents on the chosen generators.
pub fn linear_characters(g: &MatGroup) -> Result<Vec<Character>, RepError> {
    let ab = abelianization(g)?;
    let classes = g.classes();
    let mut out = Vec::new();
    let mut a = vec![0u64; ab.factors.len()];
    loop {
        out.push(Character::from_class_fn(g, |c| {
            let p = ab.project(classes.representative(c));
            ab.factors
                .iter()
                .zip(&a)
                .zip(p)
                .fold(Cyc::one(), |acc, ((&l, &ai), &pi)| {
                    &acc * &z(l, (ai * pi) as i64)
                })
        }));
        let Some(pos) = (0..a.len()).rev().find(|&i| a[i] + 1 < ab.factors[i]) else {
            break;
        };
        a[pos] += 1;
        for x in a.iter_mut().skip(pos + 1) {
            *x = 0;
        }
    }
    Ok(out)
}

fn polyhedral(g: &MatGroup) -> Result<Catalog, RepError> {
    let mut seeds = linear_characters(g)?;
    seeds.push(Character::natural(g));
    let chars = burnside_brauer(g, &seeds)?;
    Ok(chars
        .into_iter()
        .enumerate()
        .map(|(j, character)| Irrep {
            label: IrrepLabel::Provisional(j as u64 + 1),
            degree: character.degree().unwrap_or(0),
            character,
            images: None,
        })
        .collect())
}

fn product(g: &MatGroup) -> Result<Catalog, RepError> {
    let info = g.product_info().expect("product group");
    let inner = &info.inner;
    let inner_catalog = irrep_catalog(inner)?;
    let classes = g.classes();
    let l = info.l;
    let mut out = Vec::new();
    for irrep in &inner_catalog {
        for a in 0..l {
            let character = Character::from_class_fn(g, |c| {
                let x = classes.representative(c);
                let ic = inner.classes().class_of[info.inner_of[x]];
                irrep.character.value(ic) * &z(l, (a * info.cyc_of[x]) as i64)
            });
            let images = irrep.images.as_ref().map(|imgs| {
                (0..g.order())
                    .map(|x| imgs[info.inner_of[x]].scale(&z(l, (a * info.cyc_of[x]) as i64)))
                    .collect()
            });
            out.push(Irrep {
                label: IrrepLabel::Tensor(Box::new(irrep.label.clone()), a),
                degree: irrep.degree,
                character,
                images,
            });
        }
    }
    Ok(out)
}

/// The irreducible representations of a family group.
pub fn irrep_catalog(g: &MatGroup) -> Result<Catalog, RepError> {
    let spec = g.spec().ok_or_else(|| {
        RepError::Group(crate::matgroup::GroupError::InvalidSpec(
            "group has no family".into(),
        ))
    })?;
    match spec {
        FamilySpec::Cyclic { n, .. } => explicit(
            g,
            (0..*n)
                .map(|j| (IrrepLabel::Alpha(j), vec![("x", m1(z(*n, j as i64)))]))
                .collect(),
        ),
        FamilySpec::BinaryDihedral { q } => explicit(g, binary_dihedral(*q)),
        FamilySpec::DFamily { k, r } => explicit(g, d_family(*k, *r)),
        FamilySpec::PPrime { k } => explicit(g, p_prime(*k)),
        FamilySpec::BinaryTetrahedral
        | FamilySpec::BinaryOctahedral
        | FamilySpec::BinaryIcosahedral => polyhedral(g),
        FamilySpec::Product { .. } => product(g),
    }
}

/// Check that a catalog is the full set of irreducible characters: one per
/// class, squared degrees summing to the order, and orthonormal.
pub fn verify_catalog(g: &MatGroup, catalog: &[Irrep]) -> Result<bool, RepError> {
    if catalog.len() != g.classes().len() {
        return Ok(false);
    }
    if catalog.iter().map(|i| i.degree * i.degree).sum::<u64>() != g.order() as u64 {
        return Ok(false);
    }
    for (i, a) in catalog.iter().enumerate() {
        for b in &catalog[i..] {
            let ip = inner_product(&a.character, &b.character, g)?;
            let expected = if std::ptr::eq(a, b) {
                Cyc::one()
            } else {
                Cyc::zero()
            };
            if ip != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_ELEMENT_CAP;

    fn group(s: &str) -> MatGroup {
        MatGroup::build(&s.parse().unwrap(), DEFAULT_ELEMENT_CAP).unwrap()
    }

    #[test]
    fn catalogs_are_complete() {
        for s in [
            "C:5,2",
            "BD:2",
            "BD:3",
            "BT",
            "BO",
            "BI",
            "D:2,1",
            "D:2,2",
            "P:2",
            "BTxC:5",
            "D:2,1xC:5",
        ] {
            let g = group(s);
            let cat = irrep_catalog(&g).unwrap();
            assert!(verify_catalog(&g, &cat).unwrap(), "{s}");
        }
    }

    #[test]
    fn binary_polyhedral_degrees() {
        let degrees = |s: &str| {
            irrep_catalog(&group(s))
                .unwrap()
                .iter()
                .map(|i| i.degree)
                .collect::<Vec<_>>()
        };
        assert_eq!(degrees("BT"), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(degrees("BO"), vec![1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(degrees("BI"), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    }
}
