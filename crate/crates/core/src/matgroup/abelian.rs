//! Abelianization `Gamma / [Gamma, Gamma]` with a fixed choice of generators.
//!
//! The quotient is computed from the commutator subgroup and its invariant
//! factors from the Smith normal form of its relation lattice. The generators
//! reported follow a per-family convention:
//!
//! | family        | generators                       |
//! |---------------|----------------------------------|
//! | `C:n,q`       | `x`                              |
//! | `BD:q`, q even| `b`, `c` (orders 2, 2)           |
//! | `BD:q`, q odd | `b` (order 4)                    |
//! | `BT`, `BO`    | `c` (orders 3, 2)                |
//! | `BI`          | none                             |
//! | `D:k,r`       | `x` (order `2^(k+1)`)            |
//! | `P:k`         | `z` (order `3^k`)                |
//! | `<base>xC:l`  | the base generators, then `w`    |
//!
//! Both the convention and the Smith form are checked against each other.

use std::collections::HashMap;

use super::family::FamilySpec;
use super::group::MatGroup;
use super::snf::{invariant_factors, smith_diagonal};
use super::GroupError;

#[derive(Debug, Clone)]
pub struct Abelianization {
    /// Cyclic orders of the chosen generators.
    pub factors: Vec<u64>,
    /// Chosen generators: name and element index.
    pub generators: Vec<(String, usize)>,
    /// Invariant factors from the Smith normal form.
    pub invariant_factors: Vec<u64>,
    pub commutator_order: usize,
    projection: Vec<Vec<u64>>,
}

impl Abelianization {
    /// Exponents of the chosen generators giving the image of `g`.
    pub fn project(&self, g: usize) -> &[u64] {
        &self.projection[g]
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

fn convention(spec: &FamilySpec) -> Vec<&'static str> {
    match spec {
        FamilySpec::Cyclic { n, .. } => {
            if *n > 1 {
                vec!["x"]
            } else {
                vec![]
            }
        }
        FamilySpec::BinaryDihedral { q } if q % 2 == 0 => vec!["b", "c"],
        FamilySpec::BinaryDihedral { .. } => vec!["b"],
        FamilySpec::BinaryTetrahedral | FamilySpec::BinaryOctahedral => vec!["c"],
        FamilySpec::BinaryIcosahedral => vec![],
        FamilySpec::DFamily { .. } => vec!["x"],
        FamilySpec::PPrime { .. } => vec!["z"],
        FamilySpec::Product { inner, .. } => {
            let mut v = convention(inner);
            v.push("w");
            v
        }
    }
}

fn commutator_subgroup(g: &MatGroup) -> Vec<bool> {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for &a in gens {
        for &b in gens {
            let c = g.mul(g.mul(a, b), g.inverse(g.mul(b, a)));
            if c != 0 {
                seeds.push(c);
            }
        }
    }
    loop {
        let members = g.subgroup(&seeds);
        let mut mask = vec![false; g.order()];
        for &m in &members {
            mask[m] = true;
        }
        let missing = members
            .iter()
            .flat_map(|&k| gens.iter().map(move |&s| (k, s)))
            .map(|(k, s)| g.conjugate(k, s))
            .find(|&c| !mask[c]);
        match missing {
            Some(c) => seeds.push(c),
            None => return mask,
        }
    }
}

pub fn abelianization(g: &MatGroup) -> Result<Abelianization, GroupError> {
    let spec = g
        .spec()
        .ok_or_else(|| GroupError::Abelianization("group has no family convention".into()))?;
    let in_k = commutator_subgroup(g);
    let k_members: Vec<usize> = (0..g.order()).filter(|&x| in_k[x]).collect();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &k in &k_members {
            coset_of[g.mul(x, k)] = reps.len();
        }
        reps.push(x);
    }
    let q_order = reps.len();

    // Relation lattice on the construction generators, from a spanning tree of
    // the quotient's Cayley graph.
    let gens = g.generators();
    let mut vec_of: Vec<Option<Vec<i64>>> = vec![None; q_order];
    vec_of[coset_of[0]] = Some(vec![0; gens.len()]);
    let mut queue = vec![coset_of[0]];
    let mut relations = Vec::new();
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        let v = vec_of[u].clone().expect("visited");
        for (gi, &s) in gens.iter().enumerate() {
            let w = coset_of[g.mul(reps[u], s)];
            let mut next = v.clone();
            next[gi] += 1;
            match &vec_of[w] {
                Some(existing) => {
                    relations.push(next.iter().zip(existing).map(|(a, b)| a - b).collect())
                }
                None => {
                    vec_of[w] = Some(next);
                    queue.push(w);
                }
            }
        }
        i += 1;
    }
    let snf: Vec<u64> = smith_diagonal(&relations, gens.len())
        .into_iter()
        .filter(|&d| d > 1)
        .collect();

    let names = convention(spec);
    let mut generators = Vec::new();
    let mut factors = Vec::new();
    for name in names {
        let x = g
            .named_element(name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.into()))?;
        let mut order = 1;
        let mut y = x;
        while coset_of[y] != coset_of[0] {
            y = g.mul(y, x);
            order += 1;
        }
        generators.push((name.to_string(), x));
        factors.push(order);
    }
    if factors.iter().product::<u64>() != q_order as u64 || invariant_factors(&factors) != snf {
        return Err(GroupError::Abelianization(format!(
            "generator convention {factors:?} disagrees with invariant factors {snf:?} of a quotient of order {q_order}"
        )));
    }

    let mut tuple_of: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut tuple = vec![0u64; factors.len()];
    loop {
        let x = generators
            .iter()
            .zip(&tuple)
            .fold(0, |acc, ((_, gen), &e)| g.mul(acc, g.pow(*gen, e as i64)));
        if tuple_of.insert(coset_of[x], tuple.clone()).is_some() {
            return Err(GroupError::Abelianization(
                "chosen generators are not independent".into(),
            ));
        }
        let Some(pos) = (0..tuple.len()).find(|&i| tuple[i] + 1 < factors[i]) else {
            break;
        };
        tuple[pos] += 1;
        for t in tuple.iter_mut().take(pos) {
            *t = 0;
        }
    }
    let projection = (0..g.order())
        .map(|x| tuple_of[&coset_of[x]].clone())
        .collect();
    Ok(Abelianization {
        factors,
        generators,
        invariant_factors: snf,
        commutator_order: k_members.len(),
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_ELEMENT_CAP;

    fn ab(s: &str) -> Abelianization {
        abelianization(&MatGroup::build(&s.parse().unwrap(), DEFAULT_ELEMENT_CAP).unwrap()).unwrap()
    }

    #[test]
    fn family_abelianizations() {
        assert_eq!(ab("BD:2").factors, vec![2, 2]);
        assert_eq!(ab("BD:3").factors, vec![4]);
        assert_eq!(ab("BT").factors, vec![3]);
        assert_eq!(ab("BO").factors, vec![2]);
        assert!(ab("BI").factors.is_empty());
        assert_eq!(ab("D:2,2").factors, vec![8]);
        assert_eq!(ab("P:2").factors, vec![9]);
        assert_eq!(ab("BTxC:5").factors, vec![3, 5]);
        assert_eq!(ab("BTxC:5").invariant_factors, vec![15]);
        assert_eq!(ab("C:7,3").factors, vec![7]);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = MatGroup::build(&"BD:4".parse().unwrap(), DEFAULT_ELEMENT_CAP).unwrap();
        let a = abelianization(&g).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let sum: Vec<u64> = a
                    .project(x)
                    .iter()
                    .zip(a.project(y))
                    .zip(&a.factors)
                    .map(|((p, q), l)| (p + q) % l)
                    .collect();
                assert_eq!(a.project(g.mul(x, y)), sum.as_slice());
            }
        }
    }
}
