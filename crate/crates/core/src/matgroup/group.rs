//! Finite matrix groups enumerated by breadth-first closure.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::family::FamilySpec;
use super::matrix::{eta, iota, omega, phi, psi, sigma, tau, Matrix};
use super::GroupError;
use crate::cyclo::Cyc;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Conjugacy classes, sorted by (size, smallest element index). The identity
/// class is always first.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }
}

/// How a product `Gamma x C_l` splits: for each element, its `Gamma` part
/// (an index into the inner group) and the exponent of `w = phi_l`.
#[derive(Debug, Clone)]
pub struct ProductInfo {
    pub inner: Arc<MatGroup>,
    pub l: u64,
    pub inner_of: Vec<usize>,
    pub cyc_of: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct MatGroup {
    id: u64,
    spec: Option<FamilySpec>,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    gens: Vec<usize>,
    words: Vec<Vec<u16>>,
    rmul: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    orders: Vec<u64>,
    named: Vec<(String, usize)>,
    classes: ConjugacyClasses,
    product: Option<ProductInfo>,
}

impl MatGroup {
    /// Enumerate the group generated by unitary matrices.
    pub fn from_generators(gens: &[Matrix], cap: usize) -> Result<MatGroup, GroupError> {
        let dim = gens.first().map(Matrix::dim).unwrap_or(2);
        for g in gens {
            if g.dim() != dim || !g.is_unitary() {
                return Err(GroupError::NotUnitary(format!("{g:?}")));
            }
        }
        let mut elements = vec![Matrix::identity(dim)];
        let mut index = HashMap::from([(elements[0].clone(), 0usize)]);
        let mut words: Vec<Vec<u16>> = vec![Vec::new()];
        let mut rmul: Vec<Vec<u32>> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let m = elements[i].mul(g);
                let idx = match index.get(&m) {
                    Some(&idx) => idx,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::GroupTooLarge { cap });
                        }
                        let idx = elements.len();
                        let mut w = words[i].clone();
                        w.push(gi as u16);
                        words.push(w);
                        index.insert(m.clone(), idx);
                        elements.push(m);
                        idx
                    }
                };
                row.push(idx as u32);
            }
            rmul.push(row);
            i += 1;
        }
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        let inverse = elements
            .iter()
            .map(|m| index[&m.conj_transpose()])
            .collect();
        let mut group = MatGroup {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            spec: None,
            elements,
            index,
            gens: gen_idx,
            words,
            rmul,
            inverse,
            orders: Vec::new(),
            named: Vec::new(),
            classes: ConjugacyClasses {
                classes: Vec::new(),
                class_of: Vec::new(),
            },
            product: None,
        };
        group.orders = (0..group.order())
            .map(|g| group.element_order_slow(g))
            .collect();
        group.classes = group.compute_classes();
        Ok(group)
    }

    /// Build the group of a family, with its presentation generators named.
    pub fn build(spec: &FamilySpec, cap: usize) -> Result<MatGroup, GroupError> {
        spec.validate()?;
        let mut group = match spec {
            FamilySpec::Product { inner, l } => MatGroup::product_group(inner, *l, cap)?,
            _ => {
                let group = MatGroup::from_generators(&family_generators(spec), cap)?;
                if group.order() as u64 != spec.order() {
                    return Err(GroupError::OrderMismatch {
                        expected: spec.order(),
                        found: group.order() as u64,
                    });
                }
                group
            }
        };
        group.spec = Some(spec.clone());
        group.name_family_generators(spec)?;
        Ok(group)
    }

    /// `inner x C_l` with `C_l` acting by scalars, without asking for a free
    /// action. Fails unless the scalars meet `inner` only in the identity.
    pub fn build_direct_product(
        inner: &FamilySpec,
        l: u64,
        cap: usize,
    ) -> Result<MatGroup, GroupError> {
        let spec = FamilySpec::Product {
            inner: Box::new(inner.clone()),
            l,
        };
        if matches!(inner, FamilySpec::Product { .. }) || l < 2 {
            return Err(GroupError::InvalidSpec(format!("{spec} is not supported")));
        }
        let mut group = MatGroup::product_group(inner, l, cap)?;
        group.spec = Some(spec.clone());
        group.name_family_generators(&spec)?;
        Ok(group)
    }

    fn product_group(inner: &FamilySpec, l: u64, cap: usize) -> Result<MatGroup, GroupError> {
        let inner = Arc::new(MatGroup::build(inner, cap)?);
        let mut gens: Vec<Matrix> = inner
            .gens
            .iter()
            .map(|&g| inner.elements[g].clone())
            .collect();
        gens.push(phi(l));
        let mut group = MatGroup::from_generators(&gens, cap)?;
        group.attach_product(inner, l)?;
        Ok(group)
    }

    fn attach_product(&mut self, inner: Arc<MatGroup>, l: u64) -> Result<(), GroupError> {
        let mut inner_of = Vec::with_capacity(self.order());
        let mut cyc_of = Vec::with_capacity(self.order());
        for m in &self.elements {
            let found = (0..l).find_map(|j| {
                let stripped = m.scale(&Cyc::root_of_unity(l, -(j as i64)));
                inner.index.get(&stripped).map(|&idx| (idx, j))
            });
            let (idx, j) =
                found.ok_or_else(|| GroupError::InvalidSpec("product does not split".into()))?;
            inner_of.push(idx);
            cyc_of.push(j);
        }
        if self.order() != inner.order() * l as usize {
            return Err(GroupError::OrderMismatch {
                expected: inner.order() as u64 * l,
                found: self.order() as u64,
            });
        }
        self.product = Some(ProductInfo {
            inner,
            l,
            inner_of,
            cyc_of,
        });
        Ok(())
    }

    fn name_family_generators(&mut self, spec: &FamilySpec) -> Result<(), GroupError> {
        let g = |i: usize| self.gens[i];
        let named: Vec<(&str, usize)> = match spec {
            FamilySpec::Cyclic { .. } => vec![("x", g(0))],
            FamilySpec::BinaryDihedral { .. } => vec![("b", g(0)), ("c", g(1))],
            FamilySpec::BinaryTetrahedral => self.polyhedral_pair(3)?,
            FamilySpec::BinaryOctahedral => self.polyhedral_pair(4)?,
            FamilySpec::BinaryIcosahedral => self.polyhedral_pair(5)?,
            FamilySpec::DFamily { .. } => vec![("x", g(0)), ("y", g(1))],
            FamilySpec::PPrime { .. } => {
                vec![
                    ("x", self.inverse[g(1)]),
                    ("y", self.inverse[g(0)]),
                    ("z", self.mul(g(2), g(2))),
                ]
            }
            FamilySpec::Product { l, .. } => {
                let info = self.product.as_ref().expect("product info");
                let mut named = Vec::new();
                for (name, idx) in &info.inner.named {
                    named.push((name.as_str(), self.index[&info.inner.elements[*idx]]));
                }
                named.push(("w", self.index[&phi(*l)]));
                self.named = named.into_iter().map(|(n, i)| (n.to_string(), i)).collect();
                return Ok(());
            }
        };
        self.named = named.into_iter().map(|(n, i)| (n.to_string(), i)).collect();
        Ok(())
    }

    /// Elements `b, c` with `(bc)^2 = b^3 = c^n = -I` generating the group.
    fn polyhedral_pair(&self, n: u64) -> Result<Vec<(&'static str, usize)>, GroupError> {
        let minus = self.index[&Matrix::scalar(2, Cyc::from_int(-1))];
        for c in 0..self.order() {
            if self.orders[c] != 2 * n || self.pow(c, n as i64) != minus {
                continue;
            }
            for b in 0..self.order() {
                if self.orders[b] != 6 || self.pow(b, 3) != minus {
                    continue;
                }
                let bc = self.mul(b, c);
                if self.mul(bc, bc) == minus && self.subgroup(&[b, c]).len() == self.order() {
                    return Ok(vec![("b", b), ("c", c)]);
                }
            }
        }
        Err(GroupError::InvalidSpec(format!(
            "no <2,3,{n}> generators found"
        )))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn spec(&self) -> Option<&FamilySpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &Matrix {
        &self.elements[g]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Construction-generator word of an element, as generator positions.
    pub fn word(&self, g: usize) -> &[u16] {
        &self.words[g]
    }

    pub fn named(&self) -> &[(String, usize)] {
        &self.named
    }

    pub fn named_element(&self, name: &str) -> Option<usize> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, i)| *i)
    }

    /// Give an element a name usable in presentation words.
    pub fn set_name(&mut self, name: &str, g: usize) {
        self.named.retain(|(n, _)| n != name);
        self.named.push((name.to_string(), g));
    }

    pub fn product_info(&self) -> Option<&ProductInfo> {
        self.product.as_ref()
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.words[b]
            .iter()
            .fold(a, |x, &gi| self.rmul[x][gi as usize] as usize)
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let ord = self.orders[g] as i64;
        let k = k.rem_euclid(ord);
        (0..k).fold(0, |x, _| self.mul(x, g))
    }

    fn element_order_slow(&self, g: usize) -> u64 {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inverse[by])
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            for &s in gens {
                let m = self.mul(members[i], s);
                if !seen[m] {
                    seen[m] = true;
                    members.push(m);
                }
            }
            i += 1;
        }
        members
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[g] = c;
            let mut members = vec![g];
            let mut i = 0;
            while i < members.len() {
                for &s in &self.gens {
                    let h = self.conjugate(members[i], s);
                    if class_of[h] == usize::MAX {
                        class_of[h] = c;
                        members.push(h);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        for (c, members) in classes.iter().enumerate() {
            for &g in members {
                class_of[g] = c;
            }
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Class of `g^k` for a class representative `g`.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        self.classes.class_of[self.pow(self.classes.representative(class), k)]
    }
}

/// Conjugacy classes of a group.
pub fn conjugacy_classes(g: &MatGroup) -> &ConjugacyClasses {
    g.classes()
}

fn family_generators(spec: &FamilySpec) -> Vec<Matrix> {
    match spec {
        FamilySpec::Cyclic { n, q } => {
            vec![Matrix::diag(vec![
                Cyc::root_of_unity(*n, 1),
                Cyc::root_of_unity(*n, *q as i64),
            ])]
        }
        FamilySpec::BinaryDihedral { q } => vec![sigma().scale(&Cyc::from_int(-1)), psi(2 * q)],
        FamilySpec::BinaryTetrahedral => vec![psi(4), tau(), eta()],
        FamilySpec::BinaryOctahedral => vec![psi(8), tau(), eta()],
        FamilySpec::BinaryIcosahedral => vec![sigma(), omega(), iota()],
        FamilySpec::DFamily { k, r } => vec![tau().mul(&phi(1 << (k + 1))), psi(2 * r + 1)],
        FamilySpec::PPrime { k } => vec![psi(4), tau(), eta().mul(&phi(2 * 3u64.pow(*k)))],
        FamilySpec::Product { .. } => unreachable!("products are built from their inner group"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> MatGroup {
        MatGroup::build(&s.parse().unwrap(), DEFAULT_ELEMENT_CAP).unwrap()
    }

    #[test]
    fn orders() {
        for (s, n) in [
            ("C:5,2", 5),
            ("BD:2", 8),
            ("BD:3", 12),
            ("BT", 24),
            ("BO", 48),
            ("BI", 120),
            ("D:2,1", 24),
            ("P:2", 72),
            ("BTxC:5", 120),
        ] {
            assert_eq!(build(s).order(), n, "{s}");
        }
    }

    #[test]
    fn quaternion_classes() {
        let g = build("BD:2");
        let sizes: Vec<usize> = g.classes().classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_counts() {
        assert_eq!(build("BT").classes().len(), 7);
        assert_eq!(build("BO").classes().len(), 8);
        assert_eq!(build("BI").classes().len(), 9);
    }

    #[test]
    fn cap_is_enforced() {
        let err = MatGroup::build(&"BI".parse().unwrap(), 50).unwrap_err();
        assert!(matches!(err, GroupError::GroupTooLarge { cap: 50 }));
    }

    #[test]
    fn polyhedral_generators_satisfy_relations() {
        for (s, n) in [("BT", 3), ("BO", 4), ("BI", 5)] {
            let g = build(s);
            let b = g.named_element("b").unwrap();
            let c = g.named_element("c").unwrap();
            assert_eq!(g.element_order(c), 2 * n);
            assert_eq!(g.pow(b, 3), g.pow(c, n as i64));
        }
    }
}
