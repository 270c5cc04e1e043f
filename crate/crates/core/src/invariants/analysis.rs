//! All invariants of one group, computed once.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;

use super::{
    ccs_vector, polyhedral_reference, spin_sqrt_character, xi_tilde_raw, CcsVector, DefectTable,
    InvariantError, RatMod1, SpinOverride, SpinSqrt,
};
use crate::matgroup::{abelianization, Abelianization, FamilySpec, MatGroup};
use crate::reptheory::{det_character, irrep_catalog, Character, Irrep, IrrepLabel};

#[derive(Debug, Clone)]
pub struct AnalyzedIrrep {
    pub irrep: Irrep,
    pub det: Character,
    /// The exact defect sum before reduction modulo 1.
    pub xi_raw: BigRational,
    pub xi: RatMod1,
    pub ccs: CcsVector,
}

impl AnalyzedIrrep {
    pub fn label(&self) -> &IrrepLabel {
        &self.irrep.label
    }
}

/// Group, abelianization, spin character, defects and the analysed catalog.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub group: Arc<MatGroup>,
    pub ab: Abelianization,
    pub spin: SpinSqrt,
    pub defects: DefectTable,
    pub irreps: Vec<AnalyzedIrrep>,
    /// False when a binary polyhedral catalog could not be matched to the
    /// reference order and keeps provisional labels.
    pub reference_order: bool,
}

impl Analysis {
    pub fn build(
        spec: &FamilySpec,
        cap: usize,
        over: Option<&SpinOverride>,
    ) -> Result<Analysis, InvariantError> {
        Analysis::new(Arc::new(MatGroup::build(spec, cap)?), over)
    }

    pub fn new(
        group: Arc<MatGroup>,
        over: Option<&SpinOverride>,
    ) -> Result<Analysis, InvariantError> {
        let g = &*group;
        let ab = abelianization(g)?;
        let spin = spin_sqrt_character(g, &ab, over)?;
        let defects = DefectTable::new(g, &spin)?;
        let catalog = irrep_catalog(g)?;
        let mut irreps = catalog
            .into_par_iter()
            .map(|irrep| {
                let det = det_character(&irrep, g)?;
                let xi_raw = xi_tilde_raw(&irrep.character, &defects)?;
                let ccs = ccs_vector(&irrep, &det, g, &ab, &defects)?;
                Ok(AnalyzedIrrep {
                    xi: RatMod1::new(&xi_raw),
                    xi_raw,
                    det,
                    ccs,
                    irrep,
                })
            })
            .collect::<Result<Vec<_>, InvariantError>>()?;
        let spec = g.spec().cloned().expect("family group");
        let mut reference_order = true;
        if let Some(reference) = polyhedral_reference(&spec) {
            match reference_labels(&irreps, &reference) {
                Some(map) => relabel(&mut irreps, |l| map.get(l).cloned()),
                None => reference_order = false,
            }
        } else if let FamilySpec::Product { inner, .. } = &spec {
            if polyhedral_reference(inner).is_some() {
                let inner_analysis =
                    Analysis::new(g.product_info().expect("product group").inner.clone(), None)?;
                reference_order = inner_analysis.reference_order;
                let map = inner_analysis.provisional_map();
                relabel(&mut irreps, |l| match l {
                    IrrepLabel::Tensor(inner, a) => map
                        .get(inner)
                        .map(|m| IrrepLabel::Tensor(Box::new(m.clone()), *a)),
                    _ => None,
                });
            }
        }
        Ok(Analysis {
            group,
            ab,
            spin,
            defects,
            irreps,
            reference_order,
        })
    }

    pub fn group(&self) -> &MatGroup {
        &self.group
    }

    pub fn irrep(&self, label: &IrrepLabel) -> Option<&AnalyzedIrrep> {
        self.irreps.iter().find(|i| i.label() == label)
    }

    /// `|G| * xi`. For the D family this is the unreduced sum, whose sign
    /// matches the published tables; elsewhere `xi` is taken in `[0, 1)`.
    pub fn scaled_xi(&self, irrep: &AnalyzedIrrep) -> BigRational {
        let xi = match self.group.spec().map(FamilySpec::inner) {
            Some(FamilySpec::DFamily { .. }) => irrep.xi_raw.clone(),
            _ => irrep.xi.value().clone(),
        };
        xi * BigRational::from_integer(self.group.order().into())
    }

    /// Catalog position `j` (as in `chi_j`) to final label.
    fn provisional_map(&self) -> HashMap<IrrepLabel, IrrepLabel> {
        let catalog = irrep_catalog(&self.group).expect("catalog already computed");
        catalog
            .into_iter()
            .filter_map(|i| {
                self.irreps
                    .iter()
                    .find(|a| a.irrep.character == i.character)
                    .map(|a| (i.label, a.label().clone()))
            })
            .collect()
    }
}

fn relabel(irreps: &mut [AnalyzedIrrep], f: impl Fn(&IrrepLabel) -> Option<IrrepLabel>) {
    for i in irreps.iter_mut() {
        if let Some(l) = f(&i.irrep.label) {
            i.irrep.label = l;
        }
    }
    irreps.sort_by(|a, b| a.irrep.label.cmp(&b.irrep.label));
}

/// Match each computed key to a reference column; `None` unless the keys
/// agree as multisets.
fn reference_labels(
    irreps: &[AnalyzedIrrep],
    reference: &[super::ReferenceColumn],
) -> Option<HashMap<IrrepLabel, IrrepLabel>> {
    if irreps.len() != reference.len() {
        return None;
    }
    let mut used = vec![false; reference.len()];
    let mut map = HashMap::new();
    for a in irreps {
        let pos = reference.iter().enumerate().position(|(j, col)| {
            !used[j]
                && col.degree == a.ccs.rank
                && col.first.as_ref() == a.ccs.first.first()
                && col.second == a.ccs.second
        })?;
        used[pos] = true;
        map.insert(a.label().clone(), IrrepLabel::Alpha(reference[pos].index));
    }
    Some(map)
}
