//! Irreducible characters from tensor products (Burnside-Brauer).
//!
//! Starting from seed characters, each product of two known irreducibles and
//! each Galois conjugate is stripped of its known constituents by inner
//! products. A residual of norm one and positive degree is a new irreducible.
//! The search stops once the squared degrees add up to the group order.

use super::{inner_product, Character, RepError};
use crate::cyclo::gcd;
use crate::matgroup::MatGroup;

/// Largest degree accepted for a new irreducible.
pub const MAX_DEGREE: u64 = 12;

struct Search<'a> {
    g: &'a MatGroup,
    known: Vec<Character>,
    covered: u64,
}

impl Search<'_> {
    fn offer(&mut self, chi: &Character) -> Result<(), RepError> {
        let mut residual = chi.clone();
        for k in &self.known {
            let m = inner_product(chi, k, self.g)?;
            if !m.is_zero() {
                residual = residual.sub(&k.scale(&m))?;
            }
        }
        if residual.is_zero() {
            return Ok(());
        }
        let norm = inner_product(&residual, &residual, self.g)?;
        let degree = residual.degree();
        if norm.is_one() {
            if let Some(d) = degree.filter(|&d| d > 0) {
                if d > MAX_DEGREE {
                    return Err(RepError::DegreeBound(d));
                }
                self.covered += d * d;
                self.known.push(residual.clone());
                self.offer_conjugates(&residual)?;
            }
        }
        Ok(())
    }

    fn offer_conjugates(&mut self, chi: &Character) -> Result<(), RepError> {
        let n = chi.conductor();
        for a in 2..n {
            if gcd(a, n) == 1 {
                let conj = chi.galois(a as i64)?;
                if !self.known.contains(&conj) {
                    self.offer(&conj)?;
                }
            }
        }
        Ok(())
    }

    fn complete(&self) -> bool {
        self.covered == self.g.order() as u64
    }
}

/// All irreducible characters, ordered by degree and then discovery.
pub fn burnside_brauer(g: &MatGroup, seeds: &[Character]) -> Result<Vec<Character>, RepError> {
    let mut search = Search {
        g,
        known: Vec::new(),
        covered: 0,
    };
    search.offer(&Character::trivial(g))?;
    for s in seeds {
        search.offer(s)?;
    }
    let mut i = 0;
    while !search.complete() && i < search.known.len() {
        for j in 0..=i {
            if search.complete() {
                break;
            }
            let product = search.known[i].tensor(&search.known[j])?;
            search.offer(&product)?;
        }
        i += 1;
    }
    if !search.complete() {
        return Err(RepError::IncompleteCatalog {
            found: search.covered,
            order: g.order() as u64,
        });
    }
    let mut known = search.known;
    known.sort_by_key(|c| c.degree().unwrap_or(0));
    Ok(known)
}
