//! Square root of the determinant of the natural representation.
//!
//! The branch of `sqrt(det g)` in the defect is a degree-one character `s`
//! with `s^2 = det`. Among all such characters the one with the
//! lexicographically smallest exponents on the abelianization generators is
//! chosen; inside `SU(2)` this is the trivial character.

use std::fmt;
use std::str::FromStr;

use super::InvariantError;
use crate::cyclo::Cyc;
use crate::matgroup::{Abelianization, MatGroup};
use crate::reptheory::Character;

/// Fixed values `gen = z_n^a` for some abelianization generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpinOverride(pub Vec<(String, u64, u64)>);

impl FromStr for SpinOverride {
    type Err = InvariantError;

    /// `x=1/8,w=1/5` sets `s(x) = z_8` and `s(w) = z_5`.
    fn from_str(s: &str) -> Result<SpinOverride, InvariantError> {
        let err = || InvariantError::Parse(s.to_string());
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|part| {
                let (name, value) = part.split_once('=').ok_or_else(err)?;
                let (a, n) = value.split_once('/').ok_or_else(err)?;
                let a: u64 = a.trim().parse().map_err(|_| err())?;
                let n: u64 = n.trim().parse().map_err(|_| err())?;
                if n == 0 {
                    return Err(err());
                }
                Ok((name.trim().to_string(), a % n, n))
            })
            .collect::<Result<_, _>>()
            .map(SpinOverride)
    }
}

impl fmt::Display for SpinOverride {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, a, n)| format!("{g}={a}/{n}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The chosen square-root character and every alternative.
#[derive(Debug, Clone)]
pub struct SpinSqrt {
    pub character: Character,
    /// Exponents of `s` on the abelianization generators: `s(g_i) = z_{f_i}^{e_i}`.
    pub exponents: Vec<u64>,
    pub candidates: Vec<Vec<u64>>,
}

pub(crate) fn linear_character(g: &MatGroup, ab: &Abelianization, exponents: &[u64]) -> Character {
    let classes = g.classes();
    Character::from_class_fn(g, |c| {
        let p = ab.project(classes.representative(c));
        ab.factors
            .iter()
            .zip(exponents)
            .zip(p)
            .fold(Cyc::one(), |acc, ((&f, &e), &pi)| {
                &acc * &Cyc::root_of_unity(f, (e * pi) as i64)
            })
    })
}

fn all_exponents(factors: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &f in factors {
        out = out
            .into_iter()
            .flat_map(|v| (0..f).map(move |e| [v.clone(), vec![e]].concat()))
            .collect();
    }
    out
}

/// Select `s` with `s^2 = det` on the natural representation, honouring an
/// optional override.
pub fn spin_sqrt_character(
    g: &MatGroup,
    ab: &Abelianization,
    over: Option<&SpinOverride>,
) -> Result<SpinSqrt, InvariantError> {
    let classes = g.classes();
    let det: Vec<Cyc> = (0..classes.len())
        .map(|c| g.element(classes.representative(c)).det())
        .collect();
    let candidates: Vec<Vec<u64>> = all_exponents(&ab.factors)
        .into_iter()
        .filter(|e| {
            let s = linear_character(g, ab, e);
            s.values().iter().zip(&det).all(|(v, d)| &(v * v) == d)
        })
        .collect();
    if candidates.is_empty() {
        return Err(InvariantError::NoSpinCharacter(
            g.spec().map(|s| s.to_string()).unwrap_or_default(),
        ));
    }
    let wanted = |e: &Vec<u64>| -> Result<bool, InvariantError> {
        match over {
            None => Ok(true),
            Some(o) => o.0.iter().try_fold(true, |ok, (name, a, n)| {
                let i = ab
                    .generators
                    .iter()
                    .position(|(gn, _)| gn == name)
                    .ok_or_else(|| {
                        InvariantError::NoSpinCharacter(format!("unknown generator {name}"))
                    })?;
                Ok(ok
                    && Cyc::root_of_unity(ab.factors[i], e[i] as i64)
                        == Cyc::root_of_unity(*n, *a as i64))
            }),
        }
    };
    let mut chosen = None;
    for e in &candidates {
        if wanted(e)? {
            chosen = Some(e.clone());
            break;
        }
    }
    let exponents = chosen.ok_or_else(|| {
        InvariantError::NoSpinCharacter(format!(
            "override {} is not a square root of det",
            over.map(|o| o.to_string()).unwrap_or_default()
        ))
    })?;
    Ok(SpinSqrt {
        character: linear_character(g, ab, &exponents),
        exponents,
        candidates,
    })
}
