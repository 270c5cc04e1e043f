//! Text and JSON forms of [`Cyc`].
//!
//! Text: `c0 + c1*z(N)^e1 - c2*z(N)^e2`, coefficients `p` or `p/q`.
//! JSON: `{"conductor": N, "terms": [[e, "p/q"], ...]}`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Cyc, CycError};

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q = q.trim().parse().ok()?;
            if q == 0.into() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coefficients().into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*z({})^{e}", self.n)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Cyc {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Cyc, CycError> {
        let err = || CycError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // Split into signed terms at top-level '+'/'-' (not inside z(...)).
        let mut pieces = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for (i, ch) in compact.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > start && !compact[..i].ends_with('^') => {
                    pieces.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);
        let mut total = Cyc::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(piece)),
            };
            let (coef, root) = match body.find("z(") {
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    (coef, Some(&body[pos..]))
                }
                None => (body, None),
            };
            let mut c = if coef.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coef).ok_or_else(err)?
            };
            if sign < 0 {
                c = -c;
            }
            let term = match root {
                None => Cyc::from_rational(&c),
                Some(root) => {
                    let inner = root.strip_prefix("z(").ok_or_else(err)?;
                    let (n, rest) = inner.split_once(')').ok_or_else(err)?;
                    let n: u64 = n.parse().map_err(|_| err())?;
                    let e: i64 = match rest.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| err())?,
                        None if rest.is_empty() => 1,
                        None => return Err(err()),
                    };
                    Cyc::make(n, &[(e, c)])?
                }
            };
            total = &total + &term;
        }
        Ok(total)
    }
}

#[derive(Serialize, Deserialize)]
struct CycJson {
    conductor: u64,
    terms: Vec<(u64, String)>,
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycJson {
            conductor: self.n,
            terms: self
                .coefficients()
                .iter()
                .map(|(e, c)| (*e, format_rational(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Cyc, D::Error> {
        let raw = CycJson::deserialize(d)?;
        let terms = raw
            .terms
            .iter()
            .map(|(e, c)| {
                let c = parse_rational(c)
                    .ok_or_else(|| D::Error::custom(format!("bad rational {c}")))?;
                Ok((*e as i64, c))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        Cyc::make(raw.conductor, &terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let x = &(&Cyc::root_of_unity(8, 3) * &Cyc::ratio(-1, 2)) + &Cyc::from_int(1);
        let s = x.to_string();
        assert_eq!(s.parse::<Cyc>().unwrap(), x);
        assert_eq!("-1/2*z(8)^3 + 1".parse::<Cyc>().unwrap(), x);
        assert_eq!("0".parse::<Cyc>().unwrap(), Cyc::zero());
        assert_eq!("z(4)^-1".parse::<Cyc>().unwrap(), Cyc::root_of_unity(4, 3));
        assert!("z(0)".parse::<Cyc>().is_err());
        assert!("1/0".parse::<Cyc>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = &Cyc::root_of_unity(15, 2) - &Cyc::ratio(7, 3);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Cyc>(&j).unwrap(), x);
    }
}
