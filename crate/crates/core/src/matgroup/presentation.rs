//! Finite presentations and checks that an assignment of group words defines
//! an isomorphism onto a matrix group.
//!
//! Syntax: `"x,y | x^2=(xy)^2=y^3, x^4=1"`. Generators are single letters, a
//! chain `a=b=c` gives the relators `a b^-1` and `a c^-1`, and `1` is the empty
//! word. A relation without `=` means the word equals `1`.

use super::group::MatGroup;
use super::GroupError;

/// A word as a sequence of (generator, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<(char, i64)>);

impl Word {
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(c, e)| (c, -e)).collect())
    }

    fn concat(mut self, other: &Word) -> Word {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn parse(s: &str) -> Result<Word, GroupError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(GroupError::Presentation(format!(
                "unexpected '{}' in '{s}'",
                chars[pos]
            )));
        }
        Ok(w)
    }

    /// Evaluate in a group whose named elements supply the letters.
    pub fn evaluate(
        &self,
        g: &MatGroup,
        lookup: &dyn Fn(char) -> Option<usize>,
    ) -> Result<usize, GroupError> {
        let mut x = g.identity();
        for &(c, e) in &self.0 {
            let y = lookup(c).ok_or_else(|| GroupError::UnknownGenerator(c.to_string()))?;
            x = g.mul(x, g.pow(y, e));
        }
        Ok(x)
    }
}

fn parse_word(chars: &[char], pos: &mut usize) -> Result<Word, GroupError> {
    let mut word = Word(Vec::new());
    while *pos < chars.len() {
        let atom = match chars[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_word(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(GroupError::Presentation("unbalanced parenthesis".into()));
                }
                *pos += 1;
                inner
            }
            '1' => {
                *pos += 1;
                Word(Vec::new())
            }
            c if c.is_ascii_alphabetic() => {
                *pos += 1;
                Word(vec![(c, 1)])
            }
            _ => break,
        };
        let exp = if chars.get(*pos) == Some(&'^') {
            *pos += 1;
            let start = *pos;
            if chars.get(*pos) == Some(&'-') {
                *pos += 1;
            }
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let text: String = chars[start..*pos].iter().collect();
            text.parse::<i64>()
                .map_err(|_| GroupError::Presentation(format!("bad exponent '{text}'")))?
        } else {
            1
        };
        let piece = if exp >= 0 {
            atom.clone()
        } else {
            atom.inverse()
        };
        for _ in 0..exp.unsigned_abs() {
            word = word.concat(&piece);
        }
    }
    Ok(word)
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<Word>,
    /// Order of the presented group, when known.
    pub order: Option<u64>,
}

impl Presentation {
    pub fn parse(s: &str, order: Option<u64>) -> Result<Presentation, GroupError> {
        let (gens, rels) = s
            .split_once('|')
            .ok_or_else(|| GroupError::Presentation(format!("missing '|' in '{s}'")))?;
        let generators = gens
            .split(',')
            .map(|g| {
                let g = g.trim();
                let mut it = g.chars();
                match (it.next(), it.next()) {
                    (Some(c), None) if c.is_ascii_alphabetic() => Ok(c),
                    _ => Err(GroupError::Presentation(format!("bad generator '{g}'"))),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut relators = Vec::new();
        for rel in rels.split(',').map(str::trim).filter(|r| !r.is_empty()) {
            let sides = rel
                .split('=')
                .map(Word::parse)
                .collect::<Result<Vec<_>, _>>()?;
            if sides.len() == 1 {
                relators.push(sides[0].clone());
            }
            for other in &sides[1..] {
                relators.push(sides[0].clone().concat(&other.inverse()));
            }
        }
        for w in &relators {
            if let Some(&(c, _)) = w.0.iter().find(|(c, _)| !generators.contains(c)) {
                return Err(GroupError::UnknownGenerator(c.to_string()));
            }
        }
        Ok(Presentation {
            generators,
            relators,
            order,
        })
    }

    /// Add a central cyclic factor `<w | w^l>`.
    pub fn with_central_cyclic(&self, w: char, l: u64) -> Presentation {
        let mut p = self.clone();
        p.relators.push(Word(vec![(w, l as i64)]));
        for &g in &self.generators {
            p.relators
                .push(Word(vec![(w, 1), (g, 1), (w, -1), (g, -1)]));
        }
        p.generators.push(w);
        p.order = self.order.map(|o| o * l);
        p
    }
}

/// Outcome of an isomorphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCheck {
    pub relators_hold: bool,
    pub surjective: bool,
    pub orders_match: bool,
}

impl IsoCheck {
    pub fn is_isomorphism(&self) -> bool {
        self.relators_hold && self.surjective && self.orders_match
    }
}

/// Check that `generator -> word` (words over the group's named elements)
/// respects every relator, is onto, and, when the presented order is known,
/// that the orders agree.
pub fn check_isomorphism(
    pres: &Presentation,
    assignment: &[(char, &str)],
    g: &MatGroup,
) -> Result<IsoCheck, GroupError> {
    let named = |c: char| g.named_element(&c.to_string());
    let mut images = Vec::new();
    for &gen in &pres.generators {
        let (_, word) = assignment
            .iter()
            .find(|(c, _)| *c == gen)
            .ok_or_else(|| GroupError::MissingAssignment(gen.to_string()))?;
        images.push((gen, Word::parse(word)?.evaluate(g, &named)?));
    }
    if let Some((c, _)) = assignment
        .iter()
        .find(|(c, _)| !pres.generators.contains(c))
    {
        return Err(GroupError::UnknownGenerator(c.to_string()));
    }
    let image_of = |c: char| images.iter().find(|(d, _)| *d == c).map(|(_, x)| *x);
    let mut relators_hold = true;
    for r in &pres.relators {
        relators_hold &= r.evaluate(g, &image_of)? == g.identity();
    }
    let gens: Vec<usize> = images.iter().map(|(_, x)| *x).collect();
    let surjective = g.subgroup(&gens).len() == g.order();
    let orders_match = pres.order.is_none_or(|o| o == g.order() as u64);
    Ok(IsoCheck {
        relators_hold,
        surjective,
        orders_match,
    })
}

/// `true` when the assignment is an isomorphism.
pub fn verify_isomorphism(
    pres: &Presentation,
    assignment: &[(char, &str)],
    g: &MatGroup,
) -> Result<bool, GroupError> {
    Ok(check_isomorphism(pres, assignment, g)?.is_isomorphism())
}

/// `Q_{4t} = <x, y | x^2 = (xy)^2 = y^t>`.
pub fn quaternion(t: u64) -> Presentation {
    Presentation::parse(&format!("x,y | x^2=(xy)^2=y^{t}"), Some(4 * t)).expect("valid")
}

/// `P_{24n/(6-n)} = <x, y | x^2 = (xy)^3 = y^n, x^4 = 1>` for `n = 3, 4, 5`.
pub fn polyhedral(n: u64) -> Presentation {
    Presentation::parse(
        &format!("x,y | x^2=(xy)^3=y^{n}, x^4=1"),
        Some(24 * n / (6 - n)),
    )
    .expect("valid")
}

/// `<2, s, t> = <b, c | (bc)^2 = b^s = c^t>`.
pub fn triangle(s: u64, t: u64) -> Presentation {
    let order = match (s, t) {
        (2, t) => Some(4 * t),
        (3, 3) => Some(24),
        (3, 4) => Some(48),
        (3, 5) => Some(120),
        _ => None,
    };
    Presentation::parse(&format!("b,c | (bc)^2=b^{s}=c^{t}"), order).expect("valid")
}

/// `D_{2^(k+1)(2r+1)} = <x, y | x^(2^(k+1)) = y^(2r+1) = 1, x y x^-1 = y^-1>`.
pub fn d_family(k: u32, r: u64) -> Presentation {
    let m = 1u64 << (k + 1);
    let q = 2 * r + 1;
    Presentation::parse(&format!("x,y | x^{m}=1, y^{q}=1, xyx^-1=y^-1"), Some(m * q))
        .expect("valid")
}

/// `P'_{8 3^k} = <x, y, z | x^2 = (xy)^2 = y^2, z x z^-1 = y, z y z^-1 = xy, z^(3^k) = 1>`.
pub fn p_prime(k: u32) -> Presentation {
    let m = 3u64.pow(k);
    Presentation::parse(
        &format!("x,y,z | x^2=(xy)^2=y^2, zxz^-1=y, zyz^-1=xy, z^{m}=1"),
        Some(8 * m),
    )
    .expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_ELEMENT_CAP;

    #[test]
    fn parse_words() {
        assert_eq!(
            Word::parse("x^2(xy)^-1").unwrap(),
            Word(vec![('x', 1), ('x', 1), ('y', -1), ('x', -1)])
        );
        assert!(Word::parse("x^").is_err());
        assert!(Presentation::parse("x | y^2", None).is_err());
    }

    #[test]
    fn quaternion_into_bd2() {
        let g = MatGroup::build(&"BD:2".parse().unwrap(), DEFAULT_ELEMENT_CAP).unwrap();
        assert!(verify_isomorphism(&quaternion(2), &[('x', "b"), ('y', "c")], &g).unwrap());
        assert!(!verify_isomorphism(&quaternion(2), &[('x', "b"), ('y', "b")], &g).unwrap());
        assert!(matches!(
            verify_isomorphism(&quaternion(2), &[('x', "b"), ('y', "q")], &g),
            Err(GroupError::UnknownGenerator(_))
        ));
    }
}
