//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyc`] is an element of `Q(z_N)` stored as integer numerators over one
//! positive common denominator, in the canonical basis described in
//! [`basis`]. After every operation the conductor is lowered to the smallest
//! `N` whose field contains the value, never `N = 2 (mod 4)`. Two values are
//! equal exactly when their stored forms are equal.

mod basis;
pub(crate) mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use basis::{factor, gcd, lcm, mod_inverse};
pub use text::format_rational;

use basis::{basis, descend};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("conductor must be positive")]
    InvalidConductor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("value is not a root of unity: {0}")]
    NotRootOfUnity(String),
    #[error("{a} is not coprime to the conductor {n}")]
    NotCoprime { a: i64, n: u64 },
    #[error("cannot parse cyclotomic number: {0}")]
    Parse(String),
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    n: u64,
    den: BigInt,
    terms: Vec<(u32, BigInt)>,
}

impl Cyc {
    pub fn zero() -> Cyc {
        Cyc {
            n: 1,
            den: BigInt::one(),
            terms: Vec::new(),
        }
    }

    pub fn one() -> Cyc {
        Cyc::from_int(1)
    }

    pub fn from_int(v: i64) -> Cyc {
        Cyc::from_rational(&BigRational::from_integer(v.into()))
    }

    pub fn from_rational(r: &BigRational) -> Cyc {
        if r.is_zero() {
            return Cyc::zero();
        }
        Cyc {
            n: 1,
            den: r.denom().clone(),
            terms: vec![(0, r.numer().clone())],
        }
    }

    pub fn ratio(p: i64, q: i64) -> Cyc {
        Cyc::from_rational(&BigRational::new(p.into(), q.into()))
    }

    /// `z_n^e` with `z_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u64, e: i64) -> Cyc {
        Cyc::make(n, &[(e, BigRational::one())]).expect("positive conductor")
    }

    /// `sum c_e z_n^e` for arbitrary integer exponents.
    pub fn make(n: u64, terms: &[(i64, BigRational)]) -> Result<Cyc, CycError> {
        if n == 0 {
            return Err(CycError::InvalidConductor);
        }
        let big_n = if n % 4 == 2 { 2 * n } else { n };
        let scale = big_n / n;
        let den = terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let b = basis(big_n);
        let mut acc = Acc::new(big_n);
        for (e, c) in terms {
            let e = (e.rem_euclid(n as i64) as u64) * scale;
            let num = c.numer() * (&den / c.denom());
            for &(f, s) in &b.reduce[e as usize] {
                acc.add_big(f, &num, s);
            }
        }
        Ok(acc.finish(den))
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.den.is_one() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    /// Canonical exponents with their rational coefficients, ascending.
    pub fn coefficients(&self) -> Vec<(u64, BigRational)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e as u64, BigRational::new(c.clone(), self.den.clone())))
            .collect()
    }

    pub fn as_rational(&self) -> Result<BigRational, CycError> {
        if !self.is_rational() {
            return Err(CycError::NotRational(self.to_string()));
        }
        Ok(match self.terms.first() {
            None => BigRational::zero(),
            Some((_, c)) => BigRational::new(c.clone(), self.den.clone()),
        })
    }

    /// Complex approximation, for sanity checks only.
    pub fn to_complex(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        self.terms
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
                let angle = 2.0 * std::f64::consts::PI * (*e as f64) / (self.n as f64);
                acc + Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN) / den, angle)
            })
    }

    /// Complex conjugate, the automorphism `z -> z^-1`.
    pub fn conj(&self) -> Cyc {
        self.galois_unchecked(self.n - 1)
    }

    /// The Galois automorphism `z_N -> z_N^a` of the conductor field.
    pub fn galois(&self, a: i64) -> Result<Cyc, CycError> {
        let a_mod = a.rem_euclid(self.n as i64) as u64;
        if gcd(a_mod, self.n) != 1 && self.n > 1 {
            return Err(CycError::NotCoprime { a, n: self.n });
        }
        Ok(self.galois_unchecked(a_mod))
    }

    fn galois_unchecked(&self, a: u64) -> Cyc {
        if self.n == 1 {
            return self.clone();
        }
        let b = basis(self.n);
        let mut acc = Acc::new(self.n);
        for (e, c) in &self.terms {
            let f = (*e as u64) * a % self.n;
            for &(g, s) in &b.reduce[f as usize] {
                acc.add_big(g, c, s);
            }
        }
        acc.finish(self.den.clone())
    }

    /// Multiplicative inverse through a tower of relative norms.
    pub fn inv(&self) -> Result<Cyc, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.n == 1 {
            let r = self.as_rational()?;
            return Ok(Cyc::from_rational(&r.recip()));
        }
        let b = basis(self.n);
        let part = b
            .parts
            .iter()
            .min_by_key(|p| if p.q == p.p { p.p - 1 } else { p.p })
            .expect("nontrivial conductor");
        let lower = descend(self.n, part);
        let mut others = Cyc::one();
        let mut c = 1 + lower;
        while c < self.n {
            if gcd(c, self.n) == 1 {
                others = &others * &self.galois_unchecked(c);
            }
            c += lower;
        }
        let norm = self * &others;
        debug_assert!(lower.is_multiple_of(norm.n));
        Ok(&others * &norm.inv()?)
    }

    pub fn div(&self, other: &Cyc) -> Result<Cyc, CycError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Cyc, CycError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Cyc::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(result)
    }

    /// For a root of unity, the pair `(order, exponent)` with
    /// `self = z_order^exponent` and `gcd(order, exponent) = 1`.
    pub fn root_of_unity_log(&self) -> Result<(u64, u64), CycError> {
        let err = || CycError::NotRootOfUnity(self.to_string());
        let l = lcm(2, self.n);
        let z = self.to_complex();
        if (z.norm() - 1.0).abs() > 1e-6 {
            return Err(err());
        }
        let turns = z.arg() / (2.0 * std::f64::consts::PI);
        let guess = ((turns * l as f64).round() as i64).rem_euclid(l as i64) as u64;
        let e = if *self == Cyc::root_of_unity(l, guess as i64) {
            guess
        } else {
            (0..l)
                .find(|&e| *self == Cyc::root_of_unity(l, e as i64))
                .ok_or_else(err)?
        };
        let g = gcd(e, l);
        Ok((l / g, e / g))
    }

    /// `sum_i w_i a_i b_i`, accumulated exactly and normalized once.
    pub fn dot<'a>(items: impl IntoIterator<Item = (&'a Cyc, &'a Cyc, i64)>) -> Cyc {
        let items: Vec<(&Cyc, &Cyc, i64)> = items
            .into_iter()
            .filter(|(a, b, w)| *w != 0 && !a.is_zero() && !b.is_zero())
            .collect();
        if items.is_empty() {
            return Cyc::zero();
        }
        let n = items.iter().fold(1, |n, (a, b, _)| lcm(n, lcm(a.n, b.n)));
        let den = items
            .iter()
            .fold(BigInt::one(), |d, (a, b, _)| d.lcm(&(&a.den * &b.den)));
        let basis = basis(n);
        let mut acc = Acc::new(n);
        for (a, b, w) in items {
            let scale = &den / (&a.den * &b.den) * BigInt::from(w);
            let (la, lb) = (a.lifted(n), b.lifted(n));
            match (Cyc::small_terms(&la), Cyc::small_terms(&lb), scale.to_i64()) {
                (Some(sa), Some(sb), Some(k)) => {
                    for &(ea, ca) in &sa {
                        for &(eb, cb) in &sb {
                            let e = ((ea + eb) % n) as usize;
                            match (ca as i128 * cb as i128).checked_mul(k as i128) {
                                Some(v) => {
                                    for &(f, s) in &basis.reduce[e] {
                                        acc.add_small(f, v, s);
                                    }
                                }
                                None => {
                                    let v = BigInt::from(ca) * BigInt::from(cb) * BigInt::from(k);
                                    for &(f, s) in &basis.reduce[e] {
                                        acc.add_big(f, &v, s);
                                    }
                                }
                            }
                        }
                    }
                }
                _ => {
                    for &(ea, ca) in &la {
                        for &(eb, cb) in &lb {
                            let e = ((ea + eb) % n) as usize;
                            let v = ca * cb * &scale;
                            for &(f, s) in &basis.reduce[e] {
                                acc.add_big(f, &v, s);
                            }
                        }
                    }
                }
            }
        }
        acc.finish(den)
    }

    fn lifted(&self, n: u64) -> Vec<(u64, &BigInt)> {
        let scale = n / self.n;
        self.terms
            .iter()
            .map(|(e, c)| (*e as u64 * scale, c))
            .collect()
    }

    fn small_terms(terms: &[(u64, &BigInt)]) -> Option<Vec<(u64, i64)>> {
        terms
            .iter()
            .map(|(e, c)| c.to_i64().map(|c| (*e, c)))
            .collect()
    }
}

/// Accumulator for canonical-exponent coefficients, with an `i128` fast path.
struct Acc {
    n: u64,
    small: Option<Vec<i128>>,
    big: Vec<BigInt>,
}

impl Acc {
    fn new(n: u64) -> Acc {
        Acc {
            n,
            small: Some(vec![0; n as usize]),
            big: Vec::new(),
        }
    }

    fn spill(&mut self) {
        if let Some(small) = self.small.take() {
            self.big = small.into_iter().map(BigInt::from).collect();
        }
    }

    fn add_small(&mut self, e: u32, v: i128, s: i8) {
        if let Some(small) = &mut self.small {
            let v = if s < 0 { v.checked_neg() } else { Some(v) };
            if let Some(r) = v.and_then(|v| small[e as usize].checked_add(v)) {
                small[e as usize] = r;
                return;
            }
            self.spill();
        }
        let v = BigInt::from(v);
        if s < 0 {
            self.big[e as usize] -= v;
        } else {
            self.big[e as usize] += v;
        }
    }

    fn add_big(&mut self, e: u32, v: &BigInt, s: i8) {
        if self.small.is_some() {
            if let Some(v) = v.to_i128() {
                self.add_small(e, v, s);
                return;
            }
            self.spill();
        }
        if s < 0 {
            self.big[e as usize] -= v;
        } else {
            self.big[e as usize] += v;
        }
    }

    fn finish(self, den: BigInt) -> Cyc {
        let terms: Vec<(u32, BigInt)> = match self.small {
            Some(small) => small
                .into_iter()
                .enumerate()
                .filter(|(_, v)| *v != 0)
                .map(|(e, v)| (e as u32, BigInt::from(v)))
                .collect(),
            None => self
                .big
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(e, v)| (e as u32, v))
                .collect(),
        };
        normalize(self.n, den, terms)
    }
}

/// Reduce the common denominator and lower the conductor.
fn normalize(n: u64, mut den: BigInt, mut terms: Vec<(u32, BigInt)>) -> Cyc {
    if terms.is_empty() {
        return Cyc::zero();
    }
    if den.is_negative() {
        den = -den;
        for (_, c) in &mut terms {
            *c = -std::mem::take(c);
        }
    }
    let g = terms.iter().fold(den.clone(), |g, (_, c)| g.gcd(c));
    if !g.is_one() {
        den /= &g;
        for (_, c) in &mut terms {
            *c /= &g;
        }
    }
    let mut n = n;
    loop {
        let b = basis(n);
        let shrink = (0..b.parts.len()).find(|&i| {
            let p = b.parts[i].p;
            terms
                .iter()
                .all(|(e, _)| b.component(*e as u64, i).is_multiple_of(p))
        });
        let Some(i) = shrink else { break };
        let lower = descend(n, &b.parts[i]);
        let lb = basis(lower);
        for (e, _) in &mut terms {
            let comps: Vec<u64> = b
                .parts
                .iter()
                .enumerate()
                .filter_map(|(k, part)| {
                    let j = b.component(*e as u64, k);
                    if k != i {
                        Some(j)
                    } else if part.q == 4 || part.q == part.p {
                        None
                    } else {
                        Some(j / part.p)
                    }
                })
                .collect();
            *e = lb.compose(&comps) as u32;
        }
        n = lower;
    }
    terms.sort_unstable_by_key(|(e, _)| *e);
    Cyc { n, den, terms }
}

fn add_impl(a: &Cyc, b: &Cyc, negate_b: bool) -> Cyc {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let n = lcm(a.n, b.n);
    let den = a.den.lcm(&b.den);
    let (fa, fb) = (&den / &a.den, &den / &b.den);
    let mut acc = Acc::new(n);
    for (e, c) in a.lifted(n) {
        acc.add_big(e as u32, &(c * &fa), 1);
    }
    let s = if negate_b { -1 } else { 1 };
    for (e, c) in b.lifted(n) {
        acc.add_big(e as u32, &(c * &fb), s);
    }
    acc.finish(den)
}

fn mul_impl(a: &Cyc, b: &Cyc) -> Cyc {
    if a.is_zero() || b.is_zero() {
        return Cyc::zero();
    }
    let n = lcm(a.n, b.n);
    let basis = basis(n);
    let (la, lb) = (a.lifted(n), b.lifted(n));
    let mut acc = Acc::new(n);
    match (Cyc::small_terms(&la), Cyc::small_terms(&lb)) {
        (Some(sa), Some(sb)) => {
            for &(ea, ca) in &sa {
                for &(eb, cb) in &sb {
                    let e = ((ea + eb) % n) as usize;
                    let v = ca as i128 * cb as i128;
                    for &(f, s) in &basis.reduce[e] {
                        acc.add_small(f, v, s);
                    }
                }
            }
        }
        _ => {
            for &(ea, ca) in &la {
                for &(eb, cb) in &lb {
                    let e = ((ea + eb) % n) as usize;
                    let v = ca * cb;
                    for &(f, s) in &basis.reduce[e] {
                        acc.add_big(f, &v, s);
                    }
                }
            }
        }
    }
    acc.finish(&a.den * &b.den)
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        add_impl(self, rhs, false)
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        add_impl(self, rhs, true)
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        mul_impl(self, rhs)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            n: self.n,
            den: self.den.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |a, b| &a + &b)
    }
}

impl Default for Cyc {
    fn default() -> Cyc {
        Cyc::zero()
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, e: i64) -> Cyc {
        Cyc::root_of_unity(n, e)
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyc::from_int(-1));
    }

    #[test]
    fn sqrt_two_squared() {
        let d = &z(8, 1) - &z(8, 7);
        assert_eq!(&d * &d, Cyc::from_int(-2));
        let s = &z(8, 1) + &z(8, 7);
        assert_eq!(&s * &s, Cyc::from_int(2));
    }

    #[test]
    fn cube_roots_sum() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyc::from_int(-1));
    }

    #[test]
    fn conductor_drops() {
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(2, 1), Cyc::from_int(-1));
        let r5 = &z(5, 1) + &z(5, 4);
        assert_eq!(r5.conductor(), 5);
        let x = &(&z(20, 3) * &z(20, 17)) - &Cyc::one();
        assert!(x.is_zero());
    }

    #[test]
    fn logs() {
        assert_eq!(z(6, 2).root_of_unity_log().unwrap(), (3, 1));
        assert_eq!(Cyc::from_int(-1).root_of_unity_log().unwrap(), (2, 1));
        assert_eq!(z(8, 3).root_of_unity_log().unwrap(), (8, 3));
        assert_eq!(Cyc::one().root_of_unity_log().unwrap(), (1, 0));
        assert!(Cyc::from_int(2).root_of_unity_log().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let x = &(&z(35, 3) + &Cyc::ratio(2, 3)) - &z(8, 1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(Cyc::zero().inv(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn not_rational() {
        assert!(matches!(
            z(4, 1).as_rational(),
            Err(CycError::NotRational(_))
        ));
        assert_eq!(
            Cyc::ratio(3, 4).as_rational().unwrap(),
            BigRational::new(3.into(), 4.into())
        );
    }
}
