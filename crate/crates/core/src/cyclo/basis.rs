//! Canonical basis of the cyclotomic field `Q(z_N)`.
//!
//! `z_N` factors through the Chinese remainder theorem as a product of
//! primitive roots of unity of prime-power order `q = p^a`. The basis used here
//! is the tensor product of the power bases `1, w, ..., w^(phi(q)-1)` of the
//! prime-power factors. An exponent `e` of `z_N` is canonical when every
//! prime-power component `j` of `e` satisfies `j < phi(q)`. Non-canonical
//! exponents are rewritten one prime at a time with
//! `z^e = -(z^(e - N/p) + ... + z^(e - (p-1)N/p))`.
//!
//! In this basis `Q(z_M)` for `M | N` is exactly the span of the exponents whose
//! components are all divisible by the corresponding prime ratio, which makes
//! conductor minimization a support check.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Part {
    pub p: u64,
    pub q: u64,
    /// `N / q`.
    pub cofactor: u64,
    /// Inverse of `N / q` modulo `q`.
    pub inv: u64,
}

#[derive(Debug)]
pub(crate) struct Basis {
    pub n: u64,
    pub parts: Vec<Part>,
    /// Expansion of every exponent in `[0, N)` into canonical exponents with
    /// signs `+1` or `-1`.
    pub reduce: Vec<Vec<(u32, i8)>>,
}

impl Basis {
    fn new(n: u64) -> Basis {
        let parts = factor(n)
            .into_iter()
            .map(|(p, a)| {
                let q = p.pow(a);
                let cofactor = n / q;
                let inv = if q == 1 {
                    0
                } else {
                    mod_inverse(cofactor % q, q)
                };
                Part {
                    p,
                    q,
                    cofactor,
                    inv,
                }
            })
            .collect::<Vec<_>>();
        let mut basis = Basis {
            n,
            parts,
            reduce: Vec::new(),
        };
        basis.reduce = (0..n).map(|e| basis.expand(e)).collect();
        basis
    }

    pub fn component(&self, e: u64, i: usize) -> u64 {
        let part = &self.parts[i];
        (e % part.q) * part.inv % part.q
    }

    #[cfg(test)]
    pub fn is_canonical(&self, e: u64) -> bool {
        (0..self.parts.len()).all(|i| {
            let part = &self.parts[i];
            self.component(e, i) / (part.q / part.p) != part.p - 1
        })
    }

    fn expand(&self, e: u64) -> Vec<(u32, i8)> {
        let mut terms = vec![(e, 1i8)];
        for (i, part) in self.parts.iter().enumerate() {
            let step = self.n / part.p;
            let mut next = Vec::with_capacity(terms.len());
            for &(e, s) in &terms {
                if self.component(e, i) / (part.q / part.p) == part.p - 1 {
                    for k in 1..part.p {
                        next.push(((e + self.n - k * step % self.n) % self.n, -s));
                    }
                } else {
                    next.push((e, s));
                }
            }
            terms = next;
        }
        terms.into_iter().map(|(e, s)| (e as u32, s)).collect()
    }

    /// Exponent with the given prime-power components.
    pub fn compose(&self, comps: &[u64]) -> u64 {
        self.parts
            .iter()
            .zip(comps)
            .fold(0, |acc, (part, &j)| (acc + j * part.cofactor) % self.n)
    }
}

/// The shared basis for conductor `n`.
pub(crate) fn basis(n: u64) -> Arc<Basis> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().unwrap().get(&n) {
        return b.clone();
    }
    let b = Arc::new(Basis::new(n));
    cache.write().unwrap().entry(n).or_insert(b).clone()
}

/// Prime factorization by trial division, primes ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

pub fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible modulo {m}");
    t.rem_euclid(m as i128) as u64
}

/// Conductor after dropping one power of the prime of `part`.
pub(crate) fn descend(n: u64, part: &Part) -> u64 {
    if part.q == 4 {
        n / 4
    } else {
        n / part.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_exponent_count_is_totient() {
        for n in [1u64, 3, 4, 5, 8, 9, 12, 15, 20, 24, 36, 40, 45, 105] {
            let b = basis(n);
            let count = (0..n).filter(|&e| b.is_canonical(e)).count() as u64;
            let phi = factor(n)
                .iter()
                .fold(1, |acc, &(p, a)| acc * (p - 1) * p.pow(a - 1));
            assert_eq!(count, phi, "n = {n}");
        }
    }

    #[test]
    fn expansions_land_on_canonical_exponents() {
        for n in [12u64, 40, 63] {
            let b = basis(n);
            for e in 0..n {
                assert!(b.reduce[e as usize]
                    .iter()
                    .all(|&(f, _)| b.is_canonical(f as u64)));
            }
        }
    }

    #[test]
    fn factor_small() {
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor(1), vec![]);
        assert_eq!(mod_inverse(3, 8), 3);
    }
}
