//! Packed polynomial arithmetic for the elimination hot path.
//!
//! Sector eliminations touch millions of small multivariate coefficients; the
//! general [`Polynomial`] representation is too pointer-heavy for that. Here a
//! monomial is a single `u64`: the top byte holds the total degree (so raw
//! key order is graded lex over the layout's symbol order) and up to seven
//! bytes hold per-symbol exponents. Multiplication of monomials is integer
//! addition. Conversion in and out of [`Polynomial`] happens only at the
//! engine boundary and in the rare full-gcd fallback.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Monomial, Polynomial, Symbol};

/// Symbol layout for packing; at most seven symbols.
#[derive(Clone, Debug)]
pub struct PackLayout {
    syms: Vec<Symbol>,
}

const MAX_SYMS: usize = 7;
const DEG_SHIFT: u32 = 56;

impl PackLayout {
    pub fn new(mut syms: Vec<Symbol>) -> Option<Self> {
        syms.sort();
        syms.dedup();
        (syms.len() <= MAX_SYMS).then_some(PackLayout { syms })
    }

    fn key_of(&self, m: &Monomial) -> u64 {
        let mut key = 0u64;
        let mut deg = 0u64;
        for (sym, exp) in m.factors() {
            let i = self
                .syms
                .iter()
                .position(|s| s == sym)
                .expect("symbol in layout");
            debug_assert!(*exp < 200, "exponent overflow in packed monomial");
            key |= u64::from(*exp) << (8 * (MAX_SYMS - 1 - i) as u32);
            deg += u64::from(*exp);
        }
        debug_assert!(deg < 200, "degree overflow in packed monomial");
        key | (deg << DEG_SHIFT)
    }

    fn monomial_of(&self, key: u64) -> Monomial {
        Monomial::from_pairs(self.syms.iter().enumerate().filter_map(|(i, s)| {
            let e = ((key >> (8 * (MAX_SYMS - 1 - i) as u32)) & 0xff) as u32;
            (e > 0).then(|| (s.clone(), e))
        }))
    }

    pub fn pack(&self, p: &Polynomial) -> Packed {
        Packed {
            terms: p.terms().map(|(m, c)| (self.key_of(m), c.clone())).collect(),
        }
    }

    pub fn unpack(&self, f: &Packed) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, c) in &f.terms {
            out.add_term(self.monomial_of(*k), c.clone());
        }
        out
    }
}

/// Polynomial with packed monomial keys; key order is graded lex.
#[derive(Clone, Debug, Default)]
pub struct Packed {
    terms: BTreeMap<u64, BigRational>,
}

fn key_mul(a: u64, b: u64) -> u64 {
    // no per-byte carries while exponents stay below 200
    a + b
}

fn key_div(a: u64, b: u64) -> u64 {
    a - b
}

impl Packed {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().next_back().map(|k| k >> DEG_SHIFT).unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn mul(&self, other: &Packed) -> Packed {
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key = key_mul(*k1, *k2);
                let add = c1 * c2;
                match out.entry(key) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(add);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += add;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Packed { terms: out }
    }

    pub fn sub(&self, other: &Packed) -> Packed {
        let mut out = self.terms.clone();
        for (k, c) in &other.terms {
            match out.entry(*k) {
                alloc::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-c.clone());
                }
                alloc::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Packed { terms: out }
    }

    pub fn scale(&self, c: &BigRational) -> Packed {
        if c.is_zero() {
            return Packed::default();
        }
        Packed {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Componentwise-minimum exponent key across all terms (degree byte
    /// recomputed); 0 for the zero polynomial.
    pub fn monomial_content_key(&self) -> u64 {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return 0 };
        let mut mins = [0u64; MAX_SYMS];
        for (i, slot) in mins.iter_mut().enumerate() {
            *slot = (first >> (8 * (MAX_SYMS - 1 - i) as u32)) & 0xff;
        }
        for k in it {
            if mins.iter().all(|&m| m == 0) {
                break;
            }
            for (i, slot) in mins.iter_mut().enumerate() {
                let e = (k >> (8 * (MAX_SYMS - 1 - i) as u32)) & 0xff;
                if e < *slot {
                    *slot = e;
                }
            }
        }
        let mut key = 0u64;
        let mut deg = 0u64;
        for (i, m) in mins.iter().enumerate() {
            key |= m << (8 * (MAX_SYMS - 1 - i) as u32);
            deg += m;
        }
        key | (deg << DEG_SHIFT)
    }

    pub fn div_key(&self, key: u64) -> Packed {
        if key == 0 {
            return self.clone();
        }
        Packed {
            terms: self.terms.iter().map(|(k, c)| (key_div(*k, key), c.clone())).collect(),
        }
    }

    /// gcd of coefficient numerators over lcm of denominators.
    pub fn rational_content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num_integer::gcd(num, c.numer().abs());
            den = num_integer::lcm(den, c.denom().clone());
        }
        if num.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, SymbolContext};

    fn layout() -> PackLayout {
        PackLayout::new(alloc::vec![
            Symbol::h(),
            Symbol::s(),
            Symbol::new("lambda"),
            Symbol::new("mu"),
        ])
        .unwrap()
    }

    fn poly(text: &str) -> Polynomial {
        parse_scalar(text, &SymbolContext::with_colours(["lambda", "mu"]))
            .unwrap()
            .as_polynomial()
            .unwrap()
            .clone()
    }

    #[test]
    fn pack_round_trip_and_mul() {
        let l = layout();
        let a = poly("h^2 - lambda*mu*s^2 - h*s*(lambda - mu)");
        let b = poly("h + lambda*s");
        assert_eq!(l.unpack(&l.pack(&a)), a);
        let prod = l.pack(&a).mul(&l.pack(&b));
        assert_eq!(l.unpack(&prod), a.mul(&b));
        assert_eq!(prod.total_degree(), 4);
    }

    #[test]
    fn content_and_div() {
        let l = layout();
        let p = poly("2*h^2*s + 4*h*s^2");
        let packed = l.pack(&p);
        let content = packed.monomial_content_key();
        let stripped = packed.div_key(content);
        assert_eq!(l.unpack(&stripped), poly("2*h + 4*s"));
        assert_eq!(
            stripped.rational_content(),
            BigRational::from_integer(2.into())
        );
    }
}
