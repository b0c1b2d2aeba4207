use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::symbol::Symbol;

/// Multivariate polynomial over the rationals in parameter and colour symbols.
///
/// Canonical form: a term map with no zero coefficients, so structural
/// equality is mathematical equality. The term order is graded lex (see
/// [`Monomial`]); the leading term is the maximal key.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn symbol(sym: Symbol) -> Self {
        Polynomial::term(Monomial::symbol(sym), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.values().next().map(One::is_one) == Some(true)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Leading (grlex-maximal) term.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = Vec::new();
        for m in self.terms.keys() {
            for s in m.symbols() {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes polynomials for symbols, simultaneously.
    pub fn substitute_poly(&self, bindings: &BTreeMap<Symbol, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            let mut residual = Monomial::one();
            for (sym, exp) in m.factors() {
                match bindings.get(sym) {
                    Some(p) => term = term.mul(&p.pow(*exp)),
                    None => residual = residual.mul(&Monomial::from_pairs([(sym.clone(), *exp)])),
                }
            }
            out = out.add(&term.mul_monomial(&residual, &BigRational::one()));
        }
        out
    }

    /// Divides self by `divisor` exactly; `None` when not divisible.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        let (dm, dc) = divisor.leading().expect("nonzero");
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero");
            let qm = rm.try_div(dm)?;
            let qc = rc / dc;
            let t = Polynomial::term(qm, qc);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Makes the grlex-leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&(BigRational::one() / c)),
        }
    }

    /// gcd over Q[symbols], normalized monic. gcd(0, p) = monic(p).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Polynomial::one();
        }
        // quick win: single-term inputs reduce to a monomial gcd
        if self.num_terms() == 1 && other.num_terms() == 1 {
            let (m1, _) = self.leading().expect("nonzero");
            let (m2, _) = other.leading().expect("nonzero");
            return Polynomial::term(m1.gcd(m2), BigRational::one());
        }
        let mut vars = self.symbols();
        for v in other.symbols() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        let main = vars[0].clone();
        gcd_univariate(self, other, &main).monic()
    }

    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).expect("gcd divides product").monic()
    }

    /// Componentwise-minimum monomial dividing every term; 1 for zero.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Monomial::one() };
        let mut g = first.clone();
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Divides every term by the given monomial; caller guarantees it divides.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        if m.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.try_div(m).expect("monomial content divides"), c.clone()))
                .collect(),
        }
    }

    /// gcd of all coefficients (a positive rational); 0 for the zero polynomial.
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

    /// Degree in `sym` alone.
    pub fn degree_in_symbol(&self, sym: &Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(sym)).max().unwrap_or(0)
    }

    /// Minimal total degree over the listed symbols among the terms.
    pub fn min_degree_in(&self, syms: &[Symbol]) -> Option<u64> {
        self.terms.keys().map(|m| m.degree_in(syms)).min()
    }
}

/// View of `p` as a univariate polynomial in `v`: coefficient of `v^k`.
fn univariate_coeffs(p: &Polynomial, v: &Symbol) -> Vec<Polynomial> {
    let deg = p.degree_in_symbol(v) as usize;
    let mut out = alloc::vec![Polynomial::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponent(v) as usize;
        let rest = Monomial::from_pairs(
            m.factors()
                .iter()
                .filter(|(s, _)| s != v)
                .map(|(s, k)| (s.clone(), *k)),
        );
        out[e].add_term(rest, c.clone());
    }
    out
}

fn from_univariate(coeffs: &[Polynomial], v: &Symbol) -> Polynomial {
    let mut out = Polynomial::zero();
    for (e, c) in coeffs.iter().enumerate() {
        let vm = Monomial::from_pairs([(v.clone(), e as u32)]);
        out = out.add(&c.mul_monomial(&vm, &BigRational::one()));
    }
    out
}

/// Content of `p` w.r.t. `v`: gcd of the univariate coefficients.
fn content_in(p: &Polynomial, v: &Symbol) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in univariate_coeffs(p, v) {
        if !c.is_zero() {
            g = g.gcd(&c);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

/// Pseudo-remainder of `a` by `b`, both viewed as univariate in `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: &Symbol) -> Polynomial {
    let db = b.degree_in_symbol(v);
    let bu = univariate_coeffs(b, v);
    let lb = bu.last().expect("b nonzero").clone();
    let mut r = a.clone();
    loop {
        let dr = r.degree_in_symbol(v);
        if r.is_zero() || dr < db {
            return r;
        }
        let ru = univariate_coeffs(&r, v);
        let lr = ru.last().expect("r nonzero").clone();
        // r := lb*r - lr*v^(dr-db)*b
        let shift = Monomial::from_pairs([(v.clone(), dr - db)]);
        r = r.mul(&lb).sub(&b.mul(&lr).mul_monomial(&shift, &BigRational::one()));
    }
}

/// Primitive PRS gcd, recursing on the number of variables through contents.
fn gcd_univariate(a: &Polynomial, b: &Polynomial, v: &Symbol) -> Polynomial {
    let da = a.degree_in_symbol(v);
    let db = b.degree_in_symbol(v);
    if da == 0 {
        return a.gcd(&content_in(b, v));
    }
    if db == 0 {
        return b.gcd(&content_in(a, v));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = ca.gcd(&cb);
    let mut p = a.exact_div(&ca).expect("content divides");
    let mut q = b.exact_div(&cb).expect("content divides");
    if p.degree_in_symbol(v) < q.degree_in_symbol(v) {
        core::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, v);
        if r.is_zero() {
            break;
        }
        let cr = content_in(&r, v);
        p = q;
        q = r.exact_div(&cr).expect("content divides");
        if q.degree_in_symbol(v) == 0 {
            // remainder sequence bottomed out: primitive parts are coprime
            return c;
        }
    }
    c.mul(&q)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

// keep from_univariate alive for the formatter/tests that reconstruct views
#[allow(dead_code)]
fn _reconstruct(coeffs: &[Polynomial], v: &Symbol) -> Polynomial {
    from_univariate(coeffs, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: &str) -> Polynomial {
        Polynomial::symbol(Symbol::new(n))
    }

    #[test]
    fn difference_of_squares() {
        let h = sym("h");
        let s = sym("s");
        let lam = sym("lambda");
        let a = h.add(&lam.mul(&s));
        let b = h.sub(&lam.mul(&s));
        let prod = a.mul(&b);
        let expect = h.mul(&h).sub(&lam.mul(&lam).mul(&s).mul(&s));
        assert_eq!(prod, expect);
    }

    #[test]
    fn exact_division() {
        let h = sym("h");
        let s = sym("s");
        let p = h.add(&s).mul(&h.sub(&s));
        assert_eq!(p.exact_div(&h.add(&s)), Some(h.sub(&s)));
        assert_eq!(p.exact_div(&h), None);
    }

    #[test]
    fn gcd_multivariate() {
        let h = sym("h");
        let s = sym("s");
        let eta = sym("eta");
        let a = h.add(&eta.mul(&s)); // h + eta s
        let b = h.sub(&eta.mul(&s));
        let p = a.pow(2).mul(&b);
        let q = a.mul(&b.pow(2));
        let g = p.gcd(&q);
        assert_eq!(g, a.mul(&b).monic());
        // idempotence of normalization
        assert_eq!(g.monic(), g);
        // coprime case
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn gcd_with_constants_and_zero() {
        let h = sym("h");
        assert_eq!(Polynomial::zero().gcd(&h.scale(&BigRational::from_integer(3.into()))), h);
        assert!(Polynomial::from_int(6).gcd(&Polynomial::from_int(4)).is_one());
    }

    #[test]
    fn substitution_is_simultaneous() {
        // p = h*s, bindings {h -> s, s -> h} must give s*h, not h*h
        let p = sym("h").mul(&sym("s"));
        let mut b = BTreeMap::new();
        b.insert(Symbol::new("h"), sym("s"));
        b.insert(Symbol::new("s"), sym("h"));
        assert_eq!(p.substitute_poly(&b), p);
    }
}
