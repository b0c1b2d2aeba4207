use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::polynomial::Polynomial;
use super::symbol::Symbol;

/// Errors from scalar arithmetic and substitution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScalarError {
    /// Division by the zero rational function.
    DivisionByZero,
    /// A substitution made a denominator vanish.
    DenominatorVanishes,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => f.write_str("division by the zero rational function"),
            ScalarError::DenominatorVanishes => {
                f.write_str("denominator vanishes under the given binding")
            }
        }
    }
}

impl core::error::Error for ScalarError {}

/// Reduced rational function: numerator/denominator coprime, denominator
/// monic under the grlex order (so representatives are unique), denominator 1
/// for polynomial values.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den` in canonical reduced form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Polynomial::one() });
        }
        if let Some(c) = den.as_constant() {
            return Ok(RationalFunction {
                num: num.scale(&(BigRational::one() / c)),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        // monic denominator
        let lc = den.leading().expect("nonzero").1.clone();
        if lc.is_one() {
            Ok(RationalFunction { num, den })
        } else {
            let inv = BigRational::one() / lc;
            Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Polynomial::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(r))
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::from_poly(Polynomial::symbol(sym))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying polynomial, when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_polynomial().then(|| self.num.as_constant()).flatten()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // cross-reduce first to keep intermediates small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction::new(n1.mul(&n2), d1.mul(&d2)).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        RationalFunction {
            num: self.num.scale(&BigRational::from_integer(BigInt::from(n))),
            den: self.den.clone(),
        }
        .renormalized()
    }

    fn renormalized(self) -> Self {
        RationalFunction::new(self.num, self.den).expect("nonzero denominator")
    }

    pub fn pow(&self, n: i32) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut out = RationalFunction::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Simultaneous substitution of rational functions for symbols.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Symbol, RationalFunction>,
    ) -> Result<Self, ScalarError> {
        let num = substitute_poly_rf(&self.num, bindings);
        let den = substitute_poly_rf(&self.den, bindings);
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        num.div(&den).map_err(|_| ScalarError::DenominatorVanishes)
    }

    pub fn symbols(&self) -> alloc::vec::Vec<Symbol> {
        let mut out = self.num.symbols();
        for s in self.den.symbols() {
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }
}

fn substitute_poly_rf(
    p: &Polynomial,
    bindings: &BTreeMap<Symbol, RationalFunction>,
) -> RationalFunction {
    let mut out = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut term = RationalFunction::from_rational(c.clone());
        for (sym, exp) in m.factors() {
            let factor = match bindings.get(sym) {
                Some(v) => v.clone(),
                None => RationalFunction::symbol(sym.clone()),
            };
            for _ in 0..*exp {
                term = term.mul(&factor);
            }
        }
        out = out.add(&term);
    }
    out
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: &str) -> RationalFunction {
        RationalFunction::symbol(Symbol::new(n))
    }

    #[test]
    fn cancellation() {
        // ((h+eta*s)^2 / 2h) * 2h = (h+eta*s)^2
        let h = sym("h");
        let s = sym("s");
        let eta = sym("eta");
        let a = h.add(&eta.mul(&s));
        let two_h = h.scale_int(2);
        let q = a.mul(&a).div(&two_h).unwrap();
        assert!(!q.is_polynomial());
        let back = q.mul(&two_h);
        assert_eq!(back, a.mul(&a));
        assert!(back.is_polynomial());
    }

    #[test]
    fn denominator_monic_unique() {
        let h = sym("h");
        let one = RationalFunction::one();
        // 1/(2h) both ways
        let a = one.div(&h.scale_int(2)).unwrap();
        let b = RationalFunction::new(
            Polynomial::from_int(2),
            Polynomial::from_int(4).mul(h.numerator()),
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.denominator().leading().unwrap().1.is_one());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            sym("h").div(&RationalFunction::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_examples() {
        let h = sym("h");
        let s = sym("s");
        let lam = Symbol::new("lambda");
        // substitute(h + lambda*s, {lambda -> 0}) = h
        let p = h.add(&RationalFunction::symbol(lam.clone()).mul(&s));
        let mut b = BTreeMap::new();
        b.insert(lam, RationalFunction::zero());
        assert_eq!(p.substitute(&b).unwrap(), h);

        // substitute((h - eta*s)^2/2h, {eta -> 0}) = h/2
        let eta = Symbol::new("eta");
        let q = h
            .sub(&RationalFunction::symbol(eta.clone()).mul(&s))
            .pow(2)
            .unwrap()
            .div(&h.scale_int(2))
            .unwrap();
        let mut b = BTreeMap::new();
        b.insert(eta, RationalFunction::zero());
        let expect = h.div(&RationalFunction::from_int(2)).unwrap();
        assert_eq!(q.substitute(&b).unwrap(), expect);
    }

    #[test]
    fn substitute_denominator_vanishes() {
        let h = Symbol::h();
        let inv_h = RationalFunction::one().div(&sym("h")).unwrap();
        let mut b = BTreeMap::new();
        b.insert(h, RationalFunction::zero());
        assert_eq!(inv_h.substitute(&b), Err(ScalarError::DenominatorVanishes));
    }
}
