//! The scalar ring: exact multivariate polynomials and reduced rational
//! functions over Q in the deformation parameters `h`, `s` and colour symbols.

mod format;
mod monomial;
mod parse;
mod polynomial;
mod rational;
mod symbol;

pub use format::{format_latex, format_plain, format_scalar, FormatStyle};
pub use monomial::Monomial;
pub use parse::{parse_scalar, ParseError, ParseErrorKind, SymbolContext};
pub use polynomial::Polynomial;
pub use rational::{RationalFunction, ScalarError};
pub use symbol::Symbol;

use alloc::collections::BTreeMap;

/// Bindings for simultaneous substitution.
pub type Bindings = BTreeMap<Symbol, RationalFunction>;

/// `f(a,b) = h^2 - a*b*s^2 - h*s*(a - b)`, the coefficient that appears in the
/// coloured R-matrix, the RTT relations and the determinant commutators.
pub fn f_coeff(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    let h = RationalFunction::symbol(Symbol::h());
    let s = RationalFunction::symbol(Symbol::s());
    h.mul(&h)
        .sub(&a.mul(b).mul(&s).mul(&s))
        .sub(&h.mul(&s).mul(&a.sub(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_coeff_canonical() {
        let lam = RationalFunction::symbol(Symbol::new("lambda"));
        let mu = RationalFunction::symbol(Symbol::new("mu"));
        let f = f_coeff(&lam, &mu);
        assert!(f.is_polynomial());
        assert_eq!(f.numerator().num_terms(), 4);
        // monochromatic value: f(eta,eta) = h^2 - eta^2 s^2
        let eta = RationalFunction::symbol(Symbol::new("eta"));
        let fm = f_coeff(&eta, &eta);
        assert_eq!(fm.numerator().num_terms(), 2);
        // swap identity: f(a,b) + f(b,a) = 2h^2 - 2ab s^2
        let sum = f.add(&f_coeff(&mu, &lam));
        let h = RationalFunction::symbol(Symbol::h());
        let s = RationalFunction::symbol(Symbol::s());
        let expect = h.mul(&h).scale_int(2).sub(&lam.mul(&mu).mul(&s).mul(&s).scale_int(2));
        assert_eq!(sum, expect);
    }
}
