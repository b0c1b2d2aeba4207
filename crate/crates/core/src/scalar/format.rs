//! Plain-text and LaTeX formatters.
//!
//! Display order is fixed so output is byte-stable: terms descending by pure
//! lexicographic comparison of exponent vectors over the h < s < colours
//! symbol order (so `h^2` prints before `h*s*lambda`), while factors within a
//! monomial print alphabetically (so `lambda*s`, as the literature writes
//! it). `parse(format_plain(x)) == x` for every canonical value.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::RationalFunction;
use super::symbol::Symbol;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormatStyle {
    Plain,
    Latex,
}

/// Formats a scalar in the requested style.
pub fn format_scalar(x: &RationalFunction, style: FormatStyle) -> String {
    match style {
        FormatStyle::Plain => format_plain(x),
        FormatStyle::Latex => format_latex(x),
    }
}

pub fn format_plain(x: &RationalFunction) -> String {
    if x.is_polynomial() {
        return poly_plain(x.numerator());
    }
    let (num, den) = cleared_parts(x);
    let num_s = wrap_plain(&num);
    let den_s = wrap_plain_den(&den);
    let mut out = num_s;
    out.push('/');
    out.push_str(&den_s);
    out
}

pub fn format_latex(x: &RationalFunction) -> String {
    if x.is_polynomial() {
        return poly_latex(x.numerator());
    }
    let (num, den) = cleared_parts(x);
    let mut out = String::from("\\frac{");
    out.push_str(&poly_latex(&num));
    out.push_str("}{");
    out.push_str(&poly_latex(&den));
    out.push('}');
    out
}

/// Scales num and den by the same rational so both have integer, collectively
/// coprime coefficients and the denominator's leading display coefficient is
/// positive. The value is unchanged.
fn cleared_parts(x: &RationalFunction) -> (Polynomial, Polynomial) {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for (_, c) in x.numerator().terms().chain(x.denominator().terms()) {
        den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        num_gcd = num_integer::gcd(num_gcd, c.numer().abs());
    }
    let mut scale = BigRational::new(den_lcm, num_gcd.max(BigInt::one()));
    let den_scaled = x.denominator().scale(&scale);
    if let Some((_, c)) = display_terms(&den_scaled).first() {
        if c.is_negative() {
            scale = -scale;
        }
    }
    (x.numerator().scale(&scale), x.denominator().scale(&scale))
}

fn wrap_plain(p: &Polynomial) -> String {
    let s = poly_plain(p);
    if p.num_terms() > 1 || s.starts_with('-') {
        let mut out = String::from("(");
        out.push_str(&s);
        out.push(')');
        out
    } else {
        s
    }
}

fn wrap_plain_den(p: &Polynomial) -> String {
    // a bare symbol or positive integer needs no parentheses; anything else does
    let s = poly_plain(p);
    let bare = s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if bare {
        s
    } else {
        let mut out = String::from("(");
        out.push_str(&s);
        out.push(')');
        out
    }
}

/// Terms in display order (descending lex over alphabetical symbols).
fn display_terms(p: &Polynomial) -> Vec<(Monomial, BigRational)> {
    let mut terms: Vec<(Monomial, BigRational)> =
        p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|(a, _), (b, _)| display_cmp(a, b).reverse());
    terms
}

fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let mut syms: Vec<&Symbol> = a.symbols().chain(b.symbols()).collect();
    syms.sort_unstable();
    syms.dedup();
    for sym in syms {
        match a.exponent(sym).cmp(&b.exponent(sym)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn poly_plain(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in display_terms(p).iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_plain(m, &c.abs()));
    }
    out
}

fn term_plain(m: &Monomial, c: &BigRational) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || m.is_one() {
        parts.push(rational_plain(c));
    }
    let mut factors: Vec<&(Symbol, u32)> = m.factors().iter().collect();
    factors.sort_by(|(a, _), (b, _)| a.name().cmp(b.name()));
    for (sym, exp) in factors {
        if *exp == 1 {
            parts.push(sym.name().to_string());
        } else {
            let mut f = sym.name().to_string();
            f.push('^');
            f.push_str(&exp.to_string());
            parts.push(f);
        }
    }
    parts.join("*")
}

fn rational_plain(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        let mut s = c.numer().to_string();
        s.push('/');
        s.push_str(&c.denom().to_string());
        s
    }
}

fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in display_terms(p).iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&term_latex(m, &c.abs()));
    }
    out
}

fn term_latex(m: &Monomial, c: &BigRational) -> String {
    let mut out = String::new();
    if !c.is_one() || m.is_one() {
        if c.denom().is_one() {
            out.push_str(&c.numer().to_string());
        } else {
            out.push_str("\\frac{");
            out.push_str(&c.numer().to_string());
            out.push_str("}{");
            out.push_str(&c.denom().to_string());
            out.push('}');
        }
    }
    let mut factors: Vec<&(Symbol, u32)> = m.factors().iter().collect();
    factors.sort_by(|(a, _), (b, _)| a.name().cmp(b.name()));
    for (k, (sym, exp)) in factors.iter().enumerate() {
        // separate consecutive symbol factors; "2h" stays juxtaposed
        if k > 0 {
            out.push(' ');
        }
        out.push_str(&latex_symbol(sym));
        if *exp != 1 {
            out.push_str("^{");
            out.push_str(&exp.to_string());
            out.push('}');
        }
    }
    out
}

fn latex_symbol(sym: &Symbol) -> String {
    const GREEK: &[&str] = &[
        "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
        "lambda", "mu", "nu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi",
        "omega",
    ];
    let name = sym.name();
    if GREEK.contains(&name) {
        let mut s = String::from("\\");
        s.push_str(name);
        s
    } else {
        name.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse::{parse_scalar, SymbolContext};

    fn rf(text: &str, colours: &[&str]) -> RationalFunction {
        parse_scalar(text, &SymbolContext::with_colours(colours.iter().copied())).unwrap()
    }

    #[test]
    fn latex_golden_h_plus_lambda_s() {
        let x = rf("h + lambda*s", &["lambda"]);
        assert_eq!(format_latex(&x), "h+\\lambda s");
    }

    #[test]
    fn plain_round_trip_f() {
        let x = rf("h^2 - l*m*s^2 - h*s*(l-m)", &["l", "m"]);
        let text = format_plain(&x);
        assert_eq!(text, "h^2 - h*l*s + h*m*s - l*m*s^2");
        let back = rf(&text, &["l", "m"]);
        assert_eq!(back, x);
    }

    #[test]
    fn plain_rational_function() {
        let x = rf("(h + eta*s)^2 / (2*h)", &["eta"]);
        let text = format_plain(&x);
        assert_eq!(text, "(h^2 + 2*eta*h*s + eta^2*s^2)/(2*h)");
        assert_eq!(rf(&text, &["eta"]), x);
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(format_plain(&RationalFunction::zero()), "0");
        assert_eq!(format_plain(&RationalFunction::from_int(-7)), "-7");
        let half = rf("1/2", &[]);
        assert_eq!(format_plain(&half), "1/2");
        assert_eq!(format_latex(&half), "\\frac{1}{2}");
    }
}
