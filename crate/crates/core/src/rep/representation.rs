//! The fundamental two-dimensional representation and evaluation of formal
//! tensor expressions into exact matrices.

use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{MatrixError, ParamMatrix};
use crate::scalar::{RationalFunction, ScalarError, Symbol};

use super::generators::{GeneratorSymbol, TensorExpression, Word};

#[derive(Clone, PartialEq, Debug)]
pub enum RepError {
    LegColourMismatch { legs: usize, colours: usize },
    Matrix(MatrixError),
    Scalar(ScalarError),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::LegColourMismatch { legs, colours } => {
                write!(f, "expression has {legs} legs but {colours} colours were given")
            }
            RepError::Matrix(e) => write!(f, "{e}"),
            RepError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RepError {}

impl From<MatrixError> for RepError {
    fn from(e: MatrixError) -> Self {
        RepError::Matrix(e)
    }
}

impl From<ScalarError> for RepError {
    fn from(e: ScalarError) -> Self {
        RepError::Scalar(e)
    }
}

/// A colour value: the eigenvalue of the central generator `Z`. Usually a
/// colour symbol, sometimes a rational constant or a compound value.
#[derive(Clone, PartialEq, Debug)]
pub struct ColourParam(RationalFunction);

impl ColourParam {
    pub fn new(value: RationalFunction) -> Self {
        ColourParam(value)
    }

    pub fn symbol(name: &str) -> Self {
        ColourParam(RationalFunction::symbol(Symbol::new(name)))
    }

    pub fn zero() -> Self {
        ColourParam(RationalFunction::zero())
    }

    pub fn value(&self) -> &RationalFunction {
        &self.0
    }
}

impl From<RationalFunction> for ColourParam {
    fn from(v: RationalFunction) -> Self {
        ColourParam(v)
    }
}

/// Which representation table to use.
///
/// `Quantum` is the fundamental representation of the deformed algebra;
/// `Classical` replaces the deformed `J-` image by `e21` (the Lie-algebra
/// matrix), which is the right arena for first-order (bialgebra) statements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepKind {
    Quantum,
    Classical,
}

/// The fundamental representation at a fixed colour.
#[derive(Clone, Debug)]
pub struct Representation {
    colour: ColourParam,
    kind: RepKind,
}

fn h() -> RationalFunction {
    RationalFunction::symbol(Symbol::h())
}

fn s() -> RationalFunction {
    RationalFunction::symbol(Symbol::s())
}

impl Representation {
    pub fn fundamental(colour: ColourParam) -> Self {
        Representation { colour, kind: RepKind::Quantum }
    }

    pub fn classical(colour: ColourParam) -> Self {
        Representation { colour, kind: RepKind::Classical }
    }

    pub fn colour(&self) -> &ColourParam {
        &self.colour
    }

    /// Matrix image of a single generator.
    pub fn image(&self, g: GeneratorSymbol) -> ParamMatrix {
        use GeneratorSymbol::*;
        let eta = self.colour.value();
        let mut m = ParamMatrix::zeros(2, 2);
        match g {
            One => return ParamMatrix::identity(2),
            J3 => {
                m.set(0, 0, RationalFunction::one());
                m.set(1, 1, RationalFunction::from_int(-1));
            }
            Jplus => {
                m.set(0, 1, RationalFunction::one());
            }
            Z => {
                m.set(0, 0, eta.clone());
                m.set(1, 1, eta.clone());
            }
            Jminus => match self.kind {
                RepKind::Quantum => {
                    let two_h = h().scale_int(2);
                    let plus = h().add(&eta.mul(&s()));
                    let minus = h().sub(&eta.mul(&s()));
                    m.set(0, 0, plus.mul(&plus).div(&two_h).expect("h symbol"));
                    m.set(1, 0, RationalFunction::one());
                    m.set(1, 1, minus.mul(&minus).div(&two_h).expect("h symbol"));
                }
                RepKind::Classical => {
                    m.set(1, 0, RationalFunction::one());
                }
            },
            E => {
                m.set(0, 0, RationalFunction::one());
                m.set(0, 1, h().scale_int(2));
                m.set(1, 1, RationalFunction::one());
            }
            Einv => {
                m.set(0, 0, RationalFunction::one());
                m.set(0, 1, h().scale_int(-2));
                m.set(1, 1, RationalFunction::one());
            }
        }
        m
    }

    /// Matrix image of a word (product of generator images).
    pub fn word(&self, w: &Word) -> ParamMatrix {
        let mut out = ParamMatrix::identity(2);
        for g in w.symbols() {
            out = out.mul(&self.image(*g)).expect("2x2 product");
        }
        out
    }
}

/// The full generator-to-matrix table at a colour (CLI-facing).
pub fn fundamental_rep(colour: &ColourParam) -> Vec<(GeneratorSymbol, ParamMatrix)> {
    let rep = Representation::fundamental(colour.clone());
    GeneratorSymbol::ALL.iter().map(|g| (*g, rep.image(*g))).collect()
}

/// Evaluates a tensor expression: each leg's word goes through the
/// representation at that leg's colour, legs combine by Kronecker product.
pub fn evaluate_tensor(
    expr: &TensorExpression,
    colours: &[ColourParam],
) -> Result<ParamMatrix, RepError> {
    evaluate_tensor_in(expr, colours, RepKind::Quantum)
}

pub fn evaluate_tensor_in(
    expr: &TensorExpression,
    colours: &[ColourParam],
    kind: RepKind,
) -> Result<ParamMatrix, RepError> {
    if expr.legs() != colours.len() {
        return Err(RepError::LegColourMismatch { legs: expr.legs(), colours: colours.len() });
    }
    let reps: Vec<Representation> = colours
        .iter()
        .map(|c| Representation { colour: c.clone(), kind })
        .collect();
    let dim = 1usize << colours.len();
    let mut acc = ParamMatrix::zeros(dim, dim);
    for (legs, coeff) in expr.terms() {
        let mut term = ParamMatrix::identity(1);
        for (w, rep) in legs.iter().zip(&reps) {
            term = term.kron(&rep.word(w));
        }
        acc = acc.add(&term.scale(coeff))?;
    }
    Ok(acc)
}

/// `W = h J3 + s Z`, the exponent body of the universal R-matrix.
fn exponent_body() -> super::generators::Expression {
    use super::generators::Expression;
    Expression::generator(GeneratorSymbol::J3)
        .scale(&h())
        .add(&Expression::generator(GeneratorSymbol::Z).scale(&s()))
}

/// Truncated formal expansion of the universal R-matrix
/// `exp{-J+ ⊗ W} exp{W ⊗ J+}` to the given order per factor.
///
/// In any evaluation through the 2-dimensional representation the series
/// terminates: `J+` images square to zero and coproducts of `J+` powers cube
/// to zero, so order 3 is already exact for every use in this crate (the
/// tests pin this by comparing orders).
pub fn universal_r_formal(order: usize) -> TensorExpression {
    use super::generators::Expression;
    let jp = Expression::generator(GeneratorSymbol::Jplus);
    let w = exponent_body();
    let mut factorial: i64 = 1;
    let mut first = TensorExpression::zero(2);
    let mut second = TensorExpression::zero(2);
    for k in 0..=order {
        if k > 0 {
            factorial *= k as i64;
        }
        let inv_fact = RationalFunction::from_int(1)
            .div(&RationalFunction::from_int(factorial))
            .expect("factorial nonzero");
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let jp_k = jp.pow(k);
        let w_k = w.pow(k);
        first = first.add(
            &TensorExpression::of_pair(&jp_k, &w_k).scale(&inv_fact.scale_int(sign)),
        );
        second = second.add(&TensorExpression::of_pair(&w_k, &jp_k).scale(&inv_fact));
    }
    first.mul(&second)
}

/// The universal R-matrix in the representation `π_λ ⊗ π_μ`, computed from
/// the exponential formula by exact nilpotent exponentials.
pub fn universal_r_rep(lambda: &ColourParam, mu: &ColourParam) -> Result<ParamMatrix, RepError> {
    let rl = Representation::fundamental(lambda.clone());
    let rm = Representation::fundamental(mu.clone());
    let w_of = |rep: &Representation| {
        rep.image(GeneratorSymbol::J3)
            .scale(&h())
            .add(&rep.image(GeneratorSymbol::Z).scale(&s()))
            .expect("2x2 add")
    };
    let a = rl.image(GeneratorSymbol::Jplus).kron(&w_of(&rm)).neg();
    let b = w_of(&rl).kron(&rm.image(GeneratorSymbol::Jplus));
    Ok(a.exp_nilpotent()?.mul(&b.exp_nilpotent()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, SymbolContext};
    use GeneratorSymbol::*;

    fn rf(text: &str) -> RationalFunction {
        parse_scalar(text, &SymbolContext::with_colours(["eta", "lambda", "mu"])).unwrap()
    }

    #[test]
    fn jminus_image_matches_table() {
        let rep = Representation::fundamental(ColourParam::symbol("eta"));
        let jm = rep.image(Jminus);
        assert_eq!(*jm.get(0, 0), rf("(h + eta*s)^2/(2*h)"));
        assert_eq!(*jm.get(1, 0), RationalFunction::one());
        assert_eq!(*jm.get(1, 1), rf("(h - eta*s)^2/(2*h)"));
        assert!(jm.get(0, 1).is_zero());
    }

    #[test]
    fn jminus_at_zero_colour() {
        let rep = Representation::fundamental(ColourParam::zero());
        let jm = rep.image(Jminus);
        assert_eq!(*jm.get(0, 0), rf("h/2"));
        assert_eq!(*jm.get(1, 1), rf("h/2"));
    }

    #[test]
    fn e_einv_inverse_and_exponential() {
        let rep = Representation::fundamental(ColourParam::symbol("eta"));
        let e = rep.image(E);
        let einv = rep.image(Einv);
        assert_eq!(e.mul(&einv).unwrap(), ParamMatrix::identity(2));
        // pi(E) equals the exact exponential of 2h pi(J+)
        let jp2h = rep.image(Jplus).scale(&rf("2*h"));
        assert_eq!(jp2h.exp_nilpotent().unwrap(), e);
    }

    #[test]
    fn commutator_jp_jm() {
        // [pi(J+), pi(J-)] = [[1, -2 eta s], [0, -1]]
        let rep = Representation::fundamental(ColourParam::symbol("eta"));
        let c = rep.image(Jplus).commutator(&rep.image(Jminus)).unwrap();
        assert_eq!(*c.get(0, 0), RationalFunction::one());
        assert_eq!(*c.get(0, 1), rf("-2*eta*s"));
        assert!(c.get(1, 0).is_zero());
        assert_eq!(*c.get(1, 1), RationalFunction::from_int(-1));
    }

    #[test]
    fn jplus_squares_to_zero() {
        let rep = Representation::fundamental(ColourParam::symbol("eta"));
        let jp = rep.image(Jplus);
        assert!(jp.mul(&jp).unwrap().is_zero());
    }

    #[test]
    fn evaluate_primitive_coproducts() {
        use super::super::generators::coproduct;
        let lam = ColourParam::symbol("lambda");
        let mu = ColourParam::symbol("mu");
        // Delta(Z) evaluates to (lambda + mu) I4
        let dz = evaluate_tensor(&coproduct(Z), &[lam.clone(), mu.clone()]).unwrap();
        let expect = ParamMatrix::identity(4).scale(&rf("lambda + mu"));
        assert_eq!(dz, expect);
        // Delta(J+) evaluates to I ox e12 + e12 ox I
        let dj = evaluate_tensor(&coproduct(Jplus), &[lam.clone(), mu.clone()]).unwrap();
        let rep = Representation::fundamental(ColourParam::zero());
        let e12 = rep.image(Jplus);
        let expect = ParamMatrix::identity(2)
            .kron(&e12)
            .add(&e12.kron(&ParamMatrix::identity(2)))
            .unwrap();
        assert_eq!(dj, expect);
        // unit evaluates to I4
        let unit = TensorExpression::unit(2);
        assert_eq!(
            evaluate_tensor(&unit, &[lam, mu]).unwrap(),
            ParamMatrix::identity(4)
        );
    }

    #[test]
    fn leg_colour_mismatch_is_an_error() {
        let unit = TensorExpression::unit(2);
        assert!(matches!(
            evaluate_tensor(&unit, &[ColourParam::zero()]),
            Err(RepError::LegColourMismatch { legs: 2, colours: 1 })
        ));
    }

    #[test]
    fn formal_r_truncation_is_stable() {
        let lam = ColourParam::symbol("lambda");
        let mu = ColourParam::symbol("mu");
        let r3 = evaluate_tensor(&universal_r_formal(3), &[lam.clone(), mu.clone()]).unwrap();
        let r4 = evaluate_tensor(&universal_r_formal(4), &[lam.clone(), mu.clone()]).unwrap();
        assert_eq!(r3, r4);
        // and both agree with the nilpotent-exponential route
        let direct = universal_r_rep(&lam, &mu).unwrap();
        assert_eq!(r3, direct);
    }
}
