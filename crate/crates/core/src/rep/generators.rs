//! Formal generator words and the Hopf structure maps of `U_{h,s}gl(2)`.
//!
//! `E` stands for the grouplike exponential `e^{2hJ+}` and `Einv` for its
//! inverse; treating them as generators keeps every coproduct and antipode a
//! finite expression. The structure maps below are the defining tables; they
//! extend to words multiplicatively (coproduct, counit) and
//! anti-multiplicatively (antipode).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalar::{RationalFunction, Symbol};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorSymbol {
    One,
    J3,
    Jplus,
    Jminus,
    Z,
    E,
    Einv,
}

impl GeneratorSymbol {
    pub const ALL: [GeneratorSymbol; 7] = [
        GeneratorSymbol::One,
        GeneratorSymbol::J3,
        GeneratorSymbol::Jplus,
        GeneratorSymbol::Jminus,
        GeneratorSymbol::Z,
        GeneratorSymbol::E,
        GeneratorSymbol::Einv,
    ];

    /// The four algebra generators of Eq-style identities.
    pub const LIE: [GeneratorSymbol; 4] = [
        GeneratorSymbol::J3,
        GeneratorSymbol::Jplus,
        GeneratorSymbol::Jminus,
        GeneratorSymbol::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorSymbol::One => "1",
            GeneratorSymbol::J3 => "J3",
            GeneratorSymbol::Jplus => "J+",
            GeneratorSymbol::Jminus => "J-",
            GeneratorSymbol::Z => "Z",
            GeneratorSymbol::E => "E",
            GeneratorSymbol::Einv => "E^-1",
        }
    }
}

/// An ordered product of generator symbols; empty means the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<GeneratorSymbol>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: GeneratorSymbol) -> Self {
        Word(alloc::vec![g])
    }

    pub fn from_symbols(syms: &[GeneratorSymbol]) -> Self {
        Word(syms.to_vec())
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// Finite sum of words with scalar coefficients (one tensor leg).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Expression {
    terms: BTreeMap<Word, RationalFunction>,
}

impl Expression {
    pub fn zero() -> Self {
        Expression::default()
    }

    pub fn one() -> Self {
        Expression::term(Word::one(), RationalFunction::one())
    }

    pub fn generator(g: GeneratorSymbol) -> Self {
        Expression::term(Word::single(g), RationalFunction::one())
    }

    pub fn term(w: Word, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Expression { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Expression) -> Expression {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Expression {
        let mut out = Expression::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Expression {
        self.scale(&RationalFunction::from_int(-1))
    }

    pub fn mul(&self, other: &Expression) -> Expression {
        let mut out = Expression::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Expression {
        let mut out = Expression::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Symbols used across all words.
    pub fn generator_set(&self) -> Vec<GeneratorSymbol> {
        let mut out = Vec::new();
        for w in self.terms.keys() {
            for g in w.symbols() {
                if !out.contains(g) {
                    out.push(*g);
                }
            }
        }
        out.sort();
        out
    }
}

/// Formal sum of tensor products of words, all with the same leg count.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorExpression {
    legs: usize,
    terms: BTreeMap<Vec<Word>, RationalFunction>,
}

impl TensorExpression {
    pub fn zero(legs: usize) -> Self {
        TensorExpression { legs, terms: BTreeMap::new() }
    }

    pub fn unit(legs: usize) -> Self {
        TensorExpression::term(alloc::vec![Word::one(); legs], RationalFunction::one())
    }

    pub fn term(legs: Vec<Word>, c: RationalFunction) -> Self {
        let n = legs.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(legs, c);
        }
        TensorExpression { legs: n, terms }
    }

    /// `e1 ⊗ e2` of one-leg expressions.
    pub fn of_pair(e1: &Expression, e2: &Expression) -> Self {
        let mut out = TensorExpression::zero(2);
        for (w1, c1) in e1.terms() {
            for (w2, c2) in e2.terms() {
                out.add_term(alloc::vec![w1.clone(), w2.clone()], c1.mul(c2));
            }
        }
        out
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: RationalFunction) {
        debug_assert_eq!(legs.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorExpression) -> TensorExpression {
        debug_assert_eq!(self.legs, other.legs);
        let mut out = self.clone();
        for (legs, c) in &other.terms {
            out.add_term(legs.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> TensorExpression {
        let mut out = TensorExpression::zero(self.legs);
        for (legs, k) in &self.terms {
            out.add_term(legs.clone(), k.mul(c));
        }
        out
    }

    /// Legwise product: `(a1⊗a2)(b1⊗b2) = a1b1 ⊗ a2b2`, extended bilinearly.
    pub fn mul(&self, other: &TensorExpression) -> TensorExpression {
        debug_assert_eq!(self.legs, other.legs);
        let mut out = TensorExpression::zero(self.legs);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let legs: Vec<Word> =
                    l1.iter().zip(l2.iter()).map(|(a, b)| a.concat(b)).collect();
                out.add_term(legs, c1.mul(c2));
            }
        }
        out
    }

    /// Flips the two legs of a 2-leg expression.
    pub fn flip(&self) -> TensorExpression {
        debug_assert_eq!(self.legs, 2);
        let mut out = TensorExpression::zero(2);
        for (legs, c) in &self.terms {
            out.add_term(alloc::vec![legs[1].clone(), legs[0].clone()], c.clone());
        }
        out
    }

    pub fn generator_set(&self) -> Vec<GeneratorSymbol> {
        let mut out = Vec::new();
        for legs in self.terms.keys() {
            for w in legs {
                for g in w.symbols() {
                    if !out.contains(g) {
                        out.push(*g);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn h() -> RationalFunction {
    RationalFunction::symbol(Symbol::h())
}

fn s() -> RationalFunction {
    RationalFunction::symbol(Symbol::s())
}

fn s_over_h() -> RationalFunction {
    s().div(&h()).expect("h is a symbol")
}

/// Coproduct of a single generator.
pub fn coproduct(g: GeneratorSymbol) -> TensorExpression {
    use GeneratorSymbol::*;
    let one = RationalFunction::one;
    let w = Word::single;
    let unit = Word::one;
    match g {
        One => TensorExpression::term(alloc::vec![unit(), unit()], one()),
        Jplus => {
            let mut t = TensorExpression::term(alloc::vec![unit(), w(Jplus)], one());
            t.add_term(alloc::vec![w(Jplus), unit()], one());
            t
        }
        Z => {
            let mut t = TensorExpression::term(alloc::vec![unit(), w(Z)], one());
            t.add_term(alloc::vec![w(Z), unit()], one());
            t
        }
        J3 => {
            let mut t = TensorExpression::term(alloc::vec![unit(), w(J3)], one());
            t.add_term(alloc::vec![w(J3), w(E)], one());
            t.add_term(alloc::vec![w(Z), w(E)], s_over_h());
            t.add_term(alloc::vec![w(Z), unit()], s_over_h().neg());
            t
        }
        Jminus => {
            let ze = Word::from_symbols(&[Z, E]);
            let mut t = TensorExpression::term(alloc::vec![unit(), w(Jminus)], one());
            t.add_term(alloc::vec![w(Jminus), w(E)], one());
            t.add_term(alloc::vec![w(J3), ze.clone()], s());
            t.add_term(alloc::vec![w(Z), ze], s().mul(&s_over_h()));
            t
        }
        E => TensorExpression::term(alloc::vec![w(E), w(E)], one()),
        Einv => TensorExpression::term(alloc::vec![w(Einv), w(Einv)], one()),
    }
}

/// Coproduct extended multiplicatively to a word.
pub fn coproduct_word(word: &Word) -> TensorExpression {
    let mut out = TensorExpression::unit(2);
    for g in word.symbols() {
        out = out.mul(&coproduct(*g));
    }
    out
}

/// Counit of a single generator.
pub fn counit(g: GeneratorSymbol) -> RationalFunction {
    use GeneratorSymbol::*;
    match g {
        One | E | Einv => RationalFunction::one(),
        J3 | Jplus | Jminus | Z => RationalFunction::zero(),
    }
}

/// Counit extended multiplicatively to a word.
pub fn counit_word(word: &Word) -> RationalFunction {
    let mut out = RationalFunction::one();
    for g in word.symbols() {
        out = out.mul(&counit(*g));
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Antipode of a single generator, as a word sum.
pub fn antipode(g: GeneratorSymbol) -> Expression {
    use GeneratorSymbol::*;
    match g {
        One => Expression::one(),
        Jplus => Expression::generator(Jplus).neg(),
        Z => Expression::generator(Z).neg(),
        E => Expression::generator(Einv),
        Einv => Expression::generator(E),
        J3 => {
            let mut e = Expression::term(
                Word::from_symbols(&[J3, Einv]),
                RationalFunction::from_int(-1),
            );
            e.add_term(Word::single(Z), s_over_h());
            e.add_term(Word::from_symbols(&[Z, Einv]), s_over_h().neg());
            e
        }
        Jminus => {
            let mut e = Expression::term(
                Word::from_symbols(&[Jminus, Einv]),
                RationalFunction::from_int(-1),
            );
            e.add_term(Word::from_symbols(&[J3, Z, Einv]), s());
            e.add_term(Word::from_symbols(&[Z, Z, Einv]), s().mul(&s_over_h()));
            e
        }
    }
}

/// Antipode extended anti-multiplicatively to a word.
pub fn antipode_word(word: &Word) -> Expression {
    let mut out = Expression::one();
    for g in word.symbols().iter().rev() {
        out = out.mul(&antipode(*g));
    }
    out
}

/// Splices the coproduct into one leg of a tensor expression, producing a
/// `legs+1`-leg expression.
pub fn coproduct_at_leg(expr: &TensorExpression, leg: usize) -> TensorExpression {
    let mut out = TensorExpression::zero(expr.legs() + 1);
    for (legs, c) in expr.terms() {
        let spliced = coproduct_word(&legs[leg]);
        for (pair, c2) in spliced.terms() {
            let mut new_legs = Vec::with_capacity(legs.len() + 1);
            new_legs.extend_from_slice(&legs[..leg]);
            new_legs.push(pair[0].clone());
            new_legs.push(pair[1].clone());
            new_legs.extend_from_slice(&legs[leg + 1..]);
            out.add_term(new_legs, c.mul(c2));
        }
    }
    out
}

/// Applies the counit to one leg, dropping it.
pub fn counit_at_leg(expr: &TensorExpression, leg: usize) -> TensorExpression {
    let mut out = TensorExpression::zero(expr.legs() - 1);
    for (legs, c) in expr.terms() {
        let eps = counit_word(&legs[leg]);
        if eps.is_zero() {
            continue;
        }
        let mut new_legs = Vec::with_capacity(legs.len() - 1);
        new_legs.extend_from_slice(&legs[..leg]);
        new_legs.extend_from_slice(&legs[leg + 1..]);
        out.add_term(new_legs, c.mul(&eps));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorSymbol::*;

    #[test]
    fn coproduct_examples() {
        // Delta(J+) = 1 ox J+ + J+ ox 1
        let d = coproduct(Jplus);
        assert_eq!(d.terms().count(), 2);
        // Delta(Z) primitive
        let d = coproduct(Z);
        assert_eq!(d.terms().count(), 2);
        // Delta(J3) has 4 canonical terms incl. (s/h) Z ox (E - 1)
        let d = coproduct(J3);
        assert_eq!(d.terms().count(), 4);
    }

    #[test]
    fn antipode_and_counit_tables() {
        assert_eq!(antipode(Jplus), Expression::generator(Jplus).neg());
        assert!(counit(J3).is_zero());
        assert!(counit(E).is_one());
        // gamma(J3) = -J3 Einv + (s/h) Z (1 - Einv): 3 terms
        assert_eq!(antipode(J3).terms().count(), 3);
    }

    #[test]
    fn hopf_subalgebra_closure() {
        // Delta, gamma images of {J3, J+, Z, E} only mention {1, J3, J+, Z, E, Einv}
        let allowed = [One, J3, Jplus, Z, E, Einv];
        for g in [J3, Jplus, Z, E] {
            for gen in coproduct(g).generator_set() {
                assert!(allowed.contains(&gen), "coproduct of {g:?} leaks {gen:?}");
            }
            for gen in antipode(g).generator_set() {
                assert!(allowed.contains(&gen), "antipode of {g:?} leaks {gen:?}");
            }
        }
        // J- is genuinely outside: its coproduct mentions J-
        assert!(coproduct(Jminus).generator_set().contains(&Jminus));
    }

    #[test]
    fn antipode_word_reverses() {
        let w = Word::from_symbols(&[Jplus, Z]);
        let g = antipode_word(&w);
        // gamma(J+ Z) = gamma(Z) gamma(J+) = Z J+ (two minus signs cancel)
        assert_eq!(
            g,
            Expression::term(Word::from_symbols(&[Z, Jplus]), RationalFunction::one())
        );
    }
}
