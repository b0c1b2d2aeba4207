//! Free noncommutative polynomials in coloured quantum-matrix generators.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{format_plain, Bindings, RationalFunction, Symbol};

/// One of the four matrix entries of a coloured `T`-matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn name(self) -> &'static str {
        match self {
            Letter::A => "a",
            Letter::B => "b",
            Letter::C => "c",
            Letter::D => "d",
        }
    }
}

/// A coloured generator, e.g. `a_lambda`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NCGenerator {
    pub letter: Letter,
    pub colour: Symbol,
}

impl NCGenerator {
    pub fn new(letter: Letter, colour: Symbol) -> Self {
        NCGenerator { letter, colour }
    }
}

/// An ordered product of coloured generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct NCWord {
    letters: Vec<NCGenerator>,
}

impl NCWord {
    pub fn one() -> Self {
        NCWord::default()
    }

    pub fn single(g: NCGenerator) -> Self {
        NCWord { letters: alloc::vec![g] }
    }

    pub fn from_parts(letters: Vec<NCGenerator>) -> Self {
        NCWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[NCGenerator] {
        &self.letters
    }

    pub fn concat(&self, other: &NCWord) -> NCWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        NCWord { letters }
    }

    /// Count of letters per colour.
    pub fn colour_content(&self) -> ColourContent {
        let mut counts = BTreeMap::new();
        for g in &self.letters {
            *counts.entry(g.colour.clone()).or_insert(0usize) += 1;
        }
        ColourContent { counts }
    }

    /// Renames each occurrence of colour `from` to `to`.
    pub fn rename_colour(&self, from: &Symbol, to: &Symbol) -> NCWord {
        NCWord {
            letters: self
                .letters
                .iter()
                .map(|g| {
                    let colour = if &g.colour == from { to.clone() } else { g.colour.clone() };
                    NCGenerator { letter: g.letter, colour }
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|g| {
                let mut s = g.letter.name().to_string();
                s.push('_');
                s.push_str(g.colour.name());
                s
            })
            .collect();
        parts.join("*")
    }
}

/// Multiset of colours with multiplicities; the grading of a sector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct ColourContent {
    counts: BTreeMap<Symbol, usize>,
}

impl ColourContent {
    pub fn new<I: IntoIterator<Item = (Symbol, usize)>>(items: I) -> Self {
        let mut counts = BTreeMap::new();
        for (sym, n) in items {
            if n > 0 {
                *counts.entry(sym).or_insert(0) += n;
            }
        }
        ColourContent { counts }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn counts(&self) -> &BTreeMap<Symbol, usize> {
        &self.counts
    }

    pub fn add(&self, other: &ColourContent) -> ColourContent {
        let mut counts = self.counts.clone();
        for (sym, n) in &other.counts {
            *counts.entry(sym.clone()).or_insert(0) += n;
        }
        ColourContent { counts }
    }

    /// Componentwise subtraction; `None` if any count would go negative.
    pub fn checked_sub(&self, other: &ColourContent) -> Option<ColourContent> {
        let mut counts = self.counts.clone();
        for (sym, n) in &other.counts {
            let c = counts.get_mut(sym)?;
            if *c < *n {
                return None;
            }
            *c -= n;
            if *c == 0 {
                counts.remove(sym);
            }
        }
        Some(ColourContent { counts })
    }
}

/// Noncommutative polynomial: canonical word-to-coefficient map.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, RationalFunction>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::term(NCWord::one(), RationalFunction::one())
    }

    pub fn generator(g: NCGenerator) -> Self {
        NCPoly::term(NCWord::single(g), RationalFunction::one())
    }

    pub fn term(w: NCWord, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: NCWord, c: RationalFunction) {
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

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// `pq - qp`.
    pub fn commutator(&self, other: &NCPoly) -> NCPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// The common colour content of all words; `None` when terms disagree
    /// (inhomogeneous) or the polynomial is zero.
    pub fn homogeneous_content(&self) -> Option<ColourContent> {
        let mut it = self.terms.keys();
        let first = it.next()?.colour_content();
        for w in it {
            if w.colour_content() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Word length when homogeneous in length.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.len();
        it.all(|w| w.len() == first).then_some(first)
    }

    /// Substitutes into the coefficients; word structure is untouched.
    pub fn substitute_coeffs(&self, bindings: &Bindings) -> Result<NCPoly, crate::scalar::ScalarError> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.substitute(bindings)?);
        }
        Ok(out)
    }

    /// Renames a colour label on letters and substitutes the corresponding
    /// symbol in coefficients (the monochromatic-limit map).
    pub fn rename_colour(&self, from: &Symbol, to: &Symbol) -> NCPoly {
        let mut bindings = Bindings::new();
        bindings.insert(from.clone(), RationalFunction::symbol(to.clone()));
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let coeff = c.substitute(&bindings).expect("symbol-for-symbol substitution");
            out.add_term(w.rename_colour(from, to), coeff);
        }
        out
    }

    pub fn text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let coeff = format_plain(c);
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff),
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push(' ');
                out.push(sign.chars().next().expect("sign"));
                out.push(' ');
            }
            let needs_parens = mag.contains(' ') || (mag.contains('+') && !mag.starts_with('('));
            let coeff_part = if mag == "1" && !w.is_empty() {
                String::new()
            } else if needs_parens {
                let mut s = String::from("(");
                s.push_str(&mag);
                s.push(')');
                s
            } else {
                mag
            };
            match (coeff_part.is_empty(), w.is_empty()) {
                (true, _) => out.push_str(&w.text()),
                (false, true) => out.push_str(&coeff_part),
                (false, false) => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&w.text());
                }
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(letter: Letter, colour: &str) -> NCPoly {
        NCPoly::generator(NCGenerator::new(letter, Symbol::new(colour)))
    }

    #[test]
    fn grading_adds_under_products() {
        let a = g(Letter::A, "lambda");
        let d = g(Letter::D, "mu");
        let p = a.mul(&d);
        let content = p.homogeneous_content().unwrap();
        assert_eq!(content.total(), 2);
        assert_eq!(p.homogeneous_length(), Some(2));
        let q = p.mul(&p);
        assert_eq!(q.homogeneous_length(), Some(4));
        assert_eq!(
            q.homogeneous_content().unwrap(),
            content.add(&content)
        );
    }

    #[test]
    fn commutator_antisymmetry() {
        let a = g(Letter::A, "lambda");
        let c = g(Letter::C, "mu");
        assert_eq!(a.commutator(&c), c.commutator(&a).neg());
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn rename_colour_merges_nothing_silently() {
        let lam = Symbol::new("lambda");
        let mu = Symbol::new("mu");
        let p = g(Letter::A, "lambda").mul(&g(Letter::A, "mu"));
        let q = g(Letter::A, "mu").mul(&g(Letter::A, "lambda"));
        let diff = p.sub(&q); // [a_l, a_m]
        let mono = diff.rename_colour(&mu, &lam);
        assert!(mono.is_zero());
    }

    #[test]
    fn text_rendering() {
        let a = g(Letter::A, "lambda");
        let d = g(Letter::D, "lambda");
        let h = RationalFunction::symbol(Symbol::h());
        let p = a.mul(&d).sub(&d.mul(&a).scale(&h));
        assert_eq!(p.text(), "a_lambda*d_lambda - h*d_lambda*a_lambda");
    }
}
