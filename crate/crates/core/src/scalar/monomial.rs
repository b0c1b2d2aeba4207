use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::symbol::Symbol;

/// A power product of symbols with positive exponents, e.g. `h^2 * s * lambda`.
///
/// Stored as a sorted `(symbol, exponent)` list with no zero exponents; the
/// empty product is `1`. Ordered by graded lexicographic order over the fixed
/// symbol order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn symbol(sym: Symbol) -> Self {
        Monomial { factors: alloc::vec![(sym, 1)] }
    }

    /// Builds from arbitrary pairs: merges duplicates, drops zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Symbol, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(Symbol, u32)> = Vec::new();
        for (sym, exp) in pairs {
            if exp == 0 {
                continue;
            }
            match factors.binary_search_by(|(s, _)| s.cmp(&sym)) {
                Ok(i) => factors[i].1 += exp,
                Err(i) => factors.insert(i, (sym, exp)),
            }
        }
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    /// Total degree counting only the given symbols.
    pub fn degree_in(&self, syms: &[Symbol]) -> u64 {
        self.factors
            .iter()
            .filter(|(s, _)| syms.contains(s))
            .map(|(_, e)| u64::from(*e))
            .sum()
    }

    pub fn exponent(&self, sym: &Symbol) -> u32 {
        match self.factors.binary_search_by(|(s, _)| s.cmp(sym)) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.factors
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.factors.iter().map(|(s, _)| s)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    factors.push(self.factors[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(other.factors[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((self.factors[i].0.clone(), self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|(s, e)| (s.clone(), e * n)).collect(),
        }
    }

    /// Exact division; `None` if some exponent of `other` exceeds `self`'s.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for (sym, exp) in &self.factors {
            let mut e = *exp;
            if j < other.factors.len() && other.factors[j].0 < *sym {
                return None; // other has a symbol self lacks
            }
            if j < other.factors.len() && other.factors[j].0 == *sym {
                if other.factors[j].1 > e {
                    return None;
                }
                e -= other.factors[j].1;
                j += 1;
            }
            if e > 0 {
                factors.push((sym.clone(), e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    let e = self.factors[i].1.min(other.factors[j].1);
                    factors.push((self.factors[i].0.clone(), e));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the monomial with the
    /// larger exponent on the earliest differing symbol is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                // self has a power of an earlier symbol that other lacks
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    match self.factors[i].1.cmp(&other.factors[j].1) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        match (i < self.factors.len(), j < other.factors.len()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (sym, exp)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *exp == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{exp}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|(n, e)| (Symbol::new(n), *e)))
    }

    #[test]
    fn grlex_order() {
        // degree dominates
        assert!(m(&[("h", 1)]) < m(&[("s", 2)]));
        // equal degree: earlier symbol with higher power wins
        assert!(m(&[("h", 2)]) > m(&[("h", 1), ("s", 1)]));
        assert!(m(&[("h", 1), ("s", 1)]) > m(&[("s", 2)]));
        assert!(m(&[("s", 1)]) > m(&[("lambda", 1)]));
    }

    #[test]
    fn div_and_gcd() {
        let a = m(&[("h", 3), ("s", 1)]);
        let b = m(&[("h", 1), ("s", 1)]);
        assert_eq!(a.try_div(&b), Some(m(&[("h", 2)])));
        assert_eq!(b.try_div(&a), None);
        assert_eq!(a.gcd(&m(&[("h", 1), ("lambda", 2)])), m(&[("h", 1)]));
    }

    #[test]
    fn zero_exponents_dropped() {
        assert!(m(&[("h", 0)]).is_one());
        assert_eq!(m(&[("h", 1), ("h", 2)]), m(&[("h", 3)]));
    }
}
