//! Graded sectors of the free coloured algebra and exact linear algebra on
//! them.
//!
//! A sector is the span of all words with a fixed colour multidegree; every
//! span or membership question in this crate lives in one sector, where it is
//! finite dimensional. Row reduction is fraction-free over the polynomial
//! ring with content stripping after every combination, pivots are chosen by
//! lowest total degree (then fewest terms, then arrival order), and symbolic
//! ranks are re-checked at random rational parameter points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Bindings, Polynomial, RationalFunction, Symbol};

use super::ncpoly::{ColourContent, Letter, NCGenerator, NCPoly, NCWord};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SectorError {
    /// The polynomial mixes words of different colour multidegree.
    Inhomogeneous,
    /// A word does not belong to the sector basis.
    ForeignWord,
    /// The sector dimension exceeds the configured cap.
    TooLarge { dim: usize, cap: usize },
    /// The symbolic rank disagrees with the rank at a rational sample point.
    RankGuardMismatch { symbolic: usize, sampled: usize, point: usize },
}

impl fmt::Display for SectorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectorError::Inhomogeneous => f.write_str("polynomial is not sector-homogeneous"),
            SectorError::ForeignWord => f.write_str("word lies outside the sector"),
            SectorError::TooLarge { dim, cap } => {
                write!(f, "sector dimension {dim} exceeds the configured cap {cap}")
            }
            SectorError::RankGuardMismatch { symbolic, sampled, point } => write!(
                f,
                "symbolic rank {symbolic} disagrees with rank {sampled} at sample point {point}"
            ),
        }
    }
}

impl core::error::Error for SectorError {}

/// Ordered word basis of one sector.
#[derive(Clone, Debug)]
pub struct SectorBasis {
    words: Vec<NCWord>,
    index: BTreeMap<NCWord, usize>,
}

impl SectorBasis {
    /// Enumerates every word with the given colour multidegree, ordered
    /// lexicographically by the (letter, colour) sequence.
    pub fn for_content(content: &ColourContent) -> Self {
        let mut colours: Vec<Symbol> = Vec::new();
        for (sym, n) in content.counts() {
            for _ in 0..*n {
                colours.push(sym.clone());
            }
        }
        let n = colours.len();
        let mut arrangements: Vec<Vec<Symbol>> = Vec::new();
        permute_multiset(&colours, &mut Vec::new(), &mut arrangements);
        let mut words = Vec::new();
        for arrangement in &arrangements {
            let mut letter_choice = alloc::vec![0usize; n];
            loop {
                let word = NCWord::from_parts(
                    (0..n)
                        .map(|i| NCGenerator::new(Letter::ALL[letter_choice[i]], arrangement[i].clone()))
                        .collect(),
                );
                words.push(word);
                // odometer over letters
                let mut k = n;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    letter_choice[k] += 1;
                    if letter_choice[k] < 4 {
                        break;
                    }
                    letter_choice[k] = 0;
                }
                if letter_choice.iter().all(|&x| x == 0) {
                    break;
                }
            }
        }
        words.sort();
        words.dedup();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        SectorBasis { words, index }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, i: usize) -> &NCWord {
        &self.words[i]
    }

    pub fn index_of(&self, w: &NCWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of a sector-homogeneous polynomial.
    pub fn vectorize(&self, p: &NCPoly) -> Result<SparseVec, SectorError> {
        let mut v = SparseVec::new();
        for (w, c) in p.terms() {
            let idx = self.index_of(w).ok_or(SectorError::ForeignWord)?;
            v.insert(idx, c.clone());
        }
        Ok(v)
    }
}

fn permute_multiset(items: &[Symbol], prefix: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
    if prefix.len() == items.len() {
        out.push(prefix.clone());
        return;
    }
    let mut remaining: Vec<Symbol> = items.to_vec();
    for p in prefix.iter() {
        let pos = remaining.iter().position(|x| x == p).expect("prefix from items");
        remaining.remove(pos);
    }
    remaining.sort();
    remaining.dedup();
    for sym in remaining {
        prefix.push(sym.clone());
        permute_multiset(items, prefix, out);
        prefix.pop();
    }
}

/// Sparse vector over the rational-function field.
pub type SparseVec = BTreeMap<usize, RationalFunction>;

/// One echelon row: content-free polynomial coordinates plus (optionally) the
/// combination over input rows it represents, over the fraction field.
#[derive(Clone, Debug)]
struct Row {
    coords: BTreeMap<usize, Polynomial>,
    combo: Option<BTreeMap<usize, RationalFunction>>,
    order: usize,
}

impl Row {
    fn leading_col(&self) -> usize {
        *self.coords.keys().next().expect("nonempty row")
    }

    fn pivot_poly(&self) -> &Polynomial {
        self.coords.values().next().expect("nonempty row")
    }

    /// Divides out the content and fixes the sign of the leading coordinate.
    /// Keeps `combo` consistent.
    ///
    /// Stripping runs in two gears: the cheap gear removes the common
    /// monomial factor and the rational content (no polynomial gcd at all);
    /// the full polynomial-gcd gear only engages when coefficients have
    /// grown past a degree threshold, which keeps the frequent small steps
    /// fast while still capping expression swell.
    fn normalize(&mut self) {
        if self.coords.is_empty() {
            return;
        }
        // monomial content across all coordinates
        let mut mono = self
            .coords
            .values()
            .next()
            .expect("nonempty")
            .monomial_content();
        for p in self.coords.values() {
            if mono.is_one() {
                break;
            }
            mono = mono.gcd(&p.monomial_content());
        }
        if !mono.is_one() {
            for p in self.coords.values_mut() {
                *p = p.div_monomial(&mono);
            }
            if let Some(combo) = &mut self.combo {
                let g_rf = RationalFunction::from_poly(Polynomial::term(
                    mono.clone(),
                    BigRational::one(),
                ));
                for c in combo.values_mut() {
                    *c = c.div(&g_rf).expect("monomial nonzero");
                }
            }
        }
        let max_degree = self.coords.values().map(Polynomial::total_degree).max().unwrap_or(0);
        if max_degree > FULL_STRIP_DEGREE {
            let mut g = Polynomial::zero();
            for p in self.coords.values() {
                g = g.gcd(p);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() && !g.is_zero() {
                for p in self.coords.values_mut() {
                    *p = p.exact_div(&g).expect("content divides");
                }
                if let Some(combo) = &mut self.combo {
                    let g_rf = RationalFunction::from_poly(g.clone());
                    for c in combo.values_mut() {
                        *c = c.div(&g_rf).expect("content nonzero");
                    }
                }
            }
        }
        // rational content: make coefficients integer and collectively coprime
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for p in self.coords.values() {
            for (_, c) in p.terms() {
                num_gcd = num_integer::gcd(num_gcd, c.numer().abs());
                den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
            }
        }
        let mut scale = BigRational::new(den_lcm, num_gcd.max(BigInt::one()));
        let lead = self.pivot_poly();
        if (lead.leading().expect("nonzero").1 * &scale).is_negative() {
            scale = -scale;
        }
        if !scale.is_one() {
            for p in self.coords.values_mut() {
                *p = p.scale(&scale);
            }
            if let Some(combo) = &mut self.combo {
                let s_rf = RationalFunction::from_rational(scale.clone());
                for c in combo.values_mut() {
                    *c = c.mul(&s_rf);
                }
            }
        }
    }

    /// `self := (pb * self - pa * pivot) / contents`, eliminating `col`.
    fn eliminate(&mut self, pivot: &Row, col: usize) {
        let a = self.coords.get(&col).expect("col present").clone();
        let b = pivot.coords.get(&col).expect("pivot col").clone();
        let g = cheap_pair_gcd(&a, &b);
        let pa = a.exact_div(&g).expect("gcd divides");
        let pb = b.exact_div(&g).expect("gcd divides");
        let mut new_coords: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (c, p) in &self.coords {
            new_coords.insert(*c, p.mul(&pb));
        }
        for (c, p) in &pivot.coords {
            let sub = p.mul(&pa);
            match new_coords.entry(*c) {
                alloc::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(sub.neg());
                }
                alloc::collections::btree_map::Entry::Occupied(mut e) => {
                    let v = e.get().sub(&sub);
                    if v.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
            }
        }
        debug_assert!(!new_coords.contains_key(&col));
        self.coords = new_coords;
        if let Some(combo) = &mut self.combo {
            let pa_rf = RationalFunction::from_poly(pa);
            let pb_rf = RationalFunction::from_poly(pb);
            let mut new_combo: BTreeMap<usize, RationalFunction> = BTreeMap::new();
            for (i, c) in combo.iter() {
                new_combo.insert(*i, c.mul(&pb_rf));
            }
            if let Some(pivot_combo) = &pivot.combo {
                for (i, c) in pivot_combo {
                    let sub = c.mul(&pa_rf);
                    let v = match new_combo.get(i) {
                        Some(existing) => existing.sub(&sub),
                        None => sub.neg(),
                    };
                    if v.is_zero() {
                        new_combo.remove(i);
                    } else {
                        new_combo.insert(*i, v);
                    }
                }
            }
            *combo = new_combo;
        }
        self.normalize();
    }
}

/// Above this coefficient degree a row gets a full polynomial-gcd content
/// strip instead of the cheap monomial/rational one.
const FULL_STRIP_DEGREE: u64 = 24;

/// Multiplier reduction before a row combination: a full gcd when both
/// coefficients are small (the common case thanks to low-degree pivoting),
/// otherwise just the monomial-and-rational part.
fn cheap_pair_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.num_terms() + b.num_terms() <= 24
        && a.total_degree() <= 12
        && b.total_degree() <= 12
    {
        return a.gcd(b);
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let ra = a.rational_content();
    let rb = b.rational_content();
    let num = num_integer::gcd(ra.numer().abs(), rb.numer().abs());
    let den = num_integer::lcm(ra.denom().clone(), rb.denom().clone());
    Polynomial::term(mono, BigRational::new(num.max(BigInt::one()), den))
}

/// Row-echelon form of a list of sector vectors.
pub struct Echelon {
    /// pivot column -> reduced row
    rows: BTreeMap<usize, Row>,
    track_combos: bool,
}

impl Echelon {
    /// Reduces the given rows. When `track_combos` is set, each echelon row
    /// remembers its expression in terms of the input rows (by index).
    pub fn reduce(rows: Vec<SparseVec>, track_combos: bool) -> Echelon {
        // pool of pending rows keyed by leading column
        let mut pool: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
        for (order, v) in rows.into_iter().enumerate() {
            if let Some(row) = row_from_sparse(v, track_combos.then_some(order), order) {
                pool.entry(row.leading_col()).or_default().push(row);
            }
        }
        let mut echelon: BTreeMap<usize, Row> = BTreeMap::new();
        while let Some((&col, _)) = pool.iter().next() {
            let mut candidates = pool.remove(&col).expect("key exists");
            // pivot choice: lowest total degree, then fewest terms, then arrival
            let best = candidates
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| {
                    let p = r.pivot_poly();
                    (p.total_degree(), p.num_terms(), r.order)
                })
                .map(|(i, _)| i)
                .expect("nonempty");
            let pivot = candidates.swap_remove(best);
            for mut row in candidates {
                row.eliminate(&pivot, col);
                if !row.coords.is_empty() {
                    pool.entry(row.leading_col()).or_default().push(row);
                }
            }
            echelon.insert(col, pivot);
        }
        Echelon { rows: echelon, track_combos }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a vector against the echelon. Returns the residual and, when
    /// combos are tracked, the combination of input rows that was subtracted.
    ///
    /// Every echelon row leads at its pivot column, so eliminating the
    /// smallest pivotable column of the target only introduces entries at
    /// larger columns; one ascending sweep terminates.
    pub fn reduce_vector(&self, v: &SparseVec) -> (SparseVec, BTreeMap<usize, RationalFunction>) {
        let mut target: SparseVec = v.clone();
        let mut combo: BTreeMap<usize, RationalFunction> = BTreeMap::new();
        loop {
            let Some(col) = target.keys().copied().find(|c| self.rows.contains_key(c)) else {
                break;
            };
            let pivot = &self.rows[&col];
            let q = target[&col]
                .div(&RationalFunction::from_poly(pivot.coords[&col].clone()))
                .expect("pivot nonzero");
            for (c, p) in &pivot.coords {
                let sub = q.mul(&RationalFunction::from_poly(p.clone()));
                let newv = match target.get(c) {
                    Some(existing) => existing.sub(&sub),
                    None => sub.neg(),
                };
                if newv.is_zero() {
                    target.remove(c);
                } else {
                    target.insert(*c, newv);
                }
            }
            debug_assert!(!target.contains_key(&col));
            if self.track_combos {
                if let Some(pc) = &pivot.combo {
                    for (i, c) in pc {
                        let add = q.mul(c);
                        let v = match combo.get(i) {
                            Some(existing) => existing.add(&add),
                            None => add,
                        };
                        if v.is_zero() {
                            combo.remove(i);
                        } else {
                            combo.insert(*i, v);
                        }
                    }
                }
            }
        }
        (target, combo)
    }
}

fn row_from_sparse(v: SparseVec, combo_index: Option<usize>, order: usize) -> Option<Row> {
    if v.is_empty() {
        return None;
    }
    // clear denominators: multiply by the lcm of entry denominators
    let mut lcm = Polynomial::one();
    for c in v.values() {
        lcm = lcm.lcm(c.denominator());
    }
    let coords: BTreeMap<usize, Polynomial> = v
        .iter()
        .map(|(i, c)| {
            let scaled = c
                .numerator()
                .mul(&lcm.exact_div(c.denominator()).expect("lcm divisible"));
            (*i, scaled)
        })
        .collect();
    let combo = combo_index.map(|i| {
        let mut m = BTreeMap::new();
        m.insert(i, RationalFunction::from_poly(lcm.clone()));
        m
    });
    let mut row = Row { coords, combo, order };
    row.normalize();
    if row.coords.is_empty() {
        None
    } else {
        Some(row)
    }
}

/// Relationship of two spans inside one sector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpanRelation {
    Equal,
    LeftInRight,
    RightInLeft,
    Incomparable,
}

#[derive(Clone, Debug)]
pub struct SpanComparison {
    pub relation: SpanRelation,
    pub rank_left: usize,
    pub rank_right: usize,
    pub rank_union: usize,
}

/// Compares the spans of two families of sector-homogeneous polynomials.
/// All elements must share one sector. Symbolic ranks are re-checked at three
/// rational parameter points.
pub fn span_compare(
    left: &[NCPoly],
    right: &[NCPoly],
    sector: &ColourContent,
) -> Result<SpanComparison, SectorError> {
    let basis = SectorBasis::for_content(sector);
    let vec_of = |polys: &[NCPoly]| -> Result<Vec<SparseVec>, SectorError> {
        polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                if p.homogeneous_content().as_ref() != Some(sector) {
                    return Err(SectorError::Inhomogeneous);
                }
                basis.vectorize(p)
            })
            .collect()
    };
    let lv = vec_of(left)?;
    let rv = vec_of(right)?;
    let union: Vec<SparseVec> = lv.iter().chain(rv.iter()).cloned().collect();
    let rank_left = Echelon::reduce(lv.clone(), false).rank();
    let rank_right = Echelon::reduce(rv.clone(), false).rank();
    let rank_union = Echelon::reduce(union.clone(), false).rank();
    rank_guard(&lv, rank_left)?;
    rank_guard(&rv, rank_right)?;
    rank_guard(&union, rank_union)?;
    let relation = match (rank_union == rank_left, rank_union == rank_right) {
        (true, true) => SpanRelation::Equal,
        (false, true) => SpanRelation::LeftInRight,
        (true, false) => SpanRelation::RightInLeft,
        (false, false) => SpanRelation::Incomparable,
    };
    Ok(SpanComparison { relation, rank_left, rank_right, rank_union })
}

/// Deterministic "random" rational sample points for the rank guard.
pub fn guard_points(symbols: &[Symbol], count: usize) -> Vec<Bindings> {
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let mut b = Bindings::new();
            for sym in symbols {
                // small nonzero rationals, denominators coprime-ish
                let num = (next() % 97 + 1) as i64;
                let den = (next() % 13 + 1) as i64;
                let sign = if next() % 2 == 0 { 1 } else { -1 };
                let value = RationalFunction::from_rational(BigRational::new(
                    BigInt::from(sign * num),
                    BigInt::from(den),
                ));
                b.insert(sym.clone(), value);
            }
            b
        })
        .collect()
}

/// Re-checks the symbolic rank of a family at 3 rational parameter points.
fn rank_guard(rows: &[SparseVec], symbolic: usize) -> Result<(), SectorError> {
    let mut symbols: Vec<Symbol> = Vec::new();
    for row in rows {
        for c in row.values() {
            for sym in c.symbols() {
                if !symbols.contains(&sym) {
                    symbols.push(sym);
                }
            }
        }
    }
    symbols.sort();
    for (k, point) in guard_points(&symbols, 3).iter().enumerate() {
        let sampled = rank_at_point(rows, point);
        if sampled != symbolic {
            return Err(SectorError::RankGuardMismatch { symbolic, sampled, point: k });
        }
    }
    Ok(())
}

/// Rank over Q after substituting a rational point, by sparse elimination.
pub fn rank_at_point(rows: &[SparseVec], point: &Bindings) -> usize {
    let mut echelon: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for row in rows {
        let mut v: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, c) in row {
            let subbed = c.substitute(point).expect("guard points avoid poles");
            let val = subbed.as_constant().expect("full binding");
            if !val.is_zero() {
                v.insert(*i, val);
            }
        }
        loop {
            let Some((&col, val)) = v.iter().next() else { break };
            match echelon.get(&col) {
                Some(pivot) => {
                    let q = val / &pivot[&col];
                    for (c, p) in pivot.clone() {
                        let newv = v.get(&c).cloned().unwrap_or_else(BigRational::zero) - &q * p;
                        if newv.is_zero() {
                            v.remove(&c);
                        } else {
                            v.insert(c, newv);
                        }
                    }
                }
                None => {
                    echelon.insert(col, v);
                    break;
                }
            }
        }
    }
    echelon.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtt::ncpoly::Letter;

    fn gen(letter: Letter, colour: &str) -> NCPoly {
        NCPoly::generator(NCGenerator::new(letter, Symbol::new(colour)))
    }

    #[test]
    fn mixed_sector_has_32_words() {
        let content = ColourContent::new([
            (Symbol::new("lambda"), 1),
            (Symbol::new("mu"), 1),
        ]);
        let basis = SectorBasis::for_content(&content);
        assert_eq!(basis.dim(), 32);
    }

    #[test]
    fn degree3_sector_has_192_words() {
        let content = ColourContent::new([
            (Symbol::new("lambda"), 2),
            (Symbol::new("mu"), 1),
        ]);
        assert_eq!(SectorBasis::for_content(&content).dim(), 192);
    }

    #[test]
    fn span_compare_trivial_cases() {
        let sector = ColourContent::new([
            (Symbol::new("lambda"), 1),
            (Symbol::new("mu"), 1),
        ]);
        let cc = gen(Letter::C, "lambda")
            .mul(&gen(Letter::C, "mu"))
            .sub(&gen(Letter::C, "mu").mul(&gen(Letter::C, "lambda")));
        // span(S, S) is equal
        let cmp = span_compare(&[cc.clone()], &[cc.clone()], &sector).unwrap();
        assert_eq!(cmp.relation, SpanRelation::Equal);
        assert_eq!((cmp.rank_left, cmp.rank_right), (1, 1));
        // empty set is strictly inside
        let cmp = span_compare(&[], &[cc], &sector).unwrap();
        assert_eq!(cmp.relation, SpanRelation::LeftInRight);
        assert_eq!(cmp.rank_left, 0);
    }

    #[test]
    fn echelon_reduces_dependent_rows() {
        // rows [h, 1], [h^2, h] are proportional over the field
        let h = RationalFunction::symbol(Symbol::h());
        let mut r1 = SparseVec::new();
        r1.insert(0, h.clone());
        r1.insert(1, RationalFunction::one());
        let mut r2 = SparseVec::new();
        r2.insert(0, h.mul(&h));
        r2.insert(1, h.clone());
        let e = Echelon::reduce(alloc::vec![r1.clone(), r2], false);
        assert_eq!(e.rank(), 1);
        // and the target [h, 1] reduces to zero
        let (residual, _) = e.reduce_vector(&r1);
        assert!(residual.is_empty());
    }

    #[test]
    fn reduce_vector_finds_combination() {
        // gen0 = e0 + h e1, gen1 = e1; target = 2 e0 must give
        // target = 2 gen0 - 2h gen1
        let h = RationalFunction::symbol(Symbol::h());
        let mut g0 = SparseVec::new();
        g0.insert(0, RationalFunction::one());
        g0.insert(1, h.clone());
        let mut g1 = SparseVec::new();
        g1.insert(1, RationalFunction::one());
        let e = Echelon::reduce(alloc::vec![g0, g1], true);
        let mut target = SparseVec::new();
        target.insert(0, RationalFunction::from_int(2));
        let (residual, combo) = e.reduce_vector(&target);
        assert!(residual.is_empty());
        assert_eq!(combo[&0], RationalFunction::from_int(2));
        assert_eq!(combo[&1], h.scale_int(-2));
    }

    #[test]
    fn rank_guard_points_avoid_zero() {
        let pts = guard_points(&[Symbol::h(), Symbol::s()], 3);
        assert_eq!(pts.len(), 3);
        for p in pts {
            for v in p.values() {
                assert!(!v.is_zero());
            }
        }
    }
}
