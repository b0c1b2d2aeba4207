//! Two-sided ideal membership in graded sectors, with checkable certificates.
//!
//! Membership of a homogeneous element `p` in the span of
//! `{ u * r * v : r in rels, u, v words }` is a finite linear-algebra
//! question inside `p`'s colour sector. On success the combination is
//! returned as a certificate and re-multiplied to the target before being
//! trusted.

use alloc::vec::Vec;

use crate::scalar::RationalFunction;

use super::ncpoly::{ColourContent, NCPoly, NCWord};
use super::sector::{Echelon, SectorBasis, SectorError, SparseVec};


#[derive(Clone, Copy, Debug)]
pub struct MembershipOptions {
    /// Upper bound on the sector dimension this call may allocate.
    pub max_sector_dim: usize,
    /// Whether to track and return a certificate.
    pub certificate: bool,
}

impl Default for MembershipOptions {
    fn default() -> Self {
        MembershipOptions { max_sector_dim: 4096, certificate: true }
    }
}

/// One summand of a two-sided combination: `coeff * left * rels[relation] * right`.
#[derive(Clone, PartialEq, Debug)]
pub struct CertEntry {
    pub left: NCWord,
    pub relation: usize,
    pub right: NCWord,
    pub coeff: RationalFunction,
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Certificate {
    pub entries: Vec<CertEntry>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Membership {
    Member { certificate: Option<Certificate> },
    NotMember { residual: NCPoly },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// All two-sided placements `(u, relation index, v)` whose colour content
/// completes the relation's content to the sector.
fn placements(rels: &[NCPoly], sector: &ColourContent) -> Vec<(NCWord, usize, NCWord)> {
    let mut out = Vec::new();
    for (ri, rel) in rels.iter().enumerate() {
        if rel.is_zero() {
            continue;
        }
        let rc = rel.homogeneous_content().expect("relations are homogeneous");
        let Some(rem) = sector.checked_sub(&rc) else { continue };
        // split the remaining multiset between u and v in every way
        let items: Vec<(crate::scalar::Symbol, usize)> =
            rem.counts().iter().map(|(s, n)| (s.clone(), *n)).collect();
        let mut split_counts = alloc::vec![0usize; items.len()];
        loop {
            let u_content = ColourContent::new(
                items
                    .iter()
                    .zip(&split_counts)
                    .map(|((s, _), k)| (s.clone(), *k)),
            );
            let v_content = rem.checked_sub(&u_content).expect("split within bounds");
            let u_words = SectorBasis::for_content(&u_content);
            let v_words = SectorBasis::for_content(&v_content);
            for ui in 0..u_words.dim() {
                for vi in 0..v_words.dim() {
                    out.push((u_words.word(ui).clone(), ri, v_words.word(vi).clone()));
                }
            }
            // odometer over split counts
            let mut k = items.len();
            let mut done = true;
            while k > 0 {
                k -= 1;
                split_counts[k] += 1;
                if split_counts[k] <= items[k].1 {
                    done = false;
                    break;
                }
                split_counts[k] = 0;
            }
            if done {
                break;
            }
        }
    }
    out
}

fn generator_poly(rels: &[NCPoly], g: &(NCWord, usize, NCWord)) -> NCPoly {
    let (u, ri, v) = g;
    let mut p = rels[*ri].clone();
    if !u.is_empty() {
        p = NCPoly::term(u.clone(), RationalFunction::one()).mul(&p);
    }
    if !v.is_empty() {
        p = p.mul(&NCPoly::term(v.clone(), RationalFunction::one()));
    }
    p
}

/// The echelonized two-sided span of a relation set inside one sector,
/// reusable across several membership queries.
pub struct SpanMembership<'a> {
    rels: &'a [NCPoly],
    basis: SectorBasis,
    gens: Vec<(NCWord, usize, NCWord)>,
    echelon: Echelon,
    certificate: bool,
}

impl<'a> SpanMembership<'a> {
    pub fn new(
        rels: &'a [NCPoly],
        sector: &ColourContent,
        opts: &MembershipOptions,
    ) -> Result<Self, SectorError> {
        let basis = SectorBasis::for_content(sector);
        if basis.dim() > opts.max_sector_dim {
            return Err(SectorError::TooLarge { dim: basis.dim(), cap: opts.max_sector_dim });
        }
        let gens = placements(rels, sector);
        let rows: Vec<SparseVec> = gens
            .iter()
            .map(|g| basis.vectorize(&generator_poly(rels, g)))
            .collect::<Result<_, _>>()?;
        let echelon = Echelon::reduce(rows, opts.certificate);
        Ok(SpanMembership { rels, basis, gens, echelon, certificate: opts.certificate })
    }

    pub fn span_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn sector_dim(&self) -> usize {
        self.basis.dim()
    }

    /// Decides one target; the target must live in this sector.
    pub fn decide(&self, target: &NCPoly) -> Result<Membership, SectorError> {
        if target.is_zero() {
            return Ok(Membership::Member {
                certificate: self.certificate.then(Certificate::default),
            });
        }
        let tv = self.basis.vectorize(target)?;
        let (residual, combo) = self.echelon.reduce_vector(&tv);
        if residual.is_empty() {
            let certificate = if self.certificate {
                let entries: Vec<CertEntry> = combo
                    .into_iter()
                    .map(|(i, coeff)| {
                        let (u, ri, v) = &self.gens[i];
                        CertEntry { left: u.clone(), relation: *ri, right: v.clone(), coeff }
                    })
                    .collect();
                let cert = Certificate { entries };
                // certificates are verified, not trusted
                debug_assert!(verify_certificate(target, self.rels, &cert));
                Some(cert)
            } else {
                None
            };
            Ok(Membership::Member { certificate })
        } else {
            let mut poly = NCPoly::zero();
            for (i, c) in &residual {
                poly.add_term(self.basis.word(*i).clone(), c.clone());
            }
            Ok(Membership::NotMember { residual: poly })
        }
    }
}

/// Decides membership of `target` in the two-sided span of `rels` inside
/// `target`'s own sector.
pub fn ideal_membership(
    target: &NCPoly,
    rels: &[NCPoly],
    opts: &MembershipOptions,
) -> Result<Membership, SectorError> {
    if target.is_zero() {
        return Ok(Membership::Member {
            certificate: opts.certificate.then(Certificate::default),
        });
    }
    let sector = target.homogeneous_content().ok_or(SectorError::Inhomogeneous)?;
    if target.homogeneous_length().is_none() {
        return Err(SectorError::Inhomogeneous);
    }
    SpanMembership::new(rels, &sector, opts)?.decide(target)
}

/// Re-multiplies a certificate and compares with the target, exactly.
pub fn verify_certificate(target: &NCPoly, rels: &[NCPoly], cert: &Certificate) -> bool {
    let mut acc = NCPoly::zero();
    for e in &cert.entries {
        let g = generator_poly(rels, &(e.left.clone(), e.relation, e.right.clone()));
        acc = acc.add(&g.scale(&e.coeff));
    }
    acc.sub(target).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtt::ncpoly::{Letter, NCGenerator};
    use crate::rtt::relations::{monochromatic_relations, paper_relations};
    use crate::scalar::Symbol;

    fn lam() -> Symbol {
        Symbol::new("lambda")
    }
    fn mu() -> Symbol {
        Symbol::new("mu")
    }
    fn gen(letter: Letter, colour: &Symbol) -> NCPoly {
        NCPoly::generator(NCGenerator::new(letter, colour.clone()))
    }

    #[test]
    fn zero_is_member_with_empty_certificate() {
        let m = ideal_membership(&NCPoly::zero(), &[], &MembershipOptions::default()).unwrap();
        match m {
            Membership::Member { certificate: Some(c) } => assert!(c.entries.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn commutator_not_member_of_empty_set() {
        let t = gen(Letter::C, &lam()).commutator(&gen(Letter::C, &mu()));
        let m = ideal_membership(&t, &[], &MembershipOptions::default()).unwrap();
        match m {
            Membership::NotMember { residual } => assert_eq!(residual, t),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relation_itself_is_member_with_verified_certificate() {
        let rels = paper_relations(&lam(), &mu()).elements;
        let target = rels[0].clone();
        let m = ideal_membership(&target, &rels, &MembershipOptions::default()).unwrap();
        match m {
            Membership::Member { certificate: Some(cert) } => {
                assert!(verify_certificate(&target, &rels, &cert));
                assert_eq!(cert.entries.len(), 1);
                assert!(cert.entries[0].left.is_empty());
                assert!(cert.entries[0].right.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degree3_membership_with_padding_words() {
        // a_l * r is a member when r is, with u = a_l
        let rels = monochromatic_relations(&lam(), &mu());
        let a = gen(Letter::A, &lam());
        let target = a.mul(&rels[0]);
        let m = ideal_membership(&target, &rels, &MembershipOptions::default()).unwrap();
        match m {
            Membership::Member { certificate: Some(cert) } => {
                assert!(verify_certificate(&target, &rels, &cert));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sector_cap_enforced() {
        let rels = monochromatic_relations(&lam(), &mu());
        let a = gen(Letter::A, &lam());
        let target = a.mul(&rels[0]);
        let opts = MembershipOptions { max_sector_dim: 10, certificate: false };
        assert_eq!(
            ideal_membership(&target, &rels, &opts),
            Err(SectorError::TooLarge { dim: 64, cap: 10 })
        );
    }

    #[test]
    fn inhomogeneous_rejected() {
        let t = gen(Letter::A, &lam()).add(&gen(Letter::A, &lam()).mul(&gen(Letter::B, &lam())));
        assert_eq!(
            ideal_membership(&t, &[], &MembershipOptions::default()),
            Err(SectorError::Inhomogeneous)
        );
    }
}
