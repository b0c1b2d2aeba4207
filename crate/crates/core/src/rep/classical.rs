//! First-order (Lie bialgebra) structure: classical Yang-Baxter equation,
//! cocommutators, and the degree-1 match between the quantum R-matrix and the
//! classical r-matrix.
//!
//! These are statements about the *classical* gl(2), so they are evaluated in
//! the undeformed fundamental representation (`J-` maps to `e21`); the deformed
//! `J-` image differs at order (h,s) and would spoil a first-order identity.

use alloc::format;

use crate::coloured::coloured_r;
use crate::matrix::{leg_embed, ParamMatrix};
use crate::report::{Residual, VerificationReport};
use crate::scalar::{RationalFunction, Symbol};

use super::generators::GeneratorSymbol;
use super::representation::{ColourParam, Representation};

fn h() -> RationalFunction {
    RationalFunction::symbol(Symbol::h())
}

fn s() -> RationalFunction {
    RationalFunction::symbol(Symbol::s())
}

/// `a ∧ b = a ⊗ b - b ⊗ a` in the classical representation at two colours.
fn wedge(
    x: GeneratorSymbol,
    y: GeneratorSymbol,
    lambda: &ColourParam,
    mu: &ColourParam,
) -> ParamMatrix {
    let rl = Representation::classical(lambda.clone());
    let rm = Representation::classical(mu.clone());
    rl.image(x)
        .kron(&rm.image(y))
        .sub(&rl.image(y).kron(&rm.image(x)))
        .expect("4x4")
}

/// The classical r-matrix `r = h J3 ∧ J+ + s Z ∧ J+` in representation.
pub fn classical_r_rep(lambda: &ColourParam, mu: &ColourParam) -> ParamMatrix {
    use GeneratorSymbol::*;
    wedge(J3, Jplus, lambda, mu)
        .scale(&h())
        .add(&wedge(Z, Jplus, lambda, mu).scale(&s()))
        .expect("4x4")
}

/// Verifies the classical layer: CYBE, the four cocommutator formulas, the
/// first-order truncation of the R-matrix, and the classical gl(2) relations.
pub fn classical_structure(
    lambda: &ColourParam,
    mu: &ColourParam,
    nu: &ColourParam,
) -> VerificationReport {
    use GeneratorSymbol::*;
    let mut report = VerificationReport::new("classical");

    // (a) CYBE: [r12, r13] + [r12, r23] + [r13, r23] = 0 on the 8-dim space
    let r12 = leg_embed(&classical_r_rep(lambda, mu), (1, 2), 2).expect("legs");
    let r13 = leg_embed(&classical_r_rep(lambda, nu), (1, 3), 2).expect("legs");
    let r23 = leg_embed(&classical_r_rep(mu, nu), (2, 3), 2).expect("legs");
    let cybe = r12
        .commutator(&r13)
        .expect("8x8")
        .add(&r12.commutator(&r23).expect("8x8"))
        .expect("8x8")
        .add(&r13.commutator(&r23).expect("8x8"))
        .expect("8x8");
    report.expect_zero_matrix("[r12,r13] + [r12,r23] + [r13,r23] = 0 (CYBE)", cybe);

    // (b) cocommutators delta(X) = [X ox 1 + 1 ox X, r]
    let rl = Representation::classical(lambda.clone());
    let rm = Representation::classical(mu.clone());
    let r_lm = classical_r_rep(lambda, mu);
    let i2 = ParamMatrix::identity(2);
    let delta_of = |g: GeneratorSymbol| -> ParamMatrix {
        rl.image(g)
            .kron(&i2)
            .add(&i2.kron(&rm.image(g)))
            .expect("4x4")
            .commutator(&r_lm)
            .expect("4x4")
    };
    let zero4 = ParamMatrix::zeros(4, 4);
    let targets = [
        (Jplus, zero4.clone()),
        (Z, zero4),
        (
            J3,
            wedge(J3, Jplus, lambda, mu)
                .scale(&h().scale_int(2))
                .add(&wedge(Z, Jplus, lambda, mu).scale(&s().scale_int(2)))
                .expect("4x4"),
        ),
        (
            Jminus,
            wedge(Jminus, Jplus, lambda, mu)
                .scale(&h().scale_int(2))
                .add(&wedge(J3, Z, lambda, mu).scale(&s()))
                .expect("4x4"),
        ),
    ];
    for (g, target) in targets {
        let res = delta_of(g).sub(&target).expect("4x4");
        report.expect_zero_matrix(format!("cocommutator delta({})", g.name()), res);
    }

    // (c) first-order consistency: every entry of R - I - r has total degree
    // >= 2 in (h, s)
    let quantum = coloured_r(lambda, mu).matrix;
    let diff = quantum
        .sub(&ParamMatrix::identity(4))
        .expect("4x4")
        .sub(&r_lm)
        .expect("4x4");
    let hs = [Symbol::h(), Symbol::s()];
    let mut all_high_order = true;
    let mut offender = None;
    for i in 0..4 {
        for j in 0..4 {
            let entry = diff.get(i, j);
            if entry.is_zero() {
                continue;
            }
            match entry.as_polynomial() {
                Some(p) => {
                    if p.min_degree_in(&hs).unwrap_or(u64::MAX) < 2 {
                        all_high_order = false;
                        offender = Some(entry.clone());
                    }
                }
                None => {
                    all_high_order = false;
                    offender = Some(entry.clone());
                }
            }
        }
    }
    report.push(
        "R - I - r is of order (h,s)^2",
        all_high_order,
        offender.map(Residual::Scalar),
    );

    // classical gl(2) relations in the undeformed representation
    let eta = Representation::classical(lambda.clone());
    let (j3, jp, jm, z) = (
        eta.image(J3),
        eta.image(Jplus),
        eta.image(Jminus),
        eta.image(Z),
    );
    report.expect_zero_matrix(
        "[J3, J+] = 2 J+ (classical)",
        j3.commutator(&jp).expect("2x2").sub(&jp.scale(&RationalFunction::from_int(2))).expect("2x2"),
    );
    report.expect_zero_matrix(
        "[J3, J-] = -2 J- (classical)",
        j3.commutator(&jm).expect("2x2").add(&jm.scale(&RationalFunction::from_int(2))).expect("2x2"),
    );
    report.expect_zero_matrix(
        "[J+, J-] = J3 (classical)",
        jp.commutator(&jm).expect("2x2").sub(&j3).expect("2x2"),
    );
    report.expect_zero_matrix("[Z, J3] = 0 (classical)", z.commutator(&j3).expect("2x2"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_suite_passes() {
        let report = classical_structure(
            &ColourParam::symbol("lambda"),
            &ColourParam::symbol("mu"),
            &ColourParam::symbol("nu"),
        );
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn r_linear_part_entries() {
        use crate::scalar::{parse_scalar, SymbolContext};
        let ctx = SymbolContext::with_colours(["lambda", "mu"]);
        let r = classical_r_rep(&ColourParam::symbol("lambda"), &ColourParam::symbol("mu"));
        // entry (1,2) is h + lambda s, matching the linear part of the R-matrix
        assert_eq!(*r.get(0, 1), parse_scalar("h + lambda*s", &ctx).unwrap());
        assert_eq!(*r.get(0, 2), parse_scalar("-(h + mu*s)", &ctx).unwrap());
        assert_eq!(*r.get(1, 3), parse_scalar("h - mu*s", &ctx).unwrap());
        assert_eq!(*r.get(2, 3), parse_scalar("-(h - lambda*s)", &ctx).unwrap());
        assert!(r.get(0, 3).is_zero());
    }

    #[test]
    fn deformed_rep_would_fail_jminus_cocommutator() {
        // guard for the design decision: with the deformed J- image the
        // J- cocommutator identity is NOT zero
        use GeneratorSymbol::*;
        let lambda = ColourParam::symbol("lambda");
        let mu = ColourParam::symbol("mu");
        let rl = Representation::fundamental(lambda.clone());
        let rm = Representation::fundamental(mu.clone());
        let i2 = ParamMatrix::identity(2);
        let r_lm = classical_r_rep(&lambda, &mu);
        let lhs = rl
            .image(Jminus)
            .kron(&i2)
            .add(&i2.kron(&rm.image(Jminus)))
            .unwrap()
            .commutator(&r_lm)
            .unwrap();
        let target = rl
            .image(Jminus)
            .kron(&rm.image(Jplus))
            .sub(&rl.image(Jplus).kron(&rm.image(Jminus)))
            .unwrap()
            .scale(&h().scale_int(2))
            .add(&wedge(J3, Z, &lambda, &mu).scale(&s()))
            .unwrap();
        assert!(!lhs.sub(&target).unwrap().is_zero());
    }
}
