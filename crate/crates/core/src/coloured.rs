//! The coloured Jordanian R-matrix, its braid operator, and the direct
//! verification battery: coloured YBE, coloured unitarity (triangularity),
//! braided YBE, characteristic equation and specializations.

use alloc::format;
use alloc::string::String;

use crate::matrix::{flip_matrix, leg_embed, MatrixError, ParamMatrix};
use crate::rep::{universal_r_rep, ColourParam};
use crate::report::{Residual, VerificationReport};
use crate::scalar::{f_coeff, Bindings, RationalFunction, Symbol};

/// The 4x4 coloured Jordanian R-matrix at a colour pair.
#[derive(Clone, PartialEq, Debug)]
pub struct ColouredRMatrix {
    pub lambda: ColourParam,
    pub mu: ColourParam,
    pub matrix: ParamMatrix,
}

/// The braid operator `R-hat = P R`.
#[derive(Clone, PartialEq, Debug)]
pub struct BraidOperator {
    pub lambda: ColourParam,
    pub mu: ColourParam,
    pub matrix: ParamMatrix,
}

fn h() -> RationalFunction {
    RationalFunction::symbol(Symbol::h())
}

fn s() -> RationalFunction {
    RationalFunction::symbol(Symbol::s())
}

/// Constructs the coloured R-matrix entrywise:
///
/// ```text
/// | 1  h+ls  -(h+ms)  f(l,m) |
/// | 0   1       0     h-ms   |
/// | 0   0       1   -(h-ls)  |
/// | 0   0       0      1     |
/// ```
pub fn coloured_r(lambda: &ColourParam, mu: &ColourParam) -> ColouredRMatrix {
    let l = lambda.value();
    let m = mu.value();
    let hp_l = h().add(&l.mul(&s())); // h + lambda s
    let hp_m = h().add(&m.mul(&s()));
    let hm_l = h().sub(&l.mul(&s())); // h - lambda s
    let hm_m = h().sub(&m.mul(&s()));
    let mut r = ParamMatrix::identity(4);
    r.set(0, 1, hp_l);
    r.set(0, 2, hp_m.neg());
    r.set(0, 3, f_coeff(l, m));
    r.set(1, 3, hm_m);
    r.set(2, 3, hm_l.neg());
    ColouredRMatrix { lambda: lambda.clone(), mu: mu.clone(), matrix: r }
}

/// `R-hat = P R`.
pub fn braid_operator(lambda: &ColourParam, mu: &ColourParam) -> BraidOperator {
    let r = coloured_r(lambda, mu);
    let matrix = flip_matrix(2).mul(&r.matrix).expect("4x4 product");
    BraidOperator { lambda: lambda.clone(), mu: mu.clone(), matrix }
}

/// Coloured Yang-Baxter residual
/// `R12(l,m) R13(l,n) R23(m,n) - R23(m,n) R13(l,n) R12(l,m)` on the 8-dim space.
pub fn coloured_ybe_residual(
    lambda: &ColourParam,
    mu: &ColourParam,
    nu: &ColourParam,
) -> Result<ParamMatrix, MatrixError> {
    let r12 = leg_embed(&coloured_r(lambda, mu).matrix, (1, 2), 2)?;
    let r13 = leg_embed(&coloured_r(lambda, nu).matrix, (1, 3), 2)?;
    let r23 = leg_embed(&coloured_r(mu, nu).matrix, (2, 3), 2)?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    lhs.sub(&rhs)
}

pub fn verify_coloured_ybe(
    lambda: &ColourParam,
    mu: &ColourParam,
    nu: &ColourParam,
) -> VerificationReport {
    let mut report = VerificationReport::new("ybe");
    let res = coloured_ybe_residual(lambda, mu, nu).expect("embedding dimensions fixed");
    report.expect_zero_matrix(
        "R12 R13 R23 = R23 R13 R12 (coloured YBE, symbolic colours)",
        res,
    );
    // uncoloured specialization
    let zero = ColourParam::zero();
    let res0 = coloured_ybe_residual(&zero, &zero, &zero).expect("embedding dimensions fixed");
    report.expect_zero_matrix("coloured YBE at lambda=mu=nu=0 (uncoloured QYBE)", res0);
    // redundant guard at a rational sample point
    let pt = [
        ("h", RationalFunction::new(crate::scalar::Polynomial::from_int(2), crate::scalar::Polynomial::from_int(3)).expect("2/3")),
        ("s", RationalFunction::new(crate::scalar::Polynomial::from_int(1), crate::scalar::Polynomial::from_int(5)).expect("1/5")),
    ];
    let mut bindings = Bindings::new();
    for (name, v) in pt {
        bindings.insert(Symbol::new(name), v);
    }
    let l = ColourParam::new(RationalFunction::from_int(1));
    let m = ColourParam::new(RationalFunction::from_int(-2));
    let n = ColourParam::new(RationalFunction::from_int(7));
    let res_pt = coloured_ybe_residual(&l, &m, &n)
        .expect("embedding dimensions fixed")
        .substitute(&bindings)
        .expect("numeric point");
    report.expect_zero_matrix(
        "coloured YBE at h=2/3, s=1/5, (lambda,mu,nu)=(1,-2,7)",
        res_pt,
    );
    report
}

/// Coloured unitarity (triangularity in representation):
/// `R(l,m) . P R(m,l) P = I`.
pub fn verify_coloured_unitarity(lambda: &ColourParam, mu: &ColourParam) -> VerificationReport {
    let mut report = VerificationReport::new("unitarity");
    let p = flip_matrix(2);
    let unitarity_residual = |a: &ColourParam, b: &ColourParam| -> ParamMatrix {
        let r = coloured_r(a, b).matrix;
        let r21 = p.mul(&coloured_r(b, a).matrix).expect("4x4").mul(&p).expect("4x4");
        r.mul(&r21).expect("4x4").sub(&ParamMatrix::identity(4)).expect("4x4")
    };
    report.expect_zero_matrix(
        "R(l,m) P R(m,l) P = I (symbolic colours)",
        unitarity_residual(lambda, mu),
    );
    let eta = ColourParam::symbol("eta");
    report.expect_zero_matrix(
        "monochromatic case lambda=mu=eta: R P R P = I",
        unitarity_residual(&eta, &eta),
    );
    // h -> 0 edge case, s symbolic
    let mut bindings = Bindings::new();
    bindings.insert(Symbol::h(), RationalFunction::zero());
    let res_h0 = unitarity_residual(lambda, mu)
        .substitute(&bindings)
        .expect("entries polynomial in h");
    report.expect_zero_matrix("unitarity at h=0, s symbolic", res_h0);
    report
}

/// Braided YBE residual, with the leg pattern exactly as the relation is
/// stated for the coloured braid operator:
/// `Rh23(l,m) Rh12(l,n) Rh23(m,n) - Rh12(m,n) Rh23(l,n) Rh12(l,m)`.
pub fn braided_ybe_residual(
    lambda: &ColourParam,
    mu: &ColourParam,
    nu: &ColourParam,
) -> Result<ParamMatrix, MatrixError> {
    let bh = |a: &ColourParam, b: &ColourParam, legs: (usize, usize)| -> Result<ParamMatrix, MatrixError> {
        leg_embed(&braid_operator(a, b).matrix, legs, 2)
    };
    let lhs = bh(lambda, mu, (2, 3))?
        .mul(&bh(lambda, nu, (1, 2))?)?
        .mul(&bh(mu, nu, (2, 3))?)?;
    let rhs = bh(mu, nu, (1, 2))?
        .mul(&bh(lambda, nu, (2, 3))?)?
        .mul(&bh(lambda, mu, (1, 2))?)?;
    lhs.sub(&rhs)
}

pub fn verify_braided_ybe(
    lambda: &ColourParam,
    mu: &ColourParam,
    nu: &ColourParam,
) -> VerificationReport {
    let mut report = VerificationReport::new("braid");
    let res = braided_ybe_residual(lambda, mu, nu).expect("embedding dimensions fixed");
    report.expect_zero_matrix(
        "Rh23(l,m) Rh12(l,n) Rh23(m,n) = Rh12(m,n) Rh23(l,n) Rh12(l,m) (braided YBE)",
        res,
    );
    let eta = ColourParam::symbol("eta");
    let res_mono = braided_ybe_residual(&eta, &eta, &eta).expect("embedding dimensions fixed");
    report.expect_zero_matrix("braided YBE at lambda=mu=nu (uncoloured)", res_mono);
    let pt_l = ColourParam::new(RationalFunction::from_int(3));
    let pt_m = ColourParam::new(RationalFunction::from_int(-1));
    let pt_n = ColourParam::new(RationalFunction::from_int(4));
    let mut bindings = Bindings::new();
    bindings.insert(Symbol::h(), RationalFunction::from_int(5));
    bindings.insert(
        Symbol::s(),
        RationalFunction::new(
            crate::scalar::Polynomial::from_int(1),
            crate::scalar::Polynomial::from_int(2),
        )
        .expect("1/2"),
    );
    let res_pt = braided_ybe_residual(&pt_l, &pt_m, &pt_n)
        .expect("embedding dimensions fixed")
        .substitute(&bindings)
        .expect("numeric point");
    report.expect_zero_matrix("braided YBE at h=5, s=1/2, (3,-1,4)", res_pt);
    report
}

/// Characteristic-equation facts for the braid operator: the quartic
/// `(Rh - 1)^3 (Rh + 1) = 0` holds identically, the lower-degree products do
/// not vanish for generic distinct colours (no Hecke condition), and at equal
/// colours `Rh^2 = I`.
pub fn verify_characteristic_equation(
    lambda: &ColourParam,
    mu: &ColourParam,
) -> VerificationReport {
    let mut report = VerificationReport::new("char-eq");
    let rh = braid_operator(lambda, mu).matrix;
    let i4 = ParamMatrix::identity(4);
    let minus = rh.sub(&i4).expect("4x4");
    let plus = rh.add(&i4).expect("4x4");
    let cubic = minus
        .mul(&minus)
        .and_then(|m| m.mul(&minus))
        .and_then(|m| m.mul(&plus))
        .expect("4x4 products");
    report.expect_zero_matrix("(Rh - 1)^3 (Rh + 1) = 0 (symbolic colours)", cubic);

    // Hecke failure witness: fixed point h=1, s=1, lambda=1, mu=2
    let wl = ColourParam::new(RationalFunction::from_int(1));
    let wm = ColourParam::new(RationalFunction::from_int(2));
    let mut bindings = Bindings::new();
    bindings.insert(Symbol::h(), RationalFunction::from_int(1));
    bindings.insert(Symbol::s(), RationalFunction::from_int(1));
    let rh_w = braid_operator(&wl, &wm)
        .matrix
        .substitute(&bindings)
        .expect("numeric point");
    let minus_w = rh_w.sub(&i4).expect("4x4");
    let plus_w = rh_w.add(&i4).expect("4x4");
    let quad = minus_w.mul(&plus_w).expect("4x4");
    let witness = "witness h=1, s=1, lambda=1, mu=2";
    report.push_detailed(
        "(Rh - 1)(Rh + 1) != 0 at generic distinct colours (Hecke fails)",
        !quad.is_zero(),
        None,
        witness,
    );
    let cubic_w = minus_w.mul(&minus_w).and_then(|m| m.mul(&plus_w)).expect("4x4");
    report.push_detailed(
        "(Rh - 1)^2 (Rh + 1) != 0 at generic distinct colours",
        !cubic_w.is_zero(),
        None,
        witness,
    );

    // equal colours: Rh^2 = I
    let eta = ColourParam::symbol("eta");
    let rh_mono = braid_operator(&eta, &eta).matrix;
    let sq = rh_mono.mul(&rh_mono).expect("4x4").sub(&i4).expect("4x4");
    report.expect_zero_matrix("Rh^2 = I at lambda = mu (symbolic)", sq);
    report
}

/// Entrywise substitution into a coloured R-matrix.
pub fn specialize(r: &ColouredRMatrix, bindings: &Bindings) -> Result<ColouredRMatrix, MatrixError> {
    let sub_colour = |c: &ColourParam| -> Result<ColourParam, MatrixError> {
        Ok(ColourParam::new(c.value().substitute(bindings)?))
    };
    Ok(ColouredRMatrix {
        lambda: sub_colour(&r.lambda)?,
        mu: sub_colour(&r.mu)?,
        matrix: r.matrix.substitute(bindings)?,
    })
}

/// The named specialization presets.
pub enum SpecializePreset {
    /// `lambda = mu = eta`, then `z' = h + eta s`, `z = h - eta s`.
    TwoParameter,
    /// `lambda = mu = 0`.
    OneParameter,
}

/// Applies a preset; `TwoParameter` returns a matrix over the symbols `z`, `zp`.
pub fn specialize_preset(preset: SpecializePreset) -> ColouredRMatrix {
    match preset {
        SpecializePreset::OneParameter => {
            coloured_r(&ColourParam::zero(), &ColourParam::zero())
        }
        SpecializePreset::TwoParameter => {
            let eta = ColourParam::symbol("eta");
            let mono = coloured_r(&eta, &eta);
            // invert z' = h + eta s, z = h - eta s:
            //   h = (z + zp)/2, eta = (zp - z)/(2 s)
            let z = RationalFunction::symbol(Symbol::new("z"));
            let zp = RationalFunction::symbol(Symbol::new("zp"));
            let two = RationalFunction::from_int(2);
            let mut bindings = Bindings::new();
            bindings.insert(Symbol::h(), z.add(&zp).div(&two).expect("2 != 0"));
            bindings.insert(
                Symbol::new("eta"),
                zp.sub(&z).div(&s().scale_int(2)).expect("s symbol"),
            );
            specialize(&mono, &bindings).expect("no denominators vanish")
        }
    }
}

/// Text labels for report entries about a matrix entry.
pub fn entry_label(prefix: &str, i: usize, j: usize) -> String {
    format!("{prefix}[{},{}]", i + 1, j + 1)
}

/// Cross-module consistency: the direct Eq-14 matrix equals the universal
/// R-matrix evaluated in the representation.
pub fn verify_universal_consistency(
    lambda: &ColourParam,
    mu: &ColourParam,
) -> VerificationReport {
    let mut report = VerificationReport::new("universal-r");
    match universal_r_rep(lambda, mu) {
        Ok(from_universal) => {
            let direct = coloured_r(lambda, mu).matrix;
            let res = from_universal.sub(&direct).expect("4x4");
            report.expect_zero_matrix(
                "(pi_l ox pi_m) of exp{-J+ ox (hJ3+sZ)} exp{(hJ3+sZ) ox J+} equals the direct matrix",
                res,
            );
        }
        Err(e) => {
            report.push(
                "universal R-matrix evaluation",
                false,
                Some(Residual::Note(format!("{e}"))),
            );
        }
    }
    // entries stay polynomial after reduction
    let direct = coloured_r(lambda, mu).matrix;
    report.push(
        "coloured R-matrix entries are polynomial",
        direct.is_polynomial(),
        None,
    );
    report
}

/// All colour-swap content of unitarity as the invariant actually tested:
/// `P R(m,l) P = R(l,m)^{-1}`.
pub fn colour_swap_inverse(lambda: &ColourParam, mu: &ColourParam) -> Result<ParamMatrix, MatrixError> {
    let p = flip_matrix(2);
    let lhs = p.mul(&coloured_r(mu, lambda).matrix)?.mul(&p)?;
    let rhs = coloured_r(lambda, mu).matrix.inverse()?;
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{format_plain, parse_scalar, SymbolContext};

    fn ctx() -> SymbolContext {
        SymbolContext::with_colours(["lambda", "mu", "nu", "eta", "z", "zp"])
    }

    fn rf(text: &str) -> RationalFunction {
        parse_scalar(text, &ctx()).unwrap()
    }

    #[test]
    fn r_matrix_entries() {
        let r = coloured_r(&ColourParam::symbol("lambda"), &ColourParam::symbol("mu"));
        assert_eq!(*r.matrix.get(0, 3), rf("h^2 - lambda*mu*s^2 - h*s*(lambda - mu)"));
        assert_eq!(*r.matrix.get(0, 1), rf("h + lambda*s"));
        assert_eq!(*r.matrix.get(1, 3), rf("h - mu*s"));
        assert_eq!(*r.matrix.get(2, 3), rf("-(h - lambda*s)"));
        assert!(r.matrix.is_polynomial());
    }

    #[test]
    fn one_parameter_specialization() {
        let r = specialize_preset(SpecializePreset::OneParameter);
        let expect: Vec<&str> = alloc::vec![
            "1", "h", "-h", "h^2",
            "0", "1", "0", "h",
            "0", "0", "1", "-h",
            "0", "0", "0", "1",
        ];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(format_plain(r.matrix.get(k / 4, k % 4)), *e);
        }
    }

    #[test]
    fn two_parameter_specialization() {
        let r = specialize_preset(SpecializePreset::TwoParameter);
        assert_eq!(*r.matrix.get(0, 1), rf("zp"));
        assert_eq!(*r.matrix.get(0, 2), rf("-zp"));
        assert_eq!(*r.matrix.get(0, 3), rf("z*zp"));
        assert_eq!(*r.matrix.get(1, 3), rf("z"));
        assert_eq!(*r.matrix.get(2, 3), rf("-z"));
    }

    #[test]
    fn identity_bindings_leave_matrix_unchanged() {
        let r = coloured_r(&ColourParam::symbol("lambda"), &ColourParam::symbol("mu"));
        let unchanged = specialize(&r, &Bindings::new()).unwrap();
        assert_eq!(r.matrix, unchanged.matrix);
    }

    #[test]
    fn ybe_suite_passes() {
        let report = verify_coloured_ybe(
            &ColourParam::symbol("lambda"),
            &ColourParam::symbol("mu"),
            &ColourParam::symbol("nu"),
        );
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn unitarity_suite_passes() {
        let report =
            verify_coloured_unitarity(&ColourParam::symbol("lambda"), &ColourParam::symbol("mu"));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn braid_suite_passes() {
        let report = verify_braided_ybe(
            &ColourParam::symbol("lambda"),
            &ColourParam::symbol("mu"),
            &ColourParam::symbol("nu"),
        );
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn characteristic_equation_suite_passes() {
        let report = verify_characteristic_equation(
            &ColourParam::symbol("lambda"),
            &ColourParam::symbol("mu"),
        );
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn universal_consistency() {
        let report = verify_universal_consistency(
            &ColourParam::symbol("lambda"),
            &ColourParam::symbol("mu"),
        );
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn colour_swap_is_inverse() {
        let res =
            colour_swap_inverse(&ColourParam::symbol("lambda"), &ColourParam::symbol("mu"))
                .unwrap();
        assert!(res.is_zero());
    }

    #[test]
    fn universal_r_at_zero_colours() {
        let r = universal_r_rep(&ColourParam::zero(), &ColourParam::zero()).unwrap();
        assert_eq!(
            r,
            specialize_preset(SpecializePreset::OneParameter).matrix
        );
    }
}
