//! The representation layer of `U_{h,s}gl(2)`: formal Hopf structure maps on
//! generator words, the fundamental representation, the universal R-matrix in
//! representation, and the verification suites built on them.

mod classical;
mod generators;
mod hopf;
mod representation;

pub use classical::{classical_r_rep, classical_structure};
pub use generators::{
    antipode, antipode_word, coproduct, coproduct_at_leg, coproduct_word, counit, counit_at_leg,
    counit_word, Expression, GeneratorSymbol, TensorExpression, Word,
};
pub use hopf::{check_defining_relations, verify_hopf_axioms, verify_quasitriangularity};
pub use representation::{
    evaluate_tensor, evaluate_tensor_in, fundamental_rep, universal_r_formal, universal_r_rep,
    ColourParam, RepError, RepKind, Representation,
};
