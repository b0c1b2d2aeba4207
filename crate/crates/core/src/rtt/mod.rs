//! Free coloured noncommutative algebra and the RTT verification engine:
//! relation construction, graded-sector linear algebra, ideal membership with
//! certificates, and the quantum-determinant suite.

mod determinant;
mod membership;
mod ncpoly;
mod relations;
mod sector;

pub use determinant::{
    det_commutator_report, quantum_determinant, quantum_determinant_alt, verify_antipode_inverse,
    verify_det_forms, verify_grouplike,
};
pub use membership::{
    ideal_membership, verify_certificate, CertEntry, Certificate, Membership, MembershipOptions,
    SpanMembership,
};
pub use ncpoly::{ColourContent, Letter, NCGenerator, NCPoly, NCWord};
pub use relations::{
    gl_zz_relations, mixed_sector, monochromatic_relations, paper_relations, rtt_residual,
    to_zz_variables, verify_monochromatic_soundness, verify_rtt_span, RelationSet,
};
pub use sector::{
    guard_points, rank_at_point, span_compare, Echelon, SectorBasis, SectorError, SpanComparison,
    SpanRelation, SparseVec,
};
