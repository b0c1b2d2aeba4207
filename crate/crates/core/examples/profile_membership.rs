use std::time::Instant;

use jordanian_core::rtt::{
    det_commutator_report, monochromatic_relations, paper_relations, quantum_determinant,
    ColourContent, MembershipOptions, SpanMembership,
};
use jordanian_core::scalar::Symbol;

fn main() {
    let lam = Symbol::new("lambda");
    let mu = Symbol::new("mu");

    // deg-4 [D,D] alone
    let mut rels = paper_relations(&lam, &mu).elements;
    rels.extend(monochromatic_relations(&lam, &mu));
    rels.extend(monochromatic_relations(&mu, &lam));
    let sector4 = ColourContent::new([(lam.clone(), 2), (mu.clone(), 2)]);
    let t = Instant::now();
    let span4 = SpanMembership::new(
        &rels,
        &sector4,
        &MembershipOptions { certificate: false, ..Default::default() },
    )
    .unwrap();
    println!(
        "deg-4 echelon: rank {} of dim {} in {:?}",
        span4.span_rank(),
        span4.sector_dim(),
        t.elapsed()
    );
    let t = Instant::now();
    let dd = quantum_determinant(&lam).commutator(&quantum_determinant(&mu));
    let m = span4.decide(&dd).unwrap();
    println!("[D_l, D_m] member={} decided in {:?}", m.is_member(), t.elapsed());

    let t = Instant::now();
    let report = det_commutator_report(&lam, &mu, &MembershipOptions::default()).unwrap();
    println!("det_commutator_report: passed={} in {:?}", report.passed(), t.elapsed());
}
