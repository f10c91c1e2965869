//! Δ(J(x)) on W = V(λ₁, a) ⊗ V(λ_{N-1}, b): the correction term from the
//! split Casimir, checked against the explicit principal-basis sum.

use principal_yangian::lie::BasisLabelT;
use principal_yangian::yangian::coproduct::verify_coproduct;
use principal_yangian::yangian::{delta_jx_casimir, delta_jx_explicit, YangianRep};

fn main() {
    let n = 2;
    let t = BasisLabelT::new(n, 1, 2);
    let op = delta_jx_explicit(n, t).expect("sl label");
    println!("Delta(J({t})) at N={n}:");
    for ((p, q), m) in op.terms() {
        println!("  a^{p} b^{q}: {} nonzero entries", m.nonzero_count());
    }
    println!(
        "casimir form agrees: {}",
        delta_jx_casimir(n, t).expect("sl label") == op
    );

    for n in 2..=5 {
        let rep = YangianRep::new(n);
        let r = verify_coproduct(&rep);
        println!(
            "N={n}: coproduct checks {}/{}",
            r.summary.passed, r.summary.total
        );
    }

    let mut rep = YangianRep::new(3);
    let t = rep.generators()[0];
    rep.corrupt(t);
    let r = verify_coproduct(&rep);
    println!("tampered Delta(J({t})): {} failures", r.summary.failed);
}
