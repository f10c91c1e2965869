//! I², J² and Δ(A_ii) pairwise commute on W, so they can be diagonalized
//! together.

use principal_yangian::yangian::casimir::delta_cartan;
use principal_yangian::yangian::TensorOperator;
use principal_yangian::yangian::{
    casimir_i2_tensor, casimir_j2, verify_commutation_lemma, YangianRep,
};

fn main() {
    let rep = YangianRep::new(3);
    let j2 = casimir_j2(&rep);
    let i2 = TensorOperator::constant(casimir_i2_tensor(3));
    println!("J2 at N=3 has {} monomials in a, b", j2.terms().len());
    println!("[I2, J2] = 0: {}", i2.commutator(&j2).is_zero());
    for (i, d) in delta_cartan(3) {
        let d = TensorOperator::constant(d);
        println!("[J2, Delta(A_{i}{i})] = 0: {}", j2.commutator(&d).is_zero());
    }
    for n in 2..=4 {
        let r = verify_commutation_lemma(&YangianRep::new(n));
        println!("N={n}: {}/{}", r.summary.passed, r.summary.total);
    }
}
