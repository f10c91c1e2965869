//! Generalized Bell vectors Ψ_k^(m) in V ⊗ V*, their orthogonality, and the
//! reduced density matrix that certifies maximal entanglement.

use principal_yangian::bell::{
    bell_labels, bell_vector, bell_vector_cyc, hermitian_pairing, reduced_density_first,
    verify_bell, DualVector, FundVector, TensorVector,
};

fn main() {
    let n = 3;
    for (k, m) in bell_labels(n).into_iter().take(4) {
        let v = bell_vector_cyc(n, k as i64, m as i64);
        let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        println!("Psi_{k}^({m}) = [{}]", shown.join(", "));
    }
    let p = bell_vector_cyc(n, 2, 3);
    let q = bell_vector_cyc(n, 3, 2);
    println!("<Psi_2^(3), Psi_2^(3)> = {}", hermitian_pairing(&p, &p));
    println!("<Psi_2^(3), Psi_3^(2)> = {}", hermitian_pairing(&p, &q));

    let rho = reduced_density_first(&bell_vector(n, 2, 3)).expect("nonzero");
    println!("Tr_2 |Psi><Psi| = {}", rho);

    let product = TensorVector::product(&FundVector::basis(n, 1), &DualVector::basis(n, 2));
    let rho = reduced_density_first(&product).expect("nonzero");
    println!("product state:   {}", rho);

    for n in 2..=5 {
        let r = verify_bell(n);
        println!(
            "N={n}: bell checks {}/{}",
            r.summary.passed, r.summary.total
        );
    }
}
