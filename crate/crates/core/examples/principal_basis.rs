//! The principal basis A_ij of gl_N, its Fourier relation to the unit
//! matrices, and the commutation table it inherits.

use principal_yangian::lie::{principal_coordinates, principal_matrix, unit_matrix, verify_basis};

fn main() {
    let n = 3;
    for (i, j) in [(0, 1), (1, 0), (1, 1), (2, 1)] {
        println!("A_{i}{j} = {}", principal_matrix(n, i, j));
    }
    let e = unit_matrix(n, 1, 3).expect("in range");
    let coords = principal_coordinates(&e).expect("square");
    let shown: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    println!("E_13 in the principal basis: [{}]", shown.join(", "));

    let a = principal_matrix(n, 1, 1);
    let b = principal_matrix(n, 2, 1);
    let c = a.commutator(&b).expect("square");
    println!("[A_11, A_21] = {}", c);

    for n in 2..=5 {
        let r = verify_basis(n);
        println!(
            "N={n}: basis checks {}/{}",
            r.summary.passed, r.summary.total
        );
    }
}
