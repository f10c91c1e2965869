//! Exact arithmetic in Q(ω_N): powers of ω, inverses, conjugation and the
//! character sums that make the principal basis orthogonal.

use principal_yangian::exactfield::{geometric_character_sum, rat, CycNum};

fn main() {
    for n in [3u32, 4, 5, 6] {
        let w = CycNum::omega_power(n, 1);
        let one_plus_w = CycNum::one(n) + w.clone();
        let inv = one_plus_w.inverse().expect("nonzero");
        println!("Q(w_{n}): w^{n} = {}", w.pow(n));
        println!("  (1+w)^-1      = {inv}");
        println!("  conj(w)       = {}", w.conjugate());
        println!("  w * conj(w)   = {}", w.clone() * w.conjugate());
        let sums: Vec<String> = (0..n as i64)
            .map(|k| geometric_character_sum(n, k).to_string())
            .collect();
        println!("  sum_j w^(kj)  = [{}]", sums.join(", "));
    }
    let half = CycNum::from_rational(4, rat(1, 2));
    let i = CycNum::omega_power(4, 1);
    println!(
        "in Q(i): (1/2 + i)^2 = {}",
        (half.clone() + i.clone()) * (half + i)
    );
}
