//! Brute-force check that `Δ(J(T_i^{(j)}))` shifts each Bell vector onto a
//! single Bell vector with the closed-form coefficient, for N = 2..=5.

use principal_yangian::yangian::{verify_main_theorem, YangianRep};

fn main() {
    for n in 2..=5 {
        let start = std::time::Instant::now();
        let rep = YangianRep::new(n);
        let report = verify_main_theorem(&rep);
        println!(
            "N={n}: {}/{} identities ({:.1?})",
            report.summary.passed,
            report.summary.total,
            start.elapsed()
        );
        for f in report.failures().take(3) {
            println!("  FAIL {}", f.id);
        }
    }
}
