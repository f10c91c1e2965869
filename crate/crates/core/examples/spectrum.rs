//! `J²` and `I²` on the Bell vectors, symbolically in `a, b`, plus the
//! parameter product at which `J²` becomes a scalar.

use principal_yangian::yangian::casimir::{
    j2_eigenvalue_adjoint, j2_eigenvalue_singlet, scalar_product, verify_spectrum,
};
use principal_yangian::yangian::YangianRep;

fn main() {
    for n in 2..=5 {
        let start = std::time::Instant::now();
        let rep = YangianRep::new(n);
        let report = verify_spectrum(&rep).expect("traceless inputs");
        println!(
            "N={n}: {}/{} checks ({:.1?})",
            report.summary.passed,
            report.summary.total,
            start.elapsed()
        );
        println!("  J2 on Psi_1^(1): {}", j2_eigenvalue_singlet(n));
        println!("  J2 elsewhere:    {}", j2_eigenvalue_adjoint(n));
        println!("  scalar iff ab = {}", scalar_product(n));
        for f in report.failures() {
            println!("  FAIL {}", f.id);
        }
    }
}
