//! Yang's R-matrix, the Yang-Baxter equation, and the RTT relation for the
//! evaluation representation t_ij(u) = δ_ij + E_ij u^-1.

use principal_yangian::rtt::evaluation::defining_relation_holds;
use principal_yangian::rtt::{rtt_sides, verify_rtt, verify_ybe, ybe_sides, Convention};

fn main() {
    for n in 2..=4 {
        let (l, r) = ybe_sides(n);
        println!("N={n}: YBE {}", l == r);
        let (l, r) = rtt_sides(n, Convention::Direct);
        println!("  RTT, t_ij = d_ij + E_ij/u:    {}", l == r);
        let (l, r) = rtt_sides(n, Convention::Transpose);
        println!("  RTT, t_ij = d_ij + E_ji/u:    {}", l == r);
        println!(
            "  coefficient relation r=s=1: {}",
            defining_relation_holds(n, Convention::Direct, 1, 1)
        );
        let reports = [verify_ybe(n), verify_rtt(n)];
        let passed: usize = reports.iter().map(|r| r.summary.passed).sum();
        let total: usize = reports.iter().map(|r| r.summary.total).sum();
        println!("  suites {passed}/{total}");
    }
}
