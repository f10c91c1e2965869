//! Checks Drinfeld's triple and quadruple relations on `W` for N=2 (every
//! generator tuple) and N=3 (seeded samples plus degenerate tuples).

use principal_yangian::yangian::drinfeld::{verify_drinfeld_relations, SampleSet};
use principal_yangian::yangian::YangianRep;

fn main() {
    for n in [2, 3] {
        let rep = YangianRep::new(n);
        let samples = if n == 2 {
            SampleSet::exhaustive(&rep)
        } else {
            SampleSet::sampled(&rep, 20, 7)
        };
        let start = std::time::Instant::now();
        let report = verify_drinfeld_relations(&rep, &samples);
        println!(
            "N={n}: {}/{} identities hold ({:.1?})",
            report.summary.passed,
            report.summary.total,
            start.elapsed()
        );
        for note in &report.notes {
            println!("  {note}");
        }
        for f in report.failures() {
            println!("  FAIL {}", f.id);
        }
    }
}
