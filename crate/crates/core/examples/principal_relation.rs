//! Searches the bundled family of index patterns for the principal-series
//! commutation relation: screen at N=2, then confirm at N=3 and N=4.

use principal_yangian::rtt::{default_patterns, pattern_search, PatternStatus};

fn main() {
    let patterns = default_patterns();
    let result = pattern_search(&patterns, &[2, 3, 4]);
    for o in &result.outcomes {
        let status = match o.status {
            PatternStatus::Confirmed => "confirmed",
            PatternStatus::Spurious => "spurious",
            PatternStatus::Rejected => "rejected",
        };
        match o.counterexample {
            Some((n, ce)) => println!(
                "{status:9} {:28} first failure N={n} (i,j,k,l)={ce:?}",
                o.name
            ),
            None => println!("{status:9} {}", o.name),
        }
    }
}
