//! Where W stops being irreducible: invariant subspaces at a - b = ±N/2 and
//! the Burnside dimension count everywhere else.
//!
//! `cargo run --release --example subrepresentations -- 3 1/3 0`

use principal_yangian::exactfield::parse_rational;
use principal_yangian::yangian::subrep::{analyze_subrep, verify_subrep, BURNSIDE_MAX_N};
use principal_yangian::yangian::YangianRep;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [n, a, b] = args.as_slice() {
        let n: usize = n.parse().expect("N");
        let (a, b) = (parse_rational(a).expect("a"), parse_rational(b).expect("b"));
        let rep = YangianRep::new(n);
        let r = analyze_subrep(&rep, &a, &b, n <= BURNSIDE_MAX_N);
        println!("N={n} a={a} b={b}: {}", r.summary_line());
        return;
    }
    for n in [2, 3] {
        let rep = YangianRep::new(n);
        let start = std::time::Instant::now();
        let r = verify_subrep(&rep, true);
        println!("N={n} ({:.1?})", start.elapsed());
        for item in &r.items {
            println!("  {} {:?}", item.id, item.status);
        }
    }
}
