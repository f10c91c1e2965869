//! Driving the verifier from code: build reports, merge them, write JSON,
//! and call the same entry point the `yangian` binary uses.

use principal_yangian::cli;
use principal_yangian::report::Report;
use principal_yangian::yangian::{verify_main_theorem, YangianRep};

fn main() {
    let rep = YangianRep::new(2);
    let theorem = verify_main_theorem(&rep);
    let json = theorem.to_json_string();
    let back = Report::from_json_str(&json).expect("valid report");
    println!(
        "{}: {} bytes, round trip equal: {}",
        back.file_name(),
        json.len(),
        back.summary.total == theorem.summary.total
    );

    let mut items = theorem.items.clone();
    let tail = items.split_off(items.len() / 2);
    let first = Report::new("main-theorem", 2, items);
    let second = Report::new("main-theorem", 2, tail);
    let merged = first.clone().merge(second).expect("disjoint ids");
    println!(
        "merged halves: {} items, valid: {}",
        merged.items.len(),
        merged.validate().is_ok()
    );
    if let Err(e) = first.clone().merge(first) {
        println!("self-merge refused: {e}");
    }

    let dir = std::env::temp_dir().join("yangian-example-reports");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(
        [
            "yangian",
            "verify",
            "--n",
            "2,3",
            "--suite",
            "bell,rtt",
            "--out",
            dir.to_str().unwrap(),
        ],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}, reports in {}", dir.display());
}
