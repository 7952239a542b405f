//! Run a catalog suite from code and print its JSON report.

use vaverify::{list_suites, run_suite};

fn main() {
    for s in list_suites() {
        println!("{:<22} {}", s.name, s.anchor);
    }
    let r = run_suite("curves-intersect", &[("a", "p2"), ("b", "p3")]).unwrap();
    println!("{}", r.json_line());
    println!("verdict: {}", r.verdict());
}
