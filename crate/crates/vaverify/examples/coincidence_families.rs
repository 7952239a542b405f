//! Coincidence families: both levels of each pair land on one point of the curve.

use vaverify::truncation_curves::{coincidence_family_check, families, RowStatus};

fn main() {
    for f in families() {
        let r = coincidence_family_check(f.id, 2..=8).unwrap();
        let pass = r.rows.iter().filter(|x| x.status == RowStatus::Pass).count();
        println!("{:<10} {:<3} {} of {} rows agree{}", r.id, r.map, pass, r.rows.len(), if r.passed() { "" } else { "  FAIL" });
    }
}
