//! Exact intersections of the truncation curves.

use vaverify::truncation_curves::intersect;

fn main() {
    for (a, b) in [("p2", "p3"), ("p2", "p4"), ("p3", "p4")] {
        let x = intersect(a, b).unwrap();
        println!("{a} and {b}: resultant of degree {}", x.resultant.deg());
        for p in &x.points {
            println!("  {p}");
        }
        for n in &x.notes {
            println!("  note: {n}");
        }
    }
}
