//! Euler-Poincare multiplicities of sl2 for small highest weights.

use vaverify::characters::euler_poincare_table;

fn main() {
    for row in euler_poincare_table(6) {
        println!("{}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
    }
}
