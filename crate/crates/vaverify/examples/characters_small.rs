//! Small N=4 character decomposition.

use vaverify::characters::verify_thm_char_small;
use vaverify::va_exact::q;

fn main() {
    let lambda = std::env::args().nth(1).map(|s| vaverify::parse_fraction(&s).unwrap()).unwrap_or(q(2, 3));
    print!("{}", verify_thm_char_small(&lambda, &q(4, 1)));
}
