//! Large N=4 character decomposition and its corollary at one rational pair.

use vaverify::characters::{verify_cor_char, verify_thm_char, CharSpec};
use vaverify::va_exact::q;

fn main() {
    let spec = CharSpec::new(q(2, 3), q(2, 5)).unwrap();
    print!("{}", verify_thm_char(&spec, &q(4, 1)));
    print!("{}", verify_cor_char(&spec, &q(4, 1)));
}
