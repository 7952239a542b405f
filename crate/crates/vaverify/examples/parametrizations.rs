//! Parametrizations by a level: identical vanishing on their curve and a few values.

use vaverify::truncation_curves::{eval_param, on_curve_identically, param};
use vaverify::va_exact::{fmt_rational, q};

fn main() {
    for (c, m) in [("p2", "k2"), ("p3", "kh"), ("p4", "kk")] {
        let map = param(m).unwrap();
        println!("{m}: c = {}, lambda = {}", map.c_of_k.display_in(map.variable), map.lambda_of_k.display_in(map.variable));
        println!("  {c} along {m} vanishes identically: {}", on_curve_identically(c, m).unwrap().vanishes());
    }
    for (m, k) in [("kk", q(-3, 4)), ("kk", q(-6, 1)), ("k2", q(6, 1)), ("kk", q(2, 1))] {
        match eval_param(m, &k) {
            Ok(p) => println!("{m}({}) = {p}", fmt_rational(&k)),
            Err(e) => println!("{m}({}): {e}", fmt_rational(&k)),
        }
    }
}
