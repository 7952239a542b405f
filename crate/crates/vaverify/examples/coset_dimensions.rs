//! Graded dimensions of the diagonal coset of two affine sl2 algebras at formal levels.

use vaverify::va_core::commutant::commutant_weight_space;
use vaverify::va_core::{parse_field_expr, presets};

fn main() {
    let alg = presets::affine_sl2("k1").tensor(&presets::affine_sl2("k2"), ("1", "2")).unwrap();
    let diag: Vec<_> = ["e1 + e2", "h1 + h2", "f1 + f2"].iter().map(|s| parse_field_expr(&alg, s).unwrap()).collect();
    for w in 1..=4 {
        let basis = commutant_weight_space(&alg, &diag, 2 * w, 5000).unwrap();
        println!("weight {w}: dimension {}", basis.len());
    }
}
