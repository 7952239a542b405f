//! Virasoro checks as rational-function identities in the level.

use vaverify::va_core::virasoro::{check_virasoro, sugawara};
use vaverify::va_core::{parse_field_expr, presets, Scalar};

fn main() {
    let aff = presets::affine_sl2("k");
    let l = sugawara(&aff, &Scalar::param("k")).unwrap();
    println!("Sugawara:  c = {}", check_virasoro(&aff, &l).unwrap().central_charge().unwrap());
    for alg in [presets::large_n4(), presets::small_n4()] {
        let l = parse_field_expr(&alg, "L").unwrap();
        println!("{}:  c = {}", alg.name(), check_virasoro(&alg, &l).unwrap().central_charge().unwrap());
    }
}
