//! The presentation text format: print a bundled algebra, edit it, and parse it back.

use vaverify::va_core::{parse_presentation, presets, write_presentation};

fn main() {
    let text = presets::text_by_name("affine-sl2(k)").unwrap();
    println!("{text}");
    let alg = parse_presentation(&text).unwrap();
    println!("{} generators, parameters {:?}", alg.ngens(), alg.params());
    let twisted = text.replace("name affine-sl2", "name my-sl2");
    let again = parse_presentation(&twisted).unwrap();
    assert_eq!(write_presentation(&again).replace("my-sl2", "affine-sl2"), write_presentation(&alg));
    println!("round trip through the text format is stable");
}
