//! OPE closure of the fermionic generating set, and a set that misses a generator.

use vaverify::orbifold_invariants::{closure_check, fermionic_generators, Invariant};
use vaverify::va_core::presets;

fn main() {
    let g = presets::godd(4);
    let gens: Vec<_> = fermionic_generators().iter().map(|x| x.build(&g).unwrap()).collect();
    let r = closure_check(&g, &gens, 20).unwrap();
    println!("fermionic set, total weight <= 10: {} pairs, closes: {}", r.pairs.len(), r.passed());

    let h = presets::heisenberg(3);
    let xs = [Invariant::Q(0, 0), Invariant::C(0, 1, 2)];
    let gens: Vec<_> = xs.iter().map(|x| x.build(&h).unwrap()).collect();
    let r = closure_check(&h, &gens, 24).unwrap();
    for e in r.failures() {
        println!("{{Q00, C012}}: pole {} of {} {} leaves the span", e.pole, xs[e.left], xs[e.right]);
    }
}
