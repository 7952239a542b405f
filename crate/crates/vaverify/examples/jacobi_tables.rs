//! Jacobi identities of the large N=4 table at a rational point, and a perturbed copy.

use vaverify::va_core::jacobi::{jacobi_all, jacobi_check};
use vaverify::va_core::{presets, Field, Scalar};
use vaverify::va_exact::q;

fn main() {
    let alg = presets::large_n4().specialize(&[("k", q(1, 2)), ("a", q(2, 1))]).unwrap();
    let wb = q(20, 1);
    let reports = jacobi_all(&alg, &wb).unwrap();
    let instances: usize = reports.iter().map(|r| r.instances).sum();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("large N=4 at k = 1/2, a = 2: {} triples, {instances} instances, {failed} failures", reports.len());

    let (gpp, gmm, h) = (alg.gen_index("Gpp").unwrap(), alg.gen_index("Gmm").unwrap(), alg.gen_index("h").unwrap());
    let old = alg.entries()[&(gpp, gmm)][&3].clone();
    let bad = alg.with_entry(gpp, gmm, 3, Field::Sum(vec![(Scalar::int(1), old), (Scalar::int(1), Field::Identity)])).unwrap();
    let r = jacobi_check(&bad, gpp, gmm, h, &wb).unwrap();
    match r.failure {
        Some(f) => println!("perturbed third pole of Gpp Gmm: fails at (m, n) = ({}, {})", f.m, f.n),
        None => println!("perturbed table went undetected"),
    }
}
