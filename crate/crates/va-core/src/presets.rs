//! Bundled presentations.

use crate::algebra::Algebra;
use crate::error::{Result, VaError};
use crate::text::parse_presentation;

pub const LARGE_N4: &str = include_str!("../data/large-n4.va");
pub const SMALL_N4: &str = include_str!("../data/small-n4.va");

/// Names accepted by [`by_name`], with their argument lists.
pub const CATALOG: &[&str] =
    &["heisenberg(n)", "fermion(n)", "betagamma", "godd(s)", "tfield", "affine-sl2(k)", "large-n4(k,a)", "small-n4(k)"];

fn free_text(name: &str, gen: &str, n: usize, parity: &str, weight: &str, pole: u32) -> String {
    let mut s = format!("name {name}\nkind free-field\n");
    for i in 1..=n {
        s.push_str(&format!("gen {gen}{i} {parity} {weight}\n"));
    }
    for i in 1..=n {
        s.push_str(&format!("ope {gen}{i} {gen}{i} {{ {pole}: 1 }}\n"));
    }
    s
}

/// Rank-n Heisenberg algebra: `a_i(z) a_j(w) ~ δ_ij (z-w)^{-2}`.
pub fn heisenberg_text(n: usize) -> String {
    free_text(&format!("heisenberg({n})"), "a", n, "even", "1", 2)
}

/// n free fermions of weight 1/2: `psi_i(z) psi_j(w) ~ δ_ij (z-w)^{-1}`.
pub fn fermion_text(n: usize) -> String {
    free_text(&format!("fermion({n})"), "psi", n, "odd", "1/2", 1)
}

/// Odd generalized free fields of weight 3/2: `phi_i(z) phi_j(w) ~ δ_ij (z-w)^{-3}`.
pub fn godd_text(s: usize) -> String {
    free_text(&format!("godd({s})"), "phi", s, "odd", "3/2", 3)
}

pub fn betagamma_text() -> String {
    "name betagamma\nkind free-field\ngen beta even 1\ngen gamma even 0\nope beta gamma { 1: 1 }\n".to_string()
}

/// Even field of weight 2 with `t(z) t(w) ~ (z-w)^{-4}`.
pub fn tfield_text() -> String {
    "name tfield\nkind free-field\ngen t even 2\nope t t { 4: 1 }\n".to_string()
}

/// Affine sl2 at level `param`, with the normalized form: `(e,f) = 1`, `(h,h) = 2`.
pub fn affine_sl2_text(param: &str) -> String {
    format!(
        "name affine-sl2({param})\nparams {param}\nkind structure-constant\n\
         gen e even 1\ngen h even 1\ngen f even 1\n\
         ope h h {{ 2: 2*{param} }}\nope e f {{ 2: {param}; 1: h }}\n\
         ope h e {{ 1: 2 e }}\nope h f {{ 1: -2 f }}\n"
    )
}

pub fn heisenberg(n: usize) -> Algebra {
    parse_presentation(&heisenberg_text(n)).expect("bundled presentation")
}

pub fn fermion(n: usize) -> Algebra {
    parse_presentation(&fermion_text(n)).expect("bundled presentation")
}

pub fn godd(s: usize) -> Algebra {
    parse_presentation(&godd_text(s)).expect("bundled presentation")
}

pub fn betagamma() -> Algebra {
    parse_presentation(&betagamma_text()).expect("bundled presentation")
}

pub fn tfield() -> Algebra {
    parse_presentation(&tfield_text()).expect("bundled presentation")
}

pub fn affine_sl2(param: &str) -> Algebra {
    parse_presentation(&affine_sl2_text(param)).expect("bundled presentation")
}

pub fn large_n4() -> Algebra {
    parse_presentation(LARGE_N4).expect("bundled presentation")
}

pub fn small_n4() -> Algebra {
    parse_presentation(SMALL_N4).expect("bundled presentation")
}

/// Presentation text for a bundled name such as `heisenberg(3)` or `affine-sl2(k)`.
pub fn text_by_name(spec: &str) -> Result<String> {
    let spec = spec.trim();
    let (base, arg) = match spec.find('(') {
        Some(i) if spec.ends_with(')') => (&spec[..i], Some(spec[i + 1..spec.len() - 1].trim())),
        _ => (spec, None),
    };
    let count = |a: Option<&str>| -> Result<usize> {
        a.ok_or_else(|| VaError::Invalid(format!("`{base}` needs a size argument")))?
            .parse::<usize>()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| VaError::Invalid(format!("bad size in `{spec}`")))
    };
    Ok(match base {
        "heisenberg" => heisenberg_text(count(arg)?),
        "fermion" => fermion_text(count(arg)?),
        "godd" => godd_text(count(arg)?),
        "betagamma" => betagamma_text(),
        "tfield" => tfield_text(),
        "affine-sl2" => affine_sl2_text(arg.filter(|a| !a.is_empty()).unwrap_or("k")),
        "large-n4" => LARGE_N4.to_string(),
        "small-n4" => SMALL_N4.to_string(),
        _ => return Err(VaError::Invalid(format!("unknown preset `{spec}`"))),
    })
}

pub fn by_name(spec: &str) -> Result<Algebra> {
    parse_presentation(&text_by_name(spec)?)
}
