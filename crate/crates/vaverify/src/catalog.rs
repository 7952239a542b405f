//! The suite catalog. Each suite names the statement it checks by an anchor in the source text.

/// What a parameter value must look like.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    /// An exact fraction `n` or `n/d`.
    Fraction,
    /// An integer in `min..=max`.
    Integer { min: i64, max: i64 },
    /// A curve name, bundled or external.
    Curve,
    /// A parametrization name.
    Map,
    /// A family id, a prefix of ids, or `all`.
    Family,
    /// An inclusive range `a..b` inside `min..=max`.
    Range { min: i64, max: i64 },
}

/// A suite parameter and its default, as text.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

/// Upper limit for a bound flag, and whether it must be a multiple of 1/2.
#[derive(Clone, Copy, Debug)]
pub struct BoundSpec {
    pub default: &'static str,
    /// Largest accepted value, as `(num, den)`.
    pub max: (i64, i64),
    pub half_integer: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub anchor: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    /// Accepts `--order` (q-expansion order).
    pub order: Option<BoundSpec>,
    /// Accepts `--weight-bound`.
    pub weight_bound: Option<BoundSpec>,
}

const fn p(name: &'static str, kind: ParamKind, default: Option<&'static str>, help: &'static str) -> ParamSpec {
    ParamSpec { name, kind, default, help }
}

const fn b(default: &'static str, max: (i64, i64), half_integer: bool) -> Option<BoundSpec> {
    Some(BoundSpec { default, max, half_integer })
}

use ParamKind::*;

pub const SUITES: &[Suite] = &[
    Suite {
        name: "decouple-wt12",
        anchor: "Appendix B",
        summary: "weight 12 decoupling relation in H(3)^SO3 evaluates to zero; solver recovers the corrections",
        params: &[],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "central-charges",
        anchor: "sugawara; Appendix A",
        summary: "Virasoro check: Sugawara c = 3k/(k+2), large N=4 c = -6k-3, small N=4 c = -6(k+1)",
        params: &[],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "jacobi-large-n4",
        anchor: "Appendix A",
        summary: "Jacobi identities among all generator triples of the large N=4 table, plus a perturbed-table control",
        params: &[p("k", Fraction, None, "level (default: the three points 1/2, 1, -3/4)"), p("a", Fraction, None, "second parameter, given together with k")],
        order: None,
        weight_bound: b("20", (40, 1), false),
    },
    Suite {
        name: "jacobi-small-n4",
        anchor: "Appendix A",
        summary: "Jacobi identities among all generator triples of the small N=4 table",
        params: &[p("k", Fraction, None, "level (default: 1/2 and -3/4)")],
        order: None,
        weight_bound: b("20", (40, 1), false),
    },
    Suite {
        name: "thm-char-large",
        anchor: "thm:char",
        summary: "large N=4 character decomposition, multiplied through by the Weyl denominators",
        params: &[p("lambda", Fraction, Some("2/3"), "lambda"), p("mu", Fraction, Some("2/5"), "mu")],
        order: b("4", (6, 1), false),
        weight_bound: None,
    },
    Suite {
        name: "cor-char-large",
        anchor: "cor:char",
        summary: "V_0 is the character of V^{k,a}; q^1 and q^{3/2} coefficients at z = w = 1",
        params: &[p("lambda", Fraction, Some("2/3"), "lambda"), p("mu", Fraction, Some("2/5"), "mu")],
        order: b("4", (6, 1), false),
        weight_bound: None,
    },
    Suite {
        name: "thm-char-small",
        anchor: "thm:charsmall",
        summary: "small N=4 character decomposition, multiplied through by the Weyl denominators",
        params: &[p("lambda", Fraction, Some("2/3"), "lambda")],
        order: b("4", (6, 1), false),
        weight_bound: None,
    },
    Suite {
        name: "euler-poincare",
        anchor: "thm:triality",
        summary: "Euler-Poincare multiplicity of sl2 is delta_{n,m}",
        params: &[p("bound", Integer { min: 0, max: 200 }, Some("12"), "largest n and m")],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "curves-on-curve",
        anchor: "thm:classificationw246; kkcurve; para:k2; para:kh; para:kk",
        summary: "p2, p3, p4 vanish identically along their parametrizations; p2 passes through the degenerate points",
        params: &[],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "curves-intersect",
        anchor: "Coincidences between C_{r,s} and C_{r',s'}",
        summary: "intersection of two truncation curves by resultant and factorization",
        params: &[p("a", Curve, Some("p2"), "first curve"), p("b", Curve, Some("p3"), "second curve")],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "curves-eval",
        anchor: "para:k2; para:kh; para:kk",
        summary: "evaluate a parametrization (c(k), lambda(k)) at a rational level",
        params: &[p("map", Map, Some("kk"), "k2, kh, kk, km or small"), p("k", Fraction, Some("3"), "level")],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "curves-coincidences",
        anchor: "Coincidences between C_{r,s} and C_{r',s'}",
        summary: "the four coset coincidence points reproduced from intersections and parametrizations",
        params: &[],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "coincidence-families",
        anchor: "thm:k2spcoin",
        summary: "paired levels of each coincidence family map to one point of the curve",
        params: &[p("family", Family, Some("k2-sp"), "family id, or a prefix such as k2-sp, or all"), p("n", Range { min: 1, max: 60 }, Some("2..8"), "inclusive range of n")],
        order: None,
        weight_bound: None,
    },
    Suite {
        name: "closure-scaled",
        anchor: "mingenset",
        summary: "OPE closure of generator pairs: minimal set to weight 14, fermionic set to weight 12, singleton {Q00} expected to fail",
        params: &[p("fermionic_bound", Integer { min: 3, max: 12 }, Some("12"), "weight bound for the fermionic set")],
        order: None,
        weight_bound: b("14", (14, 1), true),
    },
    Suite {
        name: "coset-dims",
        anchor: "sec:generic",
        summary: "diagonal coset of V^{k1}(sl2) x V^{k2}(sl2) at formal levels: dimensions 1, 1, 3 at weights 2, 3, 4",
        params: &[p("max_weight", Integer { min: 2, max: 5 }, Some("4"), "largest weight")],
        order: None,
        weight_bound: None,
    },
];

pub fn list_suites() -> &'static [Suite] {
    SUITES
}

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog() {
        assert!(list_suites().len() >= 12);
        assert_eq!(suite("decouple-wt12").unwrap().anchor, "Appendix B");
        assert_eq!(suite("jacobi-large-n4").unwrap().anchor, "Appendix A");
        let mut names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }
}
