//! Check requests: built from flags or from one JSON line, and validated in
//! full before any suite starts computing.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::Value;
use truncation_curves::{families, CURVE_NAMES, EXTERNAL_CURVES, MAP_NAMES};
use va_exact::{q, Q};

use crate::catalog::{suite, BoundSpec, ParamKind, Suite};
use crate::json::frac;

/// A rejected request. Always reported as a usage error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn bad<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Fraction(Q),
    Integer(i64),
    Name(String),
    Range(i64, i64),
}

impl ParamValue {
    /// Canonical text: fractions as `num/den`, ranges as `a..b`.
    pub fn canonical(&self) -> String {
        match self {
            ParamValue::Fraction(x) => frac(x),
            ParamValue::Integer(n) => n.to_string(),
            ParamValue::Name(s) => s.clone(),
            ParamValue::Range(a, b) => format!("{a}..{b}"),
        }
    }
}

/// A validated request. Every parameter of the suite that has a default is filled in.
#[derive(Clone, Debug)]
pub struct CheckRequest {
    pub suite: &'static Suite,
    pub params: BTreeMap<String, ParamValue>,
    pub order: Option<Q>,
    pub weight_bound: Option<Q>,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

/// Request fields as given, before validation.
#[derive(Clone, Debug, Default)]
pub struct RawRequest {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub order: Option<String>,
    pub weight_bound: Option<String>,
    pub output: Option<String>,
}

/// `n` or `n/d` with `d > 0`, digits only. Anything else is malformed.
pub fn parse_fraction(s: &str) -> Result<Q, UsageError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = |x: &str, signed: bool| {
        let x = if signed { x.strip_prefix('-').unwrap_or(x) } else { x };
        !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) || den.is_some_and(|d| !digits(d, false)) {
        return bad(format!("malformed fraction `{s}`: expected n or n/d"));
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return bad(format!("malformed fraction `{s}`: zero denominator"));
    }
    Q::from_str(t).or_else(|_| bad(format!("malformed fraction `{s}`")))
}

fn parse_range(s: &str, min: i64, max: i64) -> Result<(i64, i64), UsageError> {
    let (a, b) = s.split_once("..").ok_or_else(|| UsageError(format!("malformed range `{s}`: expected a..b")))?;
    let (a, b) = match (a.trim().parse::<i64>(), b.trim().parse::<i64>()) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return bad(format!("malformed range `{s}`: expected a..b")),
    };
    if a > b || a < min || b > max {
        return bad(format!("range {a}..{b} is outside {min}..{max} or empty"));
    }
    Ok((a, b))
}

fn family_selector_known(s: &str) -> bool {
    s == "all" || families().iter().any(|f| f.id == s || f.id.starts_with(&format!("{s}-")))
}

fn parse_param(kind: ParamKind, name: &str, v: &str) -> Result<ParamValue, UsageError> {
    Ok(match kind {
        ParamKind::Fraction => ParamValue::Fraction(parse_fraction(v)?),
        ParamKind::Integer { min, max } => match v.trim().parse::<i64>() {
            Ok(n) if (min..=max).contains(&n) => ParamValue::Integer(n),
            Ok(n) => return bad(format!("{name} = {n} is outside {min}..{max}")),
            Err(_) => return bad(format!("{name}: `{v}` is not an integer")),
        },
        ParamKind::Curve => {
            if !CURVE_NAMES.contains(&v) && !EXTERNAL_CURVES.iter().any(|(n, _)| *n == v) {
                return bad(format!("unknown curve `{v}`"));
            }
            ParamValue::Name(v.to_string())
        }
        ParamKind::Map => {
            if !MAP_NAMES.contains(&v) {
                return bad(format!("unknown parametrization `{v}`"));
            }
            ParamValue::Name(v.to_string())
        }
        ParamKind::Family => {
            if !family_selector_known(v) {
                return bad(format!("unknown family `{v}`"));
            }
            ParamValue::Name(v.to_string())
        }
        ParamKind::Range { min, max } => {
            let (a, b) = parse_range(v, min, max)?;
            ParamValue::Range(a, b)
        }
    })
}

fn parse_bound(flag: &str, spec: Option<BoundSpec>, given: Option<&str>, suite: &str) -> Result<Option<Q>, UsageError> {
    let Some(spec) = spec else {
        return match given {
            Some(_) => bad(format!("suite {suite} does not take {flag}")),
            None => Ok(None),
        };
    };
    let x = parse_fraction(given.unwrap_or(spec.default))?;
    let max = q(spec.max.0, spec.max.1);
    if x <= q(0, 1) || x > max {
        return bad(format!("{flag} {} is outside (0, {}]", frac(&x), frac(&max)));
    }
    if spec.half_integer && !(&x * q(2, 1)).is_integer() {
        return bad(format!("{flag} {} must be a multiple of 1/2", frac(&x)));
    }
    Ok(Some(x))
}

impl RawRequest {
    pub fn validate(&self) -> Result<CheckRequest, UsageError> {
        let s = suite(&self.suite).ok_or_else(|| UsageError(format!("unknown suite `{}` (see `vaverify list`)", self.suite)))?;
        let mut params = BTreeMap::new();
        for (name, v) in &self.params {
            let spec = s.params.iter().find(|p| p.name == name).ok_or_else(|| UsageError(format!("suite {} has no parameter `{name}`", s.name)))?;
            if params.insert(name.clone(), parse_param(spec.kind, name, v)?).is_some() {
                return bad(format!("parameter `{name}` given twice"));
            }
        }
        for spec in s.params {
            if let (false, Some(d)) = (params.contains_key(spec.name), spec.default) {
                params.insert(spec.name.to_string(), parse_param(spec.kind, spec.name, d)?);
            }
        }
        let order = parse_bound("--order", s.order, self.order.as_deref(), s.name)?;
        let weight_bound = parse_bound("--weight-bound", s.weight_bound, self.weight_bound.as_deref(), s.name)?;
        let req = CheckRequest { suite: s, params, order, weight_bound, output: self.output.as_ref().filter(|o| o.as_str() != "-").map(PathBuf::from) };
        req.check_combinations()?;
        Ok(req)
    }

    /// One batch line: `{"suite": ..., "params": {...}, "order": ..., "weight_bound": ..., "output": ...}`.
    /// Parameter and bound values may be strings or integers.
    pub fn from_json(line: &str) -> Result<RawRequest, UsageError> {
        let v: Value = serde_json::from_str(line).map_err(|e| UsageError(format!("malformed JSON request: {e}")))?;
        let obj = v.as_object().ok_or_else(|| UsageError("a request must be a JSON object".into()))?;
        for k in obj.keys() {
            if !["suite", "params", "order", "weight_bound", "output"].contains(&k.as_str()) {
                return bad(format!("unknown request field `{k}`"));
            }
        }
        let text = |v: &Value, what: &str| match v {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) if n.is_i64() => Ok(n.to_string()),
            _ => bad(format!("{what} must be a string or an integer")),
        };
        let suite = match obj.get("suite") {
            Some(Value::String(s)) => s.clone(),
            _ => return bad("request needs a string field `suite`"),
        };
        let mut params = Vec::new();
        match obj.get("params") {
            None | Some(Value::Null) => {}
            Some(Value::Object(m)) => {
                for (k, v) in m {
                    params.push((k.clone(), text(v, &format!("parameter `{k}`"))?));
                }
            }
            Some(_) => return bad("`params` must be an object"),
        }
        let opt = |k: &str| obj.get(k).filter(|v| !v.is_null()).map(|v| text(v, k)).transpose();
        Ok(RawRequest { suite, params, order: opt("order")?, weight_bound: opt("weight_bound")?, output: opt("output")? })
    }
}

impl CheckRequest {
    pub fn fraction(&self, name: &str) -> Option<&Q> {
        match self.params.get(name) {
            Some(ParamValue::Fraction(x)) => Some(x),
            _ => None,
        }
    }

    pub fn integer(&self, name: &str) -> Option<i64> {
        match self.params.get(name) {
            Some(ParamValue::Integer(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn name(&self, name: &str) -> Option<&str> {
        match self.params.get(name) {
            Some(ParamValue::Name(s)) => Some(s),
            _ => None,
        }
    }

    pub fn range(&self, name: &str) -> Option<(i64, i64)> {
        match self.params.get(name) {
            Some(ParamValue::Range(a, b)) => Some((*a, *b)),
            _ => None,
        }
    }

    /// Inputs as echoed in the report, sorted by name.
    pub fn inputs(&self) -> BTreeMap<String, String> {
        let mut m: BTreeMap<String, String> = self.params.iter().map(|(k, v)| (k.clone(), v.canonical())).collect();
        if let Some(o) = &self.order {
            m.insert("order".into(), frac(o));
        }
        if let Some(w) = &self.weight_bound {
            m.insert("weight_bound".into(), frac(w));
        }
        m
    }

    /// Cross-parameter constraints that need no computation.
    fn check_combinations(&self) -> Result<(), UsageError> {
        match self.suite.name {
            "jacobi-large-n4" => {
                if self.params.contains_key("k") != self.params.contains_key("a") {
                    return bad("jacobi-large-n4 takes k and a together");
                }
            }
            "thm-char-large" | "cor-char-large" => {
                characters::CharSpec::new(self.fraction("lambda").unwrap().clone(), self.fraction("mu").unwrap().clone())
                    .map_err(|e| UsageError(e.to_string()))?;
            }
            "thm-char-small" => {
                characters::small::check_lambda(self.fraction("lambda").unwrap()).map_err(|e| UsageError(e.to_string()))?;
            }
            "curves-intersect" if self.name("a") == self.name("b") => {
                return bad("curves-intersect needs two distinct curves");
            }
            _ => {}
        }
        if let Some(o) = &self.order {
            if self.suite.order.is_some() && !o.is_integer() {
                return bad("--order must be an integer");
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(suite: &str, params: &[(&str, &str)]) -> RawRequest {
        RawRequest { suite: suite.into(), params: params.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(), ..Default::default() }
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_fraction("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_fraction("7").unwrap(), q(7, 1));
        for s in ["", "1/0", "1/-2", "2/3x", "1.5", "--1", "1//2", "k"] {
            assert!(parse_fraction(s).is_err(), "{s}");
        }
    }

    #[test]
    fn defaults_are_filled() {
        let r = raw("thm-char-large", &[]).validate().unwrap();
        assert_eq!(r.inputs().get("lambda").unwrap(), "2/3");
        assert_eq!(r.order, Some(q(4, 1)));
    }

    #[test]
    fn rejections() {
        assert!(raw("no-such-suite", &[]).validate().is_err());
        assert!(raw("curves-eval", &[("k", "1/0")]).validate().is_err());
        assert!(raw("curves-eval", &[("z", "1")]).validate().is_err());
        assert!(raw("euler-poincare", &[("bound", "1000")]).validate().is_err());
        assert!(raw("jacobi-large-n4", &[("k", "1/2")]).validate().is_err());
        assert!(raw("coincidence-families", &[("n", "8..2")]).validate().is_err());
        let mut r = raw("closure-scaled", &[]);
        r.weight_bound = Some("15".into());
        assert!(r.validate().is_err());
        let mut r = raw("curves-eval", &[]);
        r.order = Some("4".into());
        assert!(r.validate().is_err());
    }

    #[test]
    fn json_lines() {
        let r = RawRequest::from_json(r#"{"suite":"curves-eval","params":{"map":"kk","k":-6}}"#).unwrap().validate().unwrap();
        assert_eq!(r.fraction("k"), Some(&q(-6, 1)));
        assert!(RawRequest::from_json(r#"{"suite":"curves-eval","bogus":1}"#).is_err());
        assert!(RawRequest::from_json("not json").is_err());
    }
}
