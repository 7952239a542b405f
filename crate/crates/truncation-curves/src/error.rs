use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("unknown curve `{0}` (known: p1, p2, p3, p4, degenerate)")]
    UnknownCurve(String),
    #[error("unknown parametrization `{0}` (known: k2, kh, kk, km, small)")]
    UnknownMap(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{map}: k = {k} is a pole of {coord}(k); the factor {factor} vanishes")]
    Pole { map: String, k: String, coord: &'static str, factor: String },
    #[error("cannot intersect `{0}` with itself")]
    SameCurve(String),
    #[error("curves share the component {0}; the intersection is not isolated")]
    NonIsolated(String),
    #[error("refused: {0}")]
    Refused(String),
}
