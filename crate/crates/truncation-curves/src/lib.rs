//! Truncation curves of the universal even spin algebra in the `(c, λ)` plane,
//! their parametrizations by a level, exact curve intersections, and the
//! coincidence families that rest on them.
//!
//! Everything is exact. Intersections eliminate `λ` with a subresultant
//! resultant, factor over the rationals and report irrational points by a
//! minimal polynomial and an isolating interval.

pub mod bivar;
pub mod curves;
pub mod error;
pub mod families;
pub mod intersect;
pub mod maps;
pub mod point;

pub use bivar::BivarPoly;
pub use curves::{curve, describe_curve, CURVE_NAMES, EXTERNAL_CURVES};
pub use error::CurveError;
pub use families::{coincidence_family_check, families, family, Family, FamilyReport, FamilyRow, RowStatus};
pub use intersect::{intersect, intersect_polys, lambda_resultant, on_curve, Intersection};
pub use maps::{eval_param, on_curve_identically, param, RatExpr, RationalMap, Substitution, MAP_NAMES};
pub use point::{AlgebraicNumber, Coord, CurvePoint, RootLocation};
