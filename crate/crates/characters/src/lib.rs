//! Truncated q-series with Laurent coefficients, and exact checks of the
//! character decompositions of the large and small N=4 coset constructions.
//!
//! Series are known below an explicit truncation order; reciprocals are only
//! taken of factors with unit constant term, so Weyl denominators are always
//! multiplied through instead of divided.

pub mod euler;
pub mod functions;
pub mod large;
pub mod laurent;
pub mod report;
pub mod series;
pub mod small;

pub use euler::{euler_poincare_multiplicity, euler_poincare_table};
pub use functions::{eta, fermion_f, theta_a1, theta_a1_shift, weyl_pi};
pub use large::{ch_y_theta, verify_cor_char, verify_thm_char, x_m, CharSpec, SpecError, ZForm};
pub use laurent::{mono, LVar, Mono, MultiLaurent};
pub use report::{CharReport, CheckKind, SubCheck};
pub use series::{GradedQSeries, Mismatch};
pub use small::verify_thm_char_small;
