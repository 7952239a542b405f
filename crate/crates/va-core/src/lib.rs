//! Exact OPE calculus for vertex superalgebras presented by generators and an
//! OPE table.
//!
//! Fields are right-nested Wick words in derivatives of generators
//! ([`FieldExpr`]); states live in the PBW basis of the vacuum module
//! ([`State`]). Every computation reduces to the action of modes on states, so
//! the same engine serves free-field algebras and nonlinear algebras given by
//! structure constants.

pub mod algebra;
pub mod basis;
pub mod commutant;
pub mod engine;
pub mod error;
pub mod field;
pub mod jacobi;
pub mod ops;
pub mod presets;
pub mod text;
pub mod virasoro;

pub use algebra::{Algebra, GenSpec, Kind};
pub use engine::{Engine, Vector};
pub use error::{Result, VaError};
pub use field::{letter, letter_deriv, letter_gen, Field, FieldExpr, Letter, Word};
pub use ops::{field_of_state, normal_order, ope, state_of, PoleExpansion, State};
pub use text::{parse_field_expr, parse_presentation, write_presentation};
pub use va_exact::Scalar;
