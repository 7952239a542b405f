//! Orthogonal invariants of the rank 3 Heisenberg algebra and of four odd free
//! fields of weight 3/2: generator builders, the weight 12 decoupling relation,
//! classical symbols, strong spans and OPE closure checks.

pub mod invariants;
pub mod relation;
pub mod so3;
pub mod span;
pub mod symbol;

pub use invariants::{build_c, build_fermi_q, build_fermi_w, build_q, fermionic_generators, minimal_generators, Invariant};
pub use relation::{verify_decoupling_wt12, DecouplingReport};
pub use span::{closure_check, member, strong_span_basis, ClosureReport, StrongSpan};
pub use symbol::{classical_symbol, relation_symbol};
