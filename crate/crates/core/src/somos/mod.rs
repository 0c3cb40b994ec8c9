//! Somos-k sequences, numeric and symbolic.

mod divisibility;
pub mod known;
mod quartic;
mod rule;
mod search;
mod sequence;
mod split;
mod symbolic;
mod transform;

pub use divisibility::{
    check_divisibility_relations, DivisibilityInstance, DivisibilityRanges, DivisibilityReport,
};
pub use quartic::{
    eval_s, s_polynomial, s_polynomial_with_cross, verify_s_propagation, verify_propagation_for, verify_with_cross,
    PropagationReport,
};
pub use rule::SomosRule;
pub use search::{search_integer_windows, Extension, IntegerWindow, SEARCH_HEIGHT_CAP};
pub use sequence::{SomosSequence, Term};
pub use split::{find_alignments, split_even_odd, Alignment, SignRule};
pub use symbolic::{check_laurent, symbolic_term, LaurentEntry, SymbolicSequence};
pub use transform::TransformSpec;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SomosError {
    #[error("unsupported order {0}; expected 2..=7")]
    Order(usize),
    #[error("expected {expected} initial terms, found {found}")]
    InitLength { expected: usize, found: usize },
    #[error("blocked at index {index}: pivot a_{pivot} is zero")]
    Blocked { index: i64, pivot: i64 },
    #[error("window starting at {0} violates the recurrence")]
    RuleViolation(i64),
    #[error("term at index {0} is not available")]
    Missing(i64),
    #[error("expression budget exceeded at index {index} ({terms} terms > {budget})")]
    Budget { index: i64, terms: usize, budget: usize },
    #[error("search height {0} exceeds the cap")]
    HeightCap(i64),
    #[error("transform parameter must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
