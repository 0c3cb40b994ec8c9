//! Symmetry maps of Somos-k sequences in projective space and the
//! polynomials they preserve.

mod check;
mod claims;
mod closed;
mod curves;
mod degrees;
mod faithful;
mod representation;

pub use claims::{
    degree_verdict, manifest, registry, run_claim, run_claims, run_suite, Claim, ClaimOutcome, Context, Manifest,
    ManifestEntry, Suite, MANIFEST_VERSION,
};
pub use check::{check_invariant, vieta_involution, InvariantCheck};
pub use closed::{
    j_power_closed_form, verify_closed_forms, verify_j_power, verify_j_powers, verify_j_spot_check,
};
pub use curves::{
    construct_curve, construct_curve_in, curve_identity, curve_ring, reduce_iota, specialize,
    verify_curve_identities, CurveFamily, Parity, CURVE_IDENTITIES,
};
pub use degrees::{degree_sequence, paper_degree_list, DegreeComparison, Pattern};
pub use faithful::{faithfulness_probe, FaithfulnessReport};
pub use representation::{build_representation, printed_g, printed_h, Representation};

use crate::algebra::AlgebraError;
use crate::projmap::MapError;
use crate::somos::SomosError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Somos(#[from] SomosError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("no representation for order {0}")]
    Order(usize),
    #[error("polynomial has degree {found} in {var}, expected 2")]
    NotQuadratic { var: String, found: u16 },
    #[error("{0} is not available for this order")]
    MissingGenerator(String),
    #[error("bad curve request: {0}")]
    Curve(String),
    #[error("degree budget exceeded: n = {n} > {budget}")]
    Budget { n: usize, budget: usize },
}
