//! 2-truncated simplicial groups as validated face and degeneracy tables,
//! with their Moore data, coskeleton constructions, truncations to a group
//! and to a crossed module, semidirect splittings of the upper levels, and a
//! cochain complex computing cohomology in degrees 0 to 2.
//!
//! Composites read left to right and maps apply on the right throughout, so
//! the simplicial identities take the form `x s₀ d₁ = x`. Degree-1 and
//! degree-2 Moore entries are handled in position coordinates, with the
//! dictionaries kept alongside every derived structure.

mod complex;
mod coskeleton;
mod error;
mod moore;
pub mod samples;
mod semidirect;
mod tsg;
mod units;

pub use complex::{
    an_cohomology, an_differential, AnalysedCochain, AnalysedCohomology, AnalysedComplex,
    MAX_TABLE_DEGREE,
};
pub use coskeleton::{cosk0, cosk1};
pub use error::SimplicialError;
pub use moore::{
    homotopy01, moore, truncate0, truncate1, CrossedModuleSegment, MooreData,
};
pub use semidirect::{semidirect_iso, SemidirectDecomposition};
pub use tsg::{tsg_direct_product, validate_tsg, TruncatedSimplicialGroup, TsgData};
pub use units::{presents_isomorphism, unit_cocycle_maps, UnitCocycleMaps};
