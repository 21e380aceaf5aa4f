//! Cohomology of crossed modules in degrees 0 to 2.
//!
//! A 2-cochain splits into a module part and a group part along the Moore
//! decomposition; 2-cocycles are standardised relative to a section system
//! until they are determined by an equivariant homomorphism out of π₁ and a
//! componentwise pointed 2-cochain over π₀. That pair is a cocycle datum for
//! the Eilenberg-MacLane style description, and the comparison of the two
//! second cohomology groups is carried out instance by instance.

mod complex;
mod em;
mod error;
mod parts;
mod standard;
mod transport;

pub use complex::{CmCochain, CmCohomology, CmComplex, MAX_TABLE_DEGREE};
pub use em::{em_groups, em_h2, phi, psi, EmCocycle, EmComparison, EmGroups};
pub use error::CmError;
pub use parts::PartsPair;
pub use standard::{kappa, st_groups, KappaTable, StandardGroups};
pub use transport::{transport_standard, CmMorphism, TransportReport};
