//! Crossed modules over finite groups: axiom validation, homotopy groups
//! with their induced action, section systems, the non-abelian 2-cocycle,
//! and the first Postnikov invariant.
//!
//! The module-part group is multiplicative while π₁ coordinates are
//! additive; the dictionary between the two is built once per crossed module
//! and verified by round trips.

mod crossed;
mod error;
mod homotopy;
mod postnikov;
mod sections;

pub use crossed::{samples, CrossedModule};
pub use error::CrossedError;
pub use homotopy::{homotopy, HomotopyData};
pub use postnikov::{postnikov, z3, Cpt3Cocycle, Postnikov};
pub use sections::{canonical_section_system, nonabelian_z2, NonAbelian2Cocycle, SectionSystem};
