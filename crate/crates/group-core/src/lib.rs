//! Finite groups as multiplication tables, modules with group action, and
//! group cohomology in degrees 0 through 3.
//!
//! Everything is exact: coefficients live in finitely presented abelian
//! groups and all kernels, images and quotients go through integer Smith
//! normal form. Group elements are table indices with the identity at 0,
//! cochain tuples are written in descending order `(g_{n-1}, …, g_0)`, and
//! the leftmost tuple entry is the one that acts in the differentials.

mod cochain;
mod cohomology;
mod error;
mod group;
mod module;

pub use cochain::{cochain_group, tuple_from_index, tuple_index, BarCochain, MAX_DEGREE};
pub use cohomology::{
    b3cpt_membership, bar_differential, cpt_cohomology, cpt_differential, cpt_group,
    cpt_subgroup, cpt_tuple_indices, equivariant_hom_group, group_cohomology, is_cpt,
    CptCohomology, EquivariantHoms, GroupCohomology,
};
pub use error::GroupError;
pub use group::{abelianize, AbelianizedGroup, FiniteGroup, GroupHom};
pub use module::GModule;
