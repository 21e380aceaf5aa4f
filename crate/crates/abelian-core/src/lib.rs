//! Exact integer linear algebra over finitely generated abelian groups.
//!
//! This crate is the arithmetic bedrock for the cohomology computations built
//! on top of it: integer matrices with a deterministic Smith normal form,
//! groups in invariant-factor form, homomorphisms with kernels, images,
//! cokernels and pullbacks, and homology of two-term complexes. Everything is
//! immutable after construction and every operation is a pure function.

mod error;
mod group;
mod hom;
mod matrix;

pub use error::AbelianError;
pub use group::{AbElement, FPAbelianGroup};
pub use hom::{
    canonicalize, canonicalize_full, hom_subquotients, homology, pullback, subquotient_quotient,
    AbHom, Canonicalized, HomSubquotients, Homology, Subquotient,
};
pub use matrix::{
    congruence_kernel, congruence_solve, lattice_kernel, smith_full, smith_normal_form,
    smith_v_only, IntMatrix, Smith,
};
