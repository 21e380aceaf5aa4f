//! The standard extension of a finite group π₀ with a π₀-module π₁ along a
//! componentwise pointed 3-cocycle, realised symbolically over the free group
//! on π₀∖{1}.
//!
//! All arithmetic is exact word arithmetic. Module-part elements are pairs of
//! a π₁ coordinate vector and a kernel word; the action of the free group is
//! generated by the defining rules and made effective through Schreier
//! rewriting of kernel words. The defining 3-cocycle can be evaluated back
//! inside the extension and compared with the input table, and a seeded
//! sampler checks the crossed module axioms on random data.

mod error;
mod extension;
mod sample;
mod word;

pub use error::StdExtError;
pub use extension::{RecoveredZ3, SchreierFactor, StandardExtensionObj, StdModuleElement};
pub use sample::{
    axiom_sample_check, axiom_sample_check_capped, axiom_sample_check_with, AxiomViolation,
    SampleReport, DEFAULT_WORD_CAP,
};
pub use word::FreeWord;
