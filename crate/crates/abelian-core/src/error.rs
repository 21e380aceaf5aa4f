//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbelianError {
    #[error("invariant factors are not in canonical form")]
    NotCanonical,
    #[error("cannot enumerate an infinite group")]
    InfiniteGroup,
    #[error("matrix shape does not match the given groups")]
    ShapeMismatch,
    #[error("matrix does not define a homomorphism: generator {generator} has finite order but its image does not vanish under it")]
    NotWellDefined { generator: usize },
    #[error("homomorphisms are not composable or do not share the required group")]
    IncompatibleHoms,
    #[error("element does not lie in the subgroup")]
    NotInSubgroup,
}
