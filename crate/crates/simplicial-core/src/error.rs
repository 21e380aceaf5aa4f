use thiserror::Error;

/// Errors from validation, truncation, and the cochain complex of a
/// 2-truncated simplicial group.
#[derive(Debug, Error)]
pub enum SimplicialError {
    #[error(transparent)]
    Abelian(#[from] abelian_core::AbelianError),
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
    #[error(transparent)]
    Crossed(#[from] crossed_core::CrossedError),
    #[error(transparent)]
    Cohomology(#[from] cm_cohomology::CmError),
    #[error("face {index} out of level {level} has the wrong source or target")]
    FaceSignature { level: usize, index: usize },
    #[error("degeneracy {index} out of level {level} has the wrong source or target")]
    DegeneracySignature { level: usize, index: usize },
    #[error("simplicial identity `{relation}` fails at element {element} of level {level}")]
    IdentityViolation { relation: &'static str, level: usize, element: usize },
    #[error("coefficient module is not a module over π₀ of this simplicial group")]
    CoefficientBase,
    #[error("cochain degree {degree} out of range, maximum here is {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("cochain does not match this complex")]
    CochainMismatch,
    #[error("cochain does not split into its module and group parts at ({x}, {h}, {g})")]
    NotDecomposable { x: usize, h: usize, g: usize },
    #[error("group part fails the 2-cocycle condition at ({k}, {h}, {g})")]
    GroupPartNotCocycle { k: usize, h: usize, g: usize },
    #[error("module part is not multiplicative relative to the group part at ({y}, {x})")]
    Multiplicativity { y: usize, x: usize },
    #[error("module part fails the action condition at (g = {g}, x = {x})")]
    ActionCondition { g: usize, x: usize },
    #[error("module part does not identify boundaries from degree 2 at {w}")]
    BoundaryCondition { w: usize },
}
