use thiserror::Error;

#[derive(Debug, Error)]
pub enum CmError {
    #[error(transparent)]
    Abelian(#[from] abelian_core::AbelianError),
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
    #[error(transparent)]
    Crossed(#[from] crossed_core::CrossedError),
    #[error("coefficient module is not a module over the cokernel of the structure map")]
    CoefficientBase,
    #[error("cochain degree {degree} out of range, maximum here is {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("cochain does not match this complex")]
    CochainMismatch,
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("cocycle is not pointed")]
    NotPointed,
    #[error("cocycle is not standard for this section system")]
    NotStandard,
    #[error("group part fails the 2-cocycle condition")]
    GroupPartNotCocycle,
    #[error("module part is not multiplicative relative to the group part at ({n}, {m})")]
    Multiplicativity { n: usize, m: usize },
    #[error("module part fails the action condition at (g = {g}, m = {m})")]
    ActionCondition { g: usize, m: usize },
    #[error("value at ({h}, {g}) lies outside the kernel of the structure map")]
    ValueOutsideKernel { h: usize, g: usize },
    #[error("homomorphism component is not equivariant")]
    NotEquivariant,
    #[error("cocycle datum fails the compatibility equation against the 3-cocycle")]
    IncompatiblePair,
    #[error("coefficient modules of the two sides do not match")]
    SideMismatch,
    #[error("morphism does not intertwine the structure maps at module element {m}")]
    NotMorphismStructure { m: usize },
    #[error("morphism does not intertwine the actions at (g = {g}, m = {m})")]
    NotMorphismAction { g: usize, m: usize },
    #[error("morphism is not an extension equivalence: {reason}")]
    NotEquivalence { reason: &'static str },
}
