//! Error type for crossed-module validation and derived computations.

use group_core::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("action table of {g} is not an automorphism of the module part (witness pair ({m}, {n}))")]
    ActionNotAutomorphism { g: usize, m: usize, n: usize },
    #[error("action table of {g} has wrong length {len}")]
    ActionTableShape { g: usize, len: usize },
    #[error("action list has {len} tables, group part has order {order}")]
    ActionListLength { len: usize, order: usize },
    #[error("identity of the group part acts nontrivially on module element {m}")]
    ActionIdentityViolation { m: usize },
    #[error("action tables of {g} and {h} do not compose along the group part")]
    ActionCompositionViolation { g: usize, h: usize },
    #[error("equivariance fails: (({g})▷({m}))μ != {g}(({m})μ){g}⁻¹")]
    EquiViolation { m: usize, g: usize },
    #[error("Peiffer identity fails: (({n})μ)▷({m}) != {n}{m}{n}⁻¹")]
    PeifViolation { m: usize, n: usize },
    #[error("kernel of μ is not central: {k} does not commute with {n}")]
    KernelNotCentral { k: usize, n: usize },
    #[error("lifts {g} and {h} of the same coset act differently on kernel element {k}")]
    ActionNotInduced { g: usize, h: usize, k: usize },
    #[error("section is not pointed")]
    SectionNotPointed,
    #[error("section equation fails at element {at}")]
    SectionEquation { at: usize },
    #[error("section defined at {at}, which is outside its domain")]
    SectionOutsideDomain { at: usize },
    #[error("computed value at ({r}, {q}, {p}) lies outside the kernel of μ")]
    ValueOutsideKernel { r: usize, q: usize, p: usize },
    #[error("table is not componentwise pointed")]
    NotCpt,
    #[error("table does not satisfy the degree-3 cocycle identity")]
    NotCocycle,
    #[error("tables live over different homotopy data")]
    HomotopyMismatch,
}
