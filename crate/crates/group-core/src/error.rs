//! Error type for group-table and module validation.

use thiserror::Error;

/// Everything that can go wrong when validating tables, homomorphisms,
/// modules and cochains. Witnesses are element indices into the tables
/// that were being validated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not square (row {row} has length {len}, expected {order})")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry at ({x}, {y}) is {value}, outside 0..{order}")]
    EntryOutOfRange { x: usize, y: usize, value: usize, order: usize },
    #[error("index 0 is not an identity: witness {witness}")]
    MissingIdentity { witness: usize },
    #[error("not associative: ({x}·{y})·{z} != {x}·({y}·{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element {x} has no inverse")]
    MissingInverse { x: usize },
    #[error("not a homomorphism: f({x}·{y}) != f({x})·f({y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("map length {len} does not match source order {order}")]
    MapLengthMismatch { len: usize, order: usize },
    #[error("map value {value} outside target of order {order}")]
    MapOutOfRange { value: usize, order: usize },
    #[error("source or target group does not match")]
    GroupMismatch,
    #[error("action of element {element} is not an automorphism")]
    NotAutomorphism { element: usize },
    #[error("action matrices of {x} and {y} do not compose with the group table")]
    ActionCompositionMismatch { x: usize, y: usize },
    #[error("identity element does not act as the identity")]
    IdentityActsNontrivially,
    #[error("action table has {len} matrices, group has order {order}")]
    ActionLengthMismatch { len: usize, order: usize },
    #[error("action matrix of element {element} is not {rank}x{rank}")]
    ActionShape { element: usize, rank: usize },
    #[error("action matrix of element {element} is not well defined on the coefficients")]
    ActionNotWellDefined { element: usize },
    #[error("group is not abelian: witness pair ({x}, {y})")]
    NotAbelian { x: usize, y: usize },
    #[error("subset is not closed: {x}·{y} lies outside")]
    NotClosed { x: usize, y: usize },
    #[error("subset is missing the identity")]
    SubsetMissingIdentity,
    #[error("subgroup is not normal: ^{g}({h}) lies outside")]
    NotNormal { g: usize, h: usize },
    #[error("cochain degree {degree} is out of the supported range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("cochain table has {len} values, expected {expected}")]
    CochainLengthMismatch { len: usize, expected: usize },
    #[error("value lies in the wrong coefficient group")]
    CoefficientMismatch,
}
