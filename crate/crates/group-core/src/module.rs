//! Coefficient modules: an abelian group together with a group action.

use abelian_core::{AbElement, AbHom, FPAbelianGroup, IntMatrix};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::GroupError;
use crate::group::FiniteGroup;

/// An abelian group with a left action of a finite group, one integer matrix
/// per group element acting on coordinates. `act(g, act(h, m)) = act(gh, m)`.
#[derive(Debug, Clone)]
pub struct GModule {
    group: FiniteGroup,
    coeffs: FPAbelianGroup,
    action: Vec<IntMatrix>,
}

impl GModule {
    /// Validates the action table: every matrix must be a well-defined
    /// automorphism of the coefficients, the identity must act as the
    /// identity, and matrices must compose along the group table. All
    /// comparisons are modulo the coefficient relations.
    pub fn new(
        group: FiniteGroup,
        coeffs: FPAbelianGroup,
        action: Vec<IntMatrix>,
    ) -> Result<GModule, GroupError> {
        if action.len() != group.order() {
            return Err(GroupError::ActionLengthMismatch {
                len: action.len(),
                order: group.order(),
            });
        }
        let rank = coeffs.rank();
        for (element, m) in action.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(GroupError::ActionShape { element, rank });
            }
            let hom = AbHom::new(coeffs.clone(), coeffs.clone(), m.clone())
                .map_err(|_| GroupError::ActionNotWellDefined { element })?;
            // Surjectivity is enough: a surjective endomorphism of a finitely
            // generated abelian group is an automorphism.
            let (cokernel, _) = hom.cokernel();
            if !cokernel.is_trivial() {
                return Err(GroupError::NotAutomorphism { element });
            }
        }
        let module = GModule { group, coeffs, action };
        if !module.endos_agree(&module.action[0], &IntMatrix::identity(rank)) {
            return Err(GroupError::IdentityActsNontrivially);
        }
        for x in 0..module.group.order() {
            for y in 0..module.group.order() {
                let composite = module.action[x].mul(&module.action[y]);
                if !module.endos_agree(&composite, &module.action[module.group.mul(x, y)]) {
                    return Err(GroupError::ActionCompositionMismatch { x, y });
                }
            }
        }
        Ok(module)
    }

    /// The trivial action.
    #[must_use]
    pub fn trivial(group: FiniteGroup, coeffs: FPAbelianGroup) -> GModule {
        let action = vec![IntMatrix::identity(coeffs.rank()); group.order()];
        GModule { group, coeffs, action }
    }

    fn endos_agree(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        (0..self.coeffs.rank()).all(|j| {
            let diff: Vec<BigInt> =
                (0..self.coeffs.rank()).map(|i| a.at(i, j) - b.at(i, j)).collect();
            self.coeffs.reduce(diff).iter().all(Zero::is_zero)
        })
    }

    #[must_use]
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[must_use]
    pub fn coeffs(&self) -> &FPAbelianGroup {
        &self.coeffs
    }

    #[must_use]
    pub fn action_matrix(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    #[must_use]
    pub fn action_hom(&self, g: usize) -> AbHom {
        AbHom::new(self.coeffs.clone(), self.coeffs.clone(), self.action[g].clone())
            .expect("validated on construction")
    }

    /// `g ▷ m`.
    #[must_use]
    pub fn act(&self, g: usize, m: &AbElement) -> AbElement {
        self.coeffs.element(self.action[g].apply(m.coords()))
    }

    #[must_use]
    pub fn is_trivial_action(&self) -> bool {
        let id = IntMatrix::identity(self.coeffs.rank());
        self.action.iter().all(|m| self.endos_agree(m, &id))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FPAbelianGroup {
        FPAbelianGroup::cyclic(4)
    }

    #[test]
    fn trivial_action_is_valid() {
        let m = GModule::new(
            FiniteGroup::cyclic(2),
            z4(),
            vec![IntMatrix::identity(1), IntMatrix::identity(1)],
        )
        .unwrap();
        assert!(m.is_trivial_action());
    }

    #[test]
    fn negation_action_of_c2_is_valid() {
        let m = GModule::new(
            FiniteGroup::cyclic(2),
            z4(),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
        )
        .unwrap();
        let one = m.coeffs().element(vec![BigInt::from(1)]);
        assert_eq!(m.act(1, &one).coords(), &[BigInt::from(3)]);
    }

    #[test]
    fn doubling_is_not_an_automorphism() {
        let err = GModule::new(
            FiniteGroup::cyclic(2),
            z4(),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[2]])],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NotAutomorphism { element: 1 });
    }

    #[test]
    fn composition_mismatch_is_reported() {
        // Negation on Z/5 is an automorphism but does not square to the
        // identity action of C3.
        let err = GModule::new(
            FiniteGroup::cyclic(3),
            FPAbelianGroup::cyclic(5),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]]), IntMatrix::identity(1)],
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::ActionCompositionMismatch { .. }));
    }
}
