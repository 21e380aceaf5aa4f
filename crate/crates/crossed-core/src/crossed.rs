//! Crossed modules and their axiom validation.

use group_core::{FiniteGroup, GroupHom};

use crate::error::CrossedError;

/// A crossed module: a structure morphism μ from the module part to the
/// group part together with a left action of the group part on the module
/// part, subject to equivariance and the Peiffer identity.
///
/// The module part is a table group and may be non-abelian; only the kernel
/// of μ is required (and verified later) to be central.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    group: FiniteGroup,
    module: FiniteGroup,
    mu: GroupHom,
    /// `action[g][m] = g ▷ m`.
    action: Vec<Vec<usize>>,
}

impl CrossedModule {
    /// Validates the action axioms first, then equivariance
    /// `(g▷m)μ = g(mμ)g⁻¹`, then the Peiffer identity `(nμ)▷m = nmn⁻¹`.
    /// The first violation is reported with witnesses.
    pub fn new(
        mu: GroupHom,
        action: Vec<Vec<usize>>,
    ) -> Result<CrossedModule, CrossedError> {
        let module = mu.source().clone();
        let group = mu.target().clone();
        if action.len() != group.order() {
            return Err(CrossedError::ActionListLength {
                len: action.len(),
                order: group.order(),
            });
        }
        for (g, table) in action.iter().enumerate() {
            if table.len() != module.order() {
                return Err(CrossedError::ActionTableShape { g, len: table.len() });
            }
            let mut seen = vec![false; module.order()];
            for &img in table {
                if img >= module.order() {
                    return Err(CrossedError::ActionTableShape { g, len: table.len() });
                }
                seen[img] = true;
            }
            if seen.contains(&false) {
                return Err(CrossedError::ActionNotAutomorphism { g, m: 0, n: 0 });
            }
            for m in 0..module.order() {
                for n in 0..module.order() {
                    if table[module.mul(m, n)] != module.mul(table[m], table[n]) {
                        return Err(CrossedError::ActionNotAutomorphism { g, m, n });
                    }
                }
            }
        }
        for m in 0..module.order() {
            if action[0][m] != m {
                return Err(CrossedError::ActionIdentityViolation { m });
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if (0..module.order()).any(|m| action[g][action[h][m]] != action[gh][m]) {
                    return Err(CrossedError::ActionCompositionViolation { g, h });
                }
            }
        }
        for m in 0..module.order() {
            for g in 0..group.order() {
                if mu.apply(action[g][m]) != group.conj(g, mu.apply(m)) {
                    return Err(CrossedError::EquiViolation { m, g });
                }
            }
        }
        for m in 0..module.order() {
            for n in 0..module.order() {
                if action[mu.apply(n)][m] != module.conj(n, m) {
                    return Err(CrossedError::PeifViolation { m, n });
                }
            }
        }
        Ok(CrossedModule { group, module, mu, action })
    }

    #[must_use]
    pub fn group_part(&self) -> &FiniteGroup {
        &self.group
    }

    #[must_use]
    pub fn module_part(&self) -> &FiniteGroup {
        &self.module
    }

    #[must_use]
    pub fn mu(&self) -> &GroupHom {
        &self.mu
    }

    /// `g ▷ m`.
    #[must_use]
    pub fn act(&self, g: usize, m: usize) -> usize {
        self.action[g][m]
    }
}

/// Ready-made crossed modules used by the test suites across the workspace
/// and by the bundled instance files.
pub mod samples {
    use super::CrossedModule;
    use group_core::{FiniteGroup, GroupHom};

    /// Module C4 = ⟨b⟩ over group C4 = ⟨a⟩ with μ(b) = a² and a▷b = b⁻¹.
    ///
    /// Both homotopy groups are Z/2 and the Postnikov invariant is
    /// nontrivial, which makes this the smallest thoroughly non-split case.
    #[must_use]
    pub fn c4_squaring() -> CrossedModule {
        let c4 = FiniteGroup::cyclic(4);
        let mu = GroupHom::new(c4.clone(), c4, vec![0, 2, 0, 2]).unwrap();
        let negate = vec![0, 3, 2, 1];
        let id = vec![0, 1, 2, 3];
        CrossedModule::new(mu, vec![id.clone(), negate.clone(), id, negate]).unwrap()
    }

    /// An abelian module with trivial structure morphism and trivial action;
    /// the homotopy groups are the module and the group themselves.
    #[must_use]
    pub fn trivial_mu(module: &FiniteGroup, group: &FiniteGroup) -> CrossedModule {
        assert!(module.is_abelian(), "trivial μ needs an abelian module part");
        let mu = GroupHom::trivial(module.clone(), group.clone());
        let id: Vec<usize> = (0..module.order()).collect();
        let action = vec![id; group.order()];
        CrossedModule::new(mu, action).unwrap()
    }

    /// The identity structure morphism with conjugation action; both
    /// homotopy groups vanish.
    #[must_use]
    pub fn identity_mu(group: &FiniteGroup) -> CrossedModule {
        let mu = GroupHom::identity(group.clone());
        let action = (0..group.order())
            .map(|g| (0..group.order()).map(|m| group.conj(g, m)).collect())
            .collect();
        CrossedModule::new(mu, action).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::samples;
    use super::*;
    use group_core::GroupError;

    #[test]
    fn the_squaring_example_is_valid() {
        let v = samples::c4_squaring();
        assert_eq!(v.act(1, 1), 3);
        assert_eq!(v.mu().apply(1), 2);
    }

    #[test]
    fn trivial_structure_morphism_is_valid() {
        let c2 = FiniteGroup::cyclic(2);
        let v = samples::trivial_mu(&c2, &c2);
        assert_eq!(v.mu().apply(1), 0);
    }

    #[test]
    fn non_homomorphism_mu_is_rejected() {
        // b ↦ a sends b² to a², but squaring C4 to C4 via index 1 ↦ 1 with
        // 2 ↦ 3 breaks multiplicativity.
        let c4 = FiniteGroup::cyclic(4);
        let err = GroupHom::new(c4.clone(), c4, vec![0, 1, 3, 2]).unwrap_err();
        assert!(matches!(err, GroupError::NotHomomorphism { .. }));
    }

    #[test]
    fn equivariance_violation_is_caught() {
        // Identity μ on C4 with negation action: (a▷b)μ = a³ but a(bμ)a⁻¹ = a.
        let c4 = FiniteGroup::cyclic(4);
        let mu = GroupHom::identity(c4);
        let negate = vec![0, 3, 2, 1];
        let id = vec![0, 1, 2, 3];
        let err =
            CrossedModule::new(mu, vec![id.clone(), negate.clone(), id, negate]).unwrap_err();
        assert_eq!(err, CrossedError::EquiViolation { m: 1, g: 1 });
    }

    #[test]
    fn peiffer_violation_is_caught() {
        // Parity map V4 → C2 with coordinate swap action: equivariance holds
        // but (nμ)▷m must equal m in an abelian module, and the swap does not.
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let c2 = FiniteGroup::cyclic(2);
        let mu = GroupHom::new(v4, c2, vec![0, 1, 1, 0]).unwrap();
        let err = CrossedModule::new(mu, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]).unwrap_err();
        assert_eq!(err, CrossedError::PeifViolation { m: 1, n: 1 });
    }

    #[test]
    fn conjugation_crossed_module_on_a_nonabelian_group() {
        let s3 = symmetric3();
        let v = samples::identity_mu(&s3);
        assert_eq!(v.group_part().order(), 6);
    }

    fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            [q[p[0]], q[p[1]], q[p[2]]]
        };
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let r = compose(p, q);
                        perms.iter().position(|s| *s == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::validate_group(&rows).unwrap()
    }
}
