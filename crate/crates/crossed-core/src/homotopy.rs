//! Homotopy groups of a crossed module and the induced action.
//!
//! π₀ is the cokernel of μ as a table group, π₁ is the kernel of μ rewritten
//! in invariant-factor coordinates, and π₀ acts on π₁ through any lift. The
//! paper-side π₁ is multiplicative; all additive coordinates pass through the
//! stored encode/decode dictionary, which is verified on construction.

use abelian_core::{AbElement, FPAbelianGroup, IntMatrix};
use group_core::{abelianize, AbelianizedGroup, FiniteGroup, GModule, GroupHom};

use crate::crossed::CrossedModule;
use crate::error::CrossedError;

/// π₀, π₁ and the induced action, with dictionaries back to table elements.
#[derive(Clone)]
pub struct HomotopyData {
    pi0: FiniteGroup,
    projection: GroupHom,
    /// Minimal-index coset representatives, indexed by π₀ element.
    reps: Vec<usize>,
    /// Kernel elements of μ as module-part indices, ascending.
    kernel: Vec<usize>,
    abelianized: AbelianizedGroup,
    module: GModule,
}

impl HomotopyData {
    #[must_use]
    pub fn pi0(&self) -> &FiniteGroup {
        &self.pi0
    }

    #[must_use]
    pub fn pi1(&self) -> &FPAbelianGroup {
        self.module.coeffs()
    }

    /// The projection GrpV → π₀.
    #[must_use]
    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    /// Minimal-index representative of a π₀ element.
    #[must_use]
    pub fn rep(&self, p: usize) -> usize {
        self.reps[p]
    }

    /// Kernel of μ as ascending module-part indices.
    #[must_use]
    pub fn kernel_elements(&self) -> &[usize] {
        &self.kernel
    }

    /// π₁ with its π₀-action.
    #[must_use]
    pub fn module(&self) -> &GModule {
        &self.module
    }

    /// Additive coordinates of a kernel element; `None` off the kernel.
    #[must_use]
    pub fn encode_pi1(&self, m: usize) -> Option<AbElement> {
        let pos = self.kernel.iter().position(|&k| k == m)?;
        Some(self.abelianized.encode(pos))
    }

    /// Module-part index of a π₁ element.
    #[must_use]
    pub fn decode_pi1(&self, x: &AbElement) -> usize {
        self.kernel[self.abelianized.decode(x.coords())]
    }
}

/// Computes both homotopy groups and the induced action.
///
/// The centrality of ker μ and the independence of the action from the
/// choice of lift both follow from the crossed-module axioms; they are
/// nevertheless checked exhaustively and reported as inconsistencies if a
/// table manages to violate them.
pub fn homotopy(v: &CrossedModule) -> Result<HomotopyData, CrossedError> {
    let kernel = v.mu().kernel_elements();
    for &k in &kernel {
        for n in v.module_part().elements() {
            if v.module_part().mul(k, n) != v.module_part().mul(n, k) {
                return Err(CrossedError::KernelNotCentral { k, n });
            }
        }
    }
    let (kernel_group, members) = v.module_part().subgroup(&kernel)?;
    let abelianized = abelianize(&kernel_group)?;
    let (pi0, projection, reps) = v.group_part().quotient_by_normal(&v.mu().image_elements())?;
    // Any two lifts of the same coset must act identically on the kernel.
    for p in 0..pi0.order() {
        let g = reps[p];
        for h in v.group_part().elements() {
            if projection.apply(h) != p {
                continue;
            }
            for &k in &members {
                if v.act(g, k) != v.act(h, k) {
                    return Err(CrossedError::ActionNotInduced { g, h, k });
                }
            }
        }
    }
    let pi1 = abelianized.group().clone();
    let rank = pi1.rank();
    let mut action = Vec::with_capacity(pi0.order());
    for p in 0..pi0.order() {
        let mut matrix = IntMatrix::zero(rank, rank);
        for i in 0..rank {
            let mut unit = vec![num_bigint::BigInt::from(0); rank];
            unit[i] = num_bigint::BigInt::from(1);
            let source = members[abelianized.decode(&pi1.reduce(unit))];
            let image = v.act(reps[p], source);
            let pos = members.iter().position(|&m| m == image).expect("action preserves kernel");
            for (j, c) in abelianized.encode(pos).coords().iter().enumerate() {
                matrix.set(j, i, c.clone());
            }
        }
        action.push(matrix);
    }
    let module = GModule::new(pi0.clone(), pi1, action)?;
    Ok(HomotopyData { pi0, projection, reps, kernel: members, abelianized, module })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::samples;

    #[test]
    fn squaring_example_has_two_element_homotopy_groups() {
        let v = samples::c4_squaring();
        let h = homotopy(&v).unwrap();
        assert_eq!(h.pi0().order(), 2);
        assert_eq!(h.pi1().describe(), "Z/2");
        assert_eq!(h.kernel_elements(), &[0, 2]);
        // y = b² generates π₁.
        let y = h.encode_pi1(2).unwrap();
        assert!(!y.is_zero());
        assert_eq!(h.decode_pi1(&y), 2);
        assert!(h.encode_pi1(1).is_none());
    }

    #[test]
    fn squaring_example_action_on_pi1_is_trivial() {
        // x▷y = y: negation fixes b².
        let h = homotopy(&samples::c4_squaring()).unwrap();
        assert!(h.module().is_trivial_action());
    }

    #[test]
    fn trivial_mu_keeps_both_groups() {
        let c2 = FiniteGroup::cyclic(2);
        let h = homotopy(&samples::trivial_mu(&c2, &c2)).unwrap();
        assert_eq!(h.pi0().order(), 2);
        assert_eq!(h.pi1().describe(), "Z/2");
    }

    #[test]
    fn identity_mu_kills_both_groups() {
        let h = homotopy(&samples::identity_mu(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(h.pi0().order(), 1);
        assert!(h.pi1().is_trivial());
    }

    #[test]
    fn dictionary_round_trips_every_kernel_element() {
        let v = samples::trivial_mu(
            &FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)),
            &FiniteGroup::cyclic(3),
        );
        let h = homotopy(&v).unwrap();
        assert_eq!(h.pi1().describe(), "Z/2 ⊕ Z/4");
        for &k in h.kernel_elements() {
            let coords = h.encode_pi1(k).unwrap();
            assert_eq!(h.decode_pi1(&coords), k);
        }
    }
}
