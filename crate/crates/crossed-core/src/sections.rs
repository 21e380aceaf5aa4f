//! Section systems and the non-abelian 2-cocycle of a crossed module.

use group_core::{tuple_index, FiniteGroup};

use crate::crossed::CrossedModule;
use crate::error::CrossedError;
use crate::homotopy::HomotopyData;

/// A pointed set-level section s0 of the projection onto π₀ together with a
/// pointed set-level section s1 of μ over its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSystem {
    /// π₀ index → group-part index.
    s0: Vec<usize>,
    /// Group-part index → module-part index, defined exactly on Im μ.
    s1: Vec<Option<usize>>,
}

impl SectionSystem {
    /// Validates pointedness and both section equations elementwise, and that
    /// s1 is defined exactly on the image of μ.
    pub fn new(
        v: &CrossedModule,
        h: &HomotopyData,
        s0: Vec<usize>,
        s1: Vec<Option<usize>>,
    ) -> Result<SectionSystem, CrossedError> {
        if s0.len() != h.pi0().order() || s0[0] != 0 {
            return Err(CrossedError::SectionNotPointed);
        }
        for (p, &g) in s0.iter().enumerate() {
            if h.projection().apply(g) != p {
                return Err(CrossedError::SectionEquation { at: p });
            }
        }
        if s1.len() != v.group_part().order() || s1[0] != Some(0) {
            return Err(CrossedError::SectionNotPointed);
        }
        let image = v.mu().image_elements();
        for (g, &m) in s1.iter().enumerate() {
            match m {
                Some(m) => {
                    if !image.contains(&g) {
                        return Err(CrossedError::SectionOutsideDomain { at: g });
                    }
                    if v.mu().apply(m) != g {
                        return Err(CrossedError::SectionEquation { at: g });
                    }
                }
                None => {
                    if image.contains(&g) {
                        return Err(CrossedError::SectionEquation { at: g });
                    }
                }
            }
        }
        Ok(SectionSystem { s0, s1 })
    }

    /// Lift of a π₀ element into the group part.
    #[must_use]
    pub fn s0(&self, p: usize) -> usize {
        self.s0[p]
    }

    /// Lift of an image element of μ into the module part; panics off Im μ.
    #[must_use]
    pub fn s1(&self, g: usize) -> usize {
        self.s1[g].expect("s1 is only defined on the image of μ")
    }

    #[must_use]
    pub fn s1_checked(&self, g: usize) -> Option<usize> {
        self.s1[g]
    }
}

/// The section system whose ties all break towards the minimal element
/// index: s0 lifts each coset to its smallest member, s1 lifts each image
/// element to its smallest preimage. Both are pointed because the identity
/// has index 0.
#[must_use]
pub fn canonical_section_system(v: &CrossedModule, h: &HomotopyData) -> SectionSystem {
    let s0 = (0..h.pi0().order()).map(|p| h.rep(p)).collect();
    let mut s1 = vec![None; v.group_part().order()];
    for m in v.module_part().elements() {
        let g = v.mu().apply(m);
        if s1[g].is_none() {
            s1[g] = Some(m);
        }
    }
    SectionSystem { s0, s1 }
}

/// The table (q, p) ↦ s0(q)·s0(p)·s0(qp)⁻¹ with values in Im μ,
/// componentwise pointed and satisfying the non-abelian 2-cocycle condition
///
/// ```text
/// (r,q)z² · (rq,p)z² = ^{s0(r)}((q,p)z²) · (r,qp)z²
/// ```
///
/// all of which is asserted on construction.
#[derive(Debug, Clone)]
pub struct NonAbelian2Cocycle {
    pi0: FiniteGroup,
    /// Group-part indices, one per descending pair (q, p).
    values: Vec<usize>,
}

impl NonAbelian2Cocycle {
    /// `(q, p)z²` as a group-part index.
    #[must_use]
    pub fn at(&self, q: usize, p: usize) -> usize {
        self.values[tuple_index(self.pi0.order(), &[q, p])]
    }

    #[must_use]
    pub fn pi0(&self) -> &FiniteGroup {
        &self.pi0
    }
}

/// Computes the non-abelian 2-cocycle of the canonical extension attached to
/// a crossed module for a given section system.
#[must_use]
pub fn nonabelian_z2(
    v: &CrossedModule,
    h: &HomotopyData,
    s: &SectionSystem,
) -> NonAbelian2Cocycle {
    let pi0 = h.pi0().clone();
    let g = v.group_part();
    let n = pi0.order();
    let mut values = Vec::with_capacity(n * n);
    let image = v.mu().image_elements();
    for q in 0..n {
        for p in 0..n {
            let value = g.mul(g.mul(s.s0(q), s.s0(p)), g.inv(s.s0(pi0.mul(q, p))));
            assert!(image.contains(&value), "2-cocycle values land in Im μ");
            values.push(value);
        }
    }
    let z2 = NonAbelian2Cocycle { pi0: pi0.clone(), values };
    for p in 0..n {
        assert_eq!(z2.at(0, p), 0, "pointed section gives a componentwise pointed table");
        assert_eq!(z2.at(p, 0), 0, "pointed section gives a componentwise pointed table");
    }
    for r in 0..n {
        for q in 0..n {
            for p in 0..n {
                let lhs = g.mul(z2.at(r, q), z2.at(pi0.mul(r, q), p));
                let rhs = g.mul(g.conj(s.s0(r), z2.at(q, p)), z2.at(r, pi0.mul(q, p)));
                assert_eq!(lhs, rhs, "non-abelian 2-cocycle condition");
            }
        }
    }
    z2
}
