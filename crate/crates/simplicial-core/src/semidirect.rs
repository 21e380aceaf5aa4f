//! The two-stage semidirect decomposition of a validated instance: level 1
//! splits as N₁ ⋊ G₀ along `s₀`, and level 2 splits as
//! (N₂ ⋊ N₁) ⋊ (N₁ ⋊ G₀) along `s₀` and `s₁`, with every twisting action
//! realised by conjugation with degenerate elements. The comparison maps in
//! both directions are validated homomorphisms and mutually inverse tables.

use group_core::{FiniteGroup, GroupHom};

use crate::error::SimplicialError;
use crate::moore::{moore, MooreData};
use crate::tsg::TruncatedSimplicialGroup;

/// Split forms of levels 1 and 2 together with the comparison isomorphisms.
///
/// Indexing: an outer pair `(p, a)` with `p` a degree-1 entry position and
/// `a` a level-0 element sits at `p·|G₀| + a`; an inner pair `(w, p)` with
/// `w` a degree-2 entry position sits at `w·|N₁| + p`; a total pair `(i, o)`
/// of an inner and an outer index sits at `i·|N₁ ⋊ G₀| + o`.
#[derive(Debug, Clone)]
pub struct SemidirectDecomposition {
    moore: MooreData,
    level0_order: usize,
    outer: FiniteGroup,
    inner: FiniteGroup,
    total: FiniteGroup,
    phi1: GroupHom,
    phi1_inv: GroupHom,
    phi2: GroupHom,
    phi2_inv: GroupHom,
}

impl SemidirectDecomposition {
    #[must_use]
    pub fn moore(&self) -> &MooreData {
        &self.moore
    }

    /// N₁ ⋊ G₀.
    #[must_use]
    pub fn outer(&self) -> &FiniteGroup {
        &self.outer
    }

    /// N₂ ⋊ N₁.
    #[must_use]
    pub fn inner(&self) -> &FiniteGroup {
        &self.inner
    }

    /// (N₂ ⋊ N₁) ⋊ (N₁ ⋊ G₀).
    #[must_use]
    pub fn total(&self) -> &FiniteGroup {
        &self.total
    }

    /// Level 1 → N₁ ⋊ G₀, `x ↦ (x·(x d₁ s₀)⁻¹, x d₁)`.
    #[must_use]
    pub fn phi1(&self) -> &GroupHom {
        &self.phi1
    }

    /// N₁ ⋊ G₀ → level 1, `(p, a) ↦ p·(a s₀)`.
    #[must_use]
    pub fn phi1_inv(&self) -> &GroupHom {
        &self.phi1_inv
    }

    /// Level 2 → total, separating the degenerate part off `x d₂` and the
    /// Moore parts of the remainder.
    #[must_use]
    pub fn phi2(&self) -> &GroupHom {
        &self.phi2
    }

    /// Total → level 2, `((w, p), (q, a)) ↦ w·(p s₀)·(q s₁)·(a s₀ s₁)`.
    #[must_use]
    pub fn phi2_inv(&self) -> &GroupHom {
        &self.phi2_inv
    }

    #[must_use]
    pub fn outer_index(&self, p: usize, a: usize) -> usize {
        p * self.level0_order + a
    }

    #[must_use]
    pub fn outer_parts(&self, x: usize) -> (usize, usize) {
        (x / self.level0_order, x % self.level0_order)
    }

    #[must_use]
    pub fn inner_index(&self, w: usize, p: usize) -> usize {
        w * self.moore.n1_elements().len() + p
    }

    #[must_use]
    pub fn inner_parts(&self, x: usize) -> (usize, usize) {
        let r1 = self.moore.n1_elements().len();
        (x / r1, x % r1)
    }

    #[must_use]
    pub fn total_index(&self, inner: usize, outer: usize) -> usize {
        inner * self.outer.order() + outer
    }

    #[must_use]
    pub fn total_parts(&self, x: usize) -> (usize, usize) {
        (x / self.outer.order(), x % self.outer.order())
    }
}

/// Builds both split levels and the four comparison maps. Positions landing
/// outside the Moore entries or tables failing to invert each other cannot
/// occur for validated input and panic as internal errors.
pub fn semidirect_iso(
    g: &TruncatedSimplicialGroup,
) -> Result<SemidirectDecomposition, SimplicialError> {
    let moore = moore(g)?;
    let g0 = g.level(0);
    let g1 = g.level(1);
    let g2 = g.level(2);
    let n1 = moore.n1_elements().to_vec();
    let n2 = moore.n2_elements().to_vec();
    let (r1, r2, o0) = (n1.len(), n2.len(), g0.order());
    let pos1 = |x: usize| {
        moore.n1_position(x).expect("twisted products stay inside the degree-1 entry")
    };
    let pos2 = |x: usize| {
        moore.n2_position(x).expect("twisted products stay inside the degree-2 entry")
    };

    let outer_order = r1 * o0;
    let mut outer_table = vec![vec![0usize; outer_order]; outer_order];
    for p in 0..r1 {
        for a in 0..o0 {
            let sa = g.s(0, 0, a);
            for q in 0..r1 {
                for b in 0..o0 {
                    let tw = pos1(g1.conj(sa, n1[q]));
                    outer_table[p * o0 + a][q * o0 + b] =
                        moore.n1_group().mul(p, tw) * o0 + g0.mul(a, b);
                }
            }
        }
    }
    let outer = FiniteGroup::validate_group(&outer_table)?;

    let inner_order = r2 * r1;
    let mut inner_table = vec![vec![0usize; inner_order]; inner_order];
    for w in 0..r2 {
        for p in 0..r1 {
            let sp = g.s(1, 0, n1[p]);
            for v in 0..r2 {
                for q in 0..r1 {
                    let tw = pos2(g2.conj(sp, n2[v]));
                    inner_table[w * r1 + p][v * r1 + q] =
                        moore.n2_group().mul(w, tw) * r1 + moore.n1_group().mul(p, q);
                }
            }
        }
    }
    let inner = FiniteGroup::validate_group(&inner_table)?;

    // the outer action on inner pairs, by conjugation with degenerate lifts
    let mut action = vec![vec![0usize; inner_order]; outer_order];
    for q in 0..r1 {
        for b in 0..o0 {
            let lift_s1 = g.s(1, 1, n1[q]);
            let lift_s0 = g.s(1, 0, n1[q]);
            let base = g.s(1, 1, g.s(0, 0, b));
            let ca = g2.mul(lift_s1, base);
            let cb = g2.mul(lift_s0, base);
            let lower = g1.mul(n1[q], g.s(0, 0, b));
            for w in 0..r2 {
                for p in 0..r1 {
                    let hs0 = g.s(1, 0, n1[p]);
                    let first = g2.mul(
                        g2.conj(ca, g2.mul(n2[w], hs0)),
                        g2.conj(cb, g2.inv(hs0)),
                    );
                    let second = g1.conj(lower, n1[p]);
                    action[q * o0 + b][w * r1 + p] = pos2(first) * r1 + pos1(second);
                }
            }
        }
    }

    let total_order = inner_order * outer_order;
    let mut total_table = vec![vec![0usize; total_order]; total_order];
    for i in 0..inner_order {
        for o in 0..outer_order {
            for j in 0..inner_order {
                for b in 0..outer_order {
                    total_table[i * outer_order + o][j * outer_order + b] =
                        inner.mul(i, action[o][j]) * outer_order + outer.mul(o, b);
                }
            }
        }
    }
    let total = FiniteGroup::validate_group(&total_table)?;

    let mut phi1_map = Vec::with_capacity(g1.order());
    for x in 0..g1.order() {
        let a = g.d(1, 1, x);
        let p = pos1(g1.mul(x, g1.inv(g.s(0, 0, a))));
        phi1_map.push(p * o0 + a);
    }
    let phi1 = GroupHom::new(g1.clone(), outer.clone(), phi1_map)?;
    let mut phi1_inv_map = Vec::with_capacity(outer_order);
    for p in 0..r1 {
        for a in 0..o0 {
            phi1_inv_map.push(g1.mul(n1[p], g.s(0, 0, a)));
        }
    }
    let phi1_inv = GroupHom::new(outer.clone(), g1.clone(), phi1_inv_map)?;
    for x in 0..g1.order() {
        assert_eq!(
            phi1_inv.apply(phi1.apply(x)),
            x,
            "level-1 comparison maps must invert each other"
        );
    }

    let mut phi2_map = Vec::with_capacity(g2.order());
    for x in 0..g2.order() {
        let d2x = g.d(2, 2, x);
        let d1x = g.d(2, 1, x);
        let w = pos2(g2.mul(
            g2.mul(g2.mul(x, g2.inv(g.s(1, 1, d2x))), g.s(1, 0, d2x)),
            g2.inv(g.s(1, 0, d1x)),
        ));
        let p = pos1(g1.mul(d1x, g1.inv(d2x)));
        let a = g.d(1, 1, d2x);
        let q = pos1(g1.mul(d2x, g1.inv(g.s(0, 0, a))));
        phi2_map.push((w * r1 + p) * outer_order + (q * o0 + a));
    }
    let phi2 = GroupHom::new(g2.clone(), total.clone(), phi2_map)?;
    let mut phi2_inv_map = Vec::with_capacity(total_order);
    for i in 0..inner_order {
        for o in 0..outer_order {
            let (w, p) = (i / r1, i % r1);
            let (q, a) = (o / o0, o % o0);
            phi2_inv_map.push(g2.mul(
                g2.mul(g2.mul(n2[w], g.s(1, 0, n1[p])), g.s(1, 1, n1[q])),
                g.s(1, 1, g.s(0, 0, a)),
            ));
        }
    }
    let phi2_inv = GroupHom::new(total.clone(), g2.clone(), phi2_inv_map)?;
    for x in 0..g2.order() {
        assert_eq!(
            phi2_inv.apply(phi2.apply(x)),
            x,
            "level-2 comparison maps must invert each other"
        );
    }

    Ok(SemidirectDecomposition {
        moore,
        level0_order: o0,
        outer,
        inner,
        total,
        phi1,
        phi1_inv,
        phi2,
        phi2_inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coskeleton::cosk1;
    use crate::samples;
    use crossed_core::samples as crossed_samples;

    #[test]
    fn the_squaring_coskeleton_splits_with_matching_orders() {
        let g = cosk1(&crossed_samples::c4_squaring()).unwrap();
        let sd = semidirect_iso(&g).unwrap();
        assert_eq!(sd.outer().order(), g.level(1).order());
        assert_eq!(sd.total().order(), g.level(2).order());
        assert_eq!(sd.inner().order(), 4);
    }

    #[test]
    fn degree_one_entries_split_with_trivial_group_component() {
        let g = cosk1(&crossed_samples::c4_squaring()).unwrap();
        let sd = semidirect_iso(&g).unwrap();
        for (p, &x) in sd.moore().n1_elements().iter().enumerate() {
            assert_eq!(sd.phi1().apply(x), sd.outer_index(p, 0));
        }
    }

    #[test]
    fn both_comparison_maps_are_mutually_inverse_on_all_elements() {
        for g in [cosk1(&crossed_samples::c4_squaring()).unwrap(), samples::mixed_sample()] {
            let sd = semidirect_iso(&g).unwrap();
            for x in 0..g.level(1).order() {
                assert_eq!(sd.phi1_inv().apply(sd.phi1().apply(x)), x);
            }
            for y in 0..sd.outer().order() {
                assert_eq!(sd.phi1().apply(sd.phi1_inv().apply(y)), y);
            }
            for x in 0..g.level(2).order() {
                assert_eq!(sd.phi2_inv().apply(sd.phi2().apply(x)), x);
            }
            for y in 0..sd.total().order() {
                assert_eq!(sd.phi2().apply(sd.phi2_inv().apply(y)), y);
            }
        }
    }
}
