//! 2-truncated simplicial groups and their elementwise validation.
//!
//! Maps apply on the right and composites read left to right: for an element
//! `x` of level 2, `x d₂ d₀` applies `d₂` first. A candidate passes exactly
//! when every simplicial identity that stays within levels 0 to 2 holds at
//! every element; the first violation is reported together with the identity
//! and the element witnessing it.

use group_core::{FiniteGroup, GroupHom};

use crate::error::SimplicialError;

/// Raw structure maps of a 2-truncated simplicial group, before validation.
#[derive(Debug, Clone)]
pub struct TsgData {
    /// Level groups `[G₀, G₁, G₂]`.
    pub levels: [FiniteGroup; 3],
    /// Faces `[d₀, d₁]` out of level 1.
    pub faces_one: [GroupHom; 2],
    /// Faces `[d₀, d₁, d₂]` out of level 2.
    pub faces_two: [GroupHom; 3],
    /// The degeneracy `s₀` out of level 0.
    pub degeneracy_zero: GroupHom,
    /// Degeneracies `[s₀, s₁]` out of level 1.
    pub degeneracies_one: [GroupHom; 2],
}

/// A validated 2-truncated simplicial group.
#[derive(Debug, Clone)]
pub struct TruncatedSimplicialGroup {
    data: TsgData,
}

impl TruncatedSimplicialGroup {
    /// The group at level `n ≤ 2`.
    #[must_use]
    pub fn level(&self, n: usize) -> &FiniteGroup {
        &self.data.levels[n]
    }

    /// The face `d_index` out of the given level (1 or 2).
    #[must_use]
    pub fn face(&self, level: usize, index: usize) -> &GroupHom {
        match level {
            1 => &self.data.faces_one[index],
            2 => &self.data.faces_two[index],
            _ => panic!("faces leave levels 1 and 2 only"),
        }
    }

    /// The degeneracy `s_index` out of the given level (0 or 1).
    #[must_use]
    pub fn degeneracy(&self, level: usize, index: usize) -> &GroupHom {
        match level {
            0 => {
                assert_eq!(index, 0, "level 0 has a single degeneracy");
                &self.data.degeneracy_zero
            }
            1 => &self.data.degeneracies_one[index],
            _ => panic!("degeneracies leave levels 0 and 1 only"),
        }
    }

    /// `x d_index` for `x` in the given level.
    #[must_use]
    pub fn d(&self, level: usize, index: usize, x: usize) -> usize {
        self.face(level, index).apply(x)
    }

    /// `x s_index` for `x` in the given level.
    #[must_use]
    pub fn s(&self, level: usize, index: usize, x: usize) -> usize {
        self.degeneracy(level, index).apply(x)
    }
}

fn signature(
    hom: &GroupHom,
    source: &FiniteGroup,
    target: &FiniteGroup,
    err: SimplicialError,
) -> Result<(), SimplicialError> {
    if hom.source() == source && hom.target() == target {
        Ok(())
    } else {
        Err(err)
    }
}

/// Checks signatures and all in-range simplicial identities, consuming the
/// raw data on success.
pub fn validate_tsg(data: TsgData) -> Result<TruncatedSimplicialGroup, SimplicialError> {
    let [l0, l1, l2] = &data.levels;
    for (i, f) in data.faces_one.iter().enumerate() {
        signature(f, l1, l0, SimplicialError::FaceSignature { level: 1, index: i })?;
    }
    for (i, f) in data.faces_two.iter().enumerate() {
        signature(f, l2, l1, SimplicialError::FaceSignature { level: 2, index: i })?;
    }
    signature(&data.degeneracy_zero, l0, l1, SimplicialError::DegeneracySignature {
        level: 0,
        index: 0,
    })?;
    for (i, s) in data.degeneracies_one.iter().enumerate() {
        signature(s, l1, l2, SimplicialError::DegeneracySignature { level: 1, index: i })?;
    }

    let g = TruncatedSimplicialGroup { data };
    let fail = |relation: &'static str, level: usize, element: usize| {
        Err(SimplicialError::IdentityViolation { relation, level, element })
    };

    for x in 0..g.level(2).order() {
        if g.d(1, 0, g.d(2, 1, x)) != g.d(1, 0, g.d(2, 0, x)) {
            return fail("d1 d0 = d0 d0", 2, x);
        }
        if g.d(1, 0, g.d(2, 2, x)) != g.d(1, 1, g.d(2, 0, x)) {
            return fail("d2 d0 = d0 d1", 2, x);
        }
        if g.d(1, 1, g.d(2, 2, x)) != g.d(1, 1, g.d(2, 1, x)) {
            return fail("d2 d1 = d1 d1", 2, x);
        }
    }
    for x in 0..g.level(0).order() {
        let y = g.s(0, 0, x);
        if g.d(1, 0, y) != x {
            return fail("s0 d0 = id", 0, x);
        }
        if g.d(1, 1, y) != x {
            return fail("s0 d1 = id", 0, x);
        }
        if g.s(1, 0, y) != g.s(1, 1, y) {
            return fail("s0 s0 = s0 s1", 0, x);
        }
    }
    for x in 0..g.level(1).order() {
        let y0 = g.s(1, 0, x);
        let y1 = g.s(1, 1, x);
        if g.d(2, 0, y0) != x {
            return fail("s0 d0 = id", 1, x);
        }
        if g.d(2, 1, y0) != x {
            return fail("s0 d1 = id", 1, x);
        }
        if g.d(2, 2, y0) != g.s(0, 0, g.d(1, 1, x)) {
            return fail("s0 d2 = d1 s0", 1, x);
        }
        if g.d(2, 0, y1) != g.s(0, 0, g.d(1, 0, x)) {
            return fail("s1 d0 = d0 s0", 1, x);
        }
        if g.d(2, 1, y1) != x {
            return fail("s1 d1 = id", 1, x);
        }
        if g.d(2, 2, y1) != x {
            return fail("s1 d2 = id", 1, x);
        }
    }
    Ok(g)
}

fn product_hom(
    fa: &GroupHom,
    fb: &GroupHom,
    source: &FiniteGroup,
    target: &FiniteGroup,
) -> Result<GroupHom, SimplicialError> {
    let src_b = fb.source().order();
    let tgt_b = fb.target().order();
    let map = (0..source.order())
        .map(|x| fa.apply(x / src_b) * tgt_b + fb.apply(x % src_b))
        .collect();
    Ok(GroupHom::new(source.clone(), target.clone(), map)?)
}

/// Levelwise direct product of two validated instances.
pub fn tsg_direct_product(
    a: &TruncatedSimplicialGroup,
    b: &TruncatedSimplicialGroup,
) -> Result<TruncatedSimplicialGroup, SimplicialError> {
    let levels =
        [0, 1, 2].map(|n| FiniteGroup::direct_product(a.level(n), b.level(n)));
    let face = |i: usize, lvl: usize| {
        product_hom(a.face(lvl, i), b.face(lvl, i), &levels[lvl], &levels[lvl - 1])
    };
    let degeneracy = |i: usize, lvl: usize| {
        product_hom(a.degeneracy(lvl, i), b.degeneracy(lvl, i), &levels[lvl], &levels[lvl + 1])
    };
    validate_tsg(TsgData {
        faces_one: [face(0, 1)?, face(1, 1)?],
        faces_two: [face(0, 2)?, face(1, 2)?, face(2, 2)?],
        degeneracy_zero: degeneracy(0, 0)?,
        degeneracies_one: [degeneracy(0, 1)?, degeneracy(1, 1)?],
        levels,
    })
}
