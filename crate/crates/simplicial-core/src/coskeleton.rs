//! Coskeleton constructions.
//!
//! `cosk0` is the constant simplicial group on a finite group. `cosk1`
//! extends a crossed module `(G, M, μ, ▷)` levelwise: level n is the
//! iterated semidirect product `Mⁿ ⋊ G`, where each module entry of a
//! product is twisted by everything accumulated to its right, and a monotone
//! reindexing map acts by descending partial products over its preimage
//! blocks. Faces and degeneracies are the specialisations to the coface and
//! codegeneracy maps; every constructed instance passes full validation.

use crossed_core::CrossedModule;
use group_core::{FiniteGroup, GroupHom};

use crate::error::SimplicialError;
use crate::tsg::{validate_tsg, TruncatedSimplicialGroup, TsgData};

/// Flat index of `(m_{n-1}, …, m_0, g)`: module entries most significant,
/// with `m_{n-1}` leading. `parts` lists the module entries descending.
pub(crate) fn encode(v: &CrossedModule, parts: &[usize], g: usize) -> usize {
    let mo = v.module_part().order();
    parts.iter().fold(0, |acc, &m| acc * mo + m) * v.group_part().order() + g
}

/// Inverse of `encode`; the returned parts are descending.
pub(crate) fn decode(v: &CrossedModule, n: usize, mut index: usize) -> (Vec<usize>, usize) {
    let go = v.group_part().order();
    let mo = v.module_part().order();
    let g = index % go;
    index /= go;
    let mut parts = vec![0usize; n];
    for slot in parts.iter_mut().rev() {
        *slot = index % mo;
        index /= mo;
    }
    (parts, g)
}

/// The level-n group `Mⁿ ⋊ G`. The entry at math position i (counting from
/// the right) multiplies twisted by `((m_{i-1} ⋯ m_0)μ) g` of the left
/// factor.
pub(crate) fn level_group(v: &CrossedModule, n: usize) -> Result<FiniteGroup, SimplicialError> {
    let m = v.module_part();
    let g = v.group_part();
    let mu = v.mu();
    let order = m.order().pow(n as u32) * g.order();
    let mut table = vec![vec![0usize; order]; order];
    for x in 0..order {
        let (xp, xg) = decode(v, n, x);
        let mut twists = vec![0usize; n];
        let mut acc = xg;
        for i in 0..n {
            twists[i] = acc;
            acc = g.mul(mu.apply(xp[n - 1 - i]), acc);
        }
        for y in 0..order {
            let (yp, yg) = decode(v, n, y);
            let parts: Vec<usize> = (0..n)
                .map(|slot| m.mul(xp[slot], v.act(twists[n - 1 - slot], yp[slot])))
                .collect();
            table[x][y] = encode(v, &parts, g.mul(xg, yg));
        }
    }
    Ok(FiniteGroup::validate_group(&table)?)
}

/// The reindexing hom of a monotone `θ: [m] → [n]` from level n to level
/// m = `theta.len() - 1`; `theta[i]` is the image of i. Image entry i is the
/// descending product of the entries with index in `[iθ, (i+1)θ)`, and the
/// image group entry is the boundary of the product below `0θ` times `g`.
pub(crate) fn theta_hom(
    v: &CrossedModule,
    theta: &[usize],
    n: usize,
    source: &FiniteGroup,
    target: &FiniteGroup,
) -> Result<GroupHom, SimplicialError> {
    let m = v.module_part();
    let g = v.group_part();
    let m_len = theta.len() - 1;
    let map: Vec<usize> = (0..source.order())
        .map(|x| {
            let (xp, xg) = decode(v, n, x);
            let entry = |i: usize| xp[n - 1 - i];
            let block = |lo: usize, hi: usize| {
                let mut prod = m.identity();
                for k in (lo..hi).rev() {
                    prod = m.mul(prod, entry(k));
                }
                prod
            };
            let parts: Vec<usize> = (0..m_len)
                .map(|slot| {
                    let i = m_len - 1 - slot;
                    block(theta[i], theta[i + 1])
                })
                .collect();
            let g_img = g.mul(v.mu().apply(block(0, theta[0])), xg);
            encode(v, &parts, g_img)
        })
        .collect();
    Ok(GroupHom::new(source.clone(), target.clone(), map)?)
}

/// The 2-truncation of the levelwise extension of a crossed module. Level 1
/// is `M ⋊ G` with `d₀(m, g) = (mμ)g`, `d₁(m, g) = g` and `s₀(g) = (1, g)`.
pub fn cosk1(v: &CrossedModule) -> Result<TruncatedSimplicialGroup, SimplicialError> {
    let l0 = level_group(v, 0)?;
    let l1 = level_group(v, 1)?;
    let l2 = level_group(v, 2)?;
    validate_tsg(TsgData {
        faces_one: [theta_hom(v, &[1], 1, &l1, &l0)?, theta_hom(v, &[0], 1, &l1, &l0)?],
        faces_two: [
            theta_hom(v, &[1, 2], 2, &l2, &l1)?,
            theta_hom(v, &[0, 2], 2, &l2, &l1)?,
            theta_hom(v, &[0, 1], 2, &l2, &l1)?,
        ],
        degeneracy_zero: theta_hom(v, &[0, 0], 0, &l0, &l1)?,
        degeneracies_one: [
            theta_hom(v, &[0, 0, 1], 1, &l1, &l2)?,
            theta_hom(v, &[0, 1, 1], 1, &l1, &l2)?,
        ],
        levels: [l0, l1, l2],
    })
}

/// The constant simplicial group: every level is the given group, every
/// structure map the identity.
pub fn cosk0(base: &FiniteGroup) -> Result<TruncatedSimplicialGroup, SimplicialError> {
    let id = || GroupHom::identity(base.clone());
    validate_tsg(TsgData {
        levels: [base.clone(), base.clone(), base.clone()],
        faces_one: [id(), id()],
        faces_two: [id(), id(), id()],
        degeneracy_zero: id(),
        degeneracies_one: [id(), id()],
    })
}
