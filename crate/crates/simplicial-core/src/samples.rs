//! Hand-built instances used by tests and bundled data.

use crossed_core::samples::trivial_mu;
use group_core::{FiniteGroup, GroupHom};

use crate::coskeleton::{cosk0, cosk1};
use crate::tsg::{tsg_direct_product, validate_tsg, TruncatedSimplicialGroup, TsgData};

/// Levels 1, C₂, C₂³, whose only content is a degree-2 Moore entry mapping
/// isomorphically onto degree 1. Level-2 coordinates `(a, b, c)` list the
/// Moore entry and the two degenerate copies of level 1; the faces send
/// `(a, b, c)` to `a + b`, `b + c` and `c` in turn, and the degeneracies
/// embed level 1 as `b` and as `c`.
#[must_use]
pub fn collapse_sample() -> TruncatedSimplicialGroup {
    let c1 = FiniteGroup::cyclic(1);
    let c2 = FiniteGroup::cyclic(2);
    let c2c2 = FiniteGroup::direct_product(&c2, &c2);
    let l2 = FiniteGroup::direct_product(&c2c2, &c2);
    let idx = |a: usize, b: usize, c: usize| (a * 2 + b) * 2 + c;

    let mut d0 = vec![0usize; 8];
    let mut d1 = vec![0usize; 8];
    let mut d2 = vec![0usize; 8];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                d0[idx(a, b, c)] = (a + b) % 2;
                d1[idx(a, b, c)] = (b + c) % 2;
                d2[idx(a, b, c)] = c;
            }
        }
    }
    let s0 = vec![idx(0, 0, 0), idx(0, 1, 0)];
    let s1 = vec![idx(0, 0, 0), idx(0, 0, 1)];

    validate_tsg(TsgData {
        levels: [c1.clone(), c2.clone(), l2.clone()],
        faces_one: [
            GroupHom::trivial(c2.clone(), c1.clone()),
            GroupHom::trivial(c2.clone(), c1.clone()),
        ],
        faces_two: [
            GroupHom::new(l2.clone(), c2.clone(), d0).expect("face tables are homomorphisms"),
            GroupHom::new(l2.clone(), c2.clone(), d1).expect("face tables are homomorphisms"),
            GroupHom::new(l2.clone(), c2.clone(), d2).expect("face tables are homomorphisms"),
        ],
        degeneracy_zero: GroupHom::trivial(c1, c2.clone()),
        degeneracies_one: [
            GroupHom::new(c2.clone(), l2.clone(), s0).expect("degeneracies are homomorphisms"),
            GroupHom::new(c2, l2, s1).expect("degeneracies are homomorphisms"),
        ],
    })
    .expect("the collapse sample satisfies every identity")
}

/// Direct product of the collapse sample, the constant group C₂, and the
/// coskeleton of the trivial crossed module on (C₂, C₂). One instance with a
/// nontrivial degree-2 Moore entry, a nontrivial degree-1 boundary image, a
/// proper module-part quotient, and homotopy in both degrees.
#[must_use]
pub fn mixed_sample() -> TruncatedSimplicialGroup {
    let c2 = FiniteGroup::cyclic(2);
    let a = collapse_sample();
    let b = cosk0(&c2).expect("constant instances are valid");
    let c = cosk1(&trivial_mu(&c2, &c2)).expect("coskeletons of crossed modules are valid");
    let ab = tsg_direct_product(&a, &b).expect("products of valid instances are valid");
    tsg_direct_product(&ab, &c).expect("products of valid instances are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_samples_validate_with_the_expected_orders() {
        let a = collapse_sample();
        assert_eq!([a.level(0).order(), a.level(1).order(), a.level(2).order()], [1, 2, 8]);
        let m = mixed_sample();
        assert_eq!([m.level(0).order(), m.level(1).order(), m.level(2).order()], [4, 16, 128]);
    }
}
