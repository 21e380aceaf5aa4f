//! Oracle for the differentials: transported along the semidirect splittings
//! of levels 1 and 2, the cochain complex of this crate must coincide with
//! the low-degree cochain complex of the simplicial classifying construction,
//! whose simplices are tuples `(g_{n-1}, …, g_0)` of elements of descending
//! levels and whose differential is the alternating sum over the faces:
//!
//! ```text
//!   (g₁, g₀)(c d)      = (g₁d₀)c − ((g₁d₁)g₀)c + (g₁d₁)▷(g₀)c
//!   (g₂, g₁, g₀)(c d)  = (g₂d₀, g₁d₀)c − (g₂d₁, (g₁d₁)g₀)c
//!                        + ((g₂d₂)g₁, g₀)c − (g₂d₂d₁)▷(g₁, g₀)c
//! ```
//!
//! The matrices below are assembled from nothing but face maps and the
//! comparison isomorphisms, so agreement is entry for entry.

use abelian_core::{FPAbelianGroup, IntMatrix};
use crossed_core::{homotopy, samples as crossed_samples};
use group_core::GModule;
use num_bigint::BigInt;
use simplicial_core::{
    cosk1, homotopy01, samples, semidirect_iso, AnalysedComplex, TruncatedSimplicialGroup,
};

fn add_block(
    matrix: &mut IntMatrix,
    rank: usize,
    out_count: usize,
    in_count: usize,
    out: usize,
    src: usize,
    block: &IntMatrix,
    sign: i64,
) {
    for i in 0..rank {
        for j in 0..rank {
            let cur = matrix.at(i * out_count + out, j * in_count + src).clone();
            matrix.set(
                i * out_count + out,
                j * in_count + src,
                cur + BigInt::from(sign) * block.at(i, j),
            );
        }
    }
}

fn assert_matches_classifying_construction(g: &TruncatedSimplicialGroup, coeffs: &GModule) {
    let an = AnalysedComplex::new(g, coeffs).unwrap();
    let sd = semidirect_iso(g).unwrap();
    let proj = an.homotopy().projection();
    let g0 = g.level(0);
    let g1_level = g.level(1);
    let rank = coeffs.coeffs().rank();
    let identity = IntMatrix::identity(rank);
    let count1 = an.domain_count(1);
    let count2 = an.domain_count(2);
    let count3 = an.domain_count(3);

    // flat degree-2 index of a classifying pair, through the level-1 splitting
    let pair = |a1: usize, a0: usize| -> usize {
        let (x, h) = sd.outer_parts(sd.phi1().apply(a1));
        an.tuple_index(2, &[x, h, a0])
    };

    let mut expected1 = IntMatrix::zero(rank * count2, rank * count1);
    for out in 0..count2 {
        let tuple = an.tuple_of_index(2, out);
        let g1 = sd.phi1_inv().apply(sd.outer_index(tuple[0], tuple[1]));
        let a0 = tuple[2];
        add_block(&mut expected1, rank, count2, count1, out, g.d(1, 0, g1), &identity, 1);
        add_block(
            &mut expected1,
            rank,
            count2,
            count1,
            out,
            g0.mul(g.d(1, 1, g1), a0),
            &identity,
            -1,
        );
        add_block(
            &mut expected1,
            rank,
            count2,
            count1,
            out,
            a0,
            coeffs.action_matrix(proj.apply(g.d(1, 1, g1))),
            1,
        );
    }
    assert_eq!(an.differential(1).unwrap().matrix(), &expected1);

    let mut expected2 = IntMatrix::zero(rank * count3, rank * count2);
    for out in 0..count3 {
        let t = an.tuple_of_index(3, out);
        let g2 = sd
            .phi2_inv()
            .apply(sd.total_index(sd.inner_index(t[0], t[1]), sd.outer_index(t[2], t[3])));
        let g1 = sd.phi1_inv().apply(sd.outer_index(t[4], t[5]));
        let a0 = t[6];
        add_block(
            &mut expected2,
            rank,
            count3,
            count2,
            out,
            pair(g.d(2, 0, g2), g.d(1, 0, g1)),
            &identity,
            1,
        );
        add_block(
            &mut expected2,
            rank,
            count3,
            count2,
            out,
            pair(g.d(2, 1, g2), g0.mul(g.d(1, 1, g1), a0)),
            &identity,
            -1,
        );
        add_block(
            &mut expected2,
            rank,
            count3,
            count2,
            out,
            pair(g1_level.mul(g.d(2, 2, g2), g1), a0),
            &identity,
            1,
        );
        add_block(
            &mut expected2,
            rank,
            count3,
            count2,
            out,
            pair(g1, a0),
            coeffs.action_matrix(proj.apply(g.d(1, 1, g.d(2, 2, g2)))),
            -1,
        );
    }
    assert_eq!(an.differential(2).unwrap().matrix(), &expected2);
}

#[test]
fn the_squaring_coskeleton_matches_with_trivial_and_twisted_coefficients() {
    let v = crossed_samples::c4_squaring();
    let g = cosk1(&v).unwrap();
    let h = homotopy(&v).unwrap();
    let flat = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(2));
    assert_matches_classifying_construction(&g, &flat);
    let negation = GModule::new(
        h.pi0().clone(),
        FPAbelianGroup::cyclic(4),
        vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
    )
    .unwrap();
    assert_matches_classifying_construction(&g, &negation);
}

#[test]
fn a_trivial_base_group_matches() {
    let g = samples::collapse_sample();
    let h = homotopy01(&g).unwrap();
    let coeffs = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(4));
    assert_matches_classifying_construction(&g, &coeffs);
}

#[test]
fn an_instance_with_boundaries_in_both_degrees_matches() {
    let g = samples::mixed_sample();
    let h = homotopy01(&g).unwrap();
    let coeffs = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(2));
    assert_matches_classifying_construction(&g, &coeffs);
}
