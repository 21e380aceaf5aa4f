//! Exhaustive cross-checks of the matrix-built differentials and cohomology
//! against a direct pointwise evaluation of the defining formulas.
//!
//! The evaluator below applies the alternating-sum formulas value by value on
//! cochain tables. It shares nothing with the block-matrix construction in
//! the library, so layout mistakes there cannot cancel out here.

use std::collections::HashSet;

use abelian_core::{FPAbelianGroup, IntMatrix};
use group_core::{
    bar_differential, cochain_group, group_cohomology, BarCochain, FiniteGroup, GModule,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

/// Pointwise differential: the formulas, one degree at a time.
fn eval_differential(c: &BarCochain) -> BarCochain {
    let m = c.coeffs().clone();
    let g = m.group().clone();
    BarCochain::from_fn(&m, c.degree() + 1, |t| match c.degree() {
        0 => c.value(&[]).sub(&m.act(t[0], c.value(&[]))),
        1 => {
            let (h, gg) = (t[0], t[1]);
            c.value(&[h])
                .sub(c.value(&[g.mul(h, gg)]))
                .add(&m.act(h, c.value(&[gg])))
        }
        2 => {
            let (k, h, gg) = (t[0], t[1], t[2]);
            c.value(&[k, h])
                .sub(c.value(&[k, g.mul(h, gg)]))
                .add(c.value(&[g.mul(k, h), gg]))
                .sub(&m.act(k, c.value(&[h, gg])))
        }
        _ => unreachable!("oracle only evaluates degrees 0..=2"),
    })
    .expect("evaluator produces values in the coefficient group")
}

/// All cochains of a given degree, by enumerating the flat coordinate group.
fn all_cochains(m: &GModule, degree: usize) -> Vec<BarCochain> {
    cochain_group(m, degree)
        .enumerate()
        .expect("finite coefficients in the oracle suite")
        .into_iter()
        .map(|e| BarCochain::from_coords(m, degree, e.coords()).unwrap())
        .collect()
}

fn reduced_coords(c: &BarCochain) -> Vec<BigInt> {
    cochain_group(c.coeffs(), c.degree()).reduce(c.to_coords())
}

fn check_instance(m: &GModule, degree: usize) {
    let cohomology = group_cohomology(m, degree).unwrap();
    let mut brute_cocycles = 0usize;
    for c in all_cochains(m, degree) {
        let is_cocycle = reduced_coords(&eval_differential(&c)).iter().all(Zero::is_zero);
        if is_cocycle {
            brute_cocycles += 1;
        }
        assert_eq!(
            cohomology.is_cocycle(&c),
            is_cocycle,
            "cocycle test disagrees in degree {degree}"
        );
    }
    let brute_coboundaries: HashSet<Vec<BigInt>> = if degree == 0 {
        std::iter::once(reduced_coords(&BarCochain::zero(m, 0).unwrap())).collect()
    } else {
        all_cochains(m, degree - 1)
            .iter()
            .map(|c| reduced_coords(&eval_differential(c)))
            .collect()
    };
    for c in all_cochains(m, degree) {
        assert_eq!(
            cohomology.is_coboundary(&c),
            brute_coboundaries.contains(&reduced_coords(&c)),
            "coboundary test disagrees in degree {degree}"
        );
    }
    let z_order = cohomology.cocycles().group.order().unwrap();
    let b_order = cohomology.coboundaries().group.order().unwrap();
    let h_order = cohomology.group().order().unwrap();
    assert_eq!(z_order, BigUint::from(brute_cocycles));
    assert_eq!(b_order, BigUint::from(brute_coboundaries.len()));
    assert_eq!(z_order, b_order * h_order, "|Z| = |B|·|H|");
}

fn instances() -> Vec<GModule> {
    let c1 = FiniteGroup::cyclic(1);
    let c2 = FiniteGroup::cyclic(2);
    vec![
        GModule::trivial(c1, FPAbelianGroup::cyclic(4)),
        GModule::trivial(c2.clone(), FPAbelianGroup::cyclic(2)),
        GModule::trivial(c2.clone(), FPAbelianGroup::cyclic(3)),
        GModule::trivial(c2.clone(), FPAbelianGroup::cyclic(4)),
        GModule::new(
            c2,
            FPAbelianGroup::cyclic(4),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
        )
        .unwrap(),
    ]
}

#[test]
fn degree_zero_matches_enumeration() {
    for m in instances() {
        check_instance(&m, 0);
    }
}

#[test]
fn degree_one_matches_enumeration() {
    for m in instances() {
        check_instance(&m, 1);
    }
}

#[test]
fn degree_two_matches_enumeration() {
    for m in instances() {
        check_instance(&m, 2);
    }
}

#[test]
fn differentials_square_to_zero_on_a_grid_of_instances() {
    let groups = vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
    ];
    let coeffs = vec![
        FPAbelianGroup::cyclic(2),
        FPAbelianGroup::cyclic(4),
        FPAbelianGroup::cyclic(0),
        FPAbelianGroup::new(vec![BigInt::from(2), BigInt::from(4)]).unwrap(),
    ];
    for g in &groups {
        for a in &coeffs {
            let m = GModule::trivial(g.clone(), a.clone());
            for n in 0..=2 {
                let d1 = bar_differential(&m, n).unwrap();
                let d2 = bar_differential(&m, n + 1).unwrap();
                assert!(d1.then(&d2).unwrap().is_zero(), "d∘d ≠ 0 at degree {n}");
            }
        }
    }
}

#[test]
fn known_cohomology_of_small_cyclic_groups() {
    // For C_n with trivial Z/n coefficients every degree ≤ 3 gives Z/n.
    for n in [2u64, 3, 4] {
        let m = GModule::trivial(FiniteGroup::cyclic(n as usize), FPAbelianGroup::cyclic(n));
        for degree in 0..=3 {
            let h = group_cohomology(&m, degree).unwrap();
            assert_eq!(
                h.group().describe(),
                format!("Z/{n}"),
                "H^{degree} of C{n} with Z/{n} coefficients"
            );
        }
    }
    // Integral coefficients: H⁰ = Z, H¹ = 0, H² = Z/n, H³ = 0.
    for n in [2usize, 3] {
        let m = GModule::trivial(FiniteGroup::cyclic(n), FPAbelianGroup::cyclic(0));
        let expected = ["Z".to_string(), "0".to_string(), format!("Z/{n}"), "0".to_string()];
        for degree in 0..=3 {
            let h = group_cohomology(&m, degree).unwrap();
            assert_eq!(h.group().describe(), expected[degree]);
        }
    }
}
