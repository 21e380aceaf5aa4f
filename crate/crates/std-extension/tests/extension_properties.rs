//! Property coverage for the symbolic extension: decomposition reassembly on
//! enumerated words, the action axioms on exhaustive small data and on seeded
//! samples, and recovery of the defining cocycle.

use abelian_core::FPAbelianGroup;
use crossed_core::Cpt3Cocycle;
use group_core::{BarCochain, FiniteGroup, GModule};
use num_bigint::BigInt;
use std_extension::{axiom_sample_check, FreeWord, StandardExtensionObj};

fn s3() -> FiniteGroup {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|u| perms.iter().map(|v| index_of([v[u[0]], v[u[1]], v[u[2]]])).collect())
        .collect();
    FiniteGroup::validate_group(&table).unwrap()
}

fn zero_extension(pi0: FiniteGroup, coeff: u64) -> StandardExtensionObj {
    let pi1 = GModule::trivial(pi0, FPAbelianGroup::cyclic(coeff));
    let z3 = Cpt3Cocycle::zero(&pi1);
    StandardExtensionObj::new(pi1, z3).unwrap()
}

/// π₀ = π₁ = Z/2 with the indicator 3-cocycle of (x, x, x).
fn c2_nontrivial() -> StandardExtensionObj {
    let pi0 = FiniteGroup::cyclic(2);
    let pi1 = GModule::trivial(pi0, FPAbelianGroup::cyclic(2));
    let table = BarCochain::from_fn(&pi1, 3, |t| {
        let one = t == [1, 1, 1];
        pi1.coeffs().element(vec![BigInt::from(u64::from(one))])
    })
    .unwrap();
    StandardExtensionObj::new(pi1.clone(), Cpt3Cocycle::new(table).unwrap()).unwrap()
}

/// π₀ = Z/2 with trivial action on π₁ = Z/4 and the value 2 at (x, x, x).
fn c2_z4_value_two() -> StandardExtensionObj {
    let pi0 = FiniteGroup::cyclic(2);
    let pi1 = GModule::trivial(pi0, FPAbelianGroup::cyclic(4));
    let table = BarCochain::from_fn(&pi1, 3, |t| {
        let value = if t == [1, 1, 1] { 2 } else { 0 };
        pi1.coeffs().element(vec![BigInt::from(value)])
    })
    .unwrap();
    StandardExtensionObj::new(pi1.clone(), Cpt3Cocycle::new(table).unwrap()).unwrap()
}

/// Reduced words obtained from every raw letter string of length at most
/// `len`; duplicates after reduction are harmless here.
fn words_up_to(order: usize, len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut frontier = vec![Vec::<(usize, i8)>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for base in 1..order {
                for sign in [1i8, -1] {
                    let mut letters = prefix.clone();
                    letters.push((base, sign));
                    out.push(FreeWord::reduce(&letters).unwrap());
                    next.push(letters);
                }
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn every_enumerated_kernel_word_over_s3_decomposes_and_reassembles() {
    let ext = zero_extension(s3(), 2);
    let mut nontrivial = 0usize;
    for w in words_up_to(6, 3) {
        let image = ext.pi(&w).unwrap();
        let kernel = w.mul(&ext.s0(image).inv());
        // schreier_decompose asserts the reassembly identity internally.
        let factors = ext.schreier_decompose(&kernel).unwrap();
        for factor in &factors {
            assert_ne!(factor.q, 0, "trivial generators are dropped");
            assert_ne!(factor.p, 0, "letters are never the identity");
            assert!(factor.conjugator.is_empty(), "the canonical scan telescopes");
        }
        nontrivial += usize::from(!factors.is_empty());
    }
    assert!(nontrivial > 500, "the enumeration must exercise real decompositions");
}

#[test]
fn action_axioms_hold_exhaustively_on_short_data_over_c2() {
    let ext = c2_nontrivial();
    let words = words_up_to(2, 3);
    let mut elements = Vec::new();
    for w in &words {
        let image = ext.pi(w).unwrap();
        let kernel = w.mul(&ext.s0(image).inv());
        for value in 0..2u64 {
            let part = ext.pi1().coeffs().element(vec![BigInt::from(value)]);
            elements.push(ext.module_element(part, kernel.clone()).unwrap());
        }
    }

    for g in &words {
        for e in &elements {
            let acted = ext.act(g, e).unwrap();
            let conjugated = g.mul(e.kernel_word()).mul(&g.inv());
            assert_eq!(acted.kernel_word(), &conjugated, "μ-equivariance");
            for h in &words {
                let joined = ext.act(&g.mul(h), e).unwrap();
                let nested = ext.act(g, &ext.act(h, e).unwrap()).unwrap();
                assert_eq!(joined, nested, "left action");
            }
        }
        for a in &elements {
            for b in &elements {
                let of_product = ext.act(g, &a.mul(b)).unwrap();
                let product_of = ext.act(g, a).unwrap().mul(&ext.act(g, b).unwrap());
                assert_eq!(of_product, product_of, "action by automorphisms");
            }
        }
    }

    for a in &elements {
        for b in &elements {
            let acted = ext.act(&ext.mu(a), b).unwrap();
            let conjugated = a.mul(b).mul(&a.inv());
            assert_eq!(acted, conjugated, "Peiffer identity");
        }
    }
}

#[test]
fn seeded_samples_pass_on_all_bundled_shapes() {
    let thousand = [c2_nontrivial(), c2_z4_value_two()];
    for ext in &thousand {
        let report = axiom_sample_check(ext, 0, 1000);
        assert!(report.passed(), "{report}");
    }
    let lighter = [zero_extension(s3(), 2), zero_extension(FiniteGroup::cyclic(2), 2)];
    for ext in &lighter {
        let report = axiom_sample_check(ext, 0, 300);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn recovery_matches_on_every_instance() {
    for ext in [
        c2_nontrivial(),
        c2_z4_value_two(),
        zero_extension(s3(), 2),
        zero_extension(FiniteGroup::cyclic(2), 3),
    ] {
        let recovered = ext.recover_z3().unwrap();
        assert!(recovered.matches_input);
    }
}
