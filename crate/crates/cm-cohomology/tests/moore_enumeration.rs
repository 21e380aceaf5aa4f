//! Full enumeration of 2-cochains on the smallest instances, checking that
//! the linear-algebra cocycle groups agree with brute force and that the
//! Moore decomposition identifies 2-cocycles with the compatible pairs.

use std::collections::HashSet;

use abelian_core::FPAbelianGroup;
use cm_cohomology::CmComplex;
use crossed_core::{homotopy, samples, CrossedModule};
use group_core::{bar_differential, BarCochain, FiniteGroup, GModule};
use num_bigint::BigInt;
use num_traits::Zero;

fn two_element_instances() -> Vec<CrossedModule> {
    let c2 = FiniteGroup::cyclic(2);
    vec![samples::trivial_mu(&c2, &c2), samples::identity_mu(&c2)]
}

fn complex_mod_two(v: &CrossedModule) -> CmComplex {
    let h = homotopy(v).unwrap();
    let m = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(2));
    CmComplex::new(v, &m).unwrap()
}

#[test]
fn enumerated_cocycles_match_the_linear_algebra_groups() {
    for v in two_element_instances() {
        let cx = complex_mod_two(&v);
        let h2 = cx.cohomology(2).unwrap();
        let mut enumerated = 0usize;
        for element in cx.cochain_group(2).enumerate().unwrap() {
            let z = cx.cochain_from_coords(2, element.coords()).unwrap();
            let brute = cx.is_cocycle(&z).unwrap();
            let membership = h2.homology.cocycles.contains(&z.to_coords());
            assert_eq!(brute, membership);
            if brute {
                enumerated += 1;
            }
        }
        let by_rank = h2.homology.cocycles.group.order().unwrap();
        assert_eq!(BigInt::from(enumerated), BigInt::from(by_rank));
    }
}

#[test]
fn two_cocycles_are_exactly_the_compatible_moore_pairs() {
    for v in two_element_instances() {
        let cx = complex_mod_two(&v);

        // All compatible pairs: a module-part table against a group-part
        // 2-cocycle over the inflated coefficients.
        let inflation = cx.inflation().unwrap();
        let d2 = bar_differential(&inflation, 2).unwrap();
        let mut pairs = HashSet::new();
        for c_m in FPAbelianGroup::power(cx.coeffs().coeffs(), v.module_part().order())
            .enumerate()
            .unwrap()
        {
            let module_part: Vec<_> = (0..v.module_part().order())
                .map(|m| {
                    cx.coeffs().coeffs().element(vec![c_m.coords()[m].clone()])
                })
                .collect();
            for z_g in group_core::cochain_group(&inflation, 2).enumerate().unwrap() {
                let group_part =
                    BarCochain::from_coords(&inflation, 2, z_g.coords()).unwrap();
                if !d2
                    .target()
                    .reduce(d2.matrix().apply(&group_part.to_coords()))
                    .iter()
                    .all(Zero::is_zero)
                {
                    continue;
                }
                let pair = cx.parts_pair(module_part.clone(), group_part).unwrap();
                if cx.parts_cocycle_failure(&pair).unwrap().is_none() {
                    let assembled = cx.assemble(&pair).unwrap();
                    assert!(cx.is_cocycle(&assembled).unwrap());
                    pairs.insert(assembled.to_coords());
                }
            }
        }

        // Every 2-cocycle splits into such a pair, and distinct cocycles give
        // distinct pairs because assembly recovers the cocycle.
        let mut seen = HashSet::new();
        for element in cx.cochain_group(2).enumerate().unwrap() {
            let z = cx.cochain_from_coords(2, element.coords()).unwrap();
            if !cx.is_cocycle(&z).unwrap() {
                continue;
            }
            let p = cx.parts(&z).unwrap();
            assert!(cx.is_cocycle_by_parts(&p).unwrap());
            assert_eq!(cx.assemble(&p).unwrap(), z);
            let key = (
                p.module_part().iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>(),
                p.group_part().to_coords(),
            );
            assert!(seen.insert(key), "the decomposition must be injective");
            assert!(pairs.contains(&z.to_coords()));
        }
        assert_eq!(seen.len(), pairs.len(), "the decomposition must be onto");
    }
}
