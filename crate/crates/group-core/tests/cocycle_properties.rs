//! Structural identities satisfied by every 2-cocycle, checked on full
//! enumerations of the cocycle groups of small instances.

use abelian_core::{FPAbelianGroup, IntMatrix};
use group_core::{group_cohomology, BarCochain, FiniteGroup, GModule};

fn small_instances() -> Vec<GModule> {
    let c2 = FiniteGroup::cyclic(2);
    let c4 = FiniteGroup::cyclic(4);
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    vec![
        GModule::trivial(c2.clone(), FPAbelianGroup::cyclic(2)),
        GModule::trivial(c2.clone(), FPAbelianGroup::cyclic(4)),
        GModule::new(
            c2,
            FPAbelianGroup::cyclic(4),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
        )
        .unwrap(),
        GModule::trivial(c4.clone(), FPAbelianGroup::cyclic(4)),
        GModule::trivial(c4, FPAbelianGroup::cyclic(2)),
        GModule::trivial(v4, FPAbelianGroup::cyclic(2)),
    ]
}

/// Every 2-cocycle of every small instance, as a value table.
fn all_cocycles(m: &GModule) -> Vec<BarCochain> {
    let h2 = group_cohomology(m, 2).unwrap();
    let z = h2.cocycles().clone();
    z.group
        .enumerate()
        .expect("finite instances")
        .into_iter()
        .map(|e| {
            let ambient = z.representative(e.coords());
            BarCochain::from_coords(m, 2, &ambient).unwrap()
        })
        .collect()
}

#[test]
fn two_cocycles_project_onto_their_corner_value() {
    // (g, 1)z = g ▷ (1, 1)z and (1, g)z = (1, 1)z.
    for m in small_instances() {
        for z in all_cocycles(&m) {
            let corner = z.value(&[0, 0]).clone();
            for g in m.group().elements() {
                assert_eq!(z.value(&[g, 0]), &m.act(g, &corner));
                assert_eq!(z.value(&[0, g]), &corner);
            }
        }
    }
}

#[test]
fn pointed_equals_componentwise_pointed_for_two_cocycles() {
    for m in small_instances() {
        let mut seen_nontrivial = false;
        for z in all_cocycles(&m) {
            assert_eq!(z.is_pointed(), z.is_cpt());
            seen_nontrivial |= !z.to_coords().iter().all(num_traits::Zero::is_zero);
        }
        assert!(seen_nontrivial, "enumeration covered only the zero cocycle");
    }
}
