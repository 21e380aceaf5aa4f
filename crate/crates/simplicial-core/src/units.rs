//! Comparison maps between the cochains of the truncations and the cochains
//! of the instance itself.
//!
//! Degree-1 tables over π₀ inflate along the projection from level 0, and
//! degree-2 tables over the crossed module segment pull back along the class
//! map of the degree-1 entry. Both maps restrict to cocycles and to
//! coboundaries; the restrictions are stored as homomorphisms of presented
//! groups, so bijectivity is read off their kernels and cokernels. Explicit
//! inverses on cocycle tables go through the pointed representatives of the
//! truncations.

use abelian_core::{AbHom, IntMatrix, Subquotient};
use cm_cohomology::{CmCochain, CmComplex};
use group_core::{bar_differential, cochain_group, BarCochain, GModule};
use num_bigint::BigInt;

use crate::complex::{AnalysedCochain, AnalysedComplex};
use crate::error::SimplicialError;
use crate::tsg::TruncatedSimplicialGroup;

/// The two comparison maps of a fixed instance and coefficient module, with
/// their restrictions to cocycles and coboundaries.
pub struct UnitCocycleMaps {
    an: AnalysedComplex,
    cm: CmComplex,
    u1_cochains: AbHom,
    u2_cochains: AbHom,
    u1_cocycles: AbHom,
    u2_cocycles: AbHom,
    u1_coboundaries: AbHom,
    u2_coboundaries: AbHom,
}

impl UnitCocycleMaps {
    #[must_use]
    pub fn an(&self) -> &AnalysedComplex {
        &self.an
    }

    /// The complex of the crossed module segment over the same coefficients.
    #[must_use]
    pub fn cm(&self) -> &CmComplex {
        &self.cm
    }

    /// Inflation C¹(π₀, M) → C¹ on whole cochain groups.
    #[must_use]
    pub fn u1_cochains(&self) -> &AbHom {
        &self.u1_cochains
    }

    /// Pullback along the class map C²(segment, M) → C² on whole cochain
    /// groups.
    #[must_use]
    pub fn u2_cochains(&self) -> &AbHom {
        &self.u2_cochains
    }

    #[must_use]
    pub fn u1_cocycles(&self) -> &AbHom {
        &self.u1_cocycles
    }

    #[must_use]
    pub fn u2_cocycles(&self) -> &AbHom {
        &self.u2_cocycles
    }

    #[must_use]
    pub fn u1_coboundaries(&self) -> &AbHom {
        &self.u1_coboundaries
    }

    #[must_use]
    pub fn u2_coboundaries(&self) -> &AbHom {
        &self.u2_coboundaries
    }

    #[must_use]
    pub fn u1_bijective(&self) -> bool {
        presents_isomorphism(&self.u1_cocycles)
    }

    #[must_use]
    pub fn u2_bijective(&self) -> bool {
        presents_isomorphism(&self.u2_cocycles)
    }

    #[must_use]
    pub fn u1_coboundaries_bijective(&self) -> bool {
        presents_isomorphism(&self.u1_coboundaries)
    }

    #[must_use]
    pub fn u2_coboundaries_bijective(&self) -> bool {
        presents_isomorphism(&self.u2_coboundaries)
    }

    /// Inflates a degree-1 table over π₀ along the projection.
    pub fn apply_u1(&self, z: &BarCochain) -> Result<AnalysedCochain, SimplicialError> {
        if z.degree() != 1
            || z.coeffs().group() != self.an.homotopy().pi0()
            || z.coeffs().coeffs() != self.an.coeffs().coeffs()
        {
            return Err(SimplicialError::CochainMismatch);
        }
        let proj = self.an.homotopy().projection();
        self.an.cochain_from_fn(1, |tuple| z.value(&[proj.apply(tuple[0])]).clone())
    }

    /// Reads a degree-1 table back off the minimal coset representatives.
    /// Inverse to `apply_u1` on cocycles.
    pub fn invert_u1(&self, c: &AnalysedCochain) -> Result<BarCochain, SimplicialError> {
        if c.degree() != 1 || c.coeffs() != self.an.coeffs().coeffs() {
            return Err(SimplicialError::CochainMismatch);
        }
        let h = self.an.homotopy();
        Ok(BarCochain::from_fn(self.an.coeffs(), 1, |tuple| {
            c.value(&[h.rep(tuple[0])]).clone()
        })?)
    }

    /// Pulls a degree-2 segment table back along the class map of the
    /// degree-1 entry.
    pub fn apply_u2(&self, z: &CmCochain) -> Result<AnalysedCochain, SimplicialError> {
        if z.degree() != 2 || z.coeffs() != self.an.coeffs().coeffs() {
            return Err(SimplicialError::CochainMismatch);
        }
        let seg = self.an.segment();
        self.an.cochain_from_fn(2, |tuple| {
            z.value(&[seg.class_of_position(tuple[0]), tuple[1], tuple[2]]).clone()
        })
    }

    /// Rebuilds a degree-2 segment table through the pointed section of the
    /// class map. Inverse to `apply_u2` on cocycles.
    pub fn invert_u2(&self, c: &AnalysedCochain) -> Result<CmCochain, SimplicialError> {
        if c.degree() != 2 || c.coeffs() != self.an.coeffs().coeffs() {
            return Err(SimplicialError::CochainMismatch);
        }
        let seg = self.an.segment();
        let mu = seg.crossed().mu();
        Ok(self.cm.cochain_from_fn(2, |tuple| {
            let (m, h, gx) = (tuple[0], tuple[1], tuple[2]);
            c.value(&[seg.section_position(m), 0, 0])
                .sub(c.value(&[0, mu.apply(m), h]))
                .add(c.value(&[0, h, gx]))
        })?)
    }
}

/// A homomorphism of presented groups is bijective exactly when its kernel
/// and cokernel vanish.
#[must_use]
pub fn presents_isomorphism(h: &AbHom) -> bool {
    h.kernel().group.is_trivial() && h.cokernel().0.is_trivial()
}

fn precomposition_matrix(
    rank: usize,
    out_count: usize,
    in_count: usize,
    map: impl Fn(usize) -> usize,
) -> IntMatrix {
    let mut m = IntMatrix::zero(rank * out_count, rank * in_count);
    for out in 0..out_count {
        let src = map(out);
        for i in 0..rank {
            m.set(i * out_count + out, i * in_count + src, BigInt::from(1));
        }
    }
    m
}

/// Restriction of `total` to a source subgroup landing in a target subgroup.
fn induced_on(
    total: &AbHom,
    src: &Subquotient,
    tgt: &Subquotient,
) -> Result<AbHom, SimplicialError> {
    let columns: Vec<Vec<BigInt>> = (0..src.group.rank())
        .map(|j| {
            let image = total.target().reduce(total.matrix().apply(&src.generators.column(j)));
            tgt.coordinates_of(&image)
                .expect("the comparison map carries cocycles to cocycles")
        })
        .collect();
    Ok(AbHom::new(
        src.group.clone(),
        tgt.group.clone(),
        IntMatrix::from_columns(tgt.group.rank(), &columns),
    )?)
}

/// Builds both comparison maps for one instance and coefficient module, with
/// their restrictions to cocycles and coboundaries in degrees 1 and 2.
pub fn unit_cocycle_maps(
    g: &TruncatedSimplicialGroup,
    coeffs: &GModule,
) -> Result<UnitCocycleMaps, SimplicialError> {
    let an = AnalysedComplex::new(g, coeffs)?;
    let cm = CmComplex::new(an.segment().crossed(), coeffs)?;
    let rank = coeffs.coeffs().rank();
    let proj = an.homotopy().projection();

    let an_count1 = an.domain_count(1);
    let u1_cochains = AbHom::new(
        cochain_group(coeffs, 1),
        an.cochain_group(1),
        precomposition_matrix(rank, an_count1, coeffs.group().order(), |gx| proj.apply(gx)),
    )?;

    let an_count2 = an.domain_count(2);
    let seg = an.segment();
    let u2_cochains = AbHom::new(
        cm.cochain_group(2),
        an.cochain_group(2),
        precomposition_matrix(rank, an_count2, cm.domain_count(2), |out| {
            let tuple = an.tuple_of_index(2, out);
            cm.tuple_index(2, &[seg.class_of_position(tuple[0]), tuple[1], tuple[2]])
        }),
    )?;

    let bar_d0 = bar_differential(coeffs, 0)?;
    let bar_d1 = bar_differential(coeffs, 1)?;
    let an_d0 = an.differential(0)?;
    let an_d1 = an.differential(1)?;
    let an_d2 = an.differential(2)?;
    let cm_d1 = cm.differential(1)?;
    let cm_d2 = cm.differential(2)?;

    let u1_cocycles = induced_on(&u1_cochains, &bar_d1.kernel(), &an_d1.kernel())?;
    let u1_coboundaries = induced_on(&u1_cochains, &bar_d0.image(), &an_d0.image())?;
    let u2_cocycles = induced_on(&u2_cochains, &cm_d2.kernel(), &an_d2.kernel())?;
    let u2_coboundaries = induced_on(&u2_cochains, &cm_d1.image(), &an_d1.image())?;

    Ok(UnitCocycleMaps {
        an,
        cm,
        u1_cochains,
        u2_cochains,
        u1_cocycles,
        u2_cocycles,
        u1_coboundaries,
        u2_coboundaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coskeleton::cosk1;
    use crate::samples;
    use abelian_core::FPAbelianGroup;
    use crossed_core::{samples as crossed_samples, CrossedModule};
    use group_core::{FiniteGroup, GroupHom};

    fn maps_over(g: &TruncatedSimplicialGroup, coeff_order: u64) -> UnitCocycleMaps {
        let h = crate::moore::homotopy01(g).unwrap();
        let m = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(coeff_order));
        unit_cocycle_maps(g, &m).unwrap()
    }

    fn boundary_c2_in_c4() -> TruncatedSimplicialGroup {
        let c2 = FiniteGroup::cyclic(2);
        let c4 = FiniteGroup::cyclic(4);
        let mu = GroupHom::new(c2, c4, vec![0, 2]).unwrap();
        cosk1(&CrossedModule::new(mu, vec![vec![0, 1]; 4]).unwrap()).unwrap()
    }

    #[test]
    fn a_fully_collapsing_instance_compares_trivially() {
        let g = cosk1(&crossed_samples::identity_mu(&FiniteGroup::cyclic(2))).unwrap();
        let u = maps_over(&g, 2);
        assert!(u.u1_bijective());
        assert!(u.u1_coboundaries_bijective());
        assert!(u.u1_cocycles().source().is_trivial());
        assert!(u.u1_cocycles().target().is_trivial());
    }

    #[test]
    fn degree_one_cocycles_match_across_a_nontrivial_boundary_image() {
        let u = maps_over(&boundary_c2_in_c4(), 2);
        assert!(u.u1_bijective());
        assert!(u.u1_coboundaries_bijective());
        assert_eq!(u.u1_cocycles().source().describe(), "Z/2");
        assert_eq!(u.u1_cocycles().target().describe(), "Z/2");
    }

    #[test]
    fn degree_one_roundtrips_on_a_cocycle_table() {
        let u = maps_over(&boundary_c2_in_c4(), 2);
        let z = BarCochain::from_fn(u.an().coeffs(), 1, |tuple| {
            u.an().coeffs().coeffs().element(vec![BigInt::from(tuple[0])])
        })
        .unwrap();
        let c = u.apply_u1(&z).unwrap();
        assert!(u.an().is_cocycle(&c).unwrap());
        assert_eq!(u.invert_u1(&c).unwrap().to_coords(), z.to_coords());
        assert_eq!(u.apply_u1(&u.invert_u1(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn a_trivial_class_map_pulls_back_by_the_identity_matrix() {
        // No degree-2 boundaries here, so positions equal classes and both
        // degree-2 domains have the same flat indexing.
        let g = cosk1(&crossed_samples::c4_squaring()).unwrap();
        let u = maps_over(&g, 2);
        let count = u.an().domain_count(2);
        assert_eq!(u.cm().domain_count(2), count);
        assert_eq!(u.u2_cochains().matrix(), &IntMatrix::identity(count));
        assert!(u.u2_bijective());
        assert!(u.u2_coboundaries_bijective());
    }

    #[test]
    fn both_comparisons_are_bijective_with_a_collapsed_class_map() {
        // The degree-1 entry has order 4 but the segment module part only 2,
        // so the pullback of whole cochain groups is far from surjective;
        // restricted to cocycles it still inverts.
        let u = maps_over(&samples::mixed_sample(), 2);
        assert!(u.cm().domain_count(2) < u.an().domain_count(2));
        assert!(u.u1_bijective());
        assert!(u.u1_coboundaries_bijective());
        assert!(u.u2_bijective());
        assert!(u.u2_coboundaries_bijective());
    }

    #[test]
    fn degree_two_roundtrips_on_representative_cocycles() {
        for g in [cosk1(&crossed_samples::c4_squaring()).unwrap(), samples::mixed_sample()] {
            let u = maps_over(&g, 2);
            let h2 = u.cm().cohomology(2).unwrap();
            for k in 0..h2.group().rank() {
                let z = h2.representative(u.cm(), k).unwrap();
                let c = u.apply_u2(&z).unwrap();
                assert!(u.an().is_cocycle(&c).unwrap());
                assert_eq!(u.invert_u2(&c).unwrap(), z);
                assert_eq!(u.apply_u2(&u.invert_u2(&c).unwrap()).unwrap(), c);
            }
        }
    }
}
