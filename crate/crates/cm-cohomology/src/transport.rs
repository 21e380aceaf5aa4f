use abelian_core::{AbHom, IntMatrix};
use crossed_core::{homotopy, CrossedModule, SectionSystem};
use group_core::GroupHom;
use num_bigint::BigInt;

use crate::complex::{CmCochain, CmComplex};
use crate::error::CmError;
use crate::standard::{st_groups, StandardGroups};

/// A morphism of crossed modules: a group map and a module map that commute
/// with the structure maps and intertwine the actions.
pub struct CmMorphism {
    source: CrossedModule,
    target: CrossedModule,
    group_map: GroupHom,
    module_map: GroupHom,
}

impl CmMorphism {
    pub fn new(
        source: &CrossedModule,
        target: &CrossedModule,
        group_map: GroupHom,
        module_map: GroupHom,
    ) -> Result<CmMorphism, CmError> {
        if group_map.source() != source.group_part()
            || group_map.target() != target.group_part()
            || module_map.source() != source.module_part()
            || module_map.target() != target.module_part()
        {
            return Err(CmError::CochainMismatch);
        }
        for m in 0..source.module_part().order() {
            if target.mu().apply(module_map.apply(m)) != group_map.apply(source.mu().apply(m)) {
                return Err(CmError::NotMorphismStructure { m });
            }
        }
        for g in 0..source.group_part().order() {
            for m in 0..source.module_part().order() {
                if module_map.apply(source.act(g, m))
                    != target.act(group_map.apply(g), module_map.apply(m))
                {
                    return Err(CmError::NotMorphismAction { g, m });
                }
            }
        }
        Ok(CmMorphism {
            source: source.clone(),
            target: target.clone(),
            group_map,
            module_map,
        })
    }

    #[must_use]
    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    #[must_use]
    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    #[must_use]
    pub fn group_map(&self) -> &GroupHom {
        &self.group_map
    }

    #[must_use]
    pub fn module_map(&self) -> &GroupHom {
        &self.module_map
    }

    /// Checks that the morphism identifies both ends of the extensions: the
    /// kernel of μ maps by the identity under the π₁ dictionaries, and the
    /// projections to π₀ agree through the group map.
    pub fn check_extension_equivalence(&self) -> Result<(), CmError> {
        let hs = homotopy(&self.source)?;
        let ht = homotopy(&self.target)?;
        if hs.pi1() != ht.pi1() {
            return Err(CmError::NotEquivalence { reason: "the π₁ presentations differ" });
        }
        if hs.pi0().order() != ht.pi0().order() {
            return Err(CmError::NotEquivalence { reason: "the π₀ orders differ" });
        }
        for g in 0..hs.pi0().order() {
            for h in 0..hs.pi0().order() {
                if hs.pi0().mul(g, h) != ht.pi0().mul(g, h) {
                    return Err(CmError::NotEquivalence { reason: "the π₀ tables differ" });
                }
            }
        }
        for &k in hs.kernel_elements() {
            let image = self.module_map.apply(k);
            let encoded = ht.encode_pi1(image).ok_or(CmError::NotEquivalence {
                reason: "the module map leaves the kernel of μ",
            })?;
            if encoded != hs.encode_pi1(k).expect("kernel element") {
                return Err(CmError::NotEquivalence {
                    reason: "the module map moves π₁ classes",
                });
            }
        }
        for g in 0..self.source.group_part().order() {
            if hs.projection().apply(g) != ht.projection().apply(self.group_map.apply(g)) {
                return Err(CmError::NotEquivalence {
                    reason: "the group map moves π₀ classes",
                });
            }
        }
        // With both ends the identity, finiteness forces the middle maps to
        // be bijections; verify rather than assume.
        if !self.group_map.is_bijective() || !self.module_map.is_bijective() {
            return Err(CmError::NotEquivalence { reason: "the middle maps are not bijective" });
        }
        Ok(())
    }

    /// The section system on the target that matches one on the source:
    /// `s̃⁰ = s⁰ ∘ Grp φ` and `s̃¹ ∘ Grp φ = Mod φ ∘ s¹`. Both equations pin
    /// the candidate down uniquely because an equivalence is bijective.
    pub fn push_sections(&self, s: &SectionSystem) -> Result<SectionSystem, CmError> {
        self.check_extension_equivalence()?;
        let ht = homotopy(&self.target)?;
        let g_src = self.source.group_part();
        let g_tgt = self.target.group_part();

        let s0 = (0..ht.pi0().order()).map(|p| self.group_map.apply(s.s0(p))).collect();
        let mut inverse = vec![0usize; g_tgt.order()];
        for g in 0..g_src.order() {
            inverse[self.group_map.apply(g)] = g;
        }
        let s1 = (0..g_tgt.order())
            .map(|gt| {
                let g = inverse[gt];
                s.s1_checked(g).map(|m| self.module_map.apply(m))
            })
            .collect();
        Ok(SectionSystem::new(&self.target, &ht, s0, s1)?)
    }

    /// Precomposition with the morphism, carrying a degree-2 table on the
    /// target back to the source.
    pub fn transport(
        &self,
        cx_source: &CmComplex,
        z_target: &CmCochain,
    ) -> Result<CmCochain, CmError> {
        cx_source.cochain_from_fn(2, |t| {
            z_target
                .value(&[
                    self.module_map.apply(t[0]),
                    self.group_map.apply(t[1]),
                    self.group_map.apply(t[2]),
                ])
                .clone()
        })
    }
}

/// Verdicts for transporting the standard groups along an equivalence.
pub struct TransportReport {
    pub pushed_sections: SectionSystem,
    pub source_groups: StandardGroups,
    pub target_groups: StandardGroups,
    pub z2_bijective: bool,
    pub b2_bijective: bool,
    pub h2_isomorphism: bool,
}

/// Whether the columns define an isomorphism between the two presented
/// groups.
fn presents_isomorphism(
    from: &abelian_core::FPAbelianGroup,
    to: &abelian_core::FPAbelianGroup,
    columns: &[Vec<BigInt>],
) -> Result<bool, CmError> {
    let matrix = IntMatrix::from_columns(to.rank(), columns);
    let hom = AbHom::new(from.clone(), to.clone(), matrix)?;
    let (coker, _) = hom.cokernel();
    Ok(hom.kernel().group.is_trivial() && coker.is_trivial())
}

/// Transports standard cocycles and coboundaries backwards along an
/// extension equivalence, for the section system pushed forward from the
/// source, and reports whether the restrictions are bijective and the
/// quotient map an isomorphism.
pub fn transport_standard(
    morphism: &CmMorphism,
    coeffs: &group_core::GModule,
    s: &SectionSystem,
) -> Result<TransportReport, CmError> {
    let cx_source = CmComplex::new(morphism.source(), coeffs)?;
    let cx_target = CmComplex::new(morphism.target(), coeffs)?;
    let pushed = morphism.push_sections(s)?;
    let source_groups = st_groups(&cx_source, s)?;
    let target_groups = st_groups(&cx_target, &pushed)?;

    let mut z2_columns = Vec::new();
    for j in 0..target_groups.z2_st.group.rank() {
        let zt = cx_target.cochain_from_coords(2, &target_groups.z2_st.generators.column(j))?;
        let back = morphism.transport(&cx_source, &zt)?;
        match source_groups.z2_st.coordinates_of(&back.to_coords()) {
            Some(coords) => z2_columns.push(coords),
            None => {
                return Ok(TransportReport {
                    pushed_sections: pushed,
                    source_groups,
                    target_groups,
                    z2_bijective: false,
                    b2_bijective: false,
                    h2_isomorphism: false,
                })
            }
        }
    }
    let z2_bijective = presents_isomorphism(
        &target_groups.z2_st.group,
        &source_groups.z2_st.group,
        &z2_columns,
    )?;

    let mut b2_columns = Vec::new();
    let mut b2_bijective = true;
    for j in 0..target_groups.b2_st.group.rank() {
        let bt = cx_target.cochain_from_coords(2, &target_groups.b2_st.generators.column(j))?;
        let back = morphism.transport(&cx_source, &bt)?;
        match source_groups.b2_st.coordinates_of(&back.to_coords()) {
            Some(coords) => b2_columns.push(coords),
            None => b2_bijective = false,
        }
    }
    let b2_bijective = b2_bijective
        && presents_isomorphism(
            &target_groups.b2_st.group,
            &source_groups.b2_st.group,
            &b2_columns,
        )?;

    let mut h2_columns = Vec::new();
    let mut h2_isomorphism = true;
    for k in 0..target_groups.h2_st.group.rank() {
        let rep = target_groups.h2_st.representatives.column(k);
        let zt = cx_target.cochain_from_coords(2, &rep)?;
        let back = morphism.transport(&cx_source, &zt)?;
        match source_groups.h2_st.class_of(&back.to_coords()) {
            Some(class) => h2_columns.push(class.coords().to_vec()),
            None => h2_isomorphism = false,
        }
    }
    let h2_isomorphism = h2_isomorphism
        && presents_isomorphism(
            &target_groups.h2_st.group,
            &source_groups.h2_st.group,
            &h2_columns,
        )?;

    Ok(TransportReport {
        pushed_sections: pushed,
        source_groups,
        target_groups,
        z2_bijective,
        b2_bijective,
        h2_isomorphism,
    })
}
