use abelian_core::{
    congruence_solve, pullback, subquotient_quotient, AbElement, AbHom, FPAbelianGroup, Homology,
    IntMatrix, Subquotient,
};
use crossed_core::{postnikov, Cpt3Cocycle, CrossedModule, SectionSystem};
use group_core::{
    bar_differential, cpt_cohomology, cpt_subgroup, equivariant_hom_group, BarCochain,
    CptCohomology, EquivariantHoms, GModule,
};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{CmCochain, CmComplex};
use crate::error::CmError;
use crate::standard::KappaTable;

/// A cocycle pair on the Eilenberg-MacLane side: an equivariant homomorphism
/// z₁: π₁ → M and a componentwise pointed 2-cochain c₀ over π₀ with
/// `z³ ∘ z₁ = c₀ d` on the nose.
#[derive(Clone)]
pub struct EmCocycle {
    z1: AbHom,
    c0: BarCochain,
}

impl EmCocycle {
    #[must_use]
    pub fn hom(&self) -> &AbHom {
        &self.z1
    }

    #[must_use]
    pub fn cochain(&self) -> &BarCochain {
        &self.c0
    }
}

impl PartialEq for EmCocycle {
    fn eq(&self, other: &Self) -> bool {
        self.z1 == other.z1 && self.c0.to_coords() == other.c0.to_coords()
    }
}

/// Cocycle, coboundary and quotient data of the Eilenberg-MacLane description
/// attached to (π₀ acting on π₁, a componentwise pointed 3-cocycle, M).
///
/// The cocycle group is the fibre product of `φ ↦ z³ ∘ φ` and the full bar
/// differential out of the componentwise pointed 2-cochains; the coboundary
/// group is `{0} × B²cpt`.
pub struct EmGroups {
    pi1: GModule,
    coeffs: GModule,
    z3: Cpt3Cocycle,
    homs: EquivariantHoms,
    cpt2: CptCohomology,
    group: FPAbelianGroup,
    proj_hom: AbHom,
    proj_cpt: AbHom,
    b2: Subquotient,
    h2: Homology,
}

/// The leg `φ ↦ z³ ∘ φ` out of the equivariant homomorphism group into the
/// full 3-cochains over π₀.
fn z3_leg(
    homs: &EquivariantHoms,
    z3: &Cpt3Cocycle,
    coeffs: &GModule,
) -> Result<AbHom, CmError> {
    let c3 = group_core::cochain_group(coeffs, 3);
    let mut columns = Vec::with_capacity(homs.group().rank());
    for k in 0..homs.group().rank() {
        let gen = homs.generator_hom(k);
        let composite = BarCochain::from_fn(coeffs, 3, |t| gen.apply(z3.table().value(t)))?;
        columns.push(composite.to_coords());
    }
    let matrix = IntMatrix::from_columns(c3.rank(), &columns);
    Ok(AbHom::new(homs.group().clone(), c3, matrix)?)
}

pub fn em_groups(
    pi1: &GModule,
    z3: &Cpt3Cocycle,
    coeffs: &GModule,
) -> Result<EmGroups, CmError> {
    if pi1.group() != coeffs.group() {
        return Err(CmError::SideMismatch);
    }
    if z3.module().coeffs() != pi1.coeffs() || z3.module().group() != pi1.group() {
        return Err(CmError::SideMismatch);
    }
    let homs = equivariant_hom_group(pi1, coeffs)?;
    let cpt2 = cpt_cohomology(coeffs, 2)?;

    let f = z3_leg(&homs, z3, coeffs)?;
    let g = cpt_subgroup(coeffs, 2).then(&bar_differential(coeffs, 2)?)?;
    let (group, proj_hom, proj_cpt) = pullback(&f, &g)?;

    // {0} × B²cpt inside the fibre product: the joint projection embeds the
    // pullback, so each generator of B²cpt lifts to a unique element.
    let joint = proj_hom.matrix().vstack(proj_cpt.matrix());
    let mut joint_moduli = homs.group().invariant_factors().to_vec();
    joint_moduli.extend_from_slice(g.source().invariant_factors());
    let b2cpt = cpt2.coboundaries();
    let mut lifts = Vec::with_capacity(b2cpt.group.rank());
    for j in 0..b2cpt.group.rank() {
        let mut rhs = vec![BigInt::zero(); homs.group().rank()];
        rhs.extend(b2cpt.generators.column(j));
        let lift = congruence_solve(&joint, &joint_moduli, &rhs)
            .expect("componentwise pointed coboundaries satisfy the fibre condition");
        lifts.push(lift);
    }
    let b2 = Subquotient::from_lattice(&IntMatrix::from_columns(group.rank(), &lifts), &group);
    let h2 = subquotient_quotient(Subquotient::full(&group), b2.clone())?;

    Ok(EmGroups {
        pi1: pi1.clone(),
        coeffs: coeffs.clone(),
        z3: z3.clone(),
        homs,
        cpt2,
        group,
        proj_hom,
        proj_cpt,
        b2,
        h2,
    })
}

impl EmGroups {
    /// The cocycle group, presented as the fibre product.
    #[must_use]
    pub fn cocycle_group(&self) -> &FPAbelianGroup {
        &self.group
    }

    #[must_use]
    pub fn coboundaries(&self) -> &Subquotient {
        &self.b2
    }

    #[must_use]
    pub fn h2(&self) -> &Homology {
        &self.h2
    }

    #[must_use]
    pub fn homs(&self) -> &EquivariantHoms {
        &self.homs
    }

    #[must_use]
    pub fn cpt2(&self) -> &CptCohomology {
        &self.cpt2
    }

    /// Validates a pair as a cocycle: z₁ equivariant, c₀ componentwise
    /// pointed and the compatibility equation exact.
    pub fn element(&self, z1: AbHom, c0: BarCochain) -> Result<EmCocycle, CmError> {
        if self.homs.encode(&z1).is_none() {
            return Err(CmError::NotEquivariant);
        }
        let c0_coords = self.cpt2.cpt_coords(&c0).ok_or(CmError::CochainMismatch)?;
        let composite = BarCochain::from_fn(&self.coeffs, 3, |t| z1.apply(self.z3.table().value(t)))?;
        let d = bar_differential(&self.coeffs, 2)?;
        let embedded = cpt_subgroup(&self.coeffs, 2).then(&d)?;
        let dc = embedded.target().reduce(embedded.matrix().apply(&c0_coords));
        if composite.to_coords() != dc {
            return Err(CmError::IncompatiblePair);
        }
        Ok(EmCocycle { z1, c0 })
    }

    /// Coordinates of a cocycle pair in the fibre product presentation.
    pub fn coords_of(&self, e: &EmCocycle) -> Result<AbElement, CmError> {
        let z1_coords =
            self.homs.encode(&e.z1).ok_or(CmError::NotEquivariant)?.coords().to_vec();
        let c0_coords = self.cpt2.cpt_coords(&e.c0).ok_or(CmError::CochainMismatch)?;
        let joint = self.proj_hom.matrix().vstack(self.proj_cpt.matrix());
        let mut joint_moduli = self.homs.group().invariant_factors().to_vec();
        joint_moduli.extend_from_slice(self.proj_cpt.target().invariant_factors());
        let mut rhs = z1_coords;
        rhs.extend(c0_coords);
        let coords =
            congruence_solve(&joint, &joint_moduli, &rhs).ok_or(CmError::IncompatiblePair)?;
        Ok(self.group.element(coords))
    }

    /// The cocycle pair at given fibre product coordinates.
    #[must_use]
    pub fn cocycle_at(&self, x: &AbElement) -> EmCocycle {
        let z1 = self.homs.decode(&self.proj_hom.apply(x));
        let c0 = self.cpt2.cochain_from_cpt_coords(&self.proj_cpt.apply(x).coords().to_vec());
        EmCocycle { z1, c0 }
    }

    pub fn class_of(&self, e: &EmCocycle) -> Result<AbElement, CmError> {
        let coords = self.coords_of(e)?;
        Ok(self.h2.class_of(coords.coords()).expect("full cocycle group"))
    }

    #[must_use]
    pub fn pi1(&self) -> &GModule {
        &self.pi1
    }

    #[must_use]
    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }
}

/// Φ: reads the cocycle pair off a standard 2-cocycle, `z₁ = (・ι)z_M` and
/// `c₀ = (s⁰ × s⁰)z_G`.
pub fn phi(
    cx: &CmComplex,
    s: &SectionSystem,
    em: &EmGroups,
    z: &CmCochain,
) -> Result<EmCocycle, CmError> {
    if !cx.is_standard(z, s)? {
        return Err(CmError::NotStandard);
    }
    let h = cx.homotopy();
    let pi1 = h.pi1().clone();
    let mut columns = Vec::with_capacity(pi1.rank());
    for k in 0..pi1.rank() {
        let mut unit = vec![BigInt::zero(); pi1.rank()];
        unit[k] = BigInt::from(1);
        let m = h.decode_pi1(&pi1.element(unit));
        columns.push(z.value(&[m, 0, 0]).coords().to_vec());
    }
    let z1 = AbHom::new(
        pi1,
        cx.coeffs().coeffs().clone(),
        IntMatrix::from_columns(cx.coeffs().coeffs().rank(), &columns),
    )?;
    let c0 = BarCochain::from_fn(cx.coeffs(), 2, |t| {
        z.value(&[0, s.s0(t[0]), s.s0(t[1])]).clone()
    })?;
    em.element(z1, c0)
}

/// Ψ: rebuilds the standard 2-cocycle of a pair through the κ-table,
///
/// ```text
///   (m,h,g) ↦ z₁((m[m]⁻¹ ((m,h)κ)⁻¹ (h,g)κ) ι⁻¹) + (h̄,ḡ)c₀.
/// ```
pub fn psi(
    cx: &CmComplex,
    s: &SectionSystem,
    k: &KappaTable,
    e: &EmCocycle,
) -> Result<CmCochain, CmError> {
    let v = cx.crossed();
    let mv = v.module_part();
    let mu = v.mu();
    let h = cx.homotopy();
    let proj = h.projection();
    let result = cx.cochain_from_fn(2, |t| {
        let (m, hx, gx) = (t[0], t[1], t[2]);
        let deviation = mv.mul(m, mv.inv(s.s1(mu.apply(m))));
        let w = mv.product(&[deviation, mv.inv(k.at(mu.apply(m), hx)), k.at(hx, gx)]);
        let kernel_elt = h.encode_pi1(w).expect("κ corrections land in the kernel");
        e.z1.apply(&kernel_elt).add(e.c0.value(&[proj.apply(hx), proj.apply(gx)]))
    })?;
    debug_assert!(cx.is_standard(&result, s)?);
    Ok(result)
}

/// Both sides of the comparison for one instance: the crossed module
/// cohomology computed from its own complex, and the Eilenberg-MacLane group
/// computed from (π₀, π₁, first Postnikov invariant, M) alone.
pub struct EmComparison {
    pub h2_cm: FPAbelianGroup,
    pub h2_em: FPAbelianGroup,
    pub agree: bool,
}

pub fn em_h2(v: &CrossedModule, coeffs: &GModule) -> Result<EmComparison, CmError> {
    let cx = CmComplex::new(v, coeffs)?;
    let h2_cm = cx.cohomology(2)?.group().clone();
    let h = cx.homotopy();
    let z3 = postnikov(v, h)?;
    let em = em_groups(h.module(), z3.representative(), coeffs)?;
    let h2_em = em.h2().group.clone();
    let agree = h2_cm.invariant_factors() == h2_em.invariant_factors();
    Ok(EmComparison { h2_cm, h2_em, agree })
}
