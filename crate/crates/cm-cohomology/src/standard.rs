use abelian_core::{subquotient_quotient, Homology, IntMatrix, Subquotient};
use crossed_core::{nonabelian_z2, CrossedModule, SectionSystem};
use num_bigint::BigInt;

use crate::complex::{CmCochain, CmComplex};
use crate::error::CmError;

/// The obstruction table of a section system: for h, g in G,
///
/// ```text
///   (h,g)κ := [h[h̄]⁻¹]⁻¹ · ^h [g[ḡ]⁻¹]⁻¹ · [hg[h̄ḡ]⁻¹] · [h̄,ḡ]⁻¹
/// ```
///
/// with `[p] := s⁰(p)`, `[x] := s¹(x)` for x in Im μ and
/// `[q,p] := s¹(z²(q,p))`. Values land in Ker μ and both identity rows are
/// trivial, which construction asserts.
#[derive(Clone)]
pub struct KappaTable {
    order: usize,
    values: Vec<usize>,
}

impl KappaTable {
    /// Value at (h, g) as a module-part element.
    #[must_use]
    pub fn at(&self, h: usize, g: usize) -> usize {
        self.values[h * self.order + g]
    }
}

/// Builds the κ-table of a section system.
pub fn kappa(v: &CrossedModule, s: &SectionSystem) -> Result<KappaTable, CmError> {
    let h = crossed_core::homotopy(v)?;
    let g = v.group_part();
    let mv = v.module_part();
    let proj = h.projection();
    let z2 = nonabelian_z2(v, &h, s);

    let deviation = |x: usize| g.mul(x, g.inv(s.s0(proj.apply(x))));
    let order = g.order();
    let mut values = Vec::with_capacity(order * order);
    for hx in 0..order {
        for gx in 0..order {
            let term1 = mv.inv(s.s1(deviation(hx)));
            let term2 = v.act(hx, mv.inv(s.s1(deviation(gx))));
            let term3 = s.s1(deviation(g.mul(hx, gx)));
            let term4 = mv.inv(s.s1(z2.at(proj.apply(hx), proj.apply(gx))));
            let value = mv.product(&[term1, term2, term3, term4]);
            assert_eq!(v.mu().apply(value), g.identity(), "κ must land in Ker μ");
            assert!(hx != g.identity() || value == mv.identity(), "κ(1, g) must vanish");
            assert!(gx != g.identity() || value == mv.identity(), "κ(h, 1) must vanish");
            values.push(value);
        }
    }
    Ok(KappaTable { order, values })
}

impl CmComplex {
    /// The degree-1 table `(g) ↦ ([g[ḡ]⁻¹], [ḡ], 1)z` whose coboundary moves
    /// a pointed cocycle onto its standardisation.
    pub fn standardiser(&self, z: &CmCochain, s: &SectionSystem) -> Result<CmCochain, CmError> {
        if !self.is_cocycle(z)? {
            return Err(CmError::NotCocycle);
        }
        if !z.is_pointed() {
            return Err(CmError::NotPointed);
        }
        let g = self.crossed().group_part();
        let proj = self.homotopy().projection();
        self.cochain_from_fn(1, |t| {
            let gx = t[0];
            let base = s.s0(proj.apply(gx));
            let m = s.s1(g.mul(gx, g.inv(base)));
            z.value(&[m, base, g.identity()]).clone()
        })
    }

    /// `z − (standardiser z)d`, the standard cocycle in the class of z.
    pub fn standardise(&self, z: &CmCochain, s: &SectionSystem) -> Result<CmCochain, CmError> {
        let moved = self.differential_of(&self.standardiser(z, s)?)?;
        let result = self.sub(z, &self.cochain_from_coords(2, &moved)?)?;
        debug_assert!(self.is_standard(&result, s).unwrap());
        Ok(result)
    }

    /// A pointed 2-cocycle is standard when its module part kills the section
    /// image, `([m])z_M = 0`, and its group part kills the section
    /// deviations, `(g[ḡ]⁻¹, [ḡ])z_G = 0`.
    pub fn is_standard(&self, z: &CmCochain, s: &SectionSystem) -> Result<bool, CmError> {
        if !self.is_cocycle(z)? || !z.is_pointed() {
            return Ok(false);
        }
        let v = self.crossed();
        let g = v.group_part();
        let proj = self.homotopy().projection();
        for m in 0..v.module_part().order() {
            if !z.value(&[s.s1(v.mu().apply(m)), g.identity(), g.identity()]).is_zero() {
                return Ok(false);
            }
        }
        for gx in 0..g.order() {
            let base = s.s0(proj.apply(gx));
            if !z.value(&[0, g.mul(gx, g.inv(base)), base]).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Pointed and standard cocycle and coboundary groups of a complex relative
/// to a section system, with the two quotients.
pub struct StandardGroups {
    pub z2_pt: Subquotient,
    pub b2_pt: Subquotient,
    pub z2_st: Subquotient,
    pub b2_st: Subquotient,
    pub h2_pt: Homology,
    pub h2_st: Homology,
}

/// Selection rows picking the listed degree-2 tuples, one row per coefficient
/// factor and tuple, paired with the factor as modulus.
fn selection_rows(cx: &CmComplex, tuples: &[usize]) -> (IntMatrix, Vec<BigInt>) {
    let count = cx.domain_count(2);
    let rank = cx.coeffs().coeffs().rank();
    let factors = cx.coeffs().coeffs().invariant_factors();
    let mut rows = IntMatrix::zero(tuples.len() * rank, rank * count);
    let mut moduli = Vec::with_capacity(tuples.len() * rank);
    for (r, &t) in tuples.iter().enumerate() {
        for i in 0..rank {
            rows.set(r * rank + i, i * count + t, BigInt::from(1));
            moduli.push(factors[i].clone());
        }
    }
    (rows, moduli)
}

fn stack(a: (IntMatrix, Vec<BigInt>), b: (IntMatrix, Vec<BigInt>)) -> (IntMatrix, Vec<BigInt>) {
    let mut moduli = a.1;
    moduli.extend(b.1);
    (a.0.vstack(&b.0), moduli)
}

/// The degree-2 tuples whose vanishing defines standardness: the section
/// image inside the module slot and the section deviations in the group
/// slots.
fn standard_tuples(cx: &CmComplex, s: &SectionSystem) -> Vec<usize> {
    let v = cx.crossed();
    let g = v.group_part();
    let proj = cx.homotopy().projection();
    let mut tuples = Vec::new();
    for m in 0..v.module_part().order() {
        tuples.push(cx.tuple_index(2, &[s.s1(v.mu().apply(m)), g.identity(), g.identity()]));
    }
    for gx in 0..g.order() {
        let base = s.s0(proj.apply(gx));
        tuples.push(cx.tuple_index(2, &[0, g.mul(gx, g.inv(base)), base]));
    }
    tuples.sort_unstable();
    tuples.dedup();
    tuples
}

/// Computes the pointed and standard groups in degree 2. The standard groups
/// come from linear constraints on top of the cocycle conditions; the same
/// groups are recomputed through the standardisation projector and both
/// descriptions are asserted to agree.
pub fn st_groups(cx: &CmComplex, s: &SectionSystem) -> Result<StandardGroups, CmError> {
    let c2 = cx.cochain_group(2);
    let d1 = cx.differential(1)?;
    let d2 = cx.differential(2)?;
    let moduli3: Vec<BigInt> = cx.cochain_group(3).invariant_factors().to_vec();

    let cocycle = (d2.matrix().clone(), moduli3);
    let pointed = selection_rows(cx, &[0]);
    let st_rows = selection_rows(cx, &standard_tuples(cx, s));

    let z2_pt_system = stack(cocycle.clone(), pointed.clone());
    let z2_pt = Subquotient::from_lattice(
        &abelian_core::congruence_kernel(&z2_pt_system.0, &z2_pt_system.1),
        &c2,
    );
    let z2_st_system = stack(z2_pt_system, st_rows.clone());
    let z2_st = Subquotient::from_lattice(
        &abelian_core::congruence_kernel(&z2_st_system.0, &z2_st_system.1),
        &c2,
    );

    // Pointed degree-1 tables: identity value zero.
    let c1_pointed = {
        let count = cx.domain_count(1);
        let rank = cx.coeffs().coeffs().rank();
        let factors = cx.coeffs().coeffs().invariant_factors();
        let mut rows = IntMatrix::zero(rank, rank * count);
        let mut moduli = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.set(i, i * count, BigInt::from(1));
            moduli.push(factors[i].clone());
        }
        abelian_core::congruence_kernel(&rows, &moduli)
    };
    let b2_pt = Subquotient::from_lattice(&d1.matrix().mul(&c1_pointed), &c2);

    // Coboundaries are cocycles already, so a standard coboundary only needs
    // the pointedness and standardness rows after applying d.
    let constraint = stack(pointed, st_rows);
    let through_d1 = constraint.0.mul(d1.matrix());
    let preimage = abelian_core::congruence_kernel(&through_d1, &constraint.1);
    let b2_st = Subquotient::from_lattice(&d1.matrix().mul(&preimage), &c2);

    let h2_pt = subquotient_quotient(z2_pt.clone(), b2_pt.clone())?;
    let h2_st = subquotient_quotient(z2_st.clone(), b2_st.clone())?;

    let groups = StandardGroups { z2_pt, b2_pt, z2_st, b2_st, h2_pt, h2_st };
    cross_check_projector_route(cx, s, &groups)?;
    Ok(groups)
}

/// Recomputes the standard groups as images of the standardisation projector
/// and asserts they match the constraint description.
fn cross_check_projector_route(
    cx: &CmComplex,
    s: &SectionSystem,
    groups: &StandardGroups,
) -> Result<(), CmError> {
    let c2 = cx.cochain_group(2);

    let mut images: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..groups.z2_pt.group.rank() {
        let z = cx.cochain_from_coords(2, &groups.z2_pt.generators.column(j))?;
        let st = cx.standardise(&z, s)?;
        let st_coords = st.to_coords();
        assert!(groups.z2_st.contains(&st_coords), "projector image must satisfy the constraints");
        assert!(
            groups.b2_pt.contains(&cx.sub(&z, &st)?.to_coords()),
            "standardisation must stay in the pointed class"
        );
        images.push(st_coords);
    }
    let alt_z2_st =
        Subquotient::from_lattice(&IntMatrix::from_columns(c2.rank(), &images), &c2);
    assert_eq!(
        alt_z2_st.group.invariant_factors(),
        groups.z2_st.group.invariant_factors(),
        "the two standard cocycle descriptions disagree"
    );
    for j in 0..groups.z2_st.group.rank() {
        let gen = groups.z2_st.generators.column(j);
        assert!(alt_z2_st.contains(&gen));
        let z = cx.cochain_from_coords(2, &gen)?;
        assert_eq!(cx.standardise(&z, s)?, z, "standard cocycles are projector fixed points");
    }

    let mut images: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..groups.b2_pt.group.rank() {
        let b = cx.cochain_from_coords(2, &groups.b2_pt.generators.column(j))?;
        images.push(cx.standardise(&b, s)?.to_coords());
    }
    let alt_b2_st =
        Subquotient::from_lattice(&IntMatrix::from_columns(c2.rank(), &images), &c2);
    assert_eq!(
        alt_b2_st.group.invariant_factors(),
        groups.b2_st.group.invariant_factors(),
        "the two standard coboundary descriptions disagree"
    );
    for j in 0..groups.b2_st.group.rank() {
        assert!(alt_b2_st.contains(&groups.b2_st.generators.column(j)));
    }
    Ok(())
}
