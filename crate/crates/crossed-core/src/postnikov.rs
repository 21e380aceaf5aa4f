//! The 3-cocycle of a section system and the first Postnikov invariant.

use abelian_core::AbElement;
use group_core::{b3cpt_membership, bar_differential, BarCochain, GModule};
use num_bigint::BigInt;

use crate::crossed::CrossedModule;
use crate::error::CrossedError;
use crate::homotopy::HomotopyData;
use crate::sections::{nonabelian_z2, SectionSystem};

/// A componentwise pointed 3-cocycle on π₀ with coefficients in π₁, in
/// additive coordinates. Construction verifies both properties.
#[derive(Clone)]
pub struct Cpt3Cocycle {
    table: BarCochain,
}

impl Cpt3Cocycle {
    pub fn new(table: BarCochain) -> Result<Cpt3Cocycle, CrossedError> {
        if table.degree() != 3 || !table.is_cpt() {
            return Err(CrossedError::NotCpt);
        }
        let d3 = bar_differential(table.coeffs(), 3)?;
        let image = d3.target().reduce(d3.matrix().apply(&table.to_coords()));
        if !image.iter().all(num_traits::Zero::is_zero) {
            return Err(CrossedError::NotCocycle);
        }
        Ok(Cpt3Cocycle { table })
    }

    /// The zero cocycle over the given coefficients.
    pub fn zero(module: &GModule) -> Cpt3Cocycle {
        Cpt3Cocycle { table: BarCochain::zero(module, 3).expect("degree 3 is in range") }
    }

    #[must_use]
    pub fn table(&self) -> &BarCochain {
        &self.table
    }

    #[must_use]
    pub fn module(&self) -> &GModule {
        self.table.coeffs()
    }

    /// `(r, q, p)z³` in additive π₁ coordinates.
    #[must_use]
    pub fn value(&self, r: usize, q: usize, p: usize) -> &AbElement {
        self.table.value(&[r, q, p])
    }

    fn compatible_with(&self, other: &Cpt3Cocycle) -> bool {
        self.module().group() == other.module().group()
            && self.module().coeffs() == other.module().coeffs()
    }
}

/// The 3-cocycle of a crossed module for a section system: with Z¹ = s0 and
/// Z² = z² followed by s1,
///
/// ```text
/// (r,q,p)z³ = ((r,q)Z² · (rq,p)Z² · ((r,qp)Z²)⁻¹ · (^{rZ¹}((q,p)Z²))⁻¹)
/// ```
///
/// read back through the kernel dictionary into additive π₁ coordinates.
/// Every value is checked to land in ker μ, the result is checked to be a
/// componentwise pointed 3-cocycle.
pub fn z3(
    v: &CrossedModule,
    h: &HomotopyData,
    s: &SectionSystem,
) -> Result<Cpt3Cocycle, CrossedError> {
    let z2 = nonabelian_z2(v, h, s);
    let cap_z2 = |q: usize, p: usize| s.s1(z2.at(q, p));
    let m = v.module_part();
    let pi0 = h.pi0();
    let mut failure = None;
    let table = BarCochain::from_fn(h.module(), 3, |t| {
        let (r, q, p) = (t[0], t[1], t[2]);
        let product = m.mul(
            m.mul(
                m.mul(cap_z2(r, q), cap_z2(pi0.mul(r, q), p)),
                m.inv(cap_z2(r, pi0.mul(q, p))),
            ),
            m.inv(v.act(s.s0(r), cap_z2(q, p))),
        );
        match h.encode_pi1(product) {
            Some(value) => value,
            None => {
                failure.get_or_insert(CrossedError::ValueOutsideKernel { r, q, p });
                h.pi1().zero()
            }
        }
    })?;
    if let Some(err) = failure {
        return Err(err);
    }
    Cpt3Cocycle::new(table)
}

/// The first Postnikov invariant: a representative 3-cocycle computed with
/// the canonical section system, and cohomology-class equality against any
/// other componentwise pointed 3-cocycle.
pub struct Postnikov {
    representative: Cpt3Cocycle,
}

impl Postnikov {
    #[must_use]
    pub fn representative(&self) -> &Cpt3Cocycle {
        &self.representative
    }

    /// Whether the invariant equals the class of `other`, decided by solving
    /// for a 2-cochain whose differential is the difference.
    pub fn class_eq(&self, other: &Cpt3Cocycle) -> Result<bool, CrossedError> {
        if !self.representative.compatible_with(other) {
            return Err(CrossedError::HomotopyMismatch);
        }
        let ours = self.representative.table().to_coords();
        let theirs = other.table().to_coords();
        let diff: Vec<BigInt> =
            ours.iter().zip(theirs.iter()).map(|(a, b)| a - b).collect();
        let module = self.representative.module();
        let cochain = BarCochain::from_coords(module, 3, &diff)?;
        Ok(b3cpt_membership(&cochain)?.is_some())
    }

    /// Whether the invariant vanishes.
    pub fn is_trivial(&self) -> Result<bool, CrossedError> {
        self.class_eq(&Cpt3Cocycle::zero(self.representative.module()))
    }
}

/// Postnikov invariant of a crossed module via the canonical section system.
pub fn postnikov(v: &CrossedModule, h: &HomotopyData) -> Result<Postnikov, CrossedError> {
    let s = crate::sections::canonical_section_system(v, h);
    Ok(Postnikov { representative: z3(v, h, &s)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::samples;
    use crate::homotopy::homotopy;
    use crate::sections::canonical_section_system;
    use group_core::FiniteGroup;

    #[test]
    fn z3_of_the_squaring_example_is_the_generator_at_xxx() {
        let v = samples::c4_squaring();
        let h = homotopy(&v).unwrap();
        let s = canonical_section_system(&v, &h);
        let z = z3(&v, &h, &s).unwrap();
        // z³(x,x,x) = b·^a(b⁻¹) = b² = y.
        let y = h.encode_pi1(2).unwrap();
        assert_eq!(z.value(1, 1, 1), &y);
        assert!(z.value(1, 1, 0).is_zero());
        assert!(z.value(0, 1, 1).is_zero());
    }

    #[test]
    fn squaring_example_has_nontrivial_postnikov_invariant() {
        let v = samples::c4_squaring();
        let h = homotopy(&v).unwrap();
        let k3 = postnikov(&v, &h).unwrap();
        assert!(!k3.is_trivial().unwrap());
        assert!(k3.class_eq(k3.representative()).unwrap());
    }

    #[test]
    fn trivial_mu_has_trivial_postnikov_invariant() {
        let c2 = FiniteGroup::cyclic(2);
        let v = samples::trivial_mu(&c2, &c2);
        let h = homotopy(&v).unwrap();
        let z = z3(&v, &h, &canonical_section_system(&v, &h)).unwrap();
        assert!(z.table().to_coords().iter().all(num_traits::Zero::is_zero));
        assert!(postnikov(&v, &h).unwrap().is_trivial().unwrap());
    }

    #[test]
    fn class_is_independent_of_the_section_system() {
        let v = samples::c4_squaring();
        let h = homotopy(&v).unwrap();
        let alt = crate::sections::SectionSystem::new(
            &v,
            &h,
            vec![0, 3],
            vec![Some(0), None, Some(3), None],
        )
        .unwrap();
        let k3 = postnikov(&v, &h).unwrap();
        let other = z3(&v, &h, &alt).unwrap();
        assert!(k3.class_eq(&other).unwrap());
    }
}
