use abelian_core::AbElement;
use group_core::BarCochain;

use crate::complex::{CmCochain, CmComplex};
use crate::error::CmError;

/// The two faces of a degree-2 table under the Moore decomposition of the
/// domain: `c_M(m) := (m,1,1)c` on the module and `c_G(h,g) := (1,h,g)c` on
/// the group, the latter kept as a bar cochain over the inflated
/// coefficients.
#[derive(Clone)]
pub struct PartsPair {
    module_part: Vec<AbElement>,
    group_part: BarCochain,
}

impl PartsPair {
    #[must_use]
    pub fn module_value(&self, m: usize) -> &AbElement {
        &self.module_part[m]
    }

    /// Group part at (h, g), both in G.
    #[must_use]
    pub fn group_value(&self, h: usize, g: usize) -> &AbElement {
        self.group_part.value(&[h, g])
    }

    #[must_use]
    pub fn module_part(&self) -> &[AbElement] {
        &self.module_part
    }

    #[must_use]
    pub fn group_part(&self) -> &BarCochain {
        &self.group_part
    }
}

impl CmComplex {
    /// Splits a degree-2 table into its module and group parts.
    pub fn parts(&self, c: &CmCochain) -> Result<PartsPair, CmError> {
        if c.degree() != 2 {
            return Err(CmError::DegreeOutOfRange { degree: c.degree(), max: 2 });
        }
        let module_part =
            (0..self.crossed().module_part().order()).map(|m| c.value(&[m, 0, 0]).clone()).collect();
        let inflation = self.inflation()?;
        let group_part = BarCochain::from_fn(&inflation, 2, |t| c.value(&[0, t[0], t[1]]).clone())?;
        Ok(PartsPair { module_part, group_part })
    }

    /// Packs raw part tables into a pair, validating shapes and coefficients.
    pub fn parts_pair(
        &self,
        module_part: Vec<AbElement>,
        group_part: BarCochain,
    ) -> Result<PartsPair, CmError> {
        if module_part.len() != self.crossed().module_part().order()
            || module_part.iter().any(|v| v.group() != self.coeffs().coeffs())
        {
            return Err(CmError::CochainMismatch);
        }
        if group_part.degree() != 2
            || group_part.coeffs().group() != self.crossed().group_part()
            || group_part.coeffs().coeffs() != self.coeffs().coeffs()
        {
            return Err(CmError::CochainMismatch);
        }
        Ok(PartsPair { module_part, group_part })
    }

    /// Rebuilds the table a pair came from:
    /// `(m,h,g)c = (m)c_M − (mμ, h)c_G + (h,g)c_G`. Inverse to `parts` on
    /// 2-cocycles.
    pub fn assemble(&self, p: &PartsPair) -> Result<CmCochain, CmError> {
        let mu = self.crossed().mu();
        self.cochain_from_fn(2, |t| {
            let (m, h, g) = (t[0], t[1], t[2]);
            p.module_value(m).sub(p.group_value(mu.apply(m), h)).add(p.group_value(h, g))
        })
    }

    /// Which of the three part conditions for being the pair of a 2-cocycle
    /// fails first, if any: the group part must be a 2-cocycle over the
    /// inflated coefficients, the module part multiplicative relative to it,
    /// and the two compatible along the action.
    pub fn parts_cocycle_failure(&self, p: &PartsPair) -> Result<Option<CmError>, CmError> {
        let v = self.crossed();
        let mv = v.module_part();
        let g = v.group_part();
        let mu = v.mu();
        let proj = self.homotopy().projection();

        let d2 = group_core::bar_differential(p.group_part.coeffs(), 2)?;
        let image = d2.target().reduce(d2.matrix().apply(&p.group_part.to_coords()));
        if !image.iter().all(num_traits::Zero::is_zero) {
            return Ok(Some(CmError::GroupPartNotCocycle));
        }

        // (n m)c_M = (n)c_M + (m)c_M − (nμ, mμ)c_G
        for n in 0..mv.order() {
            for m in 0..mv.order() {
                let lhs = p.module_value(mv.mul(n, m)).clone();
                let rhs = p
                    .module_value(n)
                    .add(p.module_value(m))
                    .sub(p.group_value(mu.apply(n), mu.apply(m)));
                if lhs != rhs {
                    return Ok(Some(CmError::Multiplicativity { n, m }));
                }
            }
        }

        // (^g m)c_M = ḡ ▷ (m)c_M + ((^g m)μ, g)c_G − (g, mμ)c_G
        for gx in 0..g.order() {
            for m in 0..mv.order() {
                let acted = v.act(gx, m);
                let lhs = p.module_value(acted).clone();
                let rhs = self
                    .coeffs()
                    .act(proj.apply(gx), p.module_value(m))
                    .add(p.group_value(mu.apply(acted), gx))
                    .sub(p.group_value(gx, mu.apply(m)));
                if lhs != rhs {
                    return Ok(Some(CmError::ActionCondition { g: gx, m }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_cocycle_by_parts(&self, p: &PartsPair) -> Result<bool, CmError> {
        Ok(self.parts_cocycle_failure(p)?.is_none())
    }

    /// The degree-1 table with constant value `(1,1,1)z`, whose coboundary
    /// moves z into the pointed cocycles.
    pub fn pointiser(&self, z: &CmCochain) -> Result<CmCochain, CmError> {
        if z.degree() != 2 {
            return Err(CmError::DegreeOutOfRange { degree: z.degree(), max: 2 });
        }
        let corner = z.value(&[0, 0, 0]).clone();
        self.cochain_from_fn(1, |_| corner.clone())
    }

    /// Pointed cocycle in the same class: `z − (pointiser z)d`.
    pub fn pointisation(&self, z: &CmCochain) -> Result<CmCochain, CmError> {
        if !self.is_cocycle(z)? {
            return Err(CmError::NotCocycle);
        }
        let moved = self.differential_of(&self.pointiser(z)?)?;
        let result = self.sub(z, &self.cochain_from_coords(2, &moved)?)?;
        assert!(result.is_pointed(), "pointisation must vanish at the identity tuple");
        Ok(result)
    }
}
