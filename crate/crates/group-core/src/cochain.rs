//! Cochains on a finite group with module coefficients.
//!
//! An n-cochain assigns a coefficient element to every n-tuple of group
//! elements. Tuples are written in descending position order
//! `(g_{n-1}, …, g_0)` and flattened with `g_0` as the least significant
//! digit, so the tuple index is `Σ g_i · orderⁱ`. The flat coordinate vector
//! of a cochain lists, for each coefficient generator `i`, the values at all
//! tuples: coordinate `(tuple t, generator i)` sits at `i · orderⁿ + t`,
//! matching the layout of `FPAbelianGroup::power`.

use abelian_core::{AbElement, FPAbelianGroup};
use num_bigint::BigInt;

use crate::error::GroupError;
use crate::module::GModule;

/// Highest degree with a full cochain table; degree 4 exists only as the
/// codomain of the degree-3 differential.
pub const MAX_DEGREE: usize = 3;

/// A cochain of degree ≤ 3 as a dense value table.
#[derive(Debug, Clone)]
pub struct BarCochain {
    degree: usize,
    coeffs: GModule,
    values: Vec<AbElement>,
}

impl BarCochain {
    /// The zero cochain.
    pub fn zero(coeffs: &GModule, degree: usize) -> Result<BarCochain, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeOutOfRange { degree, max: MAX_DEGREE });
        }
        let count = coeffs.group().order().pow(degree as u32);
        let values = vec![coeffs.coeffs().zero(); count];
        Ok(BarCochain { degree, coeffs: coeffs.clone(), values })
    }

    /// Builds a cochain from a value function on descending tuples.
    pub fn from_fn(
        coeffs: &GModule,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> AbElement,
    ) -> Result<BarCochain, GroupError> {
        let mut cochain = BarCochain::zero(coeffs, degree)?;
        let count = cochain.values.len();
        for t in 0..count {
            let tuple = tuple_from_index(coeffs.group().order(), degree, t);
            let value = f(&tuple);
            if value.group() != coeffs.coeffs() {
                return Err(GroupError::CoefficientMismatch);
            }
            cochain.values[t] = value;
        }
        Ok(cochain)
    }

    /// Rebuilds a cochain from its flat coordinate vector.
    pub fn from_coords(
        coeffs: &GModule,
        degree: usize,
        coords: &[BigInt],
    ) -> Result<BarCochain, GroupError> {
        let mut cochain = BarCochain::zero(coeffs, degree)?;
        let count = cochain.values.len();
        let rank = coeffs.coeffs().rank();
        if coords.len() != count * rank {
            return Err(GroupError::CochainLengthMismatch {
                len: coords.len(),
                expected: count * rank,
            });
        }
        for t in 0..count {
            let value = (0..rank).map(|i| coords[i * count + t].clone()).collect();
            cochain.values[t] = coeffs.coeffs().element(value);
        }
        Ok(cochain)
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    /// Value at a descending tuple `(g_{n-1}, …, g_0)`.
    #[must_use]
    pub fn value(&self, tuple: &[usize]) -> &AbElement {
        assert_eq!(tuple.len(), self.degree);
        &self.values[tuple_index(self.coeffs.group().order(), tuple)]
    }

    pub fn set_value(&mut self, tuple: &[usize], value: AbElement) -> Result<(), GroupError> {
        if value.group() != self.coeffs.coeffs() {
            return Err(GroupError::CoefficientMismatch);
        }
        assert_eq!(tuple.len(), self.degree);
        self.values[tuple_index(self.coeffs.group().order(), tuple)] = value;
        Ok(())
    }

    /// Flat coordinates in the layout of `FPAbelianGroup::power`.
    #[must_use]
    pub fn to_coords(&self) -> Vec<BigInt> {
        let count = self.values.len();
        let rank = self.coeffs.coeffs().rank();
        let mut coords = vec![BigInt::from(0); count * rank];
        for (t, v) in self.values.iter().enumerate() {
            for (i, c) in v.coords().iter().enumerate() {
                coords[i * count + t] = c.clone();
            }
        }
        coords
    }

    /// Componentwise pointed: zero whenever any argument is the identity.
    #[must_use]
    pub fn is_cpt(&self) -> bool {
        let order = self.coeffs.group().order();
        self.values.iter().enumerate().all(|(t, v)| {
            let tuple = tuple_from_index(order, self.degree, t);
            !tuple.contains(&0) || v.is_zero()
        })
    }

    /// Pointed: zero on the all-identity tuple.
    #[must_use]
    pub fn is_pointed(&self) -> bool {
        self.values[0].is_zero()
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let order = self.coeffs.group().order();
        (0..self.values.len()).map(move |t| tuple_from_index(order, self.degree, t))
    }
}

/// Index of a descending tuple; `g_0` is the least significant digit.
#[must_use]
pub fn tuple_index(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

/// Descending tuple `(g_{n-1}, …, g_0)` at a given index.
#[must_use]
pub fn tuple_from_index(order: usize, degree: usize, mut index: usize) -> Vec<usize> {
    let mut tuple = vec![0usize; degree];
    for slot in (0..degree).rev() {
        tuple[slot] = index % order;
        index /= order;
    }
    tuple
}

/// The cochain group Cⁿ as a power of the coefficient group, one copy per
/// n-tuple.
#[must_use]
pub fn cochain_group(coeffs: &GModule, degree: usize) -> FPAbelianGroup {
    FPAbelianGroup::power(coeffs.coeffs(), coeffs.group().order().pow(degree as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn module() -> GModule {
        GModule::trivial(FiniteGroup::cyclic(3), FPAbelianGroup::cyclic(4))
    }

    #[test]
    fn tuple_indexing_round_trips() {
        for t in 0..27 {
            let tuple = tuple_from_index(3, 3, t);
            assert_eq!(tuple_index(3, &tuple), t);
        }
        assert_eq!(tuple_index(3, &[2, 1]), 7);
        assert_eq!(tuple_from_index(3, 2, 7), vec![2, 1]);
    }

    #[test]
    fn coords_round_trip() {
        let m = module();
        let c = BarCochain::from_fn(&m, 2, |t| {
            m.coeffs().element(vec![BigInt::from((t[1] + 2 * t[0]) as i64)])
        })
        .unwrap();
        let back = BarCochain::from_coords(&m, 2, &c.to_coords()).unwrap();
        for tuple in c.tuples() {
            assert_eq!(c.value(&tuple), back.value(&tuple));
        }
    }

    #[test]
    fn cpt_and_pointed_predicates() {
        let m = module();
        let mut c = BarCochain::zero(&m, 2).unwrap();
        assert!(c.is_cpt() && c.is_pointed());
        c.set_value(&[1, 0], m.coeffs().element(vec![BigInt::from(1)])).unwrap();
        assert!(!c.is_cpt());
        assert!(c.is_pointed());
    }

    #[test]
    fn degree_zero_has_a_single_empty_tuple() {
        let m = module();
        let c = BarCochain::zero(&m, 0).unwrap();
        assert_eq!(c.to_coords().len(), 1);
        assert!(c.value(&[]).is_zero());
    }
}
