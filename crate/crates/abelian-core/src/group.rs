//! Finitely generated abelian groups in invariant-factor form and their
//! elements.
//!
//! The invariant-factor form is the single canonical shape used everywhere:
//! finite factors ascending by divisibility, then zeros for the free part.
//! Two groups are isomorphic exactly when their factor lists are equal, so
//! isomorphism-type comparison is plain equality.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::AbelianError;
use crate::matrix::IntMatrix;

/// A finitely generated abelian group `Z/d_1 ⊕ … ⊕ Z/d_r`, where a factor 0
/// encodes an infinite cyclic summand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FPAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl std::fmt::Debug for FPAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FPAbelianGroup({})", self.describe())
    }
}

impl FPAbelianGroup {
    /// Validates and wraps an invariant-factor list: factors are 0 or at least
    /// 2, nonzero factors ascend by divisibility, zeros come last.
    pub fn new(invariant_factors: Vec<BigInt>) -> Result<Self, AbelianError> {
        let mut seen_zero = false;
        let mut prev: Option<&BigInt> = None;
        for d in &invariant_factors {
            if d.is_negative() || d.is_one() {
                return Err(AbelianError::NotCanonical);
            }
            if d.is_zero() {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return Err(AbelianError::NotCanonical);
            }
            if let Some(p) = prev {
                if !(d % p).is_zero() {
                    return Err(AbelianError::NotCanonical);
                }
            }
            prev = Some(d);
        }
        Ok(FPAbelianGroup { invariant_factors })
    }

    #[must_use]
    pub fn trivial() -> Self {
        FPAbelianGroup { invariant_factors: Vec::new() }
    }

    /// `Z/n` for `n >= 2`, `Z` for `n = 0`, the trivial group for `n = 1`.
    #[must_use]
    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            FPAbelianGroup::trivial()
        } else {
            FPAbelianGroup { invariant_factors: vec![BigInt::from(n)] }
        }
    }

    /// Direct sum of `copies` copies of `base`, laid out factor-major: the
    /// coordinate of copy `t`, factor `i` sits at position `i * copies + t`.
    /// This layout keeps the factor list canonical for any base.
    #[must_use]
    pub fn power(base: &FPAbelianGroup, copies: usize) -> Self {
        let mut factors = Vec::with_capacity(base.rank() * copies);
        for d in &base.invariant_factors {
            for _ in 0..copies {
                factors.push(d.clone());
            }
        }
        FPAbelianGroup { invariant_factors: factors }
    }

    #[must_use]
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Number of generators in the canonical presentation.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    #[must_use]
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    #[must_use]
    pub fn is_finite(&self) -> bool {
        self.invariant_factors.iter().all(|d| !d.is_zero())
    }

    /// Group order; `None` for infinite groups.
    #[must_use]
    pub fn order(&self) -> Option<BigUint> {
        let mut acc = BigUint::one();
        for d in &self.invariant_factors {
            if d.is_zero() {
                return None;
            }
            acc *= d.magnitude();
        }
        Some(acc)
    }

    /// Relation matrix `diag(d_1, …, d_r)` of the canonical presentation.
    #[must_use]
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.invariant_factors)
    }

    /// Human-readable form, e.g. `Z/2 ⊕ Z/4 ⊕ Z` or `0`.
    #[must_use]
    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        self.invariant_factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }

    /// Reduces a raw coordinate vector componentwise into `[0, d_i)` (free
    /// coordinates are left untouched).
    #[must_use]
    pub fn reduce(&self, mut coords: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.rank(), "coordinate length mismatch");
        for (c, d) in coords.iter_mut().zip(&self.invariant_factors) {
            if !d.is_zero() {
                *c = num_integer::Integer::mod_floor(&*c, d);
            }
        }
        coords
    }

    /// Element with the given coordinates, reduced into canonical range.
    #[must_use]
    pub fn element(&self, coords: Vec<BigInt>) -> AbElement {
        AbElement { group: self.clone(), coords: self.reduce(coords) }
    }

    #[must_use]
    pub fn zero(&self) -> AbElement {
        AbElement { group: self.clone(), coords: vec![BigInt::zero(); self.rank()] }
    }

    /// All elements in lexicographic coordinate order, identity first.
    pub fn enumerate(&self) -> Result<Vec<AbElement>, AbelianError> {
        if !self.is_finite() {
            return Err(AbelianError::InfiniteGroup);
        }
        let mut out = Vec::new();
        let mut coords = vec![BigInt::zero(); self.rank()];
        'outer: loop {
            out.push(AbElement { group: self.clone(), coords: coords.clone() });
            // Odometer on the last coordinate, so the order is lexicographic.
            for i in (0..self.rank()).rev() {
                coords[i] += 1;
                if coords[i] < self.invariant_factors[i] {
                    continue 'outer;
                }
                coords[i] = BigInt::zero();
            }
            break;
        }
        Ok(out)
    }
}

/// An element of an [`FPAbelianGroup`], coordinates reduced componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbElement {
    group: FPAbelianGroup,
    coords: Vec<BigInt>,
}

impl std::fmt::Debug for AbElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl AbElement {
    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.group
    }

    #[must_use]
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    #[must_use]
    pub fn add(&self, other: &AbElement) -> AbElement {
        assert_eq!(self.group, other.group, "elements of different groups");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.element(coords)
    }

    #[must_use]
    pub fn neg(&self) -> AbElement {
        let coords = self.coords.iter().map(|a| -a).collect();
        self.group.element(coords)
    }

    #[must_use]
    pub fn sub(&self, other: &AbElement) -> AbElement {
        self.add(&other.neg())
    }

    #[must_use]
    pub fn scale(&self, n: &BigInt) -> AbElement {
        let coords = self.coords.iter().map(|a| a * n).collect();
        self.group.element(coords)
    }
}
