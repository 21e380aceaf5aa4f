use abelian_core::{homology, AbElement, AbHom, FPAbelianGroup, Homology, IntMatrix};
use crossed_core::{homotopy, CrossedModule, HomotopyData};
use group_core::GModule;
use num_bigint::BigInt;

use crate::error::CmError;

/// Highest degree that carries a cochain table. Degree 3 appears only as the
/// index space of the degree-2 differential's codomain.
pub const MAX_TABLE_DEGREE: usize = 2;

/// Cochain complex of a crossed module μ: M_V → G with coefficients in a
/// module M over π₀ = G/Im μ.
///
/// Domains are descending tuples, the rightmost slot least significant in the
/// flat index:
///
/// ```text
///   degree 0:  the one-point set
///   degree 1:  G                                tuple (g)
///   degree 2:  M_V × G × G                      tuple (m, h, g)
///   degree 3:  M_V × M_V × G × M_V × G × G      tuple (p, n, k, m, h, g)
/// ```
///
/// Module elements occurring in group slots are pushed through μ, so `m h`
/// below always means `(mμ)h` in G. The differentials, with `▷` the π₀-action
/// on the coefficients and bars the projection to π₀:
///
/// ```text
///   (g)(c d⁰)             = ()c − ḡ ▷ ()c
///   (m,h,g)(c d¹)         = (m h)c − (h g)c + h̄ ▷ (g)c
///   (p,n,k,m,h,g)(c d²)   = (p, n k, m h)c − (p n, k, h g)c
///                           + (n ^k m, k h, g)c − k̄ ▷ (m,h,g)c
/// ```
#[derive(Clone)]
pub struct CmComplex {
    v: CrossedModule,
    homotopy: HomotopyData,
    coeffs: GModule,
}

/// A slot of a cochain domain tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Module,
    Group,
}

const SLOTS: [&[Slot]; 4] = [
    &[],
    &[Slot::Group],
    &[Slot::Module, Slot::Group, Slot::Group],
    &[Slot::Module, Slot::Module, Slot::Group, Slot::Module, Slot::Group, Slot::Group],
];

impl CmComplex {
    /// Pairs a crossed module with a coefficient module over its π₀.
    pub fn new(v: &CrossedModule, coeffs: &GModule) -> Result<CmComplex, CmError> {
        let h = homotopy(v)?;
        if coeffs.group() != h.pi0() {
            return Err(CmError::CoefficientBase);
        }
        Ok(CmComplex { v: v.clone(), homotopy: h, coeffs: coeffs.clone() })
    }

    #[must_use]
    pub fn crossed(&self) -> &CrossedModule {
        &self.v
    }

    #[must_use]
    pub fn homotopy(&self) -> &HomotopyData {
        &self.homotopy
    }

    #[must_use]
    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    /// The coefficients as a module over G itself, acting through the
    /// projection to π₀.
    pub fn inflation(&self) -> Result<GModule, CmError> {
        let g = self.v.group_part();
        let action = (0..g.order())
            .map(|x| self.coeffs.action_matrix(self.homotopy.projection().apply(x)).clone())
            .collect();
        Ok(GModule::new(g.clone(), self.coeffs.coeffs().clone(), action)?)
    }

    fn radixes(&self, degree: usize) -> Vec<usize> {
        SLOTS[degree]
            .iter()
            .map(|slot| match slot {
                Slot::Module => self.v.module_part().order(),
                Slot::Group => self.v.group_part().order(),
            })
            .collect()
    }

    /// Number of domain tuples in the given degree.
    #[must_use]
    pub fn domain_count(&self, degree: usize) -> usize {
        self.radixes(degree).iter().product()
    }

    /// Flat index of a descending domain tuple.
    #[must_use]
    pub fn tuple_index(&self, degree: usize, tuple: &[usize]) -> usize {
        let radixes = self.radixes(degree);
        assert_eq!(tuple.len(), radixes.len(), "tuple arity mismatch");
        tuple.iter().zip(&radixes).fold(0, |acc, (&t, &r)| {
            assert!(t < r, "slot out of range");
            acc * r + t
        })
    }

    /// Inverse of `tuple_index`.
    #[must_use]
    pub fn tuple_of_index(&self, degree: usize, mut index: usize) -> Vec<usize> {
        let radixes = self.radixes(degree);
        let mut tuple = vec![0usize; radixes.len()];
        for (slot, &r) in tuple.iter_mut().zip(&radixes).rev() {
            *slot = index % r;
            index /= r;
        }
        tuple
    }

    /// The cochain group in a degree, as a power of the coefficient group.
    /// Coordinates are factor-major: factor i of tuple t sits at
    /// `i * domain_count + t`.
    #[must_use]
    pub fn cochain_group(&self, degree: usize) -> FPAbelianGroup {
        FPAbelianGroup::power(self.coeffs.coeffs(), self.domain_count(degree))
    }

    pub fn zero_cochain(&self, degree: usize) -> Result<CmCochain, CmError> {
        self.cochain_from_fn(degree, |_| self.coeffs.coeffs().zero())
    }

    pub fn cochain_from_fn(
        &self,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> AbElement,
    ) -> Result<CmCochain, CmError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(CmError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let radixes = self.radixes(degree);
        let count = self.domain_count(degree);
        let mut values = Vec::with_capacity(count);
        for t in 0..count {
            let tuple = self.tuple_of_index(degree, t);
            let value = f(&tuple);
            assert_eq!(value.group(), self.coeffs.coeffs(), "value outside the coefficients");
            values.push(value);
        }
        Ok(CmCochain { degree, radixes, coeffs: self.coeffs.coeffs().clone(), values })
    }

    /// Rebuilds a cochain from factor-major coordinates.
    pub fn cochain_from_coords(&self, degree: usize, coords: &[BigInt]) -> Result<CmCochain, CmError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(CmError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let count = self.domain_count(degree);
        let rank = self.coeffs.coeffs().rank();
        if coords.len() != rank * count {
            return Err(CmError::CochainMismatch);
        }
        self.cochain_from_fn(degree, |tuple| {
            let t = self.tuple_index(degree, tuple);
            let xs: Vec<BigInt> = (0..rank).map(|i| coords[i * count + t].clone()).collect();
            self.coeffs.coeffs().element(xs)
        })
    }

    /// The differential out of the given degree, as a map of cochain groups.
    pub fn differential(&self, degree: usize) -> Result<AbHom, CmError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(CmError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let g = self.v.group_part();
        let mv = self.v.module_part();
        let mu = self.v.mu();
        let proj = self.homotopy.projection();
        let rank = self.coeffs.coeffs().rank();
        let in_count = self.domain_count(degree);
        let out_count = self.domain_count(degree + 1);
        let mut matrix = IntMatrix::zero(rank * out_count, rank * in_count);

        let identity = IntMatrix::identity(rank);
        let mut accumulate = |out: usize, src: usize, block: &IntMatrix, sign: i64| {
            for i in 0..rank {
                for j in 0..rank {
                    let cur = matrix.at(i * out_count + out, j * in_count + src).clone();
                    matrix.set(
                        i * out_count + out,
                        j * in_count + src,
                        cur + BigInt::from(sign) * block.at(i, j),
                    );
                }
            }
        };

        match degree {
            0 => {
                for gx in 0..g.order() {
                    let out = self.tuple_index(1, &[gx]);
                    accumulate(out, 0, &identity, 1);
                    accumulate(out, 0, self.coeffs.action_matrix(proj.apply(gx)), -1);
                }
            }
            1 => {
                for m in 0..mv.order() {
                    for h in 0..g.order() {
                        for gx in 0..g.order() {
                            let out = self.tuple_index(2, &[m, h, gx]);
                            accumulate(out, g.mul(mu.apply(m), h), &identity, 1);
                            accumulate(out, g.mul(h, gx), &identity, -1);
                            accumulate(out, gx, self.coeffs.action_matrix(proj.apply(h)), 1);
                        }
                    }
                }
            }
            2 => {
                for out in 0..out_count {
                    let tuple = self.tuple_of_index(3, out);
                    let (p, n, k, m, h, gx) = (tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5]);
                    let nk = g.mul(mu.apply(n), k);
                    let mh = g.mul(mu.apply(m), h);
                    accumulate(out, self.tuple_index(2, &[p, nk, mh]), &identity, 1);
                    accumulate(out, self.tuple_index(2, &[mv.mul(p, n), k, g.mul(h, gx)]), &identity, -1);
                    let merged = mv.mul(n, self.v.act(k, m));
                    accumulate(out, self.tuple_index(2, &[merged, g.mul(k, h), gx]), &identity, 1);
                    accumulate(out, self.tuple_index(2, &[m, h, gx]), self.coeffs.action_matrix(proj.apply(k)), -1);
                }
            }
            _ => unreachable!(),
        }
        Ok(AbHom::new(self.cochain_group(degree), self.cochain_group(degree + 1), matrix)?)
    }

    /// Cohomology in degrees 0 to 2.
    pub fn cohomology(&self, degree: usize) -> Result<CmCohomology, CmError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(CmError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let d_out = self.differential(degree)?;
        let d_in = if degree == 0 {
            AbHom::zero(FPAbelianGroup::trivial(), self.cochain_group(0))
        } else {
            self.differential(degree - 1)?
        };
        Ok(CmCohomology { degree, homology: homology(&d_in, &d_out)? })
    }

    /// Applies the differential to a cochain table.
    pub fn differential_of(&self, c: &CmCochain) -> Result<Vec<BigInt>, CmError> {
        let d = self.differential(c.degree())?;
        Ok(d.target().reduce(d.matrix().apply(&c.to_coords())))
    }

    pub fn is_cocycle(&self, c: &CmCochain) -> Result<bool, CmError> {
        Ok(self.differential_of(c)?.iter().all(num_traits::Zero::is_zero))
    }

    /// Pointwise difference of two tables of the same degree.
    pub fn sub(&self, a: &CmCochain, b: &CmCochain) -> Result<CmCochain, CmError> {
        if a.degree() != b.degree() {
            return Err(CmError::CochainMismatch);
        }
        self.cochain_from_fn(a.degree(), |tuple| a.value(tuple).sub(b.value(tuple)))
    }
}

/// A cochain table over a `CmComplex` domain, degree at most 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CmCochain {
    degree: usize,
    radixes: Vec<usize>,
    coeffs: FPAbelianGroup,
    values: Vec<AbElement>,
}

impl CmCochain {
    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn coeffs(&self) -> &FPAbelianGroup {
        &self.coeffs
    }

    fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.radixes.len(), "tuple arity mismatch");
        tuple.iter().zip(&self.radixes).fold(0, |acc, (&t, &r)| {
            assert!(t < r, "slot out of range");
            acc * r + t
        })
    }

    #[must_use]
    pub fn value(&self, tuple: &[usize]) -> &AbElement {
        &self.values[self.index(tuple)]
    }

    pub fn set_value(&mut self, tuple: &[usize], value: AbElement) {
        assert_eq!(value.group(), &self.coeffs, "value outside the coefficients");
        let t = self.index(tuple);
        self.values[t] = value;
    }

    /// Vanishes on the all-identity tuple.
    #[must_use]
    pub fn is_pointed(&self) -> bool {
        self.values[0].is_zero()
    }

    /// Factor-major flat coordinates, matching `CmComplex::cochain_group`.
    #[must_use]
    pub fn to_coords(&self) -> Vec<BigInt> {
        let count = self.values.len();
        let rank = self.coeffs.rank();
        let mut coords = vec![BigInt::from(0); rank * count];
        for (t, v) in self.values.iter().enumerate() {
            for (i, x) in v.coords().iter().enumerate() {
                coords[i * count + t] = x.clone();
            }
        }
        coords
    }
}

/// Cohomology of a crossed module in one degree, with table-level
/// representatives.
pub struct CmCohomology {
    degree: usize,
    pub homology: Homology,
}

impl CmCohomology {
    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.homology.group
    }

    /// Table of the k-th canonical generator's representative cocycle.
    pub fn representative(&self, complex: &CmComplex, k: usize) -> Result<CmCochain, CmError> {
        complex.cochain_from_coords(self.degree, &self.homology.representatives.column(k))
    }

    pub fn class_of(&self, c: &CmCochain) -> Option<AbElement> {
        self.homology.class_of(&c.to_coords())
    }
}
