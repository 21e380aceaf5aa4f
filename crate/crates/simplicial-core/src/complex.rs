//! Cochain complex of a validated instance, built on its Moore data, with
//! coefficients in a module over π₀.
//!
//! Domains are descending tuples; degree-1 and degree-2 entry slots carry
//! position coordinates, level-0 slots carry raw element indices. The
//! rightmost slot is least significant in the flat index:
//!
//! ```text
//!   degree 0:  the one-point set
//!   degree 1:  G₀                                        tuple (g)
//!   degree 2:  N₁ × G₀ × G₀                              tuple (x, h, g)
//!   degree 3:  N₂ × N₁ × N₁ × G₀ × N₁ × G₀ × G₀          tuple (w, k, y, j, x, h, g)
//! ```
//!
//! Entry elements occurring in lower slots are pushed through the boundary,
//! so `x h` below always means `(x∂)h` in G₀ and `w k` means `(w∂)k` in N₁.
//! With `▷` the π₀-action on the coefficients, bars the projection to π₀,
//! and `^j x` the conjugate of `x` by `j s₀`, the differentials are:
//!
//! ```text
//!   (g)(c d⁰)              = ()c − ḡ ▷ ()c
//!   (x,h,g)(c d¹)          = (x h)c − (h g)c + h̄ ▷ (g)c
//!   (w,k,y,j,x,h,g)(c d²)  = (w k, y j, x h)c − (k y, j, h g)c
//!                            + (y ^jx, j h, g)c − j̄ ▷ (x,h,g)c
//! ```

use abelian_core::{homology, AbElement, AbHom, FPAbelianGroup, Homology, IntMatrix};
use crossed_core::{homotopy, HomotopyData};
use group_core::GModule;
use num_bigint::BigInt;

use crate::error::SimplicialError;
use crate::moore::{truncate1, CrossedModuleSegment};
use crate::tsg::TruncatedSimplicialGroup;

/// Highest degree that carries a cochain table. Degree 3 appears only as the
/// index space of the degree-2 differential's codomain.
pub const MAX_TABLE_DEGREE: usize = 2;

/// A slot of a cochain domain tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    /// The degree-2 Moore entry, in position coordinates.
    Two,
    /// The degree-1 Moore entry, in position coordinates.
    One,
    /// The level-0 group.
    Zero,
}

const SLOTS: [&[Slot]; 4] = [
    &[],
    &[Slot::Zero],
    &[Slot::One, Slot::Zero, Slot::Zero],
    &[Slot::Two, Slot::One, Slot::One, Slot::Zero, Slot::One, Slot::Zero, Slot::Zero],
];

/// The complex together with the truncation data it is read off from.
#[derive(Clone)]
pub struct AnalysedComplex {
    tsg: TruncatedSimplicialGroup,
    segment: CrossedModuleSegment,
    homotopy: HomotopyData,
    coeffs: GModule,
}

impl AnalysedComplex {
    /// Pairs a validated instance with a coefficient module over its π₀.
    pub fn new(
        g: &TruncatedSimplicialGroup,
        coeffs: &GModule,
    ) -> Result<AnalysedComplex, SimplicialError> {
        let segment = truncate1(g)?;
        let h = homotopy(segment.crossed())?;
        if coeffs.group() != h.pi0() {
            return Err(SimplicialError::CoefficientBase);
        }
        Ok(AnalysedComplex {
            tsg: g.clone(),
            segment,
            homotopy: h,
            coeffs: coeffs.clone(),
        })
    }

    #[must_use]
    pub fn tsg(&self) -> &TruncatedSimplicialGroup {
        &self.tsg
    }

    /// The crossed module on levels ≤ 1 with its dictionaries.
    #[must_use]
    pub fn segment(&self) -> &CrossedModuleSegment {
        &self.segment
    }

    #[must_use]
    pub fn homotopy(&self) -> &HomotopyData {
        &self.homotopy
    }

    #[must_use]
    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    fn radixes(&self, degree: usize) -> Vec<usize> {
        let moore = self.segment.moore();
        SLOTS[degree]
            .iter()
            .map(|slot| match slot {
                Slot::Two => moore.n2_elements().len(),
                Slot::One => moore.n1_elements().len(),
                Slot::Zero => self.tsg.level(0).order(),
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

    pub fn zero_cochain(&self, degree: usize) -> Result<AnalysedCochain, SimplicialError> {
        self.cochain_from_fn(degree, |_| self.coeffs.coeffs().zero())
    }

    pub fn cochain_from_fn(
        &self,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> AbElement,
    ) -> Result<AnalysedCochain, SimplicialError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(SimplicialError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
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
        Ok(AnalysedCochain { degree, radixes, coeffs: self.coeffs.coeffs().clone(), values })
    }

    /// Rebuilds a cochain from factor-major coordinates.
    pub fn cochain_from_coords(
        &self,
        degree: usize,
        coords: &[BigInt],
    ) -> Result<AnalysedCochain, SimplicialError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(SimplicialError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let count = self.domain_count(degree);
        let rank = self.coeffs.coeffs().rank();
        if coords.len() != rank * count {
            return Err(SimplicialError::CochainMismatch);
        }
        self.cochain_from_fn(degree, |tuple| {
            let t = self.tuple_index(degree, tuple);
            let xs: Vec<BigInt> = (0..rank).map(|i| coords[i * count + t].clone()).collect();
            self.coeffs.coeffs().element(xs)
        })
    }

    /// The differential out of the given degree, as a map of cochain groups.
    pub fn differential(&self, degree: usize) -> Result<AbHom, SimplicialError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(SimplicialError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let g = &self.tsg;
        let g0 = g.level(0);
        let g1 = g.level(1);
        let moore = self.segment.moore();
        let n1 = moore.n1_elements();
        let n2 = moore.n2_elements();
        let n1g = moore.n1_group();
        let pos1 = |x: usize| {
            moore.n1_position(x).expect("products and twists stay inside the degree-1 entry")
        };
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
                for gx in 0..g0.order() {
                    let out = self.tuple_index(1, &[gx]);
                    accumulate(out, 0, &identity, 1);
                    accumulate(out, 0, self.coeffs.action_matrix(proj.apply(gx)), -1);
                }
            }
            1 => {
                for x in 0..n1.len() {
                    let bx = g.d(1, 0, n1[x]);
                    for h in 0..g0.order() {
                        for gx in 0..g0.order() {
                            let out = self.tuple_index(2, &[x, h, gx]);
                            accumulate(out, g0.mul(bx, h), &identity, 1);
                            accumulate(out, g0.mul(h, gx), &identity, -1);
                            accumulate(out, gx, self.coeffs.action_matrix(proj.apply(h)), 1);
                        }
                    }
                }
            }
            2 => {
                for out in 0..out_count {
                    let tuple = self.tuple_of_index(3, out);
                    let (w, k, y, j, x, h, gx) =
                        (tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5], tuple[6]);
                    let merged = self.tuple_index(
                        2,
                        &[
                            pos1(g1.mul(g.d(2, 0, n2[w]), n1[k])),
                            g0.mul(g.d(1, 0, n1[y]), j),
                            g0.mul(g.d(1, 0, n1[x]), h),
                        ],
                    );
                    accumulate(out, merged, &identity, 1);
                    accumulate(
                        out,
                        self.tuple_index(2, &[n1g.mul(k, y), j, g0.mul(h, gx)]),
                        &identity,
                        -1,
                    );
                    let twisted = pos1(g1.conj(g.s(0, 0, j), n1[x]));
                    accumulate(
                        out,
                        self.tuple_index(2, &[n1g.mul(y, twisted), g0.mul(j, h), gx]),
                        &identity,
                        1,
                    );
                    accumulate(
                        out,
                        self.tuple_index(2, &[x, h, gx]),
                        self.coeffs.action_matrix(proj.apply(j)),
                        -1,
                    );
                }
            }
            _ => unreachable!(),
        }
        Ok(AbHom::new(self.cochain_group(degree), self.cochain_group(degree + 1), matrix)?)
    }

    /// Cohomology in degrees 0 to 2.
    pub fn cohomology(&self, degree: usize) -> Result<AnalysedCohomology, SimplicialError> {
        if degree > MAX_TABLE_DEGREE {
            return Err(SimplicialError::DegreeOutOfRange { degree, max: MAX_TABLE_DEGREE });
        }
        let d_out = self.differential(degree)?;
        let d_in = if degree == 0 {
            AbHom::zero(FPAbelianGroup::trivial(), self.cochain_group(0))
        } else {
            self.differential(degree - 1)?
        };
        Ok(AnalysedCohomology { degree, homology: homology(&d_in, &d_out)? })
    }

    /// Applies the differential to a cochain table.
    pub fn differential_of(&self, c: &AnalysedCochain) -> Result<Vec<BigInt>, SimplicialError> {
        let d = self.differential(c.degree())?;
        Ok(d.target().reduce(d.matrix().apply(&c.to_coords())))
    }

    pub fn is_cocycle(&self, c: &AnalysedCochain) -> Result<bool, SimplicialError> {
        Ok(self.differential_of(c)?.iter().all(num_traits::Zero::is_zero))
    }

    /// Pointwise difference of two tables of the same degree.
    pub fn sub(
        &self,
        a: &AnalysedCochain,
        b: &AnalysedCochain,
    ) -> Result<AnalysedCochain, SimplicialError> {
        if a.degree() != b.degree() {
            return Err(SimplicialError::CochainMismatch);
        }
        self.cochain_from_fn(a.degree(), |tuple| a.value(tuple).sub(b.value(tuple)))
    }

    /// Checks the pointwise characterisation of degree-2 cocycles and reports
    /// the first violated condition with its witness, or `None` for a
    /// cocycle. Writing `zM(x) = c(x, 1, 1)` and `zG(h, g) = c(1, h, g)`, the
    /// conditions are: the table splits as
    /// `c(x,h,g) = zM(x) − zG(x∂, h) + zG(h, g)`; `zG` is a 2-cocycle of the
    /// level-0 group with inflated coefficients; `zM` is multiplicative up to
    /// `zG(y∂, x∂)`; `zM` intertwines the conjugation action up to
    /// `zG(^a(x∂), a) − zG(a, x∂)`; and `zM` is constant on degree-2
    /// boundaries.
    pub fn two_cocycle_condition_failure(
        &self,
        c: &AnalysedCochain,
    ) -> Result<Option<SimplicialError>, SimplicialError> {
        if c.degree() != 2 || c.radixes != self.radixes(2) {
            return Err(SimplicialError::CochainMismatch);
        }
        let g = &self.tsg;
        let g0 = g.level(0);
        let g1 = g.level(1);
        let moore = self.segment.moore();
        let n1 = moore.n1_elements();
        let n2 = moore.n2_elements();
        let n1g = moore.n1_group();
        let pos1 = |v: usize| {
            moore.n1_position(v).expect("products and twists stay inside the degree-1 entry")
        };
        let proj = self.homotopy.projection();
        let act = |a: usize, v: &AbElement| self.coeffs.act(proj.apply(a), v);
        let zm = |x: usize| c.value(&[x, 0, 0]);
        let zg = |h: usize, gx: usize| c.value(&[0, h, gx]);
        let boundary = |x: usize| g.d(1, 0, n1[x]);

        for x in 0..n1.len() {
            for h in 0..g0.order() {
                for gx in 0..g0.order() {
                    let split = zm(x).sub(zg(boundary(x), h)).add(zg(h, gx));
                    if c.value(&[x, h, gx]) != &split {
                        return Ok(Some(SimplicialError::NotDecomposable { x, h, g: gx }));
                    }
                }
            }
        }
        for k in 0..g0.order() {
            for h in 0..g0.order() {
                for gx in 0..g0.order() {
                    let lhs = zg(k, h)
                        .sub(zg(k, g0.mul(h, gx)))
                        .add(zg(g0.mul(k, h), gx))
                        .sub(&act(k, zg(h, gx)));
                    if !lhs.is_zero() {
                        return Ok(Some(SimplicialError::GroupPartNotCocycle { k, h, g: gx }));
                    }
                }
            }
        }
        for y in 0..n1.len() {
            for x in 0..n1.len() {
                let rhs = zm(y).add(zm(x)).sub(zg(boundary(y), boundary(x)));
                if zm(n1g.mul(y, x)) != &rhs {
                    return Ok(Some(SimplicialError::Multiplicativity { y, x }));
                }
            }
        }
        for a in 0..g0.order() {
            let sa = g.s(0, 0, a);
            for x in 0..n1.len() {
                let bx = boundary(x);
                let rhs = act(a, zm(x)).add(zg(g0.conj(a, bx), a)).sub(zg(a, bx));
                if zm(pos1(g1.conj(sa, n1[x]))) != &rhs {
                    return Ok(Some(SimplicialError::ActionCondition { g: a, x }));
                }
            }
        }
        for w in 0..n2.len() {
            if zm(pos1(g.d(2, 0, n2[w]))) != zm(0) {
                return Ok(Some(SimplicialError::BoundaryCondition { w }));
            }
        }
        Ok(None)
    }
}

/// A cochain table over an `AnalysedComplex` domain, degree at most 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnalysedCochain {
    degree: usize,
    radixes: Vec<usize>,
    coeffs: FPAbelianGroup,
    values: Vec<AbElement>,
}

impl AnalysedCochain {
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

    /// Factor-major flat coordinates, matching `AnalysedComplex::cochain_group`.
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

/// Cohomology of a validated instance in one degree, with table-level
/// representatives.
pub struct AnalysedCohomology {
    degree: usize,
    pub homology: Homology,
}

impl AnalysedCohomology {
    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.homology.group
    }

    /// Table of the k-th canonical generator's representative cocycle.
    pub fn representative(
        &self,
        complex: &AnalysedComplex,
        k: usize,
    ) -> Result<AnalysedCochain, SimplicialError> {
        complex.cochain_from_coords(self.degree, &self.homology.representatives.column(k))
    }

    pub fn class_of(&self, c: &AnalysedCochain) -> Option<AbElement> {
        self.homology.class_of(&c.to_coords())
    }
}

/// The differential of a validated instance in one degree, building the
/// complex on the fly.
pub fn an_differential(
    g: &TruncatedSimplicialGroup,
    coeffs: &GModule,
    degree: usize,
) -> Result<AbHom, SimplicialError> {
    AnalysedComplex::new(g, coeffs)?.differential(degree)
}

/// Cohomology of a validated instance in one degree, building the complex on
/// the fly.
pub fn an_cohomology(
    g: &TruncatedSimplicialGroup,
    coeffs: &GModule,
    degree: usize,
) -> Result<AnalysedCohomology, SimplicialError> {
    AnalysedComplex::new(g, coeffs)?.cohomology(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coskeleton::cosk1;
    use crate::samples;
    use crossed_core::{CrossedModule, samples as crossed_samples};
    use group_core::{group_cohomology, FiniteGroup, GroupHom};
    use num_traits::Zero;

    fn complex_over(g: &TruncatedSimplicialGroup, coeff_order: u64) -> AnalysedComplex {
        let h = crate::moore::homotopy01(g).unwrap();
        let m = GModule::trivial(h.pi0().clone(), FPAbelianGroup::cyclic(coeff_order));
        AnalysedComplex::new(g, &m).unwrap()
    }

    #[test]
    fn differentials_compose_to_zero_on_all_samples() {
        let instances = [
            cosk1(&crossed_samples::c4_squaring()).unwrap(),
            samples::collapse_sample(),
            samples::mixed_sample(),
        ];
        for g in &instances {
            for coeff in [2, 4] {
                let cx = complex_over(g, coeff);
                for n in 0..2 {
                    let dd =
                        cx.differential(n).unwrap().then(&cx.differential(n + 1).unwrap()).unwrap();
                    assert!(dd.is_zero(), "d{} then d{} nonzero over Z/{}", n, n + 1, coeff);
                }
            }
        }
    }

    #[test]
    fn degree_zero_cohomology_is_the_fixed_point_group() {
        // π₀ of the squaring coskeleton is C2; let it act on Z/4 by negation.
        let g = cosk1(&crossed_samples::c4_squaring()).unwrap();
        let h = crate::moore::homotopy01(&g).unwrap();
        let negation = IntMatrix::from_rows(&[&[-1]]);
        let m = GModule::new(
            h.pi0().clone(),
            FPAbelianGroup::cyclic(4),
            vec![IntMatrix::identity(1), negation],
        )
        .unwrap();
        let cx = AnalysedComplex::new(&g, &m).unwrap();
        let h0 = cx.cohomology(0).unwrap();
        assert_eq!(h0.group().describe(), "Z/2");
        let bar = group_cohomology(&m, 0).unwrap();
        assert_eq!(h0.group().invariant_factors(), bar.group().invariant_factors());
    }

    #[test]
    fn the_pointwise_conditions_agree_with_the_kernel_on_a_full_enumeration() {
        // Two domain tuples and Z/2 coefficients: four degree-2 tables.
        let g = samples::collapse_sample();
        let cx = complex_over(&g, 2);
        assert_eq!(cx.domain_count(2), 2);
        let coeffs = cx.coeffs().coeffs().clone();
        let mut seen_cocycle = false;
        let mut seen_failure = false;
        for bits in 0u64..4 {
            let c = cx
                .cochain_from_fn(2, |tuple| {
                    let t = cx.tuple_index(2, tuple);
                    coeffs.element(vec![BigInt::from((bits >> t) & 1)])
                })
                .unwrap();
            let direct = cx.is_cocycle(&c).unwrap();
            let pointwise = cx.two_cocycle_condition_failure(&c).unwrap();
            assert_eq!(direct, pointwise.is_none(), "disagreement at table {bits:02b}");
            seen_cocycle |= direct;
            seen_failure |= !direct;
        }
        assert!(seen_cocycle && seen_failure);
    }

    #[test]
    fn representatives_satisfy_the_pointwise_conditions() {
        for g in [cosk1(&crossed_samples::c4_squaring()).unwrap(), samples::mixed_sample()] {
            let cx = complex_over(&g, 2);
            let h2 = cx.cohomology(2).unwrap();
            for k in 0..h2.group().rank() {
                let z = h2.representative(&cx, k).unwrap();
                assert!(cx.is_cocycle(&z).unwrap());
                assert!(cx.two_cocycle_condition_failure(&z).unwrap().is_none());
            }
        }
    }

    #[test]
    fn a_non_cocycle_is_rejected_with_a_witness() {
        let g = cosk1(&crossed_samples::c4_squaring()).unwrap();
        let cx = complex_over(&g, 2);
        let coeffs = cx.coeffs().coeffs().clone();
        // The indicator of a single far-from-identity tuple splits badly.
        let c = cx
            .cochain_from_fn(2, |tuple| {
                coeffs.element(vec![BigInt::from(u64::from(tuple == [1, 1, 1]))])
            })
            .unwrap();
        assert!(!cx.is_cocycle(&c).unwrap());
        assert!(cx.two_cocycle_condition_failure(&c).unwrap().is_some());
    }

    #[test]
    fn degree_one_cocycles_are_inflated_homomorphisms() {
        // Boundary image {1, a²} inside C4: cocycles are exactly the
        // homomorphisms to Z/2 that kill the boundary image.
        let c2 = FiniteGroup::cyclic(2);
        let c4 = FiniteGroup::cyclic(4);
        let mu = GroupHom::new(c2.clone(), c4.clone(), vec![0, 2]).unwrap();
        let v = CrossedModule::new(mu, vec![vec![0, 1]; 4]).unwrap();
        let g = cosk1(&v).unwrap();
        let cx = complex_over(&g, 2);
        let coeffs = cx.coeffs().coeffs().clone();
        let g0 = g.level(0);
        let mut cocycles = 0;
        for bits in 0u64..16 {
            let c = cx
                .cochain_from_fn(1, |tuple| {
                    coeffs.element(vec![BigInt::from((bits >> tuple[0]) & 1)])
                })
                .unwrap();
            let additive = (0..4).all(|h| {
                (0..4).all(|k| {
                    let lhs = c.value(&[g0.mul(h, k)]).clone();
                    lhs == c.value(&[h]).add(c.value(&[k]))
                })
            });
            let kills_boundary = c.value(&[2]).is_zero();
            assert_eq!(cx.is_cocycle(&c).unwrap(), additive && kills_boundary);
            if additive && kills_boundary {
                cocycles += 1;
            }
        }
        assert_eq!(cocycles, 2);
    }

    #[test]
    fn the_zero_cochain_maps_to_zero_in_every_degree() {
        let cx = complex_over(&samples::collapse_sample(), 4);
        for degree in 0..=MAX_TABLE_DEGREE {
            let z = cx.zero_cochain(degree).unwrap();
            assert!(cx.differential_of(&z).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn tuple_indexing_and_coordinates_round_trip() {
        let cx = complex_over(&samples::mixed_sample(), 4);
        for degree in 0..=3 {
            for t in 0..cx.domain_count(degree).min(512) {
                let tuple = cx.tuple_of_index(degree, t);
                assert_eq!(cx.tuple_index(degree, &tuple), t);
            }
        }
        let c = cx
            .cochain_from_fn(2, |tuple| {
                cx.coeffs().coeffs().element(vec![BigInt::from(tuple.iter().sum::<usize>() as u64)])
            })
            .unwrap();
        let back = cx.cochain_from_coords(2, &c.to_coords()).unwrap();
        assert_eq!(back, c);
    }
}
