//! Homomorphisms between finitely generated abelian groups, presentations of
//! their kernels, images, cokernels, pullbacks, and two-term homology.
//!
//! A homomorphism is an integer matrix acting on coordinate columns: column
//! `i` is the image of the `i`-th generator of the source. All subgroup and
//! quotient computations reduce to Smith normal form; kernels only ever need
//! the small right transform, so sources may be large cochain spaces.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::AbelianError;
use crate::group::{AbElement, FPAbelianGroup};
use crate::matrix::{congruence_kernel, congruence_solve, smith_full, IntMatrix};

/// A homomorphism `source -> target` of finitely generated abelian groups.
#[derive(Clone, PartialEq, Eq)]
pub struct AbHom {
    source: FPAbelianGroup,
    target: FPAbelianGroup,
    matrix: IntMatrix,
}

impl std::fmt::Debug for AbHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AbHom {} -> {} via {:?}", self.source.describe(), self.target.describe(), self.matrix)
    }
}

impl AbHom {
    /// Wraps a matrix as a homomorphism, checking shape and well-definedness:
    /// for every source generator of finite order `d`, `d` times its image
    /// must vanish in the target.
    pub fn new(
        source: FPAbelianGroup,
        target: FPAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, AbelianError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(AbelianError::ShapeMismatch);
        }
        for (i, d) in source.invariant_factors().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let scaled: Vec<BigInt> = matrix.column(i).iter().map(|x| x * d).collect();
            if !target.reduce(scaled).iter().all(Zero::is_zero) {
                return Err(AbelianError::NotWellDefined { generator: i });
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    #[must_use]
    pub fn zero(source: FPAbelianGroup, target: FPAbelianGroup) -> Self {
        let matrix = IntMatrix::zero(target.rank(), source.rank());
        AbHom { source, target, matrix }
    }

    #[must_use]
    pub fn identity(group: FPAbelianGroup) -> Self {
        let matrix = IntMatrix::identity(group.rank());
        AbHom { source: group.clone(), target: group, matrix }
    }

    #[must_use]
    pub fn source(&self) -> &FPAbelianGroup {
        &self.source
    }

    #[must_use]
    pub fn target(&self) -> &FPAbelianGroup {
        &self.target
    }

    #[must_use]
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &AbElement) -> AbElement {
        assert_eq!(x.group(), &self.source, "element not in the source group");
        self.target.element(self.matrix.apply(x.coords()))
    }

    /// Composite `self` then `other` (diagram order).
    pub fn then(&self, other: &AbHom) -> Result<AbHom, AbelianError> {
        if self.target != other.source {
            return Err(AbelianError::IncompatibleHoms);
        }
        Ok(AbHom {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix),
        })
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| {
            self.target.reduce(self.matrix.column(j)).iter().all(Zero::is_zero)
        })
    }

    /// Kernel as a presented subgroup of the source.
    #[must_use]
    pub fn kernel(&self) -> Subquotient {
        let lattice = congruence_kernel(&self.matrix, self.target.invariant_factors());
        Subquotient::from_lattice(&lattice, &self.source)
    }

    /// Image as a presented subgroup of the target.
    #[must_use]
    pub fn image(&self) -> Subquotient {
        Subquotient::from_lattice(&self.matrix, &self.target)
    }

    /// Cokernel together with the projection from the target.
    #[must_use]
    pub fn cokernel(&self) -> (FPAbelianGroup, AbHom) {
        let rels = self.matrix.hstack(&self.target.relation_matrix());
        let canon = canonicalize_full(&rels);
        let projection = AbHom {
            source: self.target.clone(),
            target: canon.group.clone(),
            matrix: canon.to_canonical,
        };
        (canon.group, projection)
    }
}

/// Output of [`hom_subquotients`].
pub struct HomSubquotients {
    pub kernel: FPAbelianGroup,
    pub kernel_embedding: AbHom,
    pub image: FPAbelianGroup,
    pub image_embedding: AbHom,
    pub cokernel: FPAbelianGroup,
    pub cokernel_projection: AbHom,
}

/// Kernel, image and cokernel of `f`, each with its structure map.
#[must_use]
pub fn hom_subquotients(f: &AbHom) -> HomSubquotients {
    let kernel = f.kernel();
    let image = f.image();
    let (cokernel, cokernel_projection) = f.cokernel();
    HomSubquotients {
        kernel_embedding: kernel.embedding(),
        kernel: kernel.group,
        image_embedding: image.embedding(),
        image: image.group,
        cokernel,
        cokernel_projection,
    }
}

/// Canonical form of a cokernel presentation: the group `Z^n / columns(rels)`
/// plus both change-of-basis directions.
pub struct Canonicalized {
    pub group: FPAbelianGroup,
    /// Old generator coordinates to canonical coordinates, `rank x n`.
    pub to_canonical: IntMatrix,
    /// Canonical generators expressed in old coordinates, `n x rank`.
    pub from_canonical: IntMatrix,
}

/// The group `Z^n / columns(relations)` in invariant-factor form together with
/// the coordinate change from old generator coordinates.
#[must_use]
pub fn canonicalize(relations: &IntMatrix) -> (FPAbelianGroup, IntMatrix) {
    let canon = canonicalize_full(relations);
    (canon.group, canon.to_canonical)
}

#[must_use]
pub fn canonicalize_full(relations: &IntMatrix) -> Canonicalized {
    let n = relations.rows();
    let smith = smith_full(relations);
    let u = smith.u.expect("tracked");
    let u_inv = smith.u_inv.expect("tracked");
    let diag_len = n.min(relations.cols());

    // Diagonal entry per generator: 1 kills it, d >= 2 gives Z/d, 0 or out of
    // range gives a free summand. The Smith chain 1 | … | d | … | 0 already
    // lists kept factors in canonical order.
    let mut kept: Vec<(usize, BigInt)> = Vec::new();
    for i in 0..n {
        let d = if i < diag_len { smith.s.at(i, i).clone() } else { BigInt::zero() };
        if !num_traits::One::is_one(&d) {
            kept.push((i, d));
        }
    }

    let factors: Vec<BigInt> = kept.iter().map(|(_, d)| d.clone()).collect();
    let group = FPAbelianGroup::new(factors).expect("smith output is canonical");
    let mut to_canonical = IntMatrix::zero(kept.len(), n);
    let mut from_canonical = IntMatrix::zero(n, kept.len());
    for (out_i, (i, _)) in kept.iter().enumerate() {
        for j in 0..n {
            to_canonical.set(out_i, j, u.at(*i, j).clone());
            from_canonical.set(j, out_i, u_inv.at(j, *i).clone());
        }
    }
    Canonicalized { group, to_canonical, from_canonical }
}

/// A subgroup of an ambient presented group, itself in canonical form. The
/// columns of `generators` are representatives of the canonical generators in
/// ambient coordinates.
#[derive(Clone)]
pub struct Subquotient {
    pub group: FPAbelianGroup,
    pub generators: IntMatrix,
    ambient: FPAbelianGroup,
}

impl Subquotient {
    /// Subgroup of `ambient` generated by the columns of `lattice_gens`
    /// (ambient coordinates; the ambient relation lattice is added
    /// automatically).
    #[must_use]
    pub fn from_lattice(lattice_gens: &IntMatrix, ambient: &FPAbelianGroup) -> Subquotient {
        assert_eq!(lattice_gens.rows(), ambient.rank(), "ambient rank mismatch");
        let relations = congruence_kernel(lattice_gens, ambient.invariant_factors());
        let canon = canonicalize_full(&relations);
        let mut generators = lattice_gens.mul(&canon.from_canonical);
        for j in 0..generators.cols() {
            let reduced = ambient.reduce(generators.column(j));
            for (i, x) in reduced.into_iter().enumerate() {
                generators.set(i, j, x);
            }
        }
        Subquotient { group: canon.group, generators, ambient: ambient.clone() }
    }

    /// The whole ambient group as a subgroup of itself.
    #[must_use]
    pub fn full(ambient: &FPAbelianGroup) -> Subquotient {
        Subquotient {
            group: ambient.clone(),
            generators: IntMatrix::identity(ambient.rank()),
            ambient: ambient.clone(),
        }
    }

    #[must_use]
    pub fn ambient(&self) -> &FPAbelianGroup {
        &self.ambient
    }

    /// The inclusion as a homomorphism.
    #[must_use]
    pub fn embedding(&self) -> AbHom {
        AbHom::new(self.group.clone(), self.ambient.clone(), self.generators.clone())
            .expect("subgroup generators respect their orders")
    }

    /// Expresses an ambient element in canonical subgroup coordinates, or
    /// `None` if it lies outside the subgroup.
    #[must_use]
    pub fn coordinates_of(&self, ambient_coords: &[BigInt]) -> Option<Vec<BigInt>> {
        let x = congruence_solve(&self.generators, self.ambient.invariant_factors(), ambient_coords)?;
        Some(self.group.reduce(x))
    }

    #[must_use]
    pub fn contains(&self, ambient_coords: &[BigInt]) -> bool {
        self.coordinates_of(ambient_coords).is_some()
    }

    /// Ambient representative of the subgroup element with these coordinates.
    #[must_use]
    pub fn representative(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.ambient.reduce(self.generators.apply(coords))
    }
}

/// Pullback `{(a, b) : f(a) = g(b)}` of two homomorphisms into a common
/// target, with its two projections.
pub fn pullback(f: &AbHom, g: &AbHom) -> Result<(FPAbelianGroup, AbHom, AbHom), AbelianError> {
    if f.target != g.target {
        return Err(AbelianError::IncompatibleHoms);
    }
    let (ra, rb) = (f.source.rank(), g.source.rank());
    // Rows: f(a) - g(b) ≡ 0 in the target; solutions inside Z^{ra+rb} modulo
    // the stacked source relations present the fibre product.
    let mut stacked = IntMatrix::zero(f.target.rank(), ra + rb);
    for i in 0..f.target.rank() {
        for j in 0..ra {
            stacked.set(i, j, f.matrix.at(i, j).clone());
        }
        for j in 0..rb {
            stacked.set(i, ra + j, -g.matrix.at(i, j).clone());
        }
    }
    let lattice = congruence_kernel(&stacked, f.target.invariant_factors());

    let mut ambient_factors = f.source.invariant_factors().to_vec();
    ambient_factors.extend_from_slice(g.source.invariant_factors());
    let relations = congruence_kernel(&lattice, &ambient_factors);
    let canon = canonicalize_full(&relations);
    let gens = lattice.mul(&canon.from_canonical);

    let mut mat_a = IntMatrix::zero(ra, canon.group.rank());
    let mut mat_b = IntMatrix::zero(rb, canon.group.rank());
    for j in 0..canon.group.rank() {
        for i in 0..ra {
            mat_a.set(i, j, gens.at(i, j).clone());
        }
        for i in 0..rb {
            mat_b.set(i, j, gens.at(ra + i, j).clone());
        }
    }
    let proj_a = AbHom::new(canon.group.clone(), f.source.clone(), mat_a)?;
    let proj_b = AbHom::new(canon.group.clone(), g.source.clone(), mat_b)?;
    Ok((canon.group, proj_a, proj_b))
}

/// Cocycles, coboundaries and homology of a two-term segment
/// `A --d_in--> B --d_out--> C` with `d_out ∘ d_in = 0`.
pub struct Homology {
    /// `Z = ker d_out` as a subgroup of the middle group.
    pub cocycles: Subquotient,
    /// `B = im d_in` as a subgroup of the middle group.
    pub coboundaries: Subquotient,
    /// `H = Z / B` in canonical form.
    pub group: FPAbelianGroup,
    /// Middle-group representatives of the canonical `H` generators (columns).
    pub representatives: IntMatrix,
    to_class: IntMatrix,
}

impl Homology {
    /// Class of a middle-group element; `None` if it is not a cocycle.
    #[must_use]
    pub fn class_of(&self, cocycle: &[BigInt]) -> Option<AbElement> {
        let z_coords = self.cocycles.coordinates_of(cocycle)?;
        Some(self.group.element(self.to_class.apply(&z_coords)))
    }

    /// Whether two cocycles are cohomologous.
    #[must_use]
    pub fn same_class(&self, a: &[BigInt], b: &[BigInt]) -> Option<bool> {
        Some(self.class_of(a)? == self.class_of(b)?)
    }
}

pub fn homology(d_in: &AbHom, d_out: &AbHom) -> Result<Homology, AbelianError> {
    if d_in.target != d_out.source {
        return Err(AbelianError::IncompatibleHoms);
    }
    subquotient_quotient(d_out.kernel(), d_in.image())
}

/// Quotient of two nested subgroups of the same ambient group. Fails with
/// `NotInSubgroup` if some generator of `coboundaries` lies outside
/// `cocycles`.
pub fn subquotient_quotient(
    cocycles: Subquotient,
    coboundaries: Subquotient,
) -> Result<Homology, AbelianError> {
    if cocycles.ambient != coboundaries.ambient {
        return Err(AbelianError::IncompatibleHoms);
    }
    let mut cols = Vec::with_capacity(coboundaries.group.rank());
    for j in 0..coboundaries.group.rank() {
        let amb = coboundaries.generators.column(j);
        let coords = cocycles.coordinates_of(&amb).ok_or(AbelianError::NotInSubgroup)?;
        cols.push(coords);
    }
    let b_in_z = IntMatrix::from_columns(cocycles.group.rank(), &cols);
    let relations = b_in_z.hstack(&cocycles.group.relation_matrix());
    let canon = canonicalize_full(&relations);

    let ambient = cocycles.ambient.clone();
    let mut representatives = cocycles.generators.mul(&canon.from_canonical);
    for j in 0..representatives.cols() {
        let reduced = ambient.reduce(representatives.column(j));
        for (i, x) in reduced.into_iter().enumerate() {
            representatives.set(i, j, x);
        }
    }
    Ok(Homology {
        cocycles,
        coboundaries,
        group: canon.group,
        representatives,
        to_class: canon.to_canonical,
    })
}
