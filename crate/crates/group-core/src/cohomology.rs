//! Bar differentials, cohomology in degrees ≤ 3, the componentwise-pointed
//! subcomplex, and equivariant homomorphism groups.
//!
//! With tuples in descending order `(g_{n-1}, …, g_0)` and the leftmost entry
//! the only one that acts, the differentials are, degree by degree:
//!
//! ```text
//! (g)(cd)          = ()c − g▷()c
//! (h, g)(cd)       = (h)c − (hg)c + h▷(g)c
//! (k, h, g)(cd)    = (k, h)c − (k, hg)c + (kh, g)c − k▷(h, g)c
//! (l, k, h, g)(cd) = (l, k, h)c − (l, k, hg)c + (l, kh, g)c − (lk, h, g)c
//!                    + l▷(k, h, g)c
//! ```
//!
//! The loop below realises exactly these formulas: term 0 drops the rightmost
//! entry, term k merges the entries at positions k and k−1, and the last term
//! drops the leftmost entry and acts by it.

use abelian_core::{
    congruence_solve, AbElement, AbHom, FPAbelianGroup, Homology, IntMatrix, Subquotient,
};
use num_bigint::BigInt;

use crate::cochain::{cochain_group, tuple_from_index, tuple_index, BarCochain, MAX_DEGREE};
use crate::error::GroupError;
use crate::module::GModule;

/// The differential Cⁿ → Cⁿ⁺¹ as a homomorphism of flat coordinate groups,
/// for n ≤ 3.
pub fn bar_differential(coeffs: &GModule, degree: usize) -> Result<AbHom, GroupError> {
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeOutOfRange { degree, max: MAX_DEGREE });
    }
    let order = coeffs.group().order();
    let rank = coeffs.coeffs().rank();
    let in_count = order.pow(degree as u32);
    let out_count = order.pow(degree as u32 + 1);
    let mut m = IntMatrix::zero(rank * out_count, rank * in_count);
    for t in 0..out_count {
        // Math-position digits: g[p] is the entry at position p, so the
        // descending tuple reads (g[degree], …, g[0]).
        let desc = tuple_from_index(order, degree + 1, t);
        let g: Vec<usize> = desc.iter().rev().copied().collect();
        for k in 0..=degree + 1 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let (src_positions, actor): (Vec<usize>, Option<usize>) = if k == 0 {
                ((1..=degree).map(|p| g[p]).collect(), None)
            } else if k == degree + 1 {
                ((0..degree).map(|p| g[p]).collect(), Some(g[degree]))
            } else {
                let mut s = Vec::with_capacity(degree);
                for p in 0..degree {
                    if p < k - 1 {
                        s.push(g[p]);
                    } else if p == k - 1 {
                        s.push(coeffs.group().mul(g[k], g[k - 1]));
                    } else {
                        s.push(g[p + 1]);
                    }
                }
                (s, None)
            };
            let src_desc: Vec<usize> = src_positions.iter().rev().copied().collect();
            let src = tuple_index(order, &src_desc);
            match actor {
                None => {
                    for i in 0..rank {
                        let row = i * out_count + t;
                        let col = i * in_count + src;
                        let cur = m.at(row, col).clone();
                        m.set(row, col, cur + BigInt::from(sign));
                    }
                }
                Some(a) => {
                    let action = coeffs.action_matrix(a);
                    for j in 0..rank {
                        for i in 0..rank {
                            let row = j * out_count + t;
                            let col = i * in_count + src;
                            let cur = m.at(row, col).clone();
                            m.set(row, col, cur + BigInt::from(sign) * action.at(j, i));
                        }
                    }
                }
            }
        }
    }
    Ok(AbHom::new(cochain_group(coeffs, degree), cochain_group(coeffs, degree + 1), m)
        .expect("differential of well-defined actions is well defined"))
}

/// Cocycles, coboundaries and cohomology of a group with module coefficients,
/// with decoding back to cochain tables.
pub struct GroupCohomology {
    degree: usize,
    coeffs: GModule,
    homology: Homology,
}

impl GroupCohomology {
    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Hⁿ in invariant-factor form.
    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.homology.group
    }

    #[must_use]
    pub fn cocycles(&self) -> &Subquotient {
        &self.homology.cocycles
    }

    #[must_use]
    pub fn coboundaries(&self) -> &Subquotient {
        &self.homology.coboundaries
    }

    /// Cocycle table representing the k-th canonical generator of Hⁿ.
    #[must_use]
    pub fn representative(&self, k: usize) -> BarCochain {
        let coords = self.homology.representatives.column(k);
        BarCochain::from_coords(&self.coeffs, self.degree, &coords)
            .expect("representative coordinates have cochain shape")
    }

    /// A cocycle table representing an arbitrary class.
    #[must_use]
    pub fn representative_of(&self, class: &AbElement) -> BarCochain {
        let mut coords = vec![BigInt::from(0); self.homology.representatives.rows()];
        for (k, c) in class.coords().iter().enumerate() {
            for (r, x) in self.homology.representatives.column(k).into_iter().enumerate() {
                coords[r] += c * x;
            }
        }
        BarCochain::from_coords(&self.coeffs, self.degree, &coords)
            .expect("representative coordinates have cochain shape")
    }

    /// Class of a cocycle; `None` if the table is not a cocycle.
    #[must_use]
    pub fn class_of(&self, cochain: &BarCochain) -> Option<AbElement> {
        self.homology.class_of(&cochain.to_coords())
    }

    #[must_use]
    pub fn is_cocycle(&self, cochain: &BarCochain) -> bool {
        self.homology.cocycles.contains(&cochain.to_coords())
    }

    #[must_use]
    pub fn is_coboundary(&self, cochain: &BarCochain) -> bool {
        self.homology.coboundaries.contains(&cochain.to_coords())
    }
}

/// Hⁿ(G, M) for n ≤ 3 via the kernel/image machinery of the coordinate
/// groups.
pub fn group_cohomology(coeffs: &GModule, degree: usize) -> Result<GroupCohomology, GroupError> {
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeOutOfRange { degree, max: MAX_DEGREE });
    }
    let d_out = bar_differential(coeffs, degree)?;
    let d_in = if degree == 0 {
        AbHom::zero(FPAbelianGroup::trivial(), cochain_group(coeffs, 0))
    } else {
        bar_differential(coeffs, degree - 1)?
    };
    let homology = abelian_core::homology(&d_in, &d_out).expect("bar differentials compose to zero");
    Ok(GroupCohomology { degree, coeffs: coeffs.clone(), homology })
}

/// Indices of the identity-free n-tuples, ascending.
#[must_use]
pub fn cpt_tuple_indices(order: usize, degree: usize) -> Vec<usize> {
    (0..order.pow(degree as u32))
        .filter(|&t| !tuple_from_index(order, degree, t).contains(&0))
        .collect()
}

/// The componentwise-pointed cochain group, one coefficient copy per
/// identity-free tuple.
#[must_use]
pub fn cpt_group(coeffs: &GModule, degree: usize) -> FPAbelianGroup {
    FPAbelianGroup::power(coeffs.coeffs(), cpt_tuple_indices(coeffs.group().order(), degree).len())
}

/// The embedding Cⁿ_cpt → Cⁿ that places each identity-free slot at its full
/// tuple index.
#[must_use]
pub fn cpt_subgroup(coeffs: &GModule, degree: usize) -> AbHom {
    let order = coeffs.group().order();
    let rank = coeffs.coeffs().rank();
    let tuples = cpt_tuple_indices(order, degree);
    let full_count = order.pow(degree as u32);
    let mut m = IntMatrix::zero(rank * full_count, rank * tuples.len());
    for (s, &t) in tuples.iter().enumerate() {
        for i in 0..rank {
            m.set(i * full_count + t, i * tuples.len() + s, BigInt::from(1));
        }
    }
    AbHom::new(cpt_group(coeffs, degree), cochain_group(coeffs, degree), m)
        .expect("coordinate inclusion is well defined")
}

/// Componentwise pointed: zero at every tuple containing the identity.
#[must_use]
pub fn is_cpt(cochain: &BarCochain) -> bool {
    cochain.is_cpt()
}

/// The differential restricted to the componentwise-pointed subcomplex,
/// which the full differential preserves.
pub fn cpt_differential(coeffs: &GModule, degree: usize) -> Result<AbHom, GroupError> {
    let full = bar_differential(coeffs, degree)?;
    let order = coeffs.group().order();
    let rank = coeffs.coeffs().rank();
    let src_tuples = cpt_tuple_indices(order, degree);
    let tgt_tuples = cpt_tuple_indices(order, degree + 1);
    let in_count = order.pow(degree as u32);
    let out_count = order.pow(degree as u32 + 1);
    let mut m = IntMatrix::zero(rank * tgt_tuples.len(), rank * src_tuples.len());
    for (s_out, &t_out) in tgt_tuples.iter().enumerate() {
        for j in 0..rank {
            for (s_in, &t_in) in src_tuples.iter().enumerate() {
                for i in 0..rank {
                    let v = full.matrix().at(j * out_count + t_out, i * in_count + t_in);
                    m.set(j * tgt_tuples.len() + s_out, i * src_tuples.len() + s_in, v.clone());
                }
            }
        }
    }
    Ok(AbHom::new(cpt_group(coeffs, degree), cpt_group(coeffs, degree + 1), m)
        .expect("restriction of a well-defined differential"))
}

/// Cohomology of the componentwise-pointed subcomplex, decoding to full
/// cochain tables that vanish off the identity-free slots.
pub struct CptCohomology {
    degree: usize,
    coeffs: GModule,
    tuples: Vec<usize>,
    homology: Homology,
}

impl CptCohomology {
    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.homology.group
    }

    #[must_use]
    pub fn cocycles(&self) -> &Subquotient {
        &self.homology.cocycles
    }

    #[must_use]
    pub fn coboundaries(&self) -> &Subquotient {
        &self.homology.coboundaries
    }

    /// Flat cpt coordinates of a componentwise-pointed cochain table, or
    /// `None` if it is not componentwise pointed.
    #[must_use]
    pub fn cpt_coords(&self, cochain: &BarCochain) -> Option<Vec<BigInt>> {
        if cochain.degree() != self.degree || !cochain.is_cpt() {
            return None;
        }
        let full = cochain.to_coords();
        let rank = self.coeffs.coeffs().rank();
        let full_count = self.coeffs.group().order().pow(self.degree as u32);
        let mut coords = Vec::with_capacity(rank * self.tuples.len());
        for i in 0..rank {
            for &t in &self.tuples {
                coords.push(full[i * full_count + t].clone());
            }
        }
        Some(coords)
    }

    /// Full cochain table for flat cpt coordinates.
    #[must_use]
    pub fn cochain_from_cpt_coords(&self, coords: &[BigInt]) -> BarCochain {
        let rank = self.coeffs.coeffs().rank();
        let full_count = self.coeffs.group().order().pow(self.degree as u32);
        let mut full = vec![BigInt::from(0); rank * full_count];
        for i in 0..rank {
            for (s, &t) in self.tuples.iter().enumerate() {
                full[i * full_count + t] = coords[i * self.tuples.len() + s].clone();
            }
        }
        BarCochain::from_coords(&self.coeffs, self.degree, &full)
            .expect("cpt coordinates have cochain shape")
    }

    #[must_use]
    pub fn representative(&self, k: usize) -> BarCochain {
        self.cochain_from_cpt_coords(&self.homology.representatives.column(k))
    }

    /// Class of a componentwise-pointed cocycle; `None` if the table is not
    /// cpt or not a cocycle.
    #[must_use]
    pub fn class_of(&self, cochain: &BarCochain) -> Option<AbElement> {
        self.homology.class_of(&self.cpt_coords(cochain)?)
    }

    #[must_use]
    pub fn same_class(&self, a: &BarCochain, b: &BarCochain) -> Option<bool> {
        Some(self.class_of(a)? == self.class_of(b)?)
    }
}

/// Hⁿ_cpt(G, M) for n ≤ 3.
pub fn cpt_cohomology(coeffs: &GModule, degree: usize) -> Result<CptCohomology, GroupError> {
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeOutOfRange { degree, max: MAX_DEGREE });
    }
    let d_out = cpt_differential(coeffs, degree)?;
    let d_in = if degree == 0 {
        AbHom::zero(FPAbelianGroup::trivial(), cpt_group(coeffs, 0))
    } else {
        cpt_differential(coeffs, degree - 1)?
    };
    let homology = abelian_core::homology(&d_in, &d_out).expect("cpt differentials compose to zero");
    let tuples = cpt_tuple_indices(coeffs.group().order(), degree);
    Ok(CptCohomology { degree, coeffs: coeffs.clone(), tuples, homology })
}

/// Searches for a 2-cochain whose differential is the given degree-3 table.
///
/// The candidate ranges over all of C², not only its componentwise-pointed
/// part, so a `Some` answer certifies membership in B³ ∩ C³_cpt and a `None`
/// answer proves there is none.
pub fn b3cpt_membership(t: &BarCochain) -> Result<Option<BarCochain>, GroupError> {
    if t.degree() != 3 {
        return Err(GroupError::DegreeOutOfRange { degree: t.degree(), max: 3 });
    }
    let coeffs = t.coeffs().clone();
    let d2 = bar_differential(&coeffs, 2)?;
    let c3 = cochain_group(&coeffs, 3);
    let count = coeffs.group().order().pow(3);
    let mut moduli = Vec::with_capacity(c3.rank());
    for i in 0..coeffs.coeffs().rank() {
        for _ in 0..count {
            moduli.push(coeffs.coeffs().invariant_factors()[i].clone());
        }
    }
    let witness = congruence_solve(d2.matrix(), &moduli, &t.to_coords());
    Ok(witness.map(|w| {
        BarCochain::from_coords(&coeffs, 2, &w).expect("solution has cochain shape")
    }))
}

/// The group of action-preserving homomorphisms between two modules over the
/// same group, as a subgroup of the matrix-entry space.
///
/// An entry vector lists, for each target generator j, the images of all
/// source generators: entry `F[j][t]` of the matrix sits at `j·rank_src + t`,
/// the `power` layout over the target coefficients.
pub struct EquivariantHoms {
    source: GModule,
    target: GModule,
    entries: FPAbelianGroup,
    sub: Subquotient,
}

impl EquivariantHoms {
    /// The homomorphism group in invariant-factor form.
    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.sub.group
    }

    #[must_use]
    pub fn entry_space(&self) -> &FPAbelianGroup {
        &self.entries
    }

    #[must_use]
    pub fn subgroup(&self) -> &Subquotient {
        &self.sub
    }

    fn hom_from_entries(&self, entries: &[BigInt]) -> AbHom {
        let rs = self.source.coeffs().rank();
        let rt = self.target.coeffs().rank();
        let mut m = IntMatrix::zero(rt, rs);
        for j in 0..rt {
            for t in 0..rs {
                m.set(j, t, entries[j * rs + t].clone());
            }
        }
        AbHom::new(self.source.coeffs().clone(), self.target.coeffs().clone(), m)
            .expect("entry vectors in the subgroup are well defined")
    }

    /// The k-th canonical generator as a homomorphism.
    #[must_use]
    pub fn generator_hom(&self, k: usize) -> AbHom {
        self.hom_from_entries(&self.sub.generators.column(k))
    }

    /// Decodes an element of the homomorphism group.
    #[must_use]
    pub fn decode(&self, element: &AbElement) -> AbHom {
        self.hom_from_entries(&self.sub.representative(element.coords()))
    }

    /// Encodes an equivariant homomorphism, or `None` if the map is not in
    /// the subgroup (not equivariant).
    #[must_use]
    pub fn encode(&self, f: &AbHom) -> Option<AbElement> {
        let rs = self.source.coeffs().rank();
        let rt = self.target.coeffs().rank();
        let mut entries = vec![BigInt::from(0); rs * rt];
        for j in 0..rt {
            for t in 0..rs {
                entries[j * rs + t] = f.matrix().at(j, t).clone();
            }
        }
        let coords = self.sub.coordinates_of(&self.entries.reduce(entries))?;
        Some(self.sub.group.element(coords))
    }
}

/// Hom over the acting group: the homomorphisms `f` with `f(p ▷ k) = p ▷ f(k)`
/// for every group element p, inside the full homomorphism group.
pub fn equivariant_hom_group(
    source: &GModule,
    target: &GModule,
) -> Result<EquivariantHoms, GroupError> {
    if source.group() != target.group() {
        return Err(GroupError::GroupMismatch);
    }
    let rs = source.coeffs().rank();
    let rt = target.coeffs().rank();
    let entries = FPAbelianGroup::power(target.coeffs(), rs);
    // Constraint rows, each taken modulo the matching target factor:
    // well-definedness  a_t · F[j][t] ≡ 0, and equivariance
    // (F · A_src(p) − A_tgt(p) · F)[j][i] ≡ 0.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut moduli: Vec<BigInt> = Vec::new();
    for j in 0..rt {
        let b = target.coeffs().invariant_factors()[j].clone();
        for t in 0..rs {
            let a = source.coeffs().invariant_factors()[t].clone();
            let mut row = vec![BigInt::from(0); rs * rt];
            row[j * rs + t] = a;
            rows.push(row);
            moduli.push(b.clone());
        }
    }
    for p in source.group().elements() {
        let a_src = source.action_matrix(p);
        let a_tgt = target.action_matrix(p);
        for j in 0..rt {
            for i in 0..rs {
                let mut row = vec![BigInt::from(0); rs * rt];
                for k in 0..rs {
                    row[j * rs + k] += a_src.at(k, i);
                }
                for l in 0..rt {
                    row[l * rs + i] -= a_tgt.at(j, l);
                }
                rows.push(row);
                moduli.push(target.coeffs().invariant_factors()[j].clone());
            }
        }
    }
    let mut constraint = IntMatrix::zero(rows.len(), rs * rt);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            constraint.set(r, c, v.clone());
        }
    }
    let lattice = abelian_core::congruence_kernel(&constraint, &moduli);
    let sub = Subquotient::from_lattice(&lattice, &entries);
    Ok(EquivariantHoms { source: source.clone(), target: target.clone(), entries, sub })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use num_traits::Zero;

    fn c2_mod(n: u64) -> GModule {
        GModule::trivial(FiniteGroup::cyclic(2), FPAbelianGroup::cyclic(n))
    }

    fn c2_negation_on_z4() -> GModule {
        GModule::new(
            FiniteGroup::cyclic(2),
            FPAbelianGroup::cyclic(4),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
        )
        .unwrap()
    }

    #[test]
    fn degree_zero_differential_vanishes_for_trivial_action() {
        let d = bar_differential(&c2_mod(4), 0).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn degree_one_formula_on_c2() {
        // c(x) = 1 in Z/2: (x,x)(cd) = c(x) − c(x·x) + x▷c(x) = 1 − 0 + 1 = 0.
        let m = c2_mod(2);
        let c = BarCochain::from_fn(&m, 1, |t| {
            m.coeffs().element(vec![BigInt::from(t[0] as i64)])
        })
        .unwrap();
        let d = bar_differential(&m, 1).unwrap();
        let dc = d.matrix().apply(&c.to_coords());
        let dc = cochain_group(&m, 2).reduce(dc);
        assert!(dc.iter().all(Zero::is_zero));
    }

    #[test]
    fn differentials_compose_to_zero_with_negation_action() {
        let m = c2_negation_on_z4();
        for n in 0..=2 {
            let d1 = bar_differential(&m, n).unwrap();
            let d2 = bar_differential(&m, n + 1).unwrap();
            let composite = d1.then(&d2).unwrap();
            assert!(composite.is_zero(), "d∘d nonzero in degree {n}");
        }
    }

    #[test]
    fn fixed_points_of_negation_on_z4() {
        let h0 = group_cohomology(&c2_negation_on_z4(), 0).unwrap();
        assert_eq!(h0.group().describe(), "Z/2");
    }

    #[test]
    fn h1_of_c2_with_z4_coefficients() {
        let h1 = group_cohomology(&c2_mod(4), 1).unwrap();
        assert_eq!(h1.group().describe(), "Z/2");
    }

    #[test]
    fn h2_of_c2_with_z2_coefficients() {
        let h2 = group_cohomology(&c2_mod(2), 2).unwrap();
        assert_eq!(h2.group().describe(), "Z/2");
        let rep = h2.representative(0);
        assert!(h2.is_cocycle(&rep));
        assert!(!h2.is_coboundary(&rep));
    }

    #[test]
    fn cpt_dimensions_count_identity_free_tuples() {
        assert_eq!(cpt_tuple_indices(2, 2), vec![3]);
        assert_eq!(cpt_tuple_indices(2, 0), vec![0]);
        let m = c2_mod(2);
        assert_eq!(cpt_group(&m, 2).rank(), 1);
        let embed = cpt_subgroup(&m, 2);
        assert_eq!(embed.source().rank(), 1);
        assert_eq!(embed.target().rank(), 4);
    }

    #[test]
    fn cpt_predicate_spots_bad_slot() {
        let m = c2_mod(2);
        let mut c = BarCochain::zero(&m, 2).unwrap();
        c.set_value(&[0, 1], m.coeffs().element(vec![BigInt::from(1)])).unwrap();
        assert!(!is_cpt(&c));
        assert!(is_cpt(&BarCochain::zero(&m, 2).unwrap()));
    }

    #[test]
    fn b3cpt_zero_has_zero_witness() {
        let m = c2_mod(2);
        let t = BarCochain::zero(&m, 3).unwrap();
        let w = b3cpt_membership(&t).unwrap().expect("zero is a coboundary");
        let d2 = bar_differential(&m, 2).unwrap();
        let dc = cochain_group(&m, 3).reduce(d2.matrix().apply(&w.to_coords()));
        assert!(dc.iter().all(Zero::is_zero));
    }

    #[test]
    fn b3cpt_rejects_the_nontrivial_class() {
        let m = c2_mod(2);
        let t = BarCochain::from_fn(&m, 3, |t| {
            let v = if t == [1, 1, 1] { 1 } else { 0 };
            m.coeffs().element(vec![BigInt::from(v)])
        })
        .unwrap();
        assert!(b3cpt_membership(&t).unwrap().is_none());
    }

    #[test]
    fn b3cpt_round_trips_a_chosen_coboundary() {
        let m = c2_negation_on_z4();
        let c = BarCochain::from_fn(&m, 2, |t| {
            m.coeffs().element(vec![BigInt::from((t[0] + 3 * t[1]) as i64)])
        })
        .unwrap();
        let d2 = bar_differential(&m, 2).unwrap();
        let t_coords = cochain_group(&m, 3).reduce(d2.matrix().apply(&c.to_coords()));
        let t = BarCochain::from_coords(&m, 3, &t_coords).unwrap();
        let w = b3cpt_membership(&t).unwrap().expect("constructed as a coboundary");
        let back = cochain_group(&m, 3).reduce(d2.matrix().apply(&w.to_coords()));
        assert_eq!(back, t_coords);
    }

    #[test]
    fn equivariant_homs_match_expected_groups() {
        let homs = equivariant_hom_group(&c2_mod(2), &c2_mod(2)).unwrap();
        assert_eq!(homs.group().describe(), "Z/2");
        let homs = equivariant_hom_group(&c2_mod(2), &c2_mod(4)).unwrap();
        assert_eq!(homs.group().describe(), "Z/2");
        let gen = homs.generator_hom(0);
        let image = homs.source.coeffs().element(vec![BigInt::from(1)]);
        assert_eq!(
            gen.apply(&image).coords(),
            &[BigInt::from(2)],
            "generator sends 1 to the unique 2-torsion element"
        );
        let homs = equivariant_hom_group(&c2_mod(2), &c2_mod(3)).unwrap();
        assert!(homs.group().is_trivial());
    }

    #[test]
    fn negation_cuts_equivariant_homs_down() {
        // Hom(Z/4, Z/4) is Z/4; requiring f(−k) = f(k) leaves the 2-torsion.
        let source = GModule::new(
            FiniteGroup::cyclic(2),
            FPAbelianGroup::cyclic(4),
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[&[-1]])],
        )
        .unwrap();
        let target = c2_mod(4);
        let homs = equivariant_hom_group(&source, &target).unwrap();
        assert_eq!(homs.group().describe(), "Z/2");
    }
}
