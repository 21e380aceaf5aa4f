//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..order` and the identity is always index 0. Every
//! later choice of section or coset representative resolves ties through this
//! fixed total order, so results are reproducible across runs.

use std::collections::HashMap;

use abelian_core::{canonicalize_full, AbElement, FPAbelianGroup, IntMatrix};
use num_bigint::BigInt;

use crate::error::GroupError;

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major products: `table[x * order + y] = x·y`.
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a square index table as a group with identity at index 0.
    ///
    /// The first violated axiom is reported with a witness: a non-identity
    /// row or column, a non-associative triple, or an element without an
    /// inverse.
    pub fn validate_group(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            for (y, &v) in r.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { x: row, y, value: v, order });
                }
            }
        }
        if order == 0 {
            return Err(GroupError::MissingIdentity { witness: 0 });
        }
        for x in 0..order {
            if table[0][x] != x || table[x][0] != x {
                return Err(GroupError::MissingIdentity { witness: x });
            }
        }
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(GroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        let mut inverses = vec![0usize; order];
        for x in 0..order {
            match (0..order).find(|&y| table[x][y] == 0 && table[y][x] == 0) {
                Some(y) => inverses[x] = y,
                None => return Err(GroupError::MissingInverse { x }),
            }
        }
        let flat = table.iter().flat_map(|r| r.iter().copied()).collect();
        Ok(FiniteGroup { order, table: flat, inverses })
    }

    /// Cyclic group of order `n` with generator 1; index `k` is the k-th power.
    #[must_use]
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0, "cyclic group needs positive order");
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push((x + y) % n);
            }
        }
        let inverses = (0..n).map(|x| (n - x) % n).collect();
        FiniteGroup { order: n, table, inverses }
    }

    /// Direct product; index pairs `(a, b)` are flattened as `a * |B| + b`.
    #[must_use]
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let order = a.order * b.order;
        let mut table = Vec::with_capacity(order * order);
        for xa in 0..a.order {
            for xb in 0..b.order {
                for ya in 0..a.order {
                    for yb in 0..b.order {
                        table.push(a.mul(xa, ya) * b.order + b.mul(xb, yb));
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|x| a.inv(x / b.order) * b.order + b.inv(x % b.order))
            .collect();
        FiniteGroup { order, table, inverses }
    }

    #[must_use]
    pub fn order(&self) -> usize {
        self.order
    }

    #[must_use]
    pub fn identity(&self) -> usize {
        0
    }

    #[must_use]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[must_use]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// Conjugate `^g h = g h g⁻¹`.
    #[must_use]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Left-to-right product of a slice of elements; empty product is 1.
    #[must_use]
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    #[must_use]
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// The subgroup generated by a closed subset containing the identity,
    /// reindexed with the identity first and the rest in ascending order.
    /// Returns the subgroup and its embedding as an element-index table.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let mut members: Vec<usize> = elements.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(GroupError::SubsetMissingIdentity);
        }
        let position: HashMap<usize, usize> =
            members.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n = members.len();
        let mut table = Vec::with_capacity(n * n);
        for &x in &members {
            for &y in &members {
                match position.get(&self.mul(x, y)) {
                    Some(&p) => table.push(p),
                    None => return Err(GroupError::NotClosed { x, y }),
                }
            }
        }
        let inverses = members
            .iter()
            .map(|&x| position.get(&self.inv(x)).copied().ok_or(GroupError::NotClosed { x, y: x }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((FiniteGroup { order: n, table, inverses }, members))
    }

    /// Quotient by a normal subgroup given as a set of element indices.
    ///
    /// Coset representatives are the minimal element index of each coset;
    /// cosets are ordered by representative, which puts the identity coset
    /// first. Returns the quotient, the projection, and the representatives.
    pub fn quotient_by_normal(
        &self,
        normal: &[usize],
    ) -> Result<(FiniteGroup, GroupHom, Vec<usize>), GroupError> {
        let (_, members) = self.subgroup(normal)?;
        for g in 0..self.order {
            for &h in &members {
                if !members.contains(&self.conj(g, h)) {
                    return Err(GroupError::NotNormal { g, h });
                }
            }
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &h in &members {
                coset_of[self.mul(x, h)] = idx;
            }
        }
        let n = reps.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let inverses = reps.iter().map(|&a| coset_of[self.inv(a)]).collect();
        let quotient = FiniteGroup { order: n, table, inverses };
        let projection = GroupHom::new(self.clone(), quotient.clone(), coset_of.clone())?;
        Ok((quotient, projection, reps))
    }
}

/// A homomorphism of finite groups as an index table, validated on creation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Checks `f(x·y) = f(x)·f(y)` on all pairs. Preservation of the identity
    /// follows from the pair `(0, 0)` by cancellation in the target.
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::MapLengthMismatch { len: map.len(), order: source.order() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(GroupError::MapOutOfRange { value: v, order: target.order() });
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(GroupError::NotHomomorphism { x, y });
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    #[must_use]
    pub fn identity(group: FiniteGroup) -> GroupHom {
        let map = (0..group.order()).collect();
        GroupHom { source: group.clone(), target: group, map }
    }

    /// The constant map to the identity.
    #[must_use]
    pub fn trivial(source: FiniteGroup, target: FiniteGroup) -> GroupHom {
        let map = vec![0; source.order()];
        GroupHom { source, target, map }
    }

    #[must_use]
    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    #[must_use]
    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[must_use]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    #[must_use]
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Composition in diagram order: first `self`, then `other`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom, GroupError> {
        if self.target != other.source {
            return Err(GroupError::GroupMismatch);
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Ok(GroupHom { source: self.source.clone(), target: other.target.clone(), map })
    }

    /// Elements mapping to the identity, ascending.
    #[must_use]
    pub fn kernel_elements(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&x| self.map[x] == 0).collect()
    }

    /// Image as a sorted, deduplicated set of target indices.
    #[must_use]
    pub fn image_elements(&self) -> Vec<usize> {
        let mut image = self.map.clone();
        image.sort_unstable();
        image.dedup();
        image
    }

    #[must_use]
    pub fn is_injective(&self) -> bool {
        self.kernel_elements().len() == 1
    }

    #[must_use]
    pub fn is_surjective(&self) -> bool {
        self.image_elements().len() == self.target.order()
    }

    #[must_use]
    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// A finite abelian group rewritten in invariant-factor coordinates, with the
/// dictionary between table indices and coordinate vectors.
///
/// The presentation takes one generator per element and one relation per
/// product, so the coordinate group is isomorphic to the table group; both
/// directions of the dictionary are checked on construction.
#[derive(Debug, Clone)]
pub struct AbelianizedGroup {
    table_group: FiniteGroup,
    group: FPAbelianGroup,
    encode: Vec<Vec<BigInt>>,
    decode: HashMap<Vec<BigInt>, usize>,
}

impl AbelianizedGroup {
    #[must_use]
    pub fn table_group(&self) -> &FiniteGroup {
        &self.table_group
    }

    /// The group in invariant-factor form.
    #[must_use]
    pub fn group(&self) -> &FPAbelianGroup {
        &self.group
    }

    /// Coordinates of the table element `x`.
    #[must_use]
    pub fn encode(&self, x: usize) -> AbElement {
        self.group.element(self.encode[x].clone())
    }

    /// Table index of a coordinate vector; total because the dictionary is a
    /// verified bijection.
    #[must_use]
    pub fn decode(&self, coords: &[BigInt]) -> usize {
        let reduced = self.group.reduce(coords.to_vec());
        self.decode[&reduced]
    }
}

/// Invariant-factor coordinates for a finite abelian group given as a table.
///
/// Fails with a witness pair if the group is not abelian.
pub fn abelianize(g: &FiniteGroup) -> Result<AbelianizedGroup, GroupError> {
    let n = g.order();
    for x in 0..n {
        for y in 0..x {
            if g.mul(x, y) != g.mul(y, x) {
                return Err(GroupError::NotAbelian { x, y });
            }
        }
    }
    // Cayley presentation: generator x_e per element, relation x_a + x_b = x_ab.
    let mut relations = IntMatrix::zero(n, n * n);
    for a in 0..n {
        for b in 0..n {
            let col = a * n + b;
            let mut add = |row: usize, v: i64| {
                let cur = relations.at(row, col).clone();
                relations.set(row, col, cur + BigInt::from(v));
            };
            add(a, 1);
            add(b, 1);
            add(g.mul(a, b), -1);
        }
    }
    let canon = canonicalize_full(&relations);
    let group = canon.group;
    let encode: Vec<Vec<BigInt>> =
        (0..n).map(|x| group.reduce(canon.to_canonical.column(x))).collect();
    let mut decode = HashMap::new();
    for (x, coords) in encode.iter().enumerate() {
        decode.insert(coords.clone(), x);
    }
    assert_eq!(decode.len(), n, "element coordinates must be distinct");
    assert_eq!(group.order().map(|o| o.to_string()), Some(n.to_string()));
    assert!(encode[0].iter().all(|c| c == &BigInt::from(0)));
    for a in 0..n {
        for b in 0..n {
            let sum = group.reduce(
                encode[a].iter().zip(&encode[b]).map(|(x, y)| x + y).collect(),
            );
            assert_eq!(sum, encode[g.mul(a, b)], "dictionary must be additive");
        }
    }
    Ok(AbelianizedGroup { table_group: g.clone(), group, encode, decode })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table_is_valid() {
        let g = FiniteGroup::validate_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn c4_table_is_valid_with_expected_inverses() {
        let g = FiniteGroup::cyclic(4);
        let rows: Vec<Vec<usize>> =
            (0..4).map(|x| (0..4).map(|y| g.mul(x, y)).collect()).collect();
        let validated = FiniteGroup::validate_group(&rows).unwrap();
        let inverses: Vec<usize> = (0..4).map(|x| validated.inv(x)).collect();
        assert_eq!(inverses, vec![0, 3, 2, 1]);
    }

    #[test]
    fn bad_row_is_rejected_with_witness() {
        // Row 1 repeats an entry, destroying inverses for element 1.
        let err = FiniteGroup::validate_group(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::MissingInverse { x: 1 });
        let err =
            FiniteGroup::validate_group(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]])
                .unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }

    #[test]
    fn homomorphism_validation_catches_non_homs() {
        let c4 = FiniteGroup::cyclic(4);
        let c2 = FiniteGroup::cyclic(2);
        let ok = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(ok.kernel_elements(), vec![0, 2]);
        assert!(GroupHom::new(c4, c2, vec![0, 1, 1, 0]).is_err());
    }

    #[test]
    fn quotient_of_c4_by_squares_is_c2() {
        let c4 = FiniteGroup::cyclic(4);
        let (q, proj, reps) = c4.quotient_by_normal(&[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(reps, vec![0, 1]);
        assert_eq!(proj.apply(3), 1);
    }

    #[test]
    fn klein_four_abelianizes_to_z2_z2() {
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let ab = abelianize(&v4).unwrap();
        assert_eq!(ab.group().describe(), "Z/2 ⊕ Z/2");
        for x in 0..4 {
            assert_eq!(ab.decode(ab.encode(x).coords()), x);
        }
    }

    #[test]
    fn c6_abelianizes_to_single_factor() {
        let ab = abelianize(&FiniteGroup::cyclic(6)).unwrap();
        assert_eq!(ab.group().describe(), "Z/6");
        let two = ab.encode(2);
        let four = ab.encode(4);
        assert_eq!(ab.decode(two.add(&four).coords()), 0);
    }

    #[test]
    fn symmetric_group_is_not_abelian() {
        // S3 as permutation composition table.
        let s3 = symmetric3();
        assert!(matches!(abelianize(&s3), Err(GroupError::NotAbelian { .. })));
    }

    fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            [q[p[0]], q[p[1]], q[p[2]]]
        };
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let r = compose(p, q);
                        perms.iter().position(|s| *s == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::validate_group(&rows).unwrap()
    }
}
