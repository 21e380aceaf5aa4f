//! Moore data of a validated instance: kernels of the faces other than `d₀`,
//! their boundary images, the crossed module induced on levels ≤ 1, and the
//! homotopy groups in degrees 0 and 1.
//!
//! The degree-1 entry is `ker d₁` at level 1, the degree-2 entry is
//! `ker d₁ ∩ ker d₂` at level 2, and the boundary `∂` is the restriction of
//! `d₀` in both degrees. Degree 0 is all of level 0.

use crossed_core::{homotopy, CrossedModule, HomotopyData};
use group_core::{FiniteGroup, GroupHom};

use crate::error::SimplicialError;
use crate::tsg::TruncatedSimplicialGroup;

/// Kernels and boundary images of the first three Moore entries.
#[derive(Debug, Clone)]
pub struct MooreData {
    n1_members: Vec<usize>,
    n2_members: Vec<usize>,
    n1_group: FiniteGroup,
    n2_group: FiniteGroup,
    n1_positions: Vec<Option<usize>>,
    n2_positions: Vec<Option<usize>>,
    b0_members: Vec<usize>,
    b1_members: Vec<usize>,
}

impl MooreData {
    /// Level-1 indices of the degree-1 entry, ascending with the identity
    /// first.
    #[must_use]
    pub fn n1_elements(&self) -> &[usize] {
        &self.n1_members
    }

    /// Level-2 indices of the degree-2 entry, ascending with the identity
    /// first.
    #[must_use]
    pub fn n2_elements(&self) -> &[usize] {
        &self.n2_members
    }

    /// Multiplication table of the degree-1 entry in position coordinates.
    #[must_use]
    pub fn n1_group(&self) -> &FiniteGroup {
        &self.n1_group
    }

    /// Multiplication table of the degree-2 entry in position coordinates.
    #[must_use]
    pub fn n2_group(&self) -> &FiniteGroup {
        &self.n2_group
    }

    /// Position of a level-1 element within the degree-1 entry, if it lies
    /// there.
    #[must_use]
    pub fn n1_position(&self, x: usize) -> Option<usize> {
        self.n1_positions[x]
    }

    /// Position of a level-2 element within the degree-2 entry, if it lies
    /// there.
    #[must_use]
    pub fn n2_position(&self, x: usize) -> Option<usize> {
        self.n2_positions[x]
    }

    /// Level-0 image of the degree-1 boundary, ascending.
    #[must_use]
    pub fn b0_elements(&self) -> &[usize] {
        &self.b0_members
    }

    /// Level-1 image of the degree-2 boundary, ascending.
    #[must_use]
    pub fn b1_elements(&self) -> &[usize] {
        &self.b1_members
    }
}

/// Extracts the Moore data. The boundary composite and the normality of both
/// boundary images follow from the validated identities, so violations are
/// internal errors and panic.
pub fn moore(g: &TruncatedSimplicialGroup) -> Result<MooreData, SimplicialError> {
    let g0 = g.level(0);
    let g1 = g.level(1);
    let g2 = g.level(2);
    let n1_members: Vec<usize> =
        (0..g1.order()).filter(|&x| g.d(1, 1, x) == g0.identity()).collect();
    let n2_members: Vec<usize> = (0..g2.order())
        .filter(|&x| g.d(2, 1, x) == g1.identity() && g.d(2, 2, x) == g1.identity())
        .collect();
    let (n1_group, n1_members) = g1.subgroup(&n1_members)?;
    let (n2_group, n2_members) = g2.subgroup(&n2_members)?;

    let mut n1_positions = vec![None; g1.order()];
    for (p, &x) in n1_members.iter().enumerate() {
        n1_positions[x] = Some(p);
    }
    let mut n2_positions = vec![None; g2.order()];
    for (p, &x) in n2_members.iter().enumerate() {
        n2_positions[x] = Some(p);
    }

    let mut b0_members: Vec<usize> = n1_members.iter().map(|&x| g.d(1, 0, x)).collect();
    b0_members.sort_unstable();
    b0_members.dedup();
    let mut b1_members: Vec<usize> = n2_members.iter().map(|&x| g.d(2, 0, x)).collect();
    b1_members.sort_unstable();
    b1_members.dedup();

    for &x in &n2_members {
        assert_eq!(
            g.d(1, 0, g.d(2, 0, x)),
            g0.identity(),
            "boundary of boundary must vanish"
        );
    }
    let mut in_b0 = vec![false; g0.order()];
    for &b in &b0_members {
        in_b0[b] = true;
    }
    for &b in &b0_members {
        for c in 0..g0.order() {
            assert!(in_b0[g0.conj(c, b)], "degree-1 boundary image must be normal in level 0");
        }
    }
    let mut in_b1 = vec![false; g1.order()];
    for &b in &b1_members {
        in_b1[b] = true;
    }
    for &b in &b1_members {
        for &x in &n1_members {
            assert!(
                in_b1[g1.conj(x, b)],
                "degree-2 boundary image must be normal in the degree-1 entry"
            );
        }
    }

    Ok(MooreData {
        n1_members,
        n2_members,
        n1_group,
        n2_group,
        n1_positions,
        n2_positions,
        b0_members,
        b1_members,
    })
}

/// The crossed module carried by levels ≤ 1: group part level 0, module part
/// the degree-1 entry modulo degree-2 boundaries, boundary induced by `d₀`,
/// action induced by conjugation along `s₀`. Keeps the dictionaries between
/// level-1 elements and module-part classes.
#[derive(Debug, Clone)]
pub struct CrossedModuleSegment {
    crossed: CrossedModule,
    moore: MooreData,
    class_of_position: Vec<usize>,
    section_of_class: Vec<usize>,
}

impl CrossedModuleSegment {
    #[must_use]
    pub fn crossed(&self) -> &CrossedModule {
        &self.crossed
    }

    #[must_use]
    pub fn moore(&self) -> &MooreData {
        &self.moore
    }

    /// Module-part class of a level-1 element, if it lies in the degree-1
    /// entry.
    #[must_use]
    pub fn module_class(&self, x: usize) -> Option<usize> {
        self.moore.n1_position(x).map(|p| self.class_of_position[p])
    }

    /// Module-part class of the degree-1 entry position `p`.
    #[must_use]
    pub fn class_of_position(&self, p: usize) -> usize {
        self.class_of_position[p]
    }

    /// Pointed section: position in the degree-1 entry of the minimal
    /// representative of a class. Position 0 represents the trivial class.
    #[must_use]
    pub fn section_position(&self, class: usize) -> usize {
        self.section_of_class[class]
    }

    /// Pointed section as a level-1 element.
    #[must_use]
    pub fn section(&self, class: usize) -> usize {
        self.moore.n1_elements()[self.section_of_class[class]]
    }
}

/// The crossed module on levels ≤ 1, with its translation dictionaries.
pub fn truncate1(g: &TruncatedSimplicialGroup) -> Result<CrossedModuleSegment, SimplicialError> {
    let moore = moore(g)?;
    let b1_positions: Vec<usize> = moore
        .b1_elements()
        .iter()
        .map(|&x| moore.n1_position(x).expect("degree-2 boundaries lie in the degree-1 entry"))
        .collect();
    let (module, projection, reps) = moore.n1_group().quotient_by_normal(&b1_positions)?;
    let g0 = g.level(0);
    let g1 = g.level(1);

    let mu_map: Vec<usize> =
        reps.iter().map(|&p| g.d(1, 0, moore.n1_elements()[p])).collect();
    let mu = GroupHom::new(module.clone(), g0.clone(), mu_map)?;
    let action: Vec<Vec<usize>> = (0..g0.order())
        .map(|a| {
            let sa = g.s(0, 0, a);
            (0..module.order())
                .map(|c| {
                    let rep = moore.n1_elements()[reps[c]];
                    let conj = g1.conj(sa, rep);
                    let p = moore
                        .n1_position(conj)
                        .expect("conjugation along s₀ preserves the degree-1 entry");
                    projection.apply(p)
                })
                .collect()
        })
        .collect();
    let crossed = CrossedModule::new(mu, action)?;
    let class_of_position =
        (0..moore.n1_elements().len()).map(|p| projection.apply(p)).collect();
    Ok(CrossedModuleSegment { crossed, moore, class_of_position, section_of_class: reps })
}

/// The level-0 group modulo degree-1 boundaries.
pub fn truncate0(g: &TruncatedSimplicialGroup) -> Result<FiniteGroup, SimplicialError> {
    let moore = moore(g)?;
    let (quotient, _, _) = g.level(0).quotient_by_normal(moore.b0_elements())?;
    Ok(quotient)
}

/// π₀ and π₁ with the π₀-action, read off the induced crossed module.
pub fn homotopy01(g: &TruncatedSimplicialGroup) -> Result<HomotopyData, SimplicialError> {
    Ok(homotopy(truncate1(g)?.crossed())?)
}
