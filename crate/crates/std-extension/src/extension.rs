//! The standard extension attached to a componentwise pointed 3-cocycle.
//!
//! The group part is the free group F on π₀∖{1}, the module part is the
//! direct product π₁ ⊕ Ker π where π: F → π₀ evaluates words, and the
//! structure morphism μ forgets the π₁ coordinate. Writing ι: π₁ → π₁ ⊕ Ker π
//! for the first inclusion, s⁰ for the one-letter section of π and
//! Z²(q, p) = (0, z²(q, p)) with z²(q, p) = (q s⁰)(p s⁰)((qp) s⁰)⁻¹, the
//! F-action is fixed on generators by
//!
//! ```text
//!   ^{r s⁰}(k ι)      = (^r k) ι,
//!   ^{r s⁰}((q, p)Z²) = ((r, q, p)z³ ι)⁻¹ ((r, q)Z²) ((rq, p)Z²) ((r, qp)Z²)⁻¹,
//! ```
//!
//! and extended to all of F by composition and inverses. Kernel words become
//! effective through Schreier rewriting: Ker π is free on the z²(q, p) with
//! q, p ≠ 1, and the left-to-right scan relative to the transversal s⁰(π₀)
//! rewrites any kernel word as a signed product of them.

use abelian_core::AbElement;
use crossed_core::Cpt3Cocycle;
use group_core::{BarCochain, FiniteGroup, GModule};

use crate::error::StdExtError;
use crate::word::FreeWord;

/// An element (m, f) of the module part π₁ ⊕ Ker π: a π₁ coordinate vector
/// and a kernel word. Multiplication is componentwise, so the π₁ coordinate
/// of a product is the sum of the coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StdModuleElement {
    pub(crate) pi1_part: AbElement,
    pub(crate) kernel_word: FreeWord,
}

impl StdModuleElement {
    #[must_use]
    pub fn pi1_part(&self) -> &AbElement {
        &self.pi1_part
    }

    #[must_use]
    pub fn kernel_word(&self) -> &FreeWord {
        &self.kernel_word
    }

    #[must_use]
    pub fn mul(&self, other: &StdModuleElement) -> StdModuleElement {
        StdModuleElement {
            pi1_part: self.pi1_part.add(&other.pi1_part),
            kernel_word: self.kernel_word.mul(&other.kernel_word),
        }
    }

    #[must_use]
    pub fn inv(&self) -> StdModuleElement {
        StdModuleElement {
            pi1_part: self.pi1_part.neg(),
            kernel_word: self.kernel_word.inv(),
        }
    }
}

impl std::fmt::Display for StdModuleElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {})", self.pi1_part, self.kernel_word)
    }
}

/// One factor of a kernel-word decomposition: z²(q, p) raised to `sign` and
/// conjugated by a transversal representative. The canonical scan telescopes
/// the representatives away, so it always emits the identity conjugator; the
/// field still participates in reassembly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchreierFactor {
    pub q: usize,
    pub p: usize,
    pub conjugator: FreeWord,
    pub sign: i8,
}

/// Output of the degree-3 recovery: the cocycle evaluated inside the symbolic
/// extension, and whether its table equals the defining one.
pub struct RecoveredZ3 {
    pub cocycle: Cpt3Cocycle,
    pub matches_input: bool,
}

/// The standard extension of π₀ with π₁ along a componentwise pointed
/// 3-cocycle, with the generator action rules cached per (r, q, p).
pub struct StandardExtensionObj {
    pi0: FiniteGroup,
    pi1: GModule,
    z3: Cpt3Cocycle,
    rules: Vec<StdModuleElement>,
}

impl StandardExtensionObj {
    /// Assembles the extension. The 3-cocycle must live over exactly the
    /// given module; its cocycle and pointedness properties are certified by
    /// its own type.
    pub fn new(pi1: GModule, z3: Cpt3Cocycle) -> Result<StandardExtensionObj, StdExtError> {
        let same_module = z3.module().group() == pi1.group()
            && z3.module().coeffs() == pi1.coeffs()
            && pi1.group().elements().all(|g| z3.module().action_matrix(g) == pi1.action_matrix(g));
        if !same_module {
            return Err(StdExtError::ModuleMismatch);
        }
        let pi0 = pi1.group().clone();
        let n = pi0.order();
        let section = |x: usize| {
            if x == pi0.identity() {
                FreeWord::identity()
            } else {
                FreeWord::generator(x).expect("nonidentity letter")
            }
        };
        let z2 = |q: usize, p: usize| {
            section(q).mul(&section(p)).mul(&section(pi0.mul(q, p)).inv())
        };
        let mut rules = Vec::with_capacity(n * n * n);
        for r in 0..n {
            let s = section(r);
            for q in 0..n {
                for p in 0..n {
                    rules.push(StdModuleElement {
                        pi1_part: z3.value(r, q, p).neg(),
                        kernel_word: s.mul(&z2(q, p)).mul(&s.inv()),
                    });
                }
            }
        }
        Ok(StandardExtensionObj { pi0, pi1, z3, rules })
    }

    #[must_use]
    pub fn pi0(&self) -> &FiniteGroup {
        &self.pi0
    }

    #[must_use]
    pub fn pi1(&self) -> &GModule {
        &self.pi1
    }

    #[must_use]
    pub fn z3(&self) -> &Cpt3Cocycle {
        &self.z3
    }

    /// The cached value of `^{r s⁰}((q, p)Z²)`.
    #[must_use]
    pub fn rule(&self, r: usize, q: usize, p: usize) -> &StdModuleElement {
        let n = self.pi0.order();
        &self.rules[(r * n + q) * n + p]
    }

    /// The pointed section s⁰ of π: one-letter words, the identity to the
    /// empty word.
    #[must_use]
    pub fn s0(&self, p: usize) -> FreeWord {
        assert!(p < self.pi0.order(), "element outside π₀");
        if p == self.pi0.identity() {
            FreeWord::identity()
        } else {
            FreeWord::generator(p).expect("nonidentity letter")
        }
    }

    /// The section s¹ of the structure morphism, f ↦ (0, f).
    pub fn s1(&self, f: &FreeWord) -> Result<StdModuleElement, StdExtError> {
        self.module_element(self.pi1.coeffs().zero(), f.clone())
    }

    /// The canonical monomorphism ι, k ↦ (k, 1).
    pub fn iota(&self, k: &AbElement) -> Result<StdModuleElement, StdExtError> {
        self.module_element(k.clone(), FreeWord::identity())
    }

    /// The structure morphism μ, (m, f) ↦ f.
    #[must_use]
    pub fn mu(&self, e: &StdModuleElement) -> FreeWord {
        e.kernel_word.clone()
    }

    /// π applied to a word, validating its letters against π₀.
    pub fn pi(&self, w: &FreeWord) -> Result<usize, StdExtError> {
        w.pi(&self.pi0)
    }

    /// The non-abelian 2-cocycle of s⁰, valued in Ker π.
    #[must_use]
    pub fn z2_std(&self, q: usize, p: usize) -> FreeWord {
        self.s0(q).mul(&self.s0(p)).mul(&self.s0(self.pi0.mul(q, p)).inv())
    }

    /// z² followed by s¹.
    #[must_use]
    pub fn cap_z2_std(&self, q: usize, p: usize) -> StdModuleElement {
        StdModuleElement {
            pi1_part: self.pi1.coeffs().zero(),
            kernel_word: self.z2_std(q, p),
        }
    }

    /// Validated construction of a module element: the coordinates must live
    /// in π₁ and the word must lie in Ker π.
    pub fn module_element(
        &self,
        pi1_part: AbElement,
        kernel_word: FreeWord,
    ) -> Result<StdModuleElement, StdExtError> {
        if pi1_part.group() != self.pi1.coeffs() {
            return Err(StdExtError::CoefficientMismatch);
        }
        let image = self.pi(&kernel_word)?;
        if image != self.pi0.identity() {
            return Err(StdExtError::NotInKernel { image });
        }
        Ok(StdModuleElement { pi1_part, kernel_word })
    }

    fn check_element(&self, e: &StdModuleElement) -> Result<(), StdExtError> {
        self.module_element(e.pi1_part.clone(), e.kernel_word.clone()).map(|_| ())
    }

    /// Rewrites a kernel word on the Schreier generators z²(q, p) relative to
    /// the transversal s⁰(π₀). The scan is left-to-right and carries the
    /// coset representative of the prefix read so far; factors with q = 1 are
    /// trivial and dropped. The telescoping product of the emitted factors
    /// returns the input word, which is asserted.
    pub fn schreier_decompose(&self, w: &FreeWord) -> Result<Vec<SchreierFactor>, StdExtError> {
        let image = self.pi(w)?;
        if image != self.pi0.identity() {
            return Err(StdExtError::NotInKernel { image });
        }
        let mut factors = Vec::new();
        let mut rep = self.pi0.identity();
        for &(letter, sign) in w.letters() {
            if sign > 0 {
                if rep != self.pi0.identity() {
                    factors.push(SchreierFactor {
                        q: rep,
                        p: letter,
                        conjugator: FreeWord::identity(),
                        sign: 1,
                    });
                }
                rep = self.pi0.mul(rep, letter);
            } else {
                let next = self.pi0.mul(rep, self.pi0.inv(letter));
                if next != self.pi0.identity() {
                    factors.push(SchreierFactor {
                        q: next,
                        p: letter,
                        conjugator: FreeWord::identity(),
                        sign: -1,
                    });
                }
                rep = next;
            }
        }
        let mut product = FreeWord::identity();
        for factor in &factors {
            let core = self.z2_std(factor.q, factor.p);
            let signed = if factor.sign > 0 { core } else { core.inv() };
            product = product.mul(&factor.conjugator).mul(&signed).mul(&factor.conjugator.inv());
        }
        assert_eq!(&product, w, "decomposition reassembles to the input");
        Ok(factors)
    }

    /// `^{r s⁰}(m, f)`: the π₀-action on the π₁ coordinate plus the rule
    /// contributions of the decomposition of f, with f conjugated.
    fn act_letter(&self, r: usize, e: &StdModuleElement) -> StdModuleElement {
        let mut part = self.pi1.act(r, &e.pi1_part);
        for factor in self.schreier_decompose(&e.kernel_word).expect("kernel invariant") {
            let rule = self.rule(r, factor.q, factor.p);
            part = if factor.sign > 0 {
                part.add(&rule.pi1_part)
            } else {
                part.sub(&rule.pi1_part)
            };
        }
        let s = self.s0(r);
        StdModuleElement {
            pi1_part: part,
            kernel_word: s.mul(&e.kernel_word).mul(&s.inv()),
        }
    }

    /// The inverse automorphism of `act_letter`: solves
    /// `^{r s⁰}(m', r⁻¹ f r) = (m, f)` for m'.
    fn act_letter_inverse(&self, r: usize, e: &StdModuleElement) -> StdModuleElement {
        let s = self.s0(r);
        let conjugated = s.inv().mul(&e.kernel_word).mul(&s);
        let mut correction = self.pi1.coeffs().zero();
        for factor in self.schreier_decompose(&conjugated).expect("kernel invariant") {
            let rule = self.rule(r, factor.q, factor.p);
            correction = if factor.sign > 0 {
                correction.add(&rule.pi1_part)
            } else {
                correction.sub(&rule.pi1_part)
            };
        }
        StdModuleElement {
            pi1_part: self.pi1.act(self.pi0.inv(r), &e.pi1_part.sub(&correction)),
            kernel_word: conjugated,
        }
    }

    /// The action of a word on a module element, letter by letter from the
    /// right. The kernel word of the result is g·f·g⁻¹.
    pub fn act(
        &self,
        g: &FreeWord,
        e: &StdModuleElement,
    ) -> Result<StdModuleElement, StdExtError> {
        self.pi(g)?;
        self.check_element(e)?;
        let mut current = e.clone();
        for &(letter, sign) in g.letters().iter().rev() {
            current = if sign > 0 {
                self.act_letter(letter, &current)
            } else {
                self.act_letter_inverse(letter, &current)
            };
        }
        Ok(current)
    }

    /// Evaluates the defining formula of the 3-cocycle of an extension inside
    /// this one,
    ///
    /// ```text
    ///   (r, q, p) ↦ ((r,q)Z² · (rq,p)Z² · ((r,qp)Z²)⁻¹ · (^{r s⁰}((q,p)Z²))⁻¹) ι⁻¹,
    /// ```
    ///
    /// and compares the result with the input table.
    pub fn recover_z3(&self) -> Result<RecoveredZ3, StdExtError> {
        let table = BarCochain::from_fn(&self.pi1, 3, |t| {
            let (r, q, p) = (t[0], t[1], t[2]);
            let acted = self
                .act(&self.s0(r), &self.cap_z2_std(q, p))
                .expect("cached generator words are valid");
            let product = self
                .cap_z2_std(r, q)
                .mul(&self.cap_z2_std(self.pi0.mul(r, q), p))
                .mul(&self.cap_z2_std(r, self.pi0.mul(q, p)).inv())
                .mul(&acted.inv());
            assert!(product.kernel_word.is_empty(), "the recovery product lands in ι(π₁)");
            product.pi1_part
        })
        .expect("degree 3 is in range");
        let matches_input = table.to_coords() == self.z3.table().to_coords();
        let cocycle = Cpt3Cocycle::new(table)?;
        Ok(RecoveredZ3 { cocycle, matches_input })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use abelian_core::FPAbelianGroup;
    use num_bigint::BigInt;

    /// π₀ = π₁ = Z/2 with trivial action; z³ is the indicator cocycle of
    /// (x, x, x) when nontrivial.
    fn two_two(nontrivial_z3: bool) -> StandardExtensionObj {
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = GModule::trivial(pi0, FPAbelianGroup::cyclic(2));
        let z3 = if nontrivial_z3 {
            let table = BarCochain::from_fn(&pi1, 3, |t| {
                let one = t == [1, 1, 1];
                pi1.coeffs().element(vec![BigInt::from(u64::from(one))])
            })
            .unwrap();
            Cpt3Cocycle::new(table).unwrap()
        } else {
            Cpt3Cocycle::zero(&pi1)
        };
        StandardExtensionObj::new(pi1, z3).unwrap()
    }

    /// π₀ = Z/2 acting on π₁ = Z/4 by negation; z³ takes the value 2 at
    /// (x, x, x), which the constructor certifies as a cocycle.
    fn two_four_negation() -> StandardExtensionObj {
        let pi0 = FiniteGroup::cyclic(2);
        let z4 = FPAbelianGroup::cyclic(4);
        let negation = abelian_core::IntMatrix::from_rows(&[&[-1]]);
        let pi1 = GModule::new(
            pi0,
            z4,
            vec![abelian_core::IntMatrix::identity(1), negation],
        )
        .unwrap();
        let table = BarCochain::from_fn(&pi1, 3, |t| {
            let value = if t == [1, 1, 1] { 2 } else { 0 };
            pi1.coeffs().element(vec![BigInt::from(value)])
        })
        .unwrap();
        StandardExtensionObj::new(pi1.clone(), Cpt3Cocycle::new(table).unwrap()).unwrap()
    }

    fn x() -> FreeWord {
        FreeWord::generator(1).unwrap()
    }

    #[test]
    fn z2_std_squares_the_generator_and_is_pointed() {
        let ext = two_two(true);
        assert_eq!(ext.z2_std(1, 1), x().mul(&x()));
        assert!(ext.z2_std(0, 1).is_empty());
        assert!(ext.z2_std(1, 0).is_empty());
        let lifted = ext.cap_z2_std(1, 1);
        assert!(lifted.pi1_part().is_zero());
        assert_eq!(lifted.kernel_word(), &x().mul(&x()));
    }

    #[test]
    fn the_identity_of_pi0_acts_trivially_on_the_cached_rules() {
        let ext = two_four_negation();
        for q in 0..2 {
            for p in 0..2 {
                assert_eq!(ext.rule(0, q, p), &ext.cap_z2_std(q, p));
            }
        }
    }

    #[test]
    fn schreier_decomposition_of_the_squared_generator() {
        let ext = two_two(false);
        let square = x().mul(&x());
        let factors = ext.schreier_decompose(&square).unwrap();
        assert_eq!(
            factors,
            vec![SchreierFactor { q: 1, p: 1, conjugator: FreeWord::identity(), sign: 1 }]
        );
        let inverse_factors = ext.schreier_decompose(&square.inv()).unwrap();
        assert_eq!(
            inverse_factors,
            vec![SchreierFactor { q: 1, p: 1, conjugator: FreeWord::identity(), sign: -1 }]
        );
        assert!(ext.schreier_decompose(&FreeWord::identity()).unwrap().is_empty());
    }

    #[test]
    fn words_outside_the_kernel_are_rejected() {
        let ext = two_two(false);
        assert_eq!(ext.schreier_decompose(&x()), Err(StdExtError::NotInKernel { image: 1 }));
        assert!(matches!(
            ext.module_element(ext.pi1().coeffs().zero(), x()),
            Err(StdExtError::NotInKernel { image: 1 })
        ));
    }

    #[test]
    fn module_elements_with_foreign_coordinates_are_rejected() {
        let ext = two_two(false);
        let foreign = FPAbelianGroup::cyclic(3).zero();
        assert!(matches!(
            ext.module_element(foreign, FreeWord::identity()),
            Err(StdExtError::CoefficientMismatch)
        ));
    }

    #[test]
    fn mismatched_cocycle_and_module_are_rejected() {
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = GModule::trivial(pi0.clone(), FPAbelianGroup::cyclic(2));
        let other = GModule::trivial(pi0, FPAbelianGroup::cyclic(4));
        let z3 = Cpt3Cocycle::zero(&other);
        assert!(matches!(
            StandardExtensionObj::new(pi1, z3),
            Err(StdExtError::ModuleMismatch)
        ));
    }

    #[test]
    fn the_generator_rule_drives_the_action_on_kernel_words() {
        let ext = two_two(true);
        let e = ext.s1(&ext.z2_std(1, 1)).unwrap();
        let acted = ext.act(&x(), &e).unwrap();
        // ^x(0, x²) = (−z³(x,x,x), x·x²·x⁻¹) = (y, x²) over Z/2.
        assert_eq!(acted.pi1_part(), &ext.pi1().coeffs().element(vec![BigInt::from(1)]));
        assert_eq!(acted.kernel_word(), e.kernel_word());
        // Acting again returns e: the correction appears twice and cancels.
        assert_eq!(ext.act(&x(), &acted).unwrap(), e);
    }

    #[test]
    fn iota_is_acted_on_through_pi0() {
        let ext = two_four_negation();
        let k = ext.pi1().coeffs().element(vec![BigInt::from(1)]);
        let e = ext.iota(&k).unwrap();
        let acted = ext.act(&x(), &e).unwrap();
        assert_eq!(acted.pi1_part(), &k.neg());
        assert!(acted.kernel_word().is_empty());
        assert_eq!(ext.act(&FreeWord::identity(), &e).unwrap(), e);
    }

    #[test]
    fn letter_actions_invert_each_other() {
        let ext = two_four_negation();
        let sample = ext
            .module_element(
                ext.pi1().coeffs().element(vec![BigInt::from(3)]),
                ext.z2_std(1, 1).inv(),
            )
            .unwrap();
        let there = ext.act(&x(), &sample).unwrap();
        let back = ext.act(&x().inv(), &there).unwrap();
        assert_eq!(back, sample);
        let reverse = ext.act(&x().inv(), &sample).unwrap();
        assert_eq!(ext.act(&x(), &reverse).unwrap(), sample);
    }

    #[test]
    fn recovery_reproduces_the_defining_tables() {
        for ext in [two_two(false), two_two(true), two_four_negation()] {
            let recovered = ext.recover_z3().unwrap();
            assert!(recovered.matches_input);
            assert_eq!(
                recovered.cocycle.table().to_coords(),
                ext.z3().table().to_coords()
            );
        }
    }

    #[test]
    fn recovery_example_value_at_the_diagonal() {
        let ext = two_two(true);
        let recovered = ext.recover_z3().unwrap();
        assert_eq!(
            recovered.cocycle.value(1, 1, 1),
            &ext.pi1().coeffs().element(vec![BigInt::from(1)])
        );
        let ext4 = two_four_negation();
        let recovered4 = ext4.recover_z3().unwrap();
        assert_eq!(
            recovered4.cocycle.value(1, 1, 1),
            &ext4.pi1().coeffs().element(vec![BigInt::from(2)])
        );
    }
}
