//! Seeded random checking of the crossed module axioms in the symbolic
//! extension.
//!
//! The sampler draws words and module elements from a fixed-seed generator,
//! so a report is reproducible from (seed, count, cap) alone. The action is
//! taken as an argument by the widest entry point, which lets tests inject a
//! corrupted rule and watch the violations surface.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use abelian_core::AbElement;
use group_core::FiniteGroup;

use crate::extension::{StandardExtensionObj, StdModuleElement};
use crate::word::FreeWord;

/// Default cap on sampled word lengths.
pub const DEFAULT_WORD_CAP: usize = 8;

/// A failed axiom instance with the data that witnessed it.
#[derive(Clone, Debug)]
pub enum AxiomViolation {
    Identity {
        e: StdModuleElement,
        got: StdModuleElement,
    },
    Composition {
        g: FreeWord,
        h: FreeWord,
        e: StdModuleElement,
        joined: StdModuleElement,
        nested: StdModuleElement,
    },
    Automorphism {
        g: FreeWord,
        a: StdModuleElement,
        b: StdModuleElement,
        of_product: StdModuleElement,
        product_of: StdModuleElement,
    },
    Equivariance {
        g: FreeWord,
        e: StdModuleElement,
        expected: FreeWord,
        got: FreeWord,
    },
    Peiffer {
        a: StdModuleElement,
        b: StdModuleElement,
        acted: StdModuleElement,
        conjugated: StdModuleElement,
    },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Identity { e, got } => {
                write!(f, "the empty word moved {e} to {got}")
            }
            AxiomViolation::Composition { g, h, e, joined, nested } => write!(
                f,
                "action of {g}·{h} on {e} differs from nesting: {joined} vs {nested}"
            ),
            AxiomViolation::Automorphism { g, a, b, of_product, product_of } => write!(
                f,
                "action of {g} is not multiplicative on {a}, {b}: {of_product} vs {product_of}"
            ),
            AxiomViolation::Equivariance { g, e, expected, got } => write!(
                f,
                "μ-equivariance fails for {g} on {e}: expected kernel word {expected}, got {got}"
            ),
            AxiomViolation::Peiffer { a, b, acted, conjugated } => write!(
                f,
                "Peiffer identity fails: ^(μ{a}){b} = {acted}, conjugate is {conjugated}"
            ),
        }
    }
}

/// Outcome of a sampling run.
#[derive(Debug)]
pub struct SampleReport {
    pub samples: usize,
    pub violations: Vec<AxiomViolation>,
}

impl SampleReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for SampleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            write!(f, "all {} samples satisfy the axioms", self.samples)
        } else {
            write!(f, "{} violations in {} samples:", self.violations.len(), self.samples)?;
            for violation in &self.violations {
                write!(f, "\n  {violation}")?;
            }
            Ok(())
        }
    }
}

fn random_word(rng: &mut ChaCha20Rng, pi0: &FiniteGroup, max_len: usize) -> FreeWord {
    let n = pi0.order();
    if n <= 1 {
        return FreeWord::identity();
    }
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i8)> = (0..len)
        .map(|_| (rng.gen_range(1..n), if rng.gen::<bool>() { 1 } else { -1 }))
        .collect();
    FreeWord::reduce(&letters).expect("sampled letters are valid")
}

fn random_kernel_word(
    rng: &mut ChaCha20Rng,
    ext: &StandardExtensionObj,
    max_len: usize,
) -> FreeWord {
    let w = random_word(rng, ext.pi0(), max_len);
    let image = ext.pi(&w).expect("sampled word is valid");
    w.mul(&ext.s0(image).inv())
}

fn random_pi1(rng: &mut ChaCha20Rng, ext: &StandardExtensionObj) -> AbElement {
    let coeffs = ext.pi1().coeffs();
    // Small raw coordinates suffice: reduction folds them into each factor.
    let coords = (0..coeffs.rank()).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
    coeffs.element(coords)
}

fn random_element(
    rng: &mut ChaCha20Rng,
    ext: &StandardExtensionObj,
    max_len: usize,
) -> StdModuleElement {
    let pi1_part = random_pi1(rng, ext);
    let kernel_word = random_kernel_word(rng, ext, max_len);
    ext.module_element(pi1_part, kernel_word).expect("sampled element is valid")
}

/// Checks identity, composition, multiplicativity, μ-equivariance and the
/// Peiffer identity on `count` sampled tuples, with the action supplied by
/// the caller; pass a corrupted closure to test the reporting itself.
pub fn axiom_sample_check_with(
    ext: &StandardExtensionObj,
    seed: u64,
    count: usize,
    max_len: usize,
    action: impl Fn(&FreeWord, &StdModuleElement) -> StdModuleElement,
) -> SampleReport {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..count {
        let g = random_word(&mut rng, ext.pi0(), max_len);
        let h = random_word(&mut rng, ext.pi0(), max_len);
        let a = random_element(&mut rng, ext, max_len);
        let b = random_element(&mut rng, ext, max_len);

        let fixed = action(&FreeWord::identity(), &a);
        if fixed != a {
            violations.push(AxiomViolation::Identity { e: a.clone(), got: fixed });
        }

        let joined = action(&g.mul(&h), &a);
        let nested = action(&g, &action(&h, &a));
        if joined != nested {
            violations.push(AxiomViolation::Composition {
                g: g.clone(),
                h,
                e: a.clone(),
                joined,
                nested,
            });
        }

        let of_product = action(&g, &a.mul(&b));
        let product_of = action(&g, &a).mul(&action(&g, &b));
        if of_product != product_of {
            violations.push(AxiomViolation::Automorphism {
                g: g.clone(),
                a: a.clone(),
                b: b.clone(),
                of_product,
                product_of,
            });
        }

        let acted = action(&g, &a);
        let expected = g.mul(a.kernel_word()).mul(&g.inv());
        if acted.kernel_word() != &expected {
            violations.push(AxiomViolation::Equivariance {
                g: g.clone(),
                e: a.clone(),
                expected,
                got: acted.kernel_word().clone(),
            });
        }

        let peiffer_acted = action(&ext.mu(&a), &b);
        let conjugated = a.mul(&b).mul(&a.inv());
        if peiffer_acted != conjugated {
            violations.push(AxiomViolation::Peiffer {
                a,
                b,
                acted: peiffer_acted,
                conjugated,
            });
        }
    }
    SampleReport { samples: count, violations }
}

/// The checks with the extension's own action and an explicit length cap.
pub fn axiom_sample_check_capped(
    ext: &StandardExtensionObj,
    seed: u64,
    count: usize,
    max_len: usize,
) -> SampleReport {
    axiom_sample_check_with(ext, seed, count, max_len, |g, e| {
        ext.act(g, e).expect("sampled data is valid")
    })
}

/// The checks with the extension's own action and the default length cap.
pub fn axiom_sample_check(ext: &StandardExtensionObj, seed: u64, count: usize) -> SampleReport {
    axiom_sample_check_capped(ext, seed, count, DEFAULT_WORD_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use abelian_core::FPAbelianGroup;
    use crossed_core::Cpt3Cocycle;
    use group_core::{BarCochain, GModule};

    fn two_two_nontrivial() -> StandardExtensionObj {
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = GModule::trivial(pi0, FPAbelianGroup::cyclic(2));
        let table = BarCochain::from_fn(&pi1, 3, |t| {
            let one = t == [1, 1, 1];
            pi1.coeffs().element(vec![BigInt::from(u64::from(one))])
        })
        .unwrap();
        StandardExtensionObj::new(pi1.clone(), Cpt3Cocycle::new(table).unwrap()).unwrap()
    }

    #[test]
    fn zero_samples_pass_vacuously() {
        let ext = two_two_nontrivial();
        let report = axiom_sample_check(&ext, 0, 0);
        assert!(report.passed());
        assert_eq!(report.samples, 0);
    }

    #[test]
    fn the_same_seed_reproduces_the_same_report_text() {
        let ext = two_two_nontrivial();
        let first = axiom_sample_check(&ext, 7, 25);
        let second = axiom_sample_check(&ext, 7, 25);
        assert_eq!(first.to_string(), second.to_string());
        assert!(first.passed());
    }

    #[test]
    fn a_corrupted_rule_is_reported_with_witnesses() {
        let ext = two_two_nontrivial();
        let shift = ext.pi1().coeffs().element(vec![BigInt::from(1)]);
        let report = axiom_sample_check_with(&ext, 0, 40, 4, |g, e| {
            let honest = ext.act(g, e).expect("sampled data is valid");
            // Corruption: every action value gains a constant π₁ shift.
            ext.module_element(honest.pi1_part().add(&shift), honest.kernel_word().clone())
                .expect("kernel word untouched")
        });
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Peiffer { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Identity { .. })));
        assert!(report.to_string().contains("Peiffer"));
    }
}
