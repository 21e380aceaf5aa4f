//! Freely reduced words over the nonidentity elements of a finite group.

use group_core::FiniteGroup;

use crate::error::StdExtError;

/// A freely reduced word in the free group on π₀∖{1}.
///
/// Letters are pairs of a π₀ element index and an exponent ±1; index 0 is the
/// identity of π₀ and never occurs as a letter. Every constructor reduces, so
/// no adjacent pair cancels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

fn push_reduced(stack: &mut Vec<(usize, i8)>, letter: (usize, i8)) {
    match stack.last() {
        Some(&(base, sign)) if base == letter.0 && sign == -letter.1 => {
            stack.pop();
        }
        _ => stack.push(letter),
    }
}

impl FreeWord {
    /// The empty word.
    #[must_use]
    pub fn identity() -> FreeWord {
        FreeWord { letters: Vec::new() }
    }

    /// The one-letter word on a nonidentity element.
    pub fn generator(x: usize) -> Result<FreeWord, StdExtError> {
        if x == 0 {
            return Err(StdExtError::IdentityLetter);
        }
        Ok(FreeWord { letters: vec![(x, 1)] })
    }

    /// Free reduction of a raw letter sequence.
    pub fn reduce(letters: &[(usize, i8)]) -> Result<FreeWord, StdExtError> {
        let mut stack = Vec::with_capacity(letters.len());
        for &(base, sign) in letters {
            if base == 0 {
                return Err(StdExtError::IdentityLetter);
            }
            if sign != 1 && sign != -1 {
                return Err(StdExtError::BadExponent { exponent: sign });
            }
            push_reduced(&mut stack, (base, sign));
        }
        Ok(FreeWord { letters: stack })
    }

    #[must_use]
    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation followed by reduction at the seam.
    #[must_use]
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut stack = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut stack, letter);
        }
        FreeWord { letters: stack }
    }

    /// The inverse word: letters reversed, exponents flipped.
    #[must_use]
    pub fn inv(&self) -> FreeWord {
        let letters = self.letters.iter().rev().map(|&(base, sign)| (base, -sign)).collect();
        FreeWord { letters }
    }

    /// The image in π₀ under the homomorphism induced by the identity on the
    /// generating set.
    pub fn pi(&self, pi0: &FiniteGroup) -> Result<usize, StdExtError> {
        let mut image = pi0.identity();
        for &(base, sign) in &self.letters {
            if base >= pi0.order() {
                return Err(StdExtError::LetterOutOfRange { letter: base, order: pi0.order() });
            }
            let factor = if sign > 0 { base } else { pi0.inv(base) };
            image = pi0.mul(image, factor);
        }
        Ok(image)
    }
}

impl std::fmt::Display for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(base, sign)| {
                if sign > 0 {
                    format!("g{base}")
                } else {
                    format!("g{base}⁻¹")
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::reduce(letters).unwrap()
    }

    #[test]
    fn reduction_cancels_adjacent_inverse_pairs() {
        assert!(word(&[(1, 1), (1, -1)]).is_empty());
        assert!(word(&[(2, -1), (2, 1)]).is_empty());
        assert_eq!(word(&[(1, 1), (2, 1), (2, -1), (1, 1)]), word(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn multiplication_does_not_collapse_repeated_letters() {
        let x = FreeWord::generator(1).unwrap();
        let squared = x.mul(&x);
        assert_eq!(squared.len(), 2);
        assert_eq!(squared.letters(), &[(1, 1), (1, 1)]);
    }

    #[test]
    fn a_word_times_its_inverse_is_empty() {
        let w = word(&[(1, 1), (3, -1), (2, 1), (1, 1)]);
        assert!(w.mul(&w.inv()).is_empty());
        assert!(w.inv().mul(&w).is_empty());
    }

    #[test]
    fn identity_letters_and_bad_exponents_are_rejected() {
        assert_eq!(FreeWord::generator(0), Err(StdExtError::IdentityLetter));
        assert_eq!(FreeWord::reduce(&[(1, 1), (0, 1)]), Err(StdExtError::IdentityLetter));
        assert_eq!(FreeWord::reduce(&[(1, 2)]), Err(StdExtError::BadExponent { exponent: 2 }));
        assert_eq!(FreeWord::reduce(&[(1, 0)]), Err(StdExtError::BadExponent { exponent: 0 }));
    }

    #[test]
    fn pi_collapses_relations_of_the_target_group() {
        let c2 = group_core::FiniteGroup::cyclic(2);
        let x = FreeWord::generator(1).unwrap();
        assert_eq!(x.mul(&x).pi(&c2), Ok(0));
        assert_eq!(x.pi(&c2), Ok(1));
        assert_eq!(FreeWord::identity().pi(&c2), Ok(0));
    }

    #[test]
    fn pi_is_a_homomorphism_on_all_short_words_over_c4() {
        let c4 = group_core::FiniteGroup::cyclic(4);
        let mut words = vec![FreeWord::identity()];
        for base in 1..4usize {
            for sign in [1i8, -1] {
                words.push(word(&[(base, sign)]));
                for second in 1..4usize {
                    words.push(word(&[(base, sign), (second, 1)]));
                }
            }
        }
        for u in &words {
            for v in &words {
                let lhs = u.mul(v).pi(&c4).unwrap();
                let rhs = c4.mul(u.pi(&c4).unwrap(), v.pi(&c4).unwrap());
                assert_eq!(lhs, rhs, "π(uv) = π(u)π(v) for u = {u}, v = {v}");
            }
        }
    }

    #[test]
    fn pi_rejects_letters_outside_the_group() {
        let c2 = group_core::FiniteGroup::cyclic(2);
        let w = word(&[(3, 1)]);
        assert_eq!(w.pi(&c2), Err(StdExtError::LetterOutOfRange { letter: 3, order: 2 }));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(FreeWord::identity().to_string(), "1");
        assert_eq!(word(&[(1, 1), (2, -1)]).to_string(), "g1·g2⁻¹");
    }
}
