//! Seeded generators of random braid words for sweeps and tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::word::{ArtinLetter, BraidWord, LoopLetter, LoopWord};

/// A random loop word with `len` free letters followed by, at random
/// positions, the letters needed to cancel both exponent sums.
pub fn balanced_loop_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> LoopWord {
    const LETTERS: [LoopLetter; 4] = [LoopLetter::X, LoopLetter::XInv, LoopLetter::Y, LoopLetter::YInv];
    let mut letters: Vec<LoopLetter> = (0..len).map(|_| *LETTERS.choose(rng).unwrap()).collect();
    let w = LoopWord::new(letters.clone());
    let mut fix = Vec::new();
    let (x, y) = (w.x_exponent(), w.y_exponent());
    let xl = if x > 0 { LoopLetter::XInv } else { LoopLetter::X };
    let yl = if y > 0 { LoopLetter::YInv } else { LoopLetter::Y };
    fix.extend(std::iter::repeat_n(xl, x.unsigned_abs() as usize));
    fix.extend(std::iter::repeat_n(yl, y.unsigned_abs() as usize));
    fix.shuffle(rng);
    for l in fix {
        let at = rng.gen_range(0..=letters.len());
        letters.insert(at, l);
    }
    LoopWord::new(letters)
}

/// A random pure Artin word built from `len` factors `A_ij^{±1}`, where
/// `A_ij = (s_{j-1} ⋯ s_{i+1}) s_i² (s_{j-1} ⋯ s_{i+1})⁻¹` is the standard
/// pure-braid generator.
pub fn pure_artin_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> BraidWord {
    let mut word = BraidWord::default();
    for _ in 0..len {
        let i = rng.gen_range(1..=3u8);
        let j = rng.gen_range(i + 1..=4u8);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let conj: Vec<ArtinLetter> = (i + 1..j)
            .rev()
            .map(|g| ArtinLetter {
                generator: g,
                exponent: 1,
            })
            .collect();
        let mut letters = conj.clone();
        letters.push(ArtinLetter {
            generator: i,
            exponent: 2 * sign,
        });
        letters.extend(conj.iter().rev().map(|l| ArtinLetter {
            generator: l.generator,
            exponent: -1,
        }));
        word = word.concat(&BraidWord::new(letters).expect("A_ij is pure"));
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn balanced_words_are_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for len in 0..30 {
            assert!(balanced_loop_word(&mut rng, len).is_balanced());
        }
    }

    #[test]
    fn pure_words_are_pure() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for len in 0..20 {
            let w = pure_artin_word(&mut rng, len);
            assert!(BraidWord::new(w.letters().to_vec()).is_ok());
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = balanced_loop_word(&mut ChaCha8Rng::seed_from_u64(9), 12);
        let b = balanced_loop_word(&mut ChaCha8Rng::seed_from_u64(9), 12);
        assert_eq!(a, b);
    }
}
