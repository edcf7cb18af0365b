//! The universal property of `H(X)`.
//!
//! Given an involutive Hom-semigroup `(S, ·, β)` and a map `f: X → S`, the
//! unique morphism `f̄: H(X) → S` with `f̄(x) = f(x)` is computed by peeling
//! the first letter:
//!
//! ```text
//! f̄(⟨x⟩^(k))      = β^k(f(x))
//! f̄(⟨x⟩^(k) · ŵ)  = f̄(⟨x⟩^(k)) · f̄(ŵ)
//! ```
//!
//! so a word of length `m` costs `m − 1` table lookups, folded from the
//! right.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finite::{Counterexample, FiniteHomMagma, Law};
use crate::terms::{words_up_to, BracketedLetter, GeneratorId, Word};

/// Largest alphabet accepted by [`GeneratorAssignment::verify_uniqueness`].
pub const UNIQUENESS_MAX_ALPHABET: usize = 3;
/// Largest word length accepted by [`GeneratorAssignment::verify_uniqueness`].
pub const UNIQUENESS_MAX_LEN: usize = 5;

/// Errors from building or evaluating assignments.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniversalError {
    /// A mapped index is not an element of the target.
    #[error("generator {gen} is mapped to {index}, outside the target of order {order}")]
    OutOfRange {
        /// The generator.
        gen: GeneratorId,
        /// The bad index.
        index: usize,
        /// Target order.
        order: usize,
    },
    /// The target is not an involutive Hom-semigroup.
    #[error("target is not an involutive Hom-semigroup: {law} fails at {witness:?}")]
    TargetNotInvolutive {
        /// The first failing law.
        law: Law,
        /// Its first counterexample.
        witness: Counterexample,
    },
    /// A word mentions a generator without an image.
    #[error("no assignment for generator {0}")]
    MissingAssignment(GeneratorId),
    /// Exhaustive uniqueness check requested beyond its supported size.
    #[error("uniqueness check supports at most {UNIQUENESS_MAX_ALPHABET} generators and length {UNIQUENESS_MAX_LEN}, got {alphabet} and {max_len}")]
    TooLarge {
        /// Alphabet size requested.
        alphabet: usize,
        /// Length requested.
        max_len: usize,
    },
    /// Two ways of building the same word gave different target values.
    #[error("word {word} admits values {values:?} (expected only {expected})")]
    NotUnique {
        /// The word.
        word: Word,
        /// Every value reached.
        values: Vec<usize>,
        /// The value of the canonical extension.
        expected: usize,
    },
}

/// A failed morphism law found by sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `f̄(α(w)) ≠ β(f̄(w))`.
    Intertwining {
        /// Sample index that produced the witness.
        sample: u64,
        /// The word.
        word: Word,
        /// `f̄(α(w))`.
        lhs: usize,
        /// `β(f̄(w))`.
        rhs: usize,
    },
    /// `f̄(u ⋄ v) ≠ f̄(u)·f̄(v)`.
    Product {
        /// Sample index that produced the witness.
        sample: u64,
        /// Left factor.
        left: Word,
        /// Right factor.
        right: Word,
        /// `f̄(u ⋄ v)`.
        lhs: usize,
        /// `f̄(u)·f̄(v)`.
        rhs: usize,
    },
}

/// A map from generators into a finite involutive Hom-semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAssignment {
    target: FiniteHomMagma,
    map: BTreeMap<GeneratorId, usize>,
}

impl GeneratorAssignment {
    /// Validates the indices and that `target` satisfies Hom-associativity,
    /// multiplicativity and `β² = id`.
    pub fn new(
        target: FiniteHomMagma,
        map: BTreeMap<GeneratorId, usize>,
    ) -> Result<Self, UniversalError> {
        for (gen, &index) in &map {
            if index >= target.order() {
                return Err(UniversalError::OutOfRange {
                    gen: gen.clone(),
                    index,
                    order: target.order(),
                });
            }
        }
        for law in [Law::HomAssociative, Law::Multiplicative, Law::InvolutiveAlpha] {
            if let Err(witness) = target.check(law) {
                return Err(UniversalError::TargetNotInvolutive { law, witness });
            }
        }
        Ok(Self { target, map })
    }

    /// The target structure.
    pub fn target(&self) -> &FiniteHomMagma {
        &self.target
    }

    /// The generator map.
    pub fn map(&self) -> &BTreeMap<GeneratorId, usize> {
        &self.map
    }

    /// Mapped generators in sorted order.
    pub fn alphabet(&self) -> Vec<GeneratorId> {
        self.map.keys().cloned().collect()
    }

    /// `f(g)`.
    pub fn image(&self, gen: &GeneratorId) -> Result<usize, UniversalError> {
        self.map
            .get(gen)
            .copied()
            .ok_or_else(|| UniversalError::MissingAssignment(gen.clone()))
    }

    /// `f̄(⟨x⟩^(k)) = β^k(f(x))`.
    pub fn extend_letter(&self, letter: &BracketedLetter) -> Result<usize, UniversalError> {
        let fx = self.image(letter.generator())?;
        Ok(self.target.alpha_pow(fx, letter.bit()))
    }

    /// `f̄(w)`, the value of the unique morphism extending `f`.
    pub fn extend(&self, w: &Word) -> Result<usize, UniversalError> {
        let mut letters = w.letters().iter().rev();
        let last = letters.next().expect("words are nonempty");
        let mut acc = self.extend_letter(last)?;
        for l in letters {
            acc = self.target.mul(self.extend_letter(l)?, acc);
        }
        Ok(acc)
    }

    /// Samples word pairs and checks `f̄ ∘ α = β ∘ f̄` and
    /// `f̄(u ⋄ v) = f̄(u)·f̄(v)` for the canonical extension.
    pub fn verify_morphism(
        &self,
        max_len: usize,
        samples: u64,
        seed: u64,
    ) -> Result<(), MorphismViolation> {
        self.verify_morphism_with(
            |w| self.extend(w).expect("sampled words use mapped generators"),
            max_len,
            samples,
            seed,
        )
    }

    /// As [`Self::verify_morphism`] but for an arbitrary candidate map.
    ///
    /// Sample `i` draws its pair from a ChaCha8 stream keyed by `(seed, i)`,
    /// so verdicts are reproducible and independent of sampling order.
    pub fn verify_morphism_with(
        &self,
        candidate: impl Fn(&Word) -> usize,
        max_len: usize,
        samples: u64,
        seed: u64,
    ) -> Result<(), MorphismViolation> {
        let alphabet = self.alphabet();
        if alphabet.is_empty() || max_len == 0 {
            return Ok(());
        }
        let beta = |a| self.target.alpha(a);
        for sample in 0..samples {
            let mut rng = sample_rng(seed, sample);
            let u = random_word(&mut rng, &alphabet, max_len);
            let v = random_word(&mut rng, &alphabet, max_len);
            for w in [&u, &v] {
                let (lhs, rhs) = (candidate(&w.alpha()), beta(candidate(w)));
                if lhs != rhs {
                    return Err(MorphismViolation::Intertwining {
                        sample,
                        word: w.clone(),
                        lhs,
                        rhs,
                    });
                }
            }
            let lhs = candidate(&u.diamond(&v));
            let rhs = self.target.mul(candidate(&u), candidate(&v));
            if lhs != rhs {
                return Err(MorphismViolation::Product {
                    sample,
                    left: u,
                    right: v,
                    lhs,
                    rhs,
                });
            }
        }
        Ok(())
    }

    /// Confirms that every way of building a word from generators with `⋄`
    /// and `α` yields the same target value as [`Self::extend`], for all
    /// words up to `max_len` letters.
    ///
    /// A word `w` of length `m` equals `u ⋄ v` exactly for the `m − 1`
    /// splits `w = w₁·w₂` with `u = α(w₁)` on all but its last letter and
    /// `v = α^(|w₁|−1)(w₂)`. The set of values a morphism could take on `w`
    /// is therefore closed under these splits and under `β`; it must be the
    /// single value `f̄(w)`.
    pub fn verify_uniqueness(&self, max_len: usize) -> Result<(), UniversalError> {
        let alphabet = self.alphabet();
        if alphabet.len() > UNIQUENESS_MAX_ALPHABET || max_len > UNIQUENESS_MAX_LEN {
            return Err(UniversalError::TooLarge {
                alphabet: alphabet.len(),
                max_len,
            });
        }
        let mut values: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
        // words_up_to yields shorter words first, so every split is already known
        for w in words_up_to(&alphabet, max_len) {
            let reached = if w.len() == 1 {
                let mut s = BTreeSet::new();
                s.insert(self.extend_letter(&w.letters()[0])?);
                s.insert(self.target.alpha(self.extend_letter(&w.alpha().letters()[0])?));
                s
            } else {
                let mut s = self.split_products(&w, &values);
                s.extend(
                    self.split_products(&w.alpha(), &values)
                        .into_iter()
                        .map(|a| self.target.alpha(a)),
                );
                s
            };
            let expected = self.extend(&w)?;
            if reached.len() != 1 || !reached.contains(&expected) {
                return Err(UniversalError::NotUnique {
                    word: w,
                    values: reached.into_iter().collect(),
                    expected,
                });
            }
            values.insert(w, reached);
        }
        Ok(())
    }

    fn split_products(
        &self,
        w: &Word,
        known: &BTreeMap<Word, BTreeSet<usize>>,
    ) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for at in 1..w.len() {
            let (prefix, suffix) = w.split_at(at).expect("split point in range");
            let mut left: Vec<BracketedLetter> = prefix.letters().to_vec();
            for l in &mut left[..at - 1] {
                *l = l.flipped();
            }
            let u = Word::new(left).expect("nonempty prefix");
            let v = suffix.alpha_pow(at - 1);
            for &a in &known[&u] {
                for &b in &known[&v] {
                    out.insert(self.target.mul(a, b));
                }
            }
        }
        out
    }
}

/// The generator for sample `index` under `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A word with length uniform on `1..=max_len`, letters and bits uniform.
///
/// # Panics
///
/// If `alphabet` is empty or `max_len` is zero.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[GeneratorId], max_len: usize) -> Word {
    assert!(!alphabet.is_empty() && max_len > 0);
    let len = rng.random_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = alphabet[rng.random_range(0..alphabet.len())].clone();
            BracketedLetter::new(g, rng.random_range(0..2u8)).expect("bit in range")
        })
        .collect();
    Word::new(letters).expect("len >= 1")
}
