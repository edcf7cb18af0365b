//! The free involutive Hom-associative algebra `ℚH(X)`: finite rational
//! combinations of words, with `⋄` extended bilinearly and `α` linearly.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::terms::Word;

/// Exact rational scalars (always reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// A rational linear combination of words in canonical form: one entry
/// per word, no zero coefficients, iterated in graded word order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · w`.
    pub fn term(c: Rational, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    /// The basis element `1 · w`.
    pub fn from_word(w: Word) -> Self {
        Self::term(Rational::one(), w)
    }

    /// Builds from arbitrary `(coefficient, word)` pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Word)>) -> Self {
        let mut out = Self::zero();
        for (c, w) in terms {
            out.add_term(c, w);
        }
        out
    }

    fn add_term(&mut self, c: Rational, w: Word) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True for the empty combination.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `w` (zero when absent).
    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(word, coefficient)` pairs in graded word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// The single basis word if this is `1 · w`.
    pub fn as_basis_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Bilinear extension of `⋄`: `Σ (a_u b_v) · (u ⋄ v)`.
    pub fn diamond(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(a * b, u.diamond(v));
            }
        }
        out
    }

    /// Linear extension of `α`.
    pub fn alpha(&self) -> Self {
        // α is a bijection on words, so no terms merge
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.alpha(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::add(self, rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::add(self, &-rhs)
    }
}

impl From<Word> for AlgebraElement {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_one() {
        Ok(())
    } else if c.denom() == &BigInt::one() {
        write!(f, "{} . ", c.numer())
    } else {
        write!(f, "{}/{} . ", c.numer(), c.denom())
    }
}

/// Canonical rendering in graded word order, e.g. `x - 1/2 . [x] y`.
/// Coefficient 1 is omitted; zero renders as `0`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write_coefficient(f, &magnitude)?;
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}
