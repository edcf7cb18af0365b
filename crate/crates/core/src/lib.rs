//! Exact computation in free involutive Hom-semigroups and free involutive
//! Hom-associative algebras.
//!
//! A *Hom-semigroup* is a set with a binary product and a unary map `α`
//! satisfying the twisted associativity `α(x)(yz) = (xy)α(z)`. The free
//! involutive one on a set `X` is realized here on bracketed words
//! ([`Word`]) with the product [`Word::diamond`] and the bit-flipping
//! involution [`Word::alpha`].
//!
//! The crate is `no_std` (it needs `alloc`). IO, file formats and the
//! command-line front end live in the `homsg` crate.
//!
//! Modules:
//! - [`terms`]: generators, bracketed letters, words, `⋄` and `α`.
//! - [`finite`]: finite Hom-magmas given by Cayley tables and their law checkers.
//! - [`universal`]: extension of generator maps to Hom-semigroup morphisms.
//! - [`algebra`]: the rational linear span of the words.
//! - [`enumerate`]: exhaustive census of small finite Hom-magmas.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod enumerate;
pub mod finite;
pub mod terms;
pub mod universal;

pub use algebra::{AlgebraElement, Rational};
pub use enumerate::{enumerate, Census, EnumerateError, LawFilter, MAX_ORDER};
pub use finite::{
    fixture, Counterexample, Fixture, FiniteError, FiniteHomMagma, Law, LawFlags, LawReport,
    Verdict,
};
pub use terms::{BracketedLetter, Construction, GeneratorId, TermError, Word};
pub use universal::{GeneratorAssignment, MorphismViolation, UniversalError};
