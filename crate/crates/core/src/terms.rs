//! Bracketed words: the carrier of the free involutive Hom-semigroup.
//!
//! A letter is a generator `x` carrying a bit `k ∈ {0, 1}`; bit 1 is the
//! bracketed form `⟨x⟩`, rendered `[x]`. A [`Word`] is a nonempty sequence of
//! letters. The involution flips every bit, and the product `⋄` is
//! concatenation when the left factor is a single letter and otherwise
//! flips the first letter and recurses with the right factor twisted by `α`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// Errors raised while building terms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    /// The generator name does not match `[A-Za-z_][A-Za-z0-9_]*`.
    #[error("invalid generator name {0:?}: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidName(String),
    /// A letter bit outside `{0, 1}`.
    #[error("letter bit must be 0 or 1, got {0}")]
    InvalidBit(u8),
    /// Words have at least one letter.
    #[error("empty word is not an element of H(X)")]
    EmptyWord,
    /// Malformed word literal text.
    #[error("malformed word literal at byte {offset}: {reason}")]
    Syntax {
        /// Byte offset into the input.
        offset: usize,
        /// What went wrong.
        reason: &'static str,
    },
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// A generator name, an element of the base set `X`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(Arc<str>);

impl GeneratorId {
    /// Validates `name` against `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<Self, TermError> {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if is_name_start(c) && chars.all(is_name_continue) => Ok(Self(Arc::from(name))),
            _ => Err(TermError::InvalidName(String::from(name))),
        }
    }

    /// The name as a string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for GeneratorId {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s)
    }
}

/// A generator with an exponent bit: `x` (bit 0) or `⟨x⟩` (bit 1).
///
/// Ordered by generator name first, then bit 0 before bit 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BracketedLetter {
    gen: GeneratorId,
    bit: u8,
}

impl BracketedLetter {
    /// Builds `⟨gen⟩^(bit)`; `bit` must be 0 or 1.
    pub fn new(gen: GeneratorId, bit: u8) -> Result<Self, TermError> {
        if bit > 1 {
            return Err(TermError::InvalidBit(bit));
        }
        Ok(Self { gen, bit })
    }

    /// The unbracketed letter `x`.
    pub fn plain(gen: GeneratorId) -> Self {
        Self { gen, bit: 0 }
    }

    /// The bracketed letter `⟨x⟩`.
    pub fn bracketed(gen: GeneratorId) -> Self {
        Self { gen, bit: 1 }
    }

    /// The underlying generator.
    pub fn generator(&self) -> &GeneratorId {
        &self.gen
    }

    /// The exponent bit, 0 or 1.
    pub fn bit(&self) -> u8 {
        self.bit
    }

    /// `α` on a single letter: `⟨x⟩^(k) ↦ ⟨x⟩^(k+1 mod 2)`.
    pub fn flipped(&self) -> Self {
        Self {
            gen: self.gen.clone(),
            bit: self.bit ^ 1,
        }
    }
}

impl fmt::Debug for BracketedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BracketedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bit == 1 {
            write!(f, "[{}]", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A nonempty sequence of bracketed letters, an element of `H(X)`.
///
/// Words are immutable values. Equality is structural. The total order is
/// graded lexicographic: shorter words first, then letterwise by
/// [`BracketedLetter`]'s order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<BracketedLetter>,
}

impl Word {
    /// Builds a word from its letters, rejecting the empty sequence.
    pub fn new(letters: Vec<BracketedLetter>) -> Result<Self, TermError> {
        if letters.is_empty() {
            return Err(TermError::EmptyWord);
        }
        Ok(Self { letters })
    }

    /// The length-one word consisting of `letter`.
    pub fn from_letter(letter: BracketedLetter) -> Self {
        Self {
            letters: alloc::vec![letter],
        }
    }

    /// The inclusion `X → H(X)`: `g ↦ g` with bit 0.
    pub fn embed(gen: GeneratorId) -> Self {
        Self::from_letter(BracketedLetter::plain(gen))
    }

    /// [`Word::embed`] after validating `name`.
    pub fn embed_name(name: &str) -> Result<Self, TermError> {
        GeneratorId::new(name).map(Self::embed)
    }

    /// The letters in order.
    pub fn letters(&self) -> &[BracketedLetter] {
        &self.letters
    }

    /// Number of letters; always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// The involution `α_X`: flip every bit.
    pub fn alpha(&self) -> Self {
        Self {
            letters: self.letters.iter().map(BracketedLetter::flipped).collect(),
        }
    }

    /// `α_X^n`; only the parity of `n` matters.
    pub fn alpha_pow(&self, n: usize) -> Self {
        if n % 2 == 1 {
            self.alpha()
        } else {
            self.clone()
        }
    }

    /// Plain concatenation in the free semigroup on the letters. This is
    /// not the Hom-semigroup product; see [`Word::diamond`].
    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// Splits into `(w[..at], w[at..])`; `at` must lie in `1..len()`.
    pub fn split_at(&self, at: usize) -> Option<(Word, Word)> {
        if at == 0 || at >= self.len() {
            return None;
        }
        let (l, r) = self.letters.split_at(at);
        Some((Self { letters: l.to_vec() }, Self { letters: r.to_vec() }))
    }

    /// The product `self ⋄ other`, computed by the defining recursion:
    ///
    /// - `|self| = 1`: concatenation;
    /// - otherwise `⟨x₁⟩^(k₁+1) · (rest ⋄ α(other))`.
    pub fn diamond(&self, other: &Word) -> Word {
        fn go(left: &[BracketedLetter], right: Word, out: &mut Vec<BracketedLetter>) {
            match left {
                [last] => {
                    out.push(last.clone());
                    out.extend(right.letters);
                }
                [first, rest @ ..] => {
                    out.push(first.flipped());
                    go(rest, right.alpha(), out);
                }
                [] => unreachable!("words are nonempty"),
            }
        }
        let mut out = Vec::with_capacity(self.len() + other.len());
        go(&self.letters, other.clone(), &mut out);
        Word { letters: out }
    }

    /// The product `self ⋄ other` by its closed form: flip the first
    /// `i − 1` letters of `self` (`i = |self|`), keep the last one, then
    /// append `α^(i−1)(other)`.
    ///
    /// Written independently of [`Word::diamond`] so each checks the other.
    pub fn diamond_closed(&self, other: &Word) -> Word {
        let i = self.len();
        let twist = ((i - 1) % 2) as u8;
        let mut letters = Vec::with_capacity(i + other.len());
        for (pos, l) in self.letters.iter().enumerate() {
            let flip = u8::from(pos + 1 < i);
            letters.push(BracketedLetter {
                gen: l.gen.clone(),
                bit: l.bit ^ flip,
            });
        }
        for l in &other.letters {
            letters.push(BracketedLetter {
                gen: l.gen.clone(),
                bit: l.bit ^ twist,
            });
        }
        Word { letters }
    }

    /// An expression in generators, `⋄` and `α` that evaluates to this
    /// word: `l₁ ⋄ (l₂ ⋄ (… ⋄ lₙ))` with each bracketed letter written as
    /// `α(x)`. Every word is reachable this way because a length-one left
    /// factor multiplies by concatenation.
    pub fn construction(&self) -> Construction {
        let leaf = |l: &BracketedLetter| {
            let g = Construction::Gen(l.gen.clone());
            if l.bit == 1 {
                Construction::Alpha(Box::new(g))
            } else {
                g
            }
        };
        let mut iter = self.letters.iter().rev();
        let mut acc = leaf(iter.next().expect("words are nonempty"));
        for l in iter {
            acc = Construction::Diamond(Box::new(leaf(l)), Box::new(acc));
        }
        acc
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses the word literal syntax: atoms `name` or `[name]` separated by
/// whitespace.
impl FromStr for Word {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut letters = Vec::new();
        let mut pos = 0;
        let read_name = |pos: &mut usize| -> Result<GeneratorId, TermError> {
            let start = *pos;
            while *pos < bytes.len() && is_name_continue(bytes[*pos] as char) {
                *pos += 1;
            }
            if start == *pos {
                return Err(TermError::Syntax {
                    offset: start,
                    reason: "expected a generator name",
                });
            }
            GeneratorId::new(&s[start..*pos])
        };
        while pos < bytes.len() {
            let c = bytes[pos];
            if c.is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if !letters.is_empty() && pos > 0 && !bytes[pos - 1].is_ascii_whitespace() {
                return Err(TermError::Syntax {
                    offset: pos,
                    reason: "atoms must be separated by whitespace",
                });
            }
            if c == b'[' {
                pos += 1;
                let gen = read_name(&mut pos)?;
                if bytes.get(pos) != Some(&b']') {
                    return Err(TermError::Syntax {
                        offset: pos,
                        reason: "expected ']'",
                    });
                }
                pos += 1;
                letters.push(BracketedLetter::bracketed(gen));
            } else {
                letters.push(BracketedLetter::plain(read_name(&mut pos)?));
            }
        }
        Word::new(letters)
    }
}

/// All words of length exactly `len` over `alphabet`, in the graded order
/// of [`Word`] when `alphabet` is sorted. There are `(2·|alphabet|)^len`.
pub fn words_of_length(alphabet: &[GeneratorId], len: usize) -> Vec<Word> {
    let mut letters: Vec<BracketedLetter> = Vec::with_capacity(alphabet.len() * 2);
    for g in alphabet {
        letters.push(BracketedLetter::plain(g.clone()));
        letters.push(BracketedLetter::bracketed(g.clone()));
    }
    if len == 0 || letters.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut digits = alloc::vec![0usize; len];
    loop {
        out.push(Word {
            letters: digits.iter().map(|&d| letters[d].clone()).collect(),
        });
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < letters.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All words of length `1..=max_len` over `alphabet`.
pub fn words_up_to(alphabet: &[GeneratorId], max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|n| words_of_length(alphabet, n)).collect()
}

/// A formal expression built from generators with `⋄` and `α` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// An embedded generator.
    Gen(GeneratorId),
    /// `α(e)`.
    Alpha(Box<Construction>),
    /// `a ⋄ b`.
    Diamond(Box<Construction>, Box<Construction>),
}

impl Construction {
    /// Evaluates in `H(X)` using the recursive product.
    pub fn evaluate(&self) -> Word {
        match self {
            Construction::Gen(g) => Word::embed(g.clone()),
            Construction::Alpha(e) => e.evaluate().alpha(),
            Construction::Diamond(a, b) => a.evaluate().diamond(&b.evaluate()),
        }
    }
}

/// Renders in the expression syntax: `*` for `⋄`, `A(...)` for `α`,
/// every product parenthesized except at the top level.
impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(c: &Construction, top: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match c {
                Construction::Gen(g) => write!(f, "{g}"),
                Construction::Alpha(e) => {
                    f.write_str("A(")?;
                    go(e, true, f)?;
                    f.write_str(")")
                }
                Construction::Diamond(a, b) => {
                    if !top {
                        f.write_str("(")?;
                    }
                    go(a, false, f)?;
                    f.write_str(" * ")?;
                    go(b, false, f)?;
                    if !top {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, true, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn embed_is_single_plain_letter() {
        let x = Word::embed_name("x").unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(x.letters()[0].bit(), 0);
        assert_eq!(x.to_string(), "x");
        assert_eq!(Word::embed_name("z").unwrap().to_string(), "z");
    }

    #[test]
    fn rejects_bad_names_and_bits() {
        assert_eq!(
            Word::embed_name(""),
            Err(TermError::InvalidName(String::new()))
        );
        assert!(GeneratorId::new("1x").is_err());
        assert!(GeneratorId::new("x-y").is_err());
        assert!(GeneratorId::new("_a9").is_ok());
        let x = GeneratorId::new("x").unwrap();
        assert_eq!(BracketedLetter::new(x, 2), Err(TermError::InvalidBit(2)));
        assert_eq!(Word::new(Vec::new()), Err(TermError::EmptyWord));
    }

    #[test]
    fn alpha_flips_bits() {
        assert_eq!(w("x").alpha(), w("[x]"));
        assert_eq!(w("x [y] z").alpha(), w("[x] y [z]"));
        assert_eq!(w("x [y] z").alpha().alpha(), w("x [y] z"));
        assert_eq!(w("x [y] z").alpha_pow(2), w("x [y] z"));
        assert_eq!(w("x [y] z").alpha_pow(3), w("[x] y [z]"));
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(w("x").diamond(&w("y")), w("x y"));
        assert_eq!(w("x y").diamond(&w("z")), w("[x] y [z]"));
        assert_eq!(w("x").diamond(&w("[y] z")), w("x [y] z"));
        assert_eq!(w("x y").diamond_closed(&w("z")), w("[x] y [z]"));
        assert_eq!(w("x").diamond_closed(&w("[a] b c")), w("x [a] b c"));
        // flipping the first two bits of [x] y [z] gives x [y]
        assert_eq!(w("[x] y [z]").diamond_closed(&w("p [q]")), w("x [y] [z] p [q]"));
        assert_eq!(w("[x] y [z]").diamond(&w("p [q]")), w("x [y] [z] p [q]"));
    }

    #[test]
    fn lengths_add() {
        assert_eq!(w("x").len(), 1);
        assert_eq!(w("[x] y [z]").len(), 3);
        assert_eq!(w("a b").diamond(&w("c d e")).len(), 5);
    }

    #[test]
    fn split_at_bounds() {
        let word = w("a [b] c");
        assert!(word.split_at(0).is_none());
        assert!(word.split_at(3).is_none());
        assert_eq!(word.split_at(1), Some((w("a"), w("[b] c"))));
    }

    #[test]
    fn word_literal_syntax() {
        assert_eq!(w("  x   [y]\tz ").to_string(), "x [y] z");
        assert!("".parse::<Word>().is_err());
        assert!("   ".parse::<Word>().is_err());
        assert!("[x".parse::<Word>().is_err());
        assert!("[]".parse::<Word>().is_err());
        assert!("x[y]".parse::<Word>().is_err());
        assert!("x * y".parse::<Word>().is_err());
    }

    #[test]
    fn graded_order() {
        let mut v = alloc::vec![w("b a"), w("[a]"), w("a"), w("a [a]"), w("a a"), w("b")];
        v.sort();
        let s: Vec<_> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["a", "[a]", "b", "a a", "a [a]", "b a"]);
    }

    #[test]
    fn word_enumeration_counts() {
        let ab = [GeneratorId::new("a").unwrap(), GeneratorId::new("b").unwrap()];
        assert_eq!(words_of_length(&ab, 3).len(), 64);
        assert_eq!(words_up_to(&ab, 3).len(), 4 + 16 + 64);
        let v = words_of_length(&ab, 1);
        let s: Vec<_> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["a", "[a]", "b", "[b]"]);
        assert!(words_of_length(&ab, 0).is_empty());
        let all = words_up_to(&ab, 3);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn construction_reaches_word() {
        let word = w("[x] y [z] x");
        let c = word.construction();
        assert_eq!(c.to_string(), "A(x) * (y * (A(z) * x))");
        assert_eq!(c.evaluate(), word);
    }
}
