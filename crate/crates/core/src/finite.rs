//! Finite Hom-magmas `(S, μ, α)` given by a Cayley table and a unary map.
//!
//! Elements are indices `0..n`; labels are kept only for display and for
//! resolving structure files. Every checker is exhaustive and reports the
//! lexicographically first violation by element index.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Errors from building or transforming finite structures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteError {
    /// Order zero was requested.
    #[error("a structure needs at least one element")]
    Empty,
    /// A label is empty.
    #[error("label {index} is empty")]
    EmptyLabel {
        /// Position of the label.
        index: usize,
    },
    /// Two labels coincide.
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    /// The table does not have `n` rows of `n` entries.
    #[error("multiplication table row {row} has {found} entries, expected {expected}")]
    Ragged {
        /// Offending row (or `n` when the row count is wrong).
        row: usize,
        /// Entries found.
        found: usize,
        /// Entries expected.
        expected: usize,
    },
    /// `alpha` does not have `n` entries.
    #[error("alpha has {found} entries, expected {expected}")]
    AlphaLength {
        /// Entries found.
        found: usize,
        /// Entries expected.
        expected: usize,
    },
    /// A table or alpha entry is not a valid element.
    #[error("entry {value} at {location} is out of range for order {order}")]
    OutOfRange {
        /// Where the entry sits, e.g. `mul[1][2]` or `alpha[0]`.
        location: String,
        /// The offending value.
        value: usize,
        /// Order of the structure.
        order: usize,
    },
    /// `adjoin_zero` requires an associative product.
    #[error("product is not associative: ({},{},{}) violates (ab)c = a(bc)", .0[0], .0[1], .0[2])]
    NotAssociative([String; 3]),
    /// Unknown fixture name.
    #[error("unknown fixture {0:?} (known: hom_not_sg, involutive)")]
    UnknownFixture(String),
}

/// The four laws tracked by [`LawReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    /// `α(a)(bc) = (ab)α(c)`.
    HomAssociative,
    /// `(ab)c = a(bc)`.
    Associative,
    /// `α(ab) = α(a)α(b)`.
    Multiplicative,
    /// `α(α(a)) = a`.
    InvolutiveAlpha,
}

impl Law {
    /// All laws in report order.
    pub const ALL: [Law; 4] = [
        Law::HomAssociative,
        Law::Associative,
        Law::Multiplicative,
        Law::InvolutiveAlpha,
    ];

    /// Snake-case name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Law::HomAssociative => "hom_associative",
            Law::Associative => "associative",
            Law::Multiplicative => "multiplicative",
            Law::InvolutiveAlpha => "involutive_alpha",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element indices witnessing a failed law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Counterexample {
    /// A triple `(a, b, c)` for the ternary laws.
    Triple([usize; 3]),
    /// A pair `(a, b)` for multiplicativity.
    Pair([usize; 2]),
    /// A single element for involutivity.
    Single(usize),
}

impl Counterexample {
    /// The witness indices in order.
    pub fn indices(&self) -> &[usize] {
        match self {
            Counterexample::Triple(t) => t,
            Counterexample::Pair(p) => p,
            Counterexample::Single(a) => core::slice::from_ref(a),
        }
    }
}

/// `Ok(())` when a law holds, otherwise its first counterexample.
pub type Verdict = Result<(), Counterexample>;

/// Which of the four laws hold, as plain flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LawFlags {
    /// Hom-associative law holds.
    pub hom_associative: bool,
    /// Associative law holds.
    pub associative: bool,
    /// `α` is multiplicative.
    pub multiplicative: bool,
    /// `α² = id`.
    pub involutive_alpha: bool,
}

impl LawFlags {
    /// The flag for `law`.
    pub fn get(&self, law: Law) -> bool {
        match law {
            Law::HomAssociative => self.hom_associative,
            Law::Associative => self.associative,
            Law::Multiplicative => self.multiplicative,
            Law::InvolutiveAlpha => self.involutive_alpha,
        }
    }

    /// Hom-associative, multiplicative, and `α² = id`.
    pub fn is_involutive_hom_semigroup(&self) -> bool {
        self.hom_associative && self.multiplicative && self.involutive_alpha
    }
}

/// Outcome of all four law checks on one structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    /// Hom-associativity.
    pub hom_associative: Verdict,
    /// Plain associativity.
    pub associative: Verdict,
    /// Multiplicativity of `α`.
    pub multiplicative: Verdict,
    /// `α² = id`.
    pub involutive_alpha: Verdict,
}

impl LawReport {
    /// The verdict for `law`.
    pub fn verdict(&self, law: Law) -> &Verdict {
        match law {
            Law::HomAssociative => &self.hom_associative,
            Law::Associative => &self.associative,
            Law::Multiplicative => &self.multiplicative,
            Law::InvolutiveAlpha => &self.involutive_alpha,
        }
    }

    /// Pass/fail flags without witnesses.
    pub fn flags(&self) -> LawFlags {
        LawFlags {
            hom_associative: self.hom_associative.is_ok(),
            associative: self.associative.is_ok(),
            multiplicative: self.multiplicative.is_ok(),
            involutive_alpha: self.involutive_alpha.is_ok(),
        }
    }
}

/// A finite set with a binary product and a unary map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteHomMagma {
    pub(crate) labels: Vec<String>,
    // row-major, mul[a * n + b] = a·b
    pub(crate) mul: Vec<usize>,
    pub(crate) alpha: Vec<usize>,
}

/// Labels `a, b, c, …` for structures without explicit names.
pub fn default_labels(order: usize) -> Vec<String> {
    (0..order)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

impl FiniteHomMagma {
    /// Builds a structure from labels, table rows and `α`, all by index.
    pub fn new(
        labels: Vec<String>,
        mul: Vec<Vec<usize>>,
        alpha: Vec<usize>,
    ) -> Result<Self, FiniteError> {
        let n = labels.len();
        if mul.len() != n {
            return Err(FiniteError::Ragged {
                row: mul.len().min(n),
                found: mul.len(),
                expected: n,
            });
        }
        for (row, r) in mul.iter().enumerate() {
            if r.len() != n {
                return Err(FiniteError::Ragged {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
        }
        Self::from_flat(labels, mul.into_iter().flatten().collect(), alpha)
    }

    /// Builds a structure from a row-major flattened table.
    pub fn from_flat(
        labels: Vec<String>,
        mul: Vec<usize>,
        alpha: Vec<usize>,
    ) -> Result<Self, FiniteError> {
        let n = labels.len();
        if n == 0 {
            return Err(FiniteError::Empty);
        }
        for (index, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(FiniteError::EmptyLabel { index });
            }
            if labels[..index].contains(l) {
                return Err(FiniteError::DuplicateLabel(l.clone()));
            }
        }
        if mul.len() != n * n {
            return Err(FiniteError::Ragged {
                row: mul.len() / n,
                found: mul.len() % n,
                expected: n,
            });
        }
        if alpha.len() != n {
            return Err(FiniteError::AlphaLength {
                found: alpha.len(),
                expected: n,
            });
        }
        if let Some(i) = mul.iter().position(|&v| v >= n) {
            return Err(FiniteError::OutOfRange {
                location: format!("mul[{}][{}]", i / n, i % n),
                value: mul[i],
                order: n,
            });
        }
        if let Some(i) = alpha.iter().position(|&v| v >= n) {
            return Err(FiniteError::OutOfRange {
                location: format!("alpha[{i}]"),
                value: alpha[i],
                order: n,
            });
        }
        Ok(Self { labels, mul, alpha })
    }

    /// A structure labelled `a, b, c, …`.
    pub fn unlabeled(mul: Vec<usize>, alpha: Vec<usize>) -> Result<Self, FiniteError> {
        Self::from_flat(default_labels(alpha.len()), mul, alpha)
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// All labels, indexed by element.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The label of element `a`.
    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Element index carrying `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The product `a·b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    /// The unary map `α(a)`.
    #[inline]
    pub fn alpha(&self, a: usize) -> usize {
        self.alpha[a]
    }

    /// `α^k(a)` for `k ∈ {0, 1}` (or any `k`, iterating).
    pub fn alpha_pow(&self, a: usize, k: u8) -> usize {
        (0..k).fold(a, |x, _| self.alpha(x))
    }

    /// The flattened row-major table.
    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    /// The unary map as a slice.
    pub fn alpha_map(&self) -> &[usize] {
        &self.alpha
    }

    /// Renders a witness with labels, e.g. `(x,y,x)`.
    pub fn format_witness(&self, c: &Counterexample) -> String {
        let parts: Vec<&str> = c.indices().iter().map(|&i| self.label(i)).collect();
        if parts.len() == 1 {
            String::from(parts[0])
        } else {
            format!("({})", parts.join(","))
        }
    }

    fn triples(&self) -> impl Iterator<Item = [usize; 3]> {
        let n = self.order();
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
    }

    fn holds(&self, law: Law, c: &Counterexample) -> bool {
        match (law, c) {
            (Law::HomAssociative, Counterexample::Triple([a, b, c])) => {
                self.mul(self.alpha(*a), self.mul(*b, *c)) == self.mul(self.mul(*a, *b), self.alpha(*c))
            }
            (Law::Associative, Counterexample::Triple([a, b, c])) => {
                self.mul(self.mul(*a, *b), *c) == self.mul(*a, self.mul(*b, *c))
            }
            (Law::Multiplicative, Counterexample::Pair([a, b])) => {
                self.alpha(self.mul(*a, *b)) == self.mul(self.alpha(*a), self.alpha(*b))
            }
            (Law::InvolutiveAlpha, Counterexample::Single(a)) => self.alpha(self.alpha(*a)) == *a,
            _ => unreachable!("witness shape does not match law"),
        }
    }

    fn domain(&self, law: Law) -> impl Iterator<Item = Counterexample> + '_ {
        let n = self.order();
        let triples = matches!(law, Law::HomAssociative | Law::Associative)
            .then(|| self.triples().map(Counterexample::Triple))
            .into_iter()
            .flatten();
        let pairs = (law == Law::Multiplicative)
            .then(|| (0..n).flat_map(move |a| (0..n).map(move |b| Counterexample::Pair([a, b]))))
            .into_iter()
            .flatten();
        let singles = (law == Law::InvolutiveAlpha)
            .then(|| (0..n).map(Counterexample::Single))
            .into_iter()
            .flatten();
        triples.chain(pairs).chain(singles)
    }

    /// Checks `law` over its whole domain; the first violation in index
    /// order is returned.
    pub fn check(&self, law: Law) -> Verdict {
        match self.domain(law).find(|c| !self.holds(law, c)) {
            Some(c) => Err(c),
            None => Ok(()),
        }
    }

    /// Every violation of `law`, in index order.
    pub fn violations(&self, law: Law) -> Vec<Counterexample> {
        self.domain(law).filter(|c| !self.holds(law, c)).collect()
    }

    /// `α(a)(bc) = (ab)α(c)` for all triples.
    pub fn check_hom_associative(&self) -> Verdict {
        self.check(Law::HomAssociative)
    }

    /// `(ab)c = a(bc)` for all triples.
    pub fn check_associative(&self) -> Verdict {
        self.check(Law::Associative)
    }

    /// `α(ab) = α(a)α(b)` for all pairs.
    pub fn check_multiplicative(&self) -> Verdict {
        self.check(Law::Multiplicative)
    }

    /// `α(α(a)) = a` for all elements.
    pub fn check_involutive_alpha(&self) -> Verdict {
        self.check(Law::InvolutiveAlpha)
    }

    /// Runs all four checks.
    pub fn classify(&self) -> LawReport {
        LawReport {
            hom_associative: self.check_hom_associative(),
            associative: self.check_associative(),
            multiplicative: self.check_multiplicative(),
            involutive_alpha: self.check_involutive_alpha(),
        }
    }

    /// The absorbing element `0` with `a0 = 0a = 0` for all `a`. Zero
    /// elements are only recognized in structures with at least two
    /// elements, so order-one structures always yield `None`.
    pub fn has_zero(&self) -> Option<usize> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        (0..n).find(|&z| (0..n).all(|a| self.mul(a, z) == z && self.mul(z, a) == z))
    }

    /// `S⁰` with the constant map `α₀ ≡ 0`: reuses an existing zero, or
    /// adjoins a fresh absorbing element labelled `0` (primed until the
    /// label is unused). The product must be associative.
    pub fn adjoin_zero(&self) -> Result<FiniteHomMagma, FiniteError> {
        if let Err(c) = self.check_associative() {
            let i = c.indices();
            return Err(FiniteError::NotAssociative([
                self.label(i[0]).into(),
                self.label(i[1]).into(),
                self.label(i[2]).into(),
            ]));
        }
        if let Some(z) = self.has_zero() {
            return Ok(Self {
                labels: self.labels.clone(),
                mul: self.mul.clone(),
                alpha: alloc::vec![z; self.order()],
            });
        }
        let n = self.order();
        let mut zero = String::from("0");
        while self.labels.contains(&zero) {
            zero.push('\'');
        }
        let mut labels = self.labels.clone();
        labels.push(zero);
        let m = n + 1;
        let mut mul = alloc::vec![n; m * m];
        for a in 0..n {
            for b in 0..n {
                mul[a * m + b] = self.mul(a, b);
            }
        }
        Ok(Self {
            labels,
            mul,
            alpha: alloc::vec![n; m],
        })
    }

    /// The isomorphic copy in which element `a` becomes `perm[a]`; labels
    /// travel with their elements.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..order()`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteHomMagma {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation has wrong length");
        let mut seen = alloc::vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut labels = alloc::vec![String::new(); n];
        let mut mul = alloc::vec![0; n * n];
        let mut alpha = alloc::vec![0; n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            alpha[perm[a]] = perm[self.alpha(a)];
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Self { labels, mul, alpha }
    }

    /// Whether some bijection carries one structure onto the other,
    /// ignoring labels. Tries all `n!` permutations.
    pub fn is_isomorphic(&self, other: &FiniteHomMagma) -> bool {
        if self.order() != other.order() {
            return false;
        }
        permutations(self.order()).any(|p| {
            let q = self.permuted(&p);
            q.mul == other.mul && q.alpha == other.alpha
        })
    }
}

impl fmt::Debug for FiniteHomMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let rows: Vec<Vec<&str>> = (0..n)
            .map(|a| (0..n).map(|b| self.label(self.mul(a, b))).collect())
            .collect();
        let alpha: Vec<&str> = (0..n).map(|a| self.label(self.alpha(a))).collect();
        f.debug_struct("FiniteHomMagma")
            .field("labels", &self.labels)
            .field("mul", &rows)
            .field("alpha", &alpha)
            .finish()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((0..n).collect());
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut p = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            next = Some(p);
        }
        Some(current)
    })
}

/// The two worked examples on `{x, y, z}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// A Hom-semigroup whose product is not associative, `α ≡ z`.
    HomNotSemigroup,
    /// An involutive Hom-semigroup, `α` swapping `x` and `y`.
    Involutive,
}

impl Fixture {
    /// Both fixtures.
    pub const ALL: [Fixture; 2] = [Fixture::HomNotSemigroup, Fixture::Involutive];

    /// The lookup name.
    pub fn name(self) -> &'static str {
        match self {
            Fixture::HomNotSemigroup => "hom_not_sg",
            Fixture::Involutive => "involutive",
        }
    }

    /// Builds the structure, labels `x, y, z`.
    pub fn build(self) -> FiniteHomMagma {
        const X: usize = 0;
        const Y: usize = 1;
        const Z: usize = 2;
        let (mul, alpha) = match self {
            Fixture::HomNotSemigroup => (
                alloc::vec![Y, X, Z, Y, Y, Z, Z, Z, Z],
                alloc::vec![Z, Z, Z],
            ),
            Fixture::Involutive => (
                alloc::vec![Y, X, Z, Y, X, Z, Z, Z, Z],
                alloc::vec![Y, X, Z],
            ),
        };
        let labels = ["x", "y", "z"].iter().map(|s| String::from(*s)).collect();
        FiniteHomMagma::from_flat(labels, mul, alpha).expect("fixture tables are valid")
    }
}

impl FromStr for Fixture {
    type Err = FiniteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FiniteError::UnknownFixture(String::from(s)))
    }
}

/// Looks up a fixture by name (`hom_not_sg` or `involutive`).
pub fn fixture(name: &str) -> Result<FiniteHomMagma, FiniteError> {
    name.parse::<Fixture>().map(Fixture::build)
}
