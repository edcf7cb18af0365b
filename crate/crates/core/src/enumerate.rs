//! Exhaustive census of all `(table, α)` pairs on a small carrier.
//!
//! Candidates of order `n` are visited as base-`n` numbers: the table
//! row-major with `mul[0][0]` most significant, then `α` the same way, the
//! table varying slowest. There are `n^(n²) · n^n` of them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::finite::{default_labels, permutations, FiniteHomMagma, Law, LawFlags};

/// Largest supported order. Order 4 has about 1.1·10¹² candidates, so in
/// practice only orders 1 to 3 complete.
pub const MAX_ORDER: usize = 4;

/// Errors from [`enumerate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    /// Order outside `1..=MAX_ORDER`.
    #[error("order {0} is out of range (supported: 1..={MAX_ORDER})")]
    OrderOutOfRange(usize),
}

/// A conjunction of required laws; the empty filter accepts everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LawFilter {
    required: [bool; 4],
}

impl LawFilter {
    /// Accepts every candidate.
    pub fn any() -> Self {
        Self::default()
    }

    /// Adds `law` to the requirements.
    pub fn require(mut self, law: Law) -> Self {
        self.required[law as usize] = true;
        self
    }

    /// Hom-associative, multiplicative and `α² = id`.
    pub fn involutive_hom_semigroup() -> Self {
        Self::any()
            .require(Law::HomAssociative)
            .require(Law::Multiplicative)
            .require(Law::InvolutiveAlpha)
    }

    /// The required laws.
    pub fn laws(&self) -> impl Iterator<Item = Law> + '_ {
        Law::ALL.into_iter().filter(|l| self.required[*l as usize])
    }

    /// True when no law is required.
    pub fn is_empty(&self) -> bool {
        !self.required.iter().any(|&r| r)
    }

    /// Whether `flags` satisfies every requirement.
    pub fn matches(&self, flags: &LawFlags) -> bool {
        self.laws().all(|l| flags.get(l))
    }
}

/// Counts from one enumeration run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// Carrier size.
    pub order: usize,
    /// `n^(n²) · n^n`.
    pub total_candidates: u64,
    /// Candidates per law combination (combinations with no members are absent).
    pub counts: BTreeMap<LawFlags, u64>,
    /// Isomorphism classes per law combination, when requested.
    pub iso_counts: Option<BTreeMap<LawFlags, u64>>,
    /// Candidates accepted by the filter.
    pub matched: u64,
    /// Isomorphism classes accepted by the filter, when requested.
    pub matched_up_to_iso: Option<u64>,
}

impl Census {
    /// Sum of `counts` whose flags satisfy `filter`.
    pub fn count_matching(&self, filter: &LawFilter) -> u64 {
        self.counts
            .iter()
            .filter(|(k, _)| filter.matches(k))
            .map(|(_, v)| v)
            .sum()
    }
}

/// `n^(n²) · n^n`, or `None` on overflow.
pub fn candidate_count(order: usize) -> Option<u64> {
    let n = order as u64;
    n.checked_pow((order * order) as u32)?
        .checked_mul(n.checked_pow(order as u32)?)
}

/// Whether `m` is the least member of its isomorphism class in visiting
/// order, i.e. no relabeling produces a smaller `(table, α)` encoding.
pub fn is_canonical(m: &FiniteHomMagma) -> bool {
    let n = m.order();
    let mut inverse = alloc::vec![0; n];
    for p in permutations(n).skip(1) {
        for (a, &pa) in p.iter().enumerate() {
            inverse[pa] = a;
        }
        let permuted = (0..n * n)
            .map(|k| p[m.mul(inverse[k / n], inverse[k % n])])
            .chain((0..n).map(|k| p[m.alpha(inverse[k])]));
        let own = m.mul.iter().chain(m.alpha.iter()).copied();
        if permuted.lt(own) {
            return false;
        }
    }
    true
}

/// The least relabeling of `m` in visiting order, with default labels.
pub fn canonical_form(m: &FiniteHomMagma) -> FiniteHomMagma {
    let mut best = m.permuted(&(0..m.order()).collect::<Vec<_>>());
    for p in permutations(m.order()).skip(1) {
        let q = m.permuted(&p);
        if (&q.mul, &q.alpha) < (&best.mul, &best.alpha) {
            best = q;
        }
    }
    best.labels = default_labels(m.order());
    best
}

fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Visits every candidate of `order`, tallying law combinations, and calls
/// `on_match(index, structure)` for each candidate accepted by `filter`
/// (only for canonical representatives when `up_to_iso`). Streamed
/// structures use labels `a, b, c, …` and arrive in increasing index order.
pub fn enumerate(
    order: usize,
    filter: &LawFilter,
    up_to_iso: bool,
    mut on_match: impl FnMut(u64, &FiniteHomMagma),
) -> Result<Census, EnumerateError> {
    if order == 0 || order > MAX_ORDER {
        return Err(EnumerateError::OrderOutOfRange(order));
    }
    let n = order;
    let mut m = FiniteHomMagma::unlabeled(alloc::vec![0; n * n], alloc::vec![0; n])
        .expect("zero table is valid");
    let mut counts = BTreeMap::new();
    let mut iso_counts = BTreeMap::new();
    let (mut matched, mut matched_iso, mut index) = (0u64, 0u64, 0u64);
    loop {
        loop {
            let flags = m.classify().flags();
            *counts.entry(flags).or_insert(0) += 1;
            let hit = filter.matches(&flags);
            matched += u64::from(hit);
            if up_to_iso {
                if is_canonical(&m) {
                    *iso_counts.entry(flags).or_insert(0) += 1;
                    if hit {
                        matched_iso += 1;
                        on_match(index, &m);
                    }
                }
            } else if hit {
                on_match(index, &m);
            }
            index += 1;
            if !increment(&mut m.alpha, n) {
                break;
            }
        }
        if !increment(&mut m.mul, n) {
            break;
        }
    }
    Ok(Census {
        order,
        total_candidates: index,
        counts,
        iso_counts: up_to_iso.then_some(iso_counts),
        matched,
        matched_up_to_iso: up_to_iso.then_some(matched_iso),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::fixture;

    #[test]
    fn order_one() {
        let mut seen = Vec::new();
        let c = enumerate(1, &LawFilter::any(), false, |i, m| seen.push((i, m.clone()))).unwrap();
        assert_eq!(c.total_candidates, 1);
        assert_eq!(c.matched, 1);
        let all = LawFlags { hom_associative: true, associative: true, multiplicative: true, involutive_alpha: true };
        assert_eq!(c.counts.get(&all), Some(&1));
        assert_eq!(seen.len(), 1);
    }

    #[test]
    fn order_range() {
        assert_eq!(
            enumerate(0, &LawFilter::any(), false, |_, _| {}),
            Err(EnumerateError::OrderOutOfRange(0))
        );
        assert_eq!(
            enumerate(5, &LawFilter::any(), false, |_, _| {}),
            Err(EnumerateError::OrderOutOfRange(5))
        );
        assert_eq!(candidate_count(2), Some(64));
        assert_eq!(candidate_count(3), Some(531_441));
    }

    #[test]
    fn order_two_stream_order() {
        let mut idx = Vec::new();
        let c = enumerate(2, &LawFilter::any(), false, |i, _| idx.push(i)).unwrap();
        assert_eq!(c.total_candidates, 64);
        assert_eq!(idx, (0..64).collect::<Vec<_>>());
        let hom = LawFilter::any().require(Law::HomAssociative);
        assert_eq!(c.count_matching(&hom), 22);
    }

    #[test]
    fn canonical_forms() {
        let inv = fixture("involutive").unwrap();
        let c = canonical_form(&inv);
        assert!(is_canonical(&c));
        assert!(c.is_isomorphic(&inv));
        for p in permutations(3) {
            assert_eq!(canonical_form(&inv.permuted(&p)), c);
        }
    }

    #[test]
    fn filter_semantics() {
        let f = LawFilter::involutive_hom_semigroup();
        assert_eq!(f.laws().count(), 3);
        assert!(LawFilter::any().is_empty());
        let flags = fixture("involutive").unwrap().classify().flags();
        assert!(f.matches(&flags));
        assert!(!LawFilter::any().require(Law::Associative).matches(&flags));
    }
}
