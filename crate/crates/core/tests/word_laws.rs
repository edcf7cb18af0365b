use std::collections::BTreeSet;

use homsg_core::terms::{words_up_to, BracketedLetter, GeneratorId, Word};
use proptest::prelude::*;

fn gen(s: &str) -> GeneratorId {
    GeneratorId::new(s).unwrap()
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..4usize, 0..2u8), 1..=max_len).prop_map(|v| {
        let names = ["a", "b", "c", "d"];
        Word::new(
            v.into_iter()
                .map(|(g, k)| BracketedLetter::new(gen(names[g]), k).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn alpha_is_an_involution(w in word(10)) {
        prop_assert_eq!(w.alpha().alpha(), w);
    }

    #[test]
    fn alpha_acts_letterwise(w in word(10)) {
        let letterwise = w
            .letters()
            .iter()
            .map(|l| Word::from_letter(l.clone()).alpha())
            .reduce(|a, b| a.concat(&b))
            .unwrap();
        prop_assert_eq!(w.alpha(), letterwise);
    }

    #[test]
    fn recursive_and_closed_products_agree(u in word(10), v in word(10)) {
        prop_assert_eq!(u.diamond(&v), u.diamond_closed(&v));
    }

    #[test]
    fn single_letter_left_factor_concatenates(u in word(1), v in word(8)) {
        prop_assert_eq!(u.diamond(&v), u.concat(&v));
    }

    #[test]
    fn lengths_add(u in word(8), v in word(8)) {
        prop_assert_eq!(u.diamond(&v).len(), u.len() + v.len());
    }

    #[test]
    fn split_law(w in word(9), v in word(6), at in 1usize..9) {
        prop_assume!(at < w.len());
        let (w1, w2) = w.split_at(at).unwrap();
        let rhs = w1.alpha().concat(&w2.diamond(&v.alpha_pow(w1.len())));
        prop_assert_eq!(w.diamond(&v), rhs);
    }

    #[test]
    fn alpha_is_multiplicative(u in word(8), v in word(8)) {
        prop_assert_eq!(u.diamond(&v).alpha(), u.alpha().diamond(&v.alpha()));
    }

    #[test]
    fn hom_associative(u in word(6), v in word(6), w in word(6)) {
        prop_assert_eq!(
            u.alpha().diamond(&v.diamond(&w)),
            u.diamond(&v).diamond(&w.alpha())
        );
    }

    #[test]
    fn rendering_round_trips(w in word(8)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn construction_evaluates_back(w in word(8)) {
        prop_assert_eq!(w.construction().evaluate(), w);
    }
}

#[test]
fn product_is_not_associative() {
    let (x, y, z) = (
        Word::embed(gen("x")),
        Word::embed(gen("y")),
        Word::embed(gen("z")),
    );
    assert_eq!(x.diamond(&y).diamond(&z).to_string(), "[x] y [z]");
    assert_eq!(x.diamond(&y.diamond(&z)).to_string(), "x y z");
}

/// Closes the generators under `⋄` and `α` (keeping lengths ≤ 4) without
/// using the peel-first-letter construction, and compares with all words.
#[test]
fn generators_reach_every_short_word() {
    const L: usize = 4;
    let alphabet = [gen("a"), gen("b")];
    let mut reached: BTreeSet<Word> = alphabet.iter().cloned().map(Word::embed).collect();
    loop {
        let current: Vec<Word> = reached.iter().cloned().collect();
        let before = reached.len();
        for u in &current {
            reached.insert(u.alpha());
            for v in &current {
                if u.len() + v.len() <= L {
                    reached.insert(u.diamond(v));
                }
            }
        }
        if reached.len() == before {
            break;
        }
    }
    let all: BTreeSet<Word> = words_up_to(&alphabet, L).into_iter().collect();
    assert_eq!(reached, all);
}
