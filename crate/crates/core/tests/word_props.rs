mod common;

use common::w;
use primgen_core::{Letter, Word};
use proptest::prelude::*;

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0usize..4).prop_map(|i| Letter::ALL[i]), 0..max)
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    letters(max).prop_map(Word::reduce)
}

fn all_sequences(n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<Letter>| {
                Letter::ALL.iter().map(move |&l| {
                    let mut t = s.clone();
                    t.push(l);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn reduce_is_idempotent_exhaustively() {
    // 4^0 + ... + 4^8 sequences; length 12 exhaustive is covered below
    for seq in all_sequences(8) {
        let once = Word::reduce(seq);
        assert_eq!(Word::reduce(once.letters().to_vec()), once);
    }
}

#[test]
fn cyclic_reduction_identity_exhaustively() {
    for g in Word::all_up_to(10) {
        let (core, c) = g.cyclically_reduce();
        assert!(core.is_cyclically_reduced());
        assert_eq!(Word::product([&c.inverse(), &core, &c]), g);
    }
}

#[test]
fn conjugacy_is_an_equivalence_on_a_sample() {
    let sample: Vec<Word> = Word::all_up_to(4);
    for a in &sample {
        assert!(a.is_conjugate_to(a));
        for b in &sample {
            let ab = a.is_conjugate_to(b);
            assert_eq!(ab, b.is_conjugate_to(a));
            if ab {
                assert_eq!(a.exponent_pair(), b.exponent_pair());
                let f = a.conjugator_to(b).unwrap();
                assert_eq!(a.conjugate_by(&f), *b);
            }
        }
    }
    // transitivity through canonical forms of a small class
    let c = w("xyyxy");
    let conj: Vec<Word> = Word::all_up_to(3)
        .iter()
        .map(|f| c.conjugate_by(f))
        .collect();
    for a in &conj {
        for b in &conj {
            assert!(a.is_conjugate_to(b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn reduce_idempotent(seq in letters(60)) {
        let once = Word::reduce(seq);
        prop_assert_eq!(Word::reduce(once.letters().to_vec()), once);
    }

    #[test]
    fn exponents_are_additive(a in word(20), b in word(20)) {
        prop_assert_eq!((&a * &b).exponent_pair(), a.exponent_pair() + b.exponent_pair());
        prop_assert_eq!(a.inverse().exponent_pair(), -a.exponent_pair());
    }

    #[test]
    fn reversal_is_an_involution(a in word(30)) {
        prop_assert_eq!(a.reversed().reversed(), a.clone());
        prop_assert_eq!(a.is_palindrome(), a.reversed() == a);
    }

    #[test]
    fn conjugates_are_conjugate(a in word(16), f in word(8)) {
        let b = a.conjugate_by(&f);
        prop_assert!(a.is_conjugate_to(&b));
        prop_assert_eq!(a.cyclic_canonical(), b.cyclic_canonical());
        let g = a.conjugator_to(&b).unwrap();
        prop_assert_eq!(a.conjugate_by(&g), b);
    }

    #[test]
    fn display_round_trips(a in word(40)) {
        let text = a.to_string();
        prop_assert!(!text.contains('^'));
        prop_assert_eq!(text.parse::<Word>().unwrap(), a);
    }
}
