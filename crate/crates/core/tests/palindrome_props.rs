mod common;

use common::{coprime_pairs, primitive_variant, random_word_up_to, rng};
use primgen_core::construct::canonical_primitive;
use primgen_core::palindrome::{
    conjugate_palindrome_form, helling_form, palindrome_factorization, push_through, HellingForm,
};
use primgen_core::{AutoGen, Letter, Word};
use rand::seq::SliceRandom;
use rand::Rng;

fn sample() -> Vec<Word> {
    let mut r = rng(31);
    let mut out = Vec::new();
    for (x, y) in coprime_pairs(20) {
        out.push(canonical_primitive(x, y).unwrap());
        for _ in 0..3 {
            out.push(primitive_variant(&mut r, x, y, 5));
        }
    }
    out
}

#[test]
fn factorizations_on_sample() {
    for p in sample() {
        let f = palindrome_factorization(&p).unwrap();
        assert!(!f.factors.is_empty() && f.factors.len() <= 2, "{p}");
        assert!(
            f.factors.iter().all(|x| x.is_palindrome()),
            "{p}: {:?}",
            f.factors
        );
        assert_eq!(f.product(), p);
        if p.is_palindrome() {
            assert_eq!(f.factors.len(), 1);
        }
    }
}

#[test]
fn conjugate_forms_on_sample() {
    for p in sample() {
        let c = conjugate_palindrome_form(&p).unwrap();
        assert_eq!(c.reassemble(), p);
        assert!(c.w.is_palindrome());
    }
}

#[test]
fn helling_forms_on_sample() {
    for p in sample() {
        let h = helling_form(&p).unwrap();
        assert_eq!(h.reassemble(), p);
        assert!(h.v.is_palindrome(), "{p}: v = {}", h.v);
    }
}

#[test]
fn basic_images_of_positive_palindromes() {
    let palindromes: Vec<Word> = Word::all_up_to(7)
        .into_iter()
        .filter(|g| !g.is_empty() && g.is_positive() && g.is_palindrome())
        .collect();
    assert!(palindromes.len() > 20);
    for n in 0..=4 {
        for phi in [AutoGen::basic_a(n), AutoGen::basic_b(n)] {
            for g in &palindromes {
                let (image, tail) = push_through(&phi, g).unwrap();
                assert_eq!(image.first(), Some(Letter::X));
                assert!(tail.is_positive() && tail.is_palindrome());
                assert_eq!(&Word::x() * &tail, image);
            }
        }
    }
}

#[test]
fn transport_keeps_helling_shape() {
    let mut r = rng(32);
    let pool = sample();
    for _ in 0..1000 {
        let p = pool.choose(&mut r).unwrap();
        let h = helling_form(p).unwrap();
        let g = match r.gen_range(0..4) {
            0 => AutoGen::AlphaX,
            1 => AutoGen::AlphaY,
            2 => AutoGen::Beta,
            _ => AutoGen::Inner(random_word_up_to(&mut r, 4)),
        };
        let moved: HellingForm = h.transport(&g).unwrap();
        assert!(moved.is_valid());
        assert_eq!(moved.reassemble(), g.apply(p), "{g} on {p}");
    }
}
