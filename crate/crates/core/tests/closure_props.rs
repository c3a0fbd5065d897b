mod common;

use common::{coprime_pairs, primitive_variant, random_word_up_to, rng, w};
use primgen_core::closure::{
    certificate, companion_basis, in_normal_closure, primitive_for, rewrite_in_basis,
    substitute_basis,
};
use primgen_core::construct::canonical_primitive;
use primgen_core::Word;
use rand::seq::SliceRandom;
use rand::Rng;

fn primitives() -> Vec<Word> {
    let mut r = rng(41);
    let mut out = Vec::new();
    for (x, y) in coprime_pairs(6) {
        out.push(canonical_primitive(x, y).unwrap());
        out.push(primitive_variant(&mut r, x, y, 3));
    }
    out
}

/// A random product of conjugates of `p^±1`.
fn random_member(r: &mut rand::rngs::StdRng, p: &Word) -> Word {
    let n = r.gen_range(0..=4);
    let parts: Vec<Word> = (0..n)
        .map(|_| {
            let base = if r.gen_bool(0.5) {
                p.clone()
            } else {
                p.inverse()
            };
            base.conjugate_by(&random_word_up_to(r, 4))
        })
        .collect();
    Word::product(&parts)
}

#[test]
fn certificates_reassemble() {
    let mut r = rng(42);
    let pool = primitives();
    for _ in 0..1000 {
        let p = pool.choose(&mut r).unwrap();
        let m = random_member(&mut r, p);
        assert!(in_normal_closure(&m, p).unwrap());
        let c = certificate(&m, p).unwrap();
        assert_eq!(c.reassemble(), m, "{m} over {p}");
    }
}

#[test]
fn basis_rewriting_round_trips() {
    let mut r = rng(43);
    let bases: Vec<_> = primitives()
        .iter()
        .map(|p| companion_basis(p).unwrap())
        .collect();
    for b in &bases {
        let (pp, qp) = (b.p.exponent_pair(), b.q.exponent_pair());
        assert_eq!((pp.x * qp.y - pp.y * qp.x).abs(), 1);
        assert_eq!(b.orientation.abs(), 1);
    }
    for _ in 0..1000 {
        let b = bases.choose(&mut r).unwrap();
        let g = random_word_up_to(&mut r, 12);
        assert_eq!(substitute_basis(&rewrite_in_basis(&g, b), b), g);
    }
}

#[test]
fn equal_pairs_mean_conjugate_primitives() {
    let mut r = rng(44);
    let pairs = coprime_pairs(10);
    for _ in 0..1000 {
        let &(x, y) = pairs.choose(&mut r).unwrap();
        let c = canonical_primitive(x, y).unwrap();
        let a = c.conjugate_by(&random_word_up_to(&mut r, 6));
        let b = c.conjugate_by(&random_word_up_to(&mut r, 6));
        assert!(a.is_conjugate_to(&b));
    }
}

#[test]
fn primitive_for_finds_a_container() {
    let mut r = rng(45);
    for _ in 0..500 {
        let g = random_word_up_to(&mut r, 10);
        let pf = primitive_for(&g);
        assert!(pf.k >= 0);
        assert!(in_normal_closure(&g, &pf.p).unwrap());
        assert_eq!(pf.all_primitives_contain, g.exponent_pair().is_zero());
        if !pf.all_primitives_contain {
            assert_eq!(pf.p.exponent_pair().scale(pf.k), g.exponent_pair());
        }
    }
    let pf = primitive_for(&w("xxyyyxxyyy"));
    assert_eq!((pf.p, pf.k), (w("xyyxy"), 2));
}
