#![allow(dead_code)]

use primgen_core::construct::canonical_primitive;
use primgen_core::{AutoGen, Letter, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// A uniformly built reduced word of exactly `len` letters.
pub fn random_word(rng: &mut StdRng, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = *Letter::ALL.choose(rng).unwrap();
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::reduce(letters)
}

pub fn random_word_up_to(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word(rng, len)
}

pub fn random_gen(rng: &mut StdRng, max_n: u32, max_inner: usize) -> AutoGen {
    match rng.gen_range(0..6) {
        0 => AutoGen::AlphaX,
        1 => AutoGen::AlphaY,
        2 => AutoGen::Beta,
        3 => AutoGen::Inner(random_word_up_to(rng, max_inner)),
        4 => AutoGen::basic_a(rng.gen_range(0..=max_n)),
        _ => AutoGen::basic_b(rng.gen_range(0..=max_n)),
    }
}

pub fn coprime_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if primgen_core::word::gcd(x, y) == 1 {
                out.push((x, y));
            }
        }
    }
    out
}

/// A random conjugate of the canonical primitive for `(x, y)`, optionally
/// moved by a random flag automorphism first.
pub fn primitive_variant(rng: &mut StdRng, x: i64, y: i64, conj_len: usize) -> Word {
    let mut p = canonical_primitive(x, y).unwrap();
    for g in [AutoGen::AlphaX, AutoGen::AlphaY, AutoGen::Beta] {
        if rng.gen_bool(0.25) {
            p = g.apply(&p);
        }
    }
    let f = random_word_up_to(rng, conj_len);
    p.conjugate_by(&f)
}
