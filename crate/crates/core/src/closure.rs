//! Normal closures of primitive elements.
//!
//! For primitive `p` with exponent pair `(X, Y)`, a word `r` lies in the
//! normal closure of `p` exactly when its exponent pair is an integer
//! multiple of `(X, Y)`. Certificates are built by completing `p` to a basis
//! `{p, q}`, rewriting `r` over that basis and regrouping the syllables into
//! conjugates of powers of `p`.

use std::fmt;

use crate::autom::AutoSeq;
use crate::construct::canonical_primitive;
use crate::error::{Error, Result};
use crate::normal_form::{is_primitive, second_normal_form};
use crate::word::Word;

fn require_primitive(p: &Word) -> Result<()> {
    if is_primitive(p).primitive {
        Ok(())
    } else {
        Err(Error::NotPrimitive(p.clone()))
    }
}

pub fn in_normal_closure(r: &Word, p: &Word) -> Result<bool> {
    require_primitive(p)?;
    Ok(r.exponent_pair().multiple_of(p.exponent_pair()).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveWitness {
    pub p: Word,
    /// `pair(r) = k · pair(p)`, with `k > 0` unless the pair is zero.
    pub k: i64,
    /// Set for `pair(r) = (0, 0)`: every primitive element then works and
    /// `p = y` is only a representative.
    pub all_primitives_contain: bool,
}

/// A primitive `p` whose normal closure contains `r`.
pub fn primitive_for(r: &Word) -> PrimitiveWitness {
    let pair = r.exponent_pair();
    if pair.is_zero() {
        return PrimitiveWitness {
            p: Word::y(),
            k: 0,
            all_primitives_contain: true,
        };
    }
    let d = pair.gcd();
    let p = canonical_primitive(pair.x / d, pair.y / d).expect("reduced pair is coprime");
    PrimitiveWitness {
        p,
        k: d,
        all_primitives_contain: false,
    }
}

/// A basis `{p, q}` with `y θ = p` and `x θ = q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPair {
    pub p: Word,
    pub q: Word,
    pub theta: AutoSeq,
    /// `X V - Y U` for `pair(p) = (X, Y)` and `pair(q) = (U, V)`; always ±1.
    pub orientation: i64,
}

pub fn companion_basis(p: &Word) -> Result<BasisPair> {
    let theta = second_normal_form(p)?.automorphism();
    let (q, image_y) = theta.images();
    debug_assert_eq!(image_y, *p);
    let (pp, qp) = (p.exponent_pair(), q.exponent_pair());
    let orientation = pp.x * qp.y - pp.y * qp.x;
    assert_eq!(orientation.abs(), 1, "{{{p}, {q}}} is not a basis");
    Ok(BasisPair {
        p: p.clone(),
        q,
        theta,
        orientation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisLetter {
    P,
    Q,
}

impl fmt::Display for BasisLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLetter::P => write!(f, "p"),
            BasisLetter::Q => write!(f, "q"),
        }
    }
}

/// `r` as a reduced word over `p^±1`, `q^±1`, one entry per letter.
pub fn rewrite_in_basis(r: &Word, basis: &BasisPair) -> Vec<(BasisLetter, i64)> {
    let preimage = basis.theta.inverse().apply(r);
    preimage
        .letters()
        .iter()
        .map(|l| {
            let letter = match l.generator() {
                crate::word::Generator::X => BasisLetter::Q,
                crate::word::Generator::Y => BasisLetter::P,
            };
            (letter, l.sign())
        })
        .collect()
}

pub fn substitute_basis(letters: &[(BasisLetter, i64)], basis: &BasisPair) -> Word {
    let (p_inv, q_inv) = (basis.p.inverse(), basis.q.inverse());
    let parts: Vec<&Word> = letters
        .iter()
        .map(|&(l, s)| match (l, s > 0) {
            (BasisLetter::P, true) => &basis.p,
            (BasisLetter::P, false) => &p_inv,
            (BasisLetter::Q, true) => &basis.q,
            (BasisLetter::Q, false) => &q_inv,
        })
        .collect();
    Word::product(parts)
}

/// `r = ∏ f_i⁻¹ p^(sign_i) f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NclCertificate {
    pub p: Word,
    pub conjugators: Vec<(Word, i64)>,
}

impl NclCertificate {
    pub fn reassemble(&self) -> Word {
        let p_inv = self.p.inverse();
        let parts: Vec<Word> = self
            .conjugators
            .iter()
            .map(|(f, s)| {
                let base = if *s > 0 { &self.p } else { &p_inv };
                base.conjugate_by(f)
            })
            .collect();
        Word::product(&parts)
    }
}

/// Shortest conjugator among `p^m · v0` for small `m`.
fn short_conjugator(p: &Word, v0: Word) -> Word {
    (-3..=3)
        .map(|m| &p.pow(m) * &v0)
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .unwrap_or(v0)
}

pub fn certificate(r: &Word, p: &Word) -> Result<NclCertificate> {
    let basis = companion_basis(p)?;
    // a single conjugate of p^±1 needs no regrouping
    for sign in [1, -1] {
        let base = p.pow(sign);
        if let Some(v0) = base.conjugator_to(r) {
            return Ok(NclCertificate {
                p: p.clone(),
                conjugators: vec![(short_conjugator(&base, v0), sign)],
            });
        }
    }
    let letters = rewrite_in_basis(r, &basis);
    let q_total: i64 = letters
        .iter()
        .filter(|(l, _)| *l == BasisLetter::Q)
        .map(|(_, s)| s)
        .sum();
    if q_total != 0 {
        return Err(Error::NotInClosure {
            r: r.clone(),
            p: p.clone(),
        });
    }
    // p^(α_1) q^(β_1) ... p^(α_s) q^(β_s) regroups as the product of the
    // conjugates q^(-S_i) p^(α_i) q^(S_i) with S_i = β_i + ... + β_s
    let mut suffix_q = 0;
    let mut conjugators = Vec::new();
    for &(l, s) in letters.iter().rev() {
        match l {
            BasisLetter::Q => suffix_q += s,
            BasisLetter::P => conjugators.push((basis.q.pow(suffix_q), s)),
        }
    }
    conjugators.reverse();
    let cert = NclCertificate {
        p: p.clone(),
        conjugators,
    };
    debug_assert_eq!(cert.reassemble(), *r);
    Ok(cert)
}
