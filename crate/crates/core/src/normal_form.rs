//! Second normal form of primitive elements and the primitivity decision.
//!
//! Every primitive `p` is written as
//! `p = y φ_s ⋯ φ_0 α_x^γ α_y^δ β^ε ι_v` with basic `φ_i`, flags in `{0, 1}`
//! and a conjugator `v` of minimal length. The basic part comes from the
//! descent on the sorted absolute exponent pair; the flags come from the
//! signs and order of the pair; `v` aligns the canonical word with `p`.

use crate::autom::{AutoGen, AutoSeq};
use crate::construct::core_trace;
use crate::error::{Error, Result};
use crate::word::{ExponentPair, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    /// Basic automorphisms in application order (`φ_s` first).
    pub phis: Vec<AutoGen>,
    pub gamma: bool,
    pub delta: bool,
    pub epsilon: bool,
    pub v: Word,
    /// Set when another conjugator of the same minimal length exists; `v`
    /// is then the lexicographically least one.
    pub v_tie: bool,
}

impl NormalForm {
    /// `α_x^γ α_y^δ β^ε`.
    pub fn flag_automorphism(&self) -> AutoSeq {
        let mut seq = AutoSeq::identity();
        if self.gamma {
            seq.push(AutoGen::AlphaX);
        }
        if self.delta {
            seq.push(AutoGen::AlphaY);
        }
        if self.epsilon {
            seq.push(AutoGen::Beta);
        }
        seq
    }

    /// The full composite `θ` with `y θ = p`.
    pub fn automorphism(&self) -> AutoSeq {
        let mut seq = AutoSeq::new(self.phis.clone()).then(&self.flag_automorphism());
        if !self.v.is_empty() {
            seq.push(AutoGen::Inner(self.v.clone()));
        }
        seq
    }

    pub fn reconstruct(&self) -> Word {
        self.automorphism().apply(&Word::y())
    }
}

pub fn reconstruct(nf: &NormalForm) -> Word {
    nf.reconstruct()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    NotCoprime,
    NotConjugateToCanonical,
    Primitive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityVerdict {
    pub primitive: bool,
    pub reason: Reason,
    pub certificate: Option<NormalForm>,
}

/// Flags `(γ, δ, ε)` recovered from the exponent pair.
fn flags_for(pair: ExponentPair) -> (bool, bool, bool) {
    let epsilon = pair.x.abs() > pair.y.abs();
    let (ux, uy) = if epsilon {
        (pair.y, pair.x)
    } else {
        (pair.x, pair.y)
    };
    (ux < 0, uy < 0, epsilon)
}

/// Canonical basic sequence for a sorted core pair `0 <= a <= b`.
fn canonical_phis(core: ExponentPair) -> Vec<AutoGen> {
    if core.x == 0 {
        return Vec::new();
    }
    let trace = core_trace(core.x, core.y);
    let ys = u32::try_from(trace.terminal.y).expect("terminal exponent fits in u32");
    let seed = if ys > 1 {
        AutoGen::basic_b(ys - 1)
    } else {
        AutoGen::basic_a(1)
    };
    let mut phis = vec![seed];
    phis.extend(trace.lifting_sequence().gens);
    phis
}

/// The other seed-level automorphism sending `y` to the same `x y^(Y_s)`.
fn alternative_seed(seed: &AutoGen) -> AutoGen {
    use crate::autom::Orientation;
    match seed {
        // y ↦ x y^(n+1) under B(n), and under A(n+1)
        AutoGen::Basic {
            n,
            orientation: Orientation::B,
        } => AutoGen::basic_a(n + 1),
        AutoGen::Basic {
            n,
            orientation: Orientation::A,
        } => AutoGen::basic_b(n - 1),
        other => unreachable!("seed level is always basic, got {other}"),
    }
}

fn sorted_abs(pair: ExponentPair) -> ExponentPair {
    let (a, b) = (pair.x.abs(), pair.y.abs());
    ExponentPair::new(a.min(b), a.max(b))
}

fn decompose(p: &Word) -> Option<NormalForm> {
    let pair = p.exponent_pair();
    if !pair.is_coprime() {
        return None;
    }
    let (gamma, delta, epsilon) = flags_for(pair);
    let mut nf = NormalForm {
        phis: canonical_phis(sorted_abs(pair)),
        gamma,
        delta,
        epsilon,
        v: Word::identity(),
        v_tie: false,
    };
    let canonical = nf.reconstruct();
    let v0 = canonical.conjugator_to(p)?;
    // canonical is cyclically reduced and not a proper power, so every
    // conjugator is canonical^m · v0
    let mut candidates: Vec<Word> = (-3..=3).map(|m| &canonical.pow(m) * &v0).collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    candidates.dedup();
    nf.v_tie = candidates.len() > 1 && candidates[1].len() == candidates[0].len();
    nf.v = candidates.swap_remove(0);
    debug_assert_eq!(nf.reconstruct(), *p);
    Some(nf)
}

/// Decides primitivity: the pair must be coprime and the word conjugate to
/// the canonical primitive with that pair.
pub fn is_primitive(w: &Word) -> PrimitivityVerdict {
    if !w.exponent_pair().is_coprime() {
        return PrimitivityVerdict {
            primitive: false,
            reason: Reason::NotCoprime,
            certificate: None,
        };
    }
    match decompose(w) {
        Some(nf) => PrimitivityVerdict {
            primitive: true,
            reason: Reason::Primitive,
            certificate: Some(nf),
        },
        None => PrimitivityVerdict {
            primitive: false,
            reason: Reason::NotConjugateToCanonical,
            certificate: None,
        },
    }
}

pub fn second_normal_form(p: &Word) -> Result<NormalForm> {
    decompose(p).ok_or_else(|| Error::NotPrimitive(p.clone()))
}

/// The two basic sequences realizing `p` with the same flags and `v`. The
/// first is the canonical one; the second differs only in the automorphism
/// applied to `y` first.
pub fn both_sequences(p: &Word) -> Result<(Vec<AutoGen>, Vec<AutoGen>)> {
    let nf = second_normal_form(p)?;
    let pair = p.exponent_pair();
    if pair.x.abs() + pair.y.abs() <= 2 {
        return Err(Error::NotApplicable(format!(
            "exactly two basic sequences exist only when |X| + |Y| > 2, pair is {pair}"
        )));
    }
    let mut alt = nf.phis.clone();
    alt[0] = alternative_seed(&alt[0]);
    Ok((nf.phis, alt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::canonical_primitive;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn verdicts() {
        let v = is_primitive(&w("x^2y^2"));
        assert_eq!((v.primitive, v.reason), (false, Reason::NotCoprime));
        let v = is_primitive(&w("xyxyy"));
        assert!(v.primitive);
        assert_eq!(v.certificate.unwrap().reconstruct(), w("xyxyy"));
        let v = is_primitive(&w("xyyxY"));
        assert_eq!(
            (v.primitive, v.reason),
            (false, Reason::NotConjugateToCanonical)
        );
    }

    #[test]
    fn normal_form_of_y() {
        let nf = second_normal_form(&w("y")).unwrap();
        assert!(nf.phis.is_empty());
        assert!(!nf.gamma && !nf.delta && !nf.epsilon);
        assert!(nf.v.is_empty());
    }

    #[test]
    fn normal_form_of_small_primitives() {
        let nf = second_normal_form(&w("xyyxy")).unwrap();
        assert_eq!(nf.phis, vec![AutoGen::basic_a(1), AutoGen::basic_a(1)]);
        assert!(!nf.gamma && !nf.delta && !nf.epsilon);
        assert!(nf.v.is_empty());
        assert_eq!(nf.reconstruct(), w("xyyxy"));

        let p = w("Y xyyxy y");
        assert_eq!(p, w("Yxyyxyy"));
        let nf2 = second_normal_form(&p).unwrap();
        assert_eq!(nf2.phis, nf.phis);
        assert_eq!(nf2.v, w("y"));
        assert_eq!(nf2.reconstruct(), p);
    }

    #[test]
    fn reconstruct_flag_order() {
        let mk = |g, d, e| NormalForm {
            phis: vec![],
            gamma: g,
            delta: d,
            epsilon: e,
            v: Word::identity(),
            v_tie: false,
        };
        assert_eq!(mk(false, false, false).reconstruct(), w("y"));
        assert_eq!(mk(true, false, true).reconstruct(), w("x"));
        assert_eq!(mk(false, true, true).reconstruct(), w("X"));
    }

    #[test]
    fn flags_reproduce_construct_output() {
        for x in -12i64..=12 {
            for y in -12i64..=12 {
                let pair = ExponentPair::new(x, y);
                if !pair.is_coprime() {
                    continue;
                }
                let c = canonical_primitive(x, y).unwrap();
                let nf = second_normal_form(&c).unwrap();
                assert!(nf.v.is_empty(), "({x}, {y})");
                assert_eq!(nf.reconstruct(), c);
            }
        }
    }

    #[test]
    fn tie_between_conjugators_is_flagged() {
        // yx = x⁻¹(xy)x = y(xy)y⁻¹
        let nf = second_normal_form(&w("yx")).unwrap();
        assert!(nf.v_tie);
        assert_eq!(nf.v, w("x"));
        assert_eq!(nf.reconstruct(), w("yx"));
    }

    #[test]
    fn two_sequences() {
        let (a, b) = both_sequences(&w("xyy")).unwrap();
        assert_eq!(a, vec![AutoGen::basic_b(1)]);
        assert_eq!(b, vec![AutoGen::basic_a(2)]);

        let p = w("xyyxy");
        let (a, b) = both_sequences(&p).unwrap();
        assert_ne!(a, b);
        assert_eq!(a[1..], b[1..]);
        let nf = second_normal_form(&p).unwrap();
        for phis in [a, b] {
            let alt = NormalForm { phis, ..nf.clone() };
            assert_eq!(alt.reconstruct(), p);
        }

        assert!(matches!(
            both_sequences(&w("y")),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            both_sequences(&w("xy")),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            both_sequences(&w("xx")),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn non_primitive_is_rejected() {
        assert_eq!(
            second_normal_form(&w("xyXY")),
            Err(Error::NotPrimitive(w("xyXY")))
        );
    }
}
