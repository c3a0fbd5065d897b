//! Construction of a primitive element with a prescribed exponent pair by
//! Euclidean descent on the pair.
//!
//! For coprime `1 <= X < Y` the descent replaces `(X, Y)` by the pair
//! `(min, max)` of `Y mod X` and `X - Y mod X`, recording the basic
//! automorphism that lifts the smaller pair back to the larger one. It stops
//! at a pair `(1, Y_s)`; the primitive word is then `x y^(Y_s)` pushed back
//! through the recorded automorphisms in reverse order.

use std::fmt;

use crate::autom::{AutoGen, AutoSeq, Orientation};
use crate::error::{Error, Result};
use crate::word::{gcd, ExponentPair, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `Y mod X <= X - Y mod X`.
    First,
    Second,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::First => write!(f, "first"),
            Branch::Second => write!(f, "second"),
        }
    }
}

/// One level of the descent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentStep {
    pub pair_in: ExponentPair,
    pub pair_out: ExponentPair,
    /// Largest `n` with `n X < Y`.
    pub n: u32,
    pub branch: Branch,
    /// Basic automorphism with `pair_out · M(phi) = pair_in`.
    pub phi: AutoGen,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    /// `(1, Y_s)`.
    pub terminal: ExponentPair,
    /// `x y^(Y_s)`.
    pub seed_word: Word,
}

impl DescentTrace {
    /// The recorded automorphisms, deepest level first, as they are applied
    /// to the seed word.
    pub fn lifting_sequence(&self) -> AutoSeq {
        AutoSeq::new(self.steps.iter().rev().map(|s| s.phi.clone()).collect())
    }

    /// Pushes the seed word back up through the recorded automorphisms.
    pub fn replay(&self) -> Word {
        self.lifting_sequence().apply(&self.seed_word)
    }

    pub fn input_pair(&self) -> ExponentPair {
        self.steps.first().map_or(self.terminal, |s| s.pair_in)
    }
}

fn check_coprime(x: i64, y: i64) -> Result<()> {
    let d = gcd(x, y);
    if d != 1 {
        return Err(Error::NonCoprime { x, y, gcd: d });
    }
    Ok(())
}

/// Runs the descent for coprime `1 <= x < y`.
pub fn descend(x: i64, y: i64) -> Result<DescentTrace> {
    check_coprime(x, y)?;
    if !(1 <= x && x < y) {
        return Err(Error::OutOfRange(format!(
            "descent needs 1 <= X < Y, got ({x}, {y})"
        )));
    }
    Ok(descend_unchecked(x, y))
}

fn descend_unchecked(x: i64, y: i64) -> DescentTrace {
    let mut steps = Vec::new();
    let mut pair = ExponentPair::new(x, y);
    while pair.x >= 2 {
        let (xi, yi) = (pair.x, pair.y);
        let r = yi.rem_euclid(xi);
        let n = u32::try_from((yi - 1) / xi).expect("quotient fits in u32");
        let (branch, pair_out, orientation) = if r <= xi - r {
            (Branch::First, ExponentPair::new(r, xi - r), Orientation::A)
        } else {
            (Branch::Second, ExponentPair::new(xi - r, r), Orientation::B)
        };
        let phi = AutoGen::basic(n, orientation);
        assert!(pair_out.is_coprime(), "descent lost coprimality at {pair}");
        debug_assert_eq!(phi.matrix().act(pair_out), pair);
        steps.push(DescentStep {
            pair_in: pair,
            pair_out,
            n,
            branch,
            phi,
        });
        pair = pair_out;
    }
    DescentTrace {
        steps,
        terminal: pair,
        seed_word: &Word::x() * &Word::y().pow(pair.y),
    }
}

/// Trace for `1 <= x <= y`; the pair `(1, 1)` has the empty trace with
/// seed `xy`.
pub(crate) fn core_trace(x: i64, y: i64) -> DescentTrace {
    debug_assert!(1 <= x && x <= y && gcd(x, y) == 1);
    descend_unchecked(x, y)
}

/// Cyclically reduced positive primitive word with exponent pair `(x, y)`,
/// for coprime `1 <= x <= y`.
pub fn construct_core(x: i64, y: i64) -> Result<Word> {
    check_coprime(x, y)?;
    if !(1 <= x && x <= y) {
        return Err(Error::OutOfRange(format!(
            "core construction needs 1 <= X <= Y, got ({x}, {y})"
        )));
    }
    Ok(core_trace(x, y).replay())
}

/// Flags of the sign and order normalization: the core word for
/// `core_pair` gets `β` if `epsilon`, then `α_x` if `gamma`, then `α_y` if
/// `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignNormalization {
    pub gamma: bool,
    pub delta: bool,
    pub epsilon: bool,
    /// `(min(|X|, |Y|), max(|X|, |Y|))`.
    pub core_pair: ExponentPair,
}

impl SignNormalization {
    pub fn for_pair(pair: ExponentPair) -> SignNormalization {
        let (ax, ay) = (pair.x.abs(), pair.y.abs());
        SignNormalization {
            epsilon: ax > ay,
            gamma: pair.x < 0,
            delta: pair.y < 0,
            core_pair: ExponentPair::new(ax.min(ay), ax.max(ay)),
        }
    }

    pub fn automorphism(&self) -> AutoSeq {
        let mut seq = AutoSeq::identity();
        if self.epsilon {
            seq.push(AutoGen::Beta);
        }
        if self.gamma {
            seq.push(AutoGen::AlphaX);
        }
        if self.delta {
            seq.push(AutoGen::AlphaY);
        }
        seq
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub word: Word,
    pub norm: SignNormalization,
    /// Absent only for core pair `(0, 1)`.
    pub trace: Option<DescentTrace>,
}

/// A primitive word with exponent pair `(x, y)`; fails unless the pair is
/// coprime (in particular for `(0, 0)`).
pub fn construct(x: i64, y: i64) -> Result<Construction> {
    check_coprime(x, y)?;
    let norm = SignNormalization::for_pair(ExponentPair::new(x, y));
    let core_pair = norm.core_pair;
    let (core, trace) = if core_pair.x == 0 {
        (Word::y(), None)
    } else {
        let trace = core_trace(core_pair.x, core_pair.y);
        (trace.replay(), Some(trace))
    };
    Ok(Construction {
        word: norm.automorphism().apply(&core),
        norm,
        trace,
    })
}

/// The canonical cyclically reduced primitive word with exponent pair
/// `(x, y)`. Every primitive element with this pair is conjugate to it.
pub fn canonical_primitive(x: i64, y: i64) -> Result<Word> {
    construct(x, y).map(|c| c.word)
}

/// Block exponents `m_i` of a word `x y^(m_1) x y^(m_2) ... x y^(m_s)`, or
/// `None` when the word is not a positive word of that shape.
pub fn block_exponents(w: &Word) -> Option<Vec<u32>> {
    if !w.is_positive() || w.first() != Some(Letter::X) {
        return None;
    }
    let mut out = Vec::new();
    for &l in w.letters() {
        match l {
            Letter::X => out.push(0),
            _ => *out.last_mut()? += 1,
        }
    }
    Some(out)
}

/// Whether all block exponents lie in `{n, n + 1}` for a single `n`.
pub fn has_first_normal_form_shape(w: &Word) -> bool {
    match block_exponents(w) {
        Some(ms) => {
            let lo = ms.iter().min().copied().unwrap_or(0);
            ms.iter().all(|&m| m == lo || m == lo + 1)
        }
        None => false,
    }
}
