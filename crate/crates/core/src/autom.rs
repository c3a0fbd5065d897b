//! Named automorphisms of the free group and their composition.
//!
//! Automorphisms act on the right: a sequence `[g1, g2, ...]` sends `w` to
//! `(w g1) g2 ...`, so application folds left to right.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{ExponentPair, Letter, Word};

/// Which image of a basic automorphism carries the larger power of `y`.
///
/// `A`: `x ↦ x y^(n+1)`, `y ↦ x y^n`. `B`: `x ↦ x y^n`, `y ↦ x y^(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    A,
    B,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::A => Orientation::B,
            Orientation::B => Orientation::A,
        }
    }
}

/// A single named generator of `Aut(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutoGen {
    /// `x ↦ x⁻¹`, `y ↦ y`.
    AlphaX,
    /// `x ↦ x`, `y ↦ y⁻¹`.
    AlphaY,
    /// `x ↦ y`, `y ↦ x`.
    Beta,
    /// Conjugation `w ↦ v⁻¹ w v`.
    Inner(Word),
    Basic {
        n: u32,
        orientation: Orientation,
    },
    /// Inverse of the basic automorphism with the same parameters.
    BasicInverse {
        n: u32,
        orientation: Orientation,
    },
}

impl AutoGen {
    pub fn basic(n: u32, orientation: Orientation) -> AutoGen {
        AutoGen::Basic { n, orientation }
    }

    pub fn basic_a(n: u32) -> AutoGen {
        AutoGen::basic(n, Orientation::A)
    }

    pub fn basic_b(n: u32) -> AutoGen {
        AutoGen::basic(n, Orientation::B)
    }

    pub fn is_basic(&self) -> bool {
        matches!(self, AutoGen::Basic { .. })
    }

    /// Images of `x` and `y`.
    pub fn images(&self) -> (Word, Word) {
        let x = Word::x();
        let y = Word::y();
        match self {
            AutoGen::AlphaX => (x.inverse(), y),
            AutoGen::AlphaY => (x, y.inverse()),
            AutoGen::Beta => (y, x),
            AutoGen::Inner(v) => (x.conjugate_by(v), y.conjugate_by(v)),
            AutoGen::Basic { n, orientation } => {
                let n = i64::from(*n);
                let small = &x * &y.pow(n);
                let large = &x * &y.pow(n + 1);
                match orientation {
                    Orientation::A => (large, small),
                    Orientation::B => (small, large),
                }
            }
            AutoGen::BasicInverse { n, orientation } => {
                let n = i64::from(*n);
                match orientation {
                    // x ↦ y (x⁻¹y)^n, y ↦ y⁻¹x
                    Orientation::A => (&y * &(&x.inverse() * &y).pow(n), &y.inverse() * &x),
                    // x ↦ x (y⁻¹x)^n, y ↦ x⁻¹y
                    Orientation::B => (&x * &(&y.inverse() * &x).pow(n), &x.inverse() * &y),
                }
            }
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        match self {
            AutoGen::AlphaX => w.map_letters(|l| match l {
                Letter::X => Letter::XInv,
                Letter::XInv => Letter::X,
                other => other,
            }),
            AutoGen::AlphaY => w.map_letters(|l| match l {
                Letter::Y => Letter::YInv,
                Letter::YInv => Letter::Y,
                other => other,
            }),
            AutoGen::Beta => w.map_letters(swap_letter),
            AutoGen::Inner(v) => w.conjugate_by(v),
            _ => {
                let (ix, iy) = self.images();
                w.substitute(&ix, &iy)
            }
        }
    }

    pub fn inverse(&self) -> AutoGen {
        match self {
            AutoGen::AlphaX | AutoGen::AlphaY | AutoGen::Beta => self.clone(),
            AutoGen::Inner(v) => AutoGen::Inner(v.inverse()),
            AutoGen::Basic { n, orientation } => AutoGen::BasicInverse {
                n: *n,
                orientation: *orientation,
            },
            AutoGen::BasicInverse { n, orientation } => AutoGen::Basic {
                n: *n,
                orientation: *orientation,
            },
        }
    }

    pub fn matrix(&self) -> IntMatrix2 {
        let (ix, iy) = self.images();
        IntMatrix2::from_rows(ix.exponent_pair(), iy.exponent_pair())
    }
}

pub(crate) fn swap_letter(l: Letter) -> Letter {
    match l {
        Letter::X => Letter::Y,
        Letter::XInv => Letter::YInv,
        Letter::Y => Letter::X,
        Letter::YInv => Letter::XInv,
    }
}

impl fmt::Display for AutoGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoGen::AlphaX => write!(f, "ax"),
            AutoGen::AlphaY => write!(f, "ay"),
            AutoGen::Beta => write!(f, "b"),
            AutoGen::Inner(v) => write!(f, "inner:{v}"),
            AutoGen::Basic { n, orientation } => write!(f, "basic{orientation:?}:{n}"),
            AutoGen::BasicInverse { n, orientation } => write!(f, "inv{orientation:?}:{n}"),
        }
    }
}

impl FromStr for AutoGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<AutoGen> {
        let s = s.trim();
        let parse_n = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad basic parameter in {s:?}")))
        };
        match s {
            "ax" => return Ok(AutoGen::AlphaX),
            "ay" => return Ok(AutoGen::AlphaY),
            "b" => return Ok(AutoGen::Beta),
            _ => {}
        }
        let Some((head, arg)) = s.split_once(':') else {
            return Err(Error::Parse(format!("unknown automorphism {s:?}")));
        };
        match head.trim() {
            "inner" => Ok(AutoGen::Inner(arg.parse()?)),
            "basicA" => Ok(AutoGen::basic(parse_n(arg)?, Orientation::A)),
            "basicB" => Ok(AutoGen::basic(parse_n(arg)?, Orientation::B)),
            "invA" => Ok(AutoGen::BasicInverse {
                n: parse_n(arg)?,
                orientation: Orientation::A,
            }),
            "invB" => Ok(AutoGen::BasicInverse {
                n: parse_n(arg)?,
                orientation: Orientation::B,
            }),
            _ => Err(Error::Parse(format!("unknown automorphism {s:?}"))),
        }
    }
}

/// A composite automorphism kept as its generator sequence, applied left to
/// right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AutoSeq {
    pub gens: Vec<AutoGen>,
}

impl AutoSeq {
    pub fn identity() -> AutoSeq {
        AutoSeq::default()
    }

    pub fn new(gens: Vec<AutoGen>) -> AutoSeq {
        AutoSeq { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.gens.iter().fold(w.clone(), |acc, g| g.apply(&acc))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AutoSeq) -> AutoSeq {
        let mut gens = self.gens.clone();
        gens.extend(next.gens.iter().cloned());
        AutoSeq { gens }
    }

    pub fn push(&mut self, g: AutoGen) {
        self.gens.push(g);
    }

    /// Reverse the sequence and invert each generator.
    pub fn inverse(&self) -> AutoSeq {
        AutoSeq {
            gens: self.gens.iter().rev().map(AutoGen::inverse).collect(),
        }
    }

    pub fn matrix(&self) -> IntMatrix2 {
        self.gens
            .iter()
            .fold(IntMatrix2::identity(), |m, g| m.mul(&g.matrix()))
    }

    /// Images of `x` and `y` under the composite.
    pub fn images(&self) -> (Word, Word) {
        (self.apply(&Word::x()), self.apply(&Word::y()))
    }
}

impl From<Vec<AutoGen>> for AutoSeq {
    fn from(gens: Vec<AutoGen>) -> Self {
        AutoSeq { gens }
    }
}

impl fmt::Display for AutoSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for AutoSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<AutoSeq> {
        let s = s.trim();
        if s.is_empty() || s == "id" {
            return Ok(AutoSeq::identity());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(AutoSeq::new)
    }
}

/// `((a, b), (c, d))`, row `i` the exponent pair of the image of the `i`-th
/// generator. Pairs act as row vectors: `E(wθ) = E(w) · M(θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub const fn identity() -> Self {
        IntMatrix2::new(1, 0, 0, 1)
    }

    pub fn from_rows(x_row: ExponentPair, y_row: ExponentPair) -> Self {
        IntMatrix2::new(x_row.x, x_row.y, y_row.x, y_row.y)
    }

    pub fn mul(&self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Row-vector product `pair · self`.
    pub fn act(&self, pair: ExponentPair) -> ExponentPair {
        ExponentPair::new(
            pair.x * self.a + pair.y * self.c,
            pair.x * self.b + pair.y * self.d,
        )
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.a, self.b, self.c, self.d)
    }
}
