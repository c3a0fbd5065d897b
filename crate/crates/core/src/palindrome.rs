//! Palindromic decompositions of primitive elements.
//!
//! All three decompositions are built by induction along the canonical
//! second normal form: start from `y`, push the current decomposition
//! through each basic automorphism, then carry it through the flag
//! automorphisms and the final conjugation.

use crate::autom::{AutoGen, Orientation};
use crate::error::{Error, Result};
use crate::normal_form::{second_normal_form, NormalForm};
use crate::word::{Letter, Word};

/// `(w)φ = x·v` for a positive palindrome `w` and basic `φ`; returns the
/// image and `v`, itself a positive palindrome.
pub fn push_through(phi: &AutoGen, w: &Word) -> Result<(Word, Word)> {
    if !phi.is_basic() {
        return Err(Error::PreconditionViolated(format!(
            "{phi} is not a basic automorphism"
        )));
    }
    if w.is_empty() || !w.is_positive() || !w.is_palindrome() {
        return Err(Error::PreconditionViolated(format!(
            "{w} is not a non-empty positive palindrome"
        )));
    }
    let image = phi.apply(w);
    let tail = image.suffix_from(1);
    if image.first() != Some(Letter::X) || !tail.is_positive() || !tail.is_palindrome() {
        // cannot happen for basic automorphisms
        return Err(Error::PreconditionViolated(format!(
            "image {image} of {w} is not x·(positive palindrome)"
        )));
    }
    Ok((image, tail))
}

/// One palindrome, or a product of two non-empty palindromes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PalindromeFactorization {
    pub factors: Vec<Word>,
}

impl PalindromeFactorization {
    pub fn product(&self) -> Word {
        Word::product(&self.factors)
    }

    fn normalized(factors: Vec<Word>) -> PalindromeFactorization {
        let product = Word::product(&factors);
        if product.is_palindrome() {
            return PalindromeFactorization {
                factors: vec![product],
            };
        }
        PalindromeFactorization {
            factors: factors.into_iter().filter(|f| !f.is_empty()).collect(),
        }
    }
}

/// Pushes a factorization of a positive word through a basic automorphism.
fn push_factors(phi: &AutoGen, factors: &[Word]) -> Result<Vec<Word>> {
    match factors {
        [single] => {
            let (_, v) = push_through(phi, single)?;
            Ok(vec![Word::x(), v])
        }
        [first, second] => {
            let (_, v3) = push_through(phi, first)?;
            let (_, v4) = push_through(phi, second)?;
            Ok(vec![Word::product([&Word::x(), &v3, &Word::x()]), v4])
        }
        _ => unreachable!("factorizations have one or two factors"),
    }
}

fn drop_empty(factors: Vec<Word>) -> Vec<Word> {
    let kept: Vec<Word> = factors.into_iter().filter(|f| !f.is_empty()).collect();
    if kept.is_empty() {
        vec![Word::identity()]
    } else {
        kept
    }
}

/// Carries factors through a flag automorphism or a conjugation.
fn transport_factors(g: &AutoGen, factors: &[Word]) -> Vec<Word> {
    match g {
        AutoGen::Inner(v) => {
            // v⁻¹ w₁ w₂ v = (v⁻¹ w₁ rev(v)⁻¹)(rev(v) w₂ v)
            let vinv = v.inverse();
            let rv = v.reversed();
            let rvinv = rv.inverse();
            let (w1, w2) = match factors {
                [single] => (single.clone(), Word::identity()),
                [a, b] => (a.clone(), b.clone()),
                _ => unreachable!("factorizations have one or two factors"),
            };
            vec![
                Word::product([&vinv, &w1, &rvinv]),
                Word::product([&rv, &w2, v]),
            ]
        }
        // letter substitutions map palindromes to palindromes
        _ => factors.iter().map(|f| g.apply(f)).collect(),
    }
}

fn tail_gens(nf: &NormalForm) -> Vec<AutoGen> {
    let mut gens = nf.flag_automorphism().gens;
    if !nf.v.is_empty() {
        gens.push(AutoGen::Inner(nf.v.clone()));
    }
    gens
}

/// A primitive element as a palindrome or a product of two palindromes.
pub fn palindrome_factorization(p: &Word) -> Result<PalindromeFactorization> {
    let nf = second_normal_form(p)?;
    let mut factors = vec![Word::y()];
    for phi in &nf.phis {
        factors = drop_empty(push_factors(phi, &factors)?);
    }
    for g in tail_gens(&nf) {
        factors = drop_empty(transport_factors(&g, &factors));
    }
    let out = PalindromeFactorization::normalized(factors);
    debug_assert_eq!(out.product(), *p);
    Ok(out)
}

/// `p = z⁻¹ · a · w · z` with `w` a palindrome and `a` absent or a single
/// letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugatePalindromeForm {
    pub z: Word,
    pub a: Option<Letter>,
    pub w: Word,
}

impl ConjugatePalindromeForm {
    pub fn reassemble(&self) -> Word {
        let a = self.a.map(Word::letter).unwrap_or_default();
        Word::product([&self.z.inverse(), &a, &self.w, &self.z])
    }
}

/// Splits the first palindrome factor at its midpoint.
pub fn conjugate_palindrome_form(p: &Word) -> Result<ConjugatePalindromeForm> {
    let fac = palindrome_factorization(p)?;
    let (w1, w2) = match fac.factors.as_slice() {
        [single] => {
            return Ok(ConjugatePalindromeForm {
                z: Word::identity(),
                a: None,
                w: single.clone(),
            })
        }
        [a, b] => (a, b),
        _ => unreachable!("factorizations have one or two factors"),
    };
    let half = w1.len() / 2;
    let v = w1.prefix(half);
    let a = (w1.len() % 2 == 1).then(|| w1.letters()[half]);
    // w₁ = v·a·rev(v); conjugating by z = v⁻¹ moves v to the far end
    let w = Word::product([&v.reversed(), w2, &v]);
    Ok(ConjugatePalindromeForm {
        z: v.inverse(),
        a,
        w,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `z · y⁻¹ · v · x · z⁻¹`.
    YX,
    /// `z · x⁻¹ · v · y · z⁻¹`.
    XY,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::YX => write!(f, "YX"),
            Side::XY => write!(f, "XY"),
        }
    }
}

/// Helling's form `z y⁻¹ v x z⁻¹` or `z x⁻¹ v y z⁻¹` with `v` a palindrome.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HellingForm {
    pub z: Word,
    pub v: Word,
    pub side: Side,
}

impl HellingForm {
    /// The form of `y` itself: `x⁻¹ · x · y`.
    pub fn of_y() -> HellingForm {
        HellingForm {
            z: Word::identity(),
            v: Word::x(),
            side: Side::XY,
        }
    }

    pub fn reassemble(&self) -> Word {
        let (left, right) = match self.side {
            Side::YX => (Word::y().inverse(), Word::x()),
            Side::XY => (Word::x().inverse(), Word::y()),
        };
        Word::product([&self.z, &left, &self.v, &right, &self.z.inverse()])
    }

    pub fn is_valid(&self) -> bool {
        self.v.is_palindrome()
    }

    /// Pushes the form of a positive word through a basic automorphism.
    /// Requires `v` to be a non-empty positive palindrome.
    pub fn push(&self, phi: &AutoGen) -> Result<HellingForm> {
        let AutoGen::Basic { n, orientation } = phi else {
            return Err(Error::PreconditionViolated(format!(
                "{phi} is not a basic automorphism"
            )));
        };
        let (_, u) = push_through(phi, &self.v)?;
        let z = &phi.apply(&self.z) * &Word::y().pow(-i64::from(*n));
        let x = Word::x();
        let (side, v) = match (self.side, orientation) {
            (Side::XY, Orientation::A) | (Side::YX, Orientation::B) => (Side::YX, u),
            (Side::XY, Orientation::B) | (Side::YX, Orientation::A) => {
                (Side::XY, Word::product([&x, &u, &x]))
            }
        };
        Ok(HellingForm { z, v, side })
    }

    /// Carries the form through `α_x`, `α_y`, `β` or a conjugation.
    pub fn transport(&self, g: &AutoGen) -> Result<HellingForm> {
        let x = Word::x();
        let y = Word::y();
        let za = g.apply(&self.z);
        let va = g.apply(&self.v);
        let out = match (g, self.side) {
            (AutoGen::Inner(w), _) => HellingForm {
                z: &w.inverse() * &self.z,
                v: self.v.clone(),
                side: self.side,
            },
            (AutoGen::Beta, Side::YX) => HellingForm {
                z: za,
                v: va,
                side: Side::XY,
            },
            (AutoGen::Beta, Side::XY) => HellingForm {
                z: za,
                v: va,
                side: Side::YX,
            },
            (AutoGen::AlphaX, Side::YX) => HellingForm {
                z: &za * &x,
                v: Word::product([&y.inverse(), &va, &y.inverse()]),
                side: Side::XY,
            },
            (AutoGen::AlphaX, Side::XY) => HellingForm {
                z: &za * &x,
                v: Word::product([&y, &va, &y]),
                side: Side::YX,
            },
            (AutoGen::AlphaY, Side::YX) => HellingForm {
                z: &za * &y,
                v: Word::product([&x, &va, &x]),
                side: Side::XY,
            },
            (AutoGen::AlphaY, Side::XY) => HellingForm {
                z: &za * &y,
                v: Word::product([&x.inverse(), &va, &x.inverse()]),
                side: Side::YX,
            },
            (other, _) => {
                return Err(Error::PreconditionViolated(format!(
                    "transport is defined for ax, ay, b and inner automorphisms, not {other}"
                )))
            }
        };
        Ok(out)
    }
}

pub fn helling_form(p: &Word) -> Result<HellingForm> {
    let nf = second_normal_form(p)?;
    let mut form = HellingForm::of_y();
    for phi in &nf.phis {
        form = form.push(phi)?;
    }
    for g in tail_gens(&nf) {
        form = form.transport(&g)?;
    }
    debug_assert_eq!(form.reassemble(), *p);
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn push_through_examples() {
        assert_eq!(
            push_through(&AutoGen::basic_b(1), &w("x")).unwrap(),
            (w("xy"), w("y"))
        );
        assert_eq!(
            push_through(&AutoGen::basic_b(1), &w("y")).unwrap(),
            (w("xyy"), w("yy"))
        );
        let (image, v) = push_through(&AutoGen::basic_a(2), &w("yxy")).unwrap();
        assert_eq!(image, w("xy^2 xy^3 xy^2"));
        assert_eq!(v, w("y^2 xy^3 xy^2"));
        assert!(v.is_palindrome());
        assert!(push_through(&AutoGen::basic_b(1), &w("xy")).is_err());
        assert!(push_through(&AutoGen::basic_b(1), &w("XyX")).is_err());
        assert!(push_through(&AutoGen::basic_b(1), &Word::identity()).is_err());
        assert!(push_through(&AutoGen::Beta, &w("x")).is_err());
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(
            palindrome_factorization(&w("x")).unwrap().factors,
            vec![w("x")]
        );
        assert_eq!(
            palindrome_factorization(&w("xy")).unwrap().factors,
            vec![w("x"), w("y")]
        );
        assert_eq!(
            palindrome_factorization(&w("xyyxy")).unwrap().factors,
            vec![w("xyyx"), w("y")]
        );
        assert!(matches!(
            palindrome_factorization(&w("xx")),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn conjugate_form_examples() {
        let f = conjugate_palindrome_form(&w("xyyx")).unwrap_err();
        assert_eq!(f.code(), "not-primitive");

        let f = conjugate_palindrome_form(&w("xyx")).unwrap();
        assert_eq!(
            f,
            ConjugatePalindromeForm {
                z: Word::identity(),
                a: None,
                w: w("xyx")
            }
        );

        let f = conjugate_palindrome_form(&w("xy")).unwrap();
        assert_eq!(
            f,
            ConjugatePalindromeForm {
                z: Word::identity(),
                a: Some(Letter::X),
                w: w("y")
            }
        );

        let f = conjugate_palindrome_form(&w("xyyxy")).unwrap();
        assert_eq!(f.z, w("YX"));
        assert_eq!(f.a, None);
        assert_eq!(f.w, w("yxyxy"));
        assert_eq!(f.reassemble(), w("xyyxy"));
    }

    #[test]
    fn helling_examples() {
        let h = helling_form(&w("y")).unwrap();
        assert_eq!(h, HellingForm::of_y());
        assert_eq!(h.reassemble(), w("y"));

        let h = helling_form(&w("xy")).unwrap();
        assert_eq!(h.reassemble(), w("xy"));
        assert!(h.v.is_palindrome());

        let h = helling_form(&w("x")).unwrap();
        assert_eq!(
            h,
            HellingForm {
                z: Word::identity(),
                v: w("y"),
                side: Side::YX
            }
        );
        assert_eq!(h.reassemble(), w("x"));
    }

    #[test]
    fn transport_rejects_basic() {
        assert!(HellingForm::of_y().transport(&AutoGen::basic_a(1)).is_err());
        assert!(HellingForm::of_y().push(&AutoGen::Beta).is_err());
    }
}
