//! Freely reduced words in the free group on `x` and `y`.
//!
//! A [`Word`] is always freely reduced; every constructor reduces its input.
//! The text format writes `x`, `y` for the generators and `X`, `Y` for their
//! inverses, `1` for the identity, and accepts `g^n` and `(...)^n` powers on
//! input. Output never uses powers.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
}

/// A generator or its inverse.
///
/// The derived order `x < x⁻¹ < y < y⁻¹` is the letter order used for
/// canonical rotations and tie-breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X, Letter::XInv, Letter::Y, Letter::YInv];

    pub fn new(generator: Generator, positive: bool) -> Letter {
        match (generator, positive) {
            (Generator::X, true) => Letter::X,
            (Generator::X, false) => Letter::XInv,
            (Generator::Y, true) => Letter::Y,
            (Generator::Y, false) => Letter::YInv,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Letter::X | Letter::XInv => Generator::X,
            Letter::Y | Letter::YInv => Generator::Y,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Letter::X | Letter::Y)
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XInv,
            Letter::XInv => Letter::X,
            Letter::Y => Letter::YInv,
            Letter::YInv => Letter::Y,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::XInv => 'X',
            Letter::Y => 'y',
            Letter::YInv => 'Y',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'X' => Some(Letter::XInv),
            'y' => Some(Letter::Y),
            'Y' => Some(Letter::YInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Exponent sums `(X, Y)` of a word: the image of the word in the free
/// abelian group on `x`, `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentPair {
    pub x: i64,
    pub y: i64,
}

impl ExponentPair {
    pub const fn new(x: i64, y: i64) -> Self {
        ExponentPair { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Non-negative gcd, with `gcd(0, k) = |k|`.
    pub fn gcd(self) -> i64 {
        gcd(self.x, self.y)
    }

    pub fn is_coprime(self) -> bool {
        self.gcd() == 1
    }

    pub fn scale(self, k: i64) -> Self {
        ExponentPair::new(self.x * k, self.y * k)
    }

    /// The `k` with `self = k * base`, if any. `base` must be non-zero.
    pub fn multiple_of(self, base: ExponentPair) -> Option<i64> {
        if base.is_zero() {
            return if self.is_zero() { Some(0) } else { None };
        }
        // cross product zero means parallel
        if self.x * base.y != self.y * base.x {
            return None;
        }
        let k = if base.x != 0 {
            self.x / base.x
        } else {
            self.y / base.y
        };
        (base.scale(k) == self).then_some(k)
    }
}

impl std::ops::Add for ExponentPair {
    type Output = ExponentPair;
    fn add(self, o: ExponentPair) -> ExponentPair {
        ExponentPair::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Neg for ExponentPair {
    type Output = ExponentPair;
    fn neg(self) -> ExponentPair {
        ExponentPair::new(-self.x, -self.y)
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn x() -> Word {
        Word::letter(Letter::X)
    }

    pub fn y() -> Word {
        Word::letter(Letter::Y)
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Only `x` and `y` occur.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        let mut rest = other.letters.iter().peekable();
        while let (Some(&last), Some(&&next)) = (letters.last(), rest.peek()) {
            if last.inverse() != next {
                break;
            }
            letters.pop();
            rest.next();
        }
        letters.extend(rest);
        Word { letters }
    }

    /// Product of several words, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        Word::reduce(words.into_iter().flat_map(|w| w.letters.iter().copied()))
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let (core, conj) = base.cyclically_reduce();
        // conj⁻¹ · core^k · conj needs no further reduction
        let mut letters = conj.inverse().letters;
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&core.letters);
        }
        letters.extend_from_slice(&conj.letters);
        Word::reduce(letters)
    }

    /// `v⁻¹ · self · v`.
    pub fn conjugate_by(&self, v: &Word) -> Word {
        Word::product([&v.inverse(), self, v])
    }

    pub fn exponent_pair(&self) -> ExponentPair {
        let mut pair = ExponentPair::new(0, 0);
        for l in &self.letters {
            match l.generator() {
                Generator::X => pair.x += l.sign(),
                Generator::Y => pair.y += l.sign(),
            }
        }
        pair
    }

    /// The letter-sequence reversal, `w ↦ (w⁻¹)α_xα_y`.
    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => self.len() == 1 || a.inverse() != b,
            _ => true,
        }
    }

    /// Splits `self = conjugator⁻¹ · core · conjugator` with `core`
    /// cyclically reduced and `conjugator` the maximal stripped suffix.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].inverse() == self.letters[n - 1 - k] {
            k += 1;
        }
        let core = Word {
            letters: self.letters[k..n - k].to_vec(),
        };
        let conjugator = Word {
            letters: self.letters[n - k..].to_vec(),
        };
        (core, conjugator)
    }

    /// Rotation `self[k..] · self[..k]` of the letter sequence. `self` should
    /// be cyclically reduced for the result to stay reduced.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::identity();
        }
        let k = k % self.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::reduce(letters)
    }

    /// The lexicographically least rotation of the cyclic reduction: a
    /// canonical representative of the conjugacy class.
    pub fn cyclic_canonical(&self) -> Word {
        let (core, _) = self.cyclically_reduce();
        let start = least_rotation_start(&core.letters);
        core.rotate_left(start)
    }

    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let (a, _) = self.cyclically_reduce();
        let (b, _) = other.cyclically_reduce();
        a.len() == b.len() && a.cyclic_canonical() == b.cyclic_canonical()
    }

    /// Some `f` with `other = f⁻¹ · self · f`, if the words are conjugate.
    ///
    /// The result is one conjugator; all others are obtained by
    /// left-multiplying with elements of the centralizer of `self`.
    pub fn conjugator_to(&self, other: &Word) -> Option<Word> {
        let (a_core, a_conj) = self.cyclically_reduce();
        let (b_core, b_conj) = other.cyclically_reduce();
        if a_core.len() != b_core.len() {
            return None;
        }
        let k = rotation_offset(&a_core.letters, &b_core.letters)?;
        // b_core = u⁻¹ a_core u with u the length-k prefix of a_core
        let u = Word {
            letters: a_core.letters[..k].to_vec(),
        };
        Some(Word::product([&a_conj.inverse(), &u, &b_conj]))
    }

    /// Letter-wise substitution `x ↦ image_x`, `y ↦ image_y`, reduced.
    pub fn substitute(&self, image_x: &Word, image_y: &Word) -> Word {
        let inv_x = image_x.inverse();
        let inv_y = image_y.inverse();
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let image = match l {
                Letter::X => image_x,
                Letter::XInv => &inv_x,
                Letter::Y => image_y,
                Letter::YInv => &inv_y,
            };
            for &m in &image.letters {
                if out.last() == Some(&m.inverse()) {
                    out.pop();
                } else {
                    out.push(m);
                }
            }
        }
        Word { letters: out }
    }

    /// Applies a letter-to-letter map (sign flips, swaps).
    pub fn map_letters<F: Fn(Letter) -> Letter>(&self, f: F) -> Word {
        Word::reduce(self.letters.iter().map(|&l| f(l)))
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    /// The letters from position `k` on.
    pub fn suffix_from(&self, k: usize) -> Word {
        Word {
            letters: self.letters[k..].to_vec(),
        }
    }

    /// Positive word `x^a y^b` style builder: `g^k` for a single letter.
    pub fn power_of(l: Letter, k: i64) -> Word {
        Word::letter(l).pow(k)
    }

    /// All reduced words of length exactly `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * 3 + 1);
            for w in &out {
                for l in Letter::ALL {
                    if w.last() != Some(l.inverse()) {
                        let mut letters = w.letters.clone();
                        letters.push(l);
                        next.push(Word { letters });
                    }
                }
            }
            out = next;
        }
        out
    }

    /// All reduced words of length at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Word> {
        (0..=n).flat_map(Word::all_of_length).collect()
    }
}

/// Start index of the lexicographically least rotation.
fn least_rotation_start(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Smallest `k` such that rotating `a` left by `k` gives `b` (KMP over `a·a`).
fn rotation_offset(a: &[Letter], b: &[Letter]) -> Option<usize> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && b[i] != b[k] {
            k = fail[k - 1];
        }
        if b[i] == b[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut q = 0;
    for i in 0..(2 * n - 1) {
        let c = a[i % n];
        while q > 0 && c != b[q] {
            q = fail[q - 1];
        }
        if c == b[q] {
            q += 1;
        }
        if q == n {
            return Some(i + 1 - n);
        }
    }
    None
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Word {
        Word::letter(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut parser = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let letters = parser.sequence(0)?;
        if parser.pos < parser.chars.len() {
            return Err(parser.error("unexpected ')'"));
        }
        Ok(Word::reduce(letters))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sequence(&mut self, depth: usize) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            let atom = match self.peek() {
                None => break,
                Some(')') if depth > 0 => break,
                Some(')') => return Err(self.error("unbalanced ')'")),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    if self.peek() != Some(')') {
                        return Err(self.error("missing ')'"));
                    }
                    self.pos += 1;
                    inner
                }
                Some('1') => {
                    self.pos += 1;
                    Vec::new()
                }
                Some(c) => match Letter::from_char(c) {
                    Some(l) => {
                        self.pos += 1;
                        vec![l]
                    }
                    None => return Err(self.error(&format!("unexpected character {c:?}"))),
                },
            };
            let exponent = if self.peek() == Some('^') {
                self.pos += 1;
                self.integer()?
            } else {
                1
            };
            let base = Word::reduce(atom);
            out.extend(base.pow(exponent).letters);
        }
        Ok(out)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<i64>()
            .map_err(|_| self.error("expected an integer exponent"))
    }
}
