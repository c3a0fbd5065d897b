//! Brute-force reference computations for small inputs.
//!
//! Nothing here uses the descent or the normal forms; the searches only
//! apply automorphisms, multiply words and compare conjugacy classes.

use std::collections::{BTreeSet, VecDeque};

use crate::autom::{AutoGen, Orientation};
use crate::error::{Error, Result};
use crate::word::{gcd, ExponentPair, Word};

pub const MAX_ORBIT_LEN: usize = 12;
/// Extra length allowed to intermediate classes during the orbit search.
pub const ORBIT_SLACK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub max_len: usize,
    /// Cyclic canonical forms.
    pub members: BTreeSet<Word>,
}

impl OrbitSet {
    /// Whether `w` is conjugate to a member; `w` must be cyclically
    /// reduced to length at most `max_len` for a negative answer to mean
    /// anything.
    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(&w.cyclic_canonical())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn orbit_generators() -> Vec<AutoGen> {
    // conjugations act trivially on conjugacy classes, so Inner(x) and
    // Inner(y) are implicit
    vec![
        AutoGen::AlphaX,
        AutoGen::AlphaY,
        AutoGen::Beta,
        AutoGen::basic_a(0),
        AutoGen::basic_b(0),
        AutoGen::basic_a(1),
        AutoGen::basic_b(1),
    ]
}

/// Conjugacy classes of primitive elements with cyclic length at most `l`,
/// found as the orbit of `x`.
pub fn primitive_orbit_up_to(l: usize) -> Result<OrbitSet> {
    if l > MAX_ORBIT_LEN {
        return Err(Error::ResourceGuard(format!(
            "orbit length bound {l} exceeds {MAX_ORBIT_LEN}"
        )));
    }
    let bound = l + ORBIT_SLACK;
    let gens = orbit_generators();
    let start = Word::x().cyclic_canonical();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(class) = queue.pop_front() {
        for g in &gens {
            let image = g.apply(&class).cyclic_canonical();
            if image.len() <= bound && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let members = seen.into_iter().filter(|w| w.len() <= l).collect();
    Ok(OrbitSet {
        max_len: l,
        members,
    })
}

pub const MAX_NCL_DEPTH: usize = 4;
pub const MAX_NCL_WORD: usize = 8;

/// Default conjugator length bound for `brute_ncl`, capped so the search
/// stays at desk scale.
pub fn default_conjugator_bound(r: &Word, p: &Word, depth: usize) -> usize {
    let natural = (r.len() + p.len() * depth).div_ceil(2);
    let cap = match depth {
        0 | 1 => natural,
        2 => 9,
        3 => 4,
        _ => 2,
    };
    natural.min(cap)
}

/// Whether `r` is a product of at most `depth` conjugates of `p^±1`, with
/// conjugators of length at most `default_conjugator_bound`. A `true`
/// answer is definitive; `false` only means nothing was found.
pub fn brute_ncl(r: &Word, p: &Word, depth: usize) -> Result<bool> {
    brute_ncl_bounded(r, p, depth, default_conjugator_bound(r, p, depth))
}

/// Sign patterns `e_1..e_n` with `Σ e_i = k`.
fn sign_patterns(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let signs: Vec<i64> = (0..n)
            .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
            .collect();
        if signs.iter().sum::<i64>() == k {
            out.push(signs);
        }
    }
    out
}

/// `brute_ncl` with an explicit conjugator length bound.
///
/// Since conjugating a product of conjugates gives another one, it suffices
/// to search for `r` up to conjugacy with the first conjugator trivial:
/// `r ~ p^(e_1) · g_2⁻¹ p^(e_2) g_2 ⋯ g_n⁻¹ p^(e_n) g_n`.
pub fn brute_ncl_bounded(r: &Word, p: &Word, depth: usize, max_conj: usize) -> Result<bool> {
    if depth > MAX_NCL_DEPTH || r.len() > MAX_NCL_WORD {
        return Err(Error::ResourceGuard(format!(
            "brute_ncl needs depth <= {MAX_NCL_DEPTH} and |r| <= {MAX_NCL_WORD}, got {depth} and {}",
            r.len()
        )));
    }
    if r.is_empty() {
        return Ok(true);
    }
    if p.is_empty() {
        return Ok(false);
    }
    let Some(k) = r.exponent_pair().multiple_of(p.exponent_pair()) else {
        return Ok(false);
    };
    let target = r.cyclic_canonical();
    let target_pair = r.exponent_pair();
    let conjugators = Word::all_up_to(max_conj);
    let powers = [p.clone(), p.inverse()];
    let conj_of = |sign: i64| -> Vec<Word> {
        let base = &powers[usize::from(sign < 0)];
        conjugators.iter().map(|g| base.conjugate_by(g)).collect()
    };
    let conj_pos = conj_of(1);
    let conj_neg = conj_of(-1);
    let pick = |sign: i64| if sign > 0 { &conj_pos } else { &conj_neg };

    for n in 1..=depth {
        if k.unsigned_abs() as usize > n || (n as i64 - k) % 2 != 0 {
            continue;
        }
        for signs in sign_patterns(n, k) {
            let head = &powers[usize::from(signs[0] < 0)];
            if search(head, &signs[1..], &pick, &target, target_pair) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn search<'a, F>(
    acc: &Word,
    signs: &[i64],
    pick: &F,
    target: &Word,
    target_pair: ExponentPair,
) -> bool
where
    F: Fn(i64) -> &'a Vec<Word>,
{
    let Some((&sign, rest)) = signs.split_first() else {
        debug_assert_eq!(acc.exponent_pair(), target_pair);
        return acc.cyclic_canonical() == *target;
    };
    pick(sign)
        .iter()
        .any(|c| search(&(acc * c), rest, pick, target, target_pair))
}

/// Predecessors `(U, V)` with `1 <= U <= V` and a basic `φ` with
/// `(U, V) · M(φ) = (X, Y)`, one entry per distinct pair. The pair `(1, 1)`
/// is reached by both `A(n)` and `B(n)`; the `A` entry is kept.
pub fn enumerate_basic_preimages(x: i64, y: i64) -> Result<Vec<(ExponentPair, AutoGen)>> {
    let d = gcd(x, y);
    if d != 1 {
        return Err(Error::NonCoprime { x, y, gcd: d });
    }
    if !(2 <= x && x < y) {
        return Err(Error::OutOfRange(format!(
            "preimages need 2 <= X < Y, got ({x}, {y})"
        )));
    }
    let target = ExponentPair::new(x, y);
    let mut out: Vec<(ExponentPair, AutoGen)> = Vec::new();
    for n in 0..=y {
        let n_u32 = u32::try_from(n).expect("scan bound fits in u32");
        for orientation in [Orientation::A, Orientation::B] {
            let phi = AutoGen::basic(n_u32, orientation);
            let m = phi.matrix();
            // scan every U in range rather than solving for it
            for u in 1..=x {
                let pair = ExponentPair::new(u, x - u);
                if pair.x > pair.y || m.act(pair) != target {
                    continue;
                }
                if !out.iter().any(|(seen, _)| *seen == pair) {
                    out.push((pair, phi.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Every sequence of at most `max_len` basic automorphisms with parameters
/// at most `max_n` sending `y` to `target`.
pub fn basic_sequences_reaching(target: &Word, max_len: usize, max_n: u32) -> Vec<Vec<AutoGen>> {
    let gens: Vec<AutoGen> = (0..=max_n)
        .flat_map(|n| [AutoGen::basic_a(n), AutoGen::basic_b(n)])
        .collect();
    let mut out = Vec::new();
    let mut path = Vec::new();
    walk(&Word::y(), target, max_len, &gens, &mut path, &mut out);
    out
}

fn walk(
    w: &Word,
    target: &Word,
    max_len: usize,
    gens: &[AutoGen],
    path: &mut Vec<AutoGen>,
    out: &mut Vec<Vec<AutoGen>>,
) {
    if w == target {
        out.push(path.clone());
    }
    if path.len() == max_len {
        return;
    }
    for g in gens {
        // basic automorphisms never shorten positive words
        let next = g.apply(w);
        if next.len() > target.len() {
            continue;
        }
        path.push(g.clone());
        walk(&next, target, max_len, gens, path, out);
        path.pop();
    }
}
