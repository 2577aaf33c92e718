//! Words over the positive integers and their statistics.
//!
//! Rotation follows `σ_n · w_1 w_2 ⋯ w_n = w_n w_1 ⋯ w_{n-1}`. Positions are
//! 1-based everywhere a position is reported (descent sets, `maj`).

mod enumerate;
mod necklace;
mod tuples;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::{Error, Result};

pub use enumerate::{enumerate_words, enumerate_words_by_content, MultisetPermutations, Words};
pub use necklace::{
    enumerate_necklaces, for_each_necklace, is_necklace_representative, necklace_of, nu_rotate, Necklace,
    NecklaceFilter, NuOrbit,
};
pub use tuples::{
    bfmaj_from_descents, bfmaj_nu, block_tuple_statistic, block_tuple_statistic_by_key, flex_ab,
    maj_ab, maj_nu, maj_nu_from_tuple, MajTuple,
};

pub type Letter = u32;

/// A finite word with letters in `{1, 2, …}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidLetter(0));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl TryFrom<Vec<Letter>> for Word {
    type Error = Error;

    fn try_from(letters: Vec<Letter>) -> Result<Self> {
        Word::new(letters)
    }
}

/// Parses either a run of digits (`"15531553"`) or a comma/space separated
/// list (`"10,2,11"`).
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<i64> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Error::OutOfRange(t.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| Error::OutOfRange(c.to_string()))
                })
                .collect::<Result<_>>()?
        };
        let letters = letters
            .into_iter()
            .map(|l| {
                if l >= 1 && l <= i64::from(Letter::MAX) {
                    Ok(l as Letter)
                } else {
                    Err(Error::InvalidLetter(l))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 10) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A weak composition. Trailing zeros are not significant and are stripped
/// on construction, so derived equality is content equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity of the letter `j` (1-based).
    pub fn get(&self, letter: usize) -> usize {
        letter
            .checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|p| p[0] >= p[1]) && !self.parts.contains(&0)
    }

    /// All weak compositions of `n` with exactly `k` (possibly zero) parts,
    /// in lexicographically decreasing order of the padded part vector.
    pub fn all_weak(n: usize, k: usize) -> Vec<Composition> {
        fn rec(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if k == 1 {
                prefix.push(n);
                out.push(Composition::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=n).rev() {
                prefix.push(first);
                rec(n - first, k - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if n == 0 {
                out.push(Composition::default());
            }
            return out;
        }
        rec(n, k, &mut Vec::with_capacity(k), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

/// `Des(w) = { i : w_i > w_{i+1} }`.
pub fn descent_set(w: &[Letter]) -> BTreeSet<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn maj(w: &[Letter]) -> usize {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Representative of `value mod n` in `{1, …, n}`.
pub(crate) fn residue_in_range(value: usize, n: usize) -> usize {
    match value % n {
        0 => n,
        r => r,
    }
}

/// `maj(w)` reduced modulo `n = |w|` into `{1, …, n}`.
pub fn maj_n(w: &[Letter]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(residue_in_range(maj(w), w.len()))
}

pub fn content(w: &[Letter]) -> Composition {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut parts = vec![0usize; max];
    for &l in w {
        parts[l as usize - 1] += 1;
    }
    Composition::new(parts)
}

/// Smallest `p` with `w` equal to its own rotation by `p`; always divides `n`.
pub(crate) fn period_unchecked(w: &[Letter]) -> usize {
    let n = w.len();
    // Prefix function: the smallest period of the string is n - π(n-1); it is
    // a rotation period only when it divides n.
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && w[i] != w[k] {
            k = pi[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let p = n - pi[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// `(period(w), freq(w))` where `w = v^freq` with `v` primitive of length `period`.
pub fn period_freq(w: &[Letter]) -> Result<(usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = period_unchecked(w);
    Ok((p, w.len() / p))
}

/// `σ_n · w`, moving the last letter to the front.
pub fn rotate(w: &[Letter]) -> Word {
    let mut v = Vec::with_capacity(w.len());
    if let Some((&last, init)) = w.split_last() {
        v.push(last);
        v.extend_from_slice(init);
    }
    Word(v)
}

/// The distinct rotations `w, σ_n·w, σ_n²·w, …` (exactly `period(w)` of them).
pub fn rotations(w: &[Letter]) -> Result<Vec<Word>> {
    let (p, _) = period_freq(w)?;
    let mut out = Vec::with_capacity(p);
    let mut cur = Word(w.to_vec());
    for _ in 0..p {
        let next = rotate(&cur);
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

/// Compares the rotation of `w` starting at offset `shift` against `w`.
fn rotation_cmp(w: &[Letter], shift: usize) -> std::cmp::Ordering {
    let n = w.len();
    for k in 0..n {
        let a = w[(shift + k) % n];
        match a.cmp(&w[k]) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// 1-based position of `w` among its distinct rotations in lexicographic order.
pub fn lex_rank(w: &[Letter]) -> Result<usize> {
    let (p, _) = period_freq(w)?;
    Ok(1 + (1..p)
        .filter(|&s| rotation_cmp(w, s) == std::cmp::Ordering::Less)
        .count())
}

/// `flex(w) = freq(w) · lex(w)`.
pub fn flex(w: &[Letter]) -> Result<usize> {
    let (p, f) = period_freq(w)?;
    let lex = 1 + (1..p)
        .filter(|&s| rotation_cmp(w, s) == std::cmp::Ordering::Less)
        .count();
    Ok(f * lex)
}
