use std::fmt;

use num_integer::Integer;

use super::{content, period_freq, period_unchecked, Composition, Letter, Word};
use crate::{Error, Result};

/// A rotation class of words, stored through its lexicographically least member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    representative: Word,
    period: usize,
    frequency: usize,
}

impl Necklace {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn frequency(&self) -> usize {
        self.frequency
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn content(&self) -> Composition {
        content(&self.representative)
    }

    pub fn is_primitive(&self) -> bool {
        self.frequency == 1
    }

    /// The `period` distinct words of the class.
    pub fn words(&self) -> Vec<Word> {
        super::rotations(&self.representative).expect("necklaces are nonempty")
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        w.len() == self.len() && least_rotation(w) == self.representative.letters()
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace{self}")
    }
}

fn least_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let p = period_unchecked(w);
    (0..p)
        .map(|s| (0..n).map(|k| w[(s + k) % n]).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// True when `w` is the least of its rotations.
pub fn is_necklace_representative(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).all(|s| {
        for k in 0..n {
            let a = w[(s + k) % n];
            if a != w[k] {
                return a > w[k];
            }
        }
        true
    })
}

pub fn necklace_of(w: &[Letter]) -> Result<Necklace> {
    let (period, frequency) = period_freq(w)?;
    Ok(Necklace {
        representative: Word::from_vec_unchecked(least_rotation(w)),
        period,
        frequency,
    })
}

/// Which necklaces [`enumerate_necklaces`] keeps, by frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecklaceFilter {
    All,
    /// `NF_{n,r}`: frequency exactly `r`.
    FreqEq(usize),
    /// `NFD_{n,r}`: frequency dividing `r`.
    FreqDiv(usize),
}

impl NecklaceFilter {
    pub fn accepts(&self, frequency: usize) -> bool {
        match *self {
            NecklaceFilter::All => true,
            NecklaceFilter::FreqEq(r) => frequency == r,
            NecklaceFilter::FreqDiv(r) => r % frequency == 0,
        }
    }
}

/// Necklaces of length `n` over `{1, …, m}` passing `filter`, in
/// lexicographic order of representatives.
pub fn enumerate_necklaces(n: usize, m: usize, filter: NecklaceFilter) -> Vec<Necklace> {
    let mut out = Vec::new();
    if let NecklaceFilter::FreqEq(0) | NecklaceFilter::FreqDiv(0) = filter {
        return out;
    }
    for_each_necklace(n, m, |rep, period| {
        if filter.accepts(n / period) {
            out.push(Necklace {
                representative: Word::from_vec_unchecked(rep.to_vec()),
                period,
                frequency: n / period,
            });
        }
    });
    out
}

/// Calls `visit(representative, period)` for every necklace of length `n`
/// over `{1, …, m}`, in lexicographic order of representatives.
///
/// Generated with the Fredricksen–Kessler–Maiorana prenecklace recursion.
pub fn for_each_necklace<F: FnMut(&[Letter], usize)>(n: usize, m: usize, mut visit: F) {
    if n == 0 || m == 0 {
        return;
    }
    let mut a = vec![0 as Letter; n + 1];
    fkm(1, 1, n, m as Letter, &mut a, &mut visit);
}

fn fkm<F: FnMut(&[Letter], usize)>(t: usize, p: usize, n: usize, m: Letter, a: &mut [Letter], visit: &mut F) {
    if t > n {
        if n.is_multiple_of(p) {
            visit(&a[1..], p);
        }
        return;
    }
    let start = if t == 1 { 1 } else { a[t - p] };
    a[t] = start;
    fkm(t + 1, p, n, m, a, visit);
    for j in start + 1..=m {
        a[t] = j;
        fkm(t + 1, t, n, m, a, visit);
    }
}

/// Applies the permutation with cycle type `nu` that rotates each
/// consecutive block of `w` of length `nu_j` independently.
pub fn nu_rotate(w: &[Letter], nu: &[usize]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    let mut start = 0;
    for &len in nu {
        let block = &w[start..start + len];
        out.push(block[len - 1]);
        out.extend_from_slice(&block[..len - 1]);
        start += len;
    }
    out
}

/// The orbit of a word under the product of independent block rotations
/// `C_{ν_1} × ⋯ × C_{ν_k}`, recorded as a tuple of necklaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NuOrbit {
    nu: Vec<usize>,
    blocks: Vec<Necklace>,
}

impl NuOrbit {
    pub fn of_word(w: &[Letter], nu: &[usize]) -> Result<Self> {
        let total: usize = nu.iter().sum();
        if total != w.len() {
            return Err(Error::LengthMismatch {
                expected: total,
                found: w.len(),
            });
        }
        if nu.contains(&0) {
            return Err(Error::OutOfRange("block lengths must be positive".into()));
        }
        let mut blocks = Vec::with_capacity(nu.len());
        let mut start = 0;
        for &len in nu {
            blocks.push(necklace_of(&w[start..start + len])?);
            start += len;
        }
        Ok(NuOrbit {
            nu: nu.to_vec(),
            blocks,
        })
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn blocks(&self) -> &[Necklace] {
        &self.blocks
    }

    /// The frequency tuple `ρ`; each `ρ_j` divides `ν_j`.
    pub fn frequencies(&self) -> Vec<usize> {
        self.blocks.iter().map(Necklace::frequency).collect()
    }

    /// Number of words in the orbit, `∏ ν_j/ρ_j`.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Necklace::period).product()
    }

    /// Size of each orbit of the diagonal cyclic subgroup inside this orbit,
    /// `lcm(ν_j/ρ_j)`.
    pub fn cyclic_orbit_size(&self) -> usize {
        self.blocks
            .iter()
            .map(Necklace::period)
            .fold(1, |acc, p| acc.lcm(&p))
    }
}
