use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use super::{flex, maj, maj_n, residue_in_range, Letter};
use crate::tableaux::{rsk_shape, PartitionTuple};
use crate::{Error, Result};

/// `(t_1, …, t_k)` with `1 ≤ t_j ≤ ν_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MajTuple(pub Vec<usize>);

impl MajTuple {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for MajTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_blocks(len: usize, nu: &[usize]) -> Result<()> {
    if nu.contains(&0) {
        return Err(Error::OutOfRange("block lengths must be positive".into()));
    }
    let total: usize = nu.iter().sum();
    if total != len {
        return Err(Error::LengthMismatch {
            expected: total,
            found: len,
        });
    }
    Ok(())
}

/// `bfmaj_ν(w) = (maj_{ν_1}(w^1), …, maj_{ν_k}(w^k))` for the consecutive
/// blocks `w = w^1 ⋯ w^k` with `|w^j| = ν_j`.
pub fn bfmaj_nu(w: &[Letter], nu: &[usize]) -> Result<MajTuple> {
    check_blocks(w.len(), nu)?;
    let mut out = Vec::with_capacity(nu.len());
    let mut start = 0;
    for &len in nu {
        out.push(maj_n(&w[start..start + len])?);
        start += len;
    }
    Ok(MajTuple(out))
}

/// The same tuple computed from a descent set alone (descents between
/// blocks are ignored).
pub fn bfmaj_from_descents(descents: &BTreeSet<usize>, nu: &[usize]) -> Result<MajTuple> {
    if nu.contains(&0) {
        return Err(Error::OutOfRange("block lengths must be positive".into()));
    }
    let n: usize = nu.iter().sum();
    if let Some(&d) = descents.iter().next_back() {
        if d >= n {
            return Err(Error::OutOfRange(format!("descent {d} in a word of length {n}")));
        }
    }
    let mut out = Vec::with_capacity(nu.len());
    let mut start = 0;
    for &len in nu {
        let block_maj: usize = descents
            .range(start + 1..start + len)
            .map(|&d| d - start)
            .sum();
        out.push(residue_in_range(block_maj, len));
        start += len;
    }
    Ok(MajTuple(out))
}

/// `Σ_j (ℓ/ν_j)·t_j` reduced into `{1, …, ℓ}` with `ℓ = lcm(ν)`.
pub fn maj_nu_from_tuple(tuple: &MajTuple, nu: &[usize]) -> usize {
    let l = nu.iter().fold(1usize, |acc, &v| acc.lcm(&v));
    let total: usize = tuple
        .0
        .iter()
        .zip(nu)
        .map(|(&t, &v)| (l / v) * t)
        .sum();
    residue_in_range(total, l)
}

pub fn maj_nu(w: &[Letter], nu: &[usize]) -> Result<usize> {
    let t = bfmaj_nu(w, nu)?;
    Ok(maj_nu_from_tuple(&t, nu))
}

/// Splits `w` into `b` blocks of length `a`, buckets the blocks by
/// `block_stat ∈ [a]`, and records the RSK shape of each bucket (blocks
/// compared lexicographically).
pub fn block_tuple_statistic<F>(w: &[Letter], a: usize, b: usize, block_stat: F) -> Result<PartitionTuple>
where
    F: Fn(&[Letter]) -> usize,
{
    block_tuple_statistic_by_key(w, a, b, block_stat, |block| block.to_vec())
}

/// As [`block_tuple_statistic`] with the total order on blocks given by a
/// sort key.
pub fn block_tuple_statistic_by_key<F, K, KF>(
    w: &[Letter],
    a: usize,
    b: usize,
    block_stat: F,
    key: KF,
) -> Result<PartitionTuple>
where
    F: Fn(&[Letter]) -> usize,
    K: Ord + Clone,
    KF: Fn(&[Letter]) -> K,
{
    if a == 0 {
        return Err(Error::OutOfRange("block length must be positive".into()));
    }
    if w.len() != a * b {
        return Err(Error::LengthMismatch {
            expected: a * b,
            found: w.len(),
        });
    }
    let mut buckets: Vec<Vec<K>> = vec![Vec::new(); a];
    for block in w.chunks(a) {
        let r = block_stat(block);
        if r == 0 || r > a {
            return Err(Error::OutOfRange(format!("block statistic {r} outside 1..={a}")));
        }
        buckets[r - 1].push(key(block));
    }
    Ok(PartitionTuple::new(buckets.iter().map(|bk| rsk_shape(bk)).collect()))
}

/// `flex_a^b(w)`.
pub fn flex_ab(w: &[Letter], a: usize, b: usize) -> Result<PartitionTuple> {
    block_tuple_statistic(w, a, b, |blk| flex(blk).expect("blocks are nonempty"))
}

/// `maj_a^b(w)`.
pub fn maj_ab(w: &[Letter], a: usize, b: usize) -> Result<PartitionTuple> {
    block_tuple_statistic(w, a, b, |blk| residue_in_range(maj(blk), blk.len()))
}
