use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{Basis, SymFunc};
use crate::tableaux::Partition;
use crate::words::{enumerate_words_by_content, Composition, Letter};
use crate::{Error, Result, Scalar};

/// Number of objects of each partition content.
pub type MonomialCounts = BTreeMap<Partition, u64>;

impl<T: Scalar> SymFunc<T> {
    /// `Σ_μ counts[μ] m_μ`.
    pub fn from_monomial_counts(degree: usize, counts: &MonomialCounts) -> Self {
        SymFunc::from_terms(
            degree,
            Basis::Monomial,
            counts.iter().map(|(mu, &c)| (mu.clone(), T::from_i64(c as i64))),
        )
    }

    /// Content generating function of a finite collection of objects, given
    /// by their contents. The coefficient of `m_μ` is the number of objects
    /// whose content is `μ`. With `validate`, each `μ` is also counted in
    /// one rearranged order and a mismatch is reported as an error.
    pub fn from_content_multiset(objects: &[Composition], degree: usize, validate: bool) -> Result<Self> {
        let mut counts: HashMap<&Composition, u64> = HashMap::new();
        let mut letters = degree;
        for c in objects {
            if c.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    found: c.size(),
                });
            }
            letters = letters.max(c.parts().len());
            *counts.entry(c).or_default() += 1;
        }
        let mut out = MonomialCounts::new();
        for (c, &k) in &counts {
            if c.is_partition() {
                out.insert(Partition::from_unsorted(c.parts().to_vec()), k);
            }
        }
        if validate {
            for (mu, &k) in &out {
                let mut padded = mu.parts().to_vec();
                padded.resize(letters, 0);
                padded.reverse();
                let rearranged = Composition::new(padded);
                if rearranged.is_partition() {
                    continue;
                }
                let found = counts.get(&rearranged).copied().unwrap_or(0);
                if found != k {
                    return Err(Error::NotSymmetric {
                        content: mu.parts().to_vec(),
                        expected: k,
                        found,
                    });
                }
            }
        }
        Ok(SymFunc::from_monomial_counts(degree, &out))
    }
}

/// Buckets the words of length `d` whose content is a partition of `d` by
/// `key`, counting each content. The result determines the content
/// generating function of every fiber `{w ∈ W_d : key(w) = k}`.
pub fn word_content_counts_by<K, F>(d: usize, key: F) -> BTreeMap<K, MonomialCounts>
where
    K: Ord + Send,
    F: Fn(&[Letter]) -> K + Sync,
{
    let per_content: Vec<(Partition, BTreeMap<K, u64>)> = Partition::all(d)
        .into_par_iter()
        .map(|mu| {
            let mut buckets: BTreeMap<K, u64> = BTreeMap::new();
            let mut it = enumerate_words_by_content(&Composition::new(mu.parts().to_vec()));
            while let Some(w) = it.next_slice() {
                *buckets.entry(key(w)).or_default() += 1;
            }
            (mu, buckets)
        })
        .collect();
    let mut out: BTreeMap<K, MonomialCounts> = BTreeMap::new();
    for (mu, buckets) in per_content {
        for (k, c) in buckets {
            out.entry(k).or_default().insert(mu.clone(), c);
        }
    }
    out
}

/// Content generating function of `{w ∈ W_d : pred(w)}` in the monomial
/// basis.
pub fn word_content_gf<T, F>(d: usize, pred: F) -> SymFunc<T>
where
    T: Scalar,
    F: Fn(&[Letter]) -> bool + Sync,
{
    let counts = word_content_counts_by(d, |w| pred(w));
    counts
        .get(&true)
        .map(|c| SymFunc::from_monomial_counts(d, c))
        .unwrap_or_else(|| SymFunc::zero(d, Basis::Monomial))
}
