use std::collections::BTreeMap;

use super::necklaces::{nfd_gf, product};
use crate::symfunc::{word_content_counts_by, Basis, MonomialCounts, SymFunc};
use crate::tableaux::{Partition, PartitionTuple};
use crate::words::{flex_ab, maj_ab};
use crate::{Error, Result, Scalar};

fn check_tuple(a: usize, b: usize, ul: &PartitionTuple) -> Result<()> {
    if a == 0 {
        return Err(Error::OutOfRange("a must be positive".into()));
    }
    if ul.a() != a {
        return Err(Error::LengthMismatch {
            expected: a,
            found: ul.a(),
        });
    }
    if ul.size() != b {
        return Err(Error::SizeMismatch {
            expected: b,
            found: ul.size(),
        });
    }
    Ok(())
}

/// `Π_r s_{λ^{(r)}}[NFD_{a,r}]`, the characteristic of the irreducible of
/// `C_a ≀ S_b` labelled by `ul`, induced to `S_{ab}`. Schur basis.
pub fn wreath_char<T: Scalar>(a: usize, b: usize, ul: &PartitionTuple) -> Result<SymFunc<T>> {
    check_tuple(a, b, ul)?;
    let factors = ul
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, lam)| !lam.is_empty())
        .map(|(i, lam)| SymFunc::<T>::schur(lam.clone()).plethysm(&nfd_gf(a, i + 1)));
    Ok(product(factors).to_schur())
}

/// Dimension of the irreducible of `C_a ≀ S_b` labelled by `ul`.
pub fn wreath_dim(ul: &PartitionTuple) -> u64 {
    let mut dim: u64 = 1;
    let mut placed = 0u64;
    for lam in ul.entries() {
        for k in 1..=lam.size() as u64 {
            placed += 1;
            dim = dim * placed / k;
        }
        dim *= lam.num_syt();
    }
    dim
}

/// The graded Frobenius series of `S_{ab}` acting on words, resolved by
/// `C_a ≀ S_b`-irreducibles, computed three ways.
#[derive(Debug, Clone)]
pub struct GradedFrobenius<T: Scalar> {
    /// `ul ↦ wreath_dim(ul) · wreath_char(a, b, ul)`.
    pub by_character: BTreeMap<PartitionTuple, SymFunc<T>>,
    /// `ul ↦` content GF of `{w ∈ W_{ab} : flex_a^b(w) = ul}`.
    pub by_flex: BTreeMap<PartitionTuple, SymFunc<T>>,
    /// `ul ↦` content GF of `{w ∈ W_{ab} : maj_a^b(w) = ul}`.
    pub by_maj: BTreeMap<PartitionTuple, SymFunc<T>>,
}

impl<T: Scalar> GradedFrobenius<T> {
    /// Whether all three maps agree on every `ul`.
    pub fn agrees(&self) -> bool {
        self.first_disagreement().is_none()
    }

    /// The first `ul` at which two of the three maps differ.
    pub fn first_disagreement(&self) -> Option<&PartitionTuple> {
        self.by_character.iter().find_map(|(ul, f)| {
            let same = |m: &BTreeMap<PartitionTuple, SymFunc<T>>| m.get(ul).map_or(f.is_zero(), |g| f.value_eq(g));
            (!same(&self.by_flex) || !same(&self.by_maj)).then_some(ul)
        })
    }

    /// `Σ_ul` of the character-side map, Schur basis.
    pub fn total(&self) -> SymFunc<T> {
        let n = self.by_character.values().next().map_or(0, |f| f.degree());
        self.by_character
            .values()
            .fold(SymFunc::zero(n, Basis::Schur), |acc, f| acc + f.to_schur())
    }
}

pub fn graded_frobenius<T: Scalar>(a: usize, b: usize) -> Result<GradedFrobenius<T>> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("a and b must be positive".into()));
    }
    let n = a * b;
    let mut by_character = BTreeMap::new();
    for ul in PartitionTuple::all(a, b) {
        let f = wreath_char::<T>(a, b, &ul)?.scale(&T::from_i64(wreath_dim(&ul) as i64));
        by_character.insert(ul, f);
    }
    let buckets = word_content_counts_by(n, |w| {
        (
            flex_ab(w, a, b).expect("length is ab"),
            maj_ab(w, a, b).expect("length is ab"),
        )
    });
    let mut flex_counts: BTreeMap<PartitionTuple, MonomialCounts> = BTreeMap::new();
    let mut maj_counts: BTreeMap<PartitionTuple, MonomialCounts> = BTreeMap::new();
    for ((f, m), counts) in buckets {
        for (mu, c) in counts {
            *flex_counts.entry(f.clone()).or_default().entry(mu.clone()).or_default() += c;
            *maj_counts.entry(m.clone()).or_default().entry(mu).or_default() += c;
        }
    }
    let to_map = |counts: BTreeMap<PartitionTuple, MonomialCounts>| {
        counts
            .into_iter()
            .map(|(ul, c)| (ul, SymFunc::from_monomial_counts(n, &c)))
            .collect()
    };
    Ok(GradedFrobenius {
        by_character,
        by_flex: to_map(flex_counts),
        by_maj: to_map(maj_counts),
    })
}

/// `Σ_{λ ⊢ n} #SYT(λ) s_λ`.
pub fn regular_character<T: Scalar>(n: usize) -> SymFunc<T> {
    SymFunc::from_terms(
        n,
        Basis::Schur,
        Partition::all(n).into_iter().map(|l| {
            let f = T::from_i64(l.num_syt() as i64);
            (l, f)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liemodules::{schocker, Kind};
    use crate::Q;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_characters() {
        for b in 1..=4 {
            let ul = PartitionTuple::new(vec![p(&[b])]);
            assert_eq!(wreath_char::<Q>(1, b, &ul).unwrap(), SymFunc::schur(p(&[b])));
        }
        let top = PartitionTuple::new(vec![Partition::empty(), p(&[1])]);
        let bottom = PartitionTuple::new(vec![p(&[1]), Partition::empty()]);
        assert_eq!(wreath_char::<Q>(2, 1, &top).unwrap(), SymFunc::schur(p(&[2])));
        assert_eq!(wreath_char::<Q>(2, 1, &bottom).unwrap(), SymFunc::schur(p(&[1, 1])));
        assert!(wreath_char::<Q>(2, 2, &top).is_err());
    }

    #[test]
    fn dimensions() {
        let ul = PartitionTuple::new(vec![p(&[1]), p(&[1])]);
        assert_eq!(wreath_dim(&ul), 2);
        let ul = PartitionTuple::new(vec![p(&[2, 1]), p(&[1])]);
        assert_eq!(wreath_dim(&ul), 4 * 2);
        for (a, b) in [(2, 2), (3, 2), (2, 3)] {
            let order: u64 = (1..=b as u64).product::<u64>() * (a as u64).pow(b as u32);
            let sum: u64 = PartitionTuple::all(a, b).iter().map(|ul| wreath_dim(ul).pow(2)).sum();
            assert_eq!(sum, order);
        }
    }

    #[test]
    fn concentrated_tuples_match_schocker() {
        for (a, b) in [(2, 2), (3, 2), (2, 3)] {
            for r in 1..=a {
                let triv = PartitionTuple::concentrated(a, r, p(&[b]));
                let sign = PartitionTuple::concentrated(a, r, p(&vec![1; b]));
                assert_eq!(wreath_char::<Q>(a, b, &triv).unwrap(), schocker(a, b, r, Kind::Trivial).unwrap());
                assert_eq!(wreath_char::<Q>(a, b, &sign).unwrap(), schocker(a, b, r, Kind::Sign).unwrap());
            }
        }
    }

    #[test]
    fn three_ways_agree() {
        let g = graded_frobenius::<Q>(2, 1).unwrap();
        assert!(g.agrees());
        let top = PartitionTuple::new(vec![Partition::empty(), p(&[1])]);
        assert!(g.by_flex[&top].value_eq(&SymFunc::schur(p(&[2]))));
        let g = graded_frobenius::<Q>(2, 2).unwrap();
        assert_eq!(g.by_character.len(), 5);
        assert!(g.agrees());
        assert_eq!(g.total(), regular_character(4));
    }
}
