use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;

use super::necklaces::{nf_gf, nfd_gf, product};
use crate::characters::CycleType;
use crate::symfunc::{Basis, MonomialCounts, SymFunc};
use crate::tableaux::{syt_descent_sets, Partition};
use crate::words::{bfmaj_from_descents, enumerate_words_by_content, maj_nu_from_tuple, nu_rotate, Composition, Letter, MajTuple};
use crate::{Error, Result, Scalar};

fn order(nu: &[usize]) -> usize {
    nu.iter().fold(1, |acc, &p| acc.lcm(&p))
}

fn check_nu(nu: &[usize]) -> Result<usize> {
    if nu.is_empty() || nu.contains(&0) {
        return Err(Error::OutOfRange("cycle lengths must be positive".into()));
    }
    Ok(nu.iter().sum())
}

/// `(λ, bfmaj_ν(Q)) ↦ #Q` over all standard tableaux `Q` of size `Σν_j`.
/// `ν` may be any composition; block order matters.
pub fn bold_a_table(nu: &[usize]) -> Result<HashMap<(Partition, MajTuple), u64>> {
    let n = check_nu(nu)?;
    let mut table = HashMap::new();
    for lam in Partition::all(n) {
        for d in syt_descent_sets(&lam) {
            let tau = bfmaj_from_descents(&d, nu)?;
            *table.entry((lam.clone(), tau)).or_default() += 1;
        }
    }
    Ok(table)
}

/// `𝐚^ν_{λ,τ} = #{Q ∈ SYT(λ) : bfmaj_ν(Q) = τ}`.
pub fn bold_a(nu: &[usize], lambda: &Partition, tau: &[usize]) -> Result<u64> {
    if lambda.size() != check_nu(nu)? {
        return Err(Error::SizeMismatch {
            expected: nu.iter().sum(),
            found: lambda.size(),
        });
    }
    let mut count = 0;
    for d in syt_descent_sets(lambda) {
        if bfmaj_from_descents(&d, nu)?.entries() == tau {
            count += 1;
        }
    }
    Ok(count)
}

/// `a^ν_{λ,r} = #{Q ∈ SYT(λ) : maj_ν(Q) = r}` for all `λ ⊢ n`, `r ∈ [ℓ]`.
pub fn stembridge_coefficients(nu: &[usize]) -> Result<BTreeMap<usize, BTreeMap<Partition, u64>>> {
    let n = check_nu(nu)?;
    let ell = order(nu);
    let mut out: BTreeMap<usize, BTreeMap<Partition, u64>> = (1..=ell).map(|r| (r, BTreeMap::new())).collect();
    for lam in Partition::all(n) {
        for d in syt_descent_sets(&lam) {
            let r = maj_nu_from_tuple(&bfmaj_from_descents(&d, nu)?, nu);
            *out.get_mut(&r).unwrap().entry(lam.clone()).or_default() += 1;
        }
    }
    Ok(out)
}

/// `r ↦ Σ_λ a^ν_{λ,r} s_λ` for `r ∈ [ℓ]`.
pub fn stembridge_series<T: Scalar>(nu: &CycleType) -> Result<BTreeMap<usize, SymFunc<T>>> {
    let n = nu.size();
    Ok(stembridge_coefficients(nu.partition().parts())?
        .into_iter()
        .map(|(r, c)| {
            let f = SymFunc::from_int_terms(n, Basis::Schur, c.into_iter().map(|(l, v)| (l, v as i64)));
            (r, f)
        })
        .collect())
}

/// Orbits of the cyclic group generated by the block rotation of cycle type
/// `ν`, on words of length `n` with partition content over `n` letters:
/// counts by orbit frequency `ℓ / #orbit` and content.
pub fn orbit_counts_by_frequency(nu: &[usize]) -> Result<BTreeMap<usize, MonomialCounts>> {
    let n = check_nu(nu)?;
    let ell = order(nu);
    let per_content: Vec<(Partition, BTreeMap<usize, u64>)> = Partition::all(n)
        .into_par_iter()
        .map(|mu| {
            let mut by_freq: BTreeMap<usize, u64> = BTreeMap::new();
            let mut it = enumerate_words_by_content(&Composition::new(mu.parts().to_vec()));
            while let Some(w) = it.next_slice() {
                // keep w only if it is the least word of its orbit
                let mut size = 1;
                let mut least = true;
                let mut cur: Vec<Letter> = nu_rotate(w, nu);
                while cur.as_slice() != w {
                    if cur.as_slice() < w {
                        least = false;
                        break;
                    }
                    size += 1;
                    cur = nu_rotate(&cur, nu);
                }
                if least {
                    *by_freq.entry(ell / size).or_default() += 1;
                }
            }
            (mu, by_freq)
        })
        .collect();
    let mut out: BTreeMap<usize, MonomialCounts> = BTreeMap::new();
    for (mu, by_freq) in per_content {
        for (f, c) in by_freq {
            out.entry(f).or_default().insert(mu.clone(), c);
        }
    }
    Ok(out)
}

/// Content generating function of `OFD_{C,r}` by direct orbit enumeration.
/// The result is symmetric of degree `Σν_j`, so any `m ≥ Σν_j` letters give
/// the same function.
pub fn ofd_content_gf<T: Scalar>(nu: &[usize], r: usize, m: usize) -> Result<SymFunc<T>> {
    let n = check_nu(nu)?;
    if m < n {
        return Err(Error::OutOfRange(format!("{m} letters for words of length {n}")));
    }
    Ok(ofd_series_by_orbits(nu)?.remove(&r).unwrap_or_else(|| SymFunc::zero(nu.iter().sum(), Basis::Monomial)))
}

/// `r ↦ OFD_{C,r}` GF for `r ∈ [ℓ]`, by direct orbit enumeration.
pub fn ofd_series_by_orbits<T: Scalar>(nu: &[usize]) -> Result<BTreeMap<usize, SymFunc<T>>> {
    let n = check_nu(nu)?;
    let ell = order(nu);
    let counts = orbit_counts_by_frequency(nu)?;
    Ok((1..=ell)
        .map(|r| {
            let mut total = MonomialCounts::new();
            for (&f, c) in &counts {
                if r % f == 0 {
                    for (mu, &k) in c {
                        *total.entry(mu.clone()).or_default() += k;
                    }
                }
            }
            (r, SymFunc::from_monomial_counts(n, &total))
        })
        .collect())
}

/// `r ↦ OFD_{C,r}` GF from the frequency tuples `ρ | ν` of the
/// `C_ν`-orbits, each weighted by the number of `C`-orbits it splits into.
pub fn ofd_series_by_frequencies<T: Scalar>(nu: &[usize]) -> Result<BTreeMap<usize, SymFunc<T>>> {
    let n = check_nu(nu)?;
    let ell = order(nu);
    let divisor_lists: Vec<Vec<usize>> = nu.iter().map(|&v| (1..=v).filter(|d| v % d == 0).collect()).collect();
    let mut out: BTreeMap<usize, SymFunc<T>> = (1..=ell).map(|r| (r, SymFunc::zero(n, Basis::PowerSum))).collect();
    for rho in divisor_lists.iter().multi_cartesian_product() {
        let periods: Vec<usize> = nu.iter().zip(&rho).map(|(&v, &&p)| v / p).collect();
        let size = periods.iter().fold(1, |acc, &p| acc.lcm(&p));
        let weight = periods.iter().product::<usize>() / size;
        let gf = product(nu.iter().zip(&rho).map(|(&v, &&p)| nf_gf::<T>(v, p)));
        if gf.is_zero() {
            continue;
        }
        let term = gf.scale(&T::from_i64(weight as i64));
        for r in 1..=ell {
            if (r * size) % ell == 0 {
                let slot = out.get_mut(&r).unwrap();
                *slot = slot.clone() + term.clone();
            }
        }
    }
    Ok(out)
}

/// `r ↦ OFD_{C,r}` GF as `Σ NFD_{ν,τ}` over `τ ∈ [ν_1] × ⋯ × [ν_k]` with
/// `Σ (ℓ/ν_j) τ_j ≡ r (mod ℓ)`.
pub fn ofd_series_by_maj_tuples<T: Scalar>(nu: &[usize]) -> Result<BTreeMap<usize, SymFunc<T>>> {
    let n = check_nu(nu)?;
    let ell = order(nu);
    let ranges: Vec<Vec<usize>> = nu.iter().map(|&v| (1..=v).collect()).collect();
    let mut out: BTreeMap<usize, SymFunc<T>> = (1..=ell).map(|r| (r, SymFunc::zero(n, Basis::PowerSum))).collect();
    let mut factors: HashMap<(usize, usize), SymFunc<T>> = HashMap::new();
    for tau in ranges.iter().multi_cartesian_product() {
        let tau: Vec<usize> = tau.into_iter().copied().collect();
        let r = maj_nu_from_tuple(&MajTuple(tau.clone()), nu);
        let gf = product(nu.iter().zip(&tau).map(|(&v, &t)| {
            factors.entry((v, t)).or_insert_with(|| nfd_gf::<T>(v, t)).clone()
        }));
        let slot = out.get_mut(&r).unwrap();
        *slot = slot.clone() + gf;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::induced_multiplicity;
    use crate::liemodules::kw_series;
    use crate::Q;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn long_cycle_is_kw() {
        for n in 1..=6 {
            assert_eq!(stembridge_series::<Q>(&CycleType::cycle(n)).unwrap(), kw_series::<Q>(n).unwrap());
        }
    }

    #[test]
    fn identity_gives_regular_representation() {
        for n in 1..=5 {
            let s = stembridge_series::<Q>(&CycleType::new(p(&vec![1; n]))).unwrap();
            assert_eq!(s.len(), 1);
            for (lam, c) in s[&1].coeffs() {
                assert_eq!(c.to_integer() as u64, lam.num_syt());
            }
            assert_eq!(s[&1].coeffs().len(), Partition::all(n).len());
        }
    }

    #[test]
    fn two_one_matches_oracle() {
        let nu = CycleType::new(p(&[2, 1]));
        let series = stembridge_series::<Q>(&nu).unwrap();
        for r in 1..=2 {
            for lam in Partition::all(3) {
                let oracle = induced_multiplicity(&lam, &nu, r).unwrap();
                assert_eq!(series[&r].coeff(&lam), Q::from_integer(oracle as i64));
            }
        }
    }

    #[test]
    fn orbit_routes_agree() {
        for nu in [vec![2, 1], vec![1, 1], vec![3, 2], vec![2, 2], vec![4], vec![2, 1, 1]] {
            let a = ofd_series_by_orbits::<Q>(&nu).unwrap();
            let b = ofd_series_by_frequencies::<Q>(&nu).unwrap();
            let c = ofd_series_by_maj_tuples::<Q>(&nu).unwrap();
            let s = stembridge_series::<Q>(&CycleType::new(Partition::from_unsorted(nu.clone()))).unwrap();
            for (r, f) in &a {
                assert!(f.value_eq(&b[r]), "{nu:?} r={r}");
                assert!(f.value_eq(&c[r]), "{nu:?} r={r}");
                assert!(f.value_eq(&s[r]), "{nu:?} r={r}");
            }
        }
    }

    #[test]
    fn trivial_group_orbits() {
        let f = ofd_content_gf::<Q>(&[1, 1], 1, 2).unwrap();
        let h1 = SymFunc::<Q>::h(1);
        assert!(f.value_eq(&h1.multiply(&h1)));
        assert!(ofd_content_gf::<Q>(&[4], 2, 6).unwrap().value_eq(&nfd_gf(4, 2)));
    }

    #[test]
    fn bold_a_single_entries() {
        let table = bold_a_table(&[2, 1]).unwrap();
        for lam in Partition::all(3) {
            for t1 in 1..=2 {
                let direct = bold_a(&[2, 1], &lam, &[t1, 1]).unwrap();
                let from_table = table.get(&(lam.clone(), MajTuple(vec![t1, 1]))).copied().unwrap_or(0);
                assert_eq!(direct, from_table);
            }
        }
    }
}
