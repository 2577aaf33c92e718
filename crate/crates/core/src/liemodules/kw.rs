use std::collections::BTreeMap;

use super::necklaces::nfd_gf;
use crate::characters::IntPolyModQn;
use crate::symfunc::{word_content_counts_by, Basis, SymFunc};
use crate::tableaux::{syt_descent_sets, Partition};
use crate::words::{flex, maj_n, residue_in_range};
use crate::{Error, Result, Scalar};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    Ok(())
}

/// `P_λ(q) = Σ_{r ∈ [n]} a_{λ,r} q^r` as a dense coefficient list of
/// length `n + 1` (index 0 is always 0).
pub fn cyclic_exponents(lambda: &Partition, n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    let mut coeffs = vec![0u64; n + 1];
    for d in syt_descent_sets(lambda) {
        coeffs[residue_in_range(d.iter().sum(), n)] += 1;
    }
    Ok(coeffs)
}

/// `P_λ(q)` reduced modulo `q^n − 1`.
pub fn cyclic_exponents_mod(lambda: &Partition, n: usize) -> Result<IntPolyModQn> {
    let c = cyclic_exponents(lambda, n)?;
    let signed: Vec<i64> = c.iter().map(|&x| x as i64).collect();
    Ok(IntPolyModQn::from_coeffs(n, &signed))
}

/// `r ↦ Σ_λ a_{λ,r} s_λ` for `r ∈ [n]`.
pub fn kw_series<T: Scalar>(n: usize) -> Result<BTreeMap<usize, SymFunc<T>>> {
    check_n(n)?;
    let mut terms: BTreeMap<usize, Vec<(Partition, T)>> = (1..=n).map(|r| (r, Vec::new())).collect();
    for lam in Partition::all(n) {
        let p = cyclic_exponents(&lam, n)?;
        for (r, &c) in p.iter().enumerate().skip(1) {
            if c > 0 {
                terms.get_mut(&r).unwrap().push((lam.clone(), T::from_i64(c as i64)));
            }
        }
    }
    Ok(terms
        .into_iter()
        .map(|(r, t)| (r, SymFunc::from_terms(n, Basis::Schur, t)))
        .collect())
}

/// Three monomial-basis computations of each `kw_series(n)` entry.
#[derive(Debug, Clone)]
pub struct KwRoutes<T: Scalar> {
    /// Content generating function of `NFD_{n,r}`.
    pub necklaces: BTreeMap<usize, SymFunc<T>>,
    /// Content generating function of `{w ∈ W_n : flex(w) = r}`.
    pub flex_fibers: BTreeMap<usize, SymFunc<T>>,
    /// Content generating function of `{w ∈ W_n : maj_n(w) = r}`.
    pub maj_fibers: BTreeMap<usize, SymFunc<T>>,
}

pub fn kw_routes<T: Scalar>(n: usize) -> Result<KwRoutes<T>> {
    check_n(n)?;
    let necklaces = (1..=n).map(|r| (r, nfd_gf(n, r))).collect();
    let buckets = word_content_counts_by(n, |w| (flex(w).expect("nonempty"), maj_n(w).expect("nonempty")));
    let mut flex_counts: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
    let mut maj_counts: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
    for ((f, m), counts) in buckets {
        for (mu, c) in counts {
            *flex_counts.entry(f).or_default().entry(mu.clone()).or_default() += c;
            *maj_counts.entry(m).or_default().entry(mu).or_default() += c;
        }
    }
    let to_series = |counts: &BTreeMap<usize, BTreeMap<Partition, u64>>| -> BTreeMap<usize, SymFunc<T>> {
        (1..=n)
            .map(|r| {
                let f = counts
                    .get(&r)
                    .map(|c| SymFunc::from_monomial_counts(n, c))
                    .unwrap_or_else(|| SymFunc::zero(n, Basis::Monomial));
                (r, f)
            })
            .collect()
    };
    Ok(KwRoutes {
        necklaces,
        flex_fibers: to_series(&flex_counts),
        maj_fibers: to_series(&maj_counts),
    })
}
