use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::symfunc::{Basis, MonomialCounts, SymFunc};
use crate::tableaux::Partition;
use crate::words::{for_each_necklace, Letter};
use crate::Scalar;

fn partition_content(w: &[Letter], m: usize) -> Option<Partition> {
    let mut c = vec![0usize; m];
    for &l in w {
        c[l as usize - 1] += 1;
    }
    if c.windows(2).all(|p| p[0] >= p[1]) {
        Some(Partition::from_unsorted(c))
    } else {
        None
    }
}

/// Necklaces of length `m` over `{1, …, m}` with partition content,
/// counted by frequency and content. Computed once per `m`.
pub fn necklace_counts(m: usize) -> Arc<BTreeMap<usize, MonomialCounts>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BTreeMap<usize, MonomialCounts>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&m) {
        return c.clone();
    }
    let mut counts: BTreeMap<usize, MonomialCounts> = BTreeMap::new();
    for_each_necklace(m, m, |rep, period| {
        if let Some(mu) = partition_content(rep, m) {
            *counts.entry(m / period).or_default().entry(mu).or_default() += 1;
        }
    });
    let counts = Arc::new(counts);
    cache.lock().unwrap().insert(m, counts.clone());
    counts
}

/// Content generating function of `NF_{m,f}`, necklaces of length `m` and
/// frequency exactly `f`.
pub fn nf_gf<T: Scalar>(m: usize, f: usize) -> SymFunc<T> {
    match necklace_counts(m).get(&f) {
        Some(c) => SymFunc::from_monomial_counts(m, c),
        None => SymFunc::zero(m, Basis::Monomial),
    }
}

/// Content generating function of `NFD_{m,r}`, necklaces of length `m`
/// whose frequency divides `r`.
pub fn nfd_gf<T: Scalar>(m: usize, r: usize) -> SymFunc<T> {
    let counts = necklace_counts(m);
    let mut total = MonomialCounts::new();
    for (&f, c) in counts.iter() {
        if r.is_multiple_of(f) {
            for (mu, &k) in c {
                *total.entry(mu.clone()).or_default() += k;
            }
        }
    }
    SymFunc::from_monomial_counts(m, &total)
}

/// Product of a list of symmetric functions, starting from `1`.
pub(crate) fn product<T: Scalar>(factors: impl IntoIterator<Item = SymFunc<T>>) -> SymFunc<T> {
    factors
        .into_iter()
        .fold(SymFunc::<T>::one().convert(Basis::PowerSum), |acc, f| acc.multiply(&f))
}
