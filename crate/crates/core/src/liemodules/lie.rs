use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::necklaces::product;
use super::schocker::{schocker, Kind};
use crate::symfunc::SymFunc;
use crate::tableaux::Partition;
use crate::words::{Composition, Letter};
use crate::{Result, Scalar};

/// Characteristic of the higher Lie module `L_λ`, Schur basis.
pub fn higher_lie<T: Scalar>(lambda: &Partition) -> Result<SymFunc<T>> {
    let factors = lambda
        .multiplicities()
        .into_iter()
        .map(|(i, b)| schocker::<T>(i, b, 1, Kind::Trivial))
        .collect::<Result<Vec<_>>>()?;
    Ok(product(factors).to_schur())
}

/// Cycle type of a permutation of `{0, …, n-1}` in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::from_unsorted(parts)
}

/// `D ↦ #{σ of cycle type λ : Des(σ) = D}`.
pub fn descent_classes(lambda: &Partition) -> BTreeMap<BTreeSet<usize>, u64> {
    let n = lambda.size();
    let mut out = BTreeMap::new();
    for perm in (0..n).permutations(n) {
        if &cycle_type(&perm) == lambda {
            let d: BTreeSet<usize> = (1..n).filter(|&i| perm[i - 1] > perm[i]).collect();
            *out.entry(d).or_default() += 1;
        }
    }
    out
}

/// Calls `visit` on every word of length `n` over `{1, …, m}` that weakly
/// increases, strictly at each position in `descents`.
fn for_each_fundamental_word<F: FnMut(&[Letter])>(n: usize, m: usize, descents: &BTreeSet<usize>, visit: &mut F) {
    fn go<F: FnMut(&[Letter])>(w: &mut Vec<Letter>, n: usize, m: Letter, d: &BTreeSet<usize>, visit: &mut F) {
        if w.len() == n {
            visit(w);
            return;
        }
        let lo = match w.last() {
            None => 1,
            Some(&x) if d.contains(&w.len()) => x + 1,
            Some(&x) => x,
        };
        for x in lo..=m {
            w.push(x);
            go(w, n, m, d, visit);
            w.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, m as Letter, descents, visit);
}

/// `Σ_{σ of cycle type λ} F_{n, Des(σ)}` over `n` letters, monomial basis.
pub fn gessel_reutenauer<T: Scalar>(lambda: &Partition) -> Result<SymFunc<T>> {
    let n = lambda.size();
    let mut objects = Vec::new();
    for (d, count) in descent_classes(lambda) {
        for_each_fundamental_word(n, n, &d, &mut |w| {
            let mut c = vec![0usize; n];
            for &l in w {
                c[l as usize - 1] += 1;
            }
            for _ in 0..count {
                objects.push(Composition::new(c.clone()));
            }
        });
    }
    SymFunc::from_content_multiset(&objects, n, true)
}
