//! Cyclic sieving verification for rotation-closed sets of words.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::characters::{eval_at_root, IntPolyModQn, RootValue};
use crate::words::{
    enumerate_words_by_content, flex, maj_n, period_unchecked, rotate, Composition, Letter, Word,
};
use crate::{Error, Result};

/// Root of unity at which a statistic's generating function and the fixed
/// point count disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspWitness {
    pub r: usize,
    pub fixed_points: i64,
    pub value: RootValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspReport {
    pub holds: bool,
    pub order: usize,
    pub witness: Option<CspWitness>,
    /// Orbit size ↦ number of orbits of that size.
    pub orbit_profile: BTreeMap<usize, usize>,
    /// Whether checking every `f(ω^r)` separately reached the same verdict
    /// as the polynomial congruence.
    pub evaluation_agrees: bool,
}

fn orbit_sum(n: usize, size: usize) -> IntPolyModQn {
    let mut f = IntPolyModQn::zero(n);
    let step = n / size;
    for i in 0..size {
        f.add_term((i * step) as i64, 1);
    }
    f
}

fn polynomial_from_profile(n: usize, profile: &BTreeMap<usize, usize>) -> IntPolyModQn {
    let mut f = IntPolyModQn::zero(n);
    for (&size, &count) in profile {
        let step = n / size;
        for i in 0..size {
            f.add_term((i * step) as i64, count as i64);
        }
    }
    f
}

/// Orbit sizes of `words` under rotation, after checking lengths and
/// rotation closure. Duplicates are ignored.
pub fn orbit_profile(words: &[Word], n: usize) -> Result<BTreeMap<usize, usize>> {
    let set: HashSet<&[Letter]> = words.iter().map(|w| w.letters()).collect();
    for w in &set {
        if w.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: w.len(),
            });
        }
        let next = rotate(w);
        if !set.contains(next.letters()) {
            return Err(Error::NotRotationClosed(next));
        }
    }
    let mut profile = BTreeMap::new();
    if n == 0 {
        if !set.is_empty() {
            profile.insert(1, 1);
        }
        return Ok(profile);
    }
    let mut per_period: BTreeMap<usize, usize> = BTreeMap::new();
    for w in &set {
        *per_period.entry(period_unchecked(w)).or_default() += 1;
    }
    for (p, count) in per_period {
        profile.insert(p, count / p);
    }
    Ok(profile)
}

/// `Σ_orbits Σ_{i<s} q^{i·n/s}`; its value at `ω_n^r` is the number of
/// words fixed by `σ_n^r`.
pub fn orbit_polynomial(words: &[Word], n: usize) -> Result<IntPolyModQn> {
    let profile = orbit_profile(words, n)?;
    let mut f = IntPolyModQn::zero(n.max(1));
    for (&size, &count) in &profile {
        for _ in 0..count {
            f = f.add(&orbit_sum(n.max(1), size));
        }
    }
    Ok(f)
}

fn fixed_points(profile: &BTreeMap<usize, usize>, r: usize) -> i64 {
    profile
        .iter()
        .filter(|(&size, _)| r.is_multiple_of(size))
        .map(|(&size, &count)| (size * count) as i64)
        .sum()
}

fn report(n: usize, stat_poly: &IntPolyModQn, profile: BTreeMap<usize, usize>) -> CspReport {
    let orbit_poly = polynomial_from_profile(n, &profile);
    let congruent = *stat_poly == orbit_poly;
    let mut witness = None;
    for r in 1..=n {
        let value = eval_at_root(stat_poly, r as i64);
        let fixed = fixed_points(&profile, r);
        if value != RootValue::Integer(fixed) {
            witness = Some(CspWitness {
                r,
                fixed_points: fixed,
                value,
            });
            break;
        }
    }
    CspReport {
        holds: congruent,
        order: n,
        evaluation_agrees: congruent == witness.is_none(),
        witness: if congruent { None } else { witness },
        orbit_profile: profile,
    }
}

/// Checks whether `(words, C_n, q^stat)` exhibits the cyclic sieving
/// phenomenon. Statistic values are read modulo `n`.
pub fn verify_csp<F>(words: &[Word], n: usize, stat: F) -> Result<CspReport>
where
    F: Fn(&[Letter]) -> usize,
{
    let profile = orbit_profile(words, n)?;
    let modulus = n.max(1);
    let mut f = IntPolyModQn::zero(modulus);
    let distinct: HashSet<&[Letter]> = words.iter().map(|w| w.letters()).collect();
    for w in distinct {
        f.add_term((stat(w) % modulus) as i64, 1);
    }
    Ok(report(modulus, &f, profile))
}

/// [`verify_csp`] for the full class `W_α`, streaming the words instead of
/// materializing them.
pub fn verify_csp_for_content<F>(alpha: &Composition, stat: F) -> CspReport
where
    F: Fn(&[Letter]) -> usize,
{
    let n = alpha.size().max(1);
    let mut f = IntPolyModQn::zero(n);
    let mut per_period: BTreeMap<usize, usize> = BTreeMap::new();
    let mut it = enumerate_words_by_content(alpha);
    while let Some(w) = it.next_slice() {
        f.add_term((stat(w) % n) as i64, 1);
        let p = if w.is_empty() { 1 } else { period_unchecked(w) };
        *per_period.entry(p).or_default() += 1;
    }
    let profile = per_period.into_iter().map(|(p, c)| (p, c / p)).collect();
    report(n, &f, profile)
}

/// Outcome of comparing the `maj_n` and `flex` distributions on `W_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistributionReport {
    pub holds: bool,
    /// Value ↦ count for `maj_n`.
    pub maj_counts: BTreeMap<usize, u64>,
    /// Value ↦ count for `flex`.
    pub flex_counts: BTreeMap<usize, u64>,
    /// Values whose counts differ, with `(maj count, flex count)`.
    pub diff: BTreeMap<usize, (u64, u64)>,
}

/// Compares the value multisets of `maj_n` and `flex` on `W_α`.
pub fn verify_equidistribution(alpha: &Composition) -> EquidistributionReport {
    let mut maj_counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut flex_counts: BTreeMap<usize, u64> = BTreeMap::new();
    if alpha.size() > 0 {
        let mut it = enumerate_words_by_content(alpha);
        while let Some(w) = it.next_slice() {
            *maj_counts.entry(maj_n(w).expect("nonempty")).or_default() += 1;
            *flex_counts.entry(flex(w).expect("nonempty")).or_default() += 1;
        }
    }
    let keys: std::collections::BTreeSet<usize> = maj_counts.keys().chain(flex_counts.keys()).copied().collect();
    let diff: BTreeMap<usize, (u64, u64)> = keys
        .into_iter()
        .filter_map(|k| {
            let a = maj_counts.get(&k).copied().unwrap_or(0);
            let b = flex_counts.get(&k).copied().unwrap_or(0);
            (a != b).then_some((k, (a, b)))
        })
        .collect();
    EquidistributionReport {
        holds: diff.is_empty(),
        maj_counts,
        flex_counts,
        diff,
    }
}

/// Runs `check` on every weak composition of `n` with `n` parts, in
/// parallel, returning the failures.
pub fn failing_contents<F>(n: usize, check: F) -> Vec<Composition>
where
    F: Fn(&Composition) -> bool + Sync,
{
    Composition::all_weak(n, n.max(1))
        .into_par_iter()
        .filter(|alpha| !check(alpha))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_words, maj};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn orbit_polynomials() {
        assert_eq!(
            orbit_polynomial(&words(&["12", "21"]), 2).unwrap(),
            IntPolyModQn::from_coeffs(2, &[1, 1])
        );
        assert_eq!(orbit_polynomial(&words(&["11"]), 2).unwrap(), IntPolyModQn::from_coeffs(2, &[1]));
        assert_eq!(
            orbit_polynomial(&words(&["112", "121", "211"]), 3).unwrap(),
            IntPolyModQn::from_coeffs(3, &[1, 1, 1])
        );
        let err = orbit_polynomial(&words(&["112", "121"]), 3).unwrap_err();
        assert_eq!(err, Error::NotRotationClosed(w("211")));
        assert!(orbit_polynomial(&words(&["12"]), 3).is_err());
    }

    #[test]
    fn csp_examples() {
        let w11 = words(&["12", "21"]);
        assert!(verify_csp(&w11, 2, maj).unwrap().holds);
        let bad = verify_csp(&w11, 2, |_| 0).unwrap();
        assert!(!bad.holds);
        assert!(bad.evaluation_agrees);
        let witness = bad.witness.unwrap();
        assert_eq!(witness.r, 1);
        assert_eq!(witness.fixed_points, 0);
        assert_eq!(witness.value, RootValue::Integer(2));
    }

    #[test]
    fn identity_power_counts_everything() {
        let all: Vec<Word> = enumerate_words(4, 2).collect();
        let f = orbit_polynomial(&all, 4).unwrap();
        assert_eq!(eval_at_root(&f, 4), RootValue::Integer(16));
    }

    #[test]
    fn content_classes_small() {
        for n in 1..=5 {
            assert!(failing_contents(n, |a| verify_csp_for_content(a, maj).holds).is_empty());
            assert!(failing_contents(n, |a| verify_equidistribution(a).holds).is_empty());
        }
    }

    #[test]
    fn equidistribution_examples() {
        let r = verify_equidistribution(&Composition::new(vec![1, 1]));
        assert!(r.holds);
        assert_eq!(r.maj_counts, [(1, 1), (2, 1)].into_iter().collect());
        assert!(verify_equidistribution(&Composition::new(vec![5])).holds);
    }
}
