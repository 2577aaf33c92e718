use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_integer::Integer;

use super::kw::kw_series;
use super::schocker::{schocker, Kind};
use super::stembridge::{bold_a_table, stembridge_coefficients};
use crate::tableaux::{a_coeff, recording_tableau, Partition, PartitionTuple, Tableau};
use crate::words::{content, enumerate_words, maj_ab, residue_in_range, Composition, Letter, MajTuple, Word};
use crate::{Result, Q};

/// Outcome of a family of exact identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// `C(m, 2) − r` reduced into `[m]`.
fn omega_index(m: usize, r: usize) -> usize {
    let s = (m * (m - 1) / 2) as i64 - r as i64;
    residue_in_range(s.rem_euclid(m as i64) as usize, m)
}

/// `ω(kw_series(n)(r)) = kw_series(n)(s)` with `s ≡ C(n,2) − r`.
pub fn omega_kw(n: usize) -> Result<CheckReport> {
    let series = kw_series::<Q>(n)?;
    let mut report = CheckReport::default();
    for (&r, f) in &series {
        let s = omega_index(n, r);
        report.record(f.omega() == series[&s], || format!("ω on kw_series({n}) entry {r} is not entry {s}"));
    }
    Ok(report)
}

/// `ω` on `schocker(a, b, r, ·)`: swaps the kinds for odd `a`, sends `r` to
/// `C(a,2) − r` within each kind for even `a`.
pub fn omega_schocker(a: usize, b: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for r in 1..=a {
        let triv = schocker::<Q>(a, b, r, Kind::Trivial)?;
        if a.is_odd() {
            let sign = schocker::<Q>(a, b, r, Kind::Sign)?;
            report.record(triv.omega() == sign, || format!("ω(trivial) ≠ sign for a={a} b={b} r={r}"));
        } else {
            let s = omega_index(a, r);
            for kind in [Kind::Trivial, Kind::Sign] {
                let f = schocker::<Q>(a, b, r, kind)?;
                let g = schocker::<Q>(a, b, s, kind)?;
                report.record(f.omega() == g, || format!("ω({kind}, r={r}) ≠ ({kind}, r={s}) for a={a} b={b}"));
            }
        }
    }
    Ok(report)
}

/// `a_{λ,r} = a_{λ,gcd(n,r)}` for all `λ ⊢ n`, `r ∈ [n]`.
pub fn symmetry_gcd_kw(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for lam in Partition::all(n) {
        for r in 1..=n {
            let g = n.gcd(&r);
            let (x, y) = (a_coeff(&lam, r, n)?, a_coeff(&lam, g, n)?);
            report.record(x == y, || format!("a_{{{lam},{r}}} = {x} but a_{{{lam},{g}}} = {y}"));
        }
    }
    Ok(report)
}

/// `a^ν_{λ,r} = a^ν_{λ,gcd(ℓ,r)}` for all `λ ⊢ |ν|`, `r ∈ [ℓ]`.
pub fn symmetry_gcd_stembridge(nu: &Partition) -> Result<CheckReport> {
    let coeffs = stembridge_coefficients(nu.parts())?;
    let ell = nu.parts().iter().fold(1, |acc: usize, &p| acc.lcm(&p));
    let mut report = CheckReport::default();
    for (&r, row) in &coeffs {
        let g = ell.gcd(&r);
        for lam in Partition::all(nu.size()) {
            let x = row.get(&lam).copied().unwrap_or(0);
            let y = coeffs[&g].get(&lam).copied().unwrap_or(0);
            report.record(x == y, || format!("ν={nu}: a_{{{lam},{r}}} = {x} but a_{{{lam},{g}}} = {y}"));
        }
    }
    Ok(report)
}

/// `𝐚^ν_{λ,τ} = 𝐚^{π·ν}_{λ,π·τ}` for every reordering `π` of the parts of
/// `ν`.
pub fn symmetry_bold_a(nu: &Partition) -> Result<CheckReport> {
    let base = bold_a_table(nu.parts())?;
    let k = nu.len();
    let mut report = CheckReport::default();
    for pi in (0..k).permutations(k) {
        let permuted_nu: Vec<usize> = pi.iter().map(|&i| nu.parts()[i]).collect();
        let table = bold_a_table(&permuted_nu)?;
        let moved: HashMap<(Partition, MajTuple), u64> = base
            .iter()
            .map(|((lam, tau), &c)| ((lam.clone(), MajTuple(pi.iter().map(|&i| tau.entries()[i]).collect())), c))
            .collect();
        report.record(moved == table, || format!("bold-a tables of {nu} and {permuted_nu:?} differ"));
    }
    Ok(report)
}

/// Two words with the same recording tableau on which a statistic differs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberWitness {
    pub first: Word,
    pub second: Word,
    pub first_value: PartitionTuple,
    pub second_value: PartitionTuple,
    pub recording: Tableau,
}

/// Whether a statistic on `W_{ab}` (alphabet `{1, …, ab}`) is
/// equidistributed with `maj_a^b` on each content class, and whether it is
/// constant on each fiber of the recording tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MashReport {
    pub a: usize,
    pub b: usize,
    pub equidistributed: bool,
    pub content_witness: Option<Composition>,
    pub fiber_constant: bool,
    pub fiber_witness: Option<FiberWitness>,
}

impl MashReport {
    pub fn passed(&self) -> bool {
        self.equidistributed && self.fiber_constant
    }
}

/// Checks both properties over all of `W_{ab}`.
///
/// Words are scanned as permutations of `[ab]` first, then the remaining
/// words, each part in lexicographic order. A fiber witness is first sought
/// among pairs `(v, w)` where `w` is `v` with its length-`a` blocks sorted;
/// failing that, the first conflict with an earlier word of the same fiber
/// is reported.
pub fn check_mash_candidate<F>(stat: F, a: usize, b: usize) -> Result<MashReport>
where
    F: Fn(&[Letter]) -> Result<PartitionTuple>,
{
    let n = a * b;
    let mut per_content: BTreeMap<Composition, HashMap<PartitionTuple, i64>> = BTreeMap::new();
    let mut values: HashMap<Vec<Letter>, (PartitionTuple, Tableau)> = HashMap::new();
    for w in enumerate_words(n, n) {
        let value = stat(w.letters())?;
        let reference = maj_ab(w.letters(), a, b)?;
        let counts = per_content.entry(content(w.letters())).or_default();
        *counts.entry(value.clone()).or_default() += 1;
        *counts.entry(reference).or_default() -= 1;
        values.insert(w.into_letters(), (value, Tableau::empty()));
    }
    for (w, (_, q)) in values.iter_mut() {
        *q = recording_tableau(w);
    }
    let witness_for = |v: &[Letter], w: &[Letter]| -> Option<FiberWitness> {
        let (fv, qv) = &values[v];
        let (fw, qw) = &values[w];
        (qv == qw && fv != fw).then(|| FiberWitness {
            first: Word::from_vec_unchecked(v.to_vec()),
            second: Word::from_vec_unchecked(w.to_vec()),
            first_value: fv.clone(),
            second_value: fw.clone(),
            recording: qv.clone(),
        })
    };
    let scan = || {
        let perms = (1..=n as Letter).permutations(n).map(Word::from_vec_unchecked);
        let rest = enumerate_words(n, n).filter(|w| !content(w.letters()).parts().iter().all(|&c| c == 1));
        perms.chain(rest)
    };
    let by_block_sort = scan().find_map(|v| {
        let mut blocks: Vec<&[Letter]> = v.letters().chunks(a).collect();
        blocks.sort();
        let w = blocks.concat();
        witness_for(v.letters(), &w)
    });
    let fiber_witness = by_block_sort.or_else(|| {
        let mut first_in_fiber: HashMap<&Tableau, Vec<Letter>> = HashMap::new();
        for w in scan() {
            let (_, q) = &values[w.letters()];
            match first_in_fiber.get(q) {
                Some(v) => {
                    if let Some(found) = witness_for(v, w.letters()) {
                        return Some(found);
                    }
                }
                None => {
                    first_in_fiber.insert(q, w.into_letters());
                }
            }
        }
        None
    });
    let content_witness = per_content
        .into_iter()
        .find(|(_, counts)| counts.values().any(|&c| c != 0))
        .map(|(alpha, _)| alpha);
    Ok(MashReport {
        a,
        b,
        equidistributed: content_witness.is_none(),
        content_witness,
        fiber_constant: fiber_witness.is_none(),
        fiber_witness,
    })
}
