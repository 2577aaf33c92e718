//! Verification suites, one per family of identities, with size caps.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{eval_at_root, induced_multiplicity, mn_character, power_cycle_type, RootValue};
use crate::csp::{failing_contents, verify_csp, verify_csp_for_content};
use crate::liemodules::{
    check_mash_candidate, gessel_reutenauer, graded_frobenius, higher_lie, kw_routes, kw_series, mobius_f_closed,
    mobius_f_divisor_sum, ofd_series_by_frequencies, ofd_series_by_maj_tuples, ofd_series_by_orbits, omega_kw,
    omega_schocker, regular_character, schocker, schocker_by_necklace_multisets, schocker_by_plethysm, stembridge_series,
    symmetry_bold_a, symmetry_gcd_kw, symmetry_gcd_stembridge, CheckReport, Kind,
};
use crate::characters::{divisors, CycleType, IntPolyModQn};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{syt_descent_sets, Partition};
use crate::words::{enumerate_necklaces, flex, maj, maj_ab, NecklaceFilter, Word};
use crate::{Error, Result, Q};

/// A family of identities checked together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// KW series against the character oracle.
    Kw,
    /// Necklace, flex-fiber and maj-fiber content GFs against the KW series.
    Triple,
    /// Cyclic sieving for `maj` on content classes and `flex` on random
    /// rotation-closed sets.
    Csp,
    /// `maj` generating functions of standard tableaux at roots of unity.
    Roots,
    /// Stembridge series against the oracle and the orbit routes.
    Stembridge,
    /// Schocker formula against plethysm and necklace multisets.
    Schocker,
    /// Graded Frobenius series three ways.
    Frobenius,
    /// Higher Lie modules against the descent-class expansion.
    Lie,
    /// gcd, reordering and `ω` symmetries.
    Symmetry,
    /// The mash-property checker on known statistics.
    Mash,
    /// Plethysm, basis changes and `μ_f`.
    Kernel,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Kw,
        Suite::Triple,
        Suite::Csp,
        Suite::Roots,
        Suite::Stembridge,
        Suite::Schocker,
        Suite::Frobenius,
        Suite::Lie,
        Suite::Symmetry,
        Suite::Mash,
        Suite::Kernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kw => "kw",
            Suite::Triple => "triple",
            Suite::Csp => "csp",
            Suite::Roots => "roots",
            Suite::Stembridge => "stembridge",
            Suite::Schocker => "schocker",
            Suite::Frobenius => "frobenius",
            Suite::Lie => "lie",
            Suite::Symmetry => "symmetry",
            Suite::Mash => "mash",
            Suite::Kernel => "kernel",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

/// Upper bounds on the sizes a suite visits. Each suite also has its own
/// ceiling; the smaller of the two is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` (degree) visited.
    pub max_n: usize,
    /// Largest `ab` for wreath-product suites.
    pub max_ab: usize,
    /// Random rotation-closed sets per `n` in the flex sieving check.
    pub random_sets: usize,
    pub seed: u64,
}

pub const MAX_N: usize = 10;
pub const MAX_AB: usize = 8;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 8,
            max_ab: 8,
            random_sets: 200,
            seed: 0x5eed,
        }
    }
}

impl Caps {
    pub fn new(max_n: usize, max_ab: usize) -> Result<Self> {
        if max_n > MAX_N || max_ab > MAX_AB {
            return Err(Error::OutOfRange(format!(
                "caps must satisfy max_n ≤ {MAX_N} and max_ab ≤ {MAX_AB}"
            )));
        }
        Ok(Caps {
            max_n,
            max_ab,
            ..Caps::default()
        })
    }

    fn n(&self, ceiling: usize) -> usize {
        self.max_n.min(ceiling)
    }

    fn ab_ok(&self, a: usize, b: usize) -> bool {
        a * b <= self.max_ab.min(self.max_n)
    }
}

pub fn run(suite: Suite, caps: &Caps) -> Result<CheckReport> {
    match suite {
        Suite::Kw => kw(caps),
        Suite::Triple => triple(caps),
        Suite::Csp => csp(caps),
        Suite::Roots => roots(caps),
        Suite::Stembridge => stembridge(caps),
        Suite::Schocker => schocker_suite(caps),
        Suite::Frobenius => frobenius(caps),
        Suite::Lie => lie(caps),
        Suite::Symmetry => symmetry(caps),
        Suite::Mash => mash(caps),
        Suite::Kernel => kernel(caps),
    }
}

pub fn run_all(caps: &Caps) -> Result<Vec<(Suite, CheckReport)>> {
    Suite::ALL.into_iter().map(|s| Ok((s, run(s, caps)?))).collect()
}

fn kw(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(8) {
        let series = kw_series::<Q>(n)?;
        let cycle = CycleType::cycle(n);
        for (&r, f) in &series {
            for lam in Partition::all(n) {
                let oracle = induced_multiplicity(&lam, &cycle, r)?;
                let c = f.coeff(&lam);
                report.record(c == Q::from_integer(oracle as i64), || {
                    format!("n={n} r={r}: coefficient of s{lam} is {c}, oracle {oracle}")
                });
            }
        }
    }
    Ok(report)
}

fn triple(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(8) {
        let series = kw_series::<Q>(n)?;
        let routes = kw_routes::<Q>(n)?;
        for (&r, f) in &series {
            report.record(f.value_eq(&routes.necklaces[&r]), || format!("n={n} r={r}: NFD differs"));
            report.record(f.value_eq(&routes.flex_fibers[&r]), || format!("n={n} r={r}: flex fiber differs"));
            report.record(f.value_eq(&routes.maj_fibers[&r]), || format!("n={n} r={r}: maj fiber differs"));
        }
    }
    Ok(report)
}

/// A random union of rotation classes of length-`n` words.
fn random_rotation_closed(rng: &mut ChaCha8Rng, n: usize) -> Vec<Word> {
    let m = rng.gen_range(1..=n);
    let necklaces = enumerate_necklaces(n, m, NecklaceFilter::All);
    let keep = rng.gen_range(0.05..0.95);
    let mut chosen: Vec<Word> = necklaces
        .iter()
        .filter(|_| rng.gen_bool(keep))
        .flat_map(|neck| neck.words())
        .collect();
    if chosen.is_empty() {
        chosen = necklaces[rng.gen_range(0..necklaces.len())].words();
    }
    chosen
}

fn csp(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(8) {
        let failures = failing_contents(n, |alpha| {
            let r = verify_csp_for_content(alpha, maj);
            r.holds && r.evaluation_agrees
        });
        report.checks += crate::words::Composition::all_weak(n, n).len();
        report.failures.extend(failures.iter().map(|a| format!("maj sieving fails on W_{a:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(caps.seed);
    for n in 1..=caps.n(6) {
        for _ in 0..caps.random_sets {
            let words = random_rotation_closed(&mut rng, n);
            let r = verify_csp(&words, n, |w| flex(w).expect("nonempty"))?;
            report.record(r.holds && r.evaluation_agrees, || {
                format!("flex sieving fails for n={n} on a set of {} words: {:?}", words.len(), r.witness)
            });
        }
    }
    Ok(report)
}

fn roots(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(8) {
        let cycle = Partition::new(vec![n])?;
        for mu in Partition::all(n) {
            let mut f = IntPolyModQn::zero(n);
            for d in syt_descent_sets(&mu) {
                f.add_term(d.iter().sum::<usize>() as i64, 1);
            }
            for r in 1..=n {
                let chi = mn_character(&mu, &power_cycle_type(&cycle, r))?;
                let value = eval_at_root(&f, r as i64);
                report.record(value == RootValue::Integer(chi), || {
                    format!("SYT({mu}) maj at ω^{r} (n={n}) is {value:?}, character {chi}")
                });
            }
        }
    }
    Ok(report)
}

fn stembridge(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(7) {
        for nu in Partition::all(n) {
            let cycle = CycleType::new(nu.clone());
            let series = stembridge_series::<Q>(&cycle)?;
            for (&r, f) in &series {
                for lam in Partition::all(n) {
                    let oracle = induced_multiplicity(&lam, &cycle, r)?;
                    let c = f.coeff(&lam);
                    report.record(c == Q::from_integer(oracle as i64), || {
                        format!("ν={nu} r={r}: coefficient of s{lam} is {c}, oracle {oracle}")
                    });
                }
            }
            let orbits = ofd_series_by_orbits::<Q>(nu.parts())?;
            let freqs = ofd_series_by_frequencies::<Q>(nu.parts())?;
            let tuples = ofd_series_by_maj_tuples::<Q>(nu.parts())?;
            for (r, f) in &series {
                report.record(f.value_eq(&orbits[r]), || format!("ν={nu} r={r}: orbit route differs"));
                report.record(f.value_eq(&freqs[r]), || format!("ν={nu} r={r}: frequency route differs"));
                report.record(f.value_eq(&tuples[r]), || format!("ν={nu} r={r}: maj-tuple route differs"));
            }
        }
    }
    Ok(report)
}

/// `Σ s_μ` over `μ ⊢ n` whose columns all have even length.
pub fn even_column_sum(n: usize) -> SymFunc<Q> {
    SymFunc::from_int_terms(
        n,
        Basis::Schur,
        Partition::all(n)
            .into_iter()
            .filter(|mu| mu.conjugate().parts().iter().all(|c| c % 2 == 0))
            .map(|mu| (mu, 1)),
    )
}

fn schocker_suite(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for (a, b) in [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)] {
        if !caps.ab_ok(a, b) {
            continue;
        }
        for r in 1..=a {
            for kind in [Kind::Trivial, Kind::Sign] {
                let label = format!("a={a} b={b} r={r} {kind}");
                let f = match schocker::<Q>(a, b, r, kind) {
                    Ok(f) => f,
                    Err(e) => {
                        report.record(false, || format!("{label}: {e}"));
                        continue;
                    }
                };
                report.record(f.schur_multiplicities().is_ok(), || format!("{label}: coefficients not in ℕ"));
                let pleth = schocker_by_plethysm::<Q>(a, b, r, kind)?;
                report.record(f == pleth, || format!("{label}: plethysm oracle differs"));
                let direct = schocker_by_necklace_multisets::<Q>(a, b, r, kind)?;
                report.record(f.value_eq(&direct), || format!("{label}: necklace multisets differ"));
            }
        }
    }
    for b in 1..=4 {
        if !caps.ab_ok(2, b) {
            continue;
        }
        let f = schocker::<Q>(2, b, 1, Kind::Trivial)?;
        report.record(f == even_column_sum(2 * b), || format!("a=2 b={b} r=1 trivial is not the even-column sum"));
    }
    Ok(report)
}

fn frobenius(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for (a, b) in [(2, 2), (3, 2), (2, 3)] {
        if !caps.ab_ok(a, b) {
            continue;
        }
        let g = graded_frobenius::<Q>(a, b)?;
        report.record(g.agrees(), || format!("a={a} b={b}: ways differ at {:?}", g.first_disagreement()));
        report.record(g.total() == regular_character(a * b), || {
            format!("a={a} b={b}: specialization is not the regular character")
        });
    }
    Ok(report)
}

fn lie(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(6) {
        for lam in Partition::all(n) {
            let f = higher_lie::<Q>(&lam)?;
            let g = gessel_reutenauer::<Q>(&lam)?;
            report.record(f.value_eq(&g), || format!("L_{lam}: descent-class expansion differs"));
        }
    }
    if caps.max_n >= 3 {
        let expected = SymFunc::schur(Partition::new(vec![2, 1])?) + SymFunc::schur(Partition::new(vec![1, 1, 1])?);
        let f = higher_lie::<Q>(&Partition::new(vec![2, 1])?)?;
        report.record(f == expected, || format!("L_(2,1) = {f}"));
    }
    Ok(report)
}

fn symmetry(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=caps.n(8) {
        report.merge(symmetry_gcd_kw(n)?);
    }
    for n in 1..=caps.n(6) {
        for nu in Partition::all(n) {
            report.merge(symmetry_gcd_stembridge(&nu)?);
            if nu.len() <= 3 {
                report.merge(symmetry_bold_a(&nu)?);
            }
        }
    }
    for n in 1..=caps.n(7) {
        report.merge(omega_kw(n)?);
    }
    for a in 1..=caps.max_ab {
        for b in 1..=caps.max_ab / a {
            if caps.ab_ok(a, b) {
                report.merge(omega_schocker(a, b)?);
            }
        }
    }
    Ok(report)
}

fn mash(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    if caps.ab_ok(2, 2) {
        let m = check_mash_candidate(|w| maj_ab(w, 2, 2), 2, 2)?;
        report.record(m.equidistributed, || "maj_2^2 is not equidistributed with itself".into());
        let pair = m
            .fiber_witness
            .as_ref()
            .map(|w| (w.first.to_string(), w.second.to_string()));
        report.record(
            !m.fiber_constant && pair == Some(("2314".into(), "1423".into())),
            || format!("maj_2^2 fiber witness {pair:?}"),
        );
    }
    for n in 1..=caps.n(5) {
        for (a, b) in [(1, n), (n, 1)] {
            let m = check_mash_candidate(|w| maj_ab(w, a, b), a, b)?;
            report.record(m.passed(), || {
                format!("maj_{a}^{b} fails: content {:?}, fiber {:?}", m.content_witness, m.fiber_witness)
            });
        }
    }
    Ok(report)
}

fn kernel(caps: &Caps) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let p = |v: Vec<usize>| Partition::new(v).expect("partition");
    let pleth = SymFunc::<Q>::p(2).plethysm(&SymFunc::p(3));
    report.record(pleth == SymFunc::p(6), || format!("p_2[p_3] = {pleth}"));
    let hh = SymFunc::<Q>::h(2).plethysm(&SymFunc::h(2)).to_schur();
    report.record(hh == SymFunc::schur(p(vec![4])) + SymFunc::schur(p(vec![2, 2])), || format!("h_2[h_2] = {hh}"));
    let ee = SymFunc::<Q>::e(2).plethysm(&SymFunc::e(2)).to_schur();
    report.record(ee == SymFunc::schur(p(vec![2, 1, 1])), || format!("e_2[e_2] = {ee}"));
    let bases = [Basis::Monomial, Basis::Schur, Basis::PowerSum, Basis::Homogeneous, Basis::Elementary];
    for d in 0..=caps.n(8) {
        for lam in Partition::all(d) {
            for from in bases {
                let f = SymFunc::<Q>::basis_element(from, lam.clone());
                for to in bases {
                    let back = f.convert(to).convert(from);
                    report.record(back == f, || format!("{}{lam} via {} is {back}", from.symbol(), to.symbol()));
                }
            }
        }
    }
    for e in 1..=36 {
        for d in divisors(e) {
            for f in divisors(e) {
                let (x, y) = (mobius_f_divisor_sum(f, d, e)?, mobius_f_closed(f, d, e)?);
                report.record(x == y, || format!("μ_{f}({d},{e}): sum {x}, closed {y}"));
            }
        }
    }
    Ok(report)
}
