use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;

use super::necklaces::nfd_gf;
use super::stembridge::bold_a_table;
use crate::characters::{divisors, moebius, rad, z_lambda};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::Partition;
use crate::words::{enumerate_necklaces, Composition, NecklaceFilter};
use crate::{Error, Result, Scalar};

/// One-dimensional character of `S_b` used on the top factor of the wreath
/// product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Trivial,
    Sign,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Trivial => "trivial",
            Kind::Sign => "sign",
        }
    }

    fn weight(self, b: usize, nu: &Partition) -> i64 {
        match self {
            Kind::Trivial => 1,
            Kind::Sign if (b - nu.len()).is_multiple_of(2) => 1,
            Kind::Sign => -1,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Kind::Trivial),
            "sign" => Ok(Kind::Sign),
            other => Err(Error::OutOfRange(format!("unknown kind {other:?}"))),
        }
    }
}

fn check_mobius_args(f: usize, d: usize, e: usize) -> Result<()> {
    if f == 0 || d == 0 || e == 0 {
        return Err(Error::Divisibility(format!("μ_{f}({d}, {e}): arguments must be positive")));
    }
    if !e.is_multiple_of(d) || !e.is_multiple_of(f) {
        return Err(Error::Divisibility(format!("μ_{f}({d}, {e}) needs d | e and f | e")));
    }
    Ok(())
}

/// `μ_f(d, e) = Σ_{lcm(f,d) | g | e} μ(g/f)`.
pub fn mobius_f_divisor_sum(f: usize, d: usize, e: usize) -> Result<i64> {
    check_mobius_args(f, d, e)?;
    let l = f.lcm(&d);
    Ok(divisors(e).into_iter().filter(|g| g % l == 0).map(|g| moebius(g / f)).sum())
}

/// Closed form of `μ_f(d, e)` through radicals.
pub fn mobius_f_closed(f: usize, d: usize, e: usize) -> Result<i64> {
    check_mobius_args(f, d, e)?;
    let q = f.lcm(&d) / f;
    if rad(e / f) == q && rad(q) == q {
        Ok(moebius(q))
    } else {
        Ok(0)
    }
}

/// `μ_f(d, e)`, computed both ways; a disagreement is an error.
pub fn mobius_f(f: usize, d: usize, e: usize) -> Result<i64> {
    let sum = mobius_f_divisor_sum(f, d, e)?;
    let closed = mobius_f_closed(f, d, e)?;
    if sum != closed {
        return Err(Error::NonIntegral(format!(
            "μ_{f}({d}, {e}): divisor sum {sum} but closed form {closed}"
        )));
    }
    Ok(sum)
}

fn check_schocker(a: usize, b: usize, r: usize) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("a and b must be positive".into()));
    }
    if r == 0 || r > a {
        return Err(Error::OutOfRange(format!("r = {r} outside 1..={a}")));
    }
    Ok(())
}

/// Schur expansion of the characteristic of `χ^{r,kind}` induced from
/// `C_a ≀ S_b` to `S_{ab}`, from bold-maj counts on standard tableaux.
pub fn schocker<T: Scalar>(a: usize, b: usize, r: usize, kind: Kind) -> Result<SymFunc<T>> {
    check_schocker(a, b, r)?;
    let n = a * b;
    let mut coeffs: BTreeMap<Partition, T> = BTreeMap::new();
    for nu in Partition::all(b) {
        let weight = T::ratio(kind.weight(b, &nu), z_lambda(&nu) as i64);
        let blocks: Vec<usize> = nu.parts().iter().map(|&v| a * v).collect();
        let table = bold_a_table(&blocks)?;
        let divisor_lists: Vec<Vec<usize>> = nu.parts().iter().map(|&v| divisors(r * v)).collect();
        for tau in divisor_lists.iter().multi_cartesian_product() {
            let mut mu = 1;
            for (&v, &&t) in nu.parts().iter().zip(&tau) {
                mu *= mobius_f(t, v, r * v)?;
                if mu == 0 {
                    break;
                }
            }
            if mu == 0 {
                continue;
            }
            let tau: Vec<usize> = tau.into_iter().copied().collect();
            let w = weight.clone() * T::from_i64(mu);
            for ((lam, t), &count) in &table {
                if t.entries() == tau.as_slice() {
                    let slot = coeffs.entry(lam.clone()).or_insert_with(T::zero);
                    *slot = slot.clone() + w.clone() * T::from_i64(count as i64);
                }
            }
        }
    }
    let f = SymFunc::from_terms(n, Basis::Schur, coeffs);
    f.schur_multiplicities()?;
    Ok(f)
}

/// `h_b[NFD_{a,r}]` (trivial) or `e_b[NFD_{a,r}]` (sign), in the Schur basis.
pub fn schocker_by_plethysm<T: Scalar>(a: usize, b: usize, r: usize, kind: Kind) -> Result<SymFunc<T>> {
    check_schocker(a, b, r)?;
    let outer = match kind {
        Kind::Trivial => SymFunc::h(b),
        Kind::Sign => SymFunc::e(b),
    };
    Ok(outer.plethysm(&nfd_gf(a, r)).to_schur())
}

/// Content generating function of the size-`b` multisets (trivial) or sets
/// (sign) of necklaces in `NFD_{a,r}` over `ab` letters, in the monomial
/// basis.
pub fn schocker_by_necklace_multisets<T: Scalar>(a: usize, b: usize, r: usize, kind: Kind) -> Result<SymFunc<T>> {
    check_schocker(a, b, r)?;
    let n = a * b;
    let contents: Vec<Vec<usize>> = enumerate_necklaces(a, n, NecklaceFilter::FreqDiv(r))
        .iter()
        .map(|neck| {
            let mut c = neck.content().parts().to_vec();
            c.resize(n, 0);
            c
        })
        .collect();
    let combine = |pick: Vec<&Vec<usize>>| {
        let mut total = vec![0usize; n];
        for c in pick {
            for (t, x) in total.iter_mut().zip(c) {
                *t += x;
            }
        }
        Composition::new(total)
    };
    let objects: Vec<Composition> = match kind {
        Kind::Trivial => contents.iter().combinations_with_replacement(b).map(combine).collect(),
        Kind::Sign => contents.iter().combinations(b).map(combine).collect(),
    };
    SymFunc::from_content_multiset(&objects, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn s(parts: &[usize]) -> SymFunc<Q> {
        SymFunc::schur(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius_f(1, 1, 1).unwrap(), 1);
        assert_eq!(mobius_f(1, 2, 2).unwrap(), -1);
        assert_eq!(mobius_f(2, 2, 4).unwrap(), 0);
        assert!(matches!(mobius_f(3, 1, 4), Err(Error::Divisibility(_))));
        assert!(matches!(mobius_f(1, 3, 4), Err(Error::Divisibility(_))));
    }

    #[test]
    fn mobius_paths_agree() {
        for e in 1..=36 {
            for d in divisors(e) {
                for f in divisors(e) {
                    assert_eq!(mobius_f_divisor_sum(f, d, e).unwrap(), mobius_f_closed(f, d, e).unwrap());
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(schocker::<Q>(2, 2, 1, Kind::Trivial).unwrap(), s(&[2, 2]) + s(&[1, 1, 1, 1]));
        assert_eq!(schocker::<Q>(2, 2, 1, Kind::Sign).unwrap(), s(&[2, 1, 1]));
        for b in 1..=5 {
            assert_eq!(schocker::<Q>(1, b, 1, Kind::Trivial).unwrap(), s(&[b]));
        }
        assert!(schocker::<Q>(2, 2, 3, Kind::Trivial).is_err());
    }

    #[test]
    fn three_routes_agree() {
        for (a, b) in [(2, 2), (3, 2), (2, 3), (1, 3), (3, 1)] {
            for r in 1..=a {
                for kind in [Kind::Trivial, Kind::Sign] {
                    let f = schocker::<Q>(a, b, r, kind).unwrap();
                    assert_eq!(f, schocker_by_plethysm(a, b, r, kind).unwrap(), "{a} {b} {r} {kind}");
                    let direct = schocker_by_necklace_multisets::<Q>(a, b, r, kind).unwrap();
                    assert!(f.value_eq(&direct), "{a} {b} {r} {kind}");
                }
            }
        }
    }

    #[test]
    fn kind_parses() {
        assert_eq!("sign".parse::<Kind>().unwrap(), Kind::Sign);
        assert!("other".parse::<Kind>().is_err());
    }
}
