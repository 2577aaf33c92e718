use std::collections::HashMap;

use super::{Basis, SymFunc};
use crate::tableaux::Partition;
use crate::{Error, Result, Scalar};

/// A polynomial in finitely many commuting variables, keyed by exponent
/// vector.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly<T> {
    nvars: usize,
    terms: HashMap<Vec<u32>, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut f = MPoly::zero(nvars);
        f.add_term(vec![0; nvars], T::one());
        f
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: T) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(T::zero);
        *slot = slot.clone() + c;
    }

    pub fn add_assign(&mut self, other: &MPoly<T>) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &MPoly<T>) -> MPoly<T> {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiplies by the monomial `x^exponents`.
    pub fn shift(&self, exponents: &[u32]) -> MPoly<T> {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exponents).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn coeff(&self, exponents: &[u32]) -> T {
        self.terms.get(exponents).cloned().unwrap_or_else(T::zero)
    }

    /// Reads off the monomial-basis expansion from the coefficients of
    /// partition-shaped exponent vectors.
    pub fn to_symfunc(&self, degree: usize) -> SymFunc<T> {
        let terms = Partition::all(degree)
            .into_iter()
            .filter(|mu| mu.len() <= self.nvars)
            .map(|mu| {
                let mut e = vec![0u32; self.nvars];
                for (i, &p) in mu.parts().iter().enumerate() {
                    e[i] = p as u32;
                }
                let c = self.coeff(&e);
                (mu, c)
            });
        SymFunc::from_terms(degree, Basis::Monomial, terms)
    }

    /// The monomial expansion `Σ c_μ m_μ(x_1, …, x_nvars)`.
    pub fn from_symfunc(f: &SymFunc<T>, nvars: usize) -> Self {
        let m = f.convert(Basis::Monomial);
        let mut out = MPoly::zero(nvars);
        for (mu, c) in m.coeffs() {
            if mu.len() > nvars {
                continue;
            }
            let mut base = vec![0u32; nvars];
            for (i, &p) in mu.parts().iter().enumerate() {
                base[i] = p as u32;
            }
            for e in distinct_permutations(&base) {
                out.add_term(e, c.clone());
            }
        }
        out
    }
}

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// `f[g]` by literal substitution: the monomials of `g` in `nvars`
/// variables become the alphabet `y` (with multiplicity), `f` is expanded
/// in elementary symmetric functions of `y`, and the result is read off in
/// the monomial basis. Needs `g` to have nonnegative integer monomial
/// coefficients and `nvars ≥ deg f · deg g` for an exact answer.
pub fn plethysm_by_substitution<T: Scalar>(f: &SymFunc<T>, g: &SymFunc<T>, nvars: usize) -> Result<SymFunc<T>> {
    let k = f.degree();
    let gm = MPoly::from_symfunc(g, nvars);
    // e_0(y), …, e_k(y)
    let mut elem: Vec<MPoly<T>> = vec![MPoly::zero(nvars); k + 1];
    elem[0] = MPoly::one(nvars);
    for (mono, c) in &gm.terms {
        let reps = c
            .to_i64_exact()
            .filter(|&v| v >= 0)
            .ok_or_else(|| Error::NonIntegral(format!("monomial coefficient {c} of the inner function")))?;
        for _ in 0..reps {
            for j in (1..=k).rev() {
                let add = elem[j - 1].shift(mono);
                elem[j].add_assign(&add);
            }
        }
    }
    let fe = f.convert(Basis::Elementary);
    let mut result = MPoly::zero(nvars);
    for (lam, c) in fe.coeffs() {
        let mut term = MPoly::one(nvars);
        for &part in lam.parts() {
            term = term.mul(&elem[part]);
        }
        for (e, v) in term.terms {
            result.add_term(e, v * c.clone());
        }
    }
    Ok(result.to_symfunc(k * g.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_round_trip() {
        let f = SymFunc::<Q>::schur(p(&[2, 1]));
        let poly = MPoly::from_symfunc(&f, 3);
        assert!(poly.to_symfunc(3).value_eq(&f));
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
    }

    #[test]
    fn substitution_examples() {
        let p6 = plethysm_by_substitution(&SymFunc::<Q>::p(2), &SymFunc::p(3), 6).unwrap();
        assert!(p6.value_eq(&SymFunc::p(6)));
        let h2h2 = plethysm_by_substitution(&SymFunc::<Q>::h(2), &SymFunc::h(2), 4).unwrap();
        let expected = SymFunc::<Q>::schur(p(&[4])) + SymFunc::schur(p(&[2, 2]));
        assert!(h2h2.value_eq(&expected));
        assert!(plethysm_by_substitution(&SymFunc::<Q>::h(2), &SymFunc::p(2).scale(&Q::new(-1, 1)), 4).is_err());
    }
}
