//! Homogeneous symmetric functions with exact coefficients.
//!
//! Conversions go through the Schur basis using the Kostka matrix
//! (`m`, `h`, `e`) and the character table (`p`). Products and plethysm are
//! computed in the power-sum basis.

mod content;
mod plethysm;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use content::{word_content_counts_by, word_content_gf, MonomialCounts};
pub use plethysm::{plethysm_by_substitution, MPoly};
pub use tables::{cache_dir, degree_tables, set_cache_dir, DegreeTables, CACHE_DIR_ENV};

use crate::tableaux::Partition;
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    PowerSum,
    Homogeneous,
    Elementary,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::PowerSum => "p",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
        }
    }
}

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// expansion in one basis. Zero coefficients are never stored, so derived
/// equality compares expansions in the same basis; use
/// [`SymFunc::value_eq`] across bases.
#[derive(Clone, PartialEq)]
pub struct SymFunc<T> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, T>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Sums the given terms. Every partition must have size `degree`.
    pub fn new(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, T)>) -> Result<Self> {
        let mut f = SymFunc::zero(degree, basis);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    found: p.size(),
                });
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    /// As [`SymFunc::new`]; panics if a partition has the wrong size.
    pub fn from_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, T)>) -> Self {
        SymFunc::new(degree, basis, terms).expect("term partitions must have size equal to the degree")
    }

    pub fn from_int_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        SymFunc::from_terms(degree, basis, terms.into_iter().map(|(p, c)| (p, T::from_i64(c))))
    }

    /// `b_λ` for the basis `b`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        SymFunc::from_terms(degree, basis, [(lambda, T::one())])
    }

    pub fn h(n: usize) -> Self {
        SymFunc::basis_element(Basis::Homogeneous, Partition::from_unsorted(vec![n]))
    }

    pub fn e(n: usize) -> Self {
        SymFunc::basis_element(Basis::Elementary, Partition::from_unsorted(vec![n]))
    }

    pub fn p(n: usize) -> Self {
        SymFunc::basis_element(Basis::PowerSum, Partition::from_unsorted(vec![n]))
    }

    pub fn schur(lambda: Partition) -> Self {
        SymFunc::basis_element(Basis::Schur, lambda)
    }

    /// The constant `1` in degree 0.
    pub fn one() -> Self {
        SymFunc::basis_element(Basis::Schur, Partition::empty())
    }

    fn add_term(&mut self, p: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, T> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> T {
        self.coeffs.get(p).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in decreasing lexicographic order of partitions.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter().rev()
    }

    pub fn scale(&self, c: &T) -> Self {
        SymFunc::from_terms(
            self.degree,
            self.basis,
            self.coeffs.iter().map(|(p, v)| (p.clone(), v.clone() * c.clone())),
        )
    }

    fn schur_coefficients(&self) -> Vec<T> {
        let t = degree_tables(self.degree);
        let k = t.partitions.len();
        let mut out = vec![T::zero(); k];
        for (p, c) in &self.coeffs {
            let j = t.idx(p);
            match self.basis {
                Basis::Schur => out[j] = out[j].clone() + c.clone(),
                Basis::Monomial => {
                    for (i, slot) in out.iter_mut().enumerate() {
                        let v = t.kostka_inverse[j][i];
                        if v != 0 {
                            *slot = slot.clone() + c.clone() * T::from_i64(v);
                        }
                    }
                }
                Basis::PowerSum => {
                    for (i, slot) in out.iter_mut().enumerate() {
                        let v = t.characters.values()[i][j];
                        if v != 0 {
                            *slot = slot.clone() + c.clone() * T::from_i64(v);
                        }
                    }
                }
                Basis::Homogeneous => {
                    for (i, slot) in out.iter_mut().enumerate() {
                        let v = t.kostka[i][j];
                        if v != 0 {
                            *slot = slot.clone() + c.clone() * T::from_i64(v);
                        }
                    }
                }
                Basis::Elementary => {
                    for i in 0..k {
                        let v = t.kostka[i][j];
                        if v != 0 {
                            let ic = t.conjugate[i];
                            out[ic] = out[ic].clone() + c.clone() * T::from_i64(v);
                        }
                    }
                }
            }
        }
        out
    }

    fn from_schur_coefficients(degree: usize, d: &[T], target: Basis) -> Self {
        let t = degree_tables(degree);
        let k = t.partitions.len();
        let nonzero: Vec<usize> = (0..k).filter(|&i| !d[i].is_zero()).collect();
        let coeff = |j: usize| -> T {
            let mut acc = T::zero();
            for &i in &nonzero {
                let v = match target {
                    Basis::Schur => i64::from(i == j),
                    Basis::Monomial => t.kostka[i][j],
                    Basis::PowerSum => t.characters.values()[i][j],
                    Basis::Homogeneous => t.kostka_inverse[j][i],
                    Basis::Elementary => t.kostka_inverse[j][t.conjugate[i]],
                };
                if v != 0 {
                    acc = acc + d[i].clone() * T::from_i64(v);
                }
            }
            if target == Basis::PowerSum {
                acc = acc * T::ratio(1, t.z[j]);
            }
            acc
        };
        SymFunc::from_terms(degree, target, (0..k).map(|j| (t.partitions[j].clone(), coeff(j))))
    }

    /// The same symmetric function expanded in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        SymFunc::from_schur_coefficients(self.degree, &self.schur_coefficients(), target)
    }

    pub fn to_schur(&self) -> Self {
        self.convert(Basis::Schur)
    }

    /// Equality as symmetric functions, regardless of basis.
    pub fn value_eq(&self, other: &SymFunc<T>) -> bool {
        if self.degree != other.degree {
            return self.is_zero() && other.is_zero();
        }
        self.schur_coefficients() == other.schur_coefficients()
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc<T>) -> Self {
        let a = self.convert(Basis::PowerSum);
        let b = other.convert(Basis::PowerSum);
        let mut out = SymFunc::zero(self.degree + other.degree, Basis::PowerSum);
        for (p, c) in &a.coeffs {
            for (q, d) in &b.coeffs {
                let mut parts = p.parts().to_vec();
                parts.extend_from_slice(q.parts());
                out.add_term(Partition::from_unsorted(parts), c.clone() * d.clone());
            }
        }
        out.convert(self.basis)
    }

    /// `p_k[self]`, in the power-sum basis.
    fn power_plethysm(&self, k: usize) -> Self {
        let g = self.convert(Basis::PowerSum);
        SymFunc::from_terms(
            self.degree * k,
            Basis::PowerSum,
            g.coeffs.iter().map(|(p, c)| {
                (
                    Partition::from_unsorted(p.parts().iter().map(|x| x * k).collect()),
                    c.clone(),
                )
            }),
        )
    }

    /// Plethysm `self[g]`, returned in the basis of `self`.
    pub fn plethysm(&self, g: &SymFunc<T>) -> Self {
        let f = self.convert(Basis::PowerSum);
        let degree = self.degree * g.degree;
        let mut powers: BTreeMap<usize, SymFunc<T>> = BTreeMap::new();
        let mut out = SymFunc::zero(degree, Basis::PowerSum);
        for (mu, c) in &f.coeffs {
            let mut term = SymFunc::<T>::one().convert(Basis::PowerSum);
            for &k in mu.parts() {
                let pk = powers.entry(k).or_insert_with(|| g.power_plethysm(k));
                term = term.multiply(pk);
            }
            for (p, v) in term.coeffs {
                out.add_term(p, v * c.clone());
            }
        }
        out.convert(self.basis)
    }

    /// The involution `ω`, returned in the basis of `self`.
    pub fn omega(&self) -> Self {
        let s = self.to_schur();
        SymFunc::from_terms(
            self.degree,
            Basis::Schur,
            s.coeffs.into_iter().map(|(p, c)| (p.conjugate(), c)),
        )
        .convert(self.basis)
    }

    /// Coefficients as integers; errors if any is not integral.
    pub fn integer_coeffs(&self) -> Result<BTreeMap<Partition, i64>> {
        self.coeffs
            .iter()
            .map(|(p, c)| {
                c.to_i64_exact()
                    .map(|v| (p.clone(), v))
                    .ok_or_else(|| Error::NonIntegral(format!("coefficient {c} of {}{p}", self.basis.symbol())))
            })
            .collect()
    }

    /// Schur coefficients, asserted to be nonnegative integers.
    pub fn schur_multiplicities(&self) -> Result<BTreeMap<Partition, u64>> {
        self.to_schur()
            .integer_coeffs()?
            .into_iter()
            .map(|(p, v)| {
                u64::try_from(v)
                    .map(|u| (p.clone(), u))
                    .map_err(|_| Error::NonIntegral(format!("negative Schur coefficient {v} at {p}")))
            })
            .collect()
    }
}

impl<T: Scalar> Add for SymFunc<T> {
    type Output = SymFunc<T>;

    /// Panics on a degree mismatch unless one side is zero.
    fn add(self, rhs: SymFunc<T>) -> SymFunc<T> {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        assert_eq!(self.degree, rhs.degree, "adding symmetric functions of different degrees");
        let mut out = self.clone();
        for (p, c) in rhs.convert(self.basis).coeffs {
            out.add_term(p, c);
        }
        out
    }
}

impl<T: Scalar> Neg for SymFunc<T> {
    type Output = SymFunc<T>;

    fn neg(self) -> SymFunc<T> {
        SymFunc {
            degree: self.degree,
            basis: self.basis,
            coeffs: self.coeffs.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl<T: Scalar> Sub for SymFunc<T> {
    type Output = SymFunc<T>;

    fn sub(self, rhs: SymFunc<T>) -> SymFunc<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for &SymFunc<T> {
    type Output = SymFunc<T>;

    fn mul(self, rhs: &SymFunc<T>) -> SymFunc<T> {
        self.multiply(rhs)
    }
}

impl<T: Scalar> fmt::Display for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        let terms: Vec<String> = self
            .terms_desc()
            .map(|(p, c)| {
                if c.is_one() {
                    format!("{sym}{p}")
                } else {
                    format!("{c}*{sym}{p}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<T: Scalar> fmt::Debug for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {self}", self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigQ, Q};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc<Q> {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn conversions() {
        let h2m = SymFunc::<Q>::h(2).convert(Basis::Monomial);
        assert_eq!(
            h2m,
            SymFunc::from_int_terms(2, Basis::Monomial, [(p(&[2]), 1), (p(&[1, 1]), 1)])
        );
        assert_eq!(SymFunc::<Q>::e(2).to_schur(), s(&[1, 1]));
        assert_eq!(SymFunc::<Q>::p(2).to_schur(), s(&[2]) - s(&[1, 1]));
        let p21 = SymFunc::<Q>::basis_element(Basis::PowerSum, p(&[2, 1])).to_schur();
        assert_eq!(p21, s(&[3]) - s(&[1, 1, 1]));
    }

    #[test]
    fn round_trips() {
        let bases = [Basis::Monomial, Basis::Schur, Basis::PowerSum, Basis::Homogeneous, Basis::Elementary];
        for n in 0..=6 {
            for lam in Partition::all(n) {
                for &b in &bases {
                    let f = SymFunc::<Q>::basis_element(b, lam.clone());
                    for &c in &bases {
                        assert_eq!(f.convert(c).convert(b), f, "{b:?} -> {c:?} on {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(SymFunc::<Q>::p(2).multiply(&SymFunc::p(1)), SymFunc::basis_element(Basis::PowerSum, p(&[2, 1])));
        assert_eq!(s(&[1]).multiply(&s(&[1])), s(&[2]) + s(&[1, 1]));
        assert_eq!(s(&[1, 1]).multiply(&s(&[1])), s(&[2, 1]) + s(&[1, 1, 1]));
        assert_eq!(&s(&[2]) * &SymFunc::one(), s(&[2]));
    }

    #[test]
    fn plethysms() {
        let p6 = SymFunc::<Q>::p(2).plethysm(&SymFunc::p(3));
        assert_eq!(p6, SymFunc::p(6));
        let h2h2 = SymFunc::<Q>::h(2).plethysm(&SymFunc::h(2)).to_schur();
        assert_eq!(h2h2, s(&[4]) + s(&[2, 2]));
        let e2e2 = SymFunc::<Q>::e(2).plethysm(&SymFunc::e(2)).to_schur();
        assert_eq!(e2e2, s(&[2, 1, 1]));
        for f in [SymFunc::<Q>::h(3), SymFunc::e(3), s(&[2, 1])] {
            assert!(f.plethysm(&SymFunc::p(1)).value_eq(&f));
        }
    }

    #[test]
    fn omega_involution() {
        assert_eq!(s(&[2, 1]).omega(), s(&[2, 1]));
        assert!(SymFunc::<Q>::h(3).omega().value_eq(&SymFunc::e(3)));
        let f = s(&[3, 1]) + s(&[2, 2]).scale(&Q::new(1, 2));
        assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn big_rationals_agree() {
        let f = SymFunc::<BigQ>::h(2).plethysm(&SymFunc::h(3)).to_schur();
        let expected = SymFunc::<BigQ>::schur(p(&[6])) + SymFunc::schur(p(&[4, 2]));
        assert_eq!(f, expected);
    }

    #[test]
    fn integrality() {
        let f = s(&[2]).scale(&Q::new(1, 2));
        assert!(f.integer_coeffs().is_err());
        assert!((s(&[2]) - s(&[1, 1])).schur_multiplicities().is_err());
        assert_eq!(s(&[2]).schur_multiplicities().unwrap()[&p(&[2])], 1);
    }
}
