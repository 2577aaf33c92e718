use std::fmt;

use num_integer::Integer;

use super::divisors;

/// An integer polynomial in `q` modulo `q^n − 1`, stored densely by
/// exponent class `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolyModQn {
    n: usize,
    coeffs: Vec<i64>,
}

impl IntPolyModQn {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "modulus must be positive");
        IntPolyModQn {
            n,
            coeffs: vec![0; n],
        }
    }

    /// Reduces `Σ coeffs[e] q^e` modulo `q^n − 1`.
    pub fn from_coeffs(n: usize, coeffs: &[i64]) -> Self {
        let mut f = IntPolyModQn::zero(n);
        for (e, &c) in coeffs.iter().enumerate() {
            f.add_term(e as i64, c);
        }
        f
    }

    pub fn monomial(n: usize, exponent: i64) -> Self {
        let mut f = IntPolyModQn::zero(n);
        f.add_term(exponent, 1);
        f
    }

    /// Adds `c·q^exponent`; negative exponents are allowed since `q^n = 1`.
    pub fn add_term(&mut self, exponent: i64, c: i64) {
        let e = exponent.rem_euclid(self.n as i64) as usize;
        self.coeffs[e] += c;
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs[exponent.rem_euclid(self.n as i64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &IntPolyModQn) -> IntPolyModQn {
        assert_eq!(self.n, other.n, "moduli differ");
        IntPolyModQn {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntPolyModQn) -> IntPolyModQn {
        assert_eq!(self.n, other.n, "moduli differ");
        IntPolyModQn {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntPolyModQn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| match e {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for IntPolyModQn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self} mod q^{}-1]", self.n)
    }
}

/// Exact value of a polynomial at a root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootValue {
    Integer(i64),
    /// The reduced remainder modulo the relevant cyclotomic polynomial,
    /// lowest degree first.
    NonInteger(Vec<i64>),
}

impl RootValue {
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            RootValue::Integer(v) => Some(*v),
            RootValue::NonInteger(_) => None,
        }
    }
}

/// Dense coefficients of the `d`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_poly(d: usize) -> Vec<i64> {
    assert!(d >= 1, "cyclotomic_poly needs d ≥ 1");
    // q^d − 1 divided by Φ_e for every proper divisor e
    let mut num = vec![0i64; d + 1];
    num[0] = -1;
    num[d] = 1;
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        num = divide_monic(&num, &cyclotomic_poly(e)).0;
    }
    num
}

/// Quotient and remainder of `a / b` for monic `b`.
fn divide_monic(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[i - db + j] -= c * bj;
        }
    }
    rem.truncate(db.max(1));
    (quot, rem)
}

/// `f(ω_n^r)` for `f` taken modulo `q^n − 1` and `ω_n` a primitive `n`-th
/// root of unity.
pub fn eval_at_root(f: &IntPolyModQn, r: i64) -> RootValue {
    let n = f.modulus();
    let r = r.rem_euclid(n as i64) as usize;
    let g = n.gcd(&r);
    let d = n / g;
    let mut h = vec![0i64; d];
    for (e, &c) in f.coeffs().iter().enumerate() {
        if c != 0 {
            h[(e * r % n) / g] += c;
        }
    }
    let (_, mut rem) = divide_monic(&h, &cyclotomic_poly(d));
    while rem.len() > 1 && rem.last() == Some(&0) {
        rem.pop();
    }
    if rem.len() == 1 {
        RootValue::Integer(rem[0])
    } else {
        RootValue::NonInteger(rem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{euler_phi, ramanujan_sum};

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for d in 1..=30 {
            assert_eq!(cyclotomic_poly(d).len() - 1, euler_phi(d));
        }
    }

    #[test]
    fn root_evaluations() {
        let f = IntPolyModQn::from_coeffs(3, &[1, 1, 1]);
        assert_eq!(eval_at_root(&f, 1), RootValue::Integer(0));
        let f = IntPolyModQn::from_coeffs(2, &[1, 1]);
        assert_eq!(eval_at_root(&f, 2), RootValue::Integer(2));
        let f = IntPolyModQn::monomial(4, 1);
        assert!(matches!(eval_at_root(&f, 1), RootValue::NonInteger(_)));
        // i + i^3 = 0
        let f = IntPolyModQn::from_coeffs(4, &[0, 1, 0, 1]);
        assert_eq!(eval_at_root(&f, 1), RootValue::Integer(0));
        let f = IntPolyModQn::from_coeffs(4, &[0, 1, 0, 1]);
        assert_eq!(eval_at_root(&f, 2), RootValue::Integer(-2));
    }

    #[test]
    fn wraparound_exponents() {
        let f = IntPolyModQn::from_coeffs(3, &[0, 0, 0, 5]);
        assert_eq!(f.coeff(0), 5);
        let mut g = IntPolyModQn::zero(5);
        g.add_term(-1, 2);
        assert_eq!(g.coeff(4), 2);
        assert_eq!(g.eval_at_one(), 2);
    }

    #[test]
    fn ramanujan_sums_match_root_sums() {
        for q in 1..=12usize {
            for r in 0..=12i64 {
                let mut f = IntPolyModQn::zero(q);
                for k in 0..q {
                    if num_integer::gcd(k, q) == 1 {
                        f.add_term(k as i64 * r, 1);
                    }
                }
                assert_eq!(eval_at_root(&f, 1), RootValue::Integer(ramanujan_sum(q, r)), "q={q} r={r}");
            }
        }
    }
}
