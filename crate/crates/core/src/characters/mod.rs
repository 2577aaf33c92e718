//! Symmetric-group characters, number-theoretic helpers and exact
//! evaluation at roots of unity. Independent of the tableau-side formulas.

mod cyclotomic;
mod induced;
mod murnaghan;

use std::fmt;

use num_integer::Integer;

pub use cyclotomic::{cyclotomic_poly, eval_at_root, IntPolyModQn, RootValue};
pub use induced::{induced_multiplicity, induced_multiplicity_by_roots, induced_multiplicity_ramanujan};
pub use murnaghan::{character_table, mn_character, CharacterTable};

use crate::tableaux::Partition;

/// Cycle type `ν` of a permutation together with its order `ℓ = lcm(ν)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    partition: Partition,
    order: usize,
}

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        let order = partition.parts().iter().fold(1, |acc, &p| acc.lcm(&p));
        CycleType { partition, order }
    }

    /// Cycle type `(n)` of a long cycle.
    pub fn cycle(n: usize) -> Self {
        CycleType::new(Partition::from_unsorted(vec![n]))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType::new(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self.partition)
    }
}

/// Cycle type of `σ^j` when `σ` has cycle type `ν`.
pub fn power_cycle_type(nu: &Partition, j: usize) -> Partition {
    let mut parts = Vec::with_capacity(nu.size());
    for &p in nu.parts() {
        let g = p.gcd(&j);
        parts.extend(std::iter::repeat_n(p / g, g));
    }
    Partition::from_unsorted(parts)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Möbius function `μ(n)`.
pub fn moebius(n: usize) -> i64 {
    assert!(n >= 1, "moebius(0) is undefined");
    let f = prime_factors(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of the distinct primes dividing `n`.
pub fn rad(n: usize) -> usize {
    assert!(n >= 1, "rad(0) is undefined");
    prime_factors(n).iter().map(|&(p, _)| p).product()
}

pub fn euler_phi(n: usize) -> usize {
    prime_factors(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Ramanujan sum `c_q(r) = Σ_{d | gcd(q,r)} d·μ(q/d)`.
pub fn ramanujan_sum(q: usize, r: i64) -> i64 {
    assert!(q >= 1, "ramanujan_sum needs q ≥ 1");
    let r = r.rem_euclid(q as i64) as usize;
    let g = q.gcd(&r);
    divisors(g)
        .into_iter()
        .map(|d| d as i64 * moebius(q / d))
        .sum()
}

/// `z_λ = Π_i i^{m_i} m_i!`, the centralizer order of cycle type `λ`.
pub fn z_lambda(lambda: &Partition) -> u64 {
    lambda
        .multiplicities()
        .into_iter()
        .map(|(part, m)| (part as u64).pow(m as u32) * (1..=m as u64).product::<u64>())
        .product()
}
