use super::{divisors, eval_at_root, mn_character, power_cycle_type, ramanujan_sum, CycleType, IntPolyModQn};
use crate::tableaux::Partition;
use crate::{Error, Result};

fn check_sizes(lambda: &Partition, nu: &CycleType) -> Result<()> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: nu.size(),
            found: lambda.size(),
        });
    }
    Ok(())
}

fn to_multiplicity(total: i64, ell: usize, route: &str) -> Result<u64> {
    if total % ell as i64 != 0 || total < 0 {
        return Err(Error::NonIntegral(format!(
            "{route}: character sum {total} is not a nonnegative multiple of {ell}"
        )));
    }
    Ok((total / ell as i64) as u64)
}

/// Multiplicity of `S^λ` in `χ^r↑_C^{S_n}` for `C` generated by a
/// permutation of cycle type `ν`, grouping the powers `σ^j` by `gcd(j, ℓ)`
/// and summing roots of unity with Ramanujan sums.
pub fn induced_multiplicity_ramanujan(lambda: &Partition, nu: &CycleType, r: usize) -> Result<u64> {
    check_sizes(lambda, nu)?;
    let ell = nu.order();
    let mut total = 0i64;
    for g in divisors(ell) {
        let chi = mn_character(lambda, &power_cycle_type(nu.partition(), g))?;
        total += chi * ramanujan_sum(ell / g, r as i64);
    }
    to_multiplicity(total, ell, "ramanujan")
}

/// The same multiplicity, evaluating `Σ_j χ^λ(σ^j) q^{−rj}` exactly at a
/// primitive `ℓ`-th root of unity.
pub fn induced_multiplicity_by_roots(lambda: &Partition, nu: &CycleType, r: usize) -> Result<u64> {
    check_sizes(lambda, nu)?;
    let ell = nu.order();
    let mut f = IntPolyModQn::zero(ell);
    for j in 1..=ell {
        let chi = mn_character(lambda, &power_cycle_type(nu.partition(), j))?;
        f.add_term(-((r * j) as i64), chi);
    }
    let total = eval_at_root(&f, 1)
        .as_integer()
        .ok_or_else(|| Error::NonIntegral(format!("character sum for {lambda} at r={r} is irrational")))?;
    to_multiplicity(total, ell, "roots")
}

/// Oracle multiplicity of `S^λ` in `χ^r↑_C^{S_n}` by Frobenius reciprocity.
/// Both evaluation routes are run and must agree.
pub fn induced_multiplicity(lambda: &Partition, nu: &CycleType, r: usize) -> Result<u64> {
    let a = induced_multiplicity_ramanujan(lambda, nu, r)?;
    let b = induced_multiplicity_by_roots(lambda, nu, r)?;
    if a != b {
        return Err(Error::NonIntegral(format!(
            "oracle routes disagree for {lambda}, {nu}, r={r}: {a} vs {b}"
        )));
    }
    Ok(a)
}
