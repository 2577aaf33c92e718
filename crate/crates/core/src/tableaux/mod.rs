//! Partitions, Young tableaux, RSK and tableau statistics.

mod partition;
mod rsk;
mod tableau;
mod tuple;

use std::collections::BTreeSet;

pub use partition::Partition;
pub use rsk::{recording_tableau, rsk, rsk_generic, rsk_shape};
pub use tableau::{
    enumerate_ssyt, enumerate_syt, kostka_number, tableau_bfmaj_nu, tableau_descents, tableau_maj,
    Tableau, TableauKind,
};
pub use tuple::PartitionTuple;

use crate::symfunc::{Basis, SymFunc};
use crate::words::residue_in_range;
use crate::{Error, Result, Scalar};

/// Descent sets of all standard tableaux of shape `shape`.
pub fn syt_descent_sets(shape: &Partition) -> Vec<BTreeSet<usize>> {
    enumerate_syt(shape)
        .iter()
        .map(|q| q.descents().expect("enumerated tableaux are standard"))
        .collect()
}

/// `a_{λ,r} = #{Q ∈ SYT(λ) : maj(Q) ≡ r mod n}`.
pub fn a_coeff(shape: &Partition, r: usize, n: usize) -> Result<usize> {
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: shape.size(),
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let target = residue_in_range(r, n);
    Ok(syt_descent_sets(shape)
        .iter()
        .filter(|d| residue_in_range(d.iter().sum(), n) == target)
        .count())
}

/// `Σ_λ #{Q ∈ SYT(λ) : Des(Q) = D} s_λ`, the content generating function of
/// length-`n` words with descent set `D`.
pub fn schur_expand_descent_class<T: Scalar>(descents: &BTreeSet<usize>, n: usize) -> SymFunc<T> {
    let terms = Partition::all(n).into_iter().filter_map(|lam| {
        let count = syt_descent_sets(&lam).iter().filter(|d| *d == descents).count();
        (count > 0).then(|| (lam, T::from_i64(count as i64)))
    });
    SymFunc::from_terms(n, Basis::Schur, terms)
}
