use std::collections::HashMap;
use std::sync::Arc;

use crate::tableaux::Partition;
use crate::{Error, Result};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Partitions obtained by removing a rim hook of size `m` from `lam`,
/// paired with the hook's sign `(-1)^{height}`.
fn remove_rim_hooks(lam: &[usize], m: usize) -> Vec<(Vec<usize>, i64)> {
    let k = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < m {
            continue;
        }
        let t = b - m;
        if beta.contains(&t) {
            continue;
        }
        let between = beta.iter().filter(|&&x| t < x && x < b).count();
        let mut next = beta.clone();
        next[i] = t;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (k - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn chi(lam: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    if mu.is_empty() {
        return i64::from(lam.is_empty());
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_rim_hooks(lam, mu[0])
        .into_iter()
        .map(|(rest, sign)| sign * chi(&rest, &mu[1..], memo))
        .sum();
    memo.insert(key, v);
    v
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    Ok(chi(lambda.parts(), mu.parts(), &mut Memo::new()))
}

/// Full character table of `S_n`, rows `λ` and columns `μ` both in
/// decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let partitions = Partition::all(n);
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| chi(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable::from_values(partitions, values)
    }

    pub(crate) fn from_values(partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            partitions,
            index,
            values,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`; panics if either partition has the wrong size.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }
}

/// Character table of `S_n`, computed once per `n` and shared.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    crate::symfunc::degree_tables(n).characters.clone()
}
