use std::fmt;

use super::Partition;
use crate::words::Composition;

/// An `a`-tuple of partitions `(λ^(1), …, λ^(a))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionTuple {
    entries: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(entries: Vec<Partition>) -> Self {
        PartitionTuple { entries }
    }

    pub fn entries(&self) -> &[Partition] {
        &self.entries
    }

    pub fn a(&self) -> usize {
        self.entries.len()
    }

    /// Total size `Σ_r |λ^(r)|`.
    pub fn size(&self) -> usize {
        self.entries.iter().map(Partition::size).sum()
    }

    /// `α(ul) = (|λ^(1)|, …, |λ^(a)|)`.
    pub fn alpha(&self) -> Composition {
        Composition::new(self.entries.iter().map(Partition::size).collect())
    }

    /// The tuple with `(b)` or another single shape in slot `r` (1-based)
    /// and empty partitions elsewhere.
    pub fn concentrated(a: usize, r: usize, shape: Partition) -> Self {
        let mut entries = vec![Partition::empty(); a];
        entries[r - 1] = shape;
        PartitionTuple { entries }
    }

    /// All `a`-tuples of total size `b`.
    pub fn all(a: usize, b: usize) -> Vec<PartitionTuple> {
        let mut out = Vec::new();
        for alpha in Composition::all_weak(b, a) {
            let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
            for r in 1..=a {
                let shapes = Partition::all(alpha.get(r));
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        shapes.iter().map(move |s| {
                            let mut next = prefix.clone();
                            next.push(s.clone());
                            next
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(PartitionTuple::new));
        }
        out
    }

    /// JSON-style nested arrays, e.g. `[[1],[2,1],[]]`.
    pub fn to_bracket_string(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(Partition::to_bracket_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|p| if p.is_empty() { "∅".to_string() } else { p.to_string() })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(PartitionTuple::all(2, 2).len(), 5);
        assert_eq!(PartitionTuple::all(3, 2).len(), 9);
        assert_eq!(PartitionTuple::all(2, 3).len(), 10);
        assert_eq!(PartitionTuple::all(1, 4).len(), 5);
        for ul in PartitionTuple::all(3, 3) {
            assert_eq!(ul.size(), 3);
            assert_eq!(ul.a(), 3);
        }
    }

    #[test]
    fn display_and_alpha() {
        let ul = PartitionTuple::new(vec![
            Partition::new(vec![1]).unwrap(),
            Partition::new(vec![2, 1]).unwrap(),
            Partition::empty(),
        ]);
        assert_eq!(ul.to_string(), "((1),(2,1),∅)");
        assert_eq!(ul.to_bracket_string(), "[[1],[2,1],[]]");
        assert_eq!(ul.alpha(), Composition::new(vec![1, 3, 0]));
    }
}
