use super::{Partition, Tableau, TableauKind};
use crate::words::Letter;

/// Row-inserts `x` into `rows`, returning the row index where a new cell
/// was created.
fn row_insert<T: Ord + Clone>(rows: &mut Vec<Vec<T>>, mut x: T) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|y| *y <= x);
        if pos == row.len() {
            row.push(x);
            return i;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// RSK over any totally ordered alphabet. Returns the insertion tableau's
/// rows and the standard recording tableau.
pub fn rsk_generic<T: Ord + Clone>(seq: &[T]) -> (Vec<Vec<T>>, Tableau) {
    let mut p: Vec<Vec<T>> = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for (k, x) in seq.iter().enumerate() {
        let row = row_insert(&mut p, x.clone());
        if row == q.len() {
            q.push(Vec::new());
        }
        q[row].push(k as Letter + 1);
    }
    (p, Tableau::from_parts_unchecked(q, TableauKind::Standard))
}

/// The common shape `sh(w)` of `P(w)` and `Q(w)`.
pub fn rsk_shape<T: Ord + Clone>(seq: &[T]) -> Partition {
    let mut p: Vec<Vec<T>> = Vec::new();
    for x in seq {
        row_insert(&mut p, x.clone());
    }
    Partition::from_unsorted(p.iter().map(Vec::len).collect())
}

/// `w ↦ (P(w), Q(w))`.
pub fn rsk(w: &[Letter]) -> (Tableau, Tableau) {
    let (p, q) = rsk_generic(w);
    let standard = {
        let n = w.len();
        let mut seen = vec![false; n];
        w.iter().all(|&x| {
            let i = x as usize;
            i >= 1 && i <= n && !std::mem::replace(&mut seen[i - 1], true)
        })
    };
    let kind = if standard {
        TableauKind::Standard
    } else {
        TableauKind::Semistandard
    };
    (Tableau::from_parts_unchecked(p, kind), q)
}

/// Only the recording tableau `Q(w)`.
pub fn recording_tableau(w: &[Letter]) -> Tableau {
    rsk_generic(w).1
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::words::{content, descent_set, enumerate_words};

    fn q_rows(w: &[Letter]) -> Vec<Vec<Letter>> {
        recording_tableau(w).rows().to_vec()
    }

    #[test]
    fn recording_tableaux_of_permutations() {
        assert_eq!(q_rows(&[2, 3, 1, 4]), vec![vec![1, 2, 4], vec![3]]);
        assert_eq!(q_rows(&[1, 4, 2, 3]), vec![vec![1, 2, 4], vec![3]]);
    }

    #[test]
    fn single_letter_and_empty() {
        let (p, q) = rsk(&[5]);
        assert_eq!(p.rows(), &[vec![5]]);
        assert_eq!(q.rows(), &[vec![1]]);
        let (p, q) = rsk(&[]);
        assert!(p.shape().is_empty() && q.shape().is_empty());
    }

    #[test]
    fn insertion_bumps_strictly_greater() {
        let (p, _) = rsk(&[1, 2, 2, 1]);
        assert_eq!(p.rows(), &[vec![1, 1, 2], vec![2]]);
    }

    #[test]
    fn rsk_properties_small_words() {
        for n in 0..=6 {
            let mut seen = HashSet::new();
            for w in enumerate_words(n, 3) {
                let (p, q) = rsk(&w);
                assert_eq!(p.shape(), q.shape());
                assert!(Tableau::new(p.rows().to_vec()).is_ok());
                assert!(q.is_standard());
                assert_eq!(p.content(), content(&w));
                assert_eq!(q.descents().unwrap(), descent_set(&w));
                assert_eq!(rsk_shape(&w), *p.shape());
                assert!(seen.insert((p, q)), "RSK not injective at {w}");
            }
        }
    }
}
