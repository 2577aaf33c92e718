use std::collections::BTreeSet;
use std::fmt;

use super::Partition;
use crate::words::{bfmaj_from_descents, Composition, Letter, MajTuple};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableauKind {
    Semistandard,
    Standard,
}

/// A Young tableau in English orientation, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
    kind: TableauKind,
}

impl Tableau {
    /// Validates a semistandard filling; the kind is `Standard` when the
    /// entries are exactly `1, …, n`.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not a partition".into()))?;
        for row in &rows {
            if row.contains(&0) {
                return Err(Error::InvalidLetter(0));
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTableau("row not weakly increasing".into()));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("column not strictly increasing".into()));
            }
        }
        let n = shape.size();
        let mut seen = vec![false; n];
        let standard = rows.iter().flatten().all(|&e| {
            let i = e as usize;
            if i >= 1 && i <= n && !seen[i - 1] {
                seen[i - 1] = true;
                true
            } else {
                false
            }
        });
        let kind = if standard {
            TableauKind::Standard
        } else {
            TableauKind::Semistandard
        };
        Ok(Tableau { shape, rows, kind })
    }

    pub fn standard(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        if t.is_standard() {
            Ok(t)
        } else {
            Err(Error::NonStandardTableau)
        }
    }

    pub(crate) fn from_parts_unchecked(rows: Vec<Vec<Letter>>, kind: TableauKind) -> Self {
        let shape = Partition::from_unsorted(rows.iter().map(Vec::len).collect());
        Tableau { shape, rows, kind }
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
            kind: TableauKind::Standard,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn is_standard(&self) -> bool {
        self.kind == TableauKind::Standard
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn content(&self) -> Composition {
        crate::words::content(&self.rows.concat())
    }

    /// Row index (0-based) holding each entry `1..=n` of a standard tableau.
    fn rows_of_entries(&self) -> Result<Vec<usize>> {
        if !self.is_standard() {
            return Err(Error::NonStandardTableau);
        }
        let mut row_of = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e as usize - 1] = i;
            }
        }
        Ok(row_of)
    }

    /// `i` is a descent when `i + 1` lies in a strictly lower row than `i`.
    pub fn descents(&self) -> Result<BTreeSet<usize>> {
        let row_of = self.rows_of_entries()?;
        Ok(row_of
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[1] > p[0])
            .map(|(i, _)| i + 1)
            .collect())
    }

    pub fn maj(&self) -> Result<usize> {
        Ok(self.descents()?.iter().sum())
    }

    pub fn bfmaj_nu(&self, nu: &[usize]) -> Result<MajTuple> {
        let total: usize = nu.iter().sum();
        if total != self.size() {
            return Err(Error::LengthMismatch {
                expected: total,
                found: self.size(),
            });
        }
        bfmaj_from_descents(&self.descents()?, nu)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{self}")
    }
}

pub fn tableau_descents(q: &Tableau) -> Result<BTreeSet<usize>> {
    q.descents()
}

pub fn tableau_maj(q: &Tableau) -> Result<usize> {
    q.maj()
}

pub fn tableau_bfmaj_nu(q: &Tableau, nu: &[usize]) -> Result<MajTuple> {
    q.bfmaj_nu(nu)
}

/// All standard tableaux of shape `shape`.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::with_capacity(shape.num_syt() as usize);
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.len()];
    fn rec(k: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<Letter>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau::from_parts_unchecked(rows.clone(), TableauKind::Standard));
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < shape.part(i) && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k as Letter);
                rec(k + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, shape, &mut rows, &mut out);
    out
}

/// Calls `visit` with the row contents of every semistandard tableau of
/// shape `shape` and content `content`.
fn for_each_ssyt<F: FnMut(&[Vec<Letter>])>(shape: &Partition, content: &Composition, mut visit: F) {
    if shape.size() != content.size() {
        return;
    }
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.len()];
    // Place letters 1, 2, … in turn as horizontal strips.
    fn place<F: FnMut(&[Vec<Letter>])>(
        letter: usize,
        content: &Composition,
        shape: &Partition,
        rows: &mut Vec<Vec<Letter>>,
        visit: &mut F,
    ) {
        if letter > content.parts().len() {
            visit(rows);
            return;
        }
        let count = content.get(letter);
        strip(0, count, letter, content, shape, rows, visit);
    }
    fn strip<F: FnMut(&[Vec<Letter>])>(
        row: usize,
        remaining: usize,
        letter: usize,
        content: &Composition,
        shape: &Partition,
        rows: &mut Vec<Vec<Letter>>,
        visit: &mut F,
    ) {
        if remaining == 0 {
            place(letter + 1, content, shape, rows, visit);
            return;
        }
        if row >= rows.len() {
            return;
        }
        let len = rows[row].len();
        // cells added in this row must stay under the previous row's old
        // length (strip condition) and inside the shape
        let above_limit = if row == 0 {
            usize::MAX
        } else {
            rows[row - 1]
                .iter()
                .take_while(|&&e| (e as usize) < letter)
                .count()
        };
        let cap = shape.part(row).min(above_limit).saturating_sub(len).min(remaining);
        for add in (0..=cap).rev() {
            for _ in 0..add {
                rows[row].push(letter as Letter);
            }
            strip(row + 1, remaining - add, letter, content, shape, rows, visit);
            for _ in 0..add {
                rows[row].pop();
            }
        }
    }
    place(1, content, shape, &mut rows, &mut visit);
}

/// All semistandard tableaux of shape `shape` and content `content`.
pub fn enumerate_ssyt(shape: &Partition, content: &Composition) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, content, |rows| {
        out.push(Tableau::from_parts_unchecked(rows.to_vec(), TableauKind::Semistandard));
    });
    out
}

/// The Kostka number `K_{λμ} = #SSYT(λ, μ)`.
pub fn kostka_number(shape: &Partition, content: &Composition) -> u64 {
    let mut count = 0;
    for_each_ssyt(shape, content, |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descents_of_example_tableau() {
        let q = Tableau::standard(vec![vec![1, 2, 5], vec![3, 4], vec![6]]).unwrap();
        assert_eq!(q.descents().unwrap(), [2, 5].into_iter().collect());
        assert_eq!(q.maj().unwrap(), 7);
    }

    #[test]
    fn single_row_and_column() {
        let row = Tableau::standard(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.descents().unwrap().is_empty());
        assert_eq!(row.maj().unwrap(), 0);
        for n in 1..=6u32 {
            let col = Tableau::standard((1..=n).map(|i| vec![i]).collect()).unwrap();
            assert_eq!(col.maj().unwrap() as u32, n * (n - 1) / 2);
        }
    }

    #[test]
    fn validation_errors() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        let ss = Tableau::new(vec![vec![1, 1, 2], vec![2]]).unwrap();
        assert!(!ss.is_standard());
        assert_eq!(ss.descents(), Err(Error::NonStandardTableau));
        assert_eq!(Tableau::standard(vec![vec![1, 1]]), Err(Error::NonStandardTableau));
    }

    #[test]
    fn syt_counts_match_hook_formula() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let all = enumerate_syt(&lam);
                assert_eq!(all.len() as u64, lam.num_syt(), "{lam}");
                for t in &all {
                    assert!(Tableau::standard(t.rows().to_vec()).is_ok());
                }
            }
        }
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
    }

    #[test]
    fn ssyt_enumeration() {
        let all = enumerate_ssyt(&p(&[2, 1]), &Composition::new(vec![1, 1, 1]));
        assert_eq!(all.len(), 2);
        for t in &all {
            assert!(Tableau::new(t.rows().to_vec()).is_ok());
        }
        assert_eq!(kostka_number(&p(&[2, 1]), &Composition::new(vec![2, 1])), 1);
        assert_eq!(kostka_number(&p(&[2, 2]), &Composition::new(vec![1, 1, 1, 1])), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &Composition::new(vec![1, 2, 2])), 2);
        assert_eq!(kostka_number(&p(&[2]), &Composition::new(vec![1, 1, 1])), 0);
        // content order does not matter for the count
        assert_eq!(
            kostka_number(&p(&[3, 1]), &Composition::new(vec![0, 2, 1, 1])),
            kostka_number(&p(&[3, 1]), &Composition::new(vec![2, 1, 1]))
        );
    }
}
