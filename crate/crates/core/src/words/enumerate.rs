use super::{Composition, Letter, Word};

/// All words of length `n` over `{1, …, m}` in lexicographic order.
pub fn enumerate_words(n: usize, m: usize) -> Words {
    Words {
        current: vec![1; n],
        m: m as Letter,
        done: m == 0 && n > 0,
    }
}

/// All words with content `alpha`, in lexicographic order.
pub fn enumerate_words_by_content(alpha: &Composition) -> MultisetPermutations {
    let mut letters = Vec::with_capacity(alpha.size());
    for (i, &count) in alpha.parts().iter().enumerate() {
        letters.extend(std::iter::repeat_n((i + 1) as Letter, count));
    }
    MultisetPermutations::new(letters)
}

#[derive(Debug, Clone)]
pub struct Words {
    current: Vec<Letter>,
    m: Letter,
    done: bool,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word::from_vec_unchecked(self.current.clone());
        // odometer increment from the right
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.m {
                self.current[i] += 1;
                for x in &mut self.current[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Lexicographic enumeration of the distinct rearrangements of a multiset.
///
/// Besides the allocating [`Iterator`] impl, [`MultisetPermutations::next_slice`]
/// walks the same sequence in place.
#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    current: Vec<Letter>,
    started: bool,
    done: bool,
}

impl MultisetPermutations {
    pub fn new(mut letters: Vec<Letter>) -> Self {
        letters.sort_unstable();
        MultisetPermutations {
            current: letters,
            started: false,
            done: false,
        }
    }

    pub fn next_slice(&mut self) -> Option<&[Letter]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        if next_permutation(&mut self.current) {
            Some(&self.current)
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_slice().map(|s| Word::from_vec_unchecked(s.to_vec()))
    }
}

fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
