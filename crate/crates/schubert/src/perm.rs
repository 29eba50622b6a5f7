//! Permutations in one-line notation.

use crate::{Error, Letter, Result};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation.
///
/// The rank `n` is part of the value: trailing fixed points are kept, so
/// `153264` in S_6 and its image in S_7 are distinct values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_one_line(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::NotAPermutation(format!("{word:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u8).collect() }
    }

    /// The longest element `n, n-1, ..., 1` of S_n.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n as u8).rev().collect() }
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.word
    }

    /// Coxeter length: the number of inversion pairs `(i<j)` with `w_i > w_j`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i+1`.
    pub fn swap_values(&self, i: Letter) -> Self {
        let mut word = self.word.clone();
        for v in word.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { word }
    }

    /// Right multiplication by `s_i`: swaps the entries in positions `i`, `i+1`.
    pub fn swap_positions(&self, i: Letter) -> Self {
        let mut word = self.word.clone();
        word.swap(i as usize - 1, i as usize);
        Permutation { word }
    }

    /// Letters `i` with `i+1` left of `i` in one-line notation, i.e. those
    /// with `length(s_i w) < length(w)`.
    pub fn left_descents(&self) -> Vec<Letter> {
        let n = self.rank();
        let mut pos = vec![0usize; n + 2];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v as usize] = p;
        }
        (1..n as u8).filter(|&i| pos[i as usize + 1] < pos[i as usize]).collect()
    }

    /// Positions `i` with `w_i > w_{i+1}`, i.e. those with
    /// `length(w s_i) < length(w)`.  A reduced word's first letter is
    /// always a right descent, which drives the enumeration.
    pub fn right_descents(&self) -> Vec<Letter> {
        (1..self.rank() as u8)
            .filter(|&i| self.word[i as usize - 1] > self.word[i as usize])
            .collect()
    }

    /// All permutations of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { word: cur.clone() });
            if !next_lex(&mut cur) {
                break;
            }
        }
        out
    }

    /// Parses either a comma-free digit string (`153264`, valid for n <= 9)
    /// or a comma-separated list (`1,5,3,2,6,4`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or(Error::Parse(format!("bad digit `{c}`"))))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(word)
    }
}

fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rfind(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|x| *x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Comma-free digits for n <= 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::parse("153264").unwrap().length(), 5);
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::parse("4321").unwrap().length(), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![2, 4, 3]).is_err());
    }

    #[test]
    fn descents_and_multiplication() {
        let w = Permutation::parse("153264").unwrap();
        // s_i w shortens w exactly for left descents.
        for i in 1..w.rank() as u8 {
            let shorter = w.swap_values(i).length() < w.length();
            assert_eq!(shorter, w.left_descents().contains(&i));
        }
    }

    #[test]
    fn all_enumerates_sn() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(1).len(), 1);
        // lexicographic and duplicate-free
        let s4 = Permutation::all(4);
        for pair in s4.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = Permutation::parse("153264").unwrap();
        assert_eq!(w.to_string(), "153264");
        let v = Permutation::parse("1,5,3,2,6,4").unwrap();
        assert_eq!(w, v);
    }
}
