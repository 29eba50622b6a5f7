//! Descent statistics of reduced words: run decomposition, the descent
//! composition and tableau, and their weak (row-indexed) refinements.

use crate::compositions::{Composition, WeakComposition, WeakDescent};
use crate::tableau::YoungTableau;
use crate::word::ReducedWord;
use crate::Letter;
use std::collections::BTreeMap;
use std::fmt;

/// The decomposition of a word into maximal increasing runs.
///
/// Runs are stored in written order, so `runs[0]` is the leftmost run of
/// the printed word; paper indices count from the right, with run 1 the
/// rightmost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    runs: Vec<Vec<Letter>>,
}

impl RunDecomposition {
    pub fn k(&self) -> usize {
        self.runs.len()
    }

    /// Runs in written (left-to-right) order.
    pub fn runs(&self) -> &[Vec<Letter>] {
        &self.runs
    }

    /// Run at paper index `i` (1-based, rightmost run first).
    pub fn run(&self, i: usize) -> &[Letter] {
        &self.runs[self.runs.len() - i]
    }

    /// Rows of the descent tableau bottom-up: row i is run i.
    pub fn rows_bottom_up(&self) -> Vec<Vec<Letter>> {
        self.runs.iter().rev().cloned().collect()
    }
}

pub fn run_decomposition(rho: &ReducedWord) -> RunDecomposition {
    let mut runs: Vec<Vec<Letter>> = Vec::new();
    for &x in rho.letters() {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() < x => run.push(x),
            _ => runs.push(vec![x]),
        }
    }
    RunDecomposition { runs }
}

/// `Des(rho)`: the run lengths read rightmost run first.
pub fn descent_composition(rho: &ReducedWord) -> Composition {
    let rd = run_decomposition(rho);
    Composition::new(rd.runs.iter().rev().map(|r| r.len() as u32).collect()).unwrap()
}

/// The descent tableau: row i (bottom-up) holds run i, so the row lengths
/// bottom to top spell out `Des(rho)`.
pub fn descent_tableau(rho: &ReducedWord) -> YoungTableau {
    YoungTableau::from_rows(run_decomposition(rho).rows_bottom_up())
}

/// Row indices for the runs: `r_i = min(run_i)` clamped strictly below the
/// row above.  Returns one index per run, paper order (index 1 first);
/// non-positive entries signal virtual placements.
fn hat_rows(rd: &RunDecomposition) -> Vec<i32> {
    let k = rd.k();
    let mut hats = vec![0i32; k];
    for i in (1..=k).rev() {
        let r = rd.run(i)[0] as i32;
        hats[i - 1] = if i == k { r } else { r.min(hats[i] - 1) };
    }
    hats
}

/// `des(rho)`: places the length of run i in row `r-hat_i`, or virtual when
/// the bottom run would land in a non-positive row.
pub fn weak_descent_composition(rho: &ReducedWord) -> WeakDescent {
    let rd = run_decomposition(rho);
    if rd.k() == 0 {
        return WeakDescent::Des(WeakComposition::empty());
    }
    let hats = hat_rows(&rd);
    if hats[0] <= 0 {
        return WeakDescent::Virtual;
    }
    let top = hats[rd.k() - 1] as usize;
    let mut parts = vec![0u32; top];
    for i in 1..=rd.k() {
        parts[hats[i - 1] as usize - 1] = rd.run(i).len() as u32;
    }
    WeakDescent::Des(WeakComposition::new(parts))
}

/// The weak descent tableau: runs placed at their hat rows in the right
/// half plane; rows with index <= 0 may occur and mark the word virtual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDescentTableau {
    pub rows: BTreeMap<i32, Vec<Letter>>,
}

impl WeakDescentTableau {
    pub fn is_virtual(&self) -> bool {
        self.rows.keys().any(|&r| r <= 0)
    }

    /// Row lengths as a weak composition when all rows are positive.
    pub fn weak_descent_composition(&self) -> WeakDescent {
        if self.is_virtual() {
            return WeakDescent::Virtual;
        }
        let top = self.rows.keys().next_back().copied().unwrap_or(0);
        let mut parts = vec![0u32; top.max(0) as usize];
        for (&r, row) in &self.rows {
            parts[r as usize - 1] = row.len() as u32;
        }
        WeakDescent::Des(WeakComposition::new(parts))
    }
}

impl fmt::Display for WeakDescentTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&r, row) in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{r:>3} | {}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn weak_descent_tableau(rho: &ReducedWord) -> WeakDescentTableau {
    let rd = run_decomposition(rho);
    let mut rows = BTreeMap::new();
    if rd.k() > 0 {
        let hats = hat_rows(&rd);
        for i in 1..=rd.k() {
            rows.insert(hats[i - 1], rd.run(i).to_vec());
        }
    }
    WeakDescentTableau { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(letters: &[Letter]) -> ReducedWord {
        let n = letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
        ReducedWord::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn run_decomposition_examples() {
        let rd = run_decomposition(&rw(&[3, 6, 4, 7, 5, 2, 4]));
        assert_eq!(rd.runs(), &[vec![3, 6], vec![4, 7], vec![5], vec![2, 4]]);
        assert_eq!(rd.k(), 4);
        assert_eq!(rd.run(1), &[2, 4]);
        assert_eq!(rd.run(4), &[3, 6]);

        let rd = run_decomposition(&rw(&[6, 7, 3, 4, 5, 2, 4]));
        assert_eq!(rd.runs(), &[vec![6, 7], vec![3, 4, 5], vec![2, 4]]);

        let rd = run_decomposition(&rw(&[1, 2, 3]));
        assert_eq!(rd.runs(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(
            descent_composition(&rw(&[3, 6, 4, 7, 5, 2, 4])),
            Composition::new(vec![2, 1, 2, 2]).unwrap()
        );
        assert_eq!(
            descent_composition(&rw(&[6, 7, 3, 4, 5, 2, 4])),
            Composition::new(vec![2, 3, 2]).unwrap()
        );
        assert_eq!(descent_composition(&rw(&[2, 3, 4])), Composition::new(vec![3]).unwrap());
    }

    #[test]
    fn descent_tableau_examples() {
        let t = descent_tableau(&rw(&[3, 6, 4, 7, 5, 2, 4]));
        assert_eq!(t.rows(), &[vec![2, 4], vec![5], vec![4, 7], vec![3, 6]]);
        let t = descent_tableau(&rw(&[6, 7, 3, 4, 5, 2, 4]));
        assert_eq!(t.rows(), &[vec![2, 4], vec![3, 4, 5], vec![6, 7]]);
        let t = descent_tableau(&rw(&[4]));
        assert_eq!(t.rows(), &[vec![4]]);
    }

    #[test]
    fn weak_descent_composition_examples() {
        assert_eq!(weak_descent_composition(&rw(&[3, 6, 4, 7, 5, 2, 4])), WeakDescent::Virtual);
        assert_eq!(
            weak_descent_composition(&rw(&[6, 7, 3, 4, 5, 2, 4])),
            WeakDescent::Des(WeakComposition::new(vec![0, 2, 3, 0, 0, 2]))
        );
        // a single increasing run of length m lands in row min
        assert_eq!(
            weak_descent_composition(&rw(&[3, 5, 6])),
            WeakDescent::Des(WeakComposition::new(vec![0, 0, 3]))
        );
        assert_eq!(
            weak_descent_composition(&ReducedWord::empty()),
            WeakDescent::Des(WeakComposition::empty())
        );
    }

    #[test]
    fn weak_descent_tableau_examples() {
        let t = weak_descent_tableau(&rw(&[3, 6, 4, 7, 5, 2, 4]));
        assert!(t.is_virtual());
        let rows: Vec<(i32, Vec<Letter>)> = t.rows.iter().map(|(&r, v)| (r, v.clone())).collect();
        assert_eq!(
            rows,
            vec![(0, vec![2, 4]), (1, vec![5]), (2, vec![4, 7]), (3, vec![3, 6])]
        );

        let t = weak_descent_tableau(&rw(&[6, 7, 3, 4, 5, 2, 4]));
        assert!(!t.is_virtual());
        let rows: Vec<(i32, Vec<Letter>)> = t.rows.iter().map(|(&r, v)| (r, v.clone())).collect();
        assert_eq!(
            rows,
            vec![(2, vec![2, 4]), (3, vec![3, 4, 5]), (6, vec![6, 7])]
        );

        let t = weak_descent_tableau(&rw(&[5]));
        assert_eq!(t.rows.get(&5), Some(&vec![5]));
    }

    #[test]
    fn tableau_and_composition_agree() {
        // on every reduced word of a test permutation, the tableau row
        // lengths reproduce des and flat(des) = Des on non-virtual words
        let w = crate::perm::Permutation::parse("153264").unwrap();
        for rho in crate::word::enumerate_reduced_words(&w) {
            let des = weak_descent_composition(&rho);
            let tab = weak_descent_tableau(&rho);
            assert_eq!(tab.weak_descent_composition(), des);
            assert_eq!(tab.is_virtual(), des.is_virtual());
            if let WeakDescent::Des(a) = &des {
                assert_eq!(a.flat(), descent_composition(&rho));
            }
            let dt = descent_tableau(&rho);
            let rd = run_decomposition(&rho);
            for (i, row) in dt.rows().iter().enumerate() {
                assert_eq!(row.as_slice(), rd.run(i + 1));
            }
        }
    }
}
