//! Elementary Coxeter-Knuth involutions on reduced words and the
//! equivalence classes they generate.

use crate::perm::Permutation;
use crate::word::{enumerate_reduced_words, ReducedWord};
use crate::{Error, Result};
use std::collections::{BTreeSet, VecDeque};

/// The elementary Coxeter-Knuth relation on the window at positions
/// `i-1, i, i+1` (paper positions, rightmost letter first):
/// a braid move when the outer letters agree, a commutation shifted to
/// whichever side the middle extreme sits on, and the identity otherwise.
pub fn ck_involution(rho: &ReducedWord, i: usize) -> Result<ReducedWord> {
    let l = rho.len();
    if i <= 1 || i >= l {
        return Err(Error::PositionOutOfRange { position: i, len: l });
    }
    let prev = rho.paper_letter(i - 1)?;
    let mid = rho.paper_letter(i)?;
    let next = rho.paper_letter(i + 1)?;
    if next == prev {
        return rho.braid(i);
    }
    if (prev > next && next > mid) || (prev < next && next < mid) {
        return rho.commutation(i - 1);
    }
    if (next > prev && prev > mid) || (next < prev && prev < mid) {
        return rho.commutation(i);
    }
    Ok(rho.clone())
}

/// The closure of a word under all elementary Coxeter-Knuth relations,
/// listed in lexicographic order.
pub fn ck_class(rho: &ReducedWord) -> Vec<ReducedWord> {
    let mut seen: BTreeSet<ReducedWord> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(rho.clone());
    queue.push_back(rho.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 2..cur.len() {
            let img = ck_involution(&cur, i).unwrap();
            if !seen.contains(&img) {
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

/// Partitions `R(w)` into Coxeter-Knuth equivalence classes.  Classes are
/// listed by their lexicographically smallest member; members are sorted.
pub fn ck_classes(w: &Permutation) -> Vec<Vec<ReducedWord>> {
    let mut remaining: BTreeSet<ReducedWord> = enumerate_reduced_words(w).into_iter().collect();
    let mut classes = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let class = ck_class(&seed);
        for member in &class {
            remaining.remove(member);
        }
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Letter;

    fn rw(letters: &[Letter]) -> ReducedWord {
        let n = letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
        ReducedWord::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn involution_examples() {
        assert_eq!(ck_involution(&rw(&[5, 3, 2, 3, 4]), 3).unwrap(), rw(&[5, 2, 3, 2, 4]));
        assert_eq!(ck_involution(&rw(&[2, 3, 5, 2, 4]), 2).unwrap(), rw(&[2, 3, 2, 5, 4]));
        // middle letter between its neighbours: identity
        assert_eq!(ck_involution(&rw(&[1, 2, 3]), 2).unwrap(), rw(&[1, 2, 3]));
    }

    #[test]
    fn ck_graph_of_153264_matches_figure() {
        // every labelled edge of the two-component relation graph
        let edges: &[(&[Letter], usize, &[Letter])] = &[
            (&[5, 3, 2, 3, 4], 3, &[5, 2, 3, 2, 4]),
            (&[3, 5, 2, 3, 4], 3, &[3, 2, 5, 3, 4]),
            (&[3, 5, 2, 3, 4], 4, &[3, 2, 5, 3, 4]),
            (&[5, 2, 3, 2, 4], 4, &[2, 5, 3, 2, 4]),
            (&[5, 2, 3, 2, 4], 2, &[5, 2, 3, 4, 2]),
            (&[3, 2, 5, 3, 4], 2, &[3, 2, 3, 5, 4]),
            (&[2, 5, 3, 2, 4], 2, &[2, 5, 3, 4, 2]),
            (&[5, 2, 3, 4, 2], 4, &[2, 5, 3, 4, 2]),
            (&[3, 2, 3, 5, 4], 4, &[2, 3, 2, 5, 4]),
            (&[2, 3, 5, 2, 4], 3, &[2, 3, 2, 5, 4]),
            (&[2, 3, 5, 2, 4], 2, &[2, 3, 2, 5, 4]),
            (&[2, 5, 3, 4, 2], 3, &[2, 3, 5, 4, 2]),
        ];
        for &(a, i, b) in edges {
            assert_eq!(ck_involution(&rw(a), i).unwrap(), rw(b), "d_{i} on {a:?}");
            assert_eq!(ck_involution(&rw(b), i).unwrap(), rw(a), "involution back");
        }
    }

    #[test]
    fn classes_of_153264() {
        let w = Permutation::parse("153264").unwrap();
        let classes = ck_classes(&w);
        assert_eq!(classes.len(), 2);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        // components of the relation graph: five words with Des = (3,2)
        // and six with Des = (3,1,1), matching |SYT(3,2)| and |SYT(3,1,1)|
        assert_eq!(sizes, vec![5, 6]);
        let class_of = |word: &[Letter]| {
            classes.iter().find(|c| c.contains(&rw(word))).expect("word in some class")
        };
        assert_eq!(class_of(&[5, 3, 2, 3, 4]).len(), 6);
        assert_eq!(class_of(&[2, 3, 5, 4, 2]).len(), 6);
        assert_eq!(class_of(&[3, 5, 2, 3, 4]).len(), 5);
        assert_eq!(class_of(&[2, 3, 5, 2, 4]).len(), 5);
    }

    #[test]
    fn classes_trivial_and_13625847() {
        assert_eq!(ck_class(&ReducedWord::empty()), vec![ReducedWord::empty()]);
        let w = Permutation::parse("13625847").unwrap();
        assert_eq!(ck_classes(&w).len(), 5);
    }

    #[test]
    fn involution_preserves_word_data() {
        let w = Permutation::parse("153264").unwrap();
        for rho in crate::word::enumerate_reduced_words(&w) {
            for i in 2..rho.len() {
                let img = ck_involution(&rho, i).unwrap();
                assert_eq!(ck_involution(&img, i).unwrap(), rho);
                assert_eq!(img.apply(6).unwrap(), w);
                assert_eq!(img.len(), rho.len());
            }
        }
    }

    #[test]
    fn classes_partition_r_w() {
        for w in Permutation::all(4) {
            let classes = ck_classes(&w);
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, crate::word::enumerate_reduced_words(&w).len());
            let mut all: Vec<&ReducedWord> = classes.iter().flatten().collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), total, "classes overlap for {w}");
        }
    }
}
