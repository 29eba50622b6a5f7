//! Edelman-Greene insertion with recording, and its key-shaped
//! generalization: weak insertion producing a Yamanouchi key tableau and a
//! standard key recording tableau.

use crate::ck::ck_involution;
use crate::compositions::WeakDescent;
use crate::droplift::{drop_full_stack, lift_canonical_stack, stack_word, RowStack};
use crate::tableau::{dual_equivalence, weak_dual_equivalence, KeyTableau, YoungTableau};
use crate::word::ReducedWord;
use crate::{Error, Letter, Result};
use std::collections::BTreeMap;

/// An insertion/recording pair of matching shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgPair {
    /// Increasing Young tableau with reduced row reading word.
    pub insertion: YoungTableau,
    /// Standard Young tableau recording the growth.
    pub recording: YoungTableau,
}

/// An insertion/recording pair of matching key shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakPair {
    /// Yamanouchi key tableau.
    pub insertion: KeyTableau,
    /// Standard key tableau; entries are added in decreasing order.
    pub recording: KeyTableau,
}

/// Edelman-Greene insertion of a letter into an increasing Young tableau.
/// Returns the new tableau and the 0-based `(row, col)` of the added cell.
///
/// Bumping replaces the bumped entry except when it equals `x + 1` with
/// `x` already present in the row, in which case the row is left unchanged
/// and the bumped entry continues upward.
pub fn eg_insert(p: &YoungTableau, x: Letter) -> Result<(YoungTableau, (usize, usize))> {
    let mut word = p.row_word();
    word.push(x);
    let n = word.iter().map(|&l| l as usize + 1).max().unwrap_or(1);
    if ReducedWord::new(word, n).is_err() {
        return Err(Error::NotReduced(format!("row word of tableau extended by {x}")));
    }
    let mut rows: Vec<Vec<Letter>> = p.rows().to_vec();
    let mut cur = x;
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![cur]);
            return Ok((YoungTableau::from_rows(rows), (r, 0)));
        }
        let row = &mut rows[r];
        if row.last().map(|&z| cur >= z).unwrap_or(true) {
            row.push(cur);
            return Ok((YoungTableau::from_rows(rows.clone()), (r, rows[r].len() - 1)));
        }
        let c = row.iter().position(|&z| z > cur).unwrap();
        let bumped = row[c];
        if bumped != cur + 1 || !row.contains(&cur) {
            row[c] = cur;
        }
        cur = bumped;
    }
    unreachable!()
}

/// The Edelman-Greene correspondence: insert the letters left to right;
/// the recording tableau gets entry `k` at the cell added by the `k`-th
/// insertion.
pub fn eg_correspondence(rho: &ReducedWord) -> EgPair {
    let mut p = YoungTableau::empty();
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    for (k, &x) in rho.letters().iter().enumerate() {
        let (next, (r, c)) = eg_insert(&p, x).expect("prefix of a reduced word is reduced");
        p = next;
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r].len(), c);
        q_rows[r].push(k as Letter + 1);
    }
    EgPair { insertion: p, recording: YoungTableau::from_rows(q_rows) }
}

/// Weak insertion of a letter into a Yamanouchi key tableau: drop to the
/// increasing Young tableau, Edelman-Greene insert, lift back.
pub fn weak_insert(p: &KeyTableau, x: Letter) -> Result<KeyTableau> {
    let stack: RowStack = p.rows().values().cloned().collect();
    let young = drop_full_stack(&stack);
    let (inserted, _) = eg_insert(&YoungTableau::from_rows(young), x)?;
    let lifted = lift_canonical_stack(&inserted.rows().to_vec());
    key_placement(&lifted)
}

/// Places a lifted stack at its weak-descent rows, yielding the key-shaped
/// tableau whose reading word is the stack word.
fn key_placement(stack: &RowStack) -> Result<KeyTableau> {
    let word = ReducedWord::from_letters_unchecked(stack_word(stack));
    let placed = crate::descents::weak_descent_tableau(&word);
    if placed.is_virtual() {
        return Err(Error::BadTableau(format!("virtual placement for {word}")));
    }
    let rows: BTreeMap<u32, Vec<Letter>> =
        placed.rows.iter().map(|(&r, row)| (r as u32, row.clone())).collect();
    // the stack rows must be exactly the runs of its word
    let t = KeyTableau::from_rows(rows);
    debug_assert_eq!(
        t.rows().values().cloned().collect::<Vec<_>>(),
        stack.iter().filter(|r| !r.is_empty()).cloned().collect::<Vec<_>>()
    );
    Ok(t)
}

/// The weak correspondence: successive weak insertion of the letters, with
/// the recording tableau receiving entry `i` when the `i`-th letter from
/// the right is inserted, so recording entries decrease over time.
pub fn weak_correspondence(rho: &ReducedWord) -> WeakPair {
    let k = rho.len();
    let mut p = KeyTableau::empty();
    let mut q: BTreeMap<u32, Vec<Letter>> = BTreeMap::new();
    let mut prev_shape = p.shape();
    for (step, &x) in rho.letters().iter().enumerate() {
        p = weak_insert(&p, x).expect("prefix of a reduced word is reduced");
        let shape = p.shape();
        // exactly one row grew by one cell
        let mut grown = None;
        let top = shape.len().max(prev_shape.len());
        for r in 1..=top {
            let (new_len, old_len) = (shape.part(r), prev_shape.part(r));
            if new_len != old_len {
                assert!(new_len == old_len + 1 && grown.is_none(), "shapes not nested at {rho}");
                grown = Some(r as u32);
            }
        }
        let r = grown.expect("insertion adds a cell");
        q.entry(r).or_default().push((k - step) as Letter);
        prev_shape = shape;
    }
    WeakPair { insertion: p, recording: KeyTableau::from_rows(q) }
}

/// Checks both recording equivariances on a pair of words related by the
/// elementary Coxeter-Knuth involution at position `i`: the Edelman-Greene
/// recording tableaux differ by the dual equivalence involution at the
/// complementary index, the weak recording tableaux by the weak involution
/// at `i` itself.
pub fn recording_equivariance_check(sigma: &ReducedWord, tau: &ReducedWord, i: usize) -> bool {
    if sigma.len() != tau.len() {
        return false;
    }
    let n = sigma.len();
    if i <= 1 || i >= n {
        return false;
    }
    let related = ck_involution(tau, i).map(|img| img == *sigma).unwrap_or(false);
    if !related {
        return false;
    }
    let q_sigma = eg_correspondence(sigma).recording;
    let q_tau = eg_correspondence(tau).recording;
    let ok_strong = dual_equivalence(&q_tau, (n - i + 1) as Letter)
        .map(|img| img == q_sigma)
        .unwrap_or(false);
    let wq_sigma = weak_correspondence(sigma).recording;
    let wq_tau = weak_correspondence(tau).recording;
    let ok_weak = weak_dual_equivalence(&wq_tau, i as Letter)
        .map(|img| img == wq_sigma)
        .unwrap_or(false);
    ok_strong && ok_weak
}

/// `des` of the weak recording tableau, for the preservation statement
/// `des(rho) = des of the recording tableau`.
pub fn weak_recording_descent(pair: &WeakPair) -> WeakDescent {
    crate::tableau::skt_weak_descent_composition(&pair.recording)
        .expect("recording tableau is standard key")
}

/// Step-by-step insertion states, for tracing.
pub fn eg_trace(rho: &ReducedWord) -> Vec<(YoungTableau, YoungTableau)> {
    let mut out = Vec::new();
    let mut p = YoungTableau::empty();
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    for (k, &x) in rho.letters().iter().enumerate() {
        let (next, (r, c)) = eg_insert(&p, x).expect("reduced prefix");
        p = next;
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r].len(), c);
        q_rows[r].push(k as Letter + 1);
        out.push((p.clone(), YoungTableau::from_rows(q_rows.clone())));
    }
    out
}

/// Step-by-step weak insertion states, for tracing.
pub fn weak_trace(rho: &ReducedWord) -> Vec<(KeyTableau, KeyTableau)> {
    let k = rho.len();
    let mut out = Vec::new();
    let mut p = KeyTableau::empty();
    let mut q: BTreeMap<u32, Vec<Letter>> = BTreeMap::new();
    let mut prev_shape = p.shape();
    for (step, &x) in rho.letters().iter().enumerate() {
        p = weak_insert(&p, x).expect("reduced prefix");
        let shape = p.shape();
        let top = shape.len().max(prev_shape.len());
        let grown = (1..=top)
            .find(|&r| shape.part(r) != prev_shape.part(r))
            .expect("insertion adds a cell") as u32;
        q.entry(grown).or_default().push((k - step) as Letter);
        prev_shape = shape;
        out.push((p.clone(), KeyTableau::from_rows(q.clone())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descents::weak_descent_composition;
    use crate::perm::Permutation;
    use crate::word::enumerate_reduced_words;

    fn rw(letters: &[Letter]) -> ReducedWord {
        let n = letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
        ReducedWord::new(letters.to_vec(), n).unwrap()
    }

    fn yt(rows: &[&[Letter]]) -> YoungTableau {
        YoungTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn kt(rows: &[(u32, &[Letter])]) -> KeyTableau {
        KeyTableau::from_rows(rows.iter().map(|&(r, row)| (r, row.to_vec())).collect())
    }

    #[test]
    fn eg_insert_single_steps() {
        // the final bump of the running example
        let p = yt(&[&[2, 4, 5], &[3, 7], &[6]]);
        let (next, cell) = eg_insert(&p, 4).unwrap();
        assert_eq!(next, yt(&[&[2, 4, 5], &[3, 5], &[6, 7]]));
        assert_eq!(cell, (2, 1));
        // insertion into the empty tableau
        let (next, cell) = eg_insert(&YoungTableau::empty(), 3).unwrap();
        assert_eq!(next, yt(&[&[3]]));
        assert_eq!(cell, (0, 0));
        // the special no-replace bump: inserting 2 into rows (3,4,5)/(6,7)
        let p = yt(&[&[3, 4, 5], &[6, 7]]);
        let (next, cell) = eg_insert(&p, 2).unwrap();
        assert_eq!(next, yt(&[&[2, 4, 5], &[3, 7], &[6]]));
        assert_eq!(cell, (2, 0));
        // non-reduced extension is rejected
        assert!(eg_insert(&yt(&[&[3]]), 3).is_err());
    }

    #[test]
    fn eg_insertion_trace_of_running_example() {
        let rho = rw(&[3, 6, 4, 7, 5, 2, 4]);
        let states = eg_trace(&rho);
        let expect_p = [
            yt(&[&[3]]),
            yt(&[&[3, 6]]),
            yt(&[&[3, 4], &[6]]),
            yt(&[&[3, 4, 7], &[6]]),
            yt(&[&[3, 4, 5], &[6, 7]]),
            yt(&[&[2, 4, 5], &[3, 7], &[6]]),
            yt(&[&[2, 4, 5], &[3, 5], &[6, 7]]),
        ];
        let expect_q = [
            yt(&[&[1]]),
            yt(&[&[1, 2]]),
            yt(&[&[1, 2], &[3]]),
            yt(&[&[1, 2, 4], &[3]]),
            yt(&[&[1, 2, 4], &[3, 5]]),
            yt(&[&[1, 2, 4], &[3, 5], &[6]]),
            yt(&[&[1, 2, 4], &[3, 5], &[6, 7]]),
        ];
        assert_eq!(states.len(), 7);
        for (k, (p, q)) in states.iter().enumerate() {
            assert_eq!(p, &expect_p[k], "P after step {k}");
            assert_eq!(q, &expect_q[k], "Q after step {k}");
        }
        let pair = eg_correspondence(&rho);
        assert_eq!(pair.insertion, expect_p[6]);
        assert_eq!(pair.recording, expect_q[6]);
        assert!(pair.recording.is_standard());
    }

    #[test]
    fn eg_empty_word() {
        let pair = eg_correspondence(&ReducedWord::empty());
        assert_eq!(pair.insertion, YoungTableau::empty());
        assert_eq!(pair.recording, YoungTableau::empty());
        let pair = weak_correspondence(&ReducedWord::empty());
        assert_eq!(pair.insertion, KeyTableau::empty());
        assert_eq!(pair.recording, KeyTableau::empty());
    }

    #[test]
    fn eg_fibers_are_ck_classes_on_153264() {
        let w = Permutation::parse("153264").unwrap();
        let words = enumerate_reduced_words(&w);
        for a in &words {
            for b in &words {
                let same_p = eg_correspondence(a).insertion == eg_correspondence(b).insertion;
                let same_class = crate::ck::ck_class(a).contains(b);
                assert_eq!(same_p, same_class, "P-fiber vs class for {a}, {b}");
            }
        }
    }

    #[test]
    fn weak_insertion_trace_of_running_example() {
        let rho = rw(&[3, 6, 4, 7, 5, 2, 4]);
        let states = weak_trace(&rho);
        let expect_p = [
            kt(&[(3, &[3])]),
            kt(&[(3, &[3, 6])]),
            kt(&[(3, &[3, 4]), (6, &[6])]),
            kt(&[(3, &[3, 4, 7]), (6, &[6])]),
            kt(&[(3, &[3, 4, 5]), (6, &[6, 7])]),
            kt(&[(2, &[2]), (3, &[3, 4, 5]), (6, &[6, 7])]),
            kt(&[(2, &[2, 4]), (3, &[3, 4, 5]), (6, &[6, 7])]),
        ];
        let expect_q = [
            kt(&[(3, &[7])]),
            kt(&[(3, &[7, 6])]),
            kt(&[(3, &[7, 6]), (6, &[5])]),
            kt(&[(3, &[7, 6, 4]), (6, &[5])]),
            kt(&[(3, &[7, 6, 4]), (6, &[5, 3])]),
            kt(&[(2, &[2]), (3, &[7, 6, 4]), (6, &[5, 3])]),
            kt(&[(2, &[2, 1]), (3, &[7, 6, 4]), (6, &[5, 3])]),
        ];
        assert_eq!(states.len(), 7);
        for (k, (p, q)) in states.iter().enumerate() {
            assert_eq!(p, &expect_p[k], "weak P after step {k}");
            assert_eq!(q, &expect_q[k], "weak Q after step {k}");
        }
        let pair = weak_correspondence(&rho);
        assert_eq!(pair.insertion, expect_p[6]);
        assert_eq!(pair.recording, expect_q[6]);
        assert!(pair.recording.is_standard_key());
        // des is preserved through the recording tableau
        assert_eq!(weak_recording_descent(&pair), weak_descent_composition(&rho));
    }

    #[test]
    fn weak_insert_single_steps() {
        let p = kt(&[(3, &[3, 4, 7]), (6, &[6])]);
        assert_eq!(
            weak_insert(&p, 5).unwrap(),
            kt(&[(3, &[3, 4, 5]), (6, &[6, 7])])
        );
        assert_eq!(weak_insert(&KeyTableau::empty(), 3).unwrap(), kt(&[(3, &[3])]));
        let p = kt(&[(2, &[2]), (3, &[3, 4, 5]), (6, &[6, 7])]);
        assert_eq!(
            weak_insert(&p, 4).unwrap(),
            kt(&[(2, &[2, 4]), (3, &[3, 4, 5]), (6, &[6, 7])])
        );
    }

    #[test]
    fn weak_pair_shapes_match_and_des_is_preserved() {
        let w = Permutation::parse("153264").unwrap();
        for rho in enumerate_reduced_words(&w) {
            let pair = weak_correspondence(&rho);
            assert_eq!(pair.insertion.shape(), pair.recording.shape(), "{rho}");
            assert_eq!(weak_recording_descent(&pair), weak_descent_composition(&rho), "{rho}");
            // the insertion tableau's word is the canonical Yamanouchi word
            let word = ReducedWord::from_letters_unchecked(pair.insertion.row_word());
            assert_eq!(word, crate::droplift::yamanouchi_representative(&rho), "{rho}");
        }
    }

    #[test]
    fn recording_equivariance_on_153264() {
        let w = Permutation::parse("153264").unwrap();
        let words = enumerate_reduced_words(&w);
        for tau in &words {
            for i in 2..tau.len() {
                let sigma = ck_involution(tau, i).unwrap();
                if sigma != *tau {
                    assert!(recording_equivariance_check(&sigma, tau, i), "equivariance at {tau}, i={i}");
                } else {
                    // fixed words have recording tableaux fixed by the involutions
                    let q = eg_correspondence(tau).recording;
                    let n = tau.len();
                    assert_eq!(dual_equivalence(&q, (n - i + 1) as Letter).unwrap(), q);
                    let wq = weak_correspondence(tau).recording;
                    assert_eq!(weak_dual_equivalence(&wq, i as Letter).unwrap(), wq);
                }
            }
        }
    }
}
