//! Reduced words and the elementary Coxeter relations.
//!
//! A word is stored left to right as written, so `letters[0]` is the first
//! letter of the printed word.  Position subscripts in the Coxeter moves
//! follow the classical convention that position 1 is the *rightmost*
//! letter; the index conversion `letters[len - j]` is fixed here once.

use crate::perm::Permutation;
use crate::{Error, Letter, Result};
use std::fmt;

/// A reduced word: the sequence of simple-transposition indices of a
/// minimal-length expression.  The checked constructor verifies that the
/// word multiplies out to a permutation whose inversion count equals the
/// word length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn new(letters: Vec<Letter>, n: usize) -> Result<Self> {
        let w = apply_letters(&letters, n)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced(format!("{letters:?}")));
        }
        Ok(ReducedWord { letters })
    }

    /// Wraps letters that are already known to form a reduced word, e.g.
    /// the output of a Coxeter move or of the drop/lift rewriting maps.
    pub fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        ReducedWord { letters }
    }

    pub fn empty() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Smallest rank in which the word lives: max letter + 1.
    pub fn min_rank(&self) -> usize {
        self.letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1)
    }

    /// The permutation `s_{letters[0]} ... s_{letters[last]}` obtained by
    /// applying the letters in written order as value swaps.
    pub fn apply(&self, n: usize) -> Result<Permutation> {
        apply_letters(&self.letters, n)
    }

    /// The letter at paper position `j` (1-based from the right end).
    pub fn paper_letter(&self, j: usize) -> Result<Letter> {
        if j == 0 || j > self.len() {
            return Err(Error::PositionOutOfRange { position: j, len: self.len() });
        }
        Ok(self.letters[self.len() - j])
    }

    /// The commutation move `c_j` for `1 <= j < len`: exchanges the letters
    /// in positions j and j+1 when they differ by more than one, otherwise
    /// acts as the identity.
    pub fn commutation(&self, j: usize) -> Result<Self> {
        if j == 0 || j >= self.len() {
            return Err(Error::PositionOutOfRange { position: j, len: self.len() });
        }
        let hi = self.len() - j; // index of position j
        let lo = hi - 1; // index of position j+1
        let mut letters = self.letters.clone();
        if letters[lo].abs_diff(letters[hi]) > 1 {
            letters.swap(lo, hi);
        }
        Ok(ReducedWord { letters })
    }

    /// The braid move `b_j` for `1 < j < len`: rewrites the window
    /// `(p_{j+1}, p_j, p_{j-1})` to `(p_j, p_{j+1}, p_j)` when the outer
    /// letters agree, otherwise acts as the identity.
    pub fn braid(&self, j: usize) -> Result<Self> {
        if j <= 1 || j >= self.len() {
            return Err(Error::PositionOutOfRange { position: j, len: self.len() });
        }
        let mid = self.len() - j;
        let mut letters = self.letters.clone();
        if letters[mid - 1] == letters[mid + 1] {
            let (a, b) = (letters[mid - 1], letters[mid]);
            letters[mid - 1] = b;
            letters[mid] = a;
            letters[mid + 1] = b;
        }
        Ok(ReducedWord { letters })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(ReducedWord::empty());
        }
        let letters: Vec<Letter> = s
            .split(',')
            .map(|t| t.trim().parse::<Letter>().map_err(|_| Error::Parse(format!("bad letter `{t}`"))))
            .collect::<Result<_>>()?;
        let n = letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
        ReducedWord::new(letters, n)
    }
}

impl fmt::Display for ReducedWord {
    /// Parenthesized comma-separated list matching the usual notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn apply_letters(letters: &[Letter], n: usize) -> Result<Permutation> {
    let mut w = Permutation::identity(n);
    for &x in letters {
        if x == 0 || x as usize >= n {
            return Err(Error::LetterOutOfRange { letter: x, rank: n });
        }
        w = w.swap_values(x);
    }
    Ok(w)
}

/// Evaluates a word of simple transpositions, right factor applied first.
pub fn apply_word(rho: &ReducedWord, n: usize) -> Result<Permutation> {
    rho.apply(n)
}

/// Calls `f` on every reduced word of `w`, in lexicographic order of the
/// letter sequences, without materialising the whole set.
pub fn for_each_reduced_word<F: FnMut(&[Letter])>(w: &Permutation, f: &mut F) {
    let mut prefix = Vec::with_capacity(w.length());
    descend(w.clone(), &mut prefix, f);
}

fn descend<F: FnMut(&[Letter])>(w: Permutation, prefix: &mut Vec<Letter>, f: &mut F) {
    // the first letter x of a reduced word leaves w s_x one step shorter,
    // since the evaluation applies the written word left to right
    let descents = w.right_descents();
    if descents.is_empty() {
        f(prefix);
        return;
    }
    for i in descents {
        prefix.push(i);
        descend(w.swap_positions(i), prefix, f);
        prefix.pop();
    }
}

/// The set `R(w)` of reduced words, enumerated by recursive descent on left
/// descents, in lexicographic order.
pub fn enumerate_reduced_words(w: &Permutation) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    for_each_reduced_word(w, &mut |letters| {
        out.push(ReducedWord { letters: letters.to_vec() });
    });
    out
}

/// An edge label in the Coxeter move graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoxeterMove {
    Commutation(usize),
    Braid(usize),
}

impl fmt::Display for CoxeterMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterMove::Commutation(j) => write!(f, "c{j}"),
            CoxeterMove::Braid(j) => write!(f, "b{j}"),
        }
    }
}

/// The graph on `R(w)` whose labelled edges are the nontrivial commutation
/// and braid moves.  Tits's theorem says this graph is connected, which
/// [`CoxeterGraph::is_connected`] makes testable.
pub struct CoxeterGraph {
    pub nodes: Vec<ReducedWord>,
    /// `(a, b, label)` with `a < b` indices into `nodes`; each unordered
    /// pair appears once per label that realises it.
    pub edges: Vec<(usize, usize, CoxeterMove)>,
}

pub fn coxeter_graph(w: &Permutation) -> CoxeterGraph {
    let nodes = enumerate_reduced_words(w);
    let index: std::collections::HashMap<&ReducedWord, usize> =
        nodes.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut edges = Vec::new();
    for (a, rho) in nodes.iter().enumerate() {
        let l = rho.len();
        for j in 1..l {
            let img = rho.commutation(j).unwrap();
            if &img != rho {
                let b = index[&img];
                if a < b {
                    edges.push((a, b, CoxeterMove::Commutation(j)));
                }
            }
        }
        for j in 2..l {
            let img = rho.braid(j).unwrap();
            if &img != rho {
                let b = index[&img];
                if a < b {
                    edges.push((a, b, CoxeterMove::Braid(j)));
                }
            }
        }
    }
    edges.sort();
    CoxeterGraph { nodes, edges }
}

impl CoxeterGraph {
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.nodes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(letters: &[Letter]) -> ReducedWord {
        let n = letters.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
        ReducedWord::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn apply_word_examples() {
        assert_eq!(rw(&[1, 2, 1]).apply(3).unwrap(), Permutation::parse("321").unwrap());
        assert_eq!(
            ReducedWord::empty().apply(4).unwrap(),
            Permutation::identity(4)
        );
        assert_eq!(
            rw(&[5, 3, 2, 3, 4]).apply(6).unwrap(),
            Permutation::parse("153264").unwrap()
        );
    }

    #[test]
    fn letter_out_of_range() {
        assert!(matches!(
            ReducedWord::new(vec![3], 3).err(),
            Some(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_non_reduced() {
        assert!(ReducedWord::new(vec![1, 1], 3).is_err());
        assert!(ReducedWord::new(vec![1, 2, 1, 2], 3).is_err());
    }

    #[test]
    fn enumeration_matches_figure_for_153264() {
        let w = Permutation::parse("153264").unwrap();
        let words = enumerate_reduced_words(&w);
        let expected: Vec<ReducedWord> = [
            vec![5, 3, 2, 3, 4],
            vec![5, 2, 3, 2, 4],
            vec![5, 2, 3, 4, 2],
            vec![3, 5, 2, 3, 4],
            vec![3, 2, 5, 3, 4],
            vec![3, 2, 3, 5, 4],
            vec![2, 5, 3, 4, 2],
            vec![2, 3, 5, 4, 2],
            vec![2, 5, 3, 2, 4],
            vec![2, 3, 5, 2, 4],
            vec![2, 3, 2, 5, 4],
        ]
        .into_iter()
        .map(|v| rw(&v))
        .collect();
        assert_eq!(words.len(), 11);
        let got: std::collections::BTreeSet<_> = words.into_iter().collect();
        let want: std::collections::BTreeSet<_> = expected.into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn enumeration_trivial_and_longest() {
        assert_eq!(enumerate_reduced_words(&Permutation::identity(3)), vec![ReducedWord::empty()]);
        // |R(w_0)| = 16 in S_4; cross-checked below against a brute-force oracle.
        assert_eq!(enumerate_reduced_words(&Permutation::longest(4)).len(), 16);
    }

    /// Independent oracle: all letter sequences of length l(w) multiplying to w.
    fn brute_force_words(w: &Permutation) -> std::collections::BTreeSet<Vec<Letter>> {
        let n = w.rank();
        let l = w.length();
        let mut out = std::collections::BTreeSet::new();
        let mut seq = vec![1 as Letter; l];
        loop {
            let cand = ReducedWord { letters: seq.clone() };
            if &cand.apply(n).unwrap() == w {
                out.insert(seq.clone());
            }
            // odometer over alphabet 1..n
            let mut k = l;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if (seq[k] as usize) < n - 1 {
                    seq[k] += 1;
                    break;
                }
                seq[k] = 1;
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_brute_force_on_s4() {
        for w in Permutation::all(4) {
            let fast: std::collections::BTreeSet<Vec<Letter>> = enumerate_reduced_words(&w)
                .into_iter()
                .map(|r| r.letters().to_vec())
                .collect();
            assert_eq!(fast, brute_force_words(&w), "R({w}) mismatch");
        }
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(rw(&[5, 3, 2, 3, 4]).commutation(4).unwrap(), rw(&[3, 5, 2, 3, 4]));
        assert_eq!(rw(&[1, 2, 1]).commutation(1).unwrap(), rw(&[1, 2, 1]));
        assert_eq!(rw(&[2, 3, 5, 2, 4]).commutation(1).unwrap(), rw(&[2, 3, 5, 4, 2]));
    }

    #[test]
    fn braid_examples() {
        assert_eq!(rw(&[5, 3, 2, 3, 4]).braid(3).unwrap(), rw(&[5, 2, 3, 2, 4]));
        assert_eq!(rw(&[2, 3, 5, 2, 4]).braid(3).unwrap(), rw(&[2, 3, 5, 2, 4]));
        assert_eq!(rw(&[3, 2, 3, 5, 4]).braid(4).unwrap(), rw(&[2, 3, 2, 5, 4]));
    }

    #[test]
    fn moves_are_involutions_preserving_the_permutation() {
        let w = Permutation::parse("153264").unwrap();
        for rho in enumerate_reduced_words(&w) {
            for j in 1..rho.len() {
                let img = rho.commutation(j).unwrap();
                assert_eq!(img.commutation(j).unwrap(), rho);
                assert_eq!(img.apply(6).unwrap(), w);
                assert_eq!(img.len(), rho.len());
            }
            for j in 2..rho.len() {
                let img = rho.braid(j).unwrap();
                assert_eq!(img.braid(j).unwrap(), rho);
                assert_eq!(img.apply(6).unwrap(), w);
            }
        }
    }

    #[test]
    fn coxeter_graph_matches_figure() {
        let w = Permutation::parse("153264").unwrap();
        let g = coxeter_graph(&w);
        assert_eq!(g.nodes.len(), 11);
        assert!(g.is_connected());
        // The thirteen labelled moves on R(153264).
        let name = |r: &ReducedWord| r.to_string();
        let mut got: Vec<(String, String, String)> = g
            .edges
            .iter()
            .map(|&(a, b, m)| {
                let (x, y) = (name(&g.nodes[a]), name(&g.nodes[b]));
                let (x, y) = if x <= y { (x, y) } else { (y, x) };
                (x, y, m.to_string())
            })
            .collect();
        got.sort();
        let mut want: Vec<(String, String, String)> = [
            ("(5,3,2,3,4)", "(3,5,2,3,4)", "c4"),
            ("(5,3,2,3,4)", "(5,2,3,2,4)", "b3"),
            ("(3,5,2,3,4)", "(3,2,5,3,4)", "c3"),
            ("(5,2,3,2,4)", "(2,5,3,2,4)", "c4"),
            ("(5,2,3,2,4)", "(5,2,3,4,2)", "c1"),
            ("(3,2,5,3,4)", "(3,2,3,5,4)", "c2"),
            ("(2,5,3,2,4)", "(2,3,5,2,4)", "c3"),
            ("(2,5,3,2,4)", "(2,5,3,4,2)", "c1"),
            ("(5,2,3,4,2)", "(2,5,3,4,2)", "c4"),
            ("(3,2,3,5,4)", "(2,3,2,5,4)", "b4"),
            ("(2,3,5,2,4)", "(2,3,2,5,4)", "c2"),
            ("(2,3,5,2,4)", "(2,3,5,4,2)", "c1"),
            ("(2,5,3,4,2)", "(2,3,5,4,2)", "c3"),
        ]
        .into_iter()
        .map(|(a, b, m)| {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            (a.to_string(), b.to_string(), m.to_string())
        })
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn coxeter_graph_trivial() {
        let g = coxeter_graph(&Permutation::identity(3));
        assert_eq!(g.nodes.len(), 1);
        assert!(g.edges.is_empty());
        assert!(g.is_connected());
    }

    #[test]
    fn coxeter_graph_connected_on_s5() {
        for w in Permutation::all(5) {
            let g = coxeter_graph(&w);
            assert!(g.is_connected(), "disconnected Coxeter graph for {w}");
            assert_eq!(g.nodes.len(), enumerate_reduced_words(&w).len());
        }
    }
}
