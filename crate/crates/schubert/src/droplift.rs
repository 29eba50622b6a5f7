//! Row-pair rewriting of reduced words: the drop maps that canonicalize a
//! word to the unique class member whose descent tableau is an increasing
//! Young tableau, and the lift maps that raise that tableau to the unique
//! Yamanouchi member indexing the Demazure expansion.
//!
//! Words are manipulated as row stacks (rows bottom-up).  The run
//! decomposition of a word gives its starting stack; rewriting tracks rows
//! explicitly because intermediate stacks need not be run decompositions
//! of their reading words.

use crate::ck::ck_class;
use crate::compositions::{dominates_padded, WeakDescent};
use crate::descents::{run_decomposition, weak_descent_composition, weak_descent_tableau};
use crate::tableau::{KeyTableau, YoungTableau};
use crate::word::ReducedWord;
use crate::{Error, Letter, Result};

/// Rows of a tableau, bottom-up.  Rows may be transiently empty while a
/// rewriting sequence is in flight.
pub type RowStack = Vec<Vec<Letter>>;

/// The factorization behind a drop move: paired equal-length blocks of the
/// two rows, the unsupported letters of the upper row between them, and
/// the lower row's right overhang.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropFactorization {
    /// `tau = tau_blocks[0] x_1 tau_blocks[1] ... x_k tau_blocks[k]`
    pub tau_blocks: Vec<Vec<Letter>>,
    /// The unsupported cells `x_1..x_k` of the upper row.
    pub unsupported: Vec<Letter>,
    /// `sigma = sigma_blocks[0] ... sigma_blocks[k]`, paired under the tau
    /// blocks, followed by the overhang `sigma_tail`.
    pub sigma_blocks: Vec<Vec<Letter>>,
    pub sigma_tail: Vec<Letter>,
}

fn is_strictly_increasing(word: &[Letter]) -> bool {
    word.windows(2).all(|w| w[0] < w[1])
}

fn check_pair(tau: &[Letter], sigma: &[Letter]) -> Result<()> {
    if !is_strictly_increasing(tau) || !is_strictly_increasing(sigma) {
        return Err(Error::NotReduced(format!("rows not increasing: {tau:?} / {sigma:?}")));
    }
    let mut word: Vec<Letter> = tau.to_vec();
    word.extend_from_slice(sigma);
    let n = word.iter().map(|&x| x as usize + 1).max().unwrap_or(1);
    ReducedWord::new(word, n).map(|_| ())
}

/// Aligns `sigma` below `tau`, scanning left to right and sliding `sigma`
/// right past every non-strict column.  Total: every pair of increasing
/// words with reduced concatenation factors this way.
pub fn drop_align(tau: &[Letter], sigma: &[Letter]) -> Result<DropFactorization> {
    check_pair(tau, sigma)?;
    let mut fact = DropFactorization {
        tau_blocks: Vec::new(),
        unsupported: Vec::new(),
        sigma_blocks: Vec::new(),
        sigma_tail: Vec::new(),
    };
    let (mut t, mut s) = (tau, sigma);
    loop {
        let m = t.len().min(s.len());
        match (0..m).find(|&j| t[j] <= s[j]) {
            Some(j1) => {
                fact.tau_blocks.push(t[..j1].to_vec());
                fact.sigma_blocks.push(s[..j1].to_vec());
                fact.unsupported.push(t[j1]);
                t = &t[j1 + 1..];
                s = &s[j1..];
            }
            None => {
                if t.len() > s.len() {
                    // trailing unsupported cells of tau
                    fact.tau_blocks.push(t[..m].to_vec());
                    fact.sigma_blocks.push(s[..m].to_vec());
                    for &x in &t[m..] {
                        fact.unsupported.push(x);
                        fact.tau_blocks.push(Vec::new());
                        fact.sigma_blocks.push(Vec::new());
                    }
                    // merge: the paired prefix belongs before the first x
                    // added above, so nothing else to do
                    fact.sigma_tail = Vec::new();
                } else {
                    fact.tau_blocks.push(t.to_vec());
                    fact.sigma_blocks.push(s[..t.len()].to_vec());
                    fact.sigma_tail = s[t.len()..].to_vec();
                }
                return Ok(fact);
            }
        }
    }
}

/// The length of the staircase prefix `x, x+1, x+2, ...` shared by the
/// paired blocks after an unsupported cell; these entries shift by one
/// when the cell drops past them (or lifts back).
fn staircase_len(x: Letter, tau_block: &[Letter], sigma_block: &[Letter], lifted: bool) -> usize {
    // in a drop, sigma runs x, x+1, ... and tau runs x+1, x+2, ...;
    // in a lift both rows run x+1, x+2, ...
    let sigma_base = if lifted { x + 1 } else { x };
    if sigma_block.first() != Some(&sigma_base) {
        return 0;
    }
    let mut b = 0;
    while b < sigma_block.len()
        && b < tau_block.len()
        && sigma_block[b] == sigma_base + b as Letter
        && tau_block[b] == x + 1 + b as Letter
    {
        b += 1;
    }
    b
}

/// Drops the unsupported cells of `tau` down to `sigma`, shifting
/// staircase prefixes up by one, and returns the new `(tau, sigma)` rows.
/// The reading word of the result is Coxeter-Knuth equivalent to `tau
/// sigma`.
pub fn drop_pair(tau: &[Letter], sigma: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let fact = drop_align(tau, sigma)?;
    let new_tau: Vec<Letter> = fact.tau_blocks.concat();
    let mut new_sigma: Vec<Letter> = fact.sigma_blocks[0].clone();
    for (j, &x) in fact.unsupported.iter().enumerate() {
        let tb = &fact.tau_blocks[j + 1];
        let sb = &fact.sigma_blocks[j + 1];
        new_sigma.push(x);
        let b = if tb.first() == Some(&(x + 1)) { staircase_len(x, tb, sb, false) } else { 0 };
        for (i, &e) in sb.iter().enumerate() {
            new_sigma.push(if i < b { e + 1 } else { e });
        }
    }
    new_sigma.extend_from_slice(&fact.sigma_tail);
    Ok((new_tau, new_sigma))
}

/// The factorization behind a lift move: the upper row's left overhang,
/// then equal-length paired blocks with the unblocked letters of the lower
/// row between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftFactorization {
    /// `tau = tau_head tau_blocks[0] ... tau_blocks[k]`
    pub tau_head: Vec<Letter>,
    pub tau_blocks: Vec<Vec<Letter>>,
    /// The unblocked cells `x_1..x_k` of the lower row.
    pub unblocked: Vec<Letter>,
    /// `sigma = sigma_blocks[0] x_1 sigma_blocks[1] ... x_k sigma_blocks[k]`
    pub sigma_blocks: Vec<Vec<Letter>>,
}

/// Aligns `tau` above `sigma`, scanning right to left and sliding `tau`
/// left past every column where it fails to weakly dominate.  Partial: the
/// factorization exists only when the remaining prefix of `tau` covers the
/// remaining prefix of `sigma`; otherwise the lift acts as the identity.
pub fn lift_align(tau: &[Letter], sigma: &[Letter]) -> Result<Option<LiftFactorization>> {
    check_pair(tau, sigma)?;
    // collected right-to-left, reversed at the end
    let mut rev_tau_blocks: Vec<Vec<Letter>> = Vec::new();
    let mut rev_sigma_blocks: Vec<Vec<Letter>> = Vec::new();
    let mut rev_xs: Vec<Letter> = Vec::new();
    let (mut t, mut s) = (tau, sigma);
    loop {
        let m = t.len().min(s.len());
        match (1..=m).find(|&i| t[t.len() - i] < s[s.len() - i]) {
            Some(i1) => {
                rev_tau_blocks.push(t[t.len() - (i1 - 1)..].to_vec());
                rev_sigma_blocks.push(s[s.len() - (i1 - 1)..].to_vec());
                rev_xs.push(s[s.len() - i1]);
                t = &t[..t.len() - (i1 - 1)];
                s = &s[..s.len() - i1];
            }
            None => {
                if t.len() < s.len() {
                    return Ok(None);
                }
                let head = t.len() - s.len();
                rev_tau_blocks.push(t[head..].to_vec());
                rev_sigma_blocks.push(s.to_vec());
                rev_tau_blocks.reverse();
                rev_sigma_blocks.reverse();
                rev_xs.reverse();
                return Ok(Some(LiftFactorization {
                    tau_head: t[..head].to_vec(),
                    tau_blocks: rev_tau_blocks,
                    unblocked: rev_xs,
                    sigma_blocks: rev_sigma_blocks,
                }));
            }
        }
    }
}

/// Lifts the unblocked cells of `sigma` up to `tau`, shifting staircase
/// prefixes down by one.  Identity when no factorization exists.
pub fn lift_pair(tau: &[Letter], sigma: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let Some(fact) = lift_align(tau, sigma)? else {
        return Ok((tau.to_vec(), sigma.to_vec()));
    };
    let mut new_tau = fact.tau_head.clone();
    new_tau.extend_from_slice(&fact.tau_blocks[0]);
    let mut new_sigma = fact.sigma_blocks[0].clone();
    for (j, &x) in fact.unblocked.iter().enumerate() {
        let tb = &fact.tau_blocks[j + 1];
        let sb = &fact.sigma_blocks[j + 1];
        new_tau.push(x);
        new_tau.extend_from_slice(tb);
        let b = staircase_len(x, tb, sb, true);
        for (i, &e) in sb.iter().enumerate() {
            new_sigma.push(if i < b { e - 1 } else { e });
        }
    }
    Ok((new_tau, new_sigma))
}

/// Applies a drop to rows `i`, `i+1` of the stack (1-based from the
/// bottom).  The replaced upper row may become empty.
pub fn drop_row(stack: &RowStack, i: usize) -> Result<RowStack> {
    if i == 0 || i >= stack.len() {
        return Err(Error::PositionOutOfRange { position: i, len: stack.len() });
    }
    let (new_tau, new_sigma) = drop_pair(&stack[i], &stack[i - 1])?;
    let mut out = stack.clone();
    out[i] = new_tau;
    out[i - 1] = new_sigma;
    Ok(out)
}

/// Applies a lift to rows `i`, `i+1` of the stack (1-based from the
/// bottom).
pub fn lift_row(stack: &RowStack, i: usize) -> Result<RowStack> {
    if i == 0 || i >= stack.len() {
        return Err(Error::PositionOutOfRange { position: i, len: stack.len() });
    }
    let (new_tau, new_sigma) = lift_pair(&stack[i], &stack[i - 1])?;
    let mut out = stack.clone();
    out[i] = new_tau;
    out[i - 1] = new_sigma;
    Ok(out)
}

fn strip_empty_top(stack: &mut RowStack) {
    while stack.last().map(|r| r.is_empty()).unwrap_or(false) {
        stack.pop();
    }
}

/// Reading word of a stack: rows top to bottom, left to right.
pub fn stack_word(stack: &RowStack) -> Vec<Letter> {
    let mut out = Vec::new();
    for row in stack.iter().rev() {
        out.extend_from_slice(row);
    }
    out
}

/// The run-decomposition stack of a word, the starting point for drop and
/// lift chains.
pub fn word_stack(rho: &ReducedWord) -> RowStack {
    run_decomposition(rho).rows_bottom_up()
}

/// One drop step on the word's run decomposition.
pub fn drop_i(rho: &ReducedWord, i: usize) -> Result<ReducedWord> {
    let mut stack = drop_row(&word_stack(rho), i)?;
    strip_empty_top(&mut stack);
    Ok(ReducedWord::from_letters_unchecked(stack_word(&stack)))
}

/// One lift step on the word's run decomposition.
pub fn lift_i(rho: &ReducedWord, i: usize) -> Result<ReducedWord> {
    let mut stack = lift_row(&word_stack(rho), i)?;
    strip_empty_top(&mut stack);
    Ok(ReducedWord::from_letters_unchecked(stack_word(&stack)))
}

/// Iterates drop moves until the stack is an increasing Young tableau.
/// The result is independent of the order in which rows are consolidated.
pub fn drop_full_stack(stack: &RowStack) -> RowStack {
    let mut cur = stack.clone();
    'outer: loop {
        for i in 1..cur.len() {
            let next = drop_row(&cur, i).expect("drop preserves reducedness");
            if next != cur {
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    strip_empty_top(&mut cur);
    cur
}

/// The unique Coxeter-Knuth equivalent word whose descent tableau is an
/// increasing Young tableau of partition shape.
pub fn drop_full(rho: &ReducedWord) -> ReducedWord {
    ReducedWord::from_letters_unchecked(stack_word(&drop_full_stack(&word_stack(rho))))
}

/// The descent tableau of `drop_full(rho)`.
pub fn drop_full_tableau(rho: &ReducedWord) -> YoungTableau {
    YoungTableau::from_rows(drop_full_stack(&word_stack(rho)))
}

/// Whether the sequence `lift_j ... lift_i` (ascending) acts faithfully,
/// i.e. every step changes its input.
fn lift_seq_faithful(stack: &RowStack, i: usize, j: usize) -> Option<RowStack> {
    let mut cur = stack.clone();
    for t in i..=j {
        let next = lift_row(&cur, t).ok()?;
        if next == cur {
            return None;
        }
        cur = next;
    }
    Some(cur)
}

/// The canonical lifting path: repeatedly apply the faithful lifting
/// sequence with maximal top row, breaking ties by the lowest starting
/// row, until every lift fixes the stack.
pub fn lift_canonical_stack(stack: &RowStack) -> RowStack {
    let mut cur = stack.clone();
    loop {
        let rows = cur.len();
        let mut applied = None;
        'search: for j in (1..rows).rev() {
            for i in 1..=j {
                if let Some(next) = lift_seq_faithful(&cur, i, j) {
                    applied = Some(next);
                    break 'search;
                }
            }
        }
        match applied {
            Some(next) => cur = next,
            None => break,
        }
    }
    cur
}

/// Canonical lift of a word whose descent tableau is an increasing Young
/// tableau; the output is the Yamanouchi representative of its class.
pub fn lift_canonical(rho: &ReducedWord) -> Result<ReducedWord> {
    let stack = word_stack(rho);
    if !YoungTableau::from_rows(stack.clone()).is_increasing() {
        return Err(Error::BadTableau(format!(
            "descent tableau of {rho} is not an increasing Young tableau"
        )));
    }
    Ok(ReducedWord::from_letters_unchecked(stack_word(&lift_canonical_stack(&stack))))
}

/// The Yamanouchi word of the Coxeter-Knuth class of `rho`.
pub fn yamanouchi_representative(rho: &ReducedWord) -> ReducedWord {
    let stack = drop_full_stack(&word_stack(rho));
    ReducedWord::from_letters_unchecked(stack_word(&lift_canonical_stack(&stack)))
}

/// Constructive Yamanouchi test: `rho` equals the canonical lift of its
/// drop.  Agrees with [`is_yamanouchi_by_class`] (exhaustively tested).
pub fn is_yamanouchi(rho: &ReducedWord) -> bool {
    !weak_descent_composition(rho).is_virtual() && yamanouchi_representative(rho) == *rho
}

/// Definitional Yamanouchi test: non-virtual and dominance-minimal among
/// the non-virtual members of its Coxeter-Knuth class.  Exponential; kept
/// as the oracle for the constructive test.
pub fn is_yamanouchi_by_class(rho: &ReducedWord) -> bool {
    let WeakDescent::Des(mine) = weak_descent_composition(rho) else {
        return false;
    };
    ck_class(rho).iter().all(|sigma| match weak_descent_composition(sigma) {
        WeakDescent::Virtual => true,
        WeakDescent::Des(other) => dominates_padded(other.parts(), mine.parts()),
    })
}

/// All Yamanouchi reduced words of `w`, one per Coxeter-Knuth class.
pub fn yamanouchi_words(w: &crate::perm::Permutation) -> Vec<ReducedWord> {
    crate::word::enumerate_reduced_words(w)
        .into_iter()
        .filter(is_yamanouchi)
        .collect()
}

/// The Yamanouchi key tableau of a Yamanouchi word: its runs placed at
/// their weak-descent rows.
pub fn yamanouchi_key_tableau(rho: &ReducedWord) -> Result<KeyTableau> {
    let tab = weak_descent_tableau(rho);
    if tab.is_virtual() {
        return Err(Error::BadTableau(format!("{rho} is virtual")));
    }
    let rows = tab.rows.iter().map(|(&r, row)| (r as u32, row.clone())).collect();
    Ok(KeyTableau::from_rows(rows))
}

/// A reachability graph of stacks under drop or lift moves, with edges
/// labelled by the acting row index.
pub struct StackGraph {
    pub nodes: Vec<RowStack>,
    pub edges: Vec<(usize, usize, usize)>,
}

fn stack_graph<F: Fn(&RowStack, usize) -> Option<RowStack>>(start: &RowStack, step: F) -> StackGraph {
    let mut nodes: Vec<RowStack> = vec![start.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(start.clone(), 0usize);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        let cur = nodes[v].clone();
        for i in 1..cur.len() {
            if let Some(next) = step(&cur, i) {
                if next != cur {
                    let u = *index.entry(next.clone()).or_insert_with(|| {
                        nodes.push(next.clone());
                        frontier.push(nodes.len() - 1);
                        nodes.len() - 1
                    });
                    edges.push((v, u, i));
                }
            }
        }
    }
    edges.sort();
    edges.dedup();
    StackGraph { nodes, edges }
}

/// Every stack reachable by nontrivial drops, edge-labelled; terminal
/// nodes are increasing Young tableaux.
pub fn drop_graph(start: &RowStack) -> StackGraph {
    stack_graph(start, |s, i| {
        drop_row(s, i).ok().map(|mut next| {
            strip_empty_top(&mut next);
            next
        })
    })
}

/// Every stack reachable by faithful lifts, edge-labelled.
pub fn lift_graph(start: &RowStack) -> StackGraph {
    stack_graph(start, |s, i| lift_row(s, i).ok())
}
