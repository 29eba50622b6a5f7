//! Integer-sequence index sets: weak compositions, compositions, partitions.

use crate::{Error, Result};
use std::fmt;

/// A weak composition: finitely many nonnegative parts.
///
/// Values are kept in canonical form with trailing zeros stripped, so
/// `(0,3,2,0,0)` and `(0,3,2)` are the same value.  Dropping trailing zeros
/// changes neither the slide polynomial nor the key tableaux indexed by the
/// composition, and makes multiset comparisons unambiguous.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition(parts)
    }

    pub fn empty() -> Self {
        WeakComposition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 1-based position `i`; zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Removes the zero parts, preserving order.
    pub fn flat(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Sorts into weakly decreasing order, dropping zeros.
    pub fn sort_decreasing(&self) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Prepends `m` zero parts.
    pub fn prepend_zeros(&self, m: usize) -> Self {
        let mut parts = vec![0u32; m];
        parts.extend_from_slice(&self.0);
        WeakComposition::new(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(WeakComposition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<_>>()?;
        Ok(WeakComposition::new(parts))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A weak descent composition, which is either an honest weak composition
/// or the distinguished virtual value, written `()` vs `virtual`.  Virtual
/// indices contribute the zero slide polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WeakDescent {
    Virtual,
    Des(WeakComposition),
}

impl WeakDescent {
    pub fn is_virtual(&self) -> bool {
        matches!(self, WeakDescent::Virtual)
    }

    pub fn composition(&self) -> Option<&WeakComposition> {
        match self {
            WeakDescent::Virtual => None,
            WeakDescent::Des(a) => Some(a),
        }
    }
}

impl fmt::Display for WeakDescent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeakDescent::Virtual => write!(f, "virtual"),
            WeakDescent::Des(a) => write!(f, "{a}"),
        }
    }
}

/// A composition: finitely many strictly positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadSequence(format!("zero part in composition {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<_>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A partition: weakly decreasing strictly positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadSequence(format!("zero part in partition {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadSequence(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition(p.0)
    }
}

/// `beta` refines `alpha` when the parts of `beta` can be grouped into
/// consecutive blocks summing to the parts of `alpha`.  Equivalently the
/// prefix sums of `alpha` all occur among the prefix sums of `beta`.
pub fn refines(beta: &Composition, alpha: &Composition) -> bool {
    if beta.total() != alpha.total() {
        return false;
    }
    let mut beta_sums = std::collections::BTreeSet::new();
    let mut acc = 0u32;
    for &b in beta.parts() {
        acc += b;
        beta_sums.insert(acc);
    }
    let mut acc = 0u32;
    alpha.parts().iter().all(|&a| {
        acc += a;
        beta_sums.contains(&acc)
    })
}

/// Prefix-sum dominance `b >= a` for weak compositions of equal length.
/// Lengths are compared before trailing-zero stripping is taken into
/// account, so pass both operands at their stated lengths.
pub fn dominates(b: &[u32], a: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: b.len(), right: a.len() });
    }
    Ok(dominates_padded(b, a))
}

/// Prefix-sum dominance with implicit trailing zeros; valid whenever both
/// totals agree, which holds for descent data of words of equal length.
pub fn dominates_padded(b: &[u32], a: &[u32]) -> bool {
    let mut sb = 0u32;
    let mut sa = 0u32;
    for k in 0..a.len().max(b.len()) {
        sb += b.get(k).copied().unwrap_or(0);
        sa += a.get(k).copied().unwrap_or(0);
        if sb < sa {
            return false;
        }
    }
    true
}
