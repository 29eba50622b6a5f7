//! Exact combinatorics of reduced words for the symmetric group.
//!
//! The crate computes the two classical generating functions attached to the
//! set `R(w)` of reduced words of a permutation — the Stanley symmetric
//! function (fundamental quasisymmetric basis) and the Schubert polynomial
//! (fundamental slide basis) — together with their positive expansions into
//! Schur functions and Demazure characters.  The positive expansions are
//! produced by canonical representatives of Coxeter–Knuth equivalence
//! classes: the `drop` map rewrites any reduced word to the unique class
//! member whose descent tableau is an increasing Young tableau, and the
//! canonical `lift` path raises that tableau to the unique Yamanouchi key
//! tableau of the class.  Both Edelman–Greene insertion and its key-shaped
//! generalization (weak insertion) are implemented with recording tableaux,
//! and every identity is checkable by exhaustive enumeration at small rank
//! through the `verify` machinery in [`cli`].
//!
//! All arithmetic is exact: polynomials are sparse maps from exponent
//! vectors to arbitrary-precision integers.

pub mod ck;
pub mod cli;
pub mod compositions;
pub mod descents;
pub mod droplift;
pub mod expansions;
pub mod insertion;
pub mod perm;
pub mod poly;
pub mod tableau;
pub mod word;

pub use compositions::{Composition, Partition, WeakComposition, WeakDescent};
pub use perm::Permutation;
pub use poly::Polynomial;
pub use tableau::{KeyTableau, YoungTableau};
pub use word::ReducedWord;

/// A simple-transposition index.  Letters are 1-based: letter `i` is the
/// transposition swapping `i` and `i+1`.
pub type Letter = u8;

/// Errors surfaced by the checked public constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// One-line notation is not a bijection of 1..=n.
    NotAPermutation(String),
    /// A word does not multiply out to a permutation of the stated length.
    NotReduced(String),
    /// A letter exceeds the allowed alphabet 1..n.
    LetterOutOfRange { letter: Letter, rank: usize },
    /// A paper-convention position index is outside its valid range.
    PositionOutOfRange { position: usize, len: usize },
    /// An integer-sequence invariant was violated (composition/partition).
    BadSequence(String),
    /// Two weak compositions of different lengths were compared.
    LengthMismatch { left: usize, right: usize },
    /// A tableau operation received input outside its precondition.
    BadTableau(String),
    /// Malformed command-line input.
    Parse(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::NotAPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::NotReduced(s) => write!(f, "not a reduced word: {s}"),
            Error::LetterOutOfRange { letter, rank } => {
                write!(f, "letter {letter} out of range for rank {rank}")
            }
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for word of length {len}")
            }
            Error::BadSequence(s) => write!(f, "bad sequence: {s}"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::BadTableau(s) => write!(f, "bad tableau: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
