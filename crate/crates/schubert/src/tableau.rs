//! Young and key tableaux: enumeration, descent statistics, the Schur and
//! Demazure basis polynomials, the elementary (weak) dual equivalence
//! involutions, and the column-drop bijection between them.

use crate::compositions::{Composition, Partition, WeakComposition, WeakDescent};
use crate::poly::{fundamental_qsym, fundamental_slide_descent, Polynomial};
use crate::{Error, Letter, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A row filling with rows stored bottom-up.  Rows need not form a
/// partition shape; predicates below identify the increasing and standard
/// flavors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<Vec<Letter>>,
}

impl YoungTableau {
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Self {
        YoungTableau { rows }
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    /// Rows bottom-up; row 0 is the bottom row.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row lengths bottom-up.
    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn partition_shape(&self) -> Result<Partition> {
        Partition::new(self.shape().into_iter().filter(|&p| p > 0).collect())
            .map_err(|_| Error::BadTableau("shape is not a partition".into()))
    }

    /// Weakly decreasing row lengths bottom-up with no empty row below a
    /// nonempty one.
    pub fn is_partition_shape(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    /// Rows strictly increase left to right, columns strictly increase
    /// bottom to top, and the shape is a partition.
    pub fn is_increasing(&self) -> bool {
        if !self.is_partition_shape() {
            return false;
        }
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] >= self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// Increasing with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        if !self.is_increasing() {
            return false;
        }
        let n = self.num_entries();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &e in row {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return false;
                }
                seen[e as usize] = true;
            }
        }
        true
    }

    /// Row reading word: left to right along rows from the top.
    pub fn row_word(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.num_entries());
        for row in self.rows.iter().rev() {
            out.extend_from_slice(row);
        }
        out
    }

    /// Position of an entry as `(row, col)`, 0-based from the bottom-left.
    pub fn position_of(&self, entry: Letter) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return Some((r, c));
            }
        }
        None
    }

    fn set(&mut self, r: usize, c: usize, entry: Letter) {
        self.rows[r][c] = entry;
    }

    /// Text rendering, top row first, matching the usual figures.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for row in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: serde_json::Map<String, serde_json::Value> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .map(|(r, row)| ((r + 1).to_string(), serde_json::json!(row)))
            .collect();
        serde_json::json!({ "shape_kind": "young", "rows": rows })
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// All standard Young tableaux of the given partition shape, built by
/// placing `1..=n` into new corner cells.
pub fn enumerate_syt(lambda: &Partition) -> Vec<YoungTableau> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect(); // bottom-up
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.len()];
    fn rec(
        entry: Letter,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<Letter>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if entry as usize > n {
            out.push(YoungTableau::from_rows(rows.clone()));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(entry);
                rec(entry + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, &shape, &mut rows, &mut out);
    out
}

/// Descents of a standard Young tableau: `i` such that `i+1` lies weakly
/// left of `i`.  Returns the composition of run lengths of `1..n`.
pub fn syt_descent_composition(t: &YoungTableau) -> Result<Composition> {
    if !t.is_standard() {
        return Err(Error::BadTableau("not a standard Young tableau".into()));
    }
    let n = t.num_entries();
    let mut parts = Vec::new();
    let mut run = 0u32;
    for i in 1..=n {
        run += 1;
        let descent = if i < n {
            let (_, ci) = t.position_of(i as Letter).unwrap();
            let (_, cn) = t.position_of(i as Letter + 1).unwrap();
            cn <= ci
        } else {
            false
        };
        if descent {
            parts.push(run);
            run = 0;
        }
    }
    if run > 0 {
        parts.push(run);
    }
    if n == 0 {
        return Ok(Composition::empty());
    }
    Composition::new(parts)
}

/// The Schur polynomial `s_lambda` in `m` variables, as the fundamental
/// quasisymmetric generating function of `SYT(lambda)`.
pub fn schur(lambda: &Partition, m: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in enumerate_syt(lambda) {
        out += &fundamental_qsym(&syt_descent_composition(&t).unwrap(), m);
    }
    out
}

/// The elementary dual equivalence involution `d_i` on standard Young
/// tableaux: whichever of `i-1, i+1` lies between the other two in the row
/// reading word is swapped with `i`; if `i` is in the middle, fixed.
pub fn dual_equivalence(t: &YoungTableau, i: Letter) -> Result<YoungTableau> {
    let n = t.num_entries();
    if i < 2 || i as usize >= n {
        return Err(Error::PositionOutOfRange { position: i as usize, len: n });
    }
    let word = t.row_word();
    let pos = |e: Letter| word.iter().position(|&x| x == e).unwrap();
    let (pm, p, pp) = (pos(i - 1), pos(i), pos(i + 1));
    let between = |x: usize, a: usize, b: usize| (a.min(b) < x) && (x < a.max(b));
    let swap = if between(pp, p, pm) {
        Some((i - 1, i))
    } else if between(pm, p, pp) {
        Some((i, i + 1))
    } else {
        None
    };
    let mut out = t.clone();
    if let Some((a, b)) = swap {
        let (ra, ca) = out.position_of(a).unwrap();
        let (rb, cb) = out.position_of(b).unwrap();
        out.set(ra, ca, b);
        out.set(rb, cb, a);
    }
    Ok(out)
}

/// A key tableau: left-justified rows at positive row indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyTableau {
    rows: BTreeMap<u32, Vec<Letter>>,
}

impl KeyTableau {
    pub fn from_rows(rows: BTreeMap<u32, Vec<Letter>>) -> Self {
        KeyTableau { rows: rows.into_iter().filter(|(_, row)| !row.is_empty()).collect() }
    }

    pub fn empty() -> Self {
        KeyTableau { rows: BTreeMap::new() }
    }

    /// Occupied rows, bottom-up, keyed by row index (1-based).
    pub fn rows(&self) -> &BTreeMap<u32, Vec<Letter>> {
        &self.rows
    }

    pub fn num_entries(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    /// The weak composition of row lengths.
    pub fn shape(&self) -> WeakComposition {
        let top = self.rows.keys().next_back().copied().unwrap_or(0) as usize;
        let mut parts = vec![0u32; top];
        for (&r, row) in &self.rows {
            parts[r as usize - 1] = row.len() as u32;
        }
        WeakComposition::new(parts)
    }

    /// Row reading word: left to right along rows from the top.
    pub fn row_word(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.num_entries());
        for (_, row) in self.rows.iter().rev() {
            out.extend_from_slice(row);
        }
        out
    }

    /// Position of an entry as `(row index, col)`, col 0-based.
    pub fn position_of(&self, entry: Letter) -> Option<(u32, usize)> {
        for (&r, row) in &self.rows {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return Some((r, c));
            }
        }
        None
    }

    /// Bijective filling by `1..=n`, rows strictly decreasing, and for any
    /// `i` above `k` in a column with `i < k` there is an entry right of
    /// `k` exceeding `i`.
    pub fn is_standard_key(&self) -> bool {
        let n = self.num_entries();
        let mut seen = vec![false; n + 1];
        for row in self.rows.values() {
            for &e in row {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return false;
                }
                seen[e as usize] = true;
            }
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return false;
            }
        }
        // column condition
        for (&r1, row1) in &self.rows {
            for (&r2, row2) in &self.rows {
                if r2 <= r1 {
                    continue;
                }
                for c in 0..row1.len().min(row2.len()) {
                    let upper = row2[c];
                    let lower = row1[c];
                    if upper < lower {
                        let ok = row1[c + 1..].iter().any(|&j| j > upper);
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, r: u32, c: usize, entry: Letter) {
        *self.rows.get_mut(&r).unwrap().get_mut(c).unwrap() = entry;
    }

    /// Column reading word: columns left to right, each column bottom to top.
    pub fn column_word(&self) -> Vec<Letter> {
        let width = self.rows.values().map(|r| r.len()).max().unwrap_or(0);
        let mut out = Vec::with_capacity(self.num_entries());
        for c in 0..width {
            for (_, row) in self.rows.iter() {
                if let Some(&e) = row.get(c) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Text rendering, top row first, with row indices.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (&r, row) in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{r:>3} | {}\n", cells.join(" ")));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: serde_json::Map<String, serde_json::Value> =
            self.rows.iter().map(|(r, row)| (r.to_string(), serde_json::json!(row))).collect();
        serde_json::json!({ "shape_kind": "key", "rows": rows })
    }
}

impl fmt::Display for KeyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for KeyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|(r, row)| {
                format!("{r}:{}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            })
            .collect();
        write!(f, "{{{}}}", rows.join(" "))
    }
}

/// All standard key tableaux of the given weak-composition shape.
///
/// Entries `n..=1` are placed in decreasing order, each extending some row
/// one cell to the right, which makes rows decrease automatically.  A
/// placement at column c (0-based) fails exactly when some lower row has
/// been filled to length c+1: the entry just placed would sit above a
/// larger entry whose required right neighbour could only be smaller.
pub fn enumerate_skt(a: &WeakComposition) -> Vec<KeyTableau> {
    let rows: Vec<(u32, usize)> = (1..=a.len() as u32)
        .filter(|&r| a.part(r as usize) > 0)
        .map(|r| (r, a.part(r as usize) as usize))
        .collect();
    let n: usize = rows.iter().map(|&(_, cap)| cap).sum();
    let mut filled: Vec<Vec<Letter>> = rows.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(
        entry: usize,
        rows: &[(u32, usize)],
        filled: &mut Vec<Vec<Letter>>,
        out: &mut Vec<KeyTableau>,
    ) {
        if entry == 0 {
            let map: BTreeMap<u32, Vec<Letter>> = rows
                .iter()
                .enumerate()
                .map(|(idx, &(r, _))| (r, filled[idx].clone()))
                .collect();
            out.push(KeyTableau::from_rows(map));
            return;
        }
        for idx in 0..rows.len() {
            let c = filled[idx].len();
            if c >= rows[idx].1 {
                continue;
            }
            // column condition, incremental form
            let blocked = (0..idx).any(|lower| filled[lower].len() == c + 1);
            if blocked {
                continue;
            }
            filled[idx].push(entry as Letter);
            rec(entry - 1, rows, filled, out);
            filled[idx].pop();
        }
    }
    rec(n, &rows, &mut filled, &mut out);
    out
}

/// Weak descent composition of a standard key tableau.
///
/// `i` is a descent when `i+1` lies weakly right of `i`.  The word
/// `n..1` splits into runs at descents; each run is placed at the minimum
/// row index of its entries, clamped strictly below the run above.
pub fn skt_weak_descent_composition(t: &KeyTableau) -> Result<WeakDescent> {
    if !t.is_standard_key() {
        return Err(Error::BadTableau("not a standard key tableau".into()));
    }
    let n = t.num_entries();
    if n == 0 {
        return Ok(WeakDescent::Des(WeakComposition::empty()));
    }
    // runs of n..1, split between i+1 and i at each descent i
    let mut runs: Vec<Vec<Letter>> = vec![vec![n as Letter]];
    for i in (1..n).rev() {
        let (_, ci) = t.position_of(i as Letter).unwrap();
        let (_, cn) = t.position_of(i as Letter + 1).unwrap();
        if cn >= ci {
            runs.push(Vec::new()); // descent at i
        }
        runs.last_mut().unwrap().push(i as Letter);
    }
    // runs[0] is the top run (contains n); the hat recursion clamps each
    // later run strictly below the one before it
    let k = runs.len();
    let mut hats = vec![0i32; k];
    for j in 0..k {
        let t_min = runs[j]
            .iter()
            .map(|&e| t.position_of(e).unwrap().0 as i32)
            .min()
            .unwrap();
        hats[j] = if j == 0 { t_min } else { t_min.min(hats[j - 1] - 1) };
    }
    if hats[k - 1] <= 0 {
        return Ok(WeakDescent::Virtual);
    }
    let top = hats[0] as usize;
    let mut parts = vec![0u32; top];
    for (j, run) in runs.iter().enumerate() {
        parts[hats[j] as usize - 1] = run.len() as u32;
    }
    Ok(WeakDescent::Des(WeakComposition::new(parts)))
}

/// The Demazure character (key polynomial) as the fundamental slide
/// generating polynomial of `SKT(a)`; virtual tableaux contribute zero.
pub fn key_polynomial(a: &WeakComposition) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in enumerate_skt(a) {
        out += &fundamental_slide_descent(&skt_weak_descent_composition(&t).unwrap());
    }
    out
}

/// The unique standard key tableau with `des(T_a) = a`: fill the diagram
/// with `n..1` along rows from the top.
pub fn canonical_skt(a: &WeakComposition) -> KeyTableau {
    let mut rows = BTreeMap::new();
    let mut next = a.total() as usize;
    for r in (1..=a.len() as u32).rev() {
        let cap = a.part(r as usize) as usize;
        if cap == 0 {
            continue;
        }
        let row: Vec<Letter> = (0..cap).map(|c| (next - c) as Letter).collect();
        next -= cap;
        rows.insert(r, row);
    }
    KeyTableau::from_rows(rows)
}

/// The elementary weak dual equivalence involution on standard key
/// tableaux.  Cells `u, v, w` hold `i-1, i, i+1` in column reading order;
/// when the outer two share a row the three entries are cycled so that `i`
/// joins a neighbour, otherwise a simple swap or the identity applies.
pub fn weak_dual_equivalence(t: &KeyTableau, i: Letter) -> Result<KeyTableau> {
    let n = t.num_entries();
    if i < 2 || i as usize >= n {
        return Err(Error::PositionOutOfRange { position: i as usize, len: n });
    }
    let word = t.column_word();
    let mut cells: Vec<Letter> = word
        .iter()
        .copied()
        .filter(|&e| e == i - 1 || e == i || e == i + 1)
        .collect();
    debug_assert_eq!(cells.len(), 3);
    let (eu, ev, ew) = (cells.remove(0), cells.remove(0), cells.remove(0));
    let (pu, pv, pw) = (
        t.position_of(eu).unwrap(),
        t.position_of(ev).unwrap(),
        t.position_of(ew).unwrap(),
    );
    if pu.0 == pw.0 && pv.0 != pu.0 {
        // cycle entries among the three cells; of the two 3-cycles, keep
        // the one that is again a standard key tableau with i in the pair
        // row
        let mut candidates = Vec::new();
        for (a, b, c) in [(ew, eu, ev), (ev, ew, eu)] {
            // cell u gets a, cell v gets b, cell w gets c
            if b == i {
                continue;
            }
            let mut out = t.clone();
            out.set(pu.0, pu.1, a);
            out.set(pv.0, pv.1, b);
            out.set(pw.0, pw.1, c);
            if out.is_standard_key() {
                candidates.push(out);
            }
        }
        assert_eq!(candidates.len(), 1, "ambiguous entry cycle at i={i}");
        return Ok(candidates.remove(0));
    }
    let swap = if ev == i + 1 {
        Some((i - 1, i))
    } else if ev == i - 1 {
        Some((i, i + 1))
    } else {
        None
    };
    let mut out = t.clone();
    if let Some((a, b)) = swap {
        let (ra, ca) = out.position_of(a).unwrap();
        let (rb, cb) = out.position_of(b).unwrap();
        out.set(ra, ca, b);
        out.set(rb, cb, a);
    }
    Ok(out)
}

/// Drops the entries of a key tableau to partition shape column by column,
/// complements every entry to `n - e + 1`, and sorts columns to increase
/// bottom to top.  This is a bijection `SKT(a) -> SYT(sort(a))`.
pub fn phi(t: &KeyTableau) -> YoungTableau {
    let n = t.num_entries() as u32;
    let width = t.rows().values().map(|r| r.len()).max().unwrap_or(0);
    let mut columns: Vec<Vec<Letter>> = Vec::with_capacity(width);
    for c in 0..width {
        let mut col: Vec<Letter> = t
            .rows()
            .values()
            .filter_map(|row| row.get(c))
            .map(|&e| (n - e as u32 + 1) as Letter)
            .collect();
        col.sort_unstable();
        columns.push(col);
    }
    let height = columns.first().map(|c| c.len()).unwrap_or(0);
    let rows: Vec<Vec<Letter>> = (0..height)
        .map(|r| columns.iter().filter_map(|col| col.get(r)).copied().collect())
        .collect();
    YoungTableau::from_rows(rows)
}
