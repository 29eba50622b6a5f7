//! Exact sparse integer polynomials and the basis polynomials built on
//! them: fundamental quasisymmetric functions, fundamental slide
//! polynomials, and the divided-difference recursion for Schubert
//! polynomials used as an independent oracle.

use crate::compositions::{dominates_padded, refines, Composition, WeakComposition, WeakDescent};
use crate::perm::Permutation;
use crate::Letter;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A polynomial in variables `x1, x2, ...` with integer coefficients.
///
/// Terms map exponent vectors to nonzero coefficients.  Exponent vectors
/// are stored with trailing zeros trimmed, so a polynomial is a canonical
/// element of the ring in countably many variables and equality is plain
/// term-map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

fn trim(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Polynomial::default();
        p.add_term(vec![], BigInt::from(c));
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exps = vec![0u32; i];
        exps[i - 1] = 1;
        let mut p = Polynomial::default();
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn monomial(exps: Vec<u32>, coeff: i64) -> Self {
        let mut p = Polynomial::default();
        p.add_term(exps, BigInt::from(coeff));
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(trim(exps)) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Highest variable index used, i.e. the number of variables needed to
    /// write the polynomial down.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Sets every variable beyond `x_m` to zero.
    pub fn truncate(&self, m: usize) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(e, _)| e.len() <= m).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// The monomial support, padded to a common length.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        let n = self.num_vars();
        self.terms
            .keys()
            .map(|e| {
                let mut v = e.clone();
                v.resize(n, 0);
                v
            })
            .collect()
    }

    /// The lexicographically largest exponent vector with its coefficient.
    pub fn lex_leading(&self) -> Option<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| cmp_lex(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Exchanges the variables `x_i` and `x_{i+1}` (1-based `i`).
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::default();
        for (exps, coeff) in &self.terms {
            let mut e = exps.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            e.swap(i - 1, i);
            out.add_term(e, coeff.clone());
        }
        out
    }

    /// Renders terms in reverse-lexicographic exponent order.
    pub fn to_monomial_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_lex(b, a));
        let mut s = String::new();
        for (idx, key) in keys.iter().enumerate() {
            let coeff = &self.terms[*key];
            if idx == 0 {
                if coeff.is_negative() {
                    s.push_str("-");
                }
            } else if coeff.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mag = coeff.abs();
            let vars: Vec<String> = key
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                s.push_str(&vars.join("*"));
            }
        }
        s
    }

    /// JSON value: a list of `{exponents, coeff}` sorted by
    /// reverse-lexicographic exponent order, exponents padded to `num_vars`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.num_vars();
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_lex(b, a));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|key| {
                    let mut exps = key.clone();
                    exps.resize(n, 0);
                    let coeff = &self.terms[key];
                    let coeff_json = match i64::try_from(coeff.clone()) {
                        Ok(v) => serde_json::json!(v),
                        Err(_) => serde_json::json!(coeff.to_string()),
                    };
                    serde_json::json!({ "exponents": exps, "coeff": coeff_json })
                })
                .collect(),
        )
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial_string())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial_string())
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        &Polynomial::zero() - self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = ea.clone();
                if e.len() < eb.len() {
                    e.resize(eb.len(), 0);
                }
                for (i, &p) in eb.iter().enumerate() {
                    e[i] += p;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Enumerates the weakly increasing variable assignments defining the
/// fundamental quasisymmetric function: one variable per unit of `alpha`,
/// strict increase across block boundaries, variables bounded by `m`.
fn for_each_ribbon_assignment<F: FnMut(&[u32])>(alpha: &Composition, m: usize, f: &mut F) {
    let n: usize = alpha.total() as usize;
    if n == 0 {
        f(&[]);
        return;
    }
    if m == 0 {
        return;
    }
    // strict[j] = variable must strictly increase between unit j and j+1
    let mut strict = vec![false; n];
    let mut acc = 0usize;
    for &p in alpha.parts() {
        acc += p as usize;
        if acc < n {
            strict[acc - 1] = true;
        }
    }
    let mut hist = vec![0u32; m];
    fn dfs<F: FnMut(&[u32])>(
        j: usize,
        n: usize,
        v: usize,
        m: usize,
        strict: &[bool],
        hist: &mut Vec<u32>,
        f: &mut F,
    ) {
        if j == n {
            f(hist);
            return;
        }
        for var in v..=m {
            hist[var - 1] += 1;
            let next_min = if strict[j] { var + 1 } else { var };
            if next_min <= m || j + 1 == n {
                dfs(j + 1, n, next_min, m, strict, hist, f);
            }
            hist[var - 1] -= 1;
        }
    }
    dfs(0, n, 1, m, &strict, &mut hist, f);
}

/// The fundamental quasisymmetric function `F_alpha` in `m` variables.
pub fn fundamental_qsym(alpha: &Composition, m: usize) -> Polynomial {
    let mut out = Polynomial::default();
    for_each_ribbon_assignment(alpha, m, &mut |hist| {
        out.add_term(hist.to_vec(), BigInt::one());
    });
    out
}

/// The fundamental slide polynomial: monomials `x^b` with `flat(b)`
/// refining `flat(a)` and the prefix sums of `b` dominating those of `a`.
pub fn fundamental_slide(a: &WeakComposition) -> Polynomial {
    let alpha = a.flat();
    let m = a.len();
    let mut out = Polynomial::default();
    for_each_ribbon_assignment(&alpha, m, &mut |hist| {
        if dominates_padded(hist, a.parts()) {
            out.add_term(hist.to_vec(), BigInt::one());
        }
    });
    out
}

/// Slide polynomial of a weak descent composition; the virtual value
/// contributes zero.
pub fn fundamental_slide_descent(d: &WeakDescent) -> Polynomial {
    match d {
        WeakDescent::Virtual => Polynomial::zero(),
        WeakDescent::Des(a) => fundamental_slide(a),
    }
}

/// Re-export of the composition refinement test, the support condition in
/// both basis expansions.
pub fn refines_composition(beta: &Composition, alpha: &Composition) -> bool {
    refines(beta, alpha)
}

/// The divided difference `(f - s_i f) / (x_i - x_{i+1})`, computed exactly
/// term by term.
pub fn divided_difference(f: &Polynomial, i: usize) -> Polynomial {
    assert!(i >= 1);
    let mut out = Polynomial::default();
    for (exps, coeff) in f.terms() {
        let p = exps.get(i - 1).copied().unwrap_or(0);
        let q = exps.get(i).copied().unwrap_or(0);
        if p == q {
            continue;
        }
        let mut base = exps.clone();
        if base.len() < i + 1 {
            base.resize(i + 1, 0);
        }
        if p > q {
            for t in 0..(p - q) {
                base[i - 1] = q + t;
                base[i] = p - 1 - t;
                out.add_term(base.clone(), coeff.clone());
            }
        } else {
            for t in 0..(q - p) {
                base[i - 1] = p + t;
                base[i] = q - 1 - t;
                out.add_term(base.clone(), -coeff.clone());
            }
        }
    }
    out
}

/// The staircase monomial `x1^{n-1} x2^{n-2} ... x_{n-1}`, the Schubert
/// polynomial of the longest element.
fn staircase(n: usize) -> Polynomial {
    let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let mut p = Polynomial::default();
    p.add_term(exps, BigInt::one());
    p
}

/// Classical Schubert polynomial by downward divided differences from the
/// staircase monomial.  Used only to cross-check the reduced-word model.
pub fn schubert_oracle(w: &Permutation) -> Polynomial {
    let n = w.rank();
    let mut cur = w.clone();
    let mut ops: Vec<usize> = Vec::new();
    // climb to the longest element, recording the ascents used
    loop {
        let ol = cur.one_line();
        let Some(i) = (0..n - 1).find(|&i| ol[i] < ol[i + 1]) else {
            break;
        };
        ops.push(i + 1);
        cur = cur.swap_positions(i as Letter + 1);
    }
    let mut poly = staircase(n);
    for &i in ops.iter().rev() {
        poly = divided_difference(&poly, i);
    }
    poly
}

/// Schubert polynomials of all of S_n at once, sharing the recursion.
pub fn schubert_oracle_table(n: usize) -> BTreeMap<Permutation, Polynomial> {
    let mut by_length: BTreeMap<usize, Vec<Permutation>> = BTreeMap::new();
    for w in Permutation::all(n) {
        by_length.entry(w.length()).or_default().push(w);
    }
    let mut table: BTreeMap<Permutation, Polynomial> = BTreeMap::new();
    table.insert(Permutation::longest(n), staircase(n));
    let max_len = n * (n - 1) / 2;
    for len in (0..max_len).rev() {
        for w in by_length.get(&len).into_iter().flatten() {
            let ol = w.one_line();
            let i = (0..n - 1).find(|&i| ol[i] < ol[i + 1]).expect("not longest");
            let parent = w.swap_positions(i as Letter + 1);
            let poly = divided_difference(&table[&parent], i + 1);
            table.insert(w.clone(), poly);
        }
    }
    table
}
