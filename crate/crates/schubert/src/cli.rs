//! Command-line surface: word enumeration, class listing, drop/lift and
//! insertion traces, basis expansions, and the exhaustive verifier.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage error.

use crate::compositions::{Partition, WeakComposition, WeakDescent};
use crate::descents::weak_descent_composition;
use crate::droplift::{
    drop_row, lift_canonical_stack, lift_row, stack_word, word_stack, RowStack,
};
use crate::expansions::{
    demazure_expansion, fundamental_expansion, schubert, schur_expansion, slide_expansion,
    stanley_function,
};
use crate::insertion::{eg_trace, weak_trace};
use crate::perm::Permutation;
use crate::poly::{schubert_oracle_table, Polynomial};
use crate::tableau::{key_polynomial, schur, YoungTableau};
use crate::word::{enumerate_reduced_words, ReducedWord};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::io::Write;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Exact combinatorics of reduced words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SchubertBasis {
    Monomial,
    Slide,
    Demazure,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StanleyBasis {
    Fundamental,
    Schur,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the reduced words of a permutation.
    Words { perm: String },
    /// Partition the reduced words into Coxeter-Knuth classes with their
    /// Schur and Demazure labels.
    Classes { perm: String },
    /// Print the canonical drop chain from the descent tableau of a word
    /// to its increasing Young tableau.
    Drop { word: String },
    /// Print the canonical lifting chain from an increasing Young tableau
    /// to its Yamanouchi key tableau.
    Lift { word: String },
    /// Run Edelman-Greene insertion (or weak insertion) on a word.
    Insert {
        word: String,
        /// Use the key-shaped weak insertion.
        #[arg(long)]
        weak: bool,
        /// Print every intermediate insertion/recording pair.
        #[arg(long)]
        trace: bool,
    },
    /// The Schubert polynomial of a permutation in a chosen basis.
    Schubert {
        perm: String,
        #[arg(long, value_enum, default_value_t = SchubertBasis::Monomial)]
        basis: SchubertBasis,
    },
    /// The Stanley symmetric function of a permutation, truncated.
    Stanley {
        perm: String,
        #[arg(long, value_enum, default_value_t = StanleyBasis::Fundamental)]
        basis: StanleyBasis,
        /// Number of variables; defaults to length(w) + 1.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// The Demazure character of a weak composition.
    Demazure { comp: String },
    /// Exhaustively verify the expansion identities at small rank.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Comma-separated subset of A (Schur), B (Demazure), C (oracle).
        #[arg(long, default_value = "A,B,C")]
        identities: String,
        /// Worker threads for the per-permutation checks.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(out, "{e}");
            return 2;
        }
    };
    let format = cli.format;
    let result = match cli.cmd {
        Cmd::Words { perm } => cmd_words(&perm, format, out),
        Cmd::Classes { perm } => cmd_classes(&perm, format, out),
        Cmd::Drop { word } => cmd_drop(&word, format, out),
        Cmd::Lift { word } => cmd_lift(&word, format, out),
        Cmd::Insert { word, weak, trace } => cmd_insert(&word, weak, trace, format, out),
        Cmd::Schubert { perm, basis } => cmd_schubert(&perm, basis, format, out),
        Cmd::Stanley { perm, basis, vars } => cmd_stanley(&perm, basis, vars, format, out),
        Cmd::Demazure { comp } => cmd_demazure(&comp, format, out),
        Cmd::Verify { max_rank, identities, jobs } => {
            return cmd_verify(max_rank, &identities, jobs, format, out);
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn parse_word(s: &str) -> crate::Result<ReducedWord> {
    ReducedWord::parse(s)
}

fn render_stack(stack: &RowStack, format: Format) -> String {
    match format {
        Format::Latex => {
            let rows: Vec<String> = stack
                .iter()
                .rev()
                .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" & "))
                .collect();
            format!("\\tableau{{{}}}", rows.join(" \\\\ "))
        }
        _ => YoungTableau::from_rows(stack.clone()).render(),
    }
}

fn stack_json(stack: &RowStack) -> serde_json::Value {
    YoungTableau::from_rows(stack.clone()).to_json()
}

fn cmd_words<W: Write>(perm: &str, format: Format, out: &mut W) -> crate::Result<()> {
    let w = Permutation::parse(perm)?;
    let words = enumerate_reduced_words(&w);
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "permutation": w.to_string(),
                "count": words.len(),
                "words": words.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            for r in &words {
                let _ = writeln!(out, "{r}");
            }
        }
    }
    Ok(())
}

fn class_labels(class: &[ReducedWord]) -> (Partition, WeakComposition) {
    let increasing = class
        .iter()
        .find(|r| YoungTableau::from_rows(word_stack(r)).is_increasing())
        .expect("class has an increasing representative");
    let lambda = Partition::new(crate::descents::descent_composition(increasing).parts().to_vec())
        .expect("increasing shape");
    let yam = class.iter().find(|r| crate::droplift::is_yamanouchi(r)).expect("class has a yamanouchi word");
    let WeakDescent::Des(a) = weak_descent_composition(yam) else {
        unreachable!("yamanouchi words are non-virtual")
    };
    (lambda, a)
}

fn cmd_classes<W: Write>(perm: &str, format: Format, out: &mut W) -> crate::Result<()> {
    let w = Permutation::parse(perm)?;
    let classes = crate::ck::ck_classes(&w);
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = classes
                .iter()
                .map(|class| {
                    let (lambda, a) = class_labels(class);
                    serde_json::json!({
                        "size": class.len(),
                        "schur": lambda.to_string(),
                        "demazure": a.to_string(),
                        "words": class.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({ "classes": v })).unwrap()
            );
        }
        _ => {
            for (k, class) in classes.iter().enumerate() {
                let (lambda, a) = class_labels(class);
                let _ = writeln!(
                    out,
                    "class {}: size {}, schur {}, demazure {}",
                    k + 1,
                    class.len(),
                    lambda,
                    a
                );
                for r in class {
                    let _ = writeln!(out, "  {r}");
                }
            }
        }
    }
    Ok(())
}

/// The canonical drop chain: lowest acting row first.
fn drop_chain(start: &RowStack) -> (Vec<RowStack>, Vec<usize>) {
    let mut chain = vec![start.clone()];
    let mut moves = Vec::new();
    let mut cur = start.clone();
    'outer: loop {
        for i in 1..cur.len() {
            let mut next = drop_row(&cur, i).expect("reduced rows");
            while next.last().map(|r| r.is_empty()).unwrap_or(false) {
                next.pop();
            }
            if next != cur {
                moves.push(i);
                cur = next.clone();
                chain.push(next);
                continue 'outer;
            }
        }
        break;
    }
    (chain, moves)
}

/// The canonical lifting chain, one lift per step.
fn lift_chain(start: &RowStack) -> (Vec<RowStack>, Vec<usize>) {
    let mut chain = vec![start.clone()];
    let mut moves = Vec::new();
    let mut cur = start.clone();
    loop {
        let target = lift_canonical_stack(&cur);
        if target == cur {
            break;
        }
        // replay single faithful lifts toward the canonical result
        let rows = cur.len();
        let mut stepped = false;
        'search: for j in (1..rows).rev() {
            for i in 1..=j {
                let mut scratch = cur.clone();
                let mut seq = Vec::new();
                let mut ok = true;
                for t in i..=j {
                    let next = lift_row(&scratch, t).expect("reduced rows");
                    if next == scratch {
                        ok = false;
                        break;
                    }
                    seq.push((t, next.clone()));
                    scratch = next;
                }
                if ok {
                    for (t, state) in seq {
                        moves.push(t);
                        chain.push(state.clone());
                        cur = state;
                    }
                    stepped = true;
                    break 'search;
                }
            }
        }
        if !stepped {
            break;
        }
    }
    (chain, moves)
}

fn emit_chain<W: Write>(
    label: &str,
    chain: &[RowStack],
    moves: &[usize],
    format: Format,
    out: &mut W,
) {
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "chain": chain.iter().map(stack_json).collect::<Vec<_>>(),
                "moves": moves,
                "word": ReducedWord::from_letters_unchecked(stack_word(chain.last().unwrap())).to_string(),
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            for (k, stack) in chain.iter().enumerate() {
                if k > 0 {
                    let _ = writeln!(out, "{label}_{}", moves[k - 1]);
                }
                let _ = writeln!(out, "{}", render_stack(stack, format));
            }
            let final_word = ReducedWord::from_letters_unchecked(stack_word(chain.last().unwrap()));
            let _ = writeln!(out, "word: {final_word}");
        }
    }
}

fn cmd_drop<W: Write>(word: &str, format: Format, out: &mut W) -> crate::Result<()> {
    let rho = parse_word(word)?;
    let (chain, moves) = drop_chain(&word_stack(&rho));
    emit_chain("drop", &chain, &moves, format, out);
    Ok(())
}

fn cmd_lift<W: Write>(word: &str, format: Format, out: &mut W) -> crate::Result<()> {
    let rho = parse_word(word)?;
    let stack = word_stack(&rho);
    if !YoungTableau::from_rows(stack.clone()).is_increasing() {
        return Err(crate::Error::BadTableau(format!(
            "descent tableau of {rho} is not an increasing Young tableau; drop it first"
        )));
    }
    let (chain, moves) = lift_chain(&stack);
    emit_chain("lift", &chain, &moves, format, out);
    Ok(())
}

fn cmd_insert<W: Write>(
    word: &str,
    weak: bool,
    trace: bool,
    format: Format,
    out: &mut W,
) -> crate::Result<()> {
    let rho = parse_word(word)?;
    if weak {
        let states = weak_trace(&rho);
        let shown: Vec<_> = if trace {
            states.iter().collect()
        } else {
            states.iter().rev().take(1).collect()
        };
        match format {
            Format::Json => {
                let v: Vec<_> = shown
                    .iter()
                    .map(|(p, q)| serde_json::json!({"insertion": p.to_json(), "recording": q.to_json()}))
                    .collect();
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&serde_json::json!(v)).unwrap());
            }
            _ => {
                for (k, (p, q)) in shown.iter().enumerate() {
                    if trace {
                        let _ = writeln!(out, "step {}:", k + 1);
                    }
                    let _ = writeln!(out, "insertion tableau:\n{}", p.render());
                    let _ = writeln!(out, "recording tableau:\n{}", q.render());
                }
            }
        }
    } else {
        let states = eg_trace(&rho);
        let shown: Vec<_> = if trace {
            states.iter().collect()
        } else {
            states.iter().rev().take(1).collect()
        };
        match format {
            Format::Json => {
                let v: Vec<_> = shown
                    .iter()
                    .map(|(p, q)| serde_json::json!({"insertion": p.to_json(), "recording": q.to_json()}))
                    .collect();
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&serde_json::json!(v)).unwrap());
            }
            _ => {
                for (k, (p, q)) in shown.iter().enumerate() {
                    if trace {
                        let _ = writeln!(out, "step {}:", k + 1);
                    }
                    let _ = writeln!(out, "insertion tableau:\n{}", p.render());
                    let _ = writeln!(out, "recording tableau:\n{}", q.render());
                }
            }
        }
    }
    Ok(())
}

fn expansion_json<K: std::fmt::Display>(terms: &std::collections::BTreeMap<K, u32>) -> serde_json::Value {
    serde_json::Value::Array(
        terms
            .iter()
            .map(|(k, &m)| serde_json::json!({"index": k.to_string(), "multiplicity": m}))
            .collect(),
    )
}

fn cmd_schubert<W: Write>(
    perm: &str,
    basis: SchubertBasis,
    format: Format,
    out: &mut W,
) -> crate::Result<()> {
    let w = Permutation::parse(perm)?;
    match basis {
        SchubertBasis::Monomial => {
            let p = schubert(&w);
            match format {
                Format::Json => {
                    let v = serde_json::json!({"permutation": w.to_string(), "polynomial": p.to_json()});
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    let _ = writeln!(out, "{}", p.to_monomial_string());
                }
            }
        }
        SchubertBasis::Slide => {
            let terms = slide_expansion(&w);
            emit_expansion("F", &terms, format, out);
        }
        SchubertBasis::Demazure => {
            let terms = demazure_expansion(&w);
            emit_expansion("kappa", &terms, format, out);
        }
    }
    Ok(())
}

fn emit_expansion<K: std::fmt::Display, W: Write>(
    symbol: &str,
    terms: &std::collections::BTreeMap<K, u32>,
    format: Format,
    out: &mut W,
) {
    match format {
        Format::Json => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&expansion_json(terms)).unwrap()
            );
        }
        _ => {
            for (k, m) in terms {
                if *m == 1 {
                    let _ = writeln!(out, "{symbol}{k}");
                } else {
                    let _ = writeln!(out, "{m}*{symbol}{k}");
                }
            }
        }
    }
}

fn cmd_stanley<W: Write>(
    perm: &str,
    basis: StanleyBasis,
    vars: Option<usize>,
    format: Format,
    out: &mut W,
) -> crate::Result<()> {
    let w = Permutation::parse(perm)?;
    let m = vars.unwrap_or(w.length() + 1);
    match basis {
        StanleyBasis::Fundamental => {
            let terms = fundamental_expansion(&w);
            if format == Format::Json {
                let v = serde_json::json!({
                    "permutation": w.to_string(),
                    "vars": m,
                    "terms": expansion_json(&terms),
                    "polynomial": stanley_function(&w, m).to_json(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                emit_expansion("F", &terms, format, out);
            }
        }
        StanleyBasis::Schur => {
            let terms = schur_expansion(&w);
            if format == Format::Json {
                let v = serde_json::json!({
                    "permutation": w.to_string(),
                    "vars": m,
                    "terms": expansion_json(&terms),
                    "polynomial": stanley_function(&w, m).to_json(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                emit_expansion("s", &terms, format, out);
            }
        }
    }
    Ok(())
}

fn cmd_demazure<W: Write>(comp: &str, format: Format, out: &mut W) -> crate::Result<()> {
    let a = WeakComposition::parse(comp)?;
    let p = key_polynomial(&a);
    match format {
        Format::Json => {
            let v = serde_json::json!({"index": a.to_string(), "polynomial": p.to_json()});
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            let _ = writeln!(out, "{}", p.to_monomial_string());
        }
    }
    Ok(())
}

#[derive(Clone, serde::Serialize)]
struct VerifyRecord {
    identity: String,
    rank: usize,
    permutation: String,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

fn first_word(w: &Permutation) -> String {
    enumerate_reduced_words(w)
        .into_iter()
        .next()
        .map(|r| r.to_string())
        .unwrap_or_else(|| "()".to_string())
}

fn poly_diff_witness(lhs: &Polynomial, rhs: &Polynomial) -> String {
    let diff = lhs - rhs;
    match diff.lex_leading() {
        Some((exps, coeff)) => format!("coefficient of x^{exps:?} differs by {coeff}"),
        None => "no difference".to_string(),
    }
}

fn check_identity(identity: &str, w: &Permutation, oracle: Option<&Polynomial>) -> Option<String> {
    match identity {
        "A" => {
            let m = w.length() + 1;
            // sum over distinct descent compositions to share the F's
            let mut lhs = Polynomial::zero();
            for (alpha, mult) in fundamental_expansion(w) {
                let f = crate::poly::fundamental_qsym(&alpha, m);
                for _ in 0..mult {
                    lhs += &f;
                }
            }
            let mut rhs = Polynomial::zero();
            for (lambda, mult) in schur_expansion(w) {
                let s = schur(&lambda, m);
                for _ in 0..mult {
                    rhs += &s;
                }
            }
            (lhs != rhs).then(|| format!("{}; {}", first_word(w), poly_diff_witness(&lhs, &rhs)))
        }
        "B" => {
            let lhs = schubert(w);
            let mut rhs = Polynomial::zero();
            for (a, mult) in demazure_expansion(w) {
                let k = key_polynomial(&a);
                for _ in 0..mult {
                    rhs += &k;
                }
            }
            (lhs != rhs).then(|| format!("{}; {}", first_word(w), poly_diff_witness(&lhs, &rhs)))
        }
        "C" => {
            let lhs = schubert(w);
            let rhs = oracle.expect("oracle table");
            (lhs != *rhs).then(|| format!("{}; {}", first_word(w), poly_diff_witness(&lhs, rhs)))
        }
        _ => unreachable!(),
    }
}

fn cmd_verify<W: Write>(
    max_rank: usize,
    identities: &str,
    jobs: Option<usize>,
    format: Format,
    out: &mut W,
) -> i32 {
    let mut idents: Vec<String> = Vec::new();
    for part in identities.split(',') {
        let p = part.trim().to_uppercase();
        if p.is_empty() {
            continue;
        }
        if p != "A" && p != "B" && p != "C" {
            let _ = writeln!(out, "error: unknown identity `{part}` (expected A, B, or C)");
            return 2;
        }
        if !idents.contains(&p) {
            idents.push(p);
        }
    }
    if max_rank < 2 || idents.is_empty() {
        let _ = writeln!(out, "error: need --max-rank >= 2 and a nonempty identity list");
        return 2;
    }
    idents.sort();

    let pool = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().ok(),
        None => None,
    };

    let mut records: Vec<VerifyRecord> = Vec::new();
    for identity in &idents {
        for rank in 2..=max_rank {
            let perms = Permutation::all(rank);
            let oracle = if identity == "C" { Some(schubert_oracle_table(rank)) } else { None };
            let check = |w: &Permutation| -> VerifyRecord {
                let witness = check_identity(identity, w, oracle.as_ref().map(|t| &t[w]));
                VerifyRecord {
                    identity: identity.clone(),
                    rank,
                    permutation: w.to_string(),
                    status: if witness.is_none() { "ok".into() } else { "fail".into() },
                    witness,
                }
            };
            let mut batch: Vec<VerifyRecord> = match &pool {
                Some(p) => p.install(|| perms.par_iter().map(check).collect()),
                None => perms.par_iter().map(check).collect(),
            };
            batch.sort_by(|a, b| a.permutation.cmp(&b.permutation));
            records.extend(batch);
        }
    }

    let failures = records.iter().filter(|r| r.status == "fail").count();
    match format {
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&records).unwrap());
        }
        _ => {
            for identity in &idents {
                for rank in 2..=max_rank {
                    let group: Vec<&VerifyRecord> = records
                        .iter()
                        .filter(|r| &r.identity == identity && r.rank == rank)
                        .collect();
                    let ok = group.iter().filter(|r| r.status == "ok").count();
                    let _ = writeln!(out, "identity {identity} rank {rank}: {ok}/{} ok", group.len());
                    for r in group.iter().filter(|r| r.status == "fail") {
                        let _ = writeln!(
                            out,
                            "  FAIL {} witness: {}",
                            r.permutation,
                            r.witness.as_deref().unwrap_or("-")
                        );
                    }
                }
            }
            let _ = writeln!(
                out,
                "{}",
                if failures == 0 { "all identities verified" } else { "verification FAILED" }
            );
        }
    }
    if failures == 0 {
        0
    } else {
        1
    }
}
