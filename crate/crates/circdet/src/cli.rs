//! Command-line front end. The binary only forwards `std::env::args` to [`run`].

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::coeff::{self, coeff_eq10d, coeff_theorem3, zero_by_corollary6, EngineOptions};
use crate::error::Error;
use crate::exactmath::{divisors, sign_pow};
use crate::expansion::{expand_with_cap, ExpansionPolynomial, Strategy, DEFAULT_EXPAND_CAP};
use crate::index::{admissible_vectors, IndexSet, MultiplicityVector};
use crate::oracles::{self, LEIBNIZ_CAP};
use crate::symmetry::{self, act, group_elements, orbits, OrbitKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Largest N for which the permutation-counting oracle is run in sweeps.
const KMOD_SWEEP_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Direct,
    Reduced,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Direct => Strategy::Direct,
            StrategyArg::Reduced => Strategy::Reduced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Symmetry,
    Lemmas,
    Counting,
    Identities,
}

impl Suite {
    const ALL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Symmetry,
        Suite::Lemmas,
        Suite::Counting,
        Suite::Identities,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Symmetry => "symmetry",
            Suite::Lemmas => "lemmas",
            Suite::Counting => "counting",
            Suite::Identities => "identities",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "circdet", version, about = "Exact coefficients of circulant determinants")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t)]
    pub format: Format,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest dimension accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_EXPAND_CAP)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One coefficient, from comma-separated indices.
    Coeff {
        n: usize,
        indices: String,
        /// Read the list as a multiplicity vector instead.
        #[arg(long)]
        mult: bool,
        /// Compare against the permutation-counting oracle.
        #[arg(long)]
        check: bool,
    },
    /// Full expansion.
    Expand {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
        #[arg(long)]
        include_zeros: bool,
    },
    /// Additive and super multiplets with counting summaries.
    Multiplets { n: usize },
    /// Zero coefficients among admissible exponent vectors.
    Zeros { n: usize },
    /// Run identity suites over `N` or `lo..hi`.
    Verify {
        range: String,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
    /// Timing table as CSV.
    Bench { range: String },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDocument {
    pub format: Format,
    pub body: String,
    pub code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidIndexSet(_) | Error::OutOfRange(_) | Error::NonPositive(_) | Error::Shape(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<OutputDocument, CliError>;

/// Process-level result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            }
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.jobs {
        Some(0) => Err(CliError::usage("--jobs must be at least 1")),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError {
                code: EXIT_FAILURE,
                message: e.to_string(),
            }),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(doc) => Outcome {
            stdout: doc.body,
            stderr: String::new(),
            code: doc.code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        },
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let f = cli.format;
    let cap = cli.max_n;
    match &cli.command {
        Command::Coeff {
            n,
            indices,
            mult,
            check,
        } => cmd_coeff(*n, indices, *mult, *check, f, cap),
        Command::Expand {
            n,
            strategy,
            include_zeros,
        } => cmd_expand(*n, (*strategy).into(), *include_zeros, f, cap),
        Command::Multiplets { n } => cmd_multiplets(*n, f, cap),
        Command::Zeros { n } => cmd_zeros(*n, f, cap),
        Command::Verify { range, suite } => {
            let (lo, hi) = parse_range(range, cap)?;
            let suites = match suite {
                Some(s) => vec![*s],
                None => Suite::ALL.to_vec(),
            };
            cmd_verify(lo, hi, &suites, f)
        }
        Command::Bench { range } => {
            let (lo, hi) = parse_range(range, cap)?;
            cmd_bench(lo, hi, cap)
        }
    }
}

fn check_n(n: usize, cap: usize) -> std::result::Result<(), CliError> {
    if n == 0 || n > cap {
        return Err(CliError::usage(format!("N = {n} outside [1, {cap}]")));
    }
    Ok(())
}

/// `"7"` or `"3..7"` (inclusive).
pub fn parse_range(s: &str, cap: usize) -> std::result::Result<(usize, usize), CliError> {
    let bad = || CliError::usage(format!("bad range {s:?}, expected N or LO..HI"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().trim_start_matches('=').parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    check_n(lo, cap)?;
    check_n(hi, cap)?;
    Ok((lo, hi))
}

/// Comma-separated integers; a bare digit string of length `n` is also accepted.
pub fn parse_list(s: &str, n: usize) -> std::result::Result<Vec<usize>, CliError> {
    let s = s.trim();
    if !s.contains(',') && s.len() == n && n > 1 && s.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(s.bytes().map(|b| (b - b'0') as usize).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("cannot parse {t:?} as a non-negative integer")))
        })
        .collect()
}

fn letters(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'A' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

fn monomial(m: &MultiplicityVector, names: &[String]) -> String {
    let mut s = String::new();
    for (name, &e) in names.iter().zip(m.counts()) {
        match e {
            0 => {}
            1 => s.push_str(name),
            _ => {
                let _ = write!(s, "{name}^{e}");
            }
        }
    }
    s
}

/// `det[A,B,C] = A^3 + B^3 + C^3 - 3ABC`, ordered by shape and then by exponent vector, both descending.
pub fn det_line(poly: &ExpansionPolynomial) -> String {
    let names = letters(poly.n());
    let mut terms = poly.sorted_terms(false);
    terms.sort_by(|a, b| b.0.shape().cmp(&a.0.shape()).then(b.0.cmp(a.0)));
    let mut out = format!("det[{}] =", names.join(","));
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -(*c).clone() } else { (*c).clone() };
        let coeff = if mag == BigInt::from(1) { String::new() } else { mag.to_string() };
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push_str(" -"),
            (_, false) => out.push_str(" +"),
            (_, true) => out.push_str(" -"),
        }
        if i == 0 && neg {
            let _ = write!(out, "{coeff}{}", monomial(m, &names));
        } else {
            let _ = write!(out, " {coeff}{}", monomial(m, &names));
        }
    }
    if terms.is_empty() {
        out.push_str(" 0");
    }
    out
}

/// `C_000aab`-style label for a shape.
fn form_label(shape: &[usize]) -> String {
    let mut s = String::new();
    for (i, &k) in shape.iter().enumerate() {
        let c = if i == 0 { '0' } else { (b'a' + (i - 1) as u8) as char };
        s.extend(std::iter::repeat(c).take(k));
    }
    s
}

fn shape_label(shape: &[usize]) -> String {
    let parts: Vec<String> = shape.iter().map(|p| p.to_string()).collect();
    if shape.iter().all(|&p| p < 10) {
        parts.concat()
    } else {
        parts.join("+")
    }
}

fn csv_cells(m: &MultiplicityVector) -> String {
    let c: Vec<String> = m.counts().iter().map(|v| v.to_string()).collect();
    c.join(",")
}

fn spaced(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn json_ints(v: &[usize]) -> serde_json::Value {
    json!(v)
}

pub fn cmd_coeff(n: usize, input: &str, mult: bool, check: bool, f: Format, cap: usize) -> CmdResult {
    if n == 0 {
        return Err(CliError::usage("N must be at least 1"));
    }
    let list = parse_list(input, n)?;
    let set = if mult {
        MultiplicityVector::new(list)?.index_set()
    } else {
        IndexSet::new(n, list)?
    };
    if set.n() != n {
        return Err(CliError::usage(format!("expected {n} entries")));
    }
    let ev = coeff::evaluate(&set, EngineOptions::default())?;
    coeff::check_divisibility(&set, &ev.value)?;

    let mut oracle = None;
    if check {
        let mut values = vec![
            ("multiset-partitions", coeff_theorem3(&set)?),
            ("labeled-partitions", coeff_eq10d(&set)?),
        ];
        if n <= cap {
            values.push(("kmod-oracle", oracles::coeff_via_theorem2(&set)));
        }
        let agree = values.iter().all(|(_, v)| *v == ev.value);
        oracle = Some((values, agree));
    }
    let code = match &oracle {
        Some((_, false)) => EXIT_MISMATCH,
        _ => EXIT_OK,
    };

    let body = match f {
        Format::Json => {
            let mut doc = json!({
                "N": n,
                "indices": json_ints(set.indices()),
                "value": ev.value.to_string(),
                "path": ev.path.name(),
                "representative": json_ints(ev.representative.indices()),
                "sign": ev.sign,
            });
            if let Some((values, agree)) = &oracle {
                let checks: serde_json::Map<String, serde_json::Value> = values
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v.to_string())))
                    .collect();
                doc["check"] = json!({ "values": checks, "agree": agree });
            }
            format!("{doc}\n")
        }
        Format::Csv => {
            let mut s = String::from("N,indices,value,path,representative,sign");
            if oracle.is_some() {
                s.push_str(",agree");
            }
            let _ = write!(
                s,
                "\n{n},{},{},{},{},{}",
                spaced(set.indices()),
                ev.value,
                ev.path.name(),
                spaced(ev.representative.indices()),
                ev.sign
            );
            if let Some((_, agree)) = &oracle {
                let _ = write!(s, ",{agree}");
            }
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("C[{set}] = {}\n", ev.value);
            let _ = writeln!(s, "path: {}", ev.path.name());
            let _ = writeln!(s, "representative: {} (sign {:+})", ev.representative, ev.sign);
            if let Some((values, agree)) = &oracle {
                for (k, v) in values {
                    let _ = writeln!(s, "check {k}: {v}");
                }
                let _ = writeln!(s, "{}", if *agree { "oracle agreement" } else { "ORACLE MISMATCH" });
            }
            s
        }
    };
    Ok(OutputDocument { format: f, body, code })
}

pub fn cmd_expand(n: usize, strategy: Strategy, include_zeros: bool, f: Format, cap: usize) -> CmdResult {
    check_n(n, cap)?;
    let poly = expand_with_cap(n, strategy, cap)?;
    let body = match f {
        Format::Json => format!("{}\n", poly.to_json(include_zeros)),
        Format::Csv => {
            let mut s: Vec<String> = (0..n).map(|i| format!("m{i}")).collect();
            s.push("coeff".into());
            let mut out = s.join(",") + "\n";
            for (m, c) in poly.sorted_terms(include_zeros) {
                let _ = writeln!(out, "{},{c}", csv_cells(m));
            }
            out
        }
        Format::Text => {
            let mut out = det_line(&poly) + "\n";
            if n >= 2 {
                out.push('\n');
                out.push_str(&multiplet_table(n, &poly));
            }
            out
        }
    };
    Ok(OutputDocument { format: f, body, code: EXIT_OK })
}

/// Rows grouped by shape: label, coefficient form, additive multiplets, value.
fn multiplet_table(n: usize, poly: &ExpansionPolynomial) -> String {
    let supers = orbits(n, OrbitKind::Super);
    let mut rows: Vec<(Vec<usize>, MultiplicityVector, Vec<(MultiplicityVector, usize, BigInt)>)> = Vec::new();
    for o in &supers {
        let mut adds: Vec<(MultiplicityVector, usize, BigInt)> = Vec::new();
        let mut seen: HashSet<MultiplicityVector> = HashSet::new();
        for (m, _) in &o.members {
            if seen.contains(m) {
                continue;
            }
            let orbit = symmetry::orbit_of(m, OrbitKind::Additive);
            let shown = orbit.members.iter().map(|(k, _)| k).max().unwrap().clone();
            seen.extend(orbit.members.iter().map(|(k, _)| k.clone()));
            let v = poly.get(&shown);
            adds.push((shown, orbit.members.len(), v));
        }
        adds.sort_by(|a, b| b.0.cmp(&a.0));
        rows.push((o.representative.shape(), o.representative.clone(), adds));
    }
    rows.sort_by(|a, b| b.0.cmp(&a.0).then(b.2[0].0.cmp(&a.2[0].0)));
    let mut out = format!(
        "N={n}: {} super-multiplets, {} nonzero terms\n",
        supers.len(),
        poly.nonzero_len()
    );
    let width = (n + 6).max(10);
    let _ = writeln!(out, "{:<10} {:<width$} {:<width$}  value", "partition", "form", "multiplet");
    let mut last_shape: Option<Vec<usize>> = None;
    for (shape, _, adds) in rows {
        for (i, (m, size, v)) in adds.iter().enumerate() {
            let sub = if *size == n { String::new() } else { format!("_{size}") };
            let first = i == 0 && last_shape.as_ref() != Some(&shape);
            let label = if first { shape_label(&shape) } else { String::new() };
            let form = if first { format!("C_{}", form_label(&shape)) } else { String::new() };
            let _ = writeln!(
                out,
                "{label:<10} {form:<width$} {:<width$}  {v}",
                format!("{{{m}}}{sub}")
            );
        }
        last_shape = Some(shape);
    }
    out
}

pub fn cmd_multiplets(n: usize, f: Format, cap: usize) -> CmdResult {
    check_n(n, cap)?;
    if n < 2 {
        return Err(CliError::usage("multiplets need N >= 2"));
    }
    let records = symmetry::classify(n)?;
    let f_n = symmetry::count_solutions_f(n)?;
    let g_total: BigInt = divisors(n as u64)
        .into_iter()
        .map(|k| symmetry::additive_multiplet_count_g(n, k as usize))
        .sum::<crate::Result<BigInt>>()?;
    let closed = symmetry::supermultiplet_count(n).ok();
    let additive = records.iter().filter(|r| r.kind == OrbitKind::Additive).count();
    let sup = records.len() - additive;

    let kind_name = |k: OrbitKind| match k {
        OrbitKind::Additive => "additive",
        OrbitKind::Super => "super",
    };
    let body = match f {
        Format::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "kind": kind_name(r.kind),
                        "n": r.n,
                        "representative": json_ints(r.representative.counts()),
                        "value": r.value.to_string(),
                    })
                })
                .collect();
            let doc = json!({
                "N": n,
                "multiplets": rows,
                "additive": additive,
                "super": sup,
                "F": f_n.to_string(),
                "g_total": g_total.to_string(),
                "super_closed_form": closed.as_ref().map(|c| c.to_string()),
            });
            format!("{doc}\n")
        }
        Format::Csv => {
            let mut out = String::from("kind,n,representative,value\n");
            for r in &records {
                let _ = writeln!(out, "{},{},{},{}", kind_name(r.kind), r.n, spaced(r.representative.counts()), r.value);
            }
            out
        }
        Format::Text => {
            let mut out = format!("N={n}: {additive} additive multiplets, {sup} super-multiplets\n");
            let _ = writeln!(out, "{:<9} {:>4}  {:<w$}  value", "kind", "n", "M", w = n.max(14));
            for r in &records {
                let _ = writeln!(
                    out,
                    "{:<9} {:>4}  {:<w$}  {}",
                    kind_name(r.kind),
                    r.n,
                    r.representative.to_string(),
                    r.value,
                    w = n.max(14)
                );
            }
            let _ = writeln!(out, "F({n}) = {f_n}");
            let _ = writeln!(out, "sum of g_{n}(n) = {g_total}");
            if let Some(c) = &closed {
                let _ = writeln!(out, "super-multiplet closed form = {c}");
            }
            out
        }
    };
    let mut code = EXIT_OK;
    if BigInt::from(additive) != g_total || closed.as_ref().is_some_and(|c| *c != BigInt::from(sup)) {
        code = EXIT_FAILURE;
    }
    Ok(OutputDocument { format: f, body, code })
}

/// A zero coefficient and how it was explained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroEntry {
    pub set: IndexSet,
    pub structural: bool,
}

/// Admissible index sets whose coefficient vanishes, from the orbit-reduced expansion.
pub fn find_zeros(n: usize, cap: usize) -> crate::Result<Vec<ZeroEntry>> {
    let poly = expand_with_cap(n, Strategy::Reduced, cap)?;
    let mut out: Vec<ZeroEntry> = poly
        .zero_keys()
        .into_iter()
        .map(|m| {
            let set = m.index_set();
            ZeroEntry {
                structural: zero_by_corollary6(&set),
                set,
            }
        })
        .collect();
    out.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(out)
}

pub fn cmd_zeros(n: usize, f: Format, cap: usize) -> CmdResult {
    check_n(n, cap)?;
    let zeros = find_zeros(n, cap)?;
    let tag = |z: &ZeroEntry| if z.structural { "corollary-6" } else { "accidental" };
    let c6 = zeros.iter().filter(|z| z.structural).count();
    let body = match f {
        Format::Json => {
            let rows: Vec<serde_json::Value> = zeros
                .iter()
                .map(|z| {
                    json!({
                        "indices": json_ints(z.set.indices()),
                        "M": json_ints(z.set.multiplicities().counts()),
                        "kind": tag(z),
                    })
                })
                .collect();
            format!("{}\n", json!({ "N": n, "zeros": rows, "structural": c6, "accidental": zeros.len() - c6 }))
        }
        Format::Csv => {
            let mut out = String::from("indices,kind\n");
            for z in &zeros {
                let _ = writeln!(out, "{},{}", spaced(z.set.indices()), tag(z));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "N={n}: {} zero coefficients ({c6} corollary-6, {} accidental)\n",
                zeros.len(),
                zeros.len() - c6
            );
            for z in &zeros {
                let _ = writeln!(out, "C[{}] = 0  {}", z.set, tag(z));
            }
            out
        }
    };
    Ok(OutputDocument { format: f, body, code: EXIT_OK })
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteLine {
    pub suite: &'static str,
    pub n: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

pub fn run_suite(suite: Suite, n: usize) -> Check {
    match suite {
        Suite::Oracle => verify_oracle(n),
        Suite::Symmetry => verify_symmetry(n),
        Suite::Lemmas => verify_excluded_roots(n),
        Suite::Counting => verify_counting(n),
        Suite::Identities => verify_identities(n),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn verify_oracle(n: usize) -> Check {
    let leibniz = if n <= LEIBNIZ_CAP { Some(oracles::leibniz_expansion(n).map_err(err)?) } else { None };
    let keys = admissible_vectors(n);
    for m in &keys {
        let set = m.index_set();
        let engine = coeff::coefficient(&set).map_err(err)?;
        let t3 = coeff_theorem3(&set).map_err(err)?;
        let d = coeff_eq10d(&set).map_err(err)?;
        if engine != t3 || t3 != d {
            return Err(format!("C[{set}]: engine {engine}, multiset partitions {t3}, labeled partitions {d}"));
        }
        if n <= KMOD_SWEEP_CAP {
            let k = oracles::coeff_via_theorem2(&set);
            if k != t3 {
                return Err(format!("C[{set}]: closed form {t3}, k-mod oracle {k}"));
            }
        }
        if let Some(l) = &leibniz {
            if l.get(m) != t3 {
                return Err(format!("C[{set}]: closed form {t3}, Leibniz {}", l.get(m)));
            }
        }
    }
    if let Some(l) = &leibniz {
        if let Some((m, _)) = l.sorted_terms(false).into_iter().find(|(m, _)| !m.satisfies_condition_8()) {
            return Err(format!("Leibniz has an inadmissible term {m}"));
        }
    }
    let how = if n <= LEIBNIZ_CAP { "closed forms, k-mod and Leibniz" } else if n <= KMOD_SWEEP_CAP { "closed forms and k-mod" } else { "closed forms" };
    Ok(format!("{} sets, {how} agree", keys.len()))
}

fn verify_symmetry(n: usize) -> Check {
    let poly = expand_with_cap(n, Strategy::Direct, n).map_err(err)?;
    let elems = group_elements(n);
    for (m, c) in poly.sorted_terms(true) {
        let set = m.index_set();
        coeff::check_divisibility(&set, c).map_err(err)?;
        for &g in &elems {
            let img = act(g, m);
            if *c != poly.get(&img) * g.sign() {
                return Err(format!("C{m} = {c} but ({},{}) image {img} has {}", g.shift, g.mult, poly.get(&img)));
            }
        }
    }
    Ok(format!("{} terms x {} group elements covariant, divisibility holds", poly.stored_len(), elems.len()))
}

fn verify_excluded_roots(n: usize) -> Check {
    let mut count = 0;
    for mask in 0u32..(1 << (n - 1).min(20)) {
        let q: Vec<usize> = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        if q.len() >= n {
            continue;
        }
        if !oracles::lemma1_check(n, &q) {
            return Err(format!("excluded-root identity fails for N={n}, q={q:?}"));
        }
        count += 1;
    }
    Ok(format!("excluded-root identity on {count} sets"))
}

/// The identity checks that do not depend on `N`.
pub fn verify_fixed_identities() -> Check {
    for p in 1..=4 {
        for m in [4, 5] {
            if !oracles::lemma2_check(p, m, 50, (p * 10 + m) as u64).map_err(err)? {
                return Err(format!("symmetric-sum identity fails at p={p}, M={m}"));
            }
        }
    }
    for p in 0..=7 {
        if !oracles::lemma3_check(p) {
            return Err(format!("cycle-count identity fails at p={p}"));
        }
    }
    for m in 1..=6 {
        for x in 0..=24 {
            if !oracles::lemma6_check(m, x) {
                return Err(format!("alternating binomial identity fails at m={m}, X={x}"));
            }
        }
    }
    Ok("symmetric sums p<=4, cycle counts p<=7, alternating binomials m<=6 X<=24".into())
}

fn verify_counting(n: usize) -> Check {
    let f = symmetry::count_solutions_f(n).map_err(err)?;
    let brute = admissible_vectors(n).len();
    if f != BigInt::from(brute) {
        return Err(format!("F({n}) = {f} but enumeration finds {brute}"));
    }
    let g: BigInt = (1..=n)
        .map(|k| symmetry::additive_multiplet_count_g(n, k))
        .sum::<crate::Result<BigInt>>()
        .map_err(err)?;
    let add = symmetry::count_orbits(n, OrbitKind::Additive);
    if g != BigInt::from(add) {
        return Err(format!("sum of g_{n}(n) = {g} but enumeration finds {add} additive multiplets"));
    }
    let mut detail = format!("F={f}, additive={add}");
    if let Ok(c) = symmetry::supermultiplet_count(n) {
        let s = symmetry::count_orbits(n, OrbitKind::Super);
        if c != BigInt::from(s) {
            return Err(format!("super-multiplet closed form {c} but enumeration finds {s}"));
        }
        let _ = write!(detail, ", super={s}");
        if let Some((g, k, e)) = symmetry::invariant_count_mismatches(n).into_iter().next() {
            return Err(format!("fixed vectors of ({},{}): closed form {k}, enumeration {e}", g.shift, g.mult));
        }
        detail.push_str(", fixed-vector counts");
    }
    Ok(detail)
}

fn verify_identities(n: usize) -> Check {
    let poly = expand_with_cap(n, Strategy::Reduced, n).map_err(err)?;
    let mut notes = Vec::new();
    if n == 1 {
        notes.push("det[1]=1 (the all-ones identity needs N >= 2)".to_string());
    } else if n % 2 == 1 {
        let v = poly.evaluate(&vec![1; n]).map_err(err)?;
        if !v.is_zero() {
            return Err(format!("det[1,..,1] = {v}"));
        }
        notes.push("det[1..1]=0".to_string());
    } else {
        notes.push("det[1..1]=0 skipped (holds trivially for even N)".to_string());
    }
    let mut x = vec![1; n];
    x[0] = 0;
    let v = poly.evaluate(&x).map_err(err)?;
    let want = BigInt::from(sign_pow(n as i64 - 1) * (n as i64 - 1));
    if v != want {
        return Err(format!("det[0,1..1] = {v}, expected {want}"));
    }
    notes.push(format!("det[0,1..1]={v}"));
    for d in divisors(n as u64) {
        let d = d as usize;
        if d < 2 {
            continue;
        }
        if !crate::expansion::power_identity_check(n, d).map_err(err)? {
            return Err(format!("power identity fails for d={d}"));
        }
        notes.push(format!("power d={d}"));
    }
    Ok(notes.join(", "))
}

pub fn verification_report(lo: usize, hi: usize, suites: &[Suite]) -> Vec<SuiteLine> {
    let mut lines = Vec::new();
    for &s in suites {
        if s == Suite::Lemmas {
            let r = verify_fixed_identities();
            lines.push(to_line(s, None, r));
        }
        for n in lo..=hi {
            lines.push(to_line(s, Some(n), run_suite(s, n)));
        }
    }
    lines
}

fn to_line(suite: Suite, n: Option<usize>, r: Check) -> SuiteLine {
    let (passed, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    SuiteLine {
        suite: suite.name(),
        n,
        passed,
        detail,
    }
}

pub fn cmd_verify(lo: usize, hi: usize, suites: &[Suite], f: Format) -> CmdResult {
    let lines = verification_report(lo, hi, suites);
    let ok = lines.iter().all(|l| l.passed);
    let label = |l: &SuiteLine| l.n.map_or("-".to_string(), |n| n.to_string());
    let body = match f {
        Format::Json => {
            let rows: Vec<serde_json::Value> = lines
                .iter()
                .map(|l| json!({ "suite": l.suite, "N": l.n, "passed": l.passed, "detail": l.detail }))
                .collect();
            format!("{}\n", json!({ "passed": ok, "results": rows }))
        }
        Format::Csv => {
            let mut out = String::from("suite,N,result,detail\n");
            for l in &lines {
                let _ = writeln!(
                    out,
                    "{},{},{},\"{}\"",
                    l.suite,
                    label(l),
                    if l.passed { "pass" } else { "fail" },
                    l.detail.replace('"', "'")
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for l in &lines {
                let _ = writeln!(
                    out,
                    "{:<10} N={:<3} {}  {}",
                    l.suite,
                    label(l),
                    if l.passed { "pass" } else { "FAIL" },
                    l.detail
                );
            }
            match lines.iter().find(|l| !l.passed) {
                Some(l) => {
                    let _ = writeln!(out, "first counterexample: {}", l.detail);
                }
                None => out.push_str("all checks passed\n"),
            }
            out
        }
    };
    Ok(OutputDocument {
        format: f,
        body,
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn millis(t: Instant) -> String {
    format!("{:.3}", t.elapsed().as_secs_f64() * 1e3)
}

/// Wall times in milliseconds. Leibniz and the partition-count route are skipped above their caps.
pub fn cmd_bench(lo: usize, hi: usize, cap: usize) -> CmdResult {
    let mut out = String::from(
        "N,terms,direct_ms,reduced_ms,leibniz_ms,direct_per_coeff_us,kmod_q_per_coeff_us\n",
    );
    let mut rng = StdRng::seed_from_u64(7);
    for n in lo..=hi {
        let t = Instant::now();
        let poly = expand_with_cap(n, Strategy::Direct, cap)?;
        let direct = millis(t);
        let t = Instant::now();
        expand_with_cap(n, Strategy::Reduced, cap)?;
        let reduced = millis(t);
        let leibniz = if n <= LEIBNIZ_CAP {
            let t = Instant::now();
            oracles::leibniz_expansion(n)?;
            millis(t)
        } else {
            String::new()
        };
        let keys = admissible_vectors(n);
        let per = |total: f64, count: usize| format!("{:.3}", total * 1e6 / count.max(1) as f64);
        let t = Instant::now();
        for m in &keys {
            coeff::coefficient(&m.index_set())?;
        }
        let per_coeff = per(t.elapsed().as_secs_f64(), keys.len());
        let kmod = if n <= KMOD_SWEEP_CAP {
            let sample: Vec<IndexSet> = (0..20)
                .map(|_| keys[rng.gen_range(0..keys.len())].index_set())
                .filter(|s| *s.indices().last().unwrap() >= 2)
                .collect();
            let t = Instant::now();
            for s in &sample {
                oracles::kmod_via_q(s)?;
            }
            per(t.elapsed().as_secs_f64(), sample.len())
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "{n},{},{direct},{reduced},{leibniz},{per_coeff},{kmod}",
            poly.nonzero_len()
        );
    }
    Ok(OutputDocument {
        format: Format::Csv,
        body: out,
        code: EXIT_OK,
    })
}
