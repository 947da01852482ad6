//! Command-line front end. [`run`] parses arguments, dispatches, writes one
//! document to `out`, diagnostics to `err`, and returns the exit code:
//! 0 success, 1 a check failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::channel::{apply_del_sub, error_ball, ErrorEvent};
use crate::code::{choose_params_with, is_codeword, CodeParams, ScanConfig};
use crate::decoder::{list_decode, list_decode_brute};
use crate::error::Error;
use crate::parallel::workers_from_env;
use crate::verify::{self, Check, VerifyOptions};
use crate::word::BitWord;
use crate::worked;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "delsub", version, about = "Single-deletion single-substitution list-size-two codes")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Threads for scans and verification [default: DELSUB_WORKERS or 1]
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pick the largest code of length n
    Construct {
        #[arg(long)]
        n: usize,
    },
    /// Test code membership of a word
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        params: Triple,
        #[arg(long)]
        word: String,
    },
    /// List-decode a received word of length n - 1
    Decode(DecodeArgs),
    /// Error ball of a word
    Ball {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Exhaustive checks, or sampled decoding with --smoke
    Verify(VerifyArgs),
    /// Redundancy of the best code against 3 log2 n + 4
    Table {
        #[arg(long, value_delimiter = ',', default_values_t = [8, 12, 16, 20, 24])]
        n: Vec<usize>,
    },
    /// Recompute the three worked collisions of length 16
    Examples,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with_all = ["c0", "c1", "c2"])]
    pub params: Option<Triple>,
    #[arg(long, requires_all = ["c1", "c2"])]
    pub c0: Option<u8>,
    #[arg(long, requires_all = ["c0", "c2"])]
    pub c1: Option<u64>,
    #[arg(long, requires_all = ["c0", "c1"])]
    pub c2: Option<u64>,
    #[arg(long)]
    pub word: String,
    /// Use the unpruned decoder
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Defaults to the largest code of length n
    #[arg(long)]
    pub params: Option<Triple>,
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<Check>,
    #[arg(long, default_value_t = verify::DEFAULT_INVENTORY_CAP)]
    pub inventory: usize,
    /// Include wall-clock seconds (makes output run-dependent)
    #[arg(long)]
    pub timing: bool,
    /// Sample this many random corruptions instead of enumerating
    #[arg(long, value_name = "SAMPLES")]
    pub smoke: Option<u64>,
    #[arg(long, requires = "smoke", default_value_t = 0)]
    pub seed: u64,
}

/// `c0,c1,c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple(pub u8, pub u64, pub u64);

impl FromStr for Triple {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c] = parts[..] else {
            return Err(format!("expected c0,c1,c2, got {s:?}"));
        };
        let bad = |e: std::num::ParseIntError| format!("{s:?}: {e}");
        Ok(Triple(a.parse().map_err(bad)?, b.parse().map_err(bad)?, c.parse().map_err(bad)?))
    }
}

impl Triple {
    fn params(self, n: usize) -> Result<CodeParams, Error> {
        CodeParams::new(n, self.0, self.1, self.2)
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ListBoundViolated { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Rendered output plus whether it represents a passing run.
struct Output {
    json: String,
    text: String,
    passed: bool,
}

impl Output {
    fn new<T: Serialize>(value: &T, text: String, passed: bool) -> Self {
        Self {
            json: serde_json::to_string(value).expect("report serializes"),
            text,
            passed,
        }
    }
}

fn parse_word(s: &str, len: usize) -> Result<BitWord, Failure> {
    let w: BitWord = s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if w.len() != len {
        return Err(Failure::Usage(format!(
            "word has length {}, expected {len}",
            w.len()
        )));
    }
    Ok(w)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    run_cli(&cli, out, err)
}

pub fn run_cli(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let workers = cli.workers.unwrap_or_else(workers_from_env).max(1);
    match dispatch(&cli.command, workers) {
        Ok(o) => {
            let body = match cli.format {
                Format::Json => o.json,
                Format::Text => o.text,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            if o.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_FAILED
        }
    }
}

fn dispatch(cmd: &Command, workers: usize) -> Result<Output, Failure> {
    match cmd {
        Command::Construct { n } => construct(*n, workers),
        Command::Check { n, params, word } => {
            let p = params.params(*n)?;
            let x = parse_word(word, *n)?;
            let member = is_codeword(&x, &p)?;
            #[derive(Serialize)]
            struct Doc<'a> {
                word: &'a BitWord,
                params: CodeParams,
                member: bool,
            }
            Ok(Output::new(
                &Doc { word: &x, params: p, member },
                member.to_string(),
                member,
            ))
        }
        Command::Decode(a) => decode(a),
        Command::Ball { n, word } => ball(*n, word),
        Command::Verify(a) if a.smoke.is_some() => smoke(a),
        Command::Verify(a) => run_verify(a, workers),
        Command::Table { n } => table(n, workers),
        Command::Examples => examples(),
    }
}

fn construct(n: usize, workers: usize) -> Result<Output, Failure> {
    let cfg = ScanConfig {
        workers,
        ..ScanConfig::default()
    };
    let (p, stats) = choose_params_with(n, &cfg)?;
    #[derive(Serialize)]
    struct Doc {
        n: usize,
        c0: u8,
        c1: u64,
        c2: u64,
        size: u64,
        redundancy: Option<f64>,
    }
    let text = format!(
        "n={n} params={p} size={} redundancy={:.4}",
        stats.size,
        stats.redundancy.unwrap_or(f64::NAN)
    );
    let doc = Doc {
        n,
        c0: p.c0,
        c1: p.c1,
        c2: p.c2,
        size: stats.size,
        redundancy: stats.redundancy,
    };
    Ok(Output::new(&doc, text, true))
}

fn decode(a: &DecodeArgs) -> Result<Output, Failure> {
    let p = match (a.params, a.c0, a.c1, a.c2) {
        (Some(t), ..) => t.params(a.n)?,
        (None, Some(c0), Some(c1), Some(c2)) => CodeParams::new(a.n, c0, c1, c2)?,
        _ => return Err(Failure::Usage("decode needs --params or --c0/--c1/--c2".into())),
    };
    if a.n < 2 {
        return Err(Error::TooShort { len: a.n, min: 2 }.into());
    }
    let y = parse_word(&a.word, a.n - 1)?;
    let result = if a.brute {
        list_decode_brute(&y, &p)?
    } else {
        list_decode(&y, &p)?
    };
    #[derive(Serialize)]
    struct Cand<'a> {
        word: &'a BitWord,
        d: usize,
        e: Option<usize>,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        candidates: Vec<Cand<'a>>,
        count: usize,
    }
    let doc = Doc {
        candidates: result
            .candidates
            .iter()
            .map(|c| Cand {
                word: &c.word,
                d: c.witness.d,
                e: c.witness.e,
            })
            .collect(),
        count: result.len(),
    };
    let mut text = format!("{} candidate(s)\n", result.len());
    for c in &result.candidates {
        text.push_str(&format!("{} via {}\n", c.word, c.witness));
    }
    Ok(Output::new(&doc, text, true))
}

fn ball(n: usize, word: &str) -> Result<Output, Failure> {
    let x = parse_word(word, n)?;
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 }.into());
    }
    let ball = error_ball(&x)?;
    #[derive(Serialize)]
    struct Doc<'a> {
        word: &'a BitWord,
        size: usize,
        ball: Vec<&'a BitWord>,
    }
    let mut text = format!("|B(x)| = {}\n", ball.len());
    for y in &ball {
        text.push_str(&format!("{y}\n"));
    }
    let doc = Doc {
        word: &x,
        size: ball.len(),
        ball: ball.iter().collect(),
    };
    Ok(Output::new(&doc, text, true))
}

fn run_verify(a: &VerifyArgs, workers: usize) -> Result<Output, Failure> {
    let params = a.params.map(|t| t.params(a.n)).transpose()?;
    let checks = if a.checks.is_empty() {
        Check::defaults(a.n)
    } else {
        a.checks.clone()
    };
    let opts = VerifyOptions {
        workers,
        inventory_cap: a.inventory,
    };
    let mut report = verify::verify(a.n, params, &checks, &opts)?;
    if !a.timing {
        report.elapsed = None;
    }
    let mut text = format!(
        "params {} size {} redundancy {:.4}\n",
        report.params,
        report.code_size,
        report.redundancy.unwrap_or(f64::NAN)
    );
    if let Some(m) = report.max_list_size {
        text.push_str(&format!(
            "max list size {m}, {} colliding pairs\n",
            report.collision_count.unwrap_or(0)
        ));
    }
    if let Some(l2) = &report.lemma2 {
        text.push_str(&format!(
            "ordering violations {} over {} representation pairs\n",
            l2.violations, l2.representation_pairs
        ));
    }
    if let Some(ok) = report.single_deletion_ok {
        text.push_str(&format!("single-deletion balls disjoint: {ok}\n"));
    }
    for s in report.sign_lemma.iter().flatten() {
        text.push_str(&format!(
            "sign lemma m={}: {} counterexamples over {} pairs\n",
            s.m, s.counterexamples, s.pairs_checked
        ));
    }
    if let Some(t) = &report.table1 {
        text.push_str(&format!(
            "weight table: {} delta, {} canonical violations\n",
            t.delta_violations, t.canonical_violations
        ));
    }
    if let Some(b) = &report.bridge {
        text.push_str(&format!(
            "congruence bridge: {} counterexamples over {} pairs\n",
            b.counterexamples, b.pairs_checked
        ));
    }
    if let Some(t) = report.elapsed {
        text.push_str(&format!("elapsed {t:.3}s\n"));
    }
    text.push_str(if report.passed { "PASS" } else { "FAIL" });
    let passed = report.passed;
    Ok(Output::new(&report, text, passed))
}

#[derive(Debug, Serialize)]
struct SmokeReport {
    mode: &'static str,
    n: usize,
    seed: u64,
    samples: u64,
    max_list_size: usize,
    misses: u64,
    disagreements: u64,
    passed: bool,
}

/// Random non-constant words, each corrupted by a random event and decoded
/// in its own code; both decoders must return the sent word.
fn smoke(a: &VerifyArgs) -> Result<Output, Failure> {
    let n = a.n;
    if !(3..=crate::word::packed::MAX_LEN).contains(&n) {
        return Err(Failure::Usage(format!("smoke mode needs 3 <= n <= 63, got {n}")));
    }
    let samples = a.smoke.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut report = SmokeReport {
        mode: "smoke",
        n,
        seed: a.seed,
        samples,
        max_list_size: 0,
        misses: 0,
        disagreements: 0,
        passed: true,
    };
    for _ in 0..samples {
        let x = loop {
            let v = rng.gen::<u64>() & crate::word::packed::mask(n);
            let x = BitWord::from_packed(v, n);
            if !x.is_constant() {
                break x;
            }
        };
        let d = rng.gen_range(1..=n);
        let e = rng.gen_range(0..=n);
        let ev = if e == 0 || e == d {
            ErrorEvent::deletion(d)
        } else {
            ErrorEvent::new(d, e)
        };
        let y = apply_del_sub(&x, ev)?;
        let p = CodeParams::of_word(&x)?;
        let fast = list_decode(&y, &p)?;
        let brute = list_decode_brute(&y, &p)?;
        report.max_list_size = report.max_list_size.max(fast.len());
        report.misses += u64::from(!fast.words().contains(&&x));
        report.disagreements += u64::from(fast.words() != brute.words());
    }
    report.passed = report.misses == 0 && report.disagreements == 0 && report.max_list_size <= 2;
    let text = format!(
        "smoke n={n} seed={} samples={samples}: max list {}, {} misses, {} disagreements",
        a.seed, report.max_list_size, report.misses, report.disagreements
    );
    let passed = report.passed;
    Ok(Output::new(&report, text, passed))
}

fn table(ns: &[usize], workers: usize) -> Result<Output, Failure> {
    let rows = verify::redundancy_table(ns, workers)?;
    let mut text = String::from("   n  c0   c1     c2        size  redundancy   bound  margin\n");
    for r in &rows {
        text.push_str(&format!(
            "{:>4} {:>3} {:>4} {:>6} {:>11} {:>11.4} {:>7.4} {:>7.4}\n",
            r.n, r.c0, r.c1, r.c2, r.size, r.redundancy, r.bound, r.margin
        ));
    }
    let passed = rows.iter().all(|r| r.passed());
    Ok(Output::new(&rows, text, passed))
}

fn examples() -> Result<Output, Failure> {
    let outcomes = worked::replay()?;
    let mut text = String::new();
    for o in &outcomes {
        let u: Vec<String> = o.u.iter().map(i64::to_string).collect();
        text.push_str(&format!(
            "{} case {} u=({}) {}\n",
            o.name,
            o.case,
            u.join(","),
            if o.passed { "ok" } else { "MISMATCH" }
        ));
    }
    let passed = outcomes.iter().all(|o| o.passed);
    Ok(Output::new(&outcomes, text, passed))
}
