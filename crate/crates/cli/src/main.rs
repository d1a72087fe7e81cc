//! `gforge`: command-line front end.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition violation,
//! 3 budget or cap exceeded, 4 internal inconsistency.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gforge::galgebra::kform::build_k_forms;
use gforge::pi::witness::build_witness;
use gforge::pi::{is_identity, GradedPolynomial, PolynomialSpec};
use gforge::presentation::Presentation;
use gforge::schema::{parse_json, H2Input, IdentityInput, PresentationSpec};
use gforge::settings::{DEFAULT_BUDGET, DEFAULT_WORD_BOUND};
use gforge::twisted::h2_classes;
use gforge::{Caps, Error, ErrorKind, Exec, GradedAlgebra, Settings, Subgroup};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "gforge", version, about = "Exact computations with G-graded simple algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Second input file for `iso` and `identity`.
    #[arg(long, global = true)]
    input2: Option<PathBuf>,
    /// Word length bound L for μ(S) and binomial searches.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_BOUND)]
    word_bound: usize,
    /// Maximum number of assignments a brute-force search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Check well-formedness and connectivity of a presentation.
    Validate,
    /// Canonical normal form of a presentation.
    Normalize,
    /// The invariant chain K, N, S, n and the minimal field k.
    Invariants,
    /// Division form and the strongly/essentially VP properties.
    Classify,
    /// Isomorphism test between `--input` and `--input2`.
    Iso,
    /// Graded identity test of a polynomial against a presentation.
    Identity,
    /// The E₀ walk, p₁ and its nonvanishing permutation set.
    Witness,
    /// Second cohomology classes of a subgroup with values in μ_m.
    H2,
    /// Generators of a k-form and their verification.
    Kform,
}

#[derive(Debug, Clone)]
struct RunConfig {
    command: Command,
    input: Option<PathBuf>,
    input2: Option<PathBuf>,
    settings: Settings,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let json_out = cli.json;
    let (code, report) = match configure(&cli) {
        Ok(config) => match cli.workers.filter(|&w| w > 1) {
            Some(w) => with_workers(w, || run(&config)),
            None => run(&config),
        },
        Err(e) => failure(&e),
    };
    if json_out {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else if code == 0 {
        print!("{}", render_text(&report));
    } else {
        eprint!("{}", render_text(&report));
    }
    ExitCode::from(code)
}

#[cfg(feature = "parallel")]
fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_workers<T: Send>(_: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn configure(cli: &Cli) -> Result<RunConfig, Error> {
    if cli.word_bound < 2 {
        return Err(Error::Parse(format!("--word-bound must be at least 2, got {}", cli.word_bound)));
    }
    if cli.budget < 1 {
        return Err(Error::Parse("--budget must be at least 1".into()));
    }
    let exec = match cli.workers {
        Some(0) => return Err(Error::Parse("--workers must be at least 1".into())),
        Some(1) => Exec::Sequential,
        _ => Exec::Parallel,
    };
    let settings = Settings { word_bound: cli.word_bound, budget: cli.budget, exec, caps: Caps::from_env()? };
    Ok(RunConfig { command: cli.command, input: cli.input.clone(), input2: cli.input2.clone(), settings })
}

fn run(config: &RunConfig) -> (u8, Value) {
    match dispatch(config) {
        Ok(v) => (0, v),
        Err(e) => failure(&e),
    }
}

fn failure(e: &Error) -> (u8, Value) {
    let (code, kind) = match e.kind() {
        ErrorKind::Parse => (1, "parse"),
        ErrorKind::Precondition => (2, "precondition"),
        ErrorKind::Limit => (3, "limit"),
        ErrorKind::Internal => (4, "internal"),
    };
    (code, json!({ "error": { "kind": kind, "message": e.to_string() } }))
}

fn read(path: &Option<PathBuf>, flag: &str) -> Result<String, Error> {
    let path = path.as_ref().ok_or_else(|| Error::Parse(format!("missing {flag}")))?;
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn presentation(text: &str, caps: &Caps) -> Result<Presentation, Error> {
    parse_json::<PresentationSpec>(text)?.build(caps)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn dispatch(config: &RunConfig) -> Result<Value, Error> {
    let s = &config.settings;
    let text = read(&config.input, "--input")?;
    match config.command {
        Command::Validate => {
            let p = presentation(&text, &s.caps)?;
            Ok(to_value(&p.validate()))
        }
        Command::Normalize => {
            let p = presentation(&text, &s.caps)?;
            let q = p.normalize(s)?;
            Ok(json!({
                "presentation": PresentationSpec::from_presentation(&q),
                "k": q.k_stabilizer(),
            }))
        }
        Command::Invariants => {
            let p = presentation(&text, &s.caps)?;
            let chain = p.compute_kns(s)?;
            let g = p.group();
            let mut v = to_value(&chain);
            v["kNames"] = to_value(&chain.k.iter().map(|&x| g.name(x)).collect::<Vec<_>>());
            Ok(v)
        }
        Command::Classify => {
            let p = presentation(&text, &s.caps)?;
            Ok(to_value(&p.classify(s)?))
        }
        Command::Iso => {
            let p = presentation(&text, &s.caps)?;
            let q = presentation(&read(&config.input2, "--input2")?, &s.caps)?;
            let theta = p.isomorphism(&q, s.exec)?;
            Ok(json!({ "isomorphic": theta.is_some(), "theta": theta }))
        }
        Command::Identity => {
            let (p, poly) = match &config.input2 {
                Some(_) => {
                    let spec: PolynomialSpec = parse_json(&read(&config.input2, "--input2")?)?;
                    (presentation(&text, &s.caps)?, GradedPolynomial::from_spec(&spec)?)
                }
                None => parse_json::<IdentityInput>(&text)?.build(&s.caps)?,
            };
            let linearized = !poly.is_multilinear();
            let poly = if linearized { poly.linearize()? } else { poly };
            let a = GradedAlgebra::build(&p, &s.caps)?;
            let mut v = to_value(&is_identity(&poly, &a, s)?);
            v["linearized"] = json!(linearized);
            Ok(v)
        }
        Command::Witness => {
            let p = presentation(&text, &s.caps)?;
            let a = GradedAlgebra::build(&p, &s.caps)?;
            let w = build_witness(&a)?;
            let labels: Vec<String> = w.e0().iter().map(|&b| label(&a, b)).collect();
            let conditions = w.conditions(&a);
            let (p1_monomials, ad) = match w.p1(&a, &s.caps) {
                Ok(p1) => (Some(p1.monomials().len()), Some(w.nonvanishing_set(&a, &s.caps, s.exec)?)),
                Err(e) if e.kind() == ErrorKind::Limit => (None, None),
                Err(e) => return Err(e),
            };
            Ok(json!({
                "e0": labels,
                "z1": w.ids.join(" "),
                "designated": w.designated.len(),
                "conditions": conditions,
                "conditionsHold": conditions.all(),
                "p1Monomials": p1_monomials,
                "ad": ad,
            }))
        }
        Command::H2 => {
            let input: H2Input = parse_json(&text)?;
            let g = std::sync::Arc::new(input.group.build(&s.caps)?);
            let h = std::sync::Arc::new(Subgroup::new(g, &input.subgroup)?);
            let classes = h2_classes(h, input.modulus, s.caps.h2_subgroup)?;
            let reps: Vec<_> = classes.iter().map(|c| c.to_spec()).collect();
            Ok(json!({ "count": reps.len(), "representatives": reps }))
        }
        Command::Kform => {
            let p = presentation(&text, &s.caps)?;
            let a = GradedAlgebra::build(&p, &s.caps)?;
            let forms = build_k_forms(&a, s)?;
            let reports: Vec<_> = forms.iter().map(|f| &f.report).collect();
            Ok(json!({ "forms": reports, "verified": forms.iter().any(|f| f.report.verified) }))
        }
    }
}

fn label(a: &GradedAlgebra, b: usize) -> String {
    let t = a.triple(b);
    let p = a.presentation();
    let h = p.subgroup().element(t.h);
    if p.subgroup().order() == 1 {
        format!("e{}{}", t.i + 1, t.j + 1)
    } else {
        format!("u[{}]e{}{}", p.group().name(h), t.i + 1, t.j + 1)
    }
}

fn render_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{k}:\n"));
                        for line in render_text(x).lines() {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                    other => out.push_str(&format!("{k}: {other}\n")),
                }
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    out
}
