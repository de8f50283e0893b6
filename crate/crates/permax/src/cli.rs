//! Command-line front end. The binary target is a one-line wrapper around
//! [`run`].
//!
//! Exit codes for scripted pipelines: 0 success (including MATCHES/BELOW
//! search verdicts), 2 invalid arguments, 3 matrix parse failure, 4
//! dimension too large, 5 missing sigma for a diagonal check, 10
//! CANDIDATE_VIOLATION, 11 CERTIFIED_VIOLATION.

use crate::bounds::{bound_nonnegative, bound_stochastic, BoundKind, EqualityCase, FormWitness};
use crate::diagonal::{diagonal_product, max_diagonal_product};
use crate::error::{Error, Result};
use crate::io::read_matrix;
use crate::perm::PermutationRep;
use crate::permanent::permanent_ryser;
use crate::report::{
    append_records, digest_hex, timestamp_epoch, timestamp_now, write_records, RecordScalar,
    RunRecord,
};
use crate::scalar::{format_rational, rat_to_f64, Mode, Scalar, DEFAULT_MAX_DENOM};
use crate::search::{
    local_search, resolve_candidate, sweep, Objective, SearchConfig, SearchOutcome, SweepTemplate,
    Verdict, DEFAULT_VIOLATION_MARGIN,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "permax",
    version,
    about = "Verify and stress-test the conjectured permanent and diagonal-product maxima of rank-bounded stochastic matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Append every emitted run record to this file as well
    #[arg(long, global = true)]
    record: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Per,
    Diag,
}

impl KindArg {
    fn kind(self) -> BoundKind {
        match self {
            KindArg::Per => BoundKind::Permanent,
            KindArg::Diag => BoundKind::Diagonal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ObjArg {
    Per,
    Maxdiag,
}

impl ObjArg {
    fn objective(self) -> Objective {
        match self {
            ObjArg::Per => Objective::Permanent,
            ObjArg::Maxdiag => Objective::MaxDiag,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the conjectured stochastic bound f(n,k) or g(n,k); with
    /// --scale FILE, also the nonnegative-formulation bound for that matrix
    Bound {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "per")]
        kind: KindArg,
        #[arg(long)]
        scale: Option<PathBuf>,
    },
    /// Permanent of a matrix file (Ryser)
    Per {
        file: PathBuf,
        /// Require exact mode (rational or integer entries)
        #[arg(long)]
        exact: bool,
    },
    /// Maximum diagonal product of a matrix file, or the sigma-diagonal
    /// product when --sigma is given
    Maxdiag {
        file: PathBuf,
        /// One-line permutation, 1-based, e.g. "2,1,3"
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Decide which equality case of the nonnegative-formulation bound holds
    Check {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "per")]
        kind: KindArg,
        /// Required for --kind diag
        #[arg(long)]
        sigma: Option<String>,
        /// Rationalize a float-mode input before checking
        #[arg(long)]
        rationalize: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DENOM)]
        max_den: u64,
    },
    /// Hill-climb one (n, k) cell for violations of the conjectured bound
    Search {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "per")]
        objective: ObjArg,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.35)]
        step: f64,
        #[arg(long, default_value_t = 0.9985)]
        decay: f64,
        #[arg(long, default_value_t = DEFAULT_VIOLATION_MARGIN)]
        margin: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_DENOM)]
        max_den: u64,
    },
    /// Search every cell 1 <= k <= n <= nmax, writing one record per cell
    Sweep {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file for line-delimited records (byte-identical across
        /// runs with the same seed)
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated subset of per,maxdiag
        #[arg(long, default_value = "per,maxdiag")]
        objectives: String,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long, default_value_t = 0.35)]
        step: f64,
        #[arg(long, default_value_t = 0.9985)]
        decay: f64,
        #[arg(long, default_value_t = DEFAULT_VIOLATION_MARGIN)]
        margin: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_DENOM)]
        max_den: u64,
    },
}

/// Parse the process arguments, run, and map the result to an exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 3,
        Error::DimensionTooLarge { .. } => 4,
        Error::MissingSigma => 5,
        _ => 2,
    }
}

fn file_digest(path: &Path) -> Result<String> {
    Ok(digest_hex(&std::fs::read(path)?))
}

fn print_scalar(label: &str, v: &Scalar) {
    match v {
        Scalar::Exact(r) => println!("{label} = {} = {}", format_rational(r), rat_to_f64(r)),
        Scalar::Float(x) => println!("{label} = {x}"),
    }
}

fn emit(records: Vec<RunRecord>, extra_file: &Option<PathBuf>) -> Result<()> {
    for r in &records {
        println!("{}", r.to_line());
    }
    if let Some(path) = extra_file {
        append_records(path, &records)?;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Bound { n, k, kind, scale } => {
            let report = bound_stochastic(n, k, kind.kind())?;
            let name = match kind {
                KindArg::Per => "f",
                KindArg::Diag => "g",
            };
            println!(
                "{name}({n},{k}) = {} = {}   [composition {}]",
                format_rational(&report.stochastic_bound),
                rat_to_f64(&report.stochastic_bound),
                report.composition
            );
            let mut config = serde_json::json!({
                "version": VERSION, "n": n, "k": k,
                "kind": report.kind.as_str(),
            });
            let mut record_bound = RecordScalar::exact(&report.stochastic_bound);
            if let Some(path) = &scale {
                let a = read_matrix(path)?;
                let nn = bound_nonnegative(&a, k, kind.kind())?;
                print_scalar("scale  min(prod r, prod c)", &nn.scale);
                print_scalar("nonnegative-formulation bound", &nn.total());
                config["scale_file"] = serde_json::json!(path.display().to_string());
                config["scale_digest"] = serde_json::json!(file_digest(path)?);
                record_bound = match nn.total() {
                    Scalar::Exact(r) => RecordScalar::exact(&r),
                    Scalar::Float(x) => RecordScalar::Float(x),
                };
            }
            let mut rec = RunRecord::new("bound", timestamp_now(), config);
            rec.bound = Some(record_bound);
            rec.n = Some(n);
            rec.k = Some(k);
            rec.kind = Some(report.kind.as_str().to_string());
            emit(vec![rec], &cli.record)?;
            Ok(0)
        }

        Cmd::Per { file, exact } => {
            let a = read_matrix(&file)?;
            if exact && a.mode() != Mode::Exact {
                return Err(Error::NotExactMode);
            }
            let per = permanent_ryser(&a)?;
            print_scalar("per", &per);
            let config = serde_json::json!({
                "version": VERSION,
                "file": file.display().to_string(),
                "digest": file_digest(&file)?,
                "exact": exact,
            });
            let mut rec = RunRecord::new("per", timestamp_now(), config);
            rec.value = Some(match &per {
                Scalar::Exact(r) => RecordScalar::exact(r),
                Scalar::Float(x) => RecordScalar::Float(*x),
            });
            rec.n = Some(a.n());
            rec.kind = Some("permanent".into());
            emit(vec![rec], &cli.record)?;
            Ok(0)
        }

        Cmd::Maxdiag { file, sigma } => {
            let a = read_matrix(&file)?;
            let (value, attained, given) = match &sigma {
                Some(text) => {
                    let s: PermutationRep = text.parse()?;
                    let v = diagonal_product(&a, &s)?;
                    (v, s, true)
                }
                None => {
                    let (v, s) = max_diagonal_product(&a)?;
                    (v, s, false)
                }
            };
            print_scalar(
                if given {
                    "diagonal product"
                } else {
                    "max diagonal product"
                },
                &value,
            );
            println!("sigma = {attained}");
            let config = serde_json::json!({
                "version": VERSION,
                "file": file.display().to_string(),
                "digest": file_digest(&file)?,
                "sigma": sigma,
            });
            let mut rec = RunRecord::new("maxdiag", timestamp_now(), config);
            rec.value = Some(match &value {
                Scalar::Exact(r) => RecordScalar::exact(r),
                Scalar::Float(x) => RecordScalar::Float(*x),
            });
            rec.n = Some(a.n());
            rec.kind = Some("diagonal".into());
            emit(vec![rec], &cli.record)?;
            Ok(0)
        }

        Cmd::Check {
            file,
            k,
            kind,
            sigma,
            rationalize,
            max_den,
        } => {
            let mut a = read_matrix(&file)?;
            if a.mode() == Mode::Float {
                if !rationalize {
                    return Err(Error::NotExactMode);
                }
                a = a.rationalize(max_den);
            }
            let sigma_rep = sigma
                .as_deref()
                .map(|t| t.parse::<PermutationRep>())
                .transpose()?;
            let verdict =
                crate::bounds::equality_case_nonnegative(&a, k, kind.kind(), sigma_rep.as_ref())?;
            let case_no = match verdict.case {
                EqualityCase::ZeroLine => "case 1",
                EqualityCase::RowForm => "case 2",
                EqualityCase::ColForm => "case 3",
                EqualityCase::BothForms => "case 4",
                EqualityCase::None => "no case",
            };
            println!(
                "equality {}: {} ({})",
                if verdict.holds {
                    "holds"
                } else {
                    "does not hold"
                },
                case_no,
                verdict.case.as_str()
            );
            for (side, w) in [("row", &verdict.row_witness), ("col", &verdict.col_witness)] {
                match w {
                    Some(FormWitness::Pjq(w)) => {
                        println!("{side} witness: P = {}  Q = {}", w.p, w.q)
                    }
                    Some(FormWitness::Conjugate(w)) => println!("{side} witness: P = {}", w.p),
                    None => {}
                }
            }
            let config = serde_json::json!({
                "version": VERSION,
                "file": file.display().to_string(),
                "digest": file_digest(&file)?,
                "k": k,
                "kind": kind.kind().as_str(),
                "sigma": sigma,
                "rationalize": rationalize,
                "max_den": max_den,
            });
            let mut rec = RunRecord::new("check", timestamp_now(), config);
            rec.verdict = Some(verdict.case.as_str().to_string());
            rec.n = Some(a.n());
            rec.k = Some(k);
            rec.kind = Some(kind.kind().as_str().to_string());
            emit(vec![rec], &cli.record)?;
            Ok(0)
        }

        Cmd::Search {
            n,
            k,
            objective,
            restarts,
            iters,
            seed,
            step,
            decay,
            margin,
            max_den,
        } => {
            let config = SearchConfig {
                n,
                k,
                objective: objective.objective(),
                restarts,
                iterations: iters,
                initial_step: step,
                step_decay: decay,
                seed,
                violation_margin: margin,
            };
            let raw = local_search(&config)?;
            let outcome = resolve_candidate(raw, max_den)?;
            print_outcome(&outcome);
            let rec = RunRecord::new(
                "search",
                timestamp_now(),
                search_config_json(&config, max_den),
            )
            .with_outcome(&outcome);
            emit(vec![rec], &cli.record)?;
            Ok(verdict_exit(outcome.verdict))
        }

        Cmd::Sweep {
            nmax,
            seed,
            out,
            objectives,
            restarts,
            iters,
            step,
            decay,
            margin,
            max_den,
        } => {
            let objectives = parse_objectives(&objectives)?;
            let template = SweepTemplate {
                restarts,
                iterations: iters,
                initial_step: step,
                step_decay: decay,
                master_seed: seed,
                violation_margin: margin,
                max_den,
            };
            let outcomes = sweep(nmax, &objectives, &template)?;
            let mut worst = 0;
            let mut records = Vec::with_capacity(outcomes.len());
            for o in &outcomes {
                println!(
                    "n={} k={} {}: {} value={:.9} bound={}",
                    o.n,
                    o.k,
                    o.objective.as_str(),
                    o.verdict.as_str(),
                    o.value,
                    format_rational(&o.bound.stochastic_bound),
                );
                worst = worst.max(verdict_exit(o.verdict));
                let config = serde_json::json!({
                    "version": VERSION,
                    "nmax": nmax,
                    "master_seed": seed,
                    "objective": o.objective.as_str(),
                    "restarts": restarts,
                    "iters": iters,
                    "step": step,
                    "decay": decay,
                    "margin": margin,
                    "max_den": max_den,
                });
                records.push(RunRecord::new("sweep", timestamp_epoch(), config).with_outcome(o));
            }
            write_records(&out, &records)?;
            if let Some(path) = &cli.record {
                append_records(path, &records)?;
            }
            println!("wrote {} records to {}", records.len(), out.display());
            Ok(worst)
        }
    }
}

fn parse_objectives(text: &str) -> Result<Vec<Objective>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        match part.trim() {
            "per" => out.push(Objective::Permanent),
            "maxdiag" => out.push(Objective::MaxDiag),
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown objective '{other}' (expected per or maxdiag)"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidConfig("no objectives given".into()));
    }
    Ok(out)
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Matches | Verdict::Below => 0,
        Verdict::CandidateViolation => 10,
        Verdict::CertifiedViolation => 11,
    }
}

fn search_config_json(c: &SearchConfig, max_den: u64) -> serde_json::Value {
    serde_json::json!({
        "version": VERSION,
        "n": c.n,
        "k": c.k,
        "objective": c.objective.as_str(),
        "restarts": c.restarts,
        "iters": c.iterations,
        "step": c.initial_step,
        "decay": c.step_decay,
        "seed": c.seed,
        "margin": c.violation_margin,
        "max_den": max_den,
    })
}

fn print_outcome(o: &SearchOutcome) {
    println!(
        "search n={} k={} objective={}: {}",
        o.n,
        o.k,
        o.objective.as_str(),
        o.verdict.as_str()
    );
    println!(
        "best value = {:.12}   bound = {} = {:.12}   gap = {:.3e}",
        o.value,
        format_rational(&o.bound.stochastic_bound),
        rat_to_f64(&o.bound.stochastic_bound),
        o.gap
    );
    if let Some(c) = &o.certificate {
        println!(
            "certificate: exact value {} vs exact bound {} (rank {}, {})",
            format_rational(&c.value),
            format_rational(&c.bound_total),
            c.exact_rank,
            if c.via_factors {
                "re-factored through rationalized factors"
            } else {
                "direct rationalization"
            }
        );
        print!("{}", crate::io::format_matrix(&c.matrix));
    }
    println!("note: {}", o.scope_note);
}

/// Run the matrix-printing path of `search`/`certify` outcomes; exposed for
/// the examples.
pub fn print_search_outcome(o: &SearchOutcome) {
    print_outcome(o);
}
