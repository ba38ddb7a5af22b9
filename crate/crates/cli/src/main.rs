mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use holonomic::arith::{factor_linear, factored_form, CommPoly};
use holonomic::bfunction::{global_bfunction, weight_bfunction, DEFAULT_DEGREE_CAP};
use holonomic::gb::ops::holonomic_rank;
use holonomic::homological::{brute_force_solutions, d_ext, holonomic_dual, poly_ext, ratl_ext};
use holonomic::io::{parse_poly, parse_problem, ProblemFile};
use holonomic::polysol::polynomial_solutions;
use holonomic::ratsol::{rational_solutions, singular_locus};
use holonomic::Error;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "holo", version, about = "Polynomial and rational solutions of holonomic systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Print a JSON result document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest b-function degree searched before giving up.
    #[arg(long, global = true, env = "HOLO_DEGREE_CAP")]
    degree_cap: Option<usize>,
    /// Abort with exit code 4 after this many seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
    /// Include wall-clock timing in the output (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum Cmd {
    /// Basis of the polynomial solutions.
    Polysols {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = weights)]
        weight: Option<Weights>,
    },
    /// Basis of the rational solutions.
    Ratsols {
        file: PathBuf,
        /// Candidate pole factors separated by `;`, instead of factoring the singular locus.
        #[arg(long)]
        factors: Option<String>,
    },
    /// b-function of the ideal for the weight (−w, w).
    Bfun {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = weights)]
        weight: Weights,
    },
    /// Global b-function of f^s for the class of 1.
    Globalb {
        file: PathBuf,
        /// Polynomial expression, or the name of a `poly` in the file.
        #[arg(long = "f")]
        f: String,
    },
    /// Codimension-one part of the singular locus.
    Singlocus { file: PathBuf },
    /// Holonomic rank.
    Rank { file: PathBuf },
    /// Holonomic dual of the first ideal or module.
    Dual { file: PathBuf },
    /// Dimensions of Ext^i(M, k[x]).
    Polyext {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = weights)]
        weight: Option<Weights>,
    },
    /// Dimensions of Ext^i(M, N).
    Dext {
        file: PathBuf,
        #[arg(long = "with")]
        with: PathBuf,
        /// Restriction weight on the doubled variables (length 2n).
        #[arg(long, allow_hyphen_values = true, value_parser = weights)]
        weight: Option<Weights>,
    },
    /// Dimensions of Ext^i(M, k[x][1/f]) from a supplied presentation of k[x][1/f].
    Ratlext {
        file: PathBuf,
        #[arg(long = "f")]
        f: String,
        #[arg(long = "with")]
        with: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, value_parser = weights)]
        weight: Option<Weights>,
    },
    /// Search for `dim` independent morphisms M → N.
    SolveIn {
        file: PathBuf,
        #[arg(long = "with")]
        with: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Highest filtration level searched.
        #[arg(long, default_value_t = 20)]
        max_level: u32,
    },
}

/// Comma-separated integer weights, e.g. `-1,-2`.
#[derive(Clone, Debug)]
struct Weights(Vec<i64>);

fn weights(s: &str) -> Result<Weights, String> {
    let w = s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad weight entry `{}`", t)));
    Ok(Weights(w.collect::<Result<_, _>>()?))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::NotHolonomic { .. } | Error::ClosureNotHolonomic => 3,
            Error::DegreeCapExceeded(_) | Error::IterationCap(_) => 4,
            Error::LocalizationRequired => 5,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

struct Input {
    problem: ProblemFile,
    digest: String,
}

fn load(path: &Path) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure { code: 2, message: format!("{}: {}", path.display(), e) })?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let src = String::from_utf8(bytes)
        .map_err(|_| Failure { code: 2, message: format!("{}: not valid UTF-8", path.display()) })?;
    let problem = parse_problem(&src).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    Ok(Input { problem, digest })
}

fn polynomial_arg(p: &ProblemFile, src: &str) -> Result<CommPoly, Failure> {
    if let Some(f) = p.poly(src) {
        return Ok(f.clone());
    }
    Ok(parse_poly(src, &p.ring)?)
}

/// Result payload, its text rendering and the input digests.
struct Output {
    result: Value,
    text: String,
    digests: Vec<String>,
}

fn execute(cmd: &Cmd, cap: usize) -> Result<Output, Failure> {
    let file = match cmd {
        Cmd::Polysols { file, .. }
        | Cmd::Ratsols { file, .. }
        | Cmd::Bfun { file, .. }
        | Cmd::Globalb { file, .. }
        | Cmd::Singlocus { file }
        | Cmd::Rank { file }
        | Cmd::Dual { file }
        | Cmd::Polyext { file, .. }
        | Cmd::Dext { file, .. }
        | Cmd::Ratlext { file, .. }
        | Cmd::SolveIn { file, .. } => file,
    };
    let input = load(file)?;
    let p = &input.problem;
    let m = p.primary();
    let n = m.n();
    let mut digests = vec![input.digest.clone()];
    let mut text = String::new();
    let result = match cmd {
        Cmd::Polysols { weight, .. } => {
            let w = weight.clone().map(|w| w.0).unwrap_or_else(|| vec![-1; n]);
            let b = weight_bfunction(m, &w, cap)?;
            let sols = polynomial_solutions(m, Some(&w), cap)?;
            text += &format!("b-function: {}\ninteger roots: {:?}\n", factored_form(&b.b), b.integer_roots);
            text += &format!("dimension: {}\n", sols.solutions.len());
            for s in &sols.solutions {
                text += &format!("  {}\n", s);
            }
            json!({
                "weight": w,
                "bfunction": render::bfunction(&b),
                "degree_bound": sols.k1,
                "dimension": sols.solutions.len(),
                "solutions": sols.solutions.iter().map(render::poly).collect::<Vec<_>>(),
            })
        }
        Cmd::Ratsols { factors, .. } => {
            let over: Option<Vec<CommPoly>> = match factors {
                Some(s) => Some(s.split(';').map(|t| polynomial_arg(p, t.trim())).collect::<Result<_, _>>()?),
                None => None,
            };
            let r = rational_solutions(m, over.as_deref(), cap)?;
            text += &format!("singular locus: {}\n", r.singular_locus);
            for d in &r.factors {
                text += &format!("  factor {}: b = {}, pole order <= {}\n", d.factor, factored_form(&d.b.b), d.k.unwrap_or(0));
            }
            text += &format!("dimension: {}\n", r.solutions.len());
            for s in &r.solutions {
                text += &format!("  {}\n", s);
            }
            json!({
                "singular_locus": render::poly(&r.singular_locus),
                "factors": r.factors.iter().map(|d| json!({
                    "factor": render::poly(&d.factor),
                    "bfunction": render::bfunction(&d.b),
                    "pole_order_bound": d.k,
                })).collect::<Vec<_>>(),
                "dimension": r.solutions.len(),
                "solutions": r.solutions.iter().map(|s| json!({
                    "text": s.to_string(),
                    "numerator": render::poly(&s.numerator),
                    "denominator": render::poly(&s.denominator()),
                })).collect::<Vec<_>>(),
            })
        }
        Cmd::Bfun { weight, .. } => {
            let b = weight_bfunction(m, &weight.0, cap)?;
            text += &format!("b-function: {}\ninteger roots: {:?}\n", factored_form(&b.b), b.integer_roots);
            json!({ "weight": weight.0, "bfunction": render::bfunction(&b) })
        }
        Cmd::Globalb { f, .. } => {
            let f = polynomial_arg(p, f)?;
            let b = global_bfunction(m, &f, cap)?;
            text += &format!("b-function: {}\ninteger roots: {:?}\n", factored_form(&b.b), b.integer_roots);
            json!({ "f": render::poly(&f), "bfunction": render::bfunction(&b) })
        }
        Cmd::Singlocus { .. } => {
            let s = singular_locus(m)?;
            let lf = factor_linear(&s);
            text += &format!("singular locus: {}\n", s);
            for (f, _) in &lf.factors {
                text += &format!("  {}\n", f);
            }
            if let Some(r) = &lf.residual {
                text += &format!("  {} (no linear factor)\n", r);
            }
            json!({
                "polynomial": render::poly(&s),
                "linear_factors": lf.factors.iter().map(|(f, _)| render::poly(f)).collect::<Vec<_>>(),
                "residual": lf.residual.as_ref().map(render::poly),
            })
        }
        Cmd::Rank { .. } => {
            let r = holonomic_rank(m);
            text += &match r {
                Some(r) => format!("rank: {}\n", r),
                None => "rank: infinite\n".to_string(),
            };
            json!({ "rank": r })
        }
        Cmd::Dual { .. } => {
            let d = holonomic_dual(m)?;
            text += &format!("rank {} module with relations\n", d.rank);
            for r in &d.relations {
                let row: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                text += &format!("  [{}]\n", row.join(", "));
            }
            render::presentation(&d)
        }
        Cmd::Polyext { weight, .. } => {
            let w = weight.clone().map(|w| w.0).unwrap_or_else(|| vec![1; n]);
            let (e, int) = poly_ext(m, &w, cap)?;
            text += &format!("{}\n", e);
            json!({ "weight": w, "ext": render::ext(&e, &int) })
        }
        Cmd::Dext { with, weight, .. } => {
            let other = load(with)?;
            digests.push(other.digest.clone());
            let w = weight.clone().map(|w| w.0).unwrap_or_else(|| vec![1; 2 * n]);
            let (e, int) = d_ext(m, other.problem.primary(), &w, cap)?;
            text += &format!("{}\n", e);
            json!({ "weight": w, "ext": render::ext(&e, &int) })
        }
        Cmd::Ratlext { f, with, weight, .. } => {
            let f = polynomial_arg(p, f)?;
            let other = match with {
                Some(path) => Some(load(path)?),
                None => None,
            };
            if let Some(o) = &other {
                digests.push(o.digest.clone());
            }
            let w = weight.clone().map(|w| w.0).unwrap_or_else(|| vec![1; 2 * n]);
            let (e, int) = ratl_ext(m, &f, other.as_ref().map(|o| o.problem.primary()), &w, cap)?;
            text += &format!("{}\n", e);
            json!({ "f": render::poly(&f), "weight": w, "ext": render::ext(&e, &int) })
        }
        Cmd::SolveIn { with, dim, max_level, .. } => {
            let other = load(with)?;
            digests.push(other.digest.clone());
            let sols = brute_force_solutions(m, other.problem.primary(), *dim, *max_level)?;
            text += &format!("{} solutions\n", sols.len());
            for s in &sols {
                let row: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                text += &format!("  [{}]\n", row.join(", "));
            }
            json!({
                "dimension": sols.len(),
                "solutions": sols.iter().map(|s| Value::Array(s.iter().map(render::operator).collect())).collect::<Vec<_>>(),
            })
        }
    };
    Ok(Output { result, text, digests })
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Polysols { .. } => "polysols",
        Cmd::Ratsols { .. } => "ratsols",
        Cmd::Bfun { .. } => "bfun",
        Cmd::Globalb { .. } => "globalb",
        Cmd::Singlocus { .. } => "singlocus",
        Cmd::Rank { .. } => "rank",
        Cmd::Dual { .. } => "dual",
        Cmd::Polyext { .. } => "polyext",
        Cmd::Dext { .. } => "dext",
        Cmd::Ratlext { .. } => "ratlext",
        Cmd::SolveIn { .. } => "solve-in",
    }
}

fn run_limited(cmd: Cmd, cap: usize, limit: Option<f64>) -> Result<Output, Failure> {
    let (tx, rx) = mpsc::channel();
    std::thread::Builder::new()
        .stack_size(64 << 20)
        .spawn(move || {
            let _ = tx.send(execute(&cmd, cap));
        })
        .expect("spawn worker thread");
    let timeout = Failure { code: 4, message: "time limit exceeded".into() };
    match limit {
        Some(s) => rx.recv_timeout(Duration::from_secs_f64(s.max(0.0))).unwrap_or(Err(timeout)),
        None => rx.recv().unwrap_or(Err(Failure { code: 1, message: "worker thread panicked".into() })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP);
    let name = command_name(&cli.cmd);
    let start = Instant::now();
    let outcome = run_limited(cli.cmd.clone(), cap, cli.time_limit);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let code = match &outcome {
        Ok(_) => 0,
        Err(f) => f.code,
    };
    if cli.json {
        let mut doc = json!({ "schema_version": SCHEMA_VERSION, "command": name, "exit_code": code });
        match outcome {
            Ok(out) => {
                doc["input_digest"] = json!(out.digests[0]);
                if out.digests.len() > 1 {
                    doc["with_digest"] = json!(out.digests[1]);
                }
                doc["result"] = out.result;
            }
            Err(f) => doc["error"] = json!({ "message": f.message }),
        }
        if cli.timing {
            doc["timing_ms"] = json!(elapsed.round() as u64);
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        match outcome {
            Ok(out) => print!("{}", out.text),
            Err(f) => eprintln!("holo: {}", f.message),
        }
        if cli.timing {
            eprintln!("time: {:.0} ms", elapsed);
        }
    }
    ExitCode::from(code)
}
