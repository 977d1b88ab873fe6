//! Command-line front end for `spverlinde`.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed computation, 2 usage error.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, CompletionOp, FusionOp, KtheoryOp, VerifyOp};
use cache::{cache_key, Cache};
use commands::{CliError, CmdResult};

/// Environment variable bounding the rayon worker pool.
pub const WORKERS_ENV: &str = "SPVERLINDE_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn init_workers() {
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            // fails only if a pool already exists, which is harmless
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Operation name and parameters, used for the cache key.
fn describe(cmd: &Command, seed: u64) -> (String, Value) {
    match cmd {
        Command::Fusion { op } => match op {
            FusionOp::Table(a) => ("fusion table".into(), json!({"m": a.m, "n": a.n})),
            FusionOp::DetT(a) => ("fusion det-t".into(), json!({"m": a.m, "n": a.n})),
            FusionOp::Douglas(a) => ("fusion douglas".into(), json!({"m": a.m, "n": a.n})),
        },
        Command::Completion { op } => match op {
            CompletionOp::Rank(a) => ("completion rank".into(), json!({"m": a.m, "n": a.n, "prime": a.prime})),
            CompletionOp::Groebner(a) => (
                "completion groebner".into(),
                json!({"m": a.base.m, "n": a.base.n, "prime": a.base.prime, "budget": a.budget}),
            ),
            CompletionOp::Tower(a) => (
                "completion tower".into(),
                json!({"m": a.m, "n": a.n, "prime": a.prime, "ell_max": a.ell_max, "precision": a.precision}),
            ),
        },
        Command::Ktheory { op } => match op {
            KtheoryOp::YGroup(a) => ("ktheory y-group".into(), json!({"m": a.m, "l": a.l, "prime": a.prime})),
            KtheoryOp::LhpRing(a) => (
                "ktheory lhp-ring".into(),
                json!({"m": a.m, "l": a.l, "prime": a.prime, "seed": seed}),
            ),
            KtheoryOp::PathTable(a) => (
                "ktheory path-table".into(),
                json!({"m": a.m, "l": a.l, "prime": a.prime, "t_cutoff": a.t_cutoff}),
            ),
            KtheoryOp::Coproduct(a) => ("ktheory coproduct".into(), json!({"m": a.m, "l": a.l, "prime": a.prime})),
            KtheoryOp::Euler(a) => ("ktheory euler".into(), json!({"l": a.l})),
        },
        Command::GrFiltration(a) => ("gr-filtration".into(), json!({"r": a.r, "max_degree": a.max_degree})),
        Command::Verify { op } => match op {
            VerifyOp::All { max_m, max_n } => (
                "verify all".into(),
                json!({"max_m": max_m, "max_n": max_n, "seed": seed}),
            ),
        },
    }
}

fn execute(cmd: &Command, seed: u64) -> CmdResult {
    match cmd {
        Command::Fusion { op } => match op {
            FusionOp::Table(a) => commands::fusion_table(a.m, a.n),
            FusionOp::DetT(a) => commands::fusion_det_t(a.m, a.n),
            FusionOp::Douglas(a) => commands::fusion_douglas(a.m, a.n),
        },
        Command::Completion { op } => match op {
            CompletionOp::Rank(a) => commands::completion_rank(a.m, a.n, a.prime),
            CompletionOp::Groebner(a) => commands::completion_groebner(a.base.m, a.base.n, a.base.prime, a.budget),
            CompletionOp::Tower(a) => commands::completion_tower(a.m, a.n, a.prime, a.ell_max, a.precision),
        },
        Command::Ktheory { op } => match op {
            KtheoryOp::YGroup(a) => commands::ktheory_y_group(a.m, a.l, a.prime),
            KtheoryOp::LhpRing(a) => commands::ktheory_lhp_ring(a.m, a.l, a.prime, seed),
            KtheoryOp::PathTable(a) => commands::ktheory_path_table(a.m, a.l, a.prime, a.t_cutoff),
            KtheoryOp::Coproduct(a) => commands::ktheory_coproduct(a.m, a.l, a.prime),
            KtheoryOp::Euler(a) => commands::ktheory_euler(a.l),
        },
        Command::GrFiltration(a) => commands::gr_filtration(a.r, a.max_degree),
        Command::Verify { op } => match op {
            VerifyOp::All { max_m, max_n } => {
                if *max_m < 3 {
                    return Err(CliError::Usage("--max-m must be at least 3".into()));
                }
                serde_json::to_value(verify::verify_all(*max_m, *max_n, seed))
                    .map_err(|e| CliError::Failure(e.to_string()))
            }
        },
    }
}

/// Computes, or fetches from the cache, the JSON value for a parsed command line.
pub fn evaluate(cli: &Cli) -> CmdResult {
    let cache = match &cli.cache_dir {
        Some(dir) => Some(Cache::new(dir).map_err(|e| CliError::Failure(format!("cache dir: {e}")))?),
        None => None,
    };
    let (op, params) = describe(&cli.command, cli.seed);
    let key = cache_key(&op, &params);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(hit);
    }
    let v = execute(&cli.command, cli.seed)?;
    if let Some(c) = &cache {
        c.put(&key, &v)
            .map_err(|e| CliError::Failure(format!("cache write: {e}")))?;
    }
    Ok(v)
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    init_workers();
    match evaluate(&cli) {
        Ok(v) => {
            let text = output::render(&v, cli.format);
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            if output::verdict(&v) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            EXIT_MISMATCH
        }
    }
}
