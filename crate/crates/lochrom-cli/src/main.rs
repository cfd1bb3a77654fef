//! `lochrom`: build, verify, solve, construct and certify locating colorings
//! of complete n-ary trees.
//!
//! Every subcommand writes one JSON envelope to stdout with an explicit
//! status (`ok`, `not-locating`, `unknown`, `error`) and a `stats` block for
//! timing and search counters; a one-line human summary goes to stderr.
//! Exit codes: 0 ok, 2 verification-negative, 3 unknown/budget, 4 input
//! error. `LOCHROM_MAX_NODES` and `LOCHROM_MAX_SECONDS` set default search
//! budgets; flags override them.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lochrom::bounds::{
    bounds_grid_csv, find_threshold, recursive_upper_bound, tightness_certificate,
};
use lochrom::coloring::to_dot_colored;
use lochrom::construct::{construct_coloring, ConstructError, Stage};
use lochrom::solver::{chi_l_exact, LowerEvidence, SolveOutcome};
use lochrom::{
    color_codes, is_locating, Budget, Coloring, ColoringFile, LocatingVerdict, NaryTree,
    SolverConfig,
};

#[derive(Parser)]
#[command(name = "lochrom", about = "Locating colorings of complete n-ary trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build T(n,k) and export it.
    Tree {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: TreeFormat,
        /// Annotate DOT vertices with their level.
        #[arg(long)]
        levels: bool,
        /// Write the export here instead of embedding it in the envelope.
        #[arg(short = 'o', long)]
        out: Option<String>,
    },
    /// Verify a coloring file against T(n,k).
    Verify {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        /// Coloring JSON: {"n":…, "k":…, "m":…, "colors":[…]}.
        #[arg(long)]
        coloring: String,
        /// Also write a color-annotated DOT file.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Compute the locating chromatic number of T(n,k) exactly.
    Solve {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_seconds: Option<u64>,
        #[arg(long, default_value = "1")]
        workers: usize,
        /// Disable sibling-subtree symmetry pruning.
        #[arg(long)]
        no_symmetry: bool,
        /// Write the witness coloring here.
        #[arg(long)]
        witness_out: Option<String>,
    },
    /// Build the recursive locating coloring of T(n,k) with shell radius t.
    Construct {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(short = 't', long)]
        t: u32,
        /// Write the coloring JSON here.
        #[arg(short = 'o', long)]
        out: Option<String>,
        #[arg(long)]
        trace_out: Option<String>,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Upper and lower bounds for T(n,k), or a CSV grid.
    Bounds {
        #[arg(short = 'n', long)]
        n: Option<u64>,
        #[arg(short = 'k', long)]
        k: Option<u64>,
        /// Emit a CSV grid over 2..=max-n and 1..=max-k instead.
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_k: Option<u64>,
        #[arg(short = 'o', long)]
        out: Option<String>,
    },
    /// Exact-integer tightness certificate for T(n,k), k >= 4.
    Certify {
        #[arg(short = 'n', long)]
        n: u64,
        #[arg(short = 'k', long)]
        k: u64,
    },
    /// Smallest n from which the certificate holds through n-max.
    Threshold {
        #[arg(short = 'k', long)]
        k: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// CSV table of exact values over a small grid.
    Table {
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_seconds: Option<u64>,
        #[arg(long, default_value = "1")]
        workers: usize,
        #[arg(short = 'o', long)]
        out: Option<String>,
    },
}

struct CmdOutput {
    status: &'static str,
    result: Value,
    stats: Value,
}

impl CmdOutput {
    fn ok(result: Value) -> Self {
        CmdOutput {
            status: "ok",
            result,
            stats: json!({}),
        }
    }

    fn exit_code(&self) -> u8 {
        match self.status {
            "ok" => 0,
            "not-locating" => 2,
            "unknown" => 3,
            _ => 4,
        }
    }
}

struct InputError(String);

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn env_budget(max_nodes: Option<u64>, max_seconds: Option<u64>) -> Budget {
    let env_u64 = |name: &str| std::env::var(name).ok().and_then(|v| v.parse().ok());
    Budget {
        max_nodes: max_nodes.or_else(|| env_u64("LOCHROM_MAX_NODES")),
        max_millis: max_seconds
            .or_else(|| env_u64("LOCHROM_MAX_SECONDS"))
            .map(|s| s * 1000),
    }
}

fn write_or_embed(
    out: &Option<String>,
    payload: &str,
    key: &str,
    result: &mut serde_json::Map<String, Value>,
) -> Result<(), InputError> {
    match out {
        Some(path) => {
            fs::write(path, payload)?;
            result.insert(format!("{key}_path"), json!(path));
        }
        None => {
            result.insert(key.to_string(), json!(payload));
        }
    }
    Ok(())
}

fn coloring_to_json(tree: &NaryTree, coloring: &Coloring) -> Value {
    json!({
        "n": tree.branching(),
        "k": tree.depth(),
        "m": coloring.palette_size(),
        "colors": coloring.colors(),
    })
}

fn cmd_tree(
    n: u32,
    k: u32,
    format: TreeFormat,
    levels: bool,
    out: Option<String>,
) -> Result<CmdOutput, InputError> {
    let tree = NaryTree::new(n, k)?;
    let mut result = serde_json::Map::new();
    result.insert("n".into(), json!(n));
    result.insert("k".into(), json!(k));
    result.insert("vertices".into(), json!(tree.vertex_count()));
    match format {
        TreeFormat::Json => {
            let descriptor = tree.descriptor_json().to_string();
            write_or_embed(&out, &descriptor, "descriptor", &mut result)?;
        }
        TreeFormat::Dot => {
            let dot = tree.to_dot(levels);
            write_or_embed(&out, &dot, "dot", &mut result)?;
        }
    }
    Ok(CmdOutput::ok(Value::Object(result)))
}

fn cmd_verify(
    n: u32,
    k: u32,
    coloring_path: &str,
    dot: Option<String>,
) -> Result<CmdOutput, InputError> {
    let tree = NaryTree::new(n, k)?;
    let raw = fs::read_to_string(coloring_path)?;
    let file: ColoringFile = serde_json::from_str(&raw)?;
    let coloring = file.into_coloring(&tree)?;
    if let Some(path) = &dot {
        fs::write(path, to_dot_colored(&tree, &coloring))?;
    }
    let verdict = is_locating(&tree, &coloring)?;
    Ok(match verdict {
        LocatingVerdict::Locating => CmdOutput::ok(json!({ "verdict": "locating" })),
        LocatingVerdict::CodeClash { u, w } => {
            let codes = color_codes(&tree, &coloring)?;
            CmdOutput {
                status: "not-locating",
                result: json!({
                    "verdict": "code-clash",
                    "u": u,
                    "w": w,
                    "code_u": codes.code(u),
                    "code_w": codes.code(w),
                }),
                stats: json!({}),
            }
        }
        LocatingVerdict::ImproperEdge { parent, child } => CmdOutput {
            status: "not-locating",
            result: json!({
                "verdict": "improper-edge",
                "parent": parent,
                "child": child,
            }),
            stats: json!({}),
        },
    })
}

fn cmd_solve(
    n: u32,
    k: u32,
    max_nodes: Option<u64>,
    max_seconds: Option<u64>,
    workers: usize,
    no_symmetry: bool,
    witness_out: Option<String>,
) -> Result<CmdOutput, InputError> {
    let tree = NaryTree::new(n, k)?;
    let config = SolverConfig {
        budget: env_budget(max_nodes, max_seconds),
        workers,
        sibling_symmetry: !no_symmetry,
    };
    Ok(match chi_l_exact(&tree, &config) {
        SolveOutcome::Exact(r) => {
            let mut result = serde_json::Map::new();
            result.insert("chi_l".into(), json!(r.chi_l));
            result.insert(
                "lower_evidence".into(),
                match r.lower_evidence {
                    LowerEvidence::TwinBound { bound } => {
                        json!({ "kind": "twin-bound", "bound": bound })
                    }
                    LowerEvidence::ExhaustedSearch { palette } => {
                        json!({ "kind": "exhausted-search", "palette": palette })
                    }
                },
            );
            let witness = coloring_to_json(&tree, &r.witness).to_string();
            write_or_embed(&witness_out, &witness, "witness", &mut result)?;
            CmdOutput {
                status: "ok",
                result: Value::Object(result),
                stats: json!({
                    "nodes": r.stats.nodes,
                    "elapsed_ms": r.stats.elapsed_ms,
                    "workers": workers,
                }),
            }
        }
        SolveOutcome::Bracket {
            lower,
            upper,
            stats,
        } => CmdOutput {
            status: "unknown",
            result: json!({ "lower": lower, "upper": upper }),
            stats: json!({
                "nodes": stats.nodes,
                "elapsed_ms": stats.elapsed_ms,
                "workers": workers,
            }),
        },
    })
}

fn cmd_construct(
    n: u32,
    k: u32,
    t: u32,
    out: Option<String>,
    trace_out: Option<String>,
    dot: Option<String>,
) -> Result<CmdOutput, InputError> {
    match construct_coloring(n, k, t) {
        Ok(c) => {
            // Re-verify before reporting success.
            let verdict = is_locating(&c.tree, &c.coloring)?;
            if !verdict.is_locating() {
                return Ok(CmdOutput {
                    status: "error",
                    result: json!({ "message": "construction failed re-verification" }),
                    stats: json!({}),
                });
            }
            let mut result = serde_json::Map::new();
            result.insert("n".into(), json!(n));
            result.insert("k".into(), json!(k));
            result.insert("t".into(), json!(t));
            result.insert("palette".into(), json!(c.coloring.palette_size()));
            result.insert("vertices".into(), json!(c.tree.vertex_count()));
            result.insert("verified".into(), json!("locating"));
            let coloring_json = coloring_to_json(&c.tree, &c.coloring).to_string();
            write_or_embed(&out, &coloring_json, "coloring", &mut result)?;
            let trace_json = c.trace.to_json().to_string();
            write_or_embed(&trace_out, &trace_json, "trace", &mut result)?;
            if let Some(path) = &dot {
                fs::write(path, to_dot_colored(&c.tree, &c.coloring))?;
            }
            Ok(CmdOutput::ok(Value::Object(result)))
        }
        Err(ConstructError::VerificationFailed { stage, u, w }) => Ok(CmdOutput {
            status: "not-locating",
            result: json!({
                "stage": match stage {
                    Stage::Base => "base".to_string(),
                    Stage::Lift(i) => format!("lift-{}", i + 1),
                },
                "witness": { "u": u, "w": w },
            }),
            stats: json!({}),
        }),
        Err(e) => Err(InputError(e.to_string())),
    }
}

fn cmd_bounds(
    n: Option<u64>,
    k: Option<u64>,
    grid: bool,
    max_n: Option<u64>,
    max_k: Option<u64>,
    out: Option<String>,
) -> Result<CmdOutput, InputError> {
    if grid {
        let (max_n, max_k) = match (max_n, max_k) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(InputError("--grid needs --max-n and --max-k".into())),
        };
        let csv = bounds_grid_csv(max_n, max_k)?;
        let mut result = serde_json::Map::new();
        write_or_embed(&out, &csv, "csv", &mut result)?;
        return Ok(CmdOutput::ok(Value::Object(result)));
    }
    let (n, k) = match (n, k) {
        (Some(n), Some(k)) => (n, k),
        _ => return Err(InputError("bounds needs -n and -k (or --grid)".into())),
    };
    let report = recursive_upper_bound(n, k)?;
    Ok(CmdOutput::ok(report.to_json()))
}

fn cmd_certify(n: u64, k: u64) -> Result<CmdOutput, InputError> {
    let report = tightness_certificate(n, k)?;
    Ok(CmdOutput::ok(report.to_json()))
}

fn cmd_threshold(k: u64, n_max: u64) -> Result<CmdOutput, InputError> {
    let threshold = find_threshold(k, n_max)?;
    Ok(CmdOutput::ok(json!({
        "k": k,
        "n_max": n_max,
        "threshold": threshold,
        "meaning": "certificate holds for every n from threshold through n_max; an upper bound on the true turning point",
    })))
}

fn cmd_table(
    max_n: u32,
    max_k: u32,
    max_nodes: Option<u64>,
    max_seconds: Option<u64>,
    workers: usize,
    out: Option<String>,
) -> Result<CmdOutput, InputError> {
    if max_n < 2 || max_k < 1 {
        return Err(InputError(
            "table needs --max-n >= 2 and --max-k >= 1".into(),
        ));
    }
    let config = SolverConfig {
        budget: env_budget(max_nodes, max_seconds),
        workers,
        sibling_symmetry: true,
    };
    let mut csv = String::from("n,k,status,chi_l,lower,upper\n");
    let mut nodes = 0u64;
    for n in 2..=max_n {
        for k in 1..=max_k {
            let tree = NaryTree::new(n, k)?;
            match chi_l_exact(&tree, &config) {
                SolveOutcome::Exact(r) => {
                    csv.push_str(&format!(
                        "{n},{k},exact,{},{},{}\n",
                        r.chi_l, r.chi_l, r.chi_l
                    ));
                    nodes += r.stats.nodes;
                }
                SolveOutcome::Bracket {
                    lower,
                    upper,
                    stats,
                } => {
                    csv.push_str(&format!("{n},{k},unknown,,{lower},{upper}\n"));
                    nodes += stats.nodes;
                }
            }
        }
    }
    let mut result = serde_json::Map::new();
    result.insert(
        "budget_note".into(),
        json!("unknown rows mark per-cell budget exhaustion; lower/upper always bracket the value"),
    );
    write_or_embed(&out, &csv, "csv", &mut result)?;
    Ok(CmdOutput {
        status: "ok",
        result: Value::Object(result),
        stats: json!({ "nodes": nodes, "workers": workers }),
    })
}

fn dispatch(command: Command) -> Result<CmdOutput, InputError> {
    match command {
        Command::Tree {
            n,
            k,
            format,
            levels,
            out,
        } => cmd_tree(n, k, format, levels, out),
        Command::Verify {
            n,
            k,
            coloring,
            dot,
        } => cmd_verify(n, k, &coloring, dot),
        Command::Solve {
            n,
            k,
            max_nodes,
            max_seconds,
            workers,
            no_symmetry,
            witness_out,
        } => cmd_solve(
            n,
            k,
            max_nodes,
            max_seconds,
            workers,
            no_symmetry,
            witness_out,
        ),
        Command::Construct {
            n,
            k,
            t,
            out,
            trace_out,
            dot,
        } => cmd_construct(n, k, t, out, trace_out, dot),
        Command::Bounds {
            n,
            k,
            grid,
            max_n,
            max_k,
            out,
        } => cmd_bounds(n, k, grid, max_n, max_k, out),
        Command::Certify { n, k } => cmd_certify(n, k),
        Command::Threshold { k, n_max } => cmd_threshold(k, n_max),
        Command::Table {
            max_n,
            max_k,
            max_nodes,
            max_seconds,
            workers,
            out,
        } => cmd_table(max_n, max_k, max_nodes, max_seconds, workers, out),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Tree { .. } => "tree",
        Command::Verify { .. } => "verify",
        Command::Solve { .. } => "solve",
        Command::Construct { .. } => "construct",
        Command::Bounds { .. } => "bounds",
        Command::Certify { .. } => "certify",
        Command::Threshold { .. } => "threshold",
        Command::Table { .. } => "table",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let output = match dispatch(cli.command) {
        Ok(output) => output,
        Err(InputError(message)) => CmdOutput {
            status: "error",
            result: json!({ "message": message }),
            stats: json!({}),
        },
    };
    let mut stats = output.stats.clone();
    if let Value::Object(map) = &mut stats {
        map.insert("wall_ms".into(), json!(start.elapsed().as_millis() as u64));
    }
    let envelope = json!({
        "command": name,
        "status": output.status,
        "result": output.result,
        "stats": stats,
    });
    println!("{}", serde_json::to_string_pretty(&envelope).unwrap());
    eprintln!("{name}: {}", output.status);
    ExitCode::from(output.exit_code())
}
