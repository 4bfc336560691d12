use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use hypersat::bounds::{conjecture_pj, pj_qk, sat_interval, SatInterval};
use hypersat::codes::{hamming_code, verify_pds, weichsel_pds};
use hypersat::constructions::{construct, rational_string, verify, Method};
use hypersat::cube::full_cube;
use hypersat::io::{parse_edge_list, write_dot, write_edge_list, write_vertex_list};
use hypersat::saturation::is_saturated;
use hypersat::{Error, Tree};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "hypersat", version, about = "Tree-saturated subgraphs of the hypercube")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a saturated-subgraph candidate and print its report.
    Construct {
        #[arg(long)]
        tree: Tree,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Write the graph (.txt edge list, .dot) or the report (.json).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run the exhaustive saturation check.
        #[arg(long)]
        verify: bool,
    },
    /// Check an edge-list graph for saturation.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: Tree,
    },
    /// Lower, upper and exact saturation numbers.
    Satnum {
        #[arg(long)]
        tree: Tree,
        #[arg(long)]
        n: u32,
    },
    /// Print a Hamming code or a perfect dominating set of subcubes.
    Codes {
        #[arg(long, value_enum)]
        kind: CodeChoice,
        #[arg(long)]
        n: u32,
        /// Code block length is 2^s - 1 (weichsel only).
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// P_j(Q_k) by search, optionally against the binomial-sum prediction.
    Pj {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        conjecture: bool,
    },
    /// Bounds for a range of trees in one family.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive range `a..b` of the family parameter.
        #[arg(long)]
        range: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeChoice {
    Hamming,
    Weichsel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Paths,
    Stars,
    Caterpillars,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

struct Outcome {
    stdout: String,
    ok: bool,
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn with_schema(mut v: serde_json::Value) -> serde_json::Value {
    if let serde_json::Value::Object(map) = &mut v {
        let mut out = serde_json::Map::new();
        out.insert("schema".into(), json!(SCHEMA));
        out.append(map);
        return serde_json::Value::Object(out);
    }
    json!({ "schema": SCHEMA, "value": v })
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Construct { tree, n, method, out, verify: check } => {
            let mut c = construct(&tree, n, method)?;
            if check {
                verify(&mut c, &tree)?;
            }
            let report = with_schema(serde_json::to_value(&c.report)?);
            let text = to_json(&report)?;
            if let Some(path) = &out {
                match path.extension().and_then(|e| e.to_str()) {
                    Some("dot") => write_file(path, &write_dot(&c.graph, &tree.literal()))?,
                    Some("json") => write_file(path, &text)?,
                    _ => write_file(path, &write_edge_list(&c.graph))?,
                }
            }
            let ok = c.report.hypotheses_met && c.report.verified != Some(false);
            Ok(Outcome { stdout: text, ok })
        }
        Command::Verify { graph, tree } => {
            let text = fs::read_to_string(&graph).with_context(|| format!("reading {}", graph.display()))?;
            let g = parse_edge_list(&text)?;
            let r = is_saturated(&g, &tree)?;
            let ok = r.saturated;
            Ok(Outcome { stdout: to_json(&with_schema(serde_json::to_value(&r)?))?, ok })
        }
        Command::Satnum { tree, n } => {
            let s = sat_interval(&tree, n)?;
            Ok(Outcome { stdout: to_json(&with_schema(serde_json::to_value(&s)?))?, ok: true })
        }
        Command::Codes { kind, n, s, json: as_json } => {
            let set = match kind {
                CodeChoice::Hamming => {
                    if n < 3 || !(n + 1).is_power_of_two() {
                        return Err(Error::InvalidParameter(format!("Hamming codes need n = 2^i - 1 >= 3, got {n}")).into());
                    }
                    hamming_code((n + 1).trailing_zeros())?
                }
                CodeChoice::Weichsel => {
                    let s = s.ok_or_else(|| Error::InvalidParameter("weichsel needs --s".into()))?;
                    weichsel_pds(n, s)?
                }
            };
            let report = verify_pds(&set, &full_cube(n)?)?;
            let stdout = if as_json {
                to_json(&json!({
                    "schema": SCHEMA,
                    "kind": set.kind(),
                    "n": n,
                    "members": set.render(),
                    "report": report,
                }))?
            } else {
                write_vertex_list(set.members(), n)
            };
            Ok(Outcome { stdout, ok: report.pass })
        }
        Command::Pj { j, k, conjecture } => {
            let value = if conjecture {
                serde_json::to_value(conjecture_pj(j, k)?)?
            } else {
                json!({ "j": j, "k": k, "value": pj_qk(j, k)? })
            };
            Ok(Outcome { stdout: to_json(&with_schema(value))?, ok: true })
        }
        Command::Table { family, range, n, format } => {
            let (a, b) = parse_range(&range)?;
            let mut rows = Vec::new();
            let mut skipped = Vec::new();
            for tree in family_trees(family, a, b)? {
                match sat_interval(&tree, n) {
                    Ok(row) => rows.push(row),
                    Err(e) => skipped.push(json!({ "tree": tree.literal(), "reason": e.to_string() })),
                }
            }
            let stdout = match format {
                Format::Json => to_json(&json!({ "schema": SCHEMA, "rows": rows, "skipped": skipped }))?,
                Format::Text => render_table(&rows),
            };
            Ok(Outcome { stdout, ok: true })
        }
    }
}

fn parse_range(s: &str) -> anyhow::Result<(u32, u32)> {
    let parsed = s.split_once("..").and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    match parsed {
        Some((a, b)) if a <= b => Ok((a, b)),
        _ => Err(Error::Parse(format!("range must look like a..b with a <= b, got {s:?}")).into()),
    }
}

fn family_trees(family: Family, a: u32, b: u32) -> anyhow::Result<Vec<Tree>> {
    let mut out = Vec::new();
    for k in a..=b {
        let k = k as usize;
        match family {
            Family::Paths => out.push(hypersat::tree::build_path(k)?),
            Family::Stars => out.push(hypersat::tree::build_star(k)?),
            Family::Caterpillars => {
                if k < 2 {
                    bail!(Error::InvalidParameter("caterpillar degrees start at 2".into()));
                }
                for r in 2..=k {
                    out.push(hypersat::tree::build_caterpillar(&[k, r])?);
                }
            }
        }
    }
    Ok(out)
}

fn render_table(rows: &[SatInterval]) -> String {
    let header = ["tree", "n", "lower", "exact", "upper", "method", "stated"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
            [
                r.tree.clone(),
                r.n.to_string(),
                rational_string(&r.lower),
                opt(r.exact),
                opt(r.upper),
                r.upper_method.clone().unwrap_or_else(|| "-".into()),
                r.stated_upper.as_ref().map_or("-".into(), rational_string),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: &[String]| {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let mut s = parts.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(&header.map(String::from));
    for row in &cells {
        out.push_str(&line(row));
    }
    out
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::InvalidParameter(_)
            | Error::Parse(_)
            | Error::DimensionOutOfRange(_)
            | Error::DimensionMismatch { .. }
            | Error::NotACubeEdge(_),
        ) => 2,
        Some(_) => 1,
        None if err.downcast_ref::<std::io::Error>().is_some() => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
