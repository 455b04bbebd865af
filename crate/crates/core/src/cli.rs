//! The `ordram` command line: `catalog`, `verify`, `search`, `ramsey`, `bounds`.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error, 3 budget
//! exceeded. Standard output carries exactly one JSON document for codes 0, 1
//! and 3; everything else goes to standard error.

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds;
use crate::catalog::{catalog, catalog_entry, GraphName};
use crate::error::{Error, Result};
use crate::graph::{KOrdering, UnorderedGraph};
use crate::json::{read_coloring, read_ordering, ColoringJson};
use crate::search::{self, SearchBudget, SearchOptions, SearchStatus};
use crate::symmetry::one_ordering_classes;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_MAX_NODES: u64 = 100_000_000;
const DEFAULT_MAX_SECONDS: f64 = 300.0;

#[derive(Debug, Parser)]
#[command(name = "ordram", about = "Ordered Ramsey numbers of k-ordered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the connected 4-vertex graphs and their 1-ordering classes.
    Catalog {
        #[arg(long)]
        graph: Option<String>,
    },
    /// Check that a coloring avoids the given orderings.
    Verify {
        certificate: String,
        #[command(flatten)]
        targets: TargetArgs,
    },
    /// Search for an avoiding coloring on n vertices.
    Search {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        targets: TargetArgs,
        #[arg(long)]
        skeleton: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compute the ordered Ramsey number by searching n = 1, 2, ...
    Ramsey {
        #[command(flatten)]
        targets: TargetArgs,
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate closed-form bounds or print the table of known bounds.
    Bounds {
        #[arg(long)]
        table: bool,
        #[arg(long = "path-n")]
        path_n: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        kpnplus: Option<Vec<usize>>,
        #[arg(long)]
        es: Option<usize>,
    },
}

/// Ordering specs: `graph:vertex:label`, `graph:full:l1,l2,..`, `graph`,
/// `kN`, or a path to a k-ordering JSON file.
#[derive(Debug, Args)]
struct TargetArgs {
    /// Same ordering for red and blue.
    #[arg(long)]
    h: Option<String>,
    /// Ordering forbidden in red.
    #[arg(long)]
    h1: Option<String>,
    /// Ordering forbidden in blue.
    #[arg(long)]
    h2: Option<String>,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    #[arg(long = "max-nodes", value_parser = parse_count)]
    max_nodes: Option<u64>,
    #[arg(long = "max-seconds")]
    max_seconds: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Disable fixing pair (1,2) to red.
    #[arg(long = "no-color-swap")]
    no_color_swap: bool,
    /// Keep only reversal-orbit leaders among leaves.
    #[arg(long = "reversal-breaking")]
    reversal_breaking: bool,
}

impl BudgetArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: SearchBudget {
                max_nodes: Some(self.max_nodes.unwrap_or(DEFAULT_MAX_NODES)),
                max_seconds: Some(self.max_seconds.unwrap_or(DEFAULT_MAX_SECONDS)),
            },
            threads: self.threads.max(1),
            color_swap_breaking: !self.no_color_swap,
            reversal_breaking: self.reversal_breaking,
        }
    }
}

/// Accepts `1000`, `10^6`, `1e6` and `1_000_000`.
fn parse_count(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim().replace('_', "");
    let bad = || format!("invalid count `{s}`");
    if let Some((base, exp)) = s.split_once('^') {
        let base: u64 = base.parse().map_err(|_| bad())?;
        let exp: u32 = exp.parse().map_err(|_| bad())?;
        return base.checked_pow(exp).ok_or_else(bad);
    }
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let mant: u64 = mant.parse().map_err(|_| bad())?;
        let exp: u32 = exp.parse().map_err(|_| bad())?;
        return 10u64
            .checked_pow(exp)
            .and_then(|p| p.checked_mul(mant))
            .ok_or_else(bad);
    }
    s.parse().map_err(|_| bad())
}

impl TargetArgs {
    fn resolve(&self) -> Result<(KOrdering, KOrdering)> {
        let h1 = self.h1.as_ref().or(self.h.as_ref());
        let h2 = self.h2.as_ref().or(self.h.as_ref());
        match (h1, h2) {
            (Some(a), Some(b)) => Ok((parse_ordering_spec(a)?, parse_ordering_spec(b)?)),
            _ => Err(Error::BadOrderingSpec(
                "need --h, or both --h1 and --h2".into(),
            )),
        }
    }
}

/// Parses an ordering spec (see [`TargetArgs`]).
pub fn parse_ordering_spec(spec: &str) -> Result<KOrdering> {
    let bad = || Error::BadOrderingSpec(spec.to_string());
    if spec.to_ascii_lowercase().ends_with(".json") || Path::new(spec).is_file() {
        return read_ordering(spec);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let head = parts[0].to_ascii_lowercase();
    if parts.len() == 1 {
        if let Some(size) = head.strip_prefix('k').and_then(|s| s.parse::<usize>().ok()) {
            return Ok(KOrdering::unordered(UnorderedGraph::complete(size)?));
        }
    }
    let entry = catalog_entry(head.parse::<GraphName>()?);
    match parts.as_slice() {
        [_] => Ok(entry.unordered()),
        [_, full, labels] if full.eq_ignore_ascii_case("full") => {
            let labels = labels
                .split(',')
                .map(|l| l.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            entry.fully_ordered(&labels)
        }
        [_, vertex, label] => {
            let label = label.trim().parse::<usize>().map_err(|_| bad())?;
            entry.v_l_ordering(vertex, label)
        }
        _ => Err(bad()),
    }
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: Option<Value>,
    pub stderr: String,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        Self::with(EXIT_OK, payload)
    }

    fn with(exit_code: i32, payload: Value) -> Self {
        Self {
            exit_code,
            payload: Some(payload),
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            payload: None,
            stderr: message.into(),
        }
    }

    /// Standard output text: the JSON payload, pretty-printed.
    pub fn stdout(&self) -> String {
        self.payload
            .as_ref()
            .map(|p| serde_json::to_string_pretty(p).expect("serialisable") + "\n")
            .unwrap_or_default()
    }
}

/// Parses and runs one command line (including the program name).
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandResult {
                exit_code: code,
                payload: None,
                stderr: e.to_string(),
            };
        }
    };
    let result = match cli.command {
        Command::Catalog { graph } => cmd_catalog(graph.as_deref()),
        Command::Verify {
            certificate,
            targets,
        } => cmd_verify(&certificate, &targets),
        Command::Search {
            n,
            targets,
            skeleton,
            budget,
        } => cmd_search(n, &targets, skeleton.as_deref(), &budget),
        Command::Ramsey {
            targets,
            max_n,
            budget,
        } => cmd_ramsey(&targets, max_n, &budget),
        Command::Bounds {
            table,
            path_n,
            kpnplus,
            es,
        } => cmd_bounds(table, path_n, kpnplus.as_deref(), es),
    };
    result.unwrap_or_else(|e| CommandResult::usage(format!("error: {e}")))
}

fn cmd_catalog(graph: Option<&str>) -> Result<CommandResult> {
    let entries = match graph {
        Some(name) => vec![catalog_entry(name.parse()?)],
        None => catalog(),
    };
    let graphs: Vec<Value> = entries
        .iter()
        .map(|entry| {
            let classes: Vec<Value> = one_ordering_classes(entry)
                .iter()
                .map(|c| {
                    let (v, l) = c.representative;
                    json!({
                        "ordering": format!("({},{})", entry.vertex_name(v), l),
                        "vertex": entry.vertex_name(v),
                        "label": l,
                        "class_size": c.members.len(),
                    })
                })
                .collect();
            json!({
                "name": entry.name,
                "vertices": entry.vertex_names,
                "edges": entry
                    .graph
                    .edges()
                    .map(|(i, j)| [entry.vertex_name(i), entry.vertex_name(j)])
                    .collect::<Vec<_>>(),
                "classes": classes,
            })
        })
        .collect();
    Ok(CommandResult::ok(json!({ "graphs": graphs })))
}

fn cmd_verify(path: &str, targets: &TargetArgs) -> Result<CommandResult> {
    let g = read_coloring(path)?;
    let (h1, h2) = targets.resolve()?;
    let report = search::verify_certificate(&g, &h1, &h2)?;
    let mut payload = json!({
        "n": report.n,
        "avoiding": report.avoiding,
        "violations": report.violations,
    });
    if let Some(bound) = report.implied_lower_bound {
        payload["implied_lower_bound"] = json!(bound);
        payload["message"] = json!(format!("R_< >= {bound}"));
        Ok(CommandResult::ok(payload))
    } else {
        payload["message"] = json!(format!(
            "coloring contains {} forbidden copies",
            report.violations.len()
        ));
        Ok(CommandResult::with(EXIT_NEGATIVE, payload))
    }
}

fn cmd_search(n: usize, targets: &TargetArgs, skeleton: Option<&str>, budget: &BudgetArgs) -> Result<CommandResult> {
    let (h1, h2) = targets.resolve()?;
    let skeleton = skeleton.map(read_coloring).transpose()?;
    let outcome = search::find_avoiding_with(n, &h1, &h2, skeleton.as_ref(), &budget.options())?;
    let mut payload = outcome.stats_json();
    payload["n"] = json!(n);
    let code = match &outcome.status {
        SearchStatus::FoundAvoiding(g) => {
            payload["certificate"] = serde_json::to_value(ColoringJson::from(g))?;
            EXIT_OK
        }
        SearchStatus::ExhaustedNoAvoiding => EXIT_NEGATIVE,
        SearchStatus::BudgetExceeded { .. } => EXIT_BUDGET,
    };
    Ok(CommandResult::with(code, payload))
}

fn cmd_ramsey(targets: &TargetArgs, max_n: usize, budget: &BudgetArgs) -> Result<CommandResult> {
    if max_n < 1 {
        return Err(Error::OutOfDomain("--max-n must be at least 1".into()));
    }
    let (h1, h2) = targets.resolve()?;
    let result = search::ordered_ramsey_with(&h1, &h2, max_n, &budget.options())?;
    let code = if result.value.is_some() {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    Ok(CommandResult::with(code, serde_json::to_value(&result)?))
}

fn cmd_bounds(
    table: bool,
    path_n: Option<usize>,
    kpnplus: Option<&[usize]>,
    es: Option<usize>,
) -> Result<CommandResult> {
    let mut out = serde_json::Map::new();
    let mut stderr = String::new();
    if table {
        let rows: Vec<_> = bounds::figure3_table()
            .iter()
            .map(bounds::BoundRecord::table_row)
            .collect();
        out.insert("table".into(), serde_json::to_value(rows)?);
        stderr.push_str(&bounds::figure3_table_text());
    }
    if let Some(n) = path_n {
        out.insert("path_one_ordering_bound".into(), json!(bounds::path_one_ordering_bound(n)?));
    }
    if let Some(&[m, n]) = kpnplus {
        out.insert("complete_vs_path_plus_bound".into(), json!(bounds::complete_vs_path_plus_bound(m, n)?));
    }
    if let Some(n) = es {
        out.insert("erdos_szekeres_path".into(), json!(bounds::erdos_szekeres_path(n)?));
    }
    if out.is_empty() {
        return Ok(CommandResult::usage(
            "bounds: pass --table, --path-n N, --kpnplus M N or --es N",
        ));
    }
    Ok(CommandResult {
        exit_code: EXIT_OK,
        payload: Some(Value::Object(out)),
        stderr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(parse_count("10^6").unwrap(), 1_000_000);
        assert_eq!(parse_count("1e8").unwrap(), 100_000_000);
        assert_eq!(parse_count("1_000").unwrap(), 1000);
        assert!(parse_count("ten").is_err());
    }

    #[test]
    fn ordering_specs() {
        let h = parse_ordering_spec("pan3:e3:2").unwrap();
        assert_eq!(h.label(3), Some(2));
        let dg = parse_ordering_spec("diamond:full:1,2,3,4").unwrap();
        assert_eq!(dg, crate::catalog::diamond_fully_ordered());
        let k5 = parse_ordering_spec("k5").unwrap();
        assert_eq!(k5.graph().edge_count(), 10);
        assert_eq!(parse_ordering_spec("Star4").unwrap().k(), 0);
        assert!(parse_ordering_spec("star4:s9:1").is_err());
        assert!(parse_ordering_spec("star4:s1:x").is_err());
        assert!(parse_ordering_spec("nosuch:a:1").is_err());
        assert!(parse_ordering_spec("missing.json").is_err());
    }

    #[test]
    fn bounds_outputs() {
        let r = run(["ordram", "bounds", "--path-n", "6"]);
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.payload.unwrap()["path_one_ordering_bound"], 8);
        let r = run(["ordram", "bounds", "--kpnplus", "4", "3"]);
        assert_eq!(r.payload.unwrap()["complete_vs_path_plus_bound"], 13);
        let r = run(["ordram", "bounds", "--path-n", "3"]);
        assert_eq!(r.exit_code, EXIT_USAGE);
        assert!(r.payload.is_none());
        assert_eq!(run(["ordram", "bounds"]).exit_code, EXIT_USAGE);
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run(["ordram", "frobnicate"]).exit_code, EXIT_USAGE);
    }
}
