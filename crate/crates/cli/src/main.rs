use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use antimagic::bounds::beta;
use antimagic::construct::{
    all_rows, build_jellyfish_c3_labeling, construct_cycle, construct_union_cycle_c3, HostedLabeling,
};
use antimagic::io::{graph_from_spec, parse_labeling_with_meta, read_file, to_dot, write_labeling};
use antimagic::labeling::{check_threshold_hypothesis, check_two_largest_hypothesis, EdgeLabeling};
use antimagic::search::{search_antimagic, tau_exact, SearchStatus, TauValue};

const EXIT_OK: u8 = 0;
const EXIT_NOT_ANTIMAGIC: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "antimagic", version, about = "Antimagic labelings of graphs joined with copies of P3")]
struct Cli {
    /// Print structured JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact upper bound beta(G) and its ingredients.
    Bounds { graph: String },
    /// Check a labeling file and report which extension hypotheses it meets.
    Verify {
        file: PathBuf,
        /// Number of P3 components that are the added paths (the rest is the host).
        #[arg(long)]
        t: Option<usize>,
    },
    /// Build one of the explicit labelings.
    Construct {
        #[command(subcommand)]
        family: ConstructFamily,
        /// Write the labeling file here instead of standard output.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Decide antimagicness by exhaustive search.
    Search {
        graph: String,
        /// Maximum number of search-tree nodes.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Search G ∪ tP3 for t = 0, 1, ... to pin down tau(G).
    Tau {
        graph: String,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
        /// Node budget shared by all values of t.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Re-validate every embedded table row.
    TablesVerify,
    /// Render a labeling file as Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructFamily {
    /// J(C3, r) ∪ tP3 with r >= 11 and t <= 6r + 22.
    JellyfishC3 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    /// C_n ∪ tP3 with t <= min(22, beta(C_n)).
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// C_n ∪ C3 ∪ tP3 with t <= 15.
    UnionC3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
}

fn emit(json: bool, value: serde_json::Value, lines: &[(&str, String)]) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON value serializes"));
    } else {
        for (k, v) in lines {
            println!("{k}: {v}");
        }
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(" ")
    }
}

fn bounds(spec: &str, json: bool) -> Result<u8> {
    let g = graph_from_spec(spec)?;
    let r = beta(&g);
    let mut lines = vec![
        ("n", r.n.to_string()),
        ("m", r.m.to_string()),
        ("internal_edges", r.k.to_string()),
        ("p3_components", r.p3_components.to_string()),
        ("bound_first", r.bound_first.to_string()),
        ("bound_first_floor", r.bound_first_floor.to_string()),
        ("bound_second", r.bound_second.to_string()),
        ("beta", r.beta.to_string()),
        ("valid", r.valid.to_string()),
    ];
    if !r.valid {
        lines.push(("invalid_reasons", format!("{:?}", r.invalid_reasons)));
    }
    emit(json, serde_json::to_value(&r)?, &lines);
    Ok(EXIT_OK)
}

/// Splits a labeling into host and paths. Precedence: `--t`, then the
/// `host-edges` metadata, then every P3 component counted as a path.
fn host_split(l: &EdgeLabeling, meta: &[(String, String)], t: Option<usize>) -> Result<HostedLabeling> {
    let g = l.graph();
    let lookup = |key: &str| meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
    if t.is_none() {
        if let Some(h) = lookup("host-edges") {
            let h: usize = h.parse().context("bad `host-edges` metadata")?;
            let t = (g.edge_count() - h.min(g.edge_count())) / 2;
            return Ok(HostedLabeling { labeling: l.clone(), host_edges: (0..h).collect(), t });
        }
    }
    let inc = g.incidence();
    let comps = g.components();
    let is_p3 = |c: &Vec<usize>| c.len() == 3 && c.iter().map(|&v| inc[v].len()).sum::<usize>() == 4;
    let p3: Vec<&Vec<usize>> = comps.iter().filter(|c| is_p3(c)).collect();
    let t = t.unwrap_or(p3.len());
    if t > p3.len() {
        bail!("--t {t} but the graph has only {} P3 components", p3.len());
    }
    let paths = &p3[p3.len() - t..];
    let mut on_path = vec![false; g.vertex_count()];
    for c in paths {
        for &v in c.iter() {
            on_path[v] = true;
        }
    }
    let host_edges = (0..g.edge_count()).filter(|&e| !on_path[g.edge(e).0]).collect();
    Ok(HostedLabeling { labeling: l.clone(), host_edges, t })
}

fn load(file: &Path) -> Result<(EdgeLabeling, Vec<(String, String)>)> {
    parse_labeling_with_meta(&read_file(file)?).with_context(|| format!("{}", file.display()))
}

fn verify(file: &Path, t: Option<usize>, json: bool) -> Result<u8> {
    let (l, meta) = load(file)?;
    let h = host_split(&l, &meta, t)?;
    let report = l.verify_antimagic();
    let two_largest = check_two_largest_hypothesis(&l);
    let threshold: Vec<usize> =
        check_threshold_hypothesis(&l, &h.host_edges, h.t).iter().map(|q| q.vertex).collect();
    let (n, m) = h.host_size();
    let pairs = report.duplicate_pairs.iter().map(|p| format!("{}~{}@{}", p.u, p.v, p.phi));
    emit(
        json,
        json!({
            "report": report,
            "host": { "n": n, "m": m, "t": h.t },
            "two_largest_qualifiers": two_largest,
            "threshold_qualifiers": threshold,
        }),
        &[
            ("antimagic", report.antimagic.to_string()),
            ("max_phi", report.max_phi.to_string()),
            ("duplicate_pairs", join(pairs)),
            ("host", format!("n={n} m={m} t={}", h.t)),
            ("two_largest_qualifiers", join(&two_largest)),
            ("threshold_qualifiers", join(&threshold)),
        ],
    );
    Ok(if report.antimagic { EXIT_OK } else { EXIT_NOT_ANTIMAGIC })
}

fn construct(family: ConstructFamily, out: Option<PathBuf>, json: bool) -> Result<u8> {
    let (name, h) = match family {
        ConstructFamily::JellyfishC3 { r, t } => (format!("jellyfish-c3 r={r}"), build_jellyfish_c3_labeling(r, t)?),
        ConstructFamily::Cycle { n, t } => (format!("cycle n={n}"), construct_cycle(n, t)?),
        ConstructFamily::UnionC3 { n, t } => (format!("union-c3 n={n}"), construct_union_cycle_c3(n, t)?),
    };
    let meta = vec![
        ("family".to_string(), name),
        ("t".to_string(), h.t.to_string()),
        ("host-edges".to_string(), h.host_edges.len().to_string()),
    ];
    let text = if json {
        serde_json::to_string_pretty(&h)? + "\n"
    } else {
        write_labeling(&h.labeling, &meta)
    };
    match out {
        Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn status_code(s: SearchStatus) -> u8 {
    match s {
        SearchStatus::Found => EXIT_OK,
        SearchStatus::NotAntimagic => EXIT_NOT_ANTIMAGIC,
        SearchStatus::BudgetExceeded => EXIT_BUDGET,
    }
}

fn search(spec: &str, budget: Option<u64>, threads: usize, json: bool) -> Result<u8> {
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let g = graph_from_spec(spec)?;
    let out = search_antimagic(&g, budget, threads);
    let mut lines = vec![("status", format!("{:?}", out.status)), ("nodes", out.nodes_explored.to_string())];
    if let Some(l) = &out.labeling {
        lines.push(("labels", join(l.labels())));
    }
    emit(json, serde_json::to_value(&out)?, &lines);
    Ok(status_code(out.status))
}

fn tau(spec: &str, t_max: usize, budget: Option<u64>, json: bool) -> Result<u8> {
    let g = graph_from_spec(spec)?;
    let res = tau_exact(&g, t_max, budget);
    let shown = match res.tau {
        TauValue::MinusInfinity => "-inf".to_string(),
        TauValue::Exact(t) => t.to_string(),
        TauValue::LowerBound(t) => format!(">= {t}"),
        TauValue::Undetermined => "undetermined".to_string(),
    };
    let keys: Vec<String> = (0..res.per_t.len()).map(|t| format!("t={t}")).collect();
    let mut lines: Vec<(&str, String)> = keys
        .iter()
        .zip(&res.per_t)
        .map(|(k, o)| (k.as_str(), format!("{:?} ({} nodes)", o.status, o.nodes_explored)))
        .collect();
    lines.push(("tau", shown));
    emit(json, serde_json::to_value(&res)?, &lines);
    let budget_hit = res.per_t.last().is_some_and(|o| o.status == SearchStatus::BudgetExceeded);
    Ok(match res.tau {
        TauValue::MinusInfinity => EXIT_NOT_ANTIMAGIC,
        _ if budget_hit => EXIT_BUDGET,
        _ => EXIT_OK,
    })
}

fn tables_verify(json: bool) -> Result<u8> {
    let rows = all_rows()?;
    let mut failures = 0;
    let mut results = Vec::new();
    for row in &rows {
        let problems = row.check();
        if !problems.is_empty() {
            failures += 1;
        }
        if !json {
            let verdict = if problems.is_empty() { "ok".to_string() } else { problems.join("; ") };
            println!("{}: {verdict}", row.source);
        }
        results.push(json!({ "source": row.source, "problems": problems }));
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&json!({ "rows": results, "failures": failures }))?);
    } else {
        println!("rows: {}, failures: {failures}", rows.len());
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_NOT_ANTIMAGIC })
}

fn export_dot(file: &Path, out: Option<PathBuf>) -> Result<u8> {
    let (l, _) = load(file)?;
    let dot = to_dot(&l);
    match out {
        Some(path) => std::fs::write(&path, dot).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{dot}"),
    }
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Bounds { graph } => bounds(&graph, json),
        Command::Verify { file, t } => verify(&file, t, json),
        Command::Construct { family, out } => construct(family, out, json),
        Command::Search { graph, budget, threads } => search(&graph, budget, threads, json),
        Command::Tau { graph, t_max, budget } => tau(&graph, t_max, budget, json),
        Command::TablesVerify => tables_verify(json),
        Command::ExportDot { file, out } => export_dot(&file, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
