//! `kdense`: k-dense decomposition, extremal constructions and exhaustive
//! search from the command line.
//!
//! Exit codes: 0 ok, 2 usage or input error, 3 certificate failure,
//! 4 inconclusive (budget ran out; partial output is still written).

mod input;
mod render;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kdense_core::constructions::build_recipe;
use kdense_core::density::{analyze, check_propositions, classify_special, dense_hierarchy, k_dense_subgraph};
use kdense_core::graph::{to_edge_list_text, to_graph6};
use kdense_core::search::{
    build_tables, conjecture_check, realization_scan, records_to_csv, search_max_edges, search_min_edges, Budget,
    ConjectureRow, ExtremalRecord, SweepOptions, TableOptions, Verdict,
};
use kdense_core::{Edge, Error};
use serde::Serialize;

use input::GraphSource;

#[derive(Parser, Debug)]
#[command(
    name = "kdense",
    version,
    about = "k-dense graph analysis, constructions and exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format; each verb has its own default and accepted set.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    G6,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Full density report: k*, multiplicities, communities, hierarchy, checks.
    Analyze {
        #[command(flatten)]
        source: GraphSource,
        /// Threshold for DOT edge colouring; defaults to k*.
        #[arg(long)]
        k: Option<usize>,
    },
    /// k-dense subgraphs for every k, or one level with --k.
    Decompose {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build and certify a named construction.
    Construct {
        /// One of: glued-cliques, disconnected-min, clique-chain, min-edge, complement,
        /// max-edge, realization, torus, cut-cliques, clique-copies, octahedron.
        recipe: String,
        /// Density parameter.
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count.
        #[arg(long)]
        n: Option<usize>,
        /// Clique-gluing remainder (glued-cliques).
        #[arg(long)]
        r: Option<usize>,
        /// Edge count (realization) or torus dimension (torus).
        #[arg(long)]
        a: Option<usize>,
        /// Block count for cut-cliques and clique-copies; default 2.
        #[arg(long)]
        copies: Option<usize>,
        /// Also write the certificate JSON to this path.
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
    },
    /// Exhaustive minimum or maximum edge count, or the clique-chain check.
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        /// A value or an inclusive range `a..b` (ranges only for `conjecture`).
        #[arg(long)]
        k: Span,
        #[arg(long)]
        n: Span,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Every edge count admitting a connected k*-dense graph on n vertices.
    Scan {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Structural checks on one graph.
    Verify {
        #[arg(value_enum)]
        what: VerifyKind,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Min, max and realization-set rows over ranges of k and n.
    Tables {
        #[arg(long)]
        k: Span,
        #[arg(long)]
        n: Span,
        /// Largest n searched exhaustively; larger n use constructions only.
        #[arg(long)]
        exhaustive_max_n: Option<usize>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchKind {
    Min,
    Max,
    Conjecture,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyKind {
    Propositions,
    Classification,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Node count (`500000`) or wall time (`30s`).
    #[arg(long, value_parser = parse_budget)]
    budget: Option<Budget>,
    /// Exceed the default size guards; needs --budget.
    #[arg(long)]
    force: bool,
    /// Record wall time (output is then no longer byte-reproducible).
    #[arg(long)]
    timings: bool,
}

/// Inclusive range; a single value is a one-element range.
#[derive(Clone, Debug)]
struct Span(RangeInclusive<usize>);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a number: {t:?}"));
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
            None => {
                let v = num(s)?;
                v..=v
            }
        };
        if range.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(range))
    }
}

impl Span {
    fn single(&self, flag: &str) -> Result<usize, Failure> {
        if self.0.start() == self.0.end() {
            Ok(*self.0.start())
        } else {
            Err(Failure::Usage(format!("--{flag} takes a single value here")))
        }
    }
}

fn parse_budget(s: &str) -> Result<Budget, String> {
    match s.strip_suffix('s') {
        Some(secs) => secs
            .parse::<f64>()
            .ok()
            .filter(|v| *v > 0.0)
            .map(Budget::seconds)
            .ok_or_else(|| format!("bad time budget {s:?}")),
        None => s
            .parse::<u64>()
            .map(Budget::nodes)
            .map_err(|_| format!("bad node budget {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Certificate(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Certificate { .. } => Failure::Certificate(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a verb produced: the rendered output and whether it is complete.
struct Output {
    body: String,
    inconclusive: bool,
}

impl Output {
    fn done(body: String) -> Self {
        Output {
            body,
            inconclusive: false,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn pick(verb: &str, requested: Option<Format>, allowed: &[Format]) -> Result<Format, Failure> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(format!(
            "{verb} does not support --format {}",
            f.to_possible_value().expect("no skipped variants").get_name()
        ))),
    }
}

fn threads() -> Result<Option<usize>, Failure> {
    match std::env::var("KDENSE_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| Failure::Usage(format!("KDENSE_THREADS must be a positive integer, got {v:?}"))),
    }
}

impl SweepArgs {
    fn options(&self) -> Result<SweepOptions, Failure> {
        Ok(SweepOptions {
            budget: self.budget.unwrap_or_default(),
            threads: threads()?,
            force: self.force,
        })
    }
}

fn strip_timing(mut r: ExtremalRecord, timings: bool) -> ExtremalRecord {
    if !timings {
        r.seconds = None;
    }
    r
}

#[derive(Serialize)]
struct Level {
    k: usize,
    vertices: Vec<usize>,
    edges: Vec<Edge>,
    communities: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Decomposition {
    n: usize,
    m: usize,
    k_max: Option<usize>,
    levels: Vec<Level>,
}

#[derive(Serialize)]
struct ConjectureReport {
    rows: Vec<ConjectureRow>,
}

#[derive(Serialize)]
struct Tables {
    records: Vec<ExtremalRecord>,
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    use Format::*;
    let format = cli.format;
    match &cli.verb {
        Verb::Analyze { source, k } => {
            let f = pick("analyze", format, &[Json, Text, Dot])?;
            let g = source.read().map_err(Failure::Usage)?;
            let body = match f {
                Dot => render::dot(&g, k.or(kdense_core::density::density_index(&g).get())),
                Text => render::analysis_text(&analyze(&g)),
                _ => json(&analyze(&g)),
            };
            Ok(Output::done(body))
        }
        Verb::Decompose { source, k } => {
            let f = pick("decompose", format, &[Json, Text, Dot])?;
            let g = source.read().map_err(Failure::Usage)?;
            if f == Dot {
                return Ok(Output::done(render::dot(&g, *k)));
            }
            let subgraphs = match k {
                Some(k) => vec![k_dense_subgraph(&g, *k)?],
                None => dense_hierarchy(&g).levels,
            };
            let levels: Vec<Level> = subgraphs
                .into_iter()
                .map(|d| Level {
                    k: d.k,
                    communities: d.communities(),
                    vertices: d.vertices,
                    edges: d.edges,
                })
                .collect();
            let body = match f {
                Text => {
                    render::communities_text(&levels.iter().map(|l| (l.k, l.communities.clone())).collect::<Vec<_>>())
                }
                _ => {
                    let k_max = levels.iter().rev().find(|l| !l.edges.is_empty()).map(|l| l.k);
                    json(&Decomposition {
                        n: g.order(),
                        m: g.size(),
                        k_max,
                        levels,
                    })
                }
            };
            Ok(Output::done(body))
        }
        Verb::Construct {
            recipe,
            k,
            n,
            r,
            a,
            copies,
            certificate,
        } => {
            let f = pick("construct", format, &[G6, Json, Text, Dot])?;
            let params: BTreeMap<String, usize> = [("k", k), ("n", n), ("r", r), ("a", a), ("copies", copies)]
                .into_iter()
                .filter_map(|(name, v)| v.map(|v| (name.to_string(), v)))
                .collect();
            let w = build_recipe(recipe, &params)?;
            if let Some(path) = certificate {
                std::fs::write(path, json(&w.certificate))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let body = match f {
                Json => json(&w),
                Text => to_edge_list_text(&w.graph),
                Dot => render::dot(&w.graph, Some(w.certificate.k_star)),
                _ => to_graph6(&w.graph) + "\n",
            };
            Ok(Output::done(body))
        }
        Verb::Search { kind, k, n, sweep } => {
            let opts = sweep.options()?;
            match kind {
                SearchKind::Conjecture => {
                    pick("search conjecture", format, &[Json])?;
                    let mut rows = Vec::new();
                    for k in k.0.clone() {
                        rows.extend(conjecture_check(k, n.0.clone(), opts)?);
                    }
                    let inconclusive = rows.iter().any(|r| r.verdict == Verdict::Inconclusive);
                    Ok(Output {
                        body: json(&ConjectureReport { rows }),
                        inconclusive,
                    })
                }
                SearchKind::Min | SearchKind::Max => {
                    let f = pick("search", format, &[Json, Csv])?;
                    let (k, n) = (k.single("k")?, n.single("n")?);
                    let rec = match kind {
                        SearchKind::Min => search_min_edges(k, n, opts)?,
                        _ => search_max_edges(k, n, opts)?,
                    };
                    Ok(record_output(strip_timing(rec, sweep.timings), f, sweep.timings))
                }
            }
        }
        Verb::Scan { k, n, sweep } => {
            let f = pick("scan", format, &[Json, Csv])?;
            let rec = realization_scan(*k, *n, sweep.options()?)?;
            Ok(record_output(strip_timing(rec, sweep.timings), f, sweep.timings))
        }
        Verb::Verify { what, source } => {
            let f = pick("verify", format, &[Json, Text])?;
            let g = source.read().map_err(Failure::Usage)?;
            match what {
                VerifyKind::Propositions => {
                    let r = check_propositions(&g);
                    let body = if f == Text {
                        render::propositions_text(&r)
                    } else {
                        json(&r)
                    };
                    if !r.all_pass() {
                        emit(cli, &body)?;
                        return Err(Failure::Certificate("a structural check failed".into()));
                    }
                    Ok(Output::done(body))
                }
                VerifyKind::Classification => {
                    let c = classify_special(&g);
                    let body = if f == Text {
                        let labels: Vec<String> = c
                            .labels
                            .iter()
                            .map(|l| json(l).trim().trim_matches('"').to_string())
                            .collect();
                        format!(
                            "k*: {}\nlabels: {}\nconsistent: {}\n",
                            c.k_star,
                            labels.join(" "),
                            c.consistent
                        )
                    } else {
                        json(&c)
                    };
                    if !c.consistent {
                        emit(cli, &body)?;
                        return Err(Failure::Certificate("classification is inconsistent with k*".into()));
                    }
                    Ok(Output::done(body))
                }
            }
        }
        Verb::Tables {
            k,
            n,
            exhaustive_max_n,
            sweep,
        } => {
            let f = pick("tables", format, &[Csv, Json])?;
            let opts = TableOptions {
                sweep: sweep.options()?,
                exhaustive_max_n: *exhaustive_max_n,
            };
            let records: Vec<ExtremalRecord> = build_tables(k.0.clone(), n.0.clone(), opts)?
                .into_iter()
                .map(|r| strip_timing(r, sweep.timings))
                .collect();
            let inconclusive = records.iter().any(|r| !r.is_complete());
            let body = match f {
                Json => json(&Tables { records }),
                _ => records_to_csv(&records, sweep.timings),
            };
            Ok(Output { body, inconclusive })
        }
    }
}

fn record_output(rec: ExtremalRecord, f: Format, timings: bool) -> Output {
    let inconclusive = !rec.is_complete();
    let body = match f {
        Format::Csv => records_to_csv(std::slice::from_ref(&rec), timings),
        _ => json(&rec),
    };
    Output { body, inconclusive }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli, &out.body).map(|_| out.inconclusive));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("kdense: search budget exhausted; results are inconclusive");
            ExitCode::from(4)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("kdense: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Certificate(msg)) => {
            eprintln!("kdense: {msg}");
            ExitCode::from(3)
        }
    }
}
