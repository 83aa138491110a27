use std::cmp::Ordering;
use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spex_core::patterns::{chromatic_number, contains_subgraph, is_h_maximal};
use spex_core::planarity::{is_planar, KuratowskiKind, PlanarityCertificate};
use spex_core::search::{spex_search, SearchOptions};
use spex_core::spectral::closed_form::RationalRepr;
use spex_core::spectral::{closed_form, compare_radii, perron, transform, PerronConfig};
use spex_core::structure::structure_profile;
use spex_core::turan::{classify_spex, pi_with_horizon, TuranTable};
use spex_core::{graph6, Family, Graph, LinearForest};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Spectral extremal planar graph workbench.
#[derive(Parser, Debug)]
#[command(name = "spex", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph, e.g. `construct book 3` or `construct two-apex-cycle:10`.
    Construct { family: String, params: Vec<String> },
    /// Spectral radius and Perron vector.
    Radius {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long, default_value_t = 1e-12, value_parser = parse_tolerance)]
        tol: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iterations: usize,
    },
    /// Closed-form spectral radius of an extremal family.
    ClosedForm { family: String, n: usize },
    /// Exact ordering of two closed-form radii given as `family@n`.
    Compare { a: String, b: String },
    /// Largest edge count of an n-vertex linear forest avoiding the pattern.
    Exf {
        n: usize,
        #[arg(long, value_parser = parse_forest)]
        forest: LinearForest,
        /// Print every order from 1 to n.
        #[arg(long)]
        table: bool,
    },
    /// Limit density of the forest Turán numbers.
    Pi {
        #[arg(long, value_parser = parse_forest)]
        forest: LinearForest,
        #[arg(long, default_value_t = spex_core::turan::PI_HORIZON)]
        horizon: usize,
    },
    /// Predicted extremal family for forbidding K2 + forest.
    Classify {
        #[arg(long, value_parser = parse_forest)]
        forest: LinearForest,
    },
    /// Whether a forest is maximal with respect to a pattern forest.
    Maximal {
        #[arg(long, value_parser = parse_forest)]
        forest: LinearForest,
        #[arg(long, value_parser = parse_forest)]
        against: LinearForest,
    },
    /// Rewire a vertex to a target set, optionally deleting an edge.
    Transform {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value = "", value_parser = parse_targets)]
        targets: Targets,
        #[arg(long, value_parser = parse_pair)]
        delete_edge: Option<(usize, usize)>,
    },
    /// Perron-weight structure profile.
    Profile {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long, default_value_t = spex_core::structure::DEFAULT_EPSILON, value_parser = parse_tolerance)]
        epsilon: f64,
    },
    /// Exhaustive certification of the extremal graphs at order n.
    SpexSearch {
        n: usize,
        #[arg(long, value_parser = parse_graph)]
        forbid: Graph,
        /// Allow n = 10.
        #[arg(long)]
        allow_ten: bool,
        /// Worker threads (overrides SPEX_THREADS).
        #[arg(long)]
        threads: Option<usize>,
        /// Suppress progress on standard error.
        #[arg(long)]
        quiet: bool,
    },
    /// Planarity, containment and chromatic checks.
    #[command(group(ArgGroup::new("checks").required(true).multiple(true).args(["planar", "free_of", "chromatic"])))]
    Check {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long)]
        planar: bool,
        #[arg(long, value_parser = parse_graph)]
        free_of: Option<Graph>,
        #[arg(long)]
        chromatic: bool,
    },
}

fn parse_graph(s: &str) -> Result<Graph, String> {
    if let Ok(f) = s.parse::<Family>() {
        return f.construct().map_err(|e| e.to_string());
    }
    graph6::decode(s).map_err(|e| format!("not a family shorthand or graph6 string ({e})"))
}

fn parse_forest(s: &str) -> Result<LinearForest, String> {
    s.parse().map_err(|e: spex_core::Error| e.to_string())
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad vertex `{t}`")))
        .collect()
}

#[derive(Clone, Debug)]
struct Targets(Vec<usize>);

fn parse_targets(s: &str) -> Result<Targets, String> {
    parse_list(s).map(Targets)
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    match parse_list(s)?.as_slice() {
        [u, v] => Ok((*u, *v)),
        _ => Err(format!("expected `u,v`, got `{s}`")),
    }
}

enum Failure {
    Usage(String),
    Compute(spex_core::Error),
}

impl From<spex_core::Error> for Failure {
    fn from(e: spex_core::Error) -> Self {
        Failure::Compute(e)
    }
}

fn family_at(s: &str) -> Result<Family, Failure> {
    let (name, n) = s
        .split_once('@')
        .ok_or_else(|| Failure::Usage(format!("expected `family@n`, got `{s}`")))?;
    format!("{name}:{n}")
        .parse()
        .map_err(|e: spex_core::Error| Failure::Usage(e.to_string()))
}

fn degrees(g: &Graph) -> String {
    let d: Vec<String> = g.degree_sequence().iter().map(ToString::to_string).collect();
    d.join(" ")
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "graph6": graph6::encode(g),
        "n": g.n(),
        "edges": g.edge_count(),
        "degree_sequence": g.degree_sequence(),
    })
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}

fn rational_text(r: &RationalRepr) -> String {
    if r.denominator == "1" {
        r.numerator.clone()
    } else {
        format!("{}/{}", r.numerator, r.denominator)
    }
}

struct Output {
    text: String,
    json: Value,
}

fn run(command: Command) -> Result<Output, Failure> {
    let out = match command {
        Command::Construct { family, params } => {
            let spec = if params.is_empty() {
                family
            } else {
                format!("{family}:{}", params.join(","))
            };
            let fam: Family = spec
                .parse()
                .map_err(|e: spex_core::Error| Failure::Usage(e.to_string()))?;
            let g = fam.construct()?;
            let mut j = graph_json(&g);
            j["family"] = json!(fam.to_string());
            Output {
                text: format!("{}\ndegrees: {}", graph6::encode(&g), degrees(&g)),
                json: j,
            }
        }
        Command::Radius {
            graph,
            tol,
            max_iterations,
        } => {
            let r = perron(
                &graph,
                &PerronConfig {
                    tol,
                    max_iterations,
                },
            )?;
            let vector: Vec<String> = r.vector.iter().map(|x| format!("{x:.12}")).collect();
            let mut text = format!(
                "lambda     {:.15}\nresidual   {:e}\niterations {}\nenclosure  [{:.15}, {:.15}]\n",
                r.lambda, r.residual, r.iterations, r.lower, r.upper
            );
            if let Some(c) = r.component {
                text += &format!("component  {c}\n");
            }
            text += &format!("vector     {}", vector.join(" "));
            Output {
                text,
                json: serde_json::to_value(&r).expect("serializable"),
            }
        }
        Command::ClosedForm { family, n } => {
            let fam = family_at(&format!("{family}@{n}"))?;
            let s = closed_form(&fam)?.summary();
            Output {
                text: format!(
                    "{}\ninterval [{}, {}]\nexact    [{}, {}]",
                    s.symbolic,
                    s.lo.decimal,
                    s.hi.decimal,
                    rational_text(&s.lo),
                    rational_text(&s.hi)
                ),
                json: serde_json::to_value(&s).expect("serializable"),
            }
        }
        Command::Compare { a, b } => {
            let (fa, fb) = (family_at(&a)?, family_at(&b)?);
            let (ca, cb) = (closed_form(&fa)?, closed_form(&fb)?);
            let ord = ordering_name(compare_radii(&ca, &cb));
            Output {
                text: format!("{ord}\n{fa}: {ca}\n{fb}: {cb}"),
                json: json!({
                    "ordering": ord,
                    "a": ca.summary(),
                    "b": cb.summary(),
                }),
            }
        }
        Command::Exf { n, forest, table } => {
            let range = if table { 1..=n } else { n..=n };
            let t = TuranTable::build(&forest, range)?;
            let text = if table {
                t.to_string().trim_end().to_string()
            } else {
                let r = &t.rows[0];
                format!("{}\nwitness {}", r.value, r.witness)
            };
            let json = if table {
                serde_json::to_value(&t).expect("serializable")
            } else {
                serde_json::to_value(&t.rows[0]).expect("serializable")
            };
            Output { text, json }
        }
        Command::Pi { forest, horizon } => {
            let p = pi_with_horizon(&forest, horizon)?;
            Output {
                text: p.to_string(),
                json: serde_json::to_value(&p).expect("serializable"),
            }
        }
        Command::Classify { forest } => {
            let c = classify_spex(&forest)?;
            Output {
                text: format!("{}\nprediction {}", c.pi, c.prediction),
                json: serde_json::to_value(&c).expect("serializable"),
            }
        }
        Command::Maximal { forest, against } => {
            let m = is_h_maximal(&forest, &against);
            Output {
                text: if m { "maximal" } else { "not maximal" }.to_string(),
                json: json!({ "forest": forest, "against": against, "maximal": m }),
            }
        }
        Command::Transform {
            graph,
            vertex,
            targets,
            delete_edge,
        } => {
            let g = transform(&graph, vertex, &targets.0, delete_edge)?;
            Output {
                text: format!("{}\ndegrees: {}", graph6::encode(&g), degrees(&g)),
                json: graph_json(&g),
            }
        }
        Command::Profile { graph, epsilon } => {
            let p = structure_profile(&graph, epsilon)?;
            let list = |v: &[usize]| {
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            };
            let case = serde_json::to_value(p.case).expect("serializable");
            Output {
                text: format!(
                    "lambda {:.12}\nx {}\nw {} (weight {:.12})\nB {{{}}}\nA {{{}}}\ncase {}\nepsilon {:e}\n|L| {}\n|S| {}",
                    p.lambda,
                    p.x,
                    p.w,
                    p.w_weight,
                    list(&p.b),
                    list(&p.a),
                    case.as_str().unwrap_or_default(),
                    p.epsilon,
                    p.large,
                    p.small
                ),
                json: serde_json::to_value(&p).expect("serializable"),
            }
        }
        Command::SpexSearch {
            n,
            forbid,
            allow_ten,
            threads,
            quiet,
        } => {
            let mut opts = SearchOptions::from_env().map_err(|e| Failure::Usage(e.to_string()))?;
            opts.allow_ten = allow_ten;
            opts.progress = !quiet;
            if threads.is_some() {
                opts.threads = threads;
            }
            let r = spex_search(n, &forbid, &opts)?;
            let mut text = format!(
                "n {}\nforbidden {}\nspex [{}, {}] ~ {:.12}\n",
                r.n, r.forbidden, r.spex.lo.decimal, r.spex.hi.decimal, r.spex.approx
            );
            for (g6, d) in r.argmax.iter().zip(&r.argmax_degree_sequences) {
                let d: Vec<String> = d.iter().map(ToString::to_string).collect();
                text += &format!("argmax {g6}  degrees {}\n", d.join(" "));
            }
            let flag = serde_json::to_value(r.prediction.flag).expect("serializable");
            text += &format!(
                "enumerated {}\nmaximal {}\nprediction {} {}\nrefinement_failure {}\nwall_time_ms {:.1}",
                r.graphs_enumerated,
                r.maximal_evaluated,
                r.prediction.rule,
                flag.as_str().unwrap_or_default(),
                r.refinement_failure,
                r.wall_time_ms
            );
            Output {
                text,
                json: serde_json::to_value(&r).expect("serializable"),
            }
        }
        Command::Check {
            graph,
            planar,
            free_of,
            chromatic,
        } => {
            let mut lines = Vec::new();
            let mut j = json!({ "graph6": graph6::encode(&graph) });
            if planar {
                let v = is_planar(&graph);
                let verdict = match &v.certificate {
                    PlanarityCertificate::Embedding(_) => "planar".to_string(),
                    PlanarityCertificate::Kuratowski(w) => format!(
                        "nonplanar ({} subdivision)",
                        match w.kind {
                            KuratowskiKind::K5 => "K5",
                            KuratowskiKind::K33 => "K3,3",
                        }
                    ),
                };
                lines.push(verdict);
                j["planarity"] = serde_json::to_value(&v).expect("serializable");
                j["certificate_verified"] = json!(v.verify(&graph));
            }
            if let Some(pattern) = free_of {
                let w = contains_subgraph(&graph, &pattern);
                lines.push(match &w.mapping {
                    None => "free".to_string(),
                    Some(m) => format!("contains (mapping {m:?})"),
                });
                j["free"] = json!(!w.is_present());
                j["witness"] = serde_json::to_value(&w).expect("serializable");
            }
            if chromatic {
                let k = chromatic_number(&graph)?;
                lines.push(format!("chromatic {k}"));
                j["chromatic_number"] = json!(k);
            }
            Output {
                text: lines.join("\n"),
                json: j,
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let reason: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.is_empty() && !l.starts_with("Usage:"))
                .collect();
            eprintln!("{}", reason.join(" "));
            return ExitCode::from(2);
        }
    };
    let format = if cli.json { Format::Json } else { cli.format };
    match run(cli.command) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
