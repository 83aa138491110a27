//! Exhaustive isomorph-free certification of the planar spectral extremal
//! graphs at small orders.
//!
//! Only edge-maximal planar `F`-free graphs are evaluated: adding an edge
//! never decreases the spectral radius, so every extremal graph is maximal or
//! has an equal-radius maximal supergraph that is enumerated as well.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph6};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::forest::LinearForest;
use crate::graph::{bit, Graph};
use crate::graph6;
use crate::patterns::is_free;
use crate::planarity::planar;
use crate::spectral::algebra::{q_from_f64, q_int, RealRoot, Q};
use crate::spectral::closed_form::{RationalRepr, ENCLOSURE_BITS};
use crate::spectral::exact::{exact_radius, RadiusEnclosure};
use crate::spectral::perron::PerronConfig;
use crate::turan::{classify_spex, h_maximal_forests, SpexPrediction};

/// Largest order searched without an override.
pub const SEARCH_CAP: usize = 9;
/// Largest order searched with the override.
pub const SEARCH_OVERRIDE_MAX: usize = 10;
/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "SPEX_THREADS";

const SEARCH_SPACE_NOTE: &str = "edge-maximal planar F-free graphs; adding an edge never \
decreases the spectral radius and strictly increases it on connected graphs";

/// Bisection steps allowed when separating an unequal competitor from the maximum.
const MAX_SEPARATION_STEPS: usize = 512;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Permit `n = 10`.
    pub allow_ten: bool,
    /// Worker count; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
    /// Per-level progress lines on standard error.
    pub progress: bool,
}

impl SearchOptions {
    /// Options with the thread count taken from `SPEX_THREADS` when set.
    pub fn from_env() -> Result<Self> {
        let threads = match std::env::var(THREADS_ENV) {
            Ok(text) => Some(text.trim().parse::<usize>().ok().filter(|&t| t > 0).ok_or_else(
                || Error::Parse(format!("{THREADS_ENV} must be a positive integer, got `{text}`")),
            )?),
            Err(_) => None,
        };
        Ok(SearchOptions {
            threads,
            ..Default::default()
        })
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
                Ok(pool.install(job))
            }
            None => Ok(job()),
        }
    }
}

fn check_order(n: usize, opts: &SearchOptions) -> Result<()> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            reason: format!("search needs n >= 3, got {n}"),
        });
    }
    let cap = if opts.allow_ten { SEARCH_OVERRIDE_MAX } else { SEARCH_CAP };
    if n > cap {
        return Err(Error::SearchCap { n, cap });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Canonical representatives of the edge-maximal classes, sorted by graph6.
    pub maximal: Vec<Graph>,
    /// Planar `F`-free isomorphism classes visited.
    pub visited: usize,
}

fn admissible(g: &Graph, f: &Graph) -> bool {
    planar(g) && is_free(g, f)
}

fn enumerate_levels(n: usize, f: &Graph, progress: bool) -> Enumeration {
    let mut level = vec![Graph::empty(n).expect("n within capacity")];
    let mut visited = 0;
    let mut maximal = Vec::new();
    let mut edges = 0;
    while !level.is_empty() {
        visited += level.len();
        let expanded: Vec<(Option<Graph>, Vec<Graph>)> = level
            .par_iter()
            .map(|g| {
                let mut kids: Vec<Graph> = g
                    .non_edges()
                    .map(|(u, v)| g.with_edge(u, v))
                    .filter(|c| admissible(c, f))
                    .map(|c| canonical_form(&c))
                    .collect();
                kids.sort_unstable_by(|a, b| a.rows().cmp(b.rows()));
                kids.dedup();
                (kids.is_empty().then(|| g.clone()), kids)
            })
            .collect();
        let mut next = HashSet::new();
        for (done, kids) in expanded {
            maximal.extend(done);
            next.extend(kids);
        }
        if progress {
            eprintln!(
                "n={n} edges={edges}: {} classes, {} maximal so far",
                level.len(),
                maximal.len()
            );
        }
        level = next.into_iter().collect();
        edges += 1;
    }
    let mut keyed: Vec<(String, Graph)> = maximal
        .into_iter()
        .map(|g| (graph6::encode(&g), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Enumeration {
        maximal: keyed.into_iter().map(|(_, g)| g).collect(),
        visited,
    }
}

/// One canonical representative per isomorphism class of planar, `F`-free,
/// edge-maximal graphs on `n` vertices. Classes are grown one edge at a time
/// from the empty graph with canonical-form deduplication at every level.
pub fn enumerate_candidates(n: usize, f: &Graph, opts: &SearchOptions) -> Result<Enumeration> {
    check_order(n, opts)?;
    opts.run(|| enumerate_levels(n, f, opts.progress))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PredictionFlag {
    Agrees,
    Differs,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredictionCheck {
    /// The asymptotic rule applied, e.g. `2K1+C(n-2)`.
    pub rule: String,
    /// Canonical graph6 of the predicted graphs (all allowed shapes).
    pub expected: Vec<String>,
    pub flag: PredictionFlag,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpexInterval {
    pub lo: RationalRepr,
    pub hi: RationalRepr,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpexReport {
    pub n: usize,
    pub forbidden: String,
    pub spex: SpexInterval,
    /// Canonical graph6 of every maximizer, sorted.
    pub argmax: Vec<String>,
    pub argmax_degree_sequences: Vec<Vec<usize>>,
    pub graphs_enumerated: usize,
    pub maximal_evaluated: usize,
    /// Pairs whose floating enclosures overlapped and were decided exactly.
    pub exact_comparisons: usize,
    /// Every non-maximizer's enclosure is disjoint from the spex interval.
    pub separated: bool,
    pub refinement_failure: bool,
    pub prediction: PredictionCheck,
    pub search_space: String,
    pub threads: usize,
    pub wall_time_ms: f64,
}

impl SpexReport {
    /// The report without run-dependent fields (thread count, timing).
    pub fn deterministic_part(&self) -> SpexReport {
        SpexReport {
            threads: 0,
            wall_time_ms: 0.0,
            ..self.clone()
        }
    }
}

/// `H` with `F = K₂ + H` and `H` a linear forest, if `F` has that shape.
pub fn k2_join_forest(f: &Graph) -> Option<LinearForest> {
    let all = f.vertex_mask();
    let dominating: Vec<usize> = (0..f.n())
        .filter(|&v| f.row(v) | bit(v) == all)
        .collect();
    let (&x, &y) = (dominating.first()?, dominating.get(1)?);
    let (rest, _) = f.induced(all & !bit(x) & !bit(y));
    LinearForest::of_graph(&rest)
}

/// The graphs the asymptotic theory expects for forbidding `f` on `n`
/// vertices, and whether `argmax` must equal or merely lie inside them.
fn predicted(n: usize, f: &Graph) -> Option<(String, Vec<String>, bool)> {
    let two_apex = || {
        let g = Family::TwoApexCycle(n).construct().ok()?;
        Some(("2K1+C(n-2)".to_string(), vec![canonical_graph6(&g)], true))
    };
    let h = k2_join_forest(f)?;
    if h.edge_count() == 0 {
        // Books K₂ + I_p with p ≥ 3.
        return if h.part_count() >= 3 { two_apex() } else { None };
    }
    match classify_spex(&h).ok()?.prediction {
        SpexPrediction::TwoApexCycle => two_apex(),
        SpexPrediction::K2PlusMaximal => {
            let k2 = Family::Complete(2).construct().ok()?;
            let mut expected: Vec<String> = h_maximal_forests(n - 2, &h)
                .iter()
                .filter_map(|hp| crate::graph::join(&k2, &hp.realize().ok()?).ok())
                .map(|g| canonical_graph6(&g))
                .collect();
            expected.sort();
            Some((SpexPrediction::K2PlusMaximal.to_string(), expected, false))
        }
        SpexPrediction::Open | SpexPrediction::Uncertified => None,
    }
}

fn overlaps(a: (&Q, &Q), b: (&Q, &Q)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Certified maximum spectral radius over planar `F`-free graphs on `n`
/// vertices, with every maximizer up to isomorphism.
pub fn spex_search(n: usize, f: &Graph, opts: &SearchOptions) -> Result<SpexReport> {
    let start = Instant::now();
    check_order(n, opts)?;
    let threads = opts.threads.unwrap_or_else(rayon::current_num_threads);
    let cfg = PerronConfig::default();
    let (enumeration, enclosures) = opts.run(|| {
        let e = enumerate_levels(n, f, opts.progress);
        let enc: Result<Vec<RadiusEnclosure>> = e
            .maximal
            .par_iter()
            .map(|g| RadiusEnclosure::of(g, &cfg))
            .collect();
        (e, enc)
    })?;
    let enclosures = enclosures?;
    let cands = &enumeration.maximal;
    if opts.progress {
        eprintln!("n={n}: evaluating {} maximal classes", cands.len());
    }

    // Candidates whose enclosure reaches the best lower bound.
    let best_lo = enclosures.iter().map(|e| e.lo).fold(f64::NEG_INFINITY, f64::max);
    let mut contenders: Vec<usize> = (0..cands.len())
        .filter(|&i| enclosures[i].hi >= best_lo)
        .collect();
    contenders.sort_by(|&a, &b| enclosures[b].lambda.total_cmp(&enclosures[a].lambda).then(a.cmp(&b)));

    let mut exact_comparisons = 0;
    let mut roots: Vec<Option<RealRoot>> = vec![None; cands.len()];
    let root_of = |i: usize, roots: &mut Vec<Option<RealRoot>>| -> RealRoot {
        roots[i]
            .get_or_insert_with(|| exact_radius(&cands[i], &enclosures[i]))
            .clone()
    };
    let mut argmax = vec![contenders[0]];
    for &c in &contenders[1..] {
        let lead = argmax[0];
        exact_comparisons += 1;
        let ord = root_of(c, &mut roots).cmp_root(&root_of(lead, &mut roots));
        match ord {
            Ordering::Greater => argmax = vec![c],
            Ordering::Equal => argmax.push(c),
            Ordering::Less => {}
        }
    }

    // Spex interval: the leader's exact root refined to 2^-40, then further
    // until it is disjoint from every other candidate.
    let mut lead_root = root_of(argmax[0], &mut roots);
    lead_root.refine_to(&(Q::one() / Q::from_integer(num_bigint::BigInt::one() << ENCLOSURE_BITS)));
    let mut refinement_failure = false;
    for (i, enc) in enclosures.iter().enumerate() {
        if argmax.contains(&i) {
            continue;
        }
        let (lo, hi) = (q_from_f64(enc.lo), q_from_f64(enc.hi));
        if !overlaps((&lo, &hi), (lead_root.lo(), lead_root.hi())) {
            continue;
        }
        let mut other = root_of(i, &mut roots);
        let mut steps = 0;
        while overlaps((other.lo(), other.hi()), (lead_root.lo(), lead_root.hi())) {
            if steps == MAX_SEPARATION_STEPS {
                refinement_failure = true;
                argmax.push(i);
                break;
            }
            other.bisect();
            lead_root.bisect();
            steps += 1;
        }
    }
    let separated = !refinement_failure;

    let mut winners: Vec<(String, Vec<usize>)> = argmax
        .iter()
        .map(|&i| (canonical_graph6(&cands[i]), cands[i].degree_sequence()))
        .collect();
    winners.sort();
    winners.dedup();

    let prediction = match predicted(n, f) {
        Some((rule, expected, exact)) => {
            let got: Vec<&String> = winners.iter().map(|(g6, _)| g6).collect();
            let agrees = if exact {
                got.len() == expected.len() && got.iter().all(|g| expected.contains(g))
            } else {
                got.iter().all(|g| expected.contains(g))
            };
            PredictionCheck {
                rule,
                expected,
                flag: if agrees {
                    PredictionFlag::Agrees
                } else {
                    PredictionFlag::Differs
                },
            }
        }
        None => PredictionCheck {
            rule: "none".into(),
            expected: Vec::new(),
            flag: PredictionFlag::NotApplicable,
        },
    };

    let (lo, hi) = (lead_root.lo().clone(), lead_root.hi().clone());
    let approx = crate::spectral::algebra::q_to_f64(&((&lo + &hi) / q_int(2)));
    Ok(SpexReport {
        n,
        forbidden: graph6::encode(f),
        spex: SpexInterval {
            lo: RationalRepr::new(&lo),
            hi: RationalRepr::new(&hi),
            approx,
        },
        argmax: winners.iter().map(|(g, _)| g.clone()).collect(),
        argmax_degree_sequences: winners.into_iter().map(|(_, d)| d).collect(),
        graphs_enumerated: enumeration.visited,
        maximal_evaluated: cands.len(),
        exact_comparisons,
        separated,
        refinement_failure,
        prediction,
        search_space: SEARCH_SPACE_NOTE.into(),
        threads,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
