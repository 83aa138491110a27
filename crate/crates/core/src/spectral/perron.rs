//! Power iteration for the spectral radius and Perron vector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Iteration settings. The iteration runs on `A + I`, which keeps the
/// dominant eigenvalue strictly dominant on connected bipartite graphs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerronConfig {
    /// Bound on `‖Av − λv‖∞` with `‖v‖∞ = 1`.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for PerronConfig {
    fn default() -> Self {
        PerronConfig {
            tol: 1e-12,
            max_iterations: 1_000_000,
        }
    }
}

impl PerronConfig {
    pub fn with_tol(tol: f64) -> Self {
        PerronConfig {
            tol,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerronResult {
    pub lambda: f64,
    /// Perron weights with maximum entry exactly 1; zero outside the
    /// maximizing component when the graph is disconnected.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    /// Index (in [`Graph::components`] order) of the component that attains
    /// the radius; `None` for connected graphs.
    pub component: Option<usize>,
    /// Collatz–Wielandt enclosure `min (Av)_i/v_i ≤ λ ≤ max (Av)_i/v_i` over
    /// the support, widened by a floating-point slack.
    pub lower: f64,
    pub upper: f64,
}

fn mul(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        *o = bits(g.row(v)).map(|u| x[u]).sum();
    }
}

fn rayleigh_unchecked(g: &Graph, x: &[f64]) -> f64 {
    let num: f64 = g.edges().map(|(u, v)| 2.0 * x[u] * x[v]).sum();
    let den: f64 = x.iter().map(|a| a * a).sum();
    num / den
}

/// Slack covering rounding in the `(Av)_i / v_i` quotients.
fn rounding_slack(g: &Graph, lambda: f64) -> f64 {
    (g.n() as f64 + 4.0) * 8.0 * f64::EPSILON * (1.0 + lambda.abs())
}

fn perron_connected(g: &Graph, cfg: &PerronConfig) -> Result<PerronResult> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok(PerronResult {
            lambda: 0.0,
            vector: vec![1.0; n],
            residual: 0.0,
            iterations: 0,
            component: None,
            lower: 0.0,
            upper: 0.0,
        });
    }
    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=cfg.max_iterations {
        mul(g, &x, &mut ax);
        let lambda = rayleigh_unchecked(g, &x);
        residual = ax
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0, f64::max);
        if residual <= cfg.tol {
            let (lower, upper) = collatz_wielandt(&ax, &x);
            let slack = rounding_slack(g, lambda);
            return Ok(PerronResult {
                lambda,
                vector: x,
                residual,
                iterations: it,
                component: None,
                lower: lower - slack,
                upper: upper + slack,
            });
        }
        // x ← (A + I)x, renormalized to max-norm 1.
        let mut max = 0.0f64;
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi += ai;
            max = max.max(*xi);
        }
        for xi in x.iter_mut() {
            *xi /= max;
        }
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iterations,
        residual,
    })
}

fn collatz_wielandt(ax: &[f64], x: &[f64]) -> (f64, f64) {
    ax.iter()
        .zip(x)
        .filter(|(_, &xi)| xi > 0.0)
        .map(|(a, xi)| a / xi)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r), hi.max(r)))
}

/// Spectral radius and Perron vector. Disconnected graphs are handled per
/// component; the component with the largest radius (lowest index on ties) wins.
pub fn perron(g: &Graph, cfg: &PerronConfig) -> Result<PerronResult> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if g.is_connected() {
        return perron_connected(g, cfg);
    }
    let comps = g.components();
    let mut results = Vec::with_capacity(comps.len());
    for &comp in &comps {
        let (sub, labels) = g.induced(comp);
        results.push((perron_connected(&sub, cfg)?, labels));
    }
    // λ(G) is the max over components, so the enclosure is the max of the
    // per-component enclosures.
    let lower = results.iter().map(|(r, _)| r.lower).fold(f64::NEG_INFINITY, f64::max);
    let upper = results.iter().map(|(r, _)| r.upper).fold(f64::NEG_INFINITY, f64::max);
    let (idx, (best, labels)) = results
        .into_iter()
        .enumerate()
        .reduce(|a, b| if b.1 .0.lambda > a.1 .0.lambda { b } else { a })
        .expect("at least one component");
    let mut vector = vec![0.0; g.n()];
    for (i, &v) in labels.iter().enumerate() {
        vector[v] = best.vector[i];
    }
    Ok(PerronResult {
        vector,
        component: Some(idx),
        lower,
        upper,
        ..best
    })
}

/// `vᵀAv / vᵀv`.
pub fn rayleigh(g: &Graph, v: &[f64]) -> Result<f64> {
    if v.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: v.len(),
        });
    }
    if v.iter().all(|&a| a == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(rayleigh_unchecked(g, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn g(s: &str) -> Graph {
        s.parse::<Family>().unwrap().construct().unwrap()
    }

    #[test]
    fn regular_and_bipartite() {
        let r = perron(&g("c10"), &PerronConfig::default()).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-12);
        assert!(r.vector.iter().all(|&x| (x - 1.0).abs() < 1e-12));
        let r = perron(&g("kbip:2,8"), &PerronConfig::default()).unwrap();
        assert!((r.lambda - 4.0).abs() < 1e-10);
        assert!(r.lower <= 4.0 && 4.0 <= r.upper);
    }

    #[test]
    fn two_apex_cycle_ten() {
        let r = perron(&g("two-apex-cycle:10"), &PerronConfig::default()).unwrap();
        let expected = 17f64.sqrt() + 1.0;
        assert!((r.lambda - expected).abs() < 1e-10, "{}", r.lambda);
        assert!(r.residual <= 1e-12);
        assert_eq!(r.vector.iter().cloned().fold(0.0, f64::max), 1.0);
        assert!(r.vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn disconnected_picks_largest_component() {
        let h = crate::graph::disjoint_union(&g("c5"), &g("k4")).unwrap();
        let r = perron(&h, &PerronConfig::default()).unwrap();
        assert!((r.lambda - 3.0).abs() < 1e-10);
        assert_eq!(r.component, Some(1));
        assert!(r.vector[..5].iter().all(|&x| x == 0.0));
        let isolated = Graph::empty(3).unwrap();
        assert_eq!(perron(&isolated, &PerronConfig::default()).unwrap().lambda, 0.0);
    }

    #[test]
    fn non_convergence_reported() {
        let cfg = PerronConfig {
            tol: 1e-14,
            max_iterations: 3,
        };
        assert!(matches!(
            perron(&g("p9"), &cfg),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn rayleigh_examples() {
        assert!((rayleigh(&g("c6"), &[1.0; 6]).unwrap() - 2.0).abs() < 1e-15);
        assert!((rayleigh(&g("k2"), &[1.0, 1.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(rayleigh(&g("k2"), &[0.0, 0.0]), Err(Error::ZeroVector)));
        assert!(rayleigh(&g("k2"), &[1.0]).is_err());
    }
}
