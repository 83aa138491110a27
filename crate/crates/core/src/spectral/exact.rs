//! Exact spectral-radius comparison through integer characteristic polynomials.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::{q_from_f64, Poly, RealRoot, Q};
use super::perron::{perron, PerronConfig};
use crate::error::Result;
use crate::graph::{bits, Graph};

/// Characteristic polynomial `det(xI − A)`, lowest degree first, by the
/// Faddeev–LeVerrier recurrence (all divisions are exact over the integers).
pub fn characteristic_polynomial(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M holds M_k; start from M_0 = 0 so that M_1 = I.
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for l in bits(g.row(i)) {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += &m[l][j];
                }
            }
            row[i] += &coeffs[n - k + 1];
        }
        // c_{n−k} = −tr(A·M_k)/k
        let mut trace = BigInt::zero();
        for (i, _) in next.iter().enumerate() {
            for l in bits(g.row(i)) {
                trace += &next[l][i];
            }
        }
        coeffs[n - k] = -trace / BigInt::from(k);
        m = next;
    }
    coeffs
}

/// A rational enclosure `[lo, hi]` of `λ(G)` derived from Collatz–Wielandt
/// bounds on the computed Perron vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusEnclosure {
    pub lambda: f64,
    pub lo: f64,
    pub hi: f64,
}

impl RadiusEnclosure {
    pub fn of(g: &Graph, cfg: &PerronConfig) -> Result<Self> {
        let r = perron(g, cfg)?;
        Ok(RadiusEnclosure {
            lambda: r.lambda,
            lo: r.lower,
            hi: r.upper,
        })
    }

    pub fn overlaps(&self, other: &RadiusEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn lo_q(&self) -> Q {
        q_from_f64(self.lo)
    }

    pub fn hi_q(&self) -> Q {
        q_from_f64(self.hi)
    }
}

/// `λ(G)` as an isolated root of the characteristic polynomial.
pub fn exact_radius(g: &Graph, enclosure: &RadiusEnclosure) -> RealRoot {
    let p = Poly::from_ints(&characteristic_polynomial(g));
    RealRoot::largest_near(&p, enclosure.lo_q(), enclosure.hi_q())
        .expect("adjacency spectra are real")
}

/// Exact ordering of `λ(a)` and `λ(b)`: disjoint enclosures decide directly,
/// otherwise the characteristic polynomials are compared.
pub fn compare_graph_radii(
    a: &Graph,
    ea: &RadiusEnclosure,
    b: &Graph,
    eb: &RadiusEnclosure,
) -> Ordering {
    if ea.hi < eb.lo {
        return Ordering::Less;
    }
    if eb.hi < ea.lo {
        return Ordering::Greater;
    }
    exact_radius(a, ea).cmp_root(&exact_radius(b, eb))
}
