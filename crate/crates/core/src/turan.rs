//! Linear-forest Turán numbers `ex^F(n, h)`, the limit density `π(h)`, and
//! the trichotomy that predicts the spectral extremal graphs.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::MAX_VERTICES;
use crate::patterns::is_h_maximal;

/// Largest number of sub-multisets of `h` the DP will track.
const LATTICE_LIMIT: usize = 1 << 14;

/// Default horizon for period detection.
pub const PI_HORIZON: usize = 64;

/// Sub-multisets of `h`, indexed in mixed radix over the distinct part orders.
struct Lattice {
    radix: Vec<usize>,
    counts: Vec<usize>,
    sums: Vec<usize>,
    len: usize,
}

impl Lattice {
    fn new(h: &LinearForest) -> Result<Self> {
        let mut sizes: Vec<usize> = h.parts().to_vec();
        sizes.dedup();
        let counts: Vec<usize> = sizes
            .iter()
            .map(|s| h.parts().iter().filter(|&p| p == s).count())
            .collect();
        let mut radix = Vec::with_capacity(sizes.len());
        let mut len = 1usize;
        for &c in &counts {
            radix.push(len);
            len = len.saturating_mul(c + 1);
        }
        if len > LATTICE_LIMIT {
            return Err(Error::SizeLimit {
                what: "exf sub-multiset lattice",
                max: LATTICE_LIMIT,
                got: len,
            });
        }
        let sums = (0..len)
            .map(|idx| {
                (0..sizes.len())
                    .map(|i| (idx / radix[i]) % (counts[i] + 1) * sizes[i])
                    .sum()
            })
            .collect();
        Ok(Lattice {
            radix,
            counts,
            sums,
            len,
        })
    }

    fn full(&self) -> usize {
        self.len - 1
    }

    fn add(&self, a: usize, b: usize) -> Option<usize> {
        for i in 0..self.counts.len() {
            let d = self.counts[i] + 1;
            if (a / self.radix[i]) % d + (b / self.radix[i]) % d > self.counts[i] {
                return None;
            }
        }
        Some(a + b)
    }
}

type Downset = Vec<u64>;

fn has(d: &Downset, i: usize) -> bool {
    d[i / 64] >> (i % 64) & 1 == 1
}

/// Shared memo for `ex^F(·, h)`. A state is (vertices left, largest allowed
/// next part, set of sub-multisets of `h` that pack into the parts so far).
struct ExfSolver {
    lattice: Lattice,
    memo: HashMap<(usize, usize, Downset), Option<(usize, usize)>>,
    max_part: usize,
}

impl ExfSolver {
    fn new(h: &LinearForest) -> Result<Self> {
        if h.edge_count() == 0 {
            return Err(Error::EdgelessForest(h.to_string()));
        }
        Ok(ExfSolver {
            lattice: Lattice::new(h)?,
            memo: HashMap::new(),
            // A path of order ≥ |h| holds all of h.
            max_part: h.order() - 1,
        })
    }

    fn initial(&self) -> Downset {
        let mut d = vec![0u64; self.lattice.len.div_ceil(64)];
        d[0] = 1;
        d
    }

    fn extend(&self, d: &Downset, m: usize) -> Downset {
        let l = &self.lattice;
        let mut out = vec![0u64; d.len()];
        for a in (0..l.len).filter(|&a| has(d, a)) {
            for b in (0..l.len).filter(|&b| l.sums[b] <= m) {
                if let Some(c) = l.add(a, b) {
                    out[c / 64] |= 1 << (c % 64);
                }
            }
        }
        out
    }

    /// Fewest parts completing the state, with the first part of a
    /// lexicographically largest optimal completion.
    fn solve(&mut self, remaining: usize, cap: usize, d: &Downset) -> Option<(usize, usize)> {
        if remaining == 0 {
            return Some((0, 0));
        }
        let key = (remaining, cap, d.clone());
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let mut best: Option<(usize, usize)> = None;
        for m in (1..=cap.min(remaining)).rev() {
            let next = self.extend(d, m);
            if has(&next, self.lattice.full()) {
                continue;
            }
            if let Some((parts, _)) = self.solve(remaining - m, m, &next) {
                if best.is_none_or(|(b, _)| parts + 1 < b) {
                    best = Some((parts + 1, m));
                }
            }
        }
        self.memo.insert(key, best);
        best
    }

    fn exf(&mut self, n: usize) -> (usize, LinearForest) {
        let mut d = self.initial();
        let (parts, _) = self
            .solve(n, self.max_part, &d)
            .expect("the edgeless forest is always h-free");
        let mut witness = Vec::with_capacity(parts);
        let (mut remaining, mut cap) = (n, self.max_part);
        while remaining > 0 {
            let (_, m) = self.solve(remaining, cap, &d).expect("state on an optimal path");
            witness.push(m);
            d = self.extend(&d, m);
            remaining -= m;
            cap = m;
        }
        (n - parts, LinearForest::new(witness).expect("positive parts"))
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            reason: format!("must lie in 1..={MAX_VERTICES}, got {n}"),
        });
    }
    Ok(())
}

/// `ex^F(n, h)` with a witness. Among optimal forests the witness is the
/// lexicographically largest part sequence.
pub fn exf(n: usize, h: &LinearForest) -> Result<(usize, LinearForest)> {
    check_n(n)?;
    Ok(ExfSolver::new(h)?.exf(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranRow {
    pub n: usize,
    pub value: usize,
    pub witness: LinearForest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranTable {
    pub h: LinearForest,
    pub rows: Vec<TuranRow>,
}

impl TuranTable {
    pub fn build(h: &LinearForest, ns: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut solver = ExfSolver::new(h)?;
        let mut rows = Vec::new();
        for n in ns {
            check_n(n)?;
            let (value, witness) = solver.exf(n);
            rows.push(TuranRow { n, value, witness });
        }
        Ok(TuranTable {
            h: h.clone(),
            rows,
        })
    }

    pub fn values(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.value).collect()
    }
}

impl fmt::Display for TuranTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "h = {}", self.h)?;
        writeln!(f, "{:>4}  {:>5}  witness", "n", "exf")?;
        for r in &self.rows {
            writeln!(f, "{:>4}  {:>5}  {}", r.n, r.value, r.witness)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Trichotomy {
    BelowHalf,
    EqualHalf,
    AboveHalf,
    Uncertified,
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trichotomy::BelowHalf => "BELOW_HALF",
            Trichotomy::EqualHalf => "EQUAL_HALF",
            Trichotomy::AboveHalf => "ABOVE_HALF",
            Trichotomy::Uncertified => "UNCERTIFIED",
        })
    }
}

mod ratio_text {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.collect_str(r),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio<i64>>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| t.parse().map_err(D::Error::custom))
                .transpose()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiVerdict {
    pub h: LinearForest,
    /// The slope of the eventually periodic sequence, when a period was found.
    #[serde(with = "ratio_text::option")]
    pub value: Option<Ratio<i64>>,
    #[serde(with = "ratio_text")]
    pub lower: Ratio<i64>,
    #[serde(with = "ratio_text")]
    pub upper: Ratio<i64>,
    pub trichotomy: Trichotomy,
    pub period: Option<usize>,
    pub horizon: usize,
}

impl fmt::Display for PiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, self.period) {
            (Some(v), Some(t)) => write!(f, "{v} {} period={t}", self.trichotomy),
            _ => write!(f, "[{}, {}] {}", self.lower, self.upper, self.trichotomy),
        }
    }
}

/// Smallest `T` and slope `d` with `s[n+T] = s[n] + d` over the second half
/// of the sequence, and over at least three full periods (`s[i]` holds the
/// value at `n = i + 1`).
pub fn detect_period(seq: &[usize]) -> Option<(usize, i64)> {
    let h = seq.len();
    (1..=h / 4).find_map(|t| {
        let start = (h - 4 * t).min(h / 2);
        let d = seq[start + t] as i64 - seq[start] as i64;
        (start..h - t)
            .all(|i| seq[i + t] as i64 - seq[i] as i64 == d)
            .then_some((t, d))
    })
}

fn trichotomy_of(v: Ratio<i64>) -> Trichotomy {
    match v.cmp(&Ratio::new(1, 2)) {
        std::cmp::Ordering::Less => Trichotomy::BelowHalf,
        std::cmp::Ordering::Equal => Trichotomy::EqualHalf,
        std::cmp::Ordering::Greater => Trichotomy::AboveHalf,
    }
}

/// `π(h)` at the default horizon.
pub fn pi(h: &LinearForest) -> Result<PiVerdict> {
    pi_with_horizon(h, PI_HORIZON)
}

/// `π(h)` from the eventual period of `n ↦ ex^F(n, h)` for `n ≤ horizon`.
/// Without a period the verdict keeps only the bounds
/// `(k−2)/(k−1) ≤ π ≤ 1`, where `k` is the longest part of `h`.
pub fn pi_with_horizon(h: &LinearForest, horizon: usize) -> Result<PiVerdict> {
    if !(8..=MAX_VERTICES).contains(&horizon) {
        return Err(Error::ParameterOutOfRange {
            name: "horizon",
            reason: format!("must lie in 8..={MAX_VERTICES}, got {horizon}"),
        });
    }
    let table = TuranTable::build(h, 1..=horizon)?;
    let k = h.longest() as i64;
    let mut verdict = PiVerdict {
        h: h.clone(),
        value: None,
        lower: Ratio::new(k - 2, k - 1),
        upper: Ratio::from_integer(1),
        trichotomy: Trichotomy::Uncertified,
        period: None,
        horizon,
    };
    if let Some((t, d)) = detect_period(&table.values()) {
        let v = Ratio::new(d, t as i64);
        verdict.value = Some(v);
        verdict.lower = v;
        verdict.upper = v;
        verdict.trichotomy = trichotomy_of(v);
        verdict.period = Some(t);
    }
    Ok(verdict)
}

/// `H_k(n)`: `⌊n/(k−1)⌋` copies of `P_{k−1}` plus a path on the remainder.
pub fn hk_construction(n: usize, k: usize) -> Result<LinearForest> {
    if k < 4 {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            reason: format!("must be at least 4, got {k}"),
        });
    }
    if n < k - 1 || n > MAX_VERTICES {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            reason: format!("must lie in {}..={MAX_VERTICES}, got {n}", k - 1),
        });
    }
    let mut parts = vec![k - 1; n / (k - 1)];
    if !n.is_multiple_of(k - 1) {
        parts.push(n % (k - 1));
    }
    LinearForest::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpexPrediction {
    /// `SPEX = {2K₁ + C_{n−2}}`.
    TwoApexCycle,
    /// `SPEX ⊆ {K₂ + H′ : H′ is h-maximal on n − 2 vertices}`.
    K2PlusMaximal,
    Open,
    Uncertified,
}

impl fmt::Display for SpexPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpexPrediction::TwoApexCycle => "2K1+C(n-2)",
            SpexPrediction::K2PlusMaximal => "K2+H' (H' h-maximal)",
            SpexPrediction::Open => "OPEN",
            SpexPrediction::Uncertified => "UNCERTIFIED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpexClassification {
    pub pi: PiVerdict,
    pub prediction: SpexPrediction,
}

/// Predicted extremal family for forbidding `K₂ + h`, from the sign of `π(h) − ½`.
pub fn classify_spex(h: &LinearForest) -> Result<SpexClassification> {
    let pi = pi(h)?;
    let prediction = match pi.trichotomy {
        Trichotomy::BelowHalf => SpexPrediction::TwoApexCycle,
        Trichotomy::AboveHalf => SpexPrediction::K2PlusMaximal,
        Trichotomy::EqualHalf if h.parts() == [3] => SpexPrediction::TwoApexCycle,
        Trichotomy::EqualHalf => SpexPrediction::Open,
        Trichotomy::Uncertified => SpexPrediction::Uncertified,
    };
    Ok(SpexClassification { pi, prediction })
}

/// All partitions of `n` into parts of order at most `max`, each in
/// nonincreasing order.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for m in (1..=max.min(n)).rev() {
            prefix.push(m);
            go(n - m, m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

/// Every `h`-maximal linear forest on `n` vertices.
pub fn h_maximal_forests(n: usize, h: &LinearForest) -> Vec<LinearForest> {
    partitions(n, n)
        .into_iter()
        .map(|p| LinearForest::new(p).expect("positive parts"))
        .filter(|f| is_h_maximal(f, h))
        .collect()
}
