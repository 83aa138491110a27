//! Symbolic spectral radii of the extremal families.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::algebra::{q_frac, q_int, q_to_f64, Poly, QuadSurd, RealRoot, Q};
use crate::error::{Error, Result};
use crate::family::Family;

/// Width bound of the rational enclosure attached to every closed form.
pub const ENCLOSURE_BITS: u32 = 40;

#[derive(Clone, Debug)]
pub enum RadiusForm {
    /// `p + √q`.
    SqrtAffine(QuadSurd),
    /// Largest real root of an integer polynomial (lowest degree first).
    CubicRoot { coefficients: Vec<BigInt>, root: RealRoot },
}

#[derive(Clone, Debug)]
pub struct ClosedFormRadius {
    pub family: Family,
    pub form: RadiusForm,
    /// `lo ≤ λ ≤ hi` with `hi − lo ≤ 2^-40`.
    pub lo: Q,
    pub hi: Q,
}

/// Exact rational in serialized output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub numerator: String,
    pub denominator: String,
    pub decimal: String,
}

impl RationalRepr {
    pub fn new(x: &Q) -> Self {
        RationalRepr {
            numerator: x.numer().to_string(),
            denominator: x.denom().to_string(),
            decimal: format!("{:.15}", q_to_f64(x)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormSummary {
    pub family: String,
    pub n: usize,
    pub symbolic: String,
    pub approx: f64,
    pub lo: RationalRepr,
    pub hi: RationalRepr,
}

fn surd(family: &Family, p: Q, q: Q) -> ClosedFormRadius {
    let s = QuadSurd::new(p, q);
    let (lo, hi) = s.enclosure(ENCLOSURE_BITS);
    ClosedFormRadius {
        family: family.clone(),
        form: RadiusForm::SqrtAffine(s),
        lo,
        hi,
    }
}

fn check_order(family: &Family, min: usize) -> Result<usize> {
    let n = family.order();
    if n < min {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            reason: format!("{family} needs n >= {min}"),
        });
    }
    Ok(n)
}

/// Closed-form spectral radius of a supported family.
pub fn closed_form(family: &Family) -> Result<ClosedFormRadius> {
    match family {
        Family::TwoApexCycle(_) => {
            let n = check_order(family, 5)? as i64;
            Ok(surd(family, q_int(1), q_int(2 * n - 3)))
        }
        Family::JoinK2Cycle(_) => {
            let n = check_order(family, 5)? as i64;
            Ok(surd(family, q_frac(3, 2), q_frac(8 * n - 15, 4)))
        }
        Family::JoinK2Matching(n) => {
            if n % 2 != 0 {
                return Err(Error::ParityMismatch {
                    family: "join-k2-matching",
                    expected: "even",
                    n: *n,
                });
            }
            let n = check_order(family, 4)? as i64;
            Ok(surd(family, q_int(1), q_int(2 * n - 4)))
        }
        Family::JoinK2NearMatching(n) => {
            if n % 2 != 1 {
                return Err(Error::ParityMismatch {
                    family: "join-k2-near-matching",
                    expected: "odd",
                    n: *n,
                });
            }
            let n = check_order(family, 5)? as i64;
            // Characteristic polynomial of the quotient matrix of the
            // partition {apexes}, {matched vertices}, {unmatched vertex}.
            let coefficients: Vec<BigInt> = [2, -(2 * n - 5), -2, 1]
                .iter()
                .map(|&c| BigInt::from(c))
                .collect();
            let mut root = RealRoot::largest(&Poly::from_ints(&coefficients))
                .expect("odd-degree polynomial has a real root");
            root.refine_to(&(q_int(1) / Q::from_integer(BigInt::from(1u64 << ENCLOSURE_BITS))));
            let (lo, hi) = (root.lo().clone(), root.hi().clone());
            Ok(ClosedFormRadius {
                family: family.clone(),
                form: RadiusForm::CubicRoot { coefficients, root },
                lo,
                hi,
            })
        }
        other => Err(Error::UnsupportedFamily(other.to_string())),
    }
}

impl ClosedFormRadius {
    pub fn to_f64(&self) -> f64 {
        match &self.form {
            RadiusForm::SqrtAffine(s) => s.to_f64(),
            RadiusForm::CubicRoot { root, .. } => root.to_f64(),
        }
    }

    pub fn summary(&self) -> ClosedFormSummary {
        ClosedFormSummary {
            family: self.family.to_string(),
            n: self.family.order(),
            symbolic: self.to_string(),
            approx: self.to_f64(),
            lo: RationalRepr::new(&self.lo),
            hi: RationalRepr::new(&self.hi),
        }
    }

    /// Exact comparison of two closed-form radii.
    pub fn cmp_exact(&self, other: &ClosedFormRadius) -> Ordering {
        use RadiusForm::*;
        match (&self.form, &other.form) {
            (SqrtAffine(a), SqrtAffine(b)) => a.cmp_surd(b),
            (CubicRoot { root, .. }, SqrtAffine(b)) => root.cmp_surd(b),
            (SqrtAffine(a), CubicRoot { root, .. }) => root.cmp_surd(a).reverse(),
            (CubicRoot { root: a, .. }, CubicRoot { root: b, .. }) => a.cmp_root(b),
        }
    }
}

impl fmt::Display for ClosedFormRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            RadiusForm::SqrtAffine(s) => write!(f, "{s}"),
            RadiusForm::CubicRoot { coefficients, .. } => {
                write!(f, "largest root of {}", Poly::from_ints(coefficients))
            }
        }
    }
}

/// Exact ordering of two closed-form radii.
pub fn compare_radii(a: &ClosedFormRadius, b: &ClosedFormRadius) -> Ordering {
    a.cmp_exact(b)
}

/// Exact ordering of the closed-form radii of two families.
pub fn compare_families(a: &Family, b: &Family) -> Result<Ordering> {
    Ok(compare_radii(&closed_form(a)?, &closed_form(b)?))
}

/// `√(2n−4) + 1`, the even-order radius of `K₂ + matching`, at any `n`.
pub fn matching_bound(n: usize) -> QuadSurd {
    QuadSurd::new(q_int(1), q_int(2 * n as i64 - 4))
}
