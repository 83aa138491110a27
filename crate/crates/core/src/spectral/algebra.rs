//! Exact real algebra for spectral radii: rational polynomials with Sturm
//! sequences, isolated real roots, and numbers of the form `p + √q`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn q_from_f64(x: f64) -> Q {
    Q::from_float(x).expect("finite float")
}

fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(Q::from_integer).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &Q {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// `p(a + b√q)` as `(A, B)` meaning `A + B√q`.
    pub fn eval_surd(&self, a: &Q, b: &Q, q: &Q) -> (Q, Q) {
        let mut acc = (Q::zero(), Q::zero());
        for c in self.coeffs.iter().rev() {
            let (x, y) = acc;
            // (x + y√q)(a + b√q) = (xa + ybq) + (xb + ya)√q
            acc = (&x * a + &y * b * q + c, x * b + y * a);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q_int(i as i64))
                .collect(),
        )
    }

    fn scale(&self, k: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::new(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); self.coeffs.len() - dd];
        let lead_inv = d.lead().recip();
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }

    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[k - 2].rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&q_int(-1)));
        }
        seq
    }

    /// Cauchy bound: every real root lies in `(−B, B)`.
    pub fn root_bound(&self) -> Q {
        let lead = self.lead().abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Q::zero(), |m, c| if c > m { c } else { m });
        max + Q::one()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn variations(values: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in values.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm sequence of a squarefree polynomial, ready for root counting.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Self {
        Sturm {
            seq: p.squarefree().sturm_sequence(),
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &Q) -> usize {
        variations(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_at_surd(&self, s: &QuadSurd) -> usize {
        variations(self.seq.iter().map(|p| {
            let (a, b) = p.eval_surd(&s.p, &Q::one(), &s.q);
            sign_a_plus_b_sqrt_q(&a, &b, &s.q)
        }))
    }

    pub fn variations_at_infinity(&self) -> usize {
        variations(self.seq.iter().map(|p| if p.is_zero() { 0 } else { sign(p.lead()) }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Q, b: &Q) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// A real root of a polynomial, isolated as the unique root of the
/// polynomial's squarefree part in `(lo, hi]`.
#[derive(Clone, Debug)]
pub struct RealRoot {
    sturm: Sturm,
    lo: Q,
    hi: Q,
}

impl RealRoot {
    /// The largest real root of `p`, or `None` if `p` has no real root.
    pub fn largest(p: &Poly) -> Option<RealRoot> {
        let sturm = Sturm::new(p);
        let bound = sturm.poly().root_bound();
        let (mut lo, mut hi) = (-bound.clone(), bound);
        if sturm.count(&lo, &hi) == 0 {
            return None;
        }
        while sturm.count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / q_int(2);
            if sturm.count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(RealRoot { sturm, lo, hi })
    }

    /// The largest root of `p` given a candidate enclosure; falls back to a
    /// full search when `(lo, hi]` does not isolate the largest root.
    pub fn largest_near(p: &Poly, lo: Q, hi: Q) -> Option<RealRoot> {
        let sturm = Sturm::new(p);
        let above = sturm.variations_at(&hi) - sturm.variations_at_infinity();
        if lo < hi && above == 0 && sturm.count(&lo, &hi) == 1 {
            return Some(RealRoot { sturm, lo, hi });
        }
        RealRoot::largest(p)
    }

    /// The unique root in `(lo, hi]`, if exactly one exists.
    pub fn isolate(p: &Poly, lo: Q, hi: Q) -> Option<RealRoot> {
        let sturm = Sturm::new(p);
        (sturm.count(&lo, &hi) == 1).then_some(RealRoot { sturm, lo, hi })
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn poly(&self) -> &Poly {
        self.sturm.poly()
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    /// Halves the enclosure.
    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / q_int(2);
        if self.sturm.count(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Q) {
        while &self.width() > width {
            self.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        q_to_f64(&((&self.lo + &self.hi) / q_int(2)))
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &Q) -> Ordering {
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            // The root is in (lo, hi]; it equals hi only if p(hi) = 0.
            return if x == &self.hi && self.poly().eval(x).is_zero() {
                Ordering::Equal
            } else {
                Ordering::Less
            };
        }
        if self.poly().eval(x).is_zero() {
            Ordering::Equal
        } else if self.sturm.count(&self.lo, x) == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact comparison with `p + √q`.
    pub fn cmp_surd(&self, s: &QuadSurd) -> Ordering {
        if s.cmp_rational(&self.lo) != Ordering::Greater {
            return Ordering::Greater;
        }
        match s.cmp_rational(&self.hi) {
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => return self.cmp_rational(&self.hi.clone()),
            Ordering::Less => {}
        }
        let (a, b) = self.poly().eval_surd(&s.p, &Q::one(), &s.q);
        if sign_a_plus_b_sqrt_q(&a, &b, &s.q) == 0 {
            return Ordering::Equal;
        }
        let below = self
            .sturm
            .variations_at(&self.lo)
            .saturating_sub(self.sturm.variations_at_surd(s));
        if below == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact comparison of two isolated roots. Equality is decided through the
    /// gcd of the defining polynomials; otherwise enclosures are bisected until
    /// they separate.
    pub fn cmp_root(&self, other: &RealRoot) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let g = a.poly().gcd(b.poly());
        if g.degree() > 0 {
            let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
            let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
            if lo < hi && Sturm::new(&g).count(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        loop {
            if a.hi <= b.lo {
                // a ≤ a.hi ≤ b.lo < b, strict because b > b.lo.
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }
}

/// Sign of `a + b√q` for rational `a, b` and `q ≥ 0`.
pub fn sign_a_plus_b_sqrt_q(a: &Q, b: &Q, q: &Q) -> i32 {
    let sa = sign(a);
    let sb = if q.is_zero() { 0 } else { sign(b) };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: compare a² with b²q.
    match (a * a).cmp(&(b * b * q)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// The real number `p + √q` with rational `p` and `q ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub p: Q,
    pub q: Q,
}

impl QuadSurd {
    pub fn new(p: Q, q: Q) -> Self {
        assert!(!q.is_negative(), "negative radicand");
        QuadSurd { p, q }
    }

    pub fn cmp_rational(&self, x: &Q) -> Ordering {
        // sign(p − x + √q)
        match sign_a_plus_b_sqrt_q(&(&self.p - x), &Q::one(), &self.q) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// Exact ordering of `p₁ + √q₁` and `p₂ + √q₂`.
    pub fn cmp_surd(&self, other: &QuadSurd) -> Ordering {
        // sign(d + √q₁ − √q₂) with d = p₁ − p₂.
        let d = &self.p - &other.p;
        let u_sign = sign_a_plus_b_sqrt_q(&d, &Q::one(), &self.q);
        let s = if u_sign <= 0 {
            if other.q.is_zero() {
                u_sign
            } else {
                -1
            }
        } else {
            // u = d + √q₁ > 0: compare u² = d² + q₁ + 2d√q₁ with q₂.
            let a = &d * &d + &self.q - &other.q;
            let b = &d * q_int(2);
            sign_a_plus_b_sqrt_q(&a, &b, &self.q)
        };
        s.cmp(&0)
    }

    /// Rational enclosure of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (Q, Q) {
        let (lo, hi) = sqrt_enclosure(&self.q, bits);
        (&self.p + lo, &self.p + hi)
    }

    pub fn to_f64(&self) -> f64 {
        q_to_f64(&self.p) + q_to_f64(&self.q).sqrt()
    }

    /// Minimal polynomial-ish quadratic `(x − p)² − q` with rational coefficients.
    pub fn quadratic(&self) -> Poly {
        let p = &self.p;
        Poly::new(vec![p * p - &self.q, p * q_int(-2), Q::one()])
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            write!(f, "sqrt({})", self.q)
        } else {
            write!(f, "{}+sqrt({})", self.p, self.q)
        }
    }
}

/// Rational `[lo, hi]` with `lo ≤ √q ≤ hi` and `hi − lo ≤ 2^-bits`.
pub fn sqrt_enclosure(q: &Q, bits: u32) -> (Q, Q) {
    assert!(!q.is_negative());
    // √(a/b) = √(ab)/b; scale by 2^bits before taking the integer root.
    let scale = BigInt::one() << bits;
    let radicand = q.numer() * q.denom() * &scale * &scale;
    let root = radicand.sqrt();
    let den = q.denom() * &scale;
    let lo = Q::new(root.clone(), den.clone());
    let hi = if &root * &root == radicand {
        lo.clone()
    } else {
        Q::new(root + BigInt::one(), den)
    };
    (lo, hi)
}
