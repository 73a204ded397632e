//! Endpoint-singular quadrature: Gauss-Jacobi rules via Golub-Welsch and an
//! adaptive compound rule for integrands with power singularities at the
//! interval ends and near-singularities just outside it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gamma::gamma;
use crate::error::{Error, Result};

/// Floating value carried as mantissa * 2^e so that long products of
/// power-law factors cannot overflow or underflow.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scaled {
    m: f64,
    e: i64,
}

impl Scaled {
    pub fn zero() -> Self {
        Scaled { m: 0.0, e: 0 }
    }

    pub fn one() -> Self {
        Scaled { m: 1.0, e: 0 }
    }

    pub fn new(x: f64) -> Self {
        Scaled { m: x, e: 0 }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.m == 0.0 || !self.m.is_finite() {
            return self;
        }
        let bits = self.m.to_bits();
        let exp = ((bits >> 52) & 0x7ff) as i64;
        if exp == 0 {
            // subnormal: renormalize through log2
            let l = self.m.abs().log2().floor() as i32;
            self.m *= 2.0f64.powi(-l);
            self.e += l as i64;
            return self;
        }
        let d = exp - 1023;
        if d != 0 {
            let nb = (bits & !(0x7ffu64 << 52)) | (1023u64 << 52);
            self.m = f64::from_bits(nb);
            self.e += d;
        }
        self
    }

    pub fn mul(self, rhs: Scaled) -> Self {
        Scaled {
            m: self.m * rhs.m,
            e: self.e + rhs.e,
        }
        .normalized()
    }

    pub fn mul_f64(self, x: f64) -> Self {
        Scaled {
            m: self.m * x,
            e: self.e,
        }
        .normalized()
    }

    pub fn add(self, rhs: Scaled) -> Self {
        if rhs.m == 0.0 {
            return self;
        }
        if self.m == 0.0 {
            return rhs;
        }
        let (hi, lo) = if self.e >= rhs.e { (self, rhs) } else { (rhs, self) };
        let shift = hi.e - lo.e;
        if shift > 1100 {
            return hi;
        }
        Scaled {
            m: hi.m + lo.m * 2.0f64.powi(-(shift as i32)),
            e: hi.e,
        }
        .normalized()
    }

    /// |x|^p as a Scaled value; each factor individually fits in f64 for the
    /// exponent range used here, normalization keeps the running product safe.
    pub fn pow_abs(x: f64, p: f64) -> Self {
        if p == 0.0 {
            return Scaled::one();
        }
        Scaled::new(x.abs().powf(p))
    }

    pub fn to_f64(self) -> f64 {
        if self.m == 0.0 {
            return 0.0;
        }
        if self.e > 1200 {
            return f64::INFINITY * self.m.signum();
        }
        if self.e < -1200 {
            return 0.0;
        }
        self.m * 2.0f64.powi(self.e as i32)
    }

    pub fn ln_abs(self) -> f64 {
        self.m.abs().ln() + self.e as f64 * std::f64::consts::LN_2
    }

    pub fn is_finite(self) -> bool {
        self.m.is_finite()
    }

    /// |a - b| / |b| without leaving the scaled representation.
    pub fn rel_diff(a: Scaled, b: Scaled) -> f64 {
        if b.m == 0.0 {
            return if a.m == 0.0 { 0.0 } else { f64::INFINITY };
        }
        let shift = a.e - b.e;
        if shift.abs() > 60 {
            return f64::INFINITY;
        }
        ((a.m * 2.0f64.powi(shift as i32) - b.m) / b.m).abs()
    }
}

type GjKey = (usize, u64, u64);
type GjTable = Mutex<HashMap<GjKey, Arc<Vec<(f64, f64)>>>>;

fn gj_cache() -> &'static GjTable {
    static CACHE: OnceLock<GjTable> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nodes and weights integrating (1-x)^alpha (1+x)^beta f(x) on [-1, 1].
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Arc<Vec<(f64, f64)>> {
    let key = (n, alpha.to_bits(), beta.to_bits());
    if let Some(hit) = gj_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let rule = Arc::new(gauss_jacobi_raw(n, alpha, beta));
    gj_cache().lock().unwrap().insert(key, rule.clone());
    rule
}

fn gauss_jacobi_raw(n: usize, alpha: f64, beta: f64) -> Vec<(f64, f64)> {
    assert!(n >= 2 && alpha > -1.0 && beta > -1.0);
    let mut mat = DMatrix::<f64>::zeros(n, n);
    let mut diag = (beta - alpha) / (2.0 + alpha + beta);
    for i in 0..n - 1 {
        let ip1 = (i + 1) as f64;
        let denom = 2.0 * ip1 + alpha + beta;
        let off = 2.0 / denom
            * (ip1 * (ip1 + alpha) * (ip1 + beta) * (ip1 + alpha + beta)
                / ((denom + 1.0) * (denom - 1.0)))
                .sqrt();
        mat[(i, i)] = diag;
        mat[(i, i + 1)] = off;
        mat[(i + 1, i)] = off;
        diag = (beta * beta - alpha * alpha) / (denom * (denom + 2.0));
    }
    mat[(n - 1, n - 1)] = diag;
    let eig = mat.symmetric_eigen();
    let mu0 = 2.0f64.powf(alpha + beta + 1.0) * gamma(alpha + 1.0) * gamma(beta + 1.0)
        / gamma(alpha + beta + 2.0);
    let mut nw: Vec<(f64, f64)> = eig
        .eigenvalues
        .iter()
        .copied()
        .zip(eig.eigenvectors.row(0).iter().map(|v| v * v * mu0))
        .collect();
    nw.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    nw
}

const RULE_LO: usize = 16;
const RULE_HI: usize = 32;
const MAX_DEPTH: usize = 64;

/// Integral of |t-a|^e0 |b-t|^e1 f(t) over [a, b] where f is positive and
/// smooth inside but may vary sharply near the ends (singularities just
/// outside the interval are listed in `hints`). Error is estimated by order
/// doubling; intervals are split toward the nearest hint when needed.
pub(crate) fn adaptive_power_integral<F>(
    a: f64,
    b: f64,
    e0: f64,
    e1: f64,
    f: &F,
    tol: f64,
    hints: &[f64],
) -> Result<Scaled>
where
    F: Fn(f64) -> Scaled,
{
    if e0 <= -1.0 {
        return Err(Error::NonintegrableEndpoint(e0));
    }
    if e1 <= -1.0 {
        return Err(Error::NonintegrableEndpoint(e1));
    }
    piece(a, b, e0, e1, f, tol, hints, 0)
}

#[allow(clippy::too_many_arguments)]
fn piece<F>(
    a: f64,
    b: f64,
    e0: f64,
    e1: f64,
    f: &F,
    tol: f64,
    hints: &[f64],
    depth: usize,
) -> Result<Scaled>
where
    F: Fn(f64) -> Scaled,
{
    let lo = rule_on(a, b, e0, e1, f, RULE_LO);
    let hi = rule_on(a, b, e0, e1, f, RULE_HI);
    if !hi.is_finite() {
        return Err(Error::QuadratureStall { rel: f64::INFINITY });
    }
    let rel = Scaled::rel_diff(lo, hi);
    if rel <= tol {
        return Ok(hi);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::QuadratureStall { rel });
    }
    let len = b - a;
    let da = hints
        .iter()
        .map(|h| (h - a).abs())
        .fold(f64::INFINITY, f64::min);
    let db = hints
        .iter()
        .map(|h| (h - b).abs())
        .fold(f64::INFINITY, f64::min);
    let m = if da.min(db) < 0.25 * len {
        if da <= db {
            a + (8.0 * da).clamp(1e-6 * len, 0.5 * len)
        } else {
            b - (8.0 * db).clamp(1e-6 * len, 0.5 * len)
        }
    } else {
        0.5 * (a + b)
    };
    let left = piece(a, m, e0, 0.0, f, tol, hints, depth + 1)?;
    let right = piece(m, b, 0.0, e1, f, tol, hints, depth + 1)?;
    Ok(left.add(right))
}

fn rule_on<F>(a: f64, b: f64, e0: f64, e1: f64, f: &F, n: usize) -> Scaled
where
    F: Fn(f64) -> Scaled,
{
    // map [-1,1] -> [a,b]; (1+u) absorbs |t-a|^e0, (1-u) absorbs |b-t|^e1
    let rule = gauss_jacobi(n, e1, e0);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = Scaled::zero();
    for &(u, w) in rule.iter() {
        let t = mid + half * u;
        sum = sum.add(f(t).mul_f64(w));
    }
    let pref = Scaled::pow_abs(half, e0 + e1 + 1.0);
    sum.mul(pref)
}

/// Nodes t_j with exponents beta_j describing an integrand prod |t-t_j|^beta_j.
#[derive(Debug, Clone)]
pub struct JacobiExponents {
    pub nodes: Vec<(f64, f64)>,
}

impl JacobiExponents {
    pub fn new(nodes: Vec<(f64, f64)>) -> Self {
        JacobiExponents { nodes }
    }
}

fn is_same_node(t: f64, x: f64) -> bool {
    (t - x).abs() <= 1e-12 * (t.abs() + x.abs() + 1.0)
}

/// scale * integral over [from, to] of prod_j |t - t_j|^{beta_j} dt with the
/// endpoint singularities absorbed into Gauss-Jacobi weights. Relative error
/// <= 1e-13 estimated by order doubling.
pub fn sc_side_integral(
    exps: &JacobiExponents,
    from: f64,
    to: f64,
    scale: Complex64,
) -> Result<Complex64> {
    if !(from < to) {
        return Err(Error::Domain(format!("empty interval [{from}, {to}]")));
    }
    let mut e0 = 0.0;
    let mut e1 = 0.0;
    let mut others: Vec<(f64, f64)> = Vec::new();
    for &(tj, bj) in &exps.nodes {
        if is_same_node(tj, from) {
            e0 += bj;
        } else if is_same_node(tj, to) {
            e1 += bj;
        } else if tj > from && tj < to {
            return Err(Error::NodeInsideInterval(tj));
        } else {
            others.push((tj, bj));
        }
    }
    let hints: Vec<f64> = others.iter().map(|&(t, _)| t).collect();
    let f = |t: f64| {
        let mut p = Scaled::one();
        for &(tj, bj) in &others {
            p = p.mul(Scaled::pow_abs(t - tj, bj));
        }
        p
    };
    let integral = adaptive_power_integral(from, to, e0, e1, &f, 1e-13, &hints)?;
    let value = integral.to_f64();
    if !value.is_finite() {
        return Err(Error::QuadratureStall { rel: f64::INFINITY });
    }
    Ok(scale * value)
}
