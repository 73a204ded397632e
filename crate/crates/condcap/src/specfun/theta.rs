//! First Jacobi theta function and its logarithmic derivatives for purely
//! imaginary modulus.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Modulus tau = i t of the lattice Z + tau Z, t > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticTau {
    t: f64,
}

impl EllipticTau {
    pub fn new(im: f64) -> Result<Self> {
        if !im_ok(im) {
            return Err(Error::Nonconvergent);
        }
        Ok(EllipticTau { t: im })
    }

    pub fn im(&self) -> f64 {
        self.t
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(0.0, self.t)
    }
}

fn im_ok(t: f64) -> bool {
    t.is_finite() && t > 0.0
}

const TRUNC: f64 = 1e-18;
const MAX_TERMS: usize = 96;

/// Series evaluation shared by theta1 and its u-derivatives. `order` selects
/// the number of term-wise derivatives (0, 1 or 2).
fn theta1_series(u: Complex64, t: f64, order: u8) -> Complex64 {
    // reduce Re u to [-1/2, 1/2]; theta1(u+1) = -theta1(u) and the same sign
    // flips apply to every u-derivative
    let shift = u.re.round();
    let ur = Complex64::new(u.re - shift, u.im);
    let sign = if (shift as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let au = ur.im.abs();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for k in 0..MAX_TERMS {
        let half = k as f64 + 0.5;
        let m = 2 * k + 1;
        let mf = m as f64;
        let q_pow = (-PI * t * half * half).exp();
        let arg = PI * mf * ur;
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = match order {
            0 => 2.0 * sgn * q_pow * arg.sin(),
            1 => 2.0 * PI * mf * sgn * q_pow * arg.cos(),
            _ => -2.0 * PI * PI * mf * mf * sgn * q_pow * arg.sin(),
        };
        sum += term;
        scale = scale.max(term.norm());
        // next-term magnitude bound from the series design:
        // |term_{k+1}| <= 2 exp(-pi t (k+3/2)^2 + 2 pi (k+3/2) |Im u|) * poly
        let nhalf = half + 1.0;
        let poly = match order {
            0 => 1.0,
            1 => PI * (2.0 * nhalf),
            _ => PI * PI * (2.0 * nhalf) * (2.0 * nhalf),
        };
        let bound = 2.0 * poly * (-PI * t * nhalf * nhalf + 2.0 * PI * nhalf * au).exp();
        if bound < TRUNC * scale.max(1e-300) && k >= 2 {
            break;
        }
    }
    sign * sum
}

/// theta1(u | tau) = 2 sum_k (-1)^k exp(pi i (k+1/2)^2 tau) sin(pi (2k+1) u).
pub fn theta1(u: Complex64, tau: &EllipticTau) -> Result<Complex64> {
    Ok(theta1_series(u, tau.im(), 0))
}

/// theta1'(u | tau), the u-derivative of the series.
pub fn theta1_prime(u: Complex64, tau: &EllipticTau) -> Result<Complex64> {
    Ok(theta1_series(u, tau.im(), 1))
}

/// Logarithmic derivative theta1'/theta1 (order 1) or its u-derivative
/// (order 2), via term-wise differentiated series.
pub fn theta1_logderiv(u: Complex64, tau: &EllipticTau, order: u8) -> Result<Complex64> {
    assert!(order == 1 || order == 2, "order must be 1 or 2");
    let t = tau.im();
    let th = theta1_series(u, t, 0);
    // theta1 vanishes only on the lattice; the leading series term sets the
    // scale away from zeros
    let lead = 2.0 * (-PI * t * 0.25).exp() * (PI * u.im.abs()).cosh();
    if th.norm() < 1e-12 * lead.max(1e-300) {
        return Err(Error::PoleAtLatticePoint);
    }
    let d1 = theta1_series(u, t, 1);
    let rho = d1 / th;
    if order == 1 {
        return Ok(rho);
    }
    let d2 = theta1_series(u, t, 2);
    Ok(d2 / th - rho * rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(t: f64) -> EllipticTau {
        EllipticTau::new(t).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Independent oracle: plain summation of the defining series with a
    /// fixed large term count, no truncation logic shared with theta1.
    fn theta1_oracle(u: Complex64, t: f64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..48 {
            let half = k as f64 + 0.5;
            let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += 2.0 * sgn * (-PI * t * half * half).exp() * (PI * (2 * k + 1) as f64 * u).sin();
        }
        sum
    }

    #[test]
    fn odd_at_zero() {
        let v = theta1(c(0.0, 0.0), &tau(1.0)).unwrap();
        assert!(v.norm() == 0.0, "theta1(0) = {v}");
    }

    #[test]
    fn value_at_0p3_i() {
        let v = theta1(c(0.3, 0.0), &tau(1.0)).unwrap();
        let want = theta1_oracle(c(0.3, 0.0), 1.0);
        assert!((v - want).norm() < 1e-15, "got {v}, oracle {want}");
        // quoted target ~= 0.73722 (+-1e-4)
        assert!((v.re - 0.73722).abs() < 1e-4, "got {v}");
    }

    #[test]
    fn shift_by_one_negates() {
        let u = c(0.3, 0.0);
        let a = theta1(u + 1.0, &tau(1.0)).unwrap();
        let b = theta1(u, &tau(1.0)).unwrap();
        assert!((a + b).norm() < 1e-14);
    }

    #[test]
    fn quasi_periodicity_grid() {
        // theta1(u+1) = -theta1(u); theta1(u+tau) = -exp(-pi i tau - 2 pi i u) theta1(u)
        for &t in &[0.7, 1.0, 1.6] {
            let tt = tau(t);
            for &ur in &[-0.3, 0.1, 0.42] {
                for &ui in &[-0.2, 0.0, 0.35] {
                    let u = c(ur, ui);
                    let base = theta1(u, &tt).unwrap();
                    let shifted = theta1(u + 1.0, &tt).unwrap();
                    assert!((shifted + base).norm() <= 1e-12 * base.norm().max(1.0));
                    let tshift = theta1(u + tt.as_complex(), &tt).unwrap();
                    let factor =
                        -(-Complex64::i() * PI * tt.as_complex() - Complex64::i() * 2.0 * PI * u)
                            .exp();
                    assert!(
                        (tshift - factor * base).norm() <= 1e-12 * (factor * base).norm().max(1.0),
                        "t={t}, u={u}"
                    );
                }
            }
        }
    }

    #[test]
    fn logderiv_zero_at_half() {
        // theta1 is even about u = 1/2, so the log-derivative vanishes there
        let v = theta1_logderiv(c(0.5, 0.0), &tau(1.0), 1).unwrap();
        assert!(v.norm() < 1e-12, "got {v}");
    }

    #[test]
    fn logderiv_odd() {
        let u = c(0.2, 0.0);
        let tt = tau(1.3);
        let a = theta1_logderiv(u, &tt, 1).unwrap();
        let b = theta1_logderiv(-u, &tt, 1).unwrap();
        assert!((a + b).norm() < 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn order2_matches_finite_difference() {
        let u = c(0.3, 0.0);
        let tt = tau(1.0);
        let h = 1e-5;
        let fwd = theta1_logderiv(u + h, &tt, 1).unwrap();
        let bwd = theta1_logderiv(u - h, &tt, 1).unwrap();
        let fd = (fwd - bwd) / (2.0 * h);
        let an = theta1_logderiv(u, &tt, 2).unwrap();
        assert!((fd - an).norm() < 1e-8 * an.norm().max(1.0), "fd {fd}, an {an}");
    }

    #[test]
    fn pole_detected_at_lattice() {
        assert!(matches!(
            theta1_logderiv(c(0.0, 0.0), &tau(1.0), 1),
            Err(Error::PoleAtLatticePoint)
        ));
        assert!(matches!(
            theta1_logderiv(c(1.0, 0.0), &tau(1.0), 1),
            Err(Error::PoleAtLatticePoint)
        ));
    }

    #[test]
    fn third_kind_period_property() {
        // log(theta1(u+tau-p)/theta1(u+tau-q)) - log(theta1(u-p)/theta1(u-q))
        // = 2 pi i (p - q) mod 2 pi i Z
        let tt = tau(1.1);
        let p = c(0.13, 0.21);
        let q = c(-0.07, 0.4);
        let u = c(0.31, 0.05);
        let eta = |u: Complex64| {
            let a = theta1(u - p, &tt).unwrap();
            let b = theta1(u - q, &tt).unwrap();
            (a / b).ln()
        };
        let diff = eta(u + tt.as_complex()) - eta(u);
        let want = Complex64::i() * 2.0 * PI * (p - q);
        let two_pi_i = Complex64::i() * 2.0 * PI;
        // compare modulo 2 pi i
        let k = ((diff - want) / two_pi_i).re.round();
        let resid = diff - want - two_pi_i * k;
        assert!(resid.norm() < 1e-11, "residual {resid}");
    }
}
