//! Arithmetic-geometric mean and the hypergeometric values built on it.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Common limit of the arithmetic-geometric iteration.
///
/// Terminates when |a - b| <= 1e-16 * a; both inputs must be positive.
pub fn agm(a0: f64, b0: f64) -> f64 {
    debug_assert!(a0 > 0.0 && b0 > 0.0);
    let (mut a, mut b) = (a0.max(b0), a0.min(b0));
    for _ in 0..64 {
        if (a - b).abs() <= 1e-16 * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind, modulus convention:
/// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
pub fn ellip_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!("modulus k = {k} outside [0,1)")));
    }
    let kc = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(PI / (2.0 * agm(1.0, kc)))
}

/// Gauss hypergeometric value F(1/2, 1/2; 1; m) = 2 K(sqrt(m)) / pi.
///
/// Computed as 1 / AGM(1, sqrt(1 - m)); relative accuracy ~ 1e-15.
pub fn hyp_half(m: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::Domain(format!("m = {m} outside [0,1)")));
    }
    if m == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 / agm(1.0, (1.0 - m).sqrt()))
}

/// Capacity F(1/2,1/2;1;k^2) / F(1/2,1/2;1;1-k^2) evaluated from the
/// complementary square 1-k^2 so that moduli very close to 1 do not round
/// through the singular endpoint. `k2c` is 1 - k^2.
pub fn capacity_from_modulus(k2c: f64) -> Result<f64> {
    if !(k2c > 0.0 && k2c < 1.0) {
        return Err(Error::Domain(format!("1 - k^2 = {k2c} outside (0,1)")));
    }
    let kc = k2c.sqrt();
    let k = (1.0 - k2c).max(0.0).sqrt();
    // F(k^2)/F(1-k^2) = AGM(1, kc')/AGM(1, kc) with kc' = sqrt(1-kc^2) = k.
    Ok(agm(1.0, kc) / agm(1.0, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agm_fixed_point() {
        assert_eq!(agm(1.0, 1.0), 1.0);
    }

    #[test]
    fn agm_k_half() {
        // hand iteration: (1, 0.8660254038) -> 0.9330.., 0.9306.. -> 0.93180839..
        let got = agm(1.0, 0.8660254038);
        assert!((got - 0.9318083917).abs() < 1e-9, "got {got}");
        // K(0.5) = pi / (2 agm)
        let k = PI / (2.0 * got);
        assert!((k - 1.6857503548125960).abs() < 1e-9);
    }

    #[test]
    fn agm_homogeneous() {
        let s = 3.7;
        let (a, b) = (1.0, 0.2);
        assert!((agm(s * a, s * b) - s * agm(a, b)).abs() < 1e-14 * s);
    }

    #[test]
    fn hyp_half_at_zero() {
        assert_eq!(hyp_half(0.0).unwrap(), 1.0);
    }

    #[test]
    fn hyp_half_at_half() {
        // 2 K(1/sqrt(2)) / pi with K = Gamma(1/4)^2 / (4 sqrt(pi))
        let gamma_quarter = 3.625_609_908_221_908_3_f64;
        let k = gamma_quarter * gamma_quarter / (4.0 * PI.sqrt());
        let expect = 2.0 * k / PI;
        let got = hyp_half(0.5).unwrap();
        assert!((got - expect).abs() < 1e-14, "got {got}, expect {expect}");
        assert!((got - 1.1803405990160380).abs() < 1e-13);
    }

    #[test]
    fn hyp_half_symmetric_point() {
        let f = |m: f64| hyp_half(m).unwrap();
        assert!((f(0.5) / f(1.0 - 0.5) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hyp_half_ratio_increasing() {
        let f = |m: f64| hyp_half(m).unwrap();
        let mut prev = 0.0;
        for i in 1..20 {
            let m = i as f64 / 20.0;
            let r = f(m) / f(1.0 - m);
            assert!(r > prev, "ratio must increase at m = {m}");
            prev = r;
        }
    }

    #[test]
    fn hyp_half_domain() {
        assert!(hyp_half(1.0).is_err());
        assert!(hyp_half(-0.1).is_err());
    }

    #[test]
    fn capacity_from_modulus_matches_ratio() {
        for &k2 in &[0.1, 0.5, 0.9] {
            let direct = hyp_half(k2).unwrap() / hyp_half(1.0 - k2).unwrap();
            let robust = capacity_from_modulus(1.0 - k2).unwrap();
            assert!((direct - robust).abs() < 1e-13 * direct.abs());
        }
    }
}
