//! Lauricella hypergeometric function F_D^(N) through its Euler integral.

use super::gamma::gamma;
use super::quad::{adaptive_power_integral, Scaled};
use crate::error::{Error, Result};

/// F_D^(N)(a; b, c; x) evaluated from the Euler-type integral
///
///   Gamma(c)/(Gamma(b) Gamma(c-b)) * int_0^1 t^{b-1} (1-t)^{c-b-1}
///       prod_j (1 - t x_j)^{-a_j} dt
///
/// with the endpoint weights absorbed into Gauss-Jacobi quadrature and
/// adaptive subdivision until two refinements agree to 1e-13 relative.
/// Requires 0 < b < c and every x_j < 1.
pub fn lauricella_fd(a: &[f64], b: f64, c: f64, x: &[f64]) -> Result<f64> {
    if a.len() != x.len() {
        return Err(Error::ParamDomain(format!(
            "a has {} entries but x has {}",
            a.len(),
            x.len()
        )));
    }
    if !(b > 0.0 && c > b) {
        return Err(Error::ParamDomain(format!("need 0 < b < c, got b={b}, c={c}")));
    }
    if let Some(bad) = x.iter().find(|&&xi| xi >= 1.0) {
        return Err(Error::ParamDomain(format!("x_j = {bad} >= 1")));
    }
    // factors with x_j = 0 or a_j = 0 are identically 1
    let active: Vec<(f64, f64)> = x
        .iter()
        .zip(a.iter())
        .filter(|(&xi, &ai)| xi != 0.0 && ai != 0.0)
        .map(|(&xi, &ai)| (xi, ai))
        .collect();
    // (1 - t x)^{-a} = |x|^{-a} |1/x - t|^{-a}; the node 1/x lies outside [0,1]
    let mut prefactor = Scaled::new(gamma(c) / (gamma(b) * gamma(c - b)));
    let mut hints = Vec::new();
    for &(xi, ai) in &active {
        prefactor = prefactor.mul(Scaled::pow_abs(xi, -ai));
        hints.push(1.0 / xi);
    }
    let f = |t: f64| {
        let mut p = Scaled::one();
        for &(xi, ai) in &active {
            p = p.mul(Scaled::pow_abs(1.0 / xi - t, -ai));
        }
        p
    };
    let integral = adaptive_power_integral(0.0, 1.0, b - 1.0, c - b - 1.0, &f, 1e-13, &hints)?;
    let value = integral.mul(prefactor).to_f64();
    if !value.is_finite() {
        return Err(Error::QuadratureStall { rel: f64::INFINITY });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::agm::hyp_half;

    #[test]
    fn trivial_at_origin() {
        let v = lauricella_fd(&[0.5, 0.25], 0.5, 1.0, &[0.0, 0.0]).unwrap();
        assert!((v - 1.0).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn zero_a_is_one() {
        let v = lauricella_fd(&[0.0, 0.0, 0.0], 0.3, 1.7, &[0.9, -0.5, 0.3]).unwrap();
        assert!((v - 1.0).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn reduces_to_gauss_2f1() {
        // F_D^(1)(a; b, c; x) = 2F1(a, b; c; x); at a=b=1/2, c=1 this is the
        // AGM value hyp_half(x)
        for &xv in &[-0.5, 0.3, 0.5, 0.7] {
            let v = lauricella_fd(&[0.5], 0.5, 1.0, &[xv]).unwrap();
            let want = if xv >= 0.0 {
                hyp_half(xv).unwrap()
            } else {
                // 2F1(1/2,1/2;1;x) for x<0 via Pfaff: (1-x)^{-1/2} 2F1(1/2,1/2;1;x/(x-1))
                (1.0 - xv).powf(-0.5) * hyp_half(xv / (xv - 1.0)).unwrap()
            };
            assert!((v - want).abs() < 1e-12 * want.abs(), "x={xv}: got {v}, want {want}");
        }
    }

    #[test]
    fn matches_hyp_series_on_grid() {
        // independent oracle: direct hypergeometric series for 2F1(a,b;c;x)
        fn series_2f1(a: f64, b: f64, c: f64, x: f64) -> f64 {
            let mut term = 1.0;
            let mut sum = 1.0;
            for k in 0..400 {
                let kf = k as f64;
                term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
                sum += term;
                if term.abs() < 1e-17 * sum.abs() {
                    break;
                }
            }
            sum
        }
        for &xv in &[-0.5, 0.0, 0.3, 0.7] {
            let v = lauricella_fd(&[0.25], 0.75, 1.5, &[xv]).unwrap();
            let want = series_2f1(0.25, 0.75, 1.5, xv);
            assert!((v - want).abs() < 1e-12 * want.abs(), "x={xv}: {v} vs {want}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(lauricella_fd(&[0.5], 0.0, 1.0, &[0.5]).is_err());
        assert!(lauricella_fd(&[0.5], 1.0, 0.5, &[0.5]).is_err());
        assert!(lauricella_fd(&[0.5], 0.5, 1.0, &[1.0]).is_err());
    }
}
