//! Floating-point sanity checks: partial sums of the classical series and
//! evaluations of finite q-sums near the unit circle. Nothing here decides a
//! verdict.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::catalog::{Case, SumFamily};
use crate::error::{Error, Result};
use crate::qpoly::UPoly;
use crate::qsymbols::{Params, QProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesRule {
    /// `Σ C(4k,2k) C(2k,k)^2 (8k+1) / (2^{8k} 3^{2k})`, limit `2√3/π`.
    Ramanujan8k1,
    /// `Σ (-1)^ℓ C(2ℓ,ℓ) / 8^ℓ`, limit `√6/3`.
    Sqrt6Over3,
}

impl SeriesRule {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ramanujan-8k1" => Some(SeriesRule::Ramanujan8k1),
            "sqrt6-over-3" => Some(SeriesRule::Sqrt6Over3),
            _ => None,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            SeriesRule::Ramanujan8k1 => "ramanujan-8k1",
            SeriesRule::Sqrt6Over3 => "sqrt6-over-3",
        }
    }

    pub fn limit(self) -> f64 {
        match self {
            SeriesRule::Ramanujan8k1 => 2.0 * 3f64.sqrt() / PI,
            SeriesRule::Sqrt6Over3 => 6f64.sqrt() / 3.0,
        }
    }
}

fn finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite)
    }
}

/// Neumaier-compensated sum of terms `0..=n`.
pub fn partial_sum_numeric(rule: SeriesRule, n: u64) -> Result<f64> {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    // c is the term without its linear factor
    let mut c = 1.0f64;
    for k in 0..=n {
        let kf = k as f64;
        let t = match rule {
            SeriesRule::Ramanujan8k1 => c * (8.0 * kf + 1.0),
            SeriesRule::Sqrt6Over3 => c,
        };
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
        c *= match rule {
            SeriesRule::Ramanujan8k1 => {
                (4.0 * kf + 1.0) * (4.0 * kf + 2.0) * (4.0 * kf + 3.0) * (4.0 * kf + 4.0)
                    / ((kf + 1.0).powi(4) * 2304.0)
            }
            SeriesRule::Sqrt6Over3 => -2.0 * (2.0 * kf + 1.0) / ((kf + 1.0) * 8.0),
        };
    }
    finite(sum + comp)
}

/// `|partial sum - limit|`.
pub fn sanity_error(rule: SeriesRule, n: u64) -> Result<f64> {
    Ok((partial_sum_numeric(rule, n)? - rule.limit()).abs())
}

/// `(q^a;q)_n / (1-q)^n`, which tends to `(a)_n` as `q → 1`.
pub fn pochhammer_limit(a: f64, n: u32, q: f64) -> Result<f64> {
    let mut v = 1.0;
    for j in 0..n {
        v *= (1.0 - q.powf(a + j as f64)) / (1.0 - q);
    }
    finite(v)
}

fn eval_upoly(p: &UPoly, z: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
}

/// The value of one `a`-free product at the complex point `z`.
pub fn eval_product(t: &QProduct, z: Complex64) -> Result<Complex64> {
    let (n, d) = t.to_upoly_pair()?;
    let v = eval_upoly(&n, z) / eval_upoly(&d, z);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}

/// `Σ terms` at `q = r·e^{2πi/d}`.
pub fn radial_probe(terms: &[QProduct], d: u64, r: f64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Usage(format!("radius {} outside [0, 1)", r)));
    }
    let z = Complex64::from_polar(r, 2.0 * PI / d as f64);
    terms.iter().map(|t| eval_product(t, z)).sum()
}

/// The block sum of `f` (first piece, `n = d`) at `q = r·ζ_d`. Every
/// parameter must be given a value.
pub fn radial_block(f: &SumFamily, d: u64, r: f64, params: &Params, half: bool) -> Result<Complex64> {
    let case = Case::n(d as i64);
    if let Some(s) = f.symbolic {
        if params.get(s).is_none() {
            return Err(Error::Usage(format!("{} needs a value for {}", f.id, s)));
        }
    }
    let p = f.complete_params(params);
    let piece = &f.pieces[0];
    let top = if half { (d as i64 - 1) / 2 } else { d as i64 - 1 };
    let terms: Vec<QProduct> = (0..=top).map(|k| (piece.term)(&case, &p, k)).collect();
    radial_probe(&terms, d, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family, supercong::ramanujan_sum};

    #[test]
    fn first_term_is_one() {
        assert_eq!(partial_sum_numeric(SeriesRule::Ramanujan8k1, 0).unwrap(), 1.0);
    }

    #[test]
    fn classical_limits() {
        assert!(sanity_error(SeriesRule::Ramanujan8k1, 50).unwrap() < 1e-12);
        assert!(sanity_error(SeriesRule::Sqrt6Over3, 60).unwrap() < 1e-8);
    }

    #[test]
    fn agrees_with_exact_sums() {
        for n in [0u64, 1, 5, 20, 50] {
            let x = partial_sum_numeric(SeriesRule::Ramanujan8k1, n).unwrap();
            let e = ramanujan_sum(n as i64).to_f64().unwrap();
            assert!(((x - e) / e).abs() < 1e-13, "{}", n);
        }
    }

    #[test]
    fn pochhammer_near_one() {
        let v = pochhammer_limit(0.5, 3, 1.0 - 1e-4).unwrap();
        assert!((v - 15.0 / 8.0).abs() < 1e-2);
    }

    #[test]
    fn radial_control_and_block() {
        let ones = vec![QProduct::one(); 3];
        assert!((radial_probe(&ones, 3, 0.999).unwrap().norm() - 3.0).abs() < 1e-9);
        let f = family("T1.2-full").unwrap();
        let p = Params::new();
        let mags: Vec<f64> = [0.9, 0.99, 0.999]
            .iter()
            .map(|&r| radial_block(f, 3, r, &p, false).unwrap().norm())
            .collect();
        assert!(mags[2] < 1e-2, "{:?}", mags);
        assert!(mags[0] > mags[1] && mags[1] > mags[2], "{:?}", mags);
    }
}
