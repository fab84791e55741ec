//! Exact vanishing of a finite sum of factored products free of `a`.
//!
//! The terms are brought over a common factored denominator and their
//! numerators are expanded as integer polynomials, multiplying by binomials
//! `1 - q^e` for cyclotomic factors (Möbius) and by `v - u q^t` for a generic
//! factor `1 - (u/v) q^t`.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{divisors, mobius, Integer, Rational};
use crate::error::{Error, Result};
use crate::qpoly::{zp_div_binomial, zp_mul_binomial, zp_mul_binomial_uv};
use crate::qsymbols::{BinKey, QProduct};

/// Expanded numerator `scalar · poly(q)` of one term over the common
/// denominator.
struct Numerator {
    scalar: Rational,
    poly: Vec<Integer>,
}

fn expand(
    t: &QProduct,
    den_cyclo: &BTreeMap<u64, i64>,
    den_bin: &BTreeMap<BinKey, i64>,
    qmin: i64,
) -> Numerator {
    let mut scalar = t.coeff.clone();
    // net exponent of (1 - q^e)
    let mut bin_exp: BTreeMap<u64, i64> = BTreeMap::new();
    let mut add_cyclo = |j: u64, n: i64, scalar: &mut Rational| {
        if n == 0 {
            return;
        }
        if j == 1 && n % 2 != 0 {
            *scalar = -scalar.clone();
        }
        for e in divisors(j) {
            let mu = mobius(j / e) as i64;
            if mu != 0 {
                *bin_exp.entry(e).or_insert(0) += mu * n;
            }
        }
    };
    for (&j, &dm) in den_cyclo {
        let n = t.cyclo_mult(j) + dm;
        add_cyclo(j, n, &mut scalar);
    }
    for (&j, &m) in &t.cyclo {
        if !den_cyclo.contains_key(&j) {
            add_cyclo(j, m, &mut scalar);
        }
    }
    let mut poly = vec![Integer::one()];
    for (&e, &m) in &bin_exp {
        for _ in 0..m.max(0) {
            poly = zp_mul_binomial(&poly, e as usize, &Integer::one());
        }
    }
    let mut gen_exp: Vec<(&BinKey, i64)> = Vec::new();
    for (k, &dm) in den_bin {
        gen_exp.push((k, t.bin.get(k).copied().unwrap_or(0) + dm));
    }
    for (k, &m) in &t.bin {
        if !den_bin.contains_key(k) {
            gen_exp.push((k, m));
        }
    }
    for (k, m) in gen_exp {
        debug_assert!(m >= 0 && k.aexp == 0 && k.t > 0);
        let u = k.lambda.numer();
        let v = k.lambda.denom();
        for _ in 0..m {
            poly = zp_mul_binomial_uv(&poly, k.t as usize, u, v);
        }
        scalar /= Rational::from_integer(num_traits::pow(v.clone(), m as usize));
    }
    for (&e, &m) in &bin_exp {
        for _ in 0..(-m).max(0) {
            zp_div_binomial(&mut poly, e as usize, &Integer::one());
        }
    }
    let shift = (t.qpow - qmin) as usize;
    if shift > 0 {
        let mut v = vec![Integer::zero(); shift];
        v.extend(poly);
        poly = v;
    }
    Numerator { scalar, poly }
}

/// Whether `Σ terms` is identically zero; every term must be free of `a`.
pub fn sum_is_zero(terms: &[QProduct]) -> Result<bool> {
    let mut live: Vec<&QProduct> = Vec::new();
    for t in terms {
        if t.is_indeterminate() {
            return Err(Error::DenominatorVanishes("0/0 factor in a term".into()));
        }
        if t.is_pole() {
            return Err(Error::ZeroReciprocal);
        }
        if !t.is_zero() {
            assert!(!t.has_a(), "sum_is_zero needs products free of a");
            live.push(t);
        }
    }
    if live.is_empty() {
        return Ok(true);
    }
    let mut den_cyclo: BTreeMap<u64, i64> = BTreeMap::new();
    let mut den_bin: BTreeMap<BinKey, i64> = BTreeMap::new();
    let mut qmin = i64::MAX;
    for t in &live {
        qmin = qmin.min(t.qpow);
        for (&j, &m) in &t.cyclo {
            if m < 0 {
                let e = den_cyclo.entry(j).or_insert(0);
                *e = (*e).max(-m);
            }
        }
        for (k, &m) in &t.bin {
            if m < 0 {
                let e = den_bin.entry(k.clone()).or_insert(0);
                *e = (*e).max(-m);
            }
        }
    }
    let nums: Vec<Numerator> = live
        .par_iter()
        .map(|t| expand(t, &den_cyclo, &den_bin, qmin))
        .collect();
    let l = nums
        .iter()
        .fold(Integer::one(), |acc, n| acc.lcm(n.scalar.denom()));
    let len = nums.iter().map(|n| n.poly.len()).max().unwrap_or(0);
    let mut acc = vec![Integer::zero(); len];
    for n in &nums {
        let f = (&n.scalar * Rational::from_integer(l.clone())).to_integer();
        for (i, c) in n.poly.iter().enumerate() {
            if !c.is_zero() {
                acc[i] += c * &f;
            }
        }
    }
    Ok(acc.iter().all(|c| c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::qsymbols::Mono;

    #[test]
    fn telescoping_pair_vanishes() {
        // 1/(1-q) - q/(1-q) - 1 = 0
        let mut a = QProduct::one();
        a.push_factor(&rat_int(1), 0, 1, -1);
        let b = a.clone().times(&Mono::q(1), 1).scale(&rat_int(-1));
        let c = QProduct::scalar(rat_int(-1));
        assert!(sum_is_zero(&[a.clone(), b.clone(), c]).unwrap());
        assert!(!sum_is_zero(&[a, b]).unwrap());
    }

    #[test]
    fn geometric_identity_with_generic_factor() {
        // 1/(1 - 2q) - 2q/(1 - 2q) = 1
        let mut a = QProduct::one();
        a.push_factor(&rat_int(2), 0, 1, -1);
        let b = a.clone().times(&Mono::new(rat_int(-2), 0, 1), 1);
        assert!(sum_is_zero(&[a, b, QProduct::scalar(rat_int(-1))]).unwrap());
    }

    #[test]
    fn cyclotomic_numerators() {
        // [6] - Φ2 Φ3 Φ6 = 0 and (1 - q^4)/(1 + q^2) - (1 - q^2) = 0
        let x = QProduct::q_integer(6);
        let y = QProduct::cyclotomic(2, 1)
            .mul(&QProduct::cyclotomic(3, 1))
            .mul(&QProduct::cyclotomic(6, 1))
            .scale(&rat_int(-1));
        assert!(sum_is_zero(&[x, y]).unwrap());
        let mut u = QProduct::one();
        u.push_factor(&rat_int(1), 0, 4, 1);
        u.push_factor(&rat_int(-1), 0, 2, -1);
        let mut w = QProduct::scalar(rat(-1, 1));
        w.push_factor(&rat_int(1), 0, 2, 1);
        assert!(sum_is_zero(&[u, w]).unwrap());
    }
}
