//! Arithmetic in `Q[q]/Φ_d^E` and the valuation engine built on it.
//!
//! Elements are stored as an integer polynomial over a positive common
//! denominator. Every factor of a summand other than `Φ_d` itself is a unit in
//! this ring, so a sum of products reduces to `Σ c_k U_k Φ_d^{v_k - v_min}`.

use std::collections::HashMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic_int, zp_content, zp_mul, zp_rem_monic, zp_trim, UPoly};
use crate::qsymbols::QProduct;

/// An element of `Q[q]/M` written as `num / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LElem {
    num: Vec<Integer>,
    den: Integer,
}

impl LElem {
    pub fn zero() -> Self {
        LElem {
            num: Vec::new(),
            den: Integer::one(),
        }
    }

    pub fn one() -> Self {
        LElem {
            num: vec![Integer::one()],
            den: Integer::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn normalized(mut num: Vec<Integer>, mut den: Integer) -> Self {
        zp_trim(&mut num);
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -c.clone());
        }
        let g = zp_content(&num).gcd(&den);
        if !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        LElem { num, den }
    }

    pub fn to_upoly(&self) -> UPoly {
        let d = Rational::from_integer(self.den.clone());
        UPoly::new(
            self.num
                .iter()
                .map(|c| Rational::from_integer(c.clone()) / &d)
                .collect(),
        )
    }

    pub fn numerator(&self) -> &[Integer] {
        &self.num
    }

    pub fn denominator(&self) -> &Integer {
        &self.den
    }
}

/// `Q[q]/Φ_d^E` together with caches of reduced factors and their inverses.
pub struct LocalRing {
    d: u64,
    e: u32,
    phi: Vec<Integer>,
    modulus: Vec<Integer>,
    modulus_poly: UPoly,
    q: LElem,
    q_inv: LElem,
    phi_pows: Vec<LElem>,
    cyclo_cache: HashMap<u64, (LElem, LElem)>,
    bin_cache: HashMap<(Rational, i64), (LElem, LElem)>,
}

impl LocalRing {
    pub fn new(d: u64, e: u32) -> Result<Self> {
        assert!(e >= 1, "local ring exponent must be positive");
        let phi = cyclotomic_int(d);
        let mut modulus = vec![Integer::one()];
        for _ in 0..e {
            modulus = zp_mul(&modulus, &phi);
        }
        let modulus_poly = UPoly::from_bigints(&modulus);
        let mut r = LocalRing {
            d,
            e,
            phi,
            modulus,
            modulus_poly,
            q: LElem::zero(),
            q_inv: LElem::zero(),
            phi_pows: Vec::new(),
            cyclo_cache: HashMap::new(),
            bin_cache: HashMap::new(),
        };
        r.q = r.from_ints(vec![Integer::zero(), Integer::one()]);
        r.q_inv = r.inverse(&r.q)?;
        let mut p = LElem::one();
        for _ in 0..e {
            r.phi_pows.push(p.clone());
            let phi = r.from_ints(r.phi.clone());
            p = r.mul(&p, &phi);
        }
        Ok(r)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn from_ints(&self, mut c: Vec<Integer>) -> LElem {
        zp_rem_monic(&mut c, &self.modulus);
        LElem::normalized(c, Integer::one())
    }

    pub fn from_rational(&self, c: &Rational) -> LElem {
        LElem::normalized(vec![c.numer().clone()], c.denom().clone())
    }

    pub fn from_upoly(&self, p: &UPoly) -> LElem {
        let (c, ints) = p.primitive_int();
        if ints.is_empty() {
            return LElem::zero();
        }
        let x = self.from_ints(ints);
        self.scale(&x, &c)
    }

    pub fn mul(&self, x: &LElem, y: &LElem) -> LElem {
        if x.is_zero() || y.is_zero() {
            return LElem::zero();
        }
        let mut p = zp_mul(&x.num, &y.num);
        zp_rem_monic(&mut p, &self.modulus);
        LElem::normalized(p, &x.den * &y.den)
    }

    pub fn add(&self, x: &LElem, y: &LElem) -> LElem {
        if x.is_zero() {
            return y.clone();
        }
        if y.is_zero() {
            return x.clone();
        }
        let l = x.den.lcm(&y.den);
        let fx = &l / &x.den;
        let fy = &l / &y.den;
        let n = x.num.len().max(y.num.len());
        let mut v = vec![Integer::zero(); n];
        for (i, c) in x.num.iter().enumerate() {
            v[i] += c * &fx;
        }
        for (i, c) in y.num.iter().enumerate() {
            v[i] += c * &fy;
        }
        LElem::normalized(v, l)
    }

    pub fn neg(&self, x: &LElem) -> LElem {
        LElem {
            num: x.num.iter().map(|c| -c).collect(),
            den: x.den.clone(),
        }
    }

    pub fn sub(&self, x: &LElem, y: &LElem) -> LElem {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &LElem, c: &Rational) -> LElem {
        if c.is_zero() || x.is_zero() {
            return LElem::zero();
        }
        let num = x.num.iter().map(|v| v * c.numer()).collect();
        LElem::normalized(num, &x.den * c.denom())
    }

    pub fn pow(&self, x: &LElem, mut e: u64) -> LElem {
        let mut base = x.clone();
        let mut acc = LElem::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of a unit; `ZeroInverse` when `x` is divisible by `Φ_d`.
    /// The inverse modulo `Φ_d` is lifted to `Φ_d^E` by Newton steps
    /// `y ← y(2 - xy)`.
    pub fn inverse(&self, x: &LElem) -> Result<LElem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse(self.d));
        }
        let phi = UPoly::from_bigints(&self.phi);
        let base = if self.e == 1 { &self.modulus_poly } else { &phi };
        let (g, s, _) = x.to_upoly().rem(base)?.ext_gcd(base)?;
        if !g.is_one() {
            return Err(Error::ZeroInverse(self.d));
        }
        let mut y = self.from_upoly(&s);
        let two = self.from_rational(&Rational::from_integer(2.into()));
        let mut prec = 1;
        while prec < self.e {
            y = self.mul(&y, &self.sub(&two, &self.mul(x, &y)));
            prec *= 2;
        }
        Ok(y)
    }

    /// `q^t` for any integer `t`.
    pub fn q_pow(&self, t: i64) -> LElem {
        if t >= 0 {
            self.pow(&self.q, t as u64)
        } else {
            self.pow(&self.q_inv, t.unsigned_abs())
        }
    }

    /// `Φ_d^j`, zero once `j >= E`.
    pub fn phi_pow(&self, j: i64) -> LElem {
        assert!(j >= 0);
        self.phi_pows
            .get(j as usize)
            .cloned()
            .unwrap_or_else(LElem::zero)
    }

    /// Number of factors `Φ_d` dividing `x`, capped at `E`.
    pub fn valuation(&self, x: &LElem) -> u32 {
        if x.is_zero() {
            return self.e;
        }
        let mut cur = x.num.clone();
        let mut v = 0;
        loop {
            let (q, r) = zp_divrem_monic(&cur, &self.phi);
            if !r.iter().all(|c| c.is_zero()) {
                return v;
            }
            v += 1;
            if v >= self.e {
                return self.e;
            }
            cur = q;
        }
    }

    fn cyclo_pair(&mut self, j: u64) -> Result<(LElem, LElem)> {
        if let Some(p) = self.cyclo_cache.get(&j) {
            return Ok(p.clone());
        }
        let x = self.from_ints(cyclotomic_int(j));
        let xi = self.inverse(&x)?;
        self.cyclo_cache.insert(j, (x.clone(), xi.clone()));
        Ok((x, xi))
    }

    fn bin_pair(&mut self, lambda: &Rational, t: i64) -> Result<(LElem, LElem)> {
        let key = (lambda.clone(), t);
        if let Some(p) = self.bin_cache.get(&key) {
            return Ok(p.clone());
        }
        let qt = self.q_pow(t);
        let x = self.sub(&LElem::one(), &self.scale(&qt, lambda));
        let xi = self.inverse(&x)?;
        self.bin_cache.insert(key, (x.clone(), xi.clone()));
        Ok((x, xi))
    }

    /// The part of `p` prime to `Φ_d`, ignoring the rational coefficient.
    /// `p` must be free of `a` and of vanishing factors.
    pub fn unit_part(&mut self, p: &QProduct) -> Result<LElem> {
        let mut acc = self.q_pow(p.qpow);
        for (&j, &m) in &p.cyclo {
            if j == self.d {
                continue;
            }
            let (x, xi) = self.cyclo_pair(j)?;
            let b = if m > 0 { x } else { xi };
            acc = self.mul(&acc, &self.pow(&b, m.unsigned_abs()));
        }
        for (k, &m) in &p.bin {
            debug_assert_eq!(k.aexp, 0, "unit_part needs a specialised product");
            let (x, xi) = self.bin_pair(&k.lambda, k.t)?;
            let b = if m > 0 { x } else { xi };
            acc = self.mul(&acc, &self.pow(&b, m.unsigned_abs()));
        }
        Ok(acc)
    }
}

/// Quotient and remainder by a monic integer polynomial.
pub fn zp_divrem_monic(a: &[Integer], m: &[Integer]) -> (Vec<Integer>, Vec<Integer>) {
    let dm = m.len() - 1;
    if a.len() <= dm {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![Integer::zero(); a.len() - dm];
    for i in (0..q.len()).rev() {
        let c = r[i + dm].clone();
        if c.is_zero() {
            continue;
        }
        for (j, mj) in m.iter().enumerate() {
            if !mj.is_zero() {
                r[i + j] -= &c * mj;
            }
        }
        q[i] = c;
    }
    r.truncate(dm);
    zp_trim(&mut q);
    (q, r)
}

/// Outcome of a valuation computation for one modulus part `Φ_d^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalOutcome {
    /// `v_Φ(Σ)` when smaller than `e`, otherwise `e` (meaning "at least").
    pub valuation: i64,
    pub coprime: bool,
    pub divisible: bool,
}

/// Multiplicities of `Φ_d` in the nonzero terms, after rejecting poles.
pub fn term_valuations(terms: &[QProduct], d: u64) -> Result<Vec<Option<i64>>> {
    terms
        .iter()
        .map(|t| {
            if t.is_indeterminate() {
                Err(Error::DenominatorVanishes("0/0 factor in a term".into()))
            } else if t.is_pole() {
                Err(Error::ZeroReciprocal)
            } else if t.is_zero() {
                Ok(None)
            } else {
                Ok(Some(t.cyclo_mult(d)))
            }
        })
        .collect()
}

/// Working exponent `E = e - v_min` for a list of terms, `None` when every
/// term is already divisible by `Φ_d^e` or all terms vanish.
pub fn working_exponent(vals: &[Option<i64>], e: u32) -> Option<(i64, u32)> {
    let vmin = vals.iter().flatten().copied().min()?;
    let big_e = e as i64 - vmin;
    (big_e > 0).then_some((vmin, big_e as u32))
}

/// `v_{Φ_d}` of `Σ terms` capped at `e`, for terms free of `a`. `ring` must
/// be `Q[q]/Φ_d^E` with `E` from [`working_exponent`].
pub fn local_sum(
    ring: &mut LocalRing,
    terms: &[QProduct],
    vals: &[Option<i64>],
    vmin: i64,
) -> Result<LElem> {
    let big_e = ring.exponent() as i64;
    let mut prev = QProduct::one();
    let mut unit = LElem::one();
    let mut total = LElem::zero();
    for (t, v) in terms.iter().zip(vals) {
        let Some(v) = v else { continue };
        let delta = t.div(&prev);
        let du = ring.unit_part(&delta)?;
        unit = ring.mul(&unit, &du);
        prev = t.clone();
        let shift = v - vmin;
        if shift >= big_e {
            continue;
        }
        let x = ring.mul(&ring.scale(&unit, &t.coeff), &ring.phi_pow(shift));
        total = ring.add(&total, &x);
    }
    Ok(total)
}

/// `v_{Φ_d}(Σ terms)` compared against `e`, for terms free of `a`.
pub fn local_valuation(terms: &[QProduct], d: u64, e: u32) -> Result<LocalOutcome> {
    let vals = term_valuations(terms, d)?;
    let Some((vmin, big_e)) = working_exponent(&vals, e) else {
        return Ok(LocalOutcome {
            valuation: e as i64,
            coprime: true,
            divisible: true,
        });
    };
    let mut ring = LocalRing::new(d, big_e)?;
    let total = local_sum(&mut ring, terms, &vals, vmin)?;
    Ok(outcome(vmin, ring.valuation(&total), big_e, e))
}

pub fn outcome(vmin: i64, vt: u32, big_e: u32, e: u32) -> LocalOutcome {
    let v = vmin + vt as i64;
    LocalOutcome {
        valuation: v.min(e as i64),
        coprime: v >= 0,
        divisible: vt >= big_e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::qpoly::cyclotomic;
    use crate::qsymbols::Mono;

    #[test]
    fn inverse_modulo_phi3() {
        let r = LocalRing::new(3, 1).unwrap();
        let x = r.from_upoly(&UPoly::from_ints(&[1, 1]));
        let xi = r.inverse(&x).unwrap();
        assert_eq!(xi.to_upoly(), UPoly::from_ints(&[0, -1]));
        let two = r.from_rational(&rat_int(2));
        assert_eq!(r.inverse(&two).unwrap().to_upoly(), UPoly::constant(rat(1, 2)));
        assert_eq!(r.inverse(&LElem::zero()), Err(Error::ZeroInverse(3)));
    }

    #[test]
    fn valuation_counts_phi_factors() {
        let r = LocalRing::new(5, 3).unwrap();
        let p = &*cyclotomic(5) * &UPoly::from_ints(&[2, 1]);
        assert_eq!(r.valuation(&r.from_upoly(&p)), 1);
        let p2 = &p * &*cyclotomic(5);
        assert_eq!(r.valuation(&r.from_upoly(&p2)), 2);
        let p3 = &p2 * &*cyclotomic(5);
        assert_eq!(r.valuation(&r.from_upoly(&p3)), 3);
    }

    #[test]
    fn valuation_of_mixed_sum() {
        // (1 - q^5) + (q^5 - 1) q^3 = (1 - q^5)(1 - q^3)
        let mut t0 = QProduct::one();
        t0.push_factor(&rat_int(1), 0, 5, 1);
        let t1 = t0.clone().times(&Mono::q(3), 1).scale(&rat_int(-1));
        let o = local_valuation(&[t0.clone(), t1.clone()], 5, 2).unwrap();
        assert_eq!(o.valuation, 1);
        assert!(o.coprime && !o.divisible);
        let o = local_valuation(&[t0, t1], 3, 1).unwrap();
        assert!(o.divisible);
    }

    #[test]
    fn pole_is_not_coprime() {
        let p = QProduct::cyclotomic(3, -1);
        let o = local_valuation(&[p], 3, 1).unwrap();
        assert!(!o.coprime && !o.divisible);
        assert_eq!(o.valuation, -1);
    }
}
