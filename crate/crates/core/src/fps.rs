//! Truncated power series in `q` with rational coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{divisors, format_rational, mobius, Rational};
use crate::error::{Error, Result};
use crate::qpoly::UPoly;
use crate::qsymbols::QProduct;
use crate::ratfun::RatFun;

pub const DEFAULT_ORDER: usize = 50;

/// `Σ_{i <= order} coeffs[i] q^i`, exact through `q^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Fps {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Fps {
    pub fn zero(order: usize) -> Self {
        Fps {
            order,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut f = Self::zero(order);
        f.coeffs[0] = Rational::one();
        f
    }

    pub fn from_coeffs(order: usize, cs: Vec<Rational>) -> Self {
        let mut f = Self::zero(order);
        for (i, c) in cs.into_iter().enumerate().take(order + 1) {
            f.coeffs[i] = c;
        }
        f
    }

    pub fn from_upoly(p: &UPoly, order: usize) -> Self {
        Self::from_coeffs(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Reads the series at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        Self::from_coeffs(order, self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, o: &Fps) -> Fps {
        let k = self.order.min(o.order);
        Fps {
            order: k,
            coeffs: (0..=k).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, o: &Fps) -> Fps {
        let k = self.order.min(o.order);
        Fps {
            order: k,
            coeffs: (0..=k).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Fps {
        Fps {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, o: &Fps) -> Fps {
        let k = self.order.min(o.order);
        let mut v = vec![Rational::zero(); k + 1];
        for i in 0..=k {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=k - i {
                if !o.coeffs[j].is_zero() {
                    v[i + j] += &self.coeffs[i] * &o.coeffs[j];
                }
            }
        }
        Fps { order: k, coeffs: v }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Fps> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotExpandable("zero constant term".into()));
        }
        let inv0 = c0.recip();
        let mut v = vec![Rational::zero(); self.order + 1];
        v[0] = inv0.clone();
        for i in 1..=self.order {
            let mut s = Rational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &v[i - j];
                }
            }
            v[i] = -s * &inv0;
        }
        Ok(Fps {
            order: self.order,
            coeffs: v,
        })
    }

    pub fn div(&self, o: &Fps) -> Result<Fps> {
        Ok(self.mul(&o.inv()?))
    }

    /// In-place multiplication by `(1 - c q^t)`, `t >= 1`.
    pub fn mul_binomial(&mut self, c: &Rational, t: usize) {
        if t > self.order || c.is_zero() {
            return;
        }
        for i in (t..=self.order).rev() {
            let d = c * &self.coeffs[i - t];
            self.coeffs[i] -= d;
        }
    }

    /// In-place division by `(1 - c q^t)`, `t >= 1`.
    pub fn div_binomial(&mut self, c: &Rational, t: usize) {
        if t > self.order || c.is_zero() {
            return;
        }
        for i in t..=self.order {
            let d = c * &self.coeffs[i - t];
            self.coeffs[i] += d;
        }
    }

    /// Multiplication by `q^s`, `s >= 0`.
    pub fn shift(&self, s: usize) -> Fps {
        let mut f = Fps::zero(self.order);
        for i in s..=self.order {
            f.coeffs[i] = self.coeffs[i - s].clone();
        }
        f
    }

    /// First index where the two series differ, over the common order.
    pub fn first_difference(&self, o: &Fps) -> Option<usize> {
        let k = self.order.min(o.order);
        (0..=k).find(|&i| self.coeffs[i] != o.coeffs[i])
    }
}

impl fmt::Debug for Fps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}] + O(q^{})", cs.join(", "), self.order + 1)
    }
}

/// Power-series expansion of a rational function free of `a`.
pub fn from_ratfun(x: &RatFun, order: usize) -> Result<Fps> {
    let (n, d) = x
        .as_univariate()
        .ok_or_else(|| Error::NotExpandable("depends on a".into()))?;
    if d.coeff(0).is_zero() {
        return Err(Error::NotExpandable("denominator vanishes at q = 0".into()));
    }
    Fps::from_upoly(&n, order).div(&Fps::from_upoly(&d, order))
}

/// Expansion of a factored product free of `a` with `qpow >= 0`.
pub fn from_qproduct(p: &QProduct, order: usize) -> Result<Fps> {
    if p.is_indeterminate() {
        return Err(Error::NotExpandable("0/0 factor".into()));
    }
    if p.is_pole() {
        return Err(Error::ZeroReciprocal);
    }
    if p.is_zero() {
        return Ok(Fps::zero(order));
    }
    if p.has_a() {
        return Err(Error::NotExpandable("depends on a".into()));
    }
    if p.qpow < 0 {
        return Err(Error::NotExpandable(format!("factor q^{}", p.qpow)));
    }
    let mut coeff = p.coeff.clone();
    let mut bin_exp: std::collections::BTreeMap<u64, i64> = Default::default();
    for (&j, &m) in &p.cyclo {
        if j == 1 && m % 2 != 0 {
            coeff = -coeff;
        }
        for e in divisors(j) {
            let mu = mobius(j / e) as i64;
            if mu != 0 {
                *bin_exp.entry(e).or_insert(0) += mu * m;
            }
        }
    }
    let qpow = p.qpow as usize;
    if qpow > order {
        return Ok(Fps::zero(order));
    }
    let mut f = Fps::zero(order);
    f.coeffs[qpow] = coeff;
    let one = Rational::one();
    for (&e, &m) in &bin_exp {
        for _ in 0..m.unsigned_abs() {
            if m > 0 {
                f.mul_binomial(&one, e as usize);
            } else {
                f.div_binomial(&one, e as usize);
            }
        }
    }
    for (k, &m) in &p.bin {
        for _ in 0..m.unsigned_abs() {
            if m > 0 {
                f.mul_binomial(&k.lambda, k.t as usize);
            } else {
                f.div_binomial(&k.lambda, k.t as usize);
            }
        }
    }
    Ok(f)
}

/// `∏_{j >= 0} (1 - sign · q^{u + j v})` through `q^order`.
pub fn inf_product(sign: i32, u: usize, v: usize, order: usize) -> Fps {
    inf_product_general(&Rational::from_integer(sign.into()), u, v, order)
}

/// `(x q^u; q^v)_∞` through `q^order`; a `u = 0` factor contributes `1 - x`.
pub fn inf_product_general(x: &Rational, u: usize, v: usize, order: usize) -> Fps {
    assert!(v >= 1, "infinite product needs a positive step");
    let mut f = Fps::one(order);
    let mut t = u;
    if t == 0 {
        f = f.scale(&(Rational::one() - x));
        t += v;
    }
    while t <= order {
        f.mul_binomial(x, t);
        t += v;
    }
    f
}

/// `1 / (x q^u; q^v)_∞` through `q^order`, for `u >= 1`.
pub fn inv_inf_product(x: &Rational, u: usize, v: usize, order: usize) -> Fps {
    assert!(u >= 1 && v >= 1);
    let mut f = Fps::one(order);
    let mut t = u;
    while t <= order {
        f.div_binomial(x, t);
        t += v;
    }
    f
}

/// `Σ_k term(k)` through `q^order`. `lower_bound(k)` must bound the `q`-order
/// of term `k` from below and be non-decreasing; summation stops at the first
/// `k` whose bound exceeds `order`.
pub fn sum_terms<F, B>(term: F, lower_bound: B, order: usize) -> Result<Fps>
where
    F: Fn(i64) -> Result<QProduct>,
    B: Fn(i64) -> i64,
{
    let mut acc = Fps::zero(order);
    let mut k = 0i64;
    while lower_bound(k) <= order as i64 {
        let t = term(k)?;
        let f = if t.is_zero() {
            Fps::zero(order)
        } else if t.qpow < 0 {
            // rare: the product carries q^{-s} cancelled by its factors
            from_ratfun(&t.to_ratfun()?, order)?
        } else {
            from_qproduct(&t, order)?
        };
        acc = acc.add(&f);
        k += 1;
        if k > 100_000 {
            return Err(Error::NotExpandable("lower bound does not grow".into()));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::qsymbols::Mono;
    use crate::ratfun::{normalize, APoly};
    use proptest::prelude::*;

    fn ints(f: &Fps) -> Vec<i64> {
        f.coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn from_ratfun_examples() {
        let geo = normalize(APoly::one(), APoly::from_upoly(UPoly::from_ints(&[1, -1]))).unwrap();
        assert_eq!(ints(&from_ratfun(&geo, 3).unwrap()), vec![1, 1, 1, 1]);
        let x = normalize(
            APoly::from_upoly(UPoly::from_ints(&[1, 0, -1])),
            APoly::from_upoly(UPoly::from_ints(&[1, -1])),
        )
        .unwrap();
        assert_eq!(ints(&from_ratfun(&x, 2).unwrap()), vec![1, 1, 0]);
        assert!(matches!(
            from_ratfun(&RatFun::q_power(-1), 4),
            Err(Error::NotExpandable(_))
        ));
    }

    #[test]
    fn inf_product_examples() {
        assert_eq!(ints(&inf_product(1, 1, 1, 5)), vec![1, -1, -1, 0, 0, 1]);
        assert_eq!(ints(&inf_product(-1, 4, 4, 3)), vec![1, 0, 0, 0]);
        assert_eq!(ints(&inf_product(1, 2, 6, 2)), vec![1, 0, -1]);
    }

    #[test]
    fn euler_pentagonal() {
        let f = inf_product(1, 1, 1, 40);
        let mut expect = vec![0i64; 41];
        for k in -6i64..=6 {
            let e = k * (3 * k - 1) / 2;
            if (0..=40).contains(&e) {
                expect[e as usize] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(ints(&f), expect);
    }

    #[test]
    fn sum_terms_examples() {
        let gen = |k: i64| Ok(QProduct::one().times(&Mono::q(2 * k * k), 1));
        let f = sum_terms(gen, |k| 2 * k * k, 7).unwrap();
        assert_eq!(ints(&f), vec![1, 0, 1, 0, 0, 0, 0, 0]);
        let z = sum_terms(|_| Ok(QProduct::scalar(rat_int(0))), |k| k, 5).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn qproduct_expansion_matches_ratfun() {
        let mut p = QProduct::one().times(&Mono::q(2), 1);
        p.mul_poch(&Mono::q(1), 2, 3, 1);
        p.mul_poch(&Mono::new(rat(2, 3), 0, 2), 2, 2, -1);
        p.mul_poch(&Mono::new(rat_int(-1), 0, 1), 1, 3, -2);
        let a = from_qproduct(&p, 30).unwrap();
        let b = from_ratfun(&p.to_ratfun().unwrap(), 30).unwrap();
        assert_eq!(a, b);
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (
            prop::collection::vec(-5i64..6, 0..4),
            prop::collection::vec(-5i64..6, 0..4),
            1i64..4,
        )
            .prop_map(|(n, d, c0)| {
                let mut dv = vec![c0];
                dv.extend(d);
                normalize(
                    APoly::from_upoly(UPoly::from_ints(&n)),
                    APoly::from_upoly(UPoly::from_ints(&dv)),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(x in arb_ratfun(), y in arb_ratfun()) {
            let k = 12;
            let lhs = from_ratfun(&x.mul(&y), k).unwrap();
            let rhs = from_ratfun(&x, k).unwrap().mul(&from_ratfun(&y, k).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inf_product_orders_agree(u in 1usize..5, v in 1usize..5, k1 in 0usize..30, k2 in 0usize..30) {
            let a = inf_product(-1, u, v, k1);
            let b = inf_product(-1, u, v, k2);
            let k = k1.min(k2);
            prop_assert_eq!(a.truncate(k), b.truncate(k));
        }
    }
}
