//! q-Pochhammer symbols, q-binomials and the factored term type [`QProduct`].
//!
//! A factor `1 - λ a^e q^t` free of `a` with `λ = ±1` is stored through its
//! cyclotomic factorisation; every other factor is kept as a [`BinKey`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{divisors, format_rational, rational_pow, rational_sqrt, Rational};
use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic, UPoly};
use crate::ratfun::{normalize, APoly, RatFun};

/// The factor `1 - lambda · a^aexp · q^t`.
///
/// Normal form: `aexp >= 0`; when `aexp == 0`, `t > 0` and `lambda ∉ {0, 1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinKey {
    pub lambda: Rational,
    pub aexp: i32,
    pub t: i64,
}

impl fmt::Display for BinKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = format_rational(&self.lambda);
        match self.aexp {
            0 => write!(f, "(1 - {}*q^{})", l, self.t),
            1 => write!(f, "(1 - {}*a*q^{})", l, self.t),
            e => write!(f, "(1 - {}*a^{}*q^{})", l, e, self.t),
        }
    }
}

/// A monomial `coeff · a^aexp · q^qexp`, the base of a Pochhammer symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mono {
    pub coeff: Rational,
    pub aexp: i32,
    pub qexp: i64,
}

impl Mono {
    pub fn q(qexp: i64) -> Self {
        Mono {
            coeff: Rational::one(),
            aexp: 0,
            qexp,
        }
    }

    pub fn new(coeff: Rational, aexp: i32, qexp: i64) -> Self {
        Mono { coeff, aexp, qexp }
    }

    pub fn neg(&self) -> Self {
        Mono {
            coeff: -&self.coeff,
            ..self.clone()
        }
    }

    pub fn mul(&self, o: &Mono) -> Self {
        Mono {
            coeff: &self.coeff * &o.coeff,
            aexp: self.aexp + o.aexp,
            qexp: self.qexp + o.qexp,
        }
    }

    pub fn recip(&self) -> Self {
        Mono {
            coeff: self.coeff.recip(),
            aexp: -self.aexp,
            qexp: -self.qexp,
        }
    }

    pub fn times_q(&self, k: i64) -> Self {
        Mono {
            qexp: self.qexp + k,
            ..self.clone()
        }
    }
}

/// `(base; q^qstep)_k` with `base = coeff · a^aexp · q^qoffset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochSpec {
    pub coeff: Rational,
    pub aexp: i32,
    pub qoffset: i64,
    pub qstep: i64,
}

impl PochSpec {
    pub fn new(base: &Mono, qstep: i64) -> Self {
        assert!(qstep >= 1, "Pochhammer step must be positive");
        PochSpec {
            coeff: base.coeff.clone(),
            aexp: base.aexp,
            qoffset: base.qexp,
            qstep,
        }
    }
}

/// A value of a named parameter: symbolic (carried in the `a` slot) or the
/// specialisation `coeff · q^qexp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamVal {
    Symbolic,
    Val { coeff: Rational, qexp: i64 },
}

impl ParamVal {
    pub fn rational(c: Rational) -> Self {
        ParamVal::Val { coeff: c, qexp: 0 }
    }

    pub fn qpow(coeff: Rational, qexp: i64) -> Self {
        ParamVal::Val { coeff, qexp }
    }
}

impl fmt::Display for ParamVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamVal::Symbolic => write!(f, "symbolic"),
            ParamVal::Val { coeff, qexp: 0 } => write!(f, "{}", format_rational(coeff)),
            ParamVal::Val { coeff, qexp } if coeff.is_one() => write!(f, "q^{}", qexp),
            ParamVal::Val { coeff, qexp } => write!(f, "{}*q^{}", format_rational(coeff), qexp),
        }
    }
}

/// Named parameter assignment; at most one entry may be symbolic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    vals: BTreeMap<String, ParamVal>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, v: ParamVal) -> Self {
        self.set(name, v);
        self
    }

    pub fn with_rational(self, name: &str, c: Rational) -> Self {
        self.with(name, ParamVal::rational(c))
    }

    pub fn set(&mut self, name: &str, v: ParamVal) {
        if v == ParamVal::Symbolic {
            for (k, x) in self.vals.iter() {
                assert!(
                    k == name || *x != ParamVal::Symbolic,
                    "only one parameter may be symbolic"
                );
            }
        }
        self.vals.insert(name.to_string(), v);
    }

    pub fn get(&self, name: &str) -> Option<&ParamVal> {
        self.vals.get(name)
    }

    pub fn symbolic(&self) -> Option<&str> {
        self.vals
            .iter()
            .find(|(_, v)| **v == ParamVal::Symbolic)
            .map(|(k, _)| k.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &ParamVal)> {
        self.vals.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    /// `coeff · q^qexp · ∏ name^power`, missing parameters read as 1.
    pub fn mono(&self, coeff: Rational, factors: &[(&str, i32)], qexp: i64) -> Mono {
        let mut m = Mono::new(coeff, 0, qexp);
        for (name, pw) in factors {
            match self.vals.get(*name) {
                Some(ParamVal::Symbolic) => m.aexp += pw,
                Some(ParamVal::Val { coeff, qexp }) => {
                    m.coeff *= rational_pow(coeff, *pw as i64);
                    m.qexp += qexp * *pw as i64;
                }
                None => {}
            }
        }
        m
    }

    /// Shorthand for `mono(1, factors, qexp)`.
    pub fn m(&self, factors: &[(&str, i32)], qexp: i64) -> Mono {
        self.mono(Rational::one(), factors, qexp)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vals.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `coeff · a^apow · q^qpow · ∏ Φ_d^{m_d} · ∏ key^{m}`, possibly with
/// vanishing factors.
///
/// `zeros` counts factors equal to zero in the numerator and `poles` those in
/// the denominator; a product with poles only is a reciprocal of zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QProduct {
    pub coeff: Rational,
    pub qpow: i64,
    pub apow: i64,
    pub zeros: u32,
    pub poles: u32,
    pub cyclo: BTreeMap<u64, i64>,
    pub bin: BTreeMap<BinKey, i64>,
}

fn bump<K: Ord + Clone>(map: &mut BTreeMap<K, i64>, k: &K, m: i64) {
    if m == 0 {
        return;
    }
    let e = map.entry(k.clone()).or_insert(0);
    *e += m;
    if *e == 0 {
        map.remove(k);
    }
}

impl Default for QProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl QProduct {
    pub fn one() -> Self {
        QProduct {
            coeff: Rational::one(),
            qpow: 0,
            apow: 0,
            zeros: 0,
            poles: 0,
            cyclo: BTreeMap::new(),
            bin: BTreeMap::new(),
        }
    }

    pub fn scalar(c: Rational) -> Self {
        let mut p = Self::one();
        if c.is_zero() {
            p.zeros = 1;
        } else {
            p.coeff = c;
        }
        p
    }

    pub fn monomial(m: &Mono) -> Self {
        let mut p = Self::scalar(m.coeff.clone());
        p.apow = m.aexp as i64;
        p.qpow = m.qexp;
        p
    }

    /// `[n] = (1 - q^n)/(1 - q)`.
    pub fn q_integer(n: i64) -> Self {
        let mut p = Self::one();
        if n == 0 {
            p.zeros = 1;
            return p;
        }
        p.push_factor(&Rational::one(), 0, n, 1);
        p.push_factor(&Rational::one(), 0, 1, -1);
        p
    }

    pub fn cyclotomic(d: u64, m: i64) -> Self {
        let mut p = Self::one();
        bump(&mut p.cyclo, &d, m);
        p
    }

    /// Gaussian binomial as a factored product; zero outside `0 <= m <= n`.
    pub fn qbinomial(n: i64, m: i64) -> Self {
        if m < 0 || m > n {
            return Self::scalar(Rational::zero());
        }
        let q = Mono::q(1);
        let mut p = Self::one();
        p.mul_poch(&q, 1, n, 1);
        p.mul_poch(&q, 1, m, -1);
        p.mul_poch(&q, 1, n - m, -1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.zeros > 0 && self.poles == 0
    }

    pub fn is_pole(&self) -> bool {
        self.poles > 0 && self.zeros == 0
    }

    pub fn is_indeterminate(&self) -> bool {
        self.poles > 0 && self.zeros > 0
    }

    /// Whether the value depends on `a`.
    pub fn has_a(&self) -> bool {
        self.apow != 0 || self.bin.keys().any(|k| k.aexp > 0)
    }

    /// Multiplicity of `Φ_d` among the cyclotomic factors.
    pub fn cyclo_mult(&self, d: u64) -> i64 {
        self.cyclo.get(&d).copied().unwrap_or(0)
    }

    /// Multiplies by `(1 - λ a^e q^t)^m`.
    pub fn push_factor(&mut self, lambda: &Rational, e: i32, t: i64, m: i64) {
        if m == 0 || lambda.is_zero() {
            return;
        }
        if e == 0 && t == 0 {
            let c = Rational::one() - lambda;
            if c.is_zero() {
                if m > 0 {
                    self.zeros += m as u32;
                } else {
                    self.poles += (-m) as u32;
                }
            } else {
                self.coeff *= rational_pow(&c, m);
            }
            return;
        }
        if e < 0 || (e == 0 && t < 0) {
            // 1 - x = -x (1 - 1/x)
            self.coeff *= rational_pow(&-lambda, m);
            self.apow += e as i64 * m;
            self.qpow += t * m;
            self.push_factor(&lambda.recip(), -e, -t, m);
            return;
        }
        if e == 0 {
            if lambda.is_one() {
                if m % 2 != 0 {
                    self.coeff = -&self.coeff;
                }
                for d in divisors(t as u64) {
                    bump(&mut self.cyclo, &d, m);
                }
                return;
            }
            if *lambda == -Rational::one() {
                for d in divisors(2 * t as u64) {
                    if t as u64 % d != 0 {
                        bump(&mut self.cyclo, &d, m);
                    }
                }
                return;
            }
        }
        if e == 2 && t % 2 == 0 {
            if let Some(mu) = rational_sqrt(lambda) {
                self.push_factor(&mu, 1, t / 2, m);
                self.push_factor(&-mu, 1, t / 2, m);
                return;
            }
        }
        let key = BinKey {
            lambda: lambda.clone(),
            aexp: e,
            t,
        };
        bump(&mut self.bin, &key, m);
    }

    /// Multiplies by `(base; q^step)_k^m`, with the reciprocal-product rule
    /// for negative `k`.
    pub fn mul_poch(&mut self, base: &Mono, step: i64, k: i64, m: i64) {
        assert!(step >= 1, "Pochhammer step must be positive");
        if k >= 0 {
            for j in 0..k {
                self.push_factor(&base.coeff, base.aexp, base.qexp + j * step, m);
            }
        } else {
            for j in 1..=-k {
                self.push_factor(&base.coeff, base.aexp, base.qexp - j * step, -m);
            }
        }
    }

    /// Builder form of [`Self::mul_poch`].
    pub fn poch(mut self, base: &Mono, step: i64, k: i64) -> Self {
        self.mul_poch(base, step, k, 1);
        self
    }

    pub fn poch_pow(mut self, base: &Mono, step: i64, k: i64, m: i64) -> Self {
        self.mul_poch(base, step, k, m);
        self
    }

    pub fn over_poch(mut self, base: &Mono, step: i64, k: i64) -> Self {
        self.mul_poch(base, step, k, -1);
        self
    }

    pub fn over_poch_pow(mut self, base: &Mono, step: i64, k: i64, m: i64) -> Self {
        self.mul_poch(base, step, k, -m);
        self
    }

    /// Multiplies by `[n]^m`.
    pub fn bracket(mut self, n: i64, m: i64) -> Self {
        self = self.mul(&Self::q_integer(n).pow(m));
        self
    }

    /// Multiplies by `(mono)^m`.
    pub fn times(mut self, x: &Mono, m: i64) -> Self {
        self.coeff *= rational_pow(&x.coeff, m);
        self.apow += x.aexp as i64 * m;
        self.qpow += x.qexp * m;
        self
    }

    pub fn scale(mut self, c: &Rational) -> Self {
        if c.is_zero() {
            self.zeros += 1;
        } else {
            self.coeff *= c;
        }
        self
    }

    pub fn mul(&self, o: &QProduct) -> QProduct {
        let mut p = self.clone();
        p.coeff *= &o.coeff;
        p.qpow += o.qpow;
        p.apow += o.apow;
        p.zeros += o.zeros;
        p.poles += o.poles;
        for (d, m) in &o.cyclo {
            bump(&mut p.cyclo, d, *m);
        }
        for (k, m) in &o.bin {
            bump(&mut p.bin, k, *m);
        }
        p
    }

    pub fn inv(&self) -> QProduct {
        QProduct {
            coeff: self.coeff.recip(),
            qpow: -self.qpow,
            apow: -self.apow,
            zeros: self.poles,
            poles: self.zeros,
            cyclo: self.cyclo.iter().map(|(d, m)| (*d, -m)).collect(),
            bin: self.bin.iter().map(|(k, m)| (k.clone(), -m)).collect(),
        }
    }

    pub fn div(&self, o: &QProduct) -> QProduct {
        self.mul(&o.inv())
    }

    pub fn pow(&self, m: i64) -> QProduct {
        if m < 0 {
            return self.inv().pow(-m);
        }
        QProduct {
            coeff: rational_pow(&self.coeff, m),
            qpow: self.qpow * m,
            apow: self.apow * m,
            zeros: self.zeros * m as u32,
            poles: self.poles * m as u32,
            cyclo: if m == 0 {
                BTreeMap::new()
            } else {
                self.cyclo.iter().map(|(d, e)| (*d, e * m)).collect()
            },
            bin: if m == 0 {
                BTreeMap::new()
            } else {
                self.bin.iter().map(|(k, e)| (k.clone(), e * m)).collect()
            },
        }
    }

    /// `a := alpha` for a nonzero rational.
    pub fn specialize_a(&self, alpha: &Rational) -> QProduct {
        assert!(!alpha.is_zero(), "cannot specialise a to zero");
        let mut p = QProduct {
            coeff: &self.coeff * rational_pow(alpha, self.apow),
            qpow: self.qpow,
            apow: 0,
            zeros: self.zeros,
            poles: self.poles,
            cyclo: self.cyclo.clone(),
            bin: BTreeMap::new(),
        };
        for (k, m) in &self.bin {
            let l = &k.lambda * rational_pow(alpha, k.aexp as i64);
            p.push_factor(&l, 0, k.t, *m);
        }
        p
    }

    /// `a := nu · q^f`.
    pub fn substitute_a(&self, nu: &Rational, f: i64) -> QProduct {
        let mut p = QProduct {
            coeff: &self.coeff * rational_pow(nu, self.apow),
            qpow: self.qpow + f * self.apow,
            apow: 0,
            zeros: self.zeros,
            poles: self.poles,
            cyclo: self.cyclo.clone(),
            bin: BTreeMap::new(),
        };
        for (k, m) in &self.bin {
            let l = &k.lambda * rational_pow(nu, k.aexp as i64);
            p.push_factor(&l, 0, k.t + k.aexp as i64 * f, *m);
        }
        p
    }

    /// `(numerator, denominator)` with all multiplicities non-negative; the
    /// coefficient stays in the numerator.
    pub fn split(&self) -> (QProduct, QProduct) {
        let mut n = QProduct::one();
        let mut d = QProduct::one();
        n.coeff = self.coeff.clone();
        n.zeros = self.zeros;
        d.zeros = self.poles;
        if self.qpow >= 0 {
            n.qpow = self.qpow;
        } else {
            d.qpow = -self.qpow;
        }
        if self.apow >= 0 {
            n.apow = self.apow;
        } else {
            d.apow = -self.apow;
        }
        for (k, m) in &self.cyclo {
            if *m > 0 {
                n.cyclo.insert(*k, *m);
            } else {
                d.cyclo.insert(*k, -m);
            }
        }
        for (k, m) in &self.bin {
            if *m > 0 {
                n.bin.insert(k.clone(), *m);
            } else {
                d.bin.insert(k.clone(), -m);
            }
        }
        (n, d)
    }

    /// Expands a product with non-negative multiplicities; returns the
    /// polynomial and an extra power of `q` (negative for keys with `t < 0`).
    fn expand_nonneg(&self) -> (APoly, i64) {
        let mut acc = APoly::monomial(self.coeff.clone(), self.apow as usize, self.qpow as usize);
        let mut extra = 0i64;
        for (d, m) in &self.cyclo {
            let c = APoly::from_upoly((*cyclotomic(*d)).clone());
            for _ in 0..*m {
                acc = &acc * &c;
            }
        }
        for (k, m) in &self.bin {
            // 1 - λ a^e q^t, or q^t (q^{-t} - λ a^e) when t < 0
            let (shift, f) = if k.t >= 0 {
                let f = &APoly::one() - &APoly::monomial(k.lambda.clone(), k.aexp as usize, k.t as usize);
                (0, f)
            } else {
                let f = &APoly::monomial(Rational::one(), 0, (-k.t) as usize)
                    - &APoly::monomial(k.lambda.clone(), k.aexp as usize, 0);
                (k.t, f)
            };
            for _ in 0..*m {
                acc = &acc * &f;
            }
            extra += shift * m;
        }
        (acc, extra)
    }

    /// Expanded, normalised rational function.
    pub fn to_ratfun(&self) -> Result<RatFun> {
        if self.is_indeterminate() {
            return Err(Error::DenominatorVanishes("0/0 factor".into()));
        }
        if self.is_pole() {
            return Err(Error::ZeroReciprocal);
        }
        if self.is_zero() {
            return Ok(RatFun::zero());
        }
        let (n, d) = self.split();
        let (mut np, ne) = n.expand_nonneg();
        let (mut dp, de) = d.expand_nonneg();
        let s = ne - de;
        let q = |k: i64| APoly::monomial(Rational::one(), 0, k as usize);
        if s >= 0 {
            np = &np * &q(s);
        } else {
            dp = &dp * &q(-s);
        }
        normalize(np, dp)
    }

    /// The value as a rational function of `q` alone, when free of `a`.
    pub fn to_upoly_pair(&self) -> Result<(UPoly, UPoly)> {
        let r = self.to_ratfun()?;
        r.as_univariate()
            .ok_or_else(|| Error::Usage("product depends on a".into()))
    }
}

impl fmt::Display for QProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", format_rational(&self.coeff))?;
        if self.apow != 0 {
            write!(f, "*a^{}", self.apow)?;
        }
        if self.qpow != 0 {
            write!(f, "*q^{}", self.qpow)?;
        }
        for (d, m) in &self.cyclo {
            write!(f, "*Phi_{}^{}", d, m)?;
        }
        for (k, m) in &self.bin {
            write!(f, "*{}^{}", k, m)?;
        }
        if self.poles > 0 {
            write!(f, "*0^-{}", self.poles)?;
        }
        Ok(())
    }
}

/// `(spec; q^step)_k` as a factored product.
pub fn poch(spec: &PochSpec, k: i64) -> QProduct {
    let base = Mono::new(spec.coeff.clone(), spec.aexp, spec.qoffset);
    QProduct::one().poch(&base, spec.qstep, k)
}

/// Gaussian binomial coefficient as a polynomial; zero outside `0 <= m <= n`.
pub fn qbinomial(n: i64, m: i64) -> UPoly {
    if m < 0 || m > n {
        return UPoly::zero();
    }
    let (num, den) = QProduct::qbinomial(n, m)
        .to_upoly_pair()
        .expect("q-binomials are finite");
    debug_assert!(den.is_one());
    num
}

/// Exponent of `Φ_d` in the Gaussian binomial `[n, m]`.
pub fn qbinomial_cyclo_exp(n: u64, m: u64, d: u64) -> i64 {
    (n / d) as i64 - (m / d) as i64 - ((n - m) / d) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat, rat_int};
    use crate::qpoly::q_integer;
    use proptest::prelude::*;

    fn direct_poch(base: &Mono, step: i64, k: i64, alpha: &Rational) -> RatFun {
        // multiply the factors (1 - c α^e q^t) one by one
        let mut acc = RatFun::one();
        for j in 0..k {
            let t = base.qexp + j * step;
            let c = &base.coeff * rational_pow(alpha, base.aexp as i64);
            let f = RatFun::one().sub(&RatFun::q_power(t).scale(&c));
            acc = acc.mul(&f);
        }
        acc
    }

    #[test]
    fn poch_examples() {
        let p = poch(&PochSpec::new(&Mono::q(1), 2), 2);
        assert_eq!(p.cyclo, BTreeMap::from([(1, 2), (3, 1)]));
        assert_eq!(p.coeff, rat_int(1));
        assert_eq!(p.qpow, 0);
        assert_eq!(
            p.to_ratfun().unwrap(),
            RatFun::from_upoly(UPoly::from_ints(&[1, -1, 0, -1, 1]))
        );
        let p = poch(&PochSpec::new(&Mono::new(rat_int(1), 1, 1), 2), 1);
        assert_eq!(
            p.bin,
            BTreeMap::from([(BinKey { lambda: rat_int(1), aexp: 1, t: 1 }, 1)])
        );
        // 1/(q^4;q^4)_{-1} vanishes
        let p = poch(&PochSpec::new(&Mono::q(4), 4), -1);
        assert!(p.is_pole());
        assert!(p.inv().is_zero());
        assert_eq!(p.inv().to_ratfun().unwrap(), RatFun::zero());
        assert_eq!(QProduct::one().to_ratfun().unwrap(), RatFun::one());
    }

    #[test]
    fn minus_phi_one_is_one_minus_q() {
        let p = QProduct::cyclotomic(1, 1).scale(&rat_int(-1));
        assert_eq!(
            p.to_ratfun().unwrap(),
            RatFun::from_upoly(UPoly::from_ints(&[1, -1]))
        );
    }

    #[test]
    fn negative_index_follows_reciprocal_product() {
        // (a;q)_{-1} = 1/(1 - a/q) = -q a^{-1} / (1 - q/a)
        let a = rat(3, 7);
        let p = poch(&PochSpec::new(&Mono::new(rat_int(1), 1, 0), 1), -1).specialize_a(&a);
        let direct = RatFun::one()
            .div(&RatFun::one().sub(&RatFun::q_power(-1).scale(&a)))
            .unwrap();
        assert_eq!(p.to_ratfun().unwrap(), direct);
        let closed = RatFun::q_power(1)
            .scale(&-a.recip())
            .div(&RatFun::one().sub(&RatFun::q_power(1).scale(&a.recip())))
            .unwrap();
        assert_eq!(direct, closed);
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1), UPoly::from_ints(&[1, 1]));
        assert_eq!(qbinomial(4, 2), UPoly::from_ints(&[1, 1, 2, 1, 1]));
        assert!(qbinomial(3, 5).is_zero());
        for n in 0..12 {
            for m in 0..=n {
                let b = qbinomial(n, m);
                assert_eq!(b, qbinomial(n, n - m));
                assert_eq!(b.eval(&rat_int(1)), Rational::from_integer(binomial(n, m)));
            }
        }
    }

    #[test]
    fn qbinomial_cyclotomic_exponents() {
        for n in 0..14u64 {
            for m in 0..=n {
                let b = qbinomial(n as i64, m as i64);
                let mut prod = UPoly::one();
                for d in 2..=n.max(2) {
                    let e = qbinomial_cyclo_exp(n, m, d);
                    prod = &prod * &cyclotomic(d).pow(e as u32);
                }
                assert_eq!(prod, b, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn one_plus_minus_q_power_factorisations() {
        for j in 1..=200i64 {
            for (lam, expect) in [(rat_int(1), UPoly::from_ints(&[1]).sub_q(j)), (rat_int(-1), UPoly::from_ints(&[1]).add_q(j))] {
                let mut p = QProduct::one();
                p.push_factor(&lam, 0, j, 1);
                let mut prod = UPoly::constant(p.coeff.clone());
                for (d, m) in &p.cyclo {
                    prod = &prod * &cyclotomic(*d).pow(*m as u32);
                }
                assert_eq!(prod, expect, "j={j}");
            }
        }
    }

    trait QShift {
        fn sub_q(self, j: i64) -> UPoly;
        fn add_q(self, j: i64) -> UPoly;
    }

    impl QShift for UPoly {
        fn sub_q(self, j: i64) -> UPoly {
            &self - &UPoly::monomial(rat_int(1), j as usize)
        }
        fn add_q(self, j: i64) -> UPoly {
            &self + &UPoly::monomial(rat_int(1), j as usize)
        }
    }

    #[test]
    fn q_integer_product() {
        for n in 1..30 {
            assert_eq!(
                QProduct::q_integer(n).to_ratfun().unwrap(),
                RatFun::from_upoly(q_integer(n as u64))
            );
        }
    }

    #[test]
    fn squares_split_into_linear_keys() {
        let mut p = QProduct::one();
        p.push_factor(&rat_int(1), 2, 4, 1);
        let mut r = QProduct::one();
        r.push_factor(&rat_int(1), 1, 2, 1);
        r.push_factor(&rat_int(-1), 1, 2, 1);
        assert_eq!(p, r);
    }

    fn catalog_bases() -> Vec<(Mono, i64)> {
        let one = rat_int(1);
        let m1 = rat_int(-1);
        vec![
            (Mono::q(1), 2),
            (Mono::new(m1.clone(), 0, 1), 2),
            (Mono::new(one.clone(), 1, 1), 2),
            (Mono::new(one.clone(), -1, 1), 2),
            (Mono::q(2), 4),
            (Mono::new(one.clone(), 1, 6), 6),
            (Mono::new(m1.clone(), 0, 4), 4),
            (Mono::new(rat(2, 3), 0, 3), 2),
            (Mono::new(one.clone(), -1, 6), 6),
            (Mono::new(m1, 1, 1), 1),
            (Mono::q(-3), 2),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn poch_matches_direct_product(idx in 0usize..11, k in 0i64..31, an in 1i64..6, ad in 1i64..6) {
            let (base, step) = &catalog_bases()[idx];
            let alpha = rat(an, ad) + rat(1, 11);
            let p = QProduct::one().poch(base, *step, k).specialize_a(&alpha);
            if p.is_zero() {
                prop_assert!(direct_poch(base, *step, k, &alpha).is_zero());
            } else {
                prop_assert_eq!(p.to_ratfun().unwrap(), direct_poch(base, *step, k, &alpha));
            }
        }
    }
}
