//! Polynomials in a parameter `a` with coefficients in `Q[q]`, and reduced
//! rational functions of `(a, q)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{format_rational, rational_pow, Rational};
use crate::error::{Error, Result};
use crate::qpoly::UPoly;

/// `Σ coeffs[j] a^j`, each coefficient a polynomial in `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct APoly {
    coeffs: Vec<UPoly>,
}

impl APoly {
    pub fn new(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        APoly { coeffs }
    }

    pub fn zero() -> Self {
        APoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_upoly(UPoly::one())
    }

    pub fn from_upoly(p: UPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_upoly(UPoly::constant(c))
    }

    /// `c a^j q^k`.
    pub fn monomial(c: Rational, j: usize, k: usize) -> Self {
        let mut v = vec![UPoly::zero(); j + 1];
        v[j] = UPoly::monomial(c, k);
        Self::new(v)
    }

    pub fn a() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> UPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `a`; `None` for zero.
    pub fn degree_a(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_q(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn as_upoly(&self) -> Option<UPoly> {
        match self.coeffs.len() {
            0 => Some(UPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> UPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_upoly(&self, p: &UPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    fn shift_a(&self, j: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![UPoly::zero(); j];
        v.extend(self.coeffs.iter().cloned());
        APoly { coeffs: v }
    }

    /// Value at `a = x`.
    pub fn eval_a(&self, x: &Rational) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// `Σ_j c_j(q) (c q^e)^j` as `(P, s)` meaning `q^s · P(q)`.
    pub fn eval_a_qpower(&self, c: &Rational, e: i64) -> (UPoly, i64) {
        if self.is_zero() {
            return (UPoly::zero(), 0);
        }
        let top = (self.coeffs.len() - 1) as i64;
        let base = if e < 0 { e * top } else { 0 };
        let mut acc = UPoly::zero();
        for (j, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let shift = (e * j as i64 - base) as usize;
            acc = &acc + &p.scale(&rational_pow(c, j as i64)).shift(shift);
        }
        (acc, base)
    }

    /// Gcd over `Q[q]` of the `a`-coefficients, made monic.
    pub fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            g = g.gcd(c).expect("nonzero coefficient");
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_upoly_exact(&self, p: &UPoly) -> Option<APoly> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c.exact_div(p).ok()??);
        }
        Some(APoly::new(v))
    }

    /// Quotient when `d` divides `self` in `Q[q][a]`.
    pub fn div_exact(&self, d: &APoly) -> Option<APoly> {
        if d.is_zero() {
            return None;
        }
        let dd = d.coeffs.len() - 1;
        let ld = d.lead();
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while !r.is_zero() {
            let dr = r.coeffs.len() - 1;
            if dr < dd {
                return None;
            }
            let c = r.lead().exact_div(&ld).ok()??;
            let term = d.mul_upoly(&c).shift_a(dr - dd);
            r = &r - &term;
            q[dr - dd] = c;
        }
        Some(APoly::new(q))
    }

    /// `lc(b)^{δ+1} self mod b` in `Q[q][a]`.
    fn prem(&self, b: &APoly) -> APoly {
        let db = b.coeffs.len() - 1;
        let lb = b.lead();
        let mut r = self.clone();
        if r.coeffs.len() <= db {
            return r;
        }
        let mut steps = r.coeffs.len() - db;
        while !r.is_zero() && r.coeffs.len() > db {
            let dr = r.coeffs.len() - 1;
            let lr = r.lead();
            r = &r.mul_upoly(&lb) - &b.mul_upoly(&lr).shift_a(dr - db);
            steps -= 1;
        }
        r.mul_upoly(&lb.pow(steps as u32))
    }

    /// Gcd in `Q[q][a]`: content gcd times the primitive subresultant gcd.
    pub fn gcd(&self, other: &APoly) -> Result<APoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb)?;
        let mut a = self.div_upoly_exact(&ca).unwrap();
        let mut b = other.div_upoly_exact(&cb).unwrap();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = UPoly::one();
        let mut h = UPoly::one();
        loop {
            if b.coeffs.len() == 1 {
                return Ok(APoly::from_upoly(cg));
            }
            let delta = (a.coeffs.len() - b.coeffs.len()) as u32;
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            a = b;
            let den = &g * &h.pow(delta);
            b = r.div_upoly_exact(&den).expect("subresultant division is exact");
            g = a.lead();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta)
                    .exact_div(&h.pow(delta - 1))
                    .expect("valid")
                    .expect("subresultant division is exact")
            };
        }
        let pb = b.div_upoly_exact(&b.content()).unwrap();
        Ok(pb.mul_upoly(&cg))
    }
}

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*a", c)?,
                _ => write!(f, "({})*a^{}", c, j)?,
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &APoly {
    type Output = APoly;
    fn add(self, o: &APoly) -> APoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        APoly::new((0..n).map(|j| &self.coeff(j) + &o.coeff(j)).collect())
    }
}

impl std::ops::Sub for &APoly {
    type Output = APoly;
    fn sub(self, o: &APoly) -> APoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        APoly::new((0..n).map(|j| &self.coeff(j) - &o.coeff(j)).collect())
    }
}

impl std::ops::Mul for &APoly {
    type Output = APoly;
    fn mul(self, o: &APoly) -> APoly {
        if self.is_zero() || o.is_zero() {
            return APoly::zero();
        }
        let mut v = vec![UPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    v[i + j] = &v[i + j] + &(x * y);
                }
            }
        }
        APoly::new(v)
    }
}

impl std::ops::Neg for &APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        APoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A reduced fraction `num / den` of polynomials in `(a, q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: APoly,
    den: APoly,
}

/// The four field operations accepted by [`combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// A substitution for the parameter `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ASubst {
    /// `a := c q^e`.
    QPower { coeff: Rational, qexp: i64 },
    Value(Rational),
}

impl ASubst {
    pub fn qpow(e: i64) -> Self {
        ASubst::QPower {
            coeff: Rational::one(),
            qexp: e,
        }
    }
}

impl fmt::Display for ASubst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ASubst::QPower { coeff, qexp } if coeff.is_one() => write!(f, "a := q^{}", qexp),
            ASubst::QPower { coeff, qexp } => {
                write!(f, "a := {}*q^{}", format_rational(coeff), qexp)
            }
            ASubst::Value(v) => write!(f, "a := {}", format_rational(v)),
        }
    }
}

/// Canonical reduced form of `n / d`.
pub fn normalize(n: APoly, d: APoly) -> Result<RatFun> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if n.is_zero() {
        return Ok(RatFun::zero());
    }
    let (n, d) = match (n.as_upoly(), d.as_upoly()) {
        (Some(nu), Some(du)) => {
            let g = nu.gcd(&du)?;
            (
                APoly::from_upoly(nu.exact_div(&g)?.unwrap()),
                APoly::from_upoly(du.exact_div(&g)?.unwrap()),
            )
        }
        _ => {
            let g = n.gcd(&d)?;
            (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
        }
    };
    let lc = d.lead().lead();
    let inv = lc.recip();
    Ok(RatFun {
        num: n.scale(&inv),
        den: d.scale(&inv),
    })
}

/// Field arithmetic followed by normalisation.
pub fn combine(op: Op, x: &RatFun, y: &RatFun) -> Result<RatFun> {
    match op {
        Op::Add => normalize(&(&x.num * &y.den) + &(&y.num * &x.den), &x.den * &y.den),
        Op::Sub => normalize(&(&x.num * &y.den) - &(&y.num * &x.den), &x.den * &y.den),
        Op::Mul => normalize(&x.num * &y.num, &x.den * &y.den),
        Op::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            normalize(&x.num * &y.den, &x.den * &y.num)
        }
    }
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: APoly::zero(),
            den: APoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: APoly::one(),
            den: APoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFun {
            num: APoly::from_rational(c),
            den: APoly::one(),
        }
    }

    pub fn from_upoly(p: UPoly) -> Self {
        RatFun {
            num: APoly::from_upoly(p),
            den: APoly::one(),
        }
    }

    pub fn from_apoly(p: APoly) -> Self {
        RatFun {
            num: p,
            den: APoly::one(),
        }
    }

    pub fn a() -> Self {
        Self::from_apoly(APoly::a())
    }

    /// `q^e` for any integer `e`.
    pub fn q_power(e: i64) -> Self {
        let m = UPoly::monomial(Rational::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_upoly(m)
        } else {
            RatFun {
                num: APoly::one(),
                den: APoly::from_upoly(m),
            }
        }
    }

    pub fn num(&self) -> &APoly {
        &self.num
    }

    pub fn den(&self) -> &APoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_univariate(&self) -> bool {
        self.num.coeffs.len() <= 1 && self.den.coeffs.len() == 1
    }

    /// `(num, den)` when free of `a`.
    pub fn as_univariate(&self) -> Option<(UPoly, UPoly)> {
        Some((self.num.as_upoly()?, self.den.as_upoly()?))
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        combine(Op::Add, self, o).expect("sum of valid fractions")
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        combine(Op::Sub, self, o).expect("difference of valid fractions")
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        combine(Op::Mul, self, o).expect("product of valid fractions")
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun> {
        combine(Op::Div, self, o)
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<RatFun> {
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(self);
        }
        if e < 0 {
            RatFun::one().div(&acc)
        } else {
            Ok(acc)
        }
    }

    /// Exact substitution for `a`, giving a fraction free of `a`.
    pub fn substitute_a(&self, t: &ASubst) -> Result<RatFun> {
        let (n, d) = match t {
            ASubst::Value(v) => {
                let n = self.num.eval_a(v);
                let d = self.den.eval_a(v);
                (n, d)
            }
            ASubst::QPower { coeff, qexp } => {
                let (n, sn) = self.num.eval_a_qpower(coeff, *qexp);
                let (d, sd) = self.den.eval_a_qpower(coeff, *qexp);
                let s = sn - sd;
                if s >= 0 {
                    (n.shift(s as usize), d)
                } else {
                    (n, d.shift((-s) as usize))
                }
            }
        };
        if d.is_zero() {
            return Err(Error::DenominatorVanishes(t.to_string()));
        }
        normalize(APoly::from_upoly(n), APoly::from_upoly(d))
    }

    pub fn eval(&self, a: &Rational, q: &Rational) -> Result<Rational> {
        let n = self.num.eval_a(a).eval(q);
        let d = self.den.eval_a(a).eval(q);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(n / d)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == APoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use proptest::prelude::*;

    fn u(cs: &[i64]) -> UPoly {
        UPoly::from_ints(cs)
    }

    fn ap(rows: &[&[i64]]) -> APoly {
        APoly::new(rows.iter().map(|r| u(r)).collect())
    }

    #[test]
    fn normalize_examples() {
        // (a^2 q - a q^2) / (a q) = a - q
        let x = normalize(ap(&[&[], &[0, 0, -1], &[0, 1]]), ap(&[&[], &[0, 1]])).unwrap();
        assert_eq!(x, RatFun::from_apoly(ap(&[&[0, -1], &[1]])));
        let x = normalize(ap(&[&[-1, 0, 1]]), ap(&[&[-1, 1]])).unwrap();
        assert_eq!(x, RatFun::from_upoly(u(&[1, 1])));
        let f = ap(&[&[1], &[0, 0, 0, 0, 0, -1]]);
        assert_eq!(normalize(f.clone(), f).unwrap(), RatFun::one());
        assert_eq!(
            normalize(APoly::one(), APoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn combine_examples() {
        let x = normalize(ap(&[&[1]]), ap(&[&[1, -1]])).unwrap();
        let y = normalize(ap(&[&[0, 1]]), ap(&[&[1, -1]])).unwrap();
        let s = combine(Op::Add, &x, &y).unwrap();
        assert_eq!(s, normalize(ap(&[&[1, 1]]), ap(&[&[1, -1]])).unwrap());
        let f = RatFun::from_apoly(ap(&[&[1], &[0, -1]]));
        let g = normalize(APoly::one(), ap(&[&[1], &[0, -1]])).unwrap();
        assert_eq!(combine(Op::Mul, &f, &g).unwrap(), RatFun::one());
        assert_eq!(
            combine(Op::Div, &f, &RatFun::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn substitute_examples() {
        let x = normalize(ap(&[&[1], &[0, 0, 0, 0, 0, -1]]), ap(&[&[1, -1]])).unwrap();
        assert!(x.substitute_a(&ASubst::qpow(-5)).unwrap().is_zero());
        let y = normalize(APoly::one(), ap(&[&[1], &[0, -1]])).unwrap();
        assert!(matches!(
            y.substitute_a(&ASubst::qpow(-1)),
            Err(Error::DenominatorVanishes(_))
        ));
        let z = RatFun::from_apoly(ap(&[&[1], &[0, 0, 0, 0, 0, 0, -1]]));
        assert_eq!(
            z.substitute_a(&ASubst::Value(rat_int(2))).unwrap(),
            RatFun::from_upoly(u(&[1, 0, 0, 0, 0, 0, -2]))
        );
    }

    #[test]
    fn bivariate_gcd_finds_shared_factor() {
        // (1 - a q)(a - q^2) and (1 - a q)(1 + q)
        let f = ap(&[&[1], &[0, -1]]);
        let g = &f * &ap(&[&[0, 0, -1], &[1]]);
        let h = &f * &ap(&[&[1, 1]]);
        let d = g.gcd(&h).unwrap();
        assert!(g.div_exact(&d).is_some() && h.div_exact(&d).is_some());
        assert_eq!(d.degree_a(), Some(1));
    }

    fn arb_apoly() -> impl Strategy<Value = APoly> {
        prop::collection::vec(prop::collection::vec(-4i64..5, 0..3), 0..3)
            .prop_map(|rows| APoly::new(rows.iter().map(|r| u(r)).collect()))
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (arb_apoly(), arb_apoly())
            .prop_filter_map("nonzero denominator", |(n, d)| normalize(n, d).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normalize_is_idempotent(x in arb_ratfun()) {
            let y = normalize(x.num().clone(), x.den().clone()).unwrap();
            prop_assert_eq!(y, x);
        }

        #[test]
        fn field_axioms(x in arb_ratfun(), y in arb_ratfun(), z in arb_ratfun()) {
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert!(x.sub(&x).is_zero());
        }

        #[test]
        fn substitution_commutes(x in arb_ratfun(), y in arb_ratfun(), e in -3i64..4) {
            let t = ASubst::qpow(e);
            if let (Ok(sx), Ok(sy)) = (x.substitute_a(&t), y.substitute_a(&t)) {
                prop_assert_eq!(x.add(&y).substitute_a(&t).unwrap(), sx.add(&sy));
                prop_assert_eq!(x.mul(&y).substitute_a(&t).unwrap(), sx.mul(&sy));
            }
            let v = ASubst::Value(rat(5, 7));
            if let (Ok(sx), Ok(sy)) = (x.substitute_a(&v), y.substitute_a(&v)) {
                prop_assert_eq!(x.mul(&y).substitute_a(&v).unwrap(), sx.mul(&sy));
            }
        }
    }
}
