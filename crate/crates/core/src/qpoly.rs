//! Dense univariate polynomials in `q` over the rationals, cyclotomic
//! polynomials and q-integers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, mobius, Integer, Rational};
use crate::error::{Error, Result};

/// A polynomial `Σ coeffs[i] q^i`. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c q^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `A(c q)`; with `c = -1` this realises `A(-q)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            v.push(x * &p);
            p *= c;
        }
        Self::new(v)
    }

    /// `A(q^m)`.
    pub fn compose_power(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * m] = c.clone();
        }
        Self::new(v)
    }

    /// Euclidean division `A = B Q + R` with `deg R < deg B`.
    pub fn divrem(&self, b: &UPoly) -> Result<(UPoly, UPoly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let inv = b.lead().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    r[i + j] -= &c * bj;
                }
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    /// Quotient when `b` divides `self`, else `None`.
    pub fn exact_div(&self, b: &UPoly) -> Result<Option<UPoly>> {
        let (q, r) = self.divrem(b)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn rem(&self, b: &UPoly) -> Result<UPoly> {
        Ok(self.divrem(b)?.1)
    }

    /// Splits into a positive rational content and a primitive integer
    /// polynomial whose leading coefficient is positive.
    pub fn primitive_int(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = zp_content(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<Integer> = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, l), prim)
    }

    /// Monic gcd via the subresultant remainder sequence over the integers.
    pub fn gcd(&self, b: &UPoly) -> Result<UPoly> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        if self.is_zero() {
            return Ok(b.monic());
        }
        if b.is_zero() {
            return Ok(self.monic());
        }
        let (_, x) = self.primitive_int();
        let (_, y) = b.primitive_int();
        let g = zp_gcd(&x, &y);
        Ok(UPoly::from_bigints(&g).monic())
    }

    /// `(g, s, t)` with `s·self + t·b = g` and `g` monic.
    pub fn ext_gcd(&self, b: &UPoly) -> Result<(UPoly, UPoly, UPoly)> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lead().recip();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Multiplicity of `p` as a factor of `self` (nonzero `self`).
    pub fn multiplicity(&self, p: &UPoly) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut x = self.clone();
        let mut m = 0;
        while let Some(q) = x.exact_div(p)? {
            x = q;
            m += 1;
        }
        Ok(m)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let cs = crate::arith::format_rational(&abs);
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{}", cs)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", cs)?,
                (_, true) => write!(f, "q^{}", i)?,
                (_, false) => write!(f, "{}*q^{}", cs, i)?,
            }
        }
        Ok(())
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        UPoly::new(v)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect();
        UPoly::new(v)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        UPoly::new(v)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UPoly {
            type Output = UPoly;
            fn $m(self, o: UPoly) -> UPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `[n] = 1 + q + ... + q^{n-1}`; `[0] = 0`.
pub fn q_integer(n: u64) -> UPoly {
    UPoly::new(vec![Rational::one(); n as usize])
}

fn cyclo_cache() -> &'static RwLock<HashMap<u64, Arc<UPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<UPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, from `∏_{d|n} (q^d - 1)^{μ(n/d)}`.
pub fn cyclotomic(n: u64) -> Arc<UPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclo_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let ints = cyclotomic_int(n);
    let p = Arc::new(UPoly::from_bigints(&ints));
    cyclo_cache().write().unwrap().insert(n, p.clone());
    p
}

/// Integer coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_int(n: u64) -> Vec<Integer> {
    let mut num: Vec<Integer> = vec![Integer::one()];
    let mut dens: Vec<usize> = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = zp_mul_binomial(&num, d as usize, &Integer::one()),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        zp_div_binomial(&mut num, d, &Integer::one());
    }
    // Each factor was (1 - q^d); the sign flips once per factor, and the
    // number of factors with nonzero Möbius value is even for n > 1.
    if n == 1 {
        num.iter_mut().for_each(|c| *c = -c.clone());
    }
    num
}

/// `Φ_n(q) = Σ_{d|n} ...` evaluated at `q = 1`.
pub fn cyclotomic_at_one(n: u64) -> Rational {
    cyclotomic(n).eval(&Rational::one())
}

// Integer polynomial helpers used by the congruence engines. Coefficients are
// stored low degree first; no trimming is implied.

pub fn zp_trim(a: &mut Vec<Integer>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub fn zp_content(a: &[Integer]) -> Integer {
    let mut g = Integer::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        Integer::one()
    } else {
        g
    }
}

pub fn zp_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                v[i + j] += x * y;
            }
        }
    }
    v
}

/// `a · (1 - c q^t)` for `t >= 1`.
pub fn zp_mul_binomial(a: &[Integer], t: usize, c: &Integer) -> Vec<Integer> {
    let mut v = a.to_vec();
    v.resize(a.len() + t, Integer::zero());
    for i in (0..a.len()).rev() {
        if !a[i].is_zero() {
            let d = c * &a[i];
            v[i + t] -= d;
        }
    }
    v
}

/// `a · (v - u q^t)` for `t >= 1`.
pub fn zp_mul_binomial_uv(a: &[Integer], t: usize, u: &Integer, v: &Integer) -> Vec<Integer> {
    let mut out: Vec<Integer> = a.iter().map(|x| x * v).collect();
    out.resize(a.len() + t, Integer::zero());
    for (i, x) in a.iter().enumerate() {
        if !x.is_zero() {
            out[i + t] -= u * x;
        }
    }
    out
}

/// In-place exact division by `(1 - c q^t)` with `c = ±1`; panics if inexact.
pub fn zp_div_binomial(a: &mut Vec<Integer>, t: usize, c: &Integer) {
    // (1 - c q^t) Q = A  =>  Q_i = A_i + c Q_{i-t}
    let n = a.len();
    assert!(n > t, "division by a binomial of larger degree");
    for i in t..n {
        let prev = &a[i - t] * c;
        a[i] += prev;
    }
    for i in n - t..n {
        assert!(a[i].is_zero(), "zp_div_binomial: inexact division");
    }
    a.truncate(n - t);
}

/// Remainder of `a` modulo the monic integer polynomial `m`.
pub fn zp_rem_monic(a: &mut Vec<Integer>, m: &[Integer]) {
    let dm = m.len() - 1;
    if a.len() <= dm {
        return;
    }
    for i in (dm..a.len()).rev() {
        if a[i].is_zero() {
            continue;
        }
        let c = a[i].clone();
        let base = i - dm;
        for (j, mj) in m.iter().enumerate().take(dm) {
            if !mj.is_zero() {
                a[base + j] -= &c * mj;
            }
        }
        a[i] = Integer::zero();
    }
    a.truncate(dm);
}

/// Pseudo-remainder `prem(a, b)` over the integers.
fn zp_prem(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lb = b[db].clone();
    let mut steps = r.len() - db;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        zp_trim(&mut r);
        steps -= 1;
    }
    let f = num_traits::pow(lb, steps);
    r.iter().map(|c| c * &f).collect()
}

/// Primitive gcd of two nonzero integer polynomials (subresultant PRS).
pub fn zp_gcd(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let prim = |x: &[Integer]| {
        let g = zp_content(x);
        x.iter().map(|c| c / &g).collect::<Vec<_>>()
    };
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    zp_trim(&mut a);
    zp_trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let cont = zp_content(&a).gcd(&zp_content(&b));
    let mut a = prim(&a);
    let mut b = prim(&b);
    let mut g = Integer::one();
    let mut h = Integer::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = zp_prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            b = vec![Integer::one()];
            break;
        }
        a = b;
        let denom = &g * num_traits::pow(h.clone(), delta as usize);
        b = r.iter().map(|c| c / &denom).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), delta as usize - 1);
            num / den
        };
    }
    let mut out: Vec<Integer> = prim(&b).into_iter().map(|c| c * &cont).collect();
    if out.last().unwrap().is_negative() {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{euler_phi, prime_power, rat, rat_int};
    use proptest::prelude::*;

    fn up(cs: &[i64]) -> UPoly {
        UPoly::from_ints(cs)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), up(&[-1, 1]));
        assert_eq!(*cyclotomic(2), up(&[1, 1]));
        assert_eq!(*cyclotomic(6), up(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), up(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic(105)
            .coeffs()
            .iter()
            .any(|c| *c == rat_int(-2)));
    }

    #[test]
    fn cyclotomic_degree_and_value_at_one() {
        for n in 1..=100u64 {
            let p = cyclotomic(n);
            assert_eq!(p.degree(), Some(euler_phi(n) as usize));
            assert!(p.coeffs().iter().all(|c| c.is_integer()));
            let expect = match (n, prime_power(n)) {
                (1, _) => rat_int(0),
                (_, Some((p, _))) => rat_int(p as i64),
                _ => rat_int(1),
            };
            assert_eq!(cyclotomic_at_one(n), expect, "n={n}");
        }
    }

    #[test]
    fn bracket_is_product_of_cyclotomics() {
        for n in 1..=100u64 {
            let mut prod = UPoly::one();
            for d in divisors(n).into_iter().filter(|&d| d > 1) {
                prod = &prod * &cyclotomic(d);
            }
            assert_eq!(prod, q_integer(n), "n={n}");
        }
    }

    #[test]
    fn q_integer_examples() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), UPoly::one());
        assert_eq!(q_integer(5), up(&[1, 1, 1, 1, 1]));
        assert_eq!(q_integer(5).eval(&rat_int(1)), rat_int(5));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = up(&[-1, 0, 1]).divrem(&up(&[-1, 1])).unwrap();
        assert_eq!((q, r), (up(&[1, 1]), UPoly::zero()));
        let (q, r) = up(&[0, 0, 0, 1]).divrem(&up(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (up(&[0, 1]), up(&[0, -1])));
        let (q, r) = up(&[5]).divrem(&up(&[1, 1])).unwrap();
        assert_eq!((q, r), (UPoly::zero(), up(&[5])));
        assert_eq!(
            up(&[1]).divrem(&UPoly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(up(&[-1, 0, 1]).gcd(&up(&[-1, 0, 0, 1])).unwrap(), up(&[-1, 1]));
        assert_eq!(cyclotomic(5).gcd(&cyclotomic(7)).unwrap(), UPoly::one());
        assert_eq!(
            up(&[-1, 0, 0, 0, 1]).gcd(&up(&[-1, 0, 0, 0, 0, 0, 1])).unwrap(),
            up(&[-1, 0, 1])
        );
        assert_eq!(UPoly::zero().gcd(&UPoly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cyclotomic(6).eval(&rat_int(2)), rat_int(3));
        assert_eq!(UPoly::zero().eval(&rat(3, 7)), rat_int(0));
    }

    #[test]
    fn phi_of_minus_q_is_phi_2n() {
        let m1 = rat_int(-1);
        for n in (3..=31u64).step_by(2) {
            let lhs = cyclotomic(n).scale_var(&m1);
            let rhs = cyclotomic(2 * n);
            assert!(lhs == *rhs || lhs == -&*rhs, "n={n}");
        }
    }

    #[test]
    fn ext_gcd_inverts_modulo_cyclotomic() {
        let m = cyclotomic(3);
        let (g, s, _) = up(&[1, 1]).ext_gcd(&m).unwrap();
        assert!(g.is_one());
        assert_eq!(s.rem(&m).unwrap(), up(&[0, -1]));
    }

    fn arb_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec((-9i64..10, 1i64..4), 0..7)
            .prop_map(|v| UPoly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&b * &q) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let x = &a * &c;
            let y = &b * &c;
            prop_assume!(!(x.is_zero() && y.is_zero()));
            let g = x.gcd(&y).unwrap();
            prop_assert!(x.rem(&g).unwrap().is_zero());
            prop_assert!(y.rem(&g).unwrap().is_zero());
            if !c.is_zero() {
                prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
            }
        }

        #[test]
        fn binomial_helpers_roundtrip(cs in prop::collection::vec(-20i64..20, 1..8), t in 1usize..5) {
            let a: Vec<Integer> = cs.iter().map(|&c| c.into()).collect();
            for c in [Integer::one(), -Integer::one()] {
                let mut p = zp_mul_binomial(&a, t, &c);
                zp_div_binomial(&mut p, t, &c);
                prop_assert_eq!(&p, &a);
            }
        }
    }
}
