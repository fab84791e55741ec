//! Exact integers and rationals, residues modulo prime powers, p-adic
//! valuations and the Kronecker symbol.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// `"num/den"`, or just `"num"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A residue `value` modulo `prime^exponent`, with `0 <= value < prime^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClass {
    pub value: Integer,
    pub prime: Integer,
    pub exponent: u32,
}

impl ResidueClass {
    pub fn new(value: &Integer, prime: &Integer, exponent: u32) -> Self {
        let m = prime.pow(exponent);
        ResidueClass {
            value: value.mod_floor(&m),
            prime: prime.clone(),
            exponent,
        }
    }

    pub fn modulus(&self) -> Integer {
        self.prime.pow(self.exponent)
    }
}

/// Jacobi–Kronecker symbol `(a/n)` for `n > 0`.
pub fn kronecker(a: &Integer, n: &Integer) -> i32 {
    assert!(n.is_positive(), "kronecker: n must be positive");
    let mut n = n.clone();
    let mut result = 1i32;
    let two = int(2);
    // Split off the 2-part of n using (a/2).
    let mut twos = 0u32;
    while n.is_even() {
        n /= &two;
        twos += 1;
    }
    if twos > 0 {
        if a.is_even() {
            return 0;
        }
        let r = a.mod_floor(&int(8)).to_u32().unwrap();
        if (r == 3 || r == 5) && twos % 2 == 1 {
            result = -result;
        }
    }
    // Jacobi symbol for odd positive n.
    let mut a = a.mod_floor(&n);
    while !a.is_zero() {
        while a.is_even() {
            a /= &two;
            let r = n.mod_floor(&int(8)).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&int(4)) == int(3) && n.mod_floor(&int(4)) == int(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&int(a), &int(n))
}

/// Modular inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Reduces `r` modulo `p^s`.
pub fn rational_mod(r: &Rational, p: &Integer, s: u32) -> Result<ResidueClass> {
    let m = p.pow(s);
    if r.is_zero() {
        return Ok(ResidueClass::new(&Integer::zero(), p, s));
    }
    if r.denom().mod_floor(p).is_zero() {
        return Err(Error::DenominatorNotInvertible(format!("{}^{}", p, s)));
    }
    let inv = mod_inverse(r.denom(), &m)
        .ok_or_else(|| Error::DenominatorNotInvertible(format!("{}^{}", p, s)))?;
    Ok(ResidueClass::new(&(r.numer() * inv), p, s))
}

fn int_valuation(mut z: Integer, p: &Integer) -> i64 {
    let mut v = 0;
    loop {
        let (q, rem) = z.div_rem(p);
        if !rem.is_zero() {
            return v;
        }
        z = q;
        v += 1;
    }
}

/// The `v` with `r = p^v * u`, `u` a p-unit.
pub fn padic_valuation(r: &Rational, p: &Integer) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(int_valuation(r.numer().clone(), p) - int_valuation(r.denom().clone(), p))
}

/// Least non-negative residue of `z` modulo `s > 0`.
pub fn least_residue(z: i64, s: i64) -> i64 {
    assert!(s > 0, "least_residue: modulus must be positive");
    z.rem_euclid(s)
}

/// Least non-negative residue of `num / den` modulo `s`; `None` when `den` is
/// not invertible modulo `s`.
pub fn least_residue_frac(num: i64, den: i64, s: i64) -> Option<i64> {
    let inv = mod_inverse(&int(den), &int(s))?;
    Some((int(num) * inv).mod_floor(&int(s)).to_i64().unwrap())
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

/// `Some((p, s))` when `n = p^s` with `p` prime and `s >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut s = 0;
            while m % p == 0 {
                m /= p;
                s += 1;
            }
            return if m == 1 { Some((p, s)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut r = Integer::one();
    for i in 0..k {
        r = r * int(n - i) / int(i + 1);
    }
    r
}

pub fn rational_pow(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Rising factorial `(x)_k` for rational `x`.
pub fn pochhammer_rational(x: &Rational, k: u64) -> Rational {
    let mut r = Rational::one();
    for j in 0..k {
        r *= x + rat_int(j as i64);
    }
    r
}

/// `Some(sqrt)` when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kronecker_minus_three() {
        assert_eq!(kronecker_i64(-3, 7), 1);
        assert_eq!(kronecker_i64(-3, 5), -1);
        assert_eq!(kronecker_i64(-3, 3), 0);
        // (-3/n) follows n mod 3 for n coprime to 6
        for n in (1..200).filter(|n| n % 2 == 1 && n % 3 != 0) {
            let expect = if n % 3 == 1 { 1 } else { -1 };
            assert_eq!(kronecker_i64(-3, n), expect, "n={n}");
        }
    }

    #[test]
    fn kronecker_at_two_and_small_tables() {
        assert_eq!(kronecker_i64(3, 2), -1);
        assert_eq!(kronecker_i64(7, 2), 1);
        assert_eq!(kronecker_i64(4, 2), 0);
        assert_eq!(kronecker_i64(2, 7), 1);
        assert_eq!(kronecker_i64(2, 5), -1);
        assert_eq!(kronecker_i64(-1, 5), 1);
        assert_eq!(kronecker_i64(-1, 7), -1);
        assert_eq!(kronecker_i64(5, 1), 1);
    }

    #[test]
    fn rational_mod_examples() {
        let r = rational_mod(&rat(1, 9), &int(5), 3).unwrap();
        assert_eq!(r.value, int(14));
        let r = rational_mod(&rat(0, 1), &int(7), 2).unwrap();
        assert_eq!(r.value, int(0));
        assert!(matches!(
            rational_mod(&rat(1, 5), &int(5), 1),
            Err(Error::DenominatorNotInvertible(_))
        ));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&rat(50, 3), &int(5)).unwrap(), 2);
        assert_eq!(padic_valuation(&rat(1, 9), &int(3)).unwrap(), -2);
        assert_eq!(padic_valuation(&rat(7, 1), &int(2)).unwrap(), 0);
        assert_eq!(padic_valuation(&rat(0, 1), &int(2)), Err(Error::ZeroInput));
    }

    #[test]
    fn least_residue_examples() {
        assert_eq!(least_residue(-1, 4), 3);
        assert_eq!(least_residue(7, 7), 0);
        assert_eq!(least_residue(10, 4), 2);
        assert_eq!(least_residue_frac(-1, 2, 7), Some(3));
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(euler_phi(25), 20);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(primes_in(5, 37).len(), 10);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(561));
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
    }

    proptest! {
        #[test]
        fn kronecker_is_multiplicative(a in -200i64..200, m in 1i64..60, n in 1i64..60) {
            prop_assert_eq!(
                kronecker_i64(a, m * n),
                kronecker_i64(a, m) * kronecker_i64(a, n)
            );
        }

        #[test]
        fn rational_mod_lifts_back(num in -10_000i64..10_000, den in 1i64..500, s in 1u32..4) {
            let p = int(7);
            prop_assume!(den % 7 != 0);
            let r = rat(num, den);
            let res = rational_mod(&r, &p, s).unwrap();
            let m = p.pow(s);
            prop_assert!((res.value.clone() * r.denom() - r.numer()).mod_floor(&m).is_zero());
        }

        #[test]
        fn valuation_is_additive(a in 1i64..5000, b in 1i64..5000, c in 1i64..5000, d in 1i64..5000) {
            let p = int(3);
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(
                padic_valuation(&(&x * &y), &p).unwrap(),
                padic_valuation(&x, &p).unwrap() + padic_valuation(&y, &p).unwrap()
            );
        }
    }
}
