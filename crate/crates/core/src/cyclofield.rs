//! Exact arithmetic in `Q(ζ_d) = Q[q]/Φ_d`, and evaluation of factored
//! summands at a primitive `d`-th root of unity.

use std::fmt;

use num_traits::Zero;

use crate::arith::{binomial, Rational};
use crate::congruence::LocalRing;
use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic, UPoly};
use crate::qsymbols::{qbinomial, QProduct};

/// An element of `Q[q]/Φ_d`, kept as its remainder of degree `< φ(d)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    d: u64,
    rep: UPoly,
}

impl CycloNum {
    /// `A mod Φ_d`.
    pub fn reduce(a: &UPoly, d: u64) -> Self {
        assert!(d >= 1);
        CycloNum {
            d,
            rep: a.rem(&cyclotomic(d)).expect("Φ_d is nonzero"),
        }
    }

    pub fn zero(d: u64) -> Self {
        Self::reduce(&UPoly::zero(), d)
    }

    pub fn one(d: u64) -> Self {
        Self::reduce(&UPoly::one(), d)
    }

    pub fn from_rational(c: &Rational, d: u64) -> Self {
        Self::reduce(&UPoly::constant(c.clone()), d)
    }

    /// `ζ^t` for any integer `t`.
    pub fn zeta_pow(t: i64, d: u64) -> Self {
        let e = t.rem_euclid(d as i64) as usize;
        Self::reduce(&UPoly::monomial(Rational::from_integer(1.into()), e), d)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn rep(&self) -> &UPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The value as a rational when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    fn check(&self, o: &CycloNum) {
        assert_eq!(self.d, o.d, "elements of different cyclotomic fields");
    }

    pub fn add(&self, o: &CycloNum) -> CycloNum {
        self.check(o);
        CycloNum {
            d: self.d,
            rep: &self.rep + &o.rep,
        }
    }

    pub fn sub(&self, o: &CycloNum) -> CycloNum {
        self.check(o);
        CycloNum {
            d: self.d,
            rep: &self.rep - &o.rep,
        }
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            d: self.d,
            rep: -&self.rep,
        }
    }

    pub fn mul(&self, o: &CycloNum) -> CycloNum {
        self.check(o);
        Self::reduce(&(&self.rep * &o.rep), self.d)
    }

    pub fn invert(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::ZeroInverse(self.d));
        }
        let (g, s, _) = self.rep.ext_gcd(&cyclotomic(self.d))?;
        if !g.is_one() {
            return Err(Error::ZeroInverse(self.d));
        }
        Ok(Self::reduce(&s, self.d))
    }

    pub fn div(&self, o: &CycloNum) -> Result<CycloNum> {
        Ok(self.mul(&o.invert()?))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Phi_{}", self.rep, self.d)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Evaluates factored products at `ζ_d`, caching factor inverses.
pub struct ZetaEvaluator {
    ring: LocalRing,
}

impl ZetaEvaluator {
    pub fn new(d: u64) -> Result<Self> {
        Ok(ZetaEvaluator {
            ring: LocalRing::new(d, 1)?,
        })
    }

    pub fn d(&self) -> u64 {
        self.ring.d()
    }

    /// Value of `p` at `q = ζ_d`. A net positive power of `Φ_d` gives zero,
    /// a net negative one is a pole.
    pub fn eval(&mut self, p: &QProduct) -> Result<CycloNum> {
        let d = self.d();
        if p.is_indeterminate() {
            return Err(Error::DenominatorVanishes("0/0 factor".into()));
        }
        if p.is_pole() {
            return Err(Error::ZeroReciprocal);
        }
        if p.has_a() {
            return Err(Error::NotExpandable("product depends on a".into()));
        }
        if p.is_zero() {
            return Ok(CycloNum::zero(d));
        }
        match p.cyclo_mult(d) {
            m if m > 0 => return Ok(CycloNum::zero(d)),
            m if m < 0 => return Err(Error::PoleAtRootOfUnity(d)),
            _ => {}
        }
        let u = self.ring.unit_part(p)?;
        let u = self.ring.scale(&u, &p.coeff);
        Ok(CycloNum::reduce(&u.to_upoly(), d))
    }

    pub fn sum(&mut self, terms: &[QProduct]) -> Result<CycloNum> {
        let mut acc = CycloNum::zero(self.d());
        for t in terms {
            acc = acc.add(&self.eval(t)?);
        }
        Ok(acc)
    }
}

/// `Σ terms` at `ζ_d`.
pub fn sum_at_zeta(terms: &[QProduct], d: u64) -> Result<CycloNum> {
    ZetaEvaluator::new(d)?.sum(terms)
}

/// Checks the q-Lucas rule
/// `[ad+b, ℓd+k]_ζ = C(a, ℓ) [b, k]_ζ` for `0 <= b, k < d`.
pub fn qlucas(d: u64, a: u64, l: u64, b: u64, k: u64) -> bool {
    assert!(b < d && k < d, "q-Lucas needs 0 <= b, k < d");
    let (d, a, l, b, k) = (d as i64, a as i64, l as i64, b as i64, k as i64);
    let lhs = CycloNum::reduce(&qbinomial(a * d + b, l * d + k), d as u64);
    let c = Rational::from_integer(binomial(a, l));
    let rhs = CycloNum::reduce(&qbinomial(b, k).scale(&c), d as u64);
    lhs == rhs
}

/// `(-ζ; ζ)_d = ∏_{j=1}^{d} (1 + ζ^j)`.
pub fn neg_zeta_poch(d: u64) -> CycloNum {
    let mut acc = CycloNum::one(d);
    for j in 1..=d {
        let one_plus = UPoly::from_ints(&[1]) + UPoly::monomial(Rational::from_integer(1.into()), j as usize);
        acc = acc.mul(&CycloNum::reduce(&one_plus, d));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::qsymbols::Mono;
    use proptest::prelude::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(CycloNum::reduce(&UPoly::from_ints(&[0, 0, 0, 1]), 3), CycloNum::one(3));
        assert!(CycloNum::reduce(&UPoly::from_ints(&[1, 1, 1]), 3).is_zero());
        assert_eq!(neg_zeta_poch(5).as_rational(), Some(rat_int(2)));
    }

    #[test]
    fn invert_examples() {
        let x = CycloNum::reduce(&UPoly::from_ints(&[1, 1]), 3);
        assert_eq!(x.invert().unwrap(), CycloNum::reduce(&UPoly::from_ints(&[0, -1]), 3));
        let two = CycloNum::from_rational(&rat_int(2), 5);
        assert_eq!(two.invert().unwrap().as_rational(), Some(rat(1, 2)));
        assert!(matches!(CycloNum::zero(7).invert(), Err(Error::ZeroInverse(7))));
    }

    #[test]
    fn qlucas_examples() {
        assert!(qlucas(3, 2, 0, 1, 2));
        assert!(qlucas(3, 2, 1, 0, 0));
        let v = CycloNum::reduce(&qbinomial(6, 3), 3);
        assert_eq!(v.as_rational(), Some(rat_int(2)));
        assert!(qlucas(1, 4, 2, 0, 0));
    }

    #[test]
    fn evaluator_matches_expansion() {
        // (q;q^2)_2 / (q^2;q^2)_2 at ζ_5, against direct reduction
        let p = QProduct::one()
            .poch(&Mono::q(1), 2, 2)
            .over_poch(&Mono::q(2), 2, 2)
            .scale(&rat(3, 4));
        let (n, dn) = p.to_upoly_pair().unwrap();
        let direct = CycloNum::reduce(&n, 5)
            .div(&CycloNum::reduce(&dn, 5))
            .unwrap();
        assert_eq!(sum_at_zeta(&[p], 5).unwrap(), direct);
        let pole = QProduct::cyclotomic(5, -1);
        assert!(matches!(
            sum_at_zeta(&[pole], 5),
            Err(Error::PoleAtRootOfUnity(5))
        ));
        assert!(sum_at_zeta(&[QProduct::q_integer(10)], 5).unwrap().is_zero());
    }

    fn arb_elem(d: u64) -> impl Strategy<Value = CycloNum> {
        prop::collection::vec(-4i64..5, 0..8)
            .prop_map(move |c| CycloNum::reduce(&UPoly::from_ints(&c), d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_elem(7), y in arb_elem(7), z in arb_elem(7)) {
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            if !x.is_zero() {
                let xi = x.invert().unwrap();
                prop_assert_eq!(x.mul(&xi), CycloNum::one(7));
                prop_assert_eq!(xi.invert().unwrap(), x);
            }
        }
    }
}
