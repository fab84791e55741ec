//! Congruences of rational functions modulo products of cyclotomic powers and
//! factors linear in a parameter.
//!
//! `A ≡ B (mod P)` means that `P` divides the numerator of `A - B` and is
//! coprime to its denominator. A modulus is split into pairwise coprime parts
//! and each part is checked on its own:
//!
//! * a part `Φ_d^e` asks for `v_{Φ_d}(A - B) >= e`;
//! * a part `1 - ν^{-1} q^{-f} x` in a parameter `x` asks for `A - B` to vanish
//!   identically at `x = ν q^f`.
//!
//! Two routes are provided. [`check_congruent`] works on normalised
//! [`RatFun`] values. [`check_factored`] works on lists of [`QProduct`]
//! summands through the local ring `Q[q]/Φ_d^E` and exact expansion, and is the
//! route used by the catalog.

pub mod exact;
pub mod local;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{rat_int, Rational};
use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic, UPoly};
use crate::qsymbols::{qbinomial_cyclo_exp, ParamVal, Params, QProduct};
use crate::ratfun::{ASubst, RatFun};

pub use local::{LElem, LocalOutcome, LocalRing};

/// A root of a linear factor in one parameter: the factor vanishes at
/// `param = coeff · q^qexp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APart {
    pub label: String,
    pub param: String,
    pub coeff: Rational,
    pub qexp: i64,
    /// A second parameter made symbolic while this part is checked.
    pub free: Option<String>,
}

/// `∏ Φ_d^{e_d}` times factors that are linear in parameters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Modulus {
    pub q_parts: Vec<(u64, u32)>,
    pub a_parts: Vec<APart>,
}

impl Modulus {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_cyclo(map: &BTreeMap<u64, u32>) -> Self {
        Modulus {
            q_parts: map.iter().filter(|(_, e)| **e > 0).map(|(d, e)| (*d, *e)).collect(),
            a_parts: Vec::new(),
        }
    }

    pub fn cyclo_map(&self) -> BTreeMap<u64, u32> {
        let mut m = BTreeMap::new();
        for (d, e) in &self.q_parts {
            *m.entry(*d).or_insert(0) += e;
        }
        m
    }

    /// `Φ_d^e`.
    pub fn phi(d: u64, e: u32) -> Self {
        Self::from_cyclo(&BTreeMap::from([(d, e)]))
    }

    /// `[n] = ∏_{d|n, d>1} Φ_d`.
    pub fn bracket(n: u64) -> Self {
        let m = crate::arith::divisors(n)
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| (d, 1))
            .collect();
        Self::from_cyclo(&m)
    }

    /// `[n] Φ_n^extra`; for `n = 1` this is `Φ_1^extra`.
    pub fn bracket_phi(n: u64, extra: u32) -> Self {
        Self::bracket(n).times(&Self::phi(n, extra))
    }

    /// The Gaussian binomial `[N, M]` as a product of cyclotomics.
    pub fn qbinomial(big_n: u64, m: u64) -> Self {
        let mut map = BTreeMap::new();
        for d in 2..=big_n.max(2) {
            let e = qbinomial_cyclo_exp(big_n, m, d);
            if e > 0 {
                map.insert(d, e as u32);
            }
        }
        Self::from_cyclo(&map)
    }

    /// `1 + q^n = ∏_{d | 2n, d ∤ n} Φ_d`.
    pub fn one_plus_qn(n: u64) -> Self {
        let map = crate::arith::divisors(2 * n)
            .into_iter()
            .filter(|d| n % d != 0)
            .map(|d| (d, 1))
            .collect();
        Self::from_cyclo(&map)
    }

    /// Product of moduli; exponents of a repeated `Φ_d` add up.
    pub fn times(&self, o: &Modulus) -> Self {
        let mut map = self.cyclo_map();
        for (d, e) in &o.q_parts {
            *map.entry(*d).or_insert(0) += e;
        }
        let mut m = Self::from_cyclo(&map);
        m.a_parts = self.a_parts.clone();
        m.a_parts.extend(o.a_parts.iter().cloned());
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut m = Self::one();
        for _ in 0..k {
            m = m.times(self);
        }
        m
    }

    /// Adds the factor `1 - param · q^n` (root `param = q^{-n}`).
    pub fn with_one_minus(mut self, param: &str, n: i64) -> Self {
        self.a_parts.push(APart {
            label: format!("1-{}*q^{}", param, n),
            param: param.into(),
            coeff: Rational::one(),
            qexp: -n,
            free: None,
        });
        self
    }

    /// Adds the factor `param - q^n` (root `param = q^n`).
    pub fn with_minus_qn(mut self, param: &str, n: i64) -> Self {
        self.a_parts.push(APart {
            label: format!("{}-q^{}", param, n),
            param: param.into(),
            coeff: Rational::one(),
            qexp: n,
            free: None,
        });
        self
    }

    /// Keeps `param` symbolic while the parts added so far are checked.
    pub fn freeing(mut self, param: &str) -> Self {
        for a in self.a_parts.iter_mut().filter(|a| a.free.is_none()) {
            a.free = Some(param.into());
        }
        self
    }

    /// Adds `1 - param^2 q^{2n}` as its two roots `param = ±q^{-n}`.
    pub fn with_one_minus_square(mut self, param: &str, n: i64) -> Self {
        for (s, c) in [("+", rat_int(1)), ("-", rat_int(-1))] {
            self.a_parts.push(APart {
                label: format!("1-{}^2*q^{} @ {}={}q^{}", param, 2 * n, param, s, -n),
                param: param.into(),
                coeff: c,
                qexp: -n,
                free: None,
            });
        }
        self
    }

    /// Parts must be pairwise coprime: no repeated cyclotomic index, no
    /// repeated root.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for (d, e) in &self.q_parts {
            if *e == 0 || !seen.insert(*d) {
                return Err(Error::ModulusPartsNotCoprime(format!("Phi_{}", d)));
            }
        }
        for (i, x) in self.a_parts.iter().enumerate() {
            for y in &self.a_parts[..i] {
                if x.param == y.param && x.coeff == y.coeff && x.qexp == y.qexp {
                    return Err(Error::ModulusPartsNotCoprime(x.label.clone()));
                }
            }
        }
        Ok(())
    }

    /// The `q`-only part as a polynomial.
    pub fn q_poly(&self) -> UPoly {
        let mut p = UPoly::one();
        for (d, e) in &self.q_parts {
            p = &p * &cyclotomic(*d).pow(*e);
        }
        p
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.q_parts.iter().map(|(d, e)| phi_label(*d, *e)).collect();
        parts.extend(self.a_parts.iter().map(|a| format!("({})", a.label)));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub fn phi_label(d: u64, e: u32) -> String {
    format!("Phi_{}^{}", d, e)
}

/// Result of checking one modulus part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartReport {
    pub modulus_part: String,
    pub divisible: bool,
    pub coprime: bool,
    /// `v_{Φ_d}` of the difference, capped at the required exponent.
    #[serde(skip)]
    pub valuation: Option<i64>,
}

impl PartReport {
    pub fn passed(&self) -> bool {
        self.divisible && self.coprime
    }

    fn failed(label: String) -> Self {
        PartReport {
            modulus_part: label,
            divisible: false,
            coprime: false,
            valuation: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedConstraint,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedConstraint => "skipped-constraint",
        })
    }
}

/// Whether a statement is proved, conjectured, or only illustrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Theorem,
    Conjecture,
    Informational,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
            Status::Informational => "informational",
        })
    }
}

/// A structured verdict with per-part witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub status: Status,
    pub parts: Vec<PartReport>,
    pub mode_notes: Vec<String>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn new(id: &str, status: Status) -> Self {
        VerificationReport {
            id: id.to_string(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            status,
            parts: Vec::new(),
            mode_notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.mode_notes.push(s.into());
    }

    pub fn push_part(&mut self, p: PartReport) {
        self.parts.push(p);
        self.refresh_verdict();
    }

    /// Pass iff every part passes; a skipped report stays skipped.
    pub fn refresh_verdict(&mut self) {
        if self.verdict == Verdict::SkippedConstraint {
            return;
        }
        self.verdict = if self.parts.iter().all(PartReport::passed) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }

    pub fn skipped(id: &str, status: Status, why: &str) -> Self {
        let mut r = Self::new(id, status);
        r.verdict = Verdict::SkippedConstraint;
        r.mode_notes.push(why.to_string());
        r
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// A failure that must not be excused as a conjecture finding.
    pub fn is_theorem_failure(&self) -> bool {
        self.verdict == Verdict::Fail && self.status == Status::Theorem
    }

    /// Sort key `(id, n, everything else)`.
    pub fn sort_key(&self) -> (String, i64, String) {
        let n = self
            .params
            .get("n")
            .or_else(|| self.params.get("p"))
            .and_then(|s| s.parse().ok())
            .unwrap_or(i64::MIN);
        let rest: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{}={}", k, v))
            .collect();
        (self.id.clone(), n, rest.join(","))
    }
}

/// Sorts reports into the deterministic `(id, n)` order.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by_key(|r| r.sort_key());
}

// ----- RatFun route -------------------------------------------------------

/// Whether `Φ_d^e` divides the numerator of `x` and `Φ_d` is prime to its
/// denominator. Coefficients in `a` are handled one at a time: `Φ_d^e` is
/// monic in `q`, so divisibility over `Q(a)[q]` is coefficientwise.
pub fn check_zero(x: &RatFun, d: u64, e: u32) -> PartReport {
    let phi = cyclotomic(d);
    let pe = phi.pow(e);
    let divisible = x
        .num()
        .coeffs()
        .iter()
        .all(|c| c.rem(&pe).expect("nonzero modulus").is_zero());
    let coprime = x
        .den()
        .coeffs()
        .iter()
        .any(|c| !c.is_zero() && !c.rem(&phi).expect("nonzero modulus").is_zero());
    let valuation = if x.is_zero() {
        e as i64
    } else {
        let vn = x
            .num()
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.multiplicity(&phi).unwrap() as i64)
            .min()
            .unwrap();
        let vd = x
            .den()
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.multiplicity(&phi).unwrap() as i64)
            .min()
            .unwrap();
        (vn - vd).min(e as i64)
    };
    PartReport {
        modulus_part: phi_label(d, e),
        divisible,
        coprime,
        valuation: Some(valuation),
    }
}

/// Whether `x - y` vanishes at the root of `form`; only the parameter `a` is
/// available in a [`RatFun`].
pub fn check_a_part(x: &RatFun, y: &RatFun, form: &APart) -> PartReport {
    let diff = x.sub(y);
    let t = ASubst::QPower {
        coeff: form.coeff.clone(),
        qexp: form.qexp,
    };
    match diff.substitute_a(&t) {
        Ok(v) => PartReport {
            modulus_part: form.label.clone(),
            divisible: v.is_zero(),
            coprime: true,
            valuation: None,
        },
        Err(_) => PartReport::failed(form.label.clone()),
    }
}

/// `x ≡ y (mod m)` on normalised rational functions.
pub fn check_congruent(x: &RatFun, y: &RatFun, m: &Modulus) -> Result<VerificationReport> {
    m.validate()?;
    let diff = x.sub(y);
    let mut r = VerificationReport::new("check", Status::Informational);
    let parts: Vec<PartReport> = m
        .q_parts
        .par_iter()
        .map(|(d, e)| check_zero(&diff, *d, *e))
        .collect();
    for p in parts {
        r.push_part(p);
    }
    for a in &m.a_parts {
        r.push_part(check_a_part(x, y, a));
    }
    r.refresh_verdict();
    Ok(r)
}

// ----- factored route -----------------------------------------------------

/// Upper bound on the `a`-degree of `Σ terms` once `a`-denominators and
/// negative powers of `a` are cleared.
pub fn a_degree_bound(terms: &[QProduct]) -> usize {
    let mut den: BTreeMap<&crate::qsymbols::BinKey, i64> = BTreeMap::new();
    for t in terms.iter().filter(|t| !t.is_zero()) {
        for (k, m) in &t.bin {
            if k.aexp > 0 && *m < 0 {
                let e = den.entry(k).or_insert(0);
                *e = (*e).max(-m);
            }
        }
    }
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for t in terms.iter().filter(|t| !t.is_zero()) {
        let mut h = t.apow;
        for (k, dm) in &den {
            h += k.aexp as i64 * (t.bin.get(*k).copied().unwrap_or(0) + dm);
        }
        for (k, m) in &t.bin {
            if k.aexp > 0 && !den.contains_key(k) {
                h += k.aexp as i64 * m;
            }
        }
        lo = lo.min(t.apow);
        hi = hi.max(h);
    }
    if lo > hi {
        0
    } else {
        (hi - lo) as usize
    }
}

/// Nonzero rationals `α` with `|λ α^e| ≠ 1` for every `a`-factor in `terms`:
/// `2, -2, 3, -3, ...`.
pub fn good_samples(terms: &[QProduct], count: usize) -> Vec<Rational> {
    let mut keys = std::collections::BTreeSet::new();
    for t in terms {
        for k in t.bin.keys() {
            if k.aexp > 0 {
                keys.insert((k.lambda.abs(), k.aexp));
            }
        }
    }
    let mut out = Vec::with_capacity(count);
    let mut c = 2i64;
    while out.len() < count {
        for s in [1, -1] {
            let alpha = rat_int(s * c);
            let bad = keys.iter().any(|(l, e)| {
                (l * crate::arith::rational_pow(&alpha.abs(), *e as i64)).is_one()
            });
            if !bad && out.len() < count {
                out.push(alpha);
            }
        }
        c += 1;
    }
    out
}

fn interpolation_note(b: usize) -> String {
    format!(
        "symbolic parameter by interpolation: {} samples for a-degree bound {}",
        b + 1,
        b
    )
}

/// `v_{Φ_d}(Σ terms)` against `e`. Terms depending on `a` are decided by
/// `B + 1` samples, where `B` bounds the cleared `a`-degree; every factor
/// involving `a` stays a unit modulo `Φ_d` at those samples, so this is exact.
pub fn q_part(terms: &[QProduct], d: u64, e: u32) -> Result<(PartReport, Option<String>)> {
    let label = phi_label(d, e);
    if !terms.iter().any(QProduct::has_a) {
        let o = local::local_valuation(terms, d, e)?;
        return Ok((
            PartReport {
                modulus_part: label,
                divisible: o.divisible,
                coprime: o.coprime,
                valuation: Some(o.valuation),
            },
            None,
        ));
    }
    let vals = local::term_valuations(terms, d)?;
    let Some((vmin, big_e)) = local::working_exponent(&vals, e) else {
        return Ok((
            PartReport {
                modulus_part: label,
                divisible: true,
                coprime: true,
                valuation: Some(e as i64),
            },
            None,
        ));
    };
    let b = a_degree_bound(terms);
    let samples = good_samples(terms, b + 1);
    let vts: Vec<Result<u32>> = samples
        .par_iter()
        .map_init(
            || LocalRing::new(d, big_e),
            |ring, alpha| {
                let ring = ring.as_mut().map_err(|e| e.clone())?;
                let spec: Vec<QProduct> = terms.iter().map(|t| t.specialize_a(alpha)).collect();
                let total = local::local_sum(ring, &spec, &vals, vmin)?;
                Ok(ring.valuation(&total))
            },
        )
        .collect();
    let mut vt = big_e;
    for v in vts {
        vt = vt.min(v?);
    }
    let o = local::outcome(vmin, vt, big_e, e);
    Ok((
        PartReport {
            modulus_part: label,
            divisible: o.divisible,
            coprime: o.coprime,
            valuation: Some(o.valuation),
        },
        Some(interpolation_note(b)),
    ))
}

/// Whether `Σ terms` vanishes identically, sampling `a` when present.
pub fn exact_zero(terms: &[QProduct]) -> Result<(bool, Option<String>)> {
    if !terms.iter().any(QProduct::has_a) {
        return Ok((exact::sum_is_zero(terms)?, None));
    }
    let b = a_degree_bound(terms);
    let samples = good_samples(terms, b + 1);
    let res: Vec<Result<bool>> = samples
        .par_iter()
        .map(|alpha| {
            let spec: Vec<QProduct> = terms.iter().map(|t| t.specialize_a(alpha)).collect();
            exact::sum_is_zero(&spec)
        })
        .collect();
    let mut all = true;
    for r in res {
        all &= r?;
    }
    Ok((all, Some(interpolation_note(b))))
}

/// A term list builder: `params ↦ Σ LHS - Σ RHS` as factored summands.
pub type TermBuilder<'a> = dyn Fn(&Params) -> Result<Vec<QProduct>> + Sync + 'a;

/// Checks every part of `m` against the summands produced by `build`.
/// Parameter roots are imposed by rebuilding the summands with the parameter
/// specialised, so any parameter may carry a linear factor.
pub fn check_factored(
    build: &TermBuilder<'_>,
    params: &Params,
    m: &Modulus,
) -> Result<(Vec<PartReport>, Vec<String>)> {
    m.validate()?;
    let mut parts = Vec::new();
    let mut notes = Vec::new();
    if !m.q_parts.is_empty() {
        let terms = build(params)?;
        let res: Vec<Result<(PartReport, Option<String>)>> = m
            .q_parts
            .par_iter()
            .map(|(d, e)| q_part(&terms, *d, *e))
            .collect();
        for ((d, e), r) in m.q_parts.iter().zip(res) {
            match r {
                Ok((p, n)) => {
                    parts.push(p);
                    if let Some(n) = n {
                        if !notes.contains(&n) {
                            notes.push(n);
                        }
                    }
                }
                Err(err) => {
                    parts.push(PartReport::failed(phi_label(*d, *e)));
                    notes.push(format!("{}: {}", phi_label(*d, *e), err));
                }
            }
        }
    }
    for a in &m.a_parts {
        let mut p = params.clone();
        p.set(
            &a.param,
            ParamVal::Val {
                coeff: a.coeff.clone(),
                qexp: a.qexp,
            },
        );
        if let Some(f) = &a.free {
            if p.symbolic().is_none() {
                p.set(f, ParamVal::Symbolic);
            }
        }
        let res = build(&p).and_then(|t| exact_zero(&t));
        match res {
            Ok((z, n)) => {
                parts.push(PartReport {
                    modulus_part: a.label.clone(),
                    divisible: z,
                    coprime: true,
                    valuation: None,
                });
                if let Some(n) = n {
                    let n = format!("{} ({})", n, a.label);
                    notes.push(n);
                }
            }
            Err(err) => {
                parts.push(PartReport::failed(a.label.clone()));
                notes.push(format!("{}: {}", a.label, err));
            }
        }
    }
    Ok((parts, notes))
}

/// Negated copies of `rhs` appended to `lhs`.
pub fn difference(mut lhs: Vec<QProduct>, rhs: &[QProduct]) -> Vec<QProduct> {
    for r in rhs {
        lhs.push(r.clone().scale(&rat_int(-1)));
    }
    lhs
}

/// Sum of factored products as a normalised rational function.
pub fn sum_to_ratfun(terms: &[QProduct]) -> Result<RatFun> {
    let mut acc = RatFun::zero();
    for t in terms {
        acc = acc.add(&t.to_ratfun()?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::{normalize, APoly};

    fn u(cs: &[i64]) -> UPoly {
        UPoly::from_ints(cs)
    }

    #[test]
    fn check_zero_examples() {
        let x = normalize(APoly::from_upoly(u(&[-1, 0, 1])), APoly::from_upoly(u(&[-1, 0, 0, 1])))
            .unwrap();
        assert!(check_zero(&x, 2, 1).passed());
        let y = RatFun::from_upoly(&crate::qpoly::q_integer(5) * &u(&[2, 1]));
        assert!(check_congruent(&y, &RatFun::zero(), &Modulus::bracket(5))
            .unwrap()
            .passed());
        let z = normalize(APoly::one(), APoly::from_upoly((*cyclotomic(3)).clone())).unwrap();
        let p = check_zero(&z, 3, 1);
        assert!(!p.coprime && !p.passed());
    }

    #[test]
    fn check_a_part_examples() {
        let a = RatFun::a();
        let q3 = RatFun::q_power(3);
        let m = Modulus::one().with_minus_qn("a", 3);
        assert!(check_a_part(&a, &q3, &m.a_parts[0]).passed());
        let x = RatFun::one()
            .div(&RatFun::one().sub(&RatFun::a().mul(&RatFun::q_power(1))))
            .unwrap();
        let m = Modulus::one().with_one_minus("a", 1);
        let p = check_a_part(&x, &RatFun::zero(), &m.a_parts[0]);
        assert!(!p.coprime);
    }

    #[test]
    fn congruence_basics() {
        let x = RatFun::from_upoly(u(&[3, 1, 4]));
        let m = Modulus::bracket_phi(5, 2);
        assert!(check_congruent(&x, &x, &m).unwrap().passed());
        assert!(!check_congruent(&RatFun::one(), &RatFun::zero(), &Modulus::bracket(5))
            .unwrap()
            .passed());
        let bad = Modulus {
            q_parts: vec![(5, 1), (5, 2)],
            a_parts: vec![],
        };
        assert!(matches!(
            check_congruent(&x, &x, &bad),
            Err(Error::ModulusPartsNotCoprime(_))
        ));
    }

    #[test]
    fn modulus_constructors() {
        assert_eq!(Modulus::bracket_phi(5, 2).q_parts, vec![(5, 3)]);
        assert_eq!(Modulus::bracket_phi(25, 2).q_parts, vec![(5, 1), (25, 3)]);
        assert_eq!(Modulus::bracket_phi(1, 2).q_parts, vec![(1, 2)]);
        assert_eq!(Modulus::one_plus_qn(3).q_poly(), u(&[1, 0, 0, 1]));
        assert_eq!(
            Modulus::qbinomial(4, 2).q_poly(),
            crate::qsymbols::qbinomial(4, 2)
        );
    }

    #[test]
    fn factored_route_matches_ratfun_route() {
        // x = (1 - q^5)(1 - a q)/(1 - q^3), y = 0, modulus [5](1 - a q)
        let mut t = QProduct::one();
        t.push_factor(&rat_int(1), 0, 5, 1);
        t.push_factor(&rat_int(1), 1, 1, 1);
        t.push_factor(&rat_int(1), 0, 3, -1);
        let m = Modulus::bracket(5).with_one_minus("a", 1);
        let build = |p: &Params| -> Result<Vec<QProduct>> {
            Ok(vec![match p.get("a") {
                Some(ParamVal::Val { coeff, qexp }) => t.substitute_a(coeff, *qexp),
                _ => t.clone(),
            }])
        };
        let params = Params::new().with("a", ParamVal::Symbolic);
        let (parts, _) = check_factored(&build, &params, &m).unwrap();
        assert!(parts.iter().all(PartReport::passed));
        let x = t.to_ratfun().unwrap();
        assert!(check_congruent(&x, &RatFun::zero(), &m).unwrap().passed());
    }

    #[test]
    fn degree_bound_counts_cleared_denominators() {
        // a^{-1} (1 - a q)^2 / (1 - a q^2) + a^2
        let mut t = QProduct::one();
        t.apow = -1;
        t.push_factor(&rat_int(1), 1, 1, 2);
        t.push_factor(&rat_int(1), 1, 2, -1);
        let mut s = QProduct::one();
        s.apow = 2;
        // cleared: (1 - a q)^2 + a^3 (1 - a q^2): degree 4 from a^{-1}
        assert_eq!(a_degree_bound(&[t, s]), 4);
    }
}
