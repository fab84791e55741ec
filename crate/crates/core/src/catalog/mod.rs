//! Registry of verifiable statements: truncated sums with their closed forms
//! and moduli, infinite identities, WZ pairs and integer supercongruences.

mod families;
pub mod identities;
pub mod supercong;
pub mod wz;

use std::fmt;
use std::time::Instant;

use crate::arith::{rat, rat_int, Rational};
use crate::congruence::{
    check_factored, difference, exact_zero, sum_to_ratfun, Modulus, PartReport, Status,
    VerificationReport,
};
use crate::cyclofield::{CycloNum, ZetaEvaluator};
use crate::error::{Error, Result};
use crate::qsymbols::{ParamVal, Params, QProduct};
use crate::ratfun::RatFun;

pub use families::FAMILIES;

/// Where a truncated sum stops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trunc {
    /// `k <= n - 1` (or the family's long range).
    Full,
    /// The family's short range, usually `k <= (n - 1)/2`.
    Half,
}

impl Trunc {
    pub fn parse(s: &str) -> Option<Trunc> {
        match s {
            "full" => Some(Trunc::Full),
            "half" => Some(Trunc::Half),
            _ => None,
        }
    }
}

impl fmt::Display for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trunc::Full => "full",
            Trunc::Half => "half",
        })
    }
}

/// The integer data of one instance: `n` and, for two-index families, `d`
/// and `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Case {
    pub n: i64,
    pub d: i64,
    pub r: i64,
}

impl Case {
    pub fn n(n: i64) -> Self {
        Case { n, d: 0, r: 0 }
    }

    pub fn ndr(n: i64, d: i64, r: i64) -> Self {
        Case { n, d, r }
    }

    pub fn half(&self) -> i64 {
        (self.n - 1) / 2
    }
}

/// What the difference `Σ terms - RHS` is checked against.
pub enum Target {
    Modulus(Modulus),
    /// Exact vanishing.
    Identity,
}

pub type TermFn = fn(&Case, &Params, i64) -> QProduct;
pub type RhsFn = fn(&Case, &Params, i64) -> Vec<QProduct>;

/// One congruence of a family. Several pieces share a registry id when the
/// statement bundles more than one congruence.
pub struct Piece {
    pub label: &'static str,
    pub applies: fn(&Case) -> bool,
    /// Last summation index for the chosen truncation.
    pub upper: fn(&Case, Trunc) -> i64,
    pub term: TermFn,
    /// Right-hand side, given the last summation index.
    pub rhs: RhsFn,
    pub target: fn(&Case) -> Target,
}

pub struct SumFamily {
    pub id: &'static str,
    /// The summand in plain notation, for listings.
    pub display: &'static str,
    pub status: Status,
    pub truncs: &'static [Trunc],
    /// Parameters read by the summands.
    pub params: &'static [&'static str],
    /// The parameter kept symbolic unless a value is given.
    pub symbolic: Option<&'static str>,
    pub uses_dr: bool,
    pub admissible: fn(&Case) -> std::result::Result<(), String>,
    pub pieces: &'static [Piece],
}

/// Values given to parameters that are neither supplied nor symbolic.
pub fn default_samples() -> Vec<Rational> {
    vec![rat_int(2), rat(1, 3), rat(5, 7), rat(-3, 2), rat(3, 4)]
}

impl SumFamily {
    /// `given` completed with the family defaults.
    pub fn complete_params(&self, given: &Params) -> Params {
        let mut p = given.clone();
        let samples = default_samples();
        for (i, name) in self.params.iter().enumerate() {
            if p.get(name).is_some() {
                continue;
            }
            if self.symbolic == Some(*name) && p.symbolic().is_none() {
                p.set(name, ParamVal::Symbolic);
            } else {
                p.set(name, ParamVal::rational(samples[i % samples.len()].clone()));
            }
        }
        p
    }

    fn pieces_for(&self, case: &Case) -> impl Iterator<Item = &Piece> {
        let case = *case;
        self.pieces.iter().filter(move |p| (p.applies)(&case))
    }

    fn terms(&self, piece: &Piece, case: &Case, p: &Params, trunc: Trunc) -> Vec<QProduct> {
        let m = (piece.upper)(case, trunc);
        (0..=m).map(|k| (piece.term)(case, p, k)).collect()
    }
}

pub fn families() -> &'static [SumFamily] {
    FAMILIES
}

pub fn family(id: &str) -> Result<&'static SumFamily> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

fn check_admissible(f: &SumFamily, case: &Case) -> Result<()> {
    (f.admissible)(case).map_err(Error::ConstraintViolated)
}

/// The truncated sum of the first piece as one rational function.
pub fn build_truncated_sum(
    f: &SumFamily,
    case: &Case,
    params: &Params,
    trunc: Trunc,
) -> Result<RatFun> {
    check_admissible(f, case)?;
    let p = f.complete_params(params);
    let piece = f.pieces_for(case).next().expect("family has a piece");
    sum_to_ratfun(&f.terms(piece, case, &p, trunc))
}

/// The closed-form right side of the first piece.
pub fn closed_form_rhs(f: &SumFamily, case: &Case, params: &Params, trunc: Trunc) -> Result<RatFun> {
    check_admissible(f, case)?;
    let p = f.complete_params(params);
    let piece = f.pieces_for(case).next().expect("family has a piece");
    sum_to_ratfun(&(piece.rhs)(case, &p, (piece.upper)(case, trunc)))
}

/// Checks every applicable piece of `f` at one instance.
pub fn verify_family(
    f: &SumFamily,
    case: &Case,
    params: &Params,
    trunc: Trunc,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let p = f.complete_params(params);
    let mut rep = VerificationReport::new(f.id, f.status).param("n", case.n);
    if f.uses_dr {
        rep = rep.param("d", case.d).param("r", case.r);
    }
    for (k, v) in p.iter() {
        if f.params.contains(&k.as_str()) {
            rep = rep.param(k, v);
        }
    }
    rep = rep.param("trunc", trunc);
    if !f.truncs.contains(&trunc) {
        return Err(Error::Usage(format!("{} has no {} truncation", f.id, trunc)));
    }
    if let Err(why) = (f.admissible)(case) {
        let mut s = VerificationReport::skipped(f.id, f.status, &why);
        s.params = rep.params;
        return Ok(s);
    }
    for piece in f.pieces_for(case) {
        let m = (piece.upper)(case, trunc);
        let build = |p: &Params| -> Result<Vec<QProduct>> {
            let lhs: Vec<QProduct> = (0..=m).map(|k| (piece.term)(case, p, k)).collect();
            Ok(difference(lhs, &(piece.rhs)(case, p, m)))
        };
        let prefix = |s: &str| {
            if piece.label.is_empty() {
                s.to_string()
            } else {
                format!("{}: {}", piece.label, s)
            }
        };
        match (piece.target)(case) {
            Target::Modulus(md) => {
                let (parts, notes) = check_factored(&build, &p, &md)?;
                for mut part in parts {
                    part.modulus_part = prefix(&part.modulus_part);
                    rep.push_part(part);
                }
                for n in notes {
                    if !rep.mode_notes.contains(&n) {
                        rep.note(n);
                    }
                }
            }
            Target::Identity => {
                let (ok, note) = match build(&p).and_then(|t| exact_zero(&t)) {
                    Ok(x) => x,
                    Err(e) => (false, Some(e.to_string())),
                };
                rep.push_part(PartReport {
                    modulus_part: prefix("identity"),
                    divisible: ok,
                    coprime: true,
                    valuation: None,
                });
                if let Some(n) = note {
                    rep.note(n);
                }
            }
        }
    }
    if f.status == Status::Conjecture && !rep.passed() {
        rep.note("finding: conjectured congruence fails at this instance");
    }
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}

/// The `k`-th summand of the first piece at `q = ζ_d`, computed with `n = d`.
pub fn term_at_zeta(f: &SumFamily, k: i64, d: u64, params: &Params) -> Result<CycloNum> {
    let case = Case::n(d as i64);
    let p = f.complete_params(params);
    let piece = &f.pieces[0];
    ZetaEvaluator::new(d)?.eval(&(piece.term)(&case, &p, k))
}

/// `Σ_{k=0}^{d-1} c_ζ(k)`, or up to `(d-1)/2` when `half`.
pub fn block_sum(f: &SumFamily, d: u64, params: &Params, half: bool) -> Result<CycloNum> {
    let case = Case::n(d as i64);
    let p = f.complete_params(params);
    let top = if half { (d as i64 - 1) / 2 } else { d as i64 - 1 };
    let piece = &f.pieces[0];
    let terms: Vec<QProduct> = (0..=top).map(|k| (piece.term)(&case, &p, k)).collect();
    ZetaEvaluator::new(d)?.sum(&terms)
}

/// Termwise check that `q^{(n-1)k/2}` may be traded for
/// `q^{k(n^2-2nk-n-2)/4}` modulo `Φ_n` in the `n ≡ 1 (mod 4)` family.
pub fn t410_exponent_swap(n: i64, params: &Params) -> Result<VerificationReport> {
    let start = Instant::now();
    let f = family("T4.10")?;
    let p = f.complete_params(params);
    let mut rep = VerificationReport::new("T4.10-remark", Status::Theorem).param("n", n);
    if n % 4 != 1 {
        return Ok(VerificationReport::skipped("T4.10-remark", Status::Theorem, "n must be 1 mod 4"));
    }
    let case = Case::n(n);
    for k in 0..=case.half() {
        let t = (f.pieces[0].term)(&case, &p, k);
        let e1 = (n - 1) * k / 2;
        let e2 = k * (n * n - 2 * n * k - n - 2) / 4;
        let swapped = t.clone().times(&crate::qsymbols::Mono::q(e2 - e1), 1);
        let terms = difference(vec![t], &[swapped]);
        let (part, note) = crate::congruence::q_part(&terms, n as u64, 1)?;
        let mut part = part;
        part.modulus_part = format!("k={}: {}", k, part.modulus_part);
        rep.push_part(part);
        if let Some(nt) = note {
            if !rep.mode_notes.contains(&nt) {
                rep.note(nt);
            }
        }
    }
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}

#[cfg(test)]
mod tests;
