//! The job lists behind `qcong suite`. Each job carries the acceptance
//! criterion it belongs to.

use std::time::Instant;

use crate::arith::{primes_in, rat, rat_int, Rational};
use crate::catalog::{
    self, identities, supercong, wz, Case, SumFamily, Trunc,
};
use crate::congruence::{PartReport, Status, VerificationReport};
use crate::cyclofield::{neg_zeta_poch, qlucas};
use crate::error::Result;
use crate::numeric::{sanity_error, SeriesRule};
use crate::qpoly::{cyclotomic, q_integer, UPoly};
use crate::qsymbols::{ParamVal, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    Quick,
    Full,
}

type Runner = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>;

pub struct Job {
    pub criterion: u8,
    pub label: String,
    run: Runner,
}

impl Job {
    pub fn new(
        criterion: u8,
        label: impl Into<String>,
        run: impl Fn() -> Result<VerificationReport> + Send + Sync + 'static,
    ) -> Self {
        Job {
            criterion,
            label: label.into(),
            run: Box::new(run),
        }
    }

    /// Runs the job; a library error becomes a failed report.
    pub fn run(&self) -> VerificationReport {
        let start = Instant::now();
        match (self.run)() {
            Ok(r) => r,
            Err(e) => {
                let mut r = VerificationReport::new(&self.label, Status::Theorem);
                r.push_part(PartReport {
                    modulus_part: "error".into(),
                    divisible: false,
                    coprime: false,
                    valuation: None,
                });
                r.note(e.to_string());
                r.millis = start.elapsed().as_millis() as u64;
                r
            }
        }
    }
}

/// A report built from named boolean checks.
pub fn simple_report(id: &str, status: Status, checks: Vec<(String, bool)>) -> VerificationReport {
    let mut r = VerificationReport::new(id, status);
    for (label, ok) in checks {
        r.push_part(PartReport {
            modulus_part: label,
            divisible: ok,
            coprime: true,
            valuation: None,
        });
    }
    r
}

fn odd_upto(m: i64) -> Vec<i64> {
    (1..=m).step_by(2).collect()
}

fn with(params: &[(&str, Rational)]) -> Params {
    let mut p = Params::new();
    for (k, v) in params {
        p.set(k, ParamVal::rational(v.clone()));
    }
    p
}

/// The `count` smallest admissible `n` for `f` at `(d, r)`.
pub fn smallest_admissible(f: &SumFamily, count: usize, d: i64, r: i64) -> Vec<Case> {
    (1..200)
        .map(|n| Case::ndr(n, d, r))
        .filter(|c| (f.admissible)(c).is_ok())
        .take(count)
        .collect()
}

fn family_jobs(
    out: &mut Vec<Job>,
    crit: u8,
    id: &'static str,
    cases: &[Case],
    params: &[Params],
    truncs: Option<&[Trunc]>,
) {
    let f = catalog::family(id).expect("registered family");
    let truncs: Vec<Trunc> = truncs.unwrap_or(f.truncs).to_vec();
    for c in cases {
        for p in params {
            for &t in &truncs {
                let (c, p) = (*c, p.clone());
                out.push(Job::new(crit, format!("{} n={} {}", id, c.n, t), move || {
                    catalog::verify_family(f, &c, &p, t)
                }));
            }
        }
    }
}

fn ns(v: &[i64]) -> Vec<Case> {
    v.iter().map(|&n| Case::n(n)).collect()
}

const DR_GRID: [(i64, i64); 5] = [(3, 1), (3, 2), (4, 1), (4, 3), (5, 2)];

/// Every job of the given profile, in criterion order.
pub fn jobs(profile: Profile) -> Vec<Job> {
    let full = profile == Profile::Full;
    let mut out = Vec::new();
    let none = [Params::new()];

    // 1, 2: the [8k+1] family, plain and with a
    let mut ns1 = vec![1, 5, 7, 11, 13, 17, 19, 23, 25];
    if full {
        ns1.extend([29, 31, 35, 37]);
    }
    family_jobs(&mut out, 1, "T1.1-full", &ns(&ns1), &none, None);
    family_jobs(&mut out, 1, "T1.1-half", &ns(&ns1), &none, None);
    family_jobs(&mut out, 2, "T1.4-full", &ns(&ns1), &none, None);
    family_jobs(&mut out, 2, "T1.4-half", &ns(&ns1), &none, None);
    let avals = [rat_int(1), rat_int(2), rat(1, 3)];
    let ap: Vec<Params> = avals.iter().map(|a| with(&[("a", a.clone())])).collect();
    family_jobs(&mut out, 2, "T1.4-full", &ns(&ns1[1..]), &ap, None);

    // 3
    let odd21 = odd_upto(if full { 31 } else { 21 });
    for id in ["T1.2-full", "T1.2-half", "T1.3-full", "T1.3-half"] {
        family_jobs(&mut out, 3, id, &ns(&odd21), &none, None);
    }

    // 4
    family_jobs(&mut out, 4, "L3.1", &ns(&[1, 5, 7, 11, 13]), &none, None);
    let a3 = [rat_int(2), rat(1, 3), rat(5, 7)];
    let a3p: Vec<Params> = a3.iter().map(|a| with(&[("a", a.clone())])).collect();
    family_jobs(&mut out, 4, "L3.2", &ns(&[5, 7, 11, 13, 25]), &a3p, None);

    // 5
    let odd13 = odd_upto(if full { 19 } else { 13 });
    let odd11 = odd_upto(if full { 17 } else { 11 });
    let odd9 = odd_upto(if full { 13 } else { 9 });
    family_jobs(&mut out, 5, "T4.1", &ns(&odd13), &none, None);
    family_jobs(&mut out, 5, "EQ4.B2", &ns(&odd13), &none, None);
    let cp: Vec<Params> = [rat_int(1), rat_int(2), rat(1, 3)]
        .iter()
        .map(|c| with(&[("c", c.clone())]))
        .collect();
    family_jobs(&mut out, 5, "T4.2", &ns(&odd13), &cp, None);
    family_jobs(&mut out, 5, "EQ4.C2", &ns(&odd13), &none, None);
    family_jobs(&mut out, 5, "T4.3", &ns(&odd11), &none, None);
    family_jobs(&mut out, 5, "T4.4", &ns(&odd11), &none, None);
    family_jobs(&mut out, 5, "EQ4.3-special", &ns(&odd11), &none, None);
    let bp: Vec<Params> = [rat_int(2), rat(1, 3)]
        .iter()
        .map(|b| with(&[("b", b.clone())]))
        .collect();
    family_jobs(&mut out, 5, "T4.5", &ns(&[3, 5, 7, 9]), &bp, None);
    family_jobs(&mut out, 5, "T4.6", &ns(&[3, 5, 7]), &none, None);
    family_jobs(&mut out, 5, "T4.7", &ns(&odd9), &none, None);
    for id in ["T4.8", "T4.9"] {
        let f = catalog::family(id).unwrap();
        for (d, r) in DR_GRID {
            let cases = smallest_admissible(f, if full { 4 } else { 2 }, d, r);
            family_jobs(&mut out, 5, id, &cases, &none, None);
        }
    }
    let n410: &[i64] = if full { &[5, 9, 13, 17] } else { &[5, 13] };
    family_jobs(&mut out, 5, "T4.10", &ns(n410), &none, None);
    for &n in n410 {
        out.push(Job::new(5, format!("T4.10-remark n={}", n), move || {
            catalog::t410_exponent_swap(n, &Params::new())
        }));
    }
    let n3711: &[i64] = if full { &[3, 7, 11, 15, 19] } else { &[3, 7, 11] };
    family_jobs(&mut out, 5, "T4.D", &ns(n3711), &none, None);
    family_jobs(&mut out, 5, "T4.A", &ns(n3711), &none, None);
    family_jobs(&mut out, 5, "EQ5.QBIN", &ns(&(1..=if full { 8 } else { 6 }).collect::<Vec<_>>()), &none, None);

    // 6: conjectures
    family_jobs(&mut out, 6, "C4.4bc", &ns(&odd9), &none, None);
    for id in ["C4.3-div1", "C4.3-div2"] {
        family_jobs(&mut out, 6, id, &ns(&odd11), &none, None);
    }
    family_jobs(&mut out, 6, "C4.5-strange1", &ns(&[5, 9, 13]), &none, None);
    family_jobs(&mut out, 6, "C4.D-refine", &ns(&[3, 7]), &none, None);
    family_jobs(&mut out, 6, "C4.A-x", &ns(&odd_upto(7)), &none, None);
    for id in ["C4.A-dnr", "C5.GZ-general"] {
        let f = catalog::family(id).unwrap();
        for (d, r) in DR_GRID {
            family_jobs(&mut out, 6, id, &smallest_admissible(f, 2, d, r), &none, None);
        }
    }
    let n6: Vec<i64> = (1..=6).collect();
    family_jobs(&mut out, 6, "C5.1a", &ns(&n6), &none, None);
    family_jobs(&mut out, 6, "C5.1b", &ns(&n6), &none, None);
    for id in ["C5.2", "C5.3", "C5.4"] {
        let f = catalog::family(id).unwrap();
        for d in 2..=5 {
            family_jobs(&mut out, 6, id, &smallest_admissible(f, 2, d, 0), &none, None);
        }
    }
    family_jobs(&mut out, 6, "C5.5", &ns(&[3, 7]), &none, None);
    family_jobs(&mut out, 6, "C5.GZ", &ns(&[3, 7, 11]), &none, None);
    family_jobs(&mut out, 6, "C-J2-full", &ns(&odd9), &none, None);
    family_jobs(&mut out, 6, "C-Guo4-7.1", &ns(&odd9), &none, None);

    // 7
    let order = if full { 80 } else { 50 };
    for s in identities::SERIES {
        out.push(Job::new(7, format!("{} order {}", s.id, order), move || {
            identities::verify_series(s.id, &Params::new(), order)
        }));
    }
    for f in identities::FINITE {
        for n in 0..=6 {
            out.push(Job::new(7, format!("{} N={}", f.id, n), move || {
                identities::verify_finite(f.id, n)
            }));
        }
    }

    // 8
    supercong_jobs(&mut out, full);

    // 9
    microscope_jobs(&mut out, full);

    // 10
    let (wn, wm) = if full { (8, 13) } else { (6, 9) };
    out.push(Job::new(10, "WZ-tilde", move || wz::verify_wz(wz::WzPair::Tilde, wn, wn, wm, 3)));
    out.push(Job::new(10, "WZ-plain", move || wz::verify_wz(wz::WzPair::Plain, wn, wn, wm, 3)));

    // 11
    let nmax = if full { 200 } else { 100 };
    out.push(Job::new(11, "S-bracket", move || Ok(bracket_product_report(nmax))));
    out.push(Job::new(11, "S-phi-neg", || Ok(phi_neg_report(31))));

    // 12
    out.push(Job::new(12, "N-ramanujan-8k1", || numeric_report(SeriesRule::Ramanujan8k1, 50, 1e-12)));
    out.push(Job::new(12, "N-sqrt6-over-3", || numeric_report(SeriesRule::Sqrt6Over3, 60, 1e-8)));
    out
}

fn supercong_jobs(out: &mut Vec<Job>, full: bool) {
    let pmax = if full { 61 } else { 37 };
    for id in ["S1.2", "S1.3"] {
        for p in primes_in(5, pmax) {
            out.push(Job::new(8, format!("{} p={}", id, p), move || {
                supercong::verify_supercongruence(id, p, 1, 0)
            }));
        }
    }
    let p43: Vec<u64> = if full { vec![7, 11, 19, 23, 31, 43] } else { vec![7, 11, 19, 23] };
    for p in p43 {
        out.push(Job::new(8, format!("S4.3-p3mod4 p={}", p), move || {
            supercong::verify_supercongruence("S4.3-p3mod4", p, 1, 0)
        }));
    }
    for (d, p, s, id) in van_hamme_grid(if full { 100 } else { 50 }) {
        out.push(Job::new(8, format!("{} d={} p={} s={}", id, d, p, s), move || {
            supercong::verify_supercongruence(id, p, s, d)
        }));
    }
    let mut dw: Vec<(u64, u32)> = [3, 5, 7, 11].iter().map(|&p| (p, 1)).collect();
    dw.push((3, 2));
    if full {
        dw.push((5, 2));
    }
    for (p, s) in dw {
        out.push(Job::new(8, format!("S5.Dwork p={} s={}", p, s), move || {
            supercong::verify_supercongruence("S5.Dwork", p, s, 0)
        }));
    }
    let bmax = if full { 30 } else { 15 };
    for b in supercong::BINOMIAL_CONGRUENCES {
        for n in 0..=bmax {
            out.push(Job::new(8, format!("{} n={}", b.id, n), move || {
                supercong::verify_binomial_congruence(b.id, n)
            }));
        }
    }
    out.push(Job::new(8, "S1.2-intermediate", || {
        let w = supercong::intermediate_terms_witness(50);
        let mut r = simple_report(
            "S1.2-intermediate",
            Status::Theorem,
            vec![("some term with (p-1)/2 < k < p is nonzero mod p^3".into(), w.is_some())],
        );
        if let Some((p, k)) = w {
            r = r.param("p", p).param("k", k);
        }
        Ok(r)
    }));
}

/// `(d, p, s, id)` with `p^s <= bound`, `p^s ≡ ±1 (mod d)`, `d ∈ {3, 4, 5}`.
pub fn van_hamme_grid(bound: u64) -> Vec<(i64, u64, u32, &'static str)> {
    let mut v = Vec::new();
    for d in 3..=5i64 {
        for p in primes_in(2, bound) {
            let mut s = 1;
            while p.pow(s) <= bound {
                let m = (p.pow(s) as i64).rem_euclid(d);
                if m == 1 {
                    v.push((d, p, s, "S4.8-ds"));
                } else if m == d - 1 {
                    v.push((d, p, s, "S4.9-ds"));
                }
                s += 1;
            }
        }
    }
    v
}

fn microscope_jobs(out: &mut Vec<Job>, full: bool) {
    let ds: Vec<u64> = if full { vec![5, 7, 11, 13, 17, 19] } else { vec![5, 7, 11, 13] };
    for id in ["T1.2-full", "T1.3-full", "T1.4-full"] {
        let f = catalog::family(id).unwrap();
        let avals: Vec<Option<Rational>> = if f.symbolic.is_some() {
            vec![Some(rat_int(2)), Some(rat(1, 3)), Some(rat(5, 7))]
        } else {
            vec![None]
        };
        for &d in &ds {
            for a in &avals {
                let a = a.clone();
                out.push(Job::new(9, format!("zeta {} d={}", id, d), move || {
                    zeta_report(f, d, a.as_ref())
                }));
            }
        }
    }
    for d in [3u64, 5, 7] {
        out.push(Job::new(9, format!("qlucas d={}", d), move || Ok(qlucas_report(d, 3))));
    }
    out.push(Job::new(9, "neg-zeta-poch", || Ok(neg_zeta_report(13))));
}

/// Whether the full and half block sums of `f` vanish at `ζ_d`.
pub fn zeta_report(f: &'static SumFamily, d: u64, a: Option<&Rational>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut p = Params::new();
    if let (Some(s), Some(a)) = (f.symbolic, a) {
        p.set(s, ParamVal::rational(a.clone()));
    }
    let full = catalog::block_sum(f, d, &p, false)?;
    let half = catalog::block_sum(f, d, &p, true)?;
    let mut r = simple_report(
        f.id,
        f.status,
        vec![
            ("block full at zeta".into(), full.is_zero()),
            ("block half at zeta".into(), half.is_zero()),
        ],
    )
    .param("d", d);
    if let Some(a) = a {
        r = r.param("a", a);
    }
    r.millis = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Exhaustive q-Lucas check at `ζ_d` over `a, ℓ <= amax`, `0 <= b, k < d`.
pub fn qlucas_report(d: u64, amax: u64) -> VerificationReport {
    let mut bad = 0usize;
    let mut total = 0usize;
    for a in 0..=amax {
        for l in 0..=amax {
            for b in 0..d {
                for k in 0..d {
                    total += 1;
                    if !qlucas(d, a, l, b, k) {
                        bad += 1;
                    }
                }
            }
        }
    }
    let mut r = simple_report(
        "qlucas",
        Status::Theorem,
        vec![(format!("{} cases", total), bad == 0)],
    )
    .param("d", d);
    if bad > 0 {
        r.note(format!("{} cases fail", bad));
    }
    r
}

pub fn neg_zeta_report(dmax: u64) -> VerificationReport {
    let checks = (1..=dmax)
        .step_by(2)
        .map(|d| {
            let v = neg_zeta_poch(d).as_rational();
            (format!("(-z;z)_{} = 2", d), v == Some(rat_int(2)))
        })
        .collect();
    simple_report("neg-zeta-poch", Status::Theorem, checks)
}

/// `∏_{d|n, d>1} Φ_d = [n]` for `n <= nmax`.
pub fn bracket_product_report(nmax: u64) -> VerificationReport {
    let mut bad = Vec::new();
    for n in 1..=nmax {
        let mut prod = UPoly::one();
        for d in 2..=n {
            if n % d == 0 {
                prod = &prod * &cyclotomic(d);
            }
        }
        if prod != q_integer(n) {
            bad.push(n);
        }
    }
    let mut r = simple_report(
        "S-bracket",
        Status::Theorem,
        vec![(format!("n <= {}", nmax), bad.is_empty())],
    );
    if !bad.is_empty() {
        r.note(format!("fails at {:?}", bad));
    }
    r
}

/// `Φ_n(-q) = ±Φ_{2n}(q)` for odd `3 <= n <= nmax`.
pub fn phi_neg_report(nmax: u64) -> VerificationReport {
    let checks = (3..=nmax)
        .step_by(2)
        .map(|n| {
            let lhs = cyclotomic(n).scale_var(&rat_int(-1));
            let rhs = cyclotomic(2 * n);
            let ok = lhs == *rhs || lhs == -&*rhs;
            (format!("Phi_{}(-q)", n), ok)
        })
        .collect();
    simple_report("S-phi-neg", Status::Theorem, checks)
}

pub fn numeric_report(rule: SeriesRule, n: u64, tol: f64) -> Result<VerificationReport> {
    let err = sanity_error(rule, n)?;
    let mut r = simple_report(
        &format!("N-{}", rule.id()),
        Status::Informational,
        vec![(format!("|error| < {:e}", tol), err < tol)],
    )
    .param("N", n);
    r.note(format!("numeric: error {:.3e}", err));
    Ok(r)
}
