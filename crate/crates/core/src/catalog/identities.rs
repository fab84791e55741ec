//! Infinite q-series identities checked as formal power series, and finite
//! terminating summations checked symbolically.

use std::time::Instant;

use num_traits::One;

use crate::arith::{rat, rat_int, Rational};
use crate::congruence::{a_degree_bound, difference, exact_zero, good_samples, PartReport, Status, VerificationReport};
use crate::error::{Error, Result};
use crate::fps::{self, Fps};
use crate::qsymbols::{Mono, ParamVal, Params, QProduct};

/// `Σ_k term(k) = product` to a fixed order in `q`.
pub struct SeriesIdentity {
    pub id: &'static str,
    pub display: &'static str,
    /// Parameters with their default rational samples.
    pub params: &'static [(&'static str, i64, i64)],
    /// Lower bound on the `q`-order of term `k`.
    pub lower: fn(i64) -> i64,
    pub term: fn(&Params, i64) -> QProduct,
    pub rhs: fn(&Params, usize) -> Result<Fps>,
}

/// A terminating summation `Σ_{k=0}^{N} term(k) = rhs`, an identity of
/// rational functions in `q` and the parameters.
pub struct FiniteIdentity {
    pub id: &'static str,
    pub display: &'static str,
    /// The first parameter is kept symbolic; the others are sampled.
    pub params: &'static [&'static str],
    pub term: fn(&Params, i64, i64) -> QProduct,
    pub rhs: fn(&Params, i64) -> Vec<QProduct>,
}

fn q(e: i64) -> Mono {
    Mono::q(e)
}

fn nq(e: i64) -> Mono {
    Mono::new(rat_int(-1), 0, e)
}

fn sign(k: i64) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        rat_int(-1)
    }
}

/// `∏ (x_i; q^{v_i})_∞^{m_i}` for sampled bases `x_i = c q^u`.
fn inf(factors: &[(Mono, i64, i64)], order: usize) -> Result<Fps> {
    let mut acc = Fps::one(order);
    for (x, v, m) in factors {
        if x.aexp != 0 {
            return Err(Error::NotExpandable("symbolic parameter in a product".into()));
        }
        if x.qexp < 0 {
            return Err(Error::NotExpandable(format!("base with q^{}", x.qexp)));
        }
        let p = fps::inf_product_general(&x.coeff, x.qexp as usize, *v as usize, order);
        for _ in 0..m.unsigned_abs() {
            acc = if *m > 0 { acc.mul(&p) } else { acc.div(&p)? };
        }
    }
    Ok(acc)
}

/// `1/(1 - q)` times `f`.
fn over_one_minus_q(f: Fps) -> Fps {
    let mut f = f;
    f.div_binomial(&Rational::one(), 1);
    f
}

fn one() -> QProduct {
    QProduct::one()
}

// ----- summands ---------------------------------------------------------------

fn s_ram(_: &Params, k: i64) -> QProduct {
    one()
        .times(&q(2 * k * k), 1)
        .poch_pow(&q(1), 2, k, 2)
        .poch(&q(1), 2, 2 * k)
        .over_poch(&q(2), 2, 2 * k)
        .over_poch_pow(&q(6), 6, k, 2)
        .bracket(8 * k + 1, 1)
}

fn r_ram(_: &Params, o: usize) -> Result<Fps> {
    inf(&[(q(3), 2, 1), (q(3), 6, 1), (q(2), 2, -1), (q(6), 6, -1)], o)
}

fn s_6k1_minus(_: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .poch(&q(1), 2, k)
        .poch_pow(&nq(1), 2, k, 2)
        .over_poch(&q(4), 4, k)
        .over_poch_pow(&nq(4), 4, k, 2)
        .bracket(6 * k + 1, 1)
        .times(&q(3 * k * k), 1)
}

fn r_6k1_minus(_: &Params, o: usize) -> Result<Fps> {
    inf(&[(q(3), 4, 1), (q(5), 4, 1), (nq(4), 4, -2)], o)
}

fn s_6k1_plus(_: &Params, k: i64) -> QProduct {
    one()
        .poch(&q(2), 4, k)
        .poch_pow(&nq(1), 2, k, 2)
        .over_poch(&q(4), 4, k)
        .over_poch_pow(&nq(4), 4, k, 2)
        .bracket(6 * k + 1, 1)
        .times(&q(k * k), 1)
}

fn r_6k1_plus(_: &Params, o: usize) -> Result<Fps> {
    Ok(over_one_minus_q(inf(&[(nq(2), 4, 2), (nq(4), 4, -2)], o)?))
}

fn s_cubic(p: &Params, k: i64) -> QProduct {
    let mut t = one();
    t.push_factor(&p.m(&[("a", 1), ("c", 1)], 0).coeff, 0, 4 * k, 1);
    t.push_factor(&p.m(&[("a", 1), ("c", 1)], 0).coeff, 0, 0, -1);
    t.poch(&p.m(&[("a", 1)], 0), 1, k)
        .poch(&p.m(&[("a", -1)], 1), 1, k)
        .poch(&p.m(&[("a", 1), ("c", 1)], 0), 1, 2 * k)
        .over_poch(&p.m(&[("c", 1)], 3), 3, k)
        .over_poch(&p.m(&[("a", 2), ("c", 1)], 2), 3, k)
        .over_poch(&q(1), 1, 2 * k)
        .times(&q(k * k), 1)
}

fn r_cubic(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (p.m(&[("a", 1), ("c", 1)], 2), 3, 1),
            (p.m(&[("a", 1), ("c", 1)], 3), 3, 1),
            (p.m(&[("a", 1)], 1), 3, 1),
            (p.m(&[("a", -1)], 2), 3, 1),
            (q(1), 3, -1),
            (q(2), 3, -1),
            (p.m(&[("a", 2), ("c", 1)], 2), 3, -1),
            (p.m(&[("c", 1)], 3), 3, -1),
        ],
        o,
    )
}

fn s_8k1a(p: &Params, k: i64) -> QProduct {
    one()
        .bracket(8 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, 2 * k)
        .over_poch(&q(2), 2, 2 * k)
        .over_poch(&p.m(&[("a", 1)], 6), 6, k)
        .over_poch(&p.m(&[("a", -1)], 6), 6, k)
        .times(&q(2 * k * k), 1)
}

fn r_8k1a(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (q(5), 6, 1),
            (q(7), 6, 1),
            (p.m(&[("a", 1)], 3), 6, 1),
            (p.m(&[("a", -1)], 3), 6, 1),
            (q(2), 6, -1),
            (q(4), 6, -1),
            (p.m(&[("a", 1)], 6), 6, -1),
            (p.m(&[("a", -1)], 6), 6, -1),
        ],
        o,
    )
}

/// Product-only identity: the "sum" has the single term 1 times the left
/// product, so the check compares two products.
fn s_unit(_: &Params, k: i64) -> QProduct {
    if k == 0 {
        one()
    } else {
        QProduct::scalar(Rational::from_integer(0.into()))
    }
}

fn r_omega3(_: &Params, o: usize) -> Result<Fps> {
    let lhs = inf(&[(q(5), 6, 1), (q(7), 6, 1), (q(2), 6, -1), (q(4), 6, -1)], o)?;
    let rhs = over_one_minus_q(inf(&[(q(1), 2, 1), (q(6), 6, 1), (q(2), 2, -1), (q(3), 6, -1)], o)?);
    // the ratio is 1 exactly when both sides agree
    rhs.div(&lhs)
}

fn s_6phi5(p: &Params, k: i64) -> QProduct {
    let a = p.m(&[("a", 1)], 0);
    let mut t = one();
    t.push_factor(&a.coeff, 0, 2 * k, 1);
    t.push_factor(&a.coeff, 0, 0, -1);
    t.poch(&a, 1, k)
        .poch(&p.m(&[("b", 1)], 0), 1, k)
        .poch(&p.m(&[("c", 1)], 0), 1, k)
        .poch(&p.m(&[("d", 1)], 0), 1, k)
        .over_poch(&q(1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("c", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("d", -1)], 1), 1, k)
        .times(&p.m(&[("a", 1), ("b", -1), ("c", -1), ("d", -1)], 1), k)
}

fn r_6phi5(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (p.m(&[("a", 1)], 1), 1, 1),
            (p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), 1, 1),
            (p.m(&[("a", 1), ("b", -1), ("d", -1)], 1), 1, 1),
            (p.m(&[("a", 1), ("c", -1), ("d", -1)], 1), 1, 1),
            (p.m(&[("a", 1), ("b", -1)], 1), 1, -1),
            (p.m(&[("a", 1), ("c", -1)], 1), 1, -1),
            (p.m(&[("a", 1), ("d", -1)], 1), 1, -1),
            (p.m(&[("a", 1), ("b", -1), ("c", -1), ("d", -1)], 1), 1, -1),
        ],
        o,
    )
}

fn s_quadratic(p: &Params, k: i64) -> QProduct {
    let a = p.m(&[("a", 1)], 0);
    let mut t = one();
    t.push_factor(&a.coeff, 0, 3 * k, 1);
    t.push_factor(&a.coeff, 0, 0, -1);
    t.poch(&a, 1, k)
        .poch(&p.m(&[("d", 1)], 0), 1, k)
        .poch(&p.m(&[("d", -1)], 1), 1, k)
        .poch(&p.m(&[("b", 1)], 0), 2, k)
        .over_poch(&q(2), 2, k)
        .over_poch(&p.m(&[("a", 1), ("d", -1)], 2), 2, k)
        .over_poch(&p.m(&[("a", 1), ("d", 1)], 1), 2, k)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, k)
        .times(&p.m(&[("a", 1), ("b", -1)], 0), k)
        .times(&q(k * (k + 1) / 2), 1)
}

fn r_quadratic(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (p.m(&[("a", 1)], 1), 2, 1),
            (p.m(&[("a", 1)], 2), 2, 1),
            (p.m(&[("a", 1), ("d", 1), ("b", -1)], 1), 2, 1),
            (p.m(&[("a", 1), ("b", -1), ("d", -1)], 2), 2, 1),
            (p.m(&[("a", 1), ("b", -1)], 1), 2, -1),
            (p.m(&[("a", 1), ("b", -1)], 2), 2, -1),
            (p.m(&[("a", 1), ("d", -1)], 2), 2, -1),
            (p.m(&[("a", 1), ("d", 1)], 1), 2, -1),
        ],
        o,
    )
}

fn s_3k1bc(p: &Params, k: i64) -> QProduct {
    one()
        .bracket(3 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .poch(&p.m(&[("b", -1)], 1), 1, k)
        .poch(&p.m(&[("c", -1)], 1), 1, k)
        .poch(&p.m(&[("b", 1), ("c", 1)], 0), 1, k)
        .times(&q(k), 1)
        .over_poch(&p.m(&[("a", 1)], 1), 1, k)
        .over_poch(&p.m(&[("a", -1)], 1), 1, k)
        .over_poch(&q(1), 1, k)
        .over_poch(&p.m(&[("b", 1)], 2), 2, k)
        .over_poch(&p.m(&[("c", 1)], 2), 2, k)
        .over_poch(&p.m(&[("b", -1), ("c", -1)], 3), 2, k)
}

fn r_3k1bc(p: &Params, o: usize) -> Result<Fps> {
    let pre = over_one_minus_q(inf(
        &[
            (p.m(&[("b", -1)], 2), 2, 1),
            (p.m(&[("c", -1)], 2), 2, 1),
            (p.m(&[("b", 1), ("c", 1)], 1), 2, 1),
            (p.m(&[("b", 1)], 2), 2, -1),
            (p.m(&[("c", 1)], 2), 2, -1),
            (p.m(&[("b", -1), ("c", -1)], 3), 2, -1),
        ],
        o,
    )?);
    let p2 = p.clone();
    let inner = fps::sum_terms(
        move |k| {
            Ok(one()
                .poch(&p2.m(&[("b", -1)], 1), 2, k)
                .poch(&p2.m(&[("c", -1)], 1), 2, k)
                .poch(&p2.m(&[("b", 1), ("c", 1)], 0), 2, k)
                .times(&q(2 * k), 1)
                .over_poch(&q(2), 2, k)
                .over_poch(&p2.m(&[("a", 1)], 2), 2, k)
                .over_poch(&p2.m(&[("a", -1)], 2), 2, k))
        },
        |k| 2 * k,
        o,
    )?;
    Ok(pre.mul(&inner))
}

fn s_dixon(p: &Params, k: i64) -> QProduct {
    let a = p.m(&[("a", 1)], 0);
    let mut t = one();
    t.push_factor(&-a.coeff.clone(), 0, 4 * k + 1, 1);
    t.push_factor(&-a.coeff.clone(), 0, 1, -1);
    t.poch(&p.m(&[("a", 2)], 2), 4, k)
        .poch(&p.m(&[("b", 1)], 2), 4, k)
        .poch(&p.m(&[("c", 1)], 2), 4, k)
        .over_poch(&p.m(&[("a", 2), ("b", -1)], 4), 4, k)
        .over_poch(&p.m(&[("a", 2), ("c", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
        .times(&p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), k)
}

fn r_dixon(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (p.m(&[("a", 2)], 6), 4, 1),
            (p.m(&[("a", 1), ("b", -1)], 3), 4, 1),
            (p.m(&[("a", 1), ("c", -1)], 3), 4, 1),
            (p.m(&[("a", 2), ("b", -1), ("c", -1)], 2), 4, 1),
            (p.m(&[("a", 2), ("b", -1)], 4), 4, -1),
            (p.m(&[("a", 2), ("c", -1)], 4), 4, -1),
            (p.m(&[("a", 1)], 5), 4, -1),
            (p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), 4, -1),
        ],
        o,
    )
}

fn s_andrews(p: &Params, k: i64) -> QProduct {
    one()
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("b", 1)], 1), 2, k)
        .times(&q(k * k + k), 1)
        .over_poch(&q(2), 2, k)
        .over_poch(&p.m(&[("a", 1), ("b", 1)], 4), 4, k)
}

fn r_andrews(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (p.m(&[("a", 1)], 3), 4, 1),
            (p.m(&[("b", 1)], 3), 4, 1),
            (q(2), 4, -1),
            (p.m(&[("a", 1), ("b", 1)], 4), 4, -1),
        ],
        o,
    )
}

fn s_4k1a(p: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .times(&q(k * k), 1)
        .bracket(4 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .over_poch(&p.m(&[("a", 1)], 2), 2, k)
        .over_poch(&p.m(&[("a", -1)], 2), 2, k)
        .over_poch(&q(2), 2, k)
}

fn r_4k1a(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (q(1), 2, 1),
            (q(3), 2, 1),
            (p.m(&[("a", 1)], 2), 2, -1),
            (p.m(&[("a", -1)], 2), 2, -1),
        ],
        o,
    )
}

fn s_4k1b(p: &Params, k: i64) -> QProduct {
    one()
        .bracket(4 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&p.m(&[("b", 1)], 0), 2, k)
        .poch(&q(1), 2, k)
        .over_poch(&p.m(&[("a", 1)], 2), 2, k)
        .over_poch(&p.m(&[("a", -1)], 2), 2, k)
        .over_poch(&p.m(&[("b", -1)], 3), 2, k)
        .over_poch(&q(2), 2, k)
        .times(&p.m(&[("b", -1)], 1), k)
}

fn r_4k1b(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (q(3), 2, 1),
            (q(1), 2, 1),
            (p.m(&[("a", -1), ("b", -1)], 2), 2, 1),
            (p.m(&[("a", 1), ("b", -1)], 2), 2, 1),
            (p.m(&[("a", 1)], 2), 2, -1),
            (p.m(&[("a", -1)], 2), 2, -1),
            (p.m(&[("b", -1)], 3), 2, -1),
            (p.m(&[("b", -1)], 1), 2, -1),
        ],
        o,
    )
}

fn s_6k1a(p: &Params, k: i64) -> QProduct {
    one()
        .times(&q(k * k), 1)
        .bracket(6 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(2), 4, k)
        .over_poch(&p.m(&[("a", 1)], 4), 4, k)
        .over_poch(&p.m(&[("a", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
}

fn r_6k1a(p: &Params, o: usize) -> Result<Fps> {
    Ok(over_one_minus_q(inf(
        &[
            (p.m(&[("a", 1)], 2), 4, 1),
            (p.m(&[("a", -1)], 2), 4, 1),
            (p.m(&[("a", 1)], 4), 4, -1),
            (p.m(&[("a", -1)], 4), 4, -1),
        ],
        o,
    )?))
}

fn s_6k1a_alt(p: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .bracket(6 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .times(&q(3 * k * k), 1)
        .over_poch(&p.m(&[("a", 1)], 4), 4, k)
        .over_poch(&p.m(&[("a", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
}

fn r_6k1a_alt(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (q(3), 4, 1),
            (q(5), 4, 1),
            (p.m(&[("a", 1)], 4), 4, -1),
            (p.m(&[("a", -1)], 4), 4, -1),
        ],
        o,
    )
}

fn s_6k1ab(p: &Params, k: i64) -> QProduct {
    one()
        .bracket(6 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .poch(&p.m(&[("b", 1)], 0), 4, k)
        .times(&q(k * k + 2 * k), 1)
        .over_poch(&p.m(&[("a", 1)], 4), 4, k)
        .over_poch(&p.m(&[("a", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
        .over_poch(&p.m(&[("b", -1)], 3), 2, k)
        .times(&p.m(&[("b", -1)], 0), k)
}

fn r_6k1ab(p: &Params, o: usize) -> Result<Fps> {
    inf(
        &[
            (q(3), 4, 1),
            (q(5), 4, 1),
            (p.m(&[("a", 1), ("b", -1)], 4), 4, 1),
            (p.m(&[("a", -1), ("b", -1)], 4), 4, 1),
            (p.m(&[("b", -1)], 3), 4, -1),
            (p.m(&[("b", -1)], 5), 4, -1),
            (p.m(&[("a", 1)], 4), 4, -1),
            (p.m(&[("a", -1)], 4), 4, -1),
        ],
        o,
    )
}

fn lo_2k2(k: i64) -> i64 {
    2 * k * k
}
fn lo_3k2(k: i64) -> i64 {
    3 * k * k
}
fn lo_k2(k: i64) -> i64 {
    k * k
}
fn lo_k(k: i64) -> i64 {
    k
}
fn lo_tri(k: i64) -> i64 {
    k * (k + 1) / 2
}
fn lo_k2k(k: i64) -> i64 {
    k * k + k
}
fn lo_unit(k: i64) -> i64 {
    if k == 0 {
        0
    } else {
        i64::MAX
    }
}

const A: &[(&str, i64, i64)] = &[("a", 2, 1)];
const AB: &[(&str, i64, i64)] = &[("a", 2, 1), ("b", 5, 7)];
const AC: &[(&str, i64, i64)] = &[("a", 2, 1), ("c", 1, 3)];
const ABC: &[(&str, i64, i64)] = &[("a", 2, 1), ("b", 5, 7), ("c", -3, 2)];
const ABCD: &[(&str, i64, i64)] = &[("a", 2, 1), ("b", 5, 7), ("c", -3, 2), ("d", 1, 3)];
const ABD: &[(&str, i64, i64)] = &[("a", 2, 1), ("b", 5, 7), ("d", -3, 2)];

pub static SERIES: &[SeriesIdentity] = &[
    SeriesIdentity {
        id: "ramanujan-8k1",
        display: "sum q^(2k^2) (q;q^2)_k^2 (q;q^2)_2k / ((q^2;q^2)_2k (q^6;q^6)_k^2) [8k+1] = (q^3;q^2)_inf (q^3;q^6)_inf / ((q^2;q^2)_inf (q^6;q^6)_inf)",
        params: &[],
        lower: lo_2k2,
        term: s_ram,
        rhs: r_ram,
    },
    SeriesIdentity {
        id: "sum-6k1-alternating",
        display: "sum (-1)^k (q;q^2)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^(3k^2) = (q^3;q^4)_inf (q^5;q^4)_inf / (-q^4;q^4)_inf^2",
        params: &[],
        lower: lo_3k2,
        term: s_6k1_minus,
        rhs: r_6k1_minus,
    },
    SeriesIdentity {
        id: "sum-6k1",
        display: "sum (q^2;q^4)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^(k^2) = (-q^2;q^4)_inf^2 / ((1-q) (-q^4;q^4)_inf^2)",
        params: &[],
        lower: lo_k2,
        term: s_6k1_plus,
        rhs: r_6k1_plus,
    },
    SeriesIdentity {
        id: "cubic-transformation",
        display: "sum (1-acq^(4k)) (a;q)_k (q/a;q)_k (ac;q)_2k / ((1-ac) (cq^3;q^3)_k (a^2cq^2;q^3)_k (q;q)_2k) q^(k^2) = (acq^2;q^3)_inf (acq^3;q^3)_inf (aq;q^3)_inf (q^2/a;q^3)_inf / ((q;q^3)_inf (q^2;q^3)_inf (a^2cq^2;q^3)_inf (cq^3;q^3)_inf)",
        params: AC,
        lower: lo_k2,
        term: s_cubic,
        rhs: r_cubic,
    },
    SeriesIdentity {
        id: "param-8k1",
        display: "sum [8k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_2k / ((q^2;q^2)_2k (aq^6;q^6)_k (q^6/a;q^6)_k) q^(2k^2) = (q^5;q^6)_inf (q^7;q^6)_inf (aq^3;q^6)_inf (q^3/a;q^6)_inf / ((q^2;q^6)_inf (q^4;q^6)_inf (aq^6;q^6)_inf (q^6/a;q^6)_inf)",
        params: A,
        lower: lo_2k2,
        term: s_8k1a,
        rhs: r_8k1a,
    },
    SeriesIdentity {
        id: "product-6",
        display: "(q^5;q^6)_inf (q^7;q^6)_inf / ((q^2;q^6)_inf (q^4;q^6)_inf) = (q;q^2)_inf (q^6;q^6)_inf / ((1-q) (q^2;q^2)_inf (q^3;q^6)_inf)",
        params: &[],
        lower: lo_unit,
        term: s_unit,
        rhs: r_omega3,
    },
    SeriesIdentity {
        id: "vwp-6phi5",
        display: "sum (1-aq^(2k)) (a;q)_k (b;q)_k (c;q)_k (d;q)_k / ((1-a) (q;q)_k (aq/b;q)_k (aq/c;q)_k (aq/d;q)_k) (aq/bcd)^k = (aq;q)_inf (aq/bc;q)_inf (aq/bd;q)_inf (aq/cd;q)_inf / ((aq/b;q)_inf (aq/c;q)_inf (aq/d;q)_inf (aq/bcd;q)_inf)",
        params: ABCD,
        lower: lo_k,
        term: s_6phi5,
        rhs: r_6phi5,
    },
    SeriesIdentity {
        id: "quadratic",
        display: "sum (a;q)_k (1-aq^(3k)) (d;q)_k (q/d;q)_k (b;q^2)_k / ((q^2;q^2)_k (1-a) (aq^2/d;q^2)_k (adq;q^2)_k (aq/b;q)_k) a^k q^(k(k+1)/2) / b^k = (aq;q^2)_inf (aq^2;q^2)_inf (adq/b;q^2)_inf (aq^2/bd;q^2)_inf / ((aq/b;q^2)_inf (aq^2/b;q^2)_inf (aq^2/d;q^2)_inf (adq;q^2)_inf)",
        params: ABD,
        lower: lo_tri,
        term: s_quadratic,
        rhs: r_quadratic,
    },
    SeriesIdentity {
        id: "transformation-3k1",
        display: "sum [3k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k (q/b;q)_k (q/c;q)_k (bc;q)_k q^k / ((aq;q)_k (q/a;q)_k (q;q)_k (bq^2;q^2)_k (cq^2;q^2)_k (q^3/bc;q^2)_k) = (q^2/b;q^2)_inf (q^2/c;q^2)_inf (bcq;q^2)_inf / ((1-q) (bq^2;q^2)_inf (cq^2;q^2)_inf (q^3/bc;q^2)_inf) sum (q/b;q^2)_k (q/c;q^2)_k (bc;q^2)_k q^(2k) / ((q^2;q^2)_k (aq^2;q^2)_k (q^2/a;q^2)_k)",
        params: ABC,
        lower: lo_k,
        term: s_3k1bc,
        rhs: r_3k1bc,
    },
    SeriesIdentity {
        id: "q-dixon",
        display: "sum (1+aq^(4k+1)) (a^2q^2;q^4)_k (bq^2;q^4)_k (cq^2;q^4)_k / ((1+aq) (a^2q^4/b;q^4)_k (a^2q^4/c;q^4)_k (q^4;q^4)_k) (aq/bc)^k = (a^2q^6;q^4)_inf (aq^3/b;q^4)_inf (aq^3/c;q^4)_inf (a^2q^2/bc;q^4)_inf / ((a^2q^4/b;q^4)_inf (a^2q^4/c;q^4)_inf (aq^5;q^4)_inf (aq/bc;q^4)_inf)",
        params: ABC,
        lower: lo_k,
        term: s_dixon,
        rhs: r_dixon,
    },
    SeriesIdentity {
        id: "andrews-gauss",
        display: "sum (aq;q^2)_k (bq;q^2)_k q^(k^2+k) / ((q^2;q^2)_k (abq^4;q^4)_k) = (aq^3;q^4)_inf (bq^3;q^4)_inf / ((q^2;q^4)_inf (abq^4;q^4)_inf)",
        params: AB,
        lower: lo_k2k,
        term: s_andrews,
        rhs: r_andrews,
    },
    SeriesIdentity {
        id: "param-4k1",
        display: "sum (-1)^k q^(k^2) [4k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k / ((aq^2;q^2)_k (q^2/a;q^2)_k (q^2;q^2)_k) = (q;q^2)_inf (q^3;q^2)_inf / ((aq^2;q^2)_inf (q^2/a;q^2)_inf)",
        params: A,
        lower: lo_k2,
        term: s_4k1a,
        rhs: r_4k1a,
    },
    SeriesIdentity {
        id: "param-4k1-b",
        display: "sum [4k+1] (aq;q^2)_k (q/a;q^2)_k (b;q^2)_k (q;q^2)_k / ((aq^2;q^2)_k (q^2/a;q^2)_k (q^3/b;q^2)_k (q^2;q^2)_k) (q/b)^k = (q^3;q^2)_inf (q;q^2)_inf (q^2/ab;q^2)_inf (aq^2/b;q^2)_inf / ((aq^2;q^2)_inf (q^2/a;q^2)_inf (q^3/b;q^2)_inf (q/b;q^2)_inf)",
        params: AB,
        lower: lo_k,
        term: s_4k1b,
        rhs: r_4k1b,
    },
    SeriesIdentity {
        id: "param-6k1",
        display: "sum q^(k^2) [6k+1] (aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k) = (aq^2;q^4)_inf (q^2/a;q^4)_inf / ((1-q) (aq^4;q^4)_inf (q^4/a;q^4)_inf)",
        params: A,
        lower: lo_k2,
        term: s_6k1a,
        rhs: r_6k1a,
    },
    SeriesIdentity {
        id: "param-6k1-alternating",
        display: "sum (-1)^k [6k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k q^(3k^2) / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k) = (q^3;q^4)_inf (q^5;q^4)_inf / ((aq^4;q^4)_inf (q^4/a;q^4)_inf)",
        params: A,
        lower: lo_3k2,
        term: s_6k1a_alt,
        rhs: r_6k1a_alt,
    },
    SeriesIdentity {
        id: "param-6k1-b",
        display: "sum [6k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k (b;q^4)_k q^(k^2+2k) / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k (q^3/b;q^2)_k b^k) = (q^3;q^4)_inf (q^5;q^4)_inf (aq^4/b;q^4)_inf (q^4/ab;q^4)_inf / ((q^3/b;q^4)_inf (q^5/b;q^4)_inf (aq^4;q^4)_inf (q^4/a;q^4)_inf)",
        params: AB,
        lower: lo_k2,
        term: s_6k1ab,
        rhs: r_6k1ab,
    },
];

pub fn series(id: &str) -> Result<&'static SeriesIdentity> {
    SERIES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

impl SeriesIdentity {
    /// The default samples overridden by `given`.
    pub fn params_with(&self, given: &Params) -> Params {
        let mut p = Params::new();
        for (name, n, d) in self.params {
            let v = match given.get(name) {
                Some(v @ ParamVal::Val { .. }) => v.clone(),
                _ => ParamVal::rational(rat(*n, *d)),
            };
            p.set(name, v);
        }
        p
    }

    pub fn lhs(&self, p: &Params, order: usize) -> Result<Fps> {
        fps::sum_terms(|k| Ok((self.term)(p, k)), self.lower, order)
    }
}

/// Coefficientwise comparison of both sides through `q^order`.
pub fn verify_series(id: &str, given: &Params, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let s = series(id)?;
    let p = s.params_with(given);
    let mut rep = VerificationReport::new(s.id, Status::Theorem).param("order", order);
    for (k, v) in p.iter() {
        rep = rep.param(k, v);
    }
    let lhs = s.lhs(&p, order)?;
    let rhs = (s.rhs)(&p, order)?;
    let diff = lhs.first_difference(&rhs);
    rep.push_part(PartReport {
        modulus_part: format!("q^{}", order + 1),
        divisible: diff.is_none(),
        coprime: true,
        valuation: diff.map(|i| i as i64),
    });
    if let Some(i) = diff {
        rep.note(format!("first differing coefficient at q^{}", i));
    }
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}

// ----- finite identities ----------------------------------------------------

fn f_6phi5(p: &Params, n: i64, k: i64) -> QProduct {
    let a = p.m(&[("a", 1)], 0);
    let mut t = one();
    t.push_factor(&a.coeff, a.aexp, 2 * k, 1);
    t.push_factor(&a.coeff, a.aexp, 0, -1);
    t.poch(&a, 1, k)
        .poch(&p.m(&[("b", 1)], 0), 1, k)
        .poch(&p.m(&[("c", 1)], 0), 1, k)
        .poch(&q(-n), 1, k)
        .over_poch(&q(1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("c", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1)], n + 1), 1, k)
        .times(&p.m(&[("a", 1), ("b", -1), ("c", -1)], n + 1), k)
}

fn g_6phi5(p: &Params, n: i64) -> Vec<QProduct> {
    vec![one()
        .poch(&p.m(&[("a", 1)], 1), 1, n)
        .poch(&p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("c", -1)], 1), 1, n)]
}

/// Jackson's summation with `e = a^2 q^{N+1}/(bcd)`.
fn f_jackson(p: &Params, n: i64, k: i64) -> QProduct {
    let a = p.m(&[("a", 1)], 0);
    let mut t = one();
    t.push_factor(&a.coeff, a.aexp, 2 * k, 1);
    t.push_factor(&a.coeff, a.aexp, 0, -1);
    t.poch(&a, 1, k)
        .poch(&p.m(&[("b", 1)], 0), 1, k)
        .poch(&p.m(&[("c", 1)], 0), 1, k)
        .poch(&p.m(&[("d", 1)], 0), 1, k)
        .poch(&p.m(&[("a", 2), ("b", -1), ("c", -1), ("d", -1)], n + 1), 1, k)
        .poch(&q(-n), 1, k)
        .over_poch(&q(1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("c", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", 1), ("d", -1)], 1), 1, k)
        .over_poch(&p.m(&[("a", -1), ("b", 1), ("c", 1), ("d", 1)], -n), 1, k)
        .over_poch(&p.m(&[("a", 1)], n + 1), 1, k)
        .times(&q(k), 1)
}

fn g_jackson(p: &Params, n: i64) -> Vec<QProduct> {
    vec![one()
        .poch(&p.m(&[("a", 1)], 1), 1, n)
        .poch(&p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), 1, n)
        .poch(&p.m(&[("a", 1), ("b", -1), ("d", -1)], 1), 1, n)
        .poch(&p.m(&[("a", 1), ("c", -1), ("d", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("b", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("c", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("d", -1)], 1), 1, n)
        .over_poch(&p.m(&[("a", 1), ("b", -1), ("c", -1), ("d", -1)], 1), 1, n)]
}

fn f_saalschutz(p: &Params, n: i64, k: i64) -> QProduct {
    one()
        .poch(&q(-n), 1, k)
        .poch(&p.m(&[("a", 1)], 0), 1, k)
        .poch(&p.m(&[("b", 1)], 0), 1, k)
        .over_poch(&q(1), 1, k)
        .over_poch(&p.m(&[("c", 1)], 0), 1, k)
        .over_poch(&p.m(&[("a", 1), ("b", 1), ("c", -1)], 1 - n), 1, k)
        .times(&q(k), 1)
}

fn g_saalschutz(p: &Params, n: i64) -> Vec<QProduct> {
    vec![one()
        .poch(&p.m(&[("c", 1), ("a", -1)], 0), 1, n)
        .poch(&p.m(&[("c", 1), ("b", -1)], 0), 1, n)
        .over_poch(&p.m(&[("c", 1)], 0), 1, n)
        .over_poch(&p.m(&[("c", 1), ("a", -1), ("b", -1)], 0), 1, n)]
}

pub static FINITE: &[FiniteIdentity] = &[
    FiniteIdentity {
        id: "terminating-6phi5",
        display: "sum_{k<=N} (1-aq^(2k)) (a;q)_k (b;q)_k (c;q)_k (q^-N;q)_k / ((1-a) (q;q)_k (aq/b;q)_k (aq/c;q)_k (aq^(N+1);q)_k) (aq^(N+1)/bc)^k = (aq;q)_N (aq/bc;q)_N / ((aq/b;q)_N (aq/c;q)_N)",
        params: &["a", "b", "c"],
        term: f_6phi5,
        rhs: g_6phi5,
    },
    FiniteIdentity {
        id: "jackson-8phi7",
        display: "sum_{k<=N} (1-aq^(2k)) (a,b,c,d,e,q^-N;q)_k / ((1-a) (q,aq/b,aq/c,aq/d,aq/e,aq^(N+1);q)_k) q^k = (aq,aq/bc,aq/bd,aq/cd;q)_N / (aq/b,aq/c,aq/d,aq/bcd;q)_N, e = a^2q^(N+1)/bcd",
        params: &["a", "b", "c", "d"],
        term: f_jackson,
        rhs: g_jackson,
    },
    FiniteIdentity {
        id: "q-saalschutz",
        display: "sum_{k<=N} (q^-N;q)_k (a;q)_k (b;q)_k / ((q;q)_k (c;q)_k (abq^(1-N)/c;q)_k) q^k = (c/a;q)_N (c/b;q)_N / ((c;q)_N (c/ab;q)_N)",
        params: &["a", "b", "c"],
        term: f_saalschutz,
        rhs: g_saalschutz,
    },
];

pub fn finite(id: &str) -> Result<&'static FiniteIdentity> {
    FINITE
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

impl FiniteIdentity {
    fn difference(&self, p: &Params, n: i64) -> Vec<QProduct> {
        let lhs = (0..=n).map(|k| (self.term)(p, n, k)).collect();
        difference(lhs, &(self.rhs)(p, n))
    }
}

/// Baseline values for the sampled parameters.
const BASE: [(i64, i64); 4] = [(7, 3), (5, 11), (-2, 9), (13, 4)];

/// Checks the identity at one `N` with the first parameter symbolic. Each
/// other parameter in turn runs over more samples than its degree in the
/// difference while the rest stay at baseline values.
pub fn verify_finite(id: &str, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let f = finite(id)?;
    let mut rep = VerificationReport::new(f.id, Status::Theorem).param("N", n);
    let sym = f.params[0];
    let mut base = Params::new().with(sym, ParamVal::Symbolic);
    for (name, (u, v)) in f.params[1..].iter().zip(BASE) {
        base.set(name, ParamVal::rational(rat(u, v)));
    }
    let mut samples_used = 0usize;
    for name in &f.params[1..] {
        // degree in `name`, with the symbolic slot moved onto it
        let mut probe = base.clone();
        probe.set(sym, ParamVal::rational(rat(17, 5)));
        probe.set(name, ParamVal::Symbolic);
        let probe_terms = f.difference(&probe, n);
        let deg = a_degree_bound(&probe_terms);
        let values = good_samples(&probe_terms, deg + 1);
        let mut ok = true;
        let mut note = None;
        for x in &values {
            let mut p = base.clone();
            p.set(name, ParamVal::rational(x.clone()));
            match exact_zero(&f.difference(&p, n)) {
                Ok((z, nt)) => {
                    ok &= z;
                    note = note.or(nt);
                }
                Err(e) => {
                    ok = false;
                    note = Some(e.to_string());
                }
            }
        }
        samples_used += values.len();
        rep.push_part(PartReport {
            modulus_part: format!("identity, {} over {} samples", name, values.len()),
            divisible: ok,
            coprime: true,
            valuation: None,
        });
        if let Some(nt) = note {
            if !rep.mode_notes.contains(&nt) {
                rep.note(nt);
            }
        }
    }
    rep.note(format!("{} symbolic; {} parameter samples in total", sym, samples_used));
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}
