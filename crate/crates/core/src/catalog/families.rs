//! Summands, right sides and moduli of the truncated-sum families.

use num_traits::One;

use super::{Case, Piece, SumFamily, Target, Trunc};
use crate::arith::{gcd_u64, kronecker_i64, least_residue_frac, rat, rat_int, Rational};
use crate::congruence::{Modulus, Status};
use crate::qsymbols::{Mono, Params, QProduct};

type Adm = std::result::Result<(), String>;

const BOTH: &[Trunc] = &[Trunc::Full, Trunc::Half];
const FULL: &[Trunc] = &[Trunc::Full];
const HALF: &[Trunc] = &[Trunc::Half];

fn q(e: i64) -> Mono {
    Mono::q(e)
}

fn nq(e: i64) -> Mono {
    Mono::new(rat_int(-1), 0, e)
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        rat_int(-1)
    }
}

fn one() -> QProduct {
    QProduct::one()
}

/// `(1 - x)^m`.
fn one_minus(mut t: QProduct, x: &Mono, m: i64) -> QProduct {
    t.push_factor(&x.coeff, x.aexp, x.qexp, m);
    t
}

/// `c q^e [n]^m`.
fn qbr(c: Rational, e: i64, n: i64, m: i64) -> QProduct {
    QProduct::scalar(c).times(&q(e), 1).bracket(n, m)
}

fn always(_: &Case) -> bool {
    true
}

fn no_rhs(_: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    Vec::new()
}

// ----- truncations and constraints ---------------------------------------

fn up_std(c: &Case, t: Trunc) -> i64 {
    match t {
        Trunc::Full => c.n - 1,
        Trunc::Half => c.half(),
    }
}

fn up_full(c: &Case, _: Trunc) -> i64 {
    c.n - 1
}

fn up_half(c: &Case, _: Trunc) -> i64 {
    c.half()
}

fn up_n(c: &Case, _: Trunc) -> i64 {
    c.n
}

fn up_48(c: &Case, t: Trunc) -> i64 {
    match t {
        Trunc::Full => c.n - 1,
        Trunc::Half => (c.n - c.r) / c.d,
    }
}

fn up_49(c: &Case, t: Trunc) -> i64 {
    match t {
        Trunc::Full => c.n - 1,
        Trunc::Half => ((c.d - 1) * c.n - c.r) / c.d,
    }
}

fn odd(c: &Case) -> Adm {
    if c.n >= 1 && c.n % 2 == 1 {
        Ok(())
    } else {
        Err(format!("n = {} must be a positive odd integer", c.n))
    }
}

fn coprime6(c: &Case) -> Adm {
    if c.n >= 1 && gcd_u64(c.n as u64, 6) == 1 {
        Ok(())
    } else {
        Err(format!("n = {} must be coprime to 6", c.n))
    }
}

fn coprime6_gt1(c: &Case) -> Adm {
    coprime6(c)?;
    if c.n > 1 {
        Ok(())
    } else {
        Err("n must exceed 1".into())
    }
}

fn mod4(c: &Case, r: i64) -> Adm {
    if c.n >= 1 && c.n % 4 == r {
        Ok(())
    } else {
        Err(format!("n = {} must be {} mod 4", c.n, r))
    }
}

fn n1mod4(c: &Case) -> Adm {
    mod4(c, 1)?;
    if c.n > 1 {
        Ok(())
    } else {
        Err("n must exceed 1".into())
    }
}

fn n3mod4(c: &Case) -> Adm {
    mod4(c, 3)
}

fn positive(c: &Case) -> Adm {
    if c.n >= 1 {
        Ok(())
    } else {
        Err("n must be positive".into())
    }
}

fn adm_48(c: &Case) -> Adm {
    let (n, d, r) = (c.n, c.d, c.r);
    if d < 1 || n < 1 {
        return Err("need d >= 1 and n >= 1".into());
    }
    if gcd_u64(r.unsigned_abs(), d as u64) != 1 {
        return Err(format!("gcd(r, d) = gcd({}, {}) must be 1", r, d));
    }
    if (n - r).rem_euclid(d) != 0 {
        return Err(format!("n = {} must be r = {} mod d = {}", n, r, d));
    }
    if !(n + d - n * d <= r && r <= n) {
        return Err("need n + d - nd <= r <= n".into());
    }
    Ok(())
}

fn adm_49(c: &Case) -> Adm {
    let (n, d, r) = (c.n, c.d, c.r);
    if d < 1 || n < 1 {
        return Err("need d >= 1 and n >= 1".into());
    }
    if gcd_u64(r.unsigned_abs(), d as u64) != 1 {
        return Err(format!("gcd(r, d) = gcd({}, {}) must be 1", r, d));
    }
    if (n + r).rem_euclid(d) != 0 {
        return Err(format!("n = {} must be -r = {} mod d = {}", n, -r, d));
    }
    if !(d - n <= r && r <= (d - 1) * n) {
        return Err("need d - n <= r <= (d-1)n".into());
    }
    Ok(())
}

fn adm_minus1_mod_d(c: &Case, dmin: i64) -> Adm {
    if c.d < dmin || c.n < 1 {
        return Err(format!("need d >= {} and n >= 1", dmin));
    }
    if (c.n + 1) % c.d != 0 {
        return Err(format!("n = {} must be -1 mod d = {}", c.n, c.d));
    }
    Ok(())
}

fn adm_c52(c: &Case) -> Adm {
    adm_minus1_mod_d(c, 2)
}

fn adm_c53(c: &Case) -> Adm {
    adm_minus1_mod_d(c, 3)?;
    if c.d > 5 {
        return Err("parameter list covers d <= 5".into());
    }
    Ok(())
}

fn adm_c54(c: &Case) -> Adm {
    if c.d < 2 || c.d > 5 || c.n < 2 {
        return Err("need 2 <= d <= 5 and n > 1".into());
    }
    if c.n % c.d != 1 % c.d {
        return Err(format!("n = {} must be 1 mod d = {}", c.n, c.d));
    }
    Ok(())
}

fn adm_dnr(c: &Case) -> Adm {
    odd(c)?;
    if !(c.r >= 1 && c.r < c.d) {
        return Err("need 1 <= r < d".into());
    }
    if gcd_u64(c.d as u64, c.n as u64) != 1 {
        return Err("need gcd(d, n) = 1".into());
    }
    Ok(())
}

fn adm_gz_general(c: &Case) -> Adm {
    odd(c)?;
    if c.d < 1 || c.r < 1 {
        return Err("need d, r >= 1".into());
    }
    if gcd_u64(c.d as u64, c.n as u64) != 1 {
        return Err("need gcd(d, n) = 1".into());
    }
    match least_residue_frac(-c.r, c.d, c.n) {
        Some(v) if v % 2 == 1 => Ok(()),
        Some(v) => Err(format!("<-r/d>_n = {} must be odd", v)),
        None => Err("d not invertible mod n".into()),
    }
}

// ----- moduli ---------------------------------------------------------------

fn a_form(c: &Case) -> Modulus {
    Modulus::bracket(c.n as u64)
        .with_one_minus("a", c.n)
        .with_minus_qn("a", c.n)
}

fn t_a_form(c: &Case) -> Target {
    Target::Modulus(a_form(c))
}

/// `[n](1 - aq^{(d-1)n})(a - q^{(d-1)n})`. With `(1 - aq^n)(a - q^n)` the
/// congruence already fails at `n = 2, d = 3, r = 1`.
fn t_a_form49(c: &Case) -> Target {
    let m = (c.d - 1) * c.n;
    Target::Modulus(
        Modulus::bracket(c.n as u64)
            .with_one_minus("a", m)
            .with_minus_qn("a", m),
    )
}

fn t_a_roots(c: &Case) -> Target {
    Target::Modulus(Modulus::one().with_one_minus("a", c.n).with_minus_qn("a", c.n))
}

fn t_bracket(c: &Case) -> Target {
    Target::Modulus(Modulus::bracket(c.n as u64))
}

fn t_bracket_phi2(c: &Case) -> Target {
    Target::Modulus(Modulus::bracket_phi(c.n as u64, 2))
}

fn t_bracket_phi3(c: &Case) -> Target {
    Target::Modulus(Modulus::bracket_phi(c.n as u64, 3))
}

fn t_bracket_phi1(c: &Case) -> Target {
    Target::Modulus(Modulus::bracket_phi(c.n as u64, 1))
}

fn t_phi1(c: &Case) -> Target {
    Target::Modulus(Modulus::phi(c.n as u64, 1))
}

fn t_phi2(c: &Case) -> Target {
    Target::Modulus(Modulus::phi(c.n as u64, 2))
}

fn t_phi3(c: &Case) -> Target {
    Target::Modulus(Modulus::phi(c.n as u64, 3))
}

fn t_identity(_: &Case) -> Target {
    Target::Identity
}

// ----- the 8k+1 family ------------------------------------------------------

fn t14(_: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, 2 * k)
        .over_poch(&q(2), 2, 2 * k)
        .over_poch(&p.m(&[("a", 1)], 6), 6, k)
        .over_poch(&p.m(&[("a", -1)], 6), 6, k)
        .bracket(8 * k + 1, 1)
        .times(&q(2 * k * k), 1)
}

fn t11(c: &Case, _: &Params, k: i64) -> QProduct {
    t14(c, &Params::new(), k)
}

fn rhs11(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let kr = kronecker_i64(-3, c.n);
    if kr == 0 {
        return Vec::new();
    }
    vec![qbr(rat_int(kr as i64), -c.half(), c.n, 1)]
}

fn t31(c: &Case, _: &Params, k: i64) -> QProduct {
    let p = Params::new().with("a", crate::qsymbols::ParamVal::qpow(Rational::one(), c.n));
    t14(c, &p, k)
}

fn t32(c: &Case, p: &Params, k: i64) -> QProduct {
    let n = c.n;
    let mut t = one();
    t.push_factor(&Rational::one(), 0, 1 - n + 8 * k, 1);
    t.push_factor(&Rational::one(), 0, 1 - n, -1);
    t.poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1 - n), 2, 2 * k)
        .over_poch(&q(2), 2, 2 * k)
        .over_poch(&p.m(&[("a", 1)], 6 - n), 6, k)
        .over_poch(&p.m(&[("a", -1)], 6 - n), 6, k)
        .times(&q(2 * k * k), 1)
}

// ----- the 6k+1 model sums --------------------------------------------------

fn t12(_: &Case, _: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .poch(&q(1), 2, k)
        .poch_pow(&nq(1), 2, k, 2)
        .over_poch(&q(4), 4, k)
        .over_poch_pow(&nq(4), 4, k, 2)
        .bracket(6 * k + 1, 1)
        .times(&q(3 * k * k), 1)
}

fn t13(_: &Case, _: &Params, k: i64) -> QProduct {
    one()
        .poch(&q(2), 4, k)
        .poch_pow(&nq(1), 2, k, 2)
        .over_poch(&q(4), 4, k)
        .over_poch_pow(&nq(4), 4, k, 2)
        .bracket(6 * k + 1, 1)
        .times(&q(k * k), 1)
}

// ----- 4k+1 and 6k+1 parametric sums ----------------------------------------

fn t41(_: &Case, p: &Params, k: i64) -> QProduct {
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

fn tb2(c: &Case, _: &Params, k: i64) -> QProduct {
    t41(c, &Params::new(), k)
}

fn rhs41(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let n = c.n;
    vec![qbr(sign(c.half()), (n - 1) * (n - 1) / 4, n, 1)]
}

fn t42(_: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .bracket(4 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&p.m(&[("c", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .over_poch(&p.m(&[("a", 1)], 2), 2, k)
        .over_poch(&p.m(&[("a", -1)], 2), 2, k)
        .over_poch(&p.m(&[("c", 1)], 2), 2, k)
        .over_poch(&q(2), 2, k)
        .times(&p.m(&[("c", 1)], 0), k)
}

fn rhs42(c: &Case, p: &Params, _: i64) -> Vec<QProduct> {
    let h = c.half();
    vec![one()
        .times(&p.m(&[("c", 1)], -1), h)
        .poch(&p.m(&[("c", -1)], 2), 2, h)
        .over_poch(&p.m(&[("c", 1)], 2), 2, h)
        .bracket(c.n, 1)]
}

fn tc2(c: &Case, _: &Params, k: i64) -> QProduct {
    t42(c, &Params::new(), k)
}

fn rhs_c2(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    vec![qbr(Rational::one(), -c.half(), c.n, 1)]
}

fn t43(_: &Case, p: &Params, k: i64) -> QProduct {
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

fn rhs43(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    vec![qbr(sign(c.half()), -c.half(), c.n, 1)]
}

fn t44(_: &Case, p: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .bracket(6 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .over_poch(&p.m(&[("a", 1)], 4), 4, k)
        .over_poch(&p.m(&[("a", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
}

fn rhs44(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let e = (c.n - 1) * (c.n + 5) / 8;
    vec![qbr(sign(e), -e, c.n, 1)]
}

fn r45(c: &Case) -> i64 {
    if c.n % 4 == 1 {
        1
    } else {
        -1
    }
}

fn t45(_: &Case, p: &Params, k: i64) -> QProduct {
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

fn rhs45(c: &Case, p: &Params, _: i64) -> Vec<QProduct> {
    let r = r45(c);
    let j = (c.n - r) / 4;
    let s = (1 - r) / 2;
    vec![QProduct::scalar(sign(s))
        .times(&q(s), 1)
        .poch(&p.m(&[("b", 1)], r), 4, j)
        .over_poch(&p.m(&[("b", -1)], 4 + r), 4, j)
        .times(&p.m(&[("b", -1)], 0), j)
        .bracket(c.n, 1)]
}

// ----- 3k+1 sums ---------------------------------------------------------------

fn t44bc(_: &Case, p: &Params, k: i64) -> QProduct {
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

fn rhs44bc(c: &Case, p: &Params, _: i64) -> Vec<QProduct> {
    let h = c.half();
    vec![one()
        .poch(&p.m(&[("b", 1), ("c", 1)], 1), 2, h)
        .poch(&p.m(&[("b", -1)], 2), 2, h)
        .poch(&p.m(&[("c", -1)], 2), 2, h)
        .over_poch(&p.m(&[("b", -1), ("c", -1)], 3), 2, h)
        .over_poch(&p.m(&[("b", 1)], 2), 2, h)
        .over_poch(&p.m(&[("c", 1)], 2), 2, h)
        .bracket(c.n, 1)]
}

fn t47(_: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .bracket(3 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&p.m(&[("b", 1)], 0), 1, k)
        .poch(&p.m(&[("b", -1)], 1), 1, k)
        .poch(&q(1), 2, k)
        .times(&q(k), 1)
        .over_poch(&p.m(&[("a", 1)], 1), 1, k)
        .over_poch(&p.m(&[("a", -1)], 1), 1, k)
        .over_poch(&p.m(&[("b", 1)], 2), 2, k)
        .over_poch(&p.m(&[("b", -1)], 3), 2, k)
        .over_poch(&q(2), 2, k)
}

fn rhs47(c: &Case, p: &Params, _: i64) -> Vec<QProduct> {
    let h = c.half();
    vec![one()
        .poch(&p.m(&[("b", 1)], 1), 2, h)
        .poch(&p.m(&[("b", -1)], 2), 2, h)
        .over_poch(&p.m(&[("b", 1)], 2), 2, h)
        .over_poch(&p.m(&[("b", -1)], 3), 2, h)
        .bracket(c.n, 1)]
}

fn t_div1(_: &Case, _: &Params, k: i64) -> QProduct {
    one()
        .bracket(3 * k + 1, 1)
        .poch_pow(&q(1), 2, k, 3)
        .times(&q(-k * (k + 1) / 2), 1)
        .over_poch_pow(&q(1), 1, k, 2)
        .over_poch(&q(2), 2, k)
}

fn rhs_div1(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    vec![qbr(Rational::one(), -c.half(), c.n, 1)]
}

fn t_div2(_: &Case, _: &Params, k: i64) -> QProduct {
    QProduct::scalar(sign(k))
        .bracket(3 * k + 1, 1)
        .poch_pow(&q(1), 2, k, 3)
        .over_poch_pow(&q(1), 1, k, 3)
}

/// `(n^2-1)/24 · (1-q)^2 · c q^e [n]^3`.
fn cubic_correction(n: i64, c: Rational, e: i64) -> QProduct {
    let mut t = qbr(c * rat(n * n - 1, 24), e, n, 3);
    t.push_factor(&Rational::one(), 0, 1, 2);
    t
}

fn rhs_guo47(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let h = c.half();
    vec![
        qbr(Rational::one(), -h, c.n, 1),
        cubic_correction(c.n, Rational::one(), -h),
    ]
}

fn t_j2(c: &Case, _: &Params, k: i64) -> QProduct {
    t43(c, &Params::new(), k)
}

fn rhs_j2full(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let h = c.half();
    vec![
        qbr(sign(h), -h, c.n, 1),
        cubic_correction(c.n, sign(h), -h),
    ]
}

fn t43_special(_: &Case, _: &Params, k: i64) -> QProduct {
    let mut t = one();
    t.push_factor(&Rational::one(), 0, 6 * k + 2, 1);
    t.push_factor(&Rational::one(), 0, 2, -1);
    t.poch_pow(&q(1), 2, k, 2)
        .poch_pow(&q(2), 4, k, 3)
        .times(&q(2 * k), 1)
        .over_poch_pow(&q(2), 2, k, 2)
        .over_poch(&q(4), 4, k)
        .over_poch_pow(&q(5), 4, k, 2)
}

// ----- (d, r) families ------------------------------------------------------

fn t48(c: &Case, p: &Params, k: i64) -> QProduct {
    let (d, r) = (c.d, c.r);
    QProduct::scalar(sign(k))
        .times(&q(d * k * (k + 1) / 2 - r * k), 1)
        .bracket(2 * d * k + r, 1)
        .poch(&p.m(&[("a", 1)], r), d, k)
        .poch(&p.m(&[("a", -1)], r), d, k)
        .poch(&q(r), d, k)
        .over_poch(&p.m(&[("a", 1)], d), d, k)
        .over_poch(&p.m(&[("a", -1)], d), d, k)
        .over_poch(&q(d), d, k)
}

fn rhs48(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let (n, d, r) = (c.n, c.d, c.r);
    let e = (n - r) * (n - d + r) / (2 * d);
    vec![qbr(sign((n - r) / d), e, n, 1)]
}

fn rhs49(c: &Case, _: &Params, _: i64) -> Vec<QProduct> {
    let (n, d, r) = (c.n, c.d, c.r);
    let e = (n * d - n - r) * (n * d - n - d + r) / (2 * d);
    vec![qbr(sign(((d - 1) * n - r) / d), e, (d - 1) * n, 1)]
}

fn t410(c: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .bracket(4 * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("a", -1)], 1), 2, k)
        .poch(&q(1), 2, k)
        .times(&q((c.n - 1) * k / 2), 1)
        .over_poch(&p.m(&[("a", 1)], 2), 2, k)
        .over_poch(&p.m(&[("a", -1)], 2), 2, k)
        .over_poch(&q(2), 2, k)
}

fn t_strange(c: &Case, _: &Params, k: i64) -> QProduct {
    let n = c.n;
    one()
        .bracket(4 * k + 1, 1)
        .poch_pow(&q(1), 2, k, 3)
        .over_poch_pow(&q(2), 2, k, 3)
        .times(&q(k * (n * n - 2 * n * k - n - 2) / 4), 1)
}

// ----- q-Dixon and Andrews --------------------------------------------------

fn t_dixon(_: &Case, p: &Params, k: i64) -> QProduct {
    let t = one_minus(one(), &p.mono(rat_int(-1), &[("a", 1)], 4 * k + 1), 1);
    let t = one_minus(t, &p.mono(rat_int(-1), &[("a", 1)], 1), -1);
    t.poch(&p.m(&[("a", 2)], 2), 4, k)
        .poch(&p.m(&[("b", 1)], 2), 4, k)
        .poch(&p.m(&[("c", 1)], 2), 4, k)
        .over_poch(&p.m(&[("a", 2), ("b", -1)], 4), 4, k)
        .over_poch(&p.m(&[("a", 2), ("c", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
        .times(&p.m(&[("a", 1), ("b", -1), ("c", -1)], 1), k)
}

fn t_dixon1(c: &Case, _: &Params, k: i64) -> QProduct {
    t_dixon(c, &Params::new(), k)
}

fn t_dixon_a(c: &Case) -> Target {
    Target::Modulus(Modulus::one().with_one_minus_square("a", c.n).freeing("b"))
}

fn t_dixon_spec(c: &Case) -> Target {
    let n = c.n as u64;
    Target::Modulus(Modulus::phi(n, 1).times(&Modulus::phi(2 * n, 1)))
}

fn t_dixon_refine(c: &Case) -> Target {
    let n = c.n as u64;
    Target::Modulus(Modulus::phi(n, 2).times(&Modulus::phi(2 * n, 1)))
}

fn t_andrews(_: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("b", 1)], 1), 2, k)
        .times(&q(2 * k), 1)
        .over_poch(&q(2), 2, k)
        .over_poch(&p.m(&[("a", 1), ("b", 1)], 4), 4, k)
}

fn t_andrews1(c: &Case, _: &Params, k: i64) -> QProduct {
    t_andrews(c, &Params::new(), k)
}

fn ab_roots(na: i64, nb: i64) -> Modulus {
    Modulus::one()
        .with_one_minus("a", na)
        .freeing("b")
        .with_one_minus("b", nb)
        .freeing("a")
}

fn t_andrews_ab(c: &Case) -> Target {
    Target::Modulus(ab_roots(c.n, c.n))
}

fn t_ax(_: &Case, p: &Params, k: i64) -> QProduct {
    t_ax_signed(p, k, 1)
}

fn t_ax_signed(p: &Params, k: i64, s: i64) -> QProduct {
    one()
        .poch(&p.m(&[("a", 1)], 1), 2, k)
        .poch(&p.m(&[("b", 1)], 1), 2, k)
        .poch(&p.mono(rat_int(s), &[("x", 1)], 0), 2, k)
        .times(&q(2 * k), 1)
        .over_poch(&q(2), 2, k)
        .over_poch(&p.m(&[("a", 1), ("b", 1)], 4), 4, k)
}

fn rhs_ax(c: &Case, p: &Params, m: i64) -> Vec<QProduct> {
    let s = sign(c.half());
    (0..=m).map(|k| t_ax_signed(p, k, -1).scale(&s)).collect()
}

fn t_dnr_signed(c: &Case, p: &Params, k: i64, s: i64) -> QProduct {
    let (d, r) = (c.d, c.r);
    one()
        .poch(&p.m(&[("a", 1)], r), d, k)
        .poch(&p.m(&[("b", 1)], d - r), d, k)
        .poch(&p.mono(rat_int(s), &[("x", 1)], 0), d, k)
        .times(&q(d * k), 1)
        .over_poch(&q(d), d, k)
        .over_poch(&p.m(&[("a", 1), ("b", 1)], 2 * d), 2 * d, k)
}

fn t_dnr(c: &Case, p: &Params, k: i64) -> QProduct {
    t_dnr_signed(c, p, k, 1)
}

fn rhs_dnr(c: &Case, p: &Params, m: i64) -> Vec<QProduct> {
    let e = least_residue_frac(-c.r, c.d, c.n).expect("gcd(d, n) = 1");
    let s = sign(e);
    (0..=m).map(|k| t_dnr_signed(c, p, k, -1).scale(&s)).collect()
}

fn t_dnr_target(c: &Case) -> Target {
    let ra = least_residue_frac(c.r, c.n, c.d).expect("gcd(d, n) = 1");
    let rb = least_residue_frac(c.d - c.r, c.n, c.d).expect("gcd(d, n) = 1");
    Target::Modulus(ab_roots(c.n * ra, c.n * rb))
}

// ----- open families with q-binomial moduli ---------------------------------

fn t51n(c: &Case, _: &Params, k: i64) -> QProduct {
    let n = c.n;
    QProduct::qbinomial(4 * k, 2 * k)
        .mul(&QProduct::qbinomial(2 * k, k).pow(2))
        .poch_pow(&nq(1), 1, n, 4)
        .poch_pow(&nq(1), 1, 2 * n, 2)
        .poch_pow(&q(2), 2, k, 2)
        .poch_pow(&q(6), 6, n, 2)
        .over_poch_pow(&nq(1), 1, k, 4)
        .over_poch_pow(&nq(1), 1, 2 * k, 2)
        .over_poch_pow(&q(2), 2, n, 2)
        .over_poch_pow(&q(6), 6, k, 2)
        .bracket(8 * k + 1, 1)
        .times(&q(2 * k * k), 1)
}

fn t_c51a(c: &Case) -> Target {
    let n = c.n as u64;
    Target::Modulus(Modulus::qbinomial(2 * n, n))
}

fn t_c51b(c: &Case) -> Target {
    let n = c.n as u64;
    Target::Modulus(Modulus::qbinomial(3 * n, n))
}

fn t_qbin(c: &Case, _: &Params, k: i64) -> QProduct {
    let n = c.n;
    QProduct::scalar(sign(k))
        .times(&q(k * k), 1)
        .bracket(4 * k + 1, 1)
        .mul(&QProduct::qbinomial(2 * k, k).pow(3))
        .poch_pow(&nq(1), 1, n, 6)
        .over_poch_pow(&nq(1), 1, k, 6)
}

fn t_qbin_target(c: &Case) -> Target {
    let n = c.n as u64;
    Target::Modulus(
        Modulus::one_plus_qn(n)
            .pow(2)
            .times(&Modulus::bracket(2 * n + 1))
            .times(&Modulus::qbinomial(2 * n, n)),
    )
}

fn t52_ab(c: &Case, p: &Params, k: i64) -> QProduct {
    let d = c.d;
    one()
        .bracket(2 * d * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), d, k)
        .poch(&p.m(&[("a", -1)], 1), d, k)
        .poch(&p.m(&[("b", 1)], 1), d, k)
        .poch(&p.m(&[("b", -1)], 1), d, k)
        .over_poch(&p.m(&[("a", 1)], d), d, k)
        .over_poch(&p.m(&[("a", -1)], d), d, k)
        .over_poch(&p.m(&[("b", 1)], d), d, k)
        .over_poch(&p.m(&[("b", -1)], d), d, k)
        .times(&q((d - 2) * k), 1)
}

fn t52_a(c: &Case, p: &Params, k: i64) -> QProduct {
    let d = c.d;
    one()
        .bracket(2 * d * k + 1, 1)
        .poch(&p.m(&[("a", 1)], 1), d, k)
        .poch(&p.m(&[("a", -1)], 1), d, k)
        .poch_pow(&q(1), d, k, 2)
        .over_poch(&p.m(&[("a", 1)], d), d, k)
        .over_poch(&p.m(&[("a", -1)], d), d, k)
        .over_poch_pow(&q(d), d, k, 2)
        .times(&q((d - 2) * k), 1)
}

fn d_ne_2(c: &Case) -> bool {
    c.d != 2
}

fn d_eq_2(c: &Case) -> bool {
    c.d == 2
}

const A_NAMES: [&str; 5] = ["a1", "a2", "a3", "a4", "a5"];

fn t53_gen(c: &Case, p: &Params, k: i64) -> QProduct {
    let d = c.d;
    let mut t = one().times(&q(d * k), 1);
    for name in A_NAMES.iter().take(d as usize) {
        t = t
            .poch(&p.m(&[(*name, 1)], 1), d, k)
            .over_poch(&p.m(&[(*name, 1)], d), d, k);
    }
    t
}

fn t53_spec(c: &Case, _: &Params, k: i64) -> QProduct {
    let d = c.d;
    one()
        .times(&q(d * k), 1)
        .poch_pow(&q(1), d, k, d)
        .over_poch_pow(&q(d), d, k, d)
}

fn t54_gen(c: &Case, p: &Params, k: i64) -> QProduct {
    let d = c.d;
    let mut t = one().times(&q(d * k), 1);
    for name in A_NAMES.iter().take(d as usize) {
        t = t
            .poch(&p.m(&[(*name, 1)], -1), d, k)
            .over_poch(&p.m(&[(*name, 1)], d), d, k);
    }
    t
}

fn t54_spec(c: &Case, _: &Params, k: i64) -> QProduct {
    let d = c.d;
    one()
        .times(&q(d * k), 1)
        .poch_pow(&q(-1), d, k, d)
        .over_poch_pow(&q(d), d, k, d)
}

fn t54_target(c: &Case) -> Target {
    if c.d == 2 {
        t_bracket(c)
    } else {
        t_phi1(c)
    }
}

fn t55_a(_: &Case, p: &Params, k: i64) -> QProduct {
    one()
        .poch(&p.m(&[("a", 1)], 1), 4, k)
        .poch(&p.m(&[("a", -1)], 1), 4, k)
        .poch(&q(2), 4, k)
        .times(&q(4 * k), 1)
        .over_poch(&p.m(&[("a", 1)], 4), 4, k)
        .over_poch(&p.m(&[("a", -1)], 4), 4, k)
        .over_poch(&q(4), 4, k)
}

fn t55_spec(_: &Case, _: &Params, k: i64) -> QProduct {
    one()
        .poch_pow(&q(1), 4, k, 2)
        .poch(&q(2), 4, k)
        .times(&q(4 * k), 1)
        .over_poch_pow(&q(4), 4, k, 3)
}

fn t_gz_general(c: &Case, p: &Params, k: i64) -> QProduct {
    let (d, r) = (c.d, c.r);
    one()
        .poch(&p.m(&[("a", 1)], r), d, k)
        .poch(&p.m(&[("a", -1)], d - r), d, k)
        .poch(&q(d), 2 * d, k)
        .times(&q(d * k), 1)
        .over_poch(&p.m(&[("a", 1)], d), d, k)
        .over_poch(&p.m(&[("a", -1)], d), d, k)
        .over_poch(&q(2 * d), 2 * d, k)
}

fn t_gz(_: &Case, p: &Params, k: i64) -> QProduct {
    t_gz_general(&Case::ndr(0, 2, 1), p, k)
}

// ----- registry -------------------------------------------------------------

macro_rules! piece {
    ($label:expr, $applies:expr, $upper:expr, $term:expr, $rhs:expr, $target:expr) => {
        Piece {
            label: $label,
            applies: $applies,
            upper: $upper,
            term: $term,
            rhs: $rhs,
            target: $target,
        }
    };
    ($upper:expr, $term:expr, $rhs:expr, $target:expr) => {
        piece!("", always, $upper, $term, $rhs, $target)
    };
}

macro_rules! family {
    ($id:expr, $display:expr, $status:expr, $truncs:expr, $params:expr, $sym:expr, $dr:expr,
     $adm:expr, [$($piece:expr),+ $(,)?]) => {
        SumFamily {
            id: $id,
            display: $display,
            status: $status,
            truncs: $truncs,
            params: $params,
            symbolic: $sym,
            uses_dr: $dr,
            admissible: $adm,
            pieces: &[$($piece),+],
        }
    };
}

const T: Status = Status::Theorem;
const C: Status = Status::Conjecture;
const NONE: &[&str] = &[];
const A: &[&str] = &["a"];

const D8K1: &str = "(q;q^2)_k^2 (q;q^2)_2k / ((q^2;q^2)_2k (q^6;q^6)_k^2) [8k+1] q^(2k^2) == q^(-(n-1)/2) [n] (-3/n) mod [n] Phi_n^2";
const D8K1A: &str = "(aq;q^2)_k (q/a;q^2)_k (q;q^2)_2k / ((q^2;q^2)_2k (aq^6;q^6)_k (q^6/a;q^6)_k) [8k+1] q^(2k^2) == q^(-(n-1)/2) [n] (-3/n) mod [n](1-aq^n)(a-q^n)";
const D6K1M: &str = "(-1)^k (q;q^2)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^(3k^2) == 0 mod [n]";
const D6K1P: &str = "(q^2;q^4)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^(k^2) == 0 mod [n]";

pub static FAMILIES: &[SumFamily] = &[
    family!("T1.1-full", D8K1, T, FULL, NONE, None, false, coprime6,
        [piece!(up_full, t11, rhs11, t_bracket_phi2)]),
    family!("T1.1-half", D8K1, T, HALF, NONE, None, false, coprime6,
        [piece!(up_half, t11, rhs11, t_bracket_phi2)]),
    family!("T1.2-full", D6K1M, T, FULL, NONE, None, false, odd,
        [piece!(up_full, t12, no_rhs, t_bracket)]),
    family!("T1.2-half", D6K1M, T, HALF, NONE, None, false, odd,
        [piece!(up_half, t12, no_rhs, t_bracket)]),
    family!("T1.3-full", D6K1P, T, FULL, NONE, None, false, odd,
        [piece!(up_full, t13, no_rhs, t_bracket)]),
    family!("T1.3-half", D6K1P, T, HALF, NONE, None, false, odd,
        [piece!(up_half, t13, no_rhs, t_bracket)]),
    family!("T1.4-full", D8K1A, T, FULL, A, Some("a"), false, coprime6,
        [piece!(up_full, t14, rhs11, t_a_form)]),
    family!("T1.4-half", D8K1A, T, HALF, A, Some("a"), false, coprime6,
        [piece!(up_half, t14, rhs11, t_a_form)]),
    family!("L3.1",
        "(q^(1-n);q^2)_k (q^(1+n);q^2)_k (q;q^2)_2k / ((q^2;q^2)_2k (q^(6-n);q^6)_k (q^(6+n);q^6)_k) [8k+1] q^(2k^2), k <= (n-1)/2, equals q^(-(n-1)/2) [n] (-3/n)",
        T, HALF, NONE, None, false, odd,
        [piece!(up_half, t31, rhs11, t_identity)]),
    family!("L3.2",
        "(1-q^(1-n+8k))/(1-q^(1-n)) (aq;q^2)_k (q/a;q^2)_k (q^(1-n);q^2)_2k / ((q^2;q^2)_2k (aq^(6-n);q^6)_k (q^(6-n)/a;q^6)_k) q^(2k^2), k <= (n-1)/2, equals 0",
        T, HALF, A, Some("a"), false, coprime6_gt1,
        [piece!(up_half, t32, no_rhs, t_identity)]),
    family!("T4.1",
        "(-1)^k q^(k^2) [4k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k / ((aq^2;q^2)_k (q^2/a;q^2)_k (q^2;q^2)_k) == q^((n-1)^2/4) [n] (-1)^((n-1)/2) mod [n](1-aq^n)(a-q^n)",
        T, BOTH, A, Some("a"), false, odd,
        [piece!(up_std, t41, rhs41, t_a_form)]),
    family!("EQ4.B2",
        "(-1)^k q^(k^2) [4k+1] (q;q^2)_k^3 / (q^2;q^2)_k^3 == q^((n-1)^2/4) [n] (-1)^((n-1)/2) mod [n] Phi_n^2",
        T, BOTH, NONE, None, false, odd,
        [piece!(up_std, tb2, rhs41, t_bracket_phi2)]),
    family!("T4.2",
        "[4k+1] (aq;q^2)_k (q/a;q^2)_k (q/c;q^2)_k (q;q^2)_k / ((aq^2;q^2)_k (q^2/a;q^2)_k (cq^2;q^2)_k (q^2;q^2)_k) c^k == (c/q)^((n-1)/2) (q^2/c;q^2)_((n-1)/2) / (cq^2;q^2)_((n-1)/2) [n] mod [n](1-aq^n)(a-q^n)",
        T, BOTH, &["a", "c"], Some("a"), false, odd,
        [piece!(up_std, t42, rhs42, t_a_form)]),
    family!("EQ4.C2",
        "[4k+1] (q;q^2)_k^4 / (q^2;q^2)_k^4, k <= (n-1)/2, == q^((1-n)/2) [n] mod [n] Phi_n^2",
        T, HALF, NONE, None, false, odd,
        [piece!(up_half, tc2, rhs_c2, t_bracket_phi2)]),
    family!("T4.3",
        "q^(k^2) [6k+1] (aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k) == (-q)^((1-n)/2) [n] mod [n](1-aq^n)(a-q^n)",
        T, BOTH, A, Some("a"), false, odd,
        [piece!(up_std, t43, rhs43, t_a_form)]),
    family!("T4.4",
        "(-1)^k [6k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k) == (-q)^(-(n-1)(n+5)/8) [n] mod [n](1-aq^n)(a-q^n)",
        T, BOTH, A, Some("a"), false, odd,
        [piece!(up_std, t44, rhs44, t_a_form)]),
    family!("T4.5",
        "[6k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k (b;q^4)_k q^(k^2+2k) / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k (q^3/b;q^2)_k b^k) == (q^r b;q^4)_((n-r)/4) / (q^(4+r)/b;q^4)_((n-r)/4) b^(-(n-r)/4) (-q)^((1-r)/2) [n], n = r mod 4, r = +-1",
        T, BOTH, &["a", "b"], Some("a"), false, odd,
        [piece!(up_std, t45, rhs45, t_a_form)]),
    family!("C4.4bc",
        "[3k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k (q/b;q)_k (q/c;q)_k (bc;q)_k q^k / ((aq;q)_k (q/a;q)_k (q;q)_k (bq^2;q^2)_k (cq^2;q^2)_k (q^3/bc;q^2)_k) == (bcq;q^2)_N (q^2/b;q^2)_N (q^2/c;q^2)_N / ((q^3/bc;q^2)_N (bq^2;q^2)_N (cq^2;q^2)_N) [n], N = (n-1)/2, mod [n](1-aq^n)(a-q^n)",
        C, BOTH, &["a", "b", "c"], Some("a"), false, odd,
        [piece!(up_std, t44bc, rhs44bc, t_a_form)]),
    family!("T4.6",
        "the C4.4bc congruence modulo (1-aq^n)(a-q^n)",
        T, BOTH, &["a", "b", "c"], Some("a"), false, odd,
        [piece!(up_std, t44bc, rhs44bc, t_a_roots)]),
    family!("T4.7",
        "[3k+1] (aq;q^2)_k (q/a;q^2)_k (b;q)_k (q/b;q)_k (q;q^2)_k q^k / ((aq;q)_k (q/a;q)_k (bq^2;q^2)_k (q^3/b;q^2)_k (q^2;q^2)_k) == (bq;q^2)_N (q^2/b;q^2)_N / ((bq^2;q^2)_N (q^3/b;q^2)_N) [n] mod [n](1-aq^n)(a-q^n)",
        T, BOTH, &["a", "b"], Some("a"), false, odd,
        [piece!(up_std, t47, rhs47, t_a_form)]),
    family!("C4.3-div1",
        "[3k+1] (q;q^2)_k^3 q^(-k(k+1)/2) / ((q;q)_k^2 (q^2;q^2)_k) == q^((1-n)/2) [n] mod [n] Phi_n^2",
        C, BOTH, NONE, None, false, odd,
        [piece!(up_std, t_div1, rhs_div1, t_bracket_phi2)]),
    family!("C4.3-div2",
        "(-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3, k <= n-1, == q^((n-1)^2/4) [n] (-1)^((n-1)/2) mod [n] Phi_n^2",
        C, FULL, NONE, None, false, odd,
        [piece!(up_full, t_div2, rhs41, t_bracket_phi2)]),
    family!("C-Guo4-7.1",
        "[3k+1] (q;q^2)_k^3 q^(-k(k+1)/2) / ((q;q)_k^2 (q^2;q^2)_k), k <= n-1, == q^((1-n)/2) [n] + (n^2-1)(1-q)^2/24 q^((1-n)/2) [n]^3 mod [n] Phi_n^3",
        C, FULL, NONE, None, false, odd,
        [piece!(up_full, t_div1, rhs_guo47, t_bracket_phi3)]),
    family!("C-J2-full",
        "q^(k^2) [6k+1] (q;q^2)_k^2 (q^2;q^4)_k / (q^4;q^4)_k^3, k <= (n-1)/2, == (-q)^((1-n)/2) [n] + (n^2-1)(1-q)^2/24 (-q)^((1-n)/2) [n]^3 mod [n] Phi_n^3",
        C, HALF, NONE, None, false, odd,
        [piece!(up_half, t_j2, rhs_j2full, t_bracket_phi3)]),
    family!("EQ4.3-special",
        "[3k+1]_(q^2) (q;q^2)_k^2 (q^2;q^4)_k^3 q^(2k) / ((q^2;q^2)_k^2 (q^4;q^4)_k (q^5;q^4)_k^2) == 0 mod Phi_n^3, n = 3 mod 4",
        T, BOTH, NONE, None, false, n3mod4,
        [piece!(up_std, t43_special, no_rhs, t_phi3)]),
    family!("T4.8",
        "(-1)^k q^(d k(k+1)/2 - rk) [2dk+r] (aq^r;q^d)_k (q^r/a;q^d)_k (q^r;q^d)_k / ((aq^d;q^d)_k (q^d/a;q^d)_k (q^d;q^d)_k) == q^((n-r)(n-d+r)/(2d)) [n] (-1)^((n-r)/d) mod [n](1-aq^n)(a-q^n), n = r mod d; half means M = (n-r)/d",
        T, BOTH, A, Some("a"), true, adm_48,
        [piece!(up_48, t48, rhs48, t_a_form)]),
    family!("T4.9",
        "the T4.8 summand == q^((nd-n-r)(nd-n-d+r)/(2d)) [(d-1)n] (-1)^(((d-1)n-r)/d) mod [n](1-aq^((d-1)n))(a-q^((d-1)n)), n = -r mod d; half means M = ((d-1)n-r)/d",
        T, BOTH, A, Some("a"), true, adm_49,
        [piece!(up_49, t48, rhs49, t_a_form49)]),
    family!("T4.10",
        "[4k+1] (aq;q^2)_k (q/a;q^2)_k (q;q^2)_k q^((n-1)k/2) / ((aq^2;q^2)_k (q^2/a;q^2)_k (q^2;q^2)_k), k <= (n-1)/2, == 0 mod Phi_n, n = 1 mod 4",
        T, HALF, A, Some("a"), false, n1mod4,
        [piece!(up_half, t410, no_rhs, t_phi1)]),
    family!("C4.5-strange1",
        "[4k+1] (q;q^2)_k^3 / (q^2;q^2)_k^3 q^(k(n^2-2nk-n-2)/4), k <= (n-1)/2, == 0 mod Phi_n^2, n = 1 mod 4",
        C, HALF, NONE, None, false, n1mod4,
        [piece!(up_half, t_strange, no_rhs, t_phi2)]),
    family!("T4.D",
        "(1+aq^(4k+1)) (a^2q^2;q^4)_k (bq^2;q^4)_k (cq^2;q^4)_k / ((1+aq) (a^2q^4/b;q^4)_k (a^2q^4/c;q^4)_k (q^4;q^4)_k) (aq/bc)^k == 0 mod 1-a^2q^(2n); at a=b=c=1, k <= (n-1)/2, == 0 mod Phi_n(q) Phi_n(-q); n = 3 mod 4",
        T, BOTH, &["a", "b", "c"], Some("a"), false, n3mod4,
        [
            piece!("parametric", always, up_std, t_dixon, no_rhs, t_dixon_a),
            piece!("a=b=c=1", always, up_half, t_dixon1, no_rhs, t_dixon_spec),
        ]),
    family!("C4.D-refine",
        "the T4.D sum at a=b=c=1, k <= (n-1)/2, == 0 mod Phi_n(q)^2 Phi_n(-q)",
        C, HALF, NONE, None, false, n3mod4,
        [piece!(up_half, t_dixon1, no_rhs, t_dixon_refine)]),
    family!("T4.A",
        "(aq;q^2)_k (bq;q^2)_k q^(2k) / ((q^2;q^2)_k (abq^4;q^4)_k) == 0 mod (1-aq^n)(1-bq^n); at a=b=1, k <= (n-1)/2, == 0 mod Phi_n^2; n = 3 mod 4",
        T, BOTH, &["a", "b"], Some("a"), false, n3mod4,
        [
            piece!("parametric", always, up_std, t_andrews, no_rhs, t_andrews_ab),
            piece!("a=b=1", always, up_half, t_andrews1, no_rhs, t_phi2),
        ]),
    family!("C4.A-x",
        "(aq;q^2)_k (bq;q^2)_k (x;q^2)_k q^(2k) / ((q^2;q^2)_k (abq^4;q^4)_k) == (-1)^((n-1)/2) (same with -x) mod (1-aq^n)(1-bq^n)",
        C, BOTH, &["a", "b", "x"], Some("a"), false, odd,
        [piece!(up_std, t_ax, rhs_ax, t_andrews_ab)]),
    family!("C4.A-dnr",
        "(aq^r;q^d)_k (bq^(d-r);q^d)_k (x;q^d)_k q^(dk) / ((q^d;q^d)_k (abq^(2d);q^(2d))_k), k <= n-1, == (-1)^<-r/d>_n (same with -x) mod (1-aq^(n<r/n>_d))(1-bq^(n<(d-r)/n>_d))",
        C, FULL, &["a", "b", "x"], Some("a"), true, adm_dnr,
        [piece!(up_full, t_dnr, rhs_dnr, t_dnr_target)]),
    family!("C5.1a",
        "sum_{k<=n} [4k,2k] [2k,k]^2 (-q;q)_n^4 (-q;q)_2n^2 (q^2;q^2)_k^2 (q^6;q^6)_n^2 / ((-q;q)_k^4 (-q;q)_2k^2 (q^2;q^2)_n^2 (q^6;q^6)_k^2) [8k+1] q^(2k^2) == 0 mod [2n,n]",
        C, FULL, NONE, None, false, positive,
        [piece!(up_n, t51n, no_rhs, t_c51a)]),
    family!("C5.1b",
        "the C5.1a sum == 0 mod [3n,n]",
        C, FULL, NONE, None, false, positive,
        [piece!(up_n, t51n, no_rhs, t_c51b)]),
    family!("EQ5.QBIN",
        "sum_{k<=n} (-1)^k q^(k^2) [4k+1] [2k,k]^3 (-q;q)_n^6 / (-q;q)_k^6 == 0 mod (1+q^n)^2 [2n+1] [2n,n]",
        T, FULL, NONE, None, false, positive,
        [piece!(up_n, t_qbin, no_rhs, t_qbin_target)]),
    family!("C5.2",
        "[2dk+1] (aq;q^d)_k (q/a;q^d)_k (bq;q^d)_k (q/b;q^d)_k / ((aq^d;q^d)_k (q^d/a;q^d)_k (bq^d;q^d)_k (q^d/b;q^d)_k) q^((d-2)k) == 0 mod [n]; b -> 1 version mod [n] Phi_n for d != 2; k <= (n-1)/2 version mod [n] for d = 2; n = -1 mod d",
        C, FULL, &["a", "b"], Some("a"), true, adm_c52,
        [
            piece!("ab", always, up_full, t52_ab, no_rhs, t_bracket),
            piece!("a", d_ne_2, up_full, t52_a, no_rhs, t_bracket_phi1),
            piece!("ab-half", d_eq_2, up_half, t52_ab, no_rhs, t_bracket),
        ]),
    family!("C5.3",
        "prod_i (a_i q;q^d)_k q^(dk) / prod_i (a_i q^d;q^d)_k, k <= n-1, == 0 mod Phi_n; a_i = 1 version mod Phi_n^2; d >= 3, n = -1 mod d",
        C, FULL, &["a1", "a2", "a3", "a4", "a5"], Some("a1"), true, adm_c53,
        [
            piece!("a_i", always, up_full, t53_gen, no_rhs, t_phi1),
            piece!("a_i=1", always, up_full, t53_spec, no_rhs, t_phi2),
        ]),
    family!("C5.4",
        "prod_i (a_i/q;q^d)_k q^(dk) / prod_i (a_i q^d;q^d)_k, k <= n-1, == 0 mod Phi_n ([n] for d = 2); a_i = 1 version mod Phi_n^2; n = 1 mod d",
        C, FULL, &["a1", "a2", "a3", "a4", "a5"], Some("a1"), true, adm_c54,
        [
            piece!("a_i", always, up_full, t54_gen, no_rhs, t54_target),
            piece!("a_i=1", always, up_full, t54_spec, no_rhs, t_phi2),
        ]),
    family!("C5.5",
        "(aq;q^4)_k (q/a;q^4)_k (q^2;q^4)_k q^(4k) / ((aq^4;q^4)_k (q^4/a;q^4)_k (q^4;q^4)_k), k <= n-1, == 0 mod Phi_n; a = 1 version mod Phi_n^2; n = 3 mod 4",
        C, FULL, A, Some("a"), false, n3mod4,
        [
            piece!("a", always, up_full, t55_a, no_rhs, t_phi1),
            piece!("a=1", always, up_full, t55_spec, no_rhs, t_phi2),
        ]),
    family!("C5.GZ",
        "(aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k q^(2k) / ((aq^2;q^2)_k (q^2/a;q^2)_k (q^4;q^4)_k), k <= (n-1)/2, == 0 mod Phi_n, n = 3 mod 4",
        C, HALF, A, Some("a"), false, n3mod4,
        [piece!(up_half, t_gz, no_rhs, t_phi1)]),
    family!("C5.GZ-general",
        "(aq^r;q^d)_k (q^(d-r)/a;q^d)_k (q^d;q^(2d))_k q^(dk) / ((aq^d;q^d)_k (q^d/a;q^d)_k (q^(2d);q^(2d))_k), k <= (n-1)/2, == 0 mod Phi_n when <-r/d>_n is odd",
        C, HALF, A, Some("a"), true, adm_gz_general,
        [piece!(up_half, t_gz_general, no_rhs, t_phi1)]),
];
