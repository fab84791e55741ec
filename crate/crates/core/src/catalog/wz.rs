//! The two q-WZ pairs attached to the `[6k+1]` sums.

use std::time::Instant;

use crate::arith::rat_int;
use crate::congruence::{check_factored, exact_zero, Modulus, PartReport, Status, VerificationReport};
use crate::error::Result;
use crate::qsymbols::{Mono, Params, QProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzPair {
    /// The pair with `q^{(n-k)^2}` and `(q^2;q^4)_n`; its relation is stated.
    Tilde,
    /// The signed pair with `(q;q^2)_{n-k}`; the relation is checked but not
    /// claimed by the source.
    Plain,
}

impl WzPair {
    pub fn id(self) -> &'static str {
        match self {
            WzPair::Tilde => "WZ-tilde",
            WzPair::Plain => "WZ-plain",
        }
    }

    pub fn parse(s: &str) -> Option<WzPair> {
        match s {
            "WZ-tilde" | "tilde" => Some(WzPair::Tilde),
            "WZ-plain" | "plain" => Some(WzPair::Plain),
            _ => None,
        }
    }

    pub fn f(self, n: i64, k: i64) -> QProduct {
        match self {
            WzPair::Tilde => f_tilde(n, k),
            WzPair::Plain => f_plain(n, k),
        }
    }

    pub fn g(self, n: i64, k: i64) -> QProduct {
        match self {
            WzPair::Tilde => g_tilde(n, k),
            WzPair::Plain => g_plain(n, k),
        }
    }
}

fn m(c: i64, e: i64) -> Mono {
    Mono::new(rat_int(c), 0, e)
}

fn sign(e: i64) -> QProduct {
    QProduct::scalar(rat_int(if e.rem_euclid(2) == 0 { 1 } else { -1 }))
}

fn zero() -> QProduct {
    QProduct::scalar(rat_int(0))
}

/// `1/(q^4;q^4)_j (-q^4;q^4)_j`, zero for negative `j`.
fn over_q4(p: QProduct, j: i64) -> Option<QProduct> {
    if j < 0 {
        return None;
    }
    Some(p.over_poch(&m(1, 4), 4, j).over_poch(&m(-1, 4), 4, j))
}

pub fn f_tilde(n: i64, k: i64) -> QProduct {
    let p = QProduct::q_integer(6 * n - 2 * k + 1)
        .times(&Mono::q((n - k) * (n - k)), 1)
        .poch(&m(1, 2), 4, n)
        .poch(&m(-1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n + k)
        .over_poch(&m(-1, 4), 4, n - k)
        .over_poch(&m(-1, 2), 4, k);
    over_q4(p, n).unwrap_or_else(zero)
}

pub fn g_tilde(n: i64, k: i64) -> QProduct {
    let p = QProduct::one()
        .times(&Mono::q((n - k) * (n - k)), 1)
        .poch(&m(1, 2), 4, n)
        .poch(&m(-1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n + k - 1)
        .over_poch(&m(1, 1), 1, 1)
        .over_poch(&m(-1, 4), 4, n - k)
        .over_poch(&m(-1, 2), 4, k);
    over_q4(p, n - 1).unwrap_or_else(zero)
}

pub fn f_plain(n: i64, k: i64) -> QProduct {
    let p = sign(n + k)
        .bracket(6 * n - 2 * k + 1, 1)
        .poch(&m(1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n + k)
        .over_poch(&m(-1, 4), 4, n - k);
    over_q4(p, n).unwrap_or_else(zero)
}

pub fn g_plain(n: i64, k: i64) -> QProduct {
    let p = sign(n + k)
        .poch(&m(1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n - k)
        .poch(&m(-1, 1), 2, n + k - 1)
        .over_poch(&m(1, 1), 1, 1)
        .over_poch(&m(-1, 4), 4, n - k);
    over_q4(p, n - 1).unwrap_or_else(zero)
}

/// Whether `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)` holds exactly.
pub fn relation_holds(pair: WzPair, n: i64, k: i64) -> Result<bool> {
    let neg = rat_int(-1);
    let terms = vec![
        pair.f(n, k - 1),
        pair.f(n, k).scale(&neg),
        pair.g(n + 1, k).scale(&neg),
        pair.g(n, k),
    ];
    Ok(exact_zero(&terms)?.0)
}

/// Checks the relation on `1 <= n <= n_max`, `0 <= k <= k_max`, and
/// for the tilde pair `G((m+1)/2, k) ≡ 0 (mod [m])` for odd `3 <= m <= m_max`,
/// `0 <= k <= tk_max`.
pub fn verify_wz(
    pair: WzPair,
    n_max: i64,
    k_max: i64,
    m_max: i64,
    tk_max: i64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let status = if pair == WzPair::Tilde { Status::Theorem } else { Status::Informational };
    let mut rep = VerificationReport::new(pair.id(), status)
        .param("n_max", n_max)
        .param("k_max", k_max)
        .param("m_max", m_max);
    if pair == WzPair::Plain {
        rep.note("relation not asserted by the source; reported for information");
    }
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for k in 0..=k_max {
            if !relation_holds(pair, n, k)? {
                bad.push(format!("({},{})", n, k));
            }
        }
    }
    rep.push_part(PartReport {
        modulus_part: format!("relation n<={} k<={}", n_max, k_max),
        divisible: bad.is_empty(),
        coprime: true,
        valuation: None,
    });
    if !bad.is_empty() {
        rep.note(format!("relation fails at {}", bad.join(" ")));
    }
    let mut mm = 3;
    while pair == WzPair::Tilde && mm <= m_max {
        for k in 0..=tk_max {
            let g = pair.g((mm + 1) / 2, k);
            let build = |_: &Params| Ok(vec![g.clone()]);
            let (parts, _) = check_factored(&build, &Params::new(), &Modulus::bracket(mm as u64))?;
            let ok = parts.iter().all(PartReport::passed);
            rep.push_part(PartReport {
                modulus_part: format!("G({},{}) mod [{}]", (mm + 1) / 2, k, mm),
                divisible: ok,
                coprime: true,
                valuation: None,
            });
        }
        mm += 2;
    }
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_relation_small() {
        assert!(relation_holds(WzPair::Tilde, 1, 1).unwrap());
        assert!(relation_holds(WzPair::Tilde, 0, 2).unwrap());
    }

    #[test]
    fn g_vanishes_at_zero() {
        assert!(g_tilde(0, 3).is_zero());
        assert!(g_plain(0, 0).is_zero());
    }
}
