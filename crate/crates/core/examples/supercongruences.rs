//! Integer supercongruences from exact rational partial sums reduced modulo
//! prime powers.
//!
//! ```text
//! cargo run --example supercongruences
//! ```

use qcongruence::arith::{primes_in, rational_mod, Integer};
use qcongruence::catalog::supercong::{
    intermediate_terms_witness, ramanujan_sum, verify_binomial_congruence, verify_supercongruence,
};

fn main() {
    for p in primes_in(5, 23) {
        let full = rational_mod(&ramanujan_sum(p as i64 - 1), &Integer::from(p), 3).unwrap();
        let r = verify_supercongruence("S1.2", p, 1, 0).unwrap();
        println!("p={:<3} S(p-1) = {:>6} mod p^3  {}", p, full.value, r.verdict);
    }
    if let Some((p, k)) = intermediate_terms_witness(50) {
        println!("term k={} is nonzero mod {}^3, so the half sum is not the full sum termwise", k, p);
    }
    for (d, p, s) in [(3, 7, 1), (4, 5, 1), (3, 2, 2), (5, 11, 1)] {
        let r = verify_supercongruence("S4.8-ds", p, s, d).unwrap();
        println!("S4.8-ds d={} p={} s={}: {}", d, p, s, r.verdict);
    }
    for (p, s) in [(3, 1), (5, 1), (3, 2)] {
        let r = verify_supercongruence("S5.Dwork", p, s, 0).unwrap();
        println!("S5.Dwork p={} s={}: {}", p, s, r.verdict);
    }
    for n in [3, 10] {
        let r = verify_binomial_congruence("B5.4", n).unwrap();
        println!("B5.4 n={}: {} {:?}", n, r.verdict, r.mode_notes);
    }
}
