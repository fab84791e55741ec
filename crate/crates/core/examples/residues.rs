//! Exact integer tools: residues of rationals modulo prime powers,
//! valuations and the Kronecker symbol `(-3/n)`.
//!
//! ```text
//! cargo run --example residues
//! ```

use qcongruence::arith::{kronecker_i64, padic_valuation, rat, rational_mod, Integer};

fn main() {
    let x = rat(7, 12);
    for p in [5i64, 7, 11] {
        let r = rational_mod(&x, &Integer::from(p), 2).unwrap();
        println!("7/12 mod {}^2 = {}", p, r.value);
    }
    match rational_mod(&x, &Integer::from(3), 2) {
        Ok(r) => println!("7/12 mod 9 = {}", r.value),
        Err(e) => println!("7/12 mod 9: {}", e),
    }
    println!("v_5(250/3) = {}", padic_valuation(&rat(250, 3), &Integer::from(5)).unwrap());
    let ks: Vec<String> = (1..=13).map(|n| format!("{:+}", kronecker_i64(-3, n))).collect();
    println!("(-3/n), n = 1..13: {}", ks.join(" "));
}
