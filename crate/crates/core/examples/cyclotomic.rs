//! Cyclotomic polynomials and the factorisation of `[n]`.
//!
//! ```text
//! cargo run --example cyclotomic
//! ```

use qcongruence::arith::{divisors, rat_int};
use qcongruence::qpoly::{cyclotomic, q_integer, UPoly};

fn main() {
    for n in [1u64, 2, 3, 6, 12, 15] {
        println!("Phi_{} = {}", n, cyclotomic(n));
    }

    let n = 12;
    let mut prod = UPoly::one();
    for d in divisors(n).into_iter().filter(|&d| d > 1) {
        prod = &prod * &cyclotomic(d);
    }
    println!("prod over d | 12, d > 1 equals [12]: {}", prod == q_integer(n));

    // Phi_n(-q) = Phi_2n(q) for odd n > 1
    let neg = cyclotomic(9).scale_var(&rat_int(-1));
    println!("Phi_9(-q) = Phi_18(q): {}", neg == *cyclotomic(18));
}
