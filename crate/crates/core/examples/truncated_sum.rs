//! Builds a truncated q-sum, its closed form, and checks the congruence
//! modulo `[n] Phi_n(q)^2`.
//!
//! ```text
//! cargo run --example truncated_sum [n]
//! ```

use qcongruence::catalog::{build_truncated_sum, closed_form_rhs, family, verify_family, Case, Trunc};
use qcongruence::qsymbols::Params;

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let f = family("T1.1-full").unwrap();
    println!("{}: {}", f.id, f.display);

    let case = Case::n(n);
    let p = Params::new();
    match build_truncated_sum(f, &case, &p, Trunc::Full) {
        Ok(sum) => {
            let rhs = closed_form_rhs(f, &case, &p, Trunc::Full).unwrap();
            println!(
                "sum: numerator of q-degree {:?} over denominator of q-degree {:?}",
                sum.num().coeffs()[0].degree(),
                sum.den().coeffs()[0].degree()
            );
            println!("rhs = {}", rhs);
        }
        Err(e) => println!("n = {}: {}", n, e),
    }
    for trunc in [Trunc::Full, Trunc::Half] {
        let id = if trunc == Trunc::Full { "T1.1-full" } else { "T1.1-half" };
        let r = verify_family(family(id).unwrap(), &case, &p, trunc).unwrap();
        println!("{} n={} -> {}", id, n, r.verdict);
        for part in &r.parts {
            println!("  {:<12} divisible={} coprime={}", part.modulus_part, part.divisible, part.coprime);
        }
    }
}
