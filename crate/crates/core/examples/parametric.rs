//! A congruence with a free parameter `a`: the modulus `[n](1 - a q^n)(a - q^n)`
//! is checked part by part, the `a`-parts by substituting `a = q^{±n}`.
//!
//! ```text
//! cargo run --example parametric
//! ```

use qcongruence::arith::rat;
use qcongruence::catalog::{family, verify_family, Case, Trunc};
use qcongruence::qsymbols::{ParamVal, Params};

fn main() {
    let f = family("T1.4-full").unwrap();
    println!("{}: {}", f.id, f.display);
    for n in [5, 7, 11] {
        let r = verify_family(f, &Case::n(n), &Params::new(), Trunc::Full).unwrap();
        let parts: Vec<String> = r
            .parts
            .iter()
            .map(|p| format!("{}:{}", p.modulus_part, if p.passed() { "ok" } else { "FAIL" }))
            .collect();
        println!("n={:<3} {}  [{}]", n, r.verdict, parts.join(", "));
        for note in &r.mode_notes {
            println!("       {}", note);
        }
    }

    // the same statement with a fixed to a rational value
    let p = Params::new().with("a", ParamVal::rational(rat(1, 3)));
    let r = verify_family(f, &Case::n(7), &p, Trunc::Full).unwrap();
    println!("a = 1/3, n = 7 -> {}", r.verdict);
}
