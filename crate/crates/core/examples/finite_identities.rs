//! Terminating summation formulas, decided exactly for each fixed `N` by
//! sampling the free parameters beyond their degree bounds.
//!
//! ```text
//! cargo run --example finite_identities
//! ```

use qcongruence::catalog::identities::{verify_finite, FINITE};

fn main() {
    for f in FINITE {
        println!("{}: {}", f.id, f.display);
        for n in 0..=4 {
            let r = verify_finite(f.id, n).unwrap();
            println!("  N={} {} ({} ms)", n, r.verdict, r.millis);
        }
    }
}
