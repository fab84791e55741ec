//! Infinite q-series identities compared coefficientwise in `Q[[q]]`.
//!
//! ```text
//! cargo run --example power_series [order]
//! ```

use qcongruence::catalog::identities::{verify_series, SERIES};
use qcongruence::qsymbols::Params;

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    for s in SERIES {
        let r = verify_series(s.id, &Params::new(), order).unwrap();
        println!("{:<24} {:<5} {:>6} ms  {}", s.id, r.verdict.to_string(), r.millis, s.display);
    }
}
