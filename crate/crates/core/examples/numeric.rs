//! Floating-point illustrations: partial sums against their closed limits and
//! a block sum evaluated on a ray towards a root of unity.
//!
//! ```text
//! cargo run --example numeric
//! ```

use qcongruence::catalog::family;
use qcongruence::numeric::{partial_sum_numeric, pochhammer_limit, radial_block, sanity_error, SeriesRule};
use qcongruence::qsymbols::Params;

fn main() {
    for (rule, n) in [(SeriesRule::Ramanujan8k1, 50), (SeriesRule::Sqrt6Over3, 60)] {
        println!(
            "{:<14} N={}  sum={:.15}  limit={:.15}  error={:.2e}",
            rule.id(),
            n,
            partial_sum_numeric(rule, n).unwrap(),
            rule.limit(),
            sanity_error(rule, n).unwrap()
        );
    }
    println!("(q^(1/2);q)_3/(1-q)^3 at q=0.9999: {:.6}", pochhammer_limit(0.5, 3, 0.9999).unwrap());

    let f = family("T1.2-full").unwrap();
    let p = Params::new();
    for r in [0.9, 0.99, 0.999, 0.9999] {
        let v = radial_block(f, 3, r, &p, false).unwrap();
        println!("T1.2 block at q = {} zeta_3: |sum| = {:.3e}", r, v.norm());
    }
}
