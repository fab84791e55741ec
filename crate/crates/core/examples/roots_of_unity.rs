//! Exact arithmetic in `Q(zeta_d)`: block sums of a summand at a primitive
//! root of unity, the q-Lucas rule and `(-zeta; zeta)_d = 2`.
//!
//! ```text
//! cargo run --example roots_of_unity
//! ```

use qcongruence::arith::rat_int;
use qcongruence::catalog::{block_sum, family, term_at_zeta};
use qcongruence::cyclofield::{neg_zeta_poch, qlucas};
use qcongruence::qsymbols::{ParamVal, Params};

fn main() {
    let f = family("T1.4-full").unwrap();
    let p = Params::new().with("a", ParamVal::rational(rat_int(2)));
    for d in [5u64, 7, 11] {
        let t1 = term_at_zeta(f, 1, d, &p).unwrap();
        let full = block_sum(f, d, &p, false).unwrap();
        let half = block_sum(f, d, &p, true).unwrap();
        println!(
            "d={:<3} c(1) zero? {:<5}  full block zero? {}  half block zero? {}",
            d,
            t1.is_zero(),
            full.is_zero(),
            half.is_zero()
        );
    }

    let mut cases = 0;
    for d in [3u64, 5] {
        for a in 0..=3 {
            for l in 0..=3 {
                for b in 0..d {
                    for k in 0..d {
                        assert!(qlucas(d, a, l, b, k));
                        cases += 1;
                    }
                }
            }
        }
    }
    println!("q-Lucas holds in {} cases", cases);

    for d in (1..=13).step_by(2) {
        print!("(-z;z)_{} = {}  ", d, neg_zeta_poch(d).as_rational().unwrap());
    }
    println!();
}
