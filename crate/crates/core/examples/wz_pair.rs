//! A q-WZ pair: the relation `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)` as an
//! identity of rational functions, and `G((m+1)/2, k)` modulo `[m]`.
//!
//! ```text
//! cargo run --example wz_pair
//! ```

use qcongruence::catalog::wz::{relation_holds, verify_wz, WzPair};

fn main() {
    for n in 1..=3 {
        let row: Vec<&str> = (0..=4)
            .map(|k| if relation_holds(WzPair::Tilde, n, k).unwrap() { "ok" } else { "no" })
            .collect();
        println!("n={} k=0..4: {}", n, row.join(" "));
    }
    for pair in [WzPair::Tilde, WzPair::Plain] {
        let r = verify_wz(pair, 6, 6, 9, 3).unwrap();
        println!("{}: {} ({} parts)", pair.id(), r.verdict, r.parts.len());
        for n in &r.mode_notes {
            println!("  {}", n);
        }
    }
}
