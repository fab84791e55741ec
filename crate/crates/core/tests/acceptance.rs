//! Runs the quick suite and prints one line per acceptance criterion.

use std::time::Instant;

use qcongruence::cli::{run_jobs, suite, Profile};
use qcongruence::congruence::Verdict;

const TITLES: [&str; 12] = [
    "[8k+1] sum mod [n]Phi_n^2, full and half",
    "a-parametric [8k+1] sum, symbolic and a in {1, 2, 1/3}",
    "[6k+-1] sums mod [n], odd n <= 21",
    "evaluation at a = q^n and the vanishing a-sum",
    "parametric theorems of the middle section",
    "conjecture harness",
    "power series and finite identities",
    "integer supercongruences and binomial divisibility",
    "block sums, q-Lucas and (-z;z)_d at roots of unity",
    "WZ relation and telescoped divisibility",
    "cyclotomic product and sign identities",
    "numeric limits",
];

fn main() {
    let mut all_ok = true;
    for c in 1..=12u8 {
        let mine: Vec<_> = suite::jobs(Profile::Quick)
            .into_iter()
            .filter(|j| j.criterion == c)
            .collect();
        let start = Instant::now();
        let reports = run_jobs(&mine, None, false).expect("thread pool");
        let secs = start.elapsed().as_secs_f64();
        let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
        let fail: Vec<_> = reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
        let skipped = reports.len() - pass - fail.len();
        let mut ok = fail.is_empty() && pass > 0;
        let mut extra = String::new();
        if c == 1 && secs >= 120.0 {
            ok = false;
            extra = " over the 120 s budget".into();
        }
        all_ok &= ok;
        println!(
            "criterion {:>2} {}: {} ({} pass, {} fail, {} skipped, {:.1} s){}",
            c,
            TITLES[c as usize - 1],
            if ok { "PASS" } else { "FAIL" },
            pass,
            fail.len(),
            skipped,
            secs,
            extra
        );
        for r in fail {
            println!("    failed {} {:?} {:?}", r.id, r.params, r.mode_notes);
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
