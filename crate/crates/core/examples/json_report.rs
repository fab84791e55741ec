//! Runs a few checks through the command-line layer and prints the JSON
//! report, as `qcong --format json ...` would.
//!
//! ```text
//! cargo run --example json_report
//! ```

use qcongruence::cli::run_with;

fn main() {
    let argv: Vec<String> = ["qcong", "--format", "json", "--no-timing", "verify", "T4.4", "--n", "3,5", "--trunc", "half"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut out = Vec::new();
    let code = run_with(&argv, &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {}", code);
}
