//! Every example must build and exit successfully.

use std::process::Command;

#[test]
fn examples_exit_cleanly() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "rs").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    assert!(!names.is_empty());
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    for name in names {
        let out = Command::new(&cargo)
            .args(["run", "-q", "--example", &name])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "example {} failed:\n{}",
            name,
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stdout.is_empty(), "example {} printed nothing", name);
    }
}
