//! Acceptance gate, end-to-end half: the shipped binary must exit 0 on a
//! clean catalog run and exit 1 under each registered single-term mutation
//! (sign flips and dropped entries), all inside the stated time budget.

use std::process::Command;
use std::time::{Duration, Instant};

fn verify_paper(extra: &[&str]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liefol"));
    cmd.env_remove("LIEALG_SEED");
    cmd.args(["verify-paper", "--format", "text"]);
    cmd.args(extra);
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

#[test]
fn criterion_8_binary_exit_codes_under_mutations() {
    let started = Instant::now();
    let budget = Duration::from_secs(120);

    let (code, stderr) = verify_paper(&[]);
    assert_eq!(code, 0, "clean run must exit 0: {stderr}");

    let mutations = [
        "g6-w2-sign",
        "g1-theta2-drop",
        "g4-r-sign",
        "g18-z1-drop",
        "g17-z3-sign",
    ];
    for fault in mutations {
        let (code, stderr) = verify_paper(&["--inject-fault", fault]);
        assert_eq!(code, 1, "mutation {fault} must exit 1");
        assert!(
            stderr.contains("verification failed"),
            "mutation {fault} must report the failure: {stderr}"
        );
    }

    let elapsed = started.elapsed();
    println!(
        "[criterion 8] PASS in {elapsed:.2?}: clean run exits 0, {} single mutations exit 1",
        mutations.len()
    );
    assert!(elapsed <= budget, "criterion 8 exceeded its {budget:?} budget: {elapsed:?}");
}
