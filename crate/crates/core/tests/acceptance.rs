use std::io::Write;

use saguaro::acceptance::{criterion_count, run_all, seed_from_env};

#[test]
fn all_criteria() {
    let seed = seed_from_env();
    let outcomes = run_all(seed, false);
    assert_eq!(outcomes.len(), criterion_count());
    // written past the test harness capture so the lines show on every run
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "acceptance seed {seed:#x}");
    for o in &outcomes {
        let _ = writeln!(err, "{o}");
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
