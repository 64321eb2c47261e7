//! Runs the twelve acceptance criteria and prints one line per criterion.

use perfcode::verify::acceptance_suite;

#[test]
fn acceptance_criteria() {
    let outcomes = acceptance_suite();
    for c in &outcomes {
        println!("{}", c.line());
    }
    let failed: Vec<u32> = outcomes.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    let slow: Vec<u32> = outcomes.iter().filter(|c| !c.within_budget()).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failed criteria {failed:?}");
    assert!(slow.is_empty(), "criteria over their time budget {slow:?}");
}
