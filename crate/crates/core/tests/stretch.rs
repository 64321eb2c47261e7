//! The order-24288 double cover of PGL(2,23), restricted to odd-order and
//! odd-index subgroups.

use perfcode::verify::stretch_criterion;

#[test]
fn double_cover_of_pgl_2_23() {
    let outcome = stretch_criterion();
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.details);
}
