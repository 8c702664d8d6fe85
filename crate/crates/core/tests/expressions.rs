use mixedcolor::expr::{evaluate, parse_expr, path4_expression, random_valid_expressions, ExprError};
use mixedcolor::random::rng;
use proptest::prelude::*;

#[test]
fn display_and_parse_round_trip() {
    let mut r = rng(50);
    for e in random_valid_expressions(&mut r, 200, 10, 4) {
        let text = e.to_string();
        assert_eq!(parse_expr(&text).unwrap(), e, "{text}");
    }
    assert_eq!(parse_expr(&path4_expression().to_string()).unwrap(), path4_expression());
}

#[test]
fn parse_errors_carry_positions() {
    match parse_expr("(union (intro 1) (bogus 2))") {
        Err(ExprError::Parse { pos, .. }) => assert_eq!(pos, 18),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_expr("(intro 0)"), Err(ExprError::Parse { .. })));
    assert!(matches!(evaluate(&parse_expr("(edge 1 1 (intro 1))").unwrap()), Err(ExprError::SameLabel(_))));
}

proptest! {
    #[test]
    fn evaluation_preserves_vertex_count(seed in any::<u64>(), intros in 1usize..12, labels in 1u32..5) {
        let mut r = rng(seed);
        for e in random_valid_expressions(&mut r, 3, intros, labels) {
            let g = evaluate(&e).unwrap().graph;
            prop_assert_eq!(g.n(), e.num_vertices());
            prop_assert!(e.width() <= labels as usize);
        }
    }
}
