use proptest::prelude::*;

use super::*;
use crate::series::tests_support::poly_strategy;

fn p(s: &str) -> CPoly {
    s.parse().unwrap()
}

fn all_indices() -> Vec<Index> {
    Axis::ALL.into_iter().flat_map(|a| [Index::Co(a), Index::Contra(a)]).collect()
}

#[test]
fn left_examples() {
    assert_eq!(d_left(Index::Co(Axis::Plus), &p("x+")), CPoly::one());
    assert_eq!(d_left(Index::Co(Axis::Three), &p("x3^2")), p("(1 + q^2)*x3"));
    assert_eq!(d_left(Index::Co(Axis::Minus), &p("x3^2")), p("(q - q^-1)*(1 + q^2)*x+"));
}

#[test]
fn left_bar_examples() {
    assert_eq!(d_left_bar(Index::Co(Axis::Minus), &p("x-")), CPoly::one());
    for idx in all_indices() {
        for a in Action::ALL {
            assert!(apply_action(a, idx, &p("5/3 - i*q"), Slot::X).is_zero());
        }
    }
}

#[test]
fn right_bar_examples() {
    assert_eq!(d_right_bar(Index::Co(Axis::Three), &p("x3")), -CPoly::one());
    assert_eq!(d_right_bar(Index::Contra(Axis::Plus), &p("x-")), p("q^-1"));
}

#[test]
fn momentum_examples() {
    assert_eq!(momentum_apply(Axis::Three, &p("x3")), p("-i"));
    assert!(momentum_apply(Axis::Minus, &CPoly::one()).is_zero());
    let f = p("x+*x3^2 + (2 - i)*x-^2*x3");
    assert_eq!(momentum_apply(Axis::Plus, &f), d_left(Index::Co(Axis::Minus), &f).scale(&"i*q".parse().unwrap()));
}

#[test]
fn constant_term_of_derivative_on_coordinates_is_delta() {
    for a in Axis::ALL {
        for b in Axis::ALL {
            let img = d_left(Index::Co(a), &CPoly::var(Slot::X, b));
            let c = img.coeff(&Exps::one());
            assert_eq!(c, if a == b { QScalar::one() } else { QScalar::zero() });
        }
    }
}

fn monomials(max_deg: u16) -> Vec<Triple> {
    let mut v = Vec::new();
    for a in 0..=max_deg {
        for b in 0..=max_deg - a {
            for c in 0..=max_deg - a - b {
                v.push([a, b, c]);
            }
        }
    }
    v
}

fn exchange_residuals(action: Action, f: &CPoly) -> [CPoly; 3] {
    let op = |a: Axis, g: &CPoly| apply_action(action, Index::Contra(a), g, Slot::X);
    let (pl, th, mi) = (Axis::Plus, Axis::Three, Axis::Minus);
    let r1 = &op(th, &op(pl, f)) - &op(pl, &op(th, f)).scale(&QScalar::q_pow(2));
    let r2 = &op(mi, &op(th, f)) - &op(th, &op(mi, f)).scale(&QScalar::q_pow(2));
    let r3 = &(&op(mi, &op(pl, f)) - &op(pl, &op(mi, f))) - &op(th, &op(th, f)).scale(&QScalar::lambda());
    [r1, r2, r3]
}

#[test]
fn contravariant_derivatives_commute_like_coordinates() {
    for t in monomials(6) {
        let f = CPoly::monomial(Slot::X, t);
        for action in [Action::Left, Action::LeftBar] {
            for r in exchange_residuals(action, &f) {
                assert!(r.is_zero(), "{action:?} on {t:?}");
            }
        }
    }
}

#[test]
fn right_tables_match_conjugation_definition() {
    for t in monomials(5) {
        let f = CPoly::monomial(Slot::X, t).scale(&"3 + 2*i*q^2".parse().unwrap());
        for idx in all_indices() {
            for action in [Action::RightBar, Action::Right] {
                assert_eq!(
                    apply_action(action, idx, &f, Slot::X),
                    right_by_conjugation(action, idx, &f),
                    "{action:?} {idx:?} {t:?}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn conjugation_interchanges_actions(f in poly_strategy(Slot::X, 4, 5), ax in 0usize..3) {
        let a = Axis::ALL[ax];
        for idx in [Index::Co(a), Index::Contra(a)] {
            let lhs = d_left(flip(idx), &f).conjugate_series();
            let rhs = -d_right_bar(idx, &f.conjugate_series());
            prop_assert_eq!(lhs, rhs);
            let lhs = d_left_bar(flip(idx), &f).conjugate_series();
            let rhs = -d_right(idx, &f.conjugate_series());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
