use proptest::prelude::*;

use super::*;
use crate::series::tests_support::poly_strategy;

fn p(s: &str) -> CPoly {
    s.parse().unwrap()
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

#[test]
fn translation_examples() {
    assert_eq!(translate(&p("x3")), p("x3 + y.x3"));
    assert_eq!(translate(&p("5 - i")), p("5 - i"));
    assert_eq!(translate(&p("x3^2")), p("x3^2 + (1 + q^-2)*x3*y.x3 + y.x3^2 - q^-1*(q - q^-1)*(q + q^-1)*x+*y.x-"));
    assert_eq!(translate_bar(&p("x3")), p("x3 + y.x3"));
    for v in ["x+", "x-"] {
        let f = p(v);
        assert_eq!(translate(&f), &f + &f.relabel(Slot::X, Slot::Y));
        assert_eq!(translate_bar(&f), &f + &f.relabel(Slot::X, Slot::Y));
    }
}

#[test]
fn uhat_examples() {
    assert_eq!(uhat(&p("x3"), 1), p("x3"));
    assert_eq!(uhat(&CPoly::one(), 1), CPoly::one());
    assert_eq!(uhat(&CPoly::one(), -1), CPoly::one());
    assert_eq!(uhat(&p("x+*x-"), 1), p("x+*x- - (q - q^-1)*x3^2"));
}

#[test]
fn uhat_inverse_pair() {
    for t in monomials(4) {
        let f = CPoly::monomial(Slot::X, t);
        assert_eq!(uhat(&uhat(&f, 1), -1), f, "{t:?}");
        assert_eq!(uhat(&uhat(&f, -1), 1), f, "{t:?}");
    }
}

#[test]
fn inversion_examples() {
    assert_eq!(invert(&p("x3")), p("-x3"));
    assert_eq!(invert(&p("x+")), p("-x+"));
    assert_eq!(invert(&p("x-")), p("-x-"));
    assert_eq!(invert(&p("2*i")), p("2*i"));
    assert_eq!(invert_bar(&p("3 + i")), p("3 + i"));
    assert_eq!(invert_bar(&p("x3")), p("-x3"));
}

#[test]
fn counit() {
    for v in [Variant::Plain, Variant::Bar] {
        for t in monomials(4) {
            let f = CPoly::monomial(Slot::X, t);
            let tf = translate_in(&f, v, Slot::X, Slot::X, Slot::Y);
            assert_eq!(tf.zero_slot(Slot::Y), f);
            assert_eq!(tf.zero_slot(Slot::X), f.relabel(Slot::X, Slot::Y));
        }
    }
}

#[test]
fn coassociativity() {
    for v in [Variant::Plain, Variant::Bar] {
        for t in monomials(5) {
            let f = CPoly::monomial(Slot::X, t);
            let tf = translate_in(&f, v, Slot::X, Slot::X, Slot::Y);
            // f(x ⊕ (y ⊕ z))
            let right = translate_in(&tf, v, Slot::Y, Slot::Y, Slot::Z);
            // f((x ⊕ y) ⊕ z)
            let left = translate_in(&tf.relabel(Slot::Y, Slot::Z), v, Slot::X, Slot::X, Slot::Y);
            assert_eq!(left, right, "{v:?} {t:?}");
        }
    }
}

#[test]
fn conjugation_covariance() {
    for t in monomials(4) {
        let f = CPoly::monomial(Slot::X, t);
        let fb = f.conjugate_series();
        assert_eq!(translate(&f).conjugate_series(), translate(&fb).swap_slots(Slot::X, Slot::Y), "{t:?}");
        assert_eq!(translate_bar(&f).conjugate_series(), translate_bar(&fb).swap_slots(Slot::X, Slot::Y), "{t:?}");
        assert_eq!(invert(&f).conjugate_series(), invert(&fb), "{t:?}");
        assert_eq!(invert_bar(&f).conjugate_series(), invert_bar(&fb), "{t:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn translation_is_linear(f in poly_strategy(Slot::X, 3, 4), g in poly_strategy(Slot::X, 3, 4)) {
        prop_assert_eq!(translate(&(&f + &g)), &translate(&f) + &translate(&g));
    }

    #[test]
    fn uhat_round_trip(f in poly_strategy(Slot::X, 4, 5)) {
        prop_assert_eq!(uhat(&uhat(&f, -1), 1), f);
    }
}
