use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::scalars::{qnum, rat, Gauss, QScalar};

fn p(s: &str) -> CPoly {
    s.parse().unwrap()
}

fn all_monomials(max_deg: u16) -> Vec<Triple> {
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
fn jackson_examples() {
    let plus = (Slot::X, Axis::Plus);
    assert_eq!(p("x+^2").jackson_derivative(plus.0, plus.1, 4), p("(1 + q^4)*x+"));
    assert!(p("7").jackson_derivative(Slot::X, Axis::Minus, 2).is_zero());
    assert_eq!(p("x3*x-").jackson_derivative(Slot::X, Axis::Three, 2), p("x-"));
    assert_eq!(p("x3").jackson_antiderivative(Slot::X, Axis::Three, 2), p("x3^2/(1 + q^2)"));
    assert!(CPoly::zero().jackson_antiderivative(Slot::X, Axis::Three, 2).is_zero());
}

#[test]
fn dilation_examples() {
    assert_eq!(p("x+*x3").dilate(Slot::X, Axis::Plus, 2), p("q^2*x+*x3"));
    let f = p("(2 + i)*x+^2*x- - q*x3");
    assert_eq!(f.dilate(Slot::X, Axis::Three, 0), f);
    assert_eq!(f.dilate(Slot::X, Axis::Minus, 3).dilate(Slot::X, Axis::Minus, -3), f);
}

#[test]
fn conjugation_examples() {
    assert_eq!(p("x+").conjugate_series(), p("-q*x-"));
    assert_eq!(p("i*x3").conjugate_series(), p("-i*x3"));
    assert_eq!(p("y.x-").conjugate_series(), p("-q^-1*y.x+"));
}

#[test]
fn difference_quotient_equivalence() {
    let q0 = rat(11, 10);
    let point: Vec<BigRational> = (0..NVARS).map(|i| rat(3 + i as i64, 7 - (i % 5) as i64)).collect();
    for t in all_monomials(8) {
        let f = CPoly::monomial(Slot::X, t);
        for m in [-4i64, -2, -1, 1, 2, 4] {
            for a in Axis::ALL {
                let lhs = f.jackson_derivative(Slot::X, a, m).eval_at(&q0, &point);
                let idx = Slot::X.var(a);
                let qm = crate::scalars::pow_rat(&q0, m);
                let mut shifted = point.clone();
                shifted[idx] = &shifted[idx] * &qm;
                let num = &f.eval_at(&q0, &shifted) - &f.eval_at(&q0, &point);
                let den = (&qm - BigRational::from_integer(1.into())) * &point[idx];
                assert_eq!(lhs, num.scale(&den.recip()), "monomial {t:?} m={m}");
            }
        }
    }
}

#[test]
fn dilation_exchange_law() {
    for t in all_monomials(6) {
        let f = CPoly::monomial(Slot::X, t);
        for a in Axis::ALL {
            for m in [1i64, 2, 4] {
                let lhs = f.dilate(Slot::X, a, 1).jackson_derivative(Slot::X, a, m);
                let rhs = f.jackson_derivative(Slot::X, a, m).dilate(Slot::X, a, 1).scale(&QScalar::q());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn rendering_round_trips() {
    for s in ["x+*x- + (q - q^-1)*x3^2", "x3 + y.x3", "-i*q*p.x- + 3/2", "(1 + q^4)^-1*x+^2"] {
        let f = p(s);
        assert_eq!(p(&f.to_string()), f, "{s} -> {f}");
    }
    assert_eq!(p("x+*x- + (q - q^-1)*x3^2").to_string(), "x+*x- + (q - q^-1)*x3^2");
    assert_eq!(p("y.x3 + x3").to_string(), "x3 + y.x3");
}

#[test]
fn parse_errors_carry_position() {
    let e = parse_cpoly("x+ * (x3").unwrap_err();
    assert_eq!(e.pos, 8);
    assert!(parse_cpoly("x7").is_err());
    assert!(parse_cpoly("x+ / x3").is_err());
    assert!(parse_cpoly("1/(2 + q)").is_err());
}

fn coeff() -> impl Strategy<Value = QScalar> {
    (-3i64..=3, -3i64..=3, -2i64..=2).prop_map(|(re, im, k)| QScalar::mono(Gauss::from_ints(re, im), k))
}

pub(crate) fn poly_strategy(slot: Slot, max_deg: u16, max_terms: usize) -> impl Strategy<Value = CPoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), (0..=max_deg), coeff()), 0..=max_terms).prop_map(move |v| {
        CPoly::from_terms(
            v.into_iter()
                .filter(|(a, b, c, _)| a + b + c <= max_deg)
                .map(|(a, b, c, k)| (Exps::from_triple(slot, [a, b, c]), k)),
        )
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(f in poly_strategy(Slot::X, 5, 6)) {
        prop_assert_eq!(f.conjugate_series().conjugate_series(), f);
    }

    #[test]
    fn antiderivative_is_right_inverse(f in poly_strategy(Slot::X, 5, 6), ax in 0usize..3, m in prop::sample::select(vec![-4i64, -2, -1, 1, 2, 4])) {
        let a = Axis::ALL[ax];
        prop_assert_eq!(f.jackson_antiderivative(Slot::X, a, m).jackson_derivative(Slot::X, a, m), f);
    }

    #[test]
    fn derivative_power_matches_iteration(f in poly_strategy(Slot::X, 5, 6), k in 0u16..4) {
        let mut it = f.clone();
        for _ in 0..k {
            it = it.jackson_derivative(Slot::X, Axis::Minus, 4);
        }
        prop_assert_eq!(f.jackson_derivative_pow(Slot::X, Axis::Minus, 4, k), it);
    }
}

#[test]
fn qnum_in_text() {
    assert_eq!(parse_scalar("1 + q^4").unwrap(), qnum(2, 4).unwrap());
}
