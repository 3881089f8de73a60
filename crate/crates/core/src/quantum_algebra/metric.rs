use crate::scalars::QScalar;
use crate::series::Axis;

/// Entry `g_{AB}`; the inverse metric `g^{AB}` has the same entries.
pub fn metric(a: Axis, b: Axis) -> QScalar {
    use Axis::*;
    match (a, b) {
        (Plus, Minus) => -QScalar::q(),
        (Three, Three) => QScalar::one(),
        (Minus, Plus) => -QScalar::q_pow(-1),
        _ => QScalar::zero(),
    }
}

/// The only nonzero entry of row `A`: `(B, g_{AB})`.
pub fn lower_pair(a: Axis) -> (Axis, QScalar) {
    (a.partner(), metric(a, a.partner()))
}

/// `x_A = g_{AB} x^B` as coefficients over the contravariant coordinates.
pub fn lower_index(a: Axis) -> Vec<(Axis, QScalar)> {
    Axis::ALL.into_iter().map(|b| (b, metric(a, b))).filter(|(_, g)| !g.is_zero()).collect()
}

/// `x^A = g^{AB} x_B` as coefficients over the covariant coordinates.
pub fn raise_index(a: Axis) -> Vec<(Axis, QScalar)> {
    lower_index(a)
}

/// `g^{EF} g_{EF}`
pub fn metric_trace() -> QScalar {
    let mut acc = QScalar::zero();
    for e in Axis::ALL {
        for f in Axis::ALL {
            acc += &(&metric(e, f) * &metric(e, f));
        }
    }
    acc
}
