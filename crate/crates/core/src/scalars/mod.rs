//! Exact scalars: Gaussian rationals, Laurent polynomials in `q`, and the
//! cyclotomically localized ring [`QScalar`] that carries q-number inverses.

mod cyclotomic;
mod gauss;
mod laurent;
mod qscalar;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclotomic::{cyclotomic, euler_phi};
pub use gauss::{rat, rat_to_f64, Gauss};
pub(crate) use laurent::split_sign;
pub use laurent::{pow_rat, Laurent};
pub use qscalar::QScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("q-number base exponent must be nonzero")]
    DegenerateBase,
    #[error("double factorial needs an even argument, got {0}")]
    OddDoubleFactorial(u32),
    #[error("not invertible in the scalar ring: {0}")]
    NotInvertible(String),
    #[error("evaluation point must be positive and different from 1, got {0}")]
    BadEvalPoint(String),
}

/// `[[n]]_{q^a} = 1 + q^a + ... + q^{a(n-1)}`
pub fn qnum(n: u32, a: i64) -> Result<QScalar, ScalarError> {
    if a == 0 {
        return Err(ScalarError::DegenerateBase);
    }
    Ok(QScalar::from_laurent(Laurent::from_terms((0..n as i64).map(|k| (a * k, Gauss::one())))))
}

/// `(1 - q^{an}) / (1 - q^a)` for any integer `n`, negative included.
pub fn qnum_signed(n: i64, a: i64) -> Result<QScalar, ScalarError> {
    if n >= 0 {
        qnum(n as u32, a)
    } else {
        Ok(-qnum((-n) as u32, a)?.mul_q_pow(a * n))
    }
}

pub fn qfact(n: u32, a: i64) -> Result<QScalar, ScalarError> {
    let mut acc = QScalar::one();
    for m in 1..=n {
        acc = &acc * &qnum(m, a)?;
    }
    Ok(acc)
}

pub fn qdfact_even(two_k: u32, a: i64) -> Result<QScalar, ScalarError> {
    if !two_k.is_multiple_of(2) {
        return Err(ScalarError::OddDoubleFactorial(two_k));
    }
    let mut acc = QScalar::one();
    for j in 1..=two_k / 2 {
        acc = &acc * &qnum(2 * j, a)?;
    }
    Ok(acc)
}

/// `1/[[n]]_{q^a}` built straight from its cyclotomic factorization.
pub fn recip_qnum(n: u32, a: i64) -> Result<QScalar, ScalarError> {
    if a == 0 {
        return Err(ScalarError::DegenerateBase);
    }
    if n == 0 {
        return Err(ScalarError::NotInvertible("0".into()));
    }
    // (q^{bn} - 1)/(q^b - 1) = Π Φ_d over d | bn with d not dividing b
    let b = a.unsigned_abs() as u32;
    let mut den = std::collections::BTreeMap::new();
    for d in 1..=b * n {
        if (b * n).is_multiple_of(d) && !b.is_multiple_of(d) {
            den.insert(d, 1);
        }
    }
    let shift = if a < 0 { (b * (n - 1)) as i64 } else { 0 };
    Ok(QScalar::from_parts(Laurent::q_pow(shift), den))
}

pub fn recip_qfact(n: u32, a: i64) -> Result<QScalar, ScalarError> {
    let mut acc = QScalar::one();
    for m in 1..=n {
        acc = &acc * &recip_qnum(m, a)?;
    }
    Ok(acc)
}

pub fn recip_qdfact_even(two_k: u32, a: i64) -> Result<QScalar, ScalarError> {
    if !two_k.is_multiple_of(2) {
        return Err(ScalarError::OddDoubleFactorial(two_k));
    }
    let mut acc = QScalar::one();
    for j in 1..=two_k / 2 {
        acc = &acc * &recip_qnum(2 * j, a)?;
    }
    Ok(acc)
}

/// A rational evaluation point `q0 > 0`, `q0 != 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    q0: BigRational,
}

impl EvalPoint {
    pub fn new(q0: BigRational) -> Result<Self, ScalarError> {
        if q0 <= BigRational::zero() || q0.is_one() {
            return Err(ScalarError::BadEvalPoint(q0.to_string()));
        }
        Ok(EvalPoint { q0 })
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }
}

pub fn eval(s: &QScalar, at: &EvalPoint) -> Gauss {
    s.eval(&at.q0)
}
