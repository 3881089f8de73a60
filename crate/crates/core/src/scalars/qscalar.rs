use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic, euler_phi};
use super::gauss::Gauss;
use super::laurent::{self, Laurent};
use super::ScalarError;

/// Exact scalar: a Laurent polynomial in `q` over the Gaussian rationals,
/// localized at cyclotomic polynomials so that q-numbers are invertible.
///
/// Stored as `num / Π Φ_d(q)^e_d` with no `Φ_d` of the denominator dividing
/// `num`; that makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QScalar {
    num: Laurent,
    den: BTreeMap<u32, u32>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar::default()
    }

    pub fn one() -> Self {
        QScalar::from_laurent(Laurent::constant(Gauss::one()))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        QScalar { num, den: BTreeMap::new() }
    }

    pub fn from_gauss(c: Gauss) -> Self {
        QScalar::from_laurent(Laurent::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        QScalar::from_gauss(Gauss::from_int(n))
    }

    pub fn from_rat(r: BigRational) -> Self {
        QScalar::from_gauss(Gauss::real(r))
    }

    pub fn i() -> Self {
        QScalar::from_gauss(Gauss::i())
    }

    /// `c·q^k`
    pub fn mono(c: Gauss, k: i64) -> Self {
        QScalar::from_laurent(Laurent::monomial(c, k))
    }

    pub fn q_pow(k: i64) -> Self {
        QScalar::from_laurent(Laurent::q_pow(k))
    }

    pub fn q() -> Self {
        QScalar::q_pow(1)
    }

    /// λ = q − q⁻¹
    pub fn lambda() -> Self {
        QScalar::from_laurent(Laurent::from_terms([(1, Gauss::one()), (-1, -Gauss::one())]))
    }

    /// λ₊ = q + q⁻¹
    pub fn lambda_plus() -> Self {
        QScalar::from_laurent(Laurent::from_terms([(1, Gauss::one()), (-1, Gauss::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    /// Exponents of the cyclotomic factors in the denominator.
    pub fn denominator(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// The plain Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub(crate) fn from_parts(num: Laurent, den: BTreeMap<u32, u32>) -> Self {
        QScalar::canonical(num, den)
    }

    fn canonical(mut num: Laurent, mut den: BTreeMap<u32, u32>) -> Self {
        if num.is_zero() {
            return QScalar::zero();
        }
        for (d, e) in den.iter_mut() {
            if *e == 0 {
                continue;
            }
            let phi = cyclotomic(*d);
            while *e > 0 {
                match num.div_exact_monic(&phi) {
                    Some(n) => {
                        num = n;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        QScalar { num, den }
    }

    fn expand_den(den: &BTreeMap<u32, u32>) -> Laurent {
        let mut acc = Laurent::constant(Gauss::one());
        for (d, e) in den {
            acc = &acc * &phi_laurent(*d).pow(*e);
        }
        acc
    }

    /// Substitute `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        // Φ_d(q^-1) = q^-φ(d) Φ_d(q) for d > 1, and Φ_1(q^-1) = -q^-1 Φ_1(q)
        let mut shift = 0i64;
        let mut neg = false;
        for (d, e) in &self.den {
            if *d == 1 {
                neg ^= e % 2 == 1;
                shift += *e as i64;
            } else {
                shift += (euler_phi(*d) * e) as i64;
            }
        }
        let num = self.num.invert_q().shift(shift);
        let num = if neg { -&num } else { num };
        QScalar { num, den: self.den.clone() }
    }

    pub fn conj(&self) -> Self {
        QScalar { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        QScalar::canonical(self.num.scale(c), self.den.clone())
    }

    pub fn mul_q_pow(&self, k: i64) -> Self {
        QScalar { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QScalar::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<Self, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.try_inv()?.pow((-e) as u32))
        }
    }

    /// Inverse, available when the numerator factors as a constant times a
    /// power of `q` times cyclotomic polynomials.
    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::NotInvertible("0".into()));
        }
        let (c, k, factors) =
            factor_cyclotomic(&self.num).ok_or_else(|| ScalarError::NotInvertible(laurent::render(&self.num)))?;
        let num = QScalar::expand_den(&self.den).shift(-k).scale(&c.inv().expect("nonzero leading constant"));
        Ok(QScalar::canonical(num, factors))
    }

    pub fn try_div(&self, o: &QScalar) -> Result<Self, ScalarError> {
        Ok(self * &o.try_inv()?)
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Gauss {
        let n = self.num.eval(q0);
        if self.den.is_empty() {
            return n;
        }
        let mut d = BigRational::one();
        for (k, e) in &self.den {
            let v = eval_int_poly(&cyclotomic(*k), q0);
            for _ in 0..*e {
                d *= &v;
            }
        }
        n.scale(&d.recip())
    }
}

fn eval_int_poly(p: &[i64], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer((*c).into());
    }
    acc
}

fn phi_laurent(d: u32) -> Laurent {
    Laurent::from_terms(cyclotomic(d).iter().enumerate().map(|(i, c)| (i as i64, Gauss::from_int(*c))))
}

/// Split `p = c·q^k·Π Φ_d^e` if such a factorization exists.
pub(crate) fn factor_cyclotomic(p: &Laurent) -> Option<(Gauss, i64, BTreeMap<u32, u32>)> {
    let k = p.min_exp()?;
    let mut rest = p.shift(-k);
    let mut factors = BTreeMap::new();
    loop {
        let deg = rest.max_exp()? as u32;
        if deg == 0 {
            let c = rest.as_constant()?;
            return Some((c, k, factors));
        }
        let bound = 2 * deg * deg + 2;
        let mut hit = false;
        for d in 1..=bound {
            if euler_phi(d) > deg {
                continue;
            }
            if let Some(quot) = rest.div_exact_monic(&cyclotomic(d)) {
                rest = quot;
                *factors.entry(d).or_insert(0) += 1;
                hit = true;
                break;
            }
        }
        if !hit {
            return None;
        }
    }
}

fn merge_dens(a: &QScalar, b: &QScalar) -> (Laurent, Laurent, BTreeMap<u32, u32>) {
    let mut den = a.den.clone();
    for (d, e) in &b.den {
        let v = den.entry(*d).or_insert(0);
        *v = (*v).max(*e);
    }
    let lift = |s: &QScalar| {
        let mut missing = BTreeMap::new();
        for (d, e) in &den {
            let have = s.den.get(d).copied().unwrap_or(0);
            if *e > have {
                missing.insert(*d, e - have);
            }
        }
        if missing.is_empty() {
            s.num.clone()
        } else {
            &s.num * &QScalar::expand_den(&missing)
        }
    };
    (lift(a), lift(b), den)
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, o: &QScalar) -> QScalar {
        if self.den.is_empty() && o.den.is_empty() {
            return QScalar::from_laurent(&self.num + &o.num);
        }
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b, den) = merge_dens(self, o);
        QScalar::canonical(&a + &b, den)
    }
}

impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, o: &QScalar) -> QScalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, o: &QScalar) -> QScalar {
        if self.den.is_empty() && o.den.is_empty() {
            return QScalar::from_laurent(&self.num * &o.num);
        }
        if self.is_zero() || o.is_zero() {
            return QScalar::zero();
        }
        let mut den = self.den.clone();
        for (d, e) in &o.den {
            *den.entry(*d).or_insert(0) += e;
        }
        QScalar::canonical(&self.num * &o.num, den)
    }
}

impl<'a> Div<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    /// Panics when the divisor is not invertible; use [`QScalar::try_div`] otherwise.
    fn div(self, o: &QScalar) -> QScalar {
        self.try_div(o).expect("divisor is not a unit of the scalar ring")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, o: QScalar) -> QScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, o: &QScalar) -> QScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, o: &QScalar) {
        if self.den.is_empty() && o.den.is_empty() {
            for (k, c) in o.num.terms() {
                self.num.add_term(*k, c);
            }
        } else {
            *self = &*self + o;
        }
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, o: &QScalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, o: &QScalar) {
        *self = &*self * o;
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::one()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::from_int(n)
    }
}

impl From<Gauss> for QScalar {
    fn from(c: Gauss) -> Self {
        QScalar::from_gauss(c)
    }
}

impl QScalar {
    /// True when the rendering needs parentheses to act as a factor.
    pub fn is_atomic(&self) -> bool {
        self.den.is_empty()
            && match self.num.as_monomial() {
                Some((0, c)) => c.is_atomic(),
                Some((_, c)) => c.is_atomic() && !c.to_string().contains('/'),
                None => self.num.is_zero(),
            }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", laurent::render(&self.num));
        }
        let num = laurent::render(&self.num);
        let den = laurent::render(&QScalar::expand_den(&self.den));
        if self.num.len() == 1 && !num.contains('/') {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qnum;

    #[test]
    fn division_by_q_numbers_cancels() {
        let n3 = qnum(3, 2).unwrap();
        let r = &(&n3 * &QScalar::q()) / &n3;
        assert_eq!(r, QScalar::q());
        let third = &QScalar::one() / &n3;
        assert_eq!(&third * &n3, QScalar::one());
        assert_eq!(&third + &third, &QScalar::from_int(2) / &n3);
    }

    #[test]
    fn sums_over_distinct_denominators() {
        let a = &QScalar::one() / &qnum(2, 1).unwrap();
        let b = &QScalar::one() / &qnum(2, -1).unwrap();
        // 1/(1+q) + 1/(1+q^-1) = 1
        assert_eq!(&a + &b, QScalar::one());
    }

    #[test]
    fn non_cyclotomic_divisor_is_rejected() {
        let p = &QScalar::from_int(2) + &QScalar::q();
        assert!(QScalar::one().try_div(&p).is_err());
    }

    #[test]
    fn q_inversion() {
        let a = &QScalar::one() / &qnum(3, 2).unwrap();
        assert_eq!(a.invert_q(), &QScalar::one() / &qnum(3, -2).unwrap());
        let b = &QScalar::lambda() / &(&QScalar::one() - &QScalar::q());
        assert_eq!(b.invert_q().invert_q(), b);
        assert_eq!(b.invert_q(), &(-QScalar::lambda()) / &(&QScalar::one() - &QScalar::q_pow(-1)));
    }

    #[test]
    fn display_of_fraction() {
        let a = &QScalar::one() / &qnum(2, 4).unwrap();
        assert_eq!(a.to_string(), "1/(q^4 + 1)");
    }
}
