use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::Gauss;

/// Laurent polynomial in `q` with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Gauss>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: Gauss) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn monomial(c: Gauss, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    pub fn q_pow(k: i64) -> Self {
        Laurent::monomial(Gauss::one(), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Gauss)>>(it: I) -> Self {
        let mut out = Laurent::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: &Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &Gauss)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single term if this is `c·q^k`.
    pub fn as_monomial(&self) -> Option<(i64, &Gauss)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::zero());
        }
        match self.as_monomial() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn conj(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, v)| (*e, v.conj())).collect() }
    }

    /// Substitute `q -> q^-1`, conjugating nothing.
    pub fn invert_q(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }

    pub fn eval(&self, q0: &BigRational) -> Gauss {
        let mut acc = Gauss::zero();
        for (e, c) in &self.terms {
            acc += &c.scale(&pow_rat(q0, *e));
        }
        acc
    }

    /// Exact division by a monic integer polynomial `m` (coefficients low to high,
    /// constant term nonzero). Returns `None` when there is a remainder.
    pub fn div_exact_monic(&self, m: &[i64]) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let deg_m = m.len() - 1;
        if deg_m == 0 {
            return Some(self.clone());
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let n = (hi - lo) as usize;
        if n < deg_m {
            return None;
        }
        let mut rem: Vec<Gauss> = vec![Gauss::zero(); n + 1];
        for (e, c) in &self.terms {
            rem[(e - lo) as usize] = c.clone();
        }
        let mut quot = vec![Gauss::zero(); n - deg_m + 1];
        for i in (0..=n - deg_m).rev() {
            let lead = rem[i + deg_m].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, mc) in m.iter().enumerate() {
                if *mc != 0 {
                    let t = lead.scale(&BigRational::from_integer((*mc).into()));
                    rem[i + j] -= &t;
                }
            }
            quot[i] = lead;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent::from_terms(quot.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c))))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Laurent::constant(Gauss::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

pub fn pow_rat(q0: &BigRational, e: i64) -> BigRational {
    use num_traits::Pow;
    if e >= 0 {
        Pow::pow(q0, e as u64)
    } else {
        Pow::pow(q0.recip(), (-e) as u64)
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, v)| (*e, -v)).collect() }
    }
}

impl std::fmt::Debug for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render(self))
    }
}

/// Render as `c*q^k + ...`, highest power of `q` first.
pub fn render(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms.iter().rev().enumerate() {
        let (neg, mag) = split_sign(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let qpart = match *e {
            0 => String::new(),
            1 => "q".to_string(),
            k => format!("q^{k}"),
        };
        if qpart.is_empty() {
            out.push_str(&wrap_coeff(&mag));
        } else if mag.is_one() {
            out.push_str(&qpart);
        } else {
            out.push_str(&wrap_coeff(&mag));
            out.push('*');
            out.push_str(&qpart);
        }
    }
    out
}

/// Pull an overall sign out of a coefficient so sums render as `a - b`.
pub(crate) fn split_sign(c: &Gauss) -> (bool, Gauss) {
    use num_traits::Signed;
    let neg = if c.re.is_zero() { c.im.is_negative() } else { c.re.is_negative() };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

pub(crate) fn wrap_coeff(c: &Gauss) -> String {
    if c.is_atomic() && !c.to_string().contains('/') {
        c.to_string()
    } else {
        format!("({c})")
    }
}
