use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::index::{Axis, Exps, Slot, Triple};
use crate::scalars::{pow_rat, qnum, recip_qnum, Gauss, QScalar};

/// Commutative polynomial over [`QScalar`] in up to four coordinate slots.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    terms: BTreeMap<Exps, QScalar>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        CPoly::constant(QScalar::one())
    }

    pub fn constant(c: QScalar) -> Self {
        CPoly::term(Exps::one(), c)
    }

    pub fn term(e: Exps, c: QScalar) -> Self {
        let mut p = CPoly::zero();
        p.add_term(e, &c);
        p
    }

    pub fn monomial(s: Slot, t: Triple) -> Self {
        CPoly::term(Exps::from_triple(s, t), QScalar::one())
    }

    pub fn var(s: Slot, a: Axis) -> Self {
        CPoly::term(Exps::one().with(s, a, 1), QScalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, QScalar)>>(it: I) -> Self {
        let mut p = CPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &CPoly, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &o.terms {
            self.add_term(*e, &(v * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> QScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn slot_degree(&self, s: Slot) -> u32 {
        self.terms.keys().map(|e| e.slot_degree(s)).max().unwrap_or(0)
    }

    pub fn axis_degree(&self, s: Slot, a: Axis) -> u16 {
        self.terms.keys().map(|e| e.get(s, a)).max().unwrap_or(0)
    }

    pub fn uses_slot(&self, s: Slot) -> bool {
        self.terms.keys().any(|e| e.slot_degree(s) > 0)
    }

    pub fn scale(&self, c: &QScalar) -> CPoly {
        let mut out = CPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_terms<F>(&self, mut f: F) -> CPoly
    where
        F: FnMut(&Exps, &QScalar) -> Option<(Exps, QScalar)>,
    {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if let Some((e2, c2)) = f(e, c) {
                out.add_term(e2, &c2);
            }
        }
        out
    }

    /// Keep only the terms accepted by `keep`.
    pub fn filter<F: Fn(&Exps) -> bool>(&self, keep: F) -> CPoly {
        CPoly { terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Jackson derivative `D_{q^m}` along one axis: `x^n -> [[n]]_{q^m} x^{n-1}`.
    pub fn jackson_derivative(&self, s: Slot, a: Axis, m: i64) -> CPoly {
        self.map_terms(|e, c| {
            let n = e.get(s, a);
            if n == 0 {
                return None;
            }
            let k = qnum(n as u32, m).expect("nonzero Jackson base");
            Some((e.with(s, a, n - 1), c * &k))
        })
    }

    /// `D^k_{q^m}` in one pass.
    pub fn jackson_derivative_pow(&self, s: Slot, a: Axis, m: i64, k: u16) -> CPoly {
        if k == 0 {
            return self.clone();
        }
        self.map_terms(|e, c| {
            let n = e.get(s, a);
            if n < k {
                return None;
            }
            let mut f = c.clone();
            for j in 0..k {
                f = &f * &qnum((n - j) as u32, m).expect("nonzero Jackson base");
            }
            Some((e.with(s, a, n - k), f))
        })
    }

    /// Right inverse of the Jackson derivative: `x^n -> x^{n+1}/[[n+1]]_{q^m}`.
    pub fn jackson_antiderivative(&self, s: Slot, a: Axis, m: i64) -> CPoly {
        self.map_terms(|e, c| {
            let n = e.get(s, a);
            let k = recip_qnum(n as u32 + 1, m).expect("nonzero Jackson base");
            Some((e.with(s, a, n + 1), c * &k))
        })
    }

    /// `q^{m·n̂}` on one axis, i.e. the argument scaling `x -> q^m x`.
    pub fn dilate(&self, s: Slot, a: Axis, m: i64) -> CPoly {
        if m == 0 {
            return self.clone();
        }
        self.map_terms(|e, c| Some((*e, c.mul_q_pow(m * e.get(s, a) as i64))))
    }

    /// Multiply every term by `c^{n}` where `n` is its exponent on one axis.
    pub fn scale_axis(&self, s: Slot, a: Axis, c: &QScalar) -> CPoly {
        self.map_terms(|e, v| Some((*e, v * &c.pow(e.get(s, a) as u32))))
    }

    /// Semilinear conjugation of every slot: `x⁺ -> -q x⁻`, `x³ -> x³`,
    /// `x⁻ -> -q⁻¹ x⁺`, coefficients conjugated.
    pub fn conjugate_series(&self) -> CPoly {
        self.map_terms(|e, c| {
            let mut out = *e;
            let mut shift = 0i64;
            let mut sign = false;
            for s in Slot::ALL {
                let [p, t, m] = e.triple(s);
                out = out.with_triple(s, [m, t, p]);
                shift += p as i64 - m as i64;
                sign ^= (p + m) % 2 == 1;
            }
            let v = c.conj().mul_q_pow(shift);
            Some((out, if sign { -v } else { v }))
        })
    }

    /// Move the content of slot `from` into slot `to` (which must be unused).
    pub fn relabel(&self, from: Slot, to: Slot) -> CPoly {
        if from == to {
            return self.clone();
        }
        self.map_terms(|e, c| {
            let t = e.triple(from);
            let u = e.triple(to);
            let merged = [t[0] + u[0], t[1] + u[1], t[2] + u[2]];
            Some((e.with_triple(from, [0, 0, 0]).with_triple(to, merged), c.clone()))
        })
    }

    pub fn swap_slots(&self, a: Slot, b: Slot) -> CPoly {
        self.map_terms(|e, c| {
            let ta = e.triple(a);
            let tb = e.triple(b);
            Some((e.with_triple(a, tb).with_triple(b, ta), c.clone()))
        })
    }

    /// Set every coordinate of a slot to zero.
    pub fn zero_slot(&self, s: Slot) -> CPoly {
        self.filter(|e| e.slot_degree(s) == 0)
    }

    /// Apply a linear map to the part of every monomial living in slot `s`.
    /// `image` receives the slot triple and returns a polynomial.
    pub fn substitute_slot<F>(&self, s: Slot, mut image: F) -> CPoly
    where
        F: FnMut(Triple) -> CPoly,
    {
        let mut cache: BTreeMap<Triple, CPoly> = BTreeMap::new();
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            let t = e.triple(s);
            let img = cache.entry(t).or_insert_with(|| image(t));
            let rest = e.with_triple(s, [0, 0, 0]);
            for (ie, ic) in &img.terms {
                out.add_term(rest.mul(ie), &(c * ic));
            }
        }
        out
    }

    pub fn conj_coeffs(&self) -> CPoly {
        self.map_terms(|e, c| Some((*e, c.conj())))
    }

    /// Evaluate coefficients at `q0` and coordinates at `point`
    /// (indexed like [`Exps`]).
    pub fn eval_at(&self, q0: &BigRational, point: &[BigRational]) -> Gauss {
        let mut acc = Gauss::default();
        for (e, c) in &self.terms {
            let mut m = BigRational::one();
            for (i, k) in e.0.iter().enumerate() {
                if *k > 0 {
                    m *= pow_rat(&point[i], *k as i64);
                }
            }
            acc += &c.eval(q0).scale(&m);
        }
        acc
    }

    /// Coefficients evaluated at `q0`, exponents kept.
    pub fn eval_coeffs(&self, q0: &BigRational) -> Vec<(Exps, Gauss)> {
        self.terms.iter().map(|(e, c)| (*e, c.eval(q0))).collect()
    }
}

impl<'a> Add<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn add(self, o: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn sub(self, o: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn mul(self, o: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.mul(e2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CPoly> for CPoly {
            type Output = CPoly;
            fn $m(self, o: CPoly) -> CPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CPoly> for CPoly {
            type Output = CPoly;
            fn $m(self, o: &CPoly) -> CPoly {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        -&self
    }
}

impl From<QScalar> for CPoly {
    fn from(c: QScalar) -> Self {
        CPoly::constant(c)
    }
}

fn render_mono(e: &Exps) -> String {
    let mut parts = Vec::new();
    for s in Slot::ALL {
        for a in Axis::ALL {
            let k = e.get(s, a);
            if k == 0 {
                continue;
            }
            let prefix = if s == Slot::X { String::new() } else { format!("{}.", s.name()) };
            let base = format!("{prefix}x{}", a.symbol());
            parts.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
    }
    parts.join("*")
}

/// Display order: higher total degree first, then reverse lexicographic on
/// the exponent vector so `x⁺` leads within a degree.
fn display_order(p: &CPoly) -> Vec<(&Exps, &QScalar)> {
    let mut v: Vec<_> = p.terms.iter().collect();
    v.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then(b.0.cmp(&a.0)));
    v
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in display_order(self).into_iter().enumerate() {
            let (neg, body) = render_term(e, c);
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn render_term(e: &Exps, c: &QScalar) -> (bool, String) {
    let mono = render_mono(e);
    let (neg, mag) = match c.as_laurent().and_then(|l| l.as_monomial()) {
        Some((_, g)) => {
            let (neg, _) = crate::scalars::split_sign(g);
            (neg, if neg { -c } else { c.clone() })
        }
        None => (false, c.clone()),
    };
    let body = if mono.is_empty() {
        if mag.is_atomic() {
            mag.to_string()
        } else {
            format!("({mag})")
        }
    } else if mag.is_one() {
        mono
    } else if mag.is_atomic() {
        format!("{mag}*{mono}")
    } else {
        format!("({mag})*{mono}")
    };
    (neg, body)
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
