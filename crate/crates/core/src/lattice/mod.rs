//! Jackson integration and derivative actions on signed q-lattices.
//!
//! A point carries a sign and an index per axis; its coordinate is
//! `sign · q0^(step·j) · x0` with step 2 on the `±` axes and 1 on the
//! `3` axis. Jackson derivatives and dilations become index shifts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::braided::{translate_in, uhat, Variant};
use crate::derivatives::{action_terms, apply_action, momentum_apply, Action, Index, OpTerm};
use crate::scalars::{pow_rat, rat, recip_qnum, Gauss, QScalar};
use crate::series::{Axis, CPoly, Slot};
use crate::star::star_in;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid window: {0}")]
    BadWindow(String),
    #[error("infinite-range integral of a function without compact support")]
    NonCompact,
    #[error("support reaches the window edge (index {0} on axis {1})")]
    MarginOverflow(i32, char),
    #[error("shift q^{0} does not fit the lattice step of axis {1}")]
    OffLattice(i64, char),
}

/// Lattice step exponent of an axis.
pub fn step(a: Axis) -> i64 {
    match a {
        Axis::Three => 1,
        _ => 2,
    }
}

/// `(sign, index)` per axis, in the order `+, 3, -`.
pub type Point = [(i8, i32); 3];

#[derive(Clone, Debug)]
pub struct LatticeWindow {
    pub q0: BigRational,
    pub x0: BigRational,
    pub half_width: i32,
    pub margin: i32,
    /// Put the `x⁻` grid through `x0/q0` instead of `x0`, so that
    /// conjugation (`x⁺ -> -q x⁻`) maps the lattice onto itself.
    pub conjugation_compatible: bool,
    powers: Vec<BigRational>,
}

impl LatticeWindow {
    pub fn new(q0: BigRational, x0: BigRational, half_width: i32, margin: i32) -> Result<Self, LatticeError> {
        if q0 <= BigRational::one() {
            return Err(LatticeError::BadWindow(format!("q0 = {q0} must exceed 1")));
        }
        if !x0.is_positive() {
            return Err(LatticeError::BadWindow(format!("x0 = {x0} must be positive")));
        }
        if margin < 4 {
            return Err(LatticeError::BadWindow(format!("margin {margin} below 4")));
        }
        if half_width <= margin {
            return Err(LatticeError::BadWindow(format!("half width {half_width} not above margin {margin}")));
        }
        let top = 2 * (half_width as i64 + 8);
        let powers = (-top..=top).map(|k| pow_rat(&q0, k)).collect();
        Ok(LatticeWindow { q0, x0, half_width, margin, conjugation_compatible: true, powers })
    }

    /// The same window with both `±` grids through `x0`.
    pub fn with_common_base(mut self) -> Self {
        self.conjugation_compatible = false;
        self
    }

    /// Base point of an axis grid.
    pub fn base(&self, a: Axis) -> BigRational {
        if a == Axis::Minus && self.conjugation_compatible {
            &self.x0 / &self.q0
        } else {
            self.x0.clone()
        }
    }

    /// `q0 = 11/10`, `x0 = 1`.
    pub fn standard(half_width: i32, margin: i32) -> Result<Self, LatticeError> {
        Self::new(rat(11, 10), BigRational::one(), half_width, margin)
    }

    pub fn q_pow(&self, k: i64) -> BigRational {
        let top = (self.powers.len() as i64 - 1) / 2;
        if k.abs() <= top {
            self.powers[(k + top) as usize].clone()
        } else {
            pow_rat(&self.q0, k)
        }
    }

    pub fn coord(&self, a: Axis, p: &Point) -> BigRational {
        let (s, j) = p[a.index()];
        let v = &self.q_pow(step(a) * j as i64) * &self.base(a);
        if s < 0 {
            -v
        } else {
            v
        }
    }

    /// Jackson weight `(q0^step − 1)|x|` of one axis.
    pub fn axis_weight(&self, a: Axis, j: i32) -> BigRational {
        let st = step(a);
        &(&self.q_pow(st) - BigRational::one()) * &(&self.q_pow(st * j as i64) * &self.base(a))
    }

    pub fn weight(&self, p: &Point) -> BigRational {
        Axis::ALL.iter().map(|a| self.axis_weight(*a, p[a.index()].1)).fold(BigRational::one(), |x, y| x * y)
    }

    pub fn in_window(&self, p: &Point) -> bool {
        p.iter().all(|(_, j)| j.abs() <= self.half_width)
    }

    /// Inside the window with the margin shells removed.
    pub fn interior(&self, p: &Point) -> bool {
        p.iter().all(|(_, j)| j.abs() <= self.half_width - self.margin)
    }

    fn axis_points(&self, limit: i32) -> Vec<(i8, i32)> {
        let mut v = Vec::new();
        for s in [1i8, -1] {
            for j in -limit..=limit {
                v.push((s, j));
            }
        }
        v
    }

    fn points(&self, limit: i32) -> Vec<Point> {
        let ax = self.axis_points(limit);
        let mut out = Vec::with_capacity(ax.len().pow(3));
        for a in &ax {
            for b in &ax {
                for c in &ax {
                    out.push([*a, *b, *c]);
                }
            }
        }
        out
    }
}

/// Sparse table of values on lattice points.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeFn {
    pub values: BTreeMap<Point, Gauss>,
    /// Vanishes outside the stored points.
    pub compact: bool,
}

impl LatticeFn {
    pub fn zero() -> Self {
        LatticeFn { values: BTreeMap::new(), compact: true }
    }

    pub fn delta(p: Point, v: Gauss) -> Self {
        let mut f = Self::zero();
        f.set(p, v);
        f
    }

    pub fn get(&self, p: &Point) -> Gauss {
        self.values.get(p).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, p: Point, v: Gauss) {
        if v.is_zero() {
            self.values.remove(&p);
        } else {
            self.values.insert(p, v);
        }
    }

    pub fn add(&self, o: &LatticeFn) -> LatticeFn {
        let mut out = self.clone();
        for (p, v) in &o.values {
            let s = &out.get(p) + v;
            out.set(*p, s);
        }
        out.compact = self.compact && o.compact;
        out
    }

    pub fn scale(&self, c: &Gauss) -> LatticeFn {
        let mut out = LatticeFn { values: BTreeMap::new(), compact: self.compact };
        for (p, v) in &self.values {
            out.set(*p, v * c);
        }
        out
    }

    /// Random compactly supported function inside the window interior.
    pub fn random_compact<R: Rng>(rng: &mut R, w: &LatticeWindow, points: usize) -> LatticeFn {
        Self::random_within(rng, w.half_width - w.margin, points)
    }

    /// Random function supported on indices `|j| ≤ lim`.
    pub fn random_within<R: Rng>(rng: &mut R, lim: i32, points: usize) -> LatticeFn {
        let mut f = LatticeFn::zero();
        for _ in 0..points {
            let mut p = [(1i8, 0i32); 3];
            for slot in p.iter_mut() {
                *slot = (if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-lim..=lim));
            }
            let v = Gauss::new(
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
            );
            let s = &f.get(&p) + &v;
            f.set(p, s);
        }
        f
    }
}

/// Compact functions must vanish on the margin shells.
pub fn check_margin(g: &LatticeFn, w: &LatticeWindow) -> Result<(), LatticeError> {
    if !g.compact {
        return Ok(());
    }
    for p in g.values.keys() {
        if let Some(a) = Axis::ALL.into_iter().find(|a| p[a.index()].1.abs() > w.half_width - w.margin) {
            return Err(LatticeError::MarginOverflow(p[a.index()].1, a.symbol()));
        }
    }
    Ok(())
}

fn shift_point(p: &Point, a: Axis, n: i32) -> Point {
    let mut out = *p;
    out[a.index()].1 += n;
    out
}

fn index_shift(a: Axis, m: i64) -> Result<i32, LatticeError> {
    if m % step(a) != 0 {
        return Err(LatticeError::OffLattice(m, a.symbol()));
    }
    Ok((m / step(a)) as i32)
}

/// Points where an operator reading `g(p + n)` must be evaluated.
fn targets(g: &LatticeFn, a: Axis, n: i32, w: &LatticeWindow) -> Result<Vec<Point>, LatticeError> {
    if g.compact {
        let mut v: Vec<Point> = g.values.keys().copied().collect();
        v.extend(g.values.keys().map(|p| shift_point(p, a, -n)));
        v.sort();
        v.dedup();
        if let Some(p) = v.iter().find(|p| !w.in_window(p)) {
            return Err(LatticeError::MarginOverflow(p[a.index()].1, a.symbol()));
        }
        Ok(v)
    } else {
        Ok(w.points(w.half_width).into_iter().filter(|p| w.in_window(&shift_point(p, a, n))).collect())
    }
}

/// `(g(q^m x) − g(x)) / ((q^m − 1) x)` along axis `a`.
pub fn jackson_diff(g: &LatticeFn, a: Axis, m: i64, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    let n = index_shift(a, m)?;
    let qm1 = &w.q_pow(m) - BigRational::one();
    let mut out = LatticeFn { values: BTreeMap::new(), compact: g.compact };
    for p in targets(g, a, n, w)? {
        let diff = &g.get(&shift_point(&p, a, n)) - &g.get(&p);
        if diff.is_zero() {
            continue;
        }
        let den = &qm1 * &w.coord(a, &p);
        out.set(p, diff.scale(&den.recip()));
    }
    Ok(out)
}

/// `g(q^m x)` along axis `a`.
pub fn dilate(g: &LatticeFn, a: Axis, m: i64, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    let n = index_shift(a, m)?;
    if n == 0 {
        return Ok(g.clone());
    }
    let mut out = LatticeFn { values: BTreeMap::new(), compact: g.compact };
    for p in targets(g, a, n, w)? {
        out.set(p, g.get(&shift_point(&p, a, n)));
    }
    Ok(out)
}

/// Multiply pointwise by `c · x^mult`.
pub fn multiply(g: &LatticeFn, c: &Gauss, mult: [u16; 3], w: &LatticeWindow) -> LatticeFn {
    let mut out = LatticeFn { values: BTreeMap::new(), compact: g.compact };
    for (p, v) in &g.values {
        let mut m = BigRational::one();
        for a in Axis::ALL {
            let k = mult[a.index()];
            if k > 0 {
                m *= pow_rat(&w.coord(a, p), k as i64);
            }
        }
        out.set(*p, (v * c).scale(&m));
    }
    out
}

pub fn apply_op_term(t: &OpTerm, g: &LatticeFn, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    let mut h = g.clone();
    for j in &t.derivs {
        for _ in 0..j.power {
            h = jackson_diff(&h, j.axis, j.base, w)?;
        }
    }
    for a in Axis::ALL {
        h = dilate(&h, a, t.dil[a.index()], w)?;
    }
    Ok(multiply(&h, &t.coeff.eval(&w.q0), t.mult, w))
}

/// Any of the four derivative actions, realized on the lattice.
pub fn d_lattice(action: Action, idx: Index, g: &LatticeFn, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    check_margin(g, w)?;
    let mut out = LatticeFn { values: BTreeMap::new(), compact: g.compact };
    for t in action_terms(action, idx) {
        out = out.add(&apply_op_term(&t, g, w)?);
    }
    Ok(out)
}

pub fn d_left_lattice(idx: Index, g: &LatticeFn, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    d_lattice(Action::Left, idx, g, w)
}

/// Which side the polynomial factor sits on in [`star_poly_lattice`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `f ⊛ g` (`Side::Left`) or `g ⊛ f` (`Side::Right`) for a polynomial `f`
/// in slot `x` and a lattice function `g`.
pub fn star_poly_lattice(f: &CPoly, g: &LatticeFn, side: Side, w: &LatticeWindow) -> Result<LatticeFn, LatticeError> {
    let lam = QScalar::lambda().eval(&w.q0);
    let s = Slot::X;
    let (fa, ga) = match side {
        Side::Left => (Axis::Minus, Axis::Plus),
        Side::Right => (Axis::Plus, Axis::Minus),
    };
    let kmax = f.axis_degree(s, fa);
    let mut out = LatticeFn { values: BTreeMap::new(), compact: g.compact };
    let mut fk = f.clone();
    let mut gk = g.clone();
    let mut lam_k = Gauss::one();
    for k in 0..=kmax {
        if k > 0 {
            fk = fk.jackson_derivative(s, fa, 4);
            gk = jackson_diff(&gk, ga, 4, w)?;
            let r = recip_qnum(k as u32, 4).unwrap().eval(&w.q0);
            lam_k = &(&lam_k * &lam) * &r;
        }
        for (e, c) in fk.terms() {
            let [a, b, cc] = e.triple(s);
            let gd = match side {
                // weight q^{2(b·a' + c·b')} moves onto the arguments of g
                Side::Left => dilate(&dilate(&gk, Axis::Plus, 2 * b as i64, w)?, Axis::Three, 2 * cc as i64, w)?,
                Side::Right => dilate(&dilate(&gk, Axis::Three, 2 * a as i64, w)?, Axis::Minus, 2 * b as i64, w)?,
            };
            let coef = &c.eval(&w.q0) * &lam_k;
            out = out.add(&multiply(&gd, &coef, [a, b + 2 * k, cc], w));
        }
    }
    Ok(out)
}

/// Evaluate a polynomial in slot `x` at every window point.
pub fn sample(f: &CPoly, w: &LatticeWindow) -> LatticeFn {
    sample_within(f, w, w.half_width, false)
}

/// `sample` restricted to the interior, zero on the margin shells.
pub fn cutoff(f: &CPoly, w: &LatticeWindow) -> LatticeFn {
    sample_within(f, w, w.half_width - w.margin, true)
}

fn sample_within(f: &CPoly, w: &LatticeWindow, limit: i32, compact: bool) -> LatticeFn {
    let coeffs = f.eval_coeffs(&w.q0);
    let mut out = LatticeFn { values: BTreeMap::new(), compact };
    for p in w.points(limit) {
        let mut acc = Gauss::zero();
        for (e, c) in &coeffs {
            let mut m = BigRational::one();
            for a in Axis::ALL {
                let k = e.get(Slot::X, a);
                if k > 0 {
                    m *= pow_rat(&w.coord(a, &p), k as i64);
                }
            }
            acc += &c.scale(&m);
        }
        out.set(p, acc);
    }
    out
}

/// Whole-space integral: `x⁺` innermost, then `x³`, then `x⁻`, unit
/// normalization.
pub fn integral_r3(f: &LatticeFn, w: &LatticeWindow) -> Result<Gauss, LatticeError> {
    if !f.compact {
        return Err(LatticeError::NonCompact);
    }
    let mut acc = Gauss::zero();
    for (p, v) in &f.values {
        acc += &v.scale(&w.weight(p));
    }
    Ok(acc)
}

/// Integral of the cutoff of a polynomial, summed axis by axis.
pub fn integral_cutoff_poly(f: &CPoly, w: &LatticeWindow) -> Gauss {
    let lim = w.half_width - w.margin;
    let maxdeg = f.degree() as usize;
    // moments[a][n] = Σ weight · coord^n over the interior of axis a
    let moments: Vec<Vec<BigRational>> = Axis::ALL
        .iter()
        .map(|a| {
            let mut m = vec![BigRational::zero(); maxdeg + 1];
            for j in -lim..=lim {
                let wt = w.axis_weight(*a, j);
                let x = &w.q_pow(step(*a) * j as i64) * &w.base(*a);
                let mut xn = BigRational::one();
                for (n, slot) in m.iter_mut().enumerate() {
                    // both signs: odd powers cancel
                    if n % 2 == 0 {
                        *slot += &(&wt * &xn) * BigRational::from_integer(BigInt::from(2));
                    }
                    xn *= &x;
                }
            }
            m
        })
        .collect();
    let mut acc = Gauss::zero();
    for (e, c) in f.eval_coeffs(&w.q0) {
        let t = e.triple(Slot::X);
        let m = (0..3).fold(BigRational::one(), |x, i| x * &moments[i][t[i] as usize]);
        acc += &c.scale(&m);
    }
    acc
}

/// Range of a one-axis Jackson integral.
#[derive(Clone, Debug, PartialEq)]
pub enum LineRange {
    /// `∫₀^x` with `x = sign · q0^(step·j) · x0`
    ZeroTo(i8, i32),
    /// `∫_x^{±∞}`
    ToInfinity(i8, i32),
    Full,
}

/// Integrand of a one-axis Jackson integral.
#[derive(Clone, Debug, PartialEq)]
pub enum LineIntegrand {
    /// Values at `(sign, j)`, zero elsewhere.
    Table(BTreeMap<(i8, i32), Gauss>),
    /// Polynomial `Σ c_n z^n`; only `ZeroTo` is finite.
    Poly(Vec<Gauss>),
}

/// One-axis Jackson integral with lattice step `q0^m` through `x0`.
pub fn jackson_integral_line(
    f: &LineIntegrand,
    range: &LineRange,
    m: i64,
    w: &LatticeWindow,
) -> Result<Gauss, LatticeError> {
    let qm = w.q_pow(m);
    let coord = |j: i32| &w.q_pow(m * j as i64) * &w.x0;
    let weight = |j: i32| &(&qm - BigRational::one()) * &coord(j);
    match (f, range) {
        (LineIntegrand::Poly(cs), LineRange::ZeroTo(s, j)) => {
            // (q^m − 1) x Σ_{i≥1} q^{-mi} (q^{-mi} x)^n = x^{n+1}(q^m − 1)/(q^{m(n+1)} − 1)
            let x = if *s < 0 { -coord(*j) } else { coord(*j) };
            let mut acc = Gauss::zero();
            for (n, c) in cs.iter().enumerate() {
                let n1 = n as i64 + 1;
                let geo = (&qm - BigRational::one()) / (pow_rat(&qm, n1) - BigRational::one());
                acc += &c.scale(&(pow_rat(&x, n1) * geo));
            }
            Ok(acc)
        }
        (LineIntegrand::Poly(cs), _) => {
            if cs.iter().all(|c| c.is_zero()) {
                Ok(Gauss::zero())
            } else {
                Err(LatticeError::NonCompact)
            }
        }
        (LineIntegrand::Table(t), r) => {
            let mut acc = Gauss::zero();
            for ((s, j), v) in t {
                let keep = match r {
                    LineRange::Full => true,
                    LineRange::ZeroTo(s0, j0) => s == s0 && j < j0,
                    LineRange::ToInfinity(s0, j0) => s == s0 && j >= j0,
                };
                if keep {
                    acc += &v.scale(&weight(*j));
                }
            }
            Ok(acc)
        }
    }
}

/// `∫₀^x z^n d_{q^m} z = x^{n+1} / [[n+1]]_{q^m}`: the coefficient of `x^{n+1}`.
pub fn line_moment_symbolic(n: u32, m: i64) -> QScalar {
    recip_qnum(n + 1, m).expect("m ≠ 0")
}

/// `∫ (action image of g)`; zero for every action satisfying Stokes.
pub fn stokes_residual(action: Action, idx: Index, g: &LatticeFn, w: &LatticeWindow) -> Result<Gauss, LatticeError> {
    integral_r3(&d_lattice(action, idx, g, w)?, w)
}

/// The two integration-by-parts identities.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ByPartsLine {
    /// `∫ f ⊛ (∂^A ▷ g) = ∫ (f ◁ ∂^A) ⊛ g`
    Unhatted,
    /// `∫ f ⊛ (∂̂^A ▷̄ g) = ∫ (f ◁̄ ∂̂^A) ⊛ g`
    Hatted,
}

impl ByPartsLine {
    pub fn left_action(self) -> Action {
        match self {
            ByPartsLine::Unhatted => Action::Left,
            ByPartsLine::Hatted => Action::LeftBar,
        }
    }
}

/// How the right action in a by-parts identity is realized.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// One of the four tabulated actions, used as is.
    Literal(Action),
    /// The right action matching the line, built from the tabulated one of
    /// the opposite hat by conjugation with `Û`.
    Conjugated,
}

impl Pairing {
    pub fn name(self) -> String {
        match self {
            Pairing::Literal(a) => a.name().to_string(),
            Pairing::Conjugated => "conjugated".to_string(),
        }
    }
}

/// `f(q⁴x⁺, q²x³, q⁴x⁻)` for `sign = 1`, the inverse for `sign = -1`.
fn step_dilation(f: &CPoly, sign: i64) -> CPoly {
    Axis::ALL.iter().fold(f.clone(), |g, a| g.dilate(Slot::X, *a, 2 * step(*a) * sign))
}

/// `f ◁ ∂^A = κ⁻¹ Û⁻¹((Û f) ◁ ∂̂^A)` with `κ = q⁶`.
pub fn d_right_unhatted(a: Axis, f: &CPoly) -> CPoly {
    let g = apply_action(Action::Right, Index::Contra(a), &uhat(f, 1), Slot::X);
    uhat(&g, -1).scale(&QScalar::q_pow(-6))
}

/// `f ◁̄ ∂̂^A = Û⁻¹ Λ⁻¹(((Λ Û f) ◁̄ ∂^A))` with `Λ` the step dilation.
pub fn d_right_bar_hatted(a: Axis, f: &CPoly) -> CPoly {
    let g = apply_action(Action::RightBar, Index::Contra(a), &step_dilation(&uhat(f, 1), 1), Slot::X);
    uhat(&step_dilation(&g, -1), -1)
}

/// The polynomial `f ◁ …` on the right-hand side of a by-parts identity.
pub fn by_parts_partner(line: ByPartsLine, pairing: Pairing, a: Axis, f: &CPoly) -> CPoly {
    match (pairing, line) {
        (Pairing::Literal(act), _) => apply_action(act, Index::Contra(a), f, Slot::X),
        (Pairing::Conjugated, ByPartsLine::Unhatted) => d_right_unhatted(a, f),
        (Pairing::Conjugated, ByPartsLine::Hatted) => d_right_bar_hatted(a, f),
    }
}

/// Both sides of a by-parts identity for a polynomial `f` and compact `g`.
pub fn by_parts_sides(
    line: ByPartsLine,
    pairing: Pairing,
    a: Axis,
    f: &CPoly,
    g: &LatticeFn,
    w: &LatticeWindow,
) -> Result<(Gauss, Gauss), LatticeError> {
    let dg = d_lattice(line.left_action(), Index::Contra(a), g, w)?;
    let lhs = integral_r3(&star_poly_lattice(f, &dg, Side::Left, w)?, w)?;
    let r = by_parts_partner(line, pairing, a, f);
    let rhs = integral_r3(&star_poly_lattice(&r, g, Side::Left, w)?, w)?;
    Ok((lhs, rhs))
}

/// Observables of the expectation layer.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Observable {
    One,
    /// Position component `1..=3` in the real basis.
    X(u8),
    /// Momentum component `1..=3` in the real basis.
    P(u8),
}

/// Real-basis component `i` as a combination of `+, 3, -` components.
/// The first two are scaled by `q^{1/2}` so that all coefficients stay in
/// integer powers of `q`; the scaling is real and drops out of the tests.
fn real_component(i: u8) -> [(Axis, QScalar); 2] {
    let half = QScalar::from_rat(rat(1, 2));
    let ihalf = &half * &QScalar::i();
    match i {
        1 => [(Axis::Plus, -ihalf.clone()), (Axis::Minus, -(&ihalf * &QScalar::q()))],
        2 => [(Axis::Plus, -half.clone()), (Axis::Minus, &half * &QScalar::q())],
        _ => [(Axis::Three, QScalar::one()), (Axis::Three, QScalar::zero())],
    }
}

/// `O ▷ ψ` as an exact polynomial.
pub fn observable_apply(obs: Observable, psi: &CPoly) -> CPoly {
    match obs {
        Observable::One => psi.clone(),
        Observable::X(i) => real_component(i)
            .iter()
            .fold(CPoly::zero(), |acc, (a, c)| &acc + &star_in(&CPoly::var(Slot::X, *a), psi, Slot::X).scale(c)),
        Observable::P(i) => {
            real_component(i).iter().fold(CPoly::zero(), |acc, (a, c)| &acc + &momentum_apply(*a, psi).scale(c))
        }
    }
}

/// `ψ_L* ⊛ (O ▷ ψ_R)` with `ψ_L* = conj(ψ)`, exact.
pub fn expectation_integrand(obs: Observable, psi: &CPoly) -> CPoly {
    star_in(&psi.conjugate_series(), &observable_apply(obs, psi), Slot::X)
}

/// `⟨O⟩_ψ` over the window (unnormalized).
pub fn expectation(obs: Observable, psi: &CPoly, w: &LatticeWindow) -> Gauss {
    integral_cutoff_poly(&expectation_integrand(obs, psi), w)
}

/// `ψ_L* ⊛ ψ_R` sampled on the window interior.
pub fn density(psi: &CPoly, w: &LatticeWindow) -> LatticeFn {
    cutoff(&expectation_integrand(Observable::One, psi), w)
}

/// `|Im ⟨O⟩| / |⟨1⟩|`
pub fn imaginary_ratio(obs: Observable, psi: &CPoly, w: &LatticeWindow) -> f64 {
    let e = expectation(obs, psi, w);
    let n = expectation(Observable::One, psi, w);
    e.to_f64_pair().1.abs() / n.abs_f64()
}

/// `|conj(∫ f) − ∫ conj(f)| / |∫ f|` over the window interior.
pub fn conjugation_residual(f: &CPoly, w: &LatticeWindow) -> f64 {
    let a = integral_cutoff_poly(f, w).conj();
    let b = integral_cutoff_poly(&f.conjugate_series(), w);
    let d = (&a - &b).abs_f64();
    if d == 0.0 {
        0.0
    } else {
        d / a.abs_f64()
    }
}

/// Relative size of the `y`-dependent part of `∫ f(x ⊕ y) d³x`, which
/// translation invariance sends to zero.
pub fn translation_residual(f: &CPoly, w: &LatticeWindow) -> f64 {
    let t = translate_in(f, Variant::Plain, Slot::X, Slot::X, Slot::Y);
    let base = integral_cutoff_poly(f, w).abs_f64();
    let mut by_y: BTreeMap<[u16; 3], CPoly> = BTreeMap::new();
    for (e, c) in t.terms() {
        let y = e.triple(Slot::Y);
        if y != [0, 0, 0] {
            by_y.entry(y).or_insert_with(CPoly::zero).add_term(e.with_triple(Slot::Y, [0, 0, 0]), c);
        }
    }
    by_y.values().map(|p| integral_cutoff_poly(p, w).abs_f64()).fold(0.0, f64::max) / base
}

#[cfg(test)]
mod tests;
