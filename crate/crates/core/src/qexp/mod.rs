//! Truncated q-exponentials as two-slot series (`x` and `p`), their
//! eigenvalue equations, addition theorems and inverses.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::braided::{invert_in, translate_in, Variant};
use crate::derivatives::{apply_action, Action, Index};
use crate::scalars::{recip_qfact, QScalar};
use crate::series::{Axis, CPoly, Exps, Slot};
use crate::star::{star_in, star_tensor, Order};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QexpError {
    #[error("dual exponential unavailable: {0}")]
    Unavailable(String),
}

/// A two-slot series truncated at total degree `cap` in each slot.
#[derive(Clone, Debug, PartialEq)]
pub struct XPSeries {
    pub poly: CPoly,
    pub cap: u32,
}

impl XPSeries {
    /// Terms whose `slot` degree is strictly below the cap.
    pub fn below_cap(&self, slot: Slot) -> CPoly {
        let cap = self.cap;
        self.poly.filter(|e| e.slot_degree(slot) < cap)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    Xp,
    Px,
    Inverse,
}

impl Which {
    pub fn from_name(s: &str) -> Option<Which> {
        match s {
            "xp" => Some(Which::Xp),
            "px" => Some(Which::Px),
            "inverse" => Some(Which::Inverse),
            _ => None,
        }
    }
}

fn cache() -> &'static Mutex<HashMap<(Which, u32), Arc<XPSeries>>> {
    type Cache = Mutex<HashMap<(Which, u32), Arc<XPSeries>>>;
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cached(which: Which, cap: u32, build: impl FnOnce() -> CPoly) -> Arc<XPSeries> {
    if let Some(s) = cache().lock().unwrap().get(&(which, cap)) {
        return s.clone();
    }
    let s = Arc::new(XPSeries { poly: build(), cap });
    cache().lock().unwrap().insert((which, cap), s.clone());
    s
}

fn i_pow(k: i64) -> QScalar {
    match k.rem_euclid(4) {
        0 => QScalar::one(),
        1 => QScalar::i(),
        2 => QScalar::from_int(-1),
        _ => -QScalar::i(),
    }
}

fn denominators(np: u16, n3: u16, nm: u16) -> QScalar {
    let d = &recip_qfact(np as u32, 4).unwrap() * &recip_qfact(n3 as u32, 2).unwrap();
    &d * &recip_qfact(nm as u32, 4).unwrap()
}

fn exponents(cap: u32) -> impl Iterator<Item = (u16, u16, u16)> {
    let cap = cap as u16;
    (0..=cap).flat_map(move |np| (0..=cap - np).flat_map(move |n3| (0..=cap - np - n3).map(move |nm| (np, n3, nm))))
}

/// `exp_q(x|ip)` truncated at `cap`.
pub fn exp_xp(cap: u32) -> Arc<XPSeries> {
    cached(Which::Xp, cap, || {
        let mut out = CPoly::zero();
        for (np, n3, nm) in exponents(cap) {
            let c =
                &denominators(np, n3, nm).mul_q_pow(np as i64 - nm as i64) * &i_pow(n3 as i64 - nm as i64 - np as i64);
            let e = Exps::from_triple(Slot::X, [np, n3, nm]).mul(&Exps::from_triple(Slot::P, [nm, n3, np]));
            out.add_term(e, &c);
        }
        out
    })
}

/// `exp_q(i⁻¹p|x)` truncated at `cap`.
pub fn exp_px(cap: u32) -> Arc<XPSeries> {
    cached(Which::Px, cap, || {
        let mut out = CPoly::zero();
        for (np, n3, nm) in exponents(cap) {
            let c =
                &denominators(np, n3, nm).mul_q_pow(np as i64 - nm as i64) * &i_pow(np as i64 + nm as i64 - n3 as i64);
            let e = Exps::from_triple(Slot::X, [nm, n3, np]).mul(&Exps::from_triple(Slot::P, [np, n3, nm]));
            out.add_term(e, &c);
        }
        out
    })
}

/// `exp_q(⊖̄x|ip)`
pub fn exp_inverse(cap: u32) -> Arc<XPSeries> {
    cached(Which::Inverse, cap, || invert_in(&exp_xp(cap).poly, Variant::Bar, Slot::X))
}

pub fn exp_series(which: Which, cap: u32) -> Arc<XPSeries> {
    match which {
        Which::Xp => exp_xp(cap),
        Which::Px => exp_px(cap),
        Which::Inverse => exp_inverse(cap),
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Residual of the eigenvalue equation for the contravariant axis `a`.
///
/// `Left`: `i⁻¹ ∂^A ▷ E − E ⊛ p^A` with `E = exp_xp`.
/// `Right`: `p^A ⊛ E − i⁻¹ (E ◁̄ ∂^A)` with `E = exp_px`.
pub fn eigen_residual(cap: u32, a: Axis, side: Side) -> XPSeries {
    let pa = CPoly::var(Slot::P, a);
    let i_inv = -QScalar::i();
    let poly = match side {
        Side::Left => {
            let e = &exp_xp(cap).poly;
            let lhs = apply_action(Action::Left, Index::Contra(a), e, Slot::X).scale(&i_inv);
            &lhs - &star_in(e, &pa, Slot::P)
        }
        Side::Right => {
            let e = &exp_px(cap).poly;
            let rhs = apply_action(Action::RightBar, Index::Contra(a), e, Slot::X).scale(&i_inv);
            &star_in(&pa, e, Slot::P) - &rhs
        }
    };
    XPSeries { poly, cap }
}

/// `exp_q(x ⊕̄ y|ip) − exp_q(x|exp_q(y|ip) ⊛ ip)` over slots `x`, `y`, `p`.
pub fn addition_residual(cap: u32) -> XPSeries {
    addition_residual_with(cap, Variant::Bar)
}

/// [`addition_residual`] with the translation taken from variant `v`.
pub fn addition_residual_with(cap: u32, v: Variant) -> XPSeries {
    let e = &exp_xp(cap).poly;
    let lhs = translate_in(e, v, Slot::X, Slot::X, Slot::Y);
    let inner = e.relabel(Slot::X, Slot::Y);
    let rhs = star_tensor(e, &inner, &[(Slot::P, Order::Reversed)]);
    XPSeries { poly: &lhs - &rhs, cap }
}

/// `exp_q(x ⊕̄ (⊖̄x)|ip) − 1`, composed with star products in both slots.
pub fn inversion_residual(cap: u32) -> XPSeries {
    inversion_residual_with(cap, Variant::Bar)
}

/// [`inversion_residual`] with the inversion taken from variant `v`.
pub fn inversion_residual_with(cap: u32, v: Variant) -> XPSeries {
    let e = &exp_xp(cap).poly;
    let inv = match v {
        Variant::Bar => exp_inverse(cap).poly.clone(),
        Variant::Plain => invert_in(e, Variant::Plain, Slot::X),
    };
    let comp = star_tensor(e, &inv, &[(Slot::X, Order::Forward), (Slot::P, Order::Reversed)]);
    XPSeries { poly: &comp - &CPoly::one(), cap }
}

/// The dual exponential `exp*_q(x|i⁻¹p)`, solved degree by degree from
/// `∂^A ▷̄ E = E ⊛ i p^A` with constant term 1, using the `left_bar`
/// action. Fails if the recursion is not uniquely solvable.
pub fn dual_exp_recursive(cap: u32) -> Result<XPSeries, QexpError> {
    solve_dual(cap, Action::LeftBar, Order::Forward)
}

/// `exp*_q(ip|x)` from `E ◁ ∂^A = i p^A ⊛ E`, using the `right` action.
pub fn dual_exp_px_recursive(cap: u32) -> Result<XPSeries, QexpError> {
    solve_dual(cap, Action::Right, Order::Reversed)
}

fn solve_dual(cap: u32, action: Action, order: Order) -> Result<XPSeries, QexpError> {
    let ip = |a: Axis| CPoly::var(Slot::P, a).scale(&QScalar::i());
    let mut total = CPoly::one();
    let mut prev = CPoly::one();
    for n in 1..=cap as u16 {
        let layer_monos: Vec<[u16; 3]> =
            exponents(n as u32).filter(|(a, b, c)| a + b + c == n).map(|(a, b, c)| [a, b, c]).collect();
        let mut unknowns: Vec<Exps> = Vec::new();
        for x in &layer_monos {
            for y in &layer_monos {
                if x[0] as i32 - x[2] as i32 + y[0] as i32 - y[2] as i32 == 0 {
                    unknowns.push(Exps::from_triple(Slot::X, *x).mul(&Exps::from_triple(Slot::P, *y)));
                }
            }
        }
        // each equation: Σ_j coeff_j · c_j = rhs
        // equation key -> (sparse row, right-hand side)
        type Row = (Vec<(usize, QScalar)>, QScalar);
        let mut rows: BTreeMap<(usize, Exps), Row> = BTreeMap::new();
        for (ai, a) in Axis::ALL.into_iter().enumerate() {
            let target = star_tensor(&prev, &ip(a), &[(Slot::P, order)]);
            for (e, c) in target.terms() {
                rows.entry((ai, *e)).or_insert((Vec::new(), QScalar::zero())).1 = c.clone();
            }
            for (j, u) in unknowns.iter().enumerate() {
                let img = apply_action(action, Index::Contra(a), &CPoly::term(*u, QScalar::one()), Slot::X);
                for (e, c) in img.terms() {
                    rows.entry((ai, *e)).or_insert((Vec::new(), QScalar::zero())).0.push((j, c.clone()));
                }
            }
        }
        let mut sol: Vec<Option<QScalar>> = vec![None; unknowns.len()];
        loop {
            let mut progress = false;
            for (lhs, rhs) in rows.values() {
                let open: Vec<&(usize, QScalar)> = lhs.iter().filter(|(j, _)| sol[*j].is_none()).collect();
                if open.len() != 1 {
                    continue;
                }
                let (j, cj) = open[0];
                let mut r = rhs.clone();
                for (k, ck) in lhs {
                    if let Some(v) = &sol[*k] {
                        r -= &(ck * v);
                    }
                }
                let v = r.try_div(cj).map_err(|e| QexpError::Unavailable(e.to_string()))?;
                sol[*j] = Some(v);
                progress = true;
            }
            if !progress {
                break;
            }
        }
        let mut layer = CPoly::zero();
        for (j, u) in unknowns.iter().enumerate() {
            match &sol[j] {
                Some(v) => layer.add_term(*u, v),
                None => return Err(QexpError::Unavailable(format!("degree {n} not determined"))),
            }
        }
        for (lhs, rhs) in rows.values() {
            let mut acc = -rhs.clone();
            for (k, ck) in lhs {
                acc += &(ck * sol[*k].as_ref().unwrap());
            }
            if !acc.is_zero() {
                return Err(QexpError::Unavailable(format!("inconsistent recursion at degree {n}")));
            }
        }
        total = &total + &layer;
        prev = layer;
    }
    Ok(XPSeries { poly: total, cap })
}
