//! The closed-form star product on commutative polynomials and its
//! λ-graded correction terms.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

use crate::scalars::{qnum, recip_qfact, QScalar};
use crate::series::{CPoly, Exps, Slot, Triple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarError {
    #[error("star product of polynomials in different slots ({0} and {1})")]
    SlotMismatch(&'static str, &'static str),
    #[error("operands use more than one slot")]
    MultiSlot,
}

/// Which way round a slot is multiplied in [`star_tensor`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Forward,
    Reversed,
}

type MonoStar = Arc<Vec<(Triple, QScalar)>>;

fn memo() -> &'static RwLock<HashMap<(Triple, Triple), MonoStar>> {
    static M: OnceLock<RwLock<HashMap<(Triple, Triple), MonoStar>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `∏_{j<k} [[n-j]]_{q^4}`, the coefficient of `D^k_{q^4}` on `x^n`.
fn falling(n: u16, k: u16) -> QScalar {
    let mut acc = QScalar::one();
    for j in 0..k {
        acc = &acc * &qnum((n - j) as u32, 4).unwrap();
    }
    acc
}

/// The `k`-th correction of the product of two monomials, without `λ^k`.
fn mono_correction(f: Triple, g: Triple, k: u16) -> Option<(Triple, QScalar)> {
    let [a1, b1, c1] = f;
    let [a2, b2, c2] = g;
    if k > c1 || k > a2 {
        return None;
    }
    let weight = 2 * (b1 as i64 * (a2 - k) as i64 + (c1 - k) as i64 * b2 as i64);
    let coeff = &(&falling(c1, k) * &falling(a2, k)) * &recip_qfact(k as u32, 4).unwrap();
    Some(([a1 + a2 - k, b1 + b2 + 2 * k, c1 + c2 - k], coeff.mul_q_pow(weight)))
}

/// Star product of two monomials of one slot, memoized.
pub fn mono_star(f: Triple, g: Triple) -> MonoStar {
    if let Some(v) = memo().read().unwrap().get(&(f, g)) {
        return v.clone();
    }
    let lam = QScalar::lambda();
    let mut out: Vec<(Triple, QScalar)> = Vec::new();
    for k in 0..=f[2].min(g[0]) {
        if let Some((t, c)) = mono_correction(f, g, k) {
            out.push((t, &c * &lam.pow(k as u32)));
        }
    }
    let v = Arc::new(out);
    memo().write().unwrap().insert((f, g), v.clone());
    v
}

/// `f ⊛ g` acting on slot `s`; every other slot multiplies commutatively.
pub fn star_in(f: &CPoly, g: &CPoly, s: Slot) -> CPoly {
    star_tensor(f, g, &[(s, Order::Forward)])
}

fn single_slot(p: &CPoly) -> Result<Option<Slot>, StarError> {
    let used: Vec<Slot> = Slot::ALL.into_iter().filter(|s| p.uses_slot(*s)).collect();
    match used.len() {
        0 => Ok(None),
        1 => Ok(Some(used[0])),
        _ => Err(StarError::MultiSlot),
    }
}

/// `f ⊛ g` for operands living in one common slot (constants fit any slot).
pub fn star(f: &CPoly, g: &CPoly) -> Result<CPoly, StarError> {
    let sf = single_slot(f)?;
    let sg = single_slot(g)?;
    let s = match (sf, sg) {
        (Some(a), Some(b)) if a != b => return Err(StarError::SlotMismatch(a.name(), b.name())),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => Slot::X,
    };
    Ok(star_in(f, g, s))
}

/// Product on a tensor of slots: each listed slot is star-multiplied in the
/// given order, unlisted slots commute.
pub fn star_tensor(f: &CPoly, g: &CPoly, slots: &[(Slot, Order)]) -> CPoly {
    let mut out = CPoly::zero();
    for (e1, c1) in f.terms() {
        for (e2, c2) in g.terms() {
            let mut base = e1.mul(e2);
            let mut pieces: Vec<(Exps, QScalar)> = vec![(Exps::one(), c1 * c2)];
            for (s, ord) in slots {
                base = base.with_triple(*s, [0, 0, 0]);
                let (a, b) = match ord {
                    Order::Forward => (e1.triple(*s), e2.triple(*s)),
                    Order::Reversed => (e2.triple(*s), e1.triple(*s)),
                };
                let prod = mono_star(a, b);
                let mut next = Vec::with_capacity(pieces.len() * prod.len());
                for (pe, pc) in &pieces {
                    for (t, c) in prod.iter() {
                        next.push((pe.with_triple(*s, *t), pc * c));
                    }
                }
                pieces = next;
            }
            for (pe, pc) in pieces {
                out.add_term(base.mul(&pe), &pc);
            }
        }
    }
    out
}

/// The terms `W_k` of `f ⊛ g = Σ_k λ^k W_k(f, g)` in slot `x`.
pub fn star_corrections(f: &CPoly, g: &CPoly) -> Vec<CPoly> {
    let s = Slot::X;
    let kmax = f.axis_degree(s, crate::series::Axis::Minus).min(g.axis_degree(s, crate::series::Axis::Plus));
    let mut out = vec![CPoly::zero(); kmax as usize + 1];
    for (e1, c1) in f.terms() {
        for (e2, c2) in g.terms() {
            let base = e1.mul(e2).with_triple(s, [0, 0, 0]);
            for (k, w) in out.iter_mut().enumerate() {
                if let Some((t, c)) = mono_correction(e1.triple(s), e2.triple(s), k as u16) {
                    w.add_term(base.mul(&Exps::from_triple(s, t)), &(&(c1 * c2) * &c));
                }
            }
        }
    }
    out
}
