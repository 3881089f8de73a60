//! Braided translations (coproducts), inversions (antipodes) and the
//! reordering operators `Û^{±1}` on commutative polynomials.

use crate::scalars::{qnum, recip_qdfact_even, recip_qfact, QScalar};
use crate::series::{CPoly, Exps, Slot, Triple};

/// Plain or barred variant of a braided map.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Bar,
}

/// `∏_{j<k} [[n-j]]_{q^base}`
fn falling(n: u16, k: u16, base: i64) -> QScalar {
    let mut acc = QScalar::one();
    for j in 0..k {
        acc = &acc * &qnum((n - j) as u32, base).unwrap();
    }
    acc
}

/// Image of the monomial `x^t` under `x -> x ⊕ y`, with the two summands
/// placed in slots `l` and `r`.
fn translate_mono(t: Triple, l: Slot, r: Slot) -> CPoly {
    let [a, b, c] = t;
    let lam = QScalar::lambda();
    let braid = &(&(&lam * &QScalar::lambda_plus()) * &QScalar::q_pow(-1)) * &QScalar::from_int(-1);
    let mut out = CPoly::zero();
    for ip in 0..=a {
        for i3 in 0..=b {
            for im in 0..=c {
                for k in 0..=i3 {
                    if i3 + k > b {
                        continue;
                    }
                    let (ea, eb, ec) = (a - ip, b - i3 - k, c - im);
                    let mut coef = &(&falling(a, ip, -4) * &falling(b, i3 + k, -2)) * &falling(c, im, -4);
                    coef = coef.mul_q_pow(2 * (k as i64 - i3 as i64) * ec as i64 - 2 * ip as i64 * eb as i64);
                    coef = &(&coef * &braid.pow(k as u32)) * &recip_qdfact_even(2 * k as u32, -2).unwrap();
                    coef = &coef * &recip_qfact(im as u32, -4).unwrap();
                    coef = &coef * &recip_qfact((i3 - k) as u32, -2).unwrap();
                    coef = &coef * &recip_qfact(ip as u32, -4).unwrap();
                    let e = Exps::from_triple(l, [ip + k, i3 - k, im]).mul(&Exps::from_triple(r, [ea, eb, ec + k]));
                    out.add_term(e, &coef);
                }
            }
        }
    }
    out
}

/// `Û^{dir}` on a single monomial of slot `s`.
fn uhat_mono(t: Triple, dir: i64, s: Slot) -> CPoly {
    let [a, b, c] = t;
    let base = -4 * dir;
    let lam = if dir == 1 { -QScalar::lambda() } else { QScalar::lambda() };
    let mut out = CPoly::zero();
    for k in 0..=a.min(c) {
        let mut coef = &lam.pow(k as u32) * &recip_qfact(k as u32, base).unwrap();
        coef = &coef * &(&falling(a, k, base) * &falling(c, k, base));
        coef = coef.mul_q_pow(-2 * dir * b as i64 * (a + c - k) as i64);
        out.add_term(Exps::from_triple(s, [a - k, b + 2 * k, c - k]), &coef);
    }
    out
}

/// The series under `Û` in the inversion formula, before `Û` is applied.
fn inversion_series_mono(t: Triple, s: Slot) -> CPoly {
    let [a, b, c] = t;
    let braid = &(&QScalar::q() * &QScalar::lambda()) * &(-QScalar::lambda_plus());
    let mut out = CPoly::zero();
    for i in 0..=b / 2 {
        let i64i = i as i64;
        // argument substitution x± -> -q^{2-4i} x±, x³ -> -q^{1-2i} x³
        let shift = (2 - 4 * i64i) * (a + c) as i64 + (1 - 2 * i64i) * b as i64;
        let sign = (a + b + c) % 2 == 1;
        let nb = b - 2 * i;
        let mut coef = falling(b, 2 * i, -2).mul_q_pow(shift);
        if sign {
            coef = -coef;
        }
        let (a, c, nb) = (a as i64, c as i64, nb as i64);
        coef = coef.mul_q_pow(-2 * a * (a + nb) - 2 * c * (c + nb) - nb * nb);
        coef = &(&coef * &braid.pow(i as u32)) * &recip_qdfact_even(2 * i as u32, -2).unwrap();
        out.add_term(Exps::from_triple(s, [t[0] + i, t[1] - 2 * i, t[2] + i]), &coef);
    }
    out
}

fn swap_axes(p: &CPoly) -> CPoly {
    p.map_terms(|e, c| {
        let mut out = *e;
        for s in Slot::ALL {
            let [x, y, z] = e.triple(s);
            out = out.with_triple(s, [z, y, x]);
        }
        Some((out, c.clone()))
    })
}

fn invert_q_coeffs(p: &CPoly) -> CPoly {
    p.map_terms(|e, c| Some((*e, c.invert_q())))
}

/// `q -> q⁻¹` in every coefficient together with `+ <-> -`, for a monomial image.
fn bar_image<F: Fn(Triple) -> CPoly>(t: Triple, plain: F) -> CPoly {
    invert_q_coeffs(&swap_axes(&plain([t[2], t[1], t[0]])))
}

/// Replace slot `src` of `f` by `l ⊕ r` (plain) or `l ⊕̄ r` (barred).
pub fn translate_in(f: &CPoly, v: Variant, src: Slot, l: Slot, r: Slot) -> CPoly {
    f.substitute_slot(src, |t| match v {
        Variant::Plain => translate_mono(t, l, r),
        Variant::Bar => bar_image(t, |u| translate_mono(u, l, r)),
    })
}

/// `f(x ⊕ y)` for `f` in the `x` slot.
pub fn translate(f: &CPoly) -> CPoly {
    translate_in(f, Variant::Plain, Slot::X, Slot::X, Slot::Y)
}

/// `f(x ⊕̄ y)`
pub fn translate_bar(f: &CPoly) -> CPoly {
    translate_in(f, Variant::Bar, Slot::X, Slot::X, Slot::Y)
}

/// `Û` for `direction = 1`, `Û⁻¹` for `direction = -1`, on slot `s`.
pub fn uhat_in(f: &CPoly, direction: i64, s: Slot) -> CPoly {
    assert!(direction == 1 || direction == -1, "direction is ±1");
    f.substitute_slot(s, |t| uhat_mono(t, direction, s))
}

pub fn uhat(f: &CPoly, direction: i64) -> CPoly {
    uhat_in(f, direction, Slot::X)
}

fn invert_mono(t: Triple, s: Slot) -> CPoly {
    uhat_in(&inversion_series_mono(t, s), 1, s)
}

/// `f(⊖x)` or `f(⊖̄x)` on slot `s`.
pub fn invert_in(f: &CPoly, v: Variant, s: Slot) -> CPoly {
    f.substitute_slot(s, |t| match v {
        Variant::Plain => invert_mono(t, s),
        Variant::Bar => bar_image(t, |u| invert_mono(u, s)),
    })
}

pub fn invert(f: &CPoly) -> CPoly {
    invert_in(f, Variant::Plain, Slot::X)
}

pub fn invert_bar(f: &CPoly) -> CPoly {
    invert_in(f, Variant::Bar, Slot::X)
}

/// Normalization of the braiding term in the translation formula; kept for
/// reporting, the formula itself uses `λ₊ = q + q⁻¹`.
pub fn braid_constant() -> QScalar {
    &(&QScalar::lambda() * &QScalar::lambda_plus()) * &QScalar::q_pow(-1)
}

#[cfg(test)]
mod tests;
