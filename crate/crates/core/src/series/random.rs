//! Monomial enumeration and seeded random polynomials.

use rand::Rng;

use super::{CPoly, Exps, Slot, Triple};
use crate::scalars::{Gauss, QScalar};

/// All exponent triples of total degree at most `max_deg`.
pub fn monomials(max_deg: u16) -> Vec<Triple> {
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

/// A Gaussian rational with small numerator and denominator parts.
pub fn random_gauss<R: Rng>(rng: &mut R) -> Gauss {
    let re = crate::scalars::rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    let im = crate::scalars::rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    Gauss::new(re, im)
}

/// Up to `terms` random monomials of degree at most `max_deg` in slot `s`.
pub fn random_poly<R: Rng>(rng: &mut R, s: Slot, max_deg: u16, terms: usize) -> CPoly {
    let ms = monomials(max_deg);
    let mut out = CPoly::zero();
    for _ in 0..terms {
        let t = ms[rng.gen_range(0..ms.len())];
        out.add_term(Exps::from_triple(s, t), &QScalar::from_gauss(random_gauss(rng)));
    }
    out
}
