//! Actions of q-deformed partial derivatives on polynomials.
//!
//! Every action is a short table of [`OpTerm`]s: Jackson derivatives, then
//! argument dilations, then multiplication by a coordinate monomial. The same
//! tables drive the lattice realization.

use crate::quantum_algebra::metric;
use crate::scalars::QScalar;
use crate::series::{Axis, CPoly, Exps, Slot, Triple};

/// The four derivative actions.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// `∂ ▷ f`
    Left,
    /// `∂̂ ▷̄ f`, constructed by `q -> q⁻¹` with `+ <-> -`
    LeftBar,
    /// `f ◁̄ ∂`, fixed by conjugation of `Left`
    RightBar,
    /// `f ◁ ∂̂`, fixed by conjugation of `LeftBar`
    Right,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Left, Action::LeftBar, Action::RightBar, Action::Right];

    pub fn name(self) -> &'static str {
        match self {
            Action::Left => "left",
            Action::LeftBar => "left_bar",
            Action::RightBar => "right_bar",
            Action::Right => "right",
        }
    }

    pub fn from_name(s: &str) -> Option<Action> {
        Action::ALL.into_iter().find(|a| a.name() == s)
    }

    /// Whether the closed form is taken from explicit formulas rather than
    /// constructed as a candidate.
    pub fn is_candidate(self) -> bool {
        matches!(self, Action::LeftBar | Action::Right)
    }
}

/// Index position of the derivative.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Index {
    Co(Axis),
    Contra(Axis),
}

impl Index {
    pub fn axis(self) -> Axis {
        match self {
            Index::Co(a) | Index::Contra(a) => a,
        }
    }
}

/// One Jackson derivative `D^power_{q^base}` along an axis.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Jackson {
    pub axis: Axis,
    pub base: i64,
    pub power: u16,
}

/// `coeff · x^mult · (D… f)(q^dil x)`
#[derive(Clone, Debug, PartialEq)]
pub struct OpTerm {
    pub coeff: QScalar,
    pub mult: Triple,
    pub derivs: Vec<Jackson>,
    pub dil: [i64; 3],
}

impl OpTerm {
    fn new(coeff: QScalar, derivs: Vec<Jackson>) -> Self {
        OpTerm { coeff, mult: [0, 0, 0], derivs, dil: [0, 0, 0] }
    }

    fn dilate(mut self, a: Axis, m: i64) -> Self {
        self.dil[a.index()] = m;
        self
    }

    fn times(mut self, a: Axis) -> Self {
        self.mult[a.index()] += 1;
        self
    }

    fn scaled(mut self, c: &QScalar) -> Self {
        self.coeff = &self.coeff * c;
        self
    }

    /// `q -> q⁻¹` together with the exchange of the `+` and `-` axes.
    fn bar(&self) -> OpTerm {
        let swap = |t: [i64; 3]| [-t[2], -t[1], -t[0]];
        OpTerm {
            coeff: self.coeff.invert_q(),
            mult: [self.mult[2], self.mult[1], self.mult[0]],
            derivs: self
                .derivs
                .iter()
                .map(|j| Jackson { axis: j.axis.partner(), base: -j.base, power: j.power })
                .collect(),
            dil: swap(self.dil),
        }
    }

    pub fn apply(&self, f: &CPoly, s: Slot) -> CPoly {
        let mut g = f.clone();
        for j in &self.derivs {
            g = g.jackson_derivative_pow(s, j.axis, j.base, j.power);
            if g.is_zero() {
                return g;
            }
        }
        for a in Axis::ALL {
            g = g.dilate(s, a, self.dil[a.index()]);
        }
        let m = CPoly::term(Exps::from_triple(s, self.mult), self.coeff.clone());
        &g * &m
    }
}

fn d(axis: Axis, base: i64, power: u16) -> Jackson {
    Jackson { axis, base, power }
}

/// Covariant left derivatives `∂_A ▷`.
fn left_co(a: Axis) -> Vec<OpTerm> {
    let one = QScalar::one;
    match a {
        Axis::Plus => vec![OpTerm::new(one(), vec![d(Axis::Plus, 4, 1)])],
        Axis::Three => vec![OpTerm::new(one(), vec![d(Axis::Three, 2, 1)]).dilate(Axis::Plus, 2)],
        Axis::Minus => vec![
            OpTerm::new(one(), vec![d(Axis::Minus, 4, 1)]).dilate(Axis::Three, 2),
            OpTerm::new(QScalar::lambda(), vec![d(Axis::Three, 2, 2)]).times(Axis::Plus),
        ],
    }
}

/// Contravariant right action `f ◁̄ ∂^A`, the closed form of
/// `-conj(∂_A ▷ conj f)`.
fn right_bar_contra(a: Axis) -> Vec<OpTerm> {
    match a {
        Axis::Plus => vec![OpTerm::new(QScalar::q_pow(-1), vec![d(Axis::Minus, 4, 1)])],
        Axis::Three => vec![OpTerm::new(-QScalar::one(), vec![d(Axis::Three, 2, 1)]).dilate(Axis::Minus, 2)],
        Axis::Minus => vec![
            OpTerm::new(QScalar::q(), vec![d(Axis::Plus, 4, 1)]).dilate(Axis::Three, 2),
            OpTerm::new(&QScalar::q() * &QScalar::lambda(), vec![d(Axis::Three, 2, 2)]).times(Axis::Minus),
        ],
    }
}

fn raise(terms_for: fn(Axis) -> Vec<OpTerm>, a: Axis) -> Vec<OpTerm> {
    let b = a.partner();
    let g = metric(a, b);
    terms_for(b).into_iter().map(|t| t.scaled(&g)).collect()
}

/// The operator table of an action with a given index.
pub fn action_terms(action: Action, idx: Index) -> Vec<OpTerm> {
    let bar = |ts: Vec<OpTerm>| ts.iter().map(OpTerm::bar).collect::<Vec<_>>();
    match (action, idx) {
        (Action::Left, Index::Co(a)) => left_co(a),
        (Action::Left, Index::Contra(a)) => raise(left_co, a),
        (Action::LeftBar, Index::Co(a)) => bar(left_co(a.partner())),
        (Action::LeftBar, Index::Contra(a)) => bar(raise(left_co, a.partner())),
        (Action::RightBar, Index::Contra(a)) => right_bar_contra(a),
        (Action::RightBar, Index::Co(a)) => raise(right_bar_contra, a),
        (Action::Right, Index::Contra(a)) => bar(right_bar_contra(a.partner())),
        (Action::Right, Index::Co(a)) => bar(raise(right_bar_contra, a.partner())),
    }
}

pub fn apply_terms(terms: &[OpTerm], f: &CPoly, s: Slot) -> CPoly {
    let mut out = CPoly::zero();
    for t in terms {
        out = &out + &t.apply(f, s);
    }
    out
}

/// Apply a derivative action to the given slot of `f`.
pub fn apply_action(action: Action, idx: Index, f: &CPoly, s: Slot) -> CPoly {
    apply_terms(&action_terms(action, idx), f, s)
}

pub fn d_left(idx: Index, f: &CPoly) -> CPoly {
    apply_action(Action::Left, idx, f, Slot::X)
}

pub fn d_left_bar(idx: Index, f: &CPoly) -> CPoly {
    apply_action(Action::LeftBar, idx, f, Slot::X)
}

pub fn d_right_bar(idx: Index, f: &CPoly) -> CPoly {
    apply_action(Action::RightBar, idx, f, Slot::X)
}

pub fn d_right(idx: Index, f: &CPoly) -> CPoly {
    apply_action(Action::Right, idx, f, Slot::X)
}

/// Momentum `P^A ▷ f = i⁻¹ ∂^A ▷ f`.
pub fn momentum_apply(a: Axis, f: &CPoly) -> CPoly {
    d_left(Index::Contra(a), f).scale(&-QScalar::i())
}

/// Flip the index position, as conjugation does.
pub fn flip(idx: Index) -> Index {
    match idx {
        Index::Co(a) => Index::Contra(a),
        Index::Contra(a) => Index::Co(a),
    }
}

/// The defining conjugation relation: `f ◁̄ ∂_A = -conj(∂^A ▷ conj f)`,
/// and likewise `f ◁ ∂̂_A = -conj(∂̂^A ▷̄ conj f)`. Evaluated directly,
/// without the closed-form tables.
pub fn right_by_conjugation(action: Action, idx: Index, f: &CPoly) -> CPoly {
    let left = match action {
        Action::RightBar => Action::Left,
        Action::Right => Action::LeftBar,
        _ => panic!("conjugation defines only the right actions"),
    };
    -apply_action(left, flip(idx), &f.conjugate_series(), Slot::X).conjugate_series()
}

#[cfg(test)]
mod tests;
