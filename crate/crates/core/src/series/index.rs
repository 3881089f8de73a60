use std::fmt;

/// A light-cone coordinate axis. Ordered `+ < 3 < -`, the normal order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Plus,
    Three,
    Minus,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Plus, Axis::Three, Axis::Minus];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The partner index under raising/lowering: `+ <-> -`, `3 <-> 3`.
    pub fn partner(self) -> Axis {
        match self {
            Axis::Plus => Axis::Minus,
            Axis::Three => Axis::Three,
            Axis::Minus => Axis::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Axis::Plus => '+',
            Axis::Three => '3',
            Axis::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Axis> {
        match c {
            '+' => Some(Axis::Plus),
            '3' => Some(Axis::Three),
            '-' => Some(Axis::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A named copy of the coordinate triple. Distinct slots commute.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    X,
    Y,
    Z,
    P,
}

pub const NSLOTS: usize = 4;
pub const NVARS: usize = 3 * NSLOTS;

impl Slot {
    pub const ALL: [Slot; NSLOTS] = [Slot::X, Slot::Y, Slot::Z, Slot::P];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::X => "x",
            Slot::Y => "y",
            Slot::Z => "z",
            Slot::P => "p",
        }
    }

    pub fn from_name(s: &str) -> Option<Slot> {
        Slot::ALL.into_iter().find(|sl| sl.name() == s)
    }

    pub fn var(self, a: Axis) -> usize {
        3 * self.index() + a.index()
    }
}

/// Exponent vector over every (slot, axis) pair.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exps(pub [u16; NVARS]);

/// Exponents `(e₊, e₃, e₋)` of a single slot.
pub type Triple = [u16; 3];

impl Exps {
    pub fn one() -> Self {
        Exps::default()
    }

    pub fn get(&self, s: Slot, a: Axis) -> u16 {
        self.0[s.var(a)]
    }

    pub fn set(&mut self, s: Slot, a: Axis, v: u16) {
        self.0[s.var(a)] = v;
    }

    pub fn with(mut self, s: Slot, a: Axis, v: u16) -> Self {
        self.set(s, a, v);
        self
    }

    pub fn triple(&self, s: Slot) -> Triple {
        let i = 3 * s.index();
        [self.0[i], self.0[i + 1], self.0[i + 2]]
    }

    pub fn with_triple(mut self, s: Slot, t: Triple) -> Self {
        let i = 3 * s.index();
        self.0[i..i + 3].copy_from_slice(&t);
        self
    }

    pub fn from_triple(s: Slot, t: Triple) -> Self {
        Exps::one().with_triple(s, t)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|e| *e as u32).sum()
    }

    pub fn slot_degree(&self, s: Slot) -> u32 {
        self.triple(s).iter().map(|e| *e as u32).sum()
    }

    pub fn mul(&self, o: &Exps) -> Exps {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }
}

impl fmt::Debug for Exps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
