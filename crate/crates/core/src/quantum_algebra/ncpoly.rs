use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::scalars::QScalar;
use crate::series::{parse_scalar, Axis, CPoly, Exps, ParseError, Slot};

/// A word in the letters `X⁺, X³, X⁻`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NCWord(pub Vec<Axis>);

impl NCWord {
    pub fn new(letters: Vec<Axis>) -> Self {
        NCWord(letters)
    }

    pub fn empty() -> Self {
        NCWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted with every `X⁺` first, then `X³`, then `X⁻`.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Positions `i` where letters `i, i+1` are out of order.
    pub fn redexes(&self) -> Vec<usize> {
        self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i).collect()
    }

    pub fn concat(&self, o: &NCWord) -> NCWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        NCWord(v)
    }

    /// The normal-ordered word `(X⁺)^a (X³)^b (X⁻)^c`.
    pub fn pbw(t: [u16; 3]) -> NCWord {
        let mut v = Vec::new();
        for (a, n) in Axis::ALL.into_iter().zip(t) {
            v.extend(std::iter::repeat_n(a, n as usize));
        }
        NCWord(v)
    }

    pub fn counts(&self) -> [u16; 3] {
        let mut t = [0u16; 3];
        for a in &self.0 {
            t[a.index()] += 1;
        }
        t
    }
}

/// Rewrite the out-of-order pair `(a, b)` into normal-ordered pairs.
fn rewrite_pair(a: Axis, b: Axis) -> Vec<(QScalar, [Axis; 2])> {
    use Axis::*;
    match (a, b) {
        (Three, Plus) => vec![(QScalar::q_pow(2), [Plus, Three])],
        (Minus, Three) => vec![(QScalar::q_pow(2), [Three, Minus])],
        (Minus, Plus) => vec![(QScalar::one(), [Plus, Minus]), (QScalar::lambda(), [Three, Three])],
        _ => unreachable!("pair is already ordered"),
    }
}

fn rewrite_at(w: &NCWord, i: usize) -> Vec<(QScalar, NCWord)> {
    rewrite_pair(w.0[i], w.0[i + 1])
        .into_iter()
        .map(|(c, pair)| {
            let mut v = w.0.clone();
            v[i] = pair[0];
            v[i + 1] = pair[1];
            (c, NCWord(v))
        })
        .collect()
}

/// Element of the coordinate algebra as a combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, QScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(NCWord::empty())
    }

    pub fn word(w: NCWord) -> Self {
        NCPoly::term(w, QScalar::one())
    }

    pub fn letter(a: Axis) -> Self {
        NCPoly::word(NCWord(vec![a]))
    }

    pub fn term(w: NCWord, c: QScalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn add_term(&mut self, w: NCWord, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &QScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(NCWord::is_normal)
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, k: &QScalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * k));
        }
        out
    }

    /// Concatenation product without reordering.
    pub fn free_mul(&self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }
}

/// Normal-ordered form, rewriting the leftmost out-of-order pair first.
pub fn normal_order(p: &NCPoly) -> NCPoly {
    let mut memo = HashMap::new();
    let mut out = NCPoly::zero();
    for (w, c) in &p.terms {
        for (nw, nc) in &word_normal_form(w, &mut memo).terms {
            out.add_term(nw.clone(), &(c * nc));
        }
    }
    out
}

fn word_normal_form(w: &NCWord, memo: &mut HashMap<NCWord, NCPoly>) -> NCPoly {
    if w.is_normal() {
        return NCPoly::word(w.clone());
    }
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let i = w.redexes()[0];
    let mut out = NCPoly::zero();
    for (c, nw) in rewrite_at(w, i) {
        for (fw, fc) in &word_normal_form(&nw, memo).terms {
            out.add_term(fw.clone(), &(&c * fc));
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Normal ordering where `choose` picks which redex to rewrite at each step;
/// used to probe confluence.
pub fn normal_order_with<F>(p: &NCPoly, mut choose: F) -> NCPoly
where
    F: FnMut(&[usize]) -> usize,
{
    let mut out = NCPoly::zero();
    let mut work: Vec<(NCWord, QScalar)> = p.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = work.pop() {
        let red = w.redexes();
        if red.is_empty() {
            out.add_term(w, &c);
            continue;
        }
        let i = red[choose(&red) % red.len()];
        for (k, nw) in rewrite_at(&w, i) {
            work.push((nw, &c * &k));
        }
    }
    out
}

pub fn nc_mul(a: &NCPoly, b: &NCPoly) -> NCPoly {
    normal_order(&a.free_mul(b))
}

/// Commutative monomial `x^(a,b,c)` to the word `(X⁺)^a (X³)^b (X⁻)^c`.
/// Only the `x` slot is read.
pub fn weyl(f: &CPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (e, c) in f.terms() {
        out.add_term(NCWord::pbw(e.triple(Slot::X)), c);
    }
    out
}

/// Inverse of [`weyl`] on normal-ordered input.
pub fn unweyl(p: &NCPoly) -> CPoly {
    debug_assert!(p.is_normal(), "unweyl expects a normal-ordered element");
    CPoly::from_terms(p.terms.iter().map(|(w, c)| (Exps::from_triple(Slot::X, w.counts()), c.clone())))
}

/// Anti-linear anti-automorphism `X^A -> g_{AB} X^B`, followed by normal ordering.
pub fn nc_conjugate(p: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in &p.terms {
        let mut term = NCPoly::term(NCWord::empty(), c.conj());
        for a in w.0.iter().rev() {
            let (b, g) = super::metric::lower_pair(*a);
            term = term.free_mul(&NCPoly::term(NCWord(vec![b]), g));
        }
        out = out.add(&term);
    }
    normal_order(&out)
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let a = self.0[i];
            let mut n = 1;
            while i + n < self.0.len() && self.0[i + n] == a {
                n += 1;
            }
            parts.push(if n == 1 { format!("X{a}") } else { format!("X{a}^{n}") });
            i += n;
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (w.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{w}")?,
                (false, false) => write!(f, "({c})*{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for NCWord {
    type Err = ParseError;
    /// Parses `X+^2 X3 X-`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let b = s.as_bytes();
        let mut i = 0;
        let mut v = Vec::new();
        while i < b.len() {
            if b[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if b[i] != b'X' {
                return Err(ParseError { pos: i, msg: "letter 'X' expected".into() });
            }
            let a = b
                .get(i + 1)
                .and_then(|c| Axis::from_symbol(*c as char))
                .ok_or(ParseError { pos: i + 1, msg: "axis '+', '3' or '-' expected".into() })?;
            i += 2;
            let mut n = 1usize;
            if b.get(i) == Some(&b'^') {
                let start = i + 1;
                let mut j = start;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                n = s[start..j].parse().map_err(|_| ParseError { pos: start, msg: "power expected".into() })?;
                i = j;
            }
            v.extend(std::iter::repeat_n(a, n));
        }
        Ok(NCWord(v))
    }
}

impl std::str::FromStr for NCPoly {
    type Err = ParseError;
    /// Parses sums of `(coeff)*word` terms, e.g. `X+ X- + (q - q^-1)*X3^2`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let b = s.as_bytes();
        let mut out = NCPoly::zero();
        let mut i = 0;
        let mut sign = QScalar::one();
        loop {
            while i < b.len() && b[i].is_ascii_whitespace() {
                i += 1;
            }
            if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                if b[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
                continue;
            }
            if i >= b.len() {
                return Err(ParseError { pos: i, msg: "term expected".into() });
            }
            let mut coeff = QScalar::one();
            if b[i] == b'(' {
                let close = matching_paren(b, i).ok_or(ParseError { pos: i, msg: "unbalanced '('".into() })?;
                coeff = parse_scalar(&s[i + 1..close]).map_err(|e| ParseError { pos: i + 1 + e.pos, msg: e.msg })?;
                i = close + 1;
                while i < b.len() && b[i].is_ascii_whitespace() {
                    i += 1;
                }
                if i < b.len() && b[i] == b'*' {
                    i += 1;
                }
            }
            // the word runs until a separating sign that follows whitespace
            let start = i;
            let mut j = i;
            while j < b.len() {
                if (b[j] == b'+' || b[j] == b'-') && j > 0 && b[j - 1].is_ascii_whitespace() {
                    break;
                }
                j += 1;
            }
            let w: NCWord =
                s[start..j].parse().map_err(|e: ParseError| ParseError { pos: start + e.pos, msg: e.msg })?;
            out.add_term(w, &(&sign * &coeff));
            sign = QScalar::one();
            i = j;
            while i < b.len() && b[i].is_ascii_whitespace() {
                i += 1;
            }
            if i >= b.len() {
                break;
            }
        }
        Ok(out)
    }
}

fn matching_paren(b: &[u8], open: usize) -> Option<usize> {
    let mut depth = 0;
    for (k, c) in b.iter().enumerate().skip(open) {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
            _ => {}
        }
    }
    None
}
