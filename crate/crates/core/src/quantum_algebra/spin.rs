use crate::scalars::{qnum_signed, QScalar};

/// A finite sum `Σ c·√r` of formal square roots over [`QScalar`].
///
/// Radicands are merged only when equal, which suffices for products of
/// representation matrices where paired entries share their radicand.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Surd {
    parts: Vec<(QScalar, QScalar)>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn rational(c: QScalar) -> Self {
        Surd::root(c, QScalar::one())
    }

    /// `c·√r`
    pub fn root(c: QScalar, r: QScalar) -> Self {
        let mut s = Surd::zero();
        s.push(c, r);
        s
    }

    fn push(&mut self, c: QScalar, r: QScalar) {
        if c.is_zero() {
            return;
        }
        if let Some(k) = self.parts.iter().position(|(_, rr)| *rr == r) {
            self.parts[k].0 += &c;
            if self.parts[k].0.is_zero() {
                self.parts.remove(k);
            }
        } else {
            self.parts.push((c, r));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[(QScalar, QScalar)] {
        &self.parts
    }

    pub fn add(&self, o: &Surd) -> Surd {
        let mut out = self.clone();
        for (c, r) in &o.parts {
            out.push(c.clone(), r.clone());
        }
        out
    }

    pub fn scale(&self, k: &QScalar) -> Surd {
        let mut out = Surd::zero();
        for (c, r) in &self.parts {
            out.push(c * k, r.clone());
        }
        out
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (c1, r1) in &self.parts {
            for (c2, r2) in &o.parts {
                if r1 == r2 {
                    out.push(&(c1 * c2) * r1, QScalar::one());
                } else {
                    out.push(c1 * c2, r1 * r2);
                }
            }
        }
        out
    }
}

pub type Matrix = Vec<Vec<Surd>>;

/// Spin-`j` representation matrices in the basis `m = -j, ..., j`.
#[derive(Clone, Debug)]
pub struct SpinRep {
    pub two_j: u32,
    pub t3: Matrix,
    pub t_plus: Matrix,
    pub t_minus: Matrix,
    pub tau: Matrix,
}

fn zeros(n: usize) -> Matrix {
    vec![vec![Surd::zero(); n]; n]
}

/// Build the matrices for spin `two_j / 2`; row and column `r` carry `m = r - j`.
pub fn uqsu2_matrices(two_j: u32) -> SpinRep {
    let n = two_j as usize + 1;
    let j2 = two_j as i64;
    let (mut t3, mut tp, mut tm, mut tau) = (zeros(n), zeros(n), zeros(n), zeros(n));
    for r in 0..n {
        let two_m = -j2 + 2 * r as i64;
        t3[r][r] = Surd::rational(qnum_signed(two_m, -2).unwrap().mul_q_pow(-1));
        tau[r][r] = Surd::rational(QScalar::q_pow(-2 * two_m));
        if r + 1 < n {
            // j+m+1 and j-m as integers
            let a = (j2 + two_m) / 2 + 1;
            let b = (j2 - two_m) / 2;
            let rad = &qnum_signed(a, -2).unwrap() * &qnum_signed(b, 2).unwrap();
            tp[r + 1][r] = Surd::root(QScalar::q_pow(-1), rad);
        }
        if r >= 1 {
            let a = (j2 + two_m) / 2;
            let b = (j2 - two_m) / 2 + 1;
            let rad = &qnum_signed(a, -2).unwrap() * &qnum_signed(b, 2).unwrap();
            tm[r - 1][r] = Surd::root(QScalar::q(), rad);
        }
    }
    SpinRep { two_j, t3, t_plus: tp, t_minus: tm, tau }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Surd::zero();
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    acc = acc.add(&a[i][k].mul(&b[k][j]));
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

fn lin(terms: &[(QScalar, &Matrix)]) -> Matrix {
    let n = terms[0].1.len();
    let mut out = zeros(n);
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] = out[i][j].add(&m[i][j].scale(c));
            }
        }
    }
    out
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(Surd::is_zero))
}

/// Residuals of the defining relations and of `τ = 1 - λT³`, each labelled.
pub fn uqsu2_relation_residuals(two_j: u32) -> Vec<(&'static str, Matrix)> {
    let r = uqsu2_matrices(two_j);
    let n = two_j as usize + 1;
    let one = QScalar::one();
    let q = QScalar::q;
    let qp = QScalar::q_pow;
    let lp = QScalar::lambda_plus();
    let mut id = zeros(n);
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = Surd::rational(one.clone());
    }
    let pm = mat_mul(&r.t_plus, &r.t_minus);
    let mp = mat_mul(&r.t_minus, &r.t_plus);
    let r1 = lin(&[(qp(-1), &pm), (-q(), &mp), (-one.clone(), &r.t3)]);
    let r2 =
        lin(&[(qp(2), &mat_mul(&r.t3, &r.t_plus)), (-qp(-2), &mat_mul(&r.t_plus, &r.t3)), (-lp.clone(), &r.t_plus)]);
    let r3 = lin(&[(qp(2), &mat_mul(&r.t_minus, &r.t3)), (-qp(-2), &mat_mul(&r.t3, &r.t_minus)), (-lp, &r.t_minus)]);
    let r4 = lin(&[(one.clone(), &r.tau), (-one, &id), (QScalar::lambda(), &r.t3)]);
    vec![("T+T- exchange", r1), ("T3T+ exchange", r2), ("T-T3 exchange", r3), ("tau", r4)]
}
