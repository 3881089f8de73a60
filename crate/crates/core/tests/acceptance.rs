//! End-to-end acceptance run: one line per criterion, exact unless noted.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qeuclid::braided::{invert_in, translate_in, uhat, Variant};
use qeuclid::derivatives::{Action, Index};
use qeuclid::lattice::{
    by_parts_sides, expectation, imaginary_ratio, jackson_integral_line, line_moment_symbolic, stokes_residual,
    ByPartsLine, LatticeFn, LatticeWindow, LineIntegrand, LineRange, Observable, Pairing,
};
use qeuclid::qexp::{addition_residual, eigen_residual, inversion_residual, Side};
use qeuclid::quantum_algebra::{is_zero_matrix, nc_conjugate, nc_mul, unweyl, uqsu2_relation_residuals, weyl};
use qeuclid::scalars::{rat, rat_to_f64, Gauss, QScalar};
use qeuclid::series::random::{monomials, random_poly};
use qeuclid::series::{Axis, CPoly, Slot};
use qeuclid::star::star_in;

/// Criteria that are implemented faithfully but known not to hold.
const KNOWN_RED: &[usize] = &[];

/// Wall-clock budgets in seconds, loose enough for unoptimized builds.
const BUDGET_ORACLE: u64 = 30;
const BUDGET_EIGEN: u64 = 60;
const BUDGET_STOKES: u64 = 10;

type Verdict = Result<String, String>;

/// Writes straight to stderr so the lines survive the test harness's output capture.
macro_rules! report {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stderr(), $($arg)*);
    }};
}
type Criterion = (usize, &'static str, fn() -> Verdict);

fn p(s: &str) -> CPoly {
    s.parse().unwrap()
}

fn mono(t: [u16; 3]) -> CPoly {
    CPoly::monomial(Slot::X, t)
}

fn deg(t: &[u16; 3]) -> u16 {
    t.iter().sum()
}

fn lowest_terms(r: &CPoly) -> String {
    let low = r.terms().map(|(e, _)| e.degree()).min().unwrap_or(0);
    r.filter(|e| e.degree() == low).to_string()
}

fn within(start: Instant, secs: u64) -> Result<Duration, String> {
    let t = start.elapsed();
    if t <= Duration::from_secs(secs) {
        Ok(t)
    } else {
        Err(format!("took {t:.1?}, budget {secs} s"))
    }
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    assert_eq!(star_in(&p("x-"), &p("x+"), Slot::X), p("x+*x- + (q - q^-1)*x3^2"));
    let ms = monomials(6);
    let mut pairs = 0;
    for a in &ms {
        for b in &ms {
            if deg(a) + deg(b) > 6 {
                continue;
            }
            pairs += 1;
            let (f, g) = (mono(*a), mono(*b));
            let d = &star_in(&f, &g, Slot::X) - &unweyl(&nc_mul(&weyl(&f), &weyl(&g)));
            if !d.is_zero() {
                return Err(format!("{f} * {g}: {}", lowest_terms(&d)));
            }
        }
    }
    let t = within(start, BUDGET_ORACLE)?;
    Ok(format!("{pairs} pairs in {t:.1?}"))
}

fn associativity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..200 {
        let [f, g, h] = [0, 1, 2].map(|_| random_poly(&mut rng, Slot::X, 3, 3));
        let l = star_in(&star_in(&f, &g, Slot::X), &h, Slot::X);
        let r = star_in(&f, &star_in(&g, &h, Slot::X), Slot::X);
        if l != r {
            return Err(format!("triple {k}: {}", lowest_terms(&(&l - &r))));
        }
    }
    Ok("200 triples".into())
}

fn conjugation_laws() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..200 {
        let f = random_poly(&mut rng, Slot::X, 3, 3);
        let g = random_poly(&mut rng, Slot::X, 3, 3);
        let lhs = star_in(&f, &g, Slot::X).conjugate_series();
        let rhs = star_in(&g.conjugate_series(), &f.conjugate_series(), Slot::X);
        if lhs != rhs {
            return Err(format!("pair {k}: star law"));
        }
        if unweyl(&nc_conjugate(&weyl(&f))) != f.conjugate_series() {
            return Err(format!("pair {k}: series and algebra conjugations differ"));
        }
    }
    Ok("200 pairs".into())
}

fn spin_relations() -> Verdict {
    for two_j in 0..=4 {
        for (name, m) in uqsu2_relation_residuals(two_j) {
            if !is_zero_matrix(&m) {
                return Err(format!("{name} at 2j = {two_j}"));
            }
        }
    }
    Ok("j = 0, 1/2, 1, 3/2, 2".into())
}

fn eigenvalues() -> Verdict {
    let mut times = Vec::new();
    for cap in [3, 4, 5] {
        let start = Instant::now();
        for a in Axis::ALL {
            for side in [Side::Left, Side::Right] {
                let r = eigen_residual(cap, a, side).below_cap(Slot::P);
                if !r.is_zero() {
                    return Err(format!("D = {cap}, axis {a}, {side:?}: {}", lowest_terms(&r)));
                }
            }
        }
        times.push(within(start, BUDGET_EIGEN)?);
    }
    Ok(format!("D = 3, 4, 5; D = 5 took {:.1?}", times[2]))
}

fn addition_and_inversion() -> Verdict {
    let add = addition_residual(3).below_cap(Slot::P);
    if !add.is_zero() {
        return Err(format!("addition theorem, lowest residual term {}", lowest_terms(&add)));
    }
    let inv = inversion_residual(3).below_cap(Slot::P);
    if !inv.is_zero() {
        return Err(format!("inversion identity, lowest residual term {}", lowest_terms(&inv)));
    }
    Ok("barred maps, D = 3".into())
}

fn coproduct_laws() -> Verdict {
    for v in [Variant::Plain, Variant::Bar] {
        for t in monomials(5) {
            let f = mono(t);
            let tf = translate_in(&f, v, Slot::X, Slot::X, Slot::Y);
            if tf.zero_slot(Slot::Y) != f || tf.zero_slot(Slot::X) != f.relabel(Slot::X, Slot::Y) {
                return Err(format!("counit, {v:?} {t:?}"));
            }
            let right = translate_in(&tf, v, Slot::Y, Slot::Y, Slot::Z);
            let left = translate_in(&tf.relabel(Slot::Y, Slot::Z), v, Slot::X, Slot::X, Slot::Y);
            if left != right {
                return Err(format!("coassociativity, {v:?} {t:?}"));
            }
        }
    }
    Ok("degree <= 5, both variants".into())
}

fn uhat_and_inversion() -> Verdict {
    for t in monomials(4) {
        let f = mono(t);
        if uhat(&uhat(&f, -1), 1) != f || uhat(&uhat(&f, 1), -1) != f {
            return Err(format!("uhat round trip at {t:?}"));
        }
    }
    for v in [Variant::Plain, Variant::Bar] {
        for a in Axis::ALL {
            let x = CPoly::var(Slot::X, a);
            if invert_in(&x, v, Slot::X) != -x {
                return Err(format!("inversion of x{a}, {v:?}"));
            }
        }
    }
    Ok("degree <= 4".into())
}

fn lattice_stokes() -> Verdict {
    let start = Instant::now();
    let w = LatticeWindow::standard(10, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 0..50 {
        let g = LatticeFn::random_compact(&mut rng, &w, 8);
        for action in [Action::Left, Action::RightBar] {
            for a in Axis::ALL {
                for idx in [Index::Co(a), Index::Contra(a)] {
                    let s = stokes_residual(action, idx, &g, &w).map_err(|e| e.to_string())?;
                    if !s.is_zero() {
                        return Err(format!("function {k}, {action:?} {idx:?}: {s}"));
                    }
                }
            }
        }
    }
    let t = within(start, BUDGET_STOKES)?;
    Ok(format!("50 functions in {t:.1?}"))
}

fn by_parts() -> Verdict {
    let w = LatticeWindow::standard(14, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let gs: Vec<LatticeFn> = (0..20).map(|_| LatticeFn::random_within(&mut rng, 3, 4)).collect();
    let fs: Vec<CPoly> = monomials(2).into_iter().map(mono).collect();
    let pairings = [Pairing::Literal(Action::RightBar), Pairing::Literal(Action::Right), Pairing::Conjugated];
    let mut summary = Vec::new();
    for line in [ByPartsLine::Unhatted, ByPartsLine::Hatted] {
        let passing: Vec<String> = pairings
            .iter()
            .filter(|pairing| {
                fs.iter().all(|f| {
                    gs.iter().all(|g| {
                        Axis::ALL
                            .iter()
                            .all(|a| by_parts_sides(line, **pairing, *a, f, g, &w).is_ok_and(|(l, r)| l == r))
                    })
                })
            })
            .map(|pairing| pairing.name())
            .collect();
        if passing.is_empty() {
            return Err(format!("{line:?}: no pairing passes"));
        }
        summary.push(format!("{line:?} passes with [{}]", passing.join(", ")));
    }
    Ok(summary.join("; "))
}

fn expectation_layer() -> Verdict {
    let widths = [8, 10, 12];
    for psi in ["1", "x+*x- + (2 - i)*x3^2 + 1", "x3^2 - i*x+*x-"] {
        let psi = p(psi);
        for j in widths {
            let e = expectation(Observable::X(3), &psi, &LatticeWindow::standard(j, 4).unwrap());
            if !e.is_zero() {
                return Err(format!("<X3> = {e} for even state {psi} at J = {j}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    let mut states = 0;
    while states < 10 {
        let psi = random_poly(&mut rng, Slot::X, 2, 3);
        if psi.is_zero() {
            continue;
        }
        states += 1;
        for i in 1..=3 {
            let v: Vec<f64> = widths
                .iter()
                .map(|j| imaginary_ratio(Observable::X(i), &psi, &LatticeWindow::standard(*j, 4).unwrap()))
                .collect();
            if v.windows(2).any(|x| x[1] > x[0]) {
                return Err(format!("X{i}, psi = {psi}: {v:?}"));
            }
            worst = v.iter().copied().fold(worst, f64::max);
        }
    }
    Ok(format!("10 states, largest |Im|/|<1>| = {worst:e}"))
}

fn line_integral() -> Verdict {
    let want: QScalar = "1/(1 + q)".parse().unwrap();
    if line_moment_symbolic(1, 1) != want {
        return Err("symbolic moment".into());
    }
    let w = LatticeWindow::standard(10, 4).unwrap();
    let z = LineIntegrand::Poly(vec![Gauss::from_int(0), Gauss::one()]);
    let got = jackson_integral_line(&z, &LineRange::ZeroTo(1, 0), 1, &w).map_err(|e| e.to_string())?;
    let q0 = rat(11, 10);
    let exact = Gauss::real(BigRational::one() / (&q0 + BigRational::one()));
    if got != exact || got != Gauss::real(rat(10, 21)) {
        return Err(format!("at q0 = 11/10: {got}"));
    }
    // the defining sum (q - 1) x0 Σ_{j≥1} q^{-j} (q^{-j} x0), truncated
    let q = rat_to_f64(&q0);
    let partial: f64 = (1..=400).map(|j| (q - 1.0) * q.powi(-2 * j)).sum();
    if (partial - 10.0 / 21.0).abs() > 1e-12 {
        return Err(format!("partial sums approach {partial}"));
    }
    Ok("x0^2/(q+1) = 10/21 at q0 = 11/10".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (1, "star product equals normal-ordered product, degree <= 6", oracle_equivalence),
        (2, "star associativity", associativity),
        (3, "conjugation laws", conjugation_laws),
        (4, "U_q(su2) relations", spin_relations),
        (5, "exponential eigenvalue equations", eigenvalues),
        (6, "addition theorem and inversion identity", addition_and_inversion),
        (7, "coassociativity and counit", coproduct_laws),
        (8, "uhat inverse and degree-one inversion", uhat_and_inversion),
        (9, "lattice Stokes theorem", lattice_stokes),
        (10, "integration by parts", by_parts),
        (11, "expectation values", expectation_layer),
        (12, "Jackson line integral closed form", line_integral),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        match run() {
            Ok(info) => report!("criterion {n:>2} PASS  {name}: {info}"),
            Err(why) if KNOWN_RED.contains(&n) => {
                report!("criterion {n:>2} FAIL (expected, see ledger)  {name}: {why}")
            }
            Err(why) => {
                report!("criterion {n:>2} FAIL  {name}: {why}");
                unexpected.push(n);
            }
        }
    }
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}
