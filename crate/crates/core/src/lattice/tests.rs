use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::star::star;

fn p(s: &str) -> CPoly {
    s.parse().unwrap()
}

fn window() -> LatticeWindow {
    LatticeWindow::standard(10, 4).unwrap()
}

fn interior_agrees(a: &LatticeFn, b: &LatticeFn, w: &LatticeWindow) -> bool {
    a.values.keys().chain(b.values.keys()).filter(|p| w.interior(p)).all(|p| a.get(p) == b.get(p))
}

#[test]
fn window_validation() {
    assert!(LatticeWindow::standard(10, 3).is_err());
    assert!(LatticeWindow::new(rat(9, 10), rat(1, 1), 10, 4).is_err());
    assert!(LatticeWindow::new(rat(11, 10), rat(-1, 1), 10, 4).is_err());
    assert!(LatticeWindow::standard(4, 4).is_err());
}

#[test]
fn line_integral_examples() {
    let w = window();
    let z = LineIntegrand::Poly(vec![Gauss::zero(), Gauss::one()]);
    let expect = Gauss::real(&w.x0 * &w.x0 / (&w.q0 + BigRational::one()));
    assert_eq!(jackson_integral_line(&z, &LineRange::ZeroTo(1, 0), 1, &w).unwrap(), expect);
    assert_eq!(line_moment_symbolic(1, 1), p("1/(1 + q)").coeff(&crate::series::Exps::one()));

    let mut t = BTreeMap::new();
    t.insert((1i8, 3i32), Gauss::one());
    let one_point = LineIntegrand::Table(t);
    let w3 = (&w.q0 - BigRational::one()) * w.q_pow(3) * &w.x0;
    assert_eq!(jackson_integral_line(&one_point, &LineRange::Full, 1, &w).unwrap(), Gauss::real(w3.clone()));
    assert_eq!(jackson_integral_line(&one_point, &LineRange::ToInfinity(1, 2), 1, &w).unwrap(), Gauss::real(w3));
    assert!(jackson_integral_line(&one_point, &LineRange::ZeroTo(1, 3), 1, &w).unwrap().is_zero());
    assert!(jackson_integral_line(&LineIntegrand::Table(BTreeMap::new()), &LineRange::Full, 2, &w).unwrap().is_zero());
    assert_eq!(jackson_integral_line(&z, &LineRange::Full, 1, &w), Err(LatticeError::NonCompact));
}

#[test]
fn whole_space_integral() {
    let w = window();
    assert!(integral_r3(&LatticeFn::zero(), &w).unwrap().is_zero());
    let pt = [(1, 2), (-1, -1), (1, 0)];
    let v = Gauss::from_ints(3, -2);
    assert_eq!(integral_r3(&LatticeFn::delta(pt, v.clone()), &w).unwrap(), v.scale(&w.weight(&pt)));
    assert_eq!(integral_r3(&sample(&CPoly::one(), &w), &w), Err(LatticeError::NonCompact));

    // separable integrand: product of three line integrals
    let (fa, fb, fc) = (p("x+^2"), p("1"), p("x-^2 + 3"));
    let f = &(&fa * &fb) * &fc;
    let lim = w.half_width - w.margin;
    let line = |g: &CPoly, a: Axis| {
        let mut t = BTreeMap::new();
        for s in [1i8, -1] {
            for j in -lim..=lim {
                let mut pt = [(1i8, 0i32); 3];
                pt[a.index()] = (s, j);
                let x = w.coord(a, &pt);
                let mut point = vec![BigRational::zero(); crate::series::NVARS];
                point[Slot::X.var(a)] = x;
                t.insert((s, j), g.eval_at(&w.q0, &point));
            }
        }
        let wa = LatticeWindow::new(w.q0.clone(), w.base(a), w.half_width, w.margin).unwrap();
        jackson_integral_line(&LineIntegrand::Table(t), &LineRange::Full, step(a), &wa).unwrap()
    };
    let prod = &(&line(&fa, Axis::Plus) * &line(&fb, Axis::Three)) * &line(&fc, Axis::Minus);
    assert_eq!(integral_r3(&cutoff(&f, &w), &w).unwrap(), prod);
    assert_eq!(integral_cutoff_poly(&f, &w), prod);
}

#[test]
fn sampling() {
    let w = LatticeWindow::standard(6, 4).unwrap();
    let ones = sample(&CPoly::one(), &w);
    assert_eq!(ones.values.len(), 26usize.pow(3));
    assert!(ones.values.values().all(|v| *v == Gauss::one()));
    let f = p("x+*x3 - 2*x-^2");
    let (s, c) = (sample(&f, &w), cutoff(&f, &w));
    assert!(c.compact && !s.compact);
    assert!(c.values.keys().all(|p| w.interior(p) && s.get(p) == c.get(p)));
    let x3 = sample(&p("x3"), &w);
    assert_eq!(x3.get(&[(1, 2), (-1, 0), (1, 1)]), Gauss::from_int(-1));
}

#[test]
fn lattice_derivatives_match_polynomial_actions() {
    let w = LatticeWindow::standard(5, 4).unwrap();
    for f in ["x+^2*x-", "x+*x3*x- - q*x-^2", "x3^2*x-"] {
        let f = p(f);
        let s = sample(&f, &w);
        for action in Action::ALL {
            for a in Axis::ALL {
                for idx in [Index::Co(a), Index::Contra(a)] {
                    let lat = d_lattice(action, idx, &s, &w).unwrap();
                    let exact = sample(&apply_action(action, idx, &f, Slot::X), &w);
                    assert!(interior_agrees(&lat, &exact, &w), "{action:?} {idx:?} {f}");
                }
            }
        }
    }
}

#[test]
fn derivative_examples() {
    let w = window();
    assert!(d_left_lattice(Index::Co(Axis::Plus), &LatticeFn::zero(), &w).unwrap().values.is_empty());
    // a plateau has zero difference quotients away from its edge
    let mut plateau = LatticeFn::zero();
    for j in -3..=3 {
        plateau.set([(1, j), (1, 0), (1, 0)], Gauss::one());
    }
    let d = d_left_lattice(Index::Co(Axis::Plus), &plateau, &w).unwrap();
    for j in -3..=1 {
        assert!(d.get(&[(1, j), (1, 0), (1, 0)]).is_zero());
    }
    assert!(!d.get(&[(1, 2), (1, 0), (1, 0)]).is_zero());
    let edge = LatticeFn::delta([(1, 7), (1, 0), (1, 0)], Gauss::one());
    assert!(matches!(d_left_lattice(Index::Co(Axis::Plus), &edge, &w), Err(LatticeError::MarginOverflow(..))));
}

#[test]
fn polynomial_star_on_lattice() {
    let w = LatticeWindow::standard(9, 4).unwrap();
    let small = LatticeWindow::standard(6, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = LatticeFn::random_within(&mut rng, 3, 6);
    assert_eq!(star_poly_lattice(&CPoly::one(), &g, Side::Left, &w).unwrap(), g);
    let xp = star_poly_lattice(&p("x+"), &g, Side::Left, &w).unwrap();
    assert_eq!(xp, multiply(&g, &Gauss::one(), [1, 0, 0], &w));
    let x3 = star_poly_lattice(&p("x3"), &g, Side::Left, &w).unwrap();
    for pt in g.values.keys() {
        let below = [(pt[0].0, pt[0].1 - 1), pt[1], pt[2]];
        let expect = g.get(pt).scale(&w.coord(Axis::Three, &below));
        assert_eq!(x3.get(&below), expect);
    }
    for (f, h) in [("x-", "x+^2*x3"), ("x3*x- + x+", "x+*x-"), ("x-^2", "x+^2 + x3"), ("x+*x3", "x-*x3^2")] {
        let (f, h) = (p(f), p(h));
        let w = &small;
        let sh = sample(&h, w);
        let left = star_poly_lattice(&f, &sh, Side::Left, w).unwrap();
        assert!(interior_agrees(&left, &sample(&star(&f, &h).unwrap(), w), w), "{f} * {h}");
        let right = star_poly_lattice(&f, &sh, Side::Right, w).unwrap();
        assert!(interior_agrees(&right, &sample(&star(&h, &f).unwrap(), w), w), "{h} * {f}");
    }
}

#[test]
fn stokes_exact() {
    let w = window();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let bump = LatticeFn::delta([(1, 0), (-1, 2), (1, -1)], Gauss::one());
    assert!(stokes_residual(Action::Left, Index::Contra(Axis::Plus), &bump, &w).unwrap().is_zero());
    assert!(stokes_residual(Action::Left, Index::Co(Axis::Minus), &LatticeFn::zero(), &w).unwrap().is_zero());
    for _ in 0..10 {
        let g = LatticeFn::random_compact(&mut rng, &w, 8);
        for action in Action::ALL {
            for a in Axis::ALL {
                for idx in [Index::Co(a), Index::Contra(a)] {
                    assert!(stokes_residual(action, idx, &g, &w).unwrap().is_zero(), "{action:?} {idx:?}");
                }
            }
        }
    }
}

fn by_parts_holds(line: ByPartsLine, pairing: Pairing, fs: &[&str], gs: &[LatticeFn], w: &LatticeWindow) -> bool {
    fs.iter().all(|f| {
        let f = p(f);
        Axis::ALL.iter().all(|a| {
            gs.iter().all(|g| {
                let (l, r) = by_parts_sides(line, pairing, *a, &f, g, w).unwrap();
                l == r
            })
        })
    })
}

#[test]
fn integration_by_parts() {
    let w = LatticeWindow::standard(14, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let gs: Vec<LatticeFn> = (0..4).map(|_| LatticeFn::random_within(&mut rng, 3, 4)).collect();
    let fs = ["1", "x+", "x3", "x-", "x+*x-", "x3^2", "x+*x3", "x3*x-", "x+^2", "x-^2", "x+*x3*x-", "x+*x-^2", "x3^3"];
    for line in [ByPartsLine::Unhatted, ByPartsLine::Hatted] {
        assert!(by_parts_holds(line, Pairing::Conjugated, &fs, &gs, &w), "{line:?}");
        for act in [Action::RightBar, Action::Right] {
            assert!(!by_parts_holds(line, Pairing::Literal(act), &fs, &gs, &w), "{line:?} {act:?}");
        }
    }
}

#[test]
fn expectation_values() {
    let w = LatticeWindow::standard(8, 4).unwrap();
    let flat = CPoly::one();
    assert!(expectation(Observable::X(3), &flat, &w).is_zero());
    let norm = expectation(Observable::One, &flat, &w);
    assert!(norm.is_real() && norm.to_f64_pair().0 > 0.0);
    let lim = w.half_width - w.margin;
    let full = Axis::ALL.iter().fold(BigRational::one(), |acc, a| {
        acc * (-lim..=lim)
            .map(|j| w.axis_weight(*a, j) * BigRational::from_integer(2.into()))
            .fold(BigRational::zero(), |x, y| x + y)
    });
    assert_eq!(norm, Gauss::real(full));
    let even = p("x+*x- + (2 - i)*x3^2 + 1");
    assert!(expectation(Observable::X(3), &even, &w).is_zero());
    for psi in [p("x+ + i*x3"), p("(1 + i)*x-*x3 + 2*x+")] {
        for i in 1..=3 {
            assert_eq!(imaginary_ratio(Observable::X(i), &psi, &w), 0.0, "X{i} {psi}");
        }
    }
}

#[test]
fn densities() {
    let w = LatticeWindow::standard(7, 4).unwrap();
    let d = density(&CPoly::one(), &w);
    assert!(d.values.values().all(|v| *v == Gauss::one()));
    let psi = p("x3");
    assert_eq!(density(&psi, &w), cutoff(&p("x3^2"), &w));
    let psi = p("x+ + i*x3*x-");
    assert_eq!(integral_r3(&density(&psi, &w), &w).unwrap(), expectation(Observable::One, &psi, &w));
}

#[test]
fn conjugation_of_neutral_integrals_is_exact() {
    let w = LatticeWindow::standard(8, 4).unwrap();
    for f in ["x+*x-", "(2 + i)*x+*x3^2*x- + q*x3^2", "i*x+^2*x-^2"] {
        assert_eq!(conjugation_residual(&p(f), &w), 0.0);
    }
}

#[test]
fn imaginary_parts_vanish_on_compatible_lattice() {
    let psi = p("(1 + i)*x3*x- + 2*x+");
    let naive: Vec<f64> = [8, 10, 12]
        .iter()
        .map(|j| imaginary_ratio(Observable::X(3), &psi, &LatticeWindow::standard(*j, 4).unwrap().with_common_base()))
        .collect();
    assert!(naive.windows(2).all(|v| v[1] > v[0]), "{naive:?}");
    for j in [8, 10, 12] {
        let w = LatticeWindow::standard(j, 4).unwrap();
        for i in 1..=3 {
            assert_eq!(imaginary_ratio(Observable::X(i), &psi, &w), 0.0);
        }
        assert_eq!(conjugation_residual(&p("x+^2*x3^2 + i*x-^2"), &w), 0.0);
    }
}
