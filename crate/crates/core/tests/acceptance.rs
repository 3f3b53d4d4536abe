//! Acceptance suite: one test per criterion, `c01` .. `c12`.

mod common;

use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use ellsurf::constructions::{
    cor4_forward, cor4_inverse, cor8_deg5, rem7_curve, thm16_cubic, thm16_quartic, thm1_deg3, thm1_deg4_from_point,
    thm2_quartic, thm5_sextic, thm6_step, ConstructionResult, Thm6System,
};
use ellsurf::ecq::{order_classify, CurveQ, Order, PointQ};
use ellsurf::identities::{
    cor14_residual, cor14_triple, cor14_triple_with, cor15_branch, cor15_closes, cor15_triple, order3_discriminant,
    order3_family, rem11_residual, thm10_curve_c, thm10_d, thm10_solve, thm10_weierstrass, verify_r10, verify_r11,
    Cor15Case,
};
use ellsurf::qmath::{int, rat, Poly, Rat, BIVARIATE_SAMPLES};
use ellsurf::scanner::{scan_fx, scan_g6, t_candidates, DEFAULT_POINT_HEIGHT, DEFAULT_T_HEIGHT};
use ellsurf::surfaces::verify_section;
use ellsurf::Result;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rand::Rng;

use common::{coeff, nonzero, poly, rng};

#[test]
fn c01_example_nine_bit_exact() {
    let start = Instant::now();
    let g = poly(&[1, 0, 1, 0, 0, 0, 1]);
    let step = thm6_step(&g, &int(1), &PointQ::ints(1, 2), Thm6System::Auto).unwrap();
    assert_eq!(step.p, rat(16, 13));
    assert_eq!(step.q, rat(-1, 13));
    assert_eq!(step.t_offset, rat(-358, 169));
    assert_eq!(step.t1, rat(-189, 169));
    assert_eq!(step.point, PointQ::new(rat(-3531, 2197), rat(1137934, 4826809)));
    let g_t1 = Rat::new(BigInt::from(47) * BigInt::from(2085456070589i64), BigInt::from(13).pow(12u32));
    assert_eq!(g.eval(&step.t1), g_t1);
    assert!(CurveQ::new(int(0), g_t1).on_curve(&step.point));
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
}

#[test]
fn c02_constant_identity() {
    assert_eq!(rem11_residual(), Poly::constant(int(-375)));
}

#[test]
fn c03_two_parameter_identities_by_sampling() {
    assert!(verify_r10(BIVARIATE_SAMPLES));
    assert!(verify_r11(BIVARIATE_SAMPLES));
}

#[test]
fn c04_sixth_power_family() {
    for n in -1000..=1000 {
        let (x, y, z) = cor14_triple(&BigInt::from(n));
        assert_eq!(cor14_residual(&x, &y, &z), int(n), "n = {n}");
    }
    let (x, y, z) = cor14_triple_with(&BigInt::zero(), 24416);
    assert_ne!(cor14_residual(&x, &y, &z), int(0));
}

#[test]
fn c05_integer_families() {
    // Frozen: the readings that close symbolically.
    assert_eq!(cor15_branch(Cor15Case::Unit), Some((1, 0)));
    assert_eq!(cor15_branch(Cor15Case::Shifted), Some((1, -72)));
    for _ in 0..2 {
        assert!(cor15_closes(Cor15Case::Unit, (1, 0), BIVARIATE_SAMPLES));
        assert!(cor15_closes(Cor15Case::Shifted, (1, -72), BIVARIATE_SAMPLES));
        assert!(!cor15_closes(Cor15Case::Unit, (-1, 0), BIVARIATE_SAMPLES));
        assert!(!cor15_closes(Cor15Case::Shifted, (-1, -72), BIVARIATE_SAMPLES));
    }
    let tr = cor15_triple(Cor15Case::Shifted, &BigInt::from(-4), &BigInt::from(2)).unwrap();
    assert_eq!(tr.residual(), BigInt::from(-4));
}

fn check(name: &str, res: Result<ConstructionResult>) {
    let res = res.unwrap_or_else(|e| panic!("{name}: {e}"));
    assert!(verify_section(&res.surface, &res.section), "{name}: section");
    assert!(res.certificate.replay(&res.surface, &res.section), "{name}: certificate");
}

#[test]
fn c06_construction_property_suites() {
    const N: usize = 100;
    let start = Instant::now();
    let mut r = rng(6);
    for _ in 0..N {
        let f = common::thm1_deg3(&mut r);
        check(&format!("thm1_deg3 {f:?}"), thm1_deg3(&f, None));
    }
    for _ in 0..N {
        let (f, t0, x0, y0) = common::thm1_deg4(&mut r);
        check(&format!("thm1_deg4 {f:?} {t0} {x0} {y0}"), thm1_deg4_from_point(&f, &t0, &x0, &y0));
    }
    for _ in 0..N {
        let f = common::thm2(&mut r);
        check(&format!("thm2 {f:?}"), thm2_quartic(&f));
    }
    for _ in 0..N {
        let g = common::thm5(&mut r);
        check(&format!("thm5 {g:?}"), thm5_sextic(&g));
    }
    for _ in 0..N {
        let (f, g) = common::thm16_cubic(&mut r);
        check(&format!("thm16_cubic {f:?} {g:?}"), thm16_cubic(&f, &g, None));
    }
    for _ in 0..N {
        let (f, g) = common::thm16_quartic(&mut r);
        check(&format!("thm16_quartic {f:?} {g:?}"), thm16_quartic(&f, &g));
    }
    for _ in 0..N {
        let (g, t0) = common::rem7(&mut r);
        check(&format!("rem7 {g:?} {t0}"), rem7_curve(&g, &t0));
    }
    for _ in 0..N {
        let h = common::cor8(&mut r);
        check(&format!("cor8 {h:?}"), cor8_deg5(&h));
    }
    assert!(start.elapsed() < Duration::from_secs(300), "took {:?}", start.elapsed());
}

#[test]
fn c07_seed_point_has_infinite_order() {
    let mut r = rng(7);
    let mut tested = 0;
    let mut solved = 0;
    while tested < 50 {
        let a = 2 * r.gen_range(-10i64..=9) + 1;
        let b = nonzero(&mut r);
        let c = coeff(&mut r);
        let m = thm10_weierstrass(&int(a), &int(b), &int(c));
        if m.curve.is_singular() {
            continue;
        }
        tested += 1;
        assert!(m.curve.on_curve(&m.seed()));
        assert_eq!(order_classify(&m.curve, &m.seed()).unwrap(), Order::Infinite, "a={a} b={b} c={c}");
        let g = poly(&[coeff(&mut r), coeff(&mut r), c, b, a, 0, 1]);
        if let Ok(sol) = thm10_solve(&g) {
            solved += 1;
            assert_eq!(sol.triple.residual, Poly::x());
            assert!(sol.triple.check(&g));
        }
    }
    assert!(solved > 0);
}

#[test]
fn c08_order_three_family() {
    let mut r = rng(8);
    let mut tested = 0;
    while tested < 20 {
        let p = int(nonzero(&mut r));
        let b = int(nonzero(&mut r));
        if order3_discriminant(&p, &b).is_zero() {
            continue;
        }
        tested += 1;
        let m = order3_family(&p, &b);
        let seed = m.seed();
        assert!(m.curve.on_curve(&seed));
        assert!(!m.curve.scalar_mul(1, &seed).unwrap().is_infinity());
        assert!(!m.curve.scalar_mul(2, &seed).unwrap().is_infinity());
        assert!(m.curve.scalar_mul(3, &seed).unwrap().is_infinity());
    }
}

#[test]
fn c09_d_vanishes_iff_repeated_root() {
    let mut r = rng(9);
    let mut zero_cases = 0;
    for i in 0..100 {
        let (a, b, c) = if i % 2 == 0 {
            (int(coeff(&mut r)), int(coeff(&mut r)), int(coeff(&mut r)))
        } else {
            // U = (s - k)^2 (s^2 + 2ks + m).
            let k = int(coeff(&mut r));
            let m = int(coeff(&mut r));
            let a = (int(3) * &k * &k - &m) / int(12);
            let b = (int(2) * &k * &k * &k - int(2) * &k * &m) / int(48);
            let c = (&a * &a - &k * &k * &m / int(6)) / int(12);
            (a, b, c)
        };
        let d_zero = thm10_d(&a, &b, &c).is_zero();
        zero_cases += d_zero as usize;
        assert_eq!(d_zero, thm10_curve_c(&a, &b, &c).has_repeated_root(), "a={a} b={b} c={c}");
    }
    assert!(zero_cases >= 50);
}

#[test]
fn c10_birational_roundtrips() {
    let mut r = rng(10);
    // Quartic surface v^2 = u^4 + f(w) and y^2 = x^3 - 4 f(t) x.
    let mut done = 0;
    while done < 20 {
        let (u, v, w) = (int(nonzero(&mut r)), int(coeff(&mut r)), int(coeff(&mut r)));
        let partial = poly(&[0, coeff(&mut r), coeff(&mut r), coeff(&mut r), nonzero(&mut r)]);
        let f = &partial + &Poly::constant(&v * &v - &u * &u * &u * &u - partial.eval(&w));
        if &u * &u == v {
            continue;
        }
        let (x, y, t) = cor4_inverse(&u, &v, &w);
        assert_eq!(&y * &y, &x * &x * &x - int(4) * f.eval(&t) * &x);
        assert_eq!(cor4_forward(&x, &y, &t).unwrap(), (u.clone(), v.clone(), w.clone()));
        let (u2, v2, w2) = cor4_forward(&x, &y, &t).unwrap();
        assert_eq!(cor4_inverse(&u2, &v2, &w2), (x, y, t));
        done += 1;
    }
    // C <-> E on multiples of the seed point.
    let mut done = 0;
    while done < 20 {
        let (a, b, c) = (int(2 * r.gen_range(-10i64..=9) + 1), int(nonzero(&mut r)), int(coeff(&mut r)));
        let m = thm10_weierstrass(&a, &b, &c);
        if m.curve.is_singular() {
            continue;
        }
        let k = r.gen_range(2i64..=4);
        let p = m.curve.scalar_mul(k, &m.seed()).unwrap();
        let Some((s, v)) = m.to_c(&p) else { continue };
        assert!(thm10_curve_c(&a, &b, &c).contains(&s, &v));
        assert_eq!(m.to_e(&s, &v), p);
        assert_eq!(m.to_c(&m.to_e(&s, &v)), Some((s, v)));
        done += 1;
    }
}

#[test]
fn c11_desk_scale_scans() {
    let never = AtomicBool::new(false);
    let ts = t_candidates(DEFAULT_T_HEIGHT);
    let fx = scan_fx(2, &ts, DEFAULT_POINT_HEIGHT, &never);
    let g6 = scan_g6(1, &ts, DEFAULT_POINT_HEIGHT, &never);
    assert!(!fx.is_empty() && !g6.is_empty());
    for rec in fx.iter().chain(&g6) {
        assert!(rec.is_success(), "{:?}", rec.coefficients);
        assert!(rec.replay(), "{:?}", rec.coefficients);
    }
}

#[test]
fn c12_torsion_ground_truth() {
    let order = |c: &CurveQ, p: &PointQ| (1..=12).find(|&k| c.scalar_mul(k, p).unwrap().is_infinity());
    assert_eq!(order(&CurveQ::from_ints(4, 0), &PointQ::ints(2, 4)), Some(4));
    assert_eq!(order(&CurveQ::from_ints(0, -432), &PointQ::ints(12, 36)), Some(3));
    assert_eq!(order(&CurveQ::from_ints(0, 9), &PointQ::ints(0, 3)), Some(3));
    assert_eq!(order(&CurveQ::from_ints(0, 9), &PointQ::ints(0, -3)), Some(3));
}
