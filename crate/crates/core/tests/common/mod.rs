//! Seeded generators of inputs that satisfy each construction's hypotheses,
//! with coefficients drawn from [-20, 20].

#![allow(dead_code)]

use ellsurf::constructions::depress;
use ellsurf::qmath::{int, Poly, Rat};
use num_traits::Zero;
use rand::Rng;
pub use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub const COEFF: i64 = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(r: &mut ChaCha8Rng) -> i64 {
    r.gen_range(-COEFF..=COEFF)
}

pub fn nonzero(r: &mut ChaCha8Rng) -> i64 {
    loop {
        let c = coeff(r);
        if c != 0 {
            return c;
        }
    }
}

/// Coefficients listed from the constant term up.
pub fn poly(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

/// `a t^3 + b t^2 + c t + d` with `a` or `b` nonzero.
pub fn thm1_deg3(r: &mut ChaCha8Rng) -> Poly {
    loop {
        let cs = [coeff(r), coeff(r), coeff(r), coeff(r)];
        if cs[3] != 0 || cs[2] != 0 {
            return poly(&cs);
        }
    }
}

/// Depressed quartic with a point `(x0, y0 = m x0)` on the fiber over `t0`;
/// the constant term is forced by the point, the rest are free.
pub fn thm1_deg4(r: &mut ChaCha8Rng) -> (Poly, Rat, Rat, Rat) {
    loop {
        let (a, b, c) = (nonzero(r), coeff(r), coeff(r));
        let t0 = r.gen_range(-5i64..=5);
        let x0 = nonzero(r);
        let m = r.gen_range(-5i64..=5);
        if 2 * x0 == m * m {
            continue;
        }
        let d = x0 * m * m - x0 * x0 - (a * t0.pow(4) + b * t0 * t0 + c * t0);
        return (poly(&[d, c, b, 0, a]), int(t0), int(x0), int(m * x0));
    }
}

/// Quartic whose depressed form has a nonzero linear term.
pub fn thm2(r: &mut ChaCha8Rng) -> Poly {
    loop {
        let f = poly(&[coeff(r), coeff(r), coeff(r), coeff(r), nonzero(r)]);
        if !depress(&f).0.coeff(1).is_zero() {
            return f;
        }
    }
}

/// Monic sextic whose depressed form has a nonzero cubic or linear term.
pub fn thm5(r: &mut ChaCha8Rng) -> Poly {
    loop {
        let g = poly(&[coeff(r), coeff(r), coeff(r), coeff(r), coeff(r), coeff(r), 1]);
        let gd = depress(&g).0;
        if !gd.coeff(3).is_zero() || !gd.coeff(1).is_zero() {
            return g;
        }
    }
}

/// Cubic `f` and nonzero `g` of degree at most 4.
pub fn thm16_cubic(r: &mut ChaCha8Rng) -> (Poly, Poly) {
    let f = poly(&[coeff(r), coeff(r), coeff(r), nonzero(r)]);
    loop {
        let g = poly(&[coeff(r), coeff(r), coeff(r), coeff(r), coeff(r)]);
        if !g.is_zero() {
            return (f, g);
        }
    }
}

/// Quartic `f` and `g` of degree at most 4, not both even after centring `f`.
pub fn thm16_quartic(r: &mut ChaCha8Rng) -> (Poly, Poly) {
    loop {
        let f = poly(&[coeff(r), coeff(r), coeff(r), coeff(r), nonzero(r)]);
        let g = poly(&[coeff(r), coeff(r), coeff(r), coeff(r), coeff(r)]);
        let (fd, delta) = depress(&f);
        let gd = g.shift(&delta);
        if !(fd.coeff(1).is_zero() && gd.coeff(3).is_zero() && gd.coeff(1).is_zero()) {
            return (f, g);
        }
    }
}

/// `t^6 + a t^4 + c t^2 + e` with `(a, c) != 0` and `e` chosen so that `t0`
/// is a root.
pub fn rem7(r: &mut ChaCha8Rng) -> (Poly, Rat) {
    loop {
        let (a, c) = (coeff(r), coeff(r));
        if a == 0 && c == 0 {
            continue;
        }
        let t0 = r.gen_range(-3i64..=3);
        let e = -(t0.pow(6) + a * t0.pow(4) + c * t0 * t0);
        return (poly(&[e, 0, c, 0, a, 0, 1]), int(t0));
    }
}

/// Quintic with constant term 1.
pub fn cor8(r: &mut ChaCha8Rng) -> Poly {
    poly(&[1, coeff(r), coeff(r), coeff(r), coeff(r), nonzero(r)])
}
