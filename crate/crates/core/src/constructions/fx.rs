//! Sections of `y^2 = x^3 + f(t) x` with `deg f <= 4`.
//!
//! The degree 3 and point-based degree 4 constructions work on the model
//! `X Y^2 = X^2 + f(t)` obtained from `(x, y) = (X, X Y)`; results are mapped
//! back before they are returned.

use num_traits::Zero;

use super::{depress, finish, fn_param, k, rat_param, ratfn, ConstructionResult};
use crate::error::{Error, Result};
use crate::qmath::{int, poly_compose_ratfn, squarefree_part, Poly, Rat, RatFn};
use crate::surfaces::{Section, Surface};

/// Base change `t = -phi1(r, s) / phi2(r, s)` on which `X = pT + q`,
/// `Y = rT + s` meets `X Y^2 = X^2 + f(T)` at one further point.
pub fn thm1_deg3(f: &Poly, r: Option<Rat>) -> Result<ConstructionResult> {
    if f.is_constant() {
        return Err(Error::hypothesis("f must be nonconstant"));
    }
    if f.deg() > 3 {
        return Err(Error::hypothesis("f must have degree at most 3"));
    }
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    if a.is_zero() && b.is_zero() {
        return Err(Error::hypothesis("deg f <= 1: the surface splits after t = (s^4 - d)/c"));
    }
    let r = r.unwrap_or_else(|| int(1));
    if r.is_zero() {
        return Err(Error::hypothesis("r must be nonzero"));
    }
    let s = Poly::x();
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let r4 = &r2 * &r2;
    let r6 = &r3 * &r3;
    let a2 = &a * &a;
    let p = &a / &r2;
    let q = (k(&(&a2 + &b * &r4)) - s.scale(&(int(2) * &a * &r3))).scale(&r6.recip());
    let phi1 = k(&(&a2 * &a2 + int(2) * &a2 * &b * &r4 + &b * &b * &r4 * &r4 + &d * &r6 * &r6))
        - s.scale(&(int(4) * &a * &r3 * (&a2 + &b * &r4)))
        + s.pow(2).scale(&(&r6 * (int(3) * &a2 - &b * &r4)))
        + s.pow(3).scale(&(int(2) * &a * &r6 * &r3));
    let phi2 = (k(&(int(2) * &a2 * &a + int(2) * &a * &b * &r4 + &c * &r4 * &r4))
        - s.scale(&(int(2) * &r3 * (int(3) * &a2 + &b * &r4)))
        + s.pow(2).scale(&(int(3) * &a * &r6)))
    .scale(&r4);
    let t = ratfn(-phi1, phi2, "phi2")?;
    let qf = RatFn::from_poly(q);
    let x = &t.scale(&p) + &qf;
    let y_model = &t.scale(&r) + &RatFn::var();
    let y = &x * &y_model;
    let section = Section::new("s", t.clone(), x, y);
    let params = vec![rat_param("r", &r), rat_param("p", &p), fn_param("q", &qf), fn_param("phi", &t)];
    finish("thm1-3", Surface::Fx(f.clone()), section, params, vec![])
}

/// From a point `(x0, y0)` on the fiber over `t0`, the curve
/// `X = pT^2 + qT + x0`, `Y = rT + y0/x0`, `t = T + t0` with `p, q` chosen to
/// make `T = 0` a triple root; the fourth root gives the base change in `r`.
pub fn thm1_deg4_from_point(f: &Poly, t0: &Rat, x0: &Rat, y0: &Rat) -> Result<ConstructionResult> {
    if f.degree() != Some(4) {
        return Err(Error::hypothesis("f must have degree 4"));
    }
    if y0 * y0 != x0 * x0 * x0 + f.eval(t0) * x0 {
        return Err(Error::hypothesis("(x0, y0) is not on the fiber over t0"));
    }
    if x0.is_zero() {
        return Err(Error::hypothesis("x0 must be nonzero"));
    }
    let den = int(2) * x0 * x0 * x0 - y0 * y0;
    if den.is_zero() {
        return Err(Error::hypothesis("2 x0^3 - y0^2 must be nonzero"));
    }
    let (g, delta) = depress(f);
    let tau0 = t0 - &delta;
    let (a, b, c) = (g.coeff(4), g.coeff(2), g.coeff(1));
    let r = Poly::x();
    let x0p = k(x0);
    let y0p = k(y0);
    let t0p = k(&tau0);
    // q and p are polynomials in r.
    let q = (k(&(&c + int(2) * &b * &tau0 + int(4) * &a * &tau0 * &tau0 * &tau0)) - r.scale(&(int(2) * y0)))
        .scale(&(-(x0 * x0) / &den));
    let p = (k(&(&b * x0 + int(6) * &a * &tau0 * &tau0 * x0)) + &q * &q * &x0p
        - r.pow(2).scale(&(x0 * x0))
        - (&q * &r * &y0p).scale(&int(2)))
    .scale(&(-x0 / &den));
    let num = (&p * &q * &x0p).scale(&int(2)) - &q * &r.pow(2) * &x0p + (&t0p * &x0p).scale(&(int(4) * &a))
        - (&p * &r * &y0p).scale(&int(2));
    let tden = (k(&a) + &p * &p - &p * &r.pow(2)).scale(x0);
    if tden.is_zero() {
        return Err(Error::hypothesis("a + p^2 - p r^2 vanishes identically"));
    }
    let t = ratfn(-num, tden, "triple-root denominator")?;
    let tf = RatFn::from_poly;
    let x = &(&(&t * &t) * &tf(p.clone())) + &(&(&t * &tf(q.clone())) + &RatFn::constant(x0.clone()));
    let y_model = &(&t * &RatFn::var()) + &RatFn::constant(y0 / x0);
    let y = &x * &y_model;
    let phi = &t + &RatFn::constant(t0.clone());
    let section = Section::new("r", phi, x, y);
    let params = vec![fn_param("p", &tf(p)), fn_param("q", &tf(q)), fn_param("T", &t), rat_param("t0", t0)];
    finish("thm1-4", Surface::Fx(f.clone()), section, params, vec![])
}

/// `x = a u^2`, `t = -(4 a^3 u^4 + 4 a d - b^2) / (4 a c)` on the depressed
/// quartic `a t^4 + b t^2 + c t + d`.
pub fn thm2_quartic(f: &Poly) -> Result<ConstructionResult> {
    if f.degree() != Some(4) {
        return Err(Error::hypothesis("f must have degree 4"));
    }
    if f.is_even() {
        return Err(Error::hypothesis("f must not be even (f(t) = f(-t))"));
    }
    let (g, delta) = depress(f);
    let (a, b, c, d) = (g.coeff(4), g.coeff(2), g.coeff(1), g.coeff(0));
    if c.is_zero() {
        return Err(Error::hypothesis(
            "the depressed quartic has no linear term (f is even about its centre t = -c3/(4 c4)); f(t) != f(-t) alone is not enough",
        ));
    }
    let u = Poly::x();
    let a2 = &a * &a;
    let phi_num = (k(&(int(4) * &a * &d - &b * &b)) + u.pow(4).scale(&(int(4) * &a2 * &a))).scale(&-(int(4) * &a * &c).recip());
    let phi = RatFn::from_poly(phi_num);
    let x = RatFn::from_poly(u.pow(2).scale(&a));
    let y = &(&(&phi * &phi) * &RatFn::from_poly(u.scale(&a))) + &RatFn::from_poly(u.scale(&(&b / int(2))));
    let section = Section::new("u", phi.clone(), x, y).shifted(&delta);
    let params = vec![fn_param("phi", &section.phi), rat_param("shift", &delta)];
    finish("thm2", Surface::Fx(f.clone()), section, params, vec![])
}

/// Parametric solution of `v^2 = u^4 + f(w)`.
#[derive(Clone, Debug)]
pub struct Cor4Result {
    pub u: RatFn,
    pub v: RatFn,
    pub w: RatFn,
    /// The section of `y^2 = x^3 - 4 f(t) x` it was transported from.
    pub base: ConstructionResult,
}

impl Cor4Result {
    pub fn residual(&self, f: &Poly) -> RatFn {
        &(&(&self.v * &self.v) - &self.u.pow(4)) - &poly_compose_ratfn(f, &self.w)
    }
}

/// `(x, y, t) -> (y / 2x, (y^2 - 2x^3) / 4x^2, t)`, from `y^2 = x^3 - 4 f(t) x`
/// to `v^2 = u^4 + f(w)`.
pub fn cor4_forward(x: &Rat, y: &Rat, t: &Rat) -> Result<(Rat, Rat, Rat)> {
    if x.is_zero() {
        return Err(Error::hypothesis("x = 0 is outside the domain of the map"));
    }
    let u = y / (int(2) * x);
    let v = (y * y - int(2) * x * x * x) / (int(4) * x * x);
    Ok((u, v, t.clone()))
}

/// `(u, v, w) -> (2(u^2 - v), 4u(u^2 - v), w)`.
pub fn cor4_inverse(u: &Rat, v: &Rat, w: &Rat) -> (Rat, Rat, Rat) {
    let m = u * u - v;
    (int(2) * &m, int(4) * u * &m, w.clone())
}

pub fn cor4_transport(f: &Poly) -> Result<Cor4Result> {
    if f.degree() != Some(4) {
        return Err(Error::hypothesis("f must have degree 4"));
    }
    if squarefree_part(f)?.deg() < 2 {
        return Err(Error::hypothesis("f must have at least two distinct roots"));
    }
    let mut base = thm2_quartic(&f.scale(&int(-4)))?;
    base.theorem = "cor4";
    let sec = &base.section;
    if sec.x.is_zero() {
        return Err(Error::hypothesis("section has x = 0, where the map is undefined"));
    }
    let two_x = sec.x.scale(&int(2));
    let u = sec.y.checked_div(&two_x).expect("x nonzero");
    let v = (&(&sec.y * &sec.y) - &sec.x.pow(3).scale(&int(2))).checked_div(&(&sec.x * &sec.x).scale(&int(4))).expect("x nonzero");
    let out = Cor4Result { u, v, w: sec.phi.clone(), base };
    if !out.residual(f).is_zero() {
        return Err(Error::Verification("cor4: transported triple fails v^2 = u^4 + f(w)".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Param;
    use crate::qmath::rat;
    use crate::surfaces::{verify_section, CertMethod};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn thm1_cubic_t3() {
        let res = thm1_deg3(&p(&[0, 0, 0, 1]), None).unwrap();
        let want = RatFn::new(p(&[-1, 4, -3, -2]), p(&[2, -6, 3])).unwrap();
        assert_eq!(res.section.phi, want);
        let (t, x, y) = res.section.at(&int(0)).unwrap();
        assert_eq!((t, x, y), (rat(-1, 2), rat(1, 2), rat(-1, 4)));
        assert_eq!(res.certificate.method, CertMethod::YNonzeroFx);
    }

    #[test]
    fn thm1_cubic_printed_base_change_is_not_a_section() {
        // The printed numerator carries an extra factor s in the linear term;
        // at f = t^3, r = 1 it reads 2s^3 - s^2 + 1.
        let printed = RatFn::new(p(&[-1, 0, 1, -2]), p(&[2, -6, 3])).unwrap();
        let x = &printed + &RatFn::from_poly(p(&[1, -2]));
        let y = &x * &(&printed + &RatFn::var());
        let sec = Section::new("s", printed, x, y);
        assert!(!verify_section(&Surface::Fx(p(&[0, 0, 0, 1])), &sec));
        let (t, x, y) = sec.at(&int(0)).unwrap();
        assert_eq!((t, x, y), (rat(-1, 2), rat(1, 2), rat(-1, 4)));
    }

    #[test]
    fn thm1_cubic_quadratic_f_and_other_r() {
        assert!(thm1_deg3(&p(&[1, 0, 2]), None).is_ok());
        assert!(thm1_deg3(&p(&[3, -1, 2, 5]), Some(rat(2, 3))).is_ok());
        assert!(thm1_deg3(&p(&[1, 2]), None).is_err());
        assert!(thm1_deg3(&p(&[1, 0, 2]), Some(int(0))).is_err());
    }

    #[test]
    fn thm1_quartic_from_point() {
        let f = p(&[-2, 0, 1, 0, 1]);
        let res = thm1_deg4_from_point(&f, &int(1), &int(1), &int(1)).unwrap();
        assert_eq!(res.section.param, "r");
        // f = t^4 + t^2 + 14 at t0 = 0 with (u, uv) = (2, 6)
        let f = p(&[14, 0, 1, 0, 1]);
        assert!(thm1_deg4_from_point(&f, &int(0), &int(2), &int(6)).is_ok());
        // 2 x0^3 = y0^2 is excluded
        let f = p(&[1, 0, 0, 0, 1]);
        assert!(thm1_deg4_from_point(&f, &int(0), &int(2), &int(4)).is_err());
        assert!(thm1_deg4_from_point(&f, &int(0), &int(2), &int(5)).is_err());
    }

    #[test]
    fn thm1_quartic_triple_root() {
        let f = p(&[-2, 0, 1, 0, 1]);
        let (t0, x0, y0) = (int(1), int(1), int(1));
        let res = thm1_deg4_from_point(&f, &t0, &x0, &y0).unwrap();
        let get = |name: &str| match res.param(name) {
            Some(Param::Fn(v)) => v.clone(),
            _ => panic!("missing {name}"),
        };
        let (pf, qf) = (get("p"), get("q"));
        for r0 in [int(1), int(-2), rat(1, 3), rat(-5, 2)] {
            let (pv, qv) = (pf.eval(&r0).unwrap(), qf.eval(&r0).unwrap());
            let x = Poly::new(vec![x0.clone(), qv, pv]);
            let y = Poly::new(vec![&y0 / &x0, r0.clone()]);
            let t = Poly::new(vec![t0.clone(), int(1)]);
            let big_f = &x * &y.pow(2) - x.pow(2) - f.compose(&t);
            assert!(big_f.coeff(0).is_zero() && big_f.coeff(1).is_zero() && big_f.coeff(2).is_zero());
            assert!(!big_f.coeff(3).is_zero());
        }
    }

    #[test]
    fn thm2_example() {
        let res = thm2_quartic(&p(&[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(res.section.phi, RatFn::from_poly(p(&[-1, 0, 0, 0, -1])));
        let (t, x, y) = res.section.at(&int(1)).unwrap();
        assert_eq!((t.clone(), x.clone()), (int(-2), int(1)));
        assert_eq!(&y * &y, int(16));
        assert_eq!(y, int(4));
    }

    #[test]
    fn thm2_printed_y_is_the_negative() {
        for f in [p(&[1, 1, 0, 0, 1]), p(&[3, -2, 5, 0, 2]), p(&[0, 1, 4, 0, -1])] {
            let res = thm2_quartic(&f).unwrap();
            let (a, b, c, d) = (f.coeff(4), f.coeff(2), f.coeff(1), f.coeff(0));
            let u = Poly::x();
            let num = u.scale(&(-(b.clone() * &b * &b * &b) - int(8) * &a * &b * &c * &c + int(8) * &a * &b * &b * &d - int(16) * &a * &a * &d * &d))
                + u.pow(5).scale(&(int(8) * &a * &a * &a * (&b * &b - int(4) * &a * &d)))
                - u.pow(9).scale(&(int(16) * &a * &a * &a * &a * &a * &a));
            let printed = RatFn::from_poly(num.scale(&(int(16) * &a * &c * &c).recip()));
            assert_eq!(printed, -res.section.y.clone());
        }
    }

    #[test]
    fn thm2_rejects_even_and_recentred_even() {
        assert!(thm2_quartic(&p(&[1, 0, 1, 0, 1])).is_err());
        // (t+1)^4 + (t+1)^2 is not even but is even about t = -1
        let f = p(&[1, 1]).pow(4) + p(&[1, 1]).pow(2);
        assert!(!f.is_even());
        assert!(matches!(thm2_quartic(&f), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn thm2_integer_points() {
        // a = c = 1, b even: integer u gives integer points.
        for (b, d) in [(0, 1), (2, -3), (-4, 7)] {
            let res = thm2_quartic(&p(&[d, 1, b, 0, 1])).unwrap();
            for u in -3..=3 {
                let (t, x, y) = res.section.at(&int(u)).unwrap();
                assert!(t.is_integer() && x.is_integer() && y.is_integer());
            }
        }
    }

    #[test]
    fn cor4_maps() {
        let res = cor4_transport(&p(&[1, 1, 0, 0, 1])).unwrap();
        assert!(res.residual(&p(&[1, 1, 0, 0, 1])).is_zero());
        let (x, y, t) = (int(2), int(6), int(3));
        let (u, v, w) = cor4_forward(&x, &y, &t).unwrap();
        assert_eq!(cor4_inverse(&u, &v, &w), (x, y, t));
        assert!(cor4_forward(&int(0), &int(0), &int(1)).is_err());
        assert!(cor4_transport(&p(&[1, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn cor4_printed_maps_miss_the_surface() {
        // (x, y) = (2, 4) on y^2 = x^3 - 4 f x needs f = -1 at t = 0.
        let f = p(&[-1, 1, 0, 0, 1]);
        let (x, y) = (int(2), int(4));
        assert_eq!(&y * &y, &x * &x * &x - int(4) * f.eval(&int(0)) * &x);
        let u = &y / (int(2) * &x);
        let printed_v = (int(2) * &x * &x * &x + &y * &y) / (int(4) * &x * &x);
        assert_ne!(&printed_v * &printed_v, &u * &u * &u * &u + f.eval(&int(0)));
        let (u, v, w) = cor4_forward(&x, &y, &int(0)).unwrap();
        assert_eq!(&v * &v, &u * &u * &u * &u + f.eval(&w));
    }
}
