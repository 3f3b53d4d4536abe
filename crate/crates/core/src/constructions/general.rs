//! Sections of `y^2 = x^3 + f(t) x + g(t)` with `deg f in {3, 4}` and
//! `deg g <= 4`.

use num_traits::Zero;

use super::{depress, finish, fn_param, k, rat_param, ratfn, ConstructionResult};
use crate::error::{Error, Result};
use crate::qmath::{int, Poly, Rat, RatFn};
use crate::surfaces::{Section, Surface};

fn check_g(g: &Poly) -> Result<()> {
    if g.degree().is_some_and(|d| d > 4) {
        return Err(Error::hypothesis("g must have degree at most 4"));
    }
    Ok(())
}

/// `x = pT + q`, `y = rT^2 + sT + u` over the depressed cubic `a t^3 + b t + c`;
/// `p, q, u` kill the top three coefficients and `T` is the remaining root.
pub fn thm16_cubic(f: &Poly, g: &Poly, r: Option<Rat>) -> Result<ConstructionResult> {
    if f.degree() != Some(3) {
        return Err(Error::hypothesis("f must have degree 3 (a != 0)"));
    }
    check_g(g)?;
    if g.is_zero() {
        return Err(Error::hypothesis("g = 0: this is the y^2 = x^3 + f(t) x family, use thm1"));
    }
    let r = r.unwrap_or_else(|| int(1));
    if r.is_zero() {
        return Err(Error::hypothesis("r must be nonzero"));
    }
    let (fd, delta) = depress(f);
    let gd = g.shift(&delta);
    let (a, b, c) = (fd.coeff(3), fd.coeff(1), fd.coeff(0));
    let (d, e, ff, gg, h) = (gd.coeff(4), gd.coeff(3), gd.coeff(2), gd.coeff(1), gd.coeff(0));
    let s = Poly::x();
    let r2 = &r * &r;
    let a3 = &a * &a * &a;
    let p = (&r2 - &d) / &a;
    let q = (k(&(-(&d * &d * &d) + &a3 * &e + int(3) * &d * &d * &r2 - int(3) * &d * &r2 * &r2 + &r2 * &r2 * &r2))
        - s.scale(&(int(2) * &a3 * &r)))
        .scale(&-(&a3 * &a).recip());
    let kp = k(&p);
    let u = (k(&(-&ff - &b * &p)) - (&kp * &kp * &q).scale(&int(3)) + s.pow(2)).scale(&-(int(2) * &r).recip());
    let num = k(&h) + q.scale(&c) + q.pow(3) - u.pow(2);
    let den = k(&(&gg + &c * &p)) + q.scale(&b) + (&kp * &q.pow(2)).scale(&int(3)) - (&s * &u).scale(&int(2));
    let t = ratfn(-num, den, "root denominator")?;
    let x = &t.scale(&p) + &RatFn::from_poly(q.clone());
    let y = &(&(&t * &t).scale(&r) + &(&t * &RatFn::var())) + &RatFn::from_poly(u.clone());
    let section = Section::new("s", t, x, y).shifted(&delta);
    let params = vec![
        rat_param("r", &r),
        rat_param("p", &p),
        fn_param("q", &RatFn::from_poly(q)),
        fn_param("u", &RatFn::from_poly(u)),
        fn_param("phi", &section.phi),
    ];
    finish("thm16-3", Surface::general(f.clone(), g.clone()), section, params, vec![])
}

/// `x = (u^2 - e)/a`, `y = uT^2 + pT + q` over the depressed quartic
/// `a t^4 + b t^2 + c t + d`; `p, q` kill the `T^3, T^2` terms and the linear
/// equation left gives `T`.
pub fn thm16_quartic(f: &Poly, g: &Poly) -> Result<ConstructionResult> {
    if f.degree() != Some(4) {
        return Err(Error::hypothesis("f must have degree 4 (a != 0)"));
    }
    check_g(g)?;
    let (fd, delta) = depress(f);
    let gd = g.shift(&delta);
    let (a, b, c, d) = (fd.coeff(4), fd.coeff(2), fd.coeff(1), fd.coeff(0));
    let (e, ff, gg, h, i) = (gd.coeff(4), gd.coeff(3), gd.coeff(2), gd.coeff(1), gd.coeff(0));
    if c.is_zero() && ff.is_zero() && h.is_zero() {
        return Err(Error::hypothesis("c = f = h = 0 after centring f: both polynomials are even"));
    }
    let u = Poly::x();
    let uf = RatFn::var();
    let p = ratfn(k(&ff), u.scale(&int(2)), "u")?;
    let q_num = k(&(-&a * &ff * &ff)) + u.pow(2).scale(&(int(-4) * &b * &e + int(4) * &a * &gg)) + u.pow(4).scale(&(int(4) * &b));
    let q = ratfn(q_num, u.pow(3).scale(&(int(8) * &a)), "u")?;
    let a2 = &a * &a;
    let v0 = RatFn::from_poly(
        (k(&(-&a2 * &d * &e - &e * &e * &e + &a2 * &a * &i)) + u.pow(2).scale(&(&a2 * &d + int(3) * &e * &e))
            - u.pow(4).scale(&(int(3) * &e))
            + u.pow(6))
        .scale(&(&a2 * &a).recip()),
    );
    let lin = (&RatFn::from_poly(k(&(-&c * &e + &a * &h)) + u.pow(2).scale(&c)) - &(&p * &q).scale(&(int(2) * &a)))
        .scale(&a.recip());
    let t = (&(&q * &q) - &v0)
        .checked_div(&lin)
        .ok_or_else(|| Error::hypothesis("coefficient of the remaining linear equation vanishes identically"))?;
    let x = RatFn::from_poly((u.pow(2) - k(&e)).scale(&a.recip()));
    let y = &(&(&uf * &(&t * &t)) + &(&p * &t)) + &q;
    let section = Section::new("u", t.clone(), x, y).shifted(&delta);
    let params = vec![fn_param("p", &p), fn_param("q", &q), fn_param("psi", &t), rat_param("shift", &delta)];
    finish("thm16-4", Surface::general(f.clone(), g.clone()), section, params, vec![])
}
