//! Sections and fiber chains on `y^2 = x^3 + g(t)`, `g` monic of degree 6.

use num_traits::{Signed, Zero};

use super::{depress, finish, fn_param, k, rat_param, ratfn, ConstructionResult};
use crate::ecq::{order_classify, CurveQ, Order, PointQ};
use crate::error::{Error, Result};
use crate::qmath::{int, kth_power_test, Poly, Rat, RatFn};
use crate::surfaces::{nonsplit_check, verify_section, Section, Surface};

fn require_sextic(g: &Poly) -> Result<()> {
    if g.degree() != Some(6) || !g.is_monic() {
        return Err(Error::hypothesis("g must be monic of degree 6"));
    }
    if !nonsplit_check(&Surface::G6(g.clone())) {
        return Err(Error::hypothesis("g = t^6 gives a split surface"));
    }
    Ok(())
}

/// Depressed `g = t^6 + a t^4 + b t^3 + c t^2 + d t + e`; the section lives on
/// `T = -chi1(u) / chi2(u)`, `x = (u^2 - a - 3T^2)/3`, `y = uT^2 + pT + q`.
pub fn thm5_sextic(g: &Poly) -> Result<ConstructionResult> {
    require_sextic(g)?;
    let (h, delta) = depress(g);
    let (a, b, c, d, e) = (h.coeff(4), h.coeff(3), h.coeff(2), h.coeff(1), h.coeff(0));
    if b.is_zero() && d.is_zero() {
        return Err(Error::hypothesis(
            "the depressed sextic is even (b = d = 0), so chi2 vanishes identically",
        ));
    }
    let u = Poly::x();
    let a2 = &a * &a;
    let b2 = &b * &b;
    let e1 = &a2 - int(3) * &c;
    let chi1 = k(&(int(-27) * &b2 * &b2))
        - u.pow(2).scale(&(int(72) * &b2 * &e1))
        - u.pow(4).scale(&(int(48) * (&a2 * &a2 - int(3) * &a * &b2 - int(6) * &a2 * &c + int(9) * &c * &c)))
        + u.pow(6).scale(&(int(8) * (int(16) * &a2 * &a - int(9) * &b2 - int(72) * &a * &c + int(216) * &e)))
        - u.pow(8).scale(&(int(96) * &e1))
        + u.pow(12).scale(&int(16));
    let chi2 = (k(&(int(3) * &b2 * &b)) + u.pow(2).scale(&(int(4) * &b * &e1))
        - u.pow(4).scale(&(int(8) * (&a * &b - int(3) * &d)))
        + u.pow(6).scale(&(int(4) * &b)))
    .scale(&int(72))
        * u.pow(2);
    let t = ratfn(-chi1.clone(), chi2.clone(), "chi2")?;
    let p = ratfn(k(&b), u.scale(&int(2)), "u")?;
    let q_num = k(&(int(-3) * &b2)) + u.pow(2).scale(&(int(-4) * &a2 + int(12) * &c)) + u.pow(4).scale(&(int(8) * &a))
        - u.pow(6).scale(&int(4));
    let q = ratfn(q_num, u.pow(3).scale(&int(24)), "u")?;
    let uf = RatFn::var();
    let t2 = &t * &t;
    let x = (&(&(&uf * &uf) - &RatFn::constant(a.clone())) - &t2.scale(&int(3))).scale(&(int(1) / int(3)));
    let y = &(&(&uf * &t2) + &(&p * &t)) + &q;
    let section = Section::new("u", t.clone(), x, y).shifted(&delta);
    let params = vec![
        fn_param("p", &p),
        fn_param("q", &q),
        fn_param("chi1", &RatFn::from_poly(chi1)),
        fn_param("chi2", &RatFn::from_poly(chi2)),
        rat_param("shift", &delta),
    ];
    finish("thm5", Surface::G6(g.clone()), section, params, vec![])
}

/// Which pair of coefficients of the quartic in `T` the line is chosen to kill.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Thm6System {
    /// `a1 = a4 = 0`: `q = a/2`, `p` linear; the remaining root is `-a2/a3`.
    KillQuartic,
    /// `a1 = a2 = 0`: `p` linear in `q`, `q` from a quadratic; the remaining
    /// root is `-a3/a4`.
    KillQuadratic,
    /// Rational solutions of `KillQuadratic` first (ascending `q`), then
    /// `KillQuartic`; the first candidate passing the validity checks wins.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm6Step {
    pub system: Thm6System,
    pub p: Rat,
    pub q: Rat,
    /// Offset `T` with `t1 = t0 + T`.
    pub t_offset: Rat,
    pub t1: Rat,
    /// Point on the fiber over `t1`, with `y > 0`.
    pub point: PointQ,
    /// Which multiple of the input point the chain fed to this step.
    pub multiple: u32,
}

/// Coefficients `a1..a4` of `(qT + y0 - t0^3)^2 + 2t^3 (qT + y0 - t0^3)
/// - (pT + x0)^3 - a t^4 - c t^2 - e` in `T`, with `t = T + t0`.
struct LineCoeffs {
    a1: RatFn,
    a2: RatFn,
    a3: RatFn,
    a4: RatFn,
}

fn line_coeffs(a: &Rat, c: &Rat, t0: &Rat, x0: &RatFn, y0: &RatFn, p: &RatFn, q: &RatFn) -> LineCoeffs {
    let cst = |v: Rat| RatFn::constant(v);
    let t02 = t0 * t0;
    let t03 = &t02 * t0;
    let a1 = &(&(&cst(int(-4) * a * &t03 - int(2) * c * t0 - int(6) * &t03 * &t02) - &(&p.scale(&int(3)) * &(x0 * x0)))
        + &(q * y0).scale(&int(2)))
        + &y0.scale(&(int(6) * &t02));
    let a2 = &(&(&(&cst(int(-6) * a * &t02 - c - int(6) * &t02 * &t02) - &(&(p * p) * x0).scale(&int(3))) + &(q * q))
        + &q.scale(&(int(6) * &t02)))
        + &y0.scale(&(int(6) * t0));
    let a3 = &(&(&cst(int(-4) * a * t0 - int(2) * &t03) - &(&(p * p) * p)) + &q.scale(&(int(6) * t0))) + &y0.scale(&int(2));
    let a4 = &q.scale(&int(2)) - &cst(a.clone());
    LineCoeffs { a1, a2, a3, a4 }
}

fn even_coeffs(g: &Poly) -> Result<(Rat, Rat)> {
    if g.degree() != Some(6) || !g.is_monic() || !g.is_even() {
        return Err(Error::hypothesis("g must be monic, even, of degree 6"));
    }
    Ok((g.coeff(4), g.coeff(2)))
}

/// `(p, q, T)` candidates in the order they are tried.
fn thm6_candidates(a: &Rat, c: &Rat, t0: &Rat, x0: &Rat, y0: &Rat, system: Thm6System) -> Vec<(Thm6System, Rat, Rat, Rat)> {
    let mut out = Vec::new();
    let x0f = RatFn::constant(x0.clone());
    let y0f = RatFn::constant(y0.clone());
    let root = |p: &Rat, q: &Rat, num: fn(&LineCoeffs) -> (&RatFn, &RatFn)| -> Option<Rat> {
        let lc = line_coeffs(a, c, t0, &x0f, &y0f, &RatFn::constant(p.clone()), &RatFn::constant(q.clone()));
        let (n, d) = num(&lc);
        let (n, d) = (n.as_constant()?, d.as_constant()?);
        (!d.is_zero()).then(|| -n / d)
    };
    let x02 = x0 * x0;
    let x03 = &x02 * x0;
    // a1 = 0 reads 3 x0^2 p = 2 y0 q + kk
    let t02 = t0 * t0;
    let kk = int(-4) * a * &t02 * t0 - int(2) * c * t0 - int(6) * &t02 * &t02 * t0 + int(6) * &t02 * y0;
    let p_of = |q: &Rat| (int(2) * y0 * q + &kk) / (int(3) * &x02);
    if matches!(system, Thm6System::KillQuadratic | Thm6System::Auto) {
        // a2 = 0 after substituting p(q), times 3 x0^3
        let c2 = int(-6) * a * &t02 - c - int(6) * &t02 * &t02 + int(6) * t0 * y0;
        let qa = int(3) * &x03 - int(4) * y0 * y0;
        let qb = int(18) * &t02 * &x03 - int(4) * &kk * y0;
        let qc = int(3) * &x03 * &c2 - &kk * &kk;
        let mut qs = Vec::new();
        if qa.is_zero() {
            if !qb.is_zero() {
                qs.push(-&qc / &qb);
            }
        } else if let Some(sq) = kth_power_test(&(&qb * &qb - int(4) * &qa * &qc), 2) {
            qs.push((-&qb - &sq) / (int(2) * &qa));
            qs.push((-&qb + &sq) / (int(2) * &qa));
        }
        qs.sort();
        qs.dedup();
        for q in qs {
            let p = p_of(&q);
            if let Some(t) = root(&p, &q, |l| (&l.a3, &l.a4)) {
                out.push((Thm6System::KillQuadratic, p, q, t));
            }
        }
    }
    if matches!(system, Thm6System::KillQuartic | Thm6System::Auto) {
        let q = a / int(2);
        let p = p_of(&q);
        if let Some(t) = root(&p, &q, |l| (&l.a2, &l.a3)) {
            out.push((Thm6System::KillQuartic, p, q, t));
        }
    }
    out
}

/// Conditions a new fiber must meet: a nonzero offset, a smooth fiber that is
/// not the `-432` twist, nonzero coordinates, and `g(t1)/g(t)` not a sixth
/// power for every earlier `t`.
fn step_is_valid(g: &Poly, earlier: &[Rat], t1: &Rat, p1: &PointQ) -> bool {
    let g1 = g.eval(t1);
    if g1.is_zero() || g1 == int(-432) {
        return false;
    }
    let Some((x, y)) = p1.coords() else {
        return false;
    };
    if x.is_zero() || y.is_zero() {
        return false;
    }
    earlier.iter().all(|t| {
        let gt = g.eval(t);
        t != t1 && !gt.is_zero() && kth_power_test(&(&g1 / gt), 6).is_none()
    })
}

/// One step from the point `p0` on the fiber over `t0` to a point on a new
/// fiber, along the curve `x = pT + x0`, `y = qT + y0 - t0^3 + t^3`.
pub fn thm6_step(g: &Poly, t0: &Rat, p0: &PointQ, system: Thm6System) -> Result<Thm6Step> {
    thm6_step_after(g, t0, p0, system, std::slice::from_ref(t0), 1)
}

fn thm6_step_after(g: &Poly, t0: &Rat, p0: &PointQ, system: Thm6System, earlier: &[Rat], multiple: u32) -> Result<Thm6Step> {
    let (a, c) = even_coeffs(g)?;
    if a.is_zero() && c.is_zero() {
        return Err(Error::hypothesis("a = c = 0: g = t^6 + e is handled by the cor13 identities"));
    }
    let Some((x0, y0)) = p0.coords() else {
        return Err(Error::hypothesis("P0 must be an affine point"));
    };
    if x0.is_zero() || y0.is_zero() {
        return Err(Error::hypothesis("P0 must have x0 y0 != 0"));
    }
    if !CurveQ::new(int(0), g.eval(t0)).on_curve(p0) {
        return Err(Error::hypothesis("P0 is not on the fiber over t0"));
    }
    let cands = thm6_candidates(&a, &c, t0, x0, y0, system);
    let n_cands = cands.len();
    for (sys, p, q, t) in cands {
        if t.is_zero() {
            continue;
        }
        let t1 = t0 + &t;
        let x1 = &p * &t + x0;
        let y1 = &q * &t + y0 - t0 * t0 * t0 + &t1 * &t1 * &t1;
        let pt = PointQ::new(x1, y1.abs());
        if !CurveQ::new(int(0), g.eval(&t1)).on_curve(&pt) {
            return Err(Error::Verification("thm6: new point is off its fiber".into()));
        }
        if step_is_valid(g, earlier, &t1, &pt) {
            return Ok(Thm6Step { system: sys, p, q, t_offset: t, t1, point: pt, multiple });
        }
    }
    if n_cands == 0 {
        Err(Error::hypothesis("the line system has no rational solution with a nonzero denominator"))
    } else {
        Err(Error::hypothesis("every candidate fails the validity conditions; retry with another point"))
    }
}

/// Retry budget of [`thm6_chain`]: multiples `2P .. 25P` are tried after `P`.
pub const CHAIN_RETRIES: u32 = 24;

/// `n` successive fibers, each with a point of certified infinite order.
pub fn thm6_chain(g: &Poly, t0: &Rat, p0: &PointQ, n: usize) -> Result<Vec<Thm6Step>> {
    even_coeffs(g)?;
    let c0 = CurveQ::new(int(0), g.eval(t0));
    if !c0.on_curve(p0) {
        return Err(Error::hypothesis("P0 is not on the fiber over t0"));
    }
    if order_classify(&c0, p0)? != Order::Infinite {
        return Err(Error::hypothesis("P0 must have infinite order"));
    }
    let mut ts = vec![t0.clone()];
    let mut cur = (t0.clone(), p0.clone());
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let curve = CurveQ::new(int(0), g.eval(&cur.0));
        let mut next = None;
        for m in 1..=CHAIN_RETRIES + 1 {
            let pm = curve.scalar_mul(m as i64, &cur.1)?;
            let step = match thm6_step_after(g, &cur.0, &pm, Thm6System::Auto, &ts, m) {
                Ok(s) => s,
                Err(Error::Hypothesis(msg)) if msg.starts_with("a = c = 0") => return Err(Error::Hypothesis(msg)),
                Err(Error::Verification(msg)) => return Err(Error::Verification(msg)),
                Err(_) => continue,
            };
            let fiber = CurveQ::new(int(0), g.eval(&step.t1));
            if order_classify(&fiber, &step.point)? == Order::Infinite {
                next = Some(step);
                break;
            }
        }
        let step = next.ok_or_else(|| Error::Exhausted(format!("no valid multiple up to {}P", CHAIN_RETRIES + 1)))?;
        ts.push(step.t1.clone());
        cur = (step.t1.clone(), step.point.clone());
        out.push(step);
    }
    Ok(out)
}

/// The line construction run over ℚ(u) from the cusp parametrisation
/// `(u^2, u^3)` of the singular fiber over a root `t0` of `g`.
pub fn rem7_curve(g: &Poly, t0: &Rat) -> Result<ConstructionResult> {
    let (a, c) = even_coeffs(g)?;
    require_sextic(g)?;
    if !g.eval(t0).is_zero() {
        return Err(Error::hypothesis("t0 must be a root of g"));
    }
    let u = RatFn::var();
    let x0 = &u * &u;
    let y0 = &x0 * &u;
    let q = RatFn::constant(&a / int(2));
    let t02 = t0 * t0;
    let kk = int(-4) * &a * &t02 * t0 - int(2) * &c * t0 - int(6) * &t02 * &t02 * t0;
    let p_num = &(&(&q * &y0).scale(&int(2)) + &RatFn::constant(kk)) + &y0.scale(&(int(6) * &t02));
    let p = p_num.checked_div(&(&x0 * &x0).scale(&int(3))).expect("u^4 nonzero");
    let lc = line_coeffs(&a, &c, t0, &x0, &y0, &p, &q);
    debug_assert!(lc.a1.is_zero() && lc.a4.is_zero());
    let t = (-&lc.a2)
        .checked_div(&lc.a3)
        .ok_or_else(|| Error::hypothesis("a3 vanishes identically"))?;
    let t0f = RatFn::constant(t0.clone());
    let phi = &t + &t0f;
    let x = &(&p * &t) + &x0;
    let y = &(&(&(&q * &t) + &y0) - &RatFn::constant(&t02 * t0)) + &phi.pow(3);
    let section = Section::new("u", phi, x, y);
    let params = vec![fn_param("p", &p), fn_param("q", &q), fn_param("T", &t), rat_param("t0", t0)];
    finish("rem7", Surface::G6(g.clone()), section, params, vec![])
}

/// Section of `y^2 = x^3 + h(t)`, `deg h = 5`, `h(0) = 1`, transported from
/// `y^2 = x^3 + g(t)` with `g(t) = t^6 h(1/t)` by `(x, y, t) -> (x/t^2, y/t^3, 1/t)`.
pub fn cor8_deg5(h: &Poly) -> Result<ConstructionResult> {
    if h.degree() != Some(5) {
        return Err(Error::hypothesis("h must have degree 5"));
    }
    if h.coeff(0) != int(1) {
        return Err(Error::hypothesis("h(0) must be 1"));
    }
    let g = h.reversed(6);
    let mut notes = Vec::new();
    let base = match thm5_sextic(&g) {
        Ok(r) => {
            notes.push("route: thm5 on the reversed sextic".to_string());
            r
        }
        Err(Error::Hypothesis(why)) => {
            // The depressed reversal is even; 0 is a root of g.
            let (ge, delta) = depress(&g);
            let r = rem7_curve(&ge, &-&delta).map_err(|e| match e {
                Error::Hypothesis(m) => Error::hypothesis(format!("thm5 inapplicable ({why}); rem7 inapplicable ({m})")),
                other => other,
            })?;
            notes.push("route: rem7 on the depressed reversed sextic".to_string());
            let sec = r.section.shifted(&delta);
            if !verify_section(&Surface::G6(g.clone()), &sec) {
                return Err(Error::Verification("cor8: shifted rem7 section".into()));
            }
            ConstructionResult { section: sec, surface: Surface::G6(g.clone()), ..r }
        }
        Err(e) => return Err(e),
    };
    let chi = &base.section.phi;
    let tau = chi.inv().ok_or_else(|| Error::hypothesis("base change is identically zero"))?;
    let x = base.section.x.checked_div(&chi.pow(2)).expect("chi nonzero");
    let y = base.section.y.checked_div(&chi.pow(3)).expect("chi nonzero");
    let section = Section::new(&base.section.param, tau, x, y);
    let surface = Surface::general(Poly::zero(), h.clone());
    let mut params = base.params.clone();
    params.push(fn_param("chi", chi));
    finish("cor8", surface, section, params, notes)
}
