//! Elliptic surfaces `y^2 = x^3 + A(t) x + B(t)` viewed as curves over ℚ(t).

use rayon::prelude::*;

use crate::ecq::{classify_with_evidence, CurveQ, Order, OrderEvidence, PointQ};
use crate::error::{Error, Result};
use crate::qmath::{int, kth_power_test, poly_compose_ratfn, sample_points, squarefree_part, Poly, Rat, RatFn};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Surface {
    /// `y^2 = x^3 + f(t) x`, `f` nonconstant of degree at most 4.
    Fx(Poly),
    /// `y^2 = x^3 + g(t)`, `g` monic of degree 6.
    G6(Poly),
    General { a: Poly, b: Poly },
}

impl Surface {
    pub fn fx(f: Poly) -> Result<Surface> {
        if f.is_constant() {
            return Err(Error::hypothesis("f must be nonconstant (a constant f gives a split surface)"));
        }
        if f.deg() > 4 {
            return Err(Error::hypothesis("f must have degree at most 4"));
        }
        Ok(Surface::Fx(f))
    }

    pub fn g6(g: Poly) -> Result<Surface> {
        if g.degree() != Some(6) || !g.is_monic() {
            return Err(Error::hypothesis("g must be monic of degree 6"));
        }
        Ok(Surface::G6(g))
    }

    pub fn general(a: Poly, b: Poly) -> Surface {
        Surface::General { a, b }
    }

    pub fn a(&self) -> Poly {
        match self {
            Surface::Fx(f) => f.clone(),
            Surface::G6(_) => Poly::zero(),
            Surface::General { a, .. } => a.clone(),
        }
    }

    pub fn b(&self) -> Poly {
        match self {
            Surface::Fx(_) => Poly::zero(),
            Surface::G6(g) => g.clone(),
            Surface::General { b, .. } => b.clone(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Surface::Fx(_) => "fx",
            Surface::G6(_) => "g6",
            Surface::General { .. } => "general",
        }
    }
}

/// A point of the surface after the base change `t = phi(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub param: String,
    pub phi: RatFn,
    pub x: RatFn,
    pub y: RatFn,
}

impl Section {
    pub fn new(param: &str, phi: RatFn, x: RatFn, y: RatFn) -> Section {
        Section { param: param.to_string(), phi, x, y }
    }

    /// Value at `s0`, or `None` at a pole of any coordinate.
    pub fn at(&self, s0: &Rat) -> Option<(Rat, Rat, Rat)> {
        Some((self.phi.eval(s0)?, self.x.eval(s0)?, self.y.eval(s0)?))
    }

    /// Same section with the base change moved by `t -> t + delta`; used to
    /// undo the shift that puts a polynomial in depressed form.
    pub fn shifted(&self, delta: &Rat) -> Section {
        Section {
            param: self.param.clone(),
            phi: &self.phi + &RatFn::constant(delta.clone()),
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }
}

/// `-16 (4 A^3 + 27 B^2)`
pub fn discriminant(s: &Surface) -> Poly {
    let a = s.a();
    let b = s.b();
    (a.pow(3).scale(&int(4)) + b.pow(2).scale(&int(27))).scale(&int(-16))
}

/// `-1728 (4A)^3 / Delta`
pub fn j_invariant(s: &Surface) -> Result<RatFn> {
    let d = discriminant(s);
    let num = s.a().pow(3).scale(&int(-1728 * 64));
    RatFn::new(num, d).ok_or_else(|| Error::hypothesis("discriminant is identically zero"))
}

pub fn is_isotrivial(s: &Surface) -> Result<bool> {
    Ok(j_invariant(s)?.is_constant())
}

/// `FxFamily`: `f` has at least two distinct roots. `G6Family`: `g != t^6`.
/// `General`: not a constant curve twisted by a unit of ℚ(t), decided by the
/// quadratic, quartic or sextic twist test matching the constant `j`.
pub fn nonsplit_check(s: &Surface) -> bool {
    match s {
        Surface::Fx(f) => !f.is_constant() && squarefree_part(f).map(|p| p.deg() >= 2).unwrap_or(false),
        Surface::G6(g) => *g != Poly::monomial(int(1), 6),
        Surface::General { a, b } => {
            let Ok(j) = j_invariant(s) else {
                return false;
            };
            if !j.is_constant() {
                return true;
            }
            if b.is_zero() {
                return a.monic().kth_root(4).is_none();
            }
            if a.is_zero() {
                return b.monic().kth_root(6).is_none();
            }
            let ratio = RatFn::from_poly(b.clone()).checked_div(&RatFn::from_poly(a.clone())).expect("a nonzero");
            !is_kth_power(&ratio.scale(&ratio.num().leading().recip()), 2)
        }
    }
}

/// True when `r` is a `k`-th power in ℚ(s).
pub fn is_kth_power(r: &RatFn, k: u32) -> bool {
    r.num().kth_root(k).is_some() && r.den().kth_root(k).is_some()
}

pub fn fiber(s: &Surface, t0: &Rat) -> CurveQ {
    CurveQ::new(s.a().eval(t0), s.b().eval(t0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionTag {
    Z4,
    Z2xZ2,
    Z2,
    Z6,
    Z3Sqrt,
    Z3_432,
    Z2Cbrt,
    Trivial,
    Singular,
}

impl TorsionTag {
    pub fn order(self) -> Option<u32> {
        match self {
            TorsionTag::Z4 | TorsionTag::Z2xZ2 => Some(4),
            TorsionTag::Z2 | TorsionTag::Z2Cbrt => Some(2),
            TorsionTag::Z6 => Some(6),
            TorsionTag::Z3Sqrt | TorsionTag::Z3_432 => Some(3),
            TorsionTag::Trivial => Some(1),
            TorsionTag::Singular => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTorsion {
    pub tag: TorsionTag,
    pub witnesses: Vec<PointQ>,
}

impl FiberTorsion {
    fn new(tag: TorsionTag, witnesses: Vec<PointQ>) -> FiberTorsion {
        FiberTorsion { tag, witnesses }
    }
}

/// Torsion of `y^2 = x^3 + k x`. Isomorphic fibers (`k` up to fourth powers)
/// get the same answer: Z4 exactly when `k = 4 m^4`.
pub fn fiber_torsion_fx(k: &Rat) -> FiberTorsion {
    use num_traits::Zero;
    if k.is_zero() {
        return FiberTorsion::new(TorsionTag::Singular, vec![]);
    }
    let origin = PointQ::new(Rat::zero(), Rat::zero());
    if let Some(m) = kth_power_test(&(k / int(4)), 4) {
        let x = int(2) * &m * &m;
        let y = int(4) * &m * &m * &m;
        return FiberTorsion::new(
            TorsionTag::Z4,
            vec![PointQ::new(x.clone(), y.clone()), PointQ::new(x, -y), origin],
        );
    }
    if let Some(r) = kth_power_test(&-k, 2) {
        return FiberTorsion::new(
            TorsionTag::Z2xZ2,
            vec![origin, PointQ::new(r.clone(), Rat::zero()), PointQ::new(-r, Rat::zero())],
        );
    }
    FiberTorsion::new(TorsionTag::Z2, vec![origin])
}

/// Torsion of `y^2 = x^3 + k`, with `k` read up to sixth powers: a sixth
/// power gives Z6 and `-432` times a sixth power gives the second Z3.
pub fn fiber_torsion_g6(k: &Rat) -> FiberTorsion {
    use num_traits::Zero;
    if k.is_zero() {
        return FiberTorsion::new(TorsionTag::Singular, vec![]);
    }
    if let Some(m) = kth_power_test(k, 6) {
        let m2 = &m * &m;
        let m3 = &m2 * &m;
        return FiberTorsion::new(
            TorsionTag::Z6,
            vec![
                PointQ::new(int(2) * &m2, int(3) * &m3),
                PointQ::new(int(2) * &m2, int(-3) * &m3),
                PointQ::new(Rat::zero(), m3.clone()),
                PointQ::new(Rat::zero(), -m3),
                PointQ::new(-m2, Rat::zero()),
            ],
        );
    }
    if let Some(m) = kth_power_test(&(k / int(-432)), 6) {
        let x = int(12) * &m * &m;
        let y = int(36) * &m * &m * &m;
        return FiberTorsion::new(TorsionTag::Z3_432, vec![PointQ::new(x.clone(), y.clone()), PointQ::new(x, -y)]);
    }
    if let Some(r) = kth_power_test(k, 2) {
        return FiberTorsion::new(
            TorsionTag::Z3Sqrt,
            vec![PointQ::new(Rat::zero(), r.clone()), PointQ::new(Rat::zero(), -r)],
        );
    }
    if let Some(c) = kth_power_test(k, 3) {
        return FiberTorsion::new(TorsionTag::Z2Cbrt, vec![PointQ::new(-c, Rat::zero())]);
    }
    FiberTorsion::new(TorsionTag::Trivial, vec![])
}

/// The pulled-back coefficients `(A(phi), B(phi))`.
pub fn pulled_back(s: &Surface, phi: &RatFn) -> (RatFn, RatFn) {
    (poly_compose_ratfn(&s.a(), phi), poly_compose_ratfn(&s.b(), phi))
}

/// `Y^2 = X^3 + A(phi) X + B(phi)` as an identity in ℚ(s).
///
/// Checked as a polynomial identity after clearing denominators, so no gcds
/// are taken.
pub fn verify_section(s: &Surface, sec: &Section) -> bool {
    let (a, b) = pulled_back(s, &sec.phi);
    let (xn, xd) = (sec.x.num(), sec.x.den());
    let (yn, yd) = (sec.y.num(), sec.y.den());
    let (an, ad) = (a.num(), a.den());
    let (bn, bd) = (b.num(), b.den());
    let xd2 = xd * xd;
    let xd3 = &xd2 * xd;
    let adbd = ad * bd;
    let lhs = &(&(yn * yn) * &xd3) * &adbd;
    let inner = &(&(&(xn * xn) * xn) * &adbd) + &(&(&(&(an * xn) * &xd2) * bd) + &(&(bn * ad) * &xd3));
    lhs == &(yd * yd) * &inner
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertMethod {
    YNonzeroFx,
    XYNonzeroG6,
    SpecializationMazur,
    IntegralityZt,
}

impl CertMethod {
    pub fn name(self) -> &'static str {
        match self {
            CertMethod::YNonzeroFx => "YNonzeroFx",
            CertMethod::XYNonzeroG6 => "XYNonzeroG6",
            CertMethod::SpecializationMazur => "SpecializationMazur",
            CertMethod::IntegralityZt => "IntegralityZt",
        }
    }
}

/// Evidence that a section has infinite order. `replay` re-runs the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub method: CertMethod,
    /// Specialization value of the section parameter.
    pub s0: Option<Rat>,
    pub fiber: Option<CurveQ>,
    pub point: Option<PointQ>,
    pub evidence: Option<OrderEvidence>,
    /// For `IntegralityZt`: the multiple with a non-polynomial coordinate.
    pub multiple: Option<u32>,
}

impl Certificate {
    fn shortcut(method: CertMethod) -> Certificate {
        Certificate { method, s0: None, fiber: None, point: None, evidence: None, multiple: None }
    }

    pub fn replay(&self, s: &Surface, sec: &Section) -> bool {
        if !verify_section(s, sec) {
            return false;
        }
        match self.method {
            CertMethod::YNonzeroFx => matches!(s, Surface::Fx(_)) && fx_shortcut_holds(s, sec),
            CertMethod::XYNonzeroG6 => matches!(s, Surface::G6(_)) && g6_shortcut_holds(s, sec),
            CertMethod::SpecializationMazur => {
                let Some(s0) = &self.s0 else {
                    return false;
                };
                match specialize(s, sec, s0) {
                    Some((c, p)) => {
                        Some(&c) == self.fiber.as_ref()
                            && Some(&p) == self.point.as_ref()
                            && classify_with_evidence(&c, &p).ok().map(|(o, e)| (o, Some(e)))
                                == Some((Order::Infinite, self.evidence.clone()))
                    }
                    None => false,
                }
            }
            CertMethod::IntegralityZt => {
                let Some(k) = self.multiple else {
                    return false;
                };
                integrality_witness(s, sec, k) == Some(k)
            }
        }
    }
}

/// Order-2 sections of `y^2 = x^3 + K x` have `Y = 0`; order-4 ones need
/// `K = 4 w^4` in ℚ(s). Nothing else is torsion.
fn fx_shortcut_holds(s: &Surface, sec: &Section) -> bool {
    if sec.y.is_zero() {
        return false;
    }
    let (k, _) = pulled_back(s, &sec.phi);
    !is_kth_power(&k.scale(&Rat::new(1.into(), 4.into())), 4)
}

/// Torsion sections of `y^2 = x^3 + K` with `XY != 0` need `K = w^6` or
/// `K = -432 w^6` in ℚ(s).
fn g6_shortcut_holds(s: &Surface, sec: &Section) -> bool {
    if sec.x.is_zero() || sec.y.is_zero() {
        return false;
    }
    let (_, k) = pulled_back(s, &sec.phi);
    !is_kth_power(&k, 6) && !is_kth_power(&k.scale(&Rat::new((-1).into(), 432.into())), 6)
}

/// Fiber over `t = phi(s0)` and the section's value there, when the fiber
/// is smooth and nothing has a pole.
pub fn specialize(s: &Surface, sec: &Section, s0: &Rat) -> Option<(CurveQ, PointQ)> {
    let (t0, x0, y0) = sec.at(s0)?;
    let c = fiber(s, &t0);
    if c.is_singular() {
        return None;
    }
    Some((c, PointQ::new(x0, y0)))
}

/// Default number of specialization values tried.
pub const SPECIALIZATION_BUDGET: usize = 40;

/// Largest multiple examined by the integrality test.
pub const INTEGRALITY_MULTIPLES: u32 = 2;

/// Certifies that `sec` has infinite order. Shortcuts for the two isotrivial
/// families are tried first, then specialization at `1, -1, 2, -2, 1/2, ...`.
pub fn certify_non_torsion(s: &Surface, sec: &Section) -> Result<Certificate> {
    certify_non_torsion_with_budget(s, sec, SPECIALIZATION_BUDGET)
}

pub fn certify_non_torsion_with_budget(s: &Surface, sec: &Section, budget: usize) -> Result<Certificate> {
    if !verify_section(s, sec) {
        return Err(Error::hypothesis("section does not satisfy the surface equation"));
    }
    match s {
        Surface::Fx(_) if fx_shortcut_holds(s, sec) => return Ok(Certificate::shortcut(CertMethod::YNonzeroFx)),
        Surface::G6(_) if g6_shortcut_holds(s, sec) => return Ok(Certificate::shortcut(CertMethod::XYNonzeroG6)),
        _ => {}
    }
    let found = sample_points(budget).into_par_iter().find_map_first(|s0| {
        let (c, p) = specialize(s, sec, &s0)?;
        match classify_with_evidence(&c, &p) {
            Ok((Order::Infinite, ev)) => Some(Certificate {
                method: CertMethod::SpecializationMazur,
                s0: Some(s0),
                fiber: Some(c),
                point: Some(p),
                evidence: Some(ev),
                multiple: None,
            }),
            _ => None,
        }
    });
    found.ok_or_else(|| Error::Exhausted(format!("no infinite-order specialization among {budget} values")))
}

/// Certificate from the integrality test, when some multiple up to
/// [`INTEGRALITY_MULTIPLES`] has a non-polynomial coordinate.
pub fn certify_by_integrality(s: &Surface, sec: &Section) -> Result<Certificate> {
    if !verify_section(s, sec) {
        return Err(Error::hypothesis("section does not satisfy the surface equation"));
    }
    let k = (1..=INTEGRALITY_MULTIPLES)
        .find(|&k| integrality_witness(s, sec, k) == Some(k))
        .ok_or_else(|| Error::Exhausted("all examined multiples have polynomial coordinates".into()))?;
    Ok(Certificate { multiple: Some(k), ..Certificate::shortcut(CertMethod::IntegralityZt) })
}

type FfPoint = Option<(RatFn, RatFn)>;

fn ff_add(a: &RatFn, p: &FfPoint, q: &FfPoint) -> FfPoint {
    let (x1, y1) = match p {
        None => return q.clone(),
        Some(v) => v,
    };
    let (x2, y2) = match q {
        None => return p.clone(),
        Some(v) => v,
    };
    let slope = if x1 == x2 {
        if (y1 + y2).is_zero() {
            return None;
        }
        let three = RatFn::constant(int(3));
        (&(&three * &(x1 * x1)) + a).checked_div(&y1.scale(&int(2)))?
    } else {
        (y2 - y1).checked_div(&(x2 - x1))?
    };
    let x3 = &(&(&slope * &slope) - x1) - x2;
    let y3 = &(&slope * &(x1 - &x3)) - y1;
    Some((x3, y3))
}

/// Moves the pulled-back surface to a model with coefficients in ℚ[s] by the
/// scaling `w = den(phi)^k`, computes `k * sec` there, and returns `k` when
/// that multiple is affine with a non-polynomial coordinate. Torsion
/// sections on such a model have polynomial coordinates.
fn integrality_witness(s: &Surface, sec: &Section, k: u32) -> Option<u32> {
    if discriminant(s).is_zero() || k == 0 {
        return None;
    }
    let (a, b) = pulled_back(s, &sec.phi);
    let da = s.a().degree().unwrap_or(0);
    let db = s.b().degree().unwrap_or(0);
    let e = da.div_ceil(4).max(db.div_ceil(6)) as u32;
    let w = RatFn::from_poly(sec.phi.den().pow(e));
    let w2 = &w * &w;
    let w4 = &w2 * &w2;
    let a2 = &a * &w4;
    debug_assert!(a2.is_polynomial() && (&b * &(&w4 * &w2)).is_polynomial());
    let base: FfPoint = Some((&sec.x * &w2, &sec.y * &(&w2 * &w)));
    let mut acc: FfPoint = None;
    for _ in 0..k {
        acc = ff_add(&a2, &acc, &base);
    }
    match acc {
        Some((x, y)) if !x.is_polynomial() || !y.is_polynomial() => Some(k),
        _ => None,
    }
}
