//! Elliptic curves `y^2 = x^3 + A x + B` over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qmath::{int, Rat};

/// Short Weierstrass curve. Singular curves can be built (fibres over roots
/// of the discriminant need to be represented) but reject group operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurveQ {
    pub a: Rat,
    pub b: Rat,
}

impl fmt::Debug for CurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", self.a, self.b)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PointQ {
    Infinity,
    Affine(Rat, Rat),
}

impl PointQ {
    pub fn new(x: Rat, y: Rat) -> PointQ {
        PointQ::Affine(x, y)
    }

    pub fn ints(x: i64, y: i64) -> PointQ {
        PointQ::Affine(int(x), int(y))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PointQ::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rat, &Rat)> {
        match self {
            PointQ::Infinity => None,
            PointQ::Affine(x, y) => Some((x, y)),
        }
    }

    pub fn neg(&self) -> PointQ {
        match self {
            PointQ::Infinity => PointQ::Infinity,
            PointQ::Affine(x, y) => PointQ::Affine(x.clone(), -y),
        }
    }
}

impl fmt::Display for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointQ::Infinity => write!(f, "O"),
            PointQ::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

/// Result of [`order_classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

/// Why [`classify_with_evidence`] decided what it did.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum OrderEvidence {
    /// `order * P = O` and no smaller multiple vanishes.
    Killed { order: u32 },
    /// `multiple * P` has a non-integral coordinate on the integral model, so
    /// P is not torsion (Nagell-Lutz).
    NonIntegralMultiple { multiple: u32 },
    /// No multiple up to 12 vanishes; rational torsion has order at most 12.
    MazurBound,
}

/// Largest torsion order of an elliptic curve over ℚ.
pub const MAZUR_BOUND: u32 = 12;

impl CurveQ {
    pub fn new(a: Rat, b: Rat) -> CurveQ {
        CurveQ { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> CurveQ {
        CurveQ::new(int(a), int(b))
    }

    /// `4A^3 + 27B^2`
    pub fn disc_factor(&self) -> Rat {
        int(4) * &self.a * &self.a * &self.a + int(27) * &self.b * &self.b
    }

    /// `-16 (4A^3 + 27B^2)`
    pub fn discriminant(&self) -> Rat {
        int(-16) * self.disc_factor()
    }

    pub fn is_singular(&self) -> bool {
        self.disc_factor().is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.a.denom().is_one() && self.b.denom().is_one()
    }

    /// `x^3 + A x + B`
    pub fn rhs(&self, x: &Rat) -> Rat {
        x * x * x + &self.a * x + &self.b
    }

    pub fn on_curve(&self, p: &PointQ) -> bool {
        match p {
            PointQ::Infinity => true,
            PointQ::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    fn require_smooth(&self) -> Result<()> {
        if self.is_singular() {
            Err(Error::SingularCurve)
        } else {
            Ok(())
        }
    }

    /// Chord-and-tangent addition with `O` as identity.
    pub fn add(&self, p: &PointQ, q: &PointQ) -> Result<PointQ> {
        self.require_smooth()?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &PointQ, q: &PointQ) -> PointQ {
        let (x1, y1) = match p {
            PointQ::Infinity => return q.clone(),
            PointQ::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            PointQ::Infinity => return p.clone(),
            PointQ::Affine(x, y) => (x, y),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return PointQ::Infinity;
            }
            (int(3) * x1 * x1 + &self.a) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = &slope * (x1 - &x3) - y1;
        PointQ::Affine(x3, y3)
    }

    pub fn double(&self, p: &PointQ) -> Result<PointQ> {
        self.add(p, p)
    }

    /// `n * P` by double-and-add; negative `n` negates first.
    pub fn scalar_mul(&self, n: i64, p: &PointQ) -> Result<PointQ> {
        self.require_smooth()?;
        let mut base = if n < 0 { p.neg() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = PointQ::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Returns `(C', u)` with `C': y^2 = x^3 + u^4 A x + u^6 B` integral and
    /// `u` the least positive integer doing so. Points map by
    /// `(x, y) -> (u^2 x, u^3 y)`.
    pub fn integral_model(&self) -> (CurveQ, BigInt) {
        let u = minimal_scale(self.a.denom(), self.b.denom());
        let u2 = Rat::from_integer(&u * &u);
        let u4 = &u2 * &u2;
        let u6 = &u4 * &u2;
        (CurveQ::new(&self.a * u4, &self.b * u6), u)
    }
}

/// Image of `p` under `(x, y) -> (u^2 x, u^3 y)`.
pub fn scale_point(p: &PointQ, u: &BigInt) -> PointQ {
    match p {
        PointQ::Infinity => PointQ::Infinity,
        PointQ::Affine(x, y) => {
            let u2 = Rat::from_integer(u * u);
            let u3 = &u2 * Rat::from_integer(u.clone());
            PointQ::Affine(x * u2, y * u3)
        }
    }
}

/// Inverse of [`scale_point`].
pub fn unscale_point(p: &PointQ, u: &BigInt) -> PointQ {
    match p {
        PointQ::Infinity => PointQ::Infinity,
        PointQ::Affine(x, y) => {
            let u2 = Rat::from_integer(u * u);
            let u3 = &u2 * Rat::from_integer(u.clone());
            PointQ::Affine(x / u2, y / u3)
        }
    }
}

const TRIAL_LIMIT: u64 = 1 << 16;

/// Least `u > 0` with `da | u^4` and `db | u^6`.
///
/// Small primes come from trial division. What is left is split into a
/// pairwise coprime basis and each basis element is reduced to its
/// perfect-power root; every element is then treated as a prime. The result is
/// minimal whenever those leftover elements are prime powers, which covers all
/// denominators produced by desk-scale inputs, and is always a valid scale.
fn minimal_scale(da: &BigInt, db: &BigInt) -> BigInt {
    let mut ra = da.clone();
    let mut rb = db.clone();
    let mut u = BigInt::one();
    let apply = |p: &BigInt, ea: u32, eb: u32, u: &mut BigInt| {
        let e = ea.div_ceil(4).max(eb.div_ceil(6));
        *u *= num_traits::pow(p.clone(), e as usize);
    };
    let mut p = 2u64;
    while p < TRIAL_LIMIT && (!ra.is_one() || !rb.is_one()) {
        let bp = BigInt::from(p);
        let ea = strip(&mut ra, &bp);
        let eb = strip(&mut rb, &bp);
        if ea > 0 || eb > 0 {
            apply(&bp, ea, eb, &mut u);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut rest: Vec<BigInt> = [ra.clone(), rb.clone()]
        .into_iter()
        .filter(|x| !x.is_one())
        .collect();
    if rest.is_empty() {
        return u;
    }
    rest = coprime_basis(rest);
    let mut roots: Vec<BigInt> = rest.iter().map(perfect_power_root).collect();
    roots.sort();
    roots.dedup();
    for r in roots {
        let ea = strip(&mut ra, &r);
        let eb = strip(&mut rb, &r);
        apply(&r, ea, eb, &mut u);
    }
    u
}

fn strip(n: &mut BigInt, p: &BigInt) -> u32 {
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        *n = q;
        e += 1;
    }
}

fn coprime_basis(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    'outer: loop {
        xs.retain(|x| !x.is_one());
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let g = xs[i].gcd(&xs[j]);
                if !g.is_one() {
                    let a = &xs[i] / &g;
                    let b = &xs[j] / &g;
                    if a.is_one() && b.is_one() {
                        xs.remove(j);
                        continue 'outer;
                    }
                    xs[i] = a;
                    xs[j] = b;
                    xs.push(g);
                    continue 'outer;
                }
            }
        }
        return xs;
    }
}

fn perfect_power_root(n: &BigInt) -> BigInt {
    let bits = n.bits() as u32;
    for k in (2..=bits.max(2)).rev() {
        let r = n.nth_root(k);
        if r > BigInt::one() && num_traits::pow(r.clone(), k as usize) == *n {
            return perfect_power_root(&r);
        }
    }
    n.clone()
}

pub fn on_curve(c: &CurveQ, p: &PointQ) -> bool {
    c.on_curve(p)
}

pub fn integral_model(c: &CurveQ) -> (CurveQ, BigInt) {
    c.integral_model()
}

fn is_integral_point(p: &PointQ) -> bool {
    match p {
        PointQ::Infinity => true,
        PointQ::Affine(x, y) => x.denom().is_one() && y.denom().is_one(),
    }
}

/// Decides the order of `p`: Nagell-Lutz on the integral model rejects any
/// multiple with a non-integral coordinate, otherwise multiples up to 12 are
/// computed and Mazur's bound closes the case.
pub fn classify_with_evidence(c: &CurveQ, p: &PointQ) -> Result<(Order, OrderEvidence)> {
    c.require_smooth()?;
    if p.is_infinity() {
        return Err(Error::hypothesis(
            "order of the point at infinity is trivially 1",
        ));
    }
    if !c.on_curve(p) {
        return Err(Error::hypothesis("point is not on the curve"));
    }
    let (model, u) = c.integral_model();
    let q = scale_point(p, &u);
    let mut m = q.clone();
    for k in 1..=MAZUR_BOUND {
        if k > 1 {
            m = model.add_unchecked(&m, &q);
        }
        if m.is_infinity() {
            return Ok((Order::Finite(k), OrderEvidence::Killed { order: k }));
        }
        if !is_integral_point(&m) {
            return Ok((Order::Infinite, OrderEvidence::NonIntegralMultiple { multiple: k }));
        }
    }
    Ok((Order::Infinite, OrderEvidence::MazurBound))
}

pub fn order_classify(c: &CurveQ, p: &PointQ) -> Result<Order> {
    classify_with_evidence(c, p).map(|(o, _)| o)
}

/// Points with `x = m / d^2`, `gcd(m, d) = 1`, `1 <= d <= ceil(sqrt(height))`
/// and `|m| <= height * d^2`, for which `x^3 + A x + B` is a rational square.
/// Both signs of `y` are returned. Sorted by `(d, m, y)`.
pub fn naive_point_search(c: &CurveQ, height: u64) -> Result<Vec<PointQ>> {
    if !c.is_integral() {
        return Err(Error::hypothesis(
            "naive point search needs integer coefficients (apply integral_model first)",
        ));
    }
    let a = c.a.to_integer();
    let b = c.b.to_integer();
    let dmax = ceil_sqrt(height);
    let found: Vec<Vec<PointQ>> = (1..=dmax)
        .into_par_iter()
        .map(|d| {
            let d = BigInt::from(d);
            let d2 = &d * &d;
            let d4 = &d2 * &d2;
            let d6 = &d4 * &d2;
            let ad4 = &a * &d4;
            let bd6 = &b * &d6;
            let mmax = BigInt::from(height) * &d2;
            let mmax = mmax.to_i64().expect("search bound fits in i64");
            let dr = Rat::from_integer(d2.clone());
            let d3 = Rat::from_integer(&d2 * &d);
            let mut pts = Vec::new();
            for m in -mmax..=mmax {
                let mb = BigInt::from(m);
                if !mb.gcd(&d).is_one() {
                    continue;
                }
                let val = &mb * &mb * &mb + &ad4 * &mb + &bd6;
                if val.is_negative() {
                    continue;
                }
                let w = val.sqrt();
                if &w * &w != val {
                    continue;
                }
                let x = Rat::from_integer(mb.clone()) / &dr;
                let y = Rat::from_integer(w.clone()) / &d3;
                if w.is_zero() {
                    pts.push(PointQ::Affine(x, y));
                } else {
                    pts.push(PointQ::Affine(x.clone(), -&y));
                    pts.push(PointQ::Affine(x, y));
                }
            }
            pts
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::rat;

    #[test]
    fn membership() {
        let c = CurveQ::from_ints(0, 3);
        assert!(c.on_curve(&PointQ::ints(1, 2)));
        let e = CurveQ::from_ints(-72, 2368);
        assert!(e.on_curve(&PointQ::ints(8, 48)));
        assert!(e.on_curve(&PointQ::Infinity));
        assert!(!e.on_curve(&PointQ::ints(8, 47)));
    }

    #[test]
    fn group_law_examples() {
        let e = CurveQ::from_ints(-72, 2368);
        let p = PointQ::ints(8, 48);
        assert_eq!(e.add(&p, &PointQ::Infinity).unwrap(), p);
        assert_eq!(e.add(&p, &p.neg()).unwrap(), PointQ::Infinity);
        // slope (3*64 - 72)/96 = 5/4, x = 25/16 - 16
        let two = e.double(&p).unwrap();
        assert_eq!(two.coords().unwrap().0, &rat(-231, 16));
        assert!(e.on_curve(&two));
    }

    #[test]
    fn multiples() {
        let c = CurveQ::from_ints(4, 0);
        let p = PointQ::ints(2, 4);
        assert_eq!(c.scalar_mul(0, &p).unwrap(), PointQ::Infinity);
        assert_eq!(c.scalar_mul(2, &p).unwrap(), PointQ::ints(0, 0));
        let c = CurveQ::from_ints(0, -432);
        assert_eq!(c.scalar_mul(3, &PointQ::ints(12, 36)).unwrap(), PointQ::Infinity);
        assert_eq!(
            c.scalar_mul(-1, &PointQ::ints(12, 36)).unwrap(),
            PointQ::ints(12, -36)
        );
    }

    #[test]
    fn singular_rejects_group_law() {
        let c = CurveQ::from_ints(0, 0);
        assert!(c.is_singular());
        assert_eq!(c.add(&PointQ::ints(1, 1), &PointQ::ints(1, 1)), Err(Error::SingularCurve));
        assert!(order_classify(&c, &PointQ::ints(1, 1)).is_err());
    }

    #[test]
    fn integral_models() {
        let (m, u) = CurveQ::from_ints(-72, 2368).integral_model();
        assert_eq!((m, u), (CurveQ::from_ints(-72, 2368), BigInt::one()));
        let (m, u) = CurveQ::new(rat(1, 16), int(0)).integral_model();
        assert_eq!((m, u), (CurveQ::from_ints(1, 0), BigInt::from(2)));
        let (m, u) = CurveQ::new(int(0), rat(1, 729)).integral_model();
        assert_eq!((m, u), (CurveQ::from_ints(0, 1), BigInt::from(3)));
    }

    #[test]
    fn integral_model_with_large_prime_power() {
        // 1000003 is prime and above the trial-division limit.
        let p = BigInt::from(1_000_003u64);
        let b = Rat::new(BigInt::one(), num_traits::pow(p.clone(), 12));
        let (m, u) = CurveQ::new(int(0), b).integral_model();
        assert_eq!(u, &p * &p);
        assert!(m.is_integral());
    }

    #[test]
    fn orders() {
        let e = CurveQ::from_ints(-72, 2368);
        assert_eq!(order_classify(&e, &PointQ::ints(8, 48)).unwrap(), Order::Infinite);
        let c = CurveQ::from_ints(0, -432);
        assert_eq!(order_classify(&c, &PointQ::ints(12, 36)).unwrap(), Order::Finite(3));
        let c = CurveQ::from_ints(4, 0);
        assert_eq!(order_classify(&c, &PointQ::ints(2, 4)).unwrap(), Order::Finite(4));
        assert!(order_classify(&c, &PointQ::Infinity).is_err());
    }

    /// Brute force over every candidate `m/d^2` in the box with an
    /// independent square test on rationals.
    fn brute_force(c: &CurveQ, height: u64) -> Vec<PointQ> {
        let mut out = Vec::new();
        let dmax = (1..).find(|d| d * d >= height).unwrap();
        for d in 1..=dmax as i64 {
            let lim = height as i64 * d * d;
            for m in -lim..=lim {
                let x = rat(m, d * d);
                if *x.denom() != BigInt::from(d * d) {
                    continue;
                }
                if let Some(y) = crate::qmath::kth_power_test(&c.rhs(&x), 2) {
                    out.push(PointQ::Affine(x.clone(), -&y));
                    if !y.is_zero() {
                        out.push(PointQ::Affine(x, y));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn point_search_matches_brute_force() {
        for (a, b, h) in [(0, 3, 10), (4, 0, 10), (0, -5, 3), (-2, 1, 9), (0, -432, 20)] {
            let c = CurveQ::from_ints(a, b);
            let mut got = naive_point_search(&c, h).unwrap();
            let mut want = brute_force(&c, h);
            let key = |p: &PointQ| format!("{p}");
            got.sort_by_key(key);
            want.sort_by_key(key);
            assert_eq!(got, want, "curve {a} {b}");
        }
        let pts = naive_point_search(&CurveQ::from_ints(0, 3), 10).unwrap();
        assert!(pts.contains(&PointQ::ints(1, 2)));
        let pts = naive_point_search(&CurveQ::from_ints(4, 0), 10).unwrap();
        assert!(pts.contains(&PointQ::ints(0, 0)));
        assert!(pts.contains(&PointQ::ints(2, 4)));
        assert!(naive_point_search(&CurveQ::new(rat(1, 2), int(0)), 5).is_err());
    }
}
