//! Dense univariate polynomials over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{denominator_lcm, int, kth_power_test, Rat};

/// Polynomial with rational coefficients; `coeffs[i]` multiplies `t^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", crate::polyparse::render_poly(self, "t"))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from integer coefficients in ascending degree order.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `t - r`
    pub fn linear_root(r: &Rat) -> Self {
        Poly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive pseudo-remainder sequence over ℤ so coefficient growth
    /// stays bounded by the content removal at each step.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let mut a = IntPoly::primitive_of(self);
        let mut b = IntPoly::primitive_of(other);
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.to_poly().monic()
    }

    /// `self(inner(t))`
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// `self(t + c)`
    pub fn shift(&self, c: &Rat) -> Poly {
        self.compose(&Poly::new(vec![c.clone(), Rat::one()]))
    }

    /// `t^n * self(1/t)`; requires `n >= deg`.
    pub fn reversed(&self, n: usize) -> Poly {
        assert!(self.is_zero() || self.deg() <= n);
        let mut v = vec![Rat::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Poly::new(v)
    }

    /// `self(-t) == self(t)`
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Returns `r` with `r^k == self` when `self` is a perfect k-th power in
    /// ℚ[t]. The candidate root is built from the top coefficients with the
    /// power-series recurrence for `P^(1/k)`, then confirmed by expansion.
    pub fn kth_root(&self, k: u32) -> Option<Poly> {
        assert!(k >= 1);
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.deg();
        if !n.is_multiple_of(k as usize) {
            return None;
        }
        let lc_root = kth_power_test(&self.leading(), k)?;
        let m = n / k as usize;
        // Reversed monic series P(y) = 1 + p1 y + ... ; R = P^(1/k).
        let lc = self.leading();
        let p: Vec<Rat> = (0..=n).map(|i| &self.coeff(n - i) / &lc).collect();
        let alpha = Rat::new(BigInt::one(), BigInt::from(k));
        let mut r = vec![Rat::one()];
        for j in 1..=m {
            let mut acc = Rat::zero();
            for i in 1..=j {
                let w = (&alpha + Rat::one()) * int(i as i64) - int(j as i64);
                acc += w * &p[i] * &r[j - i];
            }
            r.push(acc / int(j as i64));
        }
        let root = Poly::new(r).reversed(m).scale(&lc_root);
        (root.pow(k) == *self).then_some(root)
    }

    /// Returns the integer-coefficient primitive part with positive leading
    /// coefficient, as rationals.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        IntPoly::primitive_of(self).to_poly()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

/// `p = v / d` with integer `v`.
fn scaled_ints(p: &Poly) -> (Vec<BigInt>, BigInt) {
    let l = denominator_lcm(p.coeffs());
    let v = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    (v, l)
}

/// Integer-coefficient polynomial used only inside the gcd.
#[derive(Clone)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn primitive_of(p: &Poly) -> IntPoly {
        let l = denominator_lcm(p.coeffs());
        let v: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
        IntPoly(v).primitive()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn primitive(self) -> IntPoly {
        let s = self.trim();
        if s.is_zero() {
            return s;
        }
        let mut g = s.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if s.0.last().unwrap().is_negative() {
            g = -g;
        }
        IntPoly(s.0.into_iter().map(|c| c / &g).collect())
    }

    /// Sparse pseudo-remainder: some power of lc(b) times self, reduced mod b.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        let lb = b.0.last().unwrap().clone();
        let mut r = self.0.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (j, bc) in b.0.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly(r)
    }

    fn to_poly(&self) -> Poly {
        Poly::new(self.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        // Convolve over ℤ; one reduction per output coefficient.
        let (a, da) = scaled_ints(self);
        let (b, db) = scaled_ints(o);
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        let d = da * db;
        Poly::new(v.into_iter().map(|c| Rat::new(c, d.clone())).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `p(x)`, exactly.
pub fn poly_eval(p: &Poly, x: &Rat) -> Rat {
    p.eval(x)
}

/// `p / gcd(p, p')` made monic; its degree counts the distinct complex roots.
pub fn squarefree_part(p: &Poly) -> crate::Result<Poly> {
    if p.is_zero() {
        return Err(crate::Error::hypothesis(
            "squarefree part of the zero polynomial",
        ));
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g).monic())
}
