//! Rational functions over ℚ in canonical form.
//!
//! Every value is kept reduced with a monic denominator, so two rational
//! functions are equal exactly when their fields are equal. Identity checks
//! throughout the crate rely on this.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({})", crate::polyparse::render_ratfn(self, "s"))
    }
}

impl RatFn {
    /// Reduces `num/den`. Returns `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<RatFn> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFn::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Some(RatFn::normalize_coprime(num, den))
    }

    /// Only rescales so the denominator is monic; caller guarantees
    /// `gcd(num, den) = 1`.
    fn normalize_coprime(num: Poly, den: Poly) -> RatFn {
        let lc = den.leading();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = lc.recip();
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn zero() -> RatFn {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> RatFn {
        RatFn::constant(Rat::one())
    }

    /// The parameter itself.
    pub fn var() -> RatFn {
        RatFn::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if this function is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn inv(&self) -> Option<RatFn> {
        if self.is_zero() {
            return None;
        }
        Some(RatFn::normalize_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> RatFn {
        if k < 0 {
            return self
                .inv()
                .expect("negative power of zero rational function")
                .pow(-k);
        }
        let k = k as u32;
        // Powers of coprime polynomials stay coprime.
        RatFn::normalize_coprime(self.num.pow(k), self.den.pow(k))
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, o: &RatFn) -> Option<RatFn> {
        Some(self * &o.inv()?)
    }

    /// `self(inner(s))`.
    pub fn compose(&self, inner: &RatFn) -> Option<RatFn> {
        let n = poly_compose_ratfn(&self.num, inner);
        let d = poly_compose_ratfn(&self.den, inner);
        n.checked_div(&d)
    }

    /// Largest of numerator and denominator degree.
    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }
}

/// `p(r)` in reduced form.
///
/// With `r = N/D` coprime, `p(r) = sum c_i N^i D^(n-i) / D^n`. The numerator is
/// congruent to `c_n N^n` modulo `D`, so it is already coprime to `D^n` and no
/// gcd is needed.
pub fn poly_compose_ratfn(p: &Poly, r: &RatFn) -> RatFn {
    let Some(n) = p.degree() else {
        return RatFn::zero();
    };
    if r.is_polynomial() {
        let inner = r.num.scale(&r.den.leading().recip());
        return RatFn::from_poly(p.compose(&inner));
    }
    let mut num_pows = vec![Poly::one()];
    let mut den_pows = vec![Poly::one()];
    for i in 1..=n {
        num_pows.push(&num_pows[i - 1] * &r.num);
        den_pows.push(&den_pows[i - 1] * &r.den);
    }
    let mut acc = Poly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&num_pows[i] * &den_pows[n - i]).scale(c);
    }
    RatFn::normalize_coprime(acc, den_pows[n].clone())
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, o: &RatFn) -> RatFn {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFn::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RatFn::from_poly(&self.num + &o.num);
        }
        let g = self.den.gcd(&o.den);
        let b = self.den.div_exact(&g);
        let d = o.den.div_exact(&g);
        let num = &(&self.num * &d) + &(&o.num * &b);
        RatFn::new(num, &b * &o.den).unwrap()
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, o: &RatFn) -> RatFn {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, o: &RatFn) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        // Cross-cancel so the product of coprime pairs stays coprime.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = o.den.div_exact(&g1);
        let n2 = o.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        RatFn::normalize_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn div(self, o: &RatFn) -> RatFn {
        self.checked_div(o).expect("division by the zero rational function")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, o: RatFn) -> RatFn {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, o: &RatFn) -> RatFn {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<RatFn> for &'a RatFn {
            type Output = RatFn;
            fn $m(self, o: RatFn) -> RatFn {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Poly> for RatFn {
    fn from(p: Poly) -> RatFn {
        RatFn::from_poly(p)
    }
}

impl From<Rat> for RatFn {
    fn from(c: Rat) -> RatFn {
        RatFn::constant(c)
    }
}
