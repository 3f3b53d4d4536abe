//! Closed-form sections: each construction returns the base change, the
//! section, the named parameters and a non-torsion certificate.

mod fx;
mod g6;
mod general;

pub use fx::{cor4_forward, cor4_inverse, cor4_transport, thm1_deg3, thm1_deg4_from_point, thm2_quartic, Cor4Result};
pub use g6::{cor8_deg5, rem7_curve, thm5_sextic, thm6_chain, thm6_step, Thm6Step, Thm6System};
pub use general::{thm16_cubic, thm16_quartic};

use crate::error::{Error, Result};
use crate::qmath::{int, Poly, Rat, RatFn};
use crate::surfaces::{certify_non_torsion, verify_section, Certificate, Section, Surface};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Rat(Rat),
    Fn(RatFn),
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    /// Short tag of the result this construction implements, e.g. `"thm2"`.
    pub theorem: &'static str,
    pub surface: Surface,
    pub section: Section,
    pub params: Vec<(String, Param)>,
    pub certificate: Certificate,
    /// Dispatch decisions and deviations worth showing to a user.
    pub notes: Vec<String>,
}

impl ConstructionResult {
    pub fn param(&self, name: &str) -> Option<&Param> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// `p(t + delta)` with the coefficient of `t^(n-1)` removed, and `delta`.
pub fn depress(p: &Poly) -> (Poly, Rat) {
    let n = p.deg();
    if n == 0 {
        return (p.clone(), int(0));
    }
    let delta = -p.coeff(n - 1) / (p.leading() * int(n as i64));
    (p.shift(&delta), delta)
}

pub(crate) fn finish(
    theorem: &'static str,
    surface: Surface,
    section: Section,
    params: Vec<(String, Param)>,
    notes: Vec<String>,
) -> Result<ConstructionResult> {
    if section.phi.is_constant() {
        return Err(Error::hypothesis(format!("{theorem}: the base change degenerates to a constant")));
    }
    if !verify_section(&surface, &section) {
        return Err(Error::Verification(format!("{theorem}: section fails the surface equation")));
    }
    let certificate = certify_non_torsion(&surface, &section)?;
    Ok(ConstructionResult { theorem, surface, section, params, certificate, notes })
}

pub(crate) fn rat_param(name: &str, v: &Rat) -> (String, Param) {
    (name.to_string(), Param::Rat(v.clone()))
}

pub(crate) fn fn_param(name: &str, v: &RatFn) -> (String, Param) {
    (name.to_string(), Param::Fn(v.clone()))
}

/// Constant polynomial.
fn k(c: &Rat) -> Poly {
    Poly::constant(c.clone())
}

pub(crate) fn ratfn(num: Poly, den: Poly, what: &str) -> Result<RatFn> {
    RatFn::new(num, den).ok_or_else(|| Error::hypothesis(format!("{what} is identically zero")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depression() {
        let (d, delta) = depress(&Poly::from_ints(&[1, 0, 0, 0, 4, 1]));
        assert_eq!(delta, crate::qmath::rat(-4, 5));
        assert!(d.coeff(4) == int(0));
        assert_eq!(d.shift(&-delta), Poly::from_ints(&[1, 0, 0, 0, 4, 1]));
    }
}
