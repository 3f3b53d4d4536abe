//! Sections of `y^2 = x^3 + f(t) x` and the transported solution of
//! `v^2 = u^4 + f(w)`.
//!
//! cargo run --example quartic_twist_sections -- "t^4 + t + 1"

use ellsurf::constructions::{cor4_transport, thm1_deg3, thm2_quartic, ConstructionResult};
use ellsurf::polyparse::{parse_poly, render_ratfn};
use ellsurf::qmath::Poly;

fn show(res: &ConstructionResult) {
    let v = &res.section.param;
    println!("[{}] {}", res.theorem, res.surface.kind_name());
    println!("  t = {}", render_ratfn(&res.section.phi, v));
    println!("  x = {}", render_ratfn(&res.section.x, v));
    println!("  y = {}", render_ratfn(&res.section.y, v));
    println!("  certificate: {}", res.certificate.method.name());
}

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "t^4 + t + 1".into());
    let f = parse_poly(&text, "t").expect("f(t)");

    match thm2_quartic(&f) {
        Ok(res) => show(&res),
        Err(e) => println!("quartic construction: {e}"),
    }
    let cubic = Poly::from_ints(&[1, -2, 0, 1]);
    show(&thm1_deg3(&cubic, None).expect("cubic construction"));

    match cor4_transport(&f) {
        Ok(c) => {
            println!("v^2 = u^4 + f(w) with");
            println!("  u = {}", render_ratfn(&c.u, "s"));
            println!("  v = {}", render_ratfn(&c.v, "s"));
            println!("  w = {}", render_ratfn(&c.w, "s"));
            println!("  residual is zero: {}", c.residual(&f).is_zero());
        }
        Err(e) => println!("transport: {e}"),
    }
}
