//! Sections of `y^2 = x^3 + f(t) x + g(t)` for cubic and quartic `f`.
//!
//! cargo run --example general_surfaces

use ellsurf::constructions::{thm16_cubic, thm16_quartic};
use ellsurf::polyparse::render_ratfn;
use ellsurf::qmath::Poly;

fn main() {
    let cases = [
        (Poly::from_ints(&[1, 0, 0, 1]), Poly::from_ints(&[2])),
        (Poly::from_ints(&[0, 1, 0, 0, 1]), Poly::from_ints(&[1, 1])),
    ];
    for (f, g) in cases {
        let res = if f.deg() == 3 { thm16_cubic(&f, &g, None) } else { thm16_quartic(&f, &g) };
        match res {
            Ok(r) => {
                println!("[{}] t = {}", r.theorem, render_ratfn(&r.section.phi, "s"));
                println!("  x = {}", render_ratfn(&r.section.x, "s"));
                match &r.certificate.s0 {
                    Some(s0) => println!("  certificate: {} at s0 = {s0}", r.certificate.method.name()),
                    None => println!("  certificate: {}", r.certificate.method.name()),
                }
            }
            Err(e) => println!("{e}"),
        }
    }
}
