//! Invariants of `y^2 = x^3 + A(t) x + B(t)`.
//!
//! cargo run --example surface_info -- "t^2 + 1" "t^3"

use ellsurf::polyparse::{parse_poly, render_poly, render_ratfn};
use ellsurf::qmath::int;
use ellsurf::surfaces::{discriminant, fiber, is_isotrivial, j_invariant, nonsplit_check, Surface};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = parse_poly(args.first().map_or("t^2 + 1", String::as_str), "t").expect("A(t)");
    let b = parse_poly(args.get(1).map_or("t^3", String::as_str), "t").expect("B(t)");
    let s = Surface::general(a, b);

    println!("discriminant: {}", render_poly(&discriminant(&s), "t"));
    match j_invariant(&s) {
        Ok(j) => println!("j-invariant: {}  isotrivial: {}", render_ratfn(&j, "t"), is_isotrivial(&s).unwrap()),
        Err(e) => println!("j-invariant: {e}"),
    }
    println!("non-split: {}", nonsplit_check(&s));
    for t0 in -2..=2 {
        let c = fiber(&s, &int(t0));
        println!("fiber at t = {t0}: A = {}, B = {}, singular: {}", c.a, c.b, c.is_singular());
    }
}
