//! Parsing, gcds and substitution in ℚ[t] and ℚ(s).
//!
//! cargo run --example exact_arithmetic -- "t^4 - 1" "t^2 + 2*t + 1"

use ellsurf::polyparse::{parse_poly, render_poly, render_ratfn};
use ellsurf::qmath::{kth_power_test, poly_compose_ratfn, rat, Poly, RatFn};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = parse_poly(args.first().map_or("t^4 - 1", String::as_str), "t").expect("first polynomial");
    let q = parse_poly(args.get(1).map_or("t^2 + 2*t + 1", String::as_str), "t").expect("second polynomial");

    println!("p        = {}", render_poly(&p, "t"));
    println!("q        = {}", render_poly(&q, "t"));
    println!("p * q    = {}", render_poly(&(&p * &q), "t"));
    println!("gcd(p,q) = {}", render_poly(&p.gcd(&q), "t"));

    let r = RatFn::new(p.clone(), q.clone()).expect("q is nonzero");
    println!("p / q    = {}", render_ratfn(&r, "t"));

    // Substitute the Möbius map s -> (s + 1)/(s - 1) into p.
    let m = RatFn::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[-1, 1])).unwrap();
    println!("p((s+1)/(s-1)) = {}", render_ratfn(&poly_compose_ratfn(&p, &m), "s"));

    for x in [rat(64, 729), rat(-8, 27), rat(2, 1)] {
        match kth_power_test(&x, 3) {
            Some(r) => println!("cube root of {x}: {r}"),
            None => println!("{x} is not a cube"),
        }
    }
}
