//! Polynomial solutions of `x^2 - y^3 - g(z) = t` and the fixed identities.
//!
//! cargo run --example xyz_solver -- "t^6 + t^4 + t^3"

use ellsurf::identities::{cor14_residual, cor14_triple, rem11_residual, thm10_solve, thm10_weierstrass, Sextic};
use ellsurf::polyparse::{parse_poly, render_poly};
use num_bigint::BigInt;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "t^6 + t^4 + t^3".into());
    let g = parse_poly(&text, "t").expect("g(t)");

    if let Ok(sx) = Sextic::from_poly(&g) {
        let m = thm10_weierstrass(&sx.a, &sx.b, &sx.c);
        println!("auxiliary curve: y^2 = x^3 + ({})x + ({}), seed {}", m.curve.a, m.curve.b, m.seed());
    }
    match thm10_solve(&g) {
        Ok(sol) => {
            println!("point source: {}", sol.candidate.source);
            println!("x = {}", render_poly(&sol.triple.x, "t"));
            println!("y = {}", render_poly(&sol.triple.y, "t"));
            println!("z = {}", render_poly(&sol.triple.z, "t"));
            println!("x^2 - y^3 - g(z) = {}", render_poly(&sol.triple.residual, "t"));
        }
        Err(e) => println!("{e}"),
    }

    let (x, y, z) = cor14_triple(&BigInt::from(7));
    println!("x^2 - y^3 - z^6 = {} at x = {x}, y = {y}, z = {z}", cor14_residual(&x, &y, &z));
    println!("rank-zero example leaves the constant {}", render_poly(&rem11_residual(), "t"));
}
