//! The quartic `v^2 = s^4 + ...` attached to a sextic, its Weierstrass
//! model and the maps between them.
//!
//! cargo run --example quartic_to_weierstrass -- 1 1 0

use ellsurf::identities::{thm10_curve_c, thm10_d, thm10_weierstrass};
use ellsurf::polyparse::render_poly;
use ellsurf::qmath::int;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    let (a, b, c) = (int(args.first().copied().unwrap_or(1)), int(args.get(1).copied().unwrap_or(1)), int(args.get(2).copied().unwrap_or(0)));

    let quartic = thm10_curve_c(&a, &b, &c);
    println!("C: v^2 = {}", render_poly(&quartic.u, "s"));
    println!("D = {}  repeated root: {}", thm10_d(&a, &b, &c), quartic.has_repeated_root());

    let m = thm10_weierstrass(&a, &b, &c);
    println!("E: y^2 = x^3 + ({})x + ({})", m.curve.a, m.curve.b);
    if m.curve.is_singular() {
        return;
    }
    for k in 1..=4 {
        let p = m.curve.scalar_mul(k, &m.seed()).unwrap();
        let back = m.to_c(&p).or_else(|| m.preimage(&p));
        match back {
            Some((s, v)) => println!("{k}P = {p} -> C ({s}, {v}), on C: {}", quartic.contains(&s, &v)),
            None => println!("{k}P = {p} has no image on C"),
        }
    }
}
