//! Sections of `y^2 = x^3 + g(t)` and a chain of fibers carrying points of
//! infinite order.
//!
//! cargo run --example sextic_fibers -- 3

use ellsurf::constructions::{cor8_deg5, thm5_sextic, thm6_chain};
use ellsurf::ecq::PointQ;
use ellsurf::polyparse::render_ratfn;
use ellsurf::qmath::{int, Poly};

fn main() {
    let steps: usize = std::env::args().nth(1).map(|s| s.parse().expect("steps")).unwrap_or(2);

    let g = Poly::from_ints(&[1, 0, 1, 0, 0, 0, 1]);
    println!("g = t^6 + t^2 + 1, starting from (1, 2) over t = 1");
    match thm6_chain(&g, &int(1), &PointQ::ints(1, 2), steps) {
        Ok(chain) => {
            for (i, s) in chain.iter().enumerate() {
                println!("  step {}: t = {}  P = {}  ({:?})", i + 1, s.t1, s.point, s.system);
            }
        }
        Err(e) => println!("  chain: {e}"),
    }

    let g = Poly::from_ints(&[0, 0, 0, 1, 0, 0, 1]);
    let res = thm5_sextic(&g).expect("t^6 + t^3 has a cubic term");
    println!("g = t^6 + t^3: t = {}", render_ratfn(&res.section.phi, "u"));

    let h = Poly::from_ints(&[1, 0, 0, 0, 0, 1]);
    let res = cor8_deg5(&h).expect("quintic with h(0) = 1");
    println!("h = t^5 + 1: t = {}  ({})", render_ratfn(&res.section.phi, "u"), res.notes.join("; "));
}
