//! Group law, torsion orders and small points on `y^2 = x^3 + a x + b`.
//!
//! cargo run --example torsion_and_search -- 0 -432 30

use ellsurf::ecq::{classify_with_evidence, naive_point_search, unscale_point, CurveQ};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    let (a, b) = (args.first().copied().unwrap_or(0), args.get(1).copied().unwrap_or(-432));
    let height = args.get(2).copied().unwrap_or(30) as u64;

    let c = CurveQ::from_ints(a, b);
    if c.is_singular() {
        println!("y^2 = x^3 + {a}x + {b} is singular");
        return;
    }
    let (model, u) = c.integral_model();
    let points = naive_point_search(&model, height).expect("smooth curve");
    println!("y^2 = x^3 + {a}x + {b}: {} points up to height {height}", points.len());
    for q in points.iter().take(12) {
        let p = unscale_point(q, &u);
        let (order, evidence) = classify_with_evidence(&c, &p).unwrap();
        let double = c.double(&p).unwrap();
        println!("  {p}  order {order:?} ({evidence:?})  2P = {double}");
    }
}
