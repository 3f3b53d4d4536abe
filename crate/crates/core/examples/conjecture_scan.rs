//! Desk-scale sweep: for every non-split `f = a t^4 + b t^2 + d` (or
//! `g = t^6 + a t^4 + c t^2 + e`) in a small box, look for a fiber with a
//! point of infinite order.
//!
//! cargo run --release --example conjecture_scan -- fx 2 5 20

use std::sync::atomic::AtomicBool;

use ellsurf::scanner::{members, scan_members, t_candidates, Family, DEFAULT_POINT_HEIGHT, DEFAULT_T_HEIGHT};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map(|s| s.parse().expect("fx or g6")).unwrap_or(Family::Fx);
    let box_max: i64 = args.get(1).map(|s| s.parse().expect("box")).unwrap_or(1);
    let t_height: u64 = args.get(2).map(|s| s.parse().expect("t height")).unwrap_or(DEFAULT_T_HEIGHT);
    let height: u64 = args.get(3).map(|s| s.parse().expect("point height")).unwrap_or(DEFAULT_POINT_HEIGHT);

    let box_members = members(family, box_max);
    let ts = t_candidates(t_height);
    let records = scan_members(family, &box_members, &ts, height, &AtomicBool::new(false));
    let mut missing = 0;
    for r in &records {
        match (&r.t0, &r.point) {
            (Some(t0), Some([x, y])) => println!("{:?}  t0 = {t0}  P = ({x}, {y})", r.coefficients),
            _ => {
                missing += 1;
                println!("{:?}  nothing within budget", r.coefficients);
            }
        }
    }
    println!("{} members, {} certified, {} exhausted", records.len(), records.len() - missing, missing);
}
