//! Exact arithmetic over ℚ: scalars, dense polynomials, rational functions.

pub mod poly;
pub mod rat;
pub mod ratfn;

pub use poly::{poly_eval, squarefree_part, Poly};
pub use rat::{fmt_rat, height, int, kth_power_test, parse_rat, rat, Rat};
pub use ratfn::{poly_compose_ratfn, RatFn};

/// Minimum number of sample points for identities in two variables. Every
/// coefficient of the second variable in the identities checked here has
/// degree well below this in the sampled one.
pub const BIVARIATE_SAMPLES: usize = 64;

/// Sample values `1, -1, 2, -2, 1/2, -1/2, 3, ...`: distinct, small height,
/// avoiding zero.
pub fn sample_points(n: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(n);
    let mut k: i64 = 1;
    while out.len() < n {
        for x in [rat(k, 1), rat(-k, 1), rat(1, k + 1), rat(-1, k + 1)] {
            if out.len() < n && !out.contains(&x) {
                out.push(x);
            }
        }
        k += 1;
    }
    out
}

/// Checks a two-variable polynomial identity `L(s, T) = R(s, T)` by fixing `s`
/// at `samples` distinct rationals and comparing the resulting polynomials in
/// `T` exactly. Agreement at more points than the `s`-degree of every
/// `T`-coefficient forces the identity; callers pass at least
/// [`BIVARIATE_SAMPLES`].
pub fn identity_holds_by_sampling<F>(samples: usize, mut side_by_side: F) -> bool
where
    F: FnMut(&Rat) -> (Poly, Poly),
{
    sample_points(samples).iter().all(|s| {
        let (l, r) = side_by_side(s);
        l == r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_distinct() {
        let pts = sample_points(200);
        for (i, a) in pts.iter().enumerate() {
            assert!(pts[i + 1..].iter().all(|b| b != a));
        }
    }

    #[test]
    fn sampling_rejects_false_identity() {
        // (s T + 1)^2 vs s^2 T^2 + 1 differ by 2 s T.
        let ok = identity_holds_by_sampling(BIVARIATE_SAMPLES, |s| {
            let l = Poly::new(vec![int(1), s.clone()]).pow(2);
            let r = Poly::new(vec![int(1), int(0), s * s]);
            (l, r)
        });
        assert!(!ok);
    }
}
