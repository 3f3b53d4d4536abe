//! Sweeps over coefficient boxes looking for a fiber with a point of
//! infinite order, for `y^2 = x^3 + (a t^4 + b t^2 + d) x` and
//! `y^2 = x^3 + t^6 + a t^4 + c t^2 + e`.
//!
//! Output is one JSON object per line. Members already present in an output
//! file are skipped, so an interrupted scan can be resumed by rerunning it.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ecq::{classify_with_evidence, naive_point_search, unscale_point, CurveQ, Order, OrderEvidence, PointQ};
use crate::error::{Error, Result};
use crate::qmath::{fmt_rat, height, int, parse_rat, rat, Poly, Rat};
use crate::surfaces::{fiber, nonsplit_check, Surface};

/// Default height of the `t0` candidates; enough for every non-split member
/// of the fx box of size 2 and the g6 box of size 1.
pub const DEFAULT_T_HEIGHT: u64 = 5;
/// Default height bound of the point search on each fiber.
pub const DEFAULT_POINT_HEIGHT: u64 = 20;

/// Members processed between two flushes of the output file.
const CHUNK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Fx,
    G6,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fx => "fx",
            Family::G6 => "g6",
        }
    }

    /// `[a, b, d] -> a t^4 + b t^2 + d`, `[a, c, e] -> t^6 + a t^4 + c t^2 + e`.
    pub fn polynomial(self, k: &[Rat; 3]) -> Poly {
        let [p, q, r] = k.clone();
        match self {
            Family::Fx => Poly::new(vec![r, int(0), q, int(0), p]),
            Family::G6 => Poly::new(vec![r, int(0), q, int(0), p, int(0), int(1)]),
        }
    }

    pub fn surface(self, k: &[Rat; 3]) -> Result<Surface> {
        match self {
            Family::Fx => Surface::fx(self.polynomial(k)),
            Family::G6 => Surface::g6(self.polynomial(k)),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "fx" => Ok(Family::Fx),
            "g6" => Ok(Family::G6),
            _ => Err(Error::Parse { position: 0, message: format!("unknown family '{s}' (expected fx or g6)") }),
        }
    }
}

/// Why a point was accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCertificate {
    pub method: String,
    /// The multiple with a non-integral coordinate, for Nagell-Lutz.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multiple: Option<u32>,
}

impl PointCertificate {
    fn from_evidence(ev: &OrderEvidence) -> PointCertificate {
        match ev {
            OrderEvidence::NonIntegralMultiple { multiple } => {
                PointCertificate { method: "NagellLutz".into(), multiple: Some(*multiple) }
            }
            OrderEvidence::MazurBound => PointCertificate { method: "MazurBound".into(), multiple: None },
            OrderEvidence::Killed { order } => PointCertificate { method: format!("Torsion{order}"), multiple: None },
        }
    }
}

/// The first point of height at most `height` that has infinite order, or
/// `None` when the search runs dry (which proves nothing).
pub fn certify_fiber(c: &CurveQ, height: u64) -> Result<Option<(PointQ, PointCertificate)>> {
    if c.is_singular() {
        return Err(Error::SingularCurve);
    }
    let (model, u) = c.integral_model();
    for p in naive_point_search(&model, height)? {
        let p = unscale_point(&p, &u);
        if p.coords().is_some_and(|(_, y)| y.is_zero()) {
            continue;
        }
        let (order, ev) = classify_with_evidence(c, &p)?;
        if order == Order::Infinite {
            return Ok(Some((p, PointCertificate::from_evidence(&ev))));
        }
    }
    Ok(None)
}

/// All rationals of height at most `h`, ordered by height, then numerator
/// size, then denominator, positive before negative.
pub fn t_candidates(h: u64) -> Vec<Rat> {
    let h = h.max(1) as i64;
    let mut out = vec![int(0)];
    for n in 1..=h {
        for d in 1..=h {
            let x = rat(n, d);
            if x.numer() == &BigInt::from(n) {
                out.push(x.clone());
                out.push(-x);
            }
        }
    }
    out.sort_by_key(|x| (height(x), x.numer().abs(), x.denom().clone(), x.is_negative()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanBudget {
    pub t_candidates: usize,
    pub point_height: u64,
    /// Fibers actually searched before stopping.
    pub fibers_tried: usize,
}

/// One member of the box: either a certified point on some fiber or an
/// exhaustion marker (`t0`, `point`, `certificate` absent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: Family,
    /// `[a, b, d]` for fx, `[a, c, e]` for g6, as `num/den` strings.
    pub coefficients: Vec<String>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub point: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<PointCertificate>,
    pub budget: ScanBudget,
}

pub const SUCCESS: &str = "success";
pub const EXHAUSTED: &str = "exhausted";

impl ScanRecord {
    pub fn is_success(&self) -> bool {
        self.status == SUCCESS
    }

    pub fn coefficient_values(&self) -> Result<[Rat; 3]> {
        let v: Vec<Rat> = self.coefficients.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
        v.try_into().map_err(|_| Error::Parse { position: 0, message: "expected three coefficients".into() })
    }

    /// Re-derives the fiber and re-checks the point: on the curve and of
    /// infinite order. Exhaustion markers replay as `false`.
    pub fn replay(&self) -> bool {
        let (Some(t0), Some([x, y])) = (&self.t0, &self.point) else {
            return false;
        };
        let check = || -> Result<bool> {
            let surface = self.family.surface(&self.coefficient_values()?)?;
            let c = fiber(&surface, &parse_rat(t0)?);
            let p = PointQ::new(parse_rat(x)?, parse_rat(y)?);
            Ok(c.on_curve(&p) && classify_with_evidence(&c, &p)?.0 == Order::Infinite)
        };
        check().unwrap_or(false)
    }

    fn key(&self) -> (Family, Vec<String>) {
        (self.family, self.coefficients.clone())
    }
}

/// Coefficient triples in `[-box_max, box_max]^3`, lexicographic, with split
/// surfaces removed.
pub fn members(family: Family, box_max: i64) -> Vec<[Rat; 3]> {
    let r = -box_max..=box_max;
    let mut out = Vec::new();
    for p in r.clone() {
        for q in r.clone() {
            for s in r.clone() {
                let k = [int(p), int(q), int(s)];
                if family.surface(&k).is_ok_and(|sf| nonsplit_check(&sf)) {
                    out.push(k);
                }
            }
        }
    }
    out
}

fn scan_member(family: Family, k: &[Rat; 3], ts: &[Rat], height: u64, cancel: &AtomicBool) -> Option<ScanRecord> {
    let surface = family.surface(k).ok()?;
    let coefficients = k.iter().map(fmt_rat).collect();
    let mut tried = 0;
    for t0 in ts {
        if cancel.load(Ordering::Relaxed) {
            return None;
        }
        let c = fiber(&surface, t0);
        if c.is_singular() {
            continue;
        }
        tried += 1;
        // Singularity was excluded above, so the search cannot fail.
        if let Ok(Some((p, cert))) = certify_fiber(&c, height) {
            let (x, y) = p.coords().expect("affine point");
            return Some(ScanRecord {
                family,
                coefficients,
                status: SUCCESS.into(),
                t0: Some(fmt_rat(t0)),
                point: Some([fmt_rat(x), fmt_rat(y)]),
                certificate: Some(cert),
                budget: ScanBudget { t_candidates: ts.len(), point_height: height, fibers_tried: tried },
            });
        }
    }
    Some(ScanRecord {
        family,
        coefficients,
        status: EXHAUSTED.into(),
        t0: None,
        point: None,
        certificate: None,
        budget: ScanBudget { t_candidates: ts.len(), point_height: height, fibers_tried: tried },
    })
}

/// Scans `members` in parallel; output order is the order of `members`.
/// Members cut off by `cancel` are left out.
pub fn scan_members(
    family: Family,
    members: &[[Rat; 3]],
    ts: &[Rat],
    height: u64,
    cancel: &AtomicBool,
) -> Vec<ScanRecord> {
    members.par_iter().map(|k| scan_member(family, k, ts, height, cancel)).collect::<Vec<_>>().into_iter().flatten().collect()
}

pub fn scan_fx(box_max: i64, ts: &[Rat], height: u64, cancel: &AtomicBool) -> Vec<ScanRecord> {
    scan_members(Family::Fx, &members(Family::Fx, box_max), ts, height, cancel)
}

pub fn scan_g6(box_max: i64, ts: &[Rat], height: u64, cancel: &AtomicBool) -> Vec<ScanRecord> {
    scan_members(Family::G6, &members(Family::G6, box_max), ts, height, cancel)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub family: Family,
    pub box_max: i64,
    /// Largest height of the `t0` candidates.
    pub t_height: u64,
    /// Height bound of the point search on each fiber.
    pub point_height: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub members: usize,
    pub skipped: usize,
    pub successes: usize,
    pub exhausted: usize,
    pub cancelled: bool,
}

/// Records already in `path`; a missing file reads as empty.
pub fn read_records(path: &Path) -> Result<Vec<ScanRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let file = File::open(path).map_err(|e| Error::hypothesis(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::hypothesis(format!("cannot read {}: {e}", path.display())))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line)
            .map_err(|e| Error::Parse { position: i + 1, message: format!("bad record on line {}: {e}", i + 1) })?;
        out.push(rec);
    }
    Ok(out)
}

/// Runs `config`, appending one line per new member to `path` and skipping
/// members already recorded there. Returns after cancellation with whatever
/// was finished written out.
pub fn scan_to_file(config: &ScanConfig, path: &Path, cancel: &AtomicBool) -> Result<ScanSummary> {
    let done: HashSet<_> = read_records(path)?.iter().map(ScanRecord::key).collect();
    let all = members(config.family, config.box_max);
    let todo: Vec<[Rat; 3]> = all
        .iter()
        .filter(|k| !done.contains(&(config.family, k.iter().map(fmt_rat).collect())))
        .cloned()
        .collect();
    let mut summary = ScanSummary { members: all.len(), skipped: all.len() - todo.len(), ..Default::default() };
    let ts = t_candidates(config.t_height);
    let io_err = |e: std::io::Error| Error::hypothesis(format!("cannot write {}: {e}", path.display()));
    let mut out = OpenOptions::new().create(true).append(true).open(path).map_err(io_err)?;
    for chunk in todo.chunks(CHUNK) {
        let recs = scan_members(config.family, chunk, &ts, config.point_height, cancel);
        for rec in &recs {
            let line = serde_json::to_string(rec).expect("records serialize");
            writeln!(out, "{line}").map_err(io_err)?;
            if rec.is_success() {
                summary.successes += 1;
            } else {
                summary.exhausted += 1;
            }
        }
        out.flush().map_err(io_err)?;
        if cancel.load(Ordering::Relaxed) {
            summary.cancelled = true;
            break;
        }
    }
    Ok(summary)
}
