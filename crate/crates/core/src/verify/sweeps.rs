use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::dompoly::{complete_poly, eval_pair_small, star_poly};
use crate::enumerate::{forests_no_isolated, trees, Family, LabeledLayout};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{EvalPair, Rational};

use super::{check_bound, pool, ser_decimal, BoundStatus};

/// Aggregate result of checking one family at one order.
///
/// Code lists are sorted and free of duplicates, so reports from different
/// worker counts compare equal once timing is removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub family: Family,
    pub n: usize,
    pub total: u64,
    pub violations: Vec<CanonicalCode>,
    pub equality_cases: Vec<CanonicalCode>,
    pub mismatches: Vec<CanonicalCode>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub rows: Vec<GraphRow>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.mismatches.is_empty()
    }

    /// Copy with `elapsed_ms` zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Per-graph line of a bound sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRow {
    pub code: CanonicalCode,
    pub n: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub d1: BigUint,
    #[serde(serialize_with = "ser_decimal")]
    pub dp1: BigUint,
    pub avd: Rational,
    pub status: BoundStatus,
    pub extremal_shape: bool,
}

impl GraphRow {
    pub const CSV_HEADER: &'static str = "code,n,d1,dp1,avd_num,avd_den,status,extremal_shape";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.code,
            self.n,
            self.d1,
            self.dp1,
            self.avd.numer(),
            self.avd.denom(),
            self.status.as_str(),
            self.extremal_shape
        )
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn sorted(codes: impl IntoIterator<Item = CanonicalCode>) -> Vec<CanonicalCode> {
    codes
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Checks `3·D'(1) <= 2n·D(1)` on each graph. For forests without isolated
/// vertices, equality must coincide exactly with the extremal shape;
/// otherwise the graph is recorded as a mismatch.
pub fn bound_sweep(
    family: Family,
    n: usize,
    graphs: &[Graph],
    workers: usize,
) -> Result<SweepReport> {
    let start = Instant::now();
    let mut rows: Vec<(GraphRow, bool)> = pool(workers).install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let report = check_bound(g)?;
                let in_scope = g.is_forest() && !g.has_isolated();
                Ok((
                    GraphRow {
                        code: canonical_code(g)?,
                        n: g.order(),
                        d1: report.eval.d1,
                        dp1: report.eval.dp1,
                        avd: report.avd,
                        status: report.status,
                        extremal_shape: report.extremal_shape,
                    },
                    in_scope,
                ))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by(|a, b| a.0.code.cmp(&b.0.code));

    let with_status = |s: BoundStatus| {
        sorted(
            rows.iter()
                .filter(|(r, _)| r.status == s)
                .map(|(r, _)| r.code.clone()),
        )
    };
    let violations = with_status(BoundStatus::Violation);
    let equality_cases = with_status(BoundStatus::Equality);
    let mismatches = sorted(
        rows.iter()
            .filter(|(r, in_scope)| {
                *in_scope && (r.status == BoundStatus::Equality) != r.extremal_shape
            })
            .map(|(r, _)| r.code.clone()),
    );
    Ok(SweepReport {
        family,
        n,
        total: rows.len() as u64,
        violations,
        equality_cases,
        mismatches,
        elapsed_ms: elapsed_ms(start),
        rows: rows.into_iter().map(|(r, _)| r).collect(),
    })
}

/// The forest bound and its equality characterization for every forest
/// without isolated vertices of order `2..=n_max`.
pub fn sweep_forests(n_max: usize, workers: usize) -> Result<Vec<SweepReport>> {
    if !(2..=crate::enumerate::TREE_ORDER_GUARD).contains(&n_max) {
        return Err(Error::OrderOutOfRange {
            what: "forest sweep",
            order: n_max,
            min: 2,
            max: crate::enumerate::TREE_ORDER_GUARD,
        });
    }
    (2..=n_max)
        .map(|n| {
            bound_sweep(
                Family::ForestsNoIsolated,
                n,
                &forests_no_isolated(n)?,
                workers,
            )
        })
        .collect()
}

/// The star has strictly the smallest avd among trees of each order
/// `2..=n_max`. Trees tying or beating the star are violations; the
/// equality list holds every tree whose avd equals the star's.
pub fn star_min_sweep(n_max: usize, workers: usize) -> Result<Vec<SweepReport>> {
    if !(2..=13).contains(&n_max) {
        return Err(Error::OrderOutOfRange {
            what: "star minimality sweep",
            order: n_max,
            min: 2,
            max: 13,
        });
    }
    (2..=n_max)
        .map(|n| {
            let start = Instant::now();
            let star_code = canonical_code(&Graph::star(n - 1))?;
            let star_avd = star_poly(n - 1).eval_pair().avd();
            let family = trees(n)?;
            let rows: Vec<GraphRow> = pool(workers).install(|| {
                family
                    .par_iter()
                    .map(|t| {
                        let report = check_bound(t)?;
                        Ok(GraphRow {
                            code: canonical_code(t)?,
                            n,
                            d1: report.eval.d1,
                            dp1: report.eval.dp1,
                            avd: report.avd,
                            status: report.status,
                            extremal_shape: report.extremal_shape,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            let violations = sorted(
                rows.iter()
                    .filter(|r| r.code != star_code && r.avd <= star_avd)
                    .map(|r| r.code.clone()),
            );
            let equality_cases = sorted(
                rows.iter()
                    .filter(|r| r.avd == star_avd)
                    .map(|r| r.code.clone()),
            );
            Ok(SweepReport {
                family: Family::Trees,
                n,
                total: rows.len() as u64,
                violations,
                equality_cases,
                mismatches: Vec::new(),
                elapsed_ms: elapsed_ms(start),
                rows,
            })
        })
        .collect()
}

/// Per-thread accumulator for labeled sweeps: labeled counts plus
/// representative masks for the graphs worth reporting.
#[derive(Default)]
struct MaskTally {
    total: u64,
    violations: Vec<u64>,
    equalities: Vec<u64>,
}

impl MaskTally {
    fn merge(mut self, other: MaskTally) -> MaskTally {
        self.total += other.total;
        self.violations.extend(other.violations);
        self.equalities.extend(other.equalities);
        self
    }
}

fn codes_of(layout: &LabeledLayout, masks: &[u64]) -> Result<Vec<CanonicalCode>> {
    let codes: BTreeSet<CanonicalCode> = masks
        .par_iter()
        .map(|&m| canonical_code(&layout.graph(m)))
        .collect::<Result<_>>()?;
    Ok(codes.into_iter().collect())
}

/// `a/b < c/d` for positive denominators.
fn frac_lt(a: u64, b: u64, c: u64, d: u64) -> bool {
    u128::from(a) * u128::from(d) < u128::from(c) * u128::from(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Skipped,
    Passed,
    Equality,
    Violation,
}

fn labeled_sweep<F>(
    n: usize,
    workers: usize,
    classify: F,
) -> Result<(u64, Vec<CanonicalCode>, Vec<CanonicalCode>)>
where
    F: Fn(&LabeledLayout, u64, &[u64]) -> Outcome + Sync,
{
    let layout = LabeledLayout::new(n)?;
    pool(workers).install(|| {
        let tally = (0..layout.count())
            .into_par_iter()
            .fold(MaskTally::default, |mut acc, mask| {
                let mut closed = [0u64; 8];
                layout.closed_masks(mask, &mut closed);
                let outcome = classify(&layout, mask, &closed[..n]);
                if outcome != Outcome::Skipped {
                    acc.total += 1;
                }
                match outcome {
                    Outcome::Violation => acc.violations.push(mask),
                    Outcome::Equality => acc.equalities.push(mask),
                    Outcome::Skipped | Outcome::Passed => {}
                }
                acc
            })
            .reduce(MaskTally::default, MaskTally::merge);
        Ok((
            tally.total,
            codes_of(&layout, &tally.violations)?,
            codes_of(&layout, &tally.equalities)?,
        ))
    })
}

/// `avd(G) >= avd(K_n)` over all labeled graphs on `n` vertices, with
/// equality only at `K_n`.
pub fn kn_min_sweep(n: usize, workers: usize) -> Result<SweepReport> {
    if !(1..=7).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "complete graph minimality sweep",
            order: n,
            min: 1,
            max: 7,
        });
    }
    let start = Instant::now();
    let EvalPair { d1, dp1 } = complete_poly(n).eval_pair();
    let (kd1, kdp1) = (
        u64::try_from(d1).expect("small"),
        u64::try_from(dp1).expect("small"),
    );
    let layout = LabeledLayout::new(n)?;
    let complete_mask = layout.count() - 1;
    let (total, violations, equality_cases) = labeled_sweep(n, workers, |_, mask, closed| {
        let (d1, dp1) = eval_pair_small(closed);
        let below = frac_lt(dp1, d1, kdp1, kd1);
        let above = frac_lt(kdp1, kd1, dp1, d1);
        match (mask == complete_mask, below, above) {
            (_, true, _) => Outcome::Violation,
            (true, false, false) => Outcome::Equality,
            (false, false, false) => Outcome::Violation,
            (true, false, true) => Outcome::Violation,
            (false, false, true) => Outcome::Passed,
        }
    })?;
    Ok(SweepReport {
        family: Family::LabeledGraphs,
        n,
        total,
        violations,
        equality_cases,
        mismatches: Vec::new(),
        elapsed_ms: elapsed_ms(start),
        rows: Vec::new(),
    })
}

/// Largest order accepted by [`general_bound_sweep`] without the
/// long-running opt in.
pub const GENERAL_BOUND_DESK_ORDER: usize = 7;

/// `3·D'(1) <= 2n·D(1)` over every labeled graph on `n` vertices without
/// isolated vertices. `n = 8` needs `long_running`.
pub fn general_bound_sweep(n: usize, workers: usize, long_running: bool) -> Result<SweepReport> {
    let max = if long_running {
        8
    } else {
        GENERAL_BOUND_DESK_ORDER
    };
    if !(2..=max).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "general bound sweep",
            order: n,
            min: 2,
            max,
        });
    }
    let start = Instant::now();
    let (total, violations, equality_cases) = labeled_sweep(n, workers, |layout, mask, closed| {
        let deg = layout.degrees(mask);
        if deg[..n].contains(&0) {
            return Outcome::Skipped;
        }
        let (d1, dp1) = eval_pair_small(closed);
        let (lhs, rhs) = (3 * dp1, 2 * n as u64 * d1);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => Outcome::Violation,
            std::cmp::Ordering::Equal => Outcome::Equality,
            std::cmp::Ordering::Less => Outcome::Passed,
        }
    })?;
    Ok(SweepReport {
        family: Family::LabeledGraphs,
        n,
        total,
        violations,
        equality_cases,
        mismatches: Vec::new(),
        elapsed_ms: elapsed_ms(start),
        rows: Vec::new(),
    })
}
