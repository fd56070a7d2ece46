//! Checkers for the forest bound `3·D'(1) <= 2n·D(1)`, its equality
//! characterization, the supporting identities and inequalities, and the
//! sweep drivers that run them over whole families.
//!
//! Every comparison is on integers or reduced rationals.

mod conjecture;
mod lemmas;
mod sweeps;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::dompoly::compute;
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::{EvalPair, Rational};

pub use conjecture::{edge_removal_sweep, ConjectureReport, EdgeMode, Finding};
pub use lemmas::{
    run_lemma_suites, verify_glue, verify_leaf_attach, verify_leaf_recur, verify_recur,
    verify_support_lemma, verify_three_item, LemmaSuiteReport, SupportLemmaReport, ThreeItem,
};
pub use sweeps::{
    bound_sweep, general_bound_sweep, kn_min_sweep, star_min_sweep, sweep_forests, GraphRow,
    SweepReport,
};

pub(crate) fn ser_decimal<S: Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundStatus {
    Strict,
    Equality,
    Violation,
}

impl BoundStatus {
    fn compare(lhs: &BigUint, rhs: &BigUint) -> Self {
        match lhs.cmp(rhs) {
            std::cmp::Ordering::Less => BoundStatus::Strict,
            std::cmp::Ordering::Equal => BoundStatus::Equality,
            std::cmp::Ordering::Greater => BoundStatus::Violation,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Strict => "strict",
            BoundStatus::Equality => "equality",
            BoundStatus::Violation => "violation",
        }
    }
}

/// `3·D'(1)` against `2n·D(1)` for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "ser_decimal")]
    pub rhs: BigUint,
    pub status: BoundStatus,
    pub avd: Rational,
    pub extremal_shape: bool,
    pub eval: EvalPair,
}

impl BoundReport {
    pub fn from_eval(n: usize, eval: EvalPair, extremal_shape: bool) -> Self {
        let lhs = &eval.dp1 * 3u32;
        let rhs = &eval.d1 * BigUint::from(2 * n);
        BoundReport {
            n,
            status: BoundStatus::compare(&lhs, &rhs),
            avd: eval.avd(),
            lhs,
            rhs,
            extremal_shape,
            eval,
        }
    }
}

/// Callable on any graph; the bound is only guaranteed for forests without
/// isolated vertices.
pub fn check_bound(g: &Graph) -> Result<BoundReport> {
    let eval = compute(g)?.eval_pair();
    Ok(BoundReport::from_eval(
        g.order(),
        eval,
        g.is_extremal_shape(),
    ))
}

/// `3·D'(1)` vs `2m·D(1)` for an arbitrary multiplier `m`.
pub(crate) fn bound_status(eval: &EvalPair, m: usize) -> BoundStatus {
    BoundStatus::compare(&(&eval.dp1 * 3u32), &(&eval.d1 * BigUint::from(2 * m)))
}

/// Worker pool of the requested width (at least one thread).
pub(crate) fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool construction")
}
