//! Identity and inequality checkers, each gated on its own hypotheses.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::dompoly::{compute, star_poly};
use crate::enumerate::{labeled_graphs, trees};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::poly::DomPolynomial;
use crate::rational::Rational;

use super::{bound_status, pool, BoundStatus};

fn check_vertex(g: &Graph, v: VertexId) -> Result<usize> {
    if v.0 < g.order() {
        Ok(v.0)
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v.0,
            order: g.order(),
        })
    }
}

/// `D_G = x·D_{G/u} + D_{G-u} + x·D_{G-N[u]}` given `N[v] ⊆ N[u]`, `u ≠ v`.
pub fn verify_recur(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    let (u, v) = (check_vertex(g, u)?, check_vertex(g, v)?);
    if u == v || !g.closed_nbhd_nested(v, u) {
        return Err(Error::HypothesisNotMet(format!(
            "N[{v}] is not contained in N[{u}] for distinct vertices"
        )));
    }
    let (minus_u, _) = g.delete_vertices([u])?;
    let (minus_nbhd, _) = g.delete_closed_neighborhood(u)?;
    let rhs = &(&compute(&g.contract(u)?)? + &compute(&minus_nbhd)?).shift(1) + &compute(&minus_u)?;
    Ok(compute(g)? == rhs)
}

/// Leaf form: `D_G = x·[D_{G/u} + D_{G-{u,v}} + D_{G-N[u]}]` for a leaf `v`
/// with neighbor `u`.
pub fn verify_leaf_recur(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    let (u, v) = (check_vertex(g, u)?, check_vertex(g, v)?);
    if g.degree(v) != 1 || !g.has_edge(u, v) {
        return Err(Error::HypothesisNotMet(format!(
            "{v} is not a leaf attached to {u}"
        )));
    }
    let (minus_uv, _) = g.delete_vertices([u, v])?;
    let (minus_nbhd, _) = g.delete_closed_neighborhood(u)?;
    let inner = &(&compute(&g.contract(u)?)? + &compute(&minus_uv)?) + &compute(&minus_nbhd)?;
    Ok(compute(g)? == inner.shift(1))
}

/// `D_{G_(u,k)} + D_{G-u} = (x+1)^{k-1}·[D_{G_(u,1)} + D_{G-u}]`, the clique
/// gluing identity with the subtraction moved across.
pub fn verify_glue(g: &Graph, u: VertexId, k: usize) -> Result<bool> {
    let ui = check_vertex(g, u)?;
    let (minus_u, _) = g.delete_vertices([ui])?;
    let minus_u = compute(&minus_u)?;
    let lhs = &compute(&g.glue_clique(u, k)?)? + &minus_u;
    let base = &compute(&g.glue_clique(u, 1)?)? + &minus_u;
    let rhs = &DomPolynomial::one_plus_x_pow(k - 1) * &base;
    Ok(lhs == rhs)
}

/// Leaf attachment with all counts positive: the polynomial is the product of
/// star polynomials and avd is the sum of star avds, whatever the edges of `g`.
pub fn verify_leaf_attach(g: &Graph, counts: &[usize]) -> Result<bool> {
    if let Some(v) = counts.iter().position(|&k| k == 0) {
        return Err(Error::ZeroLeafCount(v));
    }
    let grown = compute(&g.attach_leaves(counts)?)?;
    let product: DomPolynomial = counts.iter().map(|&k| star_poly(k)).product();
    let avd_sum: Rational = counts.iter().map(|&k| star_poly(k).eval_pair().avd()).sum();
    Ok(grown == product && grown.eval_pair().avd() == avd_sum)
}

/// Outcome of the support-vertex lemma at one support vertex `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportLemmaReport {
    /// `|L(w)|`.
    pub t: usize,
    /// Every non-leaf neighbor of `w` is a support vertex.
    pub neighbors_supported: bool,
    /// Status of `3·D'_H(1)` vs `2(n-t-1)·D_H(1)` for `H = G - L[w]`.
    pub h_status: BoundStatus,
    /// Status of `3·D'_G(1)` vs `2n·D_G(1)`.
    pub g_status: BoundStatus,
    pub hypotheses_hold: bool,
    /// `None` when the hypotheses fail.
    pub conclusion_holds: Option<bool>,
    /// Equality in `G` iff `t ∈ {1,2}` and equality in `H`.
    pub equality_matches: Option<bool>,
}

impl SupportLemmaReport {
    /// Nothing is asserted when the hypotheses fail.
    pub fn passed(&self) -> bool {
        self.conclusion_holds.unwrap_or(true) && self.equality_matches.unwrap_or(true)
    }
}

pub fn verify_support_lemma(g: &Graph, w: VertexId) -> Result<SupportLemmaReport> {
    let wi = check_vertex(g, w)?;
    let leaves = g.leaf_neighbors(wi);
    if leaves.is_empty() {
        return Err(Error::HypothesisNotMet(format!(
            "{w} is not a support vertex"
        )));
    }
    let n = g.order();
    let t = leaves.len();
    let classes = g.classify();
    let neighbors_supported = g
        .neighbors(wi)
        .iter()
        .filter(|&&x| g.degree(x) != 1)
        .all(|&x| classes[x].is_support);

    let mut closed_leaves = leaves.clone();
    closed_leaves.push(wi);
    let (h, _) = g.delete_vertices(closed_leaves)?;
    let h_status = bound_status(&compute(&h)?.eval_pair(), n - t - 1);
    let g_status = bound_status(&compute(g)?.eval_pair(), n);

    let hypotheses_hold = neighbors_supported && h_status != BoundStatus::Violation;
    let (conclusion_holds, equality_matches) = if hypotheses_hold {
        let predicted = (1..=2).contains(&t) && h_status == BoundStatus::Equality;
        (
            Some(g_status != BoundStatus::Violation),
            Some((g_status == BoundStatus::Equality) == predicted),
        )
    } else {
        (None, None)
    };
    Ok(SupportLemmaReport {
        t,
        neighbors_supported,
        h_status,
        g_status,
        hypotheses_hold,
        conclusion_holds,
        equality_matches,
    })
}

/// The three counting inequalities for a tree `T` and a vertex `u`, with
/// `G1 = T` plus a new leaf on `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeItem {
    /// `D_{G1}(1) <= D_T(1) + 3·D_{T-u}(1)`.
    pub first: bool,
    /// `D_{G1}(1) <= 5·D_{T-u}(1)`.
    pub second: bool,
    /// `D_T(1) <= 3·D_{T-u}(1)`.
    pub third: bool,
}

impl ThreeItem {
    pub fn all(&self) -> bool {
        self.first && self.second && self.third
    }
}

/// Whether `u` meets the three-inequality hypotheses in tree `t`.
fn three_item_gate(t: &Graph, u: usize) -> std::result::Result<(), String> {
    if t.order() < 3 {
        return Err(format!("tree order {} is below 3", t.order()));
    }
    if !(t.is_forest() && t.is_connected()) {
        return Err("graph is not a tree".into());
    }
    let classes = t.classify();
    if classes[u].is_support {
        return Err(format!("{u} is a support vertex"));
    }
    let non_support = t
        .neighbors(u)
        .iter()
        .filter(|&&x| !classes[x].is_support)
        .count();
    if non_support > 1 {
        return Err(format!("{u} has {non_support} non-support neighbors"));
    }
    Ok(())
}

pub fn verify_three_item(t: &Graph, u: VertexId) -> Result<ThreeItem> {
    let ui = check_vertex(t, u)?;
    three_item_gate(t, ui).map_err(Error::HypothesisNotMet)?;
    let mut counts = vec![0; t.order()];
    counts[ui] = 1;
    let g1 = compute(&t.attach_leaves(&counts)?)?.eval_pair().d1;
    let dt = compute(t)?.eval_pair().d1;
    let (minus_u, _) = t.delete_vertices([ui])?;
    let dtu = compute(&minus_u)?.eval_pair().d1;
    Ok(ThreeItem {
        first: g1 <= &dt + &dtu * 3u32,
        second: g1 <= &dtu * 5u32,
        third: dt <= dtu * BigUint::from(3u32),
    })
}

/// Aggregate outcome of one identity or inequality suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaSuiteReport {
    pub suite: String,
    pub max_n: usize,
    pub checked: u64,
    pub gated_out: u64,
    pub failures: Vec<String>,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    gated_out: u64,
    failures: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.gated_out += other.gated_out;
        self.failures.extend(other.failures);
        self
    }

    fn into_report(mut self, suite: &str, max_n: usize) -> LemmaSuiteReport {
        self.failures.sort();
        LemmaSuiteReport {
            suite: suite.to_string(),
            max_n,
            checked: self.checked,
            gated_out: self.gated_out,
            failures: self.failures,
        }
    }
}

fn label(g: &Graph) -> String {
    crate::io::write_graph6(g).unwrap_or_else(|_| format!("order-{}", g.order()))
}

fn nested_pairs(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.order())
        .flat_map(|v| g.neighbors(v).iter().map(move |&u| (u, v)))
        .filter(|&(u, v)| g.closed_nbhd_nested(v, u))
        .collect()
}

fn recur_tally(graphs: &[Graph]) -> Result<Tally> {
    graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            for (u, v) in nested_pairs(g) {
                t.checked += 1;
                if !verify_recur(g, VertexId(u), VertexId(v))? {
                    t.failures.push(format!("{} u={u} v={v}", label(g)));
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn all_trees(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(trees(n)?.iter().cloned());
    }
    Ok(out)
}

/// One representative per isomorphism class of graphs on `1..=max_n` vertices.
fn unlabeled_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut reps = BTreeMap::new();
        for g in labeled_graphs(n)? {
            reps.entry(canonical_code(&g)?).or_insert(g);
        }
        out.extend(reps.into_values());
    }
    Ok(out)
}

/// Compositions of `total` into `parts` positive pieces.
fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Runs every identity and inequality suite. Each suite is capped at its own
/// order limit and at `max_n`.
pub fn run_lemma_suites(max_n: usize, workers: usize) -> Result<Vec<LemmaSuiteReport>> {
    pool(workers).install(|| {
        let mut reports = Vec::new();

        let n = max_n.min(9);
        let tally = recur_tally(&all_trees(n)?)?;
        reports.push(tally.into_report("nested-neighborhood recurrence on trees", n));

        let n = max_n.min(6);
        let labeled: Vec<Graph> = (1..=n)
            .map(labeled_graphs)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let tally = recur_tally(&labeled)?;
        reports.push(tally.into_report("nested-neighborhood recurrence on labeled graphs", n));

        let n = max_n.min(12);
        let tally = all_trees(n)?
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                for v in (0..g.order()).filter(|&v| g.degree(v) == 1) {
                    let u = g.neighbors(v)[0];
                    t.checked += 1;
                    if !verify_leaf_recur(g, VertexId(u), VertexId(v))? {
                        t.failures.push(format!("{} u={u} v={v}", label(g)));
                    }
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        reports.push(tally.into_report("leaf recurrence on trees", n));

        let n = max_n.min(7);
        let tally = all_trees(n)?
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                for u in 0..g.order() {
                    for k in 1..=4 {
                        t.checked += 1;
                        if !verify_glue(g, VertexId(u), k)? {
                            t.failures.push(format!("{} u={u} k={k}", label(g)));
                        }
                    }
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        reports.push(tally.into_report("clique gluing identity on trees", n));

        let n = max_n.min(10);
        let trees_n = all_trees(n)?;
        let tally = trees_n
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                for w in (0..g.order()).filter(|&w| !g.leaf_neighbors(w).is_empty()) {
                    let r = verify_support_lemma(g, VertexId(w))?;
                    if !r.hypotheses_hold {
                        t.gated_out += 1;
                        continue;
                    }
                    t.checked += 1;
                    if !r.passed() {
                        t.failures.push(format!("{} w={w}", label(g)));
                    }
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        reports.push(tally.into_report("support vertex lemma on trees", n));

        let tally = trees_n
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                for u in 0..g.order() {
                    if three_item_gate(g, u).is_err() {
                        t.gated_out += 1;
                        continue;
                    }
                    t.checked += 1;
                    if !verify_three_item(g, VertexId(u))?.all() {
                        t.failures.push(format!("{} u={u}", label(g)));
                    }
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        reports.push(tally.into_report("three inequalities on trees", n));

        let n = max_n.min(6);
        let tally = unlabeled_graphs(n)?
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                for total in g.order()..=6 {
                    for counts in compositions(g.order(), total) {
                        t.checked += 1;
                        if !verify_leaf_attach(g, &counts)? {
                            t.failures.push(format!("{} counts={counts:?}", label(g)));
                        }
                    }
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        reports.push(tally.into_report("leaf attachment product", n));

        Ok(reports)
    })
}
