//! Edge-removal search: does some edge `e` satisfy `avd(G) < avd(G - e)`?

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::dompoly::eval_pair_small;
use crate::enumerate::LabeledLayout;
use crate::error::{Error, Result};
use crate::io::write_graph6;
use crate::rational::Rational;

use super::pool;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeMode {
    /// Every graph with at least one edge; any edge may be removed.
    AnyEdge,
    /// Graphs that are not disjoint unions of stars and isolated vertices;
    /// only edges with no leaf endpoint may be removed.
    NonPendantEdge,
}

/// One isomorphism class with no qualifying edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub code: CanonicalCode,
    /// graph6 of the smallest labeled member.
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub mode: EdgeMode,
    /// Labeled graphs passing the mode's filter.
    pub tested: u64,
    pub counterexamples: Vec<Finding>,
    /// Labeled graphs without a qualifying edge.
    pub labeled_counterexamples: u64,
    pub elapsed_ms: u64,
}

impl ConjectureReport {
    pub fn without_timing(&self) -> ConjectureReport {
        ConjectureReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

fn lt(a: (u32, u32), b: (u32, u32)) -> bool {
    // avd = dp1 / d1; compare a.1/a.0 < b.1/b.0.
    u64::from(a.1) * u64::from(b.0) < u64::from(b.1) * u64::from(a.0)
}

/// `(D(1), D'(1))` for every labeled graph, indexed by edge mask.
fn eval_table(layout: &LabeledLayout) -> Vec<(u32, u32)> {
    let n = layout.order();
    (0..layout.count())
        .into_par_iter()
        .map(|mask| {
            let mut closed = [0u64; 8];
            layout.closed_masks(mask, &mut closed);
            let (d1, dp1) = eval_pair_small(&closed[..n]);
            (d1 as u32, dp1 as u32)
        })
        .collect()
}

/// Edges of `mask` eligible for removal under `mode`, as single-bit masks.
fn eligible_edges(layout: &LabeledLayout, mask: u64, mode: EdgeMode) -> Vec<u64> {
    let deg = layout.degrees(mask);
    (0..layout.pairs().len())
        .filter(|&e| mask >> e & 1 == 1)
        .filter(|&e| {
            let (i, j) = layout.pairs()[e];
            mode == EdgeMode::AnyEdge || (deg[i] > 1 && deg[j] > 1)
        })
        .map(|e| 1u64 << e)
        .collect()
}

/// Runs the edge-removal search over all labeled graphs on `n` vertices.
///
/// A graph is a star forest exactly when every edge has a leaf endpoint, so
/// in non-pendant mode the filter reduces to having at least one non-pendant
/// edge.
pub fn edge_removal_sweep(n: usize, mode: EdgeMode, workers: usize) -> Result<ConjectureReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "edge removal sweep",
            order: n,
            min: 2,
            max: 7,
        });
    }
    let start = Instant::now();
    let layout = LabeledLayout::new(n)?;
    let (tested, masks) = pool(workers).install(|| {
        let table = eval_table(&layout);
        (0..layout.count())
            .into_par_iter()
            .fold(
                || (0u64, Vec::new()),
                |(mut tested, mut found), mask| {
                    let edges = eligible_edges(&layout, mask, mode);
                    if !edges.is_empty() {
                        tested += 1;
                        let here = table[mask as usize];
                        if !edges.iter().any(|&e| lt(here, table[(mask ^ e) as usize])) {
                            found.push(mask);
                        }
                    }
                    (tested, found)
                },
            )
            .reduce(
                || (0u64, Vec::new()),
                |(ta, mut fa), (tb, fb)| {
                    fa.extend(fb);
                    (ta + tb, fa)
                },
            )
    });

    let mut classes: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
    for &mask in &masks {
        let code = canonical_code(&layout.graph(mask))?;
        classes
            .entry(code)
            .and_modify(|m| *m = (*m).min(mask))
            .or_insert(mask);
    }
    let counterexamples = classes
        .into_iter()
        .map(|(code, mask)| {
            let g = layout.graph(mask);
            let avd_of = |m: u64| {
                let mut closed = [0u64; 8];
                layout.closed_masks(m, &mut closed);
                let (d1, dp1) = eval_pair_small(&closed[..n]);
                Rational::new(dp1, d1)
            };
            let best = eligible_edges(&layout, mask, mode)
                .into_iter()
                .map(|e| avd_of(mask ^ e))
                .max()
                .expect("filtered graphs have an eligible edge");
            Ok(Finding {
                code,
                graph6: write_graph6(&g)?,
                detail: format!(
                    "avd = {}; best eligible edge removal gives {}",
                    avd_of(mask),
                    best
                ),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ConjectureReport {
        n,
        mode,
        tested,
        counterexamples,
        labeled_counterexamples: masks.len() as u64,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dompoly::avd;
    use crate::graph::Graph;

    #[test]
    fn triangle_has_a_witness() {
        let k3 = avd(&Graph::complete(3)).unwrap();
        let p3 = avd(&Graph::path(3)).unwrap();
        assert_eq!(
            (k3.clone(), p3.clone()),
            (Rational::new(12, 7), Rational::integer(2))
        );
        assert!(k3 < p3);
    }

    #[test]
    fn small_orders_any_edge() {
        for n in 2..=5 {
            let r = edge_removal_sweep(n, EdgeMode::AnyEdge, 2).unwrap();
            assert_eq!(r.tested, (1u64 << (n * (n - 1) / 2)) - 1);
            assert!(
                r.counterexamples.is_empty(),
                "n={n}: {:?}",
                r.counterexamples
            );
        }
    }

    #[test]
    fn non_pendant_filter() {
        let layout = LabeledLayout::new(4).unwrap();
        // K_{1,3} centered at 3: edges (0,3), (1,3), (2,3) are bits 3, 4, 5.
        let star = 0b111000;
        assert!(eligible_edges(&layout, star, EdgeMode::NonPendantEdge).is_empty());
        assert_eq!(eligible_edges(&layout, star, EdgeMode::AnyEdge).len(), 3);
        let r = edge_removal_sweep(3, EdgeMode::NonPendantEdge, 1).unwrap();
        // Only the triangle has a non-pendant edge on three vertices.
        assert_eq!(r.tested, 1);
    }
}
