//! Graph families for the sweeps.
//!
//! Unlabeled trees are grown by leaf extension from the order `n - 1`
//! representatives and deduplicated by canonical code. Forests without
//! isolated vertices are multisets of trees of order at least two. Labeled
//! graphs on at most eight vertices are plain edge bitmasks.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREE_ORDER_GUARD: usize = 16;
pub const LABELED_ORDER_GUARD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Trees,
    ForestsNoIsolated,
    LabeledGraphs,
    /// Graphs read from a graph6 list.
    External,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Trees => "trees",
            Family::ForestsNoIsolated => "forests-no-isolated",
            Family::LabeledGraphs => "labeled-graphs",
            Family::External => "external",
        }
    }
}

/// A sweep domain: family, order, and optional filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub order: usize,
    pub connected: bool,
    pub no_isolated: bool,
}

impl FamilySpec {
    pub fn new(family: Family, order: usize) -> Self {
        FamilySpec {
            family,
            order,
            connected: false,
            no_isolated: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn no_isolated(mut self) -> Self {
        self.no_isolated = true;
        self
    }

    fn keep(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && (!self.no_isolated || !g.has_isolated())
    }

    /// Materializes the family in its deterministic order.
    pub fn generate(&self) -> Result<Vec<Graph>> {
        let all = match self.family {
            Family::Trees => trees(self.order)?.to_vec(),
            Family::ForestsNoIsolated => forests_no_isolated(self.order)?,
            Family::LabeledGraphs => labeled_graphs(self.order)?.collect(),
            Family::External => {
                return Err(Error::HypothesisNotMet(
                    "external families are read from a graph6 list".into(),
                ))
            }
        };
        Ok(all.into_iter().filter(|g| self.keep(g)).collect())
    }
}

fn check_order(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            what,
            order: n,
            min,
            max,
        })
    }
}

static TREE_CATALOG: Mutex<Vec<Arc<Vec<Graph>>>> = Mutex::new(Vec::new());

fn grow(prev: &[Graph]) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for t in prev {
        let mut counts = vec![0; t.order()];
        for v in 0..t.order() {
            counts[v] = 1;
            let bigger = t.attach_leaves(&counts).expect("counts match order");
            counts[v] = 0;
            let code = canonical_code(&bigger).expect("trees always have a code");
            seen.entry(code).or_insert(bigger);
        }
    }
    seen.into_values().collect()
}

/// One tree per isomorphism class, sorted by canonical code.
pub fn trees(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_order("trees", n, 1, TREE_ORDER_GUARD)?;
    let mut catalog = TREE_CATALOG.lock().unwrap_or_else(|e| e.into_inner());
    if catalog.is_empty() {
        catalog.push(Arc::new(vec![Graph::empty(1)]));
    }
    while catalog.len() < n {
        let next = grow(catalog.last().expect("seeded"));
        catalog.push(Arc::new(next));
    }
    Ok(Arc::clone(&catalog[n - 1]))
}

/// Integer partitions of `n` into parts `>= 2`, each non-decreasing.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Tree indices are non-decreasing within runs of equal part sizes, so each
/// multiset of trees is produced once.
fn multisets(
    parts: &[usize],
    lists: &[Arc<Vec<Graph>>],
    pos: usize,
    prev_idx: usize,
    acc: Graph,
    out: &mut Vec<Graph>,
) {
    if pos == parts.len() {
        out.push(acc);
        return;
    }
    let start = if pos > 0 && parts[pos] == parts[pos - 1] {
        prev_idx
    } else {
        0
    };
    for i in start..lists[pos].len() {
        multisets(
            parts,
            lists,
            pos + 1,
            i,
            acc.disjoint_union(&lists[pos][i]),
            out,
        );
    }
}

/// One forest per isomorphism class with minimum degree at least one.
pub fn forests_no_isolated(n: usize) -> Result<Vec<Graph>> {
    check_order("forests without isolated vertices", n, 2, TREE_ORDER_GUARD)?;
    let mut out = Vec::new();
    for parts in partitions(n) {
        let lists: Vec<Arc<Vec<Graph>>> = parts.iter().map(|&p| trees(p)).collect::<Result<_>>()?;
        multisets(&parts, &lists, 0, 0, Graph::empty(0), &mut out);
    }
    Ok(out)
}

/// Vertex pairs of a labeled graph on `n` vertices in graph6 column order:
/// bit `e` of an edge mask is the pair `pairs()[e]`.
#[derive(Clone, Debug)]
pub struct LabeledLayout {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl LabeledLayout {
    pub fn new(n: usize) -> Result<Self> {
        check_order("labeled graphs", n, 0, LABELED_ORDER_GUARD)?;
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Ok(LabeledLayout { n, pairs })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of labeled graphs, `2^C(n,2)`.
    pub fn count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    /// Closed neighborhood masks, written into `out[..n]`.
    pub fn closed_masks(&self, mask: u64, out: &mut [u64]) {
        for (v, m) in out.iter_mut().enumerate().take(self.n) {
            *m = 1 << v;
        }
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (i, j) = self.pairs[e];
            out[i] |= 1 << j;
            out[j] |= 1 << i;
        }
    }

    pub fn degrees(&self, mask: u64) -> [u32; LABELED_ORDER_GUARD] {
        let mut deg = [0u32; LABELED_ORDER_GUARD];
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (i, j) = self.pairs[e];
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn graph(&self, mask: u64) -> Graph {
        let edges: Vec<_> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(e, _)| mask >> e & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edge_list(self.n, &edges).expect("layout pairs are valid")
    }
}

/// All `2^C(n,2)` labeled graphs in increasing edge-mask order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order("labeled graphs", n, 1, LABELED_ORDER_GUARD)?;
    let layout = LabeledLayout::new(n)?;
    Ok((0..layout.count()).map(move |m| layout.graph(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn tree_counts() {
        // Unlabeled trees, orders 1..=16.
        let known = [
            1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
        ];
        for (n, &count) in known.iter().enumerate().take(12) {
            assert_eq!(trees(n + 1).unwrap().len(), count, "order {}", n + 1);
        }
    }

    #[test]
    fn tree_examples() {
        let t4 = trees(4).unwrap();
        let codes: BTreeSet<_> = t4.iter().map(|t| canonical_code(t).unwrap()).collect();
        let expected: BTreeSet<_> = [Graph::path(4), Graph::star(3)]
            .iter()
            .map(|t| canonical_code(t).unwrap())
            .collect();
        assert_eq!(codes, expected);
        assert!(trees(0).is_err() && trees(17).is_err());
    }

    #[test]
    fn forest_counts() {
        assert_eq!(forests_no_isolated(2).unwrap().len(), 1);
        assert_eq!(forests_no_isolated(4).unwrap().len(), 3);
        assert_eq!(forests_no_isolated(5).unwrap().len(), 4);
        assert_eq!(forests_no_isolated(6).unwrap().len(), 10);
        assert!(forests_no_isolated(1).is_err());
    }

    #[test]
    fn forests_are_forests_and_distinct() {
        for n in 2..=10 {
            let fs = forests_no_isolated(n).unwrap();
            let codes: BTreeSet<_> = fs.iter().map(|f| canonical_code(f).unwrap()).collect();
            assert_eq!(codes.len(), fs.len());
            assert!(fs
                .iter()
                .all(|f| f.order() == n && f.is_forest() && !f.has_isolated()));
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(LabeledLayout::new(7).unwrap().count(), 2_097_152);
        assert!(labeled_graphs(9).is_err());
    }

    #[test]
    fn labeled_masks_match_graphs() {
        let layout = LabeledLayout::new(5).unwrap();
        let mut masks = [0u64; 8];
        for m in [0u64, 1, 0b1011, 1023, 517] {
            let g = layout.graph(m);
            layout.closed_masks(m, &mut masks);
            assert_eq!(&masks[..5], &g.closed_masks().unwrap()[..]);
            let deg = layout.degrees(m);
            assert!((0..5).all(|v| deg[v] as usize == g.degree(v)));
        }
    }

    #[test]
    fn family_spec_filters() {
        let spec = FamilySpec::new(Family::LabeledGraphs, 3).no_isolated();
        // K_3 and the three labeled paths.
        assert_eq!(spec.generate().unwrap().len(), 4);
        let spec = FamilySpec::new(Family::LabeledGraphs, 3).connected();
        assert_eq!(spec.generate().unwrap().len(), 4);
    }
}
