//! Simple undirected graphs and the surgeries used by the domination
//! recurrences: vertex deletion, contraction `G/u`, clique gluing `G_(u,k)`
//! and leaf attachment.
//!
//! A [`Graph`] stores sorted neighbor lists. Graphs of order at most 63 also
//! expose closed-neighborhood bitmasks, which is what the counting kernels use.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order for which closed neighborhoods fit in a `u64` bitmask.
pub const MASK_ORDER_LIMIT: usize = 63;

/// A 0-based vertex index into a particular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Finite simple undirected graph on vertices `0..order`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Vertex renumbering produced by deletion and component extraction.
///
/// Surviving vertices keep their relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    old_of_new: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl Relabel {
    fn from_keep(keep: &[bool]) -> Self {
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![None; keep.len()];
        for (old, &k) in keep.iter().enumerate() {
            if k {
                new_of_old[old] = Some(old_of_new.len());
                old_of_new.push(old);
            }
        }
        Relabel {
            old_of_new,
            new_of_old,
        }
    }

    /// Index of `old` in the new graph, if it survived.
    pub fn new_of(&self, old: VertexId) -> Option<VertexId> {
        self.new_of_old.get(old.0).copied().flatten().map(VertexId)
    }

    /// Original index of a vertex of the new graph.
    pub fn old_of(&self, new: VertexId) -> VertexId {
        VertexId(self.old_of_new[new.0])
    }

    pub fn old_vertices(&self) -> &[usize] {
        &self.old_of_new
    }
}

/// Degree-based role of a single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub is_leaf: bool,
    pub is_isolated: bool,
    pub is_support: bool,
    pub leaf_neighbor_count: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        g.normalize();
        Ok(g)
    }

    /// Builds from neighbor lists that are already symmetric and loop free.
    fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    fn normalize(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    /// `K_{1,k}` with the center at vertex 0. `star(0)` is `K_1`.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edge_list(k + 1, &edges).expect("valid star")
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Closed neighborhood bitmasks, available when the order is at most 63.
    pub fn closed_masks(&self) -> Option<Vec<u64>> {
        if self.order() > MASK_ORDER_LIMIT {
            return None;
        }
        Some(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, list)| list.iter().fold(1u64 << v, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    /// Sorted closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// `N[v] ⊆ N[u]`.
    pub fn closed_nbhd_nested(&self, v: usize, u: usize) -> bool {
        if u == v {
            return true;
        }
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[v].iter().all(|&w| w == u || self.has_edge(u, w))
    }

    /// Whether `set` dominates the graph. Uses bitmasks when the order allows
    /// and neighbor lists otherwise.
    pub fn dominates(&self, set: &[VertexId]) -> bool {
        match self.closed_masks() {
            Some(masks) => dominates_bitmask(&masks, set),
            None => self.dominates_sparse(set),
        }
    }

    pub(crate) fn dominates_sparse(&self, set: &[VertexId]) -> bool {
        let mut covered = vec![false; self.order()];
        for &VertexId(v) in set {
            covered[v] = true;
            for &w in &self.adj[v] {
                covered[w] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }

    fn induced(&self, keep: &[bool]) -> (Graph, Relabel) {
        let relabel = Relabel::from_keep(keep);
        let adj = relabel
            .old_of_new
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| relabel.new_of_old[w])
                    .collect()
            })
            .collect();
        (Graph { adj }, relabel)
    }

    /// Induced subgraph on `V(G) \ S`, compactly relabeled.
    pub fn delete_vertices<I, V>(&self, set: I) -> Result<(Graph, Relabel)>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut keep = vec![true; self.order()];
        for v in set {
            let VertexId(v) = v.into();
            self.check(v)?;
            keep[v] = false;
        }
        Ok(self.induced(&keep))
    }

    /// `G \ N[u]`.
    pub fn delete_closed_neighborhood(&self, u: impl Into<VertexId>) -> Result<(Graph, Relabel)> {
        let VertexId(u) = u.into();
        self.check(u)?;
        self.delete_vertices(self.closed_neighborhood(u))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph { adj })
    }

    /// `G/u`: delete `u` and make its former neighbors pairwise adjacent.
    pub fn contract(&self, u: impl Into<VertexId>) -> Result<Graph> {
        let VertexId(u) = u.into();
        self.check(u)?;
        let mut adj = self.adj.clone();
        let nbrs = &self.adj[u];
        for &a in nbrs {
            for &b in nbrs {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
        let joined = Graph::from_adjacency_unchecked(adj);
        let (g, _) = joined.delete_vertices([u])?;
        Ok(g)
    }

    /// `G_(u,k)`: glue a copy of `K_{k+1}` onto `u`. The `k` new vertices are
    /// appended as `n..n+k`.
    pub fn glue_clique(&self, u: impl Into<VertexId>, k: usize) -> Result<Graph> {
        let VertexId(u) = u.into();
        self.check(u)?;
        if k == 0 {
            return Err(Error::ZeroCliqueSize);
        }
        let n = self.order();
        let mut adj = self.adj.clone();
        adj.resize(n + k, Vec::new());
        let clique: Vec<usize> = std::iter::once(u).chain(n..n + k).collect();
        for &a in &clique {
            for &b in &clique {
                if a != b && (a >= n || b >= n) {
                    adj[a].push(b);
                }
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G(v_1^{k_1}, ..., v_n^{k_n})`: hang `counts[i]` new leaves on vertex
    /// `i`. New vertices are appended host by host.
    pub fn attach_leaves(&self, counts: &[usize]) -> Result<Graph> {
        if counts.len() != self.order() {
            return Err(Error::LengthMismatch {
                expected: self.order(),
                got: counts.len(),
            });
        }
        let mut adj = self.adj.clone();
        for (host, &k) in counts.iter().enumerate() {
            for _ in 0..k {
                let leaf = adj.len();
                adj.push(vec![host]);
                adj[host].push(leaf);
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj }
    }

    /// Per-vertex component index, numbered by smallest member.
    fn component_ids(&self) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Connected components ordered by their smallest original vertex.
    pub fn components(&self) -> Vec<(Graph, Relabel)> {
        let (comp, count) = self.component_ids();
        (0..count)
            .map(|c| {
                let keep: Vec<bool> = comp.iter().map(|&x| x == c).collect();
                self.induced(&keep)
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Acyclic iff `|E| = |V| - c`.
    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.order()
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn classify(&self) -> Vec<VertexClass> {
        (0..self.order())
            .map(|v| {
                let leaf_neighbor_count =
                    self.adj[v].iter().filter(|&&w| self.degree(w) == 1).count();
                VertexClass {
                    is_leaf: self.degree(v) == 1,
                    is_isolated: self.degree(v) == 0,
                    is_support: leaf_neighbor_count > 0,
                    leaf_neighbor_count,
                }
            })
            .collect()
    }

    /// `L_G(u)`.
    pub fn leaf_neighbors(&self, u: usize) -> Vec<usize> {
        self.adj[u]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) == 1)
            .collect()
    }

    /// Every non-leaf vertex is a support vertex with one or two leaf
    /// neighbors. The order-0 graph qualifies vacuously.
    pub fn is_extremal_shape(&self) -> bool {
        self.classify()
            .iter()
            .all(|c| c.is_leaf || (1..=2).contains(&c.leaf_neighbor_count))
    }

    /// True iff every component is `K_1` or `K_{1,m}` with `m >= 1`.
    pub fn is_star_forest(&self) -> bool {
        self.components().iter().all(|(c, _)| {
            let n = c.order();
            n <= 2 || (c.is_forest() && (0..n).filter(|&v| c.degree(v) > 1).count() == 1)
        })
    }

    /// An edge is pendant when one of its endpoints is a leaf.
    pub fn is_pendant_edge(&self, u: usize, v: usize) -> bool {
        self.degree(u) == 1 || self.degree(v) == 1
    }
}

pub(crate) fn dominates_bitmask(closed: &[u64], set: &[VertexId]) -> bool {
    let full = if closed.len() == 64 {
        u64::MAX
    } else {
        (1u64 << closed.len()) - 1
    };
    set.iter().fold(0u64, |acc, &VertexId(v)| acc | closed[v]) == full
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(edges(&k2), vec![(0, 1)]);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, Graph::path(4));
        let dup = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(edges(&dup), vec![(0, 1)]);
        assert_eq!(dup.degree(2), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn deletion() {
        let (g, map) = Graph::path(4).delete_vertices([0]).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(map.old_of(VertexId(0)), VertexId(1));
        assert_eq!(map.new_of(VertexId(0)), None);

        let (g, _) = Graph::path(3).delete_closed_neighborhood(1).unwrap();
        assert_eq!(g.order(), 0);

        let (g, _) = Graph::star(3).delete_vertices([0]).unwrap();
        assert_eq!(g, Graph::empty(3));

        assert!(Graph::path(3).delete_vertices([7]).is_err());
        let (same, _) = Graph::path(5).delete_vertices(Vec::<usize>::new()).unwrap();
        assert_eq!(same, Graph::path(5));
    }

    #[test]
    fn contraction() {
        assert_eq!(Graph::path(3).contract(1).unwrap(), Graph::complete(2));
        // P_4 / 1: vertices {0,2,3} become 0,1,2 with 0-1 joined and 1-2 kept.
        assert_eq!(Graph::path(4).contract(1).unwrap(), Graph::path(3));
        assert_eq!(Graph::star(3).contract(0).unwrap(), Graph::complete(3));
        assert!(Graph::path(3).contract(3).is_err());
    }

    #[test]
    fn gluing() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.glue_clique(0, 1).unwrap(), Graph::star(2));
        let g = k2.glue_clique(0, 2).unwrap();
        assert_eq!((g.order(), g.size()), (4, 4));
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3) && g.has_edge(2, 3) && g.has_edge(0, 1));
        assert_eq!(g.degree(1), 1);
        assert_eq!(
            Graph::empty(1).glue_clique(0, 3).unwrap(),
            Graph::complete(4)
        );
        assert_eq!(k2.glue_clique(0, 0), Err(Error::ZeroCliqueSize));
    }

    #[test]
    fn leaf_attachment() {
        let k2 = Graph::complete(2);
        let p4 = k2.attach_leaves(&[1, 1]).unwrap();
        assert_eq!(p4.size(), 3);
        assert!(p4.is_forest() && p4.is_connected());
        assert_eq!((0..4).filter(|&v| p4.degree(v) == 1).count(), 2);

        let cat = k2.attach_leaves(&[1, 2]).unwrap();
        assert_eq!(cat.order(), 5);
        let cls = cat.classify();
        assert_eq!(cls[0].leaf_neighbor_count, 1);
        assert_eq!(cls[1].leaf_neighbor_count, 2);

        assert_eq!(Graph::empty(1).attach_leaves(&[3]).unwrap(), Graph::star(3));
        assert_eq!(
            k2.attach_leaves(&[1]),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn components_in_order() {
        let g = Graph::complete(2).disjoint_union(&Graph::path(3));
        let comps: Vec<Graph> = g.components().into_iter().map(|(c, _)| c).collect();
        assert_eq!(comps, vec![Graph::complete(2), Graph::path(3)]);
        assert_eq!(Graph::path(4).components().len(), 1);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn classification() {
        let c = Graph::path(4).classify();
        assert!(c[0].is_leaf && c[3].is_leaf);
        assert!(c[1].is_support && c[2].is_support);
        assert_eq!((c[1].leaf_neighbor_count, c[2].leaf_neighbor_count), (1, 1));

        let c = Graph::star(3).classify();
        assert!(c[0].is_support && c[0].leaf_neighbor_count == 3);
        assert!(c[1..].iter().all(|x| x.is_leaf));

        let c = Graph::path(5).classify();
        assert!(!c[2].is_leaf && !c[2].is_support);
    }

    #[test]
    fn extremal_shape() {
        assert!(Graph::path(4).is_extremal_shape());
        assert!(!Graph::star(3).is_extremal_shape());
        assert!(!Graph::path(5).is_extremal_shape());
        assert!(Graph::empty(0).is_extremal_shape());
        assert!(!Graph::empty(1).is_extremal_shape());
        assert!(Graph::complete(2).is_extremal_shape());
    }

    #[test]
    fn forest_and_isolated() {
        let p4 = Graph::path(4);
        assert_eq!((p4.is_forest(), p4.has_isolated()), (true, false));
        let k3 = Graph::complete(3);
        assert_eq!((k3.is_forest(), k3.has_isolated()), (false, false));
        let g = Graph::complete(2).disjoint_union(&Graph::empty(1));
        assert_eq!((g.is_forest(), g.has_isolated()), (true, true));
    }

    #[test]
    fn star_forests() {
        assert!(Graph::star(4).is_star_forest());
        assert!(Graph::complete(2)
            .disjoint_union(&Graph::empty(2))
            .is_star_forest());
        assert!(!Graph::path(4).is_star_forest());
        assert!(!Graph::complete(3).is_star_forest());
    }

    #[test]
    fn nested_neighborhoods() {
        let p3 = Graph::path(3);
        assert!(p3.closed_nbhd_nested(0, 1));
        assert!(!p3.closed_nbhd_nested(1, 0));
        let p4 = Graph::path(4);
        assert!(!p4.closed_nbhd_nested(3, 1));
    }

    #[test]
    fn bitmask_and_sparse_domination_agree() {
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        for g in [Graph::path(7), Graph::cycle(8), Graph::star(5), petersen] {
            let masks = g.closed_masks().unwrap();
            for s in 0u32..(1 << g.order()) {
                let set: Vec<VertexId> = (0..g.order())
                    .filter(|v| s >> v & 1 == 1)
                    .map(VertexId)
                    .collect();
                assert_eq!(dominates_bitmask(&masks, &set), g.dominates_sparse(&set));
            }
        }
    }
}
