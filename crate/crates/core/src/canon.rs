//! Canonical codes: equal codes iff isomorphic graphs.
//!
//! Forests get an AHU encoding: every tree is rooted at its center (the
//! smaller of the two encodings for a bicentral tree) and components are
//! sorted. Other graphs get the lexicographically largest graph6 adjacency
//! string over all vertex orders that list vertices by non-increasing degree.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;

/// Largest non-forest order accepted by [`canonical_code`].
pub const GENERAL_CANON_GUARD: usize = 10;

/// Isomorphism-invariant printable byte string.
///
/// Forest codes start with `F`, general codes with `G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("canonical codes are ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    if g.is_forest() {
        return Ok(forest_code(g));
    }
    if g.order() > GENERAL_CANON_GUARD {
        return Err(Error::GuardExceeded {
            what: "canonical code of a non-forest",
            order: g.order(),
            guard: GENERAL_CANON_GUARD,
            hint: "",
        });
    }
    Ok(general_code(g))
}

fn forest_code(g: &Graph) -> CanonicalCode {
    let mut parts: Vec<Vec<u8>> = g.components().iter().map(|(t, _)| tree_code(t)).collect();
    parts.sort();
    let mut out = vec![b'F'];
    for p in parts {
        out.extend(p);
    }
    CanonicalCode(out)
}

/// Centers of a tree: one or two vertices left after repeatedly stripping leaves.
fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in t.neighbors(v) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, root: usize) -> Vec<u8> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut finished: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend(k);
        }
        code.push(b')');
        if v == root {
            finished[v] = code;
        } else {
            child_codes[parent[v]].push(code);
        }
    }
    std::mem::take(&mut finished[root])
}

fn tree_code(t: &Graph) -> Vec<u8> {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has at least one vertex")
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    slots: Vec<usize>,
    degree: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search {
    /// Adjacency of `v` to the already placed vertices, first placed = most
    /// significant bit. Equal-length segments compare like bit strings.
    fn segment(&self, v: usize) -> u64 {
        self.perm
            .iter()
            .fold(0u64, |acc, &w| (acc << 1) | ((self.adj[v] >> w) & 1))
    }

    fn dfs(&mut self, mut tied: bool) -> bool {
        let p = self.perm.len();
        if p == self.n {
            if self.best.is_none() || !tied {
                self.best = Some(self.cur.clone());
                return true;
            }
            return false;
        }
        let mut updated = false;
        // Swapping twins is an automorphism fixing every placed vertex, so a
        // twin of an earlier candidate leads to the same codes.
        let mut tried = 0u64;
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.degree[v] != self.slots[p] {
                continue;
            }
            let is_twin = |t: usize| self.adj[v] & !(1 << t) == self.adj[t] & !(1 << v);
            if (0..v).any(|t| tried >> t & 1 == 1 && is_twin(t)) {
                continue;
            }
            tried |= 1 << v;
            let seg = self.segment(v);
            let child_tied = match (&self.best, tied) {
                (Some(best), true) => match seg.cmp(&best[p]) {
                    Ordering::Less => continue,
                    Ordering::Equal => true,
                    Ordering::Greater => false,
                },
                _ => false,
            };
            self.perm.push(v);
            self.used |= 1 << v;
            self.cur.push(seg);
            if self.dfs(child_tied) {
                updated = true;
                tied = true;
            }
            self.cur.pop();
            self.used &= !(1 << v);
            self.perm.pop();
        }
        updated
    }
}

fn general_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut slots = degree.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));
    let mut search = Search {
        n,
        adj,
        slots,
        degree,
        perm: Vec::with_capacity(n),
        used: 0,
        cur: Vec::with_capacity(n),
        best: None,
    };
    search.dfs(false);
    let best = search.best.expect("at least one ordering exists");
    let mut edges = Vec::new();
    for (p, &seg) in best.iter().enumerate() {
        for i in 0..p {
            if (seg >> (p - 1 - i)) & 1 == 1 {
                edges.push((i, p));
            }
        }
    }
    let relabeled = Graph::from_edge_list(n, &edges).expect("valid relabeling");
    let mut out = vec![b'G'];
    out.extend(
        write_graph6(&relabeled)
            .expect("order within graph6 range")
            .into_bytes(),
    );
    CanonicalCode(out)
}
