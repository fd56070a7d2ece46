//! Graphs shared by the benchmarks.

use domforge_core::Graph;

/// Path spine of `spine` vertices, each carrying `legs` pendant leaves.
pub fn caterpillar(spine: usize, legs: usize) -> Graph {
    Graph::path(spine)
        .attach_leaves(&vec![legs; spine])
        .expect("counts match the spine")
}

/// `rows x cols` grid. With both sides at least two there are no nested
/// closed neighborhoods, so `compute` falls back to subset enumeration.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edge_list(rows * cols, &edges).expect("grid edges are valid")
}

/// Cycle with a pendant leaf on every other vertex: not a forest, but every
/// leaf gives a nested pair, so the recurrence carries it.
pub fn sun(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Graph::cycle(n).edges().collect();
    let mut next = n;
    for v in (0..n).step_by(2) {
        edges.push((v, next));
        next += 1;
    }
    Graph::from_edge_list(next, &edges).expect("sun edges are valid")
}
