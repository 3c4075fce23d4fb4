//! Constructors for the graph families used throughout the crate.
//!
//! Labelling is fixed so that vertex numbers quoted in tests and reports are
//! reproducible: cycles and paths are numbered in order along the cycle or
//! path, and every attachment appends its new vertices after the existing
//! ones.

use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{Graph, GraphBuilder};

/// The path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall {
            family: "path",
            min: 1,
            got: 0,
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall {
            family: "complete",
            min: 1,
            got: 0,
        });
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete multipartite graph; part `i` occupies a consecutive block of
/// vertices following the blocks of parts `0..i`.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GraphError> {
    if part_sizes.is_empty() {
        return Err(GraphError::NoParts);
    }
    if let Some(index) = part_sizes.iter().position(|&s| s == 0) {
        return Err(GraphError::EmptyPart { index });
    }
    let mut part_of = Vec::new();
    for (p, &s) in part_sizes.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(p, s));
    }
    let n = part_of.len();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.push_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Adds a new vertex `n` adjacent only to `v`.
pub fn attach_leaf(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    attach_path(g, v, 1)
}

/// Adds a path on `k` new vertices `n..n+k`, the first of which is joined
/// to `v`.
pub fn attach_path(g: &Graph, v: usize, k: usize) -> Result<Graph, GraphError> {
    g.check_vertex(v)?;
    if k == 0 {
        return Err(GraphError::TooSmall {
            family: "attached path",
            min: 1,
            got: 0,
        });
    }
    let mut b = GraphBuilder::from_graph(g);
    let mut prev = v;
    for _ in 0..k {
        let w = b.add_vertex();
        b.push_edge(prev, w);
        prev = w;
    }
    Ok(b.build())
}

/// Cycle of order `g` with a pendant leaf on every cycle vertex, and a path
/// `v_1 .. v_{2t-3}` hanging from cycle vertex 0 whose odd-indexed vertices
/// carry two leaves and even-indexed vertices one leaf.
///
/// Vertex order: cycle `0..g`, the cycle leaves `g..2g` (leaf of `i` is
/// `g + i`), the path vertices, then the path leaves in path order. The
/// result has order `2g + 5t - 7`, girth `g`, and spectrum
/// `[g + 2t - 3, g + 3t - 4]`.
pub fn construction_h(g: usize, t: usize) -> Result<Graph, GraphError> {
    if g < 3 {
        return Err(GraphError::TooSmall {
            family: "construction cycle",
            min: 3,
            got: g,
        });
    }
    if t < 2 {
        return Err(GraphError::TooSmall {
            family: "construction class",
            min: 2,
            got: t,
        });
    }
    let path_len = 2 * t - 3;
    let n = 2 * g + 5 * t - 7;
    let mut b = GraphBuilder::new(n);
    for i in 0..g {
        b.push_edge(i, (i + 1) % g);
        b.push_edge(i, g + i);
    }
    let path_start = 2 * g;
    b.push_edge(0, path_start);
    for i in 1..path_len {
        b.push_edge(path_start + i - 1, path_start + i);
    }
    let mut next = path_start + path_len;
    for i in 1..=path_len {
        let leaves = if i % 2 == 1 { 2 } else { 1 };
        for _ in 0..leaves {
            b.push_edge(path_start + i - 1, next);
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(b.build())
}

/// Two vertices `0` and `1` joined by three internally disjoint paths with
/// the given numbers of edges. Internal vertices follow, arm by arm.
pub fn theta_graph(arms: [usize; 3]) -> Result<Graph, GraphError> {
    if let Some(&a) = arms.iter().find(|&&a| a == 0) {
        return Err(GraphError::TooSmall {
            family: "theta arm",
            min: 1,
            got: a,
        });
    }
    if arms.iter().filter(|&&a| a == 1).count() > 1 {
        return Err(GraphError::TooSmall {
            family: "theta arm (only one direct edge)",
            min: 2,
            got: 1,
        });
    }
    let n = 2 + arms.iter().map(|a| a - 1).sum::<usize>();
    let mut b = GraphBuilder::new(n);
    let mut next = 2;
    for &len in &arms {
        let mut prev = 0;
        for _ in 0..len - 1 {
            b.push_edge(prev, next);
            prev = next;
            next += 1;
        }
        b.push_edge(prev, 1);
    }
    Ok(b.build())
}
