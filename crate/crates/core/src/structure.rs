//! Structural queries: girth, components, distances and neighbourhoods.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Cycle(usize),
    /// Forests have no cycles; ordered above every cycle length.
    Acyclic,
}

impl Girth {
    /// True when the graph has no cycle shorter than `g`.
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Cycle(c) => c >= g,
            Girth::Acyclic => true,
        }
    }

    pub fn cycle_length(self) -> Option<usize> {
        match self {
            Girth::Cycle(c) => Some(c),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(c) => write!(f, "{c}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

const UNSEEN: usize = usize::MAX;

/// BFS distances from a set of sources; `None` for unreachable vertices.
pub fn distances_from_set(g: &Graph, sources: &VertexSet) -> Vec<Option<usize>> {
    let mut dist = vec![UNSEEN; g.order()];
    let mut queue = VecDeque::new();
    for s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().map(|d| (d != UNSEEN).then_some(d)).collect()
}

/// BFS distances from a single vertex.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut s = VertexSet::empty(g.order());
    s.insert(source);
    distances_from_set(g, &s)
}

/// `d(u, A)`: length of a shortest path from `u` to a member of `A`, or
/// `None` when no member of `A` is reachable.
pub fn distance_to_set(g: &Graph, u: usize, a: &VertexSet) -> Result<Option<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_set(a)?;
    if a.is_empty() {
        return Err(GraphError::EmptyTarget);
    }
    Ok(distances_from_set(g, a)[u])
}

/// Exact girth by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = UNSEEN);
        dist[root] = 0;
        parent[root] = UNSEEN;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // Any cycle found beyond this depth is at least 2 * dist[u] + 1 long.
            if 2 * dist[u] + 1 >= best {
                break 'bfs;
            }
            for w in g.neighbors(u) {
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

/// The lexicographically smallest shortest cycle, as a vertex sequence that
/// starts at its smallest vertex and continues towards the smaller of that
/// vertex's two cycle neighbours.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let len = girth(g).cycle_length()?;
    (0..g.order()).find_map(|root| cycle_through(g, root, len))
}

/// Lexicographically smallest cycle of exactly `len` vertices through
/// `root`, with all other vertices greater than `root`.
fn cycle_through(g: &Graph, root: usize, len: usize) -> Option<Vec<usize>> {
    let dist = distances_from(g, root);
    let mut path = vec![root];
    let mut on_path = VertexSet::empty(g.order());
    on_path.insert(root);
    // Each frame remembers the last neighbour tried from that path vertex.
    let mut tried: Vec<Option<usize>> = vec![None];
    while let Some(last_tried) = tried.last().copied() {
        let cur = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(cur, root) && path[1] < path[len - 1] {
                return Some(path);
            }
            pop(&mut path, &mut on_path, &mut tried);
            continue;
        }
        let remaining_after = len - path.len();
        let next = g
            .neighbors(cur)
            .iter()
            .filter(|&w| last_tried.is_none_or(|t| w > t))
            .find(|&w| w > root && !on_path.contains(w) && dist[w].is_some_and(|d| d <= remaining_after));
        match next {
            Some(w) => {
                *tried.last_mut().unwrap() = Some(w);
                path.push(w);
                on_path.insert(w);
                tried.push(None);
            }
            None => pop(&mut path, &mut on_path, &mut tried),
        }
    }
    None
}

fn pop(path: &mut Vec<usize>, on_path: &mut VertexSet, tried: &mut Vec<Option<usize>>) {
    tried.pop();
    if let Some(v) = path.pop() {
        on_path.remove(v);
    }
}

/// Connected components, each as a vertex set, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = VertexSet::empty(n);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::empty(n);
        seen.insert(start);
        stack.push(start);
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for w in g.neighbors(u) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// `None` for the graph on zero vertices.
pub fn min_degree(g: &Graph) -> Option<usize> {
    g.vertices().map(|v| g.degree(v)).min()
}

pub fn max_degree(g: &Graph) -> Option<usize> {
    g.vertices().map(|v| g.degree(v)).max()
}

/// A leaf is a vertex of degree one.
pub fn is_leaf(g: &Graph, v: usize) -> bool {
    v < g.order() && g.degree(v) == 1
}

pub fn leaves(g: &Graph) -> VertexSet {
    VertexSet::from_vertices(g.order(), g.vertices().filter(|&v| g.degree(v) == 1)).expect("vertices are in range")
}

/// Vertices adjacent to at least one leaf.
pub fn support_vertices(g: &Graph) -> VertexSet {
    let mut s = VertexSet::empty(g.order());
    for leaf in &leaves(g) {
        s.union_with(g.neighbors(leaf));
    }
    s
}

/// `N[S]`: `S` together with every neighbour of a member of `S`.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet, GraphError> {
    g.check_set(s)?;
    let mut out = s.clone();
    for v in s {
        out.union_with(g.neighbors(v));
    }
    Ok(out)
}

/// `G - N[S]`, with the increasing map from new vertex indices back to the
/// original vertices.
pub fn remove_closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
    let closed = closed_neighborhood(g, s)?;
    g.induced_subgraph(&closed.complement())
}

/// No two members of `S` are adjacent.
pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(s)?;
    Ok(s.iter().all(|v| !g.neighbors(v).intersects(s)))
}

/// Independent and dominating.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    Ok(is_independent(g, s)? && closed_neighborhood(g, s)?.is_full())
}

/// True when `s` induces a path (a single vertex counts).
pub fn induces_path(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    let (h, _) = g.induced_subgraph(s)?;
    let n = h.order();
    if n == 0 {
        return Ok(false);
    }
    let ends = h.vertices().filter(|&v| h.degree(v) <= 1).count();
    let ok_degrees = h.vertices().all(|v| h.degree(v) <= 2);
    Ok(is_connected(&h) && ok_degrees && h.size() + 1 == n && (n == 1 || ends == 2))
}

/// Cut vertices (articulation points), by the iterative low-link method.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut out = VertexSet::empty(n);
    let mut time = 0;
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, last neighbour tried)
        let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(root, UNSEEN, None)];
        while let Some(&mut (u, parent, ref mut last)) = stack.last_mut() {
            let next = match *last {
                None => g.neighbors(u).first(),
                Some(l) => g.neighbors(u).next_after(l),
            };
            match next {
                Some(w) => {
                    *last = Some(w);
                    if disc[w] == UNSEEN {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, None));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                }
                None => {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            out.insert(parent);
                        }
                    }
                }
            }
        }
        if root_children > 1 {
            out.insert(root);
        }
    }
    out
}
