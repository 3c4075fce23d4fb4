//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree individualises one vertex of the first smallest
//! non-singleton cell at each level and refines to an equitable partition.
//! Every leaf is scored by the sequence of refinement traces along its path
//! followed by the relabelled adjacency matrix; the canonical form is the
//! leaf with the greatest score. Subtrees are cut when their trace prefix is
//! already worse than the best leaf, and sibling branches in the same orbit
//! of the discovered automorphisms (those fixing the current prefix) are
//! skipped.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::SearchError;
use crate::graph::{Graph, GraphBuilder};

pub const MAX_CANON_ORDER: usize = 64;

/// A canonical relabelling of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// The graph relabelled so that vertex `i` is `labeling[i]`.
    pub graph: Graph,
    /// Automorphism generators found during the search, as vertex maps of
    /// the original graph.
    pub automorphisms: Vec<Vec<usize>>,
}

/// Adjacency rows as 64-bit masks; vertex `i` is bit `i`.
type Rows = Vec<u64>;

fn rows_of(g: &Graph) -> Rows {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect()
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines `cells` to the coarsest equitable partition below it, appending
/// a description of every split to `trace`.
fn refine(rows: &Rows, cells: &mut Vec<Vec<usize>>, trace: &mut Vec<u32>) {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = mask_of(&cells[si]);
            for ci in 0..cells.len() {
                if cells[ci].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[ci]
                    .iter()
                    .map(|&v| ((rows[v] & splitter).count_ones(), v))
                    .collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                trace.push(si as u32);
                trace.push(ci as u32);
                for (count, v) in keyed {
                    if last != Some(count) {
                        pieces.push(Vec::new());
                        trace.push(count);
                        last = Some(count);
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                for p in &pieces {
                    trace.push(p.len() as u32);
                }
                cells.splice(ci..=ci, pieces);
                continue 'restart;
            }
        }
        break;
    }
    trace.push(u32::MAX);
    trace.push(cells.len() as u32);
}

fn certificate(rows: &Rows, perm: &[usize]) -> Rows {
    perm.iter()
        .map(|&u| {
            perm.iter()
                .enumerate()
                .fold(0u64, |m, (j, &w)| m | ((rows[u] >> w & 1) << j))
        })
        .collect()
}

struct Leaf {
    traces: Vec<Vec<u32>>,
    cert: Rows,
    perm: Vec<usize>,
}

fn cmp_prefix(a: &[Vec<u32>], b: &[Vec<u32>]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

struct Search<'a> {
    rows: &'a Rows,
    n: usize,
    best: Option<Leaf>,
    first: Option<(Rows, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<usize>>, traces: &mut Vec<Vec<u32>>, prefix: &mut Vec<usize>) {
        if let Some(best) = &self.best {
            let depth = traces.len().min(best.traces.len());
            if cmp_prefix(&traces[..depth], &best.traces[..depth]) == Ordering::Less {
                return;
            }
        }
        if cells.len() == self.n {
            self.leaf(cells, traces);
            return;
        }
        let min_len = cells
            .iter()
            .map(Vec::len)
            .filter(|&l| l > 1)
            .min()
            .expect("partition is not discrete");
        let target = cells.iter().position(|c| c.len() == min_len).unwrap();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if explored.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let mut trace = Vec::new();
            refine(self.rows, &mut child, &mut trace);
            traces.push(trace);
            prefix.push(v);
            self.visit(child, traces, prefix);
            prefix.pop();
            traces.pop();
        }
    }

    fn leaf(&mut self, cells: Vec<Vec<usize>>, traces: &[Vec<u32>]) {
        let perm: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let cert = certificate(self.rows, &perm);
        match &self.first {
            None => self.first = Some((cert.clone(), perm.clone())),
            Some((first_cert, first_perm)) if *first_cert == cert => {
                let auto = compose_automorphism(first_perm, &perm);
                self.record(auto);
            }
            Some(_) => {}
        }
        let ordering = match &self.best {
            None => Ordering::Greater,
            Some(best) => (traces, &cert).cmp(&(&best.traces[..], &best.cert)),
        };
        match ordering {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    traces: traces.to_vec(),
                    cert,
                    perm,
                })
            }
            Ordering::Equal => {
                let best_perm = &self.best.as_ref().unwrap().perm;
                let auto = compose_automorphism(best_perm, &perm);
                self.record(auto);
            }
            Ordering::Less => {}
        }
    }

    fn record(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &j)| i != j) && !self.automorphisms.contains(&auto) {
            self.automorphisms.push(auto);
        }
    }

    /// Whether some product of known automorphisms fixing `prefix`
    /// pointwise maps `u` to `v`.
    fn same_orbit(&self, prefix: &[usize], u: usize, v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn compose_automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut auto = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        auto[a] = b;
    }
    auto
}

/// Computes the canonical form of `g`. Isomorphic graphs, and only those,
/// receive identical `graph` fields.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SearchError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(SearchError::TooLarge(n));
    }
    let rows = rows_of(g);
    if n == 0 {
        return Ok(CanonicalForm {
            labeling: Vec::new(),
            graph: g.clone(),
            automorphisms: Vec::new(),
        });
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    let mut trace = Vec::new();
    refine(&rows, &mut cells, &mut trace);
    let mut search = Search {
        rows: &rows,
        n,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    search.visit(cells, &mut vec![trace], &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    let mut b = GraphBuilder::new(n);
    for (i, row) in best.cert.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                b.push_edge(i, j);
            }
        }
    }
    Ok(CanonicalForm {
        labeling: best.perm,
        graph: b.build(),
        automorphisms: search.automorphisms,
    })
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, SearchError> {
    canonical_form(g).map(|c| c.graph)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, SearchError> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_graph(a)? == canonical_graph(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn relabelled_cycles_agree() {
        let c = cycle_graph(9).unwrap();
        let p = c.relabel(&[3, 8, 1, 0, 5, 7, 2, 6, 4]).unwrap();
        assert_eq!(canonical_graph(&c).unwrap(), canonical_graph(&p).unwrap());
    }

    #[test]
    fn non_isomorphic_pairs_differ() {
        // C_6 against two disjoint triangles: same degree sequence.
        let c6 = cycle_graph(6).unwrap();
        let tri = cycle_graph(3).unwrap();
        let two = tri.disjoint_union(&tri);
        assert!(!is_isomorphic(&c6, &two).unwrap());
        assert!(is_isomorphic(&complete_multipartite(&[2, 2]).unwrap(), &cycle_graph(4).unwrap()).unwrap());
    }

    #[test]
    fn labeling_reproduces_graph() {
        let g = construction_h(4, 3).unwrap();
        let cf = canonical_form(&g).unwrap();
        for (i, &u) in cf.labeling.iter().enumerate() {
            for (j, &v) in cf.labeling.iter().enumerate() {
                assert_eq!(cf.graph.has_edge(i, j), g.has_edge(u, v));
            }
        }
        for auto in &cf.automorphisms {
            assert_eq!(g.relabel(auto).unwrap(), g);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        // Large symmetric groups exercise orbit pruning.
        let k = complete_graph(12).unwrap();
        assert_eq!(canonical_graph(&k).unwrap(), k);
        let star = complete_multipartite(&[1, 14]).unwrap();
        canonical_graph(&star).unwrap();
        let e = Graph::empty(20);
        assert_eq!(canonical_graph(&e).unwrap(), e);
    }

    #[test]
    fn rejects_large_graphs() {
        assert_eq!(canonical_form(&Graph::empty(65)), Err(SearchError::TooLarge(65)));
    }
}
