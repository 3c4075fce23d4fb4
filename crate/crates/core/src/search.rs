//! Isomorph-free generation under degree and girth constraints, and the
//! girth/class table built on top of it.
//!
//! Graphs of order `n` are grown one vertex at a time from `K_1`. Every
//! generated graph `G'` has a unique parent class: remove the canonical
//! deletion vertex (the lowest-degree non-cut vertex, ties broken by the
//! canonical labelling) and canonicalise. A child is kept only when that
//! parent is the node it was grown from, and children of one node are
//! deduplicated by canonical form. The tree is therefore free of
//! isomorphic repeats without any global table, and its subtrees can be
//! explored independently.
//!
//! Two prunes keep intermediate levels small:
//!
//! * the new vertex's neighbours must be pairwise at distance at least
//!   `min_girth - 2`, so no short cycle is ever created;
//! * every intermediate graph is an induced subgraph of the target, so each
//!   vertex short of the required degree needs that many future
//!   neighbours, and vertices within distance `(min_girth - 3) / 2` of a
//!   common vertex cannot share a future neighbour.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, canonical_graph, MAX_CANON_ORDER};
use crate::error::SearchError;
use crate::families::cycle_graph;
use crate::graph::{Graph, GraphBuilder};
use crate::graph6;
use crate::mis::{mis_stats, Spectrum, DEFAULT_MIS_CAP};
use crate::structure::{cut_vertices, distances_from, girth, is_connected, min_degree, Girth};
use crate::vertex_set::VertexSet;

/// Which graphs to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GenSpec {
    /// Exact order.
    pub n: usize,
    pub min_degree: usize,
    /// No cycle shorter than this; 3 imposes nothing.
    pub min_girth: usize,
    /// Whether forests (girth `Acyclic`) are allowed in the output.
    pub allow_acyclic: bool,
    pub connected_only: bool,
}

impl GenSpec {
    pub fn new(n: usize) -> Self {
        GenSpec {
            n,
            min_degree: 0,
            min_girth: 3,
            allow_acyclic: true,
            connected_only: false,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.n == 0 {
            return Err(SearchError::BadSpec("order must be at least 1"));
        }
        if self.min_girth < 3 {
            return Err(SearchError::BadSpec("minimum girth must be at least 3"));
        }
        if self.n > MAX_CANON_ORDER {
            return Err(SearchError::TooLarge(self.n));
        }
        Ok(())
    }

    /// True when `g` satisfies every constraint of the spec.
    pub fn admits(&self, g: &Graph) -> bool {
        let gi = girth(g);
        g.order() == self.n
            && min_degree(g).unwrap_or(0) >= self.min_degree
            && gi.at_least(self.min_girth)
            && (self.allow_acyclic || gi != Girth::Acyclic)
            && (!self.connected_only || is_connected(g))
    }
}

/// Resource limits for searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of accepted tree nodes per generation run.
    pub max_nodes: u64,
    /// Maximum number of maximal independent sets per classified graph.
    pub max_mis: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 2_000_000_000,
            max_mis: DEFAULT_MIS_CAP,
        }
    }
}

/// One node of the generation tree: a canonically labelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenNode {
    pub graph: Graph,
}

/// The augmentation tree for one [`GenSpec`].
#[derive(Clone, Debug)]
pub struct GenerationTree {
    spec: GenSpec,
}

impl GenerationTree {
    pub fn new(spec: GenSpec) -> Result<Self, SearchError> {
        spec.validate()?;
        Ok(GenerationTree { spec })
    }

    pub fn spec(&self) -> &GenSpec {
        &self.spec
    }

    pub fn root(&self) -> GenNode {
        GenNode { graph: Graph::empty(1) }
    }

    /// Whether the node is at the target order.
    pub fn is_complete(&self, node: &GenNode) -> bool {
        node.graph.order() == self.spec.n
    }

    /// Whether a complete node is emitted (the girth, degree and
    /// connectivity conditions not already guaranteed by the tree).
    pub fn emits(&self, node: &GenNode) -> bool {
        self.is_complete(node) && self.spec.admits(&node.graph)
    }

    /// Children of `node`, in increasing canonical order.
    pub fn children(&self, node: &GenNode) -> Result<Vec<GenNode>, SearchError> {
        let g = &node.graph;
        let k = g.order();
        if k >= self.spec.n {
            return Ok(Vec::new());
        }
        let dist: Vec<Vec<Option<usize>>> = g.vertices().map(|v| distances_from(g, v)).collect();
        let min_sep = self.spec.min_girth - 2;
        let mut out: BTreeMap<Vec<(usize, usize)>, Graph> = BTreeMap::new();
        let mut err = None;
        for_each_separated_subset(k, &dist, min_sep, &mut |subset| {
            if err.is_some() || (self.spec.connected_only && subset.is_empty()) {
                return;
            }
            match self.accept_child(g, subset) {
                Ok(Some(child)) => {
                    let key: Vec<(usize, usize)> = child.edges().collect();
                    out.entry(key).or_insert(child);
                }
                Ok(None) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(out.into_values().map(|graph| GenNode { graph }).collect())
    }

    fn accept_child(&self, g: &Graph, subset: &[usize]) -> Result<Option<Graph>, SearchError> {
        let k = g.order();
        let mut b = GraphBuilder::from_graph(g);
        let v = b.add_vertex();
        for &u in subset {
            b.push_edge(u, v);
        }
        let child = b.build();
        if !self.extendable(&child) {
            return Ok(None);
        }
        let eligible = if self.spec.connected_only {
            cut_vertices(&child).complement()
        } else {
            VertexSet::full(k + 1)
        };
        let least = eligible
            .iter()
            .map(|w| child.degree(w))
            .min()
            .expect("some vertex is not a cut vertex");
        if child.degree(v) != least {
            return Ok(None);
        }
        let cf = canonical_form(&child)?;
        let deletion = cf
            .labeling
            .iter()
            .copied()
            .rfind(|&w| eligible.contains(w) && child.degree(w) == least)
            .expect("eligible vertex exists");
        if deletion != v {
            let mut keep = VertexSet::full(k + 1);
            keep.remove(deletion);
            let (parent, _) = child.induced_subgraph(&keep).expect("same order");
            if canonical_graph(&parent)? != *g {
                return Ok(None);
            }
        }
        Ok(Some(cf.graph))
    }

    /// Degree-deficit prune; see the module documentation.
    fn extendable(&self, g: &Graph) -> bool {
        let remaining = self.spec.n - g.order();
        let need = self.spec.min_degree;
        let deficit: Vec<usize> = g.vertices().map(|v| need.saturating_sub(g.degree(v))).collect();
        if deficit.iter().any(|&d| d > remaining) {
            return false;
        }
        let radius = (self.spec.min_girth - 3) / 2;
        if radius == 0 || deficit.iter().all(|&d| d == 0) {
            return true;
        }
        g.vertices().all(|x| {
            let dist = distances_from(g, x);
            let in_ball: usize = dist
                .iter()
                .zip(&deficit)
                .filter(|(d, _)| d.is_some_and(|d| d <= radius))
                .map(|(_, &f)| f)
                .sum();
            in_ball <= remaining
        })
    }

    /// Depth-first walk of the subtree below `node`, calling `emit` on every
    /// emitted graph in tree order. Returns the number of accepted nodes.
    pub fn walk<F>(&self, node: &GenNode, max_nodes: u64, emit: &mut F) -> Result<u64, SearchError>
    where
        F: FnMut(&Graph),
    {
        let mut visited = 0u64;
        let mut stack: Vec<alloc::vec::IntoIter<GenNode>> = Vec::new();
        let mut current = Some(node.clone());
        loop {
            if let Some(n) = current.take() {
                visited += 1;
                if visited > max_nodes {
                    return Err(SearchError::NodeBudgetExceeded { budget: max_nodes });
                }
                if self.is_complete(&n) {
                    if self.emits(&n) {
                        emit(&n.graph);
                    }
                } else {
                    stack.push(self.children(&n)?.into_iter());
                }
            }
            match stack.last_mut() {
                None => return Ok(visited),
                Some(it) => match it.next() {
                    Some(next) => current = Some(next),
                    None => {
                        stack.pop();
                    }
                },
            }
        }
    }

    /// Splits the tree into independent subtrees: breadth-first expansion
    /// until at least `min_tasks` frontier nodes exist or the frontier
    /// consists of complete nodes. Concatenating the walks of the returned
    /// tasks, in order, reproduces a full walk's output, and their node
    /// counts plus `expanded` equal the full walk's count.
    pub fn partition(&self, min_tasks: usize) -> Result<Partition, SearchError> {
        let mut frontier = alloc::vec![self.root()];
        let mut expanded = 0u64;
        while frontier.len() < min_tasks && frontier.iter().any(|n| !self.is_complete(n)) {
            let mut next = Vec::new();
            for node in frontier {
                if self.is_complete(&node) {
                    next.push(node);
                } else {
                    expanded += 1;
                    next.extend(self.children(&node)?);
                }
            }
            frontier = next;
        }
        Ok(Partition {
            tasks: frontier,
            expanded,
        })
    }
}

/// Output of [`GenerationTree::partition`].
#[derive(Clone, Debug)]
pub struct Partition {
    /// Subtree roots in tree order.
    pub tasks: Vec<GenNode>,
    /// Internal nodes consumed while splitting.
    pub expanded: u64,
}

/// Calls `f` on every subset of `0..k` (in lexicographic order) whose
/// members are pairwise at distance at least `min_sep`.
fn for_each_separated_subset<F>(k: usize, dist: &[Vec<Option<usize>>], min_sep: usize, f: &mut F)
where
    F: FnMut(&[usize]),
{
    fn rec<F: FnMut(&[usize])>(
        start: usize,
        k: usize,
        dist: &[Vec<Option<usize>>],
        min_sep: usize,
        chosen: &mut Vec<usize>,
        f: &mut F,
    ) {
        f(chosen);
        for v in start..k {
            if chosen.iter().all(|&u| dist[u][v].is_none_or(|d| d >= min_sep)) {
                chosen.push(v);
                rec(v + 1, k, dist, min_sep, chosen, f);
                chosen.pop();
            }
        }
    }
    rec(0, k, dist, min_sep, &mut Vec::new(), f);
}

/// Every graph admitted by `spec`, one per isomorphism class, canonically
/// labelled, in deterministic tree order.
pub fn generate_graphs(spec: &GenSpec, limits: &SearchLimits) -> Result<Vec<Graph>, SearchError> {
    let tree = GenerationTree::new(*spec)?;
    let mut out = Vec::new();
    tree.walk(&tree.root(), limits.max_nodes, &mut |g| out.push(g.clone()))?;
    Ok(out)
}

/// An entry of the girth table: what is known about leafless graphs of a given girth
/// with exactly `t` sizes of maximal independent sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableEntry {
    /// The cycle of this order is the only such graph.
    UniqueCycle(usize),
    /// There are none.
    Empty,
    /// At least one exists and it is not a cycle.
    Exists,
    /// The girth lies outside the charted columns for this `t`.
    Uncharted,
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableEntry::UniqueCycle(n) => write!(f, "C_{n}"),
            TableEntry::Empty => f.write_str("empty"),
            TableEntry::Exists => f.write_str("exists"),
            TableEntry::Uncharted => f.write_str("uncharted"),
        }
    }
}

/// The table entry for class size `t` and girth `g`.
pub fn table_entry(t: usize, g: usize) -> TableEntry {
    use TableEntry::*;
    match t {
        0 => Uncharted,
        1 => match g {
            3..=5 => Exists,
            6 => Empty,
            7 => UniqueCycle(7),
            8.. => Empty,
            _ => Uncharted,
        },
        2 => match g {
            6 | 7 => Exists,
            8..=11 | 13 => UniqueCycle(g),
            12 | 14.. => Empty,
            _ => Uncharted,
        },
        _ => {
            let base = 6 * t;
            if g + 6 < base {
                Uncharted
            } else if g + 6 == base {
                UniqueCycle(g)
            } else if g + 5 == base {
                if t == 3 {
                    Exists
                } else {
                    Empty
                }
            } else if g < base || g == base + 1 {
                UniqueCycle(g)
            } else {
                Empty
            }
        }
    }
}

/// One classified leafless graph from a survey.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SurveyEntry {
    /// graph6 of the canonical form.
    pub graph6: String,
    pub order: usize,
    pub girth: usize,
    pub spectrum: Spectrum,
}

impl SurveyEntry {
    pub fn class_size(&self) -> usize {
        self.spectrum.class_size()
    }
}

/// Classifies one candidate graph if it is connected, leafless, of girth at
/// least `min_girth` and of order at most `n_max`. The graph is
/// re-validated, so untrusted input is fine.
pub fn survey_entry(
    g: &Graph,
    min_girth: usize,
    n_max: usize,
    limits: &SearchLimits,
) -> Result<Option<SurveyEntry>, SearchError> {
    if g.order() == 0 || g.order() > n_max || min_degree(g).unwrap_or(0) < 2 || !is_connected(g) {
        return Ok(None);
    }
    let gi = match girth(g) {
        Girth::Cycle(c) if c >= min_girth => c,
        _ => return Ok(None),
    };
    let canon = canonical_graph(g)?;
    let stats = mis_stats(&canon, limits.max_mis)?;
    Ok(Some(SurveyEntry {
        graph6: graph6::encode(&canon),
        order: canon.order(),
        girth: gi,
        spectrum: stats.spectrum,
    }))
}

/// Orders in `min_girth..=n_max` at which leafless graphs of girth at least
/// `min_girth` can exist, as generation specs.
pub fn survey_specs(min_girth: usize, n_max: usize) -> Vec<GenSpec> {
    (min_girth.max(3)..=n_max)
        .map(|n| GenSpec {
            n,
            min_degree: 2,
            min_girth,
            allow_acyclic: false,
            connected_only: true,
        })
        .collect()
}

/// All connected leafless graphs of girth at least `min_girth` and order at
/// most `n_max`, classified, sorted by (order, girth, graph6).
pub fn survey(min_girth: usize, n_max: usize, limits: &SearchLimits) -> Result<Vec<SurveyEntry>, SearchError> {
    let mut out = Vec::new();
    for spec in survey_specs(min_girth, n_max) {
        for g in generate_graphs(&spec, limits)? {
            if let Some(e) = survey_entry(&g, min_girth, n_max, limits)? {
                out.push(e);
            }
        }
    }
    sort_survey(&mut out);
    Ok(out)
}

/// Classifies an external stream of graphs; duplicates up to isomorphism
/// are collapsed.
pub fn survey_from<I>(
    graphs: I,
    min_girth: usize,
    n_max: usize,
    limits: &SearchLimits,
) -> Result<Vec<SurveyEntry>, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut out = Vec::new();
    for g in graphs {
        if let Some(e) = survey_entry(&g, min_girth, n_max, limits)? {
            out.push(e);
        }
    }
    sort_survey(&mut out);
    Ok(out)
}

pub fn sort_survey(entries: &mut Vec<SurveyEntry>) {
    entries.sort_by(|a, b| (a.order, a.girth, &a.graph6).cmp(&(b.order, b.girth, &b.graph6)));
    entries.dedup_by(|a, b| a.graph6 == b.graph6);
}

/// Search evidence for one table cell at bounded order.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TableCellReport {
    pub t: usize,
    pub girth: usize,
    pub n_max: usize,
    /// Canonical graph6 strings of the leafless members of `M_t` with
    /// exactly this girth, sorted by order then string.
    pub found: Vec<String>,
    #[cfg_attr(feature = "serde", serde(serialize_with = "crate::serde_support::display"))]
    pub expected: TableEntry,
    /// Leafless graphs of this girth examined.
    pub examined: usize,
    /// False only when the search contradicts a `UniqueCycle` or `Empty`
    /// entry.
    pub consistent: bool,
}

/// Canonical graph6 of the cycle of order `n`.
pub fn canonical_cycle_graph6(n: usize) -> String {
    let c = cycle_graph(n).expect("n >= 3");
    graph6::encode(&canonical_graph(&c).expect("small cycle"))
}

/// Builds the cell report for `(t, girth)` from survey entries.
pub fn table_cell_from_survey(entries: &[SurveyEntry], t: usize, girth: usize, n_max: usize) -> TableCellReport {
    let at_girth: Vec<&SurveyEntry> = entries
        .iter()
        .filter(|e| e.girth == girth && e.order <= n_max)
        .collect();
    let found: Vec<String> = at_girth
        .iter()
        .filter(|e| e.class_size() == t)
        .map(|e| e.graph6.clone())
        .collect();
    let expected = table_entry(t, girth);
    let consistent = match expected {
        TableEntry::UniqueCycle(c) => {
            let cycle = canonical_cycle_graph6(c);
            if c <= n_max {
                found == [cycle]
            } else {
                found.is_empty()
            }
        }
        TableEntry::Empty => found.is_empty(),
        TableEntry::Exists | TableEntry::Uncharted => true,
    };
    TableCellReport {
        t,
        girth,
        n_max,
        found,
        expected,
        examined: at_girth.len(),
        consistent,
    }
}

/// Checks one table cell using the internal generator.
pub fn verify_table_cell(
    t: usize,
    girth: usize,
    n_max: usize,
    limits: &SearchLimits,
) -> Result<TableCellReport, SearchError> {
    if girth < 3 || n_max < girth {
        return Err(SearchError::BadSpec("need girth >= 3 and n_max >= girth"));
    }
    let entries = survey(girth, n_max, limits)?;
    Ok(table_cell_from_survey(&entries, t, girth, n_max))
}

/// Checks one table cell against an external stream of graphs.
pub fn verify_table_cell_from<I>(
    t: usize,
    girth: usize,
    n_max: usize,
    graphs: I,
    limits: &SearchLimits,
) -> Result<TableCellReport, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    if girth < 3 || n_max < girth {
        return Err(SearchError::BadSpec("need girth >= 3 and n_max >= girth"));
    }
    let entries = survey_from(graphs, girth, n_max, limits)?;
    Ok(table_cell_from_survey(&entries, t, girth, n_max))
}

/// Leafless members of `M_t` with exactly this girth that are not cycles.
pub fn delta_candidates(entries: &[SurveyEntry], t: usize, girth: usize) -> Vec<String> {
    let cycles: BTreeSet<String> = entries
        .iter()
        .map(|e| e.order)
        .filter(|&n| n >= 3)
        .map(canonical_cycle_graph6)
        .collect();
    entries
        .iter()
        .filter(|e| e.girth == girth && e.class_size() == t && !cycles.contains(&e.graph6))
        .map(|e| e.graph6.clone())
        .collect()
}

/// Exploratory search for non-cycle witnesses of an `Exists` cell. An empty
/// result says nothing about larger orders.
pub fn hunt_delta(t: usize, girth: usize, n_max: usize, limits: &SearchLimits) -> Result<Vec<String>, SearchError> {
    if girth < 3 || n_max < girth {
        return Err(SearchError::BadSpec("need girth >= 3 and n_max >= girth"));
    }
    let entries = survey(girth, n_max, limits)?;
    Ok(delta_candidates(&entries, t, girth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::*;

    fn connected_leafless(n: usize, g: usize) -> GenSpec {
        GenSpec {
            n,
            min_degree: 2,
            min_girth: g,
            allow_acyclic: true,
            connected_only: true,
        }
    }

    #[test]
    fn four_vertex_leafless() {
        let gs = generate_graphs(&connected_leafless(4, 3), &SearchLimits::default()).unwrap();
        let mut sizes: Vec<usize> = gs.iter().map(Graph::size).collect();
        sizes.sort();
        assert_eq!(sizes, [4, 5, 6]);
    }

    #[test]
    fn only_c7_at_girth_seven() {
        let gs = generate_graphs(&connected_leafless(7, 7), &SearchLimits::default()).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(is_isomorphic(&gs[0], &cycle_graph(7).unwrap()).unwrap());
    }

    #[test]
    fn ten_vertex_girth_seven() {
        let gs = generate_graphs(&connected_leafless(10, 7), &SearchLimits::default()).unwrap();
        assert_eq!(gs.len(), 2);
        let c10 = cycle_graph(10).unwrap();
        let theta = theta_graph([3, 4, 4]).unwrap();
        assert!(gs.iter().any(|g| is_isomorphic(g, &c10).unwrap()));
        assert!(gs.iter().any(|g| is_isomorphic(g, &theta).unwrap()));
    }

    #[test]
    fn budget_is_enforced() {
        let limits = SearchLimits {
            max_nodes: 5,
            ..SearchLimits::default()
        };
        assert_eq!(
            generate_graphs(&GenSpec::new(6), &limits),
            Err(SearchError::NodeBudgetExceeded { budget: 5 })
        );
    }

    #[test]
    fn bad_specs() {
        assert!(GenerationTree::new(GenSpec::new(0)).is_err());
        let mut s = GenSpec::new(4);
        s.min_girth = 2;
        assert!(GenerationTree::new(s).is_err());
    }

    #[test]
    fn partition_concatenates_to_full_walk() {
        let spec = GenSpec {
            n: 7,
            min_degree: 1,
            min_girth: 4,
            allow_acyclic: true,
            connected_only: true,
        };
        let tree = GenerationTree::new(spec).unwrap();
        let full = generate_graphs(&spec, &SearchLimits::default()).unwrap();
        let whole = tree.walk(&tree.root(), u64::MAX, &mut |_| {}).unwrap();
        let parts = tree.partition(8).unwrap();
        assert!(parts.tasks.len() >= 8);
        let mut joined = Vec::new();
        let mut nodes = parts.expanded;
        for task in &parts.tasks {
            nodes += tree.walk(task, u64::MAX, &mut |g| joined.push(g.clone())).unwrap();
        }
        assert_eq!(full, joined);
        assert_eq!(nodes, whole);
    }

    #[test]
    fn table_rows() {
        use TableEntry::*;
        assert_eq!(table_entry(1, 5), Exists);
        assert_eq!(table_entry(1, 6), Empty);
        assert_eq!(table_entry(1, 7), UniqueCycle(7));
        assert_eq!(table_entry(1, 9), Empty);
        assert_eq!(table_entry(2, 12), Empty);
        assert_eq!(table_entry(2, 13), UniqueCycle(13));
        assert_eq!(table_entry(2, 14), Empty);
        assert_eq!(table_entry(3, 12), UniqueCycle(12));
        assert_eq!(table_entry(3, 13), Exists);
        assert_eq!(table_entry(3, 18), Empty);
        assert_eq!(table_entry(3, 19), UniqueCycle(19));
        assert_eq!(table_entry(4, 18), UniqueCycle(18));
        assert_eq!(table_entry(4, 19), Empty);
        assert_eq!(table_entry(4, 23), UniqueCycle(23));
        assert_eq!(table_entry(4, 24), Empty);
        assert_eq!(table_entry(4, 25), UniqueCycle(25));
        assert_eq!(table_entry(5, 32), Empty);
        assert_eq!(table_entry(5, 23), Uncharted);
        assert_eq!(table_entry(2, 5), Uncharted);
    }

    #[test]
    fn small_cells() {
        let limits = SearchLimits::default();
        let r = verify_table_cell(1, 7, 10, &limits).unwrap();
        assert_eq!(r.found, [canonical_cycle_graph6(7)]);
        assert!(r.consistent);
        let r = verify_table_cell(2, 8, 10, &limits).unwrap();
        assert_eq!(r.found, [canonical_cycle_graph6(8)]);
        assert!(r.consistent);
    }

    #[test]
    fn complete_graphs_are_delta_witnesses() {
        let found = hunt_delta(1, 3, 5, &SearchLimits::default()).unwrap();
        let k4 = graph6::encode(&canonical_graph(&complete_graph(4).unwrap()).unwrap());
        assert!(found.contains(&k4));
        assert!(!found.contains(&canonical_cycle_graph6(3)));
    }
}
