//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the enumeration, girth or canonical-form code it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use spectra_core::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) with a given seed.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random spanning tree plus extra random edges: always connected.
pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.order() <= 32);
    g.vertices()
        .map(|v| g.vertices().filter(|&w| g.has_edge(v, w)).fold(0u32, |m, w| m | 1 << w))
        .collect()
}

/// Every maximal independent set, by testing all `2^n` subsets.
pub fn brute_force_mis(g: &Graph) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 26, "brute force limited to 26 vertices");
    let adj = adjacency_masks(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for s in 0..=full {
        let mut dominated = s;
        let mut independent = true;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & s != 0 {
                independent = false;
                break;
            }
            dominated |= adj[v];
        }
        if independent && dominated == full {
            out.push(s);
        }
        if s == full {
            break;
        }
    }
    out
}

pub fn mask_to_vec(m: u32) -> Vec<usize> {
    (0..32).filter(|&i| m >> i & 1 == 1).collect()
}

pub fn brute_force_spectrum(g: &Graph) -> BTreeSet<usize> {
    brute_force_mis(g)
        .into_iter()
        .map(|m| m.count_ones() as usize)
        .collect()
}

/// Girth by exhaustive search over simple cycles (depth-first from each
/// start vertex, visiting only larger vertices). `None` for forests.
pub fn brute_force_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    fn dfs(g: &Graph, start: usize, cur: usize, len: usize, seen: &mut Vec<bool>, best: &mut Option<usize>) {
        for w in g.neighbors(cur).iter() {
            if w == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if w > start && !seen[w] {
                seen[w] = true;
                dfs(g, start, w, len + 1, seen, best);
                seen[w] = false;
            }
        }
    }
    for start in 0..n {
        let mut seen = vec![false; n];
        seen[start] = true;
        dfs(g, start, start, 1, &mut seen, &mut best);
    }
    best
}

/// Girth as the shortest detour around a deleted edge, on bitmasks.
pub fn girth_by_edge_deletion(g: &Graph) -> Option<usize> {
    let adj = adjacency_masks(g);
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut seen = 1u32 << u;
        let mut frontier = 1u32 << u;
        let mut dist = 0;
        while frontier != 0 && frontier >> v & 1 == 0 {
            let mut next = 0;
            for w in mask_to_vec(frontier) {
                let mut nb = adj[w];
                if w == u {
                    nb &= !(1 << v);
                }
                if w == v {
                    nb &= !(1 << u);
                }
                next |= nb;
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            dist += 1;
        }
        if frontier >> v & 1 == 1 {
            best = Some(best.map_or(dist + 1, |b: usize| b.min(dist + 1)));
        }
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Canonical form as the lexicographically smallest sorted edge list over
/// all `n!` relabellings.
pub fn brute_force_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    assert!(n <= 8);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
            e.sort();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Integer partitions of `n` as cycle types.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of permutations of `n` points with the given cycle type.
fn class_size(n: usize, cycle_type: &[usize]) -> u128 {
    let mut denom: u128 = 1;
    let mut counts = std::collections::BTreeMap::new();
    for &c in cycle_type {
        denom *= c as u128;
        *counts.entry(c).or_insert(0usize) += 1;
    }
    for &m in counts.values() {
        denom *= factorial(m);
    }
    factorial(n) / denom
}

/// Number of isomorphism classes of graphs on `n` vertices satisfying
/// `accept`, by Burnside's lemma: average over permutations of the number
/// of accepted labelled graphs each one fixes. Graphs fixed by a
/// permutation are unions of its orbits on vertex pairs.
pub fn burnside_class_count(n: usize, accept: impl Fn(&Graph) -> bool) -> u128 {
    burnside_class_counts(n, 1, |g| vec![accept(g)])[0]
}

/// Isomorphism class counts for `k` predicates in one pass over the graphs
/// fixed by each cycle type. `verdicts` returns one answer per predicate.
pub fn burnside_class_counts(n: usize, k: usize, verdicts: impl Fn(&Graph) -> Vec<bool>) -> Vec<u128> {
    let mut totals = vec![0u128; k];
    for cycle_type in partitions(n, n) {
        let mut perm = vec![0usize; n];
        let mut start = 0;
        for &c in &cycle_type {
            for i in 0..c {
                perm[start + i] = start + (i + 1) % c;
            }
            start += c;
        }
        let mut orbit_of = std::collections::BTreeMap::new();
        let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if orbit_of.contains_key(&(u, v)) {
                    continue;
                }
                let id = orbits.len();
                let mut orbit = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    let key = (a.min(b), a.max(b));
                    if orbit_of.contains_key(&key) {
                        break;
                    }
                    orbit_of.insert(key, id);
                    orbit.push(key);
                    a = perm[a];
                    b = perm[b];
                }
                orbits.push(orbit);
            }
        }
        let mut fixed = vec![0u128; k];
        for mask in 0u64..(1u64 << orbits.len()) {
            let edges = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, o)| o.iter().copied());
            let g = Graph::from_edges(n, edges).unwrap();
            for (f, ok) in fixed.iter_mut().zip(verdicts(&g)) {
                *f += ok as u128;
            }
        }
        let weight = class_size(n, &cycle_type);
        for (t, f) in totals.iter_mut().zip(fixed) {
            *t += f * weight;
        }
    }
    totals
        .into_iter()
        .map(|t| {
            assert_eq!(t % factorial(n), 0);
            t / factorial(n)
        })
        .collect()
}

/// Connectivity by depth-first search.
pub fn brute_force_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if g.has_edge(u, w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn brute_min_degree(g: &Graph) -> usize {
    g.vertices()
        .map(|v| g.vertices().filter(|&w| g.has_edge(v, w)).count())
        .min()
        .unwrap_or(0)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}
