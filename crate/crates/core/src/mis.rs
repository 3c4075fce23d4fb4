//! Maximal independent sets, independence spectra and class membership.
//!
//! Two enumerators live here. [`enumerate_mis`] streams every maximal
//! independent set in lexicographic order of its sorted members.
//! [`mis_stats`] runs a pivoting Bron-Kerbosch search over the complement
//! graph and keeps only cardinalities, which is what spectra need.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::MisError;
use crate::graph::Graph;
use crate::structure::{girth, min_degree, Girth};
use crate::vertex_set::VertexSet;

/// Default hard cap on the number of maximal independent sets visited.
pub const DEFAULT_MIS_CAP: u64 = 100_000_000;

/// The set of cardinalities of the maximal independent sets of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Spectrum {
    sizes: BTreeSet<usize>,
}

impl Spectrum {
    /// Builds a spectrum from explicit sizes; `None` if `sizes` is empty.
    pub fn from_sizes<I: IntoIterator<Item = usize>>(sizes: I) -> Option<Self> {
        let sizes: BTreeSet<usize> = sizes.into_iter().collect();
        (!sizes.is_empty()).then_some(Spectrum { sizes })
    }

    /// The interval `[p, q]`; `None` if `p > q`.
    pub fn interval(p: usize, q: usize) -> Option<Self> {
        Self::from_sizes(p..=q)
    }

    /// Number of distinct sizes: the `t` for which the graph is in `M_t`.
    pub fn class_size(&self) -> usize {
        self.sizes.len()
    }

    /// Independent domination number.
    pub fn min(&self) -> usize {
        *self.sizes.first().expect("spectra are nonempty")
    }

    /// Independence number.
    pub fn max(&self) -> usize {
        *self.sizes.last().expect("spectra are nonempty")
    }

    pub fn contains(&self, size: usize) -> bool {
        self.sizes.contains(&size)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.sizes.iter().copied()
    }

    /// True when the sizes form a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.max() - self.min() + 1 == self.sizes.len()
    }

    /// `{a + b : a in self, b in other}`, the spectrum of a disjoint union.
    pub fn sumset(&self, other: &Spectrum) -> Spectrum {
        let sizes = self.iter().flat_map(|a| other.iter().map(move |b| a + b)).collect();
        Spectrum { sizes }
    }
}

pub fn spectrum_is_interval(s: &Spectrum) -> bool {
    s.is_interval()
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Streams the maximal independent sets of `g` in lexicographic order of
/// their sorted members.
pub fn enumerate_mis(g: &Graph) -> MisIter<'_> {
    MisIter {
        g,
        chosen: Vec::new(),
        frames: alloc::vec![Frame {
            dominated: VertexSet::empty(g.order()),
            cursor: None
        }],
    }
}

struct Frame {
    /// `N[chosen]` at this depth.
    dominated: VertexSet,
    /// Last candidate branched on from this frame.
    cursor: Option<usize>,
}

/// Depth-first search over independent sets built in increasing vertex
/// order. A branch is abandoned as soon as some undominated vertex below the
/// newest member has no undominated neighbour above it, since nothing added
/// later could dominate it.
pub struct MisIter<'g> {
    g: &'g Graph,
    chosen: Vec<usize>,
    frames: Vec<Frame>,
}

impl MisIter<'_> {
    fn pop(&mut self) {
        self.frames.pop();
        self.chosen.pop();
    }

    fn can_still_dominate(&self, dominated: &VertexSet, newest: usize) -> bool {
        let free = dominated.complement();
        free.iter()
            .take_while(|&x| x < newest)
            .all(|x| self.g.neighbors(x).intersection(&free).has_member_above(newest))
    }
}

impl Iterator for MisIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let top = self.frames.last()?;
            let n = self.g.order();
            if top.dominated.is_full() {
                let set = VertexSet::from_vertices(n, self.chosen.iter().copied()).expect("in range");
                self.pop();
                return Some(set);
            }
            let floor = match (self.chosen.last(), top.cursor) {
                (_, Some(c)) => Some(c),
                (Some(&l), None) => Some(l),
                (None, None) => None,
            };
            let free = top.dominated.complement();
            let mut candidates = match floor {
                Some(f) => free.next_after(f),
                None => free.first(),
            };
            let mut pushed = None;
            while let Some(v) = candidates {
                let mut dominated = top.dominated.clone();
                dominated.insert(v);
                dominated.union_with(self.g.neighbors(v));
                if self.can_still_dominate(&dominated, v) {
                    pushed = Some((v, dominated));
                    break;
                }
                candidates = free.next_after(v);
            }
            match pushed {
                Some((v, dominated)) => {
                    self.frames.last_mut().unwrap().cursor = Some(v);
                    self.chosen.push(v);
                    self.frames.push(Frame {
                        dominated,
                        cursor: None,
                    });
                }
                None => self.pop(),
            }
        }
    }
}

/// Spectrum together with the exact number of maximal independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisStats {
    pub spectrum: Spectrum,
    pub count: u64,
}

/// Visits every maximal independent set once via Bron-Kerbosch with
/// Tomita pivoting on the complement graph, recording sizes only.
pub fn mis_stats(g: &Graph, cap: u64) -> Result<MisStats, MisError> {
    let n = g.order();
    let non_adjacent: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).complement();
            s.remove(v);
            s
        })
        .collect();
    let mut search = PivotSearch {
        non_adjacent: &non_adjacent,
        sizes: BTreeSet::new(),
        count: 0,
        cap,
    };
    search.expand(0, VertexSet::full(n), VertexSet::empty(n))?;
    Ok(MisStats {
        spectrum: Spectrum { sizes: search.sizes },
        count: search.count,
    })
}

struct PivotSearch<'a> {
    non_adjacent: &'a [VertexSet],
    sizes: BTreeSet<usize>,
    count: u64,
    cap: u64,
}

impl PivotSearch<'_> {
    fn expand(&mut self, depth: usize, mut cand: VertexSet, mut excl: VertexSet) -> Result<(), MisError> {
        if cand.is_empty() {
            if excl.is_empty() {
                if self.count >= self.cap {
                    return Err(MisError::CapExceeded { cap: self.cap });
                }
                self.count += 1;
                self.sizes.insert(depth);
            }
            return Ok(());
        }
        let pivot = cand
            .iter()
            .chain(excl.iter())
            .max_by_key(|&u| (cand.intersection_len(&self.non_adjacent[u]), core::cmp::Reverse(u)))
            .expect("candidate set is nonempty");
        let branch = cand.difference(&self.non_adjacent[pivot]);
        for v in &branch {
            let compatible = &self.non_adjacent[v];
            self.expand(depth + 1, cand.intersection(compatible), excl.intersection(compatible))?;
            cand.remove(v);
            excl.insert(v);
        }
        Ok(())
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum, MisError> {
    mis_stats(g, DEFAULT_MIS_CAP).map(|s| s.spectrum)
}

pub fn spectrum_with_cap(g: &Graph, cap: u64) -> Result<Spectrum, MisError> {
    mis_stats(g, cap).map(|s| s.spectrum)
}

/// Classification facts for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub order: usize,
    pub spectrum: Spectrum,
    /// `t` with `G` in `M_t`.
    pub class_size: usize,
    pub girth: Girth,
    /// `None` only for the graph on zero vertices.
    pub min_degree: Option<usize>,
    /// Minimum degree at least two.
    pub leafless: bool,
    pub mis_count: u64,
}

impl ClassReport {
    /// Membership in `M_t`.
    pub fn in_class(&self, t: usize) -> bool {
        self.class_size == t
    }

    /// Membership in the leafless subclass of `M_t`.
    pub fn in_leafless_class(&self, t: usize) -> bool {
        self.leafless && self.class_size == t
    }
}

pub fn m_class(g: &Graph) -> Result<ClassReport, MisError> {
    m_class_with_cap(g, DEFAULT_MIS_CAP)
}

pub fn m_class_with_cap(g: &Graph, cap: u64) -> Result<ClassReport, MisError> {
    let stats = mis_stats(g, cap)?;
    let min_degree = min_degree(g);
    Ok(ClassReport {
        order: g.order(),
        class_size: stats.spectrum.class_size(),
        spectrum: stats.spectrum,
        girth: girth(g),
        min_degree,
        leafless: min_degree.is_none_or(|d| d >= 2),
        mis_count: stats.count,
    })
}
