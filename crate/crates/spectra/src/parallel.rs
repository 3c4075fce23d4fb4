//! Multi-threaded generation and classification.
//!
//! Work is split with [`GenerationTree::partition`] into subtrees that are
//! walked independently; results are merged in task order, so output does
//! not depend on the number of workers. Node budgets are checked against
//! the total node count of each generation run, which is also independent
//! of how the tree was split.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};
use spectra_core::error::SearchError;
use spectra_core::search::{
    delta_candidates, sort_survey, survey_entry, survey_specs, table_cell_from_survey, GenSpec, GenerationTree,
    SearchLimits, SurveyEntry, TableCellReport,
};
use spectra_core::Graph;

/// Tasks per worker requested from the partitioner.
const TASKS_PER_WORKER: usize = 16;

pub struct Engine {
    pool: ThreadPool,
    workers: usize,
    limits: SearchLimits,
}

impl Engine {
    pub fn new(workers: usize, limits: SearchLimits) -> Result<Self, ThreadPoolBuildError> {
        let workers = workers.max(1);
        let pool = ThreadPoolBuilder::new().num_threads(workers).build()?;
        Ok(Engine { pool, workers, limits })
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn limits(&self) -> &SearchLimits {
        &self.limits
    }

    /// Runs `f` inside the engine's thread pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    /// Same output as [`spectra_core::search::generate_graphs`].
    pub fn generate(&self, spec: &GenSpec) -> Result<Vec<Graph>, SearchError> {
        let tree = GenerationTree::new(*spec)?;
        let parts = tree.partition(self.workers * TASKS_PER_WORKER)?;
        let max_nodes = self.limits.max_nodes;
        let walked: Vec<(u64, Vec<Graph>)> = self.install(|| {
            parts
                .tasks
                .par_iter()
                .map(|task| {
                    let mut out = Vec::new();
                    let nodes = tree.walk(task, max_nodes, &mut |g| out.push(g.clone()))?;
                    Ok((nodes, out))
                })
                .collect::<Result<_, SearchError>>()
        })?;
        let total: u64 = parts.expanded + walked.iter().map(|(n, _)| n).sum::<u64>();
        if total > max_nodes {
            return Err(SearchError::NodeBudgetExceeded { budget: max_nodes });
        }
        Ok(walked.into_iter().flat_map(|(_, g)| g).collect())
    }

    /// Same output as [`spectra_core::search::survey`]: every connected
    /// leafless graph of girth at least `min_girth` and order at most
    /// `n_max`, classified and sorted.
    pub fn survey(&self, min_girth: usize, n_max: usize) -> Result<Vec<SurveyEntry>, SearchError> {
        let limits = self.limits;
        let mut trees = Vec::new();
        let mut jobs = Vec::new();
        for spec in survey_specs(min_girth, n_max) {
            let tree = GenerationTree::new(spec)?;
            let parts = tree.partition(self.workers * TASKS_PER_WORKER)?;
            let index = trees.len();
            trees.push((tree, parts.expanded));
            jobs.extend(parts.tasks.into_iter().map(|task| (index, task)));
        }
        let walked: Vec<(usize, u64, Vec<SurveyEntry>)> = self.install(|| {
            jobs.par_iter()
                .map(|(index, task)| {
                    let tree = &trees[*index].0;
                    let mut graphs = Vec::new();
                    let nodes = tree.walk(task, limits.max_nodes, &mut |g| graphs.push(g.clone()))?;
                    let mut entries = Vec::new();
                    for g in &graphs {
                        if let Some(e) = survey_entry(g, min_girth, n_max, &limits)? {
                            entries.push(e);
                        }
                    }
                    Ok((*index, nodes, entries))
                })
                .collect::<Result<_, SearchError>>()
        })?;
        let mut nodes: Vec<u64> = trees.iter().map(|(_, expanded)| *expanded).collect();
        for (index, n, _) in &walked {
            nodes[*index] += n;
        }
        if nodes.iter().any(|&n| n > limits.max_nodes) {
            return Err(SearchError::NodeBudgetExceeded {
                budget: limits.max_nodes,
            });
        }
        let mut out: Vec<SurveyEntry> = walked.into_iter().flat_map(|(_, _, e)| e).collect();
        sort_survey(&mut out);
        Ok(out)
    }

    /// Classifies untrusted graphs; see [`spectra_core::search::survey_from`].
    pub fn survey_from(
        &self,
        graphs: &[Graph],
        min_girth: usize,
        n_max: usize,
    ) -> Result<Vec<SurveyEntry>, SearchError> {
        let limits = self.limits;
        let found: Vec<Option<SurveyEntry>> = self.install(|| {
            graphs
                .par_iter()
                .map(|g| survey_entry(g, min_girth, n_max, &limits))
                .collect::<Result<_, SearchError>>()
        })?;
        let mut out: Vec<SurveyEntry> = found.into_iter().flatten().collect();
        sort_survey(&mut out);
        Ok(out)
    }

    /// One table cell, from the internal generator or from `source`.
    pub fn table_cell(
        &self,
        t: usize,
        girth: usize,
        n_max: usize,
        source: Option<&[Graph]>,
    ) -> Result<TableCellReport, SearchError> {
        check_cell(girth, n_max)?;
        let entries = match source {
            None => self.survey(girth, n_max)?,
            Some(graphs) => self.survey_from(graphs, girth, n_max)?,
        };
        Ok(table_cell_from_survey(&entries, t, girth, n_max))
    }

    /// Non-cycle leafless members of `M_t` of exactly this girth.
    pub fn hunt_delta(&self, t: usize, girth: usize, n_max: usize) -> Result<Vec<String>, SearchError> {
        check_cell(girth, n_max)?;
        Ok(delta_candidates(&self.survey(girth, n_max)?, t, girth))
    }
}

fn check_cell(girth: usize, n_max: usize) -> Result<(), SearchError> {
    if girth < 3 || n_max < girth {
        return Err(SearchError::BadSpec("need girth >= 3 and n_max >= girth"));
    }
    Ok(())
}

/// The machine's available parallelism, or 1 when unknown.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
