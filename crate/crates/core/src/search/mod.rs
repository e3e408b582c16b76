//! Verification, exhaustive coloring enumeration and shape search.

mod census;
mod enumerate;
mod graph;
mod minsize;
mod transport;
mod verify;

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::lattice::LatticeError;

pub use census::{find_minimal_shapes, shape_census, CensusEntry};
pub use enumerate::{count_prismatic_colorings, enumerate_prismatic_colorings};
pub use graph::{instance_graph, InstanceGraph};
pub use minsize::{min_size_with_instances, MinSizeResult};
pub use transport::{bijection_check, transport};
pub use verify::{is_debruijn_coloring, verify_cell_set, Verdict, VerdictSummary};

/// Search nodes allowed when nothing else is configured.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000_000;

/// Environment variable that overrides [`DEFAULT_NODE_LIMIT`].
pub const NODE_LIMIT_ENV: &str = "PRISMATIC_NODE_LIMIT";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("cell set is not connected")]
    Disconnected,
    #[error("image of element {index} is not connected")]
    DisconnectedImage { index: usize },
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("no shape of at most {cap} cells has the required instances")]
    NoWitness { cap: usize },
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Resource limits shared by every search in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; `0` means the machine's available parallelism.
    pub threads: usize,
    /// Upper bound on visited search nodes (shapes or partial colorings).
    pub node_limit: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { threads: 0, node_limit: DEFAULT_NODE_LIMIT }
    }
}

impl SearchConfig {
    /// Default configuration with the node limit taken from
    /// `PRISMATIC_NODE_LIMIT` when set.
    pub fn from_env() -> Result<Self, SearchError> {
        let mut cfg = SearchConfig::default();
        if let Ok(raw) = std::env::var(NODE_LIMIT_ENV) {
            cfg.node_limit =
                raw.trim().parse().map_err(|_| SearchError::BadConfig(format!("{NODE_LIMIT_ENV}={raw:?}")))?;
        }
        Ok(cfg)
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn effective_threads(&self) -> usize {
        if self.threads == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            self.threads
        }
    }
}

/// Node counter shared between worker threads.
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub(crate) fn spend(&self, nodes: u64) -> Result<(), SearchError> {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if total > self.limit {
            Err(SearchError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}
