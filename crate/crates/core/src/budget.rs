use std::time::{Duration, Instant};

/// Limits for the exact leafage searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest host tree tried by the general leafage search. `None` means
    /// the default `2n + max_leaves`.
    pub max_host_vertices: Option<usize>,
    /// Largest leaf count tried before giving up with an interval.
    pub max_leaves: usize,
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_host_vertices: None,
            max_leaves: 16,
            node_limit: 2_000_000_000,
            time_limit: Duration::from_secs(30 * 60),
        }
    }
}

impl SearchBudget {
    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = nodes;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn with_max_host_vertices(mut self, vertices: usize) -> Self {
        self.max_host_vertices = Some(vertices);
        self
    }

    /// Host-size bound for the general search on an `n`-vertex digraph
    /// with `leaves` leaves.
    pub fn host_bound(&self, n: usize, leaves: usize) -> usize {
        self.max_host_vertices.unwrap_or(2 * n + leaves)
    }

    pub fn meter(&self) -> Meter {
        Meter::new(self.node_limit, Some(self.time_limit))
    }
}

/// Cooperative node and wall-clock counter shared by the backtracking searches.
#[derive(Debug, Clone)]
pub struct Meter {
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
    tripped: bool,
}

impl Meter {
    pub fn new(node_limit: u64, time_limit: Option<Duration>) -> Self {
        Meter {
            nodes: 0,
            node_limit,
            deadline: time_limit.map(|t| Instant::now() + t),
            tripped: false,
        }
    }

    pub fn unlimited() -> Self {
        Meter::new(u64::MAX, None)
    }

    /// Counts one search node; returns false once a limit has been hit.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.tripped = true;
        } else if self.nodes & 0x3fff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.tripped = true;
                }
            }
        }
        !self.tripped
    }

    pub fn exhausted(&self) -> bool {
        self.tripped
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
