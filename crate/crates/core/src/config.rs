//! Shared configuration and work budgets for the decomposition drivers.

/// Limits for branch exploration. One budget is threaded through a whole
/// decomposition run; every case split consumes from it.
#[derive(Clone, Debug)]
pub struct DecomposeConfig {
    /// Maximum number of branches (work-list items plus case splits) a run
    /// may visit before giving up with `BranchLimitExceeded`.
    pub max_branches: u64,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig { max_branches: 10_000 }
    }
}

/// A consumable branch counter derived from [`DecomposeConfig`].
#[derive(Clone, Debug)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(cfg: &DecomposeConfig) -> Self {
        Budget { remaining: cfg.max_branches }
    }

    /// Consume one unit. Returns false when the budget is exhausted.
    #[must_use]
    pub fn step(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }
}
