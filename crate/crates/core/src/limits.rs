/// Size limits for the expensive stages of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group materialized from generators.
    pub group_order: usize,
    /// Largest group whose full subgroup lattice is enumerated.
    pub lattice_order: usize,
    /// Largest index for the inverse-closed transversal search.
    pub transversal_index: usize,
    /// Groups up to this order keep a dense multiplication table;
    /// above it products are evaluated along generator words.
    pub dense_table: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            group_order: 20_000,
            lattice_order: 2_000,
            transversal_index: 512,
            dense_table: 4_096,
        }
    }
}

impl Limits {
    /// Default limits, with `PERFCODE_CAP` (if set to a positive integer)
    /// applied through [`Limits::with_cap`].
    pub fn from_env() -> Self {
        let base = Self::default();
        match std::env::var("PERFCODE_CAP").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(cap) if cap > 0 => base.with_cap(cap),
            _ => base,
        }
    }

    /// Override the lattice cap; the group cap is raised to at least `cap`.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.lattice_order = cap;
        self.group_order = self.group_order.max(cap);
        self
    }
}
