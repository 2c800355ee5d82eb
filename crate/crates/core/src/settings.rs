use serde::{Deserialize, Serialize};

/// Caps on every exhaustive search. Exceeding one is reported as
/// `budget-exceeded`, never as a guessed answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Maps visited by a single enumeration or homotopy search.
    pub max_maps: usize,
    /// Open sets visited while looking for maximal admissible opens.
    pub max_opens: usize,
    /// Pairs of closed sets examined by the exhaustive normality check.
    pub max_normal_pairs: usize,
    /// Size of any constructed space (products, powers, fat wedges).
    pub max_points: usize,
    /// Branch-and-bound nodes in the minimum set cover.
    pub max_cover_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_maps: 5_000_000,
            max_opens: 200_000,
            max_normal_pairs: 1 << 22,
            max_points: 4096,
            max_cover_nodes: 5_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Settings {
    pub budget: Budget,
    /// Reduce domains and codomains to their cores before homotopy searches.
    pub use_cores: bool,
    /// Evaluate independent candidates on the rayon pool. Ignored when the
    /// crate is built without the `parallel` feature.
    pub parallel: bool,
    /// Decide lifting problems through a graph or an order embedding by a
    /// homotopy-class search instead of enumerating every candidate lift.
    pub lift_shortcuts: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            budget: Budget::default(),
            use_cores: true,
            parallel: true,
            lift_shortcuts: true,
        }
    }
}

impl Settings {
    pub fn sequential() -> Self {
        Settings {
            parallel: false,
            ..Settings::default()
        }
    }

    pub fn with_map_cap(mut self, cap: usize) -> Self {
        self.budget.max_maps = cap;
        self
    }
}
