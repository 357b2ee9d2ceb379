//! Resource guards and engine options shared by the exact engines.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Cap on the number of generators an ideal operation may accumulate.
pub const DEFAULT_GENERATOR_CAP: usize = 100_000;

/// Coefficient field for homology ranks.
///
/// `Rational` is the default and is computed with exact integer arithmetic.
/// `Prime(p)` computes ranks modulo `p`; it is faster but heuristic (a rank
/// can drop in positive characteristic), so results obtained with it must be
/// flagged in any report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientField {
    Rational,
    Prime(u64),
}

impl Default for CoefficientField {
    fn default() -> Self {
        CoefficientField::Rational
    }
}

impl std::fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoefficientField::Rational => write!(f, "rational"),
            CoefficientField::Prime(p) => write!(f, "mod-{p}"),
        }
    }
}

/// Guards for the homological engines.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomologyOptions {
    /// Maximum ambient size for the full multidegree sweep (the sweep visits
    /// `2^n` vertex subsets).
    pub max_sweep_vars: usize,
    /// Maximum vertex count of a single simplicial complex handed to the
    /// homology engine.
    pub max_complex_vertices: usize,
    /// Maximum size of the multidegree box `prod (g_i + 1)` in the
    /// upper-Koszul engine.
    pub max_koszul_box: usize,
    pub field: CoefficientField,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions {
            max_sweep_vars: 20,
            max_complex_vertices: 24,
            max_koszul_box: 200_000,
            field: CoefficientField::Rational,
        }
    }
}

/// Guards and budgets for the Stanley depth / Stanley regularity searches.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StanleyOptions {
    /// Maximum size of the characteristic poset box `prod (g_i + 1)`.
    pub max_poset_box: usize,
    /// Ambient cap for the polarization-shift identity (the squarefree side
    /// lives in `n * r` variables).
    pub max_shift_vars: usize,
    /// Wall-clock budget per (ideal, mode) search; `None` disables the check.
    /// A search that runs out of budget returns a certified bound flagged as
    /// inexact instead of an error.
    pub budget: Option<Duration>,
}

impl Default for StanleyOptions {
    fn default() -> Self {
        StanleyOptions {
            max_poset_box: 50_000,
            max_shift_vars: 8,
            budget: Some(Duration::from_secs(60)),
        }
    }
}
