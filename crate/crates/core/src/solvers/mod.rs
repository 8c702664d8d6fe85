//! Exact deciders for k-colorability of mixed graphs and the χ search that
//! wraps them.
//!
//! * [`brute`]: backtracking oracle in topological order.
//! * [`twdp`]: dynamic programming over a nice tree decomposition.
//! * [`ndm`]: type-endpoint preorders plus one feasibility program each.
//! * [`branching`]: recursion over maximal independent sets of inrank-0
//!   vertices.

pub mod branching;
pub mod brute;
pub mod ndm;
pub mod treedec;
pub mod twdp;

use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{layering_coloring, lower_bounds};
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{check_proper, Coloring, MixedGraph};

pub use treedec::TreeDecomposition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("brute force is capped at {cap} vertices, graph has {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Search nodes (backtracking nodes, DP entries, ILP nodes, branches).
    pub nodes: u64,
    /// Proper preorders examined by the type-preorder solver.
    pub preorders: u64,
    /// Largest DP table of the treewidth solver.
    pub max_table: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.preorders += other.preorders;
        self.max_table = self.max_table.max(other.max_table);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub colorable: bool,
    /// Present iff `colorable`.
    pub witness: Option<Coloring>,
    pub stats: SolveStats,
}

impl SolveResult {
    fn no(stats: SolveStats) -> Self {
        SolveResult {
            colorable: false,
            witness: None,
            stats,
        }
    }

    fn yes(witness: Coloring, stats: SolveStats) -> Self {
        SolveResult {
            colorable: true,
            witness: Some(witness),
            stats,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Brute,
    TwDp,
    Ndm,
    Branch,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Brute, Method::TwDp, Method::Ndm, Method::Branch];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::TwDp => "twdp",
            Method::Ndm => "ndm",
            Method::Branch => "branch",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method '{s}' (expected brute, twdp, ndm or branch)"))
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub budget: u64,
    /// Decomposition for [`Method::TwDp`]; min-fill is used when absent.
    pub td: Option<TreeDecomposition>,
    pub brute_cap: usize,
    pub ndm: ndm::NdmOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::DEFAULT_LIMIT,
            td: None,
            brute_cap: brute::DEFAULT_CAP,
            ndm: ndm::NdmOptions::default(),
        }
    }
}

/// Decides k-colorability with one method.
pub fn decide(
    g: &MixedGraph,
    k: usize,
    method: Method,
    opts: &SolveOptions,
) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let budget = Budget::new(opts.budget);
    let mut res = match method {
        Method::Brute => {
            if g.n() > opts.brute_cap {
                return Err(SolverError::CapExceeded {
                    n: g.n(),
                    cap: opts.brute_cap,
                });
            }
            brute::brute_force_decide(g, k, &budget)?
        }
        Method::TwDp => {
            let td = match &opts.td {
                Some(td) => td.clone(),
                None => TreeDecomposition::min_fill(g),
            };
            twdp::tw_dp_decide(g, &td, k, &budget)?
        }
        Method::Ndm => ndm::ndm_fpt_decide(g, k, &opts.ndm, &budget)?,
        Method::Branch => branching::branching_decide(g, k, &budget)?.result,
    };
    res.stats.elapsed = start.elapsed();
    if let Some(w) = &res.witness {
        debug_assert_eq!(check_proper(g, w), Ok(None));
        debug_assert!(w.max_color() as usize <= k);
    }
    Ok(res)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: Coloring,
    pub stats: SolveStats,
}

/// Smallest k with a yes decision, searching upward from the combined lower
/// bound; the layering coloring caps the search.
pub fn chi_exact(g: &MixedGraph, method: Method, opts: &SolveOptions) -> Result<ChiResult, SolverError> {
    let start = Instant::now();
    if g.is_empty() {
        return Ok(ChiResult {
            chi: 0,
            witness: Coloring::new(Vec::new()).expect("empty coloring"),
            stats: SolveStats::default(),
        });
    }
    let lower = lower_bounds(g, &Budget::new(opts.budget)).combined;
    let upper = layering_coloring(g).max_color() as usize;
    let mut stats = SolveStats::default();
    for k in lower.max(1)..=upper {
        let res = decide(g, k, method, opts)?;
        stats.absorb(&res.stats);
        if let Some(witness) = res.witness {
            stats.elapsed = start.elapsed();
            return Ok(ChiResult {
                chi: k,
                witness,
                stats,
            });
        }
    }
    unreachable!("the layering coloring uses {upper} colors, so k = {upper} is colorable")
}
