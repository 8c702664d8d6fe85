//! Coloring of mixed graphs: graphs with undirected edges and acyclic
//! directed arcs, where a proper coloring needs `c(u) != c(v)` on every edge
//! and `c(u) < c(v)` on every arc.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | data model, file formats, closure, layering |
//! | [`params`] | neighborhood partitions, vertex cover, clique number |
//! | [`bounds`] | lower bounds and constructive colorings |
//! | [`solvers`] | brute force, treewidth DP, type-preorder solver, branching |
//! | [`feasibility`] | bounded integer feasibility |
//! | [`expr`] | cliquewidth expressions |
//! | [`reductions`] | reductions and graph families with source oracles |

pub mod bounds;
pub mod budget;
pub mod expr;
pub mod feasibility;
pub mod graph;
pub mod params;
pub mod par;
pub mod random;
pub mod reductions;
pub mod solvers;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{check_proper, Coloring, GraphError, Layering, MixedGraph, Relation, Violation};
