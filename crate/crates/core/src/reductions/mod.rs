//! Instance generators: reductions from other problems into mixed coloring,
//! each with a brute-force oracle for its source problem, plus the graph
//! families behind the parameter separations.

mod families;
mod list;
mod scheduling;
mod superstring;

use thiserror::Error;

pub use families::{
    grid_arc_vertices, grid_hamiltonian, hamiltonian_tournament, layered_cliques, oriented_grid, oriented_star,
    tripartite, Family, FAMILY_NAMES,
};
pub use list::{
    list_coloring_oracle, multicolored_clique_oracle, reduce_list_coloring, reduce_multicolored_clique,
    ListColoringInstance,
};
pub use scheduling::{reduce_scheduling, schedule_oracle, SchedulingInstance};
pub use superstring::{
    is_subsequence, reduce_superstring, split_superstring_expression, superstring_oracle, SuperstringInstance,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

fn invalid(msg: impl Into<String>) -> ReductionError {
    ReductionError::InvalidInstance(msg.into())
}
