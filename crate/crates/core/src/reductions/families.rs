//! Graph families separating the structural parameters. Grid cells are
//! numbered row-major, `r·ℓ + c`.

use std::str::FromStr;

use crate::graph::MixedGraph;

use super::{invalid, ReductionError};

fn grid_pairs(l: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..l {
        for c in 0..l {
            let v = r * l + c;
            if c + 1 < l {
                out.push((v, v + 1));
            }
            if r + 1 < l {
                out.push((v, v + l));
            }
        }
    }
    out
}

/// `ℓ×ℓ` grid with every grid edge oriented right or down, and an edge
/// between every other pair, so the underlying graph is complete.
pub fn oriented_grid(l: usize) -> MixedGraph {
    let arcs = grid_pairs(l);
    let n = l * l;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !arcs.contains(p))
        .collect();
    MixedGraph::new(n, edges, arcs).expect("valid")
}

/// `ℓ×ℓ` grid whose snake (boustrophedon) Hamiltonian path is directed;
/// the remaining grid edges stay undirected.
pub fn grid_hamiltonian(l: usize) -> MixedGraph {
    let snake: Vec<usize> = (0..l)
        .flat_map(|r| {
            let row: Vec<usize> = (0..l).map(|c| r * l + c).collect();
            if r % 2 == 0 {
                row
            } else {
                row.into_iter().rev().collect()
            }
        })
        .collect();
    let arcs: Vec<(usize, usize)> = snake.windows(2).map(|w| (w[0], w[1])).collect();
    let edges: Vec<(usize, usize)> = grid_pairs(l)
        .into_iter()
        .filter(|&(u, v)| !arcs.contains(&(u, v)) && !arcs.contains(&(v, u)))
        .collect();
    MixedGraph::new(l * l, edges, arcs).expect("valid")
}

/// `K_ℓ` with the path `0 → 1 → … → ℓ-1` directed.
pub fn hamiltonian_tournament(l: usize) -> MixedGraph {
    let arcs: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
    let edges: Vec<(usize, usize)> = (0..l).flat_map(|u| (u + 2..l).map(move |v| (u, v))).collect();
    MixedGraph::new(l, edges, arcs).expect("valid")
}

/// `ℓ+1` layers, each a `K_k`; every vertex of layer `i` has arcs to every
/// vertex of layer `i+1`.
pub fn layered_cliques(l: usize, k: usize) -> MixedGraph {
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for layer in 0..=l {
        for a in 0..k {
            for b in a + 1..k {
                edges.push((layer * k + a, layer * k + b));
            }
            if layer < l {
                for b in 0..k {
                    arcs.push((layer * k + a, (layer + 1) * k + b));
                }
            }
        }
    }
    MixedGraph::new((l + 1) * k, edges, arcs).expect("valid")
}

/// Independent sets `u_1..u_ℓ`, `v_1..v_ℓ`, `w_1..w_ℓ` (vertices `0..3ℓ`)
/// with all arcs `u → v`, `v → w` and `u_i → w_i`, then `u*`, `v*`, `w*`
/// joined by edges to their set.
pub fn tripartite(l: usize) -> MixedGraph {
    let (u, v, w) = (0, l, 2 * l);
    let star = 3 * l;
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for i in 0..l {
        for j in 0..l {
            arcs.push((u + i, v + j));
            arcs.push((v + i, w + j));
        }
        arcs.push((u + i, w + i));
        edges.push((star, u + i));
        edges.push((star + 1, v + i));
        edges.push((star + 2, w + i));
    }
    MixedGraph::new(3 * l + 3, edges, arcs).expect("valid")
}

/// `ℓ²` independent grid vertices, then one arc vertex per grid edge (in
/// [`grid_pairs`] order) on a directed path from the even-parity endpoint
/// to the odd one; each arc vertex has edges to all other grid vertices.
pub fn grid_arc_vertices(l: usize) -> MixedGraph {
    let n_grid = l * l;
    let pairs = grid_pairs(l);
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for (i, &(p, q)) in pairs.iter().enumerate() {
        let a = n_grid + i;
        let parity = |x: usize| (x / l + x % l) % 2;
        let (from, to) = if parity(p) == 0 { (p, q) } else { (q, p) };
        arcs.push((from, a));
        arcs.push((a, to));
        edges.extend((0..n_grid).filter(|&x| x != from && x != to).map(|x| (x, a)));
    }
    MixedGraph::new(n_grid + pairs.len(), edges, arcs).expect("valid")
}

/// `u_1..u_ℓ`, then the center `v`, then `w_1..w_ℓ`, with arcs `u_i → v`
/// and `v → w_i`.
pub fn oriented_star(l: usize) -> MixedGraph {
    let center = l;
    let arcs: Vec<(usize, usize)> = (0..l).flat_map(|i| [(i, center), (center, center + 1 + i)]).collect();
    MixedGraph::new(2 * l + 1, [], arcs).expect("valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    OrientedGrid,
    GridHamiltonian,
    HamiltonianTournament,
    LayeredCliques,
    Tripartite,
    GridArcVertices,
    OrientedStar,
}

pub const FAMILY_NAMES: [&str; 7] = [
    "oriented-grid",
    "grid-hamiltonian",
    "hamiltonian-tournament",
    "layered-cliques",
    "tripartite",
    "grid-arc-vertices",
    "oriented-star",
];

impl FromStr for Family {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Family::*;
        let all = [
            OrientedGrid,
            GridHamiltonian,
            HamiltonianTournament,
            LayeredCliques,
            Tripartite,
            GridArcVertices,
            OrientedStar,
        ];
        FAMILY_NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| all[i])
            .ok_or_else(|| invalid(format!("unknown family '{s}' (expected one of {})", FAMILY_NAMES.join(", "))))
    }
}

impl Family {
    /// Parameters each family takes: `ℓ`, plus `k` for layered cliques.
    pub fn arity(self) -> usize {
        if self == Family::LayeredCliques {
            2
        } else {
            1
        }
    }

    pub fn build(self, params: &[usize]) -> Result<MixedGraph, ReductionError> {
        if params.len() != self.arity() {
            return Err(invalid(format!("expected {} parameter(s), got {}", self.arity(), params.len())));
        }
        let l = params[0];
        if l == 0 {
            return Err(invalid("ℓ must be at least 1"));
        }
        Ok(match self {
            Family::OrientedGrid => oriented_grid(l),
            Family::GridHamiltonian => grid_hamiltonian(l),
            Family::HamiltonianTournament => hamiltonian_tournament(l),
            Family::LayeredCliques => layered_cliques(l, params[1]),
            Family::Tripartite => tripartite(l),
            Family::GridArcVertices => grid_arc_vertices(l),
            Family::OrientedStar => oriented_star(l),
        })
    }
}
