//! Chromatic bounds: `max(χ_u, Λ+1)` from below, and two constructive
//! colorings from above (layer by layer, and from a vertex cover).

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Coloring, MixedGraph};
use crate::params::{is_vertex_cover, max_clique, vertex_cover};
use crate::par;

/// Layers up to this size are colored optimally.
pub const EXACT_LAYER_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("not a vertex cover: relation between {} and {} is uncovered", .0 + 1, .1 + 1)]
    InvalidCover(usize, usize),
}

/// DSATUR greedy coloring of the graph with adjacency rows `adj`.
pub fn dsatur(adj: &[FixedBitSet]) -> Vec<u32> {
    let n = adj.len();
    let mut color = vec![0u32; n];
    for _ in 0..n {
        let v = pick_dsatur(adj, &color).expect("uncolored vertex remains");
        let used: Vec<u32> = adj[v].ones().map(|w| color[w]).collect();
        color[v] = (1..).find(|c| !used.contains(c)).expect("some color is free");
    }
    color
}

/// Uncolored vertex with the most distinct neighbor colors, ties by degree
/// then by id.
fn pick_dsatur(adj: &[FixedBitSet], color: &[u32]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..adj.len() {
        if color[v] != 0 {
            continue;
        }
        let mut seen: Vec<u32> = adj[v].ones().map(|w| color[w]).filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), adj[v].count_ones(..), v);
        if best.is_none_or(|(s, d, _)| (key.0, key.1) > (s, d)) {
            best = Some(key);
        }
    }
    best.map(|(_, _, v)| v)
}

fn k_color_rec(
    adj: &[FixedBitSet],
    k: u32,
    color: &mut [u32],
    max_used: u32,
    left: usize,
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    if left == 0 {
        return Ok(true);
    }
    budget.tick()?;
    let v = pick_dsatur(adj, color).expect("uncolored vertex remains");
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if adj[v].ones().any(|w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if k_color_rec(adj, k, color, max_used.max(c), left - 1, budget)? {
            return Ok(true);
        }
    }
    color[v] = 0;
    Ok(false)
}

/// A proper `k`-coloring of the undirected graph `adj`, if one exists.
pub fn undirected_k_coloring(
    adj: &[FixedBitSet],
    k: u32,
    budget: &Budget,
) -> Result<Option<Vec<u32>>, BudgetExceeded> {
    let mut color = vec![0u32; adj.len()];
    let ok = k_color_rec(adj, k, &mut color, 0, adj.len(), budget)?;
    Ok(ok.then_some(color))
}

/// Optimal coloring of the underlying undirected graph of `g`.
pub fn undirected_chromatic(g: &MixedGraph, budget: &Budget) -> Result<Vec<u32>, BudgetExceeded> {
    let adj = g.underlying_adjacency();
    let greedy = dsatur(&adj);
    let upper = greedy.iter().copied().max().unwrap_or(0);
    let omega = max_clique(g, budget)?.len() as u32;
    for k in omega..upper {
        if let Some(c) = undirected_k_coloring(&adj, k, budget)? {
            return Ok(c);
        }
    }
    Ok(greedy)
}

pub fn chi_u(g: &MixedGraph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    undirected_chromatic(g, budget).map(|c| c.into_iter().max().unwrap_or(0) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowerWitness {
    UndirectedClique,
    Maxrank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    /// χ_u, or ω if the exact search ran out of budget.
    pub chi_u: usize,
    pub chi_u_exact: bool,
    pub maxrank: usize,
    /// `max(chi_u, maxrank + 1)`; 0 for the empty graph.
    pub combined: usize,
    pub witness: LowerWitness,
}

pub fn lower_bounds(g: &MixedGraph, budget: &Budget) -> LowerBounds {
    let (chi_u, chi_u_exact) = match chi_u(g, budget) {
        Ok(c) => (c, true),
        Err(_) => {
            let omega = max_clique(g, &Budget::default()).map_or_else(
                |_| usize::from(g.n() > 0) + usize::from(g.relation_count() > 0),
                |c| c.len(),
            );
            (omega, false)
        }
    };
    let maxrank = g.maxrank();
    let by_rank = if g.is_empty() { 0 } else { maxrank + 1 };
    let (combined, witness) = if chi_u >= by_rank {
        (chi_u, LowerWitness::UndirectedClique)
    } else {
        (by_rank, LowerWitness::Maxrank)
    };
    LowerBounds {
        chi_u,
        chi_u_exact,
        maxrank,
        combined,
        witness,
    }
}

fn color_layer(g: &MixedGraph, layer: &[usize]) -> Vec<u32> {
    let sub = g.induced(layer);
    if layer.len() <= EXACT_LAYER_LIMIT {
        if let Ok(c) = undirected_chromatic(&sub, &Budget::default()) {
            return c;
        }
    }
    dsatur(&sub.underlying_adjacency())
}

/// Colors layer `L_i` with its own block of colors, placed after every color
/// used by earlier layers.
pub fn layering_coloring(g: &MixedGraph) -> Coloring {
    let layering = g.layering();
    let per_layer = par::map(&layering.layers, |layer| color_layer(g, layer));
    let mut colors = vec![0u32; g.n()];
    let mut offset = 0;
    for (layer, local) in layering.layers.iter().zip(&per_layer) {
        for (&v, &c) in layer.iter().zip(local) {
            colors[v] = offset + c;
        }
        offset += local.iter().copied().max().unwrap_or(0);
    }
    Coloring::new(colors).expect("layer colors are positive")
}

/// The `2|C|+1` coloring from a vertex cover `C`: cover vertices get `2i` in
/// topological order of the closure restricted to `C`; every other vertex
/// gets one more than its largest in-neighbor color.
pub fn vc_coloring(g: &MixedGraph, cover: &[usize]) -> Result<Coloring, BoundsError> {
    if !is_vertex_cover(g, cover) {
        let mut inside = vec![false; g.n()];
        for &v in cover {
            inside[v] = true;
        }
        let &(u, v) = g
            .edges()
            .iter()
            .chain(g.arcs())
            .find(|&&(u, v)| !inside[u] && !inside[v])
            .expect("an uncovered relation exists");
        return Err(BoundsError::InvalidCover(u, v));
    }
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let closed = g.transitive_closure().induced(&cover);
    let mut colors = vec![0u32; g.n()];
    for (i, local) in closed.topological_order().into_iter().enumerate() {
        colors[cover[local]] = 2 * (i as u32 + 1);
    }
    for v in g.vertices() {
        if colors[v] == 0 {
            let c_minus = g.in_neighbors(v).iter().map(|&u| colors[u]).max().unwrap_or(0);
            colors[v] = c_minus + 1;
        }
    }
    Ok(Coloring::new(colors).expect("colors are positive"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticBounds {
    pub lower: LowerBounds,
    /// Largest color of `upper_witness`.
    pub upper: usize,
    pub upper_witness: Coloring,
}

/// Lower bounds plus the better of the two constructive colorings. The vertex
/// cover coloring is skipped if the cover search runs out of budget.
pub fn chromatic_bounds(g: &MixedGraph, budget: &Budget) -> ChromaticBounds {
    let lower = lower_bounds(g, budget);
    let mut best = layering_coloring(g);
    if let Ok(vc) = vertex_cover(g, budget) {
        let c = vc_coloring(g, &vc.cover).expect("minimum cover is a cover");
        if c.max_color() < best.max_color() {
            best = c;
        }
    }
    ChromaticBounds {
        lower,
        upper: best.max_color() as usize,
        upper_witness: best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{check_proper, complete_graph, directed_path};
    use crate::random::corpus;
    use crate::reductions::layered_cliques;

    #[test]
    fn lower_bound_examples() {
        let lb = lower_bounds(&directed_path(4), &Budget::default());
        assert_eq!((lb.chi_u, lb.maxrank, lb.combined), (2, 4, 5));
        assert_eq!(lb.witness, LowerWitness::Maxrank);
        let lb = lower_bounds(&MixedGraph::edgeless(4), &Budget::default());
        assert_eq!((lb.chi_u, lb.maxrank, lb.combined), (1, 0, 1));
        let g = layered_cliques(2, 3);
        let lb = lower_bounds(&g, &Budget::default());
        // consecutive layers are fully joined, so the underlying graph holds K_6
        assert_eq!((lb.chi_u, lb.maxrank, lb.combined), (6, 2, 6));
        for layer in g.layering().layers {
            assert_eq!(chi_u(&g.induced(&layer), &Budget::default()), Ok(3));
        }
        assert_eq!(lower_bounds(&MixedGraph::empty(), &Budget::default()).combined, 0);
    }

    #[test]
    fn layering_coloring_examples() {
        for l in 0..=3 {
            for k in 1..=3 {
                let g = layered_cliques(l, k);
                let c = layering_coloring(&g);
                assert_eq!(check_proper(&g, &c), Ok(None));
                assert_eq!(c.max_color() as usize, (l + 1) * k);
            }
        }
        // arc-free even cycle: one layer, two colors
        let c4 = MixedGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)], []).unwrap();
        assert_eq!(layering_coloring(&c4).max_color(), 2);
        assert_eq!(layering_coloring(&directed_path(6)).max_color(), 7);
    }

    #[test]
    fn vc_coloring_on_paths() {
        for l in 1..=6 {
            let g = directed_path(2 * l);
            // every second vertex starting from the second
            let cover: Vec<usize> = (0..l).map(|i| 2 * i + 1).collect();
            let c = vc_coloring(&g, &cover).unwrap();
            assert_eq!(check_proper(&g, &c), Ok(None));
            assert_eq!(c.max_color() as usize, 2 * l + 1);
        }
    }

    #[test]
    fn vc_coloring_small_cases() {
        let g = MixedGraph::new(2, [(0, 1)], []).unwrap();
        let c = vc_coloring(&g, &[0]).unwrap();
        assert_eq!(c.colors(), &[2, 1]);
        let c = vc_coloring(&MixedGraph::edgeless(3), &[]).unwrap();
        assert_eq!(c.colors(), &[1, 1, 1]);
        assert_eq!(
            vc_coloring(&directed_path(2), &[0]),
            Err(BoundsError::InvalidCover(1, 2))
        );
    }

    #[test]
    fn undirected_chromatic_matches_small_cases() {
        assert_eq!(chi_u(&complete_graph(5), &Budget::default()), Ok(5));
        let c5 = MixedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], []).unwrap();
        assert_eq!(chi_u(&c5, &Budget::default()), Ok(3));
        assert_eq!(chi_u(&MixedGraph::empty(), &Budget::default()), Ok(0));
    }

    #[test]
    fn witnesses_are_proper_on_random_graphs() {
        for g in corpus(3, 100, 10) {
            let b = chromatic_bounds(&g, &Budget::default());
            assert_eq!(check_proper(&g, &b.upper_witness), Ok(None));
            assert!(b.lower.combined <= b.upper);
            let vc = vertex_cover(&g, &Budget::default()).unwrap();
            let c = vc_coloring(&g, &vc.cover).unwrap();
            assert_eq!(check_proper(&g, &c), Ok(None));
            assert!(c.max_color() as usize <= 2 * vc.size + 1);
        }
    }
}
