//! The mixed-graph data model.
//!
//! A [`MixedGraph`] has vertices `0..n`, a set of undirected edges and a set
//! of directed arcs. Graphs are simple (no loops, at most one relation per
//! vertex pair in either orientation) and the arc set is acyclic; every
//! constructor enforces this, so downstream code never re-checks it.
//!
//! File formats are 1-based (see [`io`]); everything in memory is 0-based.

mod coloring;
pub mod io;

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use coloring::{check_proper, Coloring, ColoringError, Violation};

/// Errors raised while building or loading a graph.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate relation between vertices {} and {}", .0 + 1, .1 + 1)]
    DuplicateRelation(usize, usize),
    #[error("loop at vertex {}", .0 + 1)]
    Loop(usize),
    #[error("vertex {} out of range for a graph on {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the arcs contain a directed cycle through vertex {}", .0 + 1)]
    DirectedCycle(usize),
}

/// How two distinct vertices are related.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    None,
    Edge,
    /// Arc from the first vertex to the second.
    Out,
    /// Arc from the second vertex to the first.
    In,
}

const REL_NONE: u8 = 0;
const REL_EDGE: u8 = 1;
const REL_OUT: u8 = 2;
const REL_IN: u8 = 3;

/// A simple mixed graph without directed cycles.
#[derive(Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
    // dense n*n relation matrix
    rel: Vec<u8>,
    out_nbrs: Vec<Vec<usize>>,
    in_nbrs: Vec<Vec<usize>>,
    und_nbrs: Vec<Vec<usize>>,
}

impl std::fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MixedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("arcs", &self.arcs)
            .finish()
    }
}

impl MixedGraph {
    /// Builds a validated graph. Edge pairs may be given in either order.
    pub fn new<E, A>(n: usize, edges: E, arcs: A) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (usize, usize)>,
        A: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = vec![REL_NONE; n * n];
        let mut edge_set = BTreeSet::new();
        let mut arc_set = BTreeSet::new();
        let check = |v: usize| {
            if v >= n {
                Err(GraphError::VertexOutOfRange { vertex: v, n })
            } else {
                Ok(())
            }
        };
        for (u, v) in edges {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if rel[u * n + v] != REL_NONE {
                return Err(GraphError::DuplicateRelation(u.min(v), u.max(v)));
            }
            rel[u * n + v] = REL_EDGE;
            rel[v * n + u] = REL_EDGE;
            edge_set.insert((u.min(v), u.max(v)));
        }
        for (u, v) in arcs {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            match rel[u * n + v] {
                REL_NONE => {}
                // (v, u) already present: a 2-cycle
                REL_IN => return Err(GraphError::DirectedCycle(u.min(v))),
                _ => return Err(GraphError::DuplicateRelation(u, v)),
            }
            rel[u * n + v] = REL_OUT;
            rel[v * n + u] = REL_IN;
            arc_set.insert((u, v));
        }
        let mut out_nbrs = vec![Vec::new(); n];
        let mut in_nbrs = vec![Vec::new(); n];
        let mut und_nbrs = vec![Vec::new(); n];
        for &(u, v) in &edge_set {
            und_nbrs[u].push(v);
            und_nbrs[v].push(u);
        }
        for &(u, v) in &arc_set {
            out_nbrs[u].push(v);
            in_nbrs[v].push(u);
        }
        for list in und_nbrs.iter_mut().chain(&mut out_nbrs).chain(&mut in_nbrs) {
            list.sort_unstable();
        }
        let g = MixedGraph {
            n,
            edges: edge_set,
            arcs: arc_set,
            rel,
            out_nbrs,
            in_nbrs,
            und_nbrs,
        };
        if let Some(v) = g.find_cycle_vertex() {
            return Err(GraphError::DirectedCycle(v));
        }
        Ok(g)
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::new(0, [], []).expect("empty graph is valid")
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Self::new(n, [], []).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn relation(&self, u: usize, v: usize) -> Relation {
        if u == v {
            return Relation::None;
        }
        match self.rel[u * self.n + v] {
            REL_EDGE => Relation::Edge,
            REL_OUT => Relation::Out,
            REL_IN => Relation::In,
            _ => Relation::None,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.relation(u, v) == Relation::Edge
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.relation(u, v) == Relation::Out
    }

    /// Adjacent in the underlying undirected graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.relation(u, v) != Relation::None
    }

    /// N⁺(v), ascending.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_nbrs[v]
    }

    /// N⁻(v), ascending.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_nbrs[v]
    }

    /// Undirected neighbours via edges only, ascending.
    pub fn edge_neighbors(&self, v: usize) -> &[usize] {
        &self.und_nbrs[v]
    }

    /// All neighbours in the underlying undirected graph, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.out_nbrs[v]
            .iter()
            .chain(&self.in_nbrs[v])
            .chain(&self.und_nbrs[v])
            .copied()
            .collect();
        all.sort_unstable();
        all
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_nbrs[v].len() + self.in_nbrs[v].len() + self.und_nbrs[v].len()
    }

    fn find_cycle_vertex(&self) -> Option<usize> {
        let order = self.kahn();
        if order.len() == self.n {
            return None;
        }
        let mut seen = vec![false; self.n];
        for &v in &order {
            seen[v] = true;
        }
        seen.iter().position(|s| !s)
    }

    fn kahn(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.in_nbrs.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..self.n)
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &self.out_nbrs[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        order
    }

    /// Topological order of the arcs, smallest available id first.
    pub fn topological_order(&self) -> Vec<usize> {
        self.kahn()
    }

    /// Reachability sets: `reach[v]` holds every vertex with a directed path
    /// of length ≥ 1 from `v`.
    pub fn reachability(&self) -> Vec<FixedBitSet> {
        let mut reach = vec![FixedBitSet::with_capacity(self.n); self.n];
        for &v in self.topological_order().iter().rev() {
            let mut set = FixedBitSet::with_capacity(self.n);
            for &w in &self.out_nbrs[v] {
                set.insert(w);
                set.union_with(&reach[w]);
            }
            reach[v] = set;
        }
        reach
    }

    /// Adds every transitive arc and drops edges that become parallel to one.
    pub fn transitive_closure(&self) -> MixedGraph {
        let reach = self.reachability();
        let mut arcs = Vec::new();
        for (v, set) in reach.iter().enumerate() {
            arcs.extend(set.ones().map(|w| (v, w)));
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !reach[u].contains(v) && !reach[v].contains(u))
            .collect();
        MixedGraph::new(self.n, edges, arcs).expect("closure of a valid graph is valid")
    }

    /// Longest directed path ending at each vertex.
    pub fn inranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.n];
        for v in self.topological_order() {
            for &w in &self.out_nbrs[v] {
                rank[w] = rank[w].max(rank[v] + 1);
            }
        }
        rank
    }

    pub fn layering(&self) -> Layering {
        let inrank = self.inranks();
        let depth = inrank.iter().copied().max().map_or(0, |m| m + 1);
        let mut layers = vec![Vec::new(); depth];
        for (v, &r) in inrank.iter().enumerate() {
            layers[r].push(v);
        }
        Layering { layers, inrank }
    }

    /// Length of the longest directed path (Λ); 0 for arc-free graphs.
    pub fn maxrank(&self) -> usize {
        self.inranks().into_iter().max().unwrap_or(0)
    }

    /// Replaces every arc by an edge.
    pub fn underlying_undirected(&self) -> MixedGraph {
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))));
        MixedGraph::new(self.n, edges, []).expect("underlying graph is valid")
    }

    /// Each edge becomes two opposite arcs; arcs are kept.
    pub fn corresponding_digraph(&self) -> BTreeSet<(usize, usize)> {
        let mut out = self.arcs.clone();
        for &(u, v) in &self.edges {
            out.insert((u, v));
            out.insert((v, u));
        }
        out
    }

    /// Subgraph induced by `keep` (any order, no duplicates). Vertex `i` of
    /// the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> MixedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        MixedGraph::new(keep.len(), edges, arcs).expect("induced subgraph is valid")
    }

    /// Number of relations (edges plus arcs).
    pub fn relation_count(&self) -> usize {
        self.edges.len() + self.arcs.len()
    }

    /// Boolean adjacency rows of the underlying graph.
    pub fn underlying_adjacency(&self) -> Vec<FixedBitSet> {
        (0..self.n)
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(self.n);
                for w in 0..self.n {
                    if self.adjacent(v, w) {
                        row.insert(w);
                    }
                }
                row
            })
            .collect()
    }
}

/// Partition of the vertices by inrank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<usize>>,
    pub inrank: Vec<usize>,
}

impl Layering {
    /// Λ, the index of the last layer.
    pub fn maxrank(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }
}

/// Directed path `0 → 1 → … → len`.
pub fn directed_path(len: usize) -> MixedGraph {
    MixedGraph::new(len + 1, [], (0..len).map(|i| (i, i + 1))).expect("path is valid")
}

/// The acyclic tournament on `n` vertices with arcs `i → j` for `i < j`.
pub fn acyclic_tournament(n: usize) -> MixedGraph {
    let arcs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    MixedGraph::new(n, [], arcs).expect("tournament is valid")
}

/// Complete undirected graph.
pub fn complete_graph(n: usize) -> MixedGraph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    MixedGraph::new(n, edges, []).expect("complete graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topological_order_breaks_ties_by_id() {
        assert_eq!(directed_path(2).topological_order(), vec![0, 1, 2]);
        assert_eq!(complete_graph(3).topological_order(), vec![0, 1, 2]);
        let g = MixedGraph::new(3, [], [(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.topological_order(), vec![2, 0, 1]);
    }

    #[test]
    fn closure_of_path() {
        let c = directed_path(2).transitive_closure();
        let arcs: Vec<_> = c.arcs().iter().copied().collect();
        assert_eq!(arcs, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn closure_drops_parallel_edges() {
        // arcs (1,3),(3,2) and edge {1,2}, 1-based
        let g = MixedGraph::new(3, [(0, 1)], [(0, 2), (2, 1)]).unwrap();
        let c = g.transitive_closure();
        assert!(c.edges().is_empty());
        let arcs: Vec<_> = c.arcs().iter().copied().collect();
        assert_eq!(arcs, vec![(0, 1), (0, 2), (2, 1)]);
    }

    #[test]
    fn layering_shapes() {
        let l = complete_graph(4).layering();
        assert_eq!(l.layers, vec![vec![0, 1, 2, 3]]);
        let l = directed_path(3).layering();
        assert_eq!(l.layers.len(), 4);
        assert!(l.layers.iter().all(|layer| layer.len() == 1));
        assert_eq!(MixedGraph::empty().layering().layers.len(), 0);
    }

    #[test]
    fn maxrank_values() {
        assert_eq!(complete_graph(5).maxrank(), 0);
        assert_eq!(directed_path(5).maxrank(), 5);
        assert_eq!(MixedGraph::empty().maxrank(), 0);
    }

    #[test]
    fn maxrank_of_tournament_matches_path_enumeration() {
        // brute force: longest simple directed path over all vertex sequences
        fn longest(g: &MixedGraph, v: usize, seen: &mut Vec<bool>) -> usize {
            let mut best = 0;
            for &w in g.out_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    best = best.max(1 + longest(g, w, seen));
                    seen[w] = false;
                }
            }
            best
        }
        let g = acyclic_tournament(6);
        let mut seen = vec![false; 6];
        let brute = (0..6)
            .map(|v| {
                seen[v] = true;
                let r = longest(&g, v, &mut seen);
                seen[v] = false;
                r
            })
            .max()
            .unwrap();
        assert_eq!(brute, 5);
        assert_eq!(g.maxrank(), brute);
    }

    #[test]
    fn underlying_and_digraph() {
        let g = MixedGraph::new(2, [], [(0, 1)]).unwrap();
        let u = g.underlying_undirected();
        assert!(u.has_edge(0, 1) && u.arcs().is_empty());
        assert_eq!(complete_graph(4).underlying_undirected(), complete_graph(4));
        assert_eq!(acyclic_tournament(5).underlying_undirected(), complete_graph(5));

        let d = MixedGraph::new(2, [(0, 1)], []).unwrap().corresponding_digraph();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let d = g.corresponding_digraph();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
        let g = MixedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        let d: Vec<_> = g.corresponding_digraph().into_iter().collect();
        assert_eq!(d, vec![(0, 1), (1, 0), (1, 2)]);
    }

    #[test]
    fn constructor_rejects_invalid() {
        assert_eq!(
            MixedGraph::new(2, [], [(0, 1), (1, 0)]),
            Err(GraphError::DirectedCycle(0))
        );
        assert!(matches!(
            MixedGraph::new(3, [], [(0, 1), (1, 2), (2, 0)]),
            Err(GraphError::DirectedCycle(_))
        ));
        assert_eq!(MixedGraph::new(2, [(1, 1)], []), Err(GraphError::Loop(1)));
        assert_eq!(
            MixedGraph::new(2, [(0, 1)], [(0, 1)]),
            Err(GraphError::DuplicateRelation(0, 1))
        );
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = acyclic_tournament(4);
        let h = g.induced(&[3, 1]);
        assert_eq!(h.n(), 2);
        assert!(h.has_arc(1, 0));
    }
}
