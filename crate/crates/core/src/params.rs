//! Structural parameters: neighborhood partitions (mixed and undirected),
//! vertex cover number and clique number.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::MixedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartitionKind {
    Mixed,
    Undirected,
}

/// Shape of a class in the edge set. Singletons are reported as independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    Clique,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodPartition {
    pub kind: PartitionKind,
    /// Classes, each ascending, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub class_kinds: Vec<ClassKind>,
    /// `class_of[v]` indexes into `classes`.
    pub class_of: Vec<usize>,
}

impl NeighborhoodPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn minus(list: &[usize], x: usize) -> impl Iterator<Item = usize> + '_ {
    list.iter().copied().filter(move |&y| y != x)
}

/// `u ∼ v` under the mixed type relation.
pub fn same_mixed_type(g: &MixedGraph, u: usize, v: usize) -> bool {
    u == v
        || (g.in_neighbors(u) == g.in_neighbors(v)
            && g.out_neighbors(u) == g.out_neighbors(v)
            && minus(g.edge_neighbors(u), v).eq(minus(g.edge_neighbors(v), u)))
}

/// `u ∼ v` under the undirected type relation of the underlying graph.
pub fn same_undirected_type(g: &MixedGraph, u: usize, v: usize) -> bool {
    u == v || minus(&g.neighbors(u), v).eq(minus(&g.neighbors(v), u))
}

fn partition_by(
    g: &MixedGraph,
    kind: PartitionKind,
    same: impl Fn(usize, usize) -> bool,
) -> NeighborhoodPartition {
    // the relation is an equivalence, so comparing against each class's
    // first member is enough
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in g.vertices() {
        match classes.iter().position(|c| same(c[0], v)) {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    let class_kinds = classes
        .iter()
        .map(|c| {
            if c.len() >= 2 && g.adjacent(c[0], c[1]) {
                ClassKind::Clique
            } else {
                ClassKind::Independent
            }
        })
        .collect();
    NeighborhoodPartition {
        kind,
        classes,
        class_kinds,
        class_of,
    }
}

pub fn mixed_neighborhood_partition(g: &MixedGraph) -> NeighborhoodPartition {
    partition_by(g, PartitionKind::Mixed, |u, v| same_mixed_type(g, u, v))
}

pub fn undirected_neighborhood_partition(g: &MixedGraph) -> NeighborhoodPartition {
    let nbrs: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v)).collect();
    partition_by(g, PartitionKind::Undirected, |u, v| {
        minus(&nbrs[u], v).eq(minus(&nbrs[v], u))
    })
}

pub fn ndm(g: &MixedGraph) -> usize {
    mixed_neighborhood_partition(g).len()
}

pub fn ndu(g: &MixedGraph) -> usize {
    undirected_neighborhood_partition(g).len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub size: usize,
    /// Ascending.
    pub cover: Vec<usize>,
}

/// Checks that every edge and arc has an endpoint in `cover`.
pub fn is_vertex_cover(g: &MixedGraph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        inside[v] = true;
    }
    g.edges()
        .iter()
        .chain(g.arcs())
        .all(|&(u, v)| inside[u] || inside[v])
}

struct CoverSearch<'a> {
    adj: &'a [FixedBitSet],
    budget: &'a Budget,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CoverSearch<'_> {
    fn degree(&self, v: usize, alive: &FixedBitSet) -> usize {
        self.adj[v].intersection(alive).count()
    }

    fn matching_bound(&self, alive: &FixedBitSet) -> usize {
        let mut free = alive.clone();
        let mut size = 0;
        for u in alive.ones() {
            if !free.contains(u) {
                continue;
            }
            if let Some(w) = self.adj[u].intersection(&free).next() {
                free.set(u, false);
                free.set(w, false);
                size += 1;
            }
        }
        size
    }

    fn go(&mut self, alive: FixedBitSet) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        if self.current.len() + self.matching_bound(&alive) >= self.best.len() {
            return Ok(());
        }
        let mut pick = None;
        let mut forced = None;
        for v in alive.ones() {
            let d = self.degree(v, &alive);
            if d == 1 {
                forced = Some(v);
                break;
            }
            if d > 0 && pick.is_none_or(|(_, bd)| d > bd) {
                pick = Some((v, d));
            }
        }
        if let Some(v) = forced {
            // a degree-1 vertex: taking its neighbor is never worse
            let w = self.adj[v].intersection(&alive).next().expect("degree 1");
            let mut rest = alive;
            rest.set(v, false);
            rest.set(w, false);
            self.current.push(w);
            self.go(rest)?;
            self.current.pop();
            return Ok(());
        }
        let Some((v, _)) = pick else {
            self.best = self.current.clone();
            return Ok(());
        };
        let mut with_v = alive.clone();
        with_v.set(v, false);
        self.current.push(v);
        self.go(with_v)?;
        self.current.pop();

        let nbrs: Vec<usize> = self.adj[v].intersection(&alive).collect();
        let mut without_v = alive;
        without_v.set(v, false);
        for &w in &nbrs {
            without_v.set(w, false);
        }
        let before = self.current.len();
        self.current.extend(&nbrs);
        self.go(without_v)?;
        self.current.truncate(before);
        Ok(())
    }
}

/// Exact minimum vertex cover of the underlying undirected graph.
pub fn vertex_cover(g: &MixedGraph, budget: &Budget) -> Result<VertexCover, BudgetExceeded> {
    let adj = g.underlying_adjacency();
    let mut alive = FixedBitSet::with_capacity(g.n());
    alive.insert_range(..);
    // start from the trivial cover of all non-isolated vertices
    let initial: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let mut search = CoverSearch {
        adj: &adj,
        budget,
        best: initial,
        current: Vec::new(),
    };
    search.go(alive)?;
    let mut cover = search.best;
    cover.sort_unstable();
    Ok(VertexCover {
        size: cover.len(),
        cover,
    })
}

pub fn vertex_cover_number(g: &MixedGraph) -> Result<usize, BudgetExceeded> {
    vertex_cover(g, &Budget::default()).map(|c| c.size)
}

struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    budget: &'a Budget,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Greedy coloring of `cand`; returns vertices with their color bound,
    /// ascending by bound.
    fn color_order(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncolored = cand.clone();
        let mut out = Vec::new();
        let mut color = 0;
        while uncolored.count_ones(..) > 0 {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.ones().next() {
                out.push((v, color));
                uncolored.set(v, false);
                avail.set(v, false);
                avail.difference_with(&self.adj[v]);
            }
        }
        out
    }

    fn go(&mut self, mut cand: FixedBitSet) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        let order = self.color_order(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.go(next)?;
            }
            self.current.pop();
            cand.set(v, false);
        }
        Ok(())
    }
}

/// Maximum clique of the underlying undirected graph (ascending witness).
pub fn max_clique(g: &MixedGraph, budget: &Budget) -> Result<Vec<usize>, BudgetExceeded> {
    if g.is_empty() {
        return Ok(Vec::new());
    }
    let adj = g.underlying_adjacency();
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.insert_range(..);
    let mut search = CliqueSearch {
        adj: &adj,
        budget,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.go(cand)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// ω of the underlying undirected graph; 0 for the empty graph.
pub fn clique_number(g: &MixedGraph) -> Result<usize, BudgetExceeded> {
    max_clique(g, &Budget::default()).map(|c| c.len())
}

/// Summary of all parameters of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub n: usize,
    pub edges: usize,
    pub arcs: usize,
    pub ndm: usize,
    pub ndu: usize,
    pub vc: usize,
    pub omega: usize,
    pub maxrank: usize,
    pub layers: usize,
}

pub fn parameter_report(g: &MixedGraph, budget: &Budget) -> Result<ParameterReport, BudgetExceeded> {
    Ok(ParameterReport {
        n: g.n(),
        edges: g.edges().len(),
        arcs: g.arcs().len(),
        ndm: ndm(g),
        ndu: ndu(g),
        vc: vertex_cover(g, budget)?.size,
        omega: max_clique(g, budget)?.len(),
        maxrank: g.maxrank(),
        layers: g.layering().layers.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{acyclic_tournament, complete_graph, directed_path};
    use crate::random::{corpus, random_mixed_graph, rng};
    use proptest::prelude::*;

    fn star(leaves: usize) -> MixedGraph {
        MixedGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v)), []).unwrap()
    }

    #[test]
    fn mixed_partition_examples() {
        let p = mixed_neighborhood_partition(&complete_graph(4));
        assert_eq!(p.classes, vec![vec![0, 1, 2, 3]]);
        assert_eq!(p.class_kinds, vec![ClassKind::Clique]);
        assert_eq!(ndm(&acyclic_tournament(5)), 5);
        let p = mixed_neighborhood_partition(&MixedGraph::edgeless(3));
        assert_eq!(p.class_kinds, vec![ClassKind::Independent]);
    }

    #[test]
    fn undirected_partition_examples() {
        assert_eq!(ndu(&acyclic_tournament(5)), 1);
        assert_eq!(ndu(&MixedGraph::edgeless(4)), 1);
        let p = undirected_neighborhood_partition(&star(3));
        assert_eq!(p.classes, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn arc_direction_separates_types() {
        // 0 -> 2 <- 1 : sources share a type, 0 -> 1 -> 2 does not
        let g = MixedGraph::new(3, [], [(0, 2), (1, 2)]).unwrap();
        assert_eq!(ndm(&g), 2);
        assert_eq!(ndm(&directed_path(2)), 3);
    }

    #[test]
    fn vertex_cover_examples() {
        for l in 1..=6 {
            let vc = vertex_cover(&directed_path(2 * l), &Budget::default()).unwrap();
            // a path with 2l edges
            assert_eq!(vc.size, l);
            assert!(is_vertex_cover(&directed_path(2 * l), &vc.cover));
        }
        assert_eq!(vertex_cover_number(&complete_graph(4)), Ok(3));
        assert_eq!(vertex_cover_number(&MixedGraph::edgeless(5)), Ok(0));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete_graph(3)), Ok(3));
        assert_eq!(clique_number(&acyclic_tournament(6)), Ok(6));
        assert_eq!(clique_number(&MixedGraph::edgeless(3)), Ok(1));
        assert_eq!(clique_number(&MixedGraph::empty()), Ok(0));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let g = complete_graph(8);
        assert!(vertex_cover(&g, &Budget::new(1)).is_err());
    }

    fn brute_vc(g: &MixedGraph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                let cover: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                is_vertex_cover(g, &cover)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn brute_omega(g: &MixedGraph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn cover_and_clique_match_enumeration() {
        for g in corpus(11, 150, 10) {
            assert_eq!(vertex_cover_number(&g).unwrap(), brute_vc(&g), "{g:?}");
            assert_eq!(clique_number(&g).unwrap(), brute_omega(&g), "{g:?}");
        }
    }

    /// All set partitions of `0..n` as class-index vectors (restricted
    /// growth strings).
    fn set_partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            for c in 0..=max {
                cur.push(c);
                rec(i + 1, n, cur, max.max(c + 1), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, &mut Vec::new(), 0, &mut out);
        out
    }

    #[test]
    fn mixed_partition_is_the_coarsest() {
        let mut r = rng(5);
        for i in 0..40 {
            let n = 2 + i % 6;
            let g = random_mixed_graph(&mut r, n, 0.3, 0.3);
            let p = mixed_neighborhood_partition(&g);
            // the best valid partition found by enumeration has the same size
            let best = set_partitions(n)
                .into_iter()
                .filter(|assign| {
                    (0..n).all(|u| {
                        (0..n).all(|v| assign[u] != assign[v] || same_mixed_type(&g, u, v))
                    })
                })
                .map(|assign| assign.iter().max().unwrap() + 1)
                .min()
                .unwrap();
            assert_eq!(p.len(), best, "{g:?}");
            // merging two computed classes always breaks the type equalities
            for a in 0..p.len() {
                for b in a + 1..p.len() {
                    assert!(!same_mixed_type(&g, p.classes[a][0], p.classes[b][0]));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn partition_invariants(seed in 0u64..5000, n in 1usize..10) {
            let mut r = rng(seed);
            let g = random_mixed_graph(&mut r, n, 0.3, 0.3);
            let pm = mixed_neighborhood_partition(&g);
            let pu = undirected_neighborhood_partition(&g);
            prop_assert!(pu.len() <= pm.len());
            for (class, kind) in pm.classes.iter().zip(&pm.class_kinds) {
                for (i, &u) in class.iter().enumerate() {
                    for &v in &class[i + 1..] {
                        prop_assert!(same_mixed_type(&g, u, v));
                        prop_assert_eq!(g.has_edge(u, v), *kind == ClassKind::Clique);
                        prop_assert!(!g.has_arc(u, v) && !g.has_arc(v, u));
                    }
                }
            }
            let covered: usize = pm.classes.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, n);
        }
    }
}
