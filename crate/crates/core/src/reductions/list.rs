//! List coloring into mixed coloring, and multicolored clique into list
//! coloring.

use crate::graph::MixedGraph;

use super::{invalid, ReductionError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListColoringInstance {
    /// Undirected graph.
    pub graph: MixedGraph,
    /// Allowed colors per vertex, each in `1..=ell`, ascending.
    pub lists: Vec<Vec<usize>>,
    pub ell: usize,
}

impl ListColoringInstance {
    pub fn validate(&self) -> Result<(), ReductionError> {
        if !self.graph.arcs().is_empty() {
            return Err(invalid("list coloring needs an undirected graph"));
        }
        if self.lists.len() != self.graph.n() {
            return Err(invalid(format!("{} lists for {} vertices", self.lists.len(), self.graph.n())));
        }
        for (v, list) in self.lists.iter().enumerate() {
            if list.is_empty() || list.iter().any(|&c| c == 0 || c > self.ell) {
                return Err(invalid(format!("list of vertex {} must be a nonempty subset of 1..={}", v + 1, self.ell)));
            }
        }
        Ok(())
    }
}

/// A list coloring found by backtracking in vertex order, colors tried in
/// list order.
pub fn list_coloring_oracle(inst: &ListColoringInstance) -> Option<Vec<usize>> {
    let n = inst.graph.n();
    let mut colors = vec![0usize; n];
    fn rec(v: usize, inst: &ListColoringInstance, colors: &mut Vec<usize>) -> bool {
        if v == colors.len() {
            return true;
        }
        for &c in &inst.lists[v] {
            if inst.graph.edge_neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
                colors[v] = c;
                if rec(v + 1, inst, colors) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    rec(0, inst, &mut colors).then_some(colors)
}

/// Returns the graph and `ell`. Per vertex `v` (in order) and forbidden
/// color `j` (ascending) a directed path `w_1 → … → w_ell` is appended with
/// the edge `{v, w_j}`; in any `ell`-coloring `w_i` gets color `i`.
pub fn reduce_list_coloring(inst: &ListColoringInstance) -> Result<(MixedGraph, usize), ReductionError> {
    inst.validate()?;
    let ell = inst.ell;
    let mut edges: Vec<(usize, usize)> = inst.graph.edges().iter().copied().collect();
    let mut arcs = Vec::new();
    let mut next = inst.graph.n();
    for (v, list) in inst.lists.iter().enumerate() {
        for j in (1..=ell).filter(|j| !list.contains(j)) {
            let path: Vec<usize> = (next..next + ell).collect();
            next += ell;
            arcs.extend(path.windows(2).map(|w| (w[0], w[1])));
            edges.push((v, path[j - 1]));
        }
    }
    let g = MixedGraph::new(next, edges, arcs).expect("construction is a valid mixed graph");
    Ok((g, ell))
}

/// Color-class vertices `0..classes` with their class as list, then one
/// edge-vertex per non-adjacent cross-class pair `x < y` with list
/// `{x+1, y+1}`. Colors stand for the vertices of `g` (1-based).
pub fn reduce_multicolored_clique(g: &MixedGraph, class_of: &[usize]) -> Result<ListColoringInstance, ReductionError> {
    if !g.arcs().is_empty() {
        return Err(invalid("multicolored clique needs an undirected graph"));
    }
    if class_of.len() != g.n() {
        return Err(invalid("one class per vertex is required"));
    }
    let classes = class_of.iter().max().map_or(0, |m| m + 1);
    let mut lists: Vec<Vec<usize>> = (0..classes)
        .map(|c| (0..g.n()).filter(|&v| class_of[v] == c).map(|v| v + 1).collect())
        .collect();
    if lists.iter().any(Vec::is_empty) {
        return Err(invalid("class ids must be contiguous from 0"));
    }
    let mut edges = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if class_of[x] != class_of[y] && !g.has_edge(x, y) {
                let ev = lists.len();
                lists.push(vec![x + 1, y + 1]);
                edges.push((class_of[x], ev));
                edges.push((class_of[y], ev));
            }
        }
    }
    let graph = MixedGraph::new(lists.len(), edges, []).expect("construction is a valid mixed graph");
    Ok(ListColoringInstance {
        graph,
        lists,
        ell: g.n(),
    })
}

/// One vertex per class, pairwise adjacent; first found in lexicographic order.
pub fn multicolored_clique_oracle(g: &MixedGraph, class_of: &[usize]) -> Option<Vec<usize>> {
    let classes = class_of.iter().max().map_or(0, |m| m + 1);
    let members: Vec<Vec<usize>> = (0..classes)
        .map(|c| (0..g.n()).filter(|&v| class_of[v] == c).collect())
        .collect();
    fn rec(i: usize, members: &[Vec<usize>], g: &MixedGraph, pick: &mut Vec<usize>) -> bool {
        if i == members.len() {
            return true;
        }
        for &v in &members[i] {
            if pick.iter().all(|&u| g.has_edge(u, v)) {
                pick.push(v);
                if rec(i + 1, members, g, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    let mut pick = Vec::new();
    rec(0, &members, g, &mut pick).then_some(pick)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::random::rng;
    use crate::solvers::brute::brute_force_decide;
    use rand::Rng;

    /// Five vertices a..e in classes {a, c}, {b, d}, {e}; the multicolored
    /// triangle is a, b, e.
    fn five_vertex_instance() -> (MixedGraph, Vec<usize>) {
        let (a, b, c, d, e) = (0, 1, 2, 3, 4);
        let g = MixedGraph::new(5, [(a, b), (a, e), (b, e), (c, d), (c, b), (d, e)], []).unwrap();
        (g, vec![0, 1, 0, 1, 2])
    }

    #[test]
    fn five_vertex_example() {
        let (g, class_of) = five_vertex_instance();
        assert_eq!(multicolored_clique_oracle(&g, &class_of), Some(vec![0, 1, 4]));
        let inst = reduce_multicolored_clique(&g, &class_of).unwrap();
        assert_eq!(inst.lists[..3], [vec![1, 3], vec![2, 4], vec![5]]);
        let coloring = list_coloring_oracle(&inst).unwrap();
        for (v, list) in inst.lists.iter().enumerate() {
            assert!(list.contains(&coloring[v]));
        }
    }

    #[test]
    fn complete_multipartite_has_no_edge_vertices() {
        let g = MixedGraph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)], []).unwrap();
        let inst = reduce_multicolored_clique(&g, &[0, 0, 1, 1]).unwrap();
        assert_eq!(inst.graph.n(), 2);
        assert!(list_coloring_oracle(&inst).is_some());
    }

    #[test]
    fn clique_iff_list_colorable_on_random_instances() {
        let mut r = rng(14);
        for _ in 0..200 {
            let n = r.gen_range(3..=8);
            let class_of: Vec<usize> = (0..n).map(|v| if v < 3 { v } else { r.gen_range(0..3) }).collect();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| r.gen_bool(0.6))
                .collect();
            let g = MixedGraph::new(n, edges, []).unwrap();
            let inst = reduce_multicolored_clique(&g, &class_of).unwrap();
            assert_eq!(
                multicolored_clique_oracle(&g, &class_of).is_some(),
                list_coloring_oracle(&inst).is_some()
            );
        }
    }

    #[test]
    fn path_gadgets() {
        let v = ListColoringInstance {
            graph: MixedGraph::edgeless(1),
            lists: vec![vec![1, 4]],
            ell: 5,
        };
        let (g, ell) = reduce_list_coloring(&v).unwrap();
        assert_eq!((g.n(), ell), (16, 5));
        assert_eq!(g.arcs().len(), 12);
        assert!(g.has_edge(0, 1 + 1) && g.has_edge(0, 6 + 2) && g.has_edge(0, 11 + 4));
        let full = ListColoringInstance {
            graph: MixedGraph::new(2, [(0, 1)], []).unwrap(),
            lists: vec![vec![1, 2], vec![1, 2]],
            ell: 2,
        };
        assert_eq!(reduce_list_coloring(&full).unwrap().0, full.graph);
    }

    #[test]
    fn single_vertex_lists() {
        for (list, color) in [(vec![2], 2), (vec![1], 1)] {
            let inst = ListColoringInstance {
                graph: MixedGraph::edgeless(1),
                lists: vec![list],
                ell: 2,
            };
            let (g, ell) = reduce_list_coloring(&inst).unwrap();
            let r = brute_force_decide(&g, ell, &Budget::default()).unwrap();
            assert_eq!(r.witness.unwrap().color(0), color);
            assert_eq!(list_coloring_oracle(&inst), Some(vec![color as usize]));
        }
    }

    #[test]
    fn validation() {
        let bad = ListColoringInstance {
            graph: MixedGraph::edgeless(1),
            lists: vec![vec![3]],
            ell: 2,
        };
        assert!(reduce_list_coloring(&bad).is_err());
        let arcs = ListColoringInstance {
            graph: crate::graph::directed_path(1),
            lists: vec![vec![1], vec![2]],
            ell: 2,
        };
        assert!(arcs.validate().is_err());
    }
}
