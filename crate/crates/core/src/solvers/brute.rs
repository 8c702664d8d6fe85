//! Backtracking oracle.

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Coloring, MixedGraph};

use super::{SolveResult, SolveStats};

pub const DEFAULT_CAP: usize = 10;

struct Search<'a> {
    g: &'a MixedGraph,
    order: Vec<usize>,
    k: u32,
    color: Vec<u32>,
    budget: &'a Budget,
    nodes: u64,
}

impl Search<'_> {
    fn go(&mut self, i: usize) -> Result<bool, BudgetExceeded> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.budget.tick()?;
        self.nodes += 1;
        let v = self.order[i];
        // in-neighbors precede v in topological order, so they are colored
        let floor = self
            .g
            .in_neighbors(v)
            .iter()
            .map(|&u| self.color[u])
            .max()
            .unwrap_or(0);
        for c in floor + 1..=self.k {
            let clash = self
                .g
                .edge_neighbors(v)
                .iter()
                .any(|&u| self.color[u] == c);
            if clash {
                continue;
            }
            self.color[v] = c;
            if self.go(i + 1)? {
                return Ok(true);
            }
        }
        self.color[v] = 0;
        Ok(false)
    }
}

/// Tries every assignment in topological order, colors ascending.
pub fn brute_force_decide(g: &MixedGraph, k: usize, budget: &Budget) -> Result<SolveResult, BudgetExceeded> {
    let mut s = Search {
        g,
        order: g.topological_order(),
        k: k as u32,
        color: vec![0; g.n()],
        budget,
        nodes: 0,
    };
    let ok = s.go(0)?;
    let stats = SolveStats {
        nodes: s.nodes,
        ..SolveStats::default()
    };
    Ok(if ok {
        SolveResult::yes(Coloring::new(s.color).expect("all colored"), stats)
    } else {
        SolveResult::no(stats)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{check_proper, complete_graph, directed_path};

    fn decide(g: &MixedGraph, k: usize) -> bool {
        brute_force_decide(g, k, &Budget::default()).unwrap().colorable
    }

    #[test]
    fn paths_and_triangles() {
        assert!(decide(&directed_path(4), 5));
        assert!(!decide(&directed_path(4), 4));
        assert!(decide(&complete_graph(3), 3));
        assert!(!decide(&complete_graph(3), 2));
        assert!(decide(&MixedGraph::empty(), 0));
        assert!(!decide(&MixedGraph::edgeless(1), 0));
    }

    #[test]
    fn witness_is_proper() {
        // arc 0 -> 1, edges {1,2} and {0,2}
        let g = MixedGraph::new(3, [(1, 2), (0, 2)], [(0, 1)]).unwrap();
        let r = brute_force_decide(&g, 3, &Budget::default()).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(check_proper(&g, &w), Ok(None));
        assert_eq!(w.colors(), &[1, 2, 3]);
        assert!(!decide(&g, 2));
    }
}
