//! Coloring DP over a nice tree decomposition.
//!
//! Every table maps a color vector for the current bag (in ascending vertex
//! order) to a back-pointer. Introduce nodes check the new vertex against
//! its bag co-members for both edge inequality and arc order; join nodes
//! intersect; forget nodes project.

use std::collections::BTreeMap;

use crate::budget::Budget;
use crate::graph::{Coloring, MixedGraph, Relation};

use super::{SolveResult, SolveStats, SolverError, TreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Ascending.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// A nice tree decomposition; nodes are stored children first, the root
/// (with an empty bag) is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forgets and introduces on top of `node` until its bag equals `target`.
    fn morph(&mut self, mut node: usize, target: &[usize]) -> usize {
        let current = self.nodes[node].bag.clone();
        for &v in current.iter().filter(|v| !target.contains(v)) {
            let bag: Vec<usize> = self.nodes[node].bag.iter().copied().filter(|&w| w != v).collect();
            node = self.push(NiceKind::Forget(v), bag, vec![node]);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            let mut bag = self.nodes[node].bag.clone();
            bag.push(v);
            bag.sort_unstable();
            node = self.push(NiceKind::Introduce(v), bag, vec![node]);
        }
        node
    }

    pub fn from_td(td: &TreeDecomposition) -> NiceDecomposition {
        let mut nice = NiceDecomposition { nodes: Vec::new() };
        if td.bags.is_empty() {
            nice.push(NiceKind::Leaf, Vec::new(), Vec::new());
            return nice;
        }
        let b = td.bags.len();
        let mut nbrs = vec![Vec::new(); b];
        for &(x, y) in &td.tree {
            nbrs[x].push(y);
            nbrs[y].push(x);
        }
        // iterative post-order from bag 0
        let mut parent = vec![usize::MAX; b];
        let mut order = Vec::with_capacity(b);
        let mut stack = vec![0];
        parent[0] = 0;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &nbrs[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut built = vec![usize::MAX; b];
        for &x in order.iter().rev() {
            let bag = &td.bags[x];
            let kids: Vec<usize> = nbrs[x].iter().copied().filter(|&y| parent[y] == x && y != x).collect();
            let mut tops: Vec<usize> = kids.iter().map(|&y| nice.morph(built[y], bag)).collect();
            if tops.is_empty() {
                let leaf = nice.push(NiceKind::Leaf, Vec::new(), Vec::new());
                tops.push(nice.morph(leaf, bag));
            }
            let mut acc = tops[0];
            for &t in &tops[1..] {
                acc = nice.push(NiceKind::Join, bag.clone(), vec![acc, t]);
            }
            built[x] = acc;
        }
        nice.morph(built[0], &[]);
        nice
    }
}

type Table = BTreeMap<Vec<u32>, u32>;

fn fits(g: &MixedGraph, v: usize, cv: u32, bag: &[usize], colors: &[u32]) -> bool {
    bag.iter().zip(colors).all(|(&u, &cu)| match g.relation(v, u) {
        Relation::None => true,
        Relation::Edge => cu != cv,
        Relation::Out => cv < cu,
        Relation::In => cu < cv,
    })
}

/// Decides k-colorability given a valid tree decomposition.
pub fn tw_dp_decide(
    g: &MixedGraph,
    td: &TreeDecomposition,
    k: usize,
    budget: &Budget,
) -> Result<SolveResult, SolverError> {
    td.validate(g)?;
    let nice = NiceDecomposition::from_td(td);
    let k = k as u32;
    let mut tables: Vec<Table> = Vec::with_capacity(nice.nodes.len());
    let mut stats = SolveStats::default();
    for node in &nice.nodes {
        let table = match &node.kind {
            NiceKind::Leaf => Table::from([(Vec::new(), 0)]),
            NiceKind::Introduce(v) => {
                let pos = node.bag.binary_search(v).expect("introduced vertex in bag");
                let child = &tables[node.children[0]];
                let child_bag: &[usize] = &nice.nodes[node.children[0]].bag;
                let mut t = Table::new();
                for key in child.keys() {
                    for c in 1..=k {
                        budget.tick()?;
                        stats.nodes += 1;
                        if fits(g, *v, c, child_bag, key) {
                            let mut next = key.clone();
                            next.insert(pos, c);
                            t.insert(next, 0);
                        }
                    }
                }
                t
            }
            NiceKind::Forget(v) => {
                let child_node = &nice.nodes[node.children[0]];
                let pos = child_node.bag.binary_search(v).expect("forgotten vertex in child bag");
                let mut t = Table::new();
                for key in tables[node.children[0]].keys() {
                    let mut rest = key.clone();
                    let c = rest.remove(pos);
                    t.entry(rest).or_insert(c);
                }
                t
            }
            NiceKind::Join => {
                let (a, b) = (&tables[node.children[0]], &tables[node.children[1]]);
                a.keys()
                    .filter(|key| b.contains_key(*key))
                    .map(|key| (key.clone(), 0))
                    .collect()
            }
        };
        stats.max_table = stats.max_table.max(table.len() as u64);
        tables.push(table);
    }
    let root = nice.root();
    if tables[root].is_empty() {
        return Ok(SolveResult::no(stats));
    }
    // top-down reconstruction
    let mut colors = vec![0u32; g.n()];
    let mut stack: Vec<(usize, Vec<u32>)> = vec![(root, Vec::new())];
    while let Some((x, key)) = stack.pop() {
        let node = &nice.nodes[x];
        match &node.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let pos = node.bag.binary_search(v).expect("in bag");
                let mut rest = key.clone();
                colors[*v] = rest.remove(pos);
                stack.push((node.children[0], rest));
            }
            NiceKind::Forget(v) => {
                let child = node.children[0];
                let pos = nice.nodes[child].bag.binary_search(v).expect("in child bag");
                let mut full = key.clone();
                full.insert(pos, tables[x][&key]);
                stack.push((child, full));
            }
            NiceKind::Join => {
                stack.push((node.children[0], key.clone()));
                stack.push((node.children[1], key));
            }
        }
    }
    let witness = Coloring::new(colors).expect("every vertex is introduced");
    Ok(SolveResult::yes(witness, stats))
}

/// Same as [`tw_dp_decide`] with the min-fill decomposition.
pub fn tw_dp_decide_auto(g: &MixedGraph, k: usize, budget: &Budget) -> Result<SolveResult, SolverError> {
    tw_dp_decide(g, &TreeDecomposition::min_fill(g), k, budget)
}
