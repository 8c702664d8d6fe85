//! Branching on the first color class.
//!
//! Some optimal coloring gives color 1 to a maximal independent set of the
//! inrank-0 vertices, so the search tries each such set, removes it, and
//! recurses with one color fewer.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Coloring, MixedGraph};
use crate::par;

use super::{SolveResult, SolveStats};

/// One search node: the residual vertex set and how many maximal
/// independent sets were branched on there.
pub type TraceEntry = (Vec<usize>, usize);

#[derive(Debug, Clone)]
pub struct BranchOutcome {
    pub result: SolveResult,
    /// Empty unless requested through [`branching_decide_traced`].
    pub trace: Vec<TraceEntry>,
}

struct Search<'a> {
    g: &'a MixedGraph,
    topo: Vec<usize>,
    budget: &'a Budget,
    /// Residual set -> largest k known to fail.
    memo: HashMap<FixedBitSet, usize>,
    nodes: u64,
    trace: Option<Vec<TraceEntry>>,
    /// `classes[d]` gets color `d+1`.
    classes: Vec<Vec<usize>>,
}

/// Maximal independent sets of `cand` under the edge relation of `g`, by
/// descending size, then lexicographically.
pub fn maximal_independent_sets(g: &MixedGraph, cand: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    // Bron–Kerbosch with pivoting on the complement graph
    fn bk(
        g: &MixedGraph,
        r: &mut Vec<usize>,
        p: FixedBitSet,
        x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                let mut s = r.clone();
                s.sort_unstable();
                out.push(s);
            }
            return;
        }
        let non_nbrs = |v: usize, set: &FixedBitSet| -> FixedBitSet {
            let mut s = set.clone();
            s.set(v, false);
            for &w in g.edge_neighbors(v) {
                s.set(w, false);
            }
            s
        };
        let pivot = p
            .union(&x)
            .max_by_key(|&u| non_nbrs(u, &p).count_ones(..))
            .expect("p is nonempty");
        let pivot_non = non_nbrs(pivot, &p);
        let branch: Vec<usize> = p.difference(&pivot_non).collect();
        let (mut p, mut x) = (p, x);
        for v in branch {
            r.push(v);
            bk(g, r, non_nbrs(v, &p), non_nbrs(v, &x), out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    let mut p = FixedBitSet::with_capacity(n);
    for &v in cand {
        p.insert(v);
    }
    if p.is_clear() {
        return out;
    }
    bk(g, &mut Vec::new(), p, FixedBitSet::with_capacity(n), &mut out);
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

impl<'a> Search<'a> {
    fn new(g: &'a MixedGraph, budget: &'a Budget, trace: bool) -> Self {
        Search {
            g,
            topo: g.topological_order(),
            budget,
            memo: HashMap::new(),
            nodes: 0,
            trace: trace.then(Vec::new),
            classes: Vec::new(),
        }
    }

    fn sources(&self, res: &FixedBitSet) -> Vec<usize> {
        res.ones()
            .filter(|&v| self.g.in_neighbors(v).iter().all(|&u| !res.contains(u)))
            .collect()
    }

    fn maxrank(&self, res: &FixedBitSet) -> usize {
        let mut rank = vec![0usize; self.g.n()];
        let mut best = 0;
        for &v in &self.topo {
            if !res.contains(v) {
                continue;
            }
            let r = self
                .g
                .in_neighbors(v)
                .iter()
                .filter(|&&u| res.contains(u))
                .map(|&u| rank[u] + 1)
                .max()
                .unwrap_or(0);
            rank[v] = r;
            best = best.max(r);
        }
        best
    }

    /// Branches at the current node: returns the sets to try.
    fn expand(&mut self, res: &FixedBitSet) -> Vec<Vec<usize>> {
        let sets = maximal_independent_sets(self.g, &self.sources(res));
        if let Some(t) = &mut self.trace {
            t.push((res.ones().collect(), sets.len()));
        }
        sets
    }

    fn colorable(&mut self, res: &FixedBitSet, k: usize) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        self.nodes += 1;
        if res.is_clear() {
            return Ok(true);
        }
        if k == 0 || self.maxrank(res) + 1 > k {
            return Ok(false);
        }
        if self.memo.get(res).is_some_and(|&failed| failed >= k) {
            return Ok(false);
        }
        for set in self.expand(res) {
            let mut next = res.clone();
            for &v in &set {
                next.set(v, false);
            }
            self.classes.push(set);
            if self.colorable(&next, k - 1)? {
                return Ok(true);
            }
            self.classes.pop();
        }
        let e = self.memo.entry(res.clone()).or_insert(0);
        *e = (*e).max(k);
        Ok(false)
    }
}

fn coloring_of(n: usize, classes: &[Vec<usize>]) -> Coloring {
    let mut colors = vec![0u32; n];
    for (d, class) in classes.iter().enumerate() {
        for &v in class {
            colors[v] = d as u32 + 1;
        }
    }
    Coloring::new(colors).expect("every vertex lies in a class")
}

fn run(g: &MixedGraph, k: usize, budget: &Budget, trace: bool) -> Result<BranchOutcome, BudgetExceeded> {
    let mut root = Search::new(g, budget, trace);
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    root.budget.tick()?;
    root.nodes = 1;
    let trivial = if g.is_empty() {
        Some(true)
    } else if k == 0 || root.maxrank(&all) + 1 > k {
        Some(false)
    } else {
        None
    };
    if let Some(ans) = trivial {
        let stats = SolveStats {
            nodes: 1,
            ..SolveStats::default()
        };
        let result = if ans {
            SolveResult::yes(coloring_of(g.n(), &[]), stats)
        } else {
            SolveResult::no(stats)
        };
        return Ok(BranchOutcome {
            result,
            trace: root.trace.unwrap_or_default(),
        });
    }
    let sets = root.expand(&all);
    // each root branch owns its memo, so counts do not depend on scheduling
    let (hit, sides) = par::first_hit(&sets, |set| {
        let mut s = Search::new(g, budget, trace);
        let mut next = all.clone();
        for &v in set {
            next.set(v, false);
        }
        s.classes.push(set.clone());
        match s.colorable(&next, k - 1) {
            Ok(true) => (Some(Ok(coloring_of(g.n(), &s.classes))), (s.nodes, s.trace)),
            Ok(false) => (None, (s.nodes, s.trace)),
            Err(e) => (Some(Err(e)), (s.nodes, s.trace)),
        }
    });
    let mut nodes = 1;
    let mut full_trace = root.trace.unwrap_or_default();
    for (n, t) in sides {
        nodes += n;
        full_trace.extend(t.unwrap_or_default());
    }
    let stats = SolveStats {
        nodes,
        ..SolveStats::default()
    };
    let result = match hit {
        Some((_, Ok(w))) => SolveResult::yes(w, stats),
        Some((_, Err(e))) => return Err(e),
        None => SolveResult::no(stats),
    };
    Ok(BranchOutcome {
        result,
        trace: full_trace,
    })
}

pub fn branching_decide(g: &MixedGraph, k: usize, budget: &Budget) -> Result<BranchOutcome, BudgetExceeded> {
    run(g, k, budget, false)
}

/// Like [`branching_decide`], also recording every search node.
pub fn branching_decide_traced(
    g: &MixedGraph,
    k: usize,
    budget: &Budget,
) -> Result<BranchOutcome, BudgetExceeded> {
    run(g, k, budget, true)
}
