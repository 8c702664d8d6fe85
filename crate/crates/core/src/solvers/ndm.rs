//! k-colorability through type-endpoint preorders.
//!
//! Vertices of one mixed type have identical neighborhoods, so a type that
//! is an independent set can share a single color and is merged into one
//! representative. Every remaining type is a clique of size `|C|` needing
//! `|C|` distinct colors. A preorder fixes, for every type `C`, a half-open
//! window `[c_{p⁻(C)}, c_{p⁺(C)})` over ascending colors `c_1 < … < c_ℓ`;
//! arcs are satisfied by properness of the preorder, edges and clique sizes
//! by a feasibility program over interval/subset color counts.

use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded};
use crate::feasibility::{solve_feasibility, FeasibilityProgram};
use crate::graph::{Coloring, MixedGraph, Relation};
use crate::par;
use crate::params::{mixed_neighborhood_partition, ClassKind, NeighborhoodPartition};

use super::{SolveResult, SolveStats, SolverError};

/// How preorders are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum PreorderMode {
    /// Only preorders with every window widened as far as the arcs allow.
    #[default]
    Dominant,
    /// Every ordered partition of the `2·ndm` endpoint tokens.
    Exhaustive,
}

/// Which subset variables enter the feasibility program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum IlpEncoding {
    /// One variable per interval and per subset of types, with explicit
    /// zero constraints.
    Literal,
    /// Only subsets that are edge-free and active in the interval.
    #[default]
    Pruned,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NdmOptions {
    pub mode: PreorderMode,
    pub encoding: IlpEncoding,
}

/// Types of a graph with their sizes and type-level relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeModel {
    /// Original vertices of each type, ascending.
    pub classes: Vec<Vec<usize>>,
    pub kinds: Vec<ClassKind>,
    /// Colors each type needs: `|C|` for cliques, 1 for independent types.
    pub sizes: Vec<usize>,
    /// Bit `j` of `edge_mask[i]`: types `i` and `j` are joined by edges.
    pub edge_mask: Vec<u64>,
    pub pred_mask: Vec<u64>,
    pub succ_mask: Vec<u64>,
}

impl TypeModel {
    pub fn new(g: &MixedGraph) -> TypeModel {
        Self::from_partition(g, &mixed_neighborhood_partition(g))
    }

    pub fn from_partition(g: &MixedGraph, p: &NeighborhoodPartition) -> TypeModel {
        let m = p.len();
        assert!(m <= 64, "at most 64 types are supported");
        let sizes = p
            .classes
            .iter()
            .zip(&p.class_kinds)
            .map(|(c, k)| if *k == ClassKind::Clique { c.len() } else { 1 })
            .collect();
        let mut edge_mask = vec![0u64; m];
        let mut pred_mask = vec![0u64; m];
        let mut succ_mask = vec![0u64; m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                match g.relation(p.classes[i][0], p.classes[j][0]) {
                    Relation::Edge => edge_mask[i] |= 1 << j,
                    Relation::Out => succ_mask[i] |= 1 << j,
                    Relation::In => pred_mask[i] |= 1 << j,
                    Relation::None => {}
                }
            }
        }
        TypeModel {
            classes: p.classes.clone(),
            kinds: p.class_kinds.clone(),
            sizes,
            edge_mask,
            pred_mask,
            succ_mask,
        }
    }

    pub fn m(&self) -> usize {
        self.classes.len()
    }

    fn independent(&self, mask: u64) -> bool {
        (0..self.m()).all(|i| mask >> i & 1 == 0 || self.edge_mask[i] & mask == 0)
    }
}

/// The graph with every independent type collapsed onto its smallest
/// vertex. Returns the graph and, per original vertex, its vertex in it.
pub fn merge_independent_types(g: &MixedGraph) -> (MixedGraph, Vec<usize>) {
    let p = mixed_neighborhood_partition(g);
    let mut keep: Vec<usize> = Vec::new();
    let mut rep = vec![0; g.n()];
    for (class, kind) in p.classes.iter().zip(&p.class_kinds) {
        match kind {
            ClassKind::Clique => {
                for &v in class {
                    rep[v] = v;
                    keep.push(v);
                }
            }
            ClassKind::Independent => {
                for &v in class {
                    rep[v] = class[0];
                }
                keep.push(class[0]);
            }
        }
    }
    keep.sort_unstable();
    let mut index = vec![0; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let map = rep.iter().map(|&r| index[r]).collect();
    (g.induced(&keep), map)
}

/// Type endpoints: type `C` owns the window `[c_{p_minus[C]}, c_{p_plus[C]})`
/// with positions in `1..=ell`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TypeEndpointPreorder {
    pub ell: usize,
    pub p_minus: Vec<usize>,
    pub p_plus: Vec<usize>,
}

impl TypeEndpointPreorder {
    /// `p⁻ < p⁺` for every type and `p⁺(C_i) ≤ p⁻(C_j)` for every type arc.
    pub fn is_proper(&self, model: &TypeModel) -> bool {
        (0..model.m()).all(|i| {
            self.p_minus[i] < self.p_plus[i]
                && self.p_plus[i] <= self.ell
                && (0..model.m())
                    .filter(|&j| model.succ_mask[i] >> j & 1 == 1)
                    .all(|j| self.p_plus[i] <= self.p_minus[j])
        })
    }

    fn active(&self, i: usize, interval: usize) -> bool {
        self.p_minus[i] <= interval && interval < self.p_plus[i]
    }
}

/// Preorders where every window is as wide as the arcs allow; every proper
/// coloring corresponds to one of them. Only those with `ℓ ≤ k+1` are kept.
pub fn dominant_preorders(model: &TypeModel, k: usize) -> Vec<TypeEndpointPreorder> {
    let m = model.m();
    let nonsink: Vec<usize> = (0..m).filter(|&i| model.succ_mask[i] != 0).collect();
    let mut out = Vec::new();
    let mut blocks: Vec<u64> = Vec::new();
    fn rec(
        model: &TypeModel,
        nonsink: &[usize],
        placed: u64,
        blocks: &mut Vec<u64>,
        k: usize,
        out: &mut Vec<TypeEndpointPreorder>,
    ) {
        let all: u64 = nonsink.iter().fold(0, |acc, &i| acc | 1 << i);
        if placed == all {
            if let Some(p) = finish(model, blocks) {
                out.push(p);
            }
            return;
        }
        // blocks + start + top must fit in k+1 positions
        if blocks.len() + 3 > k + 1 {
            return;
        }
        let avail: Vec<usize> = nonsink
            .iter()
            .copied()
            .filter(|&i| placed >> i & 1 == 0 && model.pred_mask[i] & all & !placed == 0)
            .collect();
        for sub in 1u64..1 << avail.len() {
            let block = avail
                .iter()
                .enumerate()
                .filter(|(b, _)| sub >> b & 1 == 1)
                .fold(0u64, |acc, (_, &i)| acc | 1 << i);
            blocks.push(block);
            rec(model, nonsink, placed | block, blocks, k, out);
            blocks.pop();
        }
    }
    fn finish(model: &TypeModel, blocks: &[u64]) -> Option<TypeEndpointPreorder> {
        let m = model.m();
        let top = blocks.len() + 2;
        let mut p_plus = vec![top; m];
        for (bi, &block) in blocks.iter().enumerate() {
            for (i, p) in p_plus.iter_mut().enumerate() {
                if block >> i & 1 == 1 {
                    *p = bi + 2;
                }
            }
        }
        let p_minus: Vec<usize> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| model.pred_mask[i] >> j & 1 == 1)
                    .map(|j| p_plus[j])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        // maximality: each non-sink window ends where some successor starts
        let maximal = (0..m).filter(|&i| model.succ_mask[i] != 0).all(|i| {
            (0..m).any(|j| model.succ_mask[i] >> j & 1 == 1 && p_minus[j] == p_plus[i])
        });
        maximal.then_some(TypeEndpointPreorder {
            ell: top,
            p_minus,
            p_plus,
        })
    }
    rec(model, &nonsink, 0, &mut blocks, k, &mut out);
    out
}

/// Every proper preorder with `ℓ ≤ k+1`, as ordered partitions of the
/// endpoint tokens (token `2i` is `p⁻(C_i)`, token `2i+1` is `p⁺(C_i)`).
pub fn exhaustive_preorders(model: &TypeModel, k: usize) -> Vec<TypeEndpointPreorder> {
    let m = model.m();
    assert!(m <= 16, "exhaustive enumeration is limited to 16 types");
    let tokens = 2 * m;
    let full: u64 = if tokens == 64 { u64::MAX } else { (1u64 << tokens) - 1 };
    let mut out = Vec::new();
    let mut pos = vec![0usize; tokens];
    fn rec(
        model: &TypeModel,
        placed: u64,
        full: u64,
        depth: usize,
        pos: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<TypeEndpointPreorder>,
    ) {
        let m = model.m();
        if placed == full {
            let p = TypeEndpointPreorder {
                ell: depth,
                p_minus: (0..m).map(|i| pos[2 * i]).collect(),
                p_plus: (0..m).map(|i| pos[2 * i + 1]).collect(),
            };
            debug_assert!(p.is_proper(model));
            out.push(p);
            return;
        }
        if depth + 1 > k + 1 {
            return;
        }
        let rest = full & !placed;
        // iterate nonempty submasks of the unplaced tokens
        let mut sub = rest;
        while sub != 0 {
            let ok = (0..m).all(|i| {
                let minus_here = sub >> (2 * i) & 1 == 1;
                let plus_here = sub >> (2 * i + 1) & 1 == 1;
                let minus_before = placed >> (2 * i) & 1 == 1;
                // p⁻ strictly before p⁺
                let own = !plus_here || minus_before;
                // arcs: p⁺ of every predecessor at or before this p⁻
                let arcs = !minus_here
                    || (0..m)
                        .filter(|&j| model.pred_mask[i] >> j & 1 == 1)
                        .all(|j| (placed | sub) >> (2 * j + 1) & 1 == 1);
                own && arcs
            });
            if ok {
                for (t, p) in pos.iter_mut().enumerate() {
                    if sub >> t & 1 == 1 {
                        *p = depth + 1;
                    }
                }
                rec(model, placed | sub, full, depth + 1, pos, k, out);
            }
            sub = (sub - 1) & rest;
        }
    }
    rec(model, 0, full, 0, &mut pos, k, &mut out);
    out
}

/// Upper bound `(2m)!·2^(2m)` on the number of proper preorders.
pub fn preorder_count_bound(m: usize) -> f64 {
    let t = 2 * m;
    (1..=t).map(|x| x as f64).product::<f64>() * 2f64.powi(t as i32)
}

/// The feasibility program for one preorder, with the variable layout.
#[derive(Debug, Clone)]
pub struct PreorderProgram {
    pub program: FeasibilityProgram,
    /// Variable of `c_i`, `i = 1..=ℓ` stored at index `i-1`.
    pub c_vars: Vec<usize>,
    /// `(interval i, subset mask, variable)` ascending by interval then mask.
    pub x_vars: Vec<(usize, u64, usize)>,
}

fn subset_name(mask: u64, m: usize) -> String {
    let members: Vec<String> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", members.join(","))
}

pub fn build_program(
    model: &TypeModel,
    p: &TypeEndpointPreorder,
    k: usize,
    encoding: IlpEncoding,
) -> PreorderProgram {
    let m = model.m();
    let k = k as i64;
    let mut prog = FeasibilityProgram::new();
    // c_i ranges over [1, k+1]: a window ending at color k has its
    // half-open endpoint at k+1
    let c_vars: Vec<usize> = (1..=p.ell).map(|i| prog.add_var(format!("c_{i}"), 1, k + 1)).collect();
    for w in c_vars.windows(2) {
        prog.add_le(&[(w[0], 1), (w[1], -1)], -1);
    }
    let mut x_vars = Vec::new();
    if encoding == IlpEncoding::Literal {
        assert!(m <= 16, "literal encoding is limited to 16 types");
    }
    for i in 1..p.ell {
        let masks: Vec<u64> = match encoding {
            IlpEncoding::Literal => (0..1u64 << m).collect(),
            IlpEncoding::Pruned => {
                let active: Vec<usize> = (0..m).filter(|&t| p.active(t, i)).collect();
                (0..1u64 << active.len())
                    .map(|sub| {
                        active
                            .iter()
                            .enumerate()
                            .filter(|(b, _)| sub >> b & 1 == 1)
                            .fold(0u64, |acc, (_, &t)| acc | 1 << t)
                    })
                    .filter(|&mask| model.independent(mask))
                    .collect::<std::collections::BTreeSet<u64>>()
                    .into_iter()
                    .collect()
            }
        };
        for mask in masks {
            let v = prog.add_var(format!("x_{}_{i}", subset_name(mask, m)), 0, k);
            x_vars.push((i, mask, v));
        }
    }
    // interval capacity
    for i in 1..p.ell {
        let mut terms: Vec<(usize, i64)> = x_vars
            .iter()
            .filter(|&&(j, _, _)| j == i)
            .map(|&(_, _, v)| (v, 1))
            .collect();
        terms.push((c_vars[i], -1));
        terms.push((c_vars[i - 1], 1));
        prog.add_le(&terms, 0);
    }
    for t in 0..m {
        let with_t = |range: std::ops::Range<usize>| -> Vec<(usize, i64)> {
            x_vars
                .iter()
                .filter(|&&(i, mask, _)| range.contains(&i) && mask >> t & 1 == 1)
                .map(|&(_, _, v)| (v, 1))
                .collect()
        };
        let below = with_t(1..p.p_minus[t]);
        let inside = with_t(p.p_minus[t]..p.p_plus[t]);
        let above = with_t(p.p_plus[t]..p.ell);
        if !below.is_empty() {
            prog.add_eq(&below, 0);
        }
        prog.add_eq(&inside, model.sizes[t] as i64);
        if !above.is_empty() {
            prog.add_eq(&above, 0);
        }
    }
    if encoding == IlpEncoding::Literal {
        for &(_, mask, v) in &x_vars {
            if !model.independent(mask) {
                prog.add_eq(&[(v, 1)], 0);
            }
        }
    }
    PreorderProgram {
        program: prog,
        c_vars,
        x_vars,
    }
}

/// Assigns colors interval by interval: subsets in ascending bitmask order
/// each take the next `x_{S,i}` colors, shared by every type in `S`. Within
/// a type, colors go to its vertices in ascending id order.
pub fn witness_from_solution(
    g: &MixedGraph,
    model: &TypeModel,
    pp: &PreorderProgram,
    x: &[i64],
) -> Coloring {
    let m = model.m();
    let mut type_colors: Vec<Vec<u32>> = vec![Vec::new(); m];
    let mut cursor = 0i64;
    let mut last_interval = 0;
    for &(i, mask, v) in &pp.x_vars {
        if i != last_interval {
            cursor = x[pp.c_vars[i - 1]];
            last_interval = i;
        }
        for _ in 0..x[v] {
            for (t, colors) in type_colors.iter_mut().enumerate() {
                if mask >> t & 1 == 1 {
                    colors.push(cursor as u32);
                }
            }
            cursor += 1;
        }
    }
    let mut colors = vec![0u32; g.n()];
    for ((kind, class), tc) in model.kinds.iter().zip(&model.classes).zip(&type_colors) {
        match kind {
            ClassKind::Clique => {
                for (&v, &c) in class.iter().zip(tc) {
                    colors[v] = c;
                }
            }
            ClassKind::Independent => {
                for &v in class {
                    colors[v] = tc[0];
                }
            }
        }
    }
    Coloring::new(colors).expect("every type received its colors")
}

pub fn preorders_for(model: &TypeModel, k: usize, mode: PreorderMode) -> Vec<TypeEndpointPreorder> {
    match mode {
        PreorderMode::Dominant => dominant_preorders(model, k),
        PreorderMode::Exhaustive => exhaustive_preorders(model, k),
    }
}

/// Yes iff some proper preorder admits a feasible program.
pub fn ndm_fpt_decide(
    g: &MixedGraph,
    k: usize,
    opts: &NdmOptions,
    budget: &Budget,
) -> Result<SolveResult, SolverError> {
    if g.is_empty() {
        return Ok(SolveResult::yes(
            Coloring::new(Vec::new()).expect("empty"),
            SolveStats::default(),
        ));
    }
    if k == 0 {
        return Ok(SolveResult::no(SolveStats::default()));
    }
    let model = TypeModel::new(g);
    let preorders = preorders_for(&model, k, opts.mode);
    let (hit, sides) = par::first_hit(&preorders, |p| {
        let pp = build_program(&model, p, k, opts.encoding);
        let before = budget.used();
        match solve_feasibility(&pp.program, budget) {
            Ok(Some(x)) => (Some(Ok(witness_from_solution(g, &model, &pp, &x))), budget.used() - before),
            Ok(None) => (None, budget.used() - before),
            Err(e) => (Some(Err(e)), 0),
        }
    });
    let stats = SolveStats {
        nodes: sides.iter().sum(),
        preorders: sides.len() as u64,
        max_table: 0,
        ..SolveStats::default()
    };
    match hit {
        Some((_, Ok(w))) => Ok(SolveResult::yes(w, stats)),
        Some((_, Err(e))) => Err(SolverError::Budget(e)),
        None => Ok(SolveResult::no(stats)),
    }
}

/// For tests and tooling: decide with an explicit budget error type.
pub fn ndm_decide_simple(g: &MixedGraph, k: usize) -> Result<bool, BudgetExceeded> {
    match ndm_fpt_decide(g, k, &NdmOptions::default(), &Budget::default()) {
        Ok(r) => Ok(r.colorable),
        Err(SolverError::Budget(e)) => Err(e),
        Err(e) => unreachable!("{e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{acyclic_tournament, check_proper, complete_graph, directed_path};
    use crate::random::{corpus, random_mixed_graph, rng};
    use crate::solvers::brute::brute_force_decide;

    fn decide(g: &MixedGraph, k: usize, mode: PreorderMode, encoding: IlpEncoding) -> SolveResult {
        ndm_fpt_decide(g, k, &NdmOptions { mode, encoding }, &Budget::default()).unwrap()
    }

    #[test]
    fn small_examples() {
        let d = PreorderMode::Dominant;
        let e = IlpEncoding::Pruned;
        assert!(decide(&directed_path(2), 3, d, e).colorable);
        assert!(!decide(&directed_path(2), 2, d, e).colorable);
        for n in 1..=6 {
            assert!(decide(&acyclic_tournament(n), n, d, e).colorable);
            assert!(!decide(&acyclic_tournament(n), n - 1, d, e).colorable);
        }
        assert!(decide(&complete_graph(4), 4, d, e).colorable);
        assert!(!decide(&complete_graph(4), 3, d, e).colorable);
        assert!(decide(&MixedGraph::empty(), 0, d, e).colorable);
        assert!(!decide(&MixedGraph::edgeless(2), 0, d, e).colorable);
    }

    #[test]
    fn top_color_needs_endpoint_above_k() {
        // a single vertex with k = 1 only fits in the window [1, 2)
        let g = MixedGraph::edgeless(1);
        let r = decide(&g, 1, PreorderMode::Dominant, IlpEncoding::Pruned);
        assert_eq!(r.witness.unwrap().colors(), &[1]);
    }

    #[test]
    fn matches_brute_force() {
        for g in corpus(31, 120, 8) {
            for k in 1..=g.n() {
                let r = decide(&g, k, PreorderMode::Dominant, IlpEncoding::Pruned);
                let bf = brute_force_decide(&g, k, &Budget::default()).unwrap();
                assert_eq!(r.colorable, bf.colorable, "{g:?} k={k}");
                if let Some(w) = r.witness {
                    assert_eq!(check_proper(&g, &w), Ok(None));
                    assert!(w.max_color() as usize <= k);
                }
            }
        }
    }

    #[test]
    fn modes_and_encodings_agree_on_few_types() {
        let mut r = rng(12);
        let mut checked = 0;
        while checked < 40 {
            let n = 2 + checked % 5;
            let g = random_mixed_graph(&mut r, n, 0.3, 0.4);
            let model = TypeModel::new(&g);
            if model.m() > 3 {
                continue;
            }
            checked += 1;
            for k in 1..=n {
                let exhaustive = exhaustive_preorders(&model, k);
                assert!((exhaustive.len() as f64) <= preorder_count_bound(model.m()));
                assert!(exhaustive.iter().all(|p| p.is_proper(&model)));
                let dominant = dominant_preorders(&model, k);
                assert!(dominant.iter().all(|p| p.is_proper(&model) && p.ell <= k + 1));
                assert!(dominant.iter().all(|p| exhaustive.contains(p)));
                let answers: Vec<bool> = [
                    (PreorderMode::Dominant, IlpEncoding::Pruned),
                    (PreorderMode::Dominant, IlpEncoding::Literal),
                    (PreorderMode::Exhaustive, IlpEncoding::Pruned),
                    (PreorderMode::Exhaustive, IlpEncoding::Literal),
                ]
                .iter()
                .map(|&(mode, enc)| decide(&g, k, mode, enc).colorable)
                .collect();
                assert!(answers.iter().all(|&a| a == answers[0]), "{g:?} k={k} {answers:?}");
            }
        }
    }

    #[test]
    fn exhaustive_counts_for_one_and_two_types() {
        // one type: tokens {-, +} must be in two blocks
        let g = MixedGraph::edgeless(1);
        let model = TypeModel::new(&g);
        assert_eq!(exhaustive_preorders(&model, 5).len(), 1);
        // two unrelated types: ordered partitions of 4 tokens with - before +
        let g = MixedGraph::new(2, [(0, 1)], []).unwrap();
        let model = TypeModel::new(&g);
        assert_eq!(model.m(), 1);
        let g = MixedGraph::new(3, [(0, 1)], []).unwrap();
        let model = TypeModel::new(&g);
        assert_eq!(model.m(), 2);
        // brute count
        let count = exhaustive_preorders(&model, 10).len();
        let mut brute = 0;
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let used: std::collections::BTreeSet<usize> = [a, b, c, d].into();
                        let contiguous = used.iter().copied().eq(1..=used.len());
                        if contiguous && a < b && c < d {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, brute);
    }

    #[test]
    fn merging_independent_types_preserves_answers() {
        for g in corpus(41, 80, 8) {
            let (merged, map) = merge_independent_types(&g);
            assert_eq!(map.len(), g.n());
            for k in 1..=g.n() {
                let a = ndm_decide_simple(&g, k).unwrap();
                let b = ndm_decide_simple(&merged, k).unwrap();
                assert_eq!(a, b, "{g:?} k={k}");
            }
        }
    }

    /// Four types with one arc C1 -> C2 and a preorder with six endpoint
    /// positions where p⁺(C1) = p⁻(C2) = 4.
    fn four_type_instance() -> (MixedGraph, TypeEndpointPreorder) {
        // C1 = {0,1} clique, C2 = {2,3} clique, C3 = {4}, C4 = {5,6} clique
        let edges = vec![(0, 1), (2, 3), (5, 6), (0, 4), (1, 4), (4, 5), (4, 6), (2, 5), (2, 6), (3, 5), (3, 6)];
        let arcs = vec![(0, 2), (0, 3), (1, 2), (1, 3)];
        let g = MixedGraph::new(7, edges, arcs).unwrap();
        let p = TypeEndpointPreorder {
            ell: 6,
            p_minus: vec![1, 4, 2, 3],
            p_plus: vec![4, 6, 5, 6],
        };
        (g, p)
    }

    #[test]
    fn four_type_program_reconstructs_a_proper_coloring() {
        let (g, p) = four_type_instance();
        let model = TypeModel::new(&g);
        assert_eq!(model.m(), 4);
        assert_eq!(model.classes, vec![vec![0, 1], vec![2, 3], vec![4], vec![5, 6]]);
        assert!(p.is_proper(&model));
        for enc in [IlpEncoding::Literal, IlpEncoding::Pruned] {
            let pp = build_program(&model, &p, 8, enc);
            let x = solve_feasibility(&pp.program, &Budget::default()).unwrap().expect("feasible");
            let c = witness_from_solution(&g, &model, &pp, &x);
            assert_eq!(check_proper(&g, &c), Ok(None));
            assert!(c.max_color() <= 8);
        }
        let bf = brute_force_decide(&g, 8, &Budget::default()).unwrap();
        assert!(bf.colorable);
        // too few colors for six strictly ascending endpoints below k+1
        let pp = build_program(&model, &p, 4, IlpEncoding::Pruned);
        assert_eq!(solve_feasibility(&pp.program, &Budget::default()).unwrap(), None);
    }
}
