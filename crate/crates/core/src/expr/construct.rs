//! Expressions built from graphs and from other expressions.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{MixedGraph, Relation};
use crate::params::{mixed_neighborhood_partition, ClassKind};

use super::{Expr, ExprError, Label};

/// An expression with the original vertex behind each introduce node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdmExpression {
    pub expr: Expr,
    /// `vertex_of[i]`: graph vertex created by the `i`-th introduce node.
    pub vertex_of: Vec<usize>,
}

/// Expression with one label per mixed type plus one auxiliary label for
/// growing clique types vertex by vertex. `None` for the empty graph.
pub fn ndm_expression(g: &MixedGraph) -> Option<NdmExpression> {
    if g.is_empty() {
        return None;
    }
    let p = mixed_neighborhood_partition(g);
    let w = p.len() as Label;
    let aux = w + 1;
    let mut vertex_of = Vec::with_capacity(g.n());
    let mut parts = Vec::with_capacity(p.len());
    for (t, (class, kind)) in p.classes.iter().zip(&p.class_kinds).enumerate() {
        let label = t as Label + 1;
        vertex_of.extend_from_slice(class);
        let part = match kind {
            ClassKind::Independent => Expr::union_all(class.iter().map(|_| Expr::intro(label))),
            ClassKind::Clique => Some(class.iter().skip(1).fold(Expr::intro(label), |e, _| {
                e.union(Expr::intro(aux)).edge(label, aux).relabel(aux, label)
            })),
        };
        parts.push(part.expect("classes are nonempty"));
    }
    let mut expr = Expr::union_all(parts).expect("graph is nonempty");
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let (la, lb) = (a as Label + 1, b as Label + 1);
            expr = match g.relation(p.classes[a][0], p.classes[b][0]) {
                Relation::None => expr,
                Relation::Edge => expr.edge(la, lb),
                Relation::Out => expr.arc(la, lb),
                Relation::In => expr.arc(lb, la),
            };
        }
    }
    Some(NdmExpression { expr, vertex_of })
}

/// Width-2 expression for the acyclic tournament on `n ≥ 1` vertices: each
/// new vertex enters with label 2, receives arcs from all label-1 vertices,
/// and is renamed to 1.
pub fn tournament_expression(n: usize) -> Expr {
    assert!(n >= 1, "a tournament needs at least one vertex");
    (1..n).fold(Expr::intro(1), |e, _| e.union(Expr::intro(2)).arc(1, 2).relabel(2, 1))
}

/// Replaces every edge operation by the two opposite arc operations.
pub fn mixed_to_directed(e: &Expr) -> Expr {
    match e {
        Expr::Intro(l) => Expr::Intro(*l),
        Expr::Union(a, b) => mixed_to_directed(a).union(mixed_to_directed(b)),
        Expr::Edge(i, j, s) => mixed_to_directed(s).arc(*i, *j).arc(*j, *i),
        Expr::Arc(i, j, s) => mixed_to_directed(s).arc(*i, *j),
        Expr::Relabel(i, j, s) => mixed_to_directed(s).relabel(*i, *j),
    }
}

pub const TC_DEFAULT_CAP: usize = 3;

/// Composite label: original label index plus the label sets (bitmasks)
/// with a directed path into (`inn`) and out of (`out`) the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Comp {
    x: usize,
    inn: u32,
    out: u32,
}

struct Tc {
    ell: usize,
    index: BTreeMap<Label, usize>,
}

fn swap_bit(mask: u32, from: usize, to: usize) -> u32 {
    if mask >> from & 1 == 1 {
        (mask & !(1 << from)) | 1 << to
    } else {
        mask
    }
}

impl Tc {
    fn enc(&self, c: Comp) -> Label {
        let s = 1u32 << self.ell;
        (c.x as u32) * s * s + c.inn * s + c.out + 1
    }

    /// Emits one relabel per occupied label that `f` moves; `f` maps onto
    /// its own fixed points, so the order is irrelevant.
    fn burst(&self, mut e: Expr, occ: &BTreeSet<Comp>, f: impl Fn(Comp) -> Comp) -> (Expr, BTreeSet<Comp>) {
        let mut next = BTreeSet::new();
        for &c in occ {
            let d = f(c);
            debug_assert_eq!(f(d), d);
            if d != c {
                e = e.relabel(self.enc(c), self.enc(d));
            }
            next.insert(d);
        }
        (e, next)
    }

    fn go(&self, e: &Expr) -> (Expr, BTreeSet<Comp>) {
        match e {
            Expr::Intro(l) => {
                let x = self.index[l];
                let c = Comp {
                    x,
                    inn: 1 << x,
                    out: 1 << x,
                };
                (Expr::intro(self.enc(c)), BTreeSet::from([c]))
            }
            Expr::Union(a, b) => {
                let (ea, mut oa) = self.go(a);
                let (eb, ob) = self.go(b);
                oa.extend(ob);
                (ea.union(eb), oa)
            }
            Expr::Relabel(i, j, s) => {
                let (e, occ) = self.go(s);
                let (a, b) = (self.index[i], self.index[j]);
                if a == b {
                    return (e, occ);
                }
                self.burst(e, &occ, |c| Comp {
                    x: if c.x == a { b } else { c.x },
                    inn: swap_bit(c.inn, a, b),
                    out: swap_bit(c.out, a, b),
                })
            }
            Expr::Edge(i, j, s) => {
                let (mut e, occ) = self.go(s);
                let (a, b) = (self.index[i], self.index[j]);
                for &c1 in occ.iter().filter(|c| c.x == a) {
                    for &c2 in occ.iter().filter(|c| c.x == b) {
                        e = e.edge(self.enc(c1), self.enc(c2));
                    }
                }
                (e, occ)
            }
            Expr::Arc(i, j, s) => {
                let (mut e, occ) = self.go(s);
                let (a, b) = (self.index[i], self.index[j]);
                let sources: Vec<Comp> = occ.iter().copied().filter(|c| c.x == a).collect();
                let targets: Vec<Comp> = occ.iter().copied().filter(|c| c.x == b).collect();
                if sources.is_empty() || targets.is_empty() {
                    return (e, occ);
                }
                // every pair joined by a new path, direct arcs included
                for &c1 in occ.iter().filter(|c| c.out >> a & 1 == 1) {
                    for &c2 in occ.iter().filter(|c| c.inn >> b & 1 == 1) {
                        if c1 != c2 {
                            e = e.arc(self.enc(c1), self.enc(c2));
                        }
                    }
                }
                let d_in = sources.iter().fold(0, |m, c| m | c.inn);
                let d_out = targets.iter().fold(0, |m, c| m | c.out);
                self.burst(e, &occ, |c| Comp {
                    x: c.x,
                    inn: if c.inn >> b & 1 == 1 { c.inn | d_in } else { c.inn },
                    out: if c.out >> a & 1 == 1 { c.out | d_out } else { c.out },
                })
            }
        }
    }
}

/// Expression for the transitive closure of `evaluate(e)`, over composite
/// labels `x·4^ℓ + I·2^ℓ + O + 1` (at most `ℓ·4^ℓ` of them). Operations on
/// labels no vertex carries are left out.
///
/// Label sets cannot tell which edge pairs a path joins, so the output is
/// meant for [`super::EvalPolicy::Closure`] evaluation.
pub fn tc_expression(e: &Expr, cap: usize) -> Result<Expr, ExprError> {
    let labels = e.labels();
    let ell = labels.len();
    if ell > cap || ell > 15 {
        return Err(ExprError::WidthCapExceeded { width: ell, cap });
    }
    let tc = Tc {
        ell,
        index: labels.into_iter().enumerate().map(|(i, l)| (l, i)).collect(),
    };
    Ok(tc.go(e).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evaluate, evaluate_digraph, evaluate_with, path4_expression, random_valid_expressions, EvalPolicy};
    use crate::graph::{acyclic_tournament, complete_graph, directed_path};
    use crate::params::ndm;
    use crate::random::{corpus, rng};

    fn relabeled(g: &MixedGraph, vertex_of: &[usize]) -> MixedGraph {
        let edges = g.edges().iter().map(|&(u, v)| (vertex_of[u], vertex_of[v]));
        let arcs = g.arcs().iter().map(|&(u, v)| (vertex_of[u], vertex_of[v]));
        MixedGraph::new(g.n(), edges, arcs).unwrap()
    }

    #[test]
    fn ndm_expression_of_a_clique() {
        let ne = ndm_expression(&complete_graph(4)).unwrap();
        assert_eq!(ne.expr.width(), 2);
        assert_eq!(evaluate(&ne.expr).unwrap().graph, complete_graph(4));
        let edgeless = ndm_expression(&MixedGraph::edgeless(5)).unwrap();
        assert!(edgeless.expr.width() <= 2);
        assert_eq!(edgeless.expr.op_counts()[2..], [0, 0, 0]);
        assert!(ndm_expression(&MixedGraph::empty()).is_none());
    }

    #[test]
    fn ndm_expression_roundtrips_on_corpus() {
        for g in corpus(3, 150, 8) {
            let ne = ndm_expression(&g).unwrap();
            assert!(ne.expr.width() <= ndm(&g) + 1);
            let lg = evaluate(&ne.expr).unwrap();
            assert_eq!(relabeled(&lg.graph, &ne.vertex_of), g);
        }
    }

    #[test]
    fn tournaments_have_width_two() {
        assert_eq!(tournament_expression(1), Expr::intro(1));
        for n in 1..=8 {
            let e = tournament_expression(n);
            assert!(e.width() <= 2);
            let g = evaluate(&e).unwrap().graph;
            assert_eq!(g, acyclic_tournament(n));
            assert_eq!(g.transitive_closure(), g);
            assert_eq!(g.maxrank(), n - 1);
        }
    }

    #[test]
    fn directed_conversion() {
        let e = Expr::intro(1).union(Expr::intro(2)).edge(1, 2);
        let d = mixed_to_directed(&e);
        assert_eq!(d, Expr::intro(1).union(Expr::intro(2)).arc(1, 2).arc(2, 1));
        assert_eq!(evaluate_digraph(&d).unwrap().1, BTreeSet::from([(0, 1), (1, 0)]));
        let p = path4_expression();
        assert_eq!(mixed_to_directed(&p), p);
        let mut r = rng(8);
        for e in random_valid_expressions(&mut r, 200, 8, 4) {
            let d = mixed_to_directed(&e);
            assert_eq!(d.op_counts()[2], 0);
            assert_eq!(d.width(), e.width());
            let g = evaluate(&e).unwrap().graph;
            assert_eq!(evaluate_digraph(&d).unwrap().1, g.corresponding_digraph());
        }
    }

    #[test]
    fn closure_of_small_paths() {
        let e = Expr::intro(1).union(Expr::intro(2)).arc(1, 2).union(Expr::intro(3)).arc(2, 3);
        let t = evaluate(&tc_expression(&e, 3).unwrap()).unwrap().graph;
        assert!(t.has_arc(0, 2));
        assert_eq!(t, directed_path(2).transitive_closure());
        let p = path4_expression();
        let t = tc_expression(&p, TC_DEFAULT_CAP).unwrap();
        assert!(t.width() <= 192);
        assert_eq!(evaluate(&t).unwrap().graph, acyclic_tournament(4));
        let flat = Expr::intro(1).union(Expr::intro(2)).edge(1, 2);
        assert_eq!(evaluate(&tc_expression(&flat, 3).unwrap()).unwrap().graph, evaluate(&flat).unwrap().graph);
    }

    #[test]
    fn closure_matches_on_random_expressions() {
        let mut r = rng(19);
        for e in random_valid_expressions(&mut r, 300, 9, 3) {
            let t = tc_expression(&e, 3).unwrap();
            let labels = t.labels();
            assert!(labels.len() <= 4usize.pow(e.width() as u32) * e.width());
            assert!(labels.iter().all(|&l| l as usize <= 192));
            let got = evaluate_with(&t, EvalPolicy::Closure).unwrap().labeled.graph;
            assert_eq!(got, evaluate(&e).unwrap().graph.transitive_closure(), "{e}");
        }
    }

    #[test]
    fn width_cap() {
        let e = Expr::intro(1).union(Expr::intro(2)).union(Expr::intro(3)).union(Expr::intro(4));
        assert_eq!(tc_expression(&e, 3), Err(ExprError::WidthCapExceeded { width: 4, cap: 3 }));
        assert!(tc_expression(&e, 4).is_ok());
    }
}
