//! Mixed cliquewidth expressions.
//!
//! Five operations build a labeled mixed graph: introduce a vertex, take a
//! disjoint union, join two labels by edges, join them by arcs, and rename a
//! label. Vertices are numbered by the left-to-right order of their
//! introduce nodes, so every subtree owns a contiguous range of vertices.

mod construct;
mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use rand::Rng;
use thiserror::Error;

use crate::graph::{GraphError, MixedGraph};

pub use construct::{mixed_to_directed, ndm_expression, tc_expression, tournament_expression, NdmExpression, TC_DEFAULT_CAP};
pub use parse::parse_expr;

pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Intro(Label),
    Union(Box<Expr>, Box<Expr>),
    Edge(Label, Label, Box<Expr>),
    Arc(Label, Label, Box<Expr>),
    Relabel(Label, Label, Box<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("operation joins label {0} to itself")]
    SameLabel(Label),
    #[error("relation between vertices {} and {} conflicts with an existing one", .0 + 1, .1 + 1)]
    ConflictingRelation(usize, usize),
    #[error("expression creates a directed cycle")]
    DirectedCycle,
    #[error("expression width {width} exceeds the cap {cap}")]
    WidthCapExceeded { width: usize, cap: usize },
}

impl Expr {
    pub fn intro(label: Label) -> Expr {
        Expr::Intro(label)
    }

    pub fn union(self, other: Expr) -> Expr {
        Expr::Union(Box::new(self), Box::new(other))
    }

    /// Left-nested union of a nonempty sequence.
    pub fn union_all(parts: impl IntoIterator<Item = Expr>) -> Option<Expr> {
        parts.into_iter().reduce(Expr::union)
    }

    pub fn edge(self, i: Label, j: Label) -> Expr {
        Expr::Edge(i, j, Box::new(self))
    }

    pub fn arc(self, i: Label, j: Label) -> Expr {
        Expr::Arc(i, j, Box::new(self))
    }

    pub fn relabel(self, from: Label, to: Label) -> Expr {
        Expr::Relabel(from, to, Box::new(self))
    }

    /// Distinct labels anywhere in the tree.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Expr::Intro(l) => {
                    out.insert(*l);
                }
                Expr::Union(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Expr::Edge(i, j, s) | Expr::Arc(i, j, s) | Expr::Relabel(i, j, s) => {
                    out.insert(*i);
                    out.insert(*j);
                    stack.push(s);
                }
            }
        }
        out
    }

    pub fn width(&self) -> usize {
        self.labels().len()
    }

    pub fn num_vertices(&self) -> usize {
        let mut n = 0;
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Expr::Intro(_) => n += 1,
                Expr::Union(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Expr::Edge(_, _, s) | Expr::Arc(_, _, s) | Expr::Relabel(_, _, s) => stack.push(s),
            }
        }
        n
    }

    /// Operation nodes of each kind: `(intro, union, edge, arc, relabel)`.
    pub fn op_counts(&self) -> [usize; 5] {
        let mut c = [0; 5];
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Expr::Intro(_) => c[0] += 1,
                Expr::Union(a, b) => {
                    c[1] += 1;
                    stack.push(a);
                    stack.push(b);
                }
                Expr::Edge(_, _, s) => {
                    c[2] += 1;
                    stack.push(s);
                }
                Expr::Arc(_, _, s) => {
                    c[3] += 1;
                    stack.push(s);
                }
                Expr::Relabel(_, _, s) => {
                    c[4] += 1;
                    stack.push(s);
                }
            }
        }
        c
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Intro(l) => write!(f, "(intro {l})"),
            Expr::Union(a, b) => write!(f, "(union {a} {b})"),
            Expr::Edge(i, j, s) => write!(f, "(edge {i} {j} {s})"),
            Expr::Arc(i, j, s) => write!(f, "(arc {i} {j} {s})"),
            Expr::Relabel(i, j, s) => write!(f, "(relabel {i} {j} {s})"),
        }
    }
}

/// How evaluation treats a relation that meets an existing one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalPolicy {
    /// Identical relations are no-ops; anything else is an error.
    #[default]
    Strict,
    /// Arcs replace edges and edges skip arc-joined pairs, the way a
    /// transitive closure drops edges parallel to paths.
    Closure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: MixedGraph,
    pub labels: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub labeled: LabeledGraph,
    /// Edge insertions skipped under [`EvalPolicy::Closure`].
    pub skipped_edges: usize,
    /// Edges replaced by arcs under [`EvalPolicy::Closure`].
    pub replaced_edges: usize,
}

struct State {
    labels: Vec<Label>,
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
    policy: Option<EvalPolicy>,
    skipped: usize,
    replaced: usize,
}

impl State {
    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), ExprError> {
        let key = (u.min(v), u.max(v));
        if self.edges.contains(&key) {
            return Ok(());
        }
        let Some(policy) = self.policy else {
            // digraph mode: an edge is a pair of opposite arcs
            self.arcs.insert((u, v));
            self.arcs.insert((v, u));
            return Ok(());
        };
        if self.arcs.contains(&(u, v)) || self.arcs.contains(&(v, u)) {
            return match policy {
                EvalPolicy::Strict => Err(ExprError::ConflictingRelation(key.0, key.1)),
                EvalPolicy::Closure => {
                    self.skipped += 1;
                    Ok(())
                }
            };
        }
        self.edges.insert(key);
        Ok(())
    }

    fn add_arc(&mut self, u: usize, v: usize) -> Result<(), ExprError> {
        if self.arcs.contains(&(u, v)) {
            return Ok(());
        }
        let Some(policy) = self.policy else {
            self.arcs.insert((u, v));
            return Ok(());
        };
        if self.arcs.contains(&(v, u)) {
            return Err(ExprError::ConflictingRelation(u.min(v), u.max(v)));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains(&key) {
            match policy {
                EvalPolicy::Strict => return Err(ExprError::ConflictingRelation(key.0, key.1)),
                EvalPolicy::Closure => {
                    self.edges.remove(&key);
                    self.replaced += 1;
                }
            }
        }
        self.arcs.insert((u, v));
        Ok(())
    }

    fn with_label(&self, r: &Range<usize>, l: Label) -> Vec<usize> {
        r.clone().filter(|&v| self.labels[v] == l).collect()
    }

    fn eval(&mut self, e: &Expr) -> Result<Range<usize>, ExprError> {
        match e {
            Expr::Intro(l) => {
                self.labels.push(*l);
                Ok(self.labels.len() - 1..self.labels.len())
            }
            Expr::Union(a, b) => {
                let ra = self.eval(a)?;
                let rb = self.eval(b)?;
                Ok(ra.start..rb.end)
            }
            Expr::Edge(i, j, s) | Expr::Arc(i, j, s) => {
                if i == j {
                    return Err(ExprError::SameLabel(*i));
                }
                let r = self.eval(s)?;
                let from = self.with_label(&r, *i);
                let to = self.with_label(&r, *j);
                for &u in &from {
                    for &v in &to {
                        if matches!(e, Expr::Edge(..)) {
                            self.add_edge(u, v)?;
                        } else {
                            self.add_arc(u, v)?;
                        }
                    }
                }
                Ok(r)
            }
            Expr::Relabel(i, j, s) => {
                let r = self.eval(s)?;
                for v in r.clone() {
                    if self.labels[v] == *i {
                        self.labels[v] = *j;
                    }
                }
                Ok(r)
            }
        }
    }
}

fn run(e: &Expr, policy: Option<EvalPolicy>) -> Result<State, ExprError> {
    let mut st = State {
        labels: Vec::new(),
        edges: BTreeSet::new(),
        arcs: BTreeSet::new(),
        policy,
        skipped: 0,
        replaced: 0,
    };
    st.eval(e)?;
    Ok(st)
}

pub fn evaluate_with(e: &Expr, policy: EvalPolicy) -> Result<Evaluation, ExprError> {
    let st = run(e, Some(policy))?;
    let graph = MixedGraph::new(st.labels.len(), st.edges, st.arcs).map_err(|err| match err {
        GraphError::DirectedCycle(_) => ExprError::DirectedCycle,
        other => unreachable!("evaluation produced an invalid graph: {other}"),
    })?;
    Ok(Evaluation {
        labeled: LabeledGraph {
            graph,
            labels: st.labels,
        },
        skipped_edges: st.skipped,
        replaced_edges: st.replaced,
    })
}

pub fn evaluate(e: &Expr) -> Result<LabeledGraph, ExprError> {
    evaluate_with(e, EvalPolicy::Strict).map(|ev| ev.labeled)
}

/// Evaluates as a digraph: edges become opposite arc pairs and opposite
/// arcs are allowed. Returns the vertex count and the arc set.
pub fn evaluate_digraph(e: &Expr) -> Result<(usize, BTreeSet<(usize, usize)>), ExprError> {
    let st = run(e, None)?;
    Ok((st.labels.len(), st.arcs))
}

/// A random expression with `intros` introduce nodes over labels
/// `1..=labels`. It may fail to evaluate.
pub fn random_expression<R: Rng>(rng: &mut R, intros: usize, labels: Label) -> Expr {
    assert!(intros >= 1 && labels >= 1);
    let mut e = if intros == 1 {
        Expr::intro(rng.gen_range(1..=labels))
    } else {
        let left = rng.gen_range(1..intros);
        random_expression(rng, left, labels).union(random_expression(rng, intros - left, labels))
    };
    if labels < 2 {
        return e;
    }
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(1..=labels);
        let mut j = rng.gen_range(1..labels);
        if j >= i {
            j += 1;
        }
        e = match rng.gen_range(0..3) {
            0 => e.edge(i, j),
            1 => e.arc(i, j),
            _ => e.relabel(i, j),
        };
    }
    e
}

/// Random expressions that evaluate without error.
pub fn random_valid_expressions<R: Rng>(rng: &mut R, count: usize, max_intros: usize, labels: Label) -> Vec<Expr> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let intros = rng.gen_range(1..=max_intros);
        let e = random_expression(rng, intros, labels);
        if evaluate(&e).is_ok() {
            out.push(e);
        }
    }
    out
}

/// The mixed 3-expression for the directed path through four vertices.
pub fn path4_expression() -> Expr {
    let inner = Expr::intro(1).union(Expr::intro(2)).arc(1, 2).union(Expr::intro(3)).arc(2, 3);
    inner.relabel(2, 1).relabel(3, 2).union(Expr::intro(3)).arc(2, 3)
}
