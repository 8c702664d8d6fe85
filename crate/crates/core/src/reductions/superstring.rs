//! Binary common supersequence ("superstring" here: the strings must
//! appear as subsequences) as mixed coloring.
//!
//! Each string becomes a directed path of character vertices; character
//! vertices of different strings carrying different characters are joined
//! by edges. Colors are positions in the superstring.

use serde::{Deserialize, Serialize};

use crate::expr::Expr;
use crate::graph::MixedGraph;

use super::{invalid, ReductionError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperstringInstance {
    /// Strings over `0` and `1`.
    pub strings: Vec<String>,
    pub k: usize,
}

impl SuperstringInstance {
    pub fn new(strings: &[&str], k: usize) -> Result<Self, ReductionError> {
        let inst = SuperstringInstance {
            strings: strings.iter().map(|s| s.to_string()).collect(),
            k,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.strings.is_empty() {
            return Err(invalid("no strings"));
        }
        for s in &self.strings {
            if s.is_empty() || !s.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(invalid(format!("'{s}' is not a nonempty binary string")));
            }
        }
        Ok(())
    }

    fn chars(&self) -> Vec<Vec<u8>> {
        self.strings.iter().map(|s| s.bytes().collect()).collect()
    }
}

pub fn is_subsequence(needle: &[u8], hay: &[u8]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|c| it.any(|h| h == c))
}

/// The lexicographically smallest binary string of length `k` containing
/// every string as a subsequence.
pub fn superstring_oracle(inst: &SuperstringInstance) -> Option<String> {
    let k = inst.k;
    assert!(k < 32, "oracle enumerates all 2^k strings");
    let chars = inst.chars();
    (0u32..1 << k).find_map(|bits| {
        let cand: Vec<u8> = (0..k).map(|i| if bits >> (k - 1 - i) & 1 == 1 { b'1' } else { b'0' }).collect();
        chars
            .iter()
            .all(|s| is_subsequence(s, &cand))
            .then(|| String::from_utf8(cand).expect("ascii"))
    })
}

/// Returns the graph and the color count `k`.
///
/// Unsplit: character vertices in input order. Split: each character
/// becomes, in this order, an in-sibling (carrying the incoming path arc),
/// `k-1` clique vertices joined to both siblings, and an out-sibling
/// (carrying the outgoing arc); both siblings keep the cross-string edges.
/// Every vertex of the split graph has inrank at most 1.
pub fn reduce_superstring(inst: &SuperstringInstance, split: bool) -> Result<(MixedGraph, usize), ReductionError> {
    inst.validate()?;
    let chars = inst.chars();
    let k = inst.k;
    let per_char = if split { k.saturating_sub(1) + 2 } else { 1 };
    // (string, char) -> vertices carrying the character
    let mut char_vertices: Vec<(usize, u8, Vec<usize>)> = Vec::new();
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    let mut next = 0;
    for (si, s) in chars.iter().enumerate() {
        let mut prev_out: Option<usize> = None;
        for &c in s {
            let base = next;
            next += per_char;
            let (inn, out) = if split { (base, base + per_char - 1) } else { (base, base) };
            if split {
                let clique: Vec<usize> = (base + 1..base + per_char - 1).collect();
                for (i, &a) in clique.iter().enumerate() {
                    edges.push((inn, a));
                    edges.push((a, out));
                    for &b in &clique[i + 1..] {
                        edges.push((a, b));
                    }
                }
            }
            if let Some(p) = prev_out {
                arcs.push((p, inn));
            }
            prev_out = Some(out);
            let mut carriers = vec![inn];
            if out != inn {
                carriers.push(out);
            }
            char_vertices.push((si, c, carriers));
        }
    }
    for (i, (sa, ca, va)) in char_vertices.iter().enumerate() {
        for (sb, cb, vb) in &char_vertices[i + 1..] {
            if sa != sb && ca != cb {
                for &u in va {
                    for &v in vb {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    let g = MixedGraph::new(next, edges, arcs).expect("construction is a valid mixed graph");
    Ok((g, k))
}

/// Width-6 expression for the split graph, with introduce nodes in the same
/// vertex order as [`reduce_superstring`] with `split = true`.
///
/// Labels: 1 and 2 finished character vertices (`0` and `1`), 3 finished
/// cliques, 4 the clique under construction, 5 and 6 the pending in- and
/// out-sibling. Strings are built separately, moved to 4..=6, joined to the
/// rest by edges between different characters and moved back.
pub fn split_superstring_expression(inst: &SuperstringInstance) -> Result<Expr, ReductionError> {
    inst.validate()?;
    let k = inst.k;
    let char_label = |c: u8| if c == b'0' { 1 } else { 2 };
    let clique = || -> Option<Expr> {
        // built alone, so label 3 can serve as the helper
        (1..k.saturating_sub(1)).fold((k >= 2).then(|| Expr::intro(4)), |acc, _| {
            acc.map(|e| e.union(Expr::intro(3)).edge(4, 3).relabel(3, 4))
        })
    };
    let path = |s: &[u8]| -> Expr {
        let mut e: Option<Expr> = None;
        let mut prev: Option<u8> = None;
        for &c in s {
            let mut cur = match e.take() {
                None => Expr::intro(5),
                Some(acc) => {
                    let p = prev.expect("previous character");
                    acc.union(Expr::intro(5)).arc(6, 5).relabel(6, char_label(p))
                }
            };
            if let Some(q) = clique() {
                cur = cur.union(q).edge(5, 4);
            }
            cur = cur.relabel(5, char_label(c)).union(Expr::intro(6));
            if k >= 2 {
                cur = cur.edge(6, 4).relabel(4, 3);
            }
            e = Some(cur);
            prev = Some(c);
        }
        e.expect("strings are nonempty").relabel(6, char_label(prev.expect("nonempty")))
    };
    let chars = inst.chars();
    let mut whole = path(&chars[0]);
    for s in &chars[1..] {
        let moved = path(s).relabel(1, 4).relabel(2, 5).relabel(3, 6);
        whole = whole
            .union(moved)
            .edge(1, 5)
            .edge(2, 4)
            .relabel(4, 1)
            .relabel(5, 2)
            .relabel(6, 3);
    }
    Ok(whole)
}
