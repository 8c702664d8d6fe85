//! Tree decompositions: PACE `.td` I/O, validation, and a min-fill
//! elimination heuristic.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::graph::MixedGraph;

use super::SolverError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Bag contents, ascending. Bag ids are indices.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag ids.
    pub tree: Vec<(usize, usize)>,
}

fn invalid(msg: impl Into<String>) -> SolverError {
    SolverError::InvalidDecomposition(msg.into())
}

impl TreeDecomposition {
    /// Largest bag size minus one (0 without bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Min-fill elimination on the underlying undirected graph.
    pub fn min_fill(g: &MixedGraph) -> TreeDecomposition {
        let n = g.n();
        let mut adj = g.underlying_adjacency();
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        let mut order = Vec::with_capacity(n);
        let mut later_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for _ in 0..n {
            let v = alive
                .ones()
                .min_by_key(|&v| {
                    let nb: Vec<usize> = adj[v].intersection(&alive).collect();
                    let mut fill = 0usize;
                    for (i, &a) in nb.iter().enumerate() {
                        fill += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(b)).count();
                    }
                    (fill, nb.len(), v)
                })
                .expect("a vertex is alive");
            let nb: Vec<usize> = adj[v].intersection(&alive).collect();
            for &a in &nb {
                for &b in &nb {
                    if a != b {
                        adj[a].insert(b);
                    }
                }
            }
            alive.set(v, false);
            later_nbrs[v] = nb;
            order.push(v);
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // bag i belongs to the i-th eliminated vertex
        let bags: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| {
                let mut b = later_nbrs[v].clone();
                b.push(v);
                b.sort_unstable();
                b
            })
            .collect();
        let mut tree = Vec::new();
        let mut roots = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            match later_nbrs[v].iter().map(|&w| pos[w]).min() {
                Some(p) => tree.push((i, p)),
                None => roots.push(i),
            }
        }
        for w in roots.windows(2) {
            tree.push((w[0], w[1]));
        }
        TreeDecomposition { bags, tree }
    }

    /// Checks coverage of vertices and relations, that the bag graph is a
    /// tree, and that each vertex occupies a connected subtree.
    pub fn validate(&self, g: &MixedGraph) -> Result<(), SolverError> {
        let b = self.bags.len();
        if b == 0 {
            return if g.is_empty() {
                Ok(())
            } else {
                Err(invalid("no bags for a nonempty graph"))
            };
        }
        let mut contains = vec![FixedBitSet::with_capacity(g.n()); b];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    return Err(invalid(format!("bag {} holds unknown vertex {}", i + 1, v + 1)));
                }
                contains[i].insert(v);
            }
        }
        if self.tree.len() != b - 1 {
            return Err(invalid(format!("{} bags need {} tree edges, found {}", b, b - 1, self.tree.len())));
        }
        let mut nbrs = vec![Vec::new(); b];
        for &(x, y) in &self.tree {
            if x >= b || y >= b || x == y {
                return Err(invalid(format!("bad tree edge {} {}", x + 1, y + 1)));
            }
            nbrs[x].push(y);
            nbrs[y].push(x);
        }
        let mut seen = vec![false; b];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &nbrs[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(invalid("bag graph is not connected"));
        }
        for v in g.vertices() {
            let holders: Vec<usize> = (0..b).filter(|&i| contains[i].contains(v)).collect();
            let Some(&first) = holders.first() else {
                return Err(invalid(format!("vertex {} is in no bag", v + 1)));
            };
            // connected: a search inside holders reaches them all
            let mut reached = vec![false; b];
            reached[first] = true;
            let mut stack = vec![first];
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &nbrs[x] {
                    if !reached[y] && contains[y].contains(v) {
                        reached[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != holders.len() {
                return Err(invalid(format!("bags holding vertex {} are not connected", v + 1)));
            }
        }
        for &(u, v) in g.edges().iter().chain(g.arcs()) {
            if !contains.iter().any(|c| c.contains(u) && c.contains(v)) {
                return Err(invalid(format!("no bag holds both {} and {}", u + 1, v + 1)));
            }
        }
        Ok(())
    }

    /// PACE 2017 `.td` text.
    pub fn to_pace(&self, n: usize) -> String {
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = format!("s td {} {} {}\n", self.bags.len(), max_bag, n);
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for &v in bag {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        for &(x, y) in &self.tree {
            let _ = writeln!(out, "{} {}", x + 1, y + 1);
        }
        out
    }

    pub fn from_pace(text: &str) -> Result<TreeDecomposition, SolverError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut tree = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| invalid(format!("line {line_no}: bad number '{t}'")))
            };
            match toks[0] {
                "s" => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(invalid(format!("line {line_no}: expected 's td <bags> <max> <n>'")));
                    }
                    let h = (num(toks[2])?, num(toks[3])?, num(toks[4])?);
                    bags = vec![None; h.0];
                    header = Some(h);
                }
                "b" => {
                    let (_, _, n) = header.ok_or_else(|| invalid("bag before header"))?;
                    let id = num(toks.get(1).copied().unwrap_or(""))?;
                    if id == 0 || id > bags.len() {
                        return Err(invalid(format!("line {line_no}: bag id {id} out of range")));
                    }
                    let mut bag = Vec::new();
                    for t in &toks[2..] {
                        let v = num(t)?;
                        if v == 0 || v > n {
                            return Err(invalid(format!("line {line_no}: vertex {v} out of range")));
                        }
                        bag.push(v - 1);
                    }
                    bag.sort_unstable();
                    bag.dedup();
                    bags[id - 1] = Some(bag);
                }
                _ => {
                    if header.is_none() || toks.len() != 2 {
                        return Err(invalid(format!("line {line_no}: unexpected '{line}'")));
                    }
                    let (x, y) = (num(toks[0])?, num(toks[1])?);
                    if x == 0 || y == 0 || x > bags.len() || y > bags.len() {
                        return Err(invalid(format!("line {line_no}: tree edge out of range")));
                    }
                    tree.push((x - 1, y - 1));
                }
            }
        }
        let (_, max_bag, _) = header.ok_or_else(|| invalid("missing 's td' header"))?;
        let bags: Vec<Vec<usize>> = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| invalid(format!("bag {} missing", i + 1))))
            .collect::<Result<_, _>>()?;
        if bags.iter().any(|b| b.len() > max_bag) {
            return Err(invalid("a bag exceeds the declared maximum size"));
        }
        Ok(TreeDecomposition { bags, tree })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, directed_path};
    use crate::random::corpus;

    #[test]
    fn path_gets_width_one() {
        let g = directed_path(4);
        let td = TreeDecomposition::min_fill(&g);
        assert_eq!(td.width(), 1);
        td.validate(&g).unwrap();
    }

    #[test]
    fn clique_gets_one_wide_bag() {
        let g = complete_graph(5);
        let td = TreeDecomposition::min_fill(&g);
        assert_eq!(td.width(), 4);
        td.validate(&g).unwrap();
    }

    #[test]
    fn min_fill_is_valid_on_random_graphs() {
        for g in corpus(4, 100, 10) {
            TreeDecomposition::min_fill(&g).validate(&g).unwrap();
        }
    }

    #[test]
    fn pace_roundtrip() {
        let g = directed_path(3);
        let td = TreeDecomposition::min_fill(&g);
        let text = td.to_pace(g.n());
        assert!(text.starts_with("s td 4 2 4\n"));
        assert_eq!(TreeDecomposition::from_pace(&text).unwrap(), td);
    }

    #[test]
    fn validation_catches_defects() {
        let g = directed_path(2);
        let missing_relation = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2]],
            tree: vec![(0, 1)],
        };
        assert!(missing_relation.validate(&g).is_err());
        let disconnected = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2], vec![1, 2]],
            tree: vec![(0, 1), (1, 2)],
        };
        assert!(disconnected.validate(&g).is_err());
        let not_tree = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            tree: vec![],
        };
        assert!(not_tree.validate(&g).is_err());
        let ok = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            tree: vec![(0, 1)],
        };
        ok.validate(&g).unwrap();
        assert!(TreeDecomposition::from_pace("b 1 1").is_err());
        assert!(TreeDecomposition::from_pace("s td 1 1 2\nb 1 1 2\n").is_err());
    }
}
