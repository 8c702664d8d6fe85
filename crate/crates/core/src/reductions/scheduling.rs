//! Two-machine unit-task scheduling with precedences as mixed coloring.
//!
//! Every time unit spans four colors. A directed path `p_1 … p_{4D}` pins
//! color `i` to `p_i`; edges to the path restrict each task vertex to one
//! residue class mod 4 (machine 1: start ≡ 1, end ≡ 3; machine 2:
//! start ≡ 2, end ≡ 0).

use serde::{Deserialize, Serialize};

use crate::graph::MixedGraph;

use super::{invalid, ReductionError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchedulingInstance {
    /// Task ids on machine 1.
    pub tasks_m1: Vec<usize>,
    /// Task ids on machine 2.
    pub tasks_m2: Vec<usize>,
    /// `(t, t')`: `t` finishes before `t'` starts.
    pub precedence: Vec<(usize, usize)>,
    pub deadline: usize,
}

impl SchedulingInstance {
    /// Tasks in vertex order: machine 1 first, each list in input order.
    pub fn tasks(&self) -> Vec<(usize, u8)> {
        self.tasks_m1
            .iter()
            .map(|&t| (t, 1))
            .chain(self.tasks_m2.iter().map(|&t| (t, 2)))
            .collect()
    }

    fn position(&self, t: usize) -> Option<usize> {
        self.tasks().iter().position(|&(x, _)| x == t)
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.deadline == 0 {
            return Err(invalid("deadline must be positive"));
        }
        let tasks = self.tasks();
        for (i, (t, _)) in tasks.iter().enumerate() {
            if tasks[..i].iter().any(|(x, _)| x == t) {
                return Err(invalid(format!("task {t} appears twice")));
            }
        }
        let m = tasks.len();
        let mut idx = Vec::with_capacity(self.precedence.len());
        for &(a, b) in &self.precedence {
            match (self.position(a), self.position(b)) {
                (Some(x), Some(y)) if x != y => idx.push((x, y)),
                (Some(_), Some(_)) => return Err(invalid(format!("task {a} precedes itself"))),
                _ => return Err(invalid(format!("precedence ({a}, {b}) names an unknown task"))),
            }
        }
        if MixedGraph::new(m, [], idx).is_err() {
            return Err(invalid("precedences contain a cycle"));
        }
        Ok(())
    }
}

/// A start time in `0..D` per task (in [`SchedulingInstance::tasks`]
/// order), the first found by backtracking over tasks in order.
pub fn schedule_oracle(inst: &SchedulingInstance) -> Option<Vec<usize>> {
    let tasks = inst.tasks();
    let prec: Vec<(usize, usize)> = inst
        .precedence
        .iter()
        .map(|&(a, b)| (inst.position(a).expect("valid"), inst.position(b).expect("valid")))
        .collect();
    fn rec(
        i: usize,
        tasks: &[(usize, u8)],
        prec: &[(usize, usize)],
        d: usize,
        sigma: &mut Vec<usize>,
    ) -> bool {
        if i == tasks.len() {
            return true;
        }
        for s in 0..d {
            let busy = (0..i).any(|j| tasks[j].1 == tasks[i].1 && sigma[j] == s);
            let order = prec.iter().all(|&(a, b)| {
                if b == i && a < i {
                    sigma[a] < s
                } else if a == i && b < i {
                    s < sigma[b]
                } else {
                    true
                }
            });
            if !busy && order {
                sigma.push(s);
                if rec(i + 1, tasks, prec, d, sigma) {
                    return true;
                }
                sigma.pop();
            }
        }
        false
    }
    let mut sigma = Vec::with_capacity(tasks.len());
    rec(0, &tasks, &prec, inst.deadline, &mut sigma).then_some(sigma)
}

/// Returns the graph and `4D`. Vertices: `p_1..p_{4D}`, then per task its
/// start and end vertex.
pub fn reduce_scheduling(inst: &SchedulingInstance) -> Result<(MixedGraph, usize), ReductionError> {
    inst.validate()?;
    let k = 4 * inst.deadline;
    let tasks = inst.tasks();
    let start = |i: usize| k + 2 * i;
    let end = |i: usize| k + 2 * i + 1;
    let mut arcs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut edges = Vec::new();
    for (i, &(_, machine)) in tasks.iter().enumerate() {
        arcs.push((start(i), end(i)));
        let (rs, re) = if machine == 1 { (1, 3) } else { (2, 0) };
        for p in 1..=k {
            if p % 4 != rs {
                edges.push((start(i), p - 1));
            }
            if p % 4 != re {
                edges.push((end(i), p - 1));
            }
        }
    }
    for &(a, b) in &inst.precedence {
        let (x, y) = (inst.position(a).expect("valid"), inst.position(b).expect("valid"));
        arcs.push((end(x), start(y)));
    }
    let joined: std::collections::BTreeSet<(usize, usize)> =
        arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let task_vertices: Vec<usize> = (k..k + 2 * tasks.len()).collect();
    for (i, &u) in task_vertices.iter().enumerate() {
        for &v in &task_vertices[i + 1..] {
            if !joined.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    let g = MixedGraph::new(k + 2 * tasks.len(), edges, arcs).map_err(|e| invalid(e.to_string()))?;
    Ok((g, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::graph::{check_proper, Coloring};
    use crate::params::{undirected_neighborhood_partition, ndu};
    use crate::solvers::brute::brute_force_decide;

    fn example(d: usize) -> SchedulingInstance {
        SchedulingInstance {
            tasks_m1: vec![1],
            tasks_m2: vec![2, 3],
            precedence: vec![(1, 3)],
            deadline: d,
        }
    }

    /// The coloring a schedule induces.
    fn coloring_of(inst: &SchedulingInstance, sigma: &[usize]) -> Coloring {
        let k = 4 * inst.deadline;
        let mut c: Vec<u32> = (1..=k as u32).collect();
        for (i, &(_, m)) in inst.tasks().iter().enumerate() {
            let off = if m == 1 { 1 } else { 2 };
            c.push((4 * sigma[i] + off) as u32);
            c.push((4 * sigma[i] + off + 2) as u32);
        }
        Coloring::new(c).unwrap()
    }

    #[test]
    fn example_instance() {
        let inst = example(2);
        let sigma = schedule_oracle(&inst).unwrap();
        let (g, k) = reduce_scheduling(&inst).unwrap();
        assert_eq!((g.n(), k), (14, 8));
        assert_eq!(check_proper(&g, &coloring_of(&inst, &sigma)), Ok(None));
        assert_eq!(schedule_oracle(&example(1)), None);
        let (g1, k1) = reduce_scheduling(&example(1)).unwrap();
        assert!(!brute_force_decide(&g1, k1, &Budget::default()).unwrap().colorable);
    }

    #[test]
    fn no_tasks() {
        let inst = SchedulingInstance {
            tasks_m1: vec![],
            tasks_m2: vec![],
            precedence: vec![],
            deadline: 1,
        };
        let (g, k) = reduce_scheduling(&inst).unwrap();
        assert_eq!(g, crate::graph::directed_path(3));
        assert!(brute_force_decide(&g, k, &Budget::default()).unwrap().colorable);
    }

    #[test]
    fn closure_has_eight_undirected_types() {
        let inst = example(2);
        let (g, _) = reduce_scheduling(&inst).unwrap();
        let closure = g.transitive_closure();
        assert_eq!(ndu(&closure), 8);
        assert_eq!(undirected_neighborhood_partition(&closure).len(), 8);
    }

    #[test]
    fn validation() {
        let mut bad = example(2);
        bad.precedence.push((3, 1));
        assert!(reduce_scheduling(&bad).is_err());
        let mut dup = example(2);
        dup.tasks_m2.push(1);
        assert!(dup.validate().is_err());
        let mut unknown = example(2);
        unknown.precedence.push((1, 9));
        assert!(unknown.validate().is_err());
        assert!(example(0).validate().is_err());
    }
}
