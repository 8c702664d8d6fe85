//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::MixedGraph;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each vertex pair independently becomes an arc with probability `arc_p`,
/// else an edge with probability `edge_p`. Arcs follow a random hidden
/// vertex order, so the result is always acyclic.
pub fn random_mixed_graph<R: Rng>(rng: &mut R, n: usize, edge_p: f64, arc_p: f64) -> MixedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let x: f64 = rng.gen();
            if x < arc_p {
                arcs.push(if pos[u] < pos[v] { (u, v) } else { (v, u) });
            } else if x < arc_p + edge_p {
                edges.push((u, v));
            }
        }
    }
    MixedGraph::new(n, edges, arcs).expect("random graph is valid")
}

/// `count` graphs with `1..=max_n` vertices, sweeping edge and arc densities
/// over a fixed grid.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<MixedGraph> {
    const DENSITIES: [(f64, f64); 8] = [
        (0.0, 0.3),
        (0.3, 0.0),
        (0.2, 0.2),
        (0.4, 0.2),
        (0.2, 0.4),
        (0.5, 0.4),
        (0.1, 0.7),
        (0.7, 0.1),
    ];
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(1..=max_n);
            let (e, a) = DENSITIES[i % DENSITIES.len()];
            random_mixed_graph(&mut r, n, e, a)
        })
        .collect()
}
