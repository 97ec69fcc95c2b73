use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Random chordal graph on `n` vertices, deterministic per `seed`.
///
/// Vertices are inserted one at a time. Each new vertex picks one of the
/// cliques created so far and joins a random subset of it, every member kept
/// with probability `density`. The new vertex is simplicial when inserted, so
/// the reverse insertion order is a perfect elimination order.
pub fn gen_random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let density = density.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let base = cliques.choose(&mut rng).expect("at least one clique").clone();
        let attach: Vec<usize> = base.into_iter().filter(|_| rng.gen_bool(density)).collect();
        edges.extend(attach.iter().map(|&u| (u, v)));
        let mut next = attach;
        next.push(v);
        cliques.push(next);
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Erdős–Rényi `G(n, p)`, deterministic per `seed`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}
