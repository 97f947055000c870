//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unipress::genesis::random_cup;
use unipress::{Label, PseudoGraph};

/// A random connected uniquely pressable graph on `n` vertices with its
/// labels shuffled, so the recognizer has to discover the order.
pub fn shuffled_cup(n: usize, seed: u64) -> PseudoGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_cup(n, &mut rng);
    let mut perm: Vec<Label> = (1..=n as Label).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(|v| perm[v as usize - 1])
        .expect("a permutation of 1..=n")
}

/// A uniformly random pseudo-graph on `1..=n` with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> PseudoGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=n as Label {
        for j in i..=n as Label {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    PseudoGraph::on_range(n, edges).expect("labels 1..=n")
}
