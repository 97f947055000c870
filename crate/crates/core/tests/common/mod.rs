#![allow(dead_code)]

use unipress::{Label, PseudoGraph};

/// Upper-triangle pairs of `1..=n`, loops included, in row-major order.
pub fn pairs(n: usize) -> Vec<(Label, Label)> {
    (1..=n as Label)
        .flat_map(|i| (i..=n as Label).map(move |j| (i, j)))
        .collect()
}

pub fn graph_from_mask(n: usize, pairs: &[(Label, Label)], mask: u64) -> PseudoGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(b, _)| (mask >> b) & 1 == 1)
        .map(|(_, &e)| e);
    PseudoGraph::on_range(n, edges).unwrap()
}

/// Every labeled pseudo-graph on `1..=n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = PseudoGraph> {
    let p = pairs(n);
    (0..1u64 << p.len()).map(move |m| graph_from_mask(n, &p, m))
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> PseudoGraph {
    let edges = pairs(n)
        .into_iter()
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e);
    PseudoGraph::on_range(n, edges).unwrap()
}

/// Every non-trivial component has a looped vertex.
pub fn each_component_looped(g: &PseudoGraph) -> bool {
    g.components()
        .iter()
        .filter(|c| !c.trivial)
        .all(|c| c.vertices.iter().any(|&v| g.is_looped(v)))
}

/// Lengths of all successful pressing sequences, by plain recursion.
pub fn successful_lengths(g: &PseudoGraph, depth: usize, out: &mut Vec<usize>) {
    if g.is_edgeless() {
        out.push(depth);
        return;
    }
    for v in g.looped_vertices() {
        successful_lengths(&g.press(v).unwrap(), depth + 1, out);
    }
}
