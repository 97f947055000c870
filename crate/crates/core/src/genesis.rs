//! Generation and counting of connected uniquely pressable (CUP) graphs.
//!
//! Every CUP graph on `1..=n+1` arises from one on `n` vertices either by
//! appending a vertex on the right ([`extend_right`]) or prepending one on the
//! left ([`extend_left`]). Breadth-first application of both, deduplicated by
//! exact labeled equality, yields every CUP graph on `1..=n`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use crate::cholesky::graph_root;
use crate::error::{Error, Result};
use crate::f2core::{transpose_mul, BitMatrix};
use crate::graph::{Label, PseudoGraph};
use crate::recognition::{check_properties, recognize};

/// Default largest `n` accepted by [`census`].
pub const DEFAULT_CENSUS_BOUND: usize = 5;

/// Hard ceiling for the census: canonical codes are packed into a `u64`.
pub const MAX_CENSUS_N: usize = 8;

/// Checks that `g` is a CUP graph in pressing order on labels
/// `first..first+n`: its root under the label order is full length and lies
/// in the four-property class.
fn require_cup(g: &PseudoGraph, first: Label) -> Result<()> {
    let expected: Vec<Label> = (first..first + g.n() as Label).collect();
    if g.labels() != expected.as_slice() {
        return Err(Error::NotCup(format!(
            "labels must be {first}..={}",
            first + g.n() as Label - 1
        )));
    }
    if g.n() == 0 {
        return Err(Error::NotCup("graph has no vertices".into()));
    }
    let root = graph_root(g).map_err(|e| Error::NotCup(e.to_string()))?;
    let report = check_properties(root.matrix()).expect("roots are upper-triangular");
    if let Some((k, col)) = report.first_failure() {
        return Err(Error::NotCup(format!("property {k} fails at column {col}")));
    }
    Ok(())
}

/// Appends vertex `n+1`, adjacent to every looped vertex, looped iff `n` is
/// even. The root of the result is the old root with an all-ones column
/// appended.
pub fn extend_right(g: &PseudoGraph) -> Result<PseudoGraph> {
    require_cup(g, 1)?;
    Ok(extend_right_unchecked(g))
}

pub(crate) fn extend_right_unchecked(g: &PseudoGraph) -> PseudoGraph {
    let n = g.n() as Label;
    let new = n + 1;
    let mut edges: Vec<(Label, Label)> = g.edges().iter().copied().collect();
    edges.extend(g.looped_vertices().into_iter().map(|v| (v, new)));
    if n.is_multiple_of(2) {
        edges.push((new, new));
    }
    PseudoGraph::on_range(new as usize, edges).expect("labels 1..=n+1")
}

/// For `g` on labels `2..=n+1`: removes every edge (loops included) among the
/// looped vertices and adds a looped vertex `1` adjacent to all of them.
/// Pressing and deleting `1` in the result gives back `g`.
pub fn extend_left(g: &PseudoGraph) -> Result<PseudoGraph> {
    let shifted = g
        .relabel(|v| v.saturating_sub(1))
        .map_err(|e| Error::NotCup(e.to_string()))?;
    if g.labels().first() == Some(&1) {
        return Err(Error::NotCup("labels must start at 2".into()));
    }
    require_cup(&shifted, 1)?;
    Ok(extend_left_unchecked(g))
}

pub(crate) fn extend_left_unchecked(g: &PseudoGraph) -> PseudoGraph {
    let looped = g.looped_vertices();
    let mut edges: Vec<(Label, Label)> = g
        .edges()
        .iter()
        .copied()
        .filter(|(a, b)| !(looped.contains(a) && looped.contains(b)))
        .collect();
    edges.push((1, 1));
    edges.extend(looped.iter().map(|&v| (1, v)));
    let mut labels = vec![1];
    labels.extend_from_slice(g.labels());
    PseudoGraph::new(labels, edges).expect("label 1 is new")
}

fn shift_up(g: &PseudoGraph) -> PseudoGraph {
    g.relabel(|v| v + 1).expect("shift is injective")
}

/// Row-major `0`/`1` string of the adjacency matrix; used as the sort key for
/// generated output.
pub fn encoding_key(g: &PseudoGraph) -> String {
    g.adjacency_matrix()
        .rows()
        .iter()
        .map(|r| format!("{r:?}"))
        .collect()
}

/// All CUP graphs on `1..=n`, sorted by [`encoding_key`].
///
/// `n = 0` yields the single empty graph, matching `cup_count(0) = 1`.
pub fn generate_cup(n: usize) -> Vec<PseudoGraph> {
    if n == 0 {
        return vec![PseudoGraph::edgeless(0)];
    }
    let mut level: BTreeSet<PseudoGraph> =
        BTreeSet::from([PseudoGraph::on_range(1, [(1, 1)]).expect("single loop")]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for g in &level {
            next.insert(extend_right_unchecked(g));
            next.insert(extend_left_unchecked(&shift_up(g)));
        }
        level = next;
    }
    let mut out: Vec<PseudoGraph> = level.into_iter().collect();
    out.sort_by_cached_key(encoding_key);
    out
}

fn pow3(e: usize) -> BigUint {
    BigUint::from(3u32).pow(e as u32)
}

/// Number of CUP graphs on `1..=n` (equivalently, connected uniquely
/// pressable graphs on `n` vertices up to isomorphism).
///
/// `3^((n-2)/2)` for even `n >= 2`, `2 * 3^((n-3)/2)` for odd `n >= 3`;
/// `n = 0` (the empty graph) and `n = 1` (a single loop) both give 1.
pub fn cup_count(n: usize) -> BigUint {
    match n {
        0 | 1 => BigUint::from(1u32),
        _ if n.is_multiple_of(2) => pow3((n - 2) / 2),
        _ => BigUint::from(2u32) * pow3((n - 3) / 2),
    }
}

/// Number of uniquely pressable graphs on `n` vertices up to isomorphism.
///
/// `(5 * 3^((n-2)/2) + 1) / 2` for even `n >= 2`, `(3^((n+1)/2) + 1) / 2` for
/// odd `n >= 3`; `total_count(0) = 1` and `total_count(1) = 2`.
pub fn total_count(n: usize) -> BigUint {
    let two = BigUint::from(2u32);
    let one = BigUint::from(1u32);
    match n {
        0 => one,
        1 => two,
        _ if n.is_multiple_of(2) => (BigUint::from(5u32) * pow3((n - 2) / 2) + one) / two,
        _ => (pow3(n.div_ceil(2)) + one) / two,
    }
}

/// Isomorphism-class counts of uniquely pressable graphs on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub labeled_total: u64,
    pub up_iso_classes: u64,
    /// Classes whose graph has no trivial component, i.e. every vertex lies
    /// in the single non-trivial component.
    pub cup_iso_classes: u64,
}

/// Row-major adjacency code, first entry in the most significant position,
/// so numeric order is lexicographic order of the bit string.
fn code_under(a: &[u8], n: usize, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for &pi in &perm[..n] {
        let row = a[pi];
        for &pj in &perm[..n] {
            code = (code << 1) | u64::from((row >> pj) & 1);
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical form of a graph on at most [`MAX_CENSUS_N`] vertices: the
/// minimum row-major adjacency code over all vertex permutations.
pub fn canonical_code(g: &PseudoGraph) -> u64 {
    assert!(
        g.n() <= MAX_CENSUS_N,
        "canonical_code supports n <= {MAX_CENSUS_N}"
    );
    let rows = small_rows(g);
    permutations(g.n())
        .iter()
        .map(|p| code_under(&rows, g.n(), p))
        .min()
        .unwrap_or(0)
}

fn small_rows(g: &PseudoGraph) -> Vec<u8> {
    g.adjacency_matrix()
        .rows()
        .iter()
        .map(|r| r.words().first().copied().unwrap_or(0) as u8)
        .collect()
}

/// Census with the default bound.
pub fn census(n: usize) -> Result<CensusResult> {
    census_with_bound(n, DEFAULT_CENSUS_BOUND)
}

/// Enumerates all `2^(n(n+1)/2)` labeled pseudo-graphs on `1..=n`, recognizes
/// each, and counts isomorphism classes of the accepted ones. Work is split
/// across the current rayon pool; each worker keeps its own class sets.
pub fn census_with_bound(n: usize, bound: usize) -> Result<CensusResult> {
    let bound = bound.min(MAX_CENSUS_N);
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let pairs: Vec<(Label, Label)> = (1..=n as Label)
        .flat_map(|i| (i..=n as Label).map(move |j| (i, j)))
        .collect();
    let labeled_total = 1u64 << pairs.len();
    let perms = permutations(n);

    let (up, cup) = (0..labeled_total)
        .into_par_iter()
        .fold(
            || (HashSet::new(), HashSet::new()),
            |(mut up, mut cup), mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| (mask >> b) & 1 == 1)
                    .map(|(_, &e)| e);
                let g = PseudoGraph::on_range(n, edges).expect("valid labels");
                let report = recognize(&g);
                if report.is_yes() {
                    let rows = small_rows(&g);
                    let code = perms
                        .iter()
                        .map(|p| code_under(&rows, n, p))
                        .min()
                        .unwrap_or(0);
                    up.insert(code);
                    if report.stripped.is_empty() {
                        cup.insert(code);
                    }
                }
                (up, cup)
            },
        )
        .reduce(
            || (HashSet::new(), HashSet::new()),
            |(mut a, mut b), (c, d)| {
                a.extend(c);
                b.extend(d);
                (a, b)
            },
        );

    Ok(CensusResult {
        n,
        labeled_total,
        up_iso_classes: up.len() as u64,
        cup_iso_classes: cup.len() as u64,
    })
}

/// Root of the CUP graph with the given column weights: column `j` holds
/// ones exactly in rows `j-w_j+1..=j`.
pub(crate) fn root_from_weights(weights: &[usize]) -> BitMatrix {
    let mut u = BitMatrix::zeros(weights.len());
    for (j, &w) in weights.iter().enumerate() {
        for i in j + 1 - w..=j {
            u.set0(i, j, true);
        }
    }
    u
}

/// A random CUP graph on `1..=n`, built by a random sequence of left and
/// right extensions starting from the single looped vertex.
///
/// The walk runs on column weights, which determine the root: a right
/// extension appends a full-weight column, and a left extension adds a one
/// on top of every odd-weight column and prepends a weight-1 column. The
/// graph is `U^T U`, so construction costs `O(n^3 / 64)`.
pub fn random_cup<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PseudoGraph {
    if n == 0 {
        return PseudoGraph::edgeless(0);
    }
    let mut weights = vec![1usize];
    while weights.len() < n {
        if rng.gen_bool(0.5) {
            weights.push(weights.len() + 1);
        } else {
            let mut next = Vec::with_capacity(weights.len() + 1);
            next.push(1);
            next.extend(weights.iter().map(|&w| w + (w % 2)));
            weights = next;
        }
    }
    let a = transpose_mul(&root_from_weights(&weights));
    PseudoGraph::from_adjacency(&a).expect("U^T U is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PressingSequence;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, edges: &[(Label, Label)]) -> PseudoGraph {
        PseudoGraph::on_range(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn extend_right_examples() {
        let cup1 = g(1, &[(1, 1)]);
        let cup2 = extend_right(&cup1).unwrap();
        assert_eq!(cup2, g(2, &[(1, 1), (1, 2)]));
        let three = extend_right(&cup2).unwrap();
        assert_eq!(three, g(3, &[(1, 1), (1, 2), (1, 3), (3, 3)]));

        let root = graph_root(&three).unwrap();
        let last = root.matrix().column(3);
        assert_eq!(last.count_ones(), 3);
    }

    #[test]
    fn extend_left_examples() {
        let shifted = PseudoGraph::new(vec![2, 3], [(2, 2), (2, 3)]).unwrap();
        let h = extend_left(&shifted).unwrap();
        assert_eq!(h, g(3, &[(1, 1), (1, 2), (2, 3)]));
        assert_eq!(h.press_and_delete(1).unwrap(), shifted);

        let single = PseudoGraph::new(vec![2], [(2, 2)]).unwrap();
        assert_eq!(extend_left(&single).unwrap(), g(2, &[(1, 1), (1, 2)]));
    }

    #[test]
    fn extensions_reject_non_cup_inputs() {
        assert!(matches!(
            extend_right(&g(2, &[(1, 2)])),
            Err(Error::NotCup(_))
        ));
        assert!(matches!(
            extend_right(&g(2, &[(1, 1), (2, 2), (1, 2)])),
            Err(Error::NotCup(_))
        ));
        assert!(extend_right(&PseudoGraph::new(vec![2, 3], [(2, 2), (2, 3)]).unwrap()).is_err());
        assert!(extend_left(&g(2, &[(1, 1), (1, 2)])).is_err());
        assert!(extend_right(&PseudoGraph::edgeless(0)).is_err());
    }

    #[test]
    fn generated_sizes_small() {
        assert_eq!(generate_cup(1), vec![g(1, &[(1, 1)])]);
        assert_eq!(generate_cup(2), vec![g(2, &[(1, 1), (1, 2)])]);
        assert_eq!(generate_cup(6).len(), 9);
        assert_eq!(generate_cup(7).len(), 18);
    }

    #[test]
    fn counts() {
        let as_u64 = |b: BigUint| -> u64 { b.try_into().unwrap() };
        assert_eq!(as_u64(cup_count(4)), 3);
        assert_eq!(as_u64(cup_count(5)), 6);
        assert_eq!(as_u64(total_count(2)), 3);
        assert_eq!(as_u64(total_count(5)), 14);
        assert_eq!(as_u64(total_count(6)), 23);
        for n in 1..40 {
            assert_eq!(total_count(n), total_count(n - 1) + cup_count(n), "n={n}");
        }
        // big values stay exact
        assert_eq!(cup_count(202), BigUint::from(3u32).pow(100));
    }

    #[test]
    fn census_small() {
        let c = census(1).unwrap();
        assert_eq!(
            (c.labeled_total, c.up_iso_classes, c.cup_iso_classes),
            (2, 2, 1)
        );
        let c = census(2).unwrap();
        assert_eq!(c.up_iso_classes, 3);
        assert_eq!(c.cup_iso_classes, 1);
        assert_eq!(census(0).unwrap().up_iso_classes, 1);
        assert!(matches!(
            census(6),
            Err(Error::BoundExceeded { n: 6, bound: 5 })
        ));
    }

    #[test]
    fn canonical_code_is_invariant() {
        let a = g(3, &[(1, 1), (1, 2), (1, 3), (3, 3)]);
        let b = a.relabel(|v| [0, 3, 1, 2][v as usize]).unwrap();
        assert_ne!(a, b);
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(
            canonical_code(&a),
            canonical_code(&g(3, &[(1, 1), (1, 2), (2, 3)]))
        );
    }

    #[test]
    fn random_cup_walk_stays_in_generated_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            let all: BTreeSet<PseudoGraph> = generate_cup(n).into_iter().collect();
            for _ in 0..20 {
                let h = random_cup(n, &mut rng);
                assert!(all.contains(&h), "n={n}: {h:?}");
                assert!(h.is_successful(&PressingSequence::identity(n)));
            }
        }
    }

    #[test]
    fn weights_determine_roots() {
        for n in 1..=7 {
            for h in generate_cup(n) {
                let root = graph_root(&h).unwrap();
                assert_eq!(root_from_weights(&root.weights()), *root.matrix());
            }
        }
    }
}
