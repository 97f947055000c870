//! Instructional Cholesky roots and the greedy pressing order.
//!
//! For an ordered graph whose initial segment `1..k` is a successful pressing
//! sequence, row `i` of the root `U` is the adjacency row of vertex `i` after
//! pressing `1..i-1`. Rows past `k` are zero and `U^T U = A`.

use crate::error::{Error, Result};
use crate::f2core::{gf2_dot, BitMatrix};
use crate::graph::{Label, PressingSequence, PseudoGraph};

/// Upper-triangular root together with the vertex order it was computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CholeskyRoot {
    matrix: BitMatrix,
    order: Vec<Label>,
    pressed: usize,
}

impl CholeskyRoot {
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.matrix
    }

    /// Vertex labels by row/column position.
    pub fn order(&self) -> &[Label] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub(crate) fn with_order(mut self, order: Vec<Label>) -> Self {
        debug_assert_eq!(order.len(), self.n());
        self.order = order;
        self
    }

    /// Number of nonzero leading rows, i.e. how many vertices were pressed.
    pub fn pressing_length(&self) -> usize {
        self.pressed
    }

    /// Integer sum of column `j` (1-based).
    pub fn vertex_weight(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.n() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.n(),
            });
        }
        Ok(self.matrix.rows().iter().filter(|row| row.get(j)).count())
    }

    /// All column weights, position 0 holding column 1.
    pub fn weights(&self) -> Vec<usize> {
        self.matrix.column_weights()
    }

    /// GF(2) dot product of columns `i` and `j`; equals the adjacency entry.
    pub fn vertex_dot(&self, i: usize, j: usize) -> Result<bool> {
        for idx in [i, j] {
            if idx == 0 || idx > self.n() {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    len: self.n(),
                });
            }
        }
        gf2_dot(&self.matrix.column(i), &self.matrix.column(j))
    }
}

/// Root of a symmetric matrix under its own index order.
///
/// Pivots down the diagonal while the current entry is one, clearing the pivot
/// row out of every later row that has a one in the pivot column. Once a zero
/// pivot is reached the remaining rows must already be zero, otherwise
/// `1..k` is not a successful pressing sequence and
/// [`Error::NotOrderPressable`] carries the 1-based stuck index.
pub fn instructional_root(a: &BitMatrix) -> Result<CholeskyRoot> {
    let order = (1..=a.n() as Label).collect();
    root_with_order(a, order)
}

/// Root of a graph under its label order.
pub fn graph_root(g: &PseudoGraph) -> Result<CholeskyRoot> {
    root_with_order(&g.adjacency_matrix(), g.labels().to_vec())
}

fn root_with_order(a: &BitMatrix, order: Vec<Label>) -> Result<CholeskyRoot> {
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = a.n();
    let mut work = a.clone();
    let mut u = BitMatrix::zeros(n);
    let mut k = 0;
    while k < n && work.get0(k, k) {
        let pivot = work.row0(k).clone();
        for i in k + 1..n {
            if work.get0(i, k) {
                work.row0_mut(i).xor_words(pivot.words());
            }
        }
        *u.row0_mut(k) = pivot;
        k += 1;
    }
    if (k..n).any(|i| !work.row0(i).is_zero()) {
        return Err(Error::NotOrderPressable { stuck: k + 1 });
    }
    Ok(CholeskyRoot {
        matrix: u,
        order,
        pressed: k,
    })
}

/// First point where two looped vertices shared the maximum degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tie {
    /// 1-based step of the greedy loop.
    pub step: usize,
    /// The chosen (smallest) label and the next tied label.
    pub chosen: Label,
    pub other: Label,
}

/// Greedy pressing order found by repeatedly pressing the looped vertex of
/// largest degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PressingOrder {
    /// Pressed labels by position.
    pub permutation: Vec<Label>,
    /// Every vertex was either pressed or left isolated and loopless.
    pub complete: bool,
    /// The first degree tie met on the way, if any.
    pub tie: Option<Tie>,
}

impl PressingOrder {
    pub fn sequence(&self) -> PressingSequence {
        PressingSequence::new(self.permutation.clone()).expect("greedy presses each vertex once")
    }
}

pub(crate) struct Greedy {
    /// 0-based indices in press order.
    pub order: Vec<usize>,
    /// `(step, chosen, other)` with 0-based indices.
    pub tie: Option<(usize, usize, usize)>,
    /// Adjacency of the graph after all presses.
    pub residual: BitMatrix,
}

/// Greedy pressing order for an adjacency matrix.
///
/// Presses the looped vertex of largest degree (row sum, so a loop counts
/// once), ties to the smallest index. This always succeeds on connected
/// uniquely pressable graphs but can strand other pressable graphs: on
/// `{11, 12, 13, 22, 33}` pressing 1 first leaves the loopless edge `23`.
/// When that happens and the input is pressable, the loop is rerun admitting
/// only presses that keep every non-trivial component looped.
pub(crate) fn pressing_order(a: &BitMatrix) -> Greedy {
    let run = greedy(a, false);
    if run.residual.is_zero() || !is_pressable(a) {
        return run;
    }
    greedy(a, true)
}

fn press_in_place(m: &mut BitMatrix, k: usize) {
    let hood = m.row0(k).clone();
    for i in hood.ones_iter() {
        m.row0_mut(i).xor_words(hood.words());
    }
}

/// Every component with an edge contains a looped vertex.
pub(crate) fn is_pressable(m: &BitMatrix) -> bool {
    let mut seen = vec![false; m.n()];
    for start in 0..m.n() {
        if seen[start] || m.row0(start).is_zero() {
            continue;
        }
        let comp = component_of(m, start);
        if !comp.iter().any(|&v| m.get0(v, v)) {
            return false;
        }
        for v in comp {
            seen[v] = true;
        }
    }
    true
}

fn greedy(a: &BitMatrix, safe: bool) -> Greedy {
    let n = a.n();
    let mut m = a.clone();
    let mut order = Vec::new();
    let mut tie = None;
    loop {
        let picked = if safe {
            safe_choice(&m)
        } else {
            max_degree_choice(&m)
        };
        let Some((k, other)) = picked else { break };
        if tie.is_none() {
            if let Some(other) = other {
                tie = Some((order.len(), k, other));
            }
        }
        press_in_place(&mut m, k);
        order.push(k);
    }
    debug_assert!(order.len() <= n);
    Greedy {
        order,
        tie,
        residual: m,
    }
}

/// Smallest looped index of maximum degree, and the next looped index with
/// the same degree if there is one.
fn max_degree_choice(m: &BitMatrix) -> Option<(usize, Option<usize>)> {
    let mut best: Option<(usize, usize)> = None;
    let mut tied = None;
    for i in (0..m.n()).filter(|&i| m.get0(i, i)) {
        let deg = m.row0(i).count_ones();
        match best {
            Some((_, d)) if deg < d => {}
            Some((_, d)) if deg == d => {
                tied = tied.or(Some(i));
            }
            _ => {
                best = Some((i, deg));
                tied = None;
            }
        }
    }
    best.map(|(k, _)| (k, tied))
}

/// Like [`max_degree_choice`], restricted to presses after which the graph
/// is still pressable.
fn safe_choice(m: &BitMatrix) -> Option<(usize, Option<usize>)> {
    let mut candidates: Vec<(usize, usize)> = (0..m.n())
        .filter(|&i| m.get0(i, i))
        .map(|i| (m.row0(i).count_ones(), i))
        .collect();
    candidates.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut admissible = candidates.into_iter().filter(|&(_, i)| {
        let mut trial = m.clone();
        press_in_place(&mut trial, i);
        is_pressable(&trial)
    });
    let (deg, k) = admissible.next()?;
    let other = admissible.next().filter(|&(d, _)| d == deg).map(|(_, i)| i);
    Some((k, other))
}

/// 0-based indices of the component of `start` in the non-loop edges of `m`.
pub(crate) fn component_of(m: &BitMatrix, start: usize) -> Vec<usize> {
    let mut seen = vec![false; m.n()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        out.push(v);
        for w in m.row0(v).ones_iter() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Greedy pressing order of `g`.
///
/// Fails with [`Error::Unpressable`] when presses run out while edges remain;
/// the error carries one leftover component (all of whose vertices are
/// loopless at that point).
pub fn find_pressing_order(g: &PseudoGraph) -> Result<PressingOrder> {
    let run = pressing_order(&g.adjacency_matrix());
    let labels = g.labels();
    if let Some(start) = (0..g.n()).find(|&i| !run.residual.row0(i).is_zero()) {
        let component = component_of(&run.residual, start)
            .into_iter()
            .map(|i| labels[i])
            .collect();
        return Err(Error::Unpressable { component });
    }
    Ok(PressingOrder {
        complete: true,
        permutation: run.order.iter().map(|&i| labels[i]).collect(),
        tie: run.tie.map(|(step, a, b)| Tie {
            step: step + 1,
            chosen: labels[a],
            other: labels[b],
        }),
    })
}
