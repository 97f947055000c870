//! Recognition of uniquely pressable graphs.
//!
//! A graph has exactly one successful pressing sequence iff it has at most one
//! non-trivial component and that component, ordered by the greedy pressing
//! order, has an instructional root whose columns satisfy four properties:
//!
//! 1. the ones of each column are consecutive and end at the diagonal;
//! 2. the column weights satisfy `1 = w_1 <= w_2 <= ... <= w_n`;
//! 3. `w_i > 2` implies `w_{i+2} > w_i`;
//! 4. once some column after the first has odd weight, it and every column to
//!    its right have full weight (`w_j = j`).
//!
//! Everything here is `O(n^3 / 64)` word operations except the brute-force
//! oracles at the bottom, which are exponential and bounded by vertex count.

use std::collections::HashMap;
use std::fmt;

use crate::cholesky::{component_of, instructional_root, pressing_order, CholeskyRoot};
use crate::error::{Error, Result};
use crate::f2core::BitMatrix;
use crate::graph::{Label, PressingSequence, PseudoGraph};

/// Default vertex bound for the brute-force sequence counter.
pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Outcome of the four column-property checks. `propK` is `None` when the
/// property holds and otherwise names the first (1-based) offending column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub prop1: Option<usize>,
    pub prop2: Option<usize>,
    pub prop3: Option<usize>,
    pub prop4: Option<usize>,
    pub column_weights: Vec<usize>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Lowest-numbered failing property and its witness column.
    pub fn first_failure(&self) -> Option<(u8, usize)> {
        [self.prop1, self.prop2, self.prop3, self.prop4]
            .into_iter()
            .enumerate()
            .find_map(|(k, w)| w.map(|col| (k as u8 + 1, col)))
    }
}

/// Evaluates the four properties on an upper-triangular matrix.
pub fn check_properties(u: &BitMatrix) -> Result<PropertyReport> {
    if let Some((row, col)) = u.first_below_diagonal() {
        return Err(Error::NotUpperTriangular { row, col });
    }
    let n = u.n();
    let w = u.column_weights();
    let full = |j: usize| w[j] == j + 1;

    // With w_j ones on or above the diagonal, the column is the block
    // j-w_j < i <= j exactly when no one sits above that block.
    let mut prop1 = None;
    for (i, row) in u.rows().iter().enumerate() {
        for j in row.ones_iter() {
            if i + w[j] < j + 1 {
                prop1 = Some(prop1.map_or(j + 1, |c: usize| c.min(j + 1)));
            }
        }
    }

    let prop2 = if n == 0 {
        None
    } else if w[0] != 1 {
        Some(1)
    } else {
        (1..n).find(|&j| w[j] < w[j - 1]).map(|j| j + 1)
    };

    let prop3 = (0..n.saturating_sub(2))
        .find(|&i| w[i] > 2 && w[i + 2] <= w[i])
        .map(|i| i + 3);

    let prop4 = (1..n)
        .find(|&j| w[j] % 2 == 1)
        .and_then(|start| (start..n).find(|&j| !full(j)))
        .map(|j| j + 1);

    Ok(PropertyReport {
        prop1,
        prop2,
        prop3,
        prop4,
        column_weights: w,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

/// Why a graph was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    MultiComponent,
    Unpressable,
    /// The greedy order met a degree tie although the root passed every
    /// property check. Uniquely pressable graphs never tie.
    Tie,
    /// Property `property` failed; `column` is 1-based in the greedy order.
    Property {
        property: u8,
        column: usize,
    },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::MultiComponent => f.write_str("MULTI_COMPONENT"),
            Reason::Unpressable => f.write_str("UNPRESSABLE"),
            Reason::Tie => f.write_str("TIE"),
            Reason::Property { property, column } => write!(f, "PROP{property} col {column}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    /// The unique successful pressing sequence, on a yes verdict.
    pub sequence: Option<PressingSequence>,
    pub reason: Option<Reason>,
    /// Labels of the trivial (isolated, loopless) vertices set aside.
    pub stripped: Vec<Label>,
    /// Root of the non-trivial component in greedy order, when computed.
    pub root: Option<CholeskyRoot>,
}

impl RecognitionReport {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    fn no(reason: Reason, stripped: Vec<Label>, root: Option<CholeskyRoot>) -> Self {
        Self {
            verdict: Verdict::No,
            sequence: None,
            reason: Some(reason),
            stripped,
            root,
        }
    }

    /// Line-oriented serialization: `verdict:`, then `sequence:` or
    /// `reason:`, then `stripped:`.
    pub fn to_text(&self) -> String {
        let join = |v: &[Label]| v.iter().map(|x| format!(" {x}")).collect::<String>();
        let mut s = String::new();
        match self.verdict {
            Verdict::Yes => {
                s.push_str("verdict: yes\n");
                let seq = self.sequence.as_ref().map(|q| q.vertices()).unwrap_or(&[]);
                s.push_str(&format!("sequence:{}\n", join(seq)));
            }
            Verdict::No => {
                s.push_str("verdict: no\n");
                if let Some(reason) = self.reason {
                    s.push_str(&format!("reason: {reason}\n"));
                }
            }
        }
        s.push_str(&format!("stripped:{}\n", join(&self.stripped)));
        s
    }
}

/// Decides whether `g` has exactly one successful pressing sequence.
///
/// Trivial components are set aside. Two or more non-trivial components are
/// rejected outright; none at all leaves the empty sequence as the unique
/// one. A single non-trivial component is ordered greedily, its root is
/// built in that order, and the root must pass all four properties.
pub fn recognize(g: &PseudoGraph) -> RecognitionReport {
    let a = g.adjacency_matrix();
    let labels = g.labels();
    let n = g.n();

    let mut seen = vec![false; n];
    let mut stripped = Vec::new();
    let mut nontrivial: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        if a.row0(i).is_zero() {
            seen[i] = true;
            stripped.push(labels[i]);
            continue;
        }
        let comp = component_of(&a, i);
        for &v in &comp {
            seen[v] = true;
        }
        nontrivial.push(comp);
    }

    let comp = match nontrivial.len() {
        0 => {
            return RecognitionReport {
                verdict: Verdict::Yes,
                sequence: Some(PressingSequence::empty()),
                reason: None,
                stripped,
                root: None,
            }
        }
        1 => nontrivial.pop().expect("one component"),
        _ => return RecognitionReport::no(Reason::MultiComponent, stripped, None),
    };

    let sub = a.select(&comp);
    let run = pressing_order(&sub);
    if !run.residual.is_zero() {
        return RecognitionReport::no(Reason::Unpressable, stripped, None);
    }
    let mut order = run.order.clone();
    let mut pressed = vec![false; comp.len()];
    for &i in &order {
        pressed[i] = true;
    }
    order.extend((0..comp.len()).filter(|&i| !pressed[i]));

    let ordered_labels: Vec<Label> = order.iter().map(|&i| labels[comp[i]]).collect();
    let root = match instructional_root(&sub.permuted(&order)) {
        Ok(r) => r.with_order(ordered_labels.clone()),
        Err(_) => return RecognitionReport::no(Reason::Unpressable, stripped, None),
    };
    let report = check_properties(root.matrix()).expect("roots are upper-triangular");
    if let Some((property, column)) = report.first_failure() {
        return RecognitionReport::no(Reason::Property { property, column }, stripped, Some(root));
    }
    if run.tie.is_some() {
        return RecognitionReport::no(Reason::Tie, stripped, Some(root));
    }
    RecognitionReport {
        verdict: Verdict::Yes,
        sequence: Some(PressingSequence::new(ordered_labels).expect("distinct labels")),
        reason: None,
        stripped,
        root: Some(root),
    }
}

/// Pressing length via the greedy order.
pub fn pressing_length(g: &PseudoGraph) -> Result<usize> {
    Ok(crate::cholesky::find_pressing_order(g)?.permutation.len())
}

fn dense_rows(g: &PseudoGraph, bound: usize) -> Result<Vec<u64>> {
    let n = g.n();
    if n > bound.min(64) {
        return Err(Error::BoundExceeded {
            n,
            bound: bound.min(64),
        });
    }
    let a = g.adjacency_matrix();
    Ok(a.rows()
        .iter()
        .map(|r| r.words().first().copied().unwrap_or(0))
        .collect())
}

#[inline]
fn press_dense(rows: &mut [u64], k: usize) {
    let hood = rows[k];
    let mut rest = hood;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        rows[i] ^= hood;
    }
}

/// Exact number of successful pressing sequences, by exhaustive search over
/// every press choice. States are memoized, so the cost is bounded by the
/// number of reachable graphs rather than the number of sequences.
pub fn count_sequences_bruteforce(g: &PseudoGraph, bound: usize) -> Result<u64> {
    fn count(rows: &mut Vec<u64>, memo: &mut HashMap<Vec<u64>, u64>) -> u64 {
        if let Some(&c) = memo.get(rows.as_slice()) {
            return c;
        }
        let looped: Vec<usize> = (0..rows.len())
            .filter(|&i| (rows[i] >> i) & 1 == 1)
            .collect();
        let total = if looped.is_empty() {
            u64::from(rows.iter().all(|&r| r == 0))
        } else {
            let mut acc = 0;
            for k in looped {
                let saved = rows.clone();
                press_dense(rows, k);
                acc += count(rows, memo);
                *rows = saved;
            }
            acc
        };
        memo.insert(rows.clone(), total);
        total
    }
    let mut rows = dense_rows(g, bound)?;
    Ok(count(&mut rows, &mut HashMap::new()))
}

/// Every successful pressing sequence, by exhaustive search. Intended for
/// graphs with few sequences; the output can be factorially large.
pub fn successful_sequences_bruteforce(
    g: &PseudoGraph,
    bound: usize,
) -> Result<Vec<PressingSequence>> {
    fn walk(rows: &mut Vec<u64>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let looped: Vec<usize> = (0..rows.len())
            .filter(|&i| (rows[i] >> i) & 1 == 1)
            .collect();
        if looped.is_empty() {
            if rows.iter().all(|&r| r == 0) {
                out.push(path.clone());
            }
            return;
        }
        for k in looped {
            let saved = rows.clone();
            press_dense(rows, k);
            path.push(k);
            walk(rows, path, out);
            path.pop();
            *rows = saved;
        }
    }
    let mut rows = dense_rows(g, bound)?;
    let mut found = Vec::new();
    walk(&mut rows, &mut Vec::new(), &mut found);
    let labels = g.labels();
    Ok(found
        .into_iter()
        .map(|p| {
            PressingSequence::new(p.into_iter().map(|i| labels[i]).collect()).expect("distinct")
        })
        .collect())
}
