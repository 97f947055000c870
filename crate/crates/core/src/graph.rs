//! Simple pseudo-graphs and the pressing operation.
//!
//! Pressing a looped vertex `v` complements the induced subgraph on its
//! neighborhood `N(v)` (loops included), which leaves `v` isolated and
//! loopless. The vertex stays in the graph; [`PseudoGraph::delete_vertex`]
//! removes it explicitly.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::f2core::BitMatrix;

/// Vertex label. Labels are positive integers.
pub type Label = u32;

/// A labeled simple pseudo-graph with its vertices in increasing order.
///
/// Edges are unordered pairs stored as `(min, max)`; a loop on `v` is `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoGraph {
    labels: Vec<Label>,
    edges: BTreeSet<(Label, Label)>,
}

#[inline]
fn norm(u: Label, v: Label) -> (Label, Label) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl PseudoGraph {
    /// Builds a graph from strictly increasing positive labels and an edge
    /// list. Repeated edges collapse (set semantics).
    pub fn new<I>(labels: Vec<Label>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        if labels.first() == Some(&0) {
            return Err(Error::InvalidLabels("labels must be positive".into()));
        }
        if let Some(w) = labels.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLabels(format!(
                "labels must be strictly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        let mut g = Self {
            labels,
            edges: BTreeSet::new(),
        };
        for (u, v) in edges {
            for x in [u, v] {
                if !g.contains(x) {
                    return Err(Error::UnknownLabel(x));
                }
            }
            g.edges.insert(norm(u, v));
        }
        Ok(g)
    }

    /// A graph on labels `1..=n`.
    pub fn on_range<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        Self::new((1..=n as Label).collect(), edges)
    }

    pub fn edgeless(n: usize) -> Self {
        Self {
            labels: (1..=n as Label).collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn edges(&self) -> &BTreeSet<(Label, Label)> {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: Label) -> bool {
        self.labels.binary_search(&v).is_ok()
    }

    /// 0-based position of `v` in the label order.
    pub fn index_of(&self, v: Label) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    fn require(&self, v: Label) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownLabel(v))
        }
    }

    pub fn has_edge(&self, u: Label, v: Label) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn is_looped(&self, v: Label) -> bool {
        self.edges.contains(&(v, v))
    }

    /// `N(v)`; contains `v` exactly when `v` is looped.
    pub fn neighborhood(&self, v: Label) -> Result<BTreeSet<Label>> {
        self.require(v)?;
        let below = self
            .edges
            .range((0, v)..=(v, v))
            .filter(|&&(_, b)| b == v)
            .map(|&(a, _)| a);
        let above = self.edges.range((v, v)..=(v, Label::MAX)).map(|&(_, b)| b);
        Ok(below.chain(above).collect())
    }

    /// Size of `N(v)`, counting a loop once.
    pub fn degree(&self, v: Label) -> Result<usize> {
        Ok(self.neighborhood(v)?.len())
    }

    pub fn looped_vertices(&self) -> BTreeSet<Label> {
        self.edges
            .iter()
            .filter(|(a, b)| a == b)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Presses the looped vertex `v`: every pair inside `N(v)` toggles.
    pub fn press(&self, v: Label) -> Result<Self> {
        let hood: Vec<Label> = self.neighborhood(v)?.into_iter().collect();
        if hood.binary_search(&v).is_err() {
            return Err(Error::InvalidPress(v));
        }
        let mut out = self.clone();
        for (i, &a) in hood.iter().enumerate() {
            for &b in &hood[i..] {
                if !out.edges.remove(&(a, b)) {
                    out.edges.insert((a, b));
                }
            }
        }
        Ok(out)
    }

    /// Presses each vertex of `seq` in turn. An empty sequence returns the
    /// graph unchanged. The first invalid press is reported with its 1-based
    /// position.
    pub fn apply_sequence(&self, seq: &PressingSequence) -> Result<Self> {
        let mut g = self.clone();
        for (pos, &v) in seq.vertices().iter().enumerate() {
            g = g.press(v).map_err(|_| Error::InvalidSequence {
                position: pos + 1,
                vertex: v,
            })?;
        }
        Ok(g)
    }

    /// Whether every press is valid and the result has no edges or loops.
    pub fn is_successful(&self, seq: &PressingSequence) -> bool {
        self.apply_sequence(seq)
            .map(|g| g.is_edgeless())
            .unwrap_or(false)
    }

    /// Connected components, ordered by smallest label. A loop does not
    /// connect anything but makes its singleton non-trivial.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a != b {
                let ia = find(&mut parent, self.index_of(a).expect("edge endpoint"));
                let ib = find(&mut parent, self.index_of(b).expect("edge endpoint"));
                if ia != ib {
                    parent[ia.max(ib)] = ia.min(ib);
                }
            }
        }
        let mut groups: Vec<Vec<Label>> = vec![Vec::new(); n];
        for i in 0..n {
            let root = find(&mut parent, i);
            groups[root].push(self.labels[i]);
        }
        groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|vertices| {
                let trivial = vertices.len() == 1 && !self.is_looped(vertices[0]);
                Component { vertices, trivial }
            })
            .collect()
    }

    /// Adjacency matrix under the label order; row `i` is the `i`-th
    /// smallest label.
    pub fn adjacency_matrix(&self) -> BitMatrix {
        let mut a = BitMatrix::zeros(self.n());
        let contiguous = self
            .labels
            .first()
            .is_none_or(|&f| self.labels.last() == Some(&(f + self.n() as Label - 1)));
        let first = self.labels.first().copied().unwrap_or(1);
        for &(u, v) in &self.edges {
            let (i, j) = if contiguous {
                ((u - first) as usize, (v - first) as usize)
            } else {
                (self.index_of(u).unwrap(), self.index_of(v).unwrap())
            };
            a.set0(i, j, true);
            a.set0(j, i, true);
        }
        a
    }

    /// Graph on labels `1..=n` with the given symmetric adjacency matrix.
    pub fn from_adjacency(a: &BitMatrix) -> Result<Self> {
        Self::from_adjacency_with_labels(a, (1..=a.n() as Label).collect())
    }

    pub fn from_adjacency_with_labels(a: &BitMatrix, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != a.n() {
            return Err(Error::DimensionMismatch {
                left: labels.len(),
                right: a.n(),
            });
        }
        if let Some((row, col)) = a.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        let mut edges = Vec::new();
        for i in 0..a.n() {
            for j in a.row0(i).ones_iter().filter(|&j| j >= i) {
                edges.push((labels[i], labels[j]));
            }
        }
        Self::new(labels, edges)
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: Label) -> Result<Self> {
        self.require(v)?;
        Ok(Self {
            labels: self.labels.iter().copied().filter(|&x| x != v).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect(),
        })
    }

    /// Presses `v` and then deletes it.
    pub fn press_and_delete(&self, v: Label) -> Result<Self> {
        self.press(v)?.delete_vertex(v)
    }

    /// Induced subgraph on `keep`.
    pub fn induced(&self, keep: &[Label]) -> Result<Self> {
        let set: BTreeSet<Label> = keep.iter().copied().collect();
        for &v in &set {
            self.require(v)?;
        }
        Ok(Self {
            labels: set.iter().copied().collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|(a, b)| set.contains(a) && set.contains(b))
                .collect(),
        })
    }

    /// Applies an injective relabeling; the result is re-sorted.
    pub fn relabel<F: Fn(Label) -> Label>(&self, f: F) -> Result<Self> {
        let mut labels: Vec<Label> = self.labels.iter().map(|&v| f(v)).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabels("relabeling is not injective".into()));
        }
        Self::new(labels, self.edges.iter().map(|&(a, b)| (f(a), f(b))))
    }

    /// Order-preserving relabeling onto `1..=n`.
    pub fn compressed(&self) -> Self {
        Self {
            labels: (1..=self.n() as Label).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| {
                    (
                        self.index_of(a).unwrap() as Label + 1,
                        self.index_of(b).unwrap() as Label + 1,
                    )
                })
                .collect(),
        }
    }

    /// Graph text format: `n`, the labels, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n());
        let labels: Vec<String> = self.labels.iter().map(Label::to_string).collect();
        s.push_str(&labels.join(" "));
        s.push('\n');
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    /// Parses exactly one graph record; trailing blank lines are allowed.
    pub fn parse_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        let mut cursor = 0;
        let g = parse_record(&lines, &mut cursor)?.ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        if let Some(extra) = lines[cursor..].iter().position(|l| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: cursor + extra + 1,
                message: "unexpected content after the graph record".into(),
            });
        }
        Ok(g)
    }

    /// Parses a stream of graph records separated by blank lines.
    pub fn parse_records(text: &str) -> Result<Vec<Self>> {
        let lines: Vec<&str> = text.lines().collect();
        let mut cursor = 0;
        let mut out = Vec::new();
        while let Some(g) = parse_record(&lines, &mut cursor)? {
            out.push(g);
        }
        Ok(out)
    }

    /// Accepts either the graph format or the matrix format (labels `1..=n`).
    ///
    /// The matrix format is chosen when the second line is exactly `n`
    /// characters of `0`/`1`. For `n = 1` this is ambiguous with an edgeless
    /// graph on label 1; the matrix reading wins unless edge lines follow.
    pub fn parse_any(text: &str) -> Result<Self> {
        if looks_like_matrix(text) {
            Self::from_adjacency(&BitMatrix::parse_text(text)?)
        } else {
            Self::parse_text(text)
        }
    }

    /// Graphviz rendering; looped vertices are filled black and loops are
    /// not drawn as edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n  node [shape=circle];\n");
        for &v in &self.labels {
            if self.is_looped(v) {
                let _ = writeln!(s, "  {v} [style=filled, fillcolor=black, fontcolor=white];");
            } else {
                let _ = writeln!(s, "  {v};");
            }
        }
        for &(a, b) in self.edges.iter().filter(|(a, b)| a != b) {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }
}

fn looks_like_matrix(text: &str) -> bool {
    let mut lines = text.lines();
    let Some(n) = lines.next().and_then(|l| l.trim().parse::<usize>().ok()) else {
        return false;
    };
    let Some(second) = lines.next().map(|l| l.trim_end_matches('\r')) else {
        return false;
    };
    if n == 0 || second.len() != n || !second.chars().all(|c| c == '0' || c == '1') {
        return false;
    }
    if n == 1 {
        return lines.all(|l| l.trim().is_empty());
    }
    true
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_record(lines: &[&str], cursor: &mut usize) -> Result<Option<PseudoGraph>> {
    while *cursor < lines.len() && lines[*cursor].trim().is_empty() {
        *cursor += 1;
    }
    if *cursor >= lines.len() {
        return Ok(None);
    }
    let header_line = *cursor + 1;
    let n: usize = lines[*cursor].trim().parse().map_err(|_| {
        parse_err(
            header_line,
            format!("expected a vertex count, found {:?}", lines[*cursor]),
        )
    })?;
    *cursor += 1;
    let label_line = *cursor + 1;
    let raw_labels = match lines.get(*cursor) {
        Some(line) => line,
        None if n == 0 => "",
        None => return Err(parse_err(label_line, "missing label line")),
    };
    *cursor += 1;
    let labels = raw_labels
        .split_whitespace()
        .map(|t| {
            t.parse::<Label>()
                .map_err(|_| parse_err(label_line, format!("bad label {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if labels.len() != n {
        return Err(parse_err(
            label_line,
            format!("expected {n} labels, found {}", labels.len()),
        ));
    }
    let mut edges = Vec::new();
    while *cursor < lines.len() && !lines[*cursor].trim().is_empty() {
        let line_no = *cursor + 1;
        let fields: Vec<&str> = lines[*cursor].split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(line_no, "an edge line needs exactly two labels"));
        }
        let mut ends = [0 as Label; 2];
        for (slot, t) in ends.iter_mut().zip(&fields) {
            *slot = t
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad label {t:?}")))?;
        }
        if labels.binary_search(&ends[0]).is_err() || labels.binary_search(&ends[1]).is_err() {
            return Err(parse_err(line_no, "edge endpoint is not a listed vertex"));
        }
        edges.push((ends[0], ends[1]));
        *cursor += 1;
    }
    PseudoGraph::new(labels, edges)
        .map(Some)
        .map_err(|e| parse_err(label_line, e.to_string()))
}

/// A connected component; trivial means a single loopless vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<Label>,
    pub trivial: bool,
}

/// An ordered list of distinct vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PressingSequence(Vec<Label>);

impl PressingSequence {
    pub fn new(vertices: Vec<Label>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::RepeatedLabel(v));
            }
        }
        Ok(Self(vertices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(1, 2, ..., n)`.
    pub fn identity(n: usize) -> Self {
        Self((1..=n as Label).collect())
    }

    pub fn vertices(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
