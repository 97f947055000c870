//! Bit-packed linear algebra over GF(2).
//!
//! Rows are stored as little-endian `u64` words: column 1 lives in the least
//! significant bit of word 0. Bits past the logical length are always zero so
//! that equality and hashing can compare words directly.
//!
//! The public API is 1-based (column `j` of a row, entry `(i, j)` of a matrix).
//! Out-of-range indices are reported as [`Error::IndexOutOfRange`] by the
//! `try_*` accessors and panic in the plain accessors, never truncate.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A row vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut row = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        row.mask_padding();
        row
    }

    /// Builds a row from booleans; element 0 of the slice is column 1.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut row = Self::zeros(bits.len());
        for (idx, &b) in bits.iter().enumerate() {
            if b {
                row.words[idx / WORD] |= 1 << (idx % WORD);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Raw packed words. Padding bits are zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn check(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.len {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.len,
            });
        }
        Ok(j - 1)
    }

    /// Entry at 1-based column `j`.
    pub fn try_get(&self, j: usize) -> Result<bool> {
        let idx = self.check(j)?;
        Ok(self.bit(idx))
    }

    /// Entry at 1-based column `j`.
    ///
    /// # Panics
    /// If `j` is outside `1..=len`.
    pub fn get(&self, j: usize) -> bool {
        match self.try_get(j) {
            Ok(b) => b,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_set(&mut self, j: usize, value: bool) -> Result<()> {
        let idx = self.check(j)?;
        self.set_bit(idx, value);
        Ok(())
    }

    /// # Panics
    /// If `j` is outside `1..=len`.
    pub fn set(&mut self, j: usize, value: bool) {
        if let Err(e) = self.try_set(j, value) {
            panic!("{e}");
        }
    }

    #[inline]
    pub(crate) fn bit(&self, idx: usize) -> bool {
        (self.words[idx / WORD] >> (idx % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set_bit(&mut self, idx: usize, value: bool) {
        let mask = 1u64 << (idx % WORD);
        if value {
            self.words[idx / WORD] |= mask;
        } else {
            self.words[idx / WORD] &= !mask;
        }
    }

    /// Number of ones (an integer, not a GF(2) value).
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place GF(2) addition.
    pub fn xor_assign(&mut self, other: &BitRow) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            });
        }
        self.xor_words(&other.words);
        Ok(())
    }

    #[inline]
    pub(crate) fn xor_words(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a ^= b;
        }
    }

    /// 0-based positions of set bits, ascending.
    pub(crate) fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + tz)
            })
        })
    }

    /// 1-based columns holding a one.
    pub fn support(&self) -> Vec<usize> {
        self.ones_iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for idx in 0..self.len {
            f.write_str(if self.bit(idx) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parity of the number of positions where both rows hold a one.
pub fn gf2_dot(a: &BitRow, b: &BitRow) -> Result<bool> {
    if a.len != b.len {
        return Err(Error::DimensionMismatch {
            left: a.len,
            right: b.len,
        });
    }
    let ones: u32 = a
        .words
        .iter()
        .zip(&b.words)
        .map(|(x, y)| (x & y).count_ones())
        .sum();
    Ok(ones & 1 == 1)
}

/// Square matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    n: usize,
    rows: Vec<BitRow>,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            rows: vec![BitRow::zeros(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i].set_bit(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitRow>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(Self { n, rows })
    }

    /// Convenience constructor from 0/1 integers, row-major.
    pub fn from_01<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                let bools: Vec<bool> = r.as_ref().iter().map(|&b| b != 0).collect();
                BitRow::from_bools(&bools)
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &BitRow {
        self.check(i, 1).unwrap_or_else(|e| panic!("{e}"));
        &self.rows[i - 1]
    }

    pub(crate) fn row0(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    pub(crate) fn row0_mut(&mut self, i: usize) -> &mut BitRow {
        &mut self.rows[i]
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        for idx in [i, j] {
            if idx == 0 || idx > self.n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    len: self.n,
                });
            }
        }
        Ok(())
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<bool> {
        self.check(i, j)?;
        Ok(self.rows[i - 1].bit(j - 1))
    }

    /// Entry `(i, j)`, 1-based.
    ///
    /// # Panics
    /// If either index is outside `1..=n`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.try_get(i, j).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_set(&mut self, i: usize, j: usize, value: bool) -> Result<()> {
        self.check(i, j)?;
        self.rows[i - 1].set_bit(j - 1, value);
        Ok(())
    }

    /// # Panics
    /// If either index is outside `1..=n`.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.try_set(i, j, value).unwrap_or_else(|e| panic!("{e}"))
    }

    #[inline]
    pub(crate) fn get0(&self, i: usize, j: usize) -> bool {
        self.rows[i].bit(j)
    }

    #[inline]
    pub(crate) fn set0(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set_bit(j, value)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitRow::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First 1-based `(i, j)` with `i < j` and `m[i][j] != m[j][i]`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in self.rows[i].ones_iter() {
                if !self.rows[j].bit(i) {
                    let (a, b) = if i < j { (i, j) } else { (j, i) };
                    return Some((a + 1, b + 1));
                }
            }
        }
        None
    }

    /// First 1-based `(i, j)` with `i > j` holding a one.
    pub fn first_below_diagonal(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            if let Some(j) = self.rows[i].ones_iter().next() {
                if j < i {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_below_diagonal().is_none()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones_iter() {
                t.rows[j].set_bit(i, true);
            }
        }
        t
    }

    /// Column `j` (1-based) as a row vector.
    pub fn column(&self, j: usize) -> BitRow {
        if j == 0 || j > self.n {
            panic!(
                "{}",
                Error::IndexOutOfRange {
                    index: j,
                    len: self.n
                }
            );
        }
        let mut col = BitRow::zeros(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            if row.bit(j - 1) {
                col.set_bit(i, true);
            }
        }
        col
    }

    /// Integer column sums, index 0 holding column 1.
    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.n];
        for row in &self.rows {
            for j in row.ones_iter() {
                w[j] += 1;
            }
        }
        w
    }

    /// `P^T M P` for the reordering that puts original index `order[k]`
    /// (0-based) at position `k`. `order` must be a permutation of `0..n`.
    pub(crate) fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.n);
        let mut out = Self::zeros(self.n);
        for (new_i, &old_i) in order.iter().enumerate() {
            let src = &self.rows[old_i];
            let dst = &mut out.rows[new_i];
            for (new_j, &old_j) in order.iter().enumerate() {
                if src.bit(old_j) {
                    dst.set_bit(new_j, true);
                }
            }
        }
        out
    }

    /// Block on the given 0-based indices (ascending or not), in that order.
    pub(crate) fn select(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut out = Self::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            let src = &self.rows[i];
            for (b, &j) in indices.iter().enumerate() {
                if src.bit(j) {
                    out.rows[a].set_bit(b, true);
                }
            }
        }
        out
    }

    /// Serializes in the matrix text format: `n`, then one line of `0`/`1`
    /// characters per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity((self.n + 1) * (self.n + 1) + 8);
        s.push_str(&self.n.to_string());
        s.push('\n');
        for row in &self.rows {
            s.push_str(&format!("{row:?}"));
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format. Trailing blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing dimension line".into(),
        })?;
        let n: usize = header.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            message: format!("expected a dimension, found {header:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (idx, line) = lines.next().ok_or_else(|| Error::Parse {
                line: rows.len() + 2,
                message: format!("expected {n} matrix rows, found {}", rows.len()),
            })?;
            let line = line.trim_end_matches('\r');
            if line.len() != n {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("row has {} entries, expected {n}", line.len()),
                });
            }
            let mut row = BitRow::zeros(n);
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => row.set_bit(j, true),
                    other => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
            rows.push(row);
        }
        if let Some((idx, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("trailing content {extra:?}"),
            });
        }
        Ok(Self { n, rows })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({})", self.n)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// `U^T U` over GF(2): entry `(i, j)` is the dot product of columns `i` and `j`.
pub fn transpose_mul(u: &BitMatrix) -> BitMatrix {
    // Row i of U^T U is the sum of the rows t of U with u[t][i] = 1.
    let mut out = BitMatrix::zeros(u.n);
    for row in &u.rows {
        for i in row.ones_iter() {
            out.rows[i].xor_words(&row.words);
        }
    }
    out
}

/// Nonsingularity of every leading principal block, in one elimination pass.
///
/// Entry `k - 1` of the result is `det(A[1..=k, 1..=k])`. The pass keeps the
/// rows of the current leading block in echelon form together with the row
/// combinations that produced them, so growing the block by one row and one
/// column costs `O(k^2 / 64)` word operations.
pub fn leading_principal_minors(a: &BitMatrix) -> Vec<bool> {
    let n = a.n;
    // reduced[r]: combination of original rows (bits < k) restricted to the
    // first k columns. combo[r]: which original rows were summed.
    let mut reduced: Vec<BitRow> = Vec::with_capacity(n);
    let mut combo: Vec<BitRow> = Vec::with_capacity(n);
    // pivot_of[r] = Some(column) for echelon rows; rows with None are zero.
    let mut pivot_of: Vec<Option<usize>> = Vec::with_capacity(n);
    // row holding each pivot column
    let mut pivot_row: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0usize;
    let mut minors = Vec::with_capacity(n);

    for k in 0..n {
        // Append column k to every stored row: entry = combo · A[0..k][k].
        let mut column_k = BitRow::zeros(n);
        for i in 0..k {
            if a.rows[i].bit(k) {
                column_k.set_bit(i, true);
            }
        }
        let mut fresh: Option<usize> = None;
        for r in 0..reduced.len() {
            let bit = gf2_dot(&combo[r], &column_k).expect("equal lengths");
            reduced[r].set_bit(k, bit);
            if bit && pivot_of[r].is_none() {
                match fresh {
                    None => fresh = Some(r),
                    Some(p) => {
                        let (pr, pc) = (reduced[p].clone(), combo[p].clone());
                        reduced[r].xor_words(&pr.words);
                        combo[r].xor_words(&pc.words);
                    }
                }
            }
        }
        if let Some(p) = fresh {
            pivot_of[p] = Some(k);
            pivot_row[k] = Some(p);
            rank += 1;
        }

        // Append original row k, restricted to columns 0..=k, and reduce it.
        let mut new_row = BitRow::zeros(n);
        for j in a.rows[k].ones_iter().take_while(|&j| j <= k) {
            new_row.set_bit(j, true);
        }
        let mut new_combo = BitRow::zeros(n);
        new_combo.set_bit(k, true);
        for (col, pivot) in pivot_row.iter().enumerate().take(k + 1) {
            if new_row.bit(col) {
                if let Some(p) = *pivot {
                    new_row.xor_words(&reduced[p].words);
                    new_combo.xor_words(&combo[p].words);
                }
            }
        }
        let lead = new_row.ones_iter().next();
        let idx = reduced.len();
        reduced.push(new_row);
        combo.push(new_combo);
        match lead {
            Some(col) => {
                debug_assert!(pivot_row[col].is_none());
                pivot_of.push(Some(col));
                pivot_row[col] = Some(idx);
                rank += 1;
            }
            None => pivot_of.push(None),
        }
        minors.push(rank == k + 1);
    }
    minors
}

/// The principal block on rows and columns `lo..=hi` (1-based, inclusive).
pub fn principal_submatrix(m: &BitMatrix, lo: usize, hi: usize) -> Result<BitMatrix> {
    if lo == 0 || lo > hi || hi > m.n {
        return Err(Error::RangeOutOfBounds { lo, hi, n: m.n });
    }
    let indices: Vec<usize> = (lo - 1..hi).collect();
    Ok(m.select(&indices))
}
