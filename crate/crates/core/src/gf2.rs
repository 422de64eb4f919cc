//! Dense GF(2) linear algebra plus the rank notions attached to 0/1 matrices:
//! XOR rank (mod-2 row reduction), rational rank (exact integer elimination)
//! and Boolean rank / biclique partition number (exhaustive rectangle search).

use crate::bits::BitVec;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;

/// A dense matrix over GF(2), stored as packed row bit vectors.
///
/// Rows and columns may be zero; bits beyond `cols` in a row are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::ones(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Parses rows of `0`/`1` characters, one row per line.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows: Vec<BitVec> = Vec::new();
        let mut cols = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = BitVec::zeros(line.len());
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => row.set(j, true),
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {}: expected 0/1, found {ch:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            match cols {
                None => cols = Some(row.len()),
                Some(c) if c != row.len() => {
                    return Err(Error::Parse(format!(
                        "line {}: row length {} != {}",
                        lineno + 1,
                        row.len(),
                        c
                    )))
                }
                _ => {}
            }
            rows.push(row);
        }
        Ok(BitMatrix {
            cols: cols.unwrap_or(0),
            rows,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            for j in 0..self.cols {
                out.push(if r.get(j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.nrows(), |i, j| self.get(j, i))
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.cols
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.nrows().min(self.cols)).all(|i| !self.get(i, i))
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.nrows(), other.nrows());
        Self::from_fn(self.nrows(), self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j])
        })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows.len() {
                break;
            }
            let Some(r) = (pivot_row..self.rows.len()).find(|&r| self.rows[r].get(col)) else {
                continue;
            };
            self.rows.swap(pivot_row, r);
            let pivot = self.rows[pivot_row].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != pivot_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// Rank over GF(2).
    pub fn rank_xor(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Rank over the rationals, computed with exact integer (fraction-free)
    /// elimination. No floating point is involved.
    pub fn rank_rational(&self) -> usize {
        let (rows, cols) = (self.nrows(), self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| BigInt::from(self.get(i, j) as u8))
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        let mut prev = BigInt::from(1);
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| a[r][col] != BigInt::from(0)) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..rows {
                for j in col + 1..cols {
                    let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::from(0);
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Basis of the right null space over GF(2); its size is
    /// `cols - rank_xor(self)`.
    pub fn kernel_xor(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if m.rows[r].get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// Outcome of a capped combinatorial rank search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSearch {
    /// The exact value, at most the requested cap.
    Exact(usize),
    /// No cover/partition with at most `cap` rectangles exists.
    Exceeded,
}

impl RankSearch {
    pub fn exact(self) -> Option<usize> {
        match self {
            RankSearch::Exact(k) => Some(k),
            RankSearch::Exceeded => None,
        }
    }
}

/// Guard for the NP-hard rectangle searches. They enumerate subsets of one
/// dimension, so both the dimensions and the number of ones stay small.
fn check_search_size(m: &BitMatrix) -> Result<()> {
    if m.nrows().min(m.ncols()) > 16 || m.count_ones() > 28 {
        return Err(Error::ResourceLimit(format!(
            "rectangle search on {}x{} matrix with {} ones",
            m.nrows(),
            m.ncols(),
            m.count_ones()
        )));
    }
    Ok(())
}

/// Cells of the matrix as (row set, column masks); `ones[r]` is the set of
/// one-columns of row r as a u64 mask. Requires ncols <= 64 after the size
/// guard (transposing first when rows are the smaller side keeps dims <= 16).
fn one_masks(m: &BitMatrix) -> Vec<u64> {
    (0..m.nrows())
        .map(|i| {
            let mut w = 0u64;
            for j in 0..m.ncols() {
                if m.get(i, j) {
                    w |= 1 << j;
                }
            }
            w
        })
        .collect()
}

/// Least number of all-ones combinatorial rectangles whose Boolean sum is `m`
/// (the biclique cover number of the bipartite graph with biadjacency `m`),
/// searched exhaustively up to `cap`.
pub fn boolean_rank(m: &BitMatrix, cap: usize) -> Result<RankSearch> {
    assert!(cap >= 1, "cap must be at least 1");
    if m.is_zero() {
        return Ok(RankSearch::Exact(0));
    }
    check_search_size(m)?;
    let work = if m.nrows() <= m.ncols() {
        m.clone()
    } else {
        m.transpose()
    };
    let rows = one_masks(&work);
    let rects = maximal_rectangles(&rows);
    // Cell list for cover bookkeeping.
    let cells: Vec<(usize, u64)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &mask)| {
            (0..64)
                .filter(move |j| mask >> j & 1 == 1)
                .map(move |j| (r, 1u64 << j))
        })
        .collect();
    for k in 1..=cap {
        if cover_search(&rects, &cells, &mut vec![0u64; rows.len()], k) {
            return Ok(RankSearch::Exact(k));
        }
    }
    Ok(RankSearch::Exceeded)
}

/// All maximal all-ones rectangles as per-row column masks, represented as
/// (row mask, column mask) pairs.
fn maximal_rectangles(rows: &[u64]) -> Vec<(u64, u64)> {
    // Closures of row subsets: cols(S) = AND of rows in S, rows(C) = all rows
    // containing C. Enumerating subsets of rows finds every maximal rectangle.
    let n = rows.len();
    let mut seen = std::collections::HashSet::new();
    let mut rects = Vec::new();
    for subset in 1u64..(1 << n) {
        let mut colmask = u64::MAX;
        for (r, &row) in rows.iter().enumerate() {
            if subset >> r & 1 == 1 {
                colmask &= row;
            }
        }
        if colmask == 0 {
            continue;
        }
        let mut rowmask = 0u64;
        for (r, &row) in rows.iter().enumerate() {
            if row & colmask == colmask {
                rowmask |= 1 << r;
            }
        }
        if seen.insert((rowmask, colmask)) {
            rects.push((rowmask, colmask));
        }
    }
    rects
}

/// Depth-limited exact set cover over the maximal rectangles.
fn cover_search(
    rects: &[(u64, u64)],
    cells: &[(usize, u64)],
    covered: &mut Vec<u64>,
    depth: usize,
) -> bool {
    // Most-constrained uncovered cell first.
    let mut pick: Option<(usize, u64, usize)> = None;
    for &(r, cbit) in cells {
        if covered[r] & cbit != 0 {
            continue;
        }
        let options = rects
            .iter()
            .filter(|&&(rm, cm)| rm >> r & 1 == 1 && cm & cbit != 0)
            .count();
        if pick.map_or(true, |(_, _, best)| options < best) {
            pick = Some((r, cbit, options));
        }
    }
    let Some((r, cbit, _)) = pick else {
        return true; // everything covered
    };
    if depth == 0 {
        return false;
    }
    for &(rm, cm) in rects {
        if rm >> r & 1 != 1 || cm & cbit == 0 {
            continue;
        }
        let saved = covered.clone();
        for (row, c) in covered.iter_mut().enumerate() {
            if rm >> row & 1 == 1 {
                *c |= cm;
            }
        }
        if cover_search(rects, cells, covered, depth - 1) {
            return true;
        }
        *covered = saved;
    }
    false
}

/// Least number of all-ones rectangles that partition the ones of `m` (every
/// one-cell in exactly one rectangle), searched exhaustively up to `cap`.
pub fn biclique_partition_number(m: &BitMatrix, cap: usize) -> Result<RankSearch> {
    assert!(cap >= 1, "cap must be at least 1");
    if m.is_zero() {
        return Ok(RankSearch::Exact(0));
    }
    check_search_size(m)?;
    let work = if m.nrows() <= m.ncols() {
        m.clone()
    } else {
        m.transpose()
    };
    let rows = one_masks(&work);
    for k in 1..=cap {
        if partition_search(&rows, &mut vec![0u64; rows.len()], k) {
            return Ok(RankSearch::Exact(k));
        }
    }
    Ok(RankSearch::Exceeded)
}

/// Branches on the first unpartitioned one-cell; rectangles may use any row
/// and column subset of still-uncovered ones, since a partition cannot reuse
/// cells and an optimal partition may need non-maximal rectangles.
fn partition_search(rows: &[u64], covered: &mut Vec<u64>, depth: usize) -> bool {
    let Some((pr, pc)) = rows
        .iter()
        .enumerate()
        .find_map(|(r, &row)| {
            let open = row & !covered[r];
            (open != 0).then(|| (r, open.trailing_zeros() as usize))
        })
    else {
        return true;
    };
    if depth == 0 {
        return false;
    }
    let pbit = 1u64 << pc;
    // Rows that could join the pivot: their uncovered ones include column pc.
    let candidates: Vec<usize> = (pr + 1..rows.len())
        .filter(|&r| rows[r] & !covered[r] & pbit != 0)
        .collect();
    for rsub in 0u64..(1 << candidates.len()) {
        let mut rowmask = 1u64 << pr;
        let mut colmask = rows[pr] & !covered[pr];
        for (bit, &r) in candidates.iter().enumerate() {
            if rsub >> bit & 1 == 1 {
                rowmask |= 1 << r;
                colmask &= rows[r] & !covered[r];
            }
        }
        if colmask & pbit == 0 {
            continue;
        }
        // Any column subset containing the pivot column will do.
        let free_cols: Vec<u64> = (0..64)
            .filter(|&j| j != pc && colmask >> j & 1 == 1)
            .map(|j| 1u64 << j)
            .collect();
        for csub in 0u64..(1 << free_cols.len()) {
            let mut cols = pbit;
            for (bit, &cb) in free_cols.iter().enumerate() {
                if csub >> bit & 1 == 1 {
                    cols |= cb;
                }
            }
            for (row, c) in covered.iter_mut().enumerate() {
                if rowmask >> row & 1 == 1 {
                    *c |= cols;
                }
            }
            if partition_search(rows, covered, depth - 1) {
                return true;
            }
            for (row, c) in covered.iter_mut().enumerate() {
                if rowmask >> row & 1 == 1 {
                    *c &= !cols;
                }
            }
        }
    }
    false
}
