//! Partitions, skew shapes `P/Q` with an entry bound `n`, the Klein
//! four-group of shape operations, and the bounded shape enumeration used by
//! the property sweeps.
//!
//! Constructors silently pad `P` and `Q` with zeros to length
//! `max(n, given length)`, which never changes the cell set. Shapes returned
//! by [`shape_op`] are in canonical form: empty rows stripped, column gaps
//! closed, and frozen columns (exactly `n` cells, hence a forced filling)
//! removed. Dropping frozen columns is what makes the column-complement an
//! involution on shapes; it does not change the associated lattice.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("parts must be weakly decreasing and nonnegative: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("inner shape is not contained in outer shape at row {row}")]
    NotContained { row: usize },
    #[error("column {col} has {height} cells, exceeding the entry bound {n}")]
    ColumnTooTall { col: usize, height: usize, n: usize },
    #[error("entry bound must be at least 1")]
    ZeroBound,
    #[error("cannot parse shape spec {0:?}, expected \"P/Q;n\"")]
    Parse(String),
}

/// Weakly decreasing list of nonnegative integers; trailing zeros permitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self, ShapeError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().map_or(true, |&p| p >= 0);
        if !ok {
            return Err(ShapeError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn zeros(len: usize) -> Self {
        Partition {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn part(&self, row: usize) -> i64 {
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().sum()
    }

    fn padded(&self, len: usize) -> Partition {
        let mut parts = self.parts.clone();
        while parts.len() < len {
            parts.push(0);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A skew shape `P/Q` with entries bounded by `n`; `P` and `Q` share the
/// common padded length `m = max(n, rows given)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    p: Partition,
    q: Partition,
    n: usize,
}

impl SkewShape {
    pub fn new(p: Partition, q: Partition, n: usize) -> Result<Self, ShapeError> {
        if n == 0 {
            return Err(ShapeError::ZeroBound);
        }
        let m = p.len().max(q.len()).max(n);
        let p = p.padded(m);
        let q = q.padded(m);
        for row in 1..=m {
            if q.part(row) > p.part(row) {
                return Err(ShapeError::NotContained { row });
            }
        }
        let s = SkewShape { p, q, n };
        for (col, h) in s.column_heights() {
            if h > n {
                return Err(ShapeError::ColumnTooTall {
                    col,
                    height: h,
                    n,
                });
            }
        }
        Ok(s)
    }

    /// Non-skew shape of a partition (`Q = 0`).
    pub fn classical(p: Partition, n: usize) -> Result<Self, ShapeError> {
        let q = Partition::zeros(p.len());
        SkewShape::new(p, q, n)
    }

    pub fn outer(&self) -> &Partition {
        &self.p
    }

    pub fn inner(&self) -> &Partition {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Padded row count `m = max(n, rows)`.
    pub fn m(&self) -> usize {
        self.p.len()
    }

    pub fn is_classical(&self) -> bool {
        self.q.is_empty()
    }

    pub fn num_cells(&self) -> i64 {
        self.p.total() - self.q.total()
    }

    /// Number of rows with at least one cell.
    pub fn num_nonzero_rows(&self) -> usize {
        (1..=self.m()).filter(|&r| self.p.part(r) > self.q.part(r)).count()
    }

    /// `(row, col)` pairs in row-major order, matrix-style 1-based indexing
    /// inherited from the outer partition.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.m() {
            for c in (self.q.part(r) + 1)..=self.p.part(r) {
                out.push((r, c as usize));
            }
        }
        out
    }

    /// Nonempty columns left to right as `(col, height)`.
    fn column_heights(&self) -> Vec<(usize, usize)> {
        self.column_intervals()
            .into_iter()
            .map(|(c, top, bot)| (c, bot - top + 1))
            .collect()
    }

    /// Nonempty columns as `(col, top_row, bottom_row)`.
    fn column_intervals(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let width = self.p.part(1);
        for c in 1..=width {
            let rows: Vec<usize> = (1..=self.m())
                .filter(|&r| self.q.part(r) < c && c <= self.p.part(r))
                .collect();
            if let (Some(&top), Some(&bot)) = (rows.first(), rows.last()) {
                out.push((c as usize, top, bot));
            }
        }
        out
    }

    /// One single-column partition per nonempty column, left to right.
    pub fn column_partitions(&self) -> Vec<Partition> {
        self.column_heights()
            .into_iter()
            .map(|(_, h)| Partition::new(vec![1; h]).unwrap())
            .collect()
    }

    /// Canonical form: drop frozen height-`n` columns, close column gaps,
    /// strip empty rows and re-pad. The associated lattice is unchanged.
    pub fn canonical(&self) -> SkewShape {
        let intervals: Vec<(usize, usize)> = self
            .column_intervals()
            .into_iter()
            .filter(|&(_, top, bot)| bot - top + 1 < self.n)
            .map(|(_, top, bot)| (top, bot))
            .collect();
        SkewShape::from_column_intervals(&intervals, self.n)
    }

    /// Rebuild a shape from consecutive column intervals (top/bottom rows,
    /// both weakly decreasing left to right).
    fn from_column_intervals(intervals: &[(usize, usize)], n: usize) -> SkewShape {
        debug_assert!(intervals
            .windows(2)
            .all(|w| w[0].0 >= w[1].0 && w[0].1 >= w[1].1));
        if intervals.is_empty() {
            return SkewShape::new(Partition::zeros(n), Partition::zeros(n), n).unwrap();
        }
        let top_row = intervals.iter().map(|&(t, _)| t).min().unwrap();
        let bot_row = intervals.iter().map(|&(_, b)| b).max().unwrap();
        let rows = bot_row - top_row + 1;
        let mut p = vec![0i64; rows];
        let mut q = vec![0i64; rows];
        for r in 0..rows {
            let row = top_row + r;
            let cols: Vec<usize> = intervals
                .iter()
                .enumerate()
                .filter(|&(_, &(t, b))| t <= row && row <= b)
                .map(|(c, _)| c + 1)
                .collect();
            if let (Some(&first), Some(&last)) = (cols.first(), cols.last()) {
                debug_assert_eq!(cols.len(), last - first + 1, "rows must be contiguous");
                p[r] = last as i64;
                q[r] = (first - 1) as i64;
            }
        }
        SkewShape::new(Partition { parts: p }, Partition { parts: q }, n)
            .expect("interval reassembly yields a valid shape")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{};{}", self.p, self.q, self.n)
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// Text form `"P/Q;n"` with comma-separated parts, e.g. `"3,3,1/2,0,0;3"`.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let err = || ShapeError::Parse(s.to_string());
        let (body, n) = s.rsplit_once(';').ok_or_else(err)?;
        let n: usize = n.trim().parse().map_err(|_| err())?;
        let (p, q) = body.split_once('/').ok_or_else(err)?;
        let parse_parts = |t: &str| -> Result<Vec<i64>, ShapeError> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(vec![]);
            }
            t.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| err()))
                .collect()
        };
        let p = Partition::new(parse_parts(p)?)?;
        let q = Partition::new(parse_parts(q)?)?;
        SkewShape::new(p, q, n)
    }
}

/// `true` iff the skew shape `P/Q` has no column with more than `n` cells.
pub fn is_skew_compatible(p: &Partition, q: &Partition, n: usize) -> Result<bool, ShapeError> {
    let m = p.len().max(q.len());
    for row in 1..=m {
        if q.part(row) > p.part(row) {
            return Err(ShapeError::NotContained { row });
        }
    }
    match SkewShape::new(p.clone(), q.clone(), n) {
        Ok(_) => Ok(true),
        Err(ShapeError::ColumnTooTall { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The four Klein-group operations on skew shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeOp {
    /// Identity (canonicalizes).
    Identity,
    /// Column complement within height `n` (the paper's sigma_0).
    ColumnComplement,
    /// Dual: column complement followed by 180-degree rotation (the
    /// paper's `*`).
    Dual,
    /// 180-degree rotation (the paper's bowtie).
    Rotate,
}

pub const SHAPE_OPS: [ShapeOp; 4] = [
    ShapeOp::Identity,
    ShapeOp::ColumnComplement,
    ShapeOp::Dual,
    ShapeOp::Rotate,
];

/// Apply a Klein-group shape operation; the result is canonical.
pub fn shape_op(s: &SkewShape, op: ShapeOp) -> SkewShape {
    let s = s.canonical();
    let n = s.n();
    let intervals: Vec<(usize, usize)> = s
        .column_intervals()
        .into_iter()
        .map(|(_, t, b)| (t, b))
        .collect();
    let complemented = |ints: &[(usize, usize)]| -> Vec<(usize, usize)> {
        // extend each column downward to n cells, then remove the original
        ints.iter()
            .filter(|&&(t, b)| b - t + 1 < n)
            .map(|&(t, b)| (b + 1, t + n - 1))
            .collect()
    };
    let rotated = |ints: &[(usize, usize)]| -> Vec<(usize, usize)> {
        let hi = ints.iter().map(|&(_, b)| b).max().unwrap_or(1);
        ints.iter()
            .rev()
            .map(|&(t, b)| (hi + 1 - b, hi + 1 - t))
            .collect()
    };
    let out = match op {
        ShapeOp::Identity => intervals,
        ShapeOp::ColumnComplement => complemented(&intervals),
        ShapeOp::Rotate => rotated(&intervals),
        ShapeOp::Dual => rotated(&complemented(&intervals)),
    };
    SkewShape::from_column_intervals(&out, n)
}

/// All canonical gap-free skew shapes with at most `max_cells` cells that are
/// skew-compatible with respect to `n`. Canonical means: rows nonempty, the
/// bottom row starts at column 1, and consecutive rows touch or overlap
/// horizontally. This is the instance family the property sweeps range over.
pub fn enumerate_shapes(max_cells: i64, n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let mut p_rows: Vec<i64> = Vec::new();
    let mut q_rows: Vec<i64> = Vec::new();
    fn rec(
        p_rows: &mut Vec<i64>,
        q_rows: &mut Vec<i64>,
        used: i64,
        max_cells: i64,
        n: usize,
        out: &mut Vec<SkewShape>,
    ) {
        if let Some(&q_last) = q_rows.last() {
            // close the shape here if the bottom row is left-justified
            if q_last == 0 {
                let p = Partition::new(p_rows.clone()).unwrap();
                let q = Partition::new(q_rows.clone()).unwrap();
                if let Ok(s) = SkewShape::new(p, q, n) {
                    out.push(s);
                }
            }
        }
        let budget = max_cells - used;
        if budget <= 0 {
            return;
        }
        // next row (q, p): nonempty, weakly decreasing under the previous
        // row, and horizontally touching it (p >= previous q)
        let (p_hi, q_hi) = match (p_rows.last(), q_rows.last()) {
            (Some(&p), Some(&q)) => (p, q),
            _ => (max_cells, max_cells - 1),
        };
        for q in 0..=q_hi {
            let p_lo = (q + 1).max(if p_rows.is_empty() { 1 } else { q_hi });
            for p in p_lo..=p_hi.min(q + budget) {
                // reaching q = 0 later costs at least q more cells
                if q > budget - (p - q) {
                    continue;
                }
                p_rows.push(p);
                q_rows.push(q);
                rec(p_rows, q_rows, used + (p - q), max_cells, n, out);
                p_rows.pop();
                q_rows.pop();
            }
        }
    }
    rec(&mut p_rows, &mut q_rows, 0, max_cells, n, &mut out);
    out.sort_by_key(|s| {
        (
            s.num_cells(),
            s.outer().parts().to_vec(),
            s.inner().parts().to_vec(),
        )
    });
    out.dedup();
    out
}

/// The connected members of [`enumerate_shapes`]: consecutive nonempty rows
/// overlap in at least one column. Disconnected shapes factor into products
/// of these, so the acceptance sweeps range over the connected family.
pub fn enumerate_connected_shapes(max_cells: i64, n: usize) -> Vec<SkewShape> {
    enumerate_shapes(max_cells, n)
        .into_iter()
        .filter(|s| {
            let m = s.num_nonzero_rows();
            (1..m).all(|r| s.inner().part(r) < s.outer().part(r + 1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[i64], q: &[i64], n: usize) -> SkewShape {
        SkewShape::new(
            Partition::new(p.to_vec()).unwrap(),
            Partition::new(q.to_vec()).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn cells_examples() {
        let s = shape(&[1], &[0], 2);
        assert_eq!(s.cells(), vec![(1, 1)]);
        assert_eq!(s.m(), 2);

        let s = shape(&[3, 3], &[2, 0], 3);
        assert_eq!(s.cells(), vec![(1, 3), (2, 1), (2, 2), (2, 3)]);

        let s = shape(&[3, 3, 1], &[2, 0, 0], 3);
        assert_eq!(s.cells().len(), 5);
    }

    #[test]
    fn skew_compatibility() {
        let p = Partition::new(vec![1, 1, 1]).unwrap();
        let q = Partition::zeros(3);
        assert_eq!(is_skew_compatible(&p, &q, 2).unwrap(), false);

        let p = Partition::new(vec![3, 3]).unwrap();
        let q = Partition::new(vec![2, 0]).unwrap();
        assert_eq!(is_skew_compatible(&p, &q, 3).unwrap(), true);

        // column 2 of (2,2,2,2)/(1,1,0,0) has four cells, so the bound must
        // be at least 4
        let p = Partition::new(vec![2, 2, 2, 2]).unwrap();
        let q = Partition::new(vec![1, 1, 0, 0]).unwrap();
        assert_eq!(is_skew_compatible(&p, &q, 2).unwrap(), false);
        assert_eq!(is_skew_compatible(&p, &q, 4).unwrap(), true);

        let p = Partition::new(vec![1]).unwrap();
        let q = Partition::new(vec![1, 1]).unwrap();
        assert!(is_skew_compatible(&p, &q, 2).is_err());
    }

    #[test]
    fn column_partitions_examples() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let cols = s.column_partitions();
        let heights: Vec<usize> = cols.iter().map(|p| p.len()).collect();
        assert_eq!(heights, vec![1, 1, 2]);

        let s = shape(&[1], &[0], 2);
        assert_eq!(s.column_partitions().len(), 1);

        let s = shape(&[3, 3, 1], &[2, 0, 0], 3);
        let heights: Vec<usize> = s.column_partitions().iter().map(|p| p.len()).collect();
        assert_eq!(heights, vec![2, 1, 2]);
    }

    #[test]
    fn figure_captions_for_shape_ops() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let sigma = shape_op(&s, ShapeOp::ColumnComplement);
        assert_eq!(sigma, shape(&[3, 2], &[0, 0], 3));
        let bowtie = shape_op(&s, ShapeOp::Rotate);
        assert_eq!(bowtie, shape(&[3, 1], &[0, 0], 3));
    }

    #[test]
    fn dual_is_rotate_of_complement() {
        for s in enumerate_shapes(6, 3) {
            let lhs = shape_op(&s, ShapeOp::Dual);
            let rhs = shape_op(&shape_op(&s, ShapeOp::ColumnComplement), ShapeOp::Rotate);
            assert_eq!(lhs, rhs, "shape {s}");
        }
    }

    #[test]
    fn klein_group_action() {
        for n in 2..=4usize {
            for s in enumerate_shapes(8, n) {
                let c = s.canonical();
                for op in [ShapeOp::ColumnComplement, ShapeOp::Rotate, ShapeOp::Dual] {
                    let twice = shape_op(&shape_op(&s, op), op);
                    assert_eq!(twice, c, "{op:?} not an involution on {s}");
                }
                let star = shape_op(&s, ShapeOp::Dual);
                let composed = shape_op(&shape_op(&s, ShapeOp::Rotate), ShapeOp::ColumnComplement);
                assert_eq!(star, composed, "sigma0 . bowtie != * on {s}");
            }
        }
    }

    #[test]
    fn complement_cell_count() {
        for s in enumerate_shapes(8, 3) {
            let cols = s.canonical().column_partitions().len() as i64;
            let sigma = shape_op(&s, ShapeOp::ColumnComplement);
            assert_eq!(
                sigma.num_cells(),
                3 * cols - s.canonical().num_cells(),
                "shape {s}"
            );
        }
    }

    #[test]
    fn padding_leaves_cells_unchanged() {
        let a = shape(&[3, 3], &[2, 0], 3);
        let b = shape(&[3, 3, 0, 0], &[2, 0, 0, 0], 3);
        assert_eq!(a.cells(), b.cells());
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn empty_shape_is_legal() {
        let s = shape(&[2, 2], &[2, 2], 3);
        assert_eq!(s.cells(), vec![]);
        assert_eq!(s.num_cells(), 0);
    }

    #[test]
    fn parse_round_trip() {
        let s: SkewShape = "3,3,1/2,0,0;3".parse().unwrap();
        assert_eq!(s, shape(&[3, 3, 1], &[2, 0, 0], 3));
        let s: SkewShape = "1/0;2".parse().unwrap();
        assert_eq!(s, shape(&[1], &[0], 2));
        assert!("3,3/;".parse::<SkewShape>().is_err());
        assert!("junk".parse::<SkewShape>().is_err());
    }

    #[test]
    fn enumeration_is_finite_and_valid() {
        let shapes = enumerate_shapes(4, 2);
        assert!(!shapes.is_empty());
        for s in &shapes {
            assert!(s.num_cells() <= 4);
            assert!(s.column_heights().iter().all(|&(_, h)| h <= 2));
        }
        // the single cell, the domino pair, etc. are present
        assert!(shapes.contains(&shape(&[1], &[0], 2)));
        assert!(shapes.contains(&shape(&[2, 2], &[1, 0], 2)));
    }
}
