//! Skew semistandard tableaux and GT parallelograms, the bijection between
//! them, tableau weights, and ballot admissibility.
//!
//! A parallelogram framed by `P/Q` stores one column per index `i ∈ 0..=n`;
//! column `i` is the partition `t^(i) = (g_{i,i}, g_{i,i-1}, ...,
//! g_{i,i-(m-1)})`, the shape occupied by entries `<= i` together with `Q`.
//! Position `(i,j)` is valid when `j ∈ C_i = {i-(m-1), ..., i}`.

use crate::shapes::SkewShape;
use crate::weights::Weight;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauxError {
    #[error("array violates the parallelogram invariants: {0}")]
    Malformed(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("weight {0:?} is not dominant")]
    NonDominantNu(Weight),
}

/// A semistandard filling of a skew shape with entries in `1..=n`,
/// stored row-major in the order of [`SkewShape::cells`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    entries: Vec<i64>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, entries: Vec<i64>) -> Result<Self, TableauxError> {
        let cells = shape.cells();
        if cells.len() != entries.len() {
            return Err(TableauxError::Malformed(format!(
                "expected {} entries, got {}",
                cells.len(),
                entries.len()
            )));
        }
        let t = SkewTableau { shape, entries };
        t.check_semistandard()?;
        Ok(t)
    }

    fn check_semistandard(&self) -> Result<(), TableauxError> {
        let n = self.shape.n() as i64;
        let idx = self.cell_index();
        for (k, &(r, c)) in self.shape.cells().iter().enumerate() {
            let e = self.entries[k];
            if e < 1 || e > n {
                return Err(TableauxError::Malformed(format!(
                    "entry {e} at ({r},{c}) out of 1..={n}"
                )));
            }
            if let Some(&left) = idx.get(&(r, c as i64 - 1)) {
                if self.entries[left] > e {
                    return Err(TableauxError::Malformed(format!(
                        "row {r} decreases at column {c}"
                    )));
                }
            }
            if r > 1 {
                if let Some(&up) = idx.get(&(r - 1, c as i64)) {
                    if self.entries[up] >= e {
                        return Err(TableauxError::Malformed(format!(
                            "column {c} fails to increase at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    fn cell_index(&self) -> HashMap<(usize, i64), usize> {
        self.shape
            .cells()
            .iter()
            .enumerate()
            .map(|(k, &(r, c))| ((r, c as i64), k))
            .collect()
    }

    /// Occurrence counts of `1..=n`.
    pub fn entry_counts(&self) -> Vec<i64> {
        let mut counts = vec![0i64; self.shape.n()];
        for &e in &self.entries {
            counts[(e - 1) as usize] += 1;
        }
        counts
    }
}

/// Tableau weight `wt(T) = sum_i (#_i(T) - #_{i+1}(T)) omega_i`.
pub fn wt(t: &SkewTableau) -> Weight {
    wt_of_counts(&t.entry_counts())
}

/// The same weight map applied to an entry multiset given by counts.
pub fn wt_of_counts(counts: &[i64]) -> Weight {
    let n = counts.len();
    Weight((0..n - 1).map(|i| counts[i] - counts[i + 1]).collect())
}

/// All semistandard fillings of `s`, in lexicographic order of the
/// row-major entry vector. Downstream vertex indices inherit this order.
pub fn enumerate_tableaux(s: &SkewShape) -> Vec<SkewTableau> {
    let cells = s.cells();
    let n = s.n() as i64;
    let idx: HashMap<(usize, i64), usize> = cells
        .iter()
        .enumerate()
        .map(|(k, &(r, c))| ((r, c as i64), k))
        .collect();
    let mut out = Vec::new();
    let mut entries = vec![0i64; cells.len()];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        idx: &HashMap<(usize, i64), usize>,
        n: i64,
        entries: &mut Vec<i64>,
        out: &mut Vec<SkewTableau>,
        shape: &SkewShape,
    ) {
        if k == cells.len() {
            out.push(SkewTableau {
                shape: shape.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1i64;
        if let Some(&left) = idx.get(&(r, c as i64 - 1)) {
            lo = lo.max(entries[left]);
        }
        if r > 1 {
            if let Some(&up) = idx.get(&(r - 1, c as i64)) {
                lo = lo.max(entries[up] + 1);
            }
        }
        for e in lo..=n {
            entries[k] = e;
            rec(k + 1, cells, idx, n, entries, out, shape);
        }
    }
    rec(0, &cells, &idx, n, &mut entries, &mut out, s);
    out
}

/// GT `n`-parallelogram framed by `P/Q`: `cols[i][d] = g_{i, i-d}` for
/// `d ∈ 0..m`, so `cols[i]` is the partition `t^(i)` read first row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtParallelogram {
    n: usize,
    m: usize,
    cols: Vec<Vec<i64>>,
}

impl GtParallelogram {
    pub fn from_columns(n: usize, m: usize, cols: Vec<Vec<i64>>) -> Result<Self, TableauxError> {
        let g = GtParallelogram { n, m, cols };
        g.validate()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.cols
    }

    /// Entry `g_{i,j}`, or `None` when `(i,j)` is not a position.
    pub fn g(&self, i: i64, j: i64) -> Option<i64> {
        if i < 0 || i > self.n as i64 {
            return None;
        }
        let d = i - j;
        if d < 0 || d >= self.m as i64 {
            return None;
        }
        Some(self.cols[i as usize][d as usize])
    }

    /// Sum of all entries; rank offsets are differences of these.
    pub fn entry_sum(&self) -> i64 {
        self.cols.iter().map(|c| c.iter().sum::<i64>()).sum()
    }

    /// Entries with position `(i,j)` bumped by `delta`, unvalidated.
    pub(crate) fn with_bumped(&self, i: usize, j: i64, delta: i64) -> GtParallelogram {
        let mut out = self.clone();
        out.cols[i][(i as i64 - j) as usize] += delta;
        out
    }

    /// Bump position `(i,j)` by `delta` (±1) if the local inequalities still
    /// hold; frame columns `0` and `n` are fixed.
    pub fn bump_valid(&self, i: usize, j: i64, delta: i64) -> Option<GtParallelogram> {
        if i == 0 || i >= self.n {
            return None;
        }
        let ii = i as i64;
        let v = self.g(ii, j)? + delta;
        if v < 0 {
            return None;
        }
        for (p, q, upper) in [
            (ii - 1, j - 1, false),
            (ii + 1, j, false),
            (ii - 1, j, true),
            (ii + 1, j + 1, true),
        ] {
            if let Some(w) = self.g(p, q) {
                if (upper && v > w) || (!upper && v < w) {
                    return None;
                }
            }
        }
        Some(self.with_bumped(i, j, delta))
    }

    /// Check the §5 frame and local inequalities against `shape`.
    pub fn validate_framed_by(&self, shape: &SkewShape) -> Result<(), TableauxError> {
        if self.n != shape.n() || self.m != shape.m() {
            return Err(TableauxError::Malformed(format!(
                "expected n={} m={}, got n={} m={}",
                shape.n(),
                shape.m(),
                self.n,
                self.m
            )));
        }
        self.validate()?;
        for d in 0..self.m {
            if self.cols[0][d] != shape.inner().part(d + 1) {
                return Err(TableauxError::Malformed(format!(
                    "column 0 disagrees with Q at row {}",
                    d + 1
                )));
            }
            if self.cols[self.n][d] != shape.outer().part(d + 1) {
                return Err(TableauxError::Malformed(format!(
                    "column n disagrees with P at row {}",
                    d + 1
                )));
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), TableauxError> {
        if self.cols.len() != self.n + 1 || self.cols.iter().any(|c| c.len() != self.m) {
            return Err(TableauxError::Malformed(
                "column count or length mismatch".into(),
            ));
        }
        for i in 0..=self.n as i64 {
            for d in 0..self.m as i64 {
                let j = i - d;
                let v = self.g(i, j).unwrap();
                if v < 0 {
                    return Err(TableauxError::Malformed(format!(
                        "negative entry at ({i},{j})"
                    )));
                }
                // g_{i-1,j-1} <= g_{i,j} <= g_{i+1,j+1}
                if let Some(w) = self.g(i - 1, j - 1) {
                    if w > v {
                        return Err(TableauxError::Malformed(format!(
                            "g({},{}) > g({i},{j})",
                            i - 1,
                            j - 1
                        )));
                    }
                }
                // g_{i+1,j} <= g_{i,j} <= g_{i-1,j}
                if let Some(w) = self.g(i + 1, j) {
                    if w > v {
                        return Err(TableauxError::Malformed(format!(
                            "g({},{j}) > g({i},{j})",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Tableau -> parallelogram: column `i` is the shape of entries `<= i`
/// together with `Q`.
pub fn to_parallelogram(t: &SkewTableau) -> GtParallelogram {
    let s = t.shape();
    let (n, m) = (s.n(), s.m());
    let mut cols = vec![vec![0i64; m]; n + 1];
    for i in 0..=n {
        for r in 1..=m {
            cols[i][r - 1] = s.inner().part(r);
        }
    }
    for (k, &(r, _)) in s.cells().iter().enumerate() {
        let e = t.entries()[k] as usize;
        for i in e..=n {
            cols[i][r - 1] += 1;
        }
    }
    GtParallelogram { n, m, cols }
}

/// Parallelogram -> tableau: place an `i` in each cell of `t^(i)/t^(i-1)`.
pub fn to_tableau(g: &GtParallelogram, shape: &SkewShape) -> Result<SkewTableau, TableauxError> {
    g.validate_framed_by(shape)?;
    let mut entries = Vec::new();
    for &(r, c) in &shape.cells() {
        let c = c as i64;
        let mut entry = None;
        for i in 1..=g.n {
            if g.cols[i - 1][r - 1] < c && c <= g.cols[i][r - 1] {
                entry = Some(i as i64);
                break;
            }
        }
        match entry {
            Some(e) => entries.push(e),
            None => {
                return Err(TableauxError::Malformed(format!(
                    "cell ({r},{c}) not covered by any t^(i)/t^(i-1)"
                )))
            }
        }
    }
    SkewTableau::new(shape.clone(), entries)
}

/// The ballot statistic `d(x; k, k-p)`:
/// `sum_{q=0}^{p-1} (2 g_{k,k-q} - g_{k-1,k-1-q} - g_{k+1,k+1-q})
///  + g_{k,k-p} - g_{k+1,k+1-p}`.
pub fn ballot_d(x: &GtParallelogram, k: usize, p: usize) -> Result<i64, TableauxError> {
    if k < 1 || k >= x.n() {
        return Err(TableauxError::IndexOutOfRange(format!(
            "color k={k} not in 1..={}",
            x.n() - 1
        )));
    }
    if p >= x.m() {
        return Err(TableauxError::IndexOutOfRange(format!(
            "p={p} not in 0..={}",
            x.m() - 1
        )));
    }
    let (k, p) = (k as i64, p as i64);
    let mut d = 0i64;
    for q in 0..p {
        d += 2 * x.g(k, k - q).unwrap();
        d -= x.g(k - 1, k - 1 - q).unwrap();
        d -= x.g(k + 1, k + 1 - q).unwrap();
    }
    d += x.g(k, k - p).unwrap();
    d -= x.g(k + 1, k + 1 - p).unwrap();
    Ok(d)
}

/// `nu`-ballot admissibility: `d(x;k,k-p) >= -nu_k` for all `k`, `p`.
pub fn is_nu_ballot(x: &GtParallelogram, nu: &Weight) -> Result<bool, TableauxError> {
    if !nu.is_dominant() {
        return Err(TableauxError::NonDominantNu(nu.clone()));
    }
    for k in 1..x.n() {
        for p in 0..x.m() {
            if ballot_d(x, k, p)? < -nu.0[k - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Plain ballot admissibility (`nu = 0`).
pub fn is_ballot(x: &GtParallelogram) -> bool {
    is_nu_ballot(x, &Weight::zero(x.n() - 1)).unwrap()
}

/// The nested right-to-left subtableaux of `t`, as entry-count vectors in
/// increasing length. Cells are read along rows top to bottom, right to
/// left within each row, and a prefix closes only once the constant run of
/// its last-added entry is complete.
pub fn rtl_subtableaux(t: &SkewTableau) -> Vec<Vec<i64>> {
    let s = t.shape();
    let idx = t.cell_index();
    let mut counts = vec![0i64; s.n()];
    let mut out = Vec::new();
    for r in 1..=s.m() {
        let (lo, hi) = (s.inner().part(r) + 1, s.outer().part(r));
        for c in (lo..=hi).rev() {
            let k = idx[&(r, c)];
            let e = t.entries()[k];
            counts[(e - 1) as usize] += 1;
            let string_open = c > lo && t.entries()[idx[&(r, c - 1)]] == e;
            if !string_open {
                out.push(counts.clone());
            }
        }
    }
    out
}

/// Ballot admissibility via the RTL definition; retained as a test oracle
/// for the `d`-statistic route.
pub fn is_nu_ballot_rtl(t: &SkewTableau, nu: &Weight) -> Result<bool, TableauxError> {
    if !nu.is_dominant() {
        return Err(TableauxError::NonDominantNu(nu.clone()));
    }
    Ok(rtl_subtableaux(t)
        .iter()
        .all(|counts| wt_of_counts(counts).add(nu).is_dominant()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn shape(p: &[i64], q: &[i64], n: usize) -> SkewShape {
        SkewShape::new(
            Partition::new(p.to_vec()).unwrap(),
            Partition::new(q.to_vec()).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tableaux(&shape(&[1], &[0], 2)).len(), 2);
        assert_eq!(enumerate_tableaux(&shape(&[3, 3], &[2, 0], 3)).len(), 15);
        assert_eq!(
            enumerate_tableaux(&shape(&[3, 3, 1], &[2, 0, 0], 3)).len(),
            21
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let ts = enumerate_tableaux(&shape(&[3, 3], &[2, 0], 3));
        let vecs: Vec<&[i64]> = ts.iter().map(|t| t.entries()).collect();
        let mut sorted = vecs.clone();
        sorted.sort();
        assert_eq!(vecs, sorted);
    }

    #[test]
    fn round_trip_bijection() {
        let s = shape(&[3, 3], &[2, 0], 3);
        for t in enumerate_tableaux(&s) {
            let g = to_parallelogram(&t);
            g.validate_framed_by(&s).unwrap();
            assert_eq!(to_tableau(&g, &s).unwrap(), t);
        }
    }

    #[test]
    fn empty_shape_has_unique_frame_parallelogram() {
        let s = shape(&[2, 2], &[2, 2], 2);
        let ts = enumerate_tableaux(&s);
        assert_eq!(ts.len(), 1);
        let g = to_parallelogram(&ts[0]);
        for i in 0..=s.n() {
            assert_eq!(g.columns()[i], vec![2, 2]);
        }
    }

    #[test]
    fn worked_parallelogram_columns() {
        // rows (1,1,3)/(2,3) of the non-skew shape (3,2,0)
        let s = shape(&[3, 2, 0], &[0, 0, 0], 3);
        let t = SkewTableau::new(s.clone(), vec![1, 1, 3, 2, 3]).unwrap();
        let g = to_parallelogram(&t);
        assert_eq!(g.columns()[1], vec![2, 0, 0]);
        assert_eq!(g.columns()[2], vec![2, 1, 0]);
        assert_eq!(g.columns()[3], vec![3, 2, 0]);
    }

    #[test]
    fn weights() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let top = SkewTableau::new(s.clone(), vec![1, 1, 1, 2]).unwrap();
        assert_eq!(wt(&top), Weight(vec![2, 1]));
        let balanced = SkewTableau::new(shape(&[3], &[0], 3), vec![1, 2, 3]).unwrap();
        assert_eq!(wt(&balanced), Weight(vec![0, 0]));
        // bottom of the same lattice is the negated reversal of the top
        let bottom = SkewTableau::new(s, vec![2, 3, 3, 3]).unwrap();
        assert_eq!(wt(&bottom), wt(&top).reversed().neg());
    }

    #[test]
    fn ballot_counts_match_decompositions() {
        let count = |p: &[i64], q: &[i64]| {
            enumerate_tableaux(&shape(p, q, 3))
                .iter()
                .filter(|t| is_ballot(&to_parallelogram(t)))
                .count()
        };
        assert_eq!(count(&[3, 3, 1], &[2, 0, 0]), 2);
        assert_eq!(count(&[4, 3, 1], &[2, 0, 0]), 4);
    }

    #[test]
    fn highest_weight_tableau_is_ballot() {
        let s = shape(&[3, 2, 0], &[0, 0, 0], 3);
        let top = &enumerate_tableaux(&s)[0];
        assert!(is_ballot(&to_parallelogram(top)));
    }

    #[test]
    fn large_nu_admits_everything() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let nu = Weight(vec![4, 4]);
        for t in enumerate_tableaux(&s) {
            assert!(is_nu_ballot(&to_parallelogram(&t), &nu).unwrap());
        }
    }

    #[test]
    fn nu_ballot_rejects_non_dominant() {
        let s = shape(&[1], &[0], 2);
        let t = &enumerate_tableaux(&s)[0];
        assert!(is_nu_ballot(&to_parallelogram(t), &Weight(vec![-1])).is_err());
    }

    #[test]
    fn rtl_first_subtableau_is_string_closure() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let t = SkewTableau::new(s, vec![1, 1, 2, 2]).unwrap();
        let subs = rtl_subtableaux(&t);
        // top row's rightmost cell holds 1, a singleton string
        assert_eq!(subs[0].iter().sum::<i64>(), 1);
        assert_eq!(subs[0][0], 1);
        // the 2-string of the bottom row closes in one step
        assert_eq!(subs.last().unwrap(), &t.entry_counts());
    }

    #[test]
    fn single_cell_has_one_subtableau() {
        let s = shape(&[1], &[0], 2);
        for t in enumerate_tableaux(&s) {
            assert_eq!(rtl_subtableaux(&t).len(), 1);
        }
    }

    #[test]
    fn rtl_and_d_statistic_agree() {
        for n in 2..=3usize {
            for s in crate::shapes::enumerate_shapes(5, n) {
                for t in enumerate_tableaux(&s) {
                    let g = to_parallelogram(&t);
                    for nu in [Weight::zero(n - 1), Weight::rho(n - 1)] {
                        assert_eq!(
                            is_nu_ballot(&g, &nu).unwrap(),
                            is_nu_ballot_rtl(&t, &nu).unwrap(),
                            "shape {s}, entries {:?}, nu {nu}",
                            t.entries()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_parallelogram_rejected() {
        let s = shape(&[2, 1], &[0, 0], 2);
        let t = &enumerate_tableaux(&s)[0];
        let mut g = to_parallelogram(t);
        g.cols[1][0] += 5;
        assert!(to_tableau(&g, &s).is_err());
    }
}
