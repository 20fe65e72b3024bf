//! Spin-node lattices for the orthogonal Lie algebras: odd orthogonal ideal
//! arrays realize `V(m omega_n)` in type B, even orthogonal ideal arrays
//! realize `V(m omega_{n-1})` and `V(m omega_n)` in type D.
//!
//! Both array families share one skeleton: triangular rows `1..=R` of
//! entries `c_{i,j}` together with a merged boundary sequence `h_1..h_{R+1}`
//! (`R = n-1` for odd arrays, where `h` is simply row `n`; `R = n-2` for
//! even arrays, where `h` interleaves the two spin rows). The constraints
//! are `c_{i,j} >= c_{i+1,j}`, `c_{i,j} <= c_{i+1,j+1}`, `h_q <= c_{R,q} <=
//! h_{q+1}`, and `h_{R+1} <= m`.
//!
//! Identifying the components that fix the even (resp. odd) positions of
//! `h` with classical GT lattices attaches a positive rational product to
//! every edge via the skew coefficient formulas. The implied edge
//! coefficients are `X = Y = sqrt(product)`; no square root is ever
//! materialized — per-edge products are certified in product form, which
//! suffices for the representation-diagram conclusion.

use crate::lattice::{ColoredLattice, Componentwise, Edge};
use crate::repdiag::coeffs_skew;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::GtParallelogram;
use crate::weights::QPoly;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::collections::HashMap;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrthogonalError {
    #[error("unsupported parameters: kind {kind:?}, n {n}, m {m}")]
    BadParameters { kind: OrthKind, n: usize, m: i64 },
    #[error("rank generating function differs from the product formula")]
    RgfMismatch,
    #[error("edge product failed: {0}")]
    Coefficient(#[from] crate::repdiag::RepdiagError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthKind {
    B,
    D,
}

/// Which spin-node fundamental weight a type-D lattice realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    /// `omega_{n-1}`
    Lower,
    /// `omega_n`
    Upper,
}

/// A site whose entry may be incremented along an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Normal { i: usize, j: usize },
    Merged { q: usize },
}

/// Shared array skeleton behind both ideal-array families.
pub trait OrthArray: Clone + Eq + Hash + Ord {
    fn rank(&self) -> usize;
    fn bound(&self) -> i64;
    /// Number of plain triangular rows `R`.
    fn normal_rows(&self) -> usize;
    fn normal(&self, i: usize, j: usize) -> i64;
    /// Merged boundary value `h_q`, `1 <= q <= R+1`.
    fn merged(&self, q: usize) -> i64;
    /// Edge color carried by a change at merged position `q`.
    fn merged_color(&self, q: usize) -> usize;
    fn with_site(&self, site: Site, delta: i64) -> Self;

    fn sites(&self) -> Vec<Site> {
        let r = self.normal_rows();
        let mut out = Vec::new();
        for i in 1..=r {
            for j in 1..=i {
                out.push(Site::Normal { i, j });
            }
        }
        for q in 1..=r + 1 {
            out.push(Site::Merged { q });
        }
        out
    }

    fn site_value(&self, site: Site) -> i64 {
        match site {
            Site::Normal { i, j } => self.normal(i, j),
            Site::Merged { q } => self.merged(q),
        }
    }

    fn site_color(&self, site: Site) -> usize {
        match site {
            Site::Normal { i, .. } => i,
            Site::Merged { q } => self.merged_color(q),
        }
    }

    /// Bump a site by `delta` if the array stays valid.
    fn bump(&self, site: Site, delta: i64) -> Option<Self> {
        let r = self.normal_rows();
        let v = self.site_value(site) + delta;
        if v < 0 {
            return None;
        }
        let ok = match site {
            Site::Normal { i, j } => {
                let (below_lo, below_hi) = if i < r {
                    (self.normal(i + 1, j), self.normal(i + 1, j + 1))
                } else {
                    (self.merged(j), self.merged(j + 1))
                };
                let above_lo = if i > 1 && j > 1 {
                    self.normal(i - 1, j - 1)
                } else {
                    0
                };
                let above_hi = if i > 1 && j <= i - 1 {
                    self.normal(i - 1, j)
                } else {
                    i64::MAX
                };
                below_lo.max(above_lo) <= v && v <= below_hi.min(above_hi)
            }
            Site::Merged { q } => {
                let lo = if q >= 2 { self.normal(r, q - 1) } else { 0 };
                let hi = if q <= r { self.normal(r, q) } else { self.bound() };
                lo <= v && v <= hi
            }
        };
        ok.then(|| self.with_site(site, delta))
    }
}

/// Odd orthogonal ideal array: entries `c_{i,j}` for `1 <= j <= i <= n`
/// with `c_{n,n} <= m`; the merged boundary is row `n` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddIdealArray {
    n: usize,
    m: i64,
    c: Vec<Vec<i64>>,
}

impl OddIdealArray {
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.c[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.c
    }
}

impl OrthArray for OddIdealArray {
    fn rank(&self) -> usize {
        self.n
    }
    fn bound(&self) -> i64 {
        self.m
    }
    fn normal_rows(&self) -> usize {
        self.n - 1
    }
    fn normal(&self, i: usize, j: usize) -> i64 {
        self.c[i - 1][j - 1]
    }
    fn merged(&self, q: usize) -> i64 {
        self.c[self.n - 1][q - 1]
    }
    fn merged_color(&self, _q: usize) -> usize {
        self.n
    }
    fn with_site(&self, site: Site, delta: i64) -> Self {
        let mut out = self.clone();
        match site {
            Site::Normal { i, j } => out.c[i - 1][j - 1] += delta,
            Site::Merged { q } => out.c[self.n - 1][q - 1] += delta,
        }
        out
    }
}

/// Even orthogonal ideal array: triangular rows `1..=n-2` plus two spin
/// rows whose entries interleave into the merged boundary; `spin` records
/// which of the two rows is row `n-1` and hence which fundamental weight
/// the ambient lattice realizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenIdealArray {
    n: usize,
    m: i64,
    spin: Spin,
    /// rows `1..=n-2`
    c: Vec<Vec<i64>>,
    /// odd merged positions, length `ceil((n-1)/2)`
    merged_odd: Vec<i64>,
    /// even merged positions, length `floor((n-1)/2)`
    merged_even: Vec<i64>,
}

impl EvenIdealArray {
    /// Entry in the paper's row/column indexing: for `Spin::Lower` row
    /// `n-1` holds the odd merged positions, for `Spin::Upper` the even
    /// ones.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        if i <= self.n - 2 {
            self.c[i - 1][j - 1]
        } else if (i == self.n - 1) == (self.spin == Spin::Lower) {
            self.merged_odd[j - 1]
        } else {
            self.merged_even[j - 1]
        }
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn rows(&self) -> (&[Vec<i64>], &[i64], &[i64]) {
        (&self.c, &self.merged_odd, &self.merged_even)
    }
}

impl OrthArray for EvenIdealArray {
    fn rank(&self) -> usize {
        self.n
    }
    fn bound(&self) -> i64 {
        self.m
    }
    fn normal_rows(&self) -> usize {
        self.n - 2
    }
    fn normal(&self, i: usize, j: usize) -> i64 {
        self.c[i - 1][j - 1]
    }
    fn merged(&self, q: usize) -> i64 {
        if q % 2 == 1 {
            self.merged_odd[(q - 1) / 2]
        } else {
            self.merged_even[q / 2 - 1]
        }
    }
    fn merged_color(&self, q: usize) -> usize {
        let odd = q % 2 == 1;
        if odd == (self.spin == Spin::Lower) {
            self.n - 1
        } else {
            self.n
        }
    }
    fn with_site(&self, site: Site, delta: i64) -> Self {
        let mut out = self.clone();
        match site {
            Site::Normal { i, j } => out.c[i - 1][j - 1] += delta,
            Site::Merged { q } => {
                if q % 2 == 1 {
                    out.merged_odd[(q - 1) / 2] += delta;
                } else {
                    out.merged_even[q / 2 - 1] += delta;
                }
            }
        }
        out
    }
}

impl Componentwise for OddIdealArray {
    fn cw_min(&self, other: &Self) -> Self {
        zip_odd(self, other, i64::min)
    }
    fn cw_max(&self, other: &Self) -> Self {
        zip_odd(self, other, i64::max)
    }
}

fn zip_odd(a: &OddIdealArray, b: &OddIdealArray, f: impl Fn(i64, i64) -> i64) -> OddIdealArray {
    let c = a
        .c
        .iter()
        .zip(&b.c)
        .map(|(x, y)| x.iter().zip(y).map(|(&u, &v)| f(u, v)).collect())
        .collect();
    OddIdealArray { n: a.n, m: a.m, c }
}

impl Componentwise for EvenIdealArray {
    fn cw_min(&self, other: &Self) -> Self {
        zip_even(self, other, i64::min)
    }
    fn cw_max(&self, other: &Self) -> Self {
        zip_even(self, other, i64::max)
    }
}

fn zip_even(a: &EvenIdealArray, b: &EvenIdealArray, f: impl Fn(i64, i64) -> i64) -> EvenIdealArray {
    let zip1 = |x: &[i64], y: &[i64]| -> Vec<i64> {
        x.iter().zip(y).map(|(&u, &v)| f(u, v)).collect()
    };
    EvenIdealArray {
        n: a.n,
        m: a.m,
        spin: a.spin,
        c: a.c.iter().zip(&b.c).map(|(x, y)| zip1(x, y)).collect(),
        merged_odd: zip1(&a.merged_odd, &b.merged_odd),
        merged_even: zip1(&a.merged_even, &b.merged_even),
    }
}

/// Enumerate all arrays with the given zeroed skeleton: the merged row
/// ranges over weakly increasing tuples bounded by `m`, and each triangular
/// row ranges between the entries of the row below it.
fn enumerate_arrays<T: OrthArray>(zero: &T) -> Vec<T> {
    let r = zero.normal_rows();
    let m = zero.bound();
    let mut out = Vec::new();
    let mut h = vec![0i64; r + 2]; // 1-based merged values
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); r + 1]; // rows[i] = row i
    fn fill_merged<T: OrthArray>(
        zero: &T,
        h: &mut Vec<i64>,
        rows: &mut Vec<Vec<i64>>,
        q: usize,
        m: i64,
        out: &mut Vec<T>,
    ) {
        let r = zero.normal_rows();
        if q > r + 1 {
            fill_row(zero, h, rows, r, out);
            return;
        }
        let lo = if q == 1 { 0 } else { h[q - 1] };
        for v in lo..=m {
            h[q] = v;
            fill_merged(zero, h, rows, q + 1, m, out);
        }
    }
    fn fill_row<T: OrthArray>(
        zero: &T,
        h: &mut Vec<i64>,
        rows: &mut Vec<Vec<i64>>,
        i: usize,
        out: &mut Vec<T>,
    ) {
        let r = zero.normal_rows();
        if i == 0 {
            let mut a = zero.clone();
            for q in 1..=r + 1 {
                a = a.with_site(Site::Merged { q }, h[q] - a.merged(q));
            }
            for i in 1..=r {
                for j in 1..=i {
                    a = a.with_site(Site::Normal { i, j }, rows[i][j - 1] - a.normal(i, j));
                }
            }
            out.push(a);
            return;
        }
        let bounds: Vec<(i64, i64)> = (1..=i)
            .map(|j| {
                if i == r {
                    (h[j], h[j + 1])
                } else {
                    (rows[i + 1][j - 1], rows[i + 1][j])
                }
            })
            .collect();
        let mut row = vec![0i64; i];
        fn rec<T: OrthArray>(
            j: usize,
            i: usize,
            bounds: &[(i64, i64)],
            row: &mut Vec<i64>,
            zero: &T,
            h: &mut Vec<i64>,
            rows: &mut Vec<Vec<i64>>,
            out: &mut Vec<T>,
        ) {
            if j > i {
                rows[i] = row.clone();
                fill_row(zero, h, rows, i - 1, out);
                return;
            }
            let (lo, hi) = bounds[j - 1];
            for v in lo..=hi {
                row[j - 1] = v;
                rec(j + 1, i, bounds, row, zero, h, rows, out);
            }
        }
        rec(1, i, &bounds, &mut row, zero, h, rows, out);
    }
    fill_merged(zero, &mut h, &mut rows, 1, m, &mut out);
    out.sort();
    out
}

fn zero_odd(n: usize, m: i64) -> OddIdealArray {
    OddIdealArray {
        n,
        m,
        c: (1..=n).map(|i| vec![0; i]).collect(),
    }
}

fn zero_even(n: usize, m: i64, spin: Spin) -> EvenIdealArray {
    EvenIdealArray {
        n,
        m,
        spin,
        c: (1..=n - 2).map(|i| vec![0; i]).collect(),
        merged_odd: vec![0; (n - 1).div_ceil(2)],
        merged_even: vec![0; (n - 1) / 2],
    }
}

fn assemble<T: OrthArray>(vertices: Vec<T>) -> ColoredLattice<T> {
    let n = vertices.first().map(|v| v.rank()).unwrap_or(0);
    let index: HashMap<T, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), k))
        .collect();
    let mut edges = Vec::new();
    for (src, v) in vertices.iter().enumerate() {
        let r = v.normal_rows();
        for site in v.sites() {
            if let Some(up) = v.bump(site, 1) {
                let dst = index[&up];
                let pos = match site {
                    Site::Normal { i, j } => (i, j as i64),
                    Site::Merged { q } => (r + 1, q as i64),
                };
                edges.push(Edge {
                    src,
                    dst,
                    color: v.site_color(site),
                    pos,
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.src, e.dst, e.color));
    ColoredLattice::from_parts(vertices, edges, n)
}

/// Build the type-B spin lattice of odd orthogonal ideal arrays.
pub fn build_odd(n: usize, m: i64) -> Result<ColoredLattice<OddIdealArray>, OrthogonalError> {
    if n < 2 || m < 0 {
        return Err(OrthogonalError::BadParameters {
            kind: OrthKind::B,
            n,
            m,
        });
    }
    Ok(assemble(enumerate_arrays(&zero_odd(n, m))))
}

/// Build a type-D spin lattice of even orthogonal ideal arrays.
pub fn build_even(
    n: usize,
    m: i64,
    spin: Spin,
) -> Result<ColoredLattice<EvenIdealArray>, OrthogonalError> {
    if n < 4 || m < 0 {
        return Err(OrthogonalError::BadParameters {
            kind: OrthKind::D,
            n,
            m,
        });
    }
    Ok(assemble(enumerate_arrays(&zero_even(n, m, spin))))
}

/// Either spin lattice, for callers that dispatch on the kind at runtime.
#[derive(Debug, Clone)]
pub enum OrthLattice {
    B(ColoredLattice<OddIdealArray>),
    D(ColoredLattice<EvenIdealArray>),
}

pub fn build_orth(
    kind: OrthKind,
    n: usize,
    m: i64,
    spin: Spin,
) -> Result<OrthLattice, OrthogonalError> {
    match kind {
        OrthKind::B => Ok(OrthLattice::B(build_odd(n, m)?)),
        OrthKind::D => Ok(OrthLattice::D(build_even(n, m, spin)?)),
    }
}

/// Which merged parity a GT-component identification varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentChoice {
    /// Vary normal sites and odd merged positions: the color set
    /// `{1..n-1}` on a type-D lattice realizing `omega_{n-1}`.
    J,
    /// Vary normal sites and even merged positions: `{1..n-2, n}`.
    JPrime,
}

/// Identification of a component with a classical GT lattice.
#[derive(Debug, Clone)]
pub struct GtComponentMap {
    pub choice: ComponentChoice,
    /// The frame partition, of length `R + 2`.
    pub frame: Partition,
    /// Component members, as ambient vertex indices.
    pub vertex_ids: Vec<usize>,
    /// Translated GT triangles, parallel to `vertex_ids`.
    pub images: Vec<GtParallelogram>,
}

impl GtComponentMap {
    /// The non-skew shape whose GT lattice the component realizes.
    pub fn frame_shape(&self) -> SkewShape {
        SkewShape::classical(self.frame.clone(), self.frame.len())
            .expect("frames are valid partitions")
    }
}

/// Frame row `g_{N,1..N}` of the GT identification (1-based, index 0 unused).
fn frame_of<T: OrthArray>(x: &T, choice: ComponentChoice) -> Vec<i64> {
    let r = x.normal_rows();
    let nn = r + 2;
    let mut frame = vec![0i64; nn + 1];
    for k in 1..=nn {
        frame[k] = match choice {
            ComponentChoice::J => {
                if k == 1 {
                    0
                } else if k == nn {
                    if nn % 2 == 0 {
                        x.bound()
                    } else {
                        x.merged(nn - 1)
                    }
                } else {
                    x.merged(2 * (k / 2))
                }
            }
            ComponentChoice::JPrime => {
                if k == 1 {
                    x.merged(1)
                } else if k == nn {
                    if nn % 2 == 0 {
                        x.merged(nn - 1)
                    } else {
                        x.bound()
                    }
                } else {
                    x.merged(2 * ((k + 1) / 2) - 1)
                }
            }
        };
    }
    frame
}

/// Translate an array into the GT triangle of its component, as a
/// parallelogram framed by the frame partition (inert positions zero).
pub fn translate<T: OrthArray>(x: &T, choice: ComponentChoice) -> GtParallelogram {
    let r = x.normal_rows();
    let nn = r + 2;
    let frame = frame_of(x, choice);
    let mut cols = vec![vec![0i64; nn]; nn + 1];
    for (i, col) in cols.iter_mut().enumerate() {
        for (d, slot) in col.iter_mut().enumerate() {
            let j = i as i64 - d as i64;
            if j < 1 {
                continue;
            }
            let j = j as usize;
            *slot = if i == 0 {
                0
            } else if i <= r {
                x.normal(i, j)
            } else if i == r + 1 {
                x.merged(j)
            } else {
                frame[j]
            };
        }
    }
    GtParallelogram::from_columns(nn, nn, cols)
        .expect("ideal-array constraints imply the GT inequalities")
}

fn parity_matches(choice: ComponentChoice, q: usize) -> bool {
    match choice {
        ComponentChoice::J => q % 2 == 1,
        ComponentChoice::JPrime => q % 2 == 0,
    }
}

/// Compute the GT component of `x`: members, frame, and triangle images.
pub fn gt_component<T: OrthArray>(
    l: &ColoredLattice<T>,
    x: usize,
    choice: ComponentChoice,
) -> GtComponentMap {
    let r = l.vertex(x).normal_rows();
    let mut seen = vec![false; l.num_vertices()];
    let mut stack = vec![x];
    seen[x] = true;
    let mut vertex_ids = vec![x];
    while let Some(v) = stack.pop() {
        for (_, e) in l.up_edges(v).chain(l.down_edges(v)) {
            let use_edge = if e.pos.0 == r + 1 {
                parity_matches(choice, e.pos.1 as usize)
            } else {
                true
            };
            if !use_edge {
                continue;
            }
            let w = if e.src == v { e.dst } else { e.src };
            if !seen[w] {
                seen[w] = true;
                vertex_ids.push(w);
                stack.push(w);
            }
        }
    }
    vertex_ids.sort_unstable();
    let frame = frame_of(l.vertex(x), choice);
    let images = vertex_ids
        .iter()
        .map(|&v| translate(l.vertex(v), choice))
        .collect();
    GtComponentMap {
        choice,
        frame: Partition::new(frame[1..].iter().rev().copied().collect())
            .expect("frame rows weakly increase"),
        vertex_ids,
        images,
    }
}

/// The exact rational edge product `X·Y` for every edge, computed inside
/// the GT identification governing the edge's site.
pub fn edge_products<T: OrthArray>(
    l: &ColoredLattice<T>,
) -> Result<Vec<BigRational>, OrthogonalError> {
    let mut out = Vec::with_capacity(l.num_edges());
    for e in l.edges() {
        out.push(edge_product(l, e)?);
    }
    Ok(out)
}

fn edge_product<T: OrthArray>(
    l: &ColoredLattice<T>,
    e: &Edge,
) -> Result<BigRational, OrthogonalError> {
    let t = l.vertex(e.dst);
    let r = t.normal_rows();
    let (i, j) = e.pos;
    let choice = if i == r + 1 && !parity_matches(ComponentChoice::J, j as usize) {
        ComponentChoice::JPrime
    } else {
        ComponentChoice::J
    };
    let image = translate(t, choice);
    let tag = coeffs_skew(&image, i, j)?;
    Ok(tag.product())
}

/// Certificate for the product-form DC check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCertificate {
    pub checked_diamonds: usize,
    pub checked_crossings: usize,
}

#[derive(Debug, Clone)]
pub enum ProductViolation {
    NotPositive {
        edge: usize,
    },
    Diamond {
        bottom: usize,
        top: usize,
    },
    Crossing {
        vertex: usize,
        color: usize,
        got: BigRational,
        expected: i64,
    },
}

/// Verify, in product form, everything needed for `X = Y = sqrt(P)` to
/// define a representation diagram: strictly positive products, the product
/// diamond identity on every diamond (upper pair = lower pair), and the
/// crossing sums `sum_in P - sum_out P = m_i` at every vertex.
pub fn dc_verify_products<T: OrthArray>(
    l: &ColoredLattice<T>,
    products: &[BigRational],
) -> Result<ProductCertificate, ProductViolation> {
    for (k, p) in products.iter().enumerate() {
        if !p.is_positive() {
            return Err(ProductViolation::NotPositive { edge: k });
        }
    }
    let mut diamonds = 0usize;
    for v in 0..l.num_vertices() {
        let ups: Vec<(usize, &Edge)> = l.up_edges(v).collect();
        for (ea, a) in &ups {
            for (eb, b) in &ups {
                if a.dst >= b.dst {
                    continue;
                }
                for (esu, su) in l.up_edges(a.dst) {
                    if let Some((etu, _)) = l.up_edges(b.dst).find(|(_, f)| f.dst == su.dst) {
                        diamonds += 1;
                        if &products[esu] * &products[etu] != &products[*ea] * &products[*eb] {
                            return Err(ProductViolation::Diamond {
                                bottom: v,
                                top: su.dst,
                            });
                        }
                    }
                }
            }
        }
    }
    let mut crossings = 0usize;
    for v in 0..l.num_vertices() {
        for color in 1..=l.num_colors() {
            let mut sum = BigRational::zero();
            for (eid, e) in l.down_edges(v) {
                if e.color == color {
                    sum += &products[eid];
                }
            }
            for (eid, e) in l.up_edges(v) {
                if e.color == color {
                    sum -= &products[eid];
                }
            }
            crossings += 1;
            let expected = l.m_value(v, color);
            if sum != BigRational::from_integer(BigInt::from(expected)) {
                return Err(ProductViolation::Crossing {
                    vertex: v,
                    color,
                    got: sum,
                    expected,
                });
            }
        }
    }
    Ok(ProductCertificate {
        checked_diamonds: diamonds,
        checked_crossings: crossings,
    })
}

/// The closed-form rank generating function shared by `L_B(m omega_n)`
/// (with `nb = n`) and the two spin lattices of `D_{nb+1}`:
/// `prod_{i=1}^{nb} prod_{j=i+1}^{nb+1} [m+2nb+2-i-j]_q / [2nb+2-i-j]_q`.
pub fn spin_rgf_formula(nb: usize, m: i64) -> Result<QPoly, OrthogonalError> {
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 1..=nb as i64 {
        for j in (i + 1)..=(nb as i64 + 1) {
            let base = 2 * nb as i64 + 2 - i - j;
            num = num.mul(&QPoly::q_int(m + base));
            den = den.mul(&QPoly::q_int(base));
        }
    }
    num.div_exact(&den)
        .map_err(|_| OrthogonalError::RgfMismatch)
}

/// Compare an enumerated lattice's RGF against the product formula.
pub fn rgf_orth_check(kind: OrthKind, n: usize, m: i64) -> Result<QPoly, OrthogonalError> {
    let (rgf, nb) = match kind {
        OrthKind::B => (build_odd(n, m)?.rgf(), n),
        OrthKind::D => (build_even(n, m, Spin::Lower)?.rgf(), n - 1),
    };
    let formula = spin_rgf_formula(nb, m)?;
    if rgf != formula {
        return Err(OrthogonalError::RgfMismatch);
    }
    Ok(rgf)
}

/// Report of the restriction-property check along the chain
/// `A_1 < A_2 < ... < A_{n-1} < X_n`.
#[derive(Debug, Clone)]
pub struct RestrictionReport {
    /// Component counts per prefix `{1..k}`, `k = 1..n-1`.
    pub prefix_components: Vec<usize>,
    pub all_components_gt: bool,
    /// Pairs of distinct top-prefix component maxima sharing a weight.
    pub weight_collisions: Vec<(usize, usize)>,
}

impl RestrictionReport {
    pub fn passes(&self) -> bool {
        self.all_components_gt && self.weight_collisions.is_empty()
    }
}

/// For each prefix color set `{1..k}` check that every component is a
/// classical GT lattice (by explicit translation onto one), and that the
/// maxima of the top-prefix components carry pairwise distinct weights.
pub fn restriction_check<T: OrthArray>(l: &ColoredLattice<T>) -> RestrictionReport {
    let n = match l.vertices().first() {
        Some(v) => v.rank(),
        None => {
            return RestrictionReport {
                prefix_components: vec![],
                all_components_gt: true,
                weight_collisions: vec![],
            }
        }
    };
    let r = l.vertex(0).normal_rows();
    let mut prefix_components = Vec::new();
    let mut all_gt = true;
    let mut collisions = Vec::new();
    for k in 1..n {
        let colors: Vec<usize> = (1..=k).collect();
        let mut seen = vec![false; l.num_vertices()];
        let mut maxima: Vec<usize> = Vec::new();
        let mut count = 0usize;
        for start in 0..l.num_vertices() {
            if seen[start] {
                continue;
            }
            count += 1;
            let comp = l.comp(&colors, start);
            for &v in &comp.vertex_ids {
                seen[v] = true;
            }
            if !component_is_gt(l, &comp.vertex_ids, k, r) {
                all_gt = false;
            }
            let &top = comp
                .vertex_ids
                .iter()
                .max_by_key(|&&v| l.rank(v))
                .expect("components are nonempty");
            maxima.push(top);
        }
        prefix_components.push(count);
        if k == n - 1 {
            for a in 0..maxima.len() {
                for b in (a + 1)..maxima.len() {
                    if l.weight(maxima[a]) == l.weight(maxima[b]) {
                        collisions.push((maxima[a], maxima[b]));
                    }
                }
            }
        }
    }
    RestrictionReport {
        prefix_components,
        all_components_gt: all_gt,
        weight_collisions: collisions,
    }
}

/// Check one prefix component against the classical GT lattice it should
/// realize, by translating every member and comparing vertex sets.
fn component_is_gt<T: OrthArray>(
    l: &ColoredLattice<T>,
    members: &[usize],
    k: usize,
    r: usize,
) -> bool {
    let x = l.vertex(members[0]);
    // frame from the first fixed row, shifted so its smallest entry is zero
    let (frame_raw, offset): (Vec<i64>, i64) = if k == r + 1 {
        let f = frame_of(x, ComponentChoice::J);
        (f[1..].to_vec(), 0)
    } else if k == r {
        let f: Vec<i64> = (1..=r + 1).map(|q| x.merged(q)).collect();
        let off = f[0];
        (f, off)
    } else {
        let f: Vec<i64> = (1..=k + 1).map(|j| x.normal(k + 1, j)).collect();
        let off = f[0];
        (f, off)
    };
    let parts: Vec<i64> = frame_raw.iter().rev().map(|&v| v - offset).collect();
    let frame = match Partition::new(parts) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let nn = frame.len();
    let shape = match SkewShape::classical(frame, nn) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let expected = crate::lattice::build(&shape);
    if expected.num_vertices() != members.len() {
        return false;
    }
    for &v in members {
        let a = l.vertex(v);
        let mut cols = vec![vec![0i64; nn]; nn + 1];
        for (i, col) in cols.iter_mut().enumerate().skip(1) {
            for (d, slot) in col.iter_mut().enumerate() {
                let j = i as i64 - d as i64;
                if j < 1 {
                    continue;
                }
                let j = j as usize;
                *slot = if i == nn {
                    shape.outer().part(nn + 1 - j)
                } else if i <= r {
                    a.normal(i, j) - offset
                } else {
                    a.merged(j) - offset
                };
            }
        }
        match GtParallelogram::from_columns(nn, nn, cols) {
            Ok(g) => {
                if expected.index_of(&g).is_none() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// Floating-point sanity check of the square-root coefficients: assemble
/// `X_i` with entries `sqrt(P)` and `Y_i = X_i^T`, and return the largest
/// absolute residual of `[X_i, Y_j] - delta_ij H_i` over all color pairs.
/// Excluded from certification; the exact checks live in
/// [`dc_verify_products`].
pub fn float_commutator_residual<T: OrthArray>(
    l: &ColoredLattice<T>,
    products: &[BigRational],
) -> f64 {
    let nv = l.num_vertices();
    let nc = l.num_colors();
    let to_f = |r: &BigRational| -> f64 {
        let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n / d
    };
    let mut x: Vec<HashMap<(usize, usize), f64>> = vec![HashMap::new(); nc];
    for (eid, e) in l.edges().iter().enumerate() {
        let q = to_f(&products[eid]).sqrt();
        x[e.color - 1].insert((e.dst, e.src), q);
    }
    let mut worst: f64 = 0.0;
    for i in 0..nc {
        for j in 0..nc {
            // [X_i, Y_j] with Y_j = X_j^T
            let mut comm: HashMap<(usize, usize), f64> = HashMap::new();
            for (&(a, b), &u) in &x[i] {
                for (&(c, d), &w) in &x[j] {
                    // X_i[a,b] Y_j[b,?]: Y_j[d',c'] = X_j[c',d']
                    if b == d {
                        *comm.entry((a, c)).or_insert(0.0) += u * w;
                    }
                    if c == a {
                        *comm.entry((d, b)).or_insert(0.0) -= w * u;
                    }
                }
            }
            if i == j {
                for v in 0..nv {
                    *comm.entry((v, v)).or_insert(0.0) -= l.m_value(v, i + 1) as f64;
                }
            }
            for (_, val) in comm {
                worst = worst.max(val.abs());
            }
        }
    }
    worst
}
