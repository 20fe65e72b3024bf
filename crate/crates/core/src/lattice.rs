//! Diamond-colored poset core: skew-tabular lattice construction, structure
//! verification, components, ranks, weights, generating functions, and the
//! recolor/reverse dualities.
//!
//! Vertex identity is the parallelogram (or ideal-array) content; vertex
//! order is tableau enumeration order, so all exports are deterministic.

use crate::shapes::SkewShape;
use crate::tableaux::{enumerate_tableaux, to_parallelogram, GtParallelogram};
use crate::weights::{LaurentPoly, QPoly, RootData, Weight};
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

/// A directed cover edge `src -> dst` carrying a color (1-based) and the
/// array position whose entry increased along the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub color: usize,
    pub pos: (usize, i64),
}

/// An edge-colored ranked poset given by its cover digraph, with per-vertex
/// ranks and `m_i` values cached at construction.
#[derive(Debug, Clone)]
pub struct ColoredLattice<V> {
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    edges: Vec<Edge>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    num_colors: usize,
    ranks: Vec<i64>,
    m_values: Vec<Vec<i64>>,
}

/// Entrywise meet/join on vertex payloads, used by the distributivity check.
pub trait Componentwise {
    fn cw_min(&self, other: &Self) -> Self;
    fn cw_max(&self, other: &Self) -> Self;
}

impl Componentwise for GtParallelogram {
    fn cw_min(&self, other: &Self) -> Self {
        self.zip_entries(other, i64::min)
    }
    fn cw_max(&self, other: &Self) -> Self {
        self.zip_entries(other, i64::max)
    }
}

impl GtParallelogram {
    fn zip_entries(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let cols = self
            .columns()
            .iter()
            .zip(other.columns())
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
            .collect();
        GtParallelogram::from_columns(self.n(), self.m(), cols)
            .expect("entrywise min/max of parallelograms is a valid array")
    }
}

/// Vertex set and incident edges of a `J`-component, as indices into the
/// ambient lattice.
#[derive(Debug, Clone)]
pub struct SubLattice {
    pub vertex_ids: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

/// Witness that a single-color component is a product of chains: coordinate
/// `d` of the component ranges over `bounds[d].0 ..= bounds[d].1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProductWindow {
    pub color: usize,
    pub bounds: Vec<(i64, i64)>,
}

impl<V: Clone + Eq + Hash> ColoredLattice<V> {
    /// Assemble a lattice from parts; ranks are longest paths from the
    /// minimal elements and `m_i` values come from color-component spans.
    pub fn from_parts(vertices: Vec<V>, edges: Vec<Edge>, num_colors: usize) -> Self {
        let index: HashMap<V, usize> = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        assert_eq!(index.len(), vertices.len(), "duplicate vertices");
        let nv = vertices.len();
        let mut up = vec![Vec::new(); nv];
        let mut down = vec![Vec::new(); nv];
        for (eid, e) in edges.iter().enumerate() {
            up[e.src].push(eid);
            down[e.dst].push(eid);
        }
        let ranks = longest_path_ranks(nv, &edges, &up, &down);
        let mut lattice = ColoredLattice {
            vertices,
            index,
            edges,
            up,
            down,
            num_colors,
            ranks,
            m_values: Vec::new(),
        };
        lattice.m_values = lattice.compute_m_values();
        lattice
    }

    fn compute_m_values(&self) -> Vec<Vec<i64>> {
        let nv = self.vertices.len();
        let mut m = vec![vec![0i64; self.num_colors]; nv];
        for color in 1..=self.num_colors {
            let mut seen = vec![false; nv];
            for start in 0..nv {
                if seen[start] {
                    continue;
                }
                let comp = self.color_component(start, &[color], &mut seen);
                let lo = comp.iter().map(|&v| self.ranks[v]).min().unwrap();
                let hi = comp.iter().map(|&v| self.ranks[v]).max().unwrap();
                for &v in &comp {
                    let rho = self.ranks[v] - lo;
                    let delta = hi - self.ranks[v];
                    m[v][color - 1] = rho - delta;
                }
            }
        }
        m
    }

    fn color_component(&self, start: usize, colors: &[usize], seen: &mut [bool]) -> Vec<usize> {
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &eid in self.up[v].iter().chain(&self.down[v]) {
                let e = &self.edges[eid];
                if !colors.contains(&e.color) {
                    continue;
                }
                let w = if e.src == v { e.dst } else { e.src };
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn vertex(&self, v: usize) -> &V {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn up_edges(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> {
        self.up[v].iter().map(move |&eid| (eid, &self.edges[eid]))
    }

    pub fn down_edges(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> {
        self.down[v].iter().map(move |&eid| (eid, &self.edges[eid]))
    }

    pub fn rank(&self, v: usize) -> i64 {
        self.ranks[v]
    }

    pub fn length(&self) -> i64 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// `m_i(x)`: rank minus depth of `x` within its color-`i` component.
    pub fn m_value(&self, v: usize, color: usize) -> i64 {
        self.m_values[v][color - 1]
    }

    /// `wt(x) = sum_i m_i(x) omega_i`.
    pub fn weight(&self, v: usize) -> Weight {
        Weight(self.m_values[v].clone())
    }

    /// Unique maximal element, if unique.
    pub fn max_vertex(&self) -> Option<usize> {
        let maxes: Vec<usize> = (0..self.num_vertices())
            .filter(|&v| self.up[v].is_empty())
            .collect();
        (maxes.len() == 1).then(|| maxes[0])
    }

    pub fn min_vertex(&self) -> Option<usize> {
        let mins: Vec<usize> = (0..self.num_vertices())
            .filter(|&v| self.down[v].is_empty())
            .collect();
        (mins.len() == 1).then(|| mins[0])
    }

    /// The `J`-component of `x`: all vertices reachable through edges whose
    /// colors lie in `colors`, together with those edges.
    pub fn comp(&self, colors: &[usize], x: usize) -> SubLattice {
        let mut seen = vec![false; self.num_vertices()];
        let mut vertex_ids = self.color_component(x, colors, &mut seen);
        vertex_ids.sort_unstable();
        let inside: HashSet<usize> = vertex_ids.iter().copied().collect();
        let edge_ids = (0..self.edges.len())
            .filter(|&eid| {
                let e = &self.edges[eid];
                colors.contains(&e.color) && inside.contains(&e.src) && inside.contains(&e.dst)
            })
            .collect();
        SubLattice {
            vertex_ids,
            edge_ids,
        }
    }

    /// Weight generating function `sum_x Z^{wt(x)}`.
    pub fn wgf(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for v in 0..self.num_vertices() {
            out.add_term(&self.weight(v), 1);
        }
        out
    }

    /// Rank generating function `sum_x q^{rho(x)}`.
    pub fn rgf(&self) -> QPoly {
        let mut coeffs = vec![0i64; self.length() as usize + 1];
        for v in 0..self.num_vertices() {
            coeffs[self.ranks[v] as usize] += 1;
        }
        QPoly::new(coeffs)
    }

    /// `true` iff in every cover diamond the opposite edges share a color.
    pub fn verify_diamond_colored(&self) -> bool {
        for r in 0..self.num_vertices() {
            let ups: Vec<&Edge> = self.up[r].iter().map(|&e| &self.edges[e]).collect();
            for a in 0..ups.len() {
                for b in 0..ups.len() {
                    if a == b {
                        continue;
                    }
                    let (s, t) = (ups[a].dst, ups[b].dst);
                    if s == t {
                        continue;
                    }
                    for &eid in &self.up[s] {
                        let su = &self.edges[eid];
                        if let Some(tu) = self.up[t]
                            .iter()
                            .map(|&e| &self.edges[e])
                            .find(|tu| tu.dst == su.dst)
                        {
                            if su.color != ups[b].color || tu.color != ups[a].color {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// `true` iff the vertex set is closed under entrywise meet and join.
    pub fn verify_join_meet_closed(&self) -> bool
    where
        V: Componentwise,
    {
        for a in 0..self.num_vertices() {
            for b in (a + 1)..self.num_vertices() {
                let lo = self.vertices[a].cw_min(&self.vertices[b]);
                let hi = self.vertices[a].cw_max(&self.vertices[b]);
                if !self.index.contains_key(&lo) || !self.index.contains_key(&hi) {
                    return false;
                }
            }
        }
        true
    }

    /// `true` iff every color-`i` edge shifts the weight by `alpha_i`, i.e.
    /// `m_j(dst) - m_j(src) = a_{ij}` for all `j`.
    pub fn is_structured(&self, rd: &RootData) -> bool {
        if self.num_colors > rd.rank {
            return false;
        }
        self.edges.iter().all(|e| {
            (1..=self.num_colors).all(|j| {
                self.m_values[e.dst][j - 1] - self.m_values[e.src][j - 1]
                    == rd.cartan[e.color - 1][j - 1]
            })
        })
    }
}

fn longest_path_ranks(nv: usize, edges: &[Edge], up: &[Vec<usize>], down: &[Vec<usize>]) -> Vec<i64> {
    let mut indeg: Vec<usize> = down.iter().map(|d| d.len()).collect();
    let mut ranks = vec![0i64; nv];
    let mut queue: VecDeque<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0usize;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &eid in &up[v] {
            let e = &edges[eid];
            ranks[e.dst] = ranks[e.dst].max(ranks[v] + 1);
            indeg[e.dst] -= 1;
            if indeg[e.dst] == 0 {
                queue.push_back(e.dst);
            }
        }
    }
    assert_eq!(seen, nv, "cover digraph has a cycle");
    ranks
}

/// Build the skew-tabular lattice of a shape: vertices are the tableaux in
/// enumeration order (as parallelograms), and `s -> t` with color `i`
/// exactly when one position `(i,j)` satisfies `g_{i,j}(s) + 1 = g_{i,j}(t)`.
pub fn build(s: &SkewShape) -> ColoredLattice<GtParallelogram> {
    let tableaux = enumerate_tableaux(s);
    let cells = s.cells();
    let idx: HashMap<(usize, i64), usize> = cells
        .iter()
        .enumerate()
        .map(|(k, &(r, c))| ((r, c as i64), k))
        .collect();
    let vertices: Vec<GtParallelogram> = tableaux.iter().map(to_parallelogram).collect();
    let vindex: HashMap<&GtParallelogram, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v, k))
        .collect();
    let mut edges = Vec::new();
    for (src, t) in tableaux.iter().enumerate() {
        for (k, &(r, c)) in cells.iter().enumerate() {
            let e = t.entries()[k];
            if e < 2 {
                continue;
            }
            let left_ok = idx
                .get(&(r, c as i64 - 1))
                .map_or(true, |&l| t.entries()[l] <= e - 1);
            let up_ok = idx
                .get(&(r - 1, c as i64))
                .map_or(true, |&u| t.entries()[u] <= e - 2);
            if !(left_ok && up_ok) {
                continue;
            }
            let mut target = to_parallelogram(t);
            // decrementing the tableau entry adds the cell to t^(e-1)
            let color = (e - 1) as usize;
            let j = e - r as i64;
            target = target.with_bumped(color, j, 1);
            let dst = vindex[&target];
            edges.push(Edge {
                src,
                dst,
                color,
                pos: (color, j),
            });
        }
    }
    edges.sort_by_key(|e| (e.src, e.dst, e.color));
    let n = s.n();
    ColoredLattice::from_parts(vertices, edges, n - 1)
}

/// Window of the chain-product isomorphism for `comp_k(x)`.
pub fn chain_window(x: &GtParallelogram, k: usize) -> ChainProductWindow {
    let m = x.m();
    let ki = k as i64;
    let mut bounds = Vec::with_capacity(m);
    for d in 0..m as i64 {
        let b = [x.g(ki - 1, ki - 1 - d), x.g(ki + 1, ki - d)]
            .into_iter()
            .flatten()
            .max()
            .unwrap();
        let t = [x.g(ki - 1, ki - d), x.g(ki + 1, ki + 1 - d)]
            .into_iter()
            .flatten()
            .min()
            .unwrap();
        bounds.push((b, t));
    }
    ChainProductWindow { color: k, bounds }
}

/// The four Klein-group operations on edge-colored lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Identity,
    /// Recolor `i -> k+1-i` where `k` is the number of colors.
    Recolor,
    /// Reverse all edges (poset dual); coefficient roles swap when tagged.
    Reverse,
    /// Recolor and reverse.
    RecolorReverse,
}

impl From<crate::shapes::ShapeOp> for LatticeOp {
    fn from(op: crate::shapes::ShapeOp) -> Self {
        match op {
            crate::shapes::ShapeOp::Identity => LatticeOp::Identity,
            crate::shapes::ShapeOp::ColumnComplement => LatticeOp::Recolor,
            crate::shapes::ShapeOp::Dual => LatticeOp::Reverse,
            crate::shapes::ShapeOp::Rotate => LatticeOp::RecolorReverse,
        }
    }
}

/// Recolor edges through an arbitrary color map (not necessarily
/// injective), e.g. to merge the two spin colors of a type-D lattice.
pub fn recolor<V: Clone + Eq + Hash>(
    l: &ColoredLattice<V>,
    new_num_colors: usize,
    f: impl Fn(usize) -> usize,
) -> ColoredLattice<V> {
    let edges = l
        .edges
        .iter()
        .map(|e| Edge {
            color: f(e.color),
            ..e.clone()
        })
        .collect();
    ColoredLattice::from_parts(l.vertices.clone(), edges, new_num_colors)
}

pub fn lattice_op<V: Clone + Eq + Hash>(
    l: &ColoredLattice<V>,
    op: LatticeOp,
) -> ColoredLattice<V> {
    let k = l.num_colors;
    let recolor = |c: usize| match op {
        LatticeOp::Recolor | LatticeOp::RecolorReverse => k + 1 - c,
        _ => c,
    };
    let reverse = matches!(op, LatticeOp::Reverse | LatticeOp::RecolorReverse);
    let edges = l
        .edges
        .iter()
        .map(|e| Edge {
            src: if reverse { e.dst } else { e.src },
            dst: if reverse { e.src } else { e.dst },
            color: recolor(e.color),
            pos: e.pos,
        })
        .collect();
    ColoredLattice::from_parts(l.vertices.clone(), edges, k)
}

/// Outcome of the edge-color isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[v]` is the image of vertex `v` of the first lattice.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
    /// Search budget exhausted before a decision.
    BudgetExhausted,
}

/// Exact backtracking edge-color digraph isomorphism with iterated signature
/// refinement, intended for desk-scale lattices. `budget` bounds the number
/// of search-tree nodes.
pub fn check_iso<V: Clone + Eq + Hash, W: Clone + Eq + Hash>(
    a: &ColoredLattice<V>,
    b: &ColoredLattice<W>,
    budget: usize,
) -> IsoOutcome {
    if a.num_vertices() != b.num_vertices()
        || a.num_edges() != b.num_edges()
        || a.num_colors != b.num_colors
    {
        return IsoOutcome::NotIsomorphic;
    }
    let nv = a.num_vertices();
    if nv == 0 {
        return IsoOutcome::Isomorphic(vec![]);
    }
    let classes = match refine_classes(a, b) {
        Some(c) => c,
        None => return IsoOutcome::NotIsomorphic,
    };
    let (class_a, class_b) = classes;

    // order vertices of `a` by breadth-first search from the top
    let start = a.max_vertex().unwrap_or(0);
    let mut order = Vec::with_capacity(nv);
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for (_, e) in a.up_edges(v).chain(a.down_edges(v)) {
            let w = if e.src == v { e.dst } else { e.src };
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for v in 0..nv {
        if !seen[v] {
            order.push(v);
        }
    }

    let mut map = vec![usize::MAX; nv];
    let mut used = vec![false; nv];
    let mut nodes = 0usize;
    fn assign_ok<V: Clone + Eq + Hash, W: Clone + Eq + Hash>(
        a: &ColoredLattice<V>,
        b: &ColoredLattice<W>,
        map: &[usize],
        v: usize,
        image: usize,
    ) -> bool {
        for (_, e) in a.up_edges(v) {
            let w = e.dst;
            if map[w] != usize::MAX
                && !b
                    .up_edges(image)
                    .any(|(_, f)| f.dst == map[w] && f.color == e.color)
            {
                return false;
            }
        }
        for (_, e) in a.down_edges(v) {
            let w = e.src;
            if map[w] != usize::MAX
                && !b
                    .down_edges(image)
                    .any(|(_, f)| f.src == map[w] && f.color == e.color)
            {
                return false;
            }
        }
        true
    }
    fn rec<V: Clone + Eq + Hash, W: Clone + Eq + Hash>(
        a: &ColoredLattice<V>,
        b: &ColoredLattice<W>,
        order: &[usize],
        class_a: &[u64],
        class_b: &[u64],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        nodes: &mut usize,
        budget: usize,
    ) -> Option<bool> {
        if depth == order.len() {
            return Some(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let v = order[depth];
        for image in 0..b.num_vertices() {
            if used[image] || class_b[image] != class_a[v] {
                continue;
            }
            if !assign_ok(a, b, map, v, image) {
                continue;
            }
            map[v] = image;
            used[image] = true;
            match rec(a, b, order, class_a, class_b, map, used, depth + 1, nodes, budget) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            map[v] = usize::MAX;
            used[image] = false;
        }
        Some(false)
    }
    match rec(
        a, b, &order, &class_a, &class_b, &mut map, &mut used, 0, &mut nodes, budget,
    ) {
        Some(true) => IsoOutcome::Isomorphic(map),
        Some(false) => IsoOutcome::NotIsomorphic,
        None => IsoOutcome::BudgetExhausted,
    }
}

/// Iterated color refinement over both lattices jointly. Returns per-vertex
/// class ids, or `None` if the class histograms ever disagree.
fn refine_classes<V: Clone + Eq + Hash, W: Clone + Eq + Hash>(
    a: &ColoredLattice<V>,
    b: &ColoredLattice<W>,
) -> Option<(Vec<u64>, Vec<u64>)> {
    let nv = a.num_vertices();
    let initial = |l: &ColoredLattice<V>, v: usize| -> Vec<i64> {
        let mut sig = vec![l.rank(v)];
        for c in 1..=l.num_colors {
            sig.push(l.up_edges(v).filter(|(_, e)| e.color == c).count() as i64);
            sig.push(l.down_edges(v).filter(|(_, e)| e.color == c).count() as i64);
        }
        sig
    };
    let initial_b = |l: &ColoredLattice<W>, v: usize| -> Vec<i64> {
        let mut sig = vec![l.rank(v)];
        for c in 1..=l.num_colors {
            sig.push(l.up_edges(v).filter(|(_, e)| e.color == c).count() as i64);
            sig.push(l.down_edges(v).filter(|(_, e)| e.color == c).count() as i64);
        }
        sig
    };
    let mut dict: HashMap<Vec<i64>, u64> = HashMap::new();
    let intern = |sig: Vec<i64>, dict: &mut HashMap<Vec<i64>, u64>| -> u64 {
        let next = dict.len() as u64;
        *dict.entry(sig).or_insert(next)
    };
    let mut ca: Vec<u64> = (0..nv)
        .map(|v| intern(initial(a, v), &mut dict))
        .collect();
    let mut cb: Vec<u64> = (0..nv)
        .map(|v| intern(initial_b(b, v), &mut dict))
        .collect();
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let mut dict2: HashMap<Vec<i64>, u64> = HashMap::new();
        let step_a: Vec<Vec<i64>> = (0..nv)
            .map(|v| {
                let mut sig = vec![ca[v] as i64];
                let mut nbr: Vec<i64> = a
                    .up_edges(v)
                    .map(|(_, e)| (e.color as i64) << 32 | ca[e.dst] as i64)
                    .chain(
                        a.down_edges(v)
                            .map(|(_, e)| -((e.color as i64) << 32 | ca[e.src] as i64) - 1),
                    )
                    .collect();
                nbr.sort_unstable();
                sig.extend(nbr);
                sig
            })
            .collect();
        let step_b: Vec<Vec<i64>> = (0..nv)
            .map(|v| {
                let mut sig = vec![cb[v] as i64];
                let mut nbr: Vec<i64> = b
                    .up_edges(v)
                    .map(|(_, e)| (e.color as i64) << 32 | cb[e.dst] as i64)
                    .chain(
                        b.down_edges(v)
                            .map(|(_, e)| -((e.color as i64) << 32 | cb[e.src] as i64) - 1),
                    )
                    .collect();
                nbr.sort_unstable();
                sig.extend(nbr);
                sig
            })
            .collect();
        let ca2: Vec<u64> = step_a
            .into_iter()
            .map(|s| intern2(s, &mut dict2))
            .collect();
        let cb2: Vec<u64> = step_b
            .into_iter()
            .map(|s| intern2(s, &mut dict2))
            .collect();
        let stable = count_classes(&ca2) == count_classes(&ca);
        ca = ca2;
        cb = cb2;
        if stable {
            if histogram(&ca) != histogram(&cb) {
                return None;
            }
            return Some((ca, cb));
        }
    }

    fn intern2(sig: Vec<i64>, dict: &mut HashMap<Vec<i64>, u64>) -> u64 {
        let next = dict.len() as u64;
        *dict.entry(sig).or_insert(next)
    }
    fn histogram(classes: &[u64]) -> HashMap<u64, usize> {
        let mut h = HashMap::new();
        for &c in classes {
            *h.entry(c).or_insert(0) += 1;
        }
        h
    }
    fn count_classes(classes: &[u64]) -> usize {
        classes.iter().collect::<HashSet<_>>().len()
    }
}
