//! JSON and DOT serialization of lattices, tagged lattices, certificates,
//! and decompositions, plus the JSON import used by file-based verification.
//!
//! Every JSON document carries a schema version field `"v": 1`. Rationals
//! are strings `"p/q"` (or `"p"` when the denominator is one). A
//! parallelogram serializes as its columns, each listed from `j = i` down
//! to `j = i-(m-1)`.

use crate::lattice::{ColoredLattice, Edge};
use crate::orthogonal::OrthArray;
use crate::repdiag::{DcCertificate, EdgeTag, TaggedLattice};
use crate::schur::SchurDecomposition;
use crate::shapes::SkewShape;
use crate::tableaux::GtParallelogram;
use crate::weights::Weight;
use num::rational::BigRational;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::hash::Hash;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document does not match the lattice schema: {0}")]
    Schema(String),
    #[error("array data is malformed: {0}")]
    Tableaux(#[from] crate::tableaux::TableauxError),
}

fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

fn weight_json(w: &Weight) -> Value {
    json!(w.0)
}

/// JSON document for a skew-tabular lattice, with optional edge tags.
pub fn skew_lattice_json(
    shape: &SkewShape,
    l: &ColoredLattice<GtParallelogram>,
    tags: Option<&[EdgeTag]>,
) -> Value {
    let vertices: Vec<Value> = (0..l.num_vertices())
        .map(|v| {
            json!({
                "id": v,
                "g": l.vertex(v).columns(),
                "wt": weight_json(&l.weight(v)),
                "rank": l.rank(v),
            })
        })
        .collect();
    let edges: Vec<Value> = l
        .edges()
        .iter()
        .enumerate()
        .map(|(eid, e)| {
            let mut obj = json!({
                "src": e.src,
                "dst": e.dst,
                "color": e.color,
            });
            if let Some(tags) = tags {
                obj["X"] = json!(rational_str(&tags[eid].x));
                obj["Y"] = json!(rational_str(&tags[eid].y));
            }
            obj
        })
        .collect();
    json!({
        "v": 1,
        "kind": "skew",
        "shape": shape.to_string(),
        "n": shape.n(),
        "m": shape.m(),
        "vertices": vertices,
        "edges": edges,
    })
}

/// JSON document for an orthogonal spin lattice, with optional per-edge
/// products.
pub fn orth_lattice_json<T: OrthArray>(
    spec: &str,
    l: &ColoredLattice<T>,
    payload: impl Fn(&T) -> Value,
    products: Option<&[BigRational]>,
) -> Value {
    let vertices: Vec<Value> = (0..l.num_vertices())
        .map(|v| {
            json!({
                "id": v,
                "c": payload(l.vertex(v)),
                "wt": weight_json(&l.weight(v)),
                "rank": l.rank(v),
            })
        })
        .collect();
    let edges: Vec<Value> = l
        .edges()
        .iter()
        .enumerate()
        .map(|(eid, e)| {
            let mut obj = json!({
                "src": e.src,
                "dst": e.dst,
                "color": e.color,
                "pos": [e.pos.0, e.pos.1],
            });
            if let Some(products) = products {
                obj["P"] = json!(rational_str(&products[eid]));
            }
            obj
        })
        .collect();
    json!({
        "v": 1,
        "kind": "orth",
        "spec": spec,
        "vertices": vertices,
        "edges": edges,
    })
}

pub fn certificate_json(cert: &DcCertificate) -> Value {
    json!({
        "v": 1,
        "status": "certificate",
        "checked_diamonds": cert.checked_diamonds,
        "checked_crossings": cert.checked_crossings,
    })
}

pub fn decomposition_json(d: &SchurDecomposition, dims: &[(Weight, usize, i64)]) -> Value {
    let constituents: Vec<Value> = dims
        .iter()
        .map(|(lam, mult, dim)| {
            json!({
                "lambda": weight_json(lam),
                "multiplicity": mult,
                "dim": dim,
            })
        })
        .collect();
    json!({
        "v": 1,
        "kind": "decomposition",
        "shape": d.shape.to_string(),
        "nu": weight_json(&d.nu),
        "constituents": constituents,
    })
}

/// DOT export: one node per vertex labeled by rank and weight, edges
/// labeled `c<color>` with coefficients appended when available.
pub fn to_dot<V: Clone + Eq + Hash>(
    l: &ColoredLattice<V>,
    edge_extra: impl Fn(usize) -> Option<String>,
) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for v in 0..l.num_vertices() {
        let _ = writeln!(
            out,
            "  {v} [label=\"{}:r{} wt{}\"];",
            v,
            l.rank(v),
            l.weight(v)
        );
    }
    for (eid, e) in l.edges().iter().enumerate() {
        let mut label = format!("c{}", e.color);
        if let Some(extra) = edge_extra(eid) {
            let _ = write!(label, " {extra}");
        }
        let _ = writeln!(out, "  {} -> {} [label=\"{label}\"];", e.src, e.dst);
    }
    out.push_str("}\n");
    out
}

/// Re-read a skew-lattice JSON document (as written by
/// [`skew_lattice_json`] with tags) into a tagged lattice.
pub fn import_tagged(doc: &Value) -> Result<(SkewShape, TaggedLattice), ExportError> {
    let schema = |msg: &str| ExportError::Schema(msg.to_string());
    if doc.get("v").and_then(Value::as_u64) != Some(1) {
        return Err(schema("missing or unsupported version field"));
    }
    if doc.get("kind").and_then(Value::as_str) != Some("skew") {
        return Err(schema("not a skew lattice document"));
    }
    let shape: SkewShape = doc
        .get("shape")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("missing shape"))?
        .parse()
        .map_err(|e| ExportError::Schema(format!("bad shape: {e}")))?;
    let (n, m) = (shape.n(), shape.m());
    let vertices_json = doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("missing vertices"))?;
    let mut vertices = Vec::with_capacity(vertices_json.len());
    for v in vertices_json {
        let cols: Vec<Vec<i64>> = serde_json::from_value(
            v.get("g").cloned().ok_or_else(|| schema("vertex missing g"))?,
        )?;
        vertices.push(GtParallelogram::from_columns(n, m, cols)?);
    }
    let edges_json = doc
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("missing edges"))?;
    let mut edges = Vec::with_capacity(edges_json.len());
    let mut tags = Vec::with_capacity(edges_json.len());
    for e in edges_json {
        let src = e.get("src").and_then(Value::as_u64).ok_or_else(|| schema("edge missing src"))?
            as usize;
        let dst = e.get("dst").and_then(Value::as_u64).ok_or_else(|| schema("edge missing dst"))?
            as usize;
        let color = e
            .get("color")
            .and_then(Value::as_u64)
            .ok_or_else(|| schema("edge missing color"))? as usize;
        if src >= vertices.len() || dst >= vertices.len() {
            return Err(schema("edge endpoint out of range"));
        }
        let pos = changed_position(&vertices[src], &vertices[dst])
            .ok_or_else(|| schema("edge endpoints do not differ by a unit bump"))?;
        let parse_rat = |key: &str| -> Result<BigRational, ExportError> {
            let s = e
                .get(key)
                .and_then(Value::as_str)
                .ok_or_else(|| ExportError::Schema(format!("edge missing {key}")))?;
            BigRational::from_str(s)
                .map_err(|_| ExportError::Schema(format!("bad rational {s:?}")))
        };
        tags.push(EdgeTag {
            x: parse_rat("X")?,
            y: parse_rat("Y")?,
        });
        edges.push(Edge {
            src,
            dst,
            color,
            pos,
        });
    }
    let lattice = ColoredLattice::from_parts(vertices, edges, n - 1);
    Ok((shape, TaggedLattice { lattice, tags }))
}

fn changed_position(s: &GtParallelogram, t: &GtParallelogram) -> Option<(usize, i64)> {
    let mut found = None;
    for i in 0..=s.n() as i64 {
        for d in 0..s.m() as i64 {
            let j = i - d;
            let (a, b) = (s.g(i, j)?, t.g(i, j)?);
            if a == b {
                continue;
            }
            if b - a != 1 || found.is_some() {
                return None;
            }
            found = Some((i as usize, j));
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build;
    use crate::repdiag::{dc_verify, tag_skew};
    use crate::shapes::Partition;
    use crate::weights::{root_data, Kind};

    fn shape(p: &[i64], q: &[i64], n: usize) -> SkewShape {
        SkewShape::new(
            Partition::new(p.to_vec()).unwrap(),
            Partition::new(q.to_vec()).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn tagged_round_trip() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let tl = tag_skew(build(&s)).unwrap();
        let doc = skew_lattice_json(&s, &tl.lattice, Some(&tl.tags));
        let (s2, tl2) = import_tagged(&doc).unwrap();
        assert_eq!(s, s2);
        assert_eq!(tl.lattice.num_vertices(), tl2.lattice.num_vertices());
        assert_eq!(tl.tags, tl2.tags);
        let rd = root_data(Kind::A, 2).unwrap();
        dc_verify(&tl2, &rd).unwrap();
    }

    #[test]
    fn mutated_document_fails_verification() {
        let s = shape(&[3, 3], &[2, 0], 3);
        let tl = tag_skew(build(&s)).unwrap();
        let mut doc = skew_lattice_json(&s, &tl.lattice, Some(&tl.tags));
        doc["edges"][0]["Y"] = serde_json::json!("7/2");
        let (_, tl2) = import_tagged(&doc).unwrap();
        let rd = root_data(Kind::A, 2).unwrap();
        assert!(dc_verify(&tl2, &rd).is_err());
    }

    #[test]
    fn dot_output_mentions_colors() {
        let s = shape(&[1], &[0], 2);
        let l = build(&s);
        let dot = to_dot(&l, |_| None);
        assert!(dot.contains("c1"));
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn version_field_is_required() {
        let doc = serde_json::json!({"kind": "skew"});
        assert!(import_tagged(&doc).is_err());
    }
}
