//! `skewtab`: build, verify, decompose, export, and sweep skew-tabular and
//! orthogonal spin-node lattices.
//!
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 parse error, 3 constraint violation.

mod spec;
mod sweep;

use clap::{Parser, Subcommand};
use serde_json::json;
use skewtab_core::export::{
    certificate_json, decomposition_json, import_tagged, orth_lattice_json, skew_lattice_json,
    to_dot,
};
use skewtab_core::lattice::build;
use skewtab_core::orthogonal::{
    dc_verify_products, edge_products, float_commutator_residual, restriction_check, OrthLattice,
};
use skewtab_core::repdiag::{dc_verify, generator_matrices, tag_skew, verify_lie_relations};
use skewtab_core::schur::zs_decompose;
use skewtab_core::weights::{root_data, weyl_dim, Kind, Weight};
use spec::{parse_nu, BuildSpec, CliError, EXIT_CONSTRAINT, EXIT_PARSE, EXIT_VERIFY};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skewtab", version, about = "skew-tabular lattice toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a lattice and print a summary (or JSON/DOT with the flags).
    Build {
        /// Shape "P/Q;n" (e.g. "3,3,1/2,0,0;3") or orthogonal spec
        /// "B:n,m" / "D:n,m[,spin]" with spin "n-1" or "n".
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the DC relations of a lattice (or of a tagged JSON export).
    Verify {
        /// Shape, orthogonal spec, or path to a JSON lattice document.
        spec: String,
        /// Vertex cap for the generator-matrix (Serre) stage.
        #[arg(long, default_value_t = 2000)]
        max_vertices: usize,
        /// Also report the floating-point commutator residual of the
        /// square-root coefficients (orthogonal lattices only).
        #[arg(long)]
        float_sanity: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand the product chi_nu * theta into bialternants.
    Decompose {
        /// Type-A shape "P/Q;n".
        shape: String,
        /// Dominant weight "a,b,..."; defaults to zero.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites over a bounded family of instances.
    Sweep {
        /// "cells<=K,n<=N", "B:n<=N,m<=M", or "D:n<=N,m<=M".
        spec: String,
        #[arg(long, default_value_t = 2000)]
        max_vertices: usize,
    },
    /// Build and write a lattice document to a file.
    Export {
        spec: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: bool,
    },
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::constraint(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_build(spec: &str, want_json: bool, want_dot: bool, out: Option<PathBuf>) -> Result<(), CliError> {
    match spec.parse::<BuildSpec>()? {
        BuildSpec::Shape(shape) => {
            let l = build(&shape);
            let text = if want_json {
                let tl = tag_skew(l).map_err(CliError::verify)?;
                skew_lattice_json(&shape, &tl.lattice, Some(&tl.tags)).to_string()
            } else if want_dot {
                let tl = tag_skew(l).map_err(CliError::verify)?;
                to_dot(&tl.lattice, |eid| {
                    Some(format!("X={} Y={}", tl.tags[eid].x, tl.tags[eid].y))
                })
            } else {
                format!(
                    "shape {shape}: {} vertices, {} edges, length {}, rgf {}",
                    l.num_vertices(),
                    l.num_edges(),
                    l.length(),
                    l.rgf()
                )
            };
            emit(text, &out)
        }
        BuildSpec::Orth { kind, n, m, spin, text: spec_text } => {
            let lattice = skewtab_core::orthogonal::build_orth(kind, n, m, spin)
                .map_err(CliError::constraint_from)?;
            let render = |l: &OrthLattice| -> Result<String, CliError> {
                match l {
                    OrthLattice::B(l) => {
                        if want_json {
                            let products = edge_products(l).map_err(CliError::verify)?;
                            Ok(orth_lattice_json(&spec_text, l, |v| json!(v.rows()), Some(&products))
                                .to_string())
                        } else if want_dot {
                            let products = edge_products(l).map_err(CliError::verify)?;
                            Ok(to_dot(l, |eid| Some(format!("P={}", products[eid]))))
                        } else {
                            Ok(format!(
                                "{spec_text}: {} vertices, {} edges, length {}, rgf {}",
                                l.num_vertices(),
                                l.num_edges(),
                                l.length(),
                                l.rgf()
                            ))
                        }
                    }
                    OrthLattice::D(l) => {
                        if want_json {
                            let products = edge_products(l).map_err(CliError::verify)?;
                            Ok(orth_lattice_json(&spec_text, l, |v| json!(v.rows()), Some(&products))
                                .to_string())
                        } else if want_dot {
                            let products = edge_products(l).map_err(CliError::verify)?;
                            Ok(to_dot(l, |eid| Some(format!("P={}", products[eid]))))
                        } else {
                            Ok(format!(
                                "{spec_text}: {} vertices, {} edges, length {}, rgf {}",
                                l.num_vertices(),
                                l.num_edges(),
                                l.length(),
                                l.rgf()
                            ))
                        }
                    }
                }
            };
            let text = render(&lattice)?;
            emit(text, &out)
        }
    }
}

fn cmd_verify(
    spec: &str,
    max_vertices: usize,
    float_sanity: bool,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if std::path::Path::new(spec).is_file() {
        let raw = std::fs::read_to_string(spec)
            .map_err(|e| CliError::parse(format!("cannot read {spec}: {e}")))?;
        let doc: serde_json::Value =
            serde_json::from_str(&raw).map_err(|e| CliError::parse(format!("bad json: {e}")))?;
        let (shape, tl) =
            import_tagged(&doc).map_err(|e| CliError::parse(format!("bad document: {e}")))?;
        let rd = root_data(Kind::A, shape.n() - 1).map_err(CliError::constraint_from)?;
        let cert = dc_verify(&tl, &rd).map_err(CliError::verify)?;
        return emit(certificate_json(&cert).to_string(), &out);
    }
    match spec.parse::<BuildSpec>()? {
        BuildSpec::Shape(shape) => {
            let rd = root_data(Kind::A, shape.n() - 1).map_err(CliError::constraint_from)?;
            let tl = tag_skew(build(&shape)).map_err(CliError::verify)?;
            if !tl.lattice.is_structured(&rd) {
                return Err(CliError::verify("lattice is not structured"));
            }
            let cert = dc_verify(&tl, &rd).map_err(CliError::verify)?;
            let mut doc = certificate_json(&cert);
            if tl.lattice.num_vertices() <= max_vertices {
                let g = generator_matrices(&tl, max_vertices).map_err(CliError::verify)?;
                verify_lie_relations(&g, &rd).map_err(CliError::verify)?;
                doc["serre_relations"] = json!("verified");
            } else {
                doc["serre_relations"] = json!("skipped (over vertex cap)");
            }
            emit(doc.to_string(), &out)
        }
        BuildSpec::Orth { kind, n, m, spin, .. } => {
            let rd_kind = match kind {
                skewtab_core::orthogonal::OrthKind::B => Kind::B,
                skewtab_core::orthogonal::OrthKind::D => Kind::D,
            };
            let rd = root_data(rd_kind, n).map_err(CliError::constraint_from)?;
            let lattice = skewtab_core::orthogonal::build_orth(kind, n, m, spin)
                .map_err(CliError::constraint_from)?;
            macro_rules! verify_orth {
                ($l:expr) => {{
                    let l = $l;
                    if !l.is_structured(&rd) {
                        return Err(CliError::verify("lattice is not structured"));
                    }
                    let products = edge_products(l).map_err(CliError::verify)?;
                    let cert = dc_verify_products(l, &products).map_err(CliError::verify)?;
                    let restriction = restriction_check(l);
                    let mut doc = json!({
                        "v": 1,
                        "status": "certificate",
                        "checked_diamonds": cert.checked_diamonds,
                        "checked_crossings": cert.checked_crossings,
                        "restriction_property": restriction.passes(),
                    });
                    if float_sanity {
                        doc["float_commutator_residual"] =
                            json!(float_commutator_residual(l, &products));
                    }
                    doc
                }};
            }
            let doc = match &lattice {
                OrthLattice::B(l) => verify_orth!(l),
                OrthLattice::D(l) => verify_orth!(l),
            };
            emit(doc.to_string(), &out)
        }
    }
}

fn cmd_decompose(
    shape: &str,
    nu: Option<String>,
    want_json: bool,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let shape: skewtab_core::SkewShape = shape
        .parse()
        .map_err(|e| CliError::parse(format!("bad shape: {e}")))?;
    let nu = match nu {
        Some(s) => parse_nu(&s, shape.n() - 1)?,
        None => Weight::zero(shape.n() - 1),
    };
    let d = zs_decompose(&shape, &nu).map_err(CliError::verify)?;
    let rd = root_data(Kind::A, shape.n() - 1).map_err(CliError::constraint_from)?;
    let mut dims = Vec::new();
    for (lam, &mult) in &d.constituents {
        let dim = weyl_dim(&rd, lam).map_err(CliError::verify)?;
        dims.push((lam.clone(), mult, dim));
    }
    let text = if want_json {
        decomposition_json(&d, &dims).to_string()
    } else {
        let mut lines = Vec::new();
        for (lam, mult, dim) in &dims {
            lines.push(format!("{lam} x {mult} x dim {dim}"));
        }
        lines.join("\n")
    };
    emit(text, &out)
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build { spec, json, dot, out } => cmd_build(&spec, json, dot, out),
        Command::Verify {
            spec,
            max_vertices,
            float_sanity,
            out,
        } => cmd_verify(&spec, max_vertices, float_sanity, out),
        Command::Decompose { shape, nu, json, out } => cmd_decompose(&shape, nu, json, out),
        Command::Sweep { spec, max_vertices } => sweep::cmd_sweep(&spec, max_vertices),
        Command::Export { spec, out, dot } => cmd_build(&spec, !dot, dot, Some(out)),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(match e.code {
                EXIT_VERIFY => 1,
                EXIT_PARSE => 2,
                EXIT_CONSTRAINT => 3,
                c => c,
            })
        }
    }
}
