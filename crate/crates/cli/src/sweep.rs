//! The `sweep` subcommand: run the property suites over a bounded family
//! of instances and print one machine-readable pass/fail line per invariant
//! per instance.

use crate::spec::CliError;
use skewtab_core::lattice::{build, check_iso, lattice_op, IsoOutcome};
use skewtab_core::orthogonal::{
    build_even, build_odd, dc_verify_products, edge_products, restriction_check, rgf_orth_check,
    OrthKind, Spin,
};
use skewtab_core::repdiag::{dc_verify, generator_matrices, tag_skew, verify_lie_relations};
use skewtab_core::schur::{rgf_via_zs, theta, zs_decompose};
use skewtab_core::shapes::{enumerate_shapes, shape_op, SHAPE_OPS};
use skewtab_core::weights::{poly_props, reflect, root_data, Kind, Weight};

enum SweepSpec {
    Shapes { cells: i64, n_max: usize },
    Orth { kind: OrthKind, n_max: usize, m_max: i64 },
}

fn parse_bound(part: &str, key: &str) -> Option<i64> {
    let rest = part.trim().strip_prefix(key)?;
    let rest = rest
        .trim_start_matches("<=")
        .trim_start_matches('\u{2264}')
        .trim();
    rest.parse().ok()
}

fn parse_sweep(s: &str) -> Result<SweepSpec, CliError> {
    let err = || CliError::parse(format!("bad sweep spec {s:?}"));
    let (kind, body) = if let Some(rest) = s.strip_prefix("B:") {
        (Some(OrthKind::B), rest)
    } else if let Some(rest) = s.strip_prefix("D:") {
        (Some(OrthKind::D), rest)
    } else {
        (None, s)
    };
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 2 {
        return Err(err());
    }
    match kind {
        None => {
            let cells = parse_bound(parts[0], "cells").ok_or_else(err)?;
            let n_max = parse_bound(parts[1], "n").ok_or_else(err)? as usize;
            Ok(SweepSpec::Shapes { cells, n_max })
        }
        Some(kind) => {
            let n_max = parse_bound(parts[0], "n").ok_or_else(err)? as usize;
            let m_max = parse_bound(parts[1], "m").ok_or_else(err)?;
            Ok(SweepSpec::Orth { kind, n_max, m_max })
        }
    }
}

struct Tally {
    failures: usize,
}

impl Tally {
    fn record(&mut self, instance: &str, invariant: &str, pass: bool) {
        println!(
            "{instance}\t{invariant}\t{}",
            if pass { "PASS" } else { "FAIL" }
        );
        if !pass {
            self.failures += 1;
        }
    }
}

pub fn cmd_sweep(spec: &str, max_vertices: usize) -> Result<(), CliError> {
    let mut tally = Tally { failures: 0 };
    match parse_sweep(spec)? {
        SweepSpec::Shapes { cells, n_max } => {
            for n in 2..=n_max {
                let rd = root_data(Kind::A, n - 1).map_err(CliError::constraint_from)?;
                for s in enumerate_shapes(cells, n) {
                    let name = s.to_string();
                    let l = build(&s);
                    tally.record(&name, "diamond_colored", l.verify_diamond_colored());
                    tally.record(&name, "join_meet_closed", l.verify_join_meet_closed());
                    tally.record(&name, "structured", l.is_structured(&rd));
                    let props = poly_props(&l.rgf());
                    tally.record(&name, "rank_symmetric", props.symmetric);
                    tally.record(&name, "rank_unimodal", props.unimodal);
                    let w = l.wgf();
                    let invariant = (1..n)
                        .all(|i| reflect(&w, i, &rd).map(|r| r == w).unwrap_or(false));
                    tally.record(&name, "wgf_weyl_invariant", invariant);
                    tally.record(&name, "theta_matches_wgf", theta(&s) == w);
                    let dc = match tag_skew(l) {
                        Ok(tl) => {
                            let good = dc_verify(&tl, &rd).is_ok();
                            if good && tl.lattice.num_vertices() <= max_vertices {
                                let serre = generator_matrices(&tl, max_vertices)
                                    .map(|g| verify_lie_relations(&g, &rd).is_ok())
                                    .unwrap_or(false);
                                tally.record(&name, "serre_relations", serre);
                            }
                            good
                        }
                        Err(_) => false,
                    };
                    tally.record(&name, "dc_relations", dc);
                    tally.record(
                        &name,
                        "zs_identity",
                        zs_decompose(&s, &Weight::zero(n - 1)).is_ok(),
                    );
                    tally.record(&name, "rgf_via_zs", rgf_via_zs(&s).is_ok());
                    let mut dualities = true;
                    for op in SHAPE_OPS {
                        let lhs = build(&shape_op(&s, op));
                        let rhs = lattice_op(&build(&s), op.into());
                        if !matches!(check_iso(&lhs, &rhs, 500_000), IsoOutcome::Isomorphic(_)) {
                            dualities = false;
                        }
                    }
                    tally.record(&name, "klein_dualities", dualities);
                }
            }
        }
        SweepSpec::Orth { kind, n_max, m_max } => {
            let n_min = match kind {
                OrthKind::B => 2,
                OrthKind::D => 4,
            };
            for n in n_min..=n_max {
                let rd_kind = match kind {
                    OrthKind::B => Kind::B,
                    OrthKind::D => Kind::D,
                };
                let rd = root_data(rd_kind, n).map_err(CliError::constraint_from)?;
                for m in 0..=m_max {
                    let name = match kind {
                        OrthKind::B => format!("B:{n},{m}"),
                        OrthKind::D => format!("D:{n},{m}"),
                    };
                    macro_rules! run {
                        ($l:expr) => {{
                            let l = $l;
                            tally.record(&name, "diamond_colored", l.verify_diamond_colored());
                            tally.record(&name, "join_meet_closed", l.verify_join_meet_closed());
                            tally.record(&name, "structured", l.is_structured(&rd));
                            let props = poly_props(&l.rgf());
                            tally.record(&name, "rank_symmetric", props.symmetric);
                            tally.record(&name, "rank_unimodal", props.unimodal);
                            let w = l.wgf();
                            let inv = (1..=n)
                                .all(|i| reflect(&w, i, &rd).map(|r| r == w).unwrap_or(false));
                            tally.record(&name, "wgf_weyl_invariant", inv);
                            let products = edge_products(&l).ok();
                            let certified = products
                                .as_ref()
                                .map(|p| dc_verify_products(&l, p).is_ok())
                                .unwrap_or(false);
                            tally.record(&name, "product_dc_relations", certified);
                            tally.record(&name, "rgf_formula", rgf_orth_check(kind, n, m).is_ok());
                            tally.record(&name, "restriction", restriction_check(&l).passes());
                        }};
                    }
                    match kind {
                        OrthKind::B => {
                            run!(build_odd(n, m).map_err(CliError::constraint_from)?)
                        }
                        OrthKind::D => {
                            run!(build_even(n, m, Spin::Lower).map_err(CliError::constraint_from)?)
                        }
                    }
                }
            }
        }
    }
    if tally.failures > 0 {
        Err(CliError::verify(format!(
            "{} invariant failures",
            tally.failures
        )))
    } else {
        Ok(())
    }
}
