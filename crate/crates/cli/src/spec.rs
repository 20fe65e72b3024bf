//! Command-line argument grammar: shapes `"P/Q;n"`, orthogonal specs
//! `"B:n,m"` / `"D:n,m[,spin]"`, and dominant-weight lists.

use skewtab_core::orthogonal::{OrthKind, Spin};
use skewtab_core::shapes::ShapeError;
use skewtab_core::weights::Weight;
use skewtab_core::SkewShape;
use std::str::FromStr;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CONSTRAINT: u8 = 3;

/// Error with a stable exit code attached.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn constraint(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONSTRAINT,
            message: message.into(),
        }
    }

    pub fn constraint_from(e: impl std::fmt::Display) -> Self {
        CliError::constraint(e.to_string())
    }

    pub fn verify(e: impl std::fmt::Debug) -> Self {
        CliError {
            code: EXIT_VERIFY,
            message: format!("{e:?}"),
        }
    }
}

/// A parsed build target.
pub enum BuildSpec {
    Shape(SkewShape),
    Orth {
        kind: OrthKind,
        n: usize,
        m: i64,
        spin: Spin,
        text: String,
    },
}

impl FromStr for BuildSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("B:").or_else(|| s.strip_prefix("b:")) {
            let (n, m, _) = parse_orth_params(rest, false)?;
            return Ok(BuildSpec::Orth {
                kind: OrthKind::B,
                n,
                m,
                spin: Spin::Lower,
                text: format!("B:{n},{m}"),
            });
        }
        if let Some(rest) = s.strip_prefix("D:").or_else(|| s.strip_prefix("d:")) {
            let (n, m, spin) = parse_orth_params(rest, true)?;
            let spin_txt = match spin {
                Spin::Lower => "n-1",
                Spin::Upper => "n",
            };
            return Ok(BuildSpec::Orth {
                kind: OrthKind::D,
                n,
                m,
                spin,
                text: format!("D:{n},{m},{spin_txt}"),
            });
        }
        match s.parse::<SkewShape>() {
            Ok(shape) => Ok(BuildSpec::Shape(shape)),
            // distinguish malformed text from well-formed but invalid shapes
            Err(ShapeError::Parse(msg)) => Err(CliError::parse(format!("bad spec {msg:?}"))),
            Err(e) => Err(CliError::constraint(e.to_string())),
        }
    }
}

fn parse_orth_params(rest: &str, allow_spin: bool) -> Result<(usize, i64, Spin), CliError> {
    let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
    if parts.len() < 2 || parts.len() > if allow_spin { 3 } else { 2 } {
        return Err(CliError::parse(format!("bad orthogonal spec {rest:?}")));
    }
    let n: usize = parts[0]
        .parse()
        .map_err(|_| CliError::parse(format!("bad rank {:?}", parts[0])))?;
    let m: i64 = parts[1]
        .parse()
        .map_err(|_| CliError::parse(format!("bad bound {:?}", parts[1])))?;
    let spin = match parts.get(2) {
        None => Spin::Lower,
        Some(&"n-1") => Spin::Lower,
        Some(&"n") => Spin::Upper,
        Some(other) => {
            return Err(CliError::parse(format!(
                "bad spin {other:?}, expected \"n-1\" or \"n\""
            )))
        }
    };
    Ok((n, m, spin))
}

/// Parse a comma-separated dominant weight of the given rank.
pub fn parse_nu(s: &str, rank: usize) -> Result<Weight, CliError> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::parse(format!("bad weight {s:?}")))?;
    if coords.len() != rank {
        return Err(CliError::parse(format!(
            "weight {s:?} has {} coordinates, expected {rank}",
            coords.len()
        )));
    }
    let w = Weight(coords);
    if !w.is_dominant() {
        return Err(CliError::constraint(format!("weight {s:?} is not dominant")));
    }
    Ok(w)
}
