//! Instance files: `key = value` lines describing a cover.
//!
//! ```text
//! # Fermat-type quartic double cover
//! M = 5
//! m = 4
//! l = 2
//! K = 2
//! prime = 1000003        # optional; coefficients then live in F_p
//! seed = 7               # optional
//! vars = x0 x1 x2 x3 x4 x5 x6   # optional, defaults to x0..x{M+1}
//! f = x0^4 + x1^4 + x2^4
//!     + x3^4 + x4^4 + x5^4 + x6^4
//! g = x0^4 - x1^4 + x2^4 - x3^4 + x4^4 - x5^4 + x6^4
//! ```
//!
//! A value continues on following lines until the next `key =` line.
//! Generalized covers give `g1, …, gK` instead of `g`.

use std::fmt::Write as _;

use thiserror::Error;

use super::parser::{parse_polynomial_at, ParseError};
use crate::cover::{validate_family, CoverError, CoverFamily, CoverInstance};
use crate::poly::{CoeffDomain, PolyRing, Polynomial, RingRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("missing key {0}")]
    Missing(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: CoverInstance,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
}

struct Entry {
    key: String,
    value: String,
    line: usize,
    column: usize,
}

fn split_entries(text: &str) -> Result<Vec<Entry>, InstanceError> {
    let mut entries: Vec<Entry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let key_end = content.find('=').filter(|&eq| {
            let key = content[..eq].trim();
            !key.is_empty()
                && key.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        });
        match key_end {
            Some(eq) => {
                let key = content[..eq].trim().to_string();
                if entries.iter().any(|e| e.key == key) {
                    return Err(InstanceError::Invalid { line, message: format!("duplicate key {key}") });
                }
                let after = &content[eq + 1..];
                let lead = after.len() - after.trim_start().len();
                let column = content[..eq + 1 + lead].chars().count() + 1;
                entries.push(Entry { key, value: after.trim_start().to_string(), line, column });
            }
            None if content.trim().is_empty() => {
                if let Some(last) = entries.last_mut() {
                    last.value.push('\n');
                }
            }
            None => match entries.last_mut() {
                Some(last) => {
                    last.value.push('\n');
                    last.value.push_str(content);
                }
                None => {
                    return Err(InstanceError::Invalid { line, message: "expected `key = value`".into() });
                }
            },
        }
    }
    Ok(entries)
}

fn integer<T: std::str::FromStr>(e: &Entry) -> Result<T, InstanceError> {
    e.value.trim().parse().map_err(|_| InstanceError::Invalid {
        line: e.line,
        message: format!("{} must be a nonnegative integer, found {:?}", e.key, e.value.trim()),
    })
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, InstanceError> {
    let entries = split_entries(text)?;
    let get = |k: &str| entries.iter().find(|e| e.key == k);
    let need = |k: &str| get(k).ok_or_else(|| InstanceError::Missing(k.to_string()));
    let known = ["M", "m", "l", "K", "prime", "seed", "vars", "f", "g"];
    for e in &entries {
        let generalized_key = e.key.strip_prefix('g').is_some_and(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()));
        if !known.contains(&e.key.as_str()) && !generalized_key {
            return Err(InstanceError::Invalid { line: e.line, message: format!("unknown key {}", e.key) });
        }
    }
    let dim: u32 = integer(need("M")?)?;
    let m: u32 = integer(need("m")?)?;
    let l: u32 = integer(need("l")?)?;
    let k: u32 = integer(need("K")?)?;
    let family = validate_family(dim, m, l, k).map_err(|err| InstanceError::Invalid {
        line: need("M").map(|e| e.line).unwrap_or(1),
        message: err.to_string(),
    })?;
    let prime: Option<u64> = get("prime").map(integer).transpose()?;
    let seed: Option<u64> = get("seed").map(integer).transpose()?;
    let domain = match prime {
        Some(p) => CoeffDomain::prime_field(p).map_err(|err| InstanceError::Invalid {
            line: get("prime").map(|e| e.line).unwrap_or(1),
            message: err.to_string(),
        })?,
        None => CoeffDomain::Rationals,
    };
    let ring = ring_for(&family, domain, get("vars"))?;
    let poly = |e: &Entry| -> Result<Polynomial, InstanceError> {
        Ok(parse_polynomial_at(&e.value, &ring, e.line, e.column)?)
    };
    let f = poly(need("f")?)?;
    let instance = if let Some(g) = get("g") {
        CoverInstance::new(family, f, poly(g)?)?
    } else {
        let coefficients = (1..=k)
            .map(|i| poly(need(&format!("g{i}"))?))
            .collect::<Result<Vec<_>, _>>()?;
        CoverInstance::generalized(family, f, coefficients)?
    };
    Ok(InstanceFile { instance, prime, seed })
}

fn ring_for(family: &CoverFamily, domain: CoeffDomain, vars: Option<&Entry>) -> Result<RingRef, InstanceError> {
    let Some(e) = vars else {
        return Ok(family.ambient_ring(domain));
    };
    let names: Vec<&str> = e.value.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
    let expected = family.dimension() as usize + 2;
    if names.len() != expected {
        return Err(InstanceError::Invalid {
            line: e.line,
            message: format!("vars lists {} names, expected {expected}", names.len()),
        });
    }
    PolyRing::new(names, domain).map_err(|err| InstanceError::Invalid { line: e.line, message: err.to_string() })
}

/// Canonical instance-file text; parsing it gives back an equal instance.
pub fn render_instance(file: &InstanceFile) -> String {
    let inst = &file.instance;
    let fam = inst.family();
    let mut out = String::new();
    let _ = writeln!(out, "M = {}", fam.dimension());
    let _ = writeln!(out, "m = {}", fam.base_degree());
    let _ = writeln!(out, "l = {}", fam.root_weight());
    let _ = writeln!(out, "K = {}", fam.sheets());
    if let Some(p) = file.prime {
        let _ = writeln!(out, "prime = {p}");
    }
    if let Some(s) = file.seed {
        let _ = writeln!(out, "seed = {s}");
    }
    let _ = writeln!(out, "vars = {}", inst.ring().variables().join(" "));
    let _ = writeln!(out, "f = {}", inst.f());
    match inst.branch_data() {
        crate::cover::BranchData::Cyclic(g) => {
            let _ = writeln!(out, "g = {g}");
        }
        crate::cover::BranchData::Generalized(gs) => {
            for (i, g) in gs.iter().enumerate() {
                let _ = writeln!(out, "g{} = {g}", i + 1);
            }
        }
    }
    out
}
