//! On-disk memo of computed `P_λ`.
//!
//! Format (JSON Lines): a header `{"format":"macdonald-p-cache","version":1}`
//! followed by one record per partition:
//! `{"lambda":[2,1],"P_in_m":[{"partition":[2,1],"coeff":"1"},...],"b":"..."}`.
//! Records are re-validated against the arm-leg product when loaded.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{b_coeff, MacdonaldPair};
use crate::coeff::RatQT;
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

pub const CACHE_VERSION: u32 = 1;
const FORMAT: &str = "macdonald-p-cache";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("cache version {found} is not supported (expected {CACHE_VERSION})")]
    Version { found: u32 },
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
}

#[derive(Serialize, Deserialize)]
struct Term {
    partition: Partition,
    coeff: RatQT,
}

#[derive(Serialize, Deserialize)]
struct Record {
    lambda: Partition,
    #[serde(rename = "P_in_m")]
    p_in_m: Vec<Term>,
    b: RatQT,
}

pub fn save_cache(path: &Path, pairs: &[MacdonaldPair]) -> Result<(), CacheError> {
    let mut out = fs::File::create(path)?;
    let header = Header {
        format: FORMAT.into(),
        version: CACHE_VERSION,
    };
    writeln!(out, "{}", serde_json::to_string(&header).unwrap())?;
    for m in pairs {
        let rec = Record {
            lambda: m.lam.clone(),
            p_in_m: m
                .p
                .convert(Basis::M)
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| Term {
                    partition: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
            b: m.b.clone(),
        };
        writeln!(out, "{}", serde_json::to_string(&rec).unwrap())?;
    }
    Ok(())
}

/// Read a cache file, grouped by degree.
pub fn load_cache(path: &Path) -> Result<BTreeMap<u32, Vec<MacdonaldPair>>, CacheError> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut out: BTreeMap<u32, Vec<MacdonaldPair>> = BTreeMap::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |msg: String| CacheError::Malformed { line: k + 1, msg };
        if k == 0 {
            let h: Header = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
            if h.format != FORMAT {
                return Err(bad(format!("unexpected format tag {:?}", h.format)));
            }
            if h.version != CACHE_VERSION {
                return Err(CacheError::Version { found: h.version });
            }
            continue;
        }
        let rec: Record = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
        if b_coeff(&rec.lambda) != rec.b {
            return Err(bad(format!("b for {} does not match the arm-leg product", rec.lambda)));
        }
        let p = SymFunc::from_terms(Basis::M, rec.p_in_m.into_iter().map(|t| (t.partition, t.coeff)));
        if p.coeff(&rec.lambda) != RatQT::one() {
            return Err(bad(format!("P{} is not monic", rec.lambda)));
        }
        let norm = rec.b.inv().map_err(|e| bad(e.to_string()))?;
        out.entry(rec.lambda.weight()).or_default().push(MacdonaldPair {
            q: p.scale(&rec.b),
            lam: rec.lambda,
            p,
            b: rec.b,
            norm,
        });
    }
    for v in out.values_mut() {
        v.sort_by(|a, b| b.lam.cmp(&a.lam));
    }
    Ok(out)
}
