//! JSON formats.
//!
//! ```text
//! ground set   {"blocks": [["1","1bar"],["2","2bar"]]}
//! colored set  ["1","2bar"]
//! ranks        {"ranks": [{"set": ["1","2"], "rank": "6"}, ...]}
//! divisor      {"basis": "H", "coefficients": [{"set": ["1"], "coeff": "1/2"}, ...]}
//! divisors     {"divisors": [<divisor>, ...]}
//! sets         {"sets": [["1","2"], ["1bar","2"]]}
//! ```
//!
//! Rationals are strings `"p/q"` (plain JSON integers are accepted on input).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chow::{Basis, Divisor};
use crate::error::{Error, Result};
use crate::ground::{ColoredSet, GroundSet, GroundSetSpec};
use crate::multimatroid::RankFunction;
use crate::rational::Rational;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RankEntry {
    pub set: Vec<String>,
    #[serde(with = "crate::rational::as_string")]
    pub rank: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RanksJson {
    pub ranks: Vec<RankEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub set: Vec<String>,
    #[serde(with = "crate::rational::as_string")]
    pub coeff: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Basis>,
    pub coefficients: Vec<CoeffEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorsJson {
    pub divisors: Vec<DivisorJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SetsJson {
    pub sets: Vec<Vec<String>>,
}

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_ground_set(json: &str) -> Result<GroundSet> {
    let spec: GroundSetSpec = serde_json::from_str(json)?;
    GroundSet::new(spec.blocks)
}

pub fn read_ground_set(path: &Path) -> Result<GroundSet> {
    parse_ground_set(&read_to_string(path)?)
}

pub fn ground_set_json(g: &GroundSet) -> String {
    serde_json::to_string_pretty(&g.spec()).expect("serializable")
}

/// A colored set as its labels in canonical (block, position) order.
pub fn set_json(g: &GroundSet, s: &ColoredSet) -> Vec<String> {
    g.labels_of(s)
}

/// Ranks must be given for every nonempty colored set; `∅` may be listed
/// with rank 0.
pub fn parse_ranks(g: &GroundSet, json: &str) -> Result<RankFunction> {
    let parsed: RanksJson = serde_json::from_str(json)?;
    let mut values: Vec<Option<Rational>> = vec![None; g.num_colored_sets()];
    values[0] = Some(Rational::from_integer(0));
    for e in parsed.ranks {
        let s = g.set_from_labels(&e.set)?;
        let code = g.code(&s);
        if code == 0 {
            if e.rank != Rational::from_integer(0) {
                return Err(Error::InvalidInput("rk(∅) must be 0".into()));
            }
            continue;
        }
        if values[code].replace(e.rank).is_some() {
            return Err(Error::InvalidInput(format!("rank of {} given twice", g.display(&s))));
        }
    }
    let missing: Vec<String> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_none())
        .map(|(c, _)| g.display(&g.set_at(c)))
        .collect();
    if !missing.is_empty() {
        return Err(Error::InvalidInput(format!(
            "ranks missing for {} colored sets, first {}",
            missing.len(),
            missing[0]
        )));
    }
    RankFunction::from_dense(g, values.into_iter().map(|v| v.expect("checked")).collect())
}

pub fn read_ranks(g: &GroundSet, path: &Path) -> Result<RankFunction> {
    parse_ranks(g, &read_to_string(path)?)
}

pub fn ranks_to_json(rk: &RankFunction) -> RanksJson {
    let g = rk.ground();
    RanksJson {
        ranks: g
            .nonempty_sets()
            .iter()
            .map(|s| RankEntry {
                set: g.labels_of(s),
                rank: rk.rank(s),
            })
            .collect(),
    }
}

pub fn divisor_from_json(g: &GroundSet, d: &DivisorJson, default_basis: Basis) -> Result<Divisor> {
    let basis = d.basis.unwrap_or(default_basis);
    let pairs = d
        .coefficients
        .iter()
        .map(|e| Ok((g.set_from_labels(&e.set)?, e.coeff)))
        .collect::<Result<Vec<_>>>()?;
    Divisor::from_pairs(g, basis, pairs)
}

pub fn divisor_to_json(d: &Divisor) -> DivisorJson {
    let g = d.ground();
    DivisorJson {
        basis: Some(d.basis()),
        coefficients: d
            .support()
            .into_iter()
            .map(|(s, c)| CoeffEntry {
                set: g.labels_of(&s),
                coeff: c,
            })
            .collect(),
    }
}

/// Accepts either `{"divisors": [...]}` or a single divisor object.
pub fn parse_divisors(g: &GroundSet, json: &str, default_basis: Basis) -> Result<Vec<Divisor>> {
    let value: serde_json::Value = serde_json::from_str(json)?;
    if value.get("divisors").is_some() {
        let ds: DivisorsJson = serde_json::from_value(value)?;
        ds.divisors
            .iter()
            .map(|d| divisor_from_json(g, d, default_basis))
            .collect()
    } else {
        let d: DivisorJson = serde_json::from_value(value)?;
        Ok(vec![divisor_from_json(g, &d, default_basis)?])
    }
}

pub fn parse_sets(g: &GroundSet, json: &str) -> Result<Vec<ColoredSet>> {
    let s: SetsJson = serde_json::from_str(json)?;
    s.sets.iter().map(|l| g.set_from_labels(l)).collect()
}
