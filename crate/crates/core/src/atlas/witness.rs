//! Witness files: externally produced generator data with declared
//! properties. Nothing in a witness is trusted; every declared expectation is
//! recomputed at load and a mismatch fails the load with a property diff.
//!
//! Format (line oriented, whitespace tolerant, order insensitive after the
//! leading `name` line):
//!
//! ```text
//! name <string>
//! degree <int>
//! gen <cycles>            # repeatable
//! expect order <int>
//! expect center <int>     # optional
//! expect simple <bool>    # optional
//! expect perfect <bool>   # optional
//! provenance <text>
//! ```

use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct WitnessSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub expected_order: BigUint,
    pub expected_center_order: Option<u64>,
    pub expected_simple: Option<bool>,
    pub expected_perfect: Option<bool>,
    pub provenance: String,
}

impl WitnessSpec {
    pub fn parse(text: &str, origin: &str) -> Result<WitnessSpec> {
        let mut name = None;
        let mut degree = None;
        let mut generators = Vec::new();
        let mut expected_order = None;
        let mut expected_center_order = None;
        let mut expected_simple = None;
        let mut expected_perfect = None;
        let mut provenance = String::new();
        let fail = |problem: &str| Error::Witness {
            name: origin.to_string(),
            problem: problem.to_string(),
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| fail(&format!("line {}: missing value", lineno + 1)))?;
            let rest = rest.trim();
            match key {
                "name" => {
                    if name.is_some() || degree.is_some() {
                        return Err(fail("name must come first and appear once"));
                    }
                    name = Some(rest.to_string());
                }
                "degree" => {
                    degree = Some(rest.parse::<usize>().map_err(|_| {
                        fail(&format!("line {}: bad degree", lineno + 1))
                    })?)
                }
                "gen" => generators.push(rest.to_string()),
                "expect" => {
                    let (what, val) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| fail("expect needs a property and a value"))?;
                    let val = val.trim();
                    match what {
                        "order" => {
                            expected_order = Some(val.parse::<BigUint>().map_err(|_| {
                                fail(&format!("line {}: bad order", lineno + 1))
                            })?)
                        }
                        "center" => {
                            expected_center_order = Some(val.parse::<u64>().map_err(|_| {
                                fail(&format!("line {}: bad center order", lineno + 1))
                            })?)
                        }
                        "simple" => expected_simple = Some(parse_bool(val).ok_or_else(|| {
                            fail(&format!("line {}: bad bool", lineno + 1))
                        })?),
                        "perfect" => expected_perfect = Some(parse_bool(val).ok_or_else(|| {
                            fail(&format!("line {}: bad bool", lineno + 1))
                        })?),
                        other => return Err(fail(&format!("unknown expectation `{other}`"))),
                    }
                }
                "provenance" => provenance = rest.to_string(),
                other => return Err(fail(&format!("unknown key `{other}`"))),
            }
        }
        Ok(WitnessSpec {
            name: name.ok_or_else(|| fail("missing name"))?,
            degree: degree.ok_or_else(|| fail("missing degree"))?,
            generators: if generators.is_empty() {
                return Err(fail("missing generators"));
            } else {
                generators
            },
            expected_order: expected_order.ok_or_else(|| fail("missing expected order"))?,
            expected_center_order,
            expected_simple,
            expected_perfect,
            provenance,
        })
    }

    /// Builds the group and verifies every declared expectation.
    pub fn realize(&self) -> Result<PermGroup> {
        let fail = |problem: String| Error::Witness {
            name: self.name.clone(),
            problem,
        };
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::new(self.degree, gens)?;
        let order = group.order();
        if order != self.expected_order {
            return Err(fail(format!(
                "order {order} but expected {}",
                self.expected_order
            )));
        }
        if let Some(z) = self.expected_center_order {
            let center = group.center().order_u64();
            if center != Some(z) {
                return Err(fail(format!(
                    "center order {center:?} but expected {z}"
                )));
            }
        }
        if let Some(perfect) = self.expected_perfect {
            if group.is_perfect() != perfect {
                return Err(fail(format!(
                    "perfectness is {} but expected {perfect}",
                    group.is_perfect()
                )));
            }
        }
        if let Some(simple) = self.expected_simple {
            let got = group.is_simple()?;
            if got != simple {
                return Err(fail(format!("simplicity is {got} but expected {simple}")));
            }
        }
        Ok(group)
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

/// Loads and fully verifies a witness file.
pub fn load_witness(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    let origin = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    WitnessSpec::parse(&text, &origin)?.realize()
}

/// Loads the spec without running the verification (used by reports that
/// want to show declared values).
pub fn load_witness_spec(path: &Path) -> Result<WitnessSpec> {
    let text = std::fs::read_to_string(path)?;
    let origin = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    WitnessSpec::parse(&text, &origin)
}
