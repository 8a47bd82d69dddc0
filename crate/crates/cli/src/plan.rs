//! Sweep plans: either `A2,B2,...` (defaults per system) or a JSON file
//!
//! ```json
//! {"systems": [{"type": "A2", "parabolics": ["", "1"], "seeds": ["0,0", "1/2,0"], "pairs": true}]}
//! ```
//!
//! where omitted fields take the defaults.

use std::path::Path;

use anyhow::{Context, Result};
use hdcoh::verify::{SweepPlan, SystemPlan};
use hdcoh::{CartanType, GenSet, Weight};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanFile {
    systems: Vec<SystemEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemEntry {
    #[serde(rename = "type")]
    cartan: String,
    parabolics: Option<Vec<String>>,
    seeds: Option<Vec<String>>,
    pairs: Option<bool>,
}

pub fn load(spec: &str) -> Result<SweepPlan> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading plan {spec}"))?;
        let file: PlanFile = serde_json::from_str(&text).with_context(|| format!("parsing plan {spec}"))?;
        let systems = file.systems.into_iter().map(entry).collect::<Result<_>>()?;
        return Ok(SweepPlan { systems });
    }
    let types = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<CartanType>().with_context(|| format!("in plan type {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepPlan::with_defaults(types))
}

fn entry(e: SystemEntry) -> Result<SystemPlan> {
    let cartan: CartanType = e.cartan.parse().with_context(|| format!("in plan type {:?}", e.cartan))?;
    let mut sp = SystemPlan::with_defaults(cartan);
    if let Some(ps) = e.parabolics {
        sp.parabolics = ps
            .iter()
            .map(|p| p.parse::<GenSet>().with_context(|| format!("in plan parabolic {p:?}")))
            .collect::<Result<_>>()?;
    }
    if let Some(ss) = e.seeds {
        sp.seeds = ss
            .iter()
            .map(|s| s.parse::<Weight>().with_context(|| format!("in plan seed {s:?}")))
            .collect::<Result<_>>()?;
    }
    if let Some(p) = e.pairs {
        sp.pair_checks = p;
    }
    Ok(sp)
}
