//! JSON documents describing varieties.
//!
//! ```json
//! {"family": "9B", "n": 3}
//! {"family": "15"}
//! {"family": "P1xP1"}
//! {"family": "flag", "preset": "P3"}
//! {"family": "flag", "name": "P2", "group": {"type": "A", "rank": 2}, "pic": [[1, 0]],
//!  "model": {"kind": "projective-space", "n": 2}}
//! {"induction": {"ambient": {"type": "B", "rank": 4}, "levi": [2, 3, 4],
//!                "fiber": {"family": "9B", "n": 3}, "map": {"1": 2, "2": 3, "3": 4}}}
//! ```
//!
//! Simple-root indices are 1-based here, as in Bourbaki tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{get_entry, CatalogEntry, EntryId, FlagData};
use crate::error::{Error, Result};
use crate::models::GradedModel;
use crate::rootsys::{RootSystem, Weight};
use crate::wonderful::{make_induced, WonderfulVariety};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// `"P<n>"` or `"Q<n>"` for the built-in flag presets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<RootSystem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pic: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<GradedModel>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InductionDoc {
    pub ambient: RootSystem,
    pub levi: Vec<usize>,
    pub fiber: FamilyDoc,
    /// Fiber simple-root index → ambient simple-root index.
    pub map: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarietyDoc {
    Induction { induction: InductionDoc },
    Family(FamilyDoc),
}

impl FamilyDoc {
    pub fn builtin(family: &str, n: Option<usize>) -> Self {
        FamilyDoc {
            family: family.to_string(),
            n,
            preset: None,
            name: None,
            group: None,
            pic: None,
            model: None,
        }
    }

    pub fn entry_id(&self) -> Result<EntryId> {
        if !self.family.eq_ignore_ascii_case("flag") {
            return EntryId::from_family(&self.family, self.n);
        }
        if let Some(preset) = &self.preset {
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Config(format!("bad flag preset {preset:?}")))
            };
            return match preset.split_at(1) {
                ("P" | "p", n) => Ok(EntryId::Flag(FlagData::projective_space(parse(n)?)?)),
                ("Q" | "q", n) => Ok(EntryId::Flag(FlagData::quadric(parse(n)?)?)),
                _ => Err(Error::Config(format!("unknown flag preset {preset:?}"))),
            };
        }
        let group = self
            .group
            .clone()
            .ok_or_else(|| Error::Config("flag entry needs \"group\" or \"preset\"".into()))?;
        let pic = self
            .pic
            .clone()
            .ok_or_else(|| Error::Config("flag entry needs \"pic\" generators".into()))?;
        Ok(EntryId::Flag(FlagData {
            name: self.name.clone().unwrap_or_else(|| format!("{group}")),
            group,
            pic: pic.into_iter().map(Weight::new).collect(),
            model: self.model,
        }))
    }

    pub fn entry(&self) -> Result<CatalogEntry> {
        get_entry(&self.entry_id()?)
    }
}

impl VarietyDoc {
    pub fn family(family: &str, n: Option<usize>) -> Self {
        VarietyDoc::Family(FamilyDoc::builtin(family, n))
    }

    pub fn build(&self) -> Result<WonderfulVariety> {
        match self {
            VarietyDoc::Family(f) => WonderfulVariety::irreducible(f.entry()?),
            VarietyDoc::Induction { induction } => {
                let fiber = induction.fiber.entry()?;
                let one_based = |i: usize, what: &str| {
                    i.checked_sub(1)
                        .ok_or_else(|| Error::Config(format!("{what} indices are 1-based; got 0")))
                };
                let levi = induction
                    .levi
                    .iter()
                    .map(|&i| one_based(i, "levi"))
                    .collect::<Result<Vec<_>>>()?;
                let mut correspondence = vec![usize::MAX; fiber.rank()];
                for (k, &v) in &induction.map {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::Config(format!("bad map key {k:?}")))?;
                    let k = one_based(k, "map")?;
                    if k >= correspondence.len() {
                        return Err(Error::Config(format!(
                            "map key {} exceeds the fiber rank {}",
                            k + 1,
                            fiber.rank()
                        )));
                    }
                    correspondence[k] = one_based(v, "map")?;
                }
                if correspondence.contains(&usize::MAX) {
                    return Err(Error::Config(
                        "map must assign every fiber simple root".into(),
                    ));
                }
                make_induced(induction.ambient.clone(), &levi, fiber, &correspondence)
            }
        }
    }
}
