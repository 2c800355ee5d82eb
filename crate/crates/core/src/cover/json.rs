use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Exhaustion, InvariantResult, InvariantValue, OpenCover, Problem};
use crate::map::{ContinuousMap, MapJson};

/// A cover certificate in exchange form. Lifting problems carry `iota`,
/// distance problems carry `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub kind: String,
    pub pointed: bool,
    pub f: MapJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota: Option<MapJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<MapJson>,
    pub parts: Vec<PartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    pub members: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<BTreeMap<String, String>>,
    pub fence: Vec<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Finite(usize),
    /// `"infinite"` or `"budget-exceeded"`.
    Other(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetJson {
    pub kind: String,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultJson {
    pub value: ValueJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CoverJson>,
    pub exhaustion: Exhaustion,
}

impl OpenCover {
    pub fn to_json(&self) -> CoverJson {
        let (kind, iota, g) = match &self.problem {
            Problem::Lift { iota, .. } => ("lift", Some(iota.to_json()), None),
            Problem::Distance { g, .. } => ("distance", None, Some(g.to_json())),
        };
        CoverJson {
            kind: kind.to_string(),
            pointed: self.pointed,
            f: self.problem.f().to_json(),
            iota,
            g,
            parts: self
                .parts
                .iter()
                .map(|p| PartJson {
                    members: self.target().set_names(&p.members),
                    lift: p.lift.as_ref().map(ContinuousMap::table),
                    fence: p.fence.steps().iter().map(ContinuousMap::table).collect(),
                })
                .collect(),
        }
    }
}

impl InvariantResult {
    pub fn to_json(&self) -> ResultJson {
        let (value, budget) = match self.value {
            InvariantValue::Finite(n) => (ValueJson::Finite(n), None),
            InvariantValue::Infinite => (ValueJson::Other("infinite".into()), None),
            InvariantValue::BudgetExceeded { kind, cap } => (
                ValueJson::Other("budget-exceeded".into()),
                Some(BudgetJson {
                    kind: kind.to_string(),
                    cap,
                }),
            ),
        };
        ResultJson {
            value,
            budget,
            certificate: self.certificate.as_ref().map(OpenCover::to_json),
            exhaustion: self.exhaustion.clone(),
        }
    }
}
