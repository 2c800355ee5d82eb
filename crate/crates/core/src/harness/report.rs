use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::poset::SpaceJson;

pub const SCHEMA_VERSION: u32 = 1;

/// One random object drawn while building an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Draw {
    Space(SpaceJson),
    Map(BTreeMap<String, String>),
    /// Points of a subspace, for inclusions.
    Members(Vec<String>),
}

/// Everything needed to re-run one instance without the generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub property: String,
    pub index: usize,
    pub seed: u64,
    pub pointed: bool,
    pub normality_filter: bool,
    pub draws: Vec<Draw>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail(String),
    BudgetExceeded(String),
    /// No instance met the hypotheses within the retry limit.
    Filtered(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub detail: String,
    pub instance: Instance,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub id: String,
    pub statement: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub budget_exceeded: usize,
    pub filtered: usize,
    /// Candidates discarded for failing a hypothesis before a usable one
    /// was found.
    pub rejected: usize,
    pub certificates_checked: usize,
    pub millis: u128,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seed: u64,
    pub pointed: bool,
    pub instances_per_property: usize,
    pub properties: Vec<PropertyReport>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        self.properties.iter().map(|p| p.failed).sum()
    }

    pub fn budget_exceeded(&self) -> usize {
        self.properties.iter().map(|p| p.budget_exceeded).sum()
    }

    pub fn instances(&self) -> usize {
        self.properties.iter().map(|p| p.instances).sum()
    }

    pub fn certificates_checked(&self) -> usize {
        self.properties.iter().map(|p| p.certificates_checked).sum()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn table(&self) -> String {
        let w = self.properties.iter().map(|p| p.id.len()).max().unwrap_or(8).max(8);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<w$}  {:>5}  {:>5}  {:>4}  {:>6}  {:>8}  {:>5}  {:>8}",
            "property", "runs", "pass", "fail", "budget", "filtered", "certs", "ms"
        );
        for p in &self.properties {
            let _ = writeln!(
                out,
                "{:<w$}  {:>5}  {:>5}  {:>4}  {:>6}  {:>8}  {:>5}  {:>8}",
                p.id, p.instances, p.passed, p.failed, p.budget_exceeded, p.filtered, p.certificates_checked, p.millis
            );
        }
        let _ = writeln!(
            out,
            "{} properties, {} instances, {} failed, {} over budget, {} certificates re-checked, {} ms",
            self.properties.len(),
            self.instances(),
            self.failed(),
            self.budget_exceeded(),
            self.certificates_checked(),
            self.millis
        );
        for p in &self.properties {
            for f in &p.failures {
                let _ = writeln!(out, "FAIL {} #{}: {}", p.id, f.instance.index, f.detail);
            }
        }
        out
    }
}
