use serde::{Deserialize, Serialize};

use super::gen::GeneratorConfig;
use crate::error::{Error, Result};
use crate::settings::Settings;

/// Suite configuration, also the JSON file format read by `fincat suite`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// Random spaces; `generator.seed` seeds the whole run and
    /// `generator.pointed` selects the pointed flavor.
    pub generator: GeneratorConfig,
    /// Factor size for properties that square products of products.
    pub small_points: usize,
    pub instances: usize,
    /// Property ids to run; `None` runs the whole catalog.
    pub properties: Option<Vec<String>>,
    /// Skip instances failing the normality hypothesis of a property.
    pub normality_filter: bool,
    /// Catalog spaces used, in order, for the first instances of every
    /// property that draws spaces.
    pub inject: Vec<String>,
    pub settings: Settings,
    /// Re-check every certificate with the independent checker.
    pub verify_certificates: bool,
    /// Failures kept per property.
    pub max_failures: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            generator: GeneratorConfig::default(),
            small_points: 3,
            instances: 100,
            properties: None,
            normality_filter: true,
            inject: Vec::new(),
            settings: Settings::default(),
            verify_certificates: true,
            max_failures: 5,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<SuiteConfig> {
        let cfg: SuiteConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let ids = super::property_ids();
        for p in self.properties.iter().flatten() {
            if !ids.contains(&p.as_str()) {
                return Err(Error::Invalid(format!("unknown property `{p}`")));
            }
        }
        for name in &self.inject {
            crate::catalog::space(name)?;
        }
        if self.generator.max_points == 0 || self.small_points == 0 {
            return Err(Error::Invalid("space sizes must be positive".into()));
        }
        Ok(())
    }
}
