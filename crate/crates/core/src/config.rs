//! Run configuration: JSON file plus `key=value` overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::{build_field, NumberField, NumberFieldSpec};
use crate::ideal::{Ideal, PrimeTable};
use crate::psi::{PsiRule, PsiSystem, Support};

pub const CACHE_ENV: &str = "NFVAALER_CACHE";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// ψ override addressed by (norm, index) in canonical ideal order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverrideSpec {
    pub embedding: usize,
    pub norm: u64,
    #[serde(default)]
    pub index: usize,
    pub value: f64,
}

fn yes() -> bool {
    true
}
fn default_samples() -> u64 {
    100_000
}
fn default_cap() -> u64 {
    100_000
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub poly: Vec<i64>,
    #[serde(default = "yes")]
    pub monogenic_asserted: bool,
    #[serde(default)]
    pub psi: Vec<PsiRule>,
    #[serde(default)]
    pub overrides: Vec<OverrideSpec>,
    #[serde(default)]
    pub support: Support,
    #[serde(default = "default_samples")]
    pub mc_samples: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_cap")]
    pub enumeration_cap: u64,
    #[serde(default)]
    pub cache_path: Option<PathBuf>,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub workers: Option<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::ConfigInvalid(msg.into())
}

impl RunConfig {
    /// Parse a JSON document, apply `key=value` overrides (values are read
    /// as JSON when they parse, as strings otherwise) and validate.
    pub fn from_json(text: &str, sets: &[String]) -> Result<RunConfig> {
        let mut doc: Value = serde_json::from_str(text).map_err(|e| invalid(format!("config is not valid JSON: {e}")))?;
        let obj: &mut Map<String, Value> = doc.as_object_mut().ok_or_else(|| invalid("config must be a JSON object"))?;
        for s in sets {
            let (k, v) = s.split_once('=').ok_or_else(|| invalid(format!("--set expects key=value, got '{s}'")))?;
            let v = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
            obj.insert(k.trim().to_string(), v);
        }
        let cfg: RunConfig = serde_json::from_value(doc).map_err(|e| invalid(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path, sets: &[String]) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read config {}: {e}", path.display())))?;
        RunConfig::from_json(&text, sets)
    }

    fn validate(&self) -> Result<()> {
        if self.mc_samples == 0 {
            return Err(invalid("mc_samples must be positive"));
        }
        if self.enumeration_cap == 0 {
            return Err(invalid("enumeration_cap must be positive"));
        }
        if self.workers == Some(0) {
            return Err(invalid("workers must be positive"));
        }
        Ok(())
    }

    pub fn field(&self) -> Result<NumberField> {
        let spec = NumberFieldSpec { coefficients: self.poly.clone(), monogenic_asserted: self.monogenic_asserted };
        build_field(&spec)
    }

    /// The environment variable wins over the config key.
    pub fn cache_path(&self) -> Option<PathBuf> {
        std::env::var_os(CACHE_ENV).map(PathBuf::from).or_else(|| self.cache_path.clone())
    }

    pub fn prime_table(&self, field: &NumberField) -> Result<PrimeTable> {
        match self.cache_path() {
            Some(p) => PrimeTable::with_cache(field, p),
            None => Ok(PrimeTable::new(field)),
        }
    }

    pub fn psi_system(&self, field: &NumberField, table: &PrimeTable) -> Result<PsiSystem> {
        if self.psi.is_empty() {
            return Err(invalid("psi: this command needs at least one psi rule"));
        }
        let mut sys = PsiSystem::new(field.signature(), self.psi.clone())?.with_support(self.support.clone());
        for o in &self.overrides {
            let a = ideal_by_index(table, o.norm, o.index)
                .map_err(|_| invalid(format!("overrides: no ideal with norm {} and index {}", o.norm, o.index)))?;
            sys = sys.with_override(o.embedding, a, o.value)?;
        }
        Ok(sys)
    }
}

/// The `index`-th ideal of norm exactly `norm` in canonical order.
pub fn ideal_by_index(table: &PrimeTable, norm: u64, index: usize) -> Result<Ideal> {
    if norm == 0 {
        return Err(Error::InvalidArgument("ideal norm must be positive".into()));
    }
    let same: Vec<Ideal> = table.enumerate_ideals(norm, false).into_iter().filter(|a| a.norm() == norm).collect();
    let count = same.len();
    same.into_iter().nth(index).ok_or_else(|| {
        Error::InvalidArgument(format!("no ideal with norm {norm} and index {index} ({count} of that norm)"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let c = RunConfig::from_json(r#"{"poly": [1, 0, 1]}"#, &[]).unwrap();
        assert_eq!((c.mc_samples, c.seed, c.enumeration_cap, c.output), (100_000, 0, 100_000, OutputFormat::Csv));
        assert!(c.monogenic_asserted && c.psi.is_empty());
        let c = RunConfig::from_json(
            r#"{"poly": [1, 0, 1], "psi": [{"embedding": 0, "c": 0.25, "e": 2.0}]}"#,
            &["seed=7".into(), "output=json".into()],
        )
        .unwrap();
        assert_eq!((c.seed, c.output), (7, OutputFormat::Json));
    }

    #[test]
    fn rejects_bad_input() {
        let err = RunConfig::from_json(r#"{"poly": [1, 0, 1], "colour": 3}"#, &[]).unwrap_err();
        assert!(matches!(&err, Error::ConfigInvalid(m) if m.contains("colour")));
        assert!(RunConfig::from_json(r#"{"poly": [1, 0, 1], "mc_samples": 0}"#, &[]).is_err());
        assert!(RunConfig::from_json(r#"{"poly": [1, 0, 1]}"#, &["seed".into()]).is_err());
        assert!(RunConfig::from_json("[1]", &[]).is_err());
    }

    #[test]
    fn support_and_overrides_resolve() {
        let c = RunConfig::from_json(
            r#"{"poly": [1, 0, 1], "psi": [{"embedding": 0, "c": 1, "e": 2}],
                "overrides": [{"embedding": 0, "norm": 5, "index": 1, "value": 0.5}],
                "support": {"norm_min": 1, "norm_max": 10}}"#,
            &[],
        )
        .unwrap();
        let k = c.field().unwrap();
        let t = PrimeTable::new(&k);
        let sys = c.psi_system(&k, &t).unwrap();
        assert_eq!(sys.eval(0, &ideal_by_index(&t, 5, 1).unwrap()), 0.5);
        assert_eq!(sys.eval(0, &ideal_by_index(&t, 5, 0).unwrap()), 1.0 / 25.0);
        assert_eq!(sys.eval(0, &ideal_by_index(&t, 13, 0).unwrap()), 0.0);
        assert!(ideal_by_index(&t, 3, 0).is_err());
    }
}
