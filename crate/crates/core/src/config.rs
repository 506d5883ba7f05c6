//! Workbench configuration files (TOML).
//!
//! ```toml
//! params = ["p"]
//! output = "json"
//! grading = "affine"
//!
//! [aliases]
//! q = "p^2"
//!
//! [algebra]
//! preset = "quantum-affine"
//! n = 3
//! q = "q"
//! # or: presentation = "algebra.json"
//! ```
//!
//! Parameters are formal symbols. A `[values]` table assigning numbers to
//! them is rejected. When `params` is absent the `QCOORD_PARAMS` environment
//! variable supplies the default space, in the same `p,q=p^2` syntax as
//! [`parse_param_list`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::expr::parse_scalar;
use crate::grading::GradingPreset;
use crate::pbw::{multiparam_space, preset_algebra, Presentation, PresetKind, QMatrix, QParam};
use crate::scalar::{ParamSpace, ScalarError};

pub const PARAMS_ENV: &str = "QCOORD_PARAMS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("config syntax: {0}")]
    Syntax(String),
    #[error("cannot read `{path}`: {msg}")]
    Io { path: String, msg: String },
    #[error("parameter `{0}` cannot be given a numeric value; parameters are formal")]
    NumericValue(String),
    #[error("alias `{0}` must be a monomial in the declared parameters")]
    BadAlias(String),
    #[error("`[algebra]` needs exactly one of `preset` or `presentation`")]
    AlgebraSource,
    #[error("`n` is required for preset `{0}`")]
    MissingSize(PresetKind),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(ConfigError::Invalid(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    params: Option<Vec<String>>,
    #[serde(default)]
    aliases: BTreeMap<String, String>,
    values: Option<toml::Table>,
    output: Option<String>,
    grading: Option<String>,
    algebra: Option<RawAlgebra>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    preset: Option<String>,
    n: Option<usize>,
    q: Option<String>,
    presentation: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// `q` is a scalar expression, or `generic` for independent `q_ij`.
    Preset {
        kind: PresetKind,
        n: usize,
        q: String,
    },
    Presentation(PathBuf),
}

#[derive(Clone, Debug)]
pub struct WorkbenchConfig {
    pub space: Arc<ParamSpace>,
    pub algebra: Option<AlgebraSource>,
    pub grading: Option<GradingPreset>,
    pub output: OutputFormat,
}

impl Default for WorkbenchConfig {
    fn default() -> Self {
        WorkbenchConfig {
            space: Arc::new(ParamSpace::single_q()),
            algebra: None,
            grading: None,
            output: OutputFormat::Text,
        }
    }
}

/// Parses `p,q=p^2`: comma-separated names, `name=expr` declaring an alias
/// for a monomial in the names before it.
pub fn parse_param_list(text: &str) -> Result<ParamSpace, ConfigError> {
    let mut names = Vec::new();
    let mut aliases = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once('=') {
            Some((a, e)) => aliases.push((a.trim().to_string(), e.trim().to_string())),
            None => names.push(item.to_string()),
        }
    }
    build_space(names, aliases)
}

fn build_space(names: Vec<String>, aliases: Vec<(String, String)>) -> Result<ParamSpace, ConfigError> {
    let mut space = ParamSpace::new(names)?;
    for (name, text) in aliases {
        if text.trim().parse::<f64>().is_ok() {
            return Err(ConfigError::NumericValue(name));
        }
        let value = parse_scalar(&text, &space).map_err(|_| ConfigError::BadAlias(name.clone()))?;
        let (e, c) = value.as_unit().ok_or_else(|| ConfigError::BadAlias(name.clone()))?;
        if !num_traits::One::is_one(c) {
            return Err(ConfigError::BadAlias(name));
        }
        let e = e.to_vec();
        space = space.with_alias(&name, e)?;
    }
    Ok(space)
}

/// The parameter space from `QCOORD_PARAMS`, or `{q}` when unset.
pub fn default_space() -> Result<ParamSpace, ConfigError> {
    match std::env::var(PARAMS_ENV) {
        Ok(text) if !text.trim().is_empty() => parse_param_list(&text),
        _ => Ok(ParamSpace::single_q()),
    }
}

impl WorkbenchConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Syntax(e.message().to_string()))?;
        if let Some(values) = &raw.values {
            if let Some(name) = values.keys().next() {
                return Err(ConfigError::NumericValue(name.clone()));
            }
        }
        let space = match raw.params {
            Some(names) => build_space(names, raw.aliases.into_iter().collect())?,
            None if raw.aliases.is_empty() => default_space()?,
            None => build_space(vec!["q".into()], raw.aliases.into_iter().collect())?,
        };
        let output = raw.output.as_deref().map(str::parse).transpose()?.unwrap_or_default();
        let grading = raw
            .grading
            .as_deref()
            .map(|g| g.parse::<GradingPreset>().map_err(|e| ConfigError::Invalid(e.to_string())))
            .transpose()?;
        let algebra = raw.algebra.map(resolve_algebra).transpose()?;
        Ok(WorkbenchConfig { space: Arc::new(space), algebra, grading, output })
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        let mut cfg = Self::from_toml_str(&text)?;
        // presentation paths are relative to the config file
        if let Some(AlgebraSource::Presentation(p)) = &mut cfg.algebra {
            if p.is_relative() {
                if let Some(dir) = path.parent() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(cfg)
    }

    /// Builds the configured algebra, if any.
    pub fn build_algebra(&self) -> Result<Option<Arc<Presentation>>, ConfigError> {
        match &self.algebra {
            None => Ok(None),
            Some(AlgebraSource::Presentation(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError::Io { path: path.display().to_string(), msg: e.to_string() })?;
                Presentation::from_json_str(&text).map(Some).map_err(|e| ConfigError::Invalid(e.to_string()))
            }
            Some(AlgebraSource::Preset { kind, n, q }) => build_preset(&self.space, *kind, *n, q).map(Some),
        }
    }
}

fn resolve_algebra(raw: RawAlgebra) -> Result<AlgebraSource, ConfigError> {
    match (raw.preset, raw.presentation) {
        (Some(p), None) => {
            let kind: PresetKind = p.parse().map_err(|e: crate::pbw::PbwError| ConfigError::Invalid(e.to_string()))?;
            let n = match kind {
                PresetKind::QuantumPlane => raw.n.unwrap_or(2),
                _ => raw.n.ok_or(ConfigError::MissingSize(kind))?,
            };
            Ok(AlgebraSource::Preset { kind, n, q: raw.q.unwrap_or_else(|| "q".into()) })
        }
        (None, Some(path)) => Ok(AlgebraSource::Presentation(path)),
        _ => Err(ConfigError::AlgebraSource),
    }
}

/// A preset over `space`; `q = "generic"` switches to the space of
/// independent `q_ij`.
pub fn build_preset(
    space: &Arc<ParamSpace>,
    kind: PresetKind,
    n: usize,
    q: &str,
) -> Result<Arc<Presentation>, ConfigError> {
    let invalid = |e: crate::pbw::PbwError| ConfigError::Invalid(e.to_string());
    if q == "generic" {
        let generic = Arc::new(multiparam_space(n));
        let m = QMatrix::generic(&generic, n).map_err(invalid)?;
        return preset_algebra(&generic, PresetKind::QuantumAffineMultiparam, n, &QParam::Matrix(m)).map_err(invalid);
    }
    if q.trim().parse::<f64>().is_ok() {
        return Err(ConfigError::NumericValue(q.to_string()));
    }
    let value = parse_scalar(q, space).map_err(|e| ConfigError::Invalid(e.to_string()))?;
    preset_algebra(space, kind, n, &QParam::Single(value)).map_err(invalid)
}
