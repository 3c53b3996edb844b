//! Run-configuration files: `key = value` lines, `#` comments.
//!
//! Keys are the lower_snake_case field names of the parameter records;
//! anything else is an error naming the line and key. Absent keys fall back
//! to defaults, which the caller prints in the run header.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use jchmf::meanfield::MinimizeSettings;
use jchmf::model::{GeometryParams, ParamError, SystemParams};
use jchmf::sweep::SweepSpec;

/// Keys accepted by lattice-run configs.
pub const SYSTEM_KEYS: &[&str] = &[
    "omega_r", "delta", "g", "eta", "d_zfs", "gamma_e", "b_z", "mu", "k", "z", "alpha",
    "gamma_qubit", "kappa", "n_max",
];
pub const SETTINGS_KEYS: &[&str] =
    &["psi_max", "coarse_points", "refine_tol", "truncation_guard", "sf_threshold"];
pub const SWEEP_KEYS: &[&str] = &["mu_min", "mu_max", "mu_points", "k_min", "k_max", "k_points"];

/// Keys accepted by geometry configs (for coupling derivation).
pub const GEOMETRY_KEYS: &[&str] =
    &["l_r", "omega_r_si", "i_p", "r", "d", "z_0", "c_hop", "c_out"];

#[derive(Debug)]
pub enum ConfigError {
    Io { path: String, source: std::io::Error },
    /// A line that is not `key = value` nor blank nor a comment.
    Syntax { line: usize, message: String },
    UnknownKey { line: usize, key: String },
    DuplicateKey { line: usize, key: String },
    /// Present key with a missing or unparsable value.
    InvalidValue { line: usize, key: String, message: String },
    /// A parameter record rejected the assembled values.
    Invalid(ParamError),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io { path, source } => write!(f, "cannot read config {path}: {source}"),
            ConfigError::Syntax { line, message } => {
                write!(f, "config line {line}: {message}")
            }
            ConfigError::UnknownKey { line, key } => {
                write!(f, "config line {line}: unknown key `{key}`")
            }
            ConfigError::DuplicateKey { line, key } => {
                write!(f, "config line {line}: duplicate key `{key}`")
            }
            ConfigError::InvalidValue { line, key, message } => {
                write!(f, "config line {line}: key `{key}`: {message}")
            }
            ConfigError::Invalid(e) => write!(f, "config value rejected: {e}"),
        }
    }
}

impl std::error::Error for ConfigError {}

impl From<ParamError> for ConfigError {
    fn from(e: ParamError) -> Self {
        ConfigError::Invalid(e)
    }
}

/// Raw parsed assignments: key → (line, value text).
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    entries: BTreeMap<String, (usize, String)>,
}

impl RawConfig {
    /// Parse a config file; every diagnostic names the line and key.
    pub fn from_path(path: &Path) -> Result<RawConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_str_source(&text)
    }

    pub fn from_str_source(text: &str) -> Result<RawConfig, ConfigError> {
        let mut entries = BTreeMap::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some(eq) = line.find('=') else {
                return Err(ConfigError::Syntax {
                    line: line_no,
                    message: format!("expected `key = value`, got `{line}`"),
                });
            };
            let key = line[..eq].trim().to_string();
            let value = line[eq + 1..].trim().to_string();
            if key.is_empty() {
                return Err(ConfigError::Syntax {
                    line: line_no,
                    message: "empty key before `=`".to_string(),
                });
            }
            if value.is_empty() {
                return Err(ConfigError::InvalidValue {
                    line: line_no,
                    key,
                    message: "missing value after `=`".to_string(),
                });
            }
            if let Some((first_line, _)) = entries.get(&key) {
                let _ = first_line;
                return Err(ConfigError::DuplicateKey { line: line_no, key });
            }
            entries.insert(key, (line_no, value));
        }
        Ok(RawConfig { entries })
    }

    fn reject_unknown(&self, allowed: &[&[&str]]) -> Result<(), ConfigError> {
        for (key, (line, _)) in &self.entries {
            if !allowed.iter().any(|set| set.contains(&key.as_str())) {
                return Err(ConfigError::UnknownKey { line: *line, key: key.clone() });
            }
        }
        Ok(())
    }

    fn take_f64(&self, key: &'static str, slot: &mut f64, defaults: &mut Vec<(String, String)>) -> Result<(), ConfigError> {
        match self.entries.get(key) {
            Some((line, text)) => {
                *slot = text.parse::<f64>().map_err(|e| ConfigError::InvalidValue {
                    line: *line,
                    key: key.to_string(),
                    message: format!("not a number: {e}"),
                })?;
                Ok(())
            }
            None => {
                defaults.push((key.to_string(), format!("{}", slot)));
                Ok(())
            }
        }
    }

    fn take_usize(&self, key: &'static str, slot: &mut usize, defaults: &mut Vec<(String, String)>) -> Result<(), ConfigError> {
        match self.entries.get(key) {
            Some((line, text)) => {
                *slot = text.parse::<usize>().map_err(|e| ConfigError::InvalidValue {
                    line: *line,
                    key: key.to_string(),
                    message: format!("not a nonnegative integer: {e}"),
                })?;
                Ok(())
            }
            None => {
                defaults.push((key.to_string(), format!("{}", slot)));
                Ok(())
            }
        }
    }

    fn take_u32(&self, key: &'static str, slot: &mut u32, defaults: &mut Vec<(String, String)>) -> Result<(), ConfigError> {
        match self.entries.get(key) {
            Some((line, text)) => {
                *slot = text.parse::<u32>().map_err(|e| ConfigError::InvalidValue {
                    line: *line,
                    key: key.to_string(),
                    message: format!("not a nonnegative integer: {e}"),
                })?;
                Ok(())
            }
            None => {
                defaults.push((key.to_string(), format!("{}", slot)));
                Ok(())
            }
        }
    }
}

/// A fully resolved lattice run: parameters, minimizer settings, sweep
/// window, and the list of defaulted keys for the run header.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: SystemParams,
    pub settings: MinimizeSettings,
    pub sweep: SweepSpec,
    /// (key, value) pairs that fell back to defaults.
    pub defaulted: Vec<(String, String)>,
}

impl RunConfig {
    pub fn from_path(path: &Path) -> Result<RunConfig, ConfigError> {
        let raw = RawConfig::from_path(path)?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawConfig) -> Result<RunConfig, ConfigError> {
        raw.reject_unknown(&[SYSTEM_KEYS, SETTINGS_KEYS, SWEEP_KEYS])?;
        let mut defaults = Vec::new();

        let mut p = SystemParams::default();
        raw.take_f64("omega_r", &mut p.omega_r, &mut defaults)?;
        raw.take_f64("delta", &mut p.delta, &mut defaults)?;
        raw.take_f64("g", &mut p.g, &mut defaults)?;
        raw.take_f64("eta", &mut p.eta, &mut defaults)?;
        raw.take_f64("d_zfs", &mut p.d_zfs, &mut defaults)?;
        raw.take_f64("gamma_e", &mut p.gamma_e, &mut defaults)?;
        raw.take_f64("b_z", &mut p.b_z, &mut defaults)?;
        raw.take_f64("mu", &mut p.mu, &mut defaults)?;
        raw.take_f64("k", &mut p.k, &mut defaults)?;
        raw.take_u32("z", &mut p.z, &mut defaults)?;
        raw.take_f64("alpha", &mut p.alpha, &mut defaults)?;
        raw.take_f64("gamma_qubit", &mut p.gamma_qubit, &mut defaults)?;
        raw.take_f64("kappa", &mut p.kappa, &mut defaults)?;
        raw.take_usize("n_max", &mut p.n_max, &mut defaults)?;
        p.validate()?;

        // psi_max's default tracks the configured truncation.
        let mut st = MinimizeSettings::for_truncation(p.n_max);
        raw.take_f64("psi_max", &mut st.psi_max, &mut defaults)?;
        raw.take_usize("coarse_points", &mut st.coarse_points, &mut defaults)?;
        raw.take_f64("refine_tol", &mut st.refine_tol, &mut defaults)?;
        raw.take_f64("truncation_guard", &mut st.truncation_guard, &mut defaults)?;
        raw.take_f64("sf_threshold", &mut st.sf_threshold, &mut defaults)?;
        st.validate()?;

        // Default window: the resonant first lobe.
        let mut sweep = SweepSpec {
            mu_min: 198.95,
            mu_max: 199.7,
            mu_points: 100,
            k_min: 5e-4,
            k_max: 0.05,
            k_points: 100,
            base_params: p.clone(),
            settings: st.clone(),
        };
        raw.take_f64("mu_min", &mut sweep.mu_min, &mut defaults)?;
        raw.take_f64("mu_max", &mut sweep.mu_max, &mut defaults)?;
        raw.take_usize("mu_points", &mut sweep.mu_points, &mut defaults)?;
        raw.take_f64("k_min", &mut sweep.k_min, &mut defaults)?;
        raw.take_f64("k_max", &mut sweep.k_max, &mut defaults)?;
        raw.take_usize("k_points", &mut sweep.k_points, &mut defaults)?;

        Ok(RunConfig { params: p, settings: st, sweep, defaulted: defaults })
    }

    /// Validate the sweep window too (commands that sweep call this).
    pub fn validate_sweep(&self) -> Result<(), ConfigError> {
        self.sweep.validate()?;
        Ok(())
    }
}

/// A resolved geometry config for coupling derivation.
#[derive(Debug, Clone)]
pub struct GeometryConfig {
    pub geometry: GeometryParams,
    pub defaulted: Vec<(String, String)>,
}

impl GeometryConfig {
    pub fn from_path(path: &Path) -> Result<GeometryConfig, ConfigError> {
        let raw = RawConfig::from_path(path)?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawConfig) -> Result<GeometryConfig, ConfigError> {
        raw.reject_unknown(&[GEOMETRY_KEYS])?;
        let mut defaults = Vec::new();
        let mut geom = jchmf::model::reference_geometry();
        raw.take_f64("l_r", &mut geom.l_r, &mut defaults)?;
        raw.take_f64("omega_r_si", &mut geom.omega_r_si, &mut defaults)?;
        raw.take_f64("i_p", &mut geom.i_p, &mut defaults)?;
        raw.take_f64("r", &mut geom.r, &mut defaults)?;
        raw.take_f64("d", &mut geom.d, &mut defaults)?;
        raw.take_f64("z_0", &mut geom.z_0, &mut defaults)?;
        raw.take_f64("c_hop", &mut geom.c_hop, &mut defaults)?;
        raw.take_f64("c_out", &mut geom.c_out, &mut defaults)?;
        geom.validate()?;
        Ok(GeometryConfig { geometry: geom, defaulted: defaults })
    }
}

/// Apply `key=value[,key=value...]` overrides to a sweep: system keys move
/// the parameters, sweep-window keys move the window (so flux families can
/// carry per-variant k ranges, rescaled by 1/cos 2πα). Used by the
/// boundary-variant flag.
pub fn apply_variant(base: &SweepSpec, overrides: &str) -> Result<SweepSpec, ConfigError> {
    let mut spec = base.clone();
    for (idx, assign) in overrides.split(',').enumerate() {
        let pos = idx + 1;
        let Some(eq) = assign.find('=') else {
            return Err(ConfigError::Syntax {
                line: pos,
                message: format!("variant assignment `{assign}` is not `key=value`"),
            });
        };
        let key = assign[..eq].trim();
        let value = assign[eq + 1..].trim();
        let parse_f64 = |v: &str| -> Result<f64, ConfigError> {
            v.parse::<f64>().map_err(|e| ConfigError::InvalidValue {
                line: pos,
                key: key.to_string(),
                message: format!("not a number: {e}"),
            })
        };
        let parse_usize = |v: &str| -> Result<usize, ConfigError> {
            v.parse::<usize>().map_err(|e| ConfigError::InvalidValue {
                line: pos,
                key: key.to_string(),
                message: format!("not a nonnegative integer: {e}"),
            })
        };
        let p = &mut spec.base_params;
        match key {
            "omega_r" => p.omega_r = parse_f64(value)?,
            "delta" => p.delta = parse_f64(value)?,
            "g" => p.g = parse_f64(value)?,
            "eta" => p.eta = parse_f64(value)?,
            "d_zfs" => p.d_zfs = parse_f64(value)?,
            "gamma_e" => p.gamma_e = parse_f64(value)?,
            "b_z" => p.b_z = parse_f64(value)?,
            "mu" => p.mu = parse_f64(value)?,
            "k" => p.k = parse_f64(value)?,
            "z" => {
                p.z = value.parse::<u32>().map_err(|e| ConfigError::InvalidValue {
                    line: pos,
                    key: key.to_string(),
                    message: format!("not a nonnegative integer: {e}"),
                })?
            }
            "alpha" => p.alpha = parse_f64(value)?,
            "gamma_qubit" => p.gamma_qubit = parse_f64(value)?,
            "kappa" => p.kappa = parse_f64(value)?,
            "n_max" => p.n_max = parse_usize(value)?,
            "mu_min" => spec.mu_min = parse_f64(value)?,
            "mu_max" => spec.mu_max = parse_f64(value)?,
            "mu_points" => spec.mu_points = parse_usize(value)?,
            "k_min" => spec.k_min = parse_f64(value)?,
            "k_max" => spec.k_max = parse_f64(value)?,
            "k_points" => spec.k_points = parse_usize(value)?,
            _ => return Err(ConfigError::UnknownKey { line: pos, key: key.to_string() }),
        }
    }
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values_and_reports_defaults() {
        let raw = RawConfig::from_str_source(
            "# a comment\n\
             delta = 1.5\n\
             mu_points = 7  # inline comment\n\
             k = 2.5e-2\n",
        )
        .unwrap();
        let cfg = RunConfig::from_raw(&raw).unwrap();
        assert_eq!(cfg.params.delta, 1.5);
        assert_eq!(cfg.params.k, 0.025);
        assert_eq!(cfg.sweep.mu_points, 7);
        assert!(cfg.defaulted.iter().any(|(k, _)| k == "g"));
        assert!(!cfg.defaulted.iter().any(|(k, _)| k == "delta"));
    }

    #[test]
    fn unknown_key_names_line_and_key() {
        let raw = RawConfig::from_str_source("delta = 1\nbogus = 2\n").unwrap();
        match RunConfig::from_raw(&raw) {
            Err(ConfigError::UnknownKey { line: 2, key }) => assert_eq!(key, "bogus"),
            other => panic!("expected UnknownKey at line 2, got {other:?}"),
        }
    }

    #[test]
    fn missing_value_names_line_and_key() {
        let err = RawConfig::from_str_source("g =\n").unwrap_err();
        match err {
            ConfigError::InvalidValue { line: 1, key, .. } => assert_eq!(key, "g"),
            other => panic!("expected InvalidValue for g, got {other:?}"),
        }
    }

    #[test]
    fn bad_number_names_line_and_key() {
        let raw = RawConfig::from_str_source("\n\nkappa = banana\n").unwrap();
        match RunConfig::from_raw(&raw) {
            Err(ConfigError::InvalidValue { line: 3, key, .. }) => assert_eq!(key, "kappa"),
            other => panic!("expected InvalidValue at line 3, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_key_rejected() {
        let err = RawConfig::from_str_source("g = 1\ng = 2\n").unwrap_err();
        assert!(matches!(err, ConfigError::DuplicateKey { line: 2, .. }));
    }

    #[test]
    fn psi_max_default_tracks_n_max() {
        let raw = RawConfig::from_str_source("n_max = 16\n").unwrap();
        let cfg = RunConfig::from_raw(&raw).unwrap();
        assert!((cfg.settings.psi_max - (16.0f64).sqrt() / 3.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_model_values_are_config_errors() {
        let raw = RawConfig::from_str_source("g = 0\n").unwrap();
        assert!(matches!(RunConfig::from_raw(&raw), Err(ConfigError::Invalid(_))));
    }

    #[test]
    fn variant_overrides() {
        let raw = RawConfig::from_str_source("").unwrap();
        let base = RunConfig::from_raw(&raw).unwrap().sweep;
        let spec = apply_variant(&base, "delta=-2, alpha = 0.2, k_max=0.2").unwrap();
        assert_eq!(spec.base_params.delta, -2.0);
        assert_eq!(spec.base_params.alpha, 0.2);
        assert_eq!(spec.k_max, 0.2);
        assert!(matches!(
            apply_variant(&base, "nope=1"),
            Err(ConfigError::UnknownKey { .. })
        ));
        // Invalid window combinations are rejected through validation.
        assert!(matches!(
            apply_variant(&base, "k_max=0"),
            Err(ConfigError::Invalid(_))
        ));
    }

    #[test]
    fn geometry_config_rejects_lattice_keys() {
        let raw = RawConfig::from_str_source("delta = 1\n").unwrap();
        assert!(matches!(
            GeometryConfig::from_raw(&raw),
            Err(ConfigError::UnknownKey { .. })
        ));
    }
}
