//! Run configuration: defaults, key=value config files, flag overrides.

use anyhow::{bail, Context, Result};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => bail!("unknown output format {other:?} (expected json or csv)"),
        }
    }
}

/// Knobs shared by every subcommand.  A config file holds `key=value` lines
/// (`#` comments allowed); command-line flags override file entries.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub truncation: usize,
    pub prime_bound: u64,
    pub tolerance: f64,
    pub precision_cap: u32,
    pub seed: u64,
    pub format: OutputFormat,
    pub emit_seed_header: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            truncation: 100,
            prime_bound: 100,
            tolerance: 1e-9,
            precision_cap: 256,
            seed: 0x0e7a,
            format: OutputFormat::Json,
            emit_seed_header: true,
        }
    }
}

impl RunConfig {
    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("line {} is not key=value: {line:?}", lineno + 1))?;
            self.set(key.trim(), value.trim())
                .with_context(|| format!("config line {}", lineno + 1))?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "n" | "truncation" => self.truncation = value.parse()?,
            "prime_bound" => self.prime_bound = value.parse()?,
            "tolerance" => self.tolerance = value.parse()?,
            "precision_cap" => self.precision_cap = value.parse()?,
            "seed" => self.seed = value.parse()?,
            "format" => self.format = OutputFormat::parse(value)?,
            "emit_seed_header" => self.emit_seed_header = value.parse()?,
            other => bail!("unknown config key {other:?}"),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-3) {
            bail!("tolerance must lie in (0, 1e-3], got {}", self.tolerance);
        }
        if self.truncation == 0 {
            bail!("truncation must be at least 1");
        }
        Ok(())
    }

    /// Header pairs recorded at the top of every output.
    pub fn header(&self) -> Vec<(String, String)> {
        vec![
            ("seed".into(), self.seed.to_string()),
            ("n".into(), self.truncation.to_string()),
            ("tolerance".into(), format!("{:e}", self.tolerance)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flag_override() {
        let dir = std::env::temp_dir().join("etaconv-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        std::fs::write(&path, "# comment\nn=500\nseed=9\nformat=csv\n").unwrap();
        let mut cfg = RunConfig::default();
        cfg.load_file(&path).unwrap();
        assert_eq!(cfg.truncation, 500);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.format, OutputFormat::Csv);
        cfg.set("n", "42").unwrap();
        assert_eq!(cfg.truncation, 42);
    }

    #[test]
    fn tolerance_bounds_enforced() {
        let mut cfg = RunConfig::default();
        cfg.set("tolerance", "0.01").unwrap();
        assert!(cfg.validate().is_err());
        cfg.set("tolerance", "1e-6").unwrap();
        assert!(cfg.validate().is_ok());
    }
}
