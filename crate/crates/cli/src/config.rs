//! Settings merged from defaults, an optional `key=value` file and flags.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            _ => bail!("unknown format {s:?}; expected json, csv or text"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub prec: usize,
    pub pmax: u64,
    pub radius: u32,
    pub format: Option<Format>,
    pub tolerance: f64,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            prec: 64,
            pmax: 1000,
            radius: 40,
            format: None,
            tolerance: 1e-6,
        }
    }
}

fn positive<T: FromStr + PartialOrd + Default>(key: &str, value: &str) -> anyhow::Result<T>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    let v: T = value
        .parse()
        .with_context(|| format!("bad value for {key}: {value:?}"))?;
    if v <= T::default() {
        bail!("{key} must be positive");
    }
    Ok(v)
}

impl CliConfig {
    /// Applies `key=value` lines; `#` starts a comment.
    pub fn merge_file(&mut self, path: &Path) -> anyhow::Result<()> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("{}:{}: expected key=value", path.display(), lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "prec" => self.prec = positive(key, value)?,
                "pmax" => self.pmax = positive(key, value)?,
                "radius" => self.radius = positive(key, value)?,
                "tolerance" => self.tolerance = positive(key, value)?,
                "format" => self.format = Some(value.parse()?),
                _ => bail!("{}:{}: unknown key {key:?}", path.display(), lineno + 1),
            }
        }
        Ok(())
    }
}
