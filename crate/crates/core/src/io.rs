//! Readers and writers for the JSON and CSV input formats.
//!
//! JSON: `{"p": [...]}` for a distribution, `{"rows": [[...], ...]}` for a
//! joint. CSV: one distribution per line, or one joint row per line. Every
//! value read goes through the usual validation.

use std::path::Path;

use crate::distributions::{Distribution, JointDistribution};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    /// `.json` files are JSON, everything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_lines(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut lines = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let values = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {}: {field:?} is not a number", i + 1)))
            })
            .collect::<Result<Vec<f64>>>()?;
        lines.push(values);
    }
    Ok(lines)
}

/// All distributions in `text`. JSON holds exactly one.
pub fn parse_distributions(text: &str, format: Format) -> Result<Vec<Distribution>> {
    match format {
        Format::Json => Ok(vec![parse_json(text)?]),
        Format::Csv => {
            let lines = csv_lines(text)?;
            if lines.is_empty() {
                return Err(Error::Parse("no distributions in input".into()));
            }
            lines.into_iter().map(Distribution::new).collect()
        }
    }
}

pub fn parse_joint(text: &str, format: Format) -> Result<JointDistribution> {
    match format {
        Format::Json => parse_json(text),
        Format::Csv => JointDistribution::new(csv_lines(text)?),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_distributions(path: &Path, format: Option<Format>) -> Result<Vec<Distribution>> {
    parse_distributions(
        &read(path)?,
        format.unwrap_or_else(|| Format::from_path(path)),
    )
}

pub fn read_joint(path: &Path, format: Option<Format>) -> Result<JointDistribution> {
    parse_joint(
        &read(path)?,
        format.unwrap_or_else(|| Format::from_path(path)),
    )
}

pub fn distribution_to_json(d: &Distribution) -> String {
    serde_json::to_string(d).expect("distribution serializes")
}

pub fn distribution_to_csv(d: &Distribution) -> String {
    let fields: Vec<String> = d.probs().iter().map(|p| p.to_string()).collect();
    fields.join(",") + "\n"
}
