//! JSON catalog documents: the on-disk format behind `--out` and the cache.
//! Deterministic by construction — payload arrays carry a fixed sort order,
//! eigenvalues are rounded to 12 significant digits, and the timestamp is
//! derived from SOURCE_DATE_EPOCH (fixed epoch when unset) so identical
//! inputs serialize to identical bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest dimension any command accepts.
pub const MAX_DIMENSION: u64 = 19;

/// Slack used when checking that census rows are sorted; spectra sharing
/// leading eigenvalues are ordered by their first well-separated component.
pub const SPECTRUM_SORT_SLACK: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error("dimension {0} is not an odd prime ≤ {MAX_DIMENSION}")]
    BadDimension(u64),
    #[error("unknown group {0:?}")]
    BadGroup(String),
    #[error("payload is not sorted deterministically: {0}")]
    Unsorted(&'static str),
    #[error("payload value out of range: {0}")]
    OutOfRange(&'static str),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub label: String,
    pub det: i8,
    pub trace: u64,
    pub class_kind: String,
    pub size: u64,
    pub order: u64,
    pub representative: [[u64; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPointsRow {
    pub label: String,
    pub det: i8,
    pub trace: u64,
    pub class_kind: String,
    pub size: u64,
    pub order: u64,
    pub fixed_phase_points: u64,
    pub fixed_nets: u64,
    pub fixed_planes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub size: u64,
    pub representative: Vec<u64>,
    pub representative_index: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitCatalogDoc {
    pub method: String,
    pub orbit_count: u64,
    pub total_planes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitRow>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub eigenvalues: Vec<f64>,
    pub count: u64,
    pub example_plane: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum CatalogBody {
    ClassTable(Vec<ClassRow>),
    FixedPoints(Vec<FixedPointsRow>),
    OrbitCatalog(OrbitCatalogDoc),
    SpectraCensus(Vec<SpectrumRow>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub schema_version: u32,
    pub n: u64,
    pub group: String,
    #[serde(flatten)]
    pub body: CatalogBody,
    pub tool_version: String,
    pub timestamp: String,
}

impl CatalogFile {
    pub fn new(n: u64, group: &str, body: CatalogBody) -> CatalogFile {
        CatalogFile {
            schema_version: SCHEMA_VERSION,
            n,
            group: group.to_string(),
            body,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: deterministic_timestamp(),
        }
    }

    pub fn from_json(s: &str) -> Result<CatalogFile, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("catalog serializes");
        out.push('\n');
        out
    }

    /// Structural validation beyond what deserialization enforces: schema
    /// version, dimension, group tag, and the deterministic payload order.
    pub fn validate(&self) -> Result<(), CatalogError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::SchemaVersion(self.schema_version));
        }
        if self.n > MAX_DIMENSION || Field::new(self.n).is_err() {
            return Err(CatalogError::BadDimension(self.n));
        }
        if self.group != "sl" && self.group != "esl" {
            return Err(CatalogError::BadGroup(self.group.clone()));
        }
        let n = self.n;
        match &self.body {
            CatalogBody::ClassTable(rows) => {
                validate_class_keys(
                    rows.iter().map(|r| (r.det, r.trace, r.class_kind.as_str())),
                    n,
                )?;
                for r in rows {
                    if r.representative.iter().flatten().any(|&v| v >= n) {
                        return Err(CatalogError::OutOfRange("representative entry"));
                    }
                }
            }
            CatalogBody::FixedPoints(rows) => {
                validate_class_keys(
                    rows.iter().map(|r| (r.det, r.trace, r.class_kind.as_str())),
                    n,
                )?;
            }
            CatalogBody::OrbitCatalog(doc) => {
                if doc.method != "burnside" && doc.method != "explicit" {
                    return Err(CatalogError::OutOfRange("method"));
                }
                if let Some(orbits) = &doc.orbits {
                    if orbits.len() as u64 != doc.orbit_count {
                        return Err(CatalogError::OutOfRange("orbit_count"));
                    }
                    let mut prev: Option<(u64, u64)> = None;
                    for o in orbits {
                        if o.representative.iter().any(|&v| v >= n) {
                            return Err(CatalogError::OutOfRange("plane label entry"));
                        }
                        let key = (o.size, o.representative_index);
                        if let Some(p) = prev {
                            if key < p {
                                return Err(CatalogError::Unsorted(
                                    "orbits by (size, representative)",
                                ));
                            }
                        }
                        prev = Some(key);
                    }
                }
            }
            CatalogBody::SpectraCensus(rows) => {
                let mut prev: Option<&[f64]> = None;
                for r in rows {
                    if r.eigenvalues.len() as u64 != n {
                        return Err(CatalogError::OutOfRange("eigenvalue count"));
                    }
                    if r.eigenvalues.iter().any(|v| !v.is_finite()) {
                        return Err(CatalogError::OutOfRange("non-finite eigenvalue"));
                    }
                    if r.example_plane.iter().any(|&v| v >= n) {
                        return Err(CatalogError::OutOfRange("plane label entry"));
                    }
                    if let Some(p) = prev {
                        // rows are sorted up to the census clustering slack
                        if crate::spectra::spectrum_cmp(&r.eigenvalues, p, SPECTRUM_SORT_SLACK)
                            == std::cmp::Ordering::Less
                        {
                            return Err(CatalogError::Unsorted("spectra by eigenvalues"));
                        }
                    }
                    prev = Some(&r.eigenvalues);
                }
            }
        }
        Ok(())
    }
}

fn validate_class_keys<'a>(
    keys: impl Iterator<Item = (i8, u64, &'a str)>,
    n: u64,
) -> Result<(), CatalogError> {
    let mut prev: Option<(i8, u64, u8)> = None;
    for (det, trace, kind) in keys {
        if det != 1 && det != -1 {
            return Err(CatalogError::OutOfRange("class determinant"));
        }
        if trace >= n {
            return Err(CatalogError::OutOfRange("class trace"));
        }
        let kind_rank = match kind {
            "standard" => 0,
            "barred" => 1,
            "scalar" => 2,
            _ => return Err(CatalogError::OutOfRange("class kind")),
        };
        let key = (if det == 1 { 0 } else { 1 }, trace, kind_rank);
        if let Some(p) = prev {
            if key < p {
                return Err(CatalogError::Unsorted("classes by (det, trace, kind)"));
            }
        }
        prev = Some(key);
    }
    Ok(())
}

/// Round to 12 significant digits; the census prints well past the five
/// published decimals but below double-precision noise.
pub fn round_eigenvalue(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// RFC3339 timestamp from SOURCE_DATE_EPOCH, or the fixed epoch when the
/// variable is unset or malformed. Keeps catalog bytes reproducible.
pub fn deterministic_timestamp() -> String {
    let epoch: u64 = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    // cap at 9999-12-31T23:59:59Z
    format_epoch(epoch.min(253_402_300_799))
}

fn format_epoch(secs: u64) -> String {
    // civil-date conversion for a u64 Unix timestamp
    let days = secs / 86_400;
    let rem = secs % 86_400;
    let (h, m, s) = (rem / 3600, (rem % 3600) / 60, rem % 60);
    let mut year = 1970u64;
    let mut day = days;
    loop {
        let leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
        let len = if leap { 366 } else { 365 };
        if day < len {
            break;
        }
        day -= len;
        year += 1;
    }
    let leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
    let lengths = [
        31,
        if leap { 29 } else { 28 },
        31,
        30,
        31,
        30,
        31,
        31,
        30,
        31,
        30,
        31,
    ];
    let mut month = 1;
    for len in lengths {
        if day < len {
            break;
        }
        day -= len;
        month += 1;
    }
    format!("{year:04}-{month:02}-{:02}T{h:02}:{m:02}:{s:02}Z", day + 1)
}
