//! Output formatting and command helpers behind the `parabolic` binary.

pub mod plot;

use std::collections::BTreeMap;
use std::io::Read;

use num_complex::Complex64;
use parabolic::radius::{catalog, RadiusEntry};
use parabolic::suite::{run_item, suite, SuiteItem};
use parabolic::{Error, PowerSeries, VerificationReport, SCHEMA_VERSION};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// `2` for bad input, `1` for everything that went wrong while computing.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Core(
                Error::UnknownId(_)
                | Error::UnknownTarget(_)
                | Error::ParamRange { .. }
                | Error::DomainError(_)
                | Error::CenterOutsideRange(_)
                | Error::OutsideDisc { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `key=value` pairs.
pub fn parse_params(pairs: &[String]) -> CliResult<BTreeMap<String, f64>> {
    pairs
        .iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected key=value, got `{p}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("parameter `{k}` is not a number: `{v}`")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct RadiusRecord {
    pub schema: u32,
    pub id: String,
    pub params: BTreeMap<String, f64>,
    pub closed_form: f64,
    pub oracle_root: f64,
    pub gap: f64,
}

pub fn radius_record(entry: &RadiusEntry) -> CliResult<RadiusRecord> {
    let root = entry.oracle_root()?;
    Ok(RadiusRecord {
        schema: SCHEMA_VERSION,
        id: entry.id.to_string(),
        params: entry.id.params(),
        closed_form: entry.closed_form,
        oracle_root: root,
        gap: (entry.closed_form - root).abs(),
    })
}

fn params_cell(params: &BTreeMap<String, f64>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

/// The whole catalogue as CSV (`markdown = false`) or a Markdown table.
pub fn radius_table(markdown: bool) -> CliResult<String> {
    let entries = catalog()?;
    let mut rows = Vec::with_capacity(entries.len());
    for e in &entries {
        let rec = radius_record(e)?;
        rows.push([
            e.id.key(),
            params_cell(&rec.params),
            e.label.clone(),
            format!("{:.12}", rec.closed_form),
            format!("{:.12}", rec.oracle_root),
            format!("{:.3e}", rec.gap),
        ]);
    }
    let header = ["id", "params", "label", "closed_form", "oracle_root", "gap"];
    if markdown {
        let mut s = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
        for r in rows {
            s.push_str(&format!("| {} |\n", r.join(" | ")));
        }
        return Ok(s);
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(csv_err)?;
    for r in rows {
        w.write_record(r).map_err(csv_err)?;
    }
    into_string(w)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn into_string(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(std::io::Error::other(e)))
}

/// Suite items selected by an explicit id and/or `--only` filters. A filter
/// matches an item id exactly or its key before `[`.
pub fn select_items(items: Vec<SuiteItem>, filters: &[String]) -> Vec<SuiteItem> {
    if filters.is_empty() {
        return items;
    }
    items
        .into_iter()
        .filter(|item| {
            let key = item.id.split('[').next().unwrap_or(&item.id);
            filters.iter().any(|f| f == &item.id || f == key)
        })
        .collect()
}

pub fn run_suite(filters: &[String], tolerance: f64) -> Vec<VerificationReport> {
    select_items(suite(), filters)
        .iter()
        .map(|item| run_item(item, tolerance))
        .collect()
}

pub fn jsonl(reports: &[VerificationReport]) -> CliResult<String> {
    let mut s = String::new();
    for r in reports {
        s.push_str(&serde_json::to_string(r).map_err(|e| CliError::Io(std::io::Error::other(e)))?);
        s.push('\n');
    }
    Ok(s)
}

/// Coefficients as `index,re,im` rows.
pub fn series_csv(series: &PowerSeries) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "re", "im"]).map_err(csv_err)?;
    for (n, c) in series.coeffs().iter().enumerate() {
        w.write_record([n.to_string(), c.re.to_string(), c.im.to_string()])
            .map_err(csv_err)?;
    }
    into_string(w)
}

/// Reads `index,re,im` rows; a header row is optional and absent indices
/// are zero.
pub fn read_series_csv<R: Read>(reader: R) -> CliResult<PowerSeries> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut coeffs: BTreeMap<usize, Complex64> = BTreeMap::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Usage(format!("series csv: {e}")))?;
        let Some(first) = rec.get(0) else { continue };
        let Ok(index) = first.parse::<usize>() else {
            if line == 0 {
                continue;
            }
            return Err(CliError::Usage(format!("series csv line {}: bad index `{first}`", line + 1)));
        };
        let num = |k: usize| -> CliResult<f64> {
            let field = rec.get(k).unwrap_or("0");
            field
                .parse()
                .map_err(|_| CliError::Usage(format!("series csv line {}: bad number `{field}`", line + 1)))
        };
        coeffs.insert(index, Complex64::new(num(1)?, num(2)?));
    }
    let degree = coeffs.keys().next_back().copied().ok_or_else(|| CliError::Usage("series csv is empty".into()))?;
    let mut c = vec![Complex64::new(0.0, 0.0); degree + 1];
    for (k, v) in coeffs {
        c[k] = v;
    }
    Ok(PowerSeries::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = parse_params(&["alpha=0.5".into(), "B = -0.2".into()]).unwrap();
        assert_eq!(p["alpha"], 0.5);
        assert_eq!(p["B"], -0.2);
        assert_eq!(parse_params(&["alpha".into()]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn series_csv_round_trip() {
        let s = PowerSeries::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.25, -0.125)]);
        let text = series_csv(&s).unwrap();
        assert_eq!(read_series_csv(text.as_bytes()).unwrap(), s);
    }

    #[test]
    fn sparse_series_rows() {
        let s = read_series_csv("1,1,0\n3,0.5,0\n".as_bytes()).unwrap();
        assert_eq!(s.degree(), 3);
        assert_eq!(s.coeff(2), Complex64::new(0.0, 0.0));
        assert!(read_series_csv("1,x,0\n".as_bytes()).is_err());
    }

    #[test]
    fn only_filter_matches_key_or_id() {
        assert_eq!(select_items(suite(), &["majorization".into()]).len(), 1);
        let booth = select_items(suite(), &["booth".into()]);
        assert!(booth.len() > 1 && booth.iter().all(|i| i.id.starts_with("booth[")));
        assert_eq!(select_items(suite(), &["booth[alpha=0.8]".into()]).len(), 1);
    }
}
