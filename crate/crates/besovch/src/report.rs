//! Deterministic artifact I/O: field binaries, CSV tables, JSON reports.
//!
//! Reports never embed wall-clock time, hostnames, or paths, so rerunning a
//! command with the same inputs produces byte-identical output.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dyadic::BlockStat;
use crate::error::{Error, Result};
use crate::grid::{Field, Grid};
use crate::peakon::PeakonState;

/// Field binary layout: domain half-length L as little-endian f64, sample
/// count n as little-endian u64, then n little-endian f64 samples.
pub fn write_field_binary(path: &Path, field: &Field) -> Result<()> {
    let mut buf = Vec::with_capacity(16 + 8 * field.samples.len());
    buf.extend_from_slice(&field.grid.l.to_le_bytes());
    buf.extend_from_slice(&(field.grid.n as u64).to_le_bytes());
    for v in &field.samples {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

pub fn read_field_binary(path: &Path) -> Result<Field> {
    let mut file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut head = [0u8; 16];
    file.read_exact(&mut head)
        .map_err(|e| Error::io(path, e))?;
    let l = f64::from_le_bytes(head[0..8].try_into().unwrap());
    let n = u64::from_le_bytes(head[8..16].try_into().unwrap()) as usize;
    let grid = Grid::new(l, n)?;
    let mut body = Vec::new();
    file.read_to_end(&mut body).map_err(|e| Error::io(path, e))?;
    if body.len() != 8 * n {
        return Err(Error::format(
            path,
            format!("expected {} sample bytes, found {}", 8 * n, body.len()),
        ));
    }
    let samples: Vec<f64> = body
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Field::from_samples(grid, samples)
}

fn open_out(path: &Path) -> Result<fs::File> {
    fs::File::create(path).map_err(|e| Error::io(path, e))
}

/// CSV with `x,value` rows, one per grid point.
pub fn write_field_csv(path: &Path, field: &Field) -> Result<()> {
    let mut out = open_out(path)?;
    let mut text = String::from("x,value\n");
    for m in 0..field.grid.n {
        text.push_str(&format!("{},{}\n", field.grid.x(m), field.samples[m]));
    }
    out.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}

/// CSV with `j,block_linf,block_l2` rows for a dyadic decomposition.
pub fn write_block_csv(path: &Path, stats: &[BlockStat]) -> Result<()> {
    let mut out = open_out(path)?;
    let mut text = String::from("j,block_linf,block_l2\n");
    for s in stats {
        text.push_str(&format!("{},{},{}\n", s.j, s.linf, s.l2));
    }
    out.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}

/// CSV with `t,p0..,q0..` rows for a multipeakon trajectory.
pub fn write_peakon_csv(path: &Path, states: &[PeakonState]) -> Result<()> {
    let k = states.first().map(|s| s.p.len()).unwrap_or(0);
    let mut text = String::from("t");
    for i in 0..k {
        text.push_str(&format!(",p{i}"));
    }
    for i in 0..k {
        text.push_str(&format!(",q{i}"));
    }
    text.push('\n');
    for s in states {
        text.push_str(&format!("{}", s.t));
        for v in s.p.iter().chain(s.q.iter()) {
            text.push_str(&format!(",{v}"));
        }
        text.push('\n');
    }
    open_out(path)?
        .write_all(text.as_bytes())
        .map_err(|e| Error::io(path, e))
}

/// Generic numeric CSV: comma-joined header, then one row per record.
pub fn write_table_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<()> {
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    open_out(path)?
        .write_all(text.as_bytes())
        .map_err(|e| Error::io(path, e))
}

/// Serialize a report as pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::UnsupportedSpec(format!("json encode: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let s = to_json_string(value)?;
    fs::write(path, s).map_err(|e| Error::io(path, e))
}

/// Echo of how a run was produced: subcommand, resolved parameters, worker
/// cap. Everything here is input-determined, nothing environmental.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub threads: usize,
    pub format_version: u32,
}

pub fn run_manifest(command: &str, params: &[(&str, String)]) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        threads: crate::experiments::worker_cap(),
        format_version: 1,
    }
}

/// Hex SHA-256 of a byte string; used to certify report determinism.
pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Flatten a JSON document into `key,value` CSV rows (dotted paths, arrays
/// indexed). Object keys come out sorted, so the flattening is canonical.
pub fn json_to_csv(value: &serde_json::Value) -> String {
    let mut rows = Vec::new();
    flatten(value, String::new(), &mut rows);
    let mut text = String::from("key,value\n");
    for (k, v) in rows {
        text.push_str(&format!("{k},{v}\n"));
    }
    text
}

fn flatten(value: &serde_json::Value, prefix: String, rows: &mut Vec<(String, String)>) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(v, key, rows);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, format!("{prefix}[{i}]"), rows);
            }
        }
        other => {
            let text = match other {
                serde_json::Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            rows.push((prefix, text));
        }
    }
}
