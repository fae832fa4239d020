//! Flat key=value run configuration. Lines are `key = value`; `#` starts a
//! comment; blank lines are ignored. Keys may not repeat.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct ConfigMap {
    entries: BTreeMap<String, String>,
}

impl ConfigMap {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                key: format!("line {}", lineno + 1),
                reason: format!("expected key=value, found {line:?}"),
            })?;
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if key.is_empty() {
                return Err(Error::Config {
                    key: format!("line {}", lineno + 1),
                    reason: "empty key".into(),
                });
            }
            if entries.insert(key.clone(), value).is_some() {
                return Err(Error::Config {
                    key,
                    reason: "duplicate key".into(),
                });
            }
        }
        Ok(ConfigMap { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    /// Overlay: values in `other` win.
    pub fn merged_with(mut self, other: ConfigMap) -> Self {
        self.entries.extend(other.entries);
        self
    }

    pub fn set(&mut self, key: &str, value: String) {
        self.entries.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|s| s.as_str())
    }

    fn bad(key: &str, reason: String) -> Error {
        Error::Config { key: key.to_string(), reason }
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Self::bad(key, format!("not a float: {v:?}"))),
        }
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Self::bad(key, format!("not an integer: {v:?}"))),
        }
    }

    pub fn u32_or(&self, key: &str, default: u32) -> Result<u32> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Self::bad(key, format!("not an integer: {v:?}"))),
        }
    }

    pub fn bool_or(&self, key: &str, default: bool) -> Result<bool> {
        match self.get(key) {
            None => Ok(default),
            Some("true") | Some("1") => Ok(true),
            Some("false") | Some("0") => Ok(false),
            Some(v) => Err(Self::bad(key, format!("not a boolean: {v:?}"))),
        }
    }

    /// Comma-separated float list.
    pub fn f64_list(&self, key: &str) -> Result<Option<Vec<f64>>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => parse_f64_list(v)
                .map(Some)
                .map_err(|reason| Self::bad(key, reason)),
        }
    }

    /// Comma-separated integer list.
    pub fn u32_list(&self, key: &str) -> Result<Option<Vec<u32>>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => parse_u32_list(v)
                .map(Some)
                .map_err(|reason| Self::bad(key, reason)),
        }
    }
}

pub fn parse_f64_list(text: &str) -> std::result::Result<Vec<f64>, String> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .map_err(|_| format!("not a float: {s:?}"))
        })
        .collect()
}

pub fn parse_u32_list(text: &str) -> std::result::Result<Vec<u32>, String> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<u32>()
                .map_err(|_| format!("not an integer: {s:?}"))
        })
        .collect()
}
