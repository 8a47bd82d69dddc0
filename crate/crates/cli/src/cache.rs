//! Persistent KL column cache.
//!
//! Layout: a JSON object `{"schema": 1, "fingerprint": "...", "columns":
//! [[w, [[x, [c0, c1, ...]], ...]], ...]}` where `w` and `x` are element
//! indices in canonical enumeration order and `c_k` is the coefficient of
//! `q^k` in `P_{x,w}`. A file whose fingerprint differs from the current
//! system is ignored.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use hdcoh::klpoly::ColumnDump;
use hdcoh::{CartanType, KlEngine};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    fingerprint: String,
    columns: ColumnDump,
}

pub fn fingerprint(cartan: &CartanType) -> String {
    let rows: Vec<String> = cartan
        .cartan_matrix()
        .iter()
        .map(|r| r.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    format!("{cartan}:{}", rows.join(";"))
}

/// Loads matching columns into `engine`; unreadable or stale files are skipped.
pub fn load(path: &Path, cartan: &CartanType, engine: &KlEngine) {
    let Ok(text) = fs::read_to_string(path) else { return };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else { return };
    if file.schema == crate::json::SCHEMA && file.fingerprint == fingerprint(cartan) {
        // a corrupt dump leaves the engine partially warm, which is harmless
        let _ = engine.import_columns(&file.columns);
    }
}

pub fn store(path: &Path, cartan: &CartanType, engine: &KlEngine) -> Result<()> {
    let file = CacheFile { schema: crate::json::SCHEMA, fingerprint: fingerprint(cartan), columns: engine.export_columns() };
    let text = serde_json::to_string(&file)?;
    fs::write(path, text).with_context(|| format!("writing cache {}", path.display()))
}
