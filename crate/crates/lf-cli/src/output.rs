use std::io::Write;
use std::path::{Path, PathBuf};

use crate::failure::Failure;

/// Writes bytes to the path atomically: a temp file in the same
/// directory, flushed, then renamed over the destination.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| Failure::invalid(format!("cannot create temp file in {}: {e}", dir.display())))?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path)
        .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

/// Emits the primary artifact: to the file when a path is set,
/// otherwise to stdout.
pub fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, bytes),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

/// Path of a secondary artifact: the primary file name with a suffix
/// appended (`samples.csv` -> `samples.csv.summary.json`).
pub fn sidecar_path(primary: &Path, suffix: &str) -> PathBuf {
    let mut name = primary.file_name().unwrap_or_default().to_os_string();
    name.push(suffix);
    primary.with_file_name(name)
}

/// Pretty JSON with a trailing newline, the byte shape of every JSON
/// artifact.
pub fn json_bytes(value: &serde_json::Value) -> Result<Vec<u8>, Failure> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}
