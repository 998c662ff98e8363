//! File input and atomic output helpers.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use symflex_core::json::{to_canonical_string, ColouringDoc, GraphDoc, MotionDoc};
use symflex_core::{EdgeColouring, SymmetricGraph};

use crate::errors::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::io(format!("cannot parse {}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<SymmetricGraph, CliError> {
    let doc: GraphDoc = read_json(path)?;
    SymmetricGraph::from_doc(&doc).map_err(|report| {
        CliError::operation(format!(
            "{} is not a valid Cn-symmetric graph:\n{}",
            path.display(),
            to_canonical_string(&report.to_doc())
        ))
    })
}

pub fn load_colouring(g: &SymmetricGraph, path: &Path) -> Result<EdgeColouring, CliError> {
    let doc: ColouringDoc = read_json(path)?;
    Ok(EdgeColouring::from_doc(g, &doc)?)
}

pub fn load_motion(path: &Path) -> Result<MotionDoc, CliError> {
    read_json(path)
}

/// Write `text` to `path` atomically (temp file in the same directory,
/// then rename), or to stdout when no path is given.
pub fn emit_text(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => write_atomic(path, text),
    }
}

pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", dir.display())))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| CliError::io(format!("cannot create temp file in {}: {e}", dir.display())))?;
    std::io::Write::write_all(&mut tmp, text.as_bytes())
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?;
    tmp.persist(path)
        .map_err(|e| CliError::io(format!("cannot move into place {}: {e}", path.display())))?;
    Ok(())
}

pub fn emit_doc<T: Serialize>(out: Option<&PathBuf>, doc: &T) -> Result<(), CliError> {
    emit_text(out, &to_canonical_string(doc))
}
