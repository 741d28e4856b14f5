//! Group definition files: UTF-8 JSON with a model tag and generator
//! coefficient quadruples.
//!
//! ```json
//! {
//!   "model": "halfplane",
//!   "label": "waist dilation",
//!   "generators": [
//!     [[0.11728394957174035, 0.0], [0.0, 0.0], [0.0, 0.0], [8.526318443965417, 0.0]]
//!   ]
//! }
//! ```
//!
//! Each generator is `[a, b, c, d]` with every coefficient a `[re, im]`
//! pair; the map is `w ↦ (aw + b)/(cw + d)`.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use surfinv::fuchsian::FuchsianGroup;
use surfinv::hyperbolic::{MobiusMap, Model};

use crate::commands::CmdError;

#[derive(Deserialize)]
struct GroupFile {
    model: String,
    generators: Vec<[[f64; 2]; 4]>,
    #[serde(default)]
    label: Option<String>,
}

/// Read, parse, and construct the group. Missing/unreadable files are I/O
/// errors; malformed JSON and invalid generators are usage errors, with
/// line/column context where the parser provides it.
pub fn load(path: &Path) -> Result<FuchsianGroup, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Io(format!("cannot read group file {}: {e}", path.display())))?;
    let parsed: GroupFile = serde_json::from_str(&text).map_err(|e| {
        CmdError::Usage(format!(
            "group file {}: parse error at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    let model = match parsed.model.as_str() {
        "disk" => Model::Disk,
        "halfplane" => Model::HalfPlane,
        other => {
            return Err(CmdError::Usage(format!(
                "group file {}: unknown model '{other}' (expected \"disk\" or \"halfplane\")",
                path.display()
            )))
        }
    };
    let mut generators = Vec::with_capacity(parsed.generators.len());
    for (idx, quad) in parsed.generators.iter().enumerate() {
        let [a, b, c, d] = quad.map(|p| Complex64::new(p[0], p[1]));
        let map = MobiusMap::new(a, b, c, d, model).map_err(|e| {
            CmdError::Usage(format!(
                "group file {}: generator {idx}: {e}",
                path.display()
            ))
        })?;
        generators.push(map);
    }
    let group = FuchsianGroup::new(generators).map_err(|e| {
        CmdError::Usage(format!("group file {}: {e}", path.display()))
    })?;
    let label = parsed
        .label
        .unwrap_or_else(|| path.display().to_string());
    Ok(group.with_label(label))
}
