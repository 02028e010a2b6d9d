//! Presentation files and built-in presentations.
//!
//! A file is TOML (or JSON, by extension) with two fields:
//!
//! ```toml
//! generators = ["s1", "s2"]
//! relators = [[1, 2, 1, -2, -1, -2]]
//! ```
//!
//! Relator letters are signed 1-based generator indices.

use std::path::Path;

use outbraid_core::central_ext::central_quotient_presentation;
use outbraid_core::Presentation;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum PresentationError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {message}")]
    Syntax { path: String, message: String },
    #[error("invalid presentation: {0}")]
    Invalid(#[from] outbraid_core::Error),
    #[error("unknown built-in presentation {0:?}")]
    UnknownBuiltin(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<Vec<i32>>,
}

impl PresentationFile {
    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationFile {
            generators: p.generators().to_vec(),
            relators: p.relators().to_vec(),
        }
    }

    pub fn into_presentation(self) -> Result<Presentation, PresentationError> {
        Ok(Presentation::new(self.generators, self.relators)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("presentation serializes")
    }
}

pub fn parse_toml(text: &str, origin: &str) -> Result<Presentation, PresentationError> {
    let f: PresentationFile = toml::from_str(text).map_err(|e| PresentationError::Syntax {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    f.into_presentation()
}

pub fn parse_json(text: &str, origin: &str) -> Result<Presentation, PresentationError> {
    let f: PresentationFile = serde_json::from_str(text).map_err(|e| PresentationError::Syntax {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    f.into_presentation()
}

pub fn load_file(path: &Path) -> Result<Presentation, PresentationError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| PresentationError::Io {
        path: shown.clone(),
        source,
    })?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_json(&text, &shown)
    } else {
        parse_toml(&text, &shown)
    }
}

/// Names accepted by [`builtin`]; `N` and `K` are positive integers.
pub const BUILTINS: [&str; 5] = [
    "braid:N",
    "mcg-sphere:N",
    "central-quotient:N",
    "coxeter:N",
    "free-product-z2:K",
];

/// A built-in presentation such as `braid:4` or `free-product-z2:3`.
pub fn builtin(name: &str) -> Result<Presentation, PresentationError> {
    let unknown = || PresentationError::UnknownBuiltin(name.to_string());
    let (kind, arg) = name.split_once(':').ok_or_else(unknown)?;
    let k: usize = arg.trim().parse().map_err(|_| unknown())?;
    let p = match kind {
        "braid" => Presentation::braid(k)?,
        "mcg-sphere" => Presentation::mcg_sphere(k)?,
        "central-quotient" => central_quotient_presentation(k)?,
        "coxeter" => Presentation::coxeter_symmetric(k)?,
        "free-product-z2" => Presentation::free_product_z2(k),
        _ => return Err(unknown()),
    };
    Ok(p)
}

/// A file path if one exists, otherwise a built-in name.
pub fn load(source: &str) -> Result<Presentation, PresentationError> {
    let path = Path::new(source);
    if path.exists() {
        load_file(path)
    } else {
        builtin(source)
    }
}
