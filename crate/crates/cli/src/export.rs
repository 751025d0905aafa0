//! File exports: graph (JSON or DIMACS), spectrum (JSON), indices (JSON or CSV).

use crate::report::{self, AnalysisReport, Options};
use essgraph::graph::build_graph_capped;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Graph(#[from] essgraph::Error),
    #[error("{kind} cannot be written as {format:?}")]
    Unsupported { kind: Kind, format: Format },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Graph,
    Spectrum,
    Indices,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Graph => "graph",
            Kind::Spectrum => "spectrum",
            Kind::Indices => "indices",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dimacs,
}

impl Format {
    /// `.csv` gives CSV, `.dimacs`/`.col` give DIMACS, anything else JSON.
    pub fn from_path(path: &Path) -> Format {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("csv") => Format::Csv,
            Some("dimacs") | Some("col") => Format::Dimacs,
            _ => Format::Json,
        }
    }
}

#[derive(Debug, Serialize)]
struct SpectrumFile {
    n: u64,
    eigenvalues: Vec<report::EigenvalueRow>,
    charpoly: Option<Vec<String>>,
}

/// Renders the export as a string; output depends only on the arguments.
pub fn render(n: u64, kind: Kind, format: Format, opts: &Options) -> Result<String, ExportError> {
    let unsupported = || ExportError::Unsupported { kind, format };
    match kind {
        Kind::Graph => {
            let g = build_graph_capped(n, opts.max_vertices)?;
            match format {
                Format::Json => Ok(pretty(&g.export())?),
                Format::Dimacs => Ok(g.to_dimacs()),
                Format::Csv => Err(unsupported()),
            }
        }
        Kind::Spectrum => {
            if format != Format::Json {
                return Err(unsupported());
            }
            let r = report::analyze(n, opts)?;
            let file = SpectrumFile {
                n,
                eigenvalues: r.eigenvalues,
                charpoly: r.charpoly,
            };
            Ok(pretty(&file)?)
        }
        Kind::Indices => {
            let r = report::analyze(n, opts)?;
            match format {
                Format::Json => Ok(pretty(&indices_json(&r))?),
                Format::Csv => Ok(report::render_csv(
                    std::slice::from_ref(&r),
                    opts.precision,
                )?),
                Format::Dimacs => Err(unsupported()),
            }
        }
    }
}

pub fn indices_json(r: &AnalysisReport) -> Value {
    let closed = match r.wiener_closed_form {
        Some(b) => Value::Bool(b),
        None => Value::String("not covered".into()),
    };
    json!({
        "n": r.n,
        "wiener": r.wiener,
        "hyper_wiener": { "num": r.hyper_wiener.num, "den": r.hyper_wiener.den },
        "closed_form_match": closed,
    })
}

pub fn write(
    n: u64,
    kind: Kind,
    path: &Path,
    format: Option<Format>,
    opts: &Options,
) -> Result<(), ExportError> {
    let format = format.unwrap_or_else(|| Format::from_path(path));
    let text = render(n, kind, format, opts)?;
    std::fs::write(path, text).map_err(|source| ExportError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn pretty<T: Serialize>(v: &T) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}
