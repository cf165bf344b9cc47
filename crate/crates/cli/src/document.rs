//! JSON instance documents: `{"name", "vertices", "edges"}`.

use std::fs;
use std::path::Path;

use hyperchrom_core::{Hypergraph, ValidationError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{origin}: cannot read: {source}")]
    Io {
        origin: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{line}:{column}: {message}")]
    Syntax {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{origin}:{line}: field `{field}`: {source}")]
    Invalid {
        origin: String,
        line: usize,
        field: String,
        #[source]
        source: ValidationError,
    },
}

impl InstanceDocument {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self {
            name: h.name().to_string(),
            vertices: h.labels().to_vec(),
            edges: h
                .edges()
                .iter()
                .map(|e| e.iter().map(|&v| h.label(v).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, ValidationError> {
        Hypergraph::validate(&self.name, &self.vertices, &self.edges)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }
}

pub fn parse_str(text: &str, origin: &str) -> Result<Hypergraph, DocumentError> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        origin: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_hypergraph().map_err(|source| {
        let (field, line) = locate(text, &source);
        DocumentError::Invalid {
            origin: origin.to_string(),
            line,
            field,
            source,
        }
    })
}

pub fn read_path(path: &Path) -> Result<Hypergraph, DocumentError> {
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        origin: origin.clone(),
        source,
    })?;
    parse_str(&text, &origin)
}

fn locate(text: &str, err: &ValidationError) -> (String, usize) {
    let edge_field = |e: usize| (format!("edges[{e}]"), element_line(text, "edges", e));
    match err {
        ValidationError::EmptyVertexList => ("vertices".into(), key_line(text, "vertices")),
        ValidationError::DuplicateLabel(label) | ValidationError::IsolatedVertex(label) => {
            let idx = duplicate_or_first(text, label);
            (
                format!("vertices[{idx}]"),
                element_line(text, "vertices", idx),
            )
        }
        ValidationError::UnknownLabel { edge, .. }
        | ValidationError::UnknownVertex { edge, .. }
        | ValidationError::RepeatedVertex { edge, .. }
        | ValidationError::SizeOneEdge { edge } => edge_field(*edge),
        ValidationError::DuplicateEdge { second, .. }
        | ValidationError::NonLinearPair { second, .. } => edge_field(*second),
    }
}

/// Index of the label in the vertex array, preferring its second occurrence.
fn duplicate_or_first(text: &str, label: &str) -> usize {
    let doc: InstanceDocument = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(_) => return 0,
    };
    let hits: Vec<usize> = doc
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == label)
        .map(|(i, _)| i)
        .collect();
    hits.get(1).or(hits.first()).copied().unwrap_or(0)
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset].bytes().filter(|&b| b == b'\n').count() + 1
}

/// Byte offset just after the top-level `"key":` token, if present.
fn key_offset(text: &str, key: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'{' | b'[' => depth += 1,
            b'}' | b']' => depth = depth.saturating_sub(1),
            b'"' => {
                let end = string_end(bytes, i);
                let is_key = text[end + 1..].trim_start().starts_with(':');
                if depth == 1 && is_key && &text[i + 1..end] == key {
                    return Some(end + 1);
                }
                i = end;
            }
            _ => {}
        }
        i += 1;
    }
    None
}

fn key_line(text: &str, key: &str) -> usize {
    key_offset(text, key).map_or(1, |o| line_of(text, o))
}

/// Line of the `index`-th element of the top-level array under `key`.
fn element_line(text: &str, key: &str, index: usize) -> usize {
    let Some(start) = key_offset(text, key) else {
        return 1;
    };
    let bytes = text.as_bytes();
    let Some(open) = bytes[start..].iter().position(|&b| b == b'[') else {
        return line_of(text, start);
    };
    let mut i = start + open + 1;
    let mut seen = 0;
    loop {
        while i < bytes.len() && matches!(bytes[i], b' ' | b'\n' | b'\r' | b'\t' | b',') {
            i += 1;
        }
        if i >= bytes.len() || bytes[i] == b']' {
            return line_of(text, start);
        }
        if seen == index {
            return line_of(text, i);
        }
        seen += 1;
        i = skip_value(bytes, i);
    }
}

fn skip_value(bytes: &[u8], mut i: usize) -> usize {
    match bytes[i] {
        b'"' => string_end(bytes, i) + 1,
        b'[' | b'{' => {
            let mut depth = 0usize;
            while i < bytes.len() {
                match bytes[i] {
                    b'[' | b'{' => depth += 1,
                    b']' | b'}' => {
                        depth -= 1;
                        if depth == 0 {
                            return i + 1;
                        }
                    }
                    b'"' => i = string_end(bytes, i),
                    _ => {}
                }
                i += 1;
            }
            i
        }
        _ => {
            while i < bytes.len() && !matches!(bytes[i], b',' | b']' | b'}') {
                i += 1;
            }
            i
        }
    }
}

fn string_end(bytes: &[u8], open: usize) -> usize {
    let mut i = open + 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => i += 2,
            b'"' => return i,
            _ => i += 1,
        }
    }
    bytes.len().saturating_sub(1)
}
