//! Mesh ingestion: a minimal OBJ subset and a JSON vertex/face document.
//!
//! OBJ: `v x y z` and `f i j k ...` lines with 1-based indices; comments and
//! the usual non-geometric keywords are skipped. Face entries of the form
//! `i/t/n` use the leading vertex index.
//!
//! JSON: `{"vertices": [[x,y,z],...], "faces": [[i,...],...]}` with 0-based
//! indices; the writer emits the same document.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{validate_mesh, ConvexPolyhedron, Vec3};
use crate::numfmt::sig17;

#[derive(Deserialize)]
struct MeshDocument {
    vertices: Vec<[f64; 3]>,
    faces: Vec<Vec<usize>>,
}

/// Parses the JSON mesh document and validates it.
pub fn mesh_from_json(text: &str) -> Result<ConvexPolyhedron> {
    let doc: MeshDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("mesh json: {e}")))?;
    let vertices = doc.vertices.into_iter().map(Vec3::from).collect();
    validate_mesh(vertices, doc.faces)
}

/// Serializes a polyhedron as the JSON mesh document (17 significant digits,
/// bit-identical across runs).
pub fn mesh_to_json(poly: &ConvexPolyhedron) -> String {
    let vertices = poly
        .vertices()
        .iter()
        .map(|v| format!("[{},{},{}]", sig17(v.x), sig17(v.y), sig17(v.z)))
        .collect::<Vec<_>>()
        .join(",");
    let faces = poly
        .faces()
        .iter()
        .map(|f| {
            let ids = f
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("[{ids}]")
        })
        .collect::<Vec<_>>()
        .join(",");
    format!("{{\"vertices\":[{vertices}],\"faces\":[{faces}]}}")
}

/// Parses the minimal OBJ subset and validates the mesh.
pub fn mesh_from_obj(text: &str) -> Result<ConvexPolyhedron> {
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        match keyword {
            "v" => {
                let coords: Vec<f64> = tokens
                    .map(|t| {
                        t.parse::<f64>().map_err(|_| {
                            Error::Parse(format!("obj line {}: bad number `{t}`", lineno + 1))
                        })
                    })
                    .collect::<Result<_>>()?;
                if coords.len() < 3 {
                    return Err(Error::Parse(format!(
                        "obj line {}: vertex needs 3 coordinates",
                        lineno + 1
                    )));
                }
                vertices.push(Vec3::new(coords[0], coords[1], coords[2]));
            }
            "f" => {
                let mut face = Vec::new();
                for token in tokens {
                    let index_part = token.split('/').next().unwrap_or(token);
                    let idx: i64 = index_part.parse().map_err(|_| {
                        Error::Parse(format!("obj line {}: bad face index `{token}`", lineno + 1))
                    })?;
                    if idx < 1 {
                        return Err(Error::Parse(format!(
                            "obj line {}: face indices are 1-based, got {idx}",
                            lineno + 1
                        )));
                    }
                    face.push((idx - 1) as usize);
                }
                if face.len() < 3 {
                    return Err(Error::Parse(format!(
                        "obj line {}: face needs at least 3 vertices",
                        lineno + 1
                    )));
                }
                faces.push(face);
            }
            // Non-geometric keywords of the format are ignored.
            "vn" | "vt" | "vp" | "o" | "g" | "s" | "l" | "usemtl" | "mtllib" => {}
            other => {
                return Err(Error::Parse(format!(
                    "obj line {}: unsupported keyword `{other}`",
                    lineno + 1
                )));
            }
        }
    }
    validate_mesh(vertices, faces)
}

/// Loads a mesh from a `.obj` or `.json` file, dispatching on the extension.
pub fn load_mesh(path: impl AsRef<Path>) -> Result<ConvexPolyhedron> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .as_deref()
    {
        Some("obj") => mesh_from_obj(&text),
        Some("json") => mesh_from_json(&text),
        other => Err(Error::Parse(format!(
            "unsupported mesh extension {other:?} (use .obj or .json)"
        ))),
    }
}
