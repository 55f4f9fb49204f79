//! Regular solids with a prescribed edge length.
//!
//! The icosahedron uses the classical construction from the golden
//! rectangles (0, ±1, ±φ) and cyclic permutations, which has edge length 2
//! and is scaled from there.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{validate_mesh, ConvexPolyhedron, Vec3};

/// The regular solids in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 4] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlatonicSolid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" | "tetra" => Ok(PlatonicSolid::Tetrahedron),
            "cube" | "hexahedron" => Ok(PlatonicSolid::Cube),
            "octahedron" | "octa" => Ok(PlatonicSolid::Octahedron),
            "icosahedron" | "icosa" => Ok(PlatonicSolid::Icosahedron),
            other => Err(Error::UnknownSolid(other.to_string())),
        }
    }
}

/// Builds the requested regular solid with the given edge length, centered
/// at the origin.
pub fn platonic(which: PlatonicSolid, edge: f64) -> Result<ConvexPolyhedron> {
    if !(edge > 0.0) || !edge.is_finite() {
        return Err(Error::InvalidMesh("edge length must be positive".into()));
    }
    match which {
        PlatonicSolid::Tetrahedron => tetrahedron(edge),
        PlatonicSolid::Cube => cube(edge),
        PlatonicSolid::Octahedron => octahedron(edge),
        PlatonicSolid::Icosahedron => icosahedron(edge),
    }
}

/// Axis-aligned box [0,a]×[0,b]×[0,c] translated to be centered at the origin.
pub fn centered_box(a: f64, b: f64, c: f64) -> Result<ConvexPolyhedron> {
    if ![a, b, c].iter().all(|d| *d > 0.0 && d.is_finite()) {
        return Err(Error::InvalidMesh("box dimensions must be positive".into()));
    }
    let (hx, hy, hz) = (a / 2.0, b / 2.0, c / 2.0);
    let vertices = vec![
        Vec3::new(-hx, -hy, -hz),
        Vec3::new(hx, -hy, -hz),
        Vec3::new(hx, hy, -hz),
        Vec3::new(-hx, hy, -hz),
        Vec3::new(-hx, -hy, hz),
        Vec3::new(hx, -hy, hz),
        Vec3::new(hx, hy, hz),
        Vec3::new(-hx, hy, hz),
    ];
    let faces = vec![
        vec![0, 3, 2, 1],
        vec![4, 5, 6, 7],
        vec![0, 1, 5, 4],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 0, 4, 7],
    ];
    validate_mesh(vertices, faces)
}

fn tetrahedron(edge: f64) -> Result<ConvexPolyhedron> {
    // Alternate cube corners have pairwise distance 2√2.
    let s = edge / (2.0 * 2f64.sqrt());
    let vertices = vec![
        Vec3::new(1.0, 1.0, 1.0) * s,
        Vec3::new(1.0, -1.0, -1.0) * s,
        Vec3::new(-1.0, 1.0, -1.0) * s,
        Vec3::new(-1.0, -1.0, 1.0) * s,
    ];
    let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    validate_mesh(vertices, faces)
}

fn cube(edge: f64) -> Result<ConvexPolyhedron> {
    centered_box(edge, edge, edge)
}

fn octahedron(edge: f64) -> Result<ConvexPolyhedron> {
    let a = edge / 2f64.sqrt();
    let vertices = vec![
        Vec3::new(a, 0.0, 0.0),
        Vec3::new(-a, 0.0, 0.0),
        Vec3::new(0.0, a, 0.0),
        Vec3::new(0.0, -a, 0.0),
        Vec3::new(0.0, 0.0, a),
        Vec3::new(0.0, 0.0, -a),
    ];
    let faces = edge_cliques(&vertices, edge);
    validate_mesh(vertices, faces)
}

fn icosahedron(edge: f64) -> Result<ConvexPolyhedron> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let s = edge / 2.0;
    let mut vertices = Vec::with_capacity(12);
    for &sa in &[1.0, -1.0] {
        for &sb in &[1.0, -1.0] {
            vertices.push(Vec3::new(0.0, sa, sb * phi) * s);
            vertices.push(Vec3::new(sa, sb * phi, 0.0) * s);
            vertices.push(Vec3::new(sa * phi, 0.0, sb) * s);
        }
    }
    let faces = edge_cliques(&vertices, edge);
    validate_mesh(vertices, faces)
}

/// Faces of a deltahedron whose triangles are exactly the triples of
/// mutually edge-adjacent vertices (true for the regular tetrahedron,
/// octahedron, and icosahedron).
fn edge_cliques(vertices: &[Vec3], edge: f64) -> Vec<Vec<usize>> {
    let tol = 1e-9 * edge;
    let is_edge =
        |i: usize, j: usize| (vertices[i].distance(vertices[j]) - edge).abs() <= tol;
    let mut faces = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if !is_edge(i, j) {
                continue;
            }
            for k in j + 1..vertices.len() {
                if is_edge(i, k) && is_edge(j, k) {
                    faces.push(vec![i, j, k]);
                }
            }
        }
    }
    faces
}
