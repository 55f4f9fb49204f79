//! Convex polyhedral meshes: validation, supporting planes, volume,
//! centroid, and symmetry queries.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Geometric tolerance for a solid whose bounding-box diagonal is 1.
/// All mesh checks scale this by the actual diagonal, so tolerances are
/// scale-aware.
pub const EPS_GEOM: f64 = 1e-9;

/// A unit vector giving the vertical axis of a drainage setup.
///
/// Antipodal directions are distinct: the orifice sits at the *lowest*
/// supporting plane of the direction, so flipping the direction flips the
/// solid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction(Vec3);

impl Direction {
    /// Normalizes the given components into a direction.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vec(Vec3::new(x, y, z))
    }

    pub fn from_vec(v: Vec3) -> Result<Self> {
        v.normalized().map(Direction).ok_or(Error::ZeroDirection)
    }

    /// The positive z axis.
    pub fn z() -> Self {
        Direction(Vec3::new(0.0, 0.0, 1.0))
    }

    /// The antipodal direction (solid turned upside down).
    pub fn flipped(self) -> Self {
        Direction(-self.0)
    }

    pub fn as_vec(self) -> Vec3 {
        self.0
    }

    pub fn dot(self, v: Vec3) -> f64 {
        self.0.dot(v)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0.x, self.0.y, self.0.z)
    }
}

/// Physical constants of the drainage experiment.
///
/// Times everywhere are reported in units of 1/K with K = k·a·√(2g). The
/// default is the dimensionless profile K = 1.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    /// Discharge coefficient (viscosity, hole friction).
    pub discharge_coefficient: f64,
    /// Orifice area.
    pub orifice_area: f64,
    /// Gravitational acceleration.
    pub gravity: f64,
    /// Liquid density (only enters energy reporting).
    pub density: f64,
}

impl PhysicalConstants {
    pub fn new(
        discharge_coefficient: f64,
        orifice_area: f64,
        gravity: f64,
        density: f64,
    ) -> Result<Self> {
        let c = PhysicalConstants {
            discharge_coefficient,
            orifice_area,
            gravity,
            density,
        };
        if [discharge_coefficient, orifice_area, gravity, density]
            .iter()
            .all(|v| *v > 0.0 && v.is_finite())
        {
            Ok(c)
        } else {
            Err(Error::InvalidMesh(
                "physical constants must all be strictly positive".into(),
            ))
        }
    }

    /// The lumped constant K = k·a·√(2g).
    pub fn lumped(&self) -> f64 {
        self.discharge_coefficient * self.orifice_area * (2.0 * self.gravity).sqrt()
    }
}

impl Default for PhysicalConstants {
    /// Dimensionless profile: K = 1 (k = a = 1, g = 1/2).
    fn default() -> Self {
        PhysicalConstants {
            discharge_coefficient: 1.0,
            orifice_area: 1.0,
            gravity: 0.5,
            density: 1.0,
        }
    }
}

/// A closed convex polyhedron with outward-oriented faces.
///
/// Construction validates planarity, face convexity, edge closure, and
/// global convexity, and precomputes outward normals, volume, and the volume
/// centroid. All data is immutable afterwards.
#[derive(Debug, Clone)]
pub struct ConvexPolyhedron {
    vertices: Vec<Vec3>,
    faces: Vec<Vec<usize>>,
    face_normals: Vec<Vec3>,
    edges: Vec<(usize, usize)>,
    centroid: Vec3,
    volume: f64,
    tol: f64,
}

/// Validates raw vertex/face data into a [`ConvexPolyhedron`].
///
/// Face cycles may arrive in either winding; they are re-oriented so normals
/// point away from the centroid.
pub fn validate_mesh(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Result<ConvexPolyhedron> {
    ConvexPolyhedron::new(vertices, faces)
}

impl ConvexPolyhedron {
    pub fn new(vertices: Vec<Vec3>, mut faces: Vec<Vec<usize>>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::InvalidMesh(format!(
                "need at least 4 vertices, got {}",
                vertices.len()
            )));
        }
        if faces.len() < 4 {
            return Err(Error::InvalidMesh(format!(
                "need at least 4 faces, got {}",
                faces.len()
            )));
        }
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::InvalidMesh(format!(
                    "face {fi} has fewer than 3 vertices"
                )));
            }
            for &vi in face {
                if vi >= vertices.len() {
                    return Err(Error::InvalidMesh(format!(
                        "face {fi} references vertex {vi}, but there are only {}",
                        vertices.len()
                    )));
                }
            }
            let mut sorted = face.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != face.len() {
                return Err(Error::InvalidMesh(format!(
                    "face {fi} repeats a vertex index"
                )));
            }
        }

        // Scale-aware tolerance from the bounding-box diagonal.
        let (mut lo, mut hi) = (vertices[0], vertices[0]);
        for v in &vertices {
            lo = Vec3::new(lo.x.min(v.x), lo.y.min(v.y), lo.z.min(v.z));
            hi = Vec3::new(hi.x.max(v.x), hi.y.max(v.y), hi.z.max(v.z));
        }
        let diag = (hi - lo).norm();
        if !(diag > 0.0) || !diag.is_finite() {
            return Err(Error::InvalidMesh("degenerate vertex set".into()));
        }
        let tol = EPS_GEOM * diag;

        let vertex_mean = vertices.iter().fold(Vec3::ZERO, |acc, &v| acc + v)
            / vertices.len() as f64;

        // Newell normals; flip cycles whose normal points toward the interior.
        let mut face_normals = Vec::with_capacity(faces.len());
        for face in faces.iter_mut() {
            let mut normal = Vec3::ZERO;
            let mut center = Vec3::ZERO;
            for k in 0..face.len() {
                let a = vertices[face[k]];
                let b = vertices[face[(k + 1) % face.len()]];
                normal = normal
                    + Vec3::new(
                        (a.y - b.y) * (a.z + b.z),
                        (a.z - b.z) * (a.x + b.x),
                        (a.x - b.x) * (a.y + b.y),
                    );
                center = center + a;
            }
            center = center / face.len() as f64;
            let mut unit = normal
                .normalized()
                .ok_or_else(|| Error::InvalidMesh("face with zero-area normal".into()))?;
            if unit.dot(center - vertex_mean) < 0.0 {
                face.reverse();
                unit = -unit;
            }
            face_normals.push(unit);
        }

        // Planarity and per-face convexity.
        for (fi, face) in faces.iter().enumerate() {
            let n = face_normals[fi];
            let center =
                face.iter().fold(Vec3::ZERO, |acc, &vi| acc + vertices[vi]) / face.len() as f64;
            for &vi in face {
                let d = n.dot(vertices[vi] - center).abs();
                if d > tol {
                    return Err(Error::NonPlanarFace {
                        face: fi,
                        vertex: vi,
                        distance: d,
                    });
                }
            }
            for k in 0..face.len() {
                let a = vertices[face[k]];
                let b = vertices[face[(k + 1) % face.len()]];
                let c = vertices[face[(k + 2) % face.len()]];
                let turn = (b - a).cross(c - b).dot(n);
                if turn < -tol * diag {
                    return Err(Error::InvalidMesh(format!(
                        "face {fi} is not a convex cycle at vertex {}",
                        face[(k + 1) % face.len()]
                    )));
                }
            }
        }

        // Closed surface: each undirected edge in exactly two faces, with
        // opposite directed senses.
        let mut edge_count: HashMap<(usize, usize), usize> = HashMap::new();
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for face in &faces {
            for k in 0..face.len() {
                let a = face[k];
                let b = face[(k + 1) % face.len()];
                *edge_count.entry((a.min(b), a.max(b))).or_insert(0) += 1;
                *directed.entry((a, b)).or_insert(0) += 1;
            }
        }
        for (&(a, b), &count) in &edge_count {
            if count != 2 {
                return Err(Error::OpenSurface { a, b, count });
            }
        }
        for (&(a, b), &count) in &directed {
            if count != 1 {
                return Err(Error::InvalidMesh(format!(
                    "faces disagree on orientation along edge ({a}, {b})"
                )));
            }
        }
        let mut edges: Vec<(usize, usize)> = edge_count.into_keys().collect();
        edges.sort_unstable();

        // Global convexity: every vertex on or behind every face plane.
        for (fi, face) in faces.iter().enumerate() {
            let n = face_normals[fi];
            let offset = n.dot(vertices[face[0]]);
            for (vi, v) in vertices.iter().enumerate() {
                let d = n.dot(*v) - offset;
                if d > tol {
                    return Err(Error::NonConvex {
                        vertex: vi,
                        face: fi,
                        distance: d,
                    });
                }
            }
        }

        // Volume and volume centroid by signed tetrahedra against the origin.
        let mut volume = 0.0;
        let mut moment = Vec3::ZERO;
        for face in &faces {
            let a = vertices[face[0]];
            for k in 1..face.len() - 1 {
                let b = vertices[face[k]];
                let c = vertices[face[k + 1]];
                let v6 = a.dot(b.cross(c));
                volume += v6;
                moment = moment + (a + b + c) * (v6 / 4.0);
            }
        }
        volume /= 6.0;
        if volume <= 0.0 {
            return Err(Error::InvalidMesh(
                "mesh has non-positive volume after orientation".into(),
            ));
        }
        let centroid = moment / (6.0 * volume);

        Ok(ConvexPolyhedron {
            vertices,
            faces,
            face_normals,
            edges,
            centroid,
            volume,
            tol,
        })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Outward unit normal of face `i`.
    pub fn face_normal(&self, i: usize) -> Vec3 {
        self.face_normals[i]
    }

    /// Undirected edges as sorted index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Volume centroid (the center of mass of the solid interior).
    pub fn centroid(&self) -> Vec3 {
        self.centroid
    }

    /// Volume by signed tetrahedron decomposition.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Scale-aware geometric tolerance for this mesh.
    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Heights of the two supporting planes perpendicular to `dir`:
    /// (min, max) of dir·v over the vertices. The drainage height is
    /// H = max − min.
    pub fn support_extents(&self, dir: Direction) -> (f64, f64) {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in &self.vertices {
            let h = dir.dot(*v);
            min = min.min(h);
            max = max.max(h);
        }
        (min, max)
    }

    /// Distance between the two supporting planes perpendicular to `dir`.
    pub fn width(&self, dir: Direction) -> f64 {
        let (lo, hi) = self.support_extents(dir);
        hi - lo
    }

    /// Radius of the sphere through the farthest vertices from the centroid.
    pub fn circumradius(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.distance(self.centroid))
            .fold(0.0, f64::max)
    }

    /// Distance from the centroid to the nearest face plane.
    pub fn inradius(&self) -> f64 {
        (0..self.faces.len())
            .map(|fi| {
                let n = self.face_normals[fi];
                n.dot(self.vertices[self.faces[fi][0]] - self.centroid)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Longest chord of the vertex set.
    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max(a.distance(*b));
            }
        }
        best
    }

    /// Checks closure of the vertex set under point reflection through the
    /// centroid; returns the first vertex without a mirror partner.
    pub fn central_symmetry(&self) -> std::result::Result<(), usize> {
        for (vi, v) in self.vertices.iter().enumerate() {
            let mirrored = self.centroid * 2.0 - *v;
            let found = self
                .vertices
                .iter()
                .any(|w| w.distance(mirrored) <= self.tol * 10.0);
            if !found {
                return Err(vi);
            }
        }
        Ok(())
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.central_symmetry().is_ok()
    }

    /// Direction that puts vertex `i` at the bottom supporting plane, i.e.
    /// the axis from that vertex through the centroid.
    pub fn vertex_down_direction(&self, i: usize) -> Result<Direction> {
        Direction::from_vec(self.centroid - self.vertices[i])
    }

    /// Direction that rests the solid on face `f` (the upward vertical for
    /// that pose): the inward face normal.
    pub fn face_down_direction(&self, f: usize) -> Direction {
        Direction(-self.face_normals[f])
    }

    /// A uniformly scaled copy (λ > 0).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::InvalidMesh("scale factor must be positive".into()));
        }
        ConvexPolyhedron::new(
            self.vertices.iter().map(|&v| v * factor).collect(),
            self.faces.clone(),
        )
    }
}
