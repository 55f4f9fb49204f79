//! Plane cross sections of convex polyhedra.
//!
//! The section polygon at height h is built from vertices lying on the
//! cutting plane plus edge/plane intersection points, ordered angularly
//! around their mean and measured with the shoelace formula. Sections of a
//! convex solid are convex, so angular ordering always yields a simple
//! polygon.

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolyhedron, Direction, Vec3};

/// Area of the cross section { x in poly : dir·x = h_min + h }.
///
/// Heights run from the lowest supporting plane (h = 0, the orifice) to the
/// highest (h = H). `OutOfRange` outside [0, H].
pub fn cross_section_area(poly: &ConvexPolyhedron, dir: Direction, h: f64) -> Result<f64> {
    let (h_min, h_max) = poly.support_extents(dir);
    let height = h_max - h_min;
    // Allow a rounding error's worth of slack at the supporting planes.
    let slack = poly.tolerance();
    if !(-slack..=height + slack).contains(&h) {
        return Err(Error::OutOfRange {
            value: h,
            min: 0.0,
            max: height,
        });
    }
    Ok(section_polygon(poly, dir, h_min + h.clamp(0.0, height))
        .map(|polygon| polygon_area(&polygon, dir))
        .unwrap_or(0.0))
}

/// The section polygon at absolute plane offset `level` (dir·x = level),
/// ordered counterclockwise as seen from `dir`. `None` when the plane meets
/// the solid in fewer than three points.
pub fn section_polygon(
    poly: &ConvexPolyhedron,
    dir: Direction,
    level: f64,
) -> Option<Vec<Vec3>> {
    let tol = poly.tolerance();
    let vertices = poly.vertices();
    let mut points: Vec<Vec3> = Vec::new();

    // Vertices lying on the plane, each taken once.
    for v in vertices {
        if (dir.dot(*v) - level).abs() <= tol {
            points.push(*v);
        }
    }
    // Interior crossings of edges that strictly straddle the plane.
    for &(i, j) in poly.edges() {
        let di = dir.dot(vertices[i]) - level;
        let dj = dir.dot(vertices[j]) - level;
        if (di < -tol && dj > tol) || (dj < -tol && di > tol) {
            let t = di / (di - dj);
            points.push(vertices[i] + (vertices[j] - vertices[i]) * t);
        }
    }

    // Merge coincident points (a crossing can graze a vertex already taken).
    let mut unique: Vec<Vec3> = Vec::with_capacity(points.len());
    for p in points {
        if !unique.iter().any(|q| q.distance(p) <= tol) {
            unique.push(p);
        }
    }
    if unique.len() < 3 {
        return None;
    }

    let (e1, e2) = plane_basis(dir);
    let center = unique.iter().fold(Vec3::ZERO, |acc, &p| acc + p) / unique.len() as f64;
    unique.sort_by(|a, b| {
        let pa = *a - center;
        let pb = *b - center;
        let ta = pa.dot(e2).atan2(pa.dot(e1));
        let tb = pb.dot(e2).atan2(pb.dot(e1));
        ta.partial_cmp(&tb).expect("angles are finite")
    });
    Some(unique)
}

/// Orthonormal in-plane basis (e1, e2) with e1 × e2 = dir.
pub fn plane_basis(dir: Direction) -> (Vec3, Vec3) {
    let d = dir.as_vec();
    // Start from the coordinate axis least aligned with the direction.
    let seed = if d.x.abs() <= d.y.abs() && d.x.abs() <= d.z.abs() {
        Vec3::new(1.0, 0.0, 0.0)
    } else if d.y.abs() <= d.z.abs() {
        Vec3::new(0.0, 1.0, 0.0)
    } else {
        Vec3::new(0.0, 0.0, 1.0)
    };
    let e1 = seed.cross(d).normalized().expect("seed not parallel to dir");
    let e2 = d.cross(e1);
    (e1, e2)
}

fn polygon_area(polygon: &[Vec3], dir: Direction) -> f64 {
    let (e1, e2) = plane_basis(dir);
    let origin = polygon[0];
    let mut twice = 0.0;
    for k in 0..polygon.len() {
        let a = polygon[k] - origin;
        let b = polygon[(k + 1) % polygon.len()] - origin;
        twice += a.dot(e1) * b.dot(e2) - b.dot(e1) * a.dot(e2);
    }
    (twice * 0.5).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::platonic::{platonic, PlatonicSolid};

    #[test]
    fn prism_section_is_constant() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let a = cross_section_area(&cube, Direction::z(), 0.3).unwrap();
        assert!((a - 1.0).abs() < 1e-12);
        // The end planes contain whole faces.
        let a0 = cross_section_area(&cube, Direction::z(), 0.0).unwrap();
        assert!((a0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cube_diagonal_hexagon_midpoint() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let dir = Direction::new(1.0, 1.0, 1.0).unwrap();
        let h = 3f64.sqrt() / 3.0;
        let a = cross_section_area(&cube, dir, h).unwrap();
        assert!((a - 3f64.sqrt() / 2.0).abs() < 1e-10, "got {a}");
        // Lower branch is 3√3 h² / 2.
        let h2 = 0.2;
        let a2 = cross_section_area(&cube, dir, h2).unwrap();
        assert!((a2 - 1.5 * 3f64.sqrt() * h2 * h2).abs() < 1e-10);
    }

    #[test]
    fn tetrahedron_base_face() {
        let tet = platonic(PlatonicSolid::Tetrahedron, 1.0).unwrap();
        let dir = tet.face_down_direction(0);
        let a = cross_section_area(&tet, dir, 0.0).unwrap();
        assert!((a - 3f64.sqrt() / 4.0).abs() < 1e-12, "got {a}");
        // At the apex the section degenerates to a point.
        let h = tet.width(dir);
        let top = cross_section_area(&tet, dir, h).unwrap();
        assert_eq!(top, 0.0);
    }

    #[test]
    fn out_of_range_rejected() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        assert!(matches!(
            cross_section_area(&cube, Direction::z(), 1.5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            cross_section_area(&cube, Direction::z(), -0.1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn sections_are_convex_polygons() {
        // All cross products of consecutive edges share one sign.
        let icosa = platonic(PlatonicSolid::Icosahedron, 2.0).unwrap();
        let dir = Direction::new(0.3, -0.5, 0.81).unwrap();
        let (lo, hi) = icosa.support_extents(dir);
        for k in 1..40 {
            let level = lo + (hi - lo) * k as f64 / 40.0;
            let Some(polygon) = section_polygon(&icosa, dir, level) else {
                continue;
            };
            let n = polygon.len();
            for i in 0..n {
                let a = polygon[i];
                let b = polygon[(i + 1) % n];
                let c = polygon[(i + 2) % n];
                let turn = (b - a).cross(c - b).dot(dir.as_vec());
                assert!(turn > -1e-12, "reflex turn {turn} at slice {k}");
            }
        }
    }
}
