//! Cross-sectional area profiles A(h) on [0, H].
//!
//! An [`AreaProfile`] is the one object every time/energy integral consumes:
//! an evaluator, the total height, and the breakpoints where the analytic
//! piece changes (quadrature panels split there). Profiles come from meshes
//! ([`area_profile`]), from the closed-form catalog ([`analytic_profile`]),
//! or from solids of revolution.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::section::cross_section_area;
use crate::geometry::{ConvexPolyhedron, Direction};

/// The function h ↦ A(h) on [0, H] with its piecewise-smooth breakpoints.
#[derive(Clone)]
pub struct AreaProfile {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    height: f64,
    breakpoints: Vec<f64>,
    label: String,
}

impl fmt::Debug for AreaProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AreaProfile")
            .field("label", &self.label)
            .field("height", &self.height)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl AreaProfile {
    /// Wraps an evaluator. Breakpoints must be sorted, distinct, and lie
    /// strictly inside (0, H).
    pub fn new(
        label: impl Into<String>,
        height: f64,
        breakpoints: Vec<f64>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if !(height > 0.0) || !height.is_finite() {
            return Err(Error::InvalidProfile(format!(
                "height must be positive, got {height}"
            )));
        }
        for w in breakpoints.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidProfile(
                    "breakpoints must be strictly increasing".into(),
                ));
            }
        }
        if breakpoints
            .iter()
            .any(|&b| !(b > 0.0 && b < height) || !b.is_finite())
        {
            return Err(Error::InvalidProfile(
                "breakpoints must lie strictly inside (0, H)".into(),
            ));
        }
        Ok(AreaProfile {
            eval: Arc::new(eval),
            height,
            breakpoints,
            label: label.into(),
        })
    }

    /// Constant-area prism profile A ≡ `area` on [0, `height`].
    pub fn constant(area: f64, height: f64) -> Self {
        AreaProfile::new(format!("constant A={area}"), height, Vec::new(), move |_| {
            area
        })
        .expect("constant profile is valid")
    }

    /// A(h). Arguments a rounding error outside [0, H] are clamped to the
    /// domain; anything further out is a caller bug.
    pub fn area(&self, h: f64) -> f64 {
        debug_assert!(
            (-1e-9 * self.height..=self.height * (1.0 + 1e-9)).contains(&h),
            "height {h} outside profile domain [0, {}]",
            self.height
        );
        (self.eval)(h.clamp(0.0, self.height))
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Panel nodes for quadrature in h: 0, the breakpoints, H.
    pub fn panel_nodes(&self) -> Vec<f64> {
        let mut nodes = Vec::with_capacity(self.breakpoints.len() + 2);
        nodes.push(0.0);
        nodes.extend_from_slice(&self.breakpoints);
        nodes.push(self.height);
        nodes
    }

    /// Panel nodes for quadrature in s = √h: 0, √breakpoints, √H.
    pub fn sqrt_panel_nodes(&self) -> Vec<f64> {
        self.panel_nodes().iter().map(|&h| h.sqrt()).collect()
    }
}

/// Assembles the area profile of a polyhedron along a direction.
///
/// Breakpoints are the distinct vertex heights strictly inside (0, H), even
/// where A happens to stay smooth across them; that guarantees every
/// quadrature panel sees one analytic (here: quadratic) piece.
pub fn area_profile(poly: &ConvexPolyhedron, dir: Direction) -> AreaProfile {
    let (h_min, h_max) = poly.support_extents(dir);
    let height = h_max - h_min;
    let tol = poly.tolerance();

    let mut heights: Vec<f64> = poly.vertices().iter().map(|&v| dir.dot(v) - h_min).collect();
    heights.sort_by(|a, b| a.partial_cmp(b).expect("finite heights"));
    let mut breakpoints: Vec<f64> = Vec::new();
    for h in heights {
        if h <= tol || h >= height - tol {
            continue;
        }
        if breakpoints.last().map_or(true, |&last| h - last > tol) {
            breakpoints.push(h);
        }
    }

    let owned = poly.clone();
    AreaProfile::new(
        format!("mesh section along {dir}"),
        height,
        breakpoints,
        move |h| {
            cross_section_area(&owned, dir, h)
                .expect("height clamped into domain")
                .max(0.0)
        },
    )
    .expect("mesh profile parameters are valid")
}

/// Closed-form catalog profiles for the regular solids in their extremal
/// orientations. Solids have unit edge except the icosahedron, which uses
/// the golden-rectangle construction with edge 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnalyticProfile {
    /// Unit cube on a space diagonal (the minimizing pose).
    CubeDiagonal,
    /// Unit-edge octahedron resting on a face (the maximizing pose).
    OctahedronFaceDown,
    /// Unit-edge octahedron on a vertex (the minimizing pose).
    OctahedronVertexDown,
    /// Unit-edge tetrahedron resting on a face (the maximizing pose).
    TetrahedronFaceDown,
    /// Unit-edge tetrahedron on a vertex (the minimizing pose).
    TetrahedronVertexDown,
    /// Edge-2 icosahedron on a vertex (the minimizing pose).
    IcosahedronVertexDown,
}

impl AnalyticProfile {
    pub const ALL: [AnalyticProfile; 6] = [
        AnalyticProfile::CubeDiagonal,
        AnalyticProfile::OctahedronFaceDown,
        AnalyticProfile::OctahedronVertexDown,
        AnalyticProfile::TetrahedronFaceDown,
        AnalyticProfile::TetrahedronVertexDown,
        AnalyticProfile::IcosahedronVertexDown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AnalyticProfile::CubeDiagonal => "cube-diagonal",
            AnalyticProfile::OctahedronFaceDown => "octahedron-max",
            AnalyticProfile::OctahedronVertexDown => "octahedron-min",
            AnalyticProfile::TetrahedronFaceDown => "tetrahedron-max",
            AnalyticProfile::TetrahedronVertexDown => "tetrahedron-min",
            AnalyticProfile::IcosahedronVertexDown => "icosahedron-min",
        }
    }
}

impl fmt::Display for AnalyticProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AnalyticProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cube-diagonal" => Ok(AnalyticProfile::CubeDiagonal),
            "octahedron-max" | "octahedron-face-down" => Ok(AnalyticProfile::OctahedronFaceDown),
            "octahedron-min" | "octahedron-vertex-down" => {
                Ok(AnalyticProfile::OctahedronVertexDown)
            }
            "tetrahedron-max" | "tetrahedron-face-down" => {
                Ok(AnalyticProfile::TetrahedronFaceDown)
            }
            "tetrahedron-min" | "tetrahedron-vertex-down" => {
                Ok(AnalyticProfile::TetrahedronVertexDown)
            }
            "icosahedron-min" | "icosahedron-vertex-down" => {
                Ok(AnalyticProfile::IcosahedronVertexDown)
            }
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

/// Looks up a closed-form profile from the catalog.
pub fn analytic_profile(which: AnalyticProfile) -> AreaProfile {
    let sqrt2 = 2f64.sqrt();
    let sqrt3 = 3f64.sqrt();
    let sqrt5 = 5f64.sqrt();
    let sqrt6 = 6f64.sqrt();
    match which {
        AnalyticProfile::CubeDiagonal => {
            // Three pieces split at H/3 and 2H/3 with H = √3.
            let height = sqrt3;
            let b1 = sqrt3 / 3.0;
            let b2 = 2.0 * sqrt3 / 3.0;
            AreaProfile::new(which.name(), height, vec![b1, b2], move |h| {
                if h < b1 {
                    1.5 * sqrt3 * h * h
                } else if h < b2 {
                    1.5 * sqrt3 * (2.0 * sqrt3 * h - 1.0 - 2.0 * h * h)
                } else {
                    1.5 * sqrt3 * (sqrt3 - h) * (sqrt3 - h)
                }
            })
        }
        AnalyticProfile::OctahedronFaceDown => {
            // Single quadratic piece: the two halves coincide. The midpoint
            // is still recorded as a breakpoint (vertex height).
            let height = sqrt6 / 3.0;
            AreaProfile::new(which.name(), height, vec![height / 2.0], move |h| {
                sqrt3 / 4.0 * (1.0 + sqrt6 * h - 3.0 * h * h)
            })
        }
        AnalyticProfile::OctahedronVertexDown => {
            let height = sqrt2;
            AreaProfile::new(which.name(), height, vec![height / 2.0], move |h| {
                if h < height / 2.0 {
                    2.0 * h * h
                } else {
                    2.0 * (height - h) * (height - h)
                }
            })
        }
        AnalyticProfile::TetrahedronFaceDown => {
            let height = (2f64 / 3.0).sqrt();
            AreaProfile::new(which.name(), height, Vec::new(), move |h| {
                0.375 * sqrt3 * (height - h) * (height - h)
            })
        }
        AnalyticProfile::TetrahedronVertexDown => {
            let height = (2f64 / 3.0).sqrt();
            AreaProfile::new(which.name(), height, Vec::new(), move |h| {
                0.375 * sqrt3 * h * h
            })
        }
        AnalyticProfile::IcosahedronVertexDown => {
            // Pentagon-pyramid caps of growth c·h², a pentagon-minus-five-
            // triangles band in between, symmetric about H/2.
            let height = 2.0 * ((5.0 + sqrt5) / 2.0).sqrt();
            let h_lo = 2.0 * ((5.0 - sqrt5) / 10.0).sqrt();
            let h_hi = height - h_lo;
            let cap = 5.0 / 8.0 * (50.0 + 22.0 * sqrt5).sqrt();
            let band = 5.0 / 4.0 * (7.0 - 3.0 * sqrt5) * (5.0 + 2.0 * sqrt5).sqrt();
            let pentagon = (5.0 * (5.0 + 2.0 * sqrt5)).sqrt();
            AreaProfile::new(which.name(), height, vec![h_lo, h_hi], move |h| {
                if h < h_lo {
                    cap * h * h
                } else if h < h_hi {
                    pentagon + band * (h - h_lo) * (h_hi - h)
                } else {
                    cap * (height - h) * (height - h)
                }
            })
        }
    }
    .expect("catalog profiles are valid")
}

/// The quadratic growth constant of the icosahedron's pentagonal cap,
/// (5/8)·√(50 + 22√5).
pub fn icosahedron_cap_coefficient() -> f64 {
    5.0 / 8.0 * (50.0 + 22.0 * 5f64.sqrt()).sqrt()
}

/// The band coefficient of the icosahedron's middle piece,
/// (5/4)·(7 − 3√5)·√(5 + 2√5).
pub fn icosahedron_band_coefficient() -> f64 {
    let sqrt5 = 5f64.sqrt();
    5.0 / 4.0 * (7.0 - 3.0 * sqrt5) * (5.0 + 2.0 * sqrt5).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::platonic::{platonic, PlatonicSolid};

    #[test]
    fn cube_diagonal_breakpoints() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let dir = Direction::new(1.0, 1.0, 1.0).unwrap();
        let profile = area_profile(&cube, dir);
        let sqrt3 = 3f64.sqrt();
        assert_eq!(profile.breakpoints().len(), 2);
        assert!((profile.breakpoints()[0] - sqrt3 / 3.0).abs() < 1e-12);
        assert!((profile.breakpoints()[1] - 2.0 * sqrt3 / 3.0).abs() < 1e-12);
        assert!((profile.height() - sqrt3).abs() < 1e-12);
    }

    #[test]
    fn axis_aligned_cube_has_no_breakpoints() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let profile = area_profile(&cube, Direction::z());
        assert!(profile.breakpoints().is_empty());
        assert!((profile.area(0.42) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn octahedron_vertex_down_midpoint_breakpoint() {
        let octa = platonic(PlatonicSolid::Octahedron, 1.0).unwrap();
        let dir = octa.vertex_down_direction(0).unwrap();
        let profile = area_profile(&octa, dir);
        let h = 2f64.sqrt();
        assert!((profile.height() - h).abs() < 1e-12);
        assert_eq!(profile.breakpoints().len(), 1);
        assert!((profile.breakpoints()[0] - h / 2.0).abs() < 1e-12);
    }

    #[test]
    fn catalog_matches_mesh_sections() {
        // Shoelace sections against the closed forms, dense sweep.
        let cases: Vec<(AnalyticProfile, ConvexPolyhedron, Direction)> = {
            let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
            let octa = platonic(PlatonicSolid::Octahedron, 1.0).unwrap();
            let tet = platonic(PlatonicSolid::Tetrahedron, 1.0).unwrap();
            let icosa = platonic(PlatonicSolid::Icosahedron, 2.0).unwrap();
            let cube_dir = Direction::new(1.0, 1.0, 1.0).unwrap();
            let octa_face = octa.face_down_direction(0);
            let octa_vertex = octa.vertex_down_direction(0).unwrap();
            let tet_face = tet.face_down_direction(0);
            let tet_vertex = tet.vertex_down_direction(0).unwrap();
            let icosa_vertex = icosa.vertex_down_direction(0).unwrap();
            vec![
                (AnalyticProfile::CubeDiagonal, cube, cube_dir),
                (AnalyticProfile::OctahedronFaceDown, octa.clone(), octa_face),
                (AnalyticProfile::OctahedronVertexDown, octa, octa_vertex),
                (AnalyticProfile::TetrahedronFaceDown, tet.clone(), tet_face),
                (AnalyticProfile::TetrahedronVertexDown, tet, tet_vertex),
                (AnalyticProfile::IcosahedronVertexDown, icosa, icosa_vertex),
            ]
        };
        for (which, poly, dir) in cases {
            let exact = analytic_profile(which);
            let h = exact.height();
            assert!((poly.width(dir) - h).abs() < 1e-10, "{which}: height");
            for k in 0..=1000 {
                let hh = h * k as f64 / 1000.0;
                let measured = cross_section_area(&poly, dir, hh).unwrap();
                let expected = exact.area(hh);
                assert!(
                    (measured - expected).abs() <= 1e-10,
                    "{which}: A({hh}) = {measured}, expected {expected}"
                );
            }
        }
    }

    #[test]
    fn mirror_symmetry_for_central_solids() {
        let octa = platonic(PlatonicSolid::Octahedron, 1.0).unwrap();
        let dir = Direction::new(0.2, -0.7, 0.4).unwrap();
        let profile = area_profile(&octa, dir);
        let h = profile.height();
        for k in 0..=100 {
            let hh = h * k as f64 / 100.0;
            let a = profile.area(hh);
            let b = profile.area(h - hh);
            assert!((a - b).abs() < 1e-10, "A({hh})={a} vs A(H-{hh})={b}");
        }
    }

    #[test]
    fn invalid_breakpoints_rejected() {
        assert!(AreaProfile::new("bad", 1.0, vec![0.5, 0.5], |_| 1.0).is_err());
        assert!(AreaProfile::new("bad", 1.0, vec![1.5], |_| 1.0).is_err());
        assert!(AreaProfile::new("bad", -1.0, vec![], |_| 1.0).is_err());
    }

    #[test]
    fn unknown_profile_name() {
        assert!(matches!(
            "sphere-ish".parse::<AnalyticProfile>(),
            Err(Error::UnknownProfile(_))
        ));
        for which in AnalyticProfile::ALL {
            assert_eq!(which.name().parse::<AnalyticProfile>().unwrap(), which);
        }
    }
}
