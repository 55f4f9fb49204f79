//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating geometry, assembling
/// profiles, or integrating.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex lies outside a face plane by more than the geometric tolerance.
    #[error("mesh is not convex: vertex {vertex} lies {distance:.3e} outside the plane of face {face}")]
    NonConvex {
        vertex: usize,
        face: usize,
        distance: f64,
    },

    /// A face cycle is not planar within the geometric tolerance.
    #[error("face {face} is not planar: vertex {vertex} is {distance:.3e} off the face plane")]
    NonPlanarFace {
        face: usize,
        vertex: usize,
        distance: f64,
    },

    /// An edge is not shared by exactly two faces.
    #[error("mesh surface is not closed: edge ({a}, {b}) appears in {count} face(s), expected 2")]
    OpenSurface { a: usize, b: usize, count: usize },

    /// Raw mesh data is structurally unusable (empty lists, bad indices, ...).
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    /// A direction vector with (near-)zero norm cannot be normalized.
    #[error("cannot normalize a zero-length direction vector")]
    ZeroDirection,

    /// A height argument falls outside the profile domain.
    #[error("argument {value} outside the valid range [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },

    /// Profile construction data violates an invariant.
    #[error("invalid area profile: {0}")]
    InvalidProfile(String),

    /// The requested catalog profile does not exist.
    #[error("unknown analytic profile `{0}`")]
    UnknownProfile(String),

    /// The requested solid name is not in the catalog.
    #[error("unknown solid `{0}`")]
    UnknownSolid(String),

    /// A revolution profile takes negative values on [0, 1].
    #[error("profile is negative on [0,1]: g({at}) = {value:.3e}")]
    NegativeProfile { at: f64, value: f64 },

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature failed to reach tolerance {tolerance:.1e}: error estimate {estimate:.3e} at max subdivision")]
    QuadratureFailure { tolerance: f64, estimate: f64 },

    /// The area profile vanishes on an interior interval, so the drainage
    /// trajectory is not well defined past that point.
    #[error("degenerate profile: area vanishes near h = {at}")]
    DegenerateProfile { at: f64 },

    /// A turn-up ratio denominator integrates to zero.
    #[error("profile encloses zero volume")]
    ZeroVolume,

    /// The polyhedron is not centrally symmetric, so symmetric-solid bounds
    /// do not apply.
    #[error("polyhedron is not centrally symmetric: vertex {vertex} has no mirror partner")]
    NotCentrallySymmetric { vertex: usize },

    /// The two circle points of the rotation lemma coincide.
    #[error("lemma requires distinct angles, got s = t = {0}")]
    CoincidentPoints(f64),

    /// No rotation angle keeps both radicands positive.
    #[error("no rotation angle keeps both radicands positive")]
    EmptyDomain,

    /// The extension perturbation is not orthogonal to cos(pi/4 + t).
    #[error("perturbation violates the balance condition: weighted integral = {0:.3e}")]
    UnbalancedPerturbation(f64),

    /// The extended profile would not stay positive on (0, 1).
    #[error("extension is not positive: g({at}) = {value:.3e}")]
    NonPositiveResult { at: f64, value: f64 },

    /// The perturbation does not vanish at pi/4, so the two halves of the
    /// extended profile would not join continuously.
    #[error("discontinuous join at y = 1/2: h(pi/4) = {0:.3e}")]
    DiscontinuousJoin(f64),

    /// Text input (profile DSL, mesh file) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// File I/O error while reading or writing meshes.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
