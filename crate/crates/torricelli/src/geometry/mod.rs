//! Convex solids and their cross-sectional area profiles.
//!
//! Everything downstream (drainage times, orientation searches, clepsydra
//! design) consumes an [`AreaProfile`]; this module produces them from
//! polyhedral meshes, the closed-form catalog, and solids of revolution.

pub mod io;
pub mod mesh;
pub mod platonic;
pub mod profile;
pub mod revolution;
pub mod section;
mod vec3;

pub use mesh::{validate_mesh, ConvexPolyhedron, Direction, PhysicalConstants, EPS_GEOM};
pub use platonic::{centered_box, platonic, PlatonicSolid};
pub use profile::{analytic_profile, area_profile, AnalyticProfile, AreaProfile};
pub use revolution::{revolution_area_profile, RevolutionProfile, RevolutionTerm};
pub use section::{cross_section_area, section_polygon};
pub use vec3::Vec3;
