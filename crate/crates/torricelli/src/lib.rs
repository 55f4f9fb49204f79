//! Drainage times and shape invariants of convex solids under the
//! quasi-static outflow law v = √(2gh).
//!
//! The library slices convex polyhedra into exact cross-sectional area
//! profiles, integrates the drainage time T = (2/K)·∫₀^√H A(s²) ds with
//! adaptive Gauss–Kronrod panels, optimizes T over orientations to obtain
//! the Torricelli number T_max/T_min, computes turn-up numbers of solids of
//! revolution, and constructs asymmetric clepsydra profiles whose turn-up
//! number is exactly 1 using big-rational moment arithmetic.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `torricelli` binary, which exposes the same operations as subcommands.

pub mod clepsydra;
pub mod drainage;
pub mod error;
pub mod geometry;
pub mod numfmt;
pub mod orientation;
pub mod quad;

pub mod cli;

pub use error::{Error, Result};
pub use geometry::{
    analytic_profile, area_profile, centered_box, cross_section_area, platonic, validate_mesh,
    AnalyticProfile, AreaProfile, ConvexPolyhedron, Direction, PhysicalConstants, PlatonicSolid,
    RevolutionProfile, RevolutionTerm, Vec3,
};

pub use drainage::{
    drainage_time, drainage_time_surface, fill_fraction, partial_time, potential_energy,
    simulate, symmetric_bounds, verify_energy_identity, volume, DrainageReport, Trajectory,
};
pub use orientation::{
    torricelli_closed_forms, torricelli_number, turn_up_number, TorricelliReport, TurnUpReport,
};
