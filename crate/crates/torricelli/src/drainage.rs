//! Drainage times and related integrals of an area profile.
//!
//! The total drainage time of a profile A on [0, H] under the lumped
//! constant K is T = (2/K)·∫₀^√H A(s²) ds. The substitution s = √h removes
//! the 1/√h singularity of the raw integrand entirely, and quadrature panels
//! split at the images √b of the profile breakpoints so that every panel is
//! smooth. All times are in units of 1/K.

use crate::error::{Error, Result};
use crate::geometry::{AreaProfile, ConvexPolyhedron, Direction, Vec3};
use crate::numfmt::sig17;
use crate::quad::{adaptive, adaptive_panels, triangle_adaptive, QuadResult, MAX_DEPTH};

/// Absolute tolerance for time, volume, and energy integrals.
pub const INTEGRAL_TOL: f64 = 1e-12;

/// Result of a drainage-time computation.
#[derive(Debug, Clone)]
pub struct DrainageReport {
    /// Total drainage time, units 1/K.
    pub time: f64,
    /// Height of the liquid column at t = 0.
    pub height: f64,
    /// Lumped constant K used.
    pub lumped_constant: f64,
    /// Accumulated quadrature error estimate on the time.
    pub error_estimate: f64,
    /// Description of the profile that was drained.
    pub profile_id: String,
}

impl DrainageReport {
    /// JSON document {"T":…, "H":…, "K":…, "err":…}.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"T\":{},\"H\":{},\"K\":{},\"err\":{}}}",
            sig17(self.time),
            sig17(self.height),
            sig17(self.lumped_constant),
            sig17(self.error_estimate)
        )
    }
}

fn check_k(k: f64) -> f64 {
    assert!(k > 0.0 && k.is_finite(), "lumped constant K must be positive");
    k
}

/// ∫₀^√x A(s²) ds with panels split at breakpoint images.
fn time_integral(profile: &AreaProfile, x: f64, tol: f64) -> Result<QuadResult> {
    let s_max = x.sqrt();
    let mut nodes: Vec<f64> = vec![0.0];
    for b in profile.breakpoints() {
        let s = b.sqrt();
        if s < s_max {
            nodes.push(s);
        }
    }
    nodes.push(s_max);
    adaptive_panels(&|s: f64| profile.area(s * s), &nodes, tol)
}

/// Total drainage time T = (2/K)·∫₀^√H A(s²) ds.
pub fn drainage_time(profile: &AreaProfile, k: f64) -> Result<DrainageReport> {
    check_k(k);
    let integral = time_integral(profile, profile.height(), INTEGRAL_TOL * k / 2.0)?;
    Ok(DrainageReport {
        time: 2.0 * integral.value / k,
        height: profile.height(),
        lumped_constant: k,
        error_estimate: 2.0 * integral.error_estimate / k,
        profile_id: profile.label().to_string(),
    })
}

/// Partial drainage time F(x)/K with F(x) = ∫₀ˣ A(h)/√h dh; equals the full
/// drainage time at x = H.
pub fn partial_time(profile: &AreaProfile, k: f64, x: f64) -> Result<f64> {
    check_k(k);
    let height = profile.height();
    if !(0.0..=height * (1.0 + 1e-12)).contains(&x) {
        return Err(Error::OutOfRange {
            value: x,
            min: 0.0,
            max: height,
        });
    }
    let integral = time_integral(profile, x.min(height), INTEGRAL_TOL * k / 2.0)?;
    Ok(2.0 * integral.value / k)
}

/// Volume ∫₀ᴴ A dh.
pub fn volume(profile: &AreaProfile) -> Result<f64> {
    Ok(adaptive_panels(
        &|h: f64| profile.area(h),
        &profile.panel_nodes(),
        INTEGRAL_TOL,
    )?
    .value)
}

/// Potential-energy integral ∫₀ᴴ A(h)·h dh (per g·δ).
pub fn potential_energy(profile: &AreaProfile) -> Result<f64> {
    Ok(adaptive_panels(
        &|h: f64| profile.area(h) * h,
        &profile.panel_nodes(),
        INTEGRAL_TOL,
    )?
    .value)
}

/// Fraction of the volume between heights h1 and h2.
pub fn fill_fraction(profile: &AreaProfile, h1: f64, h2: f64) -> Result<f64> {
    let height = profile.height();
    if !(0.0 <= h1 && h1 <= h2 && h2 <= height * (1.0 + 1e-12)) {
        return Err(Error::OutOfRange {
            value: if h1 < 0.0 { h1 } else { h2 },
            min: 0.0,
            max: height,
        });
    }
    let mut nodes = vec![h1];
    for &b in profile.breakpoints() {
        if b > h1 && b < h2 {
            nodes.push(b);
        }
    }
    nodes.push(h2.min(height));
    let part = adaptive_panels(&|h: f64| profile.area(h), &nodes, INTEGRAL_TOL)?;
    Ok(part.value / volume(profile)?)
}

/// The symmetric-solid drainage bounds (V/(K√h_C), √2·V/(K√h_C)) for a
/// centrally symmetric solid with centroid height h_C above the orifice.
pub fn symmetric_bounds(volume: f64, centroid_height: f64, k: f64) -> (f64, f64) {
    check_k(k);
    assert!(
        volume > 0.0 && centroid_height > 0.0,
        "volume and centroid height must be positive"
    );
    let base = volume / (k * centroid_height.sqrt());
    (base, 2f64.sqrt() * base)
}

/// Drainage time by the divergence-theorem surface form
/// T = (2/K)·Σ_faces n̂_z·∬_face √z dS with z measured from the orifice
/// plane. Each planar face is fanned into triangles from its centroid and
/// integrated adaptively (refinement clusters near the z = 0 waterline).
pub fn drainage_time_surface(
    poly: &ConvexPolyhedron,
    dir: Direction,
    k: f64,
) -> Result<DrainageReport> {
    check_k(k);
    let (h_min, h_max) = poly.support_extents(dir);
    let height = h_max - h_min;
    let sqrt_z = move |p: Vec3| (dir.dot(p) - h_min).max(0.0).sqrt();

    let triangle_count: usize = poly.faces().iter().map(|f| f.len()).sum();
    let tol = 1e-11 * height.max(1.0).powf(2.5);
    let tri_tol = tol / triangle_count as f64;

    let mut total = 0.0;
    let mut err = 0.0;
    for (fi, face) in poly.faces().iter().enumerate() {
        let n_z = poly.face_normal(fi).dot(dir.as_vec());
        if n_z.abs() < 1e-14 {
            continue;
        }
        let center = face
            .iter()
            .fold(Vec3::ZERO, |acc, &vi| acc + poly.vertices()[vi])
            / face.len() as f64;
        let mut face_integral = 0.0;
        for e in 0..face.len() {
            let a = poly.vertices()[face[e]];
            let b = poly.vertices()[face[(e + 1) % face.len()]];
            let r = triangle_adaptive(&sqrt_z, &[center, a, b], tri_tol, 30)?;
            face_integral += r.value;
            err += r.error_estimate;
        }
        total += n_z * face_integral;
    }

    Ok(DrainageReport {
        time: 2.0 * total / k,
        height,
        lumped_constant: k,
        error_estimate: 2.0 * err / k,
        profile_id: format!("gauss surface form along {dir}"),
    })
}

/// A sampled drainage trajectory: (t, h) pairs with h strictly decreasing
/// from H at t = 0 to 0 at t = T.
#[derive(Debug, Clone)]
pub struct Trajectory {
    samples: Vec<(f64, f64)>,
}

impl Trajectory {
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// Total drainage time (time of the last sample).
    pub fn total_time(&self) -> f64 {
        self.samples.last().map(|&(t, _)| t).unwrap_or(0.0)
    }

    /// CSV document with header `t,h`, one sample per line, 17 significant
    /// digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,h\n");
        for &(t, h) in &self.samples {
            out.push_str(&sig17(t));
            out.push(',');
            out.push_str(&sig17(h));
            out.push('\n');
        }
        out
    }
}

/// Samples the drainage trajectory by inverting the exact time–height
/// relation t(h) = T − F(h)/K at `n_samples` heights.
///
/// The raw drainage ODE is singular as h → 0 (and at pointed tops as
/// h → H), so the trajectory is evaluated through the monotone relation
/// t(h) instead of by stepping the ODE; see [`trajectory_rk_deviation`] for
/// the independent Runge–Kutta cross-check.
pub fn simulate(profile: &AreaProfile, k: f64, n_samples: usize) -> Result<Trajectory> {
    check_k(k);
    assert!(n_samples >= 2, "need at least two trajectory samples");
    let height = profile.height();

    // A must stay positive strictly inside (0, H); a vanishing interior
    // section would stall the drainage.
    let mut probes: Vec<f64> = (1..1024).map(|i| height * i as f64 / 1024.0).collect();
    for w in profile.panel_nodes().windows(2) {
        probes.push(0.5 * (w[0] + w[1]));
    }
    for h in probes {
        if h > 0.0 && h < height && profile.area(h) <= 0.0 {
            return Err(Error::DegenerateProfile { at: h });
        }
    }

    let total = drainage_time(profile, k)?.time;
    let mut samples = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let h = height * (1.0 - i as f64 / (n_samples - 1) as f64);
        let t = if i == 0 {
            0.0
        } else if i == n_samples - 1 {
            total
        } else {
            total - partial_time(profile, k, h)?
        };
        samples.push((t, h));
    }
    Ok(Trajectory { samples })
}

/// Cross-validates the exact t(h) relation against an explicit adaptive
/// Runge–Kutta integration in the substituted variable u = √h, where the
/// drainage law reads dt/du = −2·A(u²)/K and is regular on (0, √H).
///
/// Integration starts at u = √H·(1 − 1e-9) to stay clear of pointed tops
/// where A(H) = 0 makes the raw ODE h′(t) singular at t = 0. Returns the
/// maximum |t_RK − t_exact| over `n_checks` checkpoints.
pub fn trajectory_rk_deviation(
    profile: &AreaProfile,
    k: f64,
    n_checks: usize,
) -> Result<f64> {
    check_k(k);
    assert!(n_checks >= 1);
    let height = profile.height();
    let u_start = height.sqrt() * (1.0 - 1e-9);
    let slope = |u: f64| 2.0 * profile.area(u * u) / k;

    // Classic RK4 over one u-interval, fixed step count.
    let rk4_span = |u0: f64, u1: f64, steps: usize| -> f64 {
        let du = (u1 - u0) / steps as f64;
        let mut acc = 0.0;
        for i in 0..steps {
            let u = u0 + du * i as f64;
            let k1 = slope(u);
            let k2 = slope(u + 0.5 * du);
            let k3 = slope(u + 0.5 * du);
            let k4 = slope(u + du);
            acc += du / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        acc
    };

    // t grows as u decreases from u_start; accumulate span by span with
    // step-doubling until two resolutions agree.
    let start_time = drainage_time(profile, k)?.time - partial_time(profile, k, u_start * u_start)?;
    let mut t_rk = start_time;
    let mut worst: f64 = 0.0;
    let mut u_prev = u_start;
    for i in 1..=n_checks {
        let u_next = u_start * (1.0 - i as f64 / n_checks as f64);
        let mut steps = 16;
        let mut coarse = rk4_span(u_next, u_prev, steps);
        loop {
            let fine = rk4_span(u_next, u_prev, steps * 2);
            if (fine - coarse).abs() < 1e-10 || steps >= 4096 {
                coarse = fine;
                break;
            }
            steps *= 2;
            coarse = fine;
        }
        t_rk += coarse;
        let t_exact =
            drainage_time(profile, k)?.time - partial_time(profile, k, u_next * u_next)?;
        worst = worst.max((t_rk - t_exact).abs());
        u_prev = u_next;
    }
    Ok(worst)
}

/// Residual of the energy identity
/// |∫₀ᴴ A(y)·y dy − K·∫₀ᵀ h(t)^{3/2} dt|,
/// with h(t) recovered from the trajectory by numerically inverting the
/// monotone relation t(h).
pub fn verify_energy_identity(profile: &AreaProfile, k: f64) -> Result<f64> {
    check_k(k);
    let lhs = potential_energy(profile)?;
    let total = drainage_time(profile, k)?.time;
    let height = profile.height();

    // Invert t(h): find h with F(h) = K·(T − t) by bisection (F increasing).
    let height_at = |t: f64| -> Result<f64> {
        let target = total - t;
        let mut lo = 0.0f64;
        let mut hi = height;
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if partial_time(profile, k, mid)? > target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };

    // A failed inner inversion surfaces as NaN and trips the quadrature
    // failure path rather than silently skewing the residual.
    let rhs = adaptive(
        &|t: f64| match height_at(t.clamp(0.0, total)) {
            Ok(h) => h.powf(1.5),
            Err(_) => f64::NAN,
        },
        0.0,
        total,
        1e-9,
        MAX_DEPTH,
    )?;
    Ok((lhs - k * rhs.value).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::platonic::{platonic, PlatonicSolid};
    use crate::geometry::revolution::revolution_area_profile;
    use crate::geometry::{analytic_profile, area_profile, AnalyticProfile, RevolutionProfile};
    use std::f64::consts::PI;

    fn cube_diag_time_expr() -> f64 {
        8.0 * 3f64.powf(0.25) / 5.0 * (1.0 + 3.0 * 3f64.sqrt() - 4.0 * 2f64.sqrt())
    }

    #[test]
    fn constant_profile_is_exact() {
        for h in [0.25, 1.0, 4.0] {
            let p = AreaProfile::constant(1.0, h);
            let r = drainage_time(&p, 1.0).unwrap();
            assert!(
                (r.time - 2.0 * h.sqrt()).abs() < 1e-12,
                "H={h}: got {}",
                r.time
            );
        }
        // Prism of area A: T scales linearly in A and inversely in K.
        let p = AreaProfile::constant(3.0, 1.0);
        let r = drainage_time(&p, 2.0).unwrap();
        assert!((r.time - 3.0).abs() < 1e-12);
    }

    #[test]
    fn cube_diagonal_time_matches_closed_form() {
        let p = analytic_profile(AnalyticProfile::CubeDiagonal);
        let r = drainage_time(&p, 1.0).unwrap();
        assert!(
            (r.time - cube_diag_time_expr()).abs() < 1e-12,
            "got {}",
            r.time
        );
        assert!(r.error_estimate <= INTEGRAL_TOL);
    }

    #[test]
    fn cone_time_is_two_fifths_pi() {
        let g: RevolutionProfile = "y^2".parse().unwrap();
        let p = revolution_area_profile(&g, false);
        let r = drainage_time(&p, 1.0).unwrap();
        assert!((r.time - 2.0 * PI / 5.0).abs() < 1e-12, "got {}", r.time);
    }

    #[test]
    fn partial_time_edges() {
        let p = AreaProfile::constant(1.0, 1.0);
        assert_eq!(partial_time(&p, 1.0, 0.0).unwrap(), 0.0);
        // F(x)/K = 2√x for the unit prism.
        let t = partial_time(&p, 1.0, 0.25).unwrap();
        assert!((t - 1.0).abs() < 1e-12);
        // Endpoint identity: partial at H equals the full time.
        let cube = analytic_profile(AnalyticProfile::CubeDiagonal);
        let full = drainage_time(&cube, 1.0).unwrap().time;
        let part = partial_time(&cube, 1.0, cube.height()).unwrap();
        assert!((full - part).abs() < 1e-13);
        assert!(partial_time(&p, 1.0, 2.0).is_err());
        // Monotone in x.
        let mut last = -1.0;
        for i in 0..=20 {
            let t = partial_time(&cube, 1.0, cube.height() * i as f64 / 20.0).unwrap();
            assert!(t >= last);
            last = t;
        }
    }

    #[test]
    fn simulate_constant_profile_closed_form() {
        let p = AreaProfile::constant(1.0, 1.0);
        let traj = simulate(&p, 1.0, 100).unwrap();
        assert_eq!(traj.samples().len(), 100);
        for &(t, h) in traj.samples() {
            let expected = (1.0 - t / 2.0) * (1.0 - t / 2.0);
            assert!((h - expected).abs() < 1e-9, "t={t}: h={h} vs {expected}");
        }
        let (t_end, h_end) = *traj.samples().last().unwrap();
        assert!((t_end - 2.0).abs() < 1e-12);
        assert_eq!(h_end, 0.0);
        // h strictly decreasing.
        for w in traj.samples().windows(2) {
            assert!(w[1].1 < w[0].1);
            assert!(w[1].0 >= w[0].0);
        }
    }

    #[test]
    fn simulate_cone_matches_antiderivative() {
        // t(h) = (2π/5)(1 − h^{5/2}) from F(h) = (2π/5)h^{5/2}.
        let g: RevolutionProfile = "y^2".parse().unwrap();
        let p = revolution_area_profile(&g, false);
        let traj = simulate(&p, 1.0, 50).unwrap();
        for &(t, h) in traj.samples() {
            let expected = 2.0 * PI / 5.0 * (1.0 - h.powf(2.5));
            assert!((t - expected).abs() < 1e-10, "h={h}: t={t} vs {expected}");
        }
    }

    #[test]
    fn rk_cross_check_agrees() {
        let cases: Vec<AreaProfile> = vec![
            AreaProfile::constant(1.0, 1.0),
            revolution_area_profile(&"y^2".parse().unwrap(), false),
            analytic_profile(AnalyticProfile::CubeDiagonal),
        ];
        for p in cases {
            let dev = trajectory_rk_deviation(&p, 1.0, 16).unwrap();
            assert!(dev < 1e-6, "{}: deviation {dev}", p.label());
        }
    }

    #[test]
    fn degenerate_profile_detected() {
        let p = AreaProfile::new("pinched", 1.0, vec![0.5], |h| {
            if (0.4..=0.6).contains(&h) {
                0.0
            } else {
                1.0
            }
        })
        .unwrap();
        assert!(matches!(
            simulate(&p, 1.0, 10),
            Err(Error::DegenerateProfile { .. })
        ));
    }

    #[test]
    fn potential_energy_values() {
        // Revolution profile from two mixed terms, per-π units.
        let g: RevolutionProfile = "29*y^2*(1-y)+33*y*(1-y)^4".parse().unwrap();
        let upright = potential_energy(&revolution_area_profile(&g, false)).unwrap() / PI;
        let flipped = potential_energy(&revolution_area_profile(&g, true)).unwrap() / PI;
        assert!((upright - 247.0 / 140.0).abs() < 1e-12, "got {upright}");
        assert!((flipped - 184.0 / 105.0).abs() < 1e-12, "got {flipped}");
        assert!((upright - flipped - 1.0 / 84.0).abs() < 1e-12);

        let pe = potential_energy(&analytic_profile(AnalyticProfile::CubeDiagonal)).unwrap();
        assert!((pe - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn energy_identity_residuals() {
        let constant = AreaProfile::constant(1.0, 1.0);
        assert!(verify_energy_identity(&constant, 1.0).unwrap() < 1e-8);
        let cone = revolution_area_profile(&"y^2".parse().unwrap(), false);
        assert!(verify_energy_identity(&cone, 1.0).unwrap() < 1e-8);
        let cube = analytic_profile(AnalyticProfile::CubeDiagonal);
        assert!(verify_energy_identity(&cube, 1.0).unwrap() < 1e-6);
    }

    #[test]
    fn volume_values() {
        let octa = analytic_profile(AnalyticProfile::OctahedronFaceDown);
        assert!((volume(&octa).unwrap() - 2f64.sqrt() / 3.0).abs() < 1e-12);
        let cube = analytic_profile(AnalyticProfile::CubeDiagonal);
        assert!((volume(&cube).unwrap() - 1.0).abs() < 1e-12);
        let icosa = analytic_profile(AnalyticProfile::IcosahedronVertexDown);
        let expected = 10.0 / 3.0 * (3.0 + 5f64.sqrt());
        assert!((volume(&icosa).unwrap() - expected).abs() < 1e-10);
    }

    #[test]
    fn fill_fraction_values() {
        let cube = analytic_profile(AnalyticProfile::CubeDiagonal);
        let f = fill_fraction(&cube, 0.0, 5.0 * 3f64.sqrt() / 9.0).unwrap();
        assert!((f - 101.0 / 162.0).abs() < 1e-12, "got {f}");

        let octa = analytic_profile(AnalyticProfile::OctahedronFaceDown);
        let h = octa.height();
        let half = fill_fraction(&octa, 0.0, h / 2.0).unwrap();
        assert!((half - 0.5).abs() < 1e-12);
        let third = fill_fraction(&octa, 0.0, h / 3.0).unwrap();
        assert!((third - 34.0 / 108.0).abs() < 1e-12);

        assert!(fill_fraction(&cube, 0.5, 0.2).is_err());
        assert!(fill_fraction(&cube, -0.1, 0.2).is_err());
    }

    #[test]
    fn symmetric_bounds_cases() {
        // Cube face-down: V = 1, h_C = 1/2; the prism attains the upper bound.
        let (lo, hi) = symmetric_bounds(1.0, 0.5, 1.0);
        assert!((lo - 2f64.sqrt()).abs() < 1e-15);
        assert!((hi - 2.0).abs() < 1e-15);
        let t = drainage_time(&AreaProfile::constant(1.0, 1.0), 1.0)
            .unwrap()
            .time;
        assert!((t - hi).abs() < 1e-12);

        // Cube on the diagonal: h_C = √3/2, time strictly inside the bounds.
        let (lo, hi) = symmetric_bounds(1.0, 3f64.sqrt() / 2.0, 1.0);
        let t = drainage_time(&analytic_profile(AnalyticProfile::CubeDiagonal), 1.0)
            .unwrap()
            .time;
        assert!(lo < t && t < hi, "{lo} < {t} < {hi}");

        // Upright 1×1×n box: lower bound is √(2n).
        let n = 9.0;
        let (lo, _) = symmetric_bounds(n, n / 2.0, 1.0);
        assert!((lo - (2.0 * n).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn surface_form_cube_and_tetrahedron() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let r = drainage_time_surface(&cube, Direction::z(), 1.0).unwrap();
        assert!((r.time - 2.0).abs() < 1e-8, "got {}", r.time);

        let tet = platonic(PlatonicSolid::Tetrahedron, 1.0).unwrap();
        let dir = tet.vertex_down_direction(0).unwrap();
        let r = drainage_time_surface(&tet, dir, 1.0).unwrap();
        let expected = 3f64.powf(0.25) / (5.0 * 2f64.powf(0.75));
        assert!((r.time - expected).abs() < 1e-8, "got {}", r.time);

        let diag = Direction::new(1.0, 1.0, 1.0).unwrap();
        let r = drainage_time_surface(&cube, diag, 1.0).unwrap();
        assert!((r.time - cube_diag_time_expr()).abs() < 1e-8, "got {}", r.time);
    }

    #[test]
    fn surface_form_matches_profile_quadrature() {
        let octa = platonic(PlatonicSolid::Octahedron, 1.0).unwrap();
        let dir = Direction::new(0.3, -0.2, 0.93).unwrap();
        let t_profile = drainage_time(&area_profile(&octa, dir), 1.0).unwrap().time;
        let t_surface = drainage_time_surface(&octa, dir, 1.0).unwrap().time;
        assert!((t_profile - t_surface).abs() < 1e-8);
    }

    #[test]
    fn scaling_law() {
        let cube = platonic(PlatonicSolid::Cube, 1.0).unwrap();
        let dir = Direction::new(0.2, 0.3, 0.9).unwrap();
        let base = drainage_time(&area_profile(&cube, dir), 1.0).unwrap().time;
        for lambda in [0.5, 2.0] {
            let scaled = cube.scaled(lambda).unwrap();
            let t = drainage_time(&area_profile(&scaled, dir), 1.0).unwrap().time;
            assert!(
                (t - lambda.powf(2.5) * base).abs() < 1e-9,
                "λ={lambda}: {t} vs {}",
                lambda.powf(2.5) * base
            );
        }
    }

    #[test]
    fn report_json_shape() {
        let r = drainage_time(&AreaProfile::constant(1.0, 1.0), 1.0).unwrap();
        let json = r.to_json();
        assert!(json.starts_with("{\"T\":2.0000000000000000e0,"), "{json}");
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["T"].as_f64().unwrap(), 2.0);
    }

    #[test]
    fn trajectory_csv_shape() {
        let traj = simulate(&AreaProfile::constant(1.0, 1.0), 1.0, 3).unwrap();
        let csv = traj.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,h"));
        assert_eq!(lines.count(), 3);
    }
}
