//! Adaptive quadrature: nested Gauss–Kronrod panels on intervals and a
//! midpoint-subdivision scheme over triangles for surface integrals.
//!
//! Interval integration uses the 7/15 Gauss–Kronrod pair. Integrands are
//! expected to be smooth per panel; callers split at known breakpoints via
//! [`adaptive_panels`] so that each panel sees an analytic piece.

use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Default maximum bisection depth for interval quadrature.
pub const MAX_DEPTH: usize = 40;

/// Value and error estimate of a quadrature run.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    /// Approximation to the integral.
    pub value: f64,
    /// Accumulated error estimate (absolute).
    pub error_estimate: f64,
}

// 15-point Kronrod abscissae on [-1, 1], positive half, paired with the
// embedded 7-point Gauss rule (even-indexed abscissae).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One 7/15 Gauss–Kronrod panel on [a, b].
///
/// Returns the Kronrod value and a scaled error estimate in the style of
/// QUADPACK's `qk15` (the raw |K15 - G7| difference is sharpened by the
/// integrand's deviation from its mean, which keeps the estimate honest on
/// nearly-singular panels).
pub fn gauss_kronrod_15<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_gauss = fc * WG[3];
    let mut result_kronrod = fc * WGK[7];

    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        result_kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = result_kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    resasc *= half.abs();

    let value = result_kronrod * half;
    let raw = ((result_kronrod - result_gauss) * half).abs();
    let err = if resasc != 0.0 && raw != 0.0 {
        resasc * (200.0 * raw / resasc).powf(1.5).min(1.0)
    } else {
        raw
    };
    (value, err)
}

/// Cap on worst-first subdivisions for a single adaptive run.
const MAX_SPLITS: usize = 4096;

/// Adaptive 7/15 Gauss–Kronrod quadrature to an absolute tolerance.
///
/// Worst-first strategy: the panel with the largest error estimate is
/// bisected until the summed estimate meets the tolerance, so refinement
/// concentrates on kinks and square-root corners without starving them of
/// error budget.
pub fn adaptive<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: usize,
) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
        });
    }

    struct Panel {
        value: f64,
        err: f64,
        a: f64,
        b: f64,
        depth: usize,
    }
    let eval = |a: f64, b: f64, depth: usize| {
        let (value, err) = gauss_kronrod_15(f, a, b);
        Panel {
            value,
            err,
            a,
            b,
            depth,
        }
    };

    let mut panels = vec![eval(a, b, 0)];
    let mut value_sum = panels[0].value;
    let mut err_sum = panels[0].err;
    for _ in 0..MAX_SPLITS {
        if !(value_sum.is_finite() && err_sum.is_finite()) {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: f64::INFINITY,
            });
        }
        // A few ulps of the accumulated value is the best any budget can ask.
        if err_sum <= tol.max(1e-15 * value_sum.abs()) {
            return Ok(QuadResult {
                value: value_sum,
                error_estimate: err_sum,
            });
        }
        let mut worst: Option<usize> = None;
        for (i, p) in panels.iter().enumerate() {
            if p.depth >= max_depth {
                continue;
            }
            let mid = 0.5 * (p.a + p.b);
            if !(mid > p.a.min(p.b) && mid < p.a.max(p.b)) {
                continue;
            }
            if worst.map_or(true, |w: usize| p.err > panels[w].err) {
                worst = Some(i);
            }
        }
        let Some(w) = worst else {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: err_sum,
            });
        };
        let p = panels.swap_remove(w);
        value_sum -= p.value;
        err_sum -= p.err;
        let mid = 0.5 * (p.a + p.b);
        let left = eval(p.a, mid, p.depth + 1);
        let right = eval(mid, p.b, p.depth + 1);
        value_sum += left.value + right.value;
        err_sum += left.err + right.err;
        panels.push(left);
        panels.push(right);
    }
    Err(Error::QuadratureFailure {
        tolerance: tol,
        estimate: err_sum,
    })
}

/// Integrates over consecutive panels `[nodes[0], nodes[1]], ...`, running the
/// adaptive scheme on each panel with an equal share of the tolerance.
///
/// `nodes` must be sorted ascending and include both endpoints.
pub fn adaptive_panels<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    nodes: &[f64],
    tol: f64,
) -> Result<QuadResult> {
    assert!(nodes.len() >= 2, "need at least two panel nodes");
    let panels = nodes.len() - 1;
    let share = tol / panels as f64;
    let mut total = 0.0;
    let mut err = 0.0;
    for w in nodes.windows(2) {
        let r = adaptive(f, w[0], w[1], share, MAX_DEPTH)?;
        total += r.value;
        err += r.error_estimate;
    }
    Ok(QuadResult {
        value: total,
        error_estimate: err,
    })
}

// Degree-5 symmetric 7-point rule on a triangle (barycentric points and
// weights relative to the triangle area).
const TRI_PTS: [([f64; 3], f64); 7] = [
    ([1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0], 0.225),
    (
        [
            0.059_715_871_789_769_820,
            0.470_142_064_105_115_090,
            0.470_142_064_105_115_090,
        ],
        0.132_394_152_788_506_18,
    ),
    (
        [
            0.470_142_064_105_115_090,
            0.059_715_871_789_769_820,
            0.470_142_064_105_115_090,
        ],
        0.132_394_152_788_506_18,
    ),
    (
        [
            0.470_142_064_105_115_090,
            0.470_142_064_105_115_090,
            0.059_715_871_789_769_820,
        ],
        0.132_394_152_788_506_18,
    ),
    (
        [
            0.797_426_985_353_087_320,
            0.101_286_507_323_456_340,
            0.101_286_507_323_456_340,
        ],
        0.125_939_180_544_827_15,
    ),
    (
        [
            0.101_286_507_323_456_340,
            0.797_426_985_353_087_320,
            0.101_286_507_323_456_340,
        ],
        0.125_939_180_544_827_15,
    ),
    (
        [
            0.101_286_507_323_456_340,
            0.101_286_507_323_456_340,
            0.797_426_985_353_087_320,
        ],
        0.125_939_180_544_827_15,
    ),
];

fn triangle_area(t: &[Vec3; 3]) -> f64 {
    0.5 * (t[1] - t[0]).cross(t[2] - t[0]).norm()
}

fn triangle_rule<F: Fn(Vec3) -> f64 + ?Sized>(f: &F, t: &[Vec3; 3]) -> f64 {
    let area = triangle_area(t);
    let mut sum = 0.0;
    for (bary, w) in TRI_PTS.iter() {
        let p = t[0] * bary[0] + t[1] * bary[1] + t[2] * bary[2];
        sum += w * f(p);
    }
    sum * area
}

fn subdivide(tri: &[Vec3; 3]) -> [[Vec3; 3]; 4] {
    let m01 = (tri[0] + tri[1]) * 0.5;
    let m12 = (tri[1] + tri[2]) * 0.5;
    let m20 = (tri[2] + tri[0]) * 0.5;
    [
        [tri[0], m01, m20],
        [m01, tri[1], m12],
        [m20, m12, tri[2]],
        [m01, m12, m20],
    ]
}

/// Adaptive integral of `f` over a flat triangle in 3-space.
///
/// Each panel's value is the one-level-subdivided estimate and its error the
/// coarse/fine difference; the worst panel is split into its four midpoint
/// children until the summed estimate meets the tolerance. Refinement
/// concentrates around square-root edges such as the waterline z = 0 of the
/// Gauss surface form.
pub fn triangle_adaptive<F: Fn(Vec3) -> f64 + ?Sized>(
    f: &F,
    tri: &[Vec3; 3],
    tol: f64,
    max_depth: usize,
) -> Result<QuadResult> {
    if triangle_area(tri) == 0.0 {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
        });
    }

    struct Panel {
        value: f64,
        err: f64,
        tri: [Vec3; 3],
        depth: usize,
    }
    let eval = |tri: [Vec3; 3], depth: usize| {
        let coarse = triangle_rule(f, &tri);
        let fine: f64 = subdivide(&tri)
            .iter()
            .map(|child| triangle_rule(f, child))
            .sum();
        Panel {
            value: fine,
            err: (fine - coarse).abs(),
            tri,
            depth,
        }
    };

    let mut panels = vec![eval(*tri, 0)];
    let mut value_sum = panels[0].value;
    let mut err_sum = panels[0].err;
    for _ in 0..MAX_SPLITS {
        if !(value_sum.is_finite() && err_sum.is_finite()) {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: f64::INFINITY,
            });
        }
        if err_sum <= tol.max(1e-15 * value_sum.abs()) {
            return Ok(QuadResult {
                value: value_sum,
                error_estimate: err_sum,
            });
        }
        let mut worst: Option<usize> = None;
        for (i, p) in panels.iter().enumerate() {
            if p.depth >= max_depth {
                continue;
            }
            if worst.map_or(true, |w: usize| p.err > panels[w].err) {
                worst = Some(i);
            }
        }
        let Some(w) = worst else {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: err_sum,
            });
        };
        let p = panels.swap_remove(w);
        value_sum -= p.value;
        err_sum -= p.err;
        for child in subdivide(&p.tri) {
            let c = eval(child, p.depth + 1);
            value_sum += c.value;
            err_sum += c.err;
            panels.push(c);
        }
    }
    Err(Error::QuadratureFailure {
        tolerance: tol,
        estimate: err_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact_on_one_panel() {
        // GK15 integrates polynomials up to degree 22 exactly.
        let f = |x: f64| 3.0 * x.powi(8) - 2.0 * x.powi(3) + 1.0;
        let r = adaptive(&f, 0.0, 2.0, 1e-13, MAX_DEPTH).unwrap();
        let exact = 3.0 * 2f64.powi(9) / 9.0 - 2.0 * 2f64.powi(4) / 4.0 + 2.0;
        assert!((r.value - exact).abs() < 1e-12, "got {}", r.value);
    }

    #[test]
    fn constant_profile_time_integrand() {
        // 2 * integral of 1 ds over [0, sqrt(H)] = 2 sqrt(H), exactly.
        for h in [0.25f64, 1.0, 4.0] {
            let r = adaptive(&|_s: f64| 1.0, 0.0, h.sqrt(), 1e-13, MAX_DEPTH).unwrap();
            assert!((2.0 * r.value - 2.0 * h.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn splits_handle_sqrt_kink() {
        // |x|^(1/2) kink at 0.5: adaptive refinement still converges.
        let f = |x: f64| (x - 0.5f64).abs().sqrt();
        let r = adaptive(&f, 0.0, 1.0, 1e-10, MAX_DEPTH).unwrap();
        let exact = 2.0 * (0.5f64).powf(1.5) * 2.0 / 3.0;
        assert!((r.value - exact).abs() < 1e-9, "got {}", r.value);
    }

    #[test]
    fn panels_split_at_breakpoints() {
        // Piecewise quadratic, one panel per smooth piece: machine accuracy.
        let f = |x: f64| if x < 1.0 { x * x } else { (2.0 - x) * (2.0 - x) };
        let r = adaptive_panels(&f, &[0.0, 1.0, 2.0], 1e-13).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn tolerance_failure_reported() {
        // A genuinely nasty integrand with tiny depth budget must fail loudly.
        let f = |x: f64| if x == 0.0 { 0.0 } else { (1.0 / x).sin() };
        let e = adaptive(&f, 0.0, 1.0, 1e-14, 2);
        assert!(matches!(e, Err(Error::QuadratureFailure { .. })));
    }

    #[test]
    fn triangle_rule_degree_five() {
        // x^2 y over the unit right triangle: 1/60.
        let tri = [
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
        ];
        let r = triangle_adaptive(&|p: Vec3| p.x * p.x * p.y, &tri, 1e-13, 10).unwrap();
        assert!((r.value - 1.0 / 60.0).abs() < 1e-14, "got {}", r.value);
    }

    #[test]
    fn triangle_sqrt_edge_singularity() {
        // sqrt(y) over the unit right triangle: int_0^1 sqrt(y)(1-y) dy = 4/15.
        let tri = [
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
        ];
        let r = triangle_adaptive(&|p: Vec3| p.y.max(0.0).sqrt(), &tri, 1e-11, 32).unwrap();
        assert!((r.value - 4.0 / 15.0).abs() < 1e-10, "got {}", r.value);
    }
}
