//! Balanced clepsydra profiles: solids of revolution that drain in the same
//! time either way up.
//!
//! All moment arithmetic here is exact: coefficients are big rationals,
//! yᵐ(1−y)ⁿ expands binomially at y = s² so that ∫₀¹ s^{2j} ds = 1/(2j+1)
//! closes the integral in ℚ. Balance constants, potential energies, and
//! endpoint slopes therefore come out as exact fractions, not floats.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{RevolutionProfile, RevolutionTerm};
use crate::quad::{adaptive, MAX_DEPTH};

fn binomial(n: u32, k: u32) -> BigInt {
    let mut value = BigInt::one();
    for i in 0..k.min(n - k) {
        value = value * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    value
}

/// Exact ∫₀¹ (s²)ᵐ(1−s²)ⁿ ds = Σⱼ (−1)ʲ C(n,j)/(2m+2j+1).
fn term_sqrt_moment(m: u32, n: u32) -> BigRational {
    let mut sum = BigRational::zero();
    for j in 0..=n {
        let mut num = binomial(n, j);
        if j % 2 == 1 {
            num = -num;
        }
        sum += BigRational::new(num, BigInt::from(2 * (m + j) + 1));
    }
    sum
}

/// Exact ∫₀¹ yᵐ(1−y)ⁿ dy = m!·n!/(m+n+1)!.
fn beta_integral(m: u32, n: u32) -> BigRational {
    // Multiply incrementally to keep the integers small.
    let mut value = BigRational::new(BigInt::one(), BigInt::from(m + n + 1));
    for i in 1..=n {
        value *= BigRational::new(BigInt::from(i), BigInt::from(m + i));
    }
    value
}

/// Exact drainage moment ∫₀¹ g(s²) ds, or ∫₀¹ g(1−s²) ds when `flipped`
/// (equivalently: the moment of the mirrored profile).
pub fn moment(profile: &RevolutionProfile, flipped: bool) -> BigRational {
    profile
        .terms()
        .iter()
        .map(|t| {
            let (m, n) = if flipped { (t.n, t.m) } else { (t.m, t.n) };
            &t.coeff * term_sqrt_moment(m, n)
        })
        .sum()
}

/// Exact potential-energy moment ∫₀¹ g(y)·y dy (per π·g·δ), or with g(1−y)
/// when `flipped`.
pub fn potential_moment(profile: &RevolutionProfile, flipped: bool) -> BigRational {
    profile
        .terms()
        .iter()
        .map(|t| {
            let (m, n) = if flipped { (t.n, t.m) } else { (t.m, t.n) };
            &t.coeff * beta_integral(m + 1, n)
        })
        .sum()
}

/// Exact volume moment ∫₀¹ g(y) dy (per π).
pub fn volume_moment(profile: &RevolutionProfile) -> BigRational {
    profile
        .terms()
        .iter()
        .map(|t| &t.coeff * beta_integral(t.m, t.n))
        .sum()
}

/// Exact ∫ₐᵇ g(y) dy for rational bounds 0 ≤ a ≤ b ≤ 1, by binomial
/// expansion and an exact polynomial antiderivative.
pub fn integral_between(
    profile: &RevolutionProfile,
    a: &BigRational,
    b: &BigRational,
) -> Result<BigRational> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    if *a < zero || b < a || *b > one {
        return Err(Error::OutOfRange {
            value: a.to_f64().unwrap_or(f64::NAN),
            min: 0.0,
            max: 1.0,
        });
    }
    let antiderivative = |y: &BigRational| -> BigRational {
        let mut sum = BigRational::zero();
        for t in profile.terms() {
            for j in 0..=t.n {
                let mut num = binomial(t.n, j);
                if j % 2 == 1 {
                    num = -num;
                }
                let power = (t.m + j + 1) as i32;
                sum += &t.coeff
                    * BigRational::new(num, BigInt::from(t.m + j + 1))
                    * y.pow(power);
            }
        }
        sum
    };
    Ok(antiderivative(b) - antiderivative(a))
}

/// Exact fraction of the volume between rational heights.
pub fn exact_fill_fraction(
    profile: &RevolutionProfile,
    a: &BigRational,
    b: &BigRational,
) -> Result<BigRational> {
    let total = volume_moment(profile);
    if total.is_zero() {
        return Err(Error::ZeroVolume);
    }
    Ok(integral_between(profile, a, b)? / total)
}

/// Outcome of balancing C·u1 + u2.
#[derive(Debug, Clone, PartialEq)]
pub enum BalanceSolution {
    /// The unique constant making the combination balanced.
    Unique(BigRational),
    /// Both terms are individually balanced; any constant works (use 1).
    Symmetric,
    /// u1 is balanced but u2 is not: no constant can fix it.
    Unsolvable,
}

/// Solves C·Δ₁ + Δ₂ = 0 where Δᵢ is the upright-minus-flipped moment of the
/// monomial yᵐ(1−y)ⁿ.
pub fn solve_balanced(u1: (u32, u32), u2: (u32, u32)) -> BalanceSolution {
    let delta = |(m, n): (u32, u32)| term_sqrt_moment(m, n) - term_sqrt_moment(n, m);
    let d1 = delta(u1);
    let d2 = delta(u2);
    if d1.is_zero() {
        if d2.is_zero() {
            BalanceSolution::Symmetric
        } else {
            BalanceSolution::Unsolvable
        }
    } else {
        BalanceSolution::Unique(-d2 / d1)
    }
}

/// Certificate that a profile yields a sound solid of revolution: concavity
/// of g on a dense grid plus exact endpoint slopes. The solid has a tangent
/// plane everywhere (no pointed ends) iff g′(0) > 0 and g′(1) < 0, since
/// dy/dx = √g/g′ vanishes at the poles exactly then.
#[derive(Debug, Clone)]
pub struct ConvexityCertificate {
    /// g″ ≤ 0 on a 10⁴-point grid.
    pub concave: bool,
    /// Exact g′(0).
    pub derivative_at_zero: BigRational,
    /// Exact g′(1).
    pub derivative_at_one: BigRational,
    /// True when the surface of revolution is smooth at both poles.
    pub smooth_of_revolution: bool,
}

/// Certifies concavity and pole smoothness of a two-sided profile.
pub fn convexity_certificate(profile: &RevolutionProfile) -> ConvexityCertificate {
    let first = profile.derivative_terms();
    let mut second: Vec<RevolutionTerm> = Vec::new();
    for t in &first {
        if t.m > 0 {
            second.push(RevolutionTerm::new(
                &t.coeff * BigInt::from(t.m),
                t.m - 1,
                t.n,
            ));
        }
        if t.n > 0 {
            second.push(RevolutionTerm::new(
                -(&t.coeff * BigInt::from(t.n)),
                t.m,
                t.n - 1,
            ));
        }
    }
    let eval_second = |y: f64| -> f64 {
        second
            .iter()
            .map(|t| {
                t.coeff.to_f64().unwrap_or(f64::NAN)
                    * y.powi(t.m as i32)
                    * (1.0 - y).powi(t.n as i32)
            })
            .sum()
    };
    let scale: f64 = second
        .iter()
        .map(|t| t.coeff.abs().to_f64().unwrap_or(1.0))
        .sum::<f64>()
        .max(1.0);
    let concave = (0..=10_000).all(|i| eval_second(i as f64 / 10_000.0) <= 1e-9 * scale);

    let (d0, d1) = profile.endpoint_derivatives();
    let zero = BigRational::zero();
    let smooth = d0 > zero && d1 < zero;
    ConvexityCertificate {
        concave,
        derivative_at_zero: d0,
        derivative_at_one: d1,
        smooth_of_revolution: smooth,
    }
}

/// A profile whose two drainage moments agree exactly.
#[derive(Debug, Clone)]
pub struct BalancedProfile {
    pub profile: RevolutionProfile,
    /// Exact upright-minus-flipped moment; zero by construction.
    pub residual: BigRational,
    pub certificate: ConvexityCertificate,
}

/// Balances the pair yᵐ(1−y)ⁿ, yᵖ(1−y)^q into an integer-coefficient
/// profile a·u1 + b·u2 with turn-up number exactly 1.
pub fn balance_pair(u1: (u32, u32), u2: (u32, u32)) -> Result<BalancedProfile> {
    let (a, b) = match solve_balanced(u1, u2) {
        BalanceSolution::Unique(c) => (c.numer().clone(), c.denom().clone()),
        BalanceSolution::Symmetric => (BigInt::one(), BigInt::one()),
        BalanceSolution::Unsolvable => {
            return Err(Error::InvalidProfile(format!(
                "no balancing constant exists for y^{}(1-y)^{} against y^{}(1-y)^{}",
                u1.0, u1.1, u2.0, u2.1
            )))
        }
    };
    let profile = RevolutionProfile::new(vec![
        RevolutionTerm::new(BigRational::from_integer(a), u1.0, u1.1),
        RevolutionTerm::new(BigRational::from_integer(b), u2.0, u2.1),
    ])?;
    if !profile.is_two_sided() {
        return Err(Error::InvalidProfile(
            "balanced profile must vanish at both ends (m, n ≥ 1)".into(),
        ));
    }
    let residual = moment(&profile, false) - moment(&profile, true);
    debug_assert!(residual.is_zero());
    let certificate = convexity_certificate(&profile);
    Ok(BalancedProfile {
        profile,
        residual,
        certificate,
    })
}

/// A balanced integer-coefficient pair found by enumeration.
#[derive(Debug, Clone)]
pub struct BalancedPair {
    pub exponents: ((u32, u32), (u32, u32)),
    pub coefficients: (BigInt, BigInt),
    pub profile: RevolutionProfile,
}

/// Enumerates asymmetric balanced pairs a·yᵐ(1−y)ⁿ + b·yᵖ(1−y)^q with all
/// exponents in [1, `max_exponent`], ordered by coefficient magnitude. No
/// minimality is claimed; this is a search convenience.
pub fn enumerate_balanced(max_exponent: u32) -> Vec<BalancedPair> {
    let mut monomials: Vec<(u32, u32)> = Vec::new();
    for m in 1..=max_exponent {
        for n in 1..=max_exponent {
            monomials.push((m, n));
        }
    }
    let mut found = Vec::new();
    for i in 0..monomials.len() {
        for j in i + 1..monomials.len() {
            let (u1, u2) = (monomials[i], monomials[j]);
            let BalanceSolution::Unique(c) = solve_balanced(u1, u2) else {
                continue;
            };
            // Sign-mixed combinations can dip negative; RevolutionProfile's
            // positivity check filters those below.
            let (a, b) = (c.numer().clone(), c.denom().clone());
            let Ok(profile) = RevolutionProfile::new(vec![
                RevolutionTerm::new(BigRational::from_integer(a.clone()), u1.0, u1.1),
                RevolutionTerm::new(BigRational::from_integer(b.clone()), u2.0, u2.1),
            ]) else {
                continue;
            };
            if profile_is_symmetric(&profile) {
                continue;
            }
            found.push(BalancedPair {
                exponents: (u1, u2),
                coefficients: (a, b),
                profile,
            });
        }
    }
    found.sort_by(|x, y| {
        let mx = x.coefficients.0.abs().max(x.coefficients.1.abs());
        let my = y.coefficients.0.abs().max(y.coefficients.1.abs());
        (mx, x.exponents).cmp(&(my, y.exponents))
    });
    found
}

/// Exact symmetry test g(y) = g(1−y) on collected like terms.
pub fn profile_is_symmetric(profile: &RevolutionProfile) -> bool {
    use std::collections::BTreeMap;
    let mut collected: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    for t in profile.terms() {
        *collected.entry((t.m, t.n)).or_insert_with(BigRational::zero) += t.coeff.clone();
        *collected.entry((t.n, t.m)).or_insert_with(BigRational::zero) -= t.coeff.clone();
    }
    collected.values().all(|v| v.is_zero())
}

/// Residual of the trigonometric characterization of ρ = 1:
/// ∫₀^{π/4} [g(cos²t) − g(sin²t)]·cos(π/4 + t) dt.
pub fn characterization_residual<F: Fn(f64) -> f64>(g: F) -> Result<f64> {
    let integrand = move |t: f64| {
        let c = t.cos();
        let s = t.sin();
        (g(c * c) - g(s * s)) * (std::f64::consts::FRAC_PI_4 + t).cos()
    };
    Ok(adaptive(
        &integrand,
        0.0,
        std::f64::consts::FRAC_PI_4,
        1e-13,
        MAX_DEPTH,
    )?
    .value)
}

/// A profile built from an arbitrary positive left half and a balanced
/// perturbation: g(y) = g_half(y) on [0, 1/2] and
/// g(cos²t) = g_half(sin²t) + h(t) for t ∈ [0, π/4].
#[derive(Clone)]
pub struct ExtendedProfile {
    half: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    bump: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl std::fmt::Debug for ExtendedProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExtendedProfile").finish_non_exhaustive()
    }
}

impl ExtendedProfile {
    pub fn eval(&self, y: f64) -> f64 {
        if y <= 0.5 {
            (self.half)(y)
        } else {
            // y = cos²t with t ∈ [0, π/4); then sin²t = 1 − y.
            let t = y.clamp(0.0, 1.0).sqrt().acos();
            (self.half)(1.0 - y) + (self.bump)(t)
        }
    }

    /// The extension as a plain evaluator.
    pub fn evaluator(&self) -> impl Fn(f64) -> f64 + '_ {
        move |y| self.eval(y)
    }
}

/// Extends a half profile across y = 1/2 by a perturbation h that keeps the
/// turn-up number at 1.
///
/// Requirements checked here: h(π/4) = 0 (continuous join),
/// ∫₀^{π/4} h(t)·cos(π/4 + t) dt = 0 (balance), and positivity of the
/// result, i.e. h(t) > −g_half(sin²t) on (0, π/4) and g_half > 0 on
/// (0, 1/2].
pub fn extend_profile<F, G>(g_half: F, h: G) -> Result<ExtendedProfile>
where
    F: Fn(f64) -> f64 + Send + Sync + 'static,
    G: Fn(f64) -> f64 + Send + Sync + 'static,
{
    let quarter = std::f64::consts::FRAC_PI_4;
    let scale = (0..=512)
        .map(|i| (h(quarter * i as f64 / 512.0)).abs())
        .fold(1.0f64, f64::max);

    let join = h(quarter);
    if join.abs() > 1e-12 * scale {
        return Err(Error::DiscontinuousJoin(join));
    }

    let weighted = adaptive(
        &|t: f64| h(t) * (quarter + t).cos(),
        0.0,
        quarter,
        1e-13,
        MAX_DEPTH,
    )?
    .value;
    if weighted.abs() > 1e-12 * scale {
        return Err(Error::UnbalancedPerturbation(weighted));
    }

    for i in 1..=4096 {
        let y = 0.5 * i as f64 / 4096.0;
        let v = g_half(y);
        if v <= 0.0 {
            return Err(Error::NonPositiveResult { at: y, value: v });
        }
    }
    for i in 1..4096 {
        let t = quarter * i as f64 / 4096.0;
        let s2 = t.sin().powi(2);
        let v = g_half(s2) + h(t);
        if v <= 0.0 {
            return Err(Error::NonPositiveResult {
                at: t.cos().powi(2),
                value: v,
            });
        }
    }

    Ok(ExtendedProfile {
        half: Arc::new(g_half),
        bump: Arc::new(h),
    })
}

/// Projects a candidate bump onto the admissible space: returns
/// h − λ·cos(π/4 + t) with λ chosen so the weighted integral vanishes
/// (orthogonalization in L²[0, π/4]).
pub fn orthogonalized_bump<G>(h: G) -> Result<impl Fn(f64) -> f64>
where
    G: Fn(f64) -> f64 + 'static,
{
    let quarter = std::f64::consts::FRAC_PI_4;
    fn weight(t: f64) -> f64 {
        (std::f64::consts::FRAC_PI_4 + t).cos()
    }
    let num = adaptive(&|t: f64| h(t) * weight(t), 0.0, quarter, 1e-13, MAX_DEPTH)?.value;
    let den = adaptive(&|t: f64| weight(t) * weight(t), 0.0, quarter, 1e-13, MAX_DEPTH)?.value;
    let lambda = num / den;
    Ok(move |t: f64| h(t) - lambda * weight(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn paper_g() -> RevolutionProfile {
        "29*y^2*(1-y)+33*y*(1-y)^4".parse().unwrap()
    }

    fn paper_big_g() -> RevolutionProfile {
        "13*y^2*(1-y)^6 + 9*y^3*(1-y)^2".parse().unwrap()
    }

    #[test]
    fn single_term_moment() {
        let g: RevolutionProfile = "y*(1-y)".parse().unwrap();
        assert_eq!(moment(&g, false), rat(2, 15));
        assert_eq!(moment(&g, true), rat(2, 15));
    }

    #[test]
    fn paper_profile_moments_exact() {
        let g = paper_g();
        assert_eq!(moment(&g, false), rat(302, 105));
        assert_eq!(moment(&g, true), rat(302, 105));
    }

    #[test]
    fn potential_moments_exact() {
        let g = paper_g();
        let up = potential_moment(&g, false);
        let down = potential_moment(&g, true);
        assert_eq!(up, rat(247, 140));
        assert_eq!(down, rat(184, 105));
        assert_eq!(up - down, rat(1, 84));
    }

    #[test]
    fn solve_balanced_reproduces_constants() {
        assert_eq!(
            solve_balanced((2, 1), (1, 4)),
            BalanceSolution::Unique(rat(29, 33))
        );
        assert_eq!(
            solve_balanced((2, 6), (3, 2)),
            BalanceSolution::Unique(rat(13, 9))
        );
        assert_eq!(solve_balanced((2, 2), (3, 3)), BalanceSolution::Symmetric);
        assert_eq!(solve_balanced((1, 1), (2, 1)), BalanceSolution::Unsolvable);
    }

    #[test]
    fn balance_pair_builds_paper_profile() {
        let b = balance_pair((2, 1), (1, 4)).unwrap();
        assert!(b.residual.is_zero());
        assert_eq!(b.profile, paper_g());
        assert!(b.certificate.concave);
        assert!(b.certificate.smooth_of_revolution);
    }

    #[test]
    fn certificate_values() {
        let c = convexity_certificate(&paper_g());
        assert_eq!(c.derivative_at_zero, rat(33, 1));
        assert_eq!(c.derivative_at_one, rat(-29, 1));
        assert!(c.concave && c.smooth_of_revolution);

        // The second example has pointed ends: g′(0) = 0.
        let c = convexity_certificate(&paper_big_g());
        assert_eq!(c.derivative_at_zero, rat(0, 1));
        assert!(!c.smooth_of_revolution);

        let c = convexity_certificate(&"y*(1-y)".parse().unwrap());
        assert_eq!(c.derivative_at_zero, rat(1, 1));
        assert_eq!(c.derivative_at_one, rat(-1, 1));
        assert!(c.concave);
    }

    #[test]
    fn characterization_residuals() {
        let sym = |y: f64| y * (1.0 - y);
        assert!(characterization_residual(sym).unwrap().abs() < 1e-15);

        let g = paper_g();
        let r = characterization_residual(move |y| g.eval(y)).unwrap();
        assert!(r.abs() < 1e-12, "got {r}");

        // Non-decreasing, non-constant: strictly positive by the monotone
        // inequality.
        let r = characterization_residual(|y| y).unwrap();
        assert!(r > 0.0);
    }

    #[test]
    fn extension_recipe() {
        // h ≡ 0 gives the symmetric extension.
        let ext = extend_profile(|y| y * (0.5 - y) + 0.1, |_| 0.0).unwrap();
        assert!((ext.eval(0.3) - ext.eval(0.7)).abs() < 1e-15);
        let r = characterization_residual(|y| ext.eval(y)).unwrap();
        assert!(r.abs() < 1e-13);

        // Reconstructing the balanced profile from its own halves.
        let g = paper_g();
        let g_for_half = g.clone();
        let g_for_bump = g.clone();
        let ext = extend_profile(
            move |y| g_for_half.eval(y),
            move |t| {
                let c2 = t.cos().powi(2);
                let s2 = t.sin().powi(2);
                g_for_bump.eval(c2) - g_for_bump.eval(s2)
            },
        )
        .unwrap();
        for i in 0..=1000 {
            let y = i as f64 / 1000.0;
            assert!(
                (ext.eval(y) - g.eval(y)).abs() < 1e-12,
                "mismatch at {y}: {} vs {}",
                ext.eval(y),
                g.eval(y)
            );
        }

        // Unbalanced bump.
        let err = extend_profile(|y| y * (0.5 - y) + 0.1, |t| {
            (std::f64::consts::FRAC_PI_4 - t) * t
        })
        .unwrap_err();
        assert!(matches!(err, Error::UnbalancedPerturbation(_)));

        // Discontinuous join.
        let err = extend_profile(|y| y + 0.1, |_| 1.0).unwrap_err();
        assert!(matches!(err, Error::DiscontinuousJoin(_)));

        // Positivity violation: huge negative balanced bump.
        let bump = orthogonalized_bump(|t| -5.0 * (std::f64::consts::FRAC_PI_4 - t)).unwrap();
        let err = extend_profile(|y| 0.01 + y * 0.0, bump).unwrap_err();
        assert!(matches!(err, Error::NonPositiveResult { .. }));
    }

    #[test]
    fn orthogonalized_bump_is_balanced() {
        let bump = orthogonalized_bump(|t| t * t).unwrap();
        let quarter = std::f64::consts::FRAC_PI_4;
        let i = adaptive(
            &|t: f64| bump(t) * (quarter + t).cos(),
            0.0,
            quarter,
            1e-13,
            MAX_DEPTH,
        )
        .unwrap()
        .value;
        assert!(i.abs() < 1e-13);
    }

    #[test]
    fn enumeration_finds_both_examples() {
        let found = enumerate_balanced(6);
        assert!(!found.is_empty());
        let has = |ex: ((u32, u32), (u32, u32)), a: i64, b: i64| {
            found.iter().any(|p| {
                p.exponents == ex
                    && p.coefficients == (BigInt::from(a), BigInt::from(b))
            })
        };
        assert!(has(((1, 4), (2, 1)), 33, 29) || has(((2, 1), (1, 4)), 29, 33));
        assert!(has(((2, 6), (3, 2)), 13, 9) || has(((3, 2), (2, 6)), 9, 13));
        // Every reported pair is exactly balanced and asymmetric.
        for p in found.iter().take(20) {
            assert!((moment(&p.profile, false) - moment(&p.profile, true)).is_zero());
            assert!(!profile_is_symmetric(&p.profile));
        }
    }

    #[test]
    fn exact_fill_fraction_symmetric_half() {
        let g: RevolutionProfile = "y*(1-y)".parse().unwrap();
        let f = exact_fill_fraction(&g, &rat(0, 1), &rat(1, 2)).unwrap();
        assert_eq!(f, rat(1, 2));
        assert!(integral_between(&g, &rat(1, 2), &rat(1, 4)).is_err());
    }
}
