//! Polynomial profiles g(y) = Σ c·yᵐ(1−y)ⁿ for solids of revolution.
//!
//! The solid is carved by rotating x = √g(y) around the y axis on [0, 1].
//! Coefficients are exact rationals so that moments and balance constants
//! stay exact downstream; float evaluation is used for areas and plots.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::AreaProfile;

/// One term c·yᵐ(1−y)ⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevolutionTerm {
    pub coeff: BigRational,
    pub m: u32,
    pub n: u32,
}

impl RevolutionTerm {
    pub fn new(coeff: BigRational, m: u32, n: u32) -> Self {
        RevolutionTerm { coeff, m, n }
    }

    /// Integer-coefficient convenience constructor.
    pub fn int(coeff: i64, m: u32, n: u32) -> Self {
        RevolutionTerm::new(BigRational::from_integer(BigInt::from(coeff)), m, n)
    }

    /// The mirrored term: y ↦ 1−y swaps the exponents.
    pub fn flipped(&self) -> Self {
        RevolutionTerm::new(self.coeff.clone(), self.n, self.m)
    }

    fn eval(&self, y: f64) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN)
            * y.powi(self.m as i32)
            * (1.0 - y).powi(self.n as i32)
    }
}

impl fmt::Display for RevolutionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        match self.m {
            0 => {}
            1 => write!(f, "*y")?,
            m => write!(f, "*y^{m}")?,
        }
        match self.n {
            0 => {}
            1 => write!(f, "*(1-y)")?,
            n => write!(f, "*(1-y)^{n}")?,
        }
        Ok(())
    }
}

/// A non-negative polynomial profile on [0, 1].
///
/// Construction verifies g ≥ 0 by dense sampling together with exact
/// endpoint analysis (values and one-sided derivatives at 0 and 1).
#[derive(Debug, Clone, PartialEq)]
pub struct RevolutionProfile {
    terms: Vec<RevolutionTerm>,
}

impl RevolutionProfile {
    pub fn new(terms: Vec<RevolutionTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("profile needs at least one term".into()));
        }
        let profile = RevolutionProfile { terms };
        profile.check_non_negative()?;
        Ok(profile)
    }

    pub fn terms(&self) -> &[RevolutionTerm] {
        &self.terms
    }

    /// g(y) in floating point.
    pub fn eval(&self, y: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(y)).sum()
    }

    /// Exact g(0): only m = 0 terms survive.
    pub fn value_at_zero(&self) -> BigRational {
        self.terms
            .iter()
            .filter(|t| t.m == 0)
            .map(|t| t.coeff.clone())
            .sum()
    }

    /// Exact g(1): only n = 0 terms survive.
    pub fn value_at_one(&self) -> BigRational {
        self.terms
            .iter()
            .filter(|t| t.n == 0)
            .map(|t| t.coeff.clone())
            .sum()
    }

    /// Whether g(0) = g(1) = 0 exactly (two-sided clepsydra shape).
    pub fn is_two_sided(&self) -> bool {
        self.value_at_zero().is_zero() && self.value_at_one().is_zero()
    }

    /// The mirrored profile g(1−y).
    pub fn flipped(&self) -> Self {
        RevolutionProfile {
            terms: self.terms.iter().map(RevolutionTerm::flipped).collect(),
        }
    }

    /// Term list of g′ (not normalized; terms may repeat exponent pairs).
    pub fn derivative_terms(&self) -> Vec<RevolutionTerm> {
        let mut out = Vec::new();
        for t in &self.terms {
            if t.m > 0 {
                out.push(RevolutionTerm::new(
                    &t.coeff * BigInt::from(t.m),
                    t.m - 1,
                    t.n,
                ));
            }
            if t.n > 0 {
                out.push(RevolutionTerm::new(
                    -(&t.coeff * BigInt::from(t.n)),
                    t.m,
                    t.n - 1,
                ));
            }
        }
        out
    }

    /// Exact g′(0) and g′(1) by term differentiation.
    pub fn endpoint_derivatives(&self) -> (BigRational, BigRational) {
        let d = self.derivative_terms();
        let at0 = d
            .iter()
            .filter(|t| t.m == 0)
            .map(|t| t.coeff.clone())
            .sum();
        let at1 = d
            .iter()
            .filter(|t| t.n == 0)
            .map(|t| t.coeff.clone())
            .sum();
        (at0, at1)
    }

    fn check_non_negative(&self) -> Result<()> {
        let zero = BigRational::zero();
        let g0 = self.value_at_zero();
        let g1 = self.value_at_one();
        if g0 < zero {
            return Err(Error::NegativeProfile {
                at: 0.0,
                value: g0.to_f64().unwrap_or(f64::NEG_INFINITY),
            });
        }
        if g1 < zero {
            return Err(Error::NegativeProfile {
                at: 1.0,
                value: g1.to_f64().unwrap_or(f64::NEG_INFINITY),
            });
        }
        let (d0, d1) = self.endpoint_derivatives();
        if g0.is_zero() && d0 < zero {
            return Err(Error::NegativeProfile {
                at: 0.0,
                value: d0.to_f64().unwrap_or(f64::NEG_INFINITY),
            });
        }
        if g1.is_zero() && d1 > zero {
            return Err(Error::NegativeProfile {
                at: 1.0,
                value: d1.to_f64().unwrap_or(f64::NEG_INFINITY),
            });
        }
        let scale: f64 = self
            .terms
            .iter()
            .map(|t| t.coeff.abs().to_f64().unwrap_or(1.0))
            .sum::<f64>()
            .max(1.0);
        for k in 1..2048 {
            let y = k as f64 / 2048.0;
            let v = self.eval(y);
            if v < -1e-12 * scale {
                return Err(Error::NegativeProfile { at: y, value: v });
            }
        }
        Ok(())
    }

    /// Canonical DSL text, `c*y^m*(1-y)^n` terms joined by " + ".
    pub fn to_dsl(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON export: {"terms":[[num,den,m,n],...]}.
    pub fn to_json(&self) -> String {
        let body = self
            .terms
            .iter()
            .map(|t| {
                format!(
                    "[{},{},{},{}]",
                    t.coeff.numer(),
                    t.coeff.denom(),
                    t.m,
                    t.n
                )
            })
            .collect::<Vec<_>>()
            .join(",");
        format!("{{\"terms\":[{body}]}}")
    }
}

impl fmt::Display for RevolutionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}

impl FromStr for RevolutionProfile {
    type Err = Error;

    /// Parses the profile DSL: terms `c*y^m*(1-y)^n` separated by `,` or `+`,
    /// with integer or rational `c`. Anything else is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for raw in s.split(|c| c == ',' || c == '+') {
            let piece = raw.trim();
            if piece.is_empty() {
                return Err(Error::Parse("empty term in profile".into()));
            }
            terms.push(parse_term(piece)?);
        }
        RevolutionProfile::new(terms)
    }
}

fn parse_term(piece: &str) -> Result<RevolutionTerm> {
    let mut coeff = BigRational::from_integer(BigInt::from(1));
    let mut m = 0u32;
    let mut n = 0u32;
    let mut seen_factor = false;
    let body = match piece.strip_prefix('-') {
        Some(rest) => {
            coeff = -coeff;
            rest.trim_start()
        }
        None => piece,
    };
    for atom in body.split('*') {
        let atom = atom.trim();
        if atom.is_empty() {
            return Err(Error::Parse(format!("dangling `*` in term `{piece}`")));
        }
        if let Some(rest) = atom.strip_prefix("(1-y)") {
            n += parse_exponent(rest, piece)?;
            seen_factor = true;
        } else if let Some(rest) = atom.strip_prefix('y') {
            m += parse_exponent(rest, piece)?;
            seen_factor = true;
        } else {
            coeff *= parse_rational(atom, piece)?;
            seen_factor = true;
        }
    }
    if !seen_factor {
        return Err(Error::Parse(format!("empty term `{piece}`")));
    }
    Ok(RevolutionTerm::new(coeff, m, n))
}

fn parse_exponent(rest: &str, piece: &str) -> Result<u32> {
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(1);
    }
    let digits = rest
        .strip_prefix('^')
        .ok_or_else(|| Error::Parse(format!("expected `^` exponent in term `{piece}`")))?
        .trim();
    digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad exponent `{digits}` in term `{piece}`")))
}

fn parse_rational(atom: &str, piece: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient `{atom}` in term `{piece}`"));
    match atom.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = atom.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Area profile A(h) = π·g(h) on [0, 1], or π·g(1−h) when flipped.
pub fn revolution_area_profile(profile: &RevolutionProfile, flipped: bool) -> AreaProfile {
    let owned: Arc<RevolutionProfile> = Arc::new(if flipped {
        profile.flipped()
    } else {
        profile.clone()
    });
    let label = if flipped {
        format!("revolution (flipped) of {owned}")
    } else {
        format!("revolution of {owned}")
    };
    AreaProfile::new(label, 1.0, Vec::new(), move |h| {
        std::f64::consts::PI * owned.eval(h).max(0.0)
    })
    .expect("revolution profile parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_g() -> RevolutionProfile {
        RevolutionProfile::new(vec![
            RevolutionTerm::int(29, 2, 1),
            RevolutionTerm::int(33, 1, 4),
        ])
        .unwrap()
    }

    #[test]
    fn dsl_round_trip() {
        let g: RevolutionProfile = "29*y^2*(1-y)+33*y*(1-y)^4".parse().unwrap();
        assert_eq!(g, paper_g());
        let again: RevolutionProfile = g.to_dsl().parse().unwrap();
        assert_eq!(again, g);
        // Comma-separated and rational coefficients.
        let h: RevolutionProfile = "29/33 * y^2 * (1-y), y*(1-y)^4".parse().unwrap();
        assert_eq!(h.terms().len(), 2);
        assert_eq!(
            h.terms()[0].coeff,
            BigRational::new(BigInt::from(29), BigInt::from(33))
        );
    }

    #[test]
    fn dsl_rejects_garbage() {
        for bad in [
            "29*x^2",
            "y^-1",
            "1.5*y",
            "y^2 ** (1-y)",
            "",
            "29*y^2*(1-y) + ",
            "2/0*y",
        ] {
            assert!(
                bad.parse::<RevolutionProfile>().is_err(),
                "`{bad}` should fail"
            );
        }
    }

    #[test]
    fn cone_profile() {
        let g: RevolutionProfile = "y^2".parse().unwrap();
        let upright = revolution_area_profile(&g, false);
        assert!((upright.area(0.5) - std::f64::consts::PI * 0.25).abs() < 1e-15);
        let flipped = revolution_area_profile(&g, true);
        assert!((flipped.area(0.25) - std::f64::consts::PI * 0.5625).abs() < 1e-15);
    }

    #[test]
    fn symmetric_profile_flip_is_identity() {
        let g: RevolutionProfile = "y*(1-y)".parse().unwrap();
        let a = revolution_area_profile(&g, false);
        let b = revolution_area_profile(&g, true);
        for k in 0..=64 {
            let y = k as f64 / 64.0;
            assert!((a.area(y) - b.area(y)).abs() < 1e-15);
        }
    }

    #[test]
    fn negative_profile_rejected() {
        // -y(1-y) is negative on (0,1); endpoint derivative analysis flags it.
        let r = RevolutionProfile::new(vec![RevolutionTerm::int(-1, 1, 1)]);
        assert!(matches!(r, Err(Error::NegativeProfile { .. })));
        // A mid-interval dip: y^2 - y^3 - (1/4)y(1-y) stays positive, but
        // subtracting enough of the symmetric bump goes negative.
        let r2 = RevolutionProfile::new(vec![
            RevolutionTerm::int(1, 2, 1),
            RevolutionTerm::int(-2, 1, 1),
        ]);
        assert!(matches!(r2, Err(Error::NegativeProfile { .. })));
    }

    #[test]
    fn endpoint_derivatives_of_paper_profile() {
        let g = paper_g();
        let (d0, d1) = g.endpoint_derivatives();
        assert_eq!(d0, BigRational::from_integer(BigInt::from(33)));
        assert_eq!(d1, BigRational::from_integer(BigInt::from(-29)));
        assert!(g.is_two_sided());
    }

    #[test]
    fn json_export_shape() {
        let g = paper_g();
        assert_eq!(g.to_json(), "{\"terms\":[[29,1,2,1],[33,1,1,4]]}");
    }
}
