//! Deterministic float formatting for reports and file output.

/// 17 significant digits in scientific notation: round-trip safe, a valid
/// JSON number, and bit-identical across runs.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// `digits` significant digits for human-readable tables; falls back to
/// scientific notation away from unit scale.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if mag < -4 || mag >= digits as i32 {
        format!("{:.*e}", digits - 1, x)
    } else {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_round_trips() {
        for &x in &[
            2.0,
            1.7611678552583517,
            -0.000123456789,
            13.615330010516165,
            1e-30,
        ] {
            let s = sig17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn sig_is_compact() {
        assert_eq!(sig(1.7611678552583517, 10), "1.761167855");
        assert_eq!(sig(2.0, 10), "2.000000000");
        assert_eq!(sig(0.0, 10), "0");
        assert_eq!(sig(1.23e-9, 10), "1.230000000e-9");
    }
}
