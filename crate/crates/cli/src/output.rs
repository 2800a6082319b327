/// Rounds to 15 significant digits.
pub fn round_significant(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

/// Shortest decimal form of `v` rounded to 15 significant digits.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    let r = round_significant(v);
    if r == 0.0 {
        "0".to_string()
    } else {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(format_value(0.678_071_905_112_637_65), "0.678071905112638");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(1.0 - 1e-16), "1");
        assert_eq!(format_value(-0.0), "0");
        assert_eq!(format_value(0.1 + 0.2), "0.3");
        assert_eq!(format_value(f64::NAN), "NaN");
    }
}
