//! Locale-independent number formatting shared by the CSV emitters.

/// Formats `x` with `digits` significant digits, `%g` style.
///
/// Fixed notation is used for decimal exponents in `[-5, digits)`, scientific
/// otherwise. Trailing zeros are trimmed and negative zero prints as `0`.
pub fn sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Let the formatter do the rounding, then read the exponent back.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

/// Twelve significant digits, the precision of every numeric CSV column.
pub fn sig12(x: f64) -> String {
    sig(x, 12)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
