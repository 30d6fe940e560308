//! Numeric cell formatting: 12 significant digits, C-locale decimal
//! point, infinities as the `-inf`/`inf` literals.

/// Render a float with 12 significant digits in %g style: plain decimal
/// for moderate exponents, scientific otherwise, trailing zeros
/// trimmed. Deterministic and round-trip safe at that precision.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x == f64::INFINITY {
        return "inf".to_string();
    }
    if x == f64::NEG_INFINITY {
        return "-inf".to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }

    // 12 significant digits via the scientific formatter, then re-render
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    debug_assert_eq!(digits.len(), 12);
    let sign = if x < 0.0 { "-" } else { "" };

    let body = if (-4..12).contains(&exp) {
        if exp >= 0 {
            let split = exp as usize + 1;
            let int_part = &digits[..split];
            let frac = digits[split..].trim_end_matches('0');
            if frac.is_empty() {
                int_part.to_string()
            } else {
                format!("{int_part}.{frac}")
            }
        } else {
            let frac = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), frac)
        }
    } else {
        let head = &digits[..1];
        let tail = digits[1..].trim_end_matches('0');
        if tail.is_empty() {
            format!("{head}e{exp}")
        } else {
            format!("{head}.{tail}e{exp}")
        }
    };
    format!("{sign}{body}")
}
