//! Fixed decimal formatting for CSV output.

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// scientific notation for exponents below -4 or above 11.
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let fixed = format!("{x:.*}", (11 - exp) as usize);
    trim_zeros(&fixed).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses a decimal or a simple fraction such as `1/3`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("invalid number '{s}'"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("invalid number '{s}'"))?;
            if den == 0.0 {
                return Err(format!("zero denominator in '{s}'"));
            }
            num / den
        }
        None => s.parse().map_err(|_| format!("invalid number '{s}'"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("non-finite number '{s}'"))
    }
}

/// Parses `a,b,c`.
pub fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values, got '{s}'"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = parse_number(part)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (1.0 / 3.0, "0.333333333333"),
            (0.5, "0.5"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (123456.789, "123456.789"),
            (1e-5, "1e-05"),
            (1.234e-7, "1.234e-07"),
            (0.0001, "0.0001"),
            (999999999999.5, "1e+12"),
            (2.0 / 3.0, "0.666666666667"),
            (-0.0, "0"),
        ];
        for (x, want) in cases {
            assert_eq!(sig12(x), want, "formatting {x}");
        }
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_number("1/3").unwrap(), 1.0 / 3.0);
        assert_eq!(parse_number(" 0.25 ").unwrap(), 0.25);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("abc").is_err());
        assert_eq!(parse_triple("1/3, 1/3,1/3").unwrap(), [1.0 / 3.0; 3]);
        assert!(parse_triple("1,2").is_err());
    }
}
