//! Parsers for command-line values.

use logharmonic::Complex64;

/// `"0.1,0.05,0.02"` into a list of reals.
pub fn parse_reals(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("not a finite number: {s:?}"))
        })
        .collect()
}

/// One complex literal: `1`, `-0.5`, `2i`, `-i`, `0.5+0.8i`, `-0.5-0.8i`,
/// `1e-3-2e-2i`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("not a complex number: {text:?}");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        let re = s.parse::<f64>().map_err(|_| bad())?;
        return Ok(Complex64::new(re, 0.0));
    };
    // split before the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| bad())?;
    let z = Complex64::new(re, im);
    if z.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

/// Comma-separated complex literals.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>, String> {
    text.split(',').map(parse_complex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), c(-0.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("0.5+0.8i").unwrap(), c(0.5, 0.8));
        assert_eq!(parse_complex("-0.5-0.8i").unwrap(), c(-0.5, -0.8));
        assert_eq!(parse_complex("1e-3-2e-2i").unwrap(), c(1e-3, -2e-2));
        assert_eq!(parse_complex(" 3 - i ").unwrap(), c(3.0, -1.0));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("1+2j").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_reals("0.1, 0.05").unwrap(), vec![0.1, 0.05]);
        assert!(parse_reals("0.1,,").is_err());
        assert!(parse_reals("nan").is_err());
        assert_eq!(
            parse_complex_list("1,-0.5+0.8i,-0.5-0.8i").unwrap(),
            vec![c(1.0, 0.0), c(-0.5, 0.8), c(-0.5, -0.8)]
        );
    }
}
