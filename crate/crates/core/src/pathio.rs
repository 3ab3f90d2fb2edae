//! Path ingestion: CSV with two columns (re, im; header optional) and JSON
//! arrays of [re, im] pairs. Errors name the offending row.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parses CSV text with columns `re,im`. A non-numeric first row is treated
/// as a header and skipped; blank lines are ignored.
pub fn parse_csv(text: &str) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(Error::BadInput(format!(
                "row {}: expected 2 columns, found {}",
                lineno + 1,
                fields.len()
            )));
        }
        match (fields[0].parse::<f64>(), fields[1].parse::<f64>()) {
            (Ok(re), Ok(im)) => out.push(Complex64::new(re, im)),
            _ if lineno == 0 && out.is_empty() => continue, // header row
            _ => {
                return Err(Error::BadInput(format!(
                    "row {}: could not parse '{}' as re,im",
                    lineno + 1,
                    line
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::BadInput("no data rows in path file".into()));
    }
    Ok(out)
}

/// Parses a JSON array of [re, im] pairs.
pub fn parse_json(text: &str) -> Result<Vec<Complex64>> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
        .map_err(|e| Error::BadInput(format!("json path: {e}")))?;
    if pairs.is_empty() {
        return Err(Error::BadInput("empty json path".into()));
    }
    Ok(pairs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
}

/// Serializes points as a JSON-ready list of [re, im] pairs.
pub fn to_pairs(points: &[Complex64]) -> Vec<[f64; 2]> {
    points.iter().map(|z| [z.re, z.im]).collect()
}

/// Parses a command-line complex literal of the form `a+bi` / `a-bi`
/// (no spaces); plain reals and pure imaginaries (`bi`) are also accepted.
pub fn parse_complex_literal(s: &str) -> Result<Complex64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::BadInput("empty complex literal".into()));
    }
    if let Some(body) = s.strip_suffix('i') {
        // Split at the last +/- that is not a leading sign or part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im_str = match im_str {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = re_str
            .parse::<f64>()
            .map_err(|_| Error::BadInput(format!("bad complex literal '{s}'")))?;
        let im = im_str
            .parse::<f64>()
            .map_err(|_| Error::BadInput(format!("bad complex literal '{s}'")))?;
        Ok(Complex64::new(re, im))
    } else {
        let re = s
            .parse::<f64>()
            .map_err(|_| Error::BadInput(format!("bad complex literal '{s}'")))?;
        Ok(Complex64::new(re, 0.0))
    }
}
