//! Parsing of command-line values and state files.

use std::str::FromStr;

use incomparable::{BipartiteState, Complex64, SchmidtVector};

/// Squared-norm slack accepted from hand-written input before rescaling.
pub const INPUT_NORM_TOL: f64 = 1e-6;

/// `re`, `re+imi`, `re-imi` or `imi`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let z = Complex64::from_str(&t).map_err(|_| format!("cannot parse complex number {s:?}"))?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("complex number {s:?} is not finite"));
    }
    Ok(z)
}

/// Comma-separated reals, e.g. `0.5,0.3,0.2`.
pub fn parse_vector(s: &str) -> Result<SchmidtVector, String> {
    let values = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("cannot parse {x:?} in vector {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SchmidtVector::new(values).map_err(|e| format!("invalid Schmidt vector {s:?}: {e}"))
}

/// Rescales `(α, β)` onto the unit sphere when already within
/// [`INPUT_NORM_TOL`].
pub fn normalize_pair(a: Complex64, b: Complex64) -> Result<(Complex64, Complex64), String> {
    let n = a.norm_sqr() + b.norm_sqr();
    if (n - 1.0).abs() > INPUT_NORM_TOL {
        return Err(format!("|alpha|^2 + |beta|^2 = {n}, expected 1"));
    }
    let s = n.sqrt();
    Ok((a / s, b / s))
}

/// First non-comment line `dimA dimB`, then `dimA*dimB` lines `re im` in
/// row-major order (Alice index outer). Blank lines and `#` comments are
/// skipped.
pub fn parse_state(text: &str) -> Result<BipartiteState, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, head) = lines.next().ok_or("state file is empty")?;
    let dims = parse_fields::<usize>(head, 2).map_err(|e| format!("line with dimensions: {e}"))?;
    let (dim_a, dim_b) = (dims[0], dims[1]);
    if dim_a == 0 || dim_b == 0 {
        return Err("dimensions must be positive".into());
    }

    let mut amps = Vec::with_capacity(dim_a * dim_b);
    for (no, line) in lines {
        let v = parse_fields::<f64>(line, 2).map_err(|e| format!("line {no}: {e}"))?;
        if !(v[0].is_finite() && v[1].is_finite()) {
            return Err(format!("line {no}: amplitude is not finite"));
        }
        amps.push(Complex64::new(v[0], v[1]));
    }
    if amps.len() != dim_a * dim_b {
        return Err(format!(
            "expected {} amplitudes for {dim_a}x{dim_b}, found {}",
            dim_a * dim_b,
            amps.len()
        ));
    }
    let n: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    if (n - 1.0).abs() > INPUT_NORM_TOL {
        return Err(format!("state has squared norm {n}, expected 1"));
    }
    let s = n.sqrt();
    let amps = amps.into_iter().map(|z| z / s).collect();
    BipartiteState::new(dim_a, dim_b, amps).map_err(|e| e.to_string())
}

fn parse_fields<T: FromStr>(line: &str, n: usize) -> Result<Vec<T>, String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != n {
        return Err(format!("expected {n} fields, got {:?}", line));
    }
    parts
        .iter()
        .map(|p| p.parse::<T>().map_err(|_| format!("cannot parse {p:?}")))
        .collect()
}
