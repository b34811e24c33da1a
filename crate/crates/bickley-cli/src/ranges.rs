//! Parsers for the two range syntaxes accepted on the command line.
//!
//! * `start:stop:step` — inclusive arithmetic progression; `step > 0`,
//!   `stop ≥ start`. `1:1:1` resolves to the single point `1`.
//! * `start:stop:n` — `n` points spaced evenly in the logarithm of the
//!   value; both endpoints are emitted exactly, so the grid is
//!   reproducible bit for bit.
//!
//! Both parsers resolve eagerly to the full list of grid points, which
//! the output document echoes verbatim.

/// Hard cap on resolved grid size, protecting against `0:1e9:1e-9`-style
/// typos that would otherwise allocate unbounded memory.
const MAX_RANGE_POINTS: usize = 100_000;

/// An inclusive arithmetic range resolved to its grid points
/// (ascending, uniformly spaced).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearRange(pub Vec<f64>);

/// A logarithmically spaced range resolved to its grid points
/// (ascending, exact endpoints).
#[derive(Debug, Clone, PartialEq)]
pub struct LogRange(pub Vec<f64>);

fn split3(spec: &str) -> Result<(&str, &str, &str), String> {
    let mut it = spec.split(':');
    match (it.next(), it.next(), it.next(), it.next()) {
        (Some(a), Some(b), Some(c), None) => Ok((a, b, c)),
        _ => Err(format!(
            "expected three colon-separated fields, got '{spec}'"
        )),
    }
}

fn number(field: &str) -> Result<f64, String> {
    let v: f64 = field
        .parse()
        .map_err(|_| format!("cannot parse '{field}' as a number"))?;
    if !v.is_finite() {
        return Err(format!("range field '{field}' must be finite"));
    }
    Ok(v)
}

/// Parses `start:stop:step` into the ascending inclusive grid
/// `start, start + step, …` up to `stop` (with a one-part-in-10⁹
/// tolerance so that e.g. `0:1:0.1` includes its endpoint).
pub fn parse_linear(spec: &str) -> Result<LinearRange, String> {
    let (a, b, s) = split3(spec)?;
    let (start, stop, step) = (number(a)?, number(b)?, number(s)?);
    if !(step > 0.0) {
        return Err(format!("range step must be > 0, got {step}"));
    }
    if stop < start {
        return Err(format!(
            "range stop ({stop}) must be >= start ({start})"
        ));
    }
    let span = (stop - start) / step;
    if span > (MAX_RANGE_POINTS - 1) as f64 {
        return Err(format!(
            "range resolves to more than {MAX_RANGE_POINTS} points"
        ));
    }
    let count = (span + 1e-9).floor() as usize + 1;
    let values = (0..count).map(|i| start + i as f64 * step).collect();
    Ok(LinearRange(values))
}

/// Parses `start:stop:n` into `n` points spaced evenly in `ln(value)`,
/// endpoints exact. Requires positive endpoints; `n = 1` is accepted
/// only when the endpoints coincide.
pub fn parse_log(spec: &str) -> Result<LogRange, String> {
    let (a, b, c) = split3(spec)?;
    let (start, stop) = (number(a)?, number(b)?);
    let n: usize = c
        .parse()
        .map_err(|_| format!("cannot parse '{c}' as a point count"))?;
    if !(start > 0.0) || !(stop > 0.0) {
        return Err(format!(
            "log-range endpoints must be positive, got {start} and {stop}"
        ));
    }
    if stop < start {
        return Err(format!(
            "log-range stop ({stop}) must be >= start ({start})"
        ));
    }
    if n == 0 || n > MAX_RANGE_POINTS {
        return Err(format!(
            "log-range point count must lie in 1..={MAX_RANGE_POINTS}, got {n}"
        ));
    }
    if n == 1 {
        if start != stop {
            return Err(
                "a one-point log range requires equal endpoints".to_string()
            );
        }
        return Ok(LogRange(vec![start]));
    }
    let (la, lb) = (start.ln(), stop.ln());
    let values = (0..n)
        .map(|i| {
            if i == 0 {
                start
            } else if i == n - 1 {
                stop
            } else {
                (la + i as f64 * (lb - la) / (n - 1) as f64).exp()
            }
        })
        .collect();
    Ok(LogRange(values))
}
