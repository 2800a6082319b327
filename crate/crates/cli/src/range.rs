use genent_core::{Error, Result};

use crate::output::round_significant;

/// Grid points of `start:stop:step`, inclusive of `start`, and of `stop`
/// when it lies on the grid within 1e-12. Points are rounded to 15
/// significant digits so accumulated steps land on the decimal values.
pub fn parse_range(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(Error::Parse(format!(
            "range {text:?} is not start:stop:step"
        )));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::Parse(format!("range bound {s:?} is not a finite number")))
    };
    let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
    if !(step > 0.0) {
        return Err(Error::Parse(format!(
            "range step must be positive, got {step}"
        )));
    }
    if stop < start {
        return Err(Error::Parse(format!(
            "range stop {stop} is below start {start}"
        )));
    }
    let tol = 1e-12 * stop.abs().max(1.0);
    let mut last = ((stop - start) / step).round();
    if start + last * step > stop + tol {
        last -= 1.0;
    }
    if last > 1e7 {
        return Err(Error::Parse(format!("range {text:?} has too many points")));
    }
    Ok((0..=last as u64)
        .map(|i| round_significant(start + i as f64 * step))
        .collect())
}
