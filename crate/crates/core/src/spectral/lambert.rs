//! Lambert W function, principal branch W_0 and lower branch W_{-1}, via
//! Halley iteration with branch-specific seeds and a branch-point series
//! near x = -1/e where the iteration's denominator degenerates.

use crate::error::{Error, Result};

const NEG_INV_E: f64 = -1.0 / std::f64::consts::E;
const MAX_HALLEY_STEPS: usize = 100;

/// Principal branch W_0 on [-1/e, inf): the solution w >= -1 of w e^w = x.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !x.is_finite() || x < NEG_INV_E {
        return Err(Error::domain(format!("W0 argument {x} outside [-1/e, inf)")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == NEG_INV_E {
        return Ok(-1.0);
    }
    let seed = if x < 0.0 {
        // series seed is accurate over the whole (-1/e, 0) stretch
        branch_point_series((2.0 * (std::f64::consts::E * x + 1.0)).sqrt())
    } else if x <= std::f64::consts::E {
        (1.0 + x).ln()
    } else {
        let l = x.ln();
        l - l.ln()
    };
    halley(x, seed)
}

/// Lower branch W_{-1} on [-1/e, 0): the solution w <= -1 of w e^w = x.
pub fn lambert_w_minus1(x: f64) -> Result<f64> {
    if !x.is_finite() || x < NEG_INV_E || x >= 0.0 {
        return Err(Error::domain(format!("W-1 argument {x} outside [-1/e, 0)")));
    }
    if x == NEG_INV_E {
        return Ok(-1.0);
    }
    let p = (2.0 * (std::f64::consts::E * x + 1.0)).sqrt();
    let seed = if p < 0.3 {
        branch_point_series(-p)
    } else {
        let l = (-x).ln();
        l - (-l).ln()
    };
    halley(x, seed)
}

/// Dispatch on `branch` in {0, -1}.
pub fn lambert_w(branch: i32, x: f64) -> Result<f64> {
    match branch {
        0 => lambert_w0(x),
        -1 => lambert_w_minus1(x),
        other => Err(Error::domain(format!("Lambert W branch {other} not supported (0 or -1)"))),
    }
}

/// Series around the branch point: W = -1 + p - p^2/3 + 11 p^3 / 72 - ...
/// with p = +-sqrt(2 (e x + 1)).
fn branch_point_series(p: f64) -> f64 {
    -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))
}

fn halley(x: f64, seed: f64) -> Result<f64> {
    let mut w = seed;
    // Extremely close to the branch point the correction denominator
    // vanishes; the quartic series is already well inside 1e-12 residual.
    if (w + 1.0).abs() < 1e-6 {
        return Ok(w);
    }
    for _ in 0..MAX_HALLEY_STEPS {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let dw = f / denom;
        w -= dw;
        if dw.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    let residual = (w * w.exp() - x).abs();
    if residual <= 1e-12 * x.abs().max(1e-300) {
        Ok(w)
    } else {
        Err(Error::numeric(format!(
            "Lambert W residual {residual} did not meet tolerance at x = {x}"
        )))
    }
}
