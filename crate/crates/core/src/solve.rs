//! Scalar root finding and maximization on brackets.

use crate::error::{Error, Result};

/// Bisection for a root of `f` in `[lo, hi]`. The endpoints must bracket a
/// sign change (a zero at either end counts). Stops once the bracket is no
/// wider than `tol` or can no longer shrink in floating point.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Infeasible(format!(
            "no sign change on [{lo}, {hi}] ({flo}, {fhi})"
        )));
    }
    for _ in 0..2000 {
        let mid = lo + (hi - lo) / 2.0;
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) / 2.0)
}

/// Illinois-modified regula falsi: bracketed like [`bisect`] but
/// superlinear on smooth functions. Returns once `|f| ≤ ftol` or the bracket
/// collapses.
pub fn illinois(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    ftol: f64,
) -> Result<f64> {
    let (mut flo, mut fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Infeasible(format!(
            "no sign change on [{lo}, {hi}] ({flo}, {fhi})"
        )));
    }
    let mut side = 0i8;
    for _ in 0..200 {
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if !(x > lo && x < hi) {
            x = lo + (hi - lo) / 2.0;
        }
        if x <= lo || x >= hi {
            return Ok(x);
        }
        let fx = f(x);
        if fx.abs() <= ftol {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi /= 2.0;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo /= 2.0;
            }
            side = 1;
        }
    }
    Ok(if flo.abs() < fhi.abs() { lo } else { hi })
}

/// Golden-section search for the maximizer of a unimodal `f` on `[lo, hi]`,
/// down to a bracket of width `tol`.
pub fn golden_max(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
        if x1 >= x2 {
            break;
        }
    }
    lo + (hi - lo) / 2.0
}
