//! Regular n-gons inscribed in a circle of radius `r` about `p₀`, and the
//! inverse maps recovering `r` from the side, the angle or the area.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kappa::Kappa;
use crate::polygon::GeodesicPolygon;
use crate::solve;
use crate::surface::SurfacePoint;

/// Largest `n` accepted by [`circle_limit`].
pub const MAX_LIMIT_N: usize = 1_000_000;

/// Distance to a range boundary below which [`radius_from_area`] switches
/// from the closed form to bisection on the forward map.
const BOUNDARY_SWITCH: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularNGon {
    pub kappa: Kappa,
    pub n: usize,
    /// Circumradius.
    #[serde(rename = "r")]
    pub radius: f64,
    pub side: f64,
    pub angle: f64,
    pub area: f64,
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::domain("regular", n as f64, "n must be at least 3"));
    }
    Ok(())
}

fn check_radius(k: Kappa, r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) || (k == Kappa::Spherical && r > PI / 2.0) {
        return Err(Error::domain(
            "regular",
            r,
            "radius must be positive (and at most π/2 on the sphere)",
        ));
    }
    Ok(())
}

/// `a = 2 AS_κ(S_κ(r) sin(π/n))`.
pub fn side_length(k: Kappa, n: usize, r: f64) -> f64 {
    let t = k.sin(r) * (PI / n as f64).sin();
    2.0 * match k {
        Kappa::Spherical => t.min(1.0).asin(),
        Kappa::Flat => t,
        Kappa::Hyperbolic => t.asinh(),
    }
}

/// `θ = (n − 2)π/n` in the plane, `2 arctan(cot(π/n) / C_κ(r))` otherwise.
pub fn vertex_angle(k: Kappa, n: usize, r: f64) -> f64 {
    let h = PI / n as f64;
    match k {
        Kappa::Flat => PI - 2.0 * h,
        _ => 2.0 * h.cos().atan2(k.cos(r) * h.sin()),
    }
}

/// `A = (n r²/2) sin(2π/n)` in the plane, `κ{2n arctan(cot(π/n)/C_κ(r)) − (n − 2)π}`
/// otherwise.
///
/// The curved case is evaluated as `2n arctan(2x S_κ(r/2)² / (C_κ(r) + x²))`
/// with `x = cot(π/n)`, which is the same quantity without the cancellation
/// between the two terms.
pub fn area(k: Kappa, n: usize, r: f64) -> f64 {
    let nf = n as f64;
    match k {
        Kappa::Flat => nf * r * r / 2.0 * (TAU / nf).sin(),
        _ => {
            let x = 1.0 / (PI / nf).tan();
            let s = k.sin(r / 2.0);
            2.0 * nf * (2.0 * x * s * s / (k.cos(r) + x * x)).atan()
        }
    }
}

impl RegularNGon {
    /// The regular n-gon of circumradius `r` about `p₀`.
    pub fn new(k: Kappa, n: usize, r: f64) -> Result<Self> {
        check_n(n)?;
        check_radius(k, r)?;
        let side = side_length(k, n, r);
        Ok(Self {
            kappa: k,
            n,
            radius: r,
            side,
            angle: vertex_angle(k, n, r),
            area: area(k, n, r),
        })
    }

    pub fn perimeter(&self) -> f64 {
        self.n as f64 * self.side
    }

    /// Vertices at polar angles `2πj/n`, counterclockwise.
    pub fn vertices(&self) -> Vec<SurfacePoint> {
        (0..self.n)
            .map(|j| SurfacePoint::from_polar(self.kappa, self.radius, TAU * j as f64 / self.n as f64))
            .collect()
    }

    pub fn polygon(&self) -> Result<GeodesicPolygon> {
        GeodesicPolygon::new(self.vertices())
    }
}

/// Build the regular n-gon of circumradius `r`.
pub fn build(k: Kappa, n: usize, r: f64) -> Result<RegularNGon> {
    RegularNGon::new(k, n, r)
}

/// `r = AS_κ(S_κ(a/2) / sin(π/n))`.
pub fn radius_from_side(k: Kappa, n: usize, a: f64) -> Result<f64> {
    check_n(n)?;
    let t = k.sin(a / 2.0) / (PI / n as f64).sin();
    let r = if a > 0.0 && a.is_finite() {
        k.asin(t).ok()
    } else {
        None
    };
    match r {
        Some(r) if r > 0.0 && r <= k.max_circumradius() => Ok(r),
        _ => Err(Error::Infeasible(format!(
            "no regular {n}-gon with side {a} for curvature {k}"
        ))),
    }
}

/// `r = AC_κ(cot(π/n) / tan(θ/2))`; the angle alone does not fix a plane
/// polygon's size.
pub fn radius_from_angle(k: Kappa, n: usize, theta: f64) -> Result<f64> {
    check_n(n)?;
    if k.is_flat() {
        return Err(Error::Usage(
            "the vertex angle does not determine a regular polygon in the plane".into(),
        ));
    }
    let infeasible = || {
        Error::Infeasible(format!(
            "no regular {n}-gon with vertex angle {theta} for curvature {k}"
        ))
    };
    if !(theta > 0.0 && theta <= PI) {
        return Err(infeasible());
    }
    let t = (PI / n as f64).tan() * (theta / 2.0).tan();
    let arg = 1.0 / t;
    let r = k.acos(arg).map_err(|_| infeasible())?;
    if !(r > 0.0 && r <= k.max_circumradius()) {
        return Err(infeasible());
    }
    Ok(r)
}

/// Upper end of the area range of regular n-gons: `2π` on the sphere
/// (attained on the equator), `(n − 2)π` in the hyperbolic plane (not
/// attained), unbounded in the plane.
pub fn area_bound(k: Kappa, n: usize) -> f64 {
    match k {
        Kappa::Spherical => TAU,
        Kappa::Flat => f64::INFINITY,
        Kappa::Hyperbolic => (n as f64 - 2.0) * PI,
    }
}

/// The circumradius of the regular n-gon with area `a`.
///
/// Curved surfaces use the closed form `C_κ(r) = cot(π/n) tan((2π − κA)/(2n))`,
/// evaluated through `S_κ(r/2)² = t(1 + x²) / (2(x + κt))` with
/// `t = tan(A/(2n))`, `x = cot(π/n)`. Within `1e−6` of the range boundary
/// the forward map is inverted by bisection instead.
pub fn radius_from_area(k: Kappa, n: usize, a: f64) -> Result<f64> {
    check_n(n)?;
    let bound = area_bound(k, n);
    let ok = a > 0.0
        && a.is_finite()
        && match k {
            Kappa::Spherical => a <= bound,
            _ => a < bound,
        };
    if !ok {
        return Err(Error::Infeasible(format!(
            "no regular {n}-gon of area {a} for curvature {k}"
        )));
    }
    let nf = n as f64;
    if k.is_flat() {
        return Ok((2.0 * a / (nf * (TAU / nf).sin())).sqrt());
    }
    if bound - a < BOUNDARY_SWITCH {
        let hi = match k {
            Kappa::Spherical if area(k, n, PI / 2.0) <= a => return Ok(PI / 2.0),
            Kappa::Spherical => PI / 2.0,
            _ => {
                let mut hi = 1.0;
                while area(k, n, hi) < a {
                    hi *= 2.0;
                    if hi > 700.0 {
                        return Err(Error::Infeasible(format!(
                            "area {a} is too close to the bound {bound}"
                        )));
                    }
                }
                hi
            }
        };
        return solve::bisect(|r| area(k, n, r) - a, 0.0, hi, 0.0);
    }
    let x = 1.0 / (PI / nf).tan();
    let t = (a / (2.0 * nf)).tan();
    let u = t * (1.0 + x * x) / (2.0 * (x + k.as_f64() * t));
    let h = k.asin(u.sqrt()).map_err(|_| {
        Error::Infeasible(format!("no regular {n}-gon of area {a} for curvature {k}"))
    })?;
    Ok(2.0 * h)
}

/// `(r_n, n a(n, r_n))` for the regular n-gon of area `a`; both tend to the
/// optimal circle's radius and perimeter as `n → ∞`.
pub fn circle_limit(k: Kappa, a: f64, n: usize) -> Result<(f64, f64)> {
    if n > MAX_LIMIT_N {
        return Err(Error::Usage(format!("n is capped at {MAX_LIMIT_N}, got {n}")));
    }
    let r = radius_from_area(k, n, a)?;
    Ok((r, n as f64 * side_length(k, n, r)))
}
