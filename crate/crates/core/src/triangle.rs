//! Triangles: metric laws, area formulas, congruence and extremal shapes.
//!
//! Vertices `P, Q, R` carry angles `α, β, γ`; side `a` is opposite `P`, `b`
//! opposite `Q`, `c` opposite `R`, and `s = (a + b + c)/2`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kappa::Kappa;
use crate::solve;
use crate::surface::{inner, Line, SurfacePoint, TangentVector};

/// Absolute tolerance on sides and angles for congruence decisions.
pub const EPS_CONG: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub kappa: Kappa,
    pub p: SurfacePoint,
    pub q: SurfacePoint,
    pub r: SurfacePoint,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

fn check_sss(k: Kappa, a: f64, b: f64, c: f64) -> Result<()> {
    if ![a, b, c].iter().all(|x| x.is_finite() && *x > 0.0) {
        return Err(Error::Infeasible(format!(
            "sides ({a}, {b}, {c}) must be positive and finite"
        )));
    }
    if !(b + c - a > 0.0 && a + c - b > 0.0 && a + b - c > 0.0) {
        return Err(Error::Infeasible(format!(
            "sides ({a}, {b}, {c}) violate the strict triangle inequality"
        )));
    }
    if k == Kappa::Spherical && !(a + b + c < 2.0 * PI) {
        return Err(Error::Infeasible(format!(
            "spherical sides ({a}, {b}, {c}) have perimeter ≥ 2π"
        )));
    }
    Ok(())
}

/// `(s, s − a, s − b, s − c)` with each difference formed without cancellation
/// against `s`.
fn semi(a: f64, b: f64, c: f64) -> [f64; 4] {
    [
        (a + b + c) / 2.0,
        (b + c - a) / 2.0,
        (a + c - b) / 2.0,
        (a + b - c) / 2.0,
    ]
}

fn check_angle(func: &'static str, t: f64) -> Result<()> {
    if !(t > 0.0 && t < PI) {
        return Err(Error::domain(func, t, "angle must lie in (0, π)"));
    }
    Ok(())
}

/// Law of cosines: the side opposite the angle `gamma` between sides `a`, `b`.
pub fn side_from_sas(k: Kappa, a: f64, b: f64, gamma: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::domain("side_from_sas", a.min(b), "sides must be positive"));
    }
    check_angle("side_from_sas", gamma)?;
    // Measuring the embedded layout is the law of cosines without the
    // cancellation of AC_κ near 0 and π.
    let x = SurfacePoint::from_polar(k, b, 0.0);
    let y = SurfacePoint::from_polar(k, a, gamma);
    Ok(x.distance_to(&y))
}

/// The three angles `(α, β, γ)` of the triangle with sides `(a, b, c)`.
///
/// Each angle comes from its half-angle sine and cosine, e.g.
/// `tan(α/2) = √(S(s−b) S(s−c) / (S(s) S(s−a)))`, which keeps full relative
/// precision for thin and tiny triangles.
pub fn angles_from_sss(k: Kappa, a: f64, b: f64, c: f64) -> Result<(f64, f64, f64)> {
    check_sss(k, a, b, c)?;
    let [s, sa, sb, sc] = semi(a, b, c).map(|t| k.sin(t));
    let half = |x: f64, y: f64, z: f64, w: f64| 2.0 * (x * y).sqrt().atan2((z * w).sqrt());
    Ok((half(sb, sc, s, sa), half(sa, sc, s, sb), half(sa, sb, s, sc)))
}

/// Heron-type area from three sides: `T_{|κ|}(A/4)² = T_κ(s/2) T_κ((s−a)/2) T_κ((s−b)/2) T_κ((s−c)/2)`,
/// and the classical Heron formula for κ = 0.
pub fn area_heron(k: Kappa, a: f64, b: f64, c: f64) -> Result<f64> {
    check_sss(k, a, b, c)?;
    let h = semi(a, b, c);
    Ok(match k {
        Kappa::Flat => (h[0] * h[1] * h[2] * h[3]).sqrt(),
        _ => {
            let prod: f64 = h.iter().map(|t| k.tan(t / 2.0)).product();
            4.0 * prod.sqrt().atan()
        }
    })
}

/// Area from two sides and the included angle:
/// `CT_{|κ|}(A/2) = (CT_κ(a/2) CT_κ(b/2) + κ cos γ) / sin γ` for κ ≠ 0.
pub fn area_sas(k: Kappa, a: f64, b: f64, gamma: f64) -> Result<f64> {
    let valid = |x: f64| x > 0.0 && x < k.max_distance();
    if !(valid(a) && valid(b)) {
        return Err(Error::domain(
            "area_sas",
            if valid(a) { b } else { a },
            "sides must be positive (and below π on the sphere)",
        ));
    }
    check_angle("area_sas", gamma)?;
    Ok(match k {
        Kappa::Flat => a * b * gamma.sin() / 2.0,
        _ => {
            let num = k.cot(a / 2.0) * k.cot(b / 2.0) + k.as_f64() * gamma.cos();
            2.0 * gamma.sin().atan2(num)
        }
    })
}

/// Angle-excess area `κ(α + β + γ − π)`; undefined in the plane.
pub fn area_from_angles(k: Kappa, alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    if k.is_flat() {
        return Err(Error::Usage(
            "the angles of a plane triangle do not determine its area".into(),
        ));
    }
    for t in [alpha, beta, gamma] {
        check_angle("area_from_angles", t)?;
    }
    let area = k.as_f64() * (alpha + beta + gamma - PI);
    if !(area > 0.0) {
        return Err(Error::Infeasible(format!(
            "angle sum {} is on the wrong side of π for curvature {k}",
            alpha + beta + gamma
        )));
    }
    Ok(area)
}

impl Triangle {
    /// Canonical placement: `P = p₀`, `Q` at distance `c` along the first
    /// coordinate axis, `R` at distance `b` from `P` at angle `α` (counterclockwise).
    pub fn from_sss(k: Kappa, a: f64, b: f64, c: f64) -> Result<Self> {
        let (alpha, beta, gamma) = angles_from_sss(k, a, b, c)?;
        Ok(Self {
            kappa: k,
            p: SurfacePoint::origin(k),
            q: SurfacePoint::from_polar(k, c, 0.0),
            r: SurfacePoint::from_polar(k, b, alpha),
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    }

    /// Sides `a`, `b` and the angle `γ` between them.
    pub fn from_sas(k: Kappa, a: f64, b: f64, gamma: f64) -> Result<Self> {
        let c = side_from_sas(k, a, b, gamma)?;
        Self::from_sss(k, a, b, c).map_err(|e| match e {
            Error::Infeasible(m) => Error::Infeasible(format!("{m} (from a = {a}, b = {b}, γ = {gamma})")),
            e => e,
        })
    }

    /// Angles `α`, `β` at the ends of the side `c`.
    pub fn from_asa(k: Kappa, alpha: f64, c: f64, beta: f64) -> Result<Self> {
        check_angle("from_asa", alpha)?;
        check_angle("from_asa", beta)?;
        if !(c > 0.0 && c < k.max_distance()) {
            return Err(Error::domain(
                "from_asa",
                c,
                "side must be positive (and below π on the sphere)",
            ));
        }
        let p = SurfacePoint::origin(k);
        let q = SurfacePoint::from_polar(k, c, 0.0);
        let u1 = TangentVector::new(p, 1.0, 0.0, 0.0)?.rotated(alpha);
        let u2 = crate::surface::segment_direction(&q, &p)?.rotated(-beta);
        let ahead = |x: &SurfacePoint, base: &SurfacePoint, u: &TangentVector| {
            inner(k, &(x.coords() - base.coords()), u.vector()) > 0.0
        };
        let r = Line::along(&u1)?
            .meet(&Line::along(&u2)?)?
            .into_iter()
            .find(|x| ahead(x, &p, &u1) && ahead(x, &q, &u2))
            .ok_or_else(|| {
                Error::Infeasible(format!(
                    "rays at angles {alpha} and {beta} on a side of length {c} do not meet"
                ))
            })?;
        Self::from_vertices(p, q, r)
    }

    /// Measure a triangle given by its vertices.
    pub fn from_vertices(p: SurfacePoint, q: SurfacePoint, r: SurfacePoint) -> Result<Self> {
        let k = p.kappa();
        if q.kappa() != k || r.kappa() != k {
            return Err(Error::Usage("vertices lie on different surfaces".into()));
        }
        let (a, b, c) = (q.distance_to(&r), p.distance_to(&r), p.distance_to(&q));
        let (alpha, beta, gamma) = angles_from_sss(k, a, b, c)?;
        Ok(Self {
            kappa: k,
            p,
            q,
            r,
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn angles(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn semiperimeter(&self) -> f64 {
        (self.a + self.b + self.c) / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c
    }

    pub fn area(&self) -> f64 {
        area_heron(self.kappa, self.a, self.b, self.c).expect("validated on construction")
    }

    /// Relabel `(P, Q, R) → (Q, R, P)`.
    pub fn rotated(&self) -> Self {
        Self {
            p: self.q,
            q: self.r,
            r: self.p,
            a: self.b,
            b: self.c,
            c: self.a,
            alpha: self.beta,
            beta: self.gamma,
            gamma: self.alpha,
            ..*self
        }
    }

    /// Relabel `(P, Q, R) → (P, R, Q)`, reversing the orientation.
    pub fn mirrored(&self) -> Self {
        Self {
            q: self.r,
            r: self.q,
            b: self.c,
            c: self.b,
            beta: self.gamma,
            gamma: self.beta,
            ..*self
        }
    }

    /// The six relabelings (three cyclic, each in both orientations).
    pub fn correspondences(&self) -> [Triangle; 6] {
        let r1 = self.rotated();
        let r2 = r1.rotated();
        [*self, r1, r2, self.mirrored(), r1.mirrored(), r2.mirrored()]
    }
}

/// Closed-form half-angle and Mollweide-type relations of a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfAngleFormula {
    /// `sin(γ/2) = √(S(s−a) S(s−b) / (S(a) S(b)))`
    B1,
    /// `cos(γ/2) = √(S(s) S(s−c) / (S(a) S(b)))`
    B2,
    /// Law of sines with its closed-form common ratio.
    B3,
    /// `sin((α+β)/2) = cos(γ/2) C((a−b)/2) / C(c/2)`
    B4,
    /// `sin((α−β)/2) = cos(γ/2) S((a−b)/2) / S(c/2)`
    B5,
    /// `cos((α+β)/2) = sin(γ/2) C((a+b)/2) / C(c/2)`
    B6,
    /// `cos((α−β)/2) = sin(γ/2) S((a+b)/2) / S(c/2)`
    B7,
}

impl HalfAngleFormula {
    pub const ALL: [HalfAngleFormula; 7] = [
        Self::B1,
        Self::B2,
        Self::B3,
        Self::B4,
        Self::B5,
        Self::B6,
        Self::B7,
    ];

    pub fn tag(self) -> &'static str {
        ["B-1", "B-2", "B-3", "B-4", "B-5", "B-6", "B-7"][self as usize]
    }

    /// B-4 … B-7 are stated for curved surfaces only.
    pub fn requires_curvature(self) -> bool {
        self as usize >= 3
    }
}

impl fmt::Display for HalfAngleFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for HalfAngleFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('-', "");
        Self::ALL
            .into_iter()
            .find(|f| f.tag().replace('-', "") == t)
            .ok_or_else(|| Error::Usage(format!("unknown half-angle formula `{s}`")))
    }
}

/// `LHS − RHS` of a half-angle formula on a triangle. For the law of sines
/// the largest deviation of the three ratios from the closed form is returned.
pub fn half_angle_residual(id: HalfAngleFormula, t: &Triangle) -> Result<f64> {
    let k = t.kappa;
    if id.requires_curvature() && k.is_flat() {
        return Err(Error::Usage(format!("{id} is stated for κ ≠ 0 only")));
    }
    let (a, b, c) = (t.a, t.b, t.c);
    let [s, sa, sb, sc] = semi(a, b, c).map(|x| k.sin(x));
    let (al, be, ga) = (t.alpha, t.beta, t.gamma);
    let (sn, cs) = (|x: f64| k.sin(x), |x: f64| k.cos(x));
    Ok(match id {
        HalfAngleFormula::B1 => (ga / 2.0).sin() - (sa * sb / (sn(a) * sn(b))).sqrt(),
        HalfAngleFormula::B2 => (ga / 2.0).cos() - (s * sc / (sn(a) * sn(b))).sqrt(),
        HalfAngleFormula::B3 => {
            let common = 2.0 * (s * sa * sb * sc).sqrt() / (sn(a) * sn(b) * sn(c));
            [al.sin() / sn(a), be.sin() / sn(b), ga.sin() / sn(c)]
                .into_iter()
                .map(|r| r - common)
                .fold(0.0, |m: f64, d| if d.abs() > m.abs() { d } else { m })
        }
        HalfAngleFormula::B4 => {
            ((al + be) / 2.0).sin() - (ga / 2.0).cos() * cs((a - b) / 2.0) / cs(c / 2.0)
        }
        HalfAngleFormula::B5 => {
            ((al - be) / 2.0).sin() - (ga / 2.0).cos() * sn((a - b) / 2.0) / sn(c / 2.0)
        }
        HalfAngleFormula::B6 => {
            ((al + be) / 2.0).cos() - (ga / 2.0).sin() * cs((a + b) / 2.0) / cs(c / 2.0)
        }
        HalfAngleFormula::B7 => {
            ((al - be) / 2.0).cos() - (ga / 2.0).sin() * sn((a + b) / 2.0) / sn(c / 2.0)
        }
    })
}

/// Data compared when deciding congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Congruence {
    Sss,
    Sas,
    Asa,
    Aaa,
}

impl FromStr for Congruence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "SSS" => Ok(Self::Sss),
            "SAS" => Ok(Self::Sas),
            "ASA" => Ok(Self::Asa),
            "AAA" => Ok(Self::Aaa),
            _ => Err(Error::Usage(format!("unknown congruence criterion `{s}`"))),
        }
    }
}

impl Congruence {
    fn data(self, t: &Triangle) -> [f64; 3] {
        match self {
            Self::Sss => [t.a, t.b, t.c],
            Self::Sas => [t.a, t.b, t.gamma],
            Self::Asa => [t.alpha, t.c, t.beta],
            Self::Aaa => [t.alpha, t.beta, t.gamma],
        }
    }
}

/// Whether the criterion's data of `t1` match those of `t2` under one of the
/// six vertex correspondences, within [`EPS_CONG`].
pub fn congruence_decide(t1: &Triangle, t2: &Triangle, criterion: Congruence) -> Result<bool> {
    if t1.kappa != t2.kappa {
        return Err(Error::Usage("triangles lie on different surfaces".into()));
    }
    if criterion == Congruence::Aaa && t1.kappa.is_flat() {
        return Err(Error::Usage(
            "angles alone do not determine a plane triangle up to congruence".into(),
        ));
    }
    let d1 = criterion.data(t1);
    Ok(t2.correspondences().iter().any(|t| {
        let d2 = criterion.data(t);
        d1.iter().zip(d2).all(|(x, y)| (x - y).abs() <= EPS_CONG)
    }))
}

/// Supremum of the base angles of isosceles triangles with base `a`.
pub fn isosceles_max_base_angle(k: Kappa, a: f64) -> Result<f64> {
    if !(a > 0.0 && a < k.max_distance()) {
        return Err(Error::domain(
            "isosceles_max_base_angle",
            a,
            "base must be positive (and below π on the sphere)",
        ));
    }
    Ok(match k {
        Kappa::Flat => PI / 2.0,
        Kappa::Spherical => PI,
        Kappa::Hyperbolic => (a / 2.0).tanh().acos(),
    })
}

/// The isosceles triangle with base `a` and perimeter `2s`, i.e. legs
/// `s − a/2`. The base is `c = |PQ|`, so `α = β` are the base angles.
pub fn isosceles_from_base_and_slant(k: Kappa, a: f64, s: f64) -> Result<Triangle> {
    if !(a > 0.0 && a < s && s.is_finite()) || (k == Kappa::Spherical && !(s < PI)) {
        return Err(Error::Infeasible(format!(
            "need 0 < a < s (and s < π on the sphere), got a = {a}, s = {s}"
        )));
    }
    let leg = s - a / 2.0;
    Triangle::from_sss(k, leg, leg, a)
}

/// Base angle `arccos(T_κ(a/2) / T_κ(s − a/2))` of [`isosceles_from_base_and_slant`].
pub fn isosceles_base_angle(k: Kappa, a: f64, s: f64) -> Result<f64> {
    isosceles_from_base_and_slant(k, a, s)?;
    Ok((k.tan(a / 2.0) / k.tan(s - a / 2.0)).clamp(-1.0, 1.0).acos())
}

/// The included angle `γ*` maximizing the area for fixed sides `a`, `b`,
/// with that area.
///
/// Golden-section search on `(δ, π − δ)` brackets the maximizer; the area is
/// flat there, so the bracket is then refined by bisection on the sign of
/// `∂A/∂γ ∝ CT_κ(a/2) CT_κ(b/2) cos γ + κ` (`cos γ` in the plane).
pub fn max_area_triangle_two_sides(k: Kappa, a: f64, b: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::domain(
            "max_area_triangle_two_sides",
            a.min(b),
            "sides must be positive",
        ));
    }
    if k == Kappa::Spherical && !(a + b < PI) {
        return Err(Error::domain(
            "max_area_triangle_two_sides",
            a + b,
            "spherical sides must satisfy a + b < π",
        ));
    }
    const DELTA: f64 = 1e-6;
    let area = |g: f64| area_sas(k, a, b, g).unwrap_or(f64::NEG_INFINITY);
    let g0 = solve::golden_max(area, DELTA, PI - DELTA, 1e-10);
    let slope = |g: f64| match k {
        Kappa::Flat => g.cos(),
        _ => k.cot(a / 2.0) * k.cot(b / 2.0) * g.cos() + k.as_f64(),
    };
    let (lo, hi) = ((g0 - 1e-6).max(DELTA), (g0 + 1e-6).min(PI - DELTA));
    let g = solve::bisect(slope, lo, hi, 0.0).unwrap_or(g0);
    Ok((g, area_sas(k, a, b, g)?))
}

/// Among triangles with base `a` and perimeter `2 s0`, the isosceles one has
/// the largest area. Checks this for the triangle `(a, b, c)`.
pub fn isosceles_dominates_area(k: Kappa, a: f64, s0: f64, b: f64, c: f64) -> Result<bool> {
    if ((b + c) - (2.0 * s0 - a)).abs() > 1e-9 * s0.abs().max(1.0) {
        return Err(Error::Infeasible(format!(
            "b + c = {} differs from 2 s0 − a = {}",
            b + c,
            2.0 * s0 - a
        )));
    }
    let other = area_heron(k, a, b, c)?;
    let leg = s0 - a / 2.0;
    let iso = area_heron(k, a, leg, leg)?;
    Ok(other <= iso + 1e-12)
}
