//! Embedded model surfaces and their primitives.
//!
//! All three surfaces share one representation, a 3-vector:
//!
//! - κ = +1: the unit sphere `x² + y² + z² = 1`;
//! - κ = −1: the upper sheet `x² + y² − z² = −1, z > 0`, with the Lorentz
//!   form `⟨a, b⟩₋₁ = a₁b₁ + a₂b₂ − a₃b₃`;
//! - κ = 0: the plane `z = 1`; tangent vectors have `w = 0`.
//!
//! The base point `p₀` is `(0, 0, 1)` on every surface. Outputs of
//! [`geodesic`] and [`reflect`] are projected back onto the surface so that
//! rounding drift never pushes a later `AC_κ` argument out of its domain.

use std::f64::consts::PI;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kappa::Kappa;

/// Membership tolerance for the surface equations and tangency.
pub const EPS_MEM: f64 = 1e-10;
/// Distance-agreement tolerance for isometry reconstruction.
pub const EPS_ISO: f64 = 1e-8;

pub type Vec3 = Vector3<f64>;

/// `⟨a, b⟩_κ`: the dot product for κ ∈ {0, 1}, the Lorentz form for κ = −1.
#[inline]
pub fn inner(k: Kappa, a: &Vec3, b: &Vec3) -> f64 {
    match k {
        Kappa::Hyperbolic => a.x * b.x + a.y * b.y - a.z * b.z,
        _ => a.dot(b),
    }
}

#[inline]
fn lorentz_flip(v: Vec3) -> Vec3 {
    Vec3::new(v.x, v.y, -v.z)
}

/// A point of the model surface for some κ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "RawPoint", try_from = "RawPoint")]
pub struct SurfacePoint {
    coords: Vec3,
    kappa: Kappa,
}

/// Serialized form of [`SurfacePoint`]; validated on the way in.
#[derive(Clone, Copy, Serialize, Deserialize)]
struct RawPoint {
    x: f64,
    y: f64,
    z: f64,
    kappa: Kappa,
}

impl From<SurfacePoint> for RawPoint {
    fn from(p: SurfacePoint) -> Self {
        Self {
            x: p.x(),
            y: p.y(),
            z: p.z(),
            kappa: p.kappa,
        }
    }
}

impl TryFrom<RawPoint> for SurfacePoint {
    type Error = Error;

    fn try_from(r: RawPoint) -> Result<Self> {
        SurfacePoint::new(r.kappa, r.x, r.y, r.z)
    }
}

impl SurfacePoint {
    /// Validate embedded coordinates against the surface equation.
    pub fn new(k: Kappa, x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vec3::new(x, y, z);
        if !v.iter().all(|c| c.is_finite()) {
            return Err(Error::Degenerate("point has non-finite coordinates".into()));
        }
        let ok = match k {
            Kappa::Spherical => (v.norm_squared() - 1.0).abs() <= EPS_MEM,
            Kappa::Hyperbolic => (inner(k, &v, &v) + 1.0).abs() <= EPS_MEM * v.z.max(1.0).powi(2) && z > 0.0,
            Kappa::Flat => (z - 1.0).abs() <= EPS_MEM,
        };
        if !ok {
            return Err(Error::Degenerate(format!(
                "({x}, {y}, {z}) is not on the surface with curvature {k}"
            )));
        }
        Ok(Self::on_surface(k, v))
    }

    /// The point `(x, y)` of the Euclidean plane.
    pub fn plane(x: f64, y: f64) -> Self {
        Self {
            coords: Vec3::new(x, y, 1.0),
            kappa: Kappa::Flat,
        }
    }

    /// The base point `p₀ = (0, 0, 1)`.
    pub fn origin(k: Kappa) -> Self {
        Self {
            coords: Vec3::z(),
            kappa: k,
        }
    }

    /// Geodesic polar coordinates about `p₀`: the point at distance `radius`
    /// in the tangent direction `(cos φ, sin φ, 0)`.
    pub fn from_polar(k: Kappa, radius: f64, phi: f64) -> Self {
        let dir = Vec3::new(phi.cos(), phi.sin(), 0.0);
        Self::on_surface(k, Vec3::z() * k.cos(radius) + dir * k.sin(radius))
    }

    /// Project an arbitrary nonzero (timelike, for κ = −1) vector onto the surface.
    pub fn project(k: Kappa, v: Vec3) -> Result<Self> {
        let ok = match k {
            Kappa::Spherical => v.norm() > 0.0,
            Kappa::Hyperbolic => v.z > 0.0 && inner(k, &v, &v) < 0.0,
            Kappa::Flat => true,
        };
        if !ok || !v.iter().all(|c| c.is_finite()) {
            return Err(Error::Degenerate(format!(
                "cannot project {v:?} onto the surface with curvature {k}"
            )));
        }
        Ok(match k {
            Kappa::Hyperbolic => Self {
                coords: v / (-inner(k, &v, &v)).sqrt(),
                kappa: k,
            },
            _ => Self::on_surface(k, v),
        })
    }

    /// Pull a vector that is already close to the surface back onto it.
    pub(crate) fn on_surface(k: Kappa, v: Vec3) -> Self {
        let coords = match k {
            Kappa::Spherical => v / v.norm(),
            Kappa::Hyperbolic => Vec3::new(v.x, v.y, (1.0 + v.x * v.x + v.y * v.y).sqrt()),
            Kappa::Flat => Vec3::new(v.x, v.y, 1.0),
        };
        Self { coords, kappa: k }
    }

    #[inline]
    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    #[inline]
    pub fn coords(&self) -> &Vec3 {
        &self.coords
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.coords.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.coords.y
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.coords.z
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.coords.x, self.coords.y, self.coords.z]
    }

    /// Residual of the surface equation; zero for exact members.
    pub fn membership_residual(&self) -> f64 {
        let v = &self.coords;
        match self.kappa {
            Kappa::Spherical => v.norm_squared() - 1.0,
            Kappa::Hyperbolic => inner(self.kappa, v, v) + 1.0,
            Kappa::Flat => v.z - 1.0,
        }
    }

    /// Geodesic distance. Both points must share κ.
    ///
    /// Numerically this evaluates `AC_κ(κ⟨p, q⟩_κ)` through an equivalent
    /// form that keeps full precision for nearby (and, on the sphere, nearly
    /// antipodal) points.
    pub fn distance_to(&self, other: &SurfacePoint) -> f64 {
        debug_assert_eq!(self.kappa, other.kappa);
        let (p, q) = (&self.coords, &other.coords);
        match self.kappa {
            Kappa::Flat => (p.x - q.x).hypot(p.y - q.y),
            Kappa::Spherical => p.cross(q).norm().atan2(p.dot(q)),
            Kappa::Hyperbolic => {
                let d = p - q;
                // ⟨p − q, p − q⟩ = 4 sinh²(d/2)
                let chord2 = inner(self.kappa, &d, &d).max(0.0);
                2.0 * (chord2.sqrt() / 2.0).asinh()
            }
        }
    }

    /// Unit tangent "left turn" partner of a tangent vector `u` at this point:
    /// the vector obtained by rotating `u` a quarter turn counterclockwise,
    /// seen from outside the surface (from +z at `p₀`).
    pub(crate) fn quarter_turn(&self, u: &Vec3) -> Vec3 {
        let p = &self.coords;
        let w = match self.kappa {
            Kappa::Flat => Vec3::new(-u.y, u.x, 0.0),
            Kappa::Spherical => p.cross(u),
            Kappa::Hyperbolic => lorentz_flip(p.cross(u)),
        };
        let k = self.kappa;
        let scale = (inner(k, u, u) / inner(k, &w, &w)).sqrt();
        w * scale
    }

    /// Orientation of a pair of tangent vectors at this point: positive when
    /// `v1 → v2` turns counterclockwise seen from outside.
    pub(crate) fn orientation(&self, v1: &Vec3, v2: &Vec3) -> f64 {
        match self.kappa {
            Kappa::Flat => v1.x * v2.y - v1.y * v2.x,
            _ => v1.cross(v2).dot(&self.coords),
        }
    }
}

/// A vector tangent to the surface at `base`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentVector {
    base: SurfacePoint,
    vec: Vec3,
}

impl TangentVector {
    /// Validate tangency: `⟨v, base⟩_κ = 0` for κ ≠ 0, `w = 0` for κ = 0.
    pub fn new(base: SurfacePoint, u: f64, v: f64, w: f64) -> Result<Self> {
        let vec = Vec3::new(u, v, w);
        let k = base.kappa;
        let off = match k {
            Kappa::Flat => w.abs(),
            _ => inner(k, &vec, base.coords()).abs(),
        };
        if off > EPS_MEM * vec.norm().max(1.0) * base.coords().norm() {
            return Err(Error::Degenerate(format!(
                "({u}, {v}, {w}) is not tangent at {:?}",
                base.to_array()
            )));
        }
        Ok(Self::tangent_part(base, vec))
    }

    /// The tangent component of an arbitrary vector at `base`.
    pub(crate) fn tangent_part(base: SurfacePoint, v: Vec3) -> Self {
        let k = base.kappa;
        let p = base.coords;
        let vec = match k {
            Kappa::Flat => Vec3::new(v.x, v.y, 0.0),
            // ⟨p, p⟩_κ = κ
            _ => v - p * (inner(k, &v, &p) / inner(k, &p, &p)),
        };
        Self { base, vec }
    }

    #[inline]
    pub fn base(&self) -> &SurfacePoint {
        &self.base
    }

    #[inline]
    pub fn vector(&self) -> &Vec3 {
        &self.vec
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.vec.x, self.vec.y, self.vec.z]
    }

    /// Length in the surface metric.
    pub fn norm(&self) -> f64 {
        inner(self.base.kappa, &self.vec, &self.vec).max(0.0).sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if !(n > 1e-300) || !n.is_finite() {
            return Err(Error::Degenerate("null tangent vector".into()));
        }
        Ok(Self {
            base: self.base,
            vec: self.vec / n,
        })
    }

    /// Rotate within the tangent plane by `theta`, counterclockwise seen from
    /// outside the surface.
    pub fn rotated(&self, theta: f64) -> Self {
        let w = self.base.quarter_turn(&self.vec);
        Self {
            base: self.base,
            vec: self.vec * theta.cos() + w * theta.sin(),
        }
    }

    /// Unoriented angle in `[0, π]` between two tangent vectors at one point.
    pub fn angle_to(&self, other: &TangentVector) -> f64 {
        let (a, b) = (self.vec / self.norm(), other.vec / other.norm());
        let k = self.base.kappa;
        let (s, d) = (a + b, a - b);
        let ns = inner(k, &s, &s).max(0.0).sqrt();
        let nd = inner(k, &d, &d).max(0.0).sqrt();
        2.0 * nd.atan2(ns)
    }
}

/// Geodesic distance between two points of the same surface.
pub fn distance(p: &SurfacePoint, q: &SurfacePoint) -> Result<f64> {
    same_surface(p, q)?;
    Ok(p.distance_to(q))
}

fn same_surface(p: &SurfacePoint, q: &SurfacePoint) -> Result<()> {
    if p.kappa != q.kappa {
        return Err(Error::Usage(format!(
            "points lie on different surfaces (κ = {} and κ = {})",
            p.kappa, q.kappa
        )));
    }
    Ok(())
}

/// The unit-speed geodesic `C_κ(t)^{|κ|} p + S_κ(t) v/|v|` started at the base
/// of `v`, evaluated at time `t`.
pub fn geodesic(v: &TangentVector, t: f64) -> Result<SurfacePoint> {
    if !t.is_finite() {
        return Err(Error::domain("geodesic", t, "time must be finite"));
    }
    let u = v.normalized()?;
    let k = v.base.kappa;
    let p = v.base.coords;
    Ok(SurfacePoint::on_surface(k, p * k.cos(t) + u.vec * k.sin(t)))
}

/// Unit initial direction at `x` of the segment `[x, y]`, from
/// `v = y − κ⟨y, x⟩_κ x + (|κ| − 1) x`.
pub fn segment_direction(x: &SurfacePoint, y: &SurfacePoint) -> Result<TangentVector> {
    same_surface(x, y)?;
    let k = x.kappa;
    let (xv, yv) = (x.coords, y.coords);
    let v = yv - xv * (k.as_f64() * inner(k, &yv, &xv)) + xv * (k.abs() - 1.0);
    let t = TangentVector::tangent_part(*x, v);
    let n = t.norm();
    // The formula loses relative precision as y approaches x (or −x);
    // reject below the scale where its direction is meaningless.
    if !(n > 1e-14) {
        return Err(Error::Degenerate(
            "segment endpoints coincide or are antipodal".into(),
        ));
    }
    Ok(TangentVector {
        base: *x,
        vec: t.vec / n,
    })
}

/// A line `{x : ⟨x, n⟩_κ = 0}` of the surface. For κ = 0 the plane point
/// `(x, y)` is read as `(x, y, 1)` so the normal carries the offset in its
/// third component.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Line {
    normal: Vec3,
    kappa: Kappa,
}

impl Line {
    /// Normalize `n` so that `⟨n, n⟩_κ = 1` (κ ≠ 0) or `n₁² + n₂² = 1` (κ = 0).
    /// For κ = −1 the normal must be spacelike, otherwise the line is empty.
    pub fn new(k: Kappa, n: Vec3) -> Result<Self> {
        let len2 = match k {
            Kappa::Flat => n.x * n.x + n.y * n.y,
            _ => inner(k, &n, &n),
        };
        if !(len2 > 0.0) || !len2.is_finite() {
            return Err(Error::Degenerate(format!(
                "{n:?} is not the normal of a line for curvature {k}"
            )));
        }
        Ok(Self {
            normal: n / len2.sqrt(),
            kappa: k,
        })
    }

    /// The perpendicular bisector of `p` and `q`: the points equidistant from both.
    pub fn bisector(p: &SurfacePoint, q: &SurfacePoint) -> Result<Self> {
        same_surface(p, q)?;
        let k = p.kappa;
        let d = p.coords - q.coords;
        match k {
            Kappa::Flat => {
                let mid = (p.coords + q.coords) / 2.0;
                let n = Vec3::new(d.x, d.y, 0.0);
                Line::new(k, Vec3::new(d.x, d.y, -n.dot(&Vec3::new(mid.x, mid.y, 0.0))))
            }
            // ⟨x, p⟩ = ⟨x, q⟩  ⇔  ⟨x, p − q⟩ = 0
            _ => Line::new(k, d),
        }
    }

    /// The line through two distinct points.
    pub fn through(p: &SurfacePoint, q: &SurfacePoint) -> Result<Self> {
        same_surface(p, q)?;
        let k = p.kappa;
        let c = p.coords.cross(&q.coords);
        match k {
            Kappa::Hyperbolic => Line::new(k, lorentz_flip(c)),
            _ => Line::new(k, c),
        }
    }

    /// The line through the base of `v` in direction `v`.
    pub fn along(v: &TangentVector) -> Result<Self> {
        let k = v.base.kappa;
        let c = v.base.coords.cross(&v.vec);
        match k {
            Kappa::Hyperbolic => Line::new(k, lorentz_flip(c)),
            _ => Line::new(k, c),
        }
    }

    /// Common points of two lines: two antipodes on the sphere, at most one
    /// point otherwise (none for parallel or ultraparallel lines).
    pub fn meet(&self, other: &Line) -> Result<Vec<SurfacePoint>> {
        if self.kappa != other.kappa {
            return Err(Error::Usage("lines lie on different surfaces".into()));
        }
        let k = self.kappa;
        let x = match k {
            Kappa::Hyperbolic => lorentz_flip(self.normal).cross(&lorentz_flip(other.normal)),
            _ => self.normal.cross(&other.normal),
        };
        let scale = self.normal.norm() * other.normal.norm();
        Ok(match k {
            Kappa::Spherical if x.norm() > 1e-14 * scale => {
                let p = SurfacePoint::on_surface(k, x);
                vec![p, SurfacePoint::on_surface(k, -x)]
            }
            Kappa::Flat if x.z.abs() > 1e-14 * scale => {
                vec![SurfacePoint::on_surface(k, x / x.z)]
            }
            Kappa::Hyperbolic if inner(k, &x, &x) < 0.0 => {
                let x = if x.z < 0.0 { -x } else { x };
                vec![SurfacePoint::project(k, x)?]
            }
            _ => Vec::new(),
        })
    }

    #[inline]
    pub fn normal(&self) -> &Vec3 {
        &self.normal
    }

    #[inline]
    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    /// Signed offset `⟨p, n⟩_κ`; zero exactly on the line.
    pub fn side(&self, p: &SurfacePoint) -> f64 {
        inner(self.kappa, p.coords(), &self.normal)
    }
}

/// Reflection `x − 2⟨x, n⟩_κ n` through a line.
///
/// # Panics
///
/// If the point and the line belong to different surfaces.
pub fn reflect(line: &Line, p: &SurfacePoint) -> SurfacePoint {
    assert_eq!(line.kappa, p.kappa, "line and point on different surfaces");
    let n = line.normal;
    let s = line.side(p);
    let v = match line.kappa {
        Kappa::Flat => p.coords - Vec3::new(n.x, n.y, 0.0) * (2.0 * s),
        _ => p.coords - n * (2.0 * s),
    };
    SurfacePoint::on_surface(p.kappa, v)
}

/// An isometry stored as a composition of reflections, applied in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    kappa: Kappa,
    reflections: Vec<Line>,
}

impl Isometry {
    pub fn identity(k: Kappa) -> Self {
        Self {
            kappa: k,
            reflections: Vec::new(),
        }
    }

    pub fn reflections(&self) -> &[Line] {
        &self.reflections
    }

    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    pub fn apply(&self, p: &SurfacePoint) -> SurfacePoint {
        self.reflections.iter().fold(*p, |q, l| reflect(l, &q))
    }
}

/// Rebuild an isometry with `A_i ↦ B_i` from the pairs `(A_i, B_i)` as at
/// most one reflection per pair.
///
/// Pairs are processed in order; when the current image of `A_i` misses
/// `B_i`, the map is extended by the reflection through their perpendicular
/// bisector. Earlier targets are equidistant from both and stay fixed.
pub fn isometry_from_correspondence(pairs: &[(SurfacePoint, SurfacePoint)]) -> Result<Isometry> {
    let Some(first) = pairs.first() else {
        return Err(Error::Usage("no point pairs given".into()));
    };
    let k = first.0.kappa;
    if pairs.iter().any(|(a, b)| a.kappa != k || b.kappa != k) {
        return Err(Error::Usage("point pairs lie on different surfaces".into()));
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let da = pairs[i].0.distance_to(&pairs[j].0);
            let db = pairs[i].1.distance_to(&pairs[j].1);
            if (da - db).abs() > EPS_ISO {
                return Err(Error::Infeasible(format!(
                    "pairs {i} and {j} disagree: d(A) = {da}, d(B) = {db}"
                )));
            }
        }
    }
    let mut iso = Isometry::identity(k);
    for (a, b) in pairs {
        let image = iso.apply(a);
        // Below this the bisector normal is dominated by rounding.
        if (image.coords - b.coords).norm() <= 1e-9 {
            continue;
        }
        iso.reflections.push(Line::bisector(&image, b)?);
    }
    Ok(iso)
}

/// A geodesic circle: the points at distance `radius` from `center`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    center: SurfacePoint,
    radius: f64,
}

impl Circle {
    /// `radius` must be positive, and below π on the sphere.
    pub fn new(center: SurfacePoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || radius >= center.kappa.max_distance() || !radius.is_finite() {
            return Err(Error::domain(
                "circle",
                radius,
                "radius must be positive (and below π on the sphere)",
            ));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> &SurfacePoint {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Area of the enclosed ball, `4π S_κ(r/2)²`.
    pub fn area(&self) -> f64 {
        4.0 * PI * self.center.kappa.sin(self.radius / 2.0).powi(2)
    }

    /// Length of the circle, `2π S_κ(r)`.
    pub fn perimeter(&self) -> f64 {
        2.0 * PI * self.center.kappa.sin(self.radius)
    }
}

pub fn circle_area(c: &Circle) -> f64 {
    c.area()
}

pub fn circle_perimeter(c: &Circle) -> f64 {
    c.perimeter()
}

/// Find a unit vector `n` with `⟨pᵢ, n⟩ > 0` for every point on the sphere,
/// i.e. an open hemisphere containing them all.
///
/// Candidates are tried in order: the normalized vertex sum, each point, the
/// normalized midpoint of each pair, and the circumcenter direction of each
/// triple; the first that works is returned. The center of the smallest cap
/// holding the points is one of the pair or triple candidates, so the search
/// misses a witness only when the points are (numerically) on the boundary of
/// a hemisphere. Pairs are skipped above 512 points and triples above 64. The
/// returned vector always satisfies the strict inequalities.
pub fn hemisphere_containing(points: &[SurfacePoint]) -> Result<Option<Vec3>> {
    if points.is_empty() {
        return Err(Error::Usage("hemisphere test needs at least one point".into()));
    }
    if points.iter().any(|p| p.kappa != Kappa::Spherical) {
        return Err(Error::Usage("hemisphere test is defined on the sphere only".into()));
    }
    let pts: Vec<Vec3> = points.iter().map(|p| p.coords).collect();
    let check = |v: Vec3| {
        let len = v.norm();
        if !(len > 1e-300) || !len.is_finite() {
            return None;
        }
        let n = v / len;
        pts.iter().all(|p| p.dot(&n) > 0.0).then_some(n)
    };
    if let Some(n) = check(pts.iter().sum()) {
        return Ok(Some(n));
    }
    if let Some(n) = pts.iter().find_map(|p| check(*p)) {
        return Ok(Some(n));
    }
    if pts.len() > 512 {
        return Ok(None);
    }
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate().skip(i + 1) {
            if let Some(n) = check(a + b) {
                return Ok(Some(n));
            }
            if pts.len() > 64 {
                continue;
            }
            for c in pts.iter().skip(j + 1) {
                let n = (a - b).cross(&(a - c));
                if let Some(n) = check(n).or_else(|| check(-n)) {
                    return Ok(Some(n));
                }
            }
        }
    }
    Ok(None)
}

/// An orthonormal frame of the tangent plane at `p`, positively oriented.
pub(crate) fn tangent_frame(p: &SurfacePoint) -> (TangentVector, TangentVector) {
    let c = p.coords;
    // Pick the axis least aligned with the point to avoid a null projection.
    let seed = if c.x.abs() <= c.y.abs() {
        Vec3::x()
    } else {
        Vec3::y()
    };
    let e1 = TangentVector::tangent_part(*p, seed)
        .normalized()
        .expect("axis has a tangent component");
    let e2 = e1.rotated(std::f64::consts::FRAC_PI_2);
    (e1, e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn hyp(t: f64) -> SurfacePoint {
        SurfacePoint::new(Kappa::Hyperbolic, t.sinh(), 0.0, t.cosh()).unwrap()
    }

    fn sph(x: f64, y: f64, z: f64) -> SurfacePoint {
        SurfacePoint::new(Kappa::Spherical, x, y, z).unwrap()
    }

    #[test]
    fn inner_product_values() {
        let z = Vec3::z();
        assert_eq!(inner(Kappa::Hyperbolic, &z, &z), -1.0);
        assert_eq!(inner(Kappa::Spherical, &Vec3::x(), &Vec3::y()), 0.0);
        let p = Vec3::new(1f64.sinh(), 0.0, 1f64.cosh());
        assert!((inner(Kappa::Hyperbolic, &p, &z) + 1f64.cosh()).abs() < 1e-15);
    }

    #[test]
    fn membership_is_validated() {
        assert!(SurfacePoint::new(Kappa::Spherical, 1.0, 1.0, 0.0).is_err());
        assert!(SurfacePoint::new(Kappa::Hyperbolic, 0.0, 0.0, -1.0).is_err());
        assert!(SurfacePoint::new(Kappa::Flat, 3.0, 4.0, 1.5).is_err());
        assert_eq!(SurfacePoint::new(Kappa::Flat, 3.0, 4.0, 1.0).unwrap().z(), 1.0);
        assert!(SurfacePoint::new(Kappa::Spherical, f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn distance_values() {
        let d = distance(&sph(0.0, 0.0, 1.0), &sph(1.0, 0.0, 0.0)).unwrap();
        assert!((d - FRAC_PI_2).abs() < 1e-15);
        let d = distance(&SurfacePoint::origin(Kappa::Hyperbolic), &hyp(1.0)).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
        let d = distance(&SurfacePoint::plane(3.0, 4.0), &SurfacePoint::plane(0.0, 0.0)).unwrap();
        assert_eq!(d, 5.0);
        let d = distance(&sph(0.0, 0.0, 1.0), &sph(0.0, 0.0, -1.0)).unwrap();
        assert!((d - PI).abs() < 1e-15);
        assert!(distance(&sph(0.0, 0.0, 1.0), &SurfacePoint::plane(0.0, 0.0))
            .unwrap_err()
            .is_usage());
    }

    #[test]
    fn distance_matches_arc_cosine_form() {
        // AC_κ(κ⟨p, q⟩_κ) directly, away from its ill-conditioned ends.
        for k in Kappa::CURVED {
            for i in 1..50 {
                let t = 0.06 * f64::from(i);
                let p = SurfacePoint::from_polar(k, 0.3, 0.2);
                let q = SurfacePoint::from_polar(k, t, 2.0);
                let direct = k
                    .acos(k.as_f64() * inner(k, p.coords(), q.coords()))
                    .unwrap();
                assert!((p.distance_to(&q) - direct).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn geodesic_values() {
        let p = SurfacePoint::origin(Kappa::Flat);
        let v = TangentVector::new(p, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(geodesic(&v, 2.0).unwrap().to_array(), [2.0, 0.0, 1.0]);

        let p = SurfacePoint::origin(Kappa::Spherical);
        let v = TangentVector::new(p, 1.0, 0.0, 0.0).unwrap();
        let q = geodesic(&v, FRAC_PI_2).unwrap();
        assert!((q.coords() - Vec3::x()).norm() < 1e-15);

        let p = SurfacePoint::origin(Kappa::Hyperbolic);
        let v = TangentVector::new(p, 1.0, 0.0, 0.0).unwrap();
        let q = geodesic(&v, 1.0).unwrap();
        assert!((q.coords() - hyp(1.0).coords()).norm() < 1e-15);

        let zero = TangentVector::new(p, 0.0, 0.0, 0.0).unwrap();
        assert!(matches!(geodesic(&zero, 1.0), Err(Error::Degenerate(_))));
        assert!(TangentVector::new(p, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn segment_direction_values() {
        let v = segment_direction(&SurfacePoint::origin(Kappa::Flat), &SurfacePoint::plane(3.0, 0.0))
            .unwrap();
        assert_eq!(v.to_array(), [1.0, 0.0, 0.0]);
        let v = segment_direction(&SurfacePoint::origin(Kappa::Spherical), &sph(1.0, 0.0, 0.0))
            .unwrap();
        assert!((v.vector() - Vec3::x()).norm() < 1e-15);
        let v = segment_direction(&SurfacePoint::origin(Kappa::Hyperbolic), &hyp(1.0)).unwrap();
        assert!((v.vector() - Vec3::x()).norm() < 1e-15);

        let o = SurfacePoint::origin(Kappa::Spherical);
        assert!(segment_direction(&o, &o).is_err());
        assert!(segment_direction(&o, &sph(0.0, 0.0, -1.0)).is_err());
    }

    #[test]
    fn segment_direction_reaches_the_endpoint() {
        for k in Kappa::ALL {
            let x = SurfacePoint::from_polar(k, 0.7, 0.4);
            let y = SurfacePoint::from_polar(k, 1.1, 2.9);
            let v = segment_direction(&x, &y).unwrap();
            let z = geodesic(&v, x.distance_to(&y)).unwrap();
            assert!((z.coords() - y.coords()).norm() < 1e-12, "{k}");
        }
    }

    #[test]
    fn reflection_values() {
        let k = Kappa::Spherical;
        let l = Line::new(k, Vec3::y()).unwrap();
        assert_eq!(reflect(&l, &SurfacePoint::origin(k)), SurfacePoint::origin(k));
        let l = Line::new(k, Vec3::x()).unwrap();
        assert!((reflect(&l, &sph(1.0, 0.0, 0.0)).coords() + Vec3::x()).norm() < 1e-15);

        let k = Kappa::Hyperbolic;
        let l = Line::new(k, Vec3::x()).unwrap();
        let r = reflect(&l, &hyp(1.0));
        let want = Vec3::new(-(1f64.sinh()), 0.0, 1f64.cosh());
        assert!((r.coords() - want).norm() < 1e-14);
        assert!(Line::new(k, Vec3::z()).is_err());
    }

    #[test]
    fn flat_bisector_reflection() {
        let a = SurfacePoint::plane(0.0, 0.0);
        let b = SurfacePoint::plane(2.0, 0.0);
        let iso = isometry_from_correspondence(&[(a, b)]).unwrap();
        assert_eq!(iso.len(), 1);
        let l = &iso.reflections()[0];
        // the line x = 1
        assert!(l.side(&SurfacePoint::plane(1.0, 5.0)).abs() < 1e-15);
        assert!((iso.apply(&a).coords() - b.coords()).norm() < 1e-15);
    }

    #[test]
    fn identical_pairs_need_no_reflection() {
        let pts: Vec<_> = (0..4)
            .map(|i| SurfacePoint::from_polar(Kappa::Hyperbolic, 0.5 + f64::from(i), f64::from(i)))
            .collect();
        let pairs: Vec<_> = pts.iter().map(|p| (*p, *p)).collect();
        assert!(isometry_from_correspondence(&pairs).unwrap().is_empty());
    }

    #[test]
    fn mismatched_distances_are_infeasible() {
        let a = [SurfacePoint::plane(0.0, 0.0), SurfacePoint::plane(1.0, 0.0)];
        let b = [SurfacePoint::plane(0.0, 0.0), SurfacePoint::plane(2.0, 0.0)];
        let err = isometry_from_correspondence(&[(a[0], b[0]), (a[1], b[1])]).unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }

    #[test]
    fn circle_values() {
        let r = 2.0 * 0.5f64.asinh();
        let c = Circle::new(SurfacePoint::origin(Kappa::Hyperbolic), r).unwrap();
        assert!((c.area() - PI).abs() < 1e-14);
        let c = Circle::new(SurfacePoint::origin(Kappa::Flat), 1.0).unwrap();
        assert!((c.area() - PI).abs() < 1e-15 && (c.perimeter() - 2.0 * PI).abs() < 1e-15);
        let c = Circle::new(SurfacePoint::origin(Kappa::Spherical), FRAC_PI_2).unwrap();
        assert!((c.area() - 2.0 * PI).abs() < 1e-14);
        assert!((c.perimeter() - 2.0 * PI).abs() < 1e-14);
        assert!(Circle::new(SurfacePoint::origin(Kappa::Spherical), PI).is_err());
        assert!(Circle::new(SurfacePoint::origin(Kappa::Flat), 0.0).is_err());
    }

    #[test]
    fn hemisphere_examples() {
        let pts: Vec<_> = [(0.3, 0.1), (-0.2, 0.4), (0.0, -0.5)]
            .iter()
            .map(|&(x, y)| sph(x, y, (1.0f64 - x * x - y * y).sqrt()))
            .collect();
        let n = hemisphere_containing(&pts).unwrap().unwrap();
        assert!(pts.iter().all(|p| p.coords().dot(&n) > 0.0));

        let anti = [sph(0.0, 0.0, 1.0), sph(0.0, 0.0, -1.0)];
        assert_eq!(hemisphere_containing(&anti).unwrap(), None);

        assert!(hemisphere_containing(&[]).unwrap_err().is_usage());
        assert!(hemisphere_containing(&[SurfacePoint::plane(0.0, 0.0)])
            .unwrap_err()
            .is_usage());
    }

    #[test]
    fn hemisphere_rejects_points_spanning_the_sphere() {
        // Octahedron vertices: no open hemisphere holds all six.
        let v = [Vec3::x(), -Vec3::x(), Vec3::y(), -Vec3::y(), Vec3::z(), -Vec3::z()];
        let pts: Vec<_> = v.iter().map(|c| sph(c.x, c.y, c.z)).collect();
        assert_eq!(hemisphere_containing(&pts).unwrap(), None);
        // Three points on a great circle 120° apart: the boundary case.
        let tri: Vec<_> = (0..3)
            .map(|i| {
                let t = 2.0 * PI * f64::from(i) / 3.0;
                sph(t.cos(), t.sin(), 0.0)
            })
            .collect();
        assert_eq!(hemisphere_containing(&tri).unwrap(), None);
    }

    #[test]
    fn quarter_turn_is_tangent_and_positive() {
        for k in Kappa::ALL {
            let p = SurfacePoint::from_polar(k, 0.8, 1.3);
            let (e1, e2) = tangent_frame(&p);
            assert!((e1.norm() - 1.0).abs() < 1e-14 && (e2.norm() - 1.0).abs() < 1e-14);
            assert!(inner(k, e1.vector(), e2.vector()).abs() < 1e-14);
            assert!(p.orientation(e1.vector(), e2.vector()) > 0.0);
            if k != Kappa::Flat {
                assert!(inner(k, e2.vector(), p.coords()).abs() < 1e-14);
            }
        }
    }

    fn any_kappa() -> impl Strategy<Value = Kappa> {
        prop_oneof![Just(Kappa::Hyperbolic), Just(Kappa::Flat), Just(Kappa::Spherical)]
    }

    fn point(k: Kappa) -> impl Strategy<Value = SurfacePoint> {
        (0.0f64..1.4, 0.0f64..(2.0 * PI)).prop_map(move |(r, phi)| SurfacePoint::from_polar(k, r, phi))
    }

    fn line(k: Kappa) -> impl Strategy<Value = Line> {
        (point(k), point(k))
            .prop_filter("distinct", |(p, q)| p.distance_to(q) > 1e-3)
            .prop_map(|(p, q)| Line::through(&p, &q).unwrap())
    }

    proptest! {
        #[test]
        fn geodesic_has_unit_speed(
            (_k, p, phi, t) in any_kappa().prop_flat_map(|k| (Just(k), point(k), 0.0f64..6.3, 0.0f64..1.0))
        ) {
            let (e1, _) = tangent_frame(&p);
            let q = geodesic(&e1.rotated(phi), t).unwrap();
            prop_assert!((p.distance_to(&q) - t).abs() <= 1e-10);
            prop_assert!(q.membership_residual().abs() <= EPS_MEM);
        }

        #[test]
        fn reflections_are_involutive_isometries(
            (l, p, q) in any_kappa().prop_flat_map(|k| (line(k), point(k), point(k)))
        ) {
            let (rp, rq) = (reflect(&l, &p), reflect(&l, &q));
            prop_assert!((rp.distance_to(&rq) - p.distance_to(&q)).abs() <= 1e-10);
            let back = reflect(&l, &rp);
            prop_assert!((back.coords() - p.coords()).amax() <= 1e-12);
            prop_assert!(rp.membership_residual().abs() <= EPS_MEM);
        }
    }
}
