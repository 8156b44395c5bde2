//! Geodesic polygons, digons, the arm lemma and cyclic chains.
//!
//! Simplicity and orientation are decided in a chart that maps geodesics to
//! straight lines: the identity in the plane, the Klein projection
//! `(x/z, y/z)` of the hyperboloid, and the gnomonic projection of the sphere
//! from the center of a hemisphere holding the polygon.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kappa::Kappa;
use crate::solve;
use crate::surface::{
    geodesic, hemisphere_containing, segment_direction, SurfacePoint, TangentVector, Vec3,
};

type P2 = [f64; 2];

/// A simple closed geodesic polygon, stored with counterclockwise (positive)
/// orientation seen from outside the surface.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon")]
pub struct GeodesicPolygon {
    kappa: Kappa,
    vertices: Vec<SurfacePoint>,
}

#[derive(Deserialize)]
struct RawPolygon {
    kappa: Kappa,
    vertices: Vec<SurfacePoint>,
}

impl TryFrom<RawPolygon> for GeodesicPolygon {
    type Error = Error;

    fn try_from(r: RawPolygon) -> Result<Self> {
        let p = GeodesicPolygon::new(r.vertices)?;
        if p.kappa != r.kappa {
            return Err(Error::Usage("vertex curvature differs from the polygon's".into()));
        }
        Ok(p)
    }
}

impl GeodesicPolygon {
    /// Validate and orient. Clockwise input is reversed.
    pub fn new(vertices: Vec<SurfacePoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Usage(format!(
                "a polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let k = vertices[0].kappa();
        if vertices.iter().any(|v| v.kappa() != k) {
            return Err(Error::Usage("vertices lie on different surfaces".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            let d = vertices[i].distance_to(&vertices[(i + 1) % n]);
            if !(d > 1e-12) || d > k.max_distance() - 1e-12 {
                return Err(Error::Degenerate(format!(
                    "vertices {i} and {} coincide or are antipodal",
                    (i + 1) % n
                )));
            }
        }
        let chart = chart(&vertices)?;
        let mut vertices = vertices;
        match star_orientation(&chart) {
            Some(true) => {}
            Some(false) => vertices.reverse(),
            None => {
                if !is_simple_closed(&chart) {
                    return Err(Error::Degenerate(
                        "polygon boundary intersects itself".into(),
                    ));
                }
                if shoelace(&chart) < 0.0 {
                    vertices.reverse();
                }
            }
        }
        Ok(Self { kappa: k, vertices })
    }

    #[inline]
    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    pub fn vertices(&self) -> &[SurfacePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Side lengths, side `i` running from vertex `i` to vertex `i + 1`.
    pub fn sides(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| self.vertices[i].distance_to(&self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.sides().iter().sum()
    }

    /// Interior angle at every vertex, in `(0, 2π)`.
    ///
    /// With `v₁` pointing to the previous and `v₂` to the next vertex, the
    /// angle is `∠(v₁, v₂)` when `det[v₁, v₂, p] < 0` and `2π − ∠(v₁, v₂)`
    /// otherwise.
    pub fn vertex_angles(&self) -> Result<Vec<f64>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let p = &self.vertices[i];
                let v1 = segment_direction(p, &self.vertices[(i + n - 1) % n])?;
                let v2 = segment_direction(p, &self.vertices[(i + 1) % n])?;
                let angle = v1.angle_to(&v2);
                Ok(if p.orientation(v1.vector(), v2.vector()) < 0.0 {
                    angle
                } else {
                    TAU - angle
                })
            })
            .collect()
    }

    /// Every angle below `π − eps`.
    pub fn is_convex_with(&self, eps: f64) -> bool {
        self.vertex_angles()
            .is_ok_and(|a| a.iter().all(|&t| t < PI - eps))
    }

    pub fn is_convex(&self) -> bool {
        self.is_convex_with(0.0)
    }

    /// Enclosed area: the shoelace formula in the plane, the angle sum
    /// `κ(Σθᵢ − (n − 2)π)` for convex polygons on curved surfaces.
    pub fn area(&self) -> Result<f64> {
        if self.kappa.is_flat() {
            let pts: Vec<P2> = self.vertices.iter().map(|v| [v.x(), v.y()]).collect();
            return Ok(shoelace(&pts));
        }
        let angles = self.vertex_angles()?;
        if !angles.iter().all(|&t| t < PI) {
            return Err(Error::Usage(
                "angle-sum area needs a convex polygon; triangulate non-convex input".into(),
            ));
        }
        let n = self.len() as f64;
        let excess: f64 = angles.iter().sum::<f64>() - (n - 2.0) * PI;
        Ok(self.kappa.as_f64() * excess)
    }
}

/// The digon on the sphere bounded by two half great circles from `apex` to
/// its antipode, meeting at `angle`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Digon {
    apex: SurfacePoint,
    angle: f64,
}

impl Digon {
    pub fn new(apex: SurfacePoint, angle: f64) -> Result<Self> {
        if apex.kappa() != Kappa::Spherical {
            return Err(Error::Usage("digons exist on the sphere only".into()));
        }
        if !(0.0..=PI).contains(&angle) {
            return Err(Error::domain("digon", angle, "angle must lie in [0, π]"));
        }
        Ok(Self { apex, angle })
    }

    pub fn apex(&self) -> &SurfacePoint {
        &self.apex
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn area(&self) -> f64 {
        2.0 * self.angle
    }
}

pub fn digon_area(d: &Digon) -> f64 {
    d.area()
}

/// Lay out the open chain `P₁, …, Pₙ` with the given sides `a₁ … aₙ₋₁` and
/// interior angles `α₂ … αₙ₋₁`: `P₁ = p₀`, the first side along the first
/// coordinate axis, each following side turning so the chain bounds a
/// counterclockwise polygon.
pub fn arm_chain(k: Kappa, sides: &[f64], angles: &[f64]) -> Result<Vec<SurfacePoint>> {
    if sides.len() < 2 || angles.len() + 1 != sides.len() {
        return Err(Error::Usage(format!(
            "a chain needs n − 1 ≥ 2 sides and n − 2 angles, got {} and {}",
            sides.len(),
            angles.len()
        )));
    }
    if let Some(&a) = sides
        .iter()
        .find(|&&a| !(a > 0.0 && a < k.max_distance()))
    {
        return Err(Error::domain(
            "arm_closing_length",
            a,
            "sides must be positive (and below π on the sphere)",
        ));
    }
    if let Some(&t) = angles.iter().find(|&&t| !(t > 0.0 && t < PI)) {
        return Err(Error::domain("arm_closing_length", t, "angles must lie in (0, π)"));
    }
    if k == Kappa::Spherical && !(sides.iter().sum::<f64>() < TAU) {
        return Err(Error::Infeasible("spherical chain is 2π or longer".into()));
    }
    let mut pts = vec![SurfacePoint::origin(k)];
    let mut dir = TangentVector::new(pts[0], 1.0, 0.0, 0.0)?;
    for (i, &a) in sides.iter().enumerate() {
        let start = *dir.base();
        let end = geodesic(&dir, a)?;
        pts.push(end);
        if let Some(&alpha) = angles.get(i) {
            // velocity at the end of the unit-speed segment
            let vel = dir.vector() * k.cos(a) - start.coords() * (k.as_f64() * k.sin(a));
            let back = TangentVector::tangent_part(end, -vel).normalized()?;
            dir = back.rotated(-alpha);
        }
    }
    let chart = chart(&pts).map_err(|_| {
        Error::Infeasible("spherical chain does not fit in an open hemisphere".into())
    })?;
    if !is_simple_open(&chart) {
        return Err(Error::Infeasible("chain intersects itself".into()));
    }
    Ok(pts)
}

/// Length of the side closing the chain of [`arm_chain`].
pub fn arm_closing_length(k: Kappa, sides: &[f64], angles: &[f64]) -> Result<f64> {
    let pts = arm_chain(k, sides, angles)?;
    Ok(pts[0].distance_to(pts.last().expect("nonempty")))
}

/// Central angle of a chord of length `a` on a circle of radius `r`.
fn central_angle(k: Kappa, a: f64, r: f64) -> f64 {
    let ratio = k.sin(a / 2.0) / k.sin(r);
    2.0 * ratio.min(1.0).asin()
}

/// The radius of the circle on which the chain with the given sides can be
/// inscribed with its closing side a diameter, i.e. `Σ φᵢ(r) = π` with
/// `φᵢ(r) = 2 arcsin(S_κ(aᵢ/2) / S_κ(r))`.
///
/// On the sphere a chain of total length exactly `π` closes on a great
/// circle, giving `r = π/2`.
pub fn cyclic_chain_radius(k: Kappa, sides: &[f64]) -> Result<f64> {
    if sides.is_empty() {
        return Err(Error::Usage("no sides given".into()));
    }
    if let Some(&a) = sides.iter().find(|&&a| !(a > 0.0 && a.is_finite())) {
        return Err(Error::domain("cyclic_chain_radius", a, "sides must be positive"));
    }
    let f = |r: f64| sides.iter().map(|&a| central_angle(k, a, r)).sum::<f64>() - PI;
    let lo = sides.iter().fold(0.0f64, |m, &a| m.max(a / 2.0));
    let hi = match k {
        Kappa::Spherical => {
            let total: f64 = sides.iter().sum();
            if total > PI {
                return Err(Error::Infeasible(format!(
                    "spherical chain of length {total} exceeds π"
                )));
            }
            // At the boundary the chain lies on a great circle.
            if f(PI / 2.0) >= -4.0 * f64::EPSILON * PI {
                return Ok(PI / 2.0);
            }
            PI / 2.0
        }
        _ => {
            let mut hi = lo.max(1e-300) * 2.0;
            while f(hi) >= 0.0 {
                hi *= 2.0;
                if !hi.is_finite() {
                    return Err(Error::Infeasible("no radius closes the chain".into()));
                }
            }
            hi
        }
    };
    if lo >= hi {
        return Err(Error::Infeasible("a side is too long for any circle".into()));
    }
    solve::bisect(f, lo, hi, 0.0)
}

/// Vertices of the chain on the circle of radius `r` about `p₀`, from
/// `(−r, 0)` through the lower half to `(r, 0)`; the closing side passes
/// through the center.
pub fn cyclic_chain_vertices(k: Kappa, sides: &[f64], r: f64) -> Vec<SurfacePoint> {
    let mut phi = PI;
    let mut pts = vec![SurfacePoint::from_polar(k, r, phi)];
    for &a in sides {
        phi += central_angle(k, a, r);
        pts.push(SurfacePoint::from_polar(k, r, phi));
    }
    pts
}

/// Planar images of the points under a chart in which geodesics are straight.
pub(crate) fn chart(points: &[SurfacePoint]) -> Result<Vec<P2>> {
    let k = points[0].kappa();
    Ok(match k {
        Kappa::Flat => points.iter().map(|p| [p.x(), p.y()]).collect(),
        Kappa::Hyperbolic => points.iter().map(|p| [p.x() / p.z(), p.y() / p.z()]).collect(),
        Kappa::Spherical => {
            let c = hemisphere_containing(points)?.ok_or_else(|| {
                Error::Infeasible("points do not fit in an open hemisphere".into())
            })?;
            let seed = if c.x.abs() <= c.y.abs() {
                Vec3::x()
            } else {
                Vec3::y()
            };
            let e1 = (seed - c * seed.dot(&c)).normalize();
            let e2 = c.cross(&e1);
            points
                .iter()
                .map(|p| {
                    let v = p.coords();
                    let h = v.dot(&c);
                    [v.dot(&e1) / h, v.dot(&e2) / h]
                })
                .collect()
        }
    })
}

pub(crate) fn shoelace(pts: &[P2]) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum::<f64>()
        / 2.0
}

/// `Some(ccw)` when the polygon winds once around its vertex centroid with
/// strictly monotone polar angle and every side spanning less than a half
/// turn; such a polygon is star-shaped, hence simple.
fn star_orientation(pts: &[P2]) -> Option<bool> {
    let n = pts.len() as f64;
    let m = pts
        .iter()
        .fold([0.0, 0.0], |s, p| [s[0] + p[0] / n, s[1] + p[1] / n]);
    let theta: Vec<f64> = pts
        .iter()
        .map(|p| (p[1] - m[1]).atan2(p[0] - m[0]))
        .collect();
    if pts.iter().any(|p| p[0] == m[0] && p[1] == m[1]) {
        return None;
    }
    let mut total = 0.0;
    let mut sign = 0.0f64;
    for i in 0..theta.len() {
        let mut d = theta[(i + 1) % theta.len()] - theta[i];
        if d > PI {
            d -= TAU;
        } else if d <= -PI {
            d += TAU;
        }
        if d == 0.0 || d.abs() >= PI - 1e-12 || (sign != 0.0 && d.signum() != sign) {
            return None;
        }
        sign = d.signum();
        total += d;
    }
    ((total.abs() - TAU).abs() < 1e-9).then_some(sign > 0.0)
}

fn orient(a: P2, b: P2, c: P2) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: P2, b: P2, p: P2) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// Closed segments `[a, b]` and `[c, d]` share a point.
fn segments_meet(a: P2, b: P2, c: P2, d: P2) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

/// Adjacent segments `[a, b]`, `[b, c]` fold back onto each other.
fn folds_back(a: P2, b: P2, c: P2) -> bool {
    orient(a, b, c) == 0.0 && (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]) > 0.0
}

fn is_simple_closed(pts: &[P2]) -> bool {
    let n = pts.len();
    for i in 0..n {
        if folds_back(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]) {
            return false;
        }
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_meet(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

fn is_simple_open(pts: &[P2]) -> bool {
    let m = pts.len() - 1;
    for i in 0..m {
        if i + 2 <= m && folds_back(pts[i], pts[i + 1], pts[i + 2]) {
            return false;
        }
        for j in i + 2..m {
            if segments_meet(pts[i], pts[i + 1], pts[j], pts[j + 1]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn plane(pts: &[(f64, f64)]) -> GeodesicPolygon {
        GeodesicPolygon::new(pts.iter().map(|&(x, y)| SurfacePoint::plane(x, y)).collect()).unwrap()
    }

    fn square() -> GeodesicPolygon {
        plane(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    fn l_shape() -> GeodesicPolygon {
        plane(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])
    }

    fn octant() -> GeodesicPolygon {
        let k = Kappa::Spherical;
        GeodesicPolygon::new(vec![
            SurfacePoint::new(k, 1.0, 0.0, 0.0).unwrap(),
            SurfacePoint::new(k, 0.0, 1.0, 0.0).unwrap(),
            SurfacePoint::new(k, 0.0, 0.0, 1.0).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn square_values() {
        let s = square();
        assert_eq!(s.perimeter(), 4.0);
        for t in s.vertex_angles().unwrap() {
            assert!((t - FRAC_PI_2).abs() < 1e-15);
        }
        assert!(s.is_convex());
        assert_eq!(s.area().unwrap(), 1.0);
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let s = plane(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]);
        assert_eq!(s.area().unwrap(), 1.0);
        assert!(s.is_convex());
    }

    #[test]
    fn reflex_corner() {
        let l = l_shape();
        let angles = l.vertex_angles().unwrap();
        assert!((angles[3] - 1.5 * PI).abs() < 1e-14);
        assert!(!l.is_convex());
        assert_eq!(l.area().unwrap(), 3.0);
    }

    #[test]
    fn octant_values() {
        let o = octant();
        assert!((o.perimeter() - 1.5 * PI).abs() < 1e-14);
        for t in o.vertex_angles().unwrap() {
            assert!((t - FRAC_PI_2).abs() < 1e-14);
        }
        assert!(o.is_convex());
        assert!((o.area().unwrap() - FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn curved_non_convex_area_is_rejected() {
        let k = Kappa::Hyperbolic;
        let pts = [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
            .iter()
            .map(|&(x, y)| SurfacePoint::project(k, Vec3::new(x * 0.2, y * 0.2, 1.0)).unwrap())
            .collect();
        let p = GeodesicPolygon::new(pts).unwrap();
        assert!(p.area().unwrap_err().is_usage());
    }

    #[test]
    fn invalid_polygons() {
        let p = SurfacePoint::plane;
        assert!(GeodesicPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0)]).unwrap_err().is_usage());
        let bow = vec![p(0.0, 0.0), p(1.0, 1.0), p(1.0, 0.0), p(0.0, 1.0)];
        assert!(matches!(GeodesicPolygon::new(bow), Err(Error::Degenerate(_))));
        let dup = vec![p(0.0, 0.0), p(0.0, 0.0), p(1.0, 0.0)];
        assert!(GeodesicPolygon::new(dup).is_err());
        let back = vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0)];
        assert!(GeodesicPolygon::new(back).is_err());
        let k = Kappa::Spherical;
        let s = |x, y, z| SurfacePoint::new(k, x, y, z).unwrap();
        let wide = vec![s(1.0, 0.0, 0.0), s(0.0, 1.0, 0.0), s(-1.0, 0.0, 0.0), s(0.0, -1.0, 0.0)];
        assert!(GeodesicPolygon::new(wide).is_err());
    }

    #[test]
    fn equilateral_hyperbolic_area() {
        let t = crate::triangle::Triangle::from_sss(Kappa::Hyperbolic, 1.0, 1.0, 1.0).unwrap();
        let p = GeodesicPolygon::new(vec![t.p, t.q, t.r]).unwrap();
        let want = PI - 3.0 * t.alpha;
        assert!((p.area().unwrap() - want).abs() < 1e-14);
        assert!((p.area().unwrap() - t.area()).abs() < 1e-14);
    }

    #[test]
    fn diagonal_split_is_additive() {
        for k in Kappa::ALL {
            let pts: Vec<_> = (0..7)
                .map(|i| SurfacePoint::from_polar(k, 0.6 + 0.05 * f64::from(i % 3), 0.9 * f64::from(i)))
                .collect();
            let whole = GeodesicPolygon::new(pts.clone()).unwrap();
            let left = GeodesicPolygon::new(pts[..=3].to_vec()).unwrap();
            let right = GeodesicPolygon::new([&pts[3..], &pts[..1]].concat()).unwrap();
            let sum = left.area().unwrap() + right.area().unwrap();
            assert!((whole.area().unwrap() - sum).abs() < 1e-12, "{k}");
        }
    }

    #[test]
    fn digon_values() {
        let apex = SurfacePoint::origin(Kappa::Spherical);
        assert_eq!(digon_area(&Digon::new(apex, PI).unwrap()), TAU);
        assert_eq!(digon_area(&Digon::new(apex, 0.0).unwrap()), 0.0);
        assert_eq!(digon_area(&Digon::new(apex, FRAC_PI_2).unwrap()), PI);
        assert!(Digon::new(apex, 4.0).is_err());
        assert!(Digon::new(SurfacePoint::origin(Kappa::Flat), 1.0).unwrap_err().is_usage());
    }

    #[test]
    fn arm_examples() {
        let d = arm_closing_length(Kappa::Flat, &[1.0, 1.0], &[FRAC_PI_2]).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        let d = arm_closing_length(Kappa::Flat, &[1.0, 1.0], &[2.0 * PI / 3.0]).unwrap();
        assert!((d - 3f64.sqrt()).abs() < 1e-15);
        let d = arm_closing_length(Kappa::Spherical, &[FRAC_PI_2, FRAC_PI_2], &[FRAC_PI_2]).unwrap();
        assert!((d - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn arm_chain_turns_left() {
        for k in Kappa::ALL {
            let pts = arm_chain(k, &[0.5, 0.7, 0.6], &[2.0, 1.9]).unwrap();
            let poly = GeodesicPolygon::new(pts.clone()).unwrap();
            assert_eq!(poly.vertices(), &pts[..], "{k}");
            let angles = poly.vertex_angles().unwrap();
            assert!((angles[1] - 2.0).abs() < 1e-12 && (angles[2] - 1.9).abs() < 1e-12);
        }
    }

    #[test]
    fn arm_rejects_bad_chains() {
        let k = Kappa::Flat;
        assert!(arm_closing_length(k, &[1.0], &[]).unwrap_err().is_usage());
        assert!(arm_closing_length(k, &[1.0, 1.0], &[PI]).is_err());
        // Tight spiral crosses its first side.
        let r = arm_closing_length(k, &[3.0, 1.0, 1.0, 3.0], &[0.3, 1.4, 1.4]);
        assert!(matches!(r, Err(Error::Infeasible(_))));
    }

    #[test]
    fn cyclic_examples() {
        let r = cyclic_chain_radius(Kappa::Flat, &[2f64.sqrt(), 2f64.sqrt()]).unwrap();
        assert!((r - 1.0).abs() < 1e-15);
        let r = cyclic_chain_radius(Kappa::Spherical, &[FRAC_PI_2, FRAC_PI_2]).unwrap();
        assert_eq!(r, FRAC_PI_2);
        assert!(cyclic_chain_radius(Kappa::Spherical, &[2.0, 2.0]).is_err());
        assert!(cyclic_chain_radius(Kappa::Flat, &[]).unwrap_err().is_usage());
    }

    #[test]
    fn cyclic_layout_reproduces_sides() {
        let sides = [0.3, 0.8, 0.5, 0.4];
        for k in Kappa::ALL {
            let r = cyclic_chain_radius(k, &sides).unwrap();
            let total: f64 = sides.iter().map(|&a| central_angle(k, a, r)).sum();
            assert!((total - PI).abs() <= 1e-12);
            let pts = cyclic_chain_vertices(k, &sides, r);
            for (i, &a) in sides.iter().enumerate() {
                assert!((pts[i].distance_to(&pts[i + 1]) - a).abs() < 1e-10, "{k}");
            }
            let close = pts[0].distance_to(pts.last().unwrap());
            assert!((close - 2.0 * r).abs() < 1e-10);
        }
    }
}
