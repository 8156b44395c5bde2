//! Optimal circles, isoperimetric deficits, random convex polygons and a
//! perimeter-minimizing local search over polygons of fixed area.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::batch::Execution;
use crate::error::{Error, Result};
use crate::kappa::Kappa;
use crate::polygon::GeodesicPolygon;
use crate::regular;
use crate::solve;
use crate::surface::{geodesic, segment_direction, tangent_frame, SurfacePoint, TangentVector, Vec3};
use crate::triangle::area_sas;

/// Slack allowed below zero for the deficit of a valid polygon.
pub const EPS_DEFICIT: f64 = 1e-9;

/// Lengths and areas of a closed curve next to the optimal circle of the
/// same area.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsoperimetricReport {
    pub kappa: Kappa,
    pub area: f64,
    pub perimeter: f64,
    /// `ℓ² − 4πA + κA²`
    pub deficit: f64,
    pub optimal_radius: f64,
    pub optimal_perimeter: f64,
}

fn check_area(k: Kappa, a: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) || (k == Kappa::Spherical && a > TAU) {
        return Err(Error::domain(
            "optimal_circle",
            a,
            "area must be positive (and at most 2π on the sphere)",
        ));
    }
    Ok(())
}

/// `r₀ = AS_κ(√(A(4π − κA)) / (2π))`.
pub fn optimal_radius(k: Kappa, a: f64) -> Result<f64> {
    check_area(k, a)?;
    k.asin(optimal_perimeter_unchecked(k, a) / TAU)
}

fn optimal_perimeter_unchecked(k: Kappa, a: f64) -> f64 {
    (a * (4.0 * PI - k.as_f64() * a)).max(0.0).sqrt()
}

/// `L = √(4πA − κA²)`.
pub fn optimal_perimeter(k: Kappa, a: f64) -> Result<f64> {
    check_area(k, a)?;
    Ok(optimal_perimeter_unchecked(k, a))
}

/// `ℓ² − 4πA + κA²`.
pub fn deficit_value(k: Kappa, perimeter: f64, a: f64) -> f64 {
    perimeter * perimeter - 4.0 * PI * a + k.as_f64() * a * a
}

/// The circle of area `a` with least perimeter, reported against itself.
pub fn optimal_circle(k: Kappa, a: f64) -> Result<IsoperimetricReport> {
    let r = optimal_radius(k, a)?;
    let l = optimal_perimeter_unchecked(k, a);
    Ok(IsoperimetricReport {
        kappa: k,
        area: a,
        perimeter: l,
        deficit: 0.0,
        optimal_radius: r,
        optimal_perimeter: l,
    })
}

/// Perimeter, area and deficit of a convex polygon.
pub fn deficit(p: &GeodesicPolygon) -> Result<IsoperimetricReport> {
    let k = p.kappa();
    let a = p.area()?;
    let l = p.perimeter();
    Ok(IsoperimetricReport {
        kappa: k,
        area: a,
        perimeter: l,
        deficit: deficit_value(k, l, a),
        optimal_radius: optimal_radius(k, a)?,
        optimal_perimeter: optimal_perimeter_unchecked(k, a),
    })
}

fn check_polygon_area(k: Kappa, n: usize, a: f64) -> Result<()> {
    if n < 3 {
        return Err(Error::domain("polygon_min_perimeter", n as f64, "n must be at least 3"));
    }
    let ok = a > 0.0
        && a.is_finite()
        && match k {
            Kappa::Spherical => a < TAU,
            Kappa::Flat => true,
            Kappa::Hyperbolic => a < (n as f64 - 2.0) * PI - 1e-6,
        };
    if !ok {
        return Err(Error::domain(
            "polygon_min_perimeter",
            a,
            "area must lie in (0, 2π) on the sphere and (0, (n − 2)π) in the hyperbolic plane",
        ));
    }
    Ok(())
}

/// Least perimeter of an n-gon of area `a`: that of the regular n-gon.
pub fn polygon_min_perimeter(k: Kappa, n: usize, a: f64) -> Result<f64> {
    check_polygon_area(k, n, a)?;
    let r = regular::radius_from_area(k, n, a)?;
    Ok(n as f64 * regular::side_length(k, n, r))
}

/// Deficit of the regular n-gon of area `a`, from the closed forms.
pub fn regular_deficit(k: Kappa, n: usize, a: f64) -> Result<f64> {
    Ok(deficit_value(k, polygon_min_perimeter(k, n, a)?, a))
}

/// Result of [`multi_component_optimum`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiComponentOptimum {
    pub single_radius: f64,
    pub total_perimeter_separate: f64,
    pub total_perimeter_merged: f64,
}

/// Compare optimal circles for each area separately with one circle holding
/// the total area.
pub fn multi_component_optimum(k: Kappa, areas: &[f64]) -> Result<MultiComponentOptimum> {
    if areas.is_empty() {
        return Err(Error::Usage("no component areas given".into()));
    }
    let total: f64 = areas.iter().sum();
    let separate = areas
        .iter()
        .map(|&a| optimal_perimeter(k, a))
        .sum::<Result<f64>>()?;
    Ok(MultiComponentOptimum {
        single_radius: optimal_radius(k, total)?,
        total_perimeter_separate: separate,
        total_perimeter_merged: optimal_perimeter(k, total)?,
    })
}

/// Vertices given in geodesic polar coordinates `(ρᵢ, φᵢ)` about a center,
/// with `φ` strictly increasing by less than `π` per step around one turn.
struct Fan {
    center: SurfacePoint,
    e1: TangentVector,
    radii: Vec<f64>,
    phis: Vec<f64>,
}

impl Fan {
    fn gap(&self, i: usize) -> f64 {
        let n = self.phis.len();
        let d = self.phis[(i + 1) % n] - self.phis[i];
        if i + 1 == n {
            d + TAU
        } else {
            d
        }
    }

    /// Area of the star polygon, as the sum of its center triangles.
    fn area(&self, scale: f64) -> f64 {
        let k = self.center.kappa();
        let n = self.radii.len();
        (0..n)
            .map(|i| {
                area_sas(k, scale * self.radii[i], scale * self.radii[(i + 1) % n], self.gap(i))
                    .unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// Largest admissible scale: keeps the fan inside the open hemisphere
    /// about its center on the sphere.
    fn max_scale(&self) -> f64 {
        match self.center.kappa() {
            Kappa::Spherical => {
                let m = self.radii.iter().fold(0.0f64, |m, &r| m.max(r));
                (PI / 2.0 - 1e-9) / m
            }
            _ => f64::INFINITY,
        }
    }

    /// The scale at which the fan has area `a`.
    fn scale_for_area(&self, a: f64) -> Option<f64> {
        let k = self.center.kappa();
        if k.is_flat() {
            let s = (a / self.area(1.0)).sqrt();
            return s.is_finite().then_some(s);
        }
        let max = self.max_scale();
        let (mut lo, mut hi) = (0.5f64, 2.0f64.min(max));
        while self.area(lo) > a {
            lo /= 2.0;
            if lo < 1e-12 {
                return None;
            }
        }
        while self.area(hi) < a {
            if hi >= max {
                return None;
            }
            lo = hi;
            hi = (hi * 2.0).min(max);
            if hi > 1e6 {
                return None;
            }
        }
        solve::illinois(|s| self.area(s) - a, lo, hi, a * 1e-15).ok()
    }

    fn vertices(&self, scale: f64) -> Result<Vec<SurfacePoint>> {
        self.radii
            .iter()
            .zip(&self.phis)
            .map(|(&r, &phi)| geodesic(&self.e1.rotated(phi), scale * r))
            .collect()
    }

    /// Polar coordinates of the vertices about `center`; `None` unless the
    /// polygon is star-shaped about it with counterclockwise order.
    fn about(center: SurfacePoint, vertices: &[SurfacePoint]) -> Option<Self> {
        let (e1, e2) = tangent_frame(&center);
        let k = center.kappa();
        let mut radii = Vec::with_capacity(vertices.len());
        let mut phis = Vec::with_capacity(vertices.len());
        let mut prev: Option<f64> = None;
        let mut turned = 0.0;
        for v in vertices {
            let u = segment_direction(&center, v).ok()?;
            let x = crate::surface::inner(k, u.vector(), e1.vector());
            let y = crate::surface::inner(k, u.vector(), e2.vector());
            let mut phi = y.atan2(x);
            if let Some(p) = prev {
                while phi <= p {
                    phi += TAU;
                }
                if phi - p >= PI {
                    return None;
                }
                turned += phi - p;
            }
            prev = Some(phi);
            radii.push(center.distance_to(v));
            phis.push(phi);
        }
        let fan = Self {
            center,
            e1,
            radii,
            phis,
        };
        let last = fan.gap(vertices.len() - 1);
        (last > 0.0 && last < PI && (turned + last - TAU).abs() < 1e-9).then_some(fan)
    }
}

/// A random convex n-gon of area `a` about `p₀`.
///
/// Polar angles are sorted uniform samples, radii a common random radius
/// perturbed by up to 20%; the shape is then scaled radially to area `a`.
/// Samples with a gap of `π` or more, or that end up non-convex, are redrawn,
/// each redraw with a 5% smaller perturbation. Unperturbed samples are
/// inscribed in a circle and always convex, so large `n` and areas close to
/// the hemisphere still terminate.
pub fn random_convex_polygon(
    k: Kappa,
    n: usize,
    a: f64,
    rng: &mut impl Rng,
) -> Result<GeodesicPolygon> {
    check_polygon_area(k, n, a)?;
    let center = SurfacePoint::origin(k);
    let (e1, _) = tangent_frame(&center);
    let mut spread = 0.2;
    for _ in 0..10_000 {
        let mut phis: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        phis.sort_by(f64::total_cmp);
        let base = rng.random_range(0.3..1.0);
        let radii: Vec<f64> = (0..n)
            .map(|_| base * (1.0 + spread * rng.random_range(-1.0..1.0)))
            .collect();
        spread *= 0.95;
        let fan = Fan {
            center,
            e1,
            radii,
            phis,
        };
        if (0..n).any(|i| !(fan.gap(i) > 1e-3 && fan.gap(i) < PI - 1e-3)) {
            continue;
        }
        let Some(scale) = fan.scale_for_area(a) else {
            continue;
        };
        let Ok(poly) = GeodesicPolygon::new(fan.vertices(scale)?) else {
            continue;
        };
        if poly.is_convex() {
            return Ok(poly);
        }
    }
    Err(Error::Infeasible(format!(
        "could not sample a convex {n}-gon of area {a} for curvature {k}"
    )))
}

/// Search parameters for [`minimize_polygon`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizerOptions {
    /// Cap on full sweeps over the vertices.
    pub max_iterations: usize,
    /// First trial step, relative to the mean circumradius.
    pub initial_step: f64,
    /// The search stops once the step falls below this, relative to the
    /// mean circumradius.
    pub min_step: f64,
    /// Moves must shorten the perimeter by more than this, relative.
    pub tol_step: f64,
    /// Regularity needed to report convergence.
    pub tol_reg: f64,
}

impl Default for MinimizerOptions {
    fn default() -> Self {
        Self {
            max_iterations: 100_000,
            initial_step: 0.1,
            min_step: 1e-9,
            tol_step: 1e-12,
            tol_reg: 1e-5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizerResult {
    pub polygon: GeodesicPolygon,
    pub perimeter: f64,
    pub target_area: f64,
    /// Sweeps performed.
    pub iterations: usize,
    pub converged: bool,
    /// Largest deviation of the center distances and of the vertex angles
    /// from their means.
    pub regularity_residual: f64,
    #[serde(skip)]
    pub seed: u64,
}

/// Centroid direction of the vertices, projected back to the surface.
fn center_of(vertices: &[SurfacePoint]) -> Result<SurfacePoint> {
    let k = vertices[0].kappa();
    let sum: Vec3 = vertices.iter().map(|v| *v.coords()).sum();
    SurfacePoint::project(k, sum / vertices.len() as f64)
}

fn perimeter_of(vertices: &[SurfacePoint]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| vertices[i].distance_to(&vertices[(i + 1) % n]))
        .sum()
}

/// Largest spread of the center distances and of the vertex angles.
pub fn regularity_residual(p: &GeodesicPolygon) -> Result<f64> {
    let c = center_of(p.vertices())?;
    let dists: Vec<f64> = p.vertices().iter().map(|v| c.distance_to(v)).collect();
    let angles = p.vertex_angles()?;
    let spread = |xs: &[f64]| {
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        xs.iter().fold(0.0f64, |m, x| m.max((x - mean).abs()))
    };
    Ok(spread(&dists).max(spread(&angles)))
}

/// Rescale about the centroid to area `a`; `None` if the result leaves the
/// admissible region.
fn restore_area(k: Kappa, vertices: &[SurfacePoint], a: f64) -> Option<Vec<SurfacePoint>> {
    let fan = Fan::about(center_of(vertices).ok()?, vertices)?;
    let scale = fan.scale_for_area(a)?;
    let out = fan.vertices(scale).ok()?;
    if k == Kappa::Spherical && out.iter().any(|v| v.z() <= 0.0) {
        return None;
    }
    Some(out)
}

/// Compass search for the n-gon of area `a` with least perimeter.
///
/// Starting from a random convex polygon drawn from `seed`, each sweep tries
/// to move every vertex a geodesic step `h` in the four directions of its
/// tangent frame. After each trial move the polygon is rescaled about its
/// centroid back to area `a`, and the move is kept if the perimeter drops by
/// more than `tol_step` (relative). A sweep without progress halves `h`. The
/// search ends when `h` falls below `min_step` or after `max_iterations`
/// sweeps; on the sphere vertices must stay in the upper hemisphere.
pub fn minimize_polygon(
    k: Kappa,
    n: usize,
    a: f64,
    seed: u64,
    opts: &MinimizerOptions,
) -> Result<MinimizerResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = random_convex_polygon(k, n, a, &mut rng)?;
    let mut verts = start.vertices().to_vec();
    let mut best = perimeter_of(&verts);
    let c = center_of(&verts)?;
    let scale = verts.iter().map(|v| c.distance_to(v)).sum::<f64>() / n as f64;
    let mut h = opts.initial_step * scale;
    let h_min = opts.min_step * scale;
    let mut iterations = 0;
    while h >= h_min && iterations < opts.max_iterations {
        iterations += 1;
        let mut improved = false;
        for i in 0..n {
            let (e1, e2) = tangent_frame(&verts[i]);
            for dir in [e1, e2, e1.rotated(PI), e2.rotated(PI)] {
                let mut trial = verts.clone();
                trial[i] = geodesic(&dir, h)?;
                let Some(trial) = restore_area(k, &trial, a) else {
                    continue;
                };
                let p = perimeter_of(&trial);
                if p < best - opts.tol_step * best {
                    verts = trial;
                    best = p;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            h /= 2.0;
        }
    }
    let polygon = GeodesicPolygon::new(verts)?;
    let residual = regularity_residual(&polygon)?;
    Ok(MinimizerResult {
        perimeter: polygon.perimeter(),
        polygon,
        target_area: a,
        iterations,
        converged: h < h_min && residual <= opts.tol_reg,
        regularity_residual: residual,
        seed,
    })
}

/// [`minimize_polygon`] from each seed; the result with least perimeter
/// wins, ties going to the earlier seed.
pub fn minimize_polygon_restarts(
    k: Kappa,
    n: usize,
    a: f64,
    seeds: &[u64],
    opts: &MinimizerOptions,
    exec: Execution,
) -> Result<MinimizerResult> {
    if seeds.is_empty() {
        return Err(Error::Usage("at least one seed is required".into()));
    }
    check_polygon_area(k, n, a)?;
    let runs = exec.map(seeds.len(), |i| minimize_polygon(k, n, a, seeds[i], opts));
    let mut best: Option<MinimizerResult> = None;
    let mut first_err = None;
    for r in runs {
        match r {
            Ok(r) => {
                if best.as_ref().is_none_or(|b| r.perimeter < b.perimeter) {
                    best = Some(r);
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    best.ok_or_else(|| first_err.expect("some run failed"))
}
