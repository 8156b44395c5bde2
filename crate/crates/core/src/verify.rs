//! Randomized verification suites.
//!
//! Each suite draws its samples from per-index RNG streams (see
//! [`crate::batch`]), so a report depends only on the options, never on the
//! execution mode.

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::batch::Execution;
use crate::error::Result;
use crate::isoperimetric::{deficit, polygon_min_perimeter, random_convex_polygon};
use crate::kappa::{Identity, Kappa};
use crate::polygon::{arm_chain, GeodesicPolygon};
use crate::triangle::{half_angle_residual, HalfAngleFormula, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub samples: usize,
    pub seed: u64,
    /// Replaces the suite's default tolerance.
    pub tolerance: Option<f64>,
    pub execution: Execution,
}

impl SuiteOptions {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self {
            samples,
            seed,
            tolerance: None,
            execution: Execution::default(),
        }
    }
}

/// Whether a statistic stays on the right side of its threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `value ≤ threshold`
    AtMost,
    /// `value ≥ threshold`
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub metric: &'static str,
    pub samples: usize,
    pub value: f64,
    pub bound: Bound,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    fn new(label: String, metric: &'static str, values: &[f64], bound: Bound, threshold: f64) -> Self {
        let value = match bound {
            Bound::AtMost => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Bound::AtLeast => values.iter().copied().fold(f64::INFINITY, f64::min),
        };
        let passed = !values.is_empty()
            && match bound {
                Bound::AtMost => value <= threshold,
                Bound::AtLeast => value >= threshold,
            };
        Self {
            label,
            metric,
            samples: values.len(),
            value,
            bound,
            threshold,
            passed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &'static str, opts: &SuiteOptions, checks: Vec<Check>) -> Self {
        Self {
            suite,
            seed: opts.seed,
            samples: opts.samples,
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

/// Seed of an independent sub-run, e.g. one per (κ, formula) pair.
fn sub_seed(seed: u64, a: u64, b: u64) -> u64 {
    seed ^ (a + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (b + 1).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
}

fn kappa_index(k: Kappa) -> u64 {
    (k.value() + 1) as u64
}

/// A random triangle with two sides in `[0.05, 1.5]` and an included angle
/// in `[0.05, π − 0.05]`.
pub fn random_triangle(k: Kappa, rng: &mut impl Rng) -> Triangle {
    loop {
        let a = rng.random_range(0.05..1.5);
        let b = rng.random_range(0.05..1.5);
        let g = rng.random_range(0.05..PI - 0.05);
        if let Ok(t) = Triangle::from_sas(k, a, b, g) {
            return t;
        }
    }
}

/// Relative residual of every sum/difference identity at random `(a, b)`
/// in `(−3, 3)²` on both curved surfaces. Points at a pole are redrawn.
pub fn identities(opts: &SuiteOptions) -> SuiteReport {
    let tol = opts.tolerance.unwrap_or(1e-12);
    let mut checks = Vec::new();
    for k in Kappa::CURVED {
        for (j, id) in Identity::ALL.into_iter().enumerate() {
            let seed = sub_seed(opts.seed, kappa_index(k), j as u64);
            let res = opts.execution.map_seeded(opts.samples, seed, |_, rng| loop {
                let a = rng.random_range(-3.0..3.0);
                let b = rng.random_range(-3.0..3.0);
                if let Ok(e) = id.evaluate(k, a, b) {
                    if e.relative_residual().is_finite() {
                        return e.relative_residual();
                    }
                }
            });
            checks.push(Check::new(
                format!("{id} κ={k}"),
                "max relative residual",
                &res,
                Bound::AtMost,
                tol,
            ));
        }
    }
    SuiteReport::new("identities", opts, checks)
}

/// Half-angle formulas and the law of sines on random triangles; the
/// curvature-only formulas are skipped in the plane.
pub fn half_angle(opts: &SuiteOptions) -> SuiteReport {
    let tol = opts.tolerance.unwrap_or(1e-10);
    let mut checks = Vec::new();
    for k in Kappa::ALL {
        for (j, id) in HalfAngleFormula::ALL.into_iter().enumerate() {
            if id.requires_curvature() && k.is_flat() {
                continue;
            }
            let seed = sub_seed(opts.seed, kappa_index(k), j as u64);
            let res = opts.execution.map_seeded(opts.samples, seed, |_, rng| {
                let t = random_triangle(k, rng);
                half_angle_residual(id, &t).map_or(f64::INFINITY, f64::abs)
            });
            checks.push(Check::new(
                format!("{id} κ={k}"),
                "max |residual|",
                &res,
                Bound::AtMost,
                tol,
            ));
        }
    }
    SuiteReport::new("halfangle", opts, checks)
}

/// One trial of the arm lemma: a convex chain, and the same chain with one
/// interior angle opened by at least `1e−3` while staying convex.
#[derive(Clone, Debug, PartialEq)]
pub struct ArmTrial {
    pub sides: Vec<f64>,
    pub angles: Vec<f64>,
    pub opened: Vec<f64>,
    pub before: f64,
    pub after: f64,
}

fn closing(chain: &[crate::surface::SurfacePoint]) -> f64 {
    chain[0].distance_to(chain.last().expect("nonempty"))
}

fn convex_chain(chain: Vec<crate::surface::SurfacePoint>) -> bool {
    GeodesicPolygon::new(chain).is_ok_and(|p| p.is_convex())
}

/// Draw an [`ArmTrial`] from the sides and angles of a random convex polygon.
pub fn random_arm_trial(k: Kappa, rng: &mut ChaCha8Rng) -> Result<ArmTrial> {
    loop {
        let n = rng.random_range(4..=8);
        let poly = random_convex_polygon(k, n, rng.random_range(0.2..2.0), rng)?;
        let v = poly.vertices();
        let sides: Vec<f64> = (0..n - 1).map(|i| v[i].distance_to(&v[i + 1])).collect();
        let angles = poly.vertex_angles()?[1..n - 1].to_vec();
        let Ok(chain) = arm_chain(k, &sides, &angles) else {
            continue;
        };
        let j = rng.random_range(0..angles.len());
        let room = PI - angles[j];
        let mut delta = rng.random_range(0.0..1.0) * room;
        while delta >= 1e-3 {
            let mut opened = angles.clone();
            opened[j] += delta;
            if let Ok(next) = arm_chain(k, &sides, &opened) {
                if convex_chain(next.clone()) {
                    return Ok(ArmTrial {
                        before: closing(&chain),
                        after: closing(&next),
                        sides,
                        angles,
                        opened,
                    });
                }
            }
            delta /= 2.0;
        }
    }
}

/// Opening an angle of a convex chain lengthens its closing side.
pub fn arm_lemma(opts: &SuiteOptions) -> SuiteReport {
    let tol = opts.tolerance.unwrap_or(1e-12);
    let mut checks = Vec::new();
    for k in Kappa::ALL {
        let seed = sub_seed(opts.seed, kappa_index(k), 0);
        let gains = opts.execution.map_seeded(opts.samples, seed, |_, rng| {
            random_arm_trial(k, rng).map_or(f64::NEG_INFINITY, |t| t.after - t.before)
        });
        checks.push(Check::new(
            format!("arm lemma κ={k}"),
            "min closing-length increase",
            &gains,
            Bound::AtLeast,
            tol,
        ));
    }
    SuiteReport::new("armlemma", opts, checks)
}

/// Random convex n-gons of area 1 for n = 3 … 8 are no shorter than the
/// regular n-gon of that area, and have nonnegative deficit.
pub fn dominance(opts: &SuiteOptions) -> SuiteReport {
    let tol = opts.tolerance.unwrap_or(1e-9);
    let area = 1.0;
    let mut checks = Vec::new();
    for k in Kappa::ALL {
        let mut deficits = Vec::new();
        for n in 3..=8usize {
            let best = polygon_min_perimeter(k, n, area).expect("area 1 is admissible");
            let seed = sub_seed(opts.seed, kappa_index(k), n as u64);
            let rows = opts.execution.map_seeded(opts.samples, seed, |_, rng| {
                let p = random_convex_polygon(k, n, area, rng).expect("area 1 is admissible");
                let d = deficit(&p).map_or(f64::NEG_INFINITY, |r| r.deficit);
                (p.perimeter() - best, d)
            });
            let gaps: Vec<f64> = rows.iter().map(|r| r.0).collect();
            deficits.extend(rows.iter().map(|r| r.1));
            checks.push(Check::new(
                format!("dominance κ={k} n={n}"),
                "min perimeter excess over the regular n-gon",
                &gaps,
                Bound::AtLeast,
                -tol,
            ));
        }
        checks.push(Check::new(
            format!("deficit κ={k}"),
            "min deficit",
            &deficits,
            Bound::AtLeast,
            -tol,
        ));
    }
    SuiteReport::new("dominance", opts, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_ignore_the_execution_mode() {
        for suite in [identities, half_angle, arm_lemma, dominance] {
            let mut o = SuiteOptions::new(20, 5);
            o.execution = Execution::Sequential;
            let a = suite(&o);
            o.execution = Execution::Parallel;
            let b = suite(&o);
            assert!(a.passed, "{a:?}");
            assert_eq!(a, b);
        }
    }

    #[test]
    fn impossible_tolerance_fails() {
        let mut o = SuiteOptions::new(50, 1);
        o.tolerance = Some(0.0);
        assert!(!half_angle(&o).passed);
    }

    #[test]
    fn empty_runs_fail() {
        assert!(!identities(&SuiteOptions::new(0, 1)).passed);
    }
}
