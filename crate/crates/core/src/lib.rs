//! Geometry on the three simply connected constant-curvature surfaces:
//! the hyperbolic plane (κ = −1), the Euclidean plane (κ = 0) and the unit
//! sphere (κ = +1).
//!
//! Every formula is written once, parameterized by [`Kappa`], using the
//! generalized trigonometric functions of [`kappa`]. Points live in a single
//! embedded representation (see [`surface`]): the unit sphere, the upper sheet
//! of the hyperboloid `x² + y² − z² = −1`, or the plane `z = 1`.
//!
//! Modules, bottom-up:
//!
//! - [`kappa`]: `S_κ`, `C_κ`, `T_κ`, `CT_κ`, their inverses and the
//!   sum/difference identity suite.
//! - [`surface`]: points, distance, geodesics, lines, reflections, circles,
//!   hemisphere containment and isometries rebuilt from point pairs.
//! - [`triangle`]: laws of cosines and sines, three area formulas, congruence
//!   tests and the extremal/isosceles constructions.
//! - [`polygon`]: geodesic polygons, vertex angles, convexity, angle-sum area,
//!   digons, the arm lemma and cyclic chains.
//! - [`regular`]: regular n-gons and their inverse solvers.
//! - [`isoperimetric`]: optimal circles, deficits, random convex corpora and a
//!   perimeter-minimizing local search.
//! - [`verify`]: randomized verification suites shared by the CLI, the tests
//!   and the benches.
//! - [`batch`]: data-parallel map with a sequential fallback.

// `!(x > t)` is used on purpose: it rejects NaN along with small values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod batch;
pub mod error;
pub mod isoperimetric;
pub mod kappa;
pub mod polygon;
pub mod regular;
pub mod surface;
pub mod triangle;
pub mod verify;

mod solve;

pub use batch::Execution;
pub use error::{Error, Result};
pub use isoperimetric::{
    deficit, minimize_polygon, minimize_polygon_restarts, multi_component_optimum,
    optimal_circle, polygon_min_perimeter, IsoperimetricReport, MinimizerOptions,
    MinimizerResult, MultiComponentOptimum,
};
pub use kappa::{Identity, Kappa};
pub use polygon::{Digon, GeodesicPolygon};
pub use regular::RegularNGon;
pub use surface::{Circle, Isometry, Line, SurfacePoint, TangentVector};
pub use triangle::{Congruence, HalfAngleFormula, Triangle};
