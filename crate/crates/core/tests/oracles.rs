//! Reference values computed independently in 50-digit arithmetic from the
//! textbook laws of cosines, angle excess and numeric root finding, then
//! frozen here.

use std::f64::consts::PI;

use spaceform::isoperimetric::optimal_circle;
use spaceform::regular;
use spaceform::surface::{isometry_from_correspondence, SurfacePoint};
use spaceform::triangle::{max_area_triangle_two_sides, side_from_sas, Triangle};
use spaceform::{GeodesicPolygon, Kappa};

const COS_LAW_H: f64 = 1.513374006596504;
const ALPHA_H: f64 = 0.5943266119531736;
const BETA_H: f64 = 0.8598222380203276;
const GAMMA_H: f64 = 1.402744007080058;
const AREA_H: f64 = 0.284699796536234;
const PENT_SIDE_H: f64 = 1.0016319591009997;
const PENT_ANGLE_H: f64 = 1.5994970848397119;
const PENT_AREA_H: f64 = 1.42729253657082;
const COS_LAW_E: f64 = std::f64::consts::SQRT_2;
const ALPHA_E: f64 = 0.687669651911122;
const BETA_E: f64 = 0.9546161247692952;
const GAMMA_E: f64 = 1.499306876909376;
const AREA_E: f64 = 0.3141954009848012;
const PENT_SIDE_E: f64 = 0.940456403667957;
const PENT_ANGLE_E: f64 = 1.8849555921538759;
const PENT_AREA_E: f64 = 1.5216904260722457;
const COS_LAW_S: f64 = 1.2745557823062943;
const ALPHA_S: f64 = 0.8069521688712745;
const BETA_S: f64 = 1.0719328378283433;
const GAMMA_S: f64 = 1.614083677148179;
const AREA_S: f64 = 0.35137603025800374;
const PENT_SIDE_S: f64 = 0.8705313757684287;
const PENT_ANGLE_S: f64 = 2.2044226680967345;
const PENT_AREA_S: f64 = 1.5973353797142935;
const CIRCLE_R_H: f64 = 0.5569627016490761;
const CIRCLE_L_H: f64 = 3.683255437022957;
const CIRCLE_R_S: f64 = 0.5719537610547145;
const CIRCLE_L_S: f64 = 3.4009367260152272;
const HEX_R_S: f64 = 0.6163781767860633;
const HEX_R_H: f64 = 0.626373774838336;
const MAXTRI_GAMMA_S: f64 = 1.9538403699784401;
const MAXTRI_AREA_S: f64 = 0.7660880863670871;
const MAXTRI_GAMMA_H: f64 = 1.3199954913895735;
const MAXTRI_AREA_H: f64 = 0.5016016708106462;
const MAXTRI_GAMMA_E: f64 = std::f64::consts::FRAC_PI_2;
const MAXTRI_AREA_E: f64 = 0.6;
const DIST_H: f64 = 1.5191927258763207;

const TOL: f64 = 1e-13;

fn close(got: f64, want: f64, what: &str) {
    assert!((got - want).abs() <= TOL * want.abs().max(1.0), "{what}: got {got}, want {want}");
}

fn tag(k: Kappa) -> usize {
    (k.value() + 1) as usize
}

#[test]
fn law_of_cosines() {
    let want = [COS_LAW_H, COS_LAW_E, COS_LAW_S];
    for k in Kappa::ALL {
        let c = side_from_sas(k, 1.0, 1.0, PI / 2.0).unwrap();
        close(c, want[tag(k)], &format!("c for kappa {k}"));
    }
}

#[test]
fn triangle_from_sides() {
    let want = [
        [ALPHA_H, BETA_H, GAMMA_H, AREA_H],
        [ALPHA_E, BETA_E, GAMMA_E, AREA_E],
        [ALPHA_S, BETA_S, GAMMA_S, AREA_S],
    ];
    for k in Kappa::ALL {
        let t = Triangle::from_sss(k, 0.7, 0.9, 1.1).unwrap();
        let w = want[tag(k)];
        close(t.alpha, w[0], "alpha");
        close(t.beta, w[1], "beta");
        close(t.gamma, w[2], "gamma");
        close(t.area(), w[3], "area");
        let laid_out = Triangle::from_vertices(t.p, t.q, t.r).unwrap();
        close(laid_out.area(), w[3], "area from vertices");
    }
}

#[test]
fn regular_pentagon() {
    let want = [
        [PENT_SIDE_H, PENT_ANGLE_H, PENT_AREA_H],
        [PENT_SIDE_E, PENT_ANGLE_E, PENT_AREA_E],
        [PENT_SIDE_S, PENT_ANGLE_S, PENT_AREA_S],
    ];
    for k in Kappa::ALL {
        let g = regular::build(k, 5, 0.8).unwrap();
        let w = want[tag(k)];
        close(g.side, w[0], "side");
        close(g.angle, w[1], "angle");
        close(g.area, w[2], "area");
        let p = g.polygon().unwrap();
        close(p.perimeter(), 5.0 * w[0], "perimeter of the vertex list");
        close(p.area().unwrap(), w[2], "area of the vertex list");
    }
}

#[test]
fn optimal_circles() {
    let h = optimal_circle(Kappa::Hyperbolic, 1.0).unwrap();
    close(h.optimal_radius, CIRCLE_R_H, "hyperbolic radius");
    close(h.optimal_perimeter, CIRCLE_L_H, "hyperbolic length");
    let s = optimal_circle(Kappa::Spherical, 1.0).unwrap();
    close(s.optimal_radius, CIRCLE_R_S, "spherical radius");
    close(s.optimal_perimeter, CIRCLE_L_S, "spherical length");
}

#[test]
fn hexagon_of_unit_area() {
    close(regular::radius_from_area(Kappa::Spherical, 6, 1.0).unwrap(), HEX_R_S, "sphere");
    close(regular::radius_from_area(Kappa::Hyperbolic, 6, 1.0).unwrap(), HEX_R_H, "hyperbolic");
}

#[test]
fn largest_triangle_with_two_sides() {
    let want = [
        (MAXTRI_GAMMA_H, MAXTRI_AREA_H),
        (MAXTRI_GAMMA_E, MAXTRI_AREA_E),
        (MAXTRI_GAMMA_S, MAXTRI_AREA_S),
    ];
    for k in Kappa::ALL {
        let (g, a) = max_area_triangle_two_sides(k, 1.0, 1.2).unwrap();
        let (wg, wa) = want[tag(k)];
        // the area is flat at the optimum, so the angle is known to ~sqrt(eps)
        assert!((g - wg).abs() < 1e-7, "gamma for kappa {k}: {g} vs {wg}");
        close(a, wa, "largest area");
    }
    // the hyperbolic optimum is acute
    let (g, _) = max_area_triangle_two_sides(Kappa::Hyperbolic, 1.0, 1.2).unwrap();
    assert!(g < PI / 2.0);
}

#[test]
fn hyperbolic_distance() {
    let p = SurfacePoint::new(Kappa::Hyperbolic, 0.3, -0.4, 1.25f64.sqrt()).unwrap();
    let q = SurfacePoint::new(Kappa::Hyperbolic, -1.2, 0.5, 2.69f64.sqrt()).unwrap();
    close(p.distance_to(&q), DIST_H, "distance");
    close(q.distance_to(&p), DIST_H, "distance reversed");
}

#[test]
fn reconstructed_isometry_moves_other_points_too() {
    // a rotation of the sphere about (1, 1, 1) by 2π/3 permutes the axes
    let k = Kappa::Spherical;
    let e = |x, y, z| SurfacePoint::new(k, x, y, z).unwrap();
    let pairs = [
        (e(1.0, 0.0, 0.0), e(0.0, 1.0, 0.0)),
        (e(0.0, 1.0, 0.0), e(0.0, 0.0, 1.0)),
        (e(0.0, 0.0, 1.0), e(1.0, 0.0, 0.0)),
    ];
    let iso = isometry_from_correspondence(&pairs).unwrap();
    assert!(iso.len() <= 3);
    let s = 1.0 / 14f64.sqrt();
    let img = iso.apply(&e(s, 2.0 * s, 3.0 * s));
    let want = e(3.0 * s, s, 2.0 * s);
    assert!(img.distance_to(&want) < 1e-14);
}

#[test]
fn points_and_polygons_serialize_round_trip() {
    let g = regular::build(Kappa::Hyperbolic, 4, 1.0).unwrap().polygon().unwrap();
    let text = serde_json::to_string(&g).unwrap();
    assert!(text.contains("\"x\":"));
    let back: GeodesicPolygon = serde_json::from_str(&text).unwrap();
    assert_eq!(back, g);
    // off-surface coordinates are refused
    let bad = r#"{"x":0.0,"y":0.0,"z":2.0,"kappa":1}"#;
    assert!(serde_json::from_str::<SurfacePoint>(bad).is_err());
    assert!(serde_json::from_str::<SurfacePoint>(r#"{"x":0.0,"y":0.0,"z":1.0,"kappa":2}"#).is_err());
}
