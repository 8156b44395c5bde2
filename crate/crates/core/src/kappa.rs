//! Curvature selector and the κ-parameterized trigonometric functions.
//!
//! | κ  | `S_κ`  | `C_κ`  | `T_κ`  | `CT_κ` | `AS_κ`  | `AC_κ`   |
//! |----|--------|--------|--------|--------|---------|----------|
//! | +1 | sin    | cos    | tan    | cot    | arcsin  | arccos   |
//! |  0 | t      | 1      | t      | t      | t       | t        |
//! | −1 | sinh   | cosh   | tanh   | coth   | arsinh  | arcosh   |
//!
//! `C_0` is 1 rather than the identity: the only unified formula that reads
//! `C_κ` at κ = 0 is the geodesic `C_κ(t)^{|κ|} p + S_κ(t) v`, where the factor
//! is 1 regardless. Every other κ = 0 formula is written out separately.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for inverse-function arguments that overshoot their
/// closed domain by rounding. Arguments within this distance are clamped.
pub const DOMAIN_EPS: f64 = 1e-9;

/// Sectional curvature of the model surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Kappa {
    /// κ = −1, the hyperbolic plane.
    Hyperbolic,
    /// κ = 0, the Euclidean plane.
    Flat,
    /// κ = +1, the unit sphere.
    Spherical,
}

impl Kappa {
    pub const ALL: [Kappa; 3] = [Kappa::Hyperbolic, Kappa::Flat, Kappa::Spherical];
    pub const CURVED: [Kappa; 2] = [Kappa::Hyperbolic, Kappa::Spherical];

    pub fn from_value(value: i64) -> Result<Self> {
        match value {
            -1 => Ok(Kappa::Hyperbolic),
            0 => Ok(Kappa::Flat),
            1 => Ok(Kappa::Spherical),
            _ => Err(Error::Usage(format!(
                "curvature must be -1, 0 or 1, got {value}"
            ))),
        }
    }

    #[inline]
    pub fn value(self) -> i8 {
        match self {
            Kappa::Hyperbolic => -1,
            Kappa::Flat => 0,
            Kappa::Spherical => 1,
        }
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        f64::from(self.value())
    }

    /// `|κ|` as a float.
    #[inline]
    pub fn abs(self) -> f64 {
        if self == Kappa::Flat {
            0.0
        } else {
            1.0
        }
    }

    #[inline]
    pub fn is_flat(self) -> bool {
        self == Kappa::Flat
    }

    /// The curvature with the same absolute value and positive sign,
    /// i.e. the selector for `T_{|κ|}` and `CT_{|κ|}`.
    #[inline]
    pub fn unsigned(self) -> Kappa {
        if self == Kappa::Flat {
            Kappa::Flat
        } else {
            Kappa::Spherical
        }
    }

    /// `S_κ(t)`.
    #[inline]
    pub fn sin(self, t: f64) -> f64 {
        match self {
            Kappa::Hyperbolic => t.sinh(),
            Kappa::Flat => t,
            Kappa::Spherical => t.sin(),
        }
    }

    /// `C_κ(t)`; constant 1 at κ = 0.
    #[inline]
    pub fn cos(self, t: f64) -> f64 {
        match self {
            Kappa::Hyperbolic => t.cosh(),
            Kappa::Flat => 1.0,
            Kappa::Spherical => t.cos(),
        }
    }

    /// `T_κ(t)`.
    #[inline]
    pub fn tan(self, t: f64) -> f64 {
        match self {
            Kappa::Hyperbolic => t.tanh(),
            Kappa::Flat => t,
            Kappa::Spherical => t.tan(),
        }
    }

    /// `CT_κ(t)`; the identity at κ = 0.
    #[inline]
    pub fn cot(self, t: f64) -> f64 {
        match self {
            Kappa::Hyperbolic => 1.0 / t.tanh(),
            Kappa::Flat => t,
            Kappa::Spherical => 1.0 / t.tan(),
        }
    }

    /// `AS_κ(t)` with the default clamping tolerance.
    pub fn asin(self, t: f64) -> Result<f64> {
        self.asin_with(t, DOMAIN_EPS)
    }

    /// `AS_κ(t)`; for κ = 1, arguments within `eps` outside `[−1, 1]` are clamped.
    pub fn asin_with(self, t: f64, eps: f64) -> Result<f64> {
        check_finite("AS_kappa", t)?;
        match self {
            Kappa::Hyperbolic => Ok(t.asinh()),
            Kappa::Flat => Ok(t),
            Kappa::Spherical => {
                if t.abs() > 1.0 + eps {
                    return Err(Error::domain("AS_kappa", t, "arcsin needs |t| <= 1"));
                }
                Ok(t.clamp(-1.0, 1.0).asin())
            }
        }
    }

    /// `AC_κ(t)` with the default clamping tolerance.
    pub fn acos(self, t: f64) -> Result<f64> {
        self.acos_with(t, DOMAIN_EPS)
    }

    /// `AC_κ(t)`; arccos needs `[−1, 1]`, arcosh needs `[1, ∞)`.
    pub fn acos_with(self, t: f64, eps: f64) -> Result<f64> {
        check_finite("AC_kappa", t)?;
        match self {
            Kappa::Hyperbolic => {
                if t < 1.0 - eps {
                    return Err(Error::domain("AC_kappa", t, "arcosh needs t >= 1"));
                }
                Ok(t.max(1.0).acosh())
            }
            Kappa::Flat => Ok(t),
            Kappa::Spherical => {
                if t.abs() > 1.0 + eps {
                    return Err(Error::domain("AC_kappa", t, "arccos needs |t| <= 1"));
                }
                Ok(t.clamp(-1.0, 1.0).acos())
            }
        }
    }

    /// Upper bound of distances on the surface (π on the sphere).
    pub fn max_distance(self) -> f64 {
        match self {
            Kappa::Spherical => std::f64::consts::PI,
            _ => f64::INFINITY,
        }
    }

    /// Largest circumradius of a proper regular polygon: π/2 on the sphere.
    pub(crate) fn max_circumradius(self) -> f64 {
        match self {
            Kappa::Spherical => FRAC_PI_2,
            _ => f64::INFINITY,
        }
    }
}

impl From<Kappa> for i8 {
    fn from(k: Kappa) -> i8 {
        k.value()
    }
}

impl TryFrom<i8> for Kappa {
    type Error = Error;

    fn try_from(value: i8) -> Result<Self> {
        Kappa::from_value(i64::from(value))
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn check_finite(func: &'static str, t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, t, "argument must be finite"))
    }
}

/// `S_κ(t)`: `t`, `sin t` or `sinh t`.
pub fn s_kappa(k: Kappa, t: f64) -> Result<f64> {
    check_finite("S_kappa", t)?;
    Ok(k.sin(t))
}

/// `C_κ(t)`: `1`, `cos t` or `cosh t`.
pub fn c_kappa(k: Kappa, t: f64) -> Result<f64> {
    check_finite("C_kappa", t)?;
    Ok(k.cos(t))
}

/// `T_κ(t)`: `t`, `tan t` or `tanh t`.
pub fn t_kappa(k: Kappa, t: f64) -> Result<f64> {
    check_finite("T_kappa", t)?;
    if k == Kappa::Spherical && t.cos() == 0.0 {
        return Err(Error::domain("T_kappa", t, "tan has a pole here"));
    }
    Ok(k.tan(t))
}

/// `CT_κ(t)`: `t`, `cot t` or `coth t`.
pub fn ct_kappa(k: Kappa, t: f64) -> Result<f64> {
    check_finite("CT_kappa", t)?;
    let pole = match k {
        Kappa::Flat => false,
        Kappa::Hyperbolic => t == 0.0,
        Kappa::Spherical => t.sin() == 0.0,
    };
    if pole {
        return Err(Error::domain("CT_kappa", t, "cot/coth has a pole here"));
    }
    Ok(k.cot(t))
}

/// `AS_κ(t)` with the default clamping tolerance.
pub fn as_kappa(k: Kappa, t: f64) -> Result<f64> {
    k.asin(t)
}

/// `AC_κ(t)` with the default clamping tolerance.
pub fn ac_kappa(k: Kappa, t: f64) -> Result<f64> {
    k.acos(t)
}

/// The sum, difference, double- and half-angle identities for `S_κ`, `C_κ`
/// (κ ≠ 0), tagged `A-1` … `A-16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `C(−a) = C(a)`, `S(−a) = −S(a)`
    A1,
    /// `S(a+b) = S(a)C(b) + C(a)S(b)`
    A2,
    /// `S(a−b) = S(a)C(b) − C(a)S(b)`
    A3,
    /// `S(2a) = 2S(a)C(a)`
    A4,
    /// `C²(a) = 1 − κS²(a)`
    A5,
    /// `C(a+b) = C(a)C(b) − κS(a)S(b)`
    A6,
    /// `C(a−b) = C(a)C(b) + κS(a)S(b)`
    A7,
    /// `C(2a) = C²(a) − κS²(a) = 1 − 2κS²(a) = 2C²(a) − 1`
    A8,
    /// `1 − C(a) = 2κS²(a/2)`
    A9,
    /// `1 + C(a) = 2C²(a/2)`
    A10,
    /// `C(a+b) + C(a−b) = 2C(a)C(b)`
    A11,
    /// `C(a+b) − C(a−b) = −2κS(a)S(b)`
    A12,
    /// `2S((a+b)/2)C((a−b)/2) = S(a) + S(b)`
    A13,
    /// `2C((a+b)/2)S((a−b)/2) = S(a) − S(b)`
    A14,
    /// `2C((a+b)/2)C((a−b)/2) = C(a) + C(b)`
    A15,
    /// `−2κS((a+b)/2)S((a−b)/2) = C(a) − C(b)`
    A16,
}

/// Both sides of an identity plus the magnitude of its largest terms, for
/// relative residuals that stay meaningful when the sides cancel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityEval {
    pub lhs: f64,
    pub rhs: f64,
    pub scale: f64,
}

impl IdentityEval {
    pub fn residual(&self) -> f64 {
        self.lhs - self.rhs
    }

    pub fn relative_residual(&self) -> f64 {
        let r = self.residual().abs();
        if r == 0.0 {
            0.0
        } else {
            r / self.scale.max(f64::MIN_POSITIVE)
        }
    }
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::A1,
        Identity::A2,
        Identity::A3,
        Identity::A4,
        Identity::A5,
        Identity::A6,
        Identity::A7,
        Identity::A8,
        Identity::A9,
        Identity::A10,
        Identity::A11,
        Identity::A12,
        Identity::A13,
        Identity::A14,
        Identity::A15,
        Identity::A16,
    ];

    pub fn tag(self) -> &'static str {
        const TAGS: [&str; 16] = [
            "A-1", "A-2", "A-3", "A-4", "A-5", "A-6", "A-7", "A-8", "A-9", "A-10", "A-11",
            "A-12", "A-13", "A-14", "A-15", "A-16",
        ];
        TAGS[self as usize]
    }

    /// Whether the identity reads its second argument.
    pub fn is_binary(self) -> bool {
        use Identity::*;
        matches!(self, A2 | A3 | A6 | A7 | A11 | A12 | A13 | A14 | A15 | A16)
    }

    /// Evaluate both sides at `(a, b)`. Multi-part identities report the part
    /// with the largest residual.
    pub fn evaluate(self, k: Kappa, a: f64, b: f64) -> Result<IdentityEval> {
        if k.is_flat() {
            return Err(Error::Usage(format!(
                "identity {} is stated for curved surfaces only",
                self.tag()
            )));
        }
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::domain("identity_residual", a + b, "arguments must be finite"));
        }
        let kf = k.as_f64();
        let s = |t: f64| k.sin(t);
        let c = |t: f64| k.cos(t);
        let eval = |lhs: f64, rhs: f64, terms: &[f64]| IdentityEval {
            lhs,
            rhs,
            scale: terms.iter().map(|t| t.abs()).sum(),
        };
        let worst = |parts: &[IdentityEval]| {
            *parts
                .iter()
                .max_by(|x, y| x.relative_residual().total_cmp(&y.relative_residual()))
                .expect("non-empty")
        };
        let (hp, hm) = ((a + b) / 2.0, (a - b) / 2.0);
        use Identity::*;
        let out = match self {
            A1 => worst(&[
                eval(c(-a), c(a), &[c(a)]),
                eval(s(-a), -s(a), &[s(a)]),
            ]),
            A2 => {
                let (x, y) = (s(a) * c(b), c(a) * s(b));
                eval(s(a + b), x + y, &[s(a + b), x, y])
            }
            A3 => {
                let (x, y) = (s(a) * c(b), c(a) * s(b));
                eval(s(a - b), x - y, &[s(a - b), x, y])
            }
            A4 => eval(s(2.0 * a), 2.0 * s(a) * c(a), &[s(2.0 * a), 2.0 * s(a) * c(a)]),
            A5 => {
                let (c2, s2) = (c(a) * c(a), s(a) * s(a));
                eval(c2, 1.0 - kf * s2, &[c2, 1.0, s2])
            }
            A6 => {
                let (x, y) = (c(a) * c(b), kf * s(a) * s(b));
                eval(c(a + b), x - y, &[c(a + b), x, y])
            }
            A7 => {
                let (x, y) = (c(a) * c(b), kf * s(a) * s(b));
                eval(c(a - b), x + y, &[c(a - b), x, y])
            }
            A8 => {
                let (c2, s2, lhs) = (c(a) * c(a), s(a) * s(a), c(2.0 * a));
                let terms = [lhs, c2, s2, 1.0];
                worst(&[
                    eval(lhs, c2 - kf * s2, &terms),
                    eval(lhs, 1.0 - 2.0 * kf * s2, &terms),
                    eval(lhs, 2.0 * c2 - 1.0, &terms),
                ])
            }
            A9 => {
                let s2 = s(a / 2.0).powi(2);
                eval(1.0 - c(a), 2.0 * kf * s2, &[1.0, c(a), 2.0 * s2])
            }
            A10 => {
                let c2 = c(a / 2.0).powi(2);
                eval(1.0 + c(a), 2.0 * c2, &[1.0, c(a), 2.0 * c2])
            }
            A11 => {
                let rhs = 2.0 * c(a) * c(b);
                eval(c(a + b) + c(a - b), rhs, &[c(a + b), c(a - b), rhs])
            }
            A12 => {
                let rhs = -2.0 * kf * s(a) * s(b);
                eval(c(a + b) - c(a - b), rhs, &[c(a + b), c(a - b), rhs])
            }
            A13 => {
                let lhs = 2.0 * s(hp) * c(hm);
                eval(lhs, s(a) + s(b), &[lhs, s(a), s(b)])
            }
            A14 => {
                let lhs = 2.0 * c(hp) * s(hm);
                eval(lhs, s(a) - s(b), &[lhs, s(a), s(b)])
            }
            A15 => {
                let lhs = 2.0 * c(hp) * c(hm);
                eval(lhs, c(a) + c(b), &[lhs, c(a), c(b)])
            }
            A16 => {
                let lhs = -2.0 * kf * s(hp) * s(hm);
                eval(lhs, c(a) - c(b), &[lhs, c(a), c(b)])
            }
        };
        Ok(out)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| *c != '-').collect();
        Identity::ALL
            .iter()
            .copied()
            .find(|id| id.tag().replace('-', "").eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::Usage(format!("unknown identity tag {s:?}")))
    }
}

/// LHS − RHS of identity `id` at `(a, b)`; `b` is ignored by unary identities.
pub fn identity_residual(id: Identity, k: Kappa, a: f64, b: f64) -> Result<f64> {
    Ok(id.evaluate(k, a, b)?.residual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn kernel_point_values() {
        assert_eq!(s_kappa(Kappa::Flat, 2.5).unwrap(), 2.5);
        assert!((s_kappa(Kappa::Spherical, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-15);
        assert!((s_kappa(Kappa::Hyperbolic, 2f64.ln()).unwrap() - 0.75).abs() < 1e-15);
        assert_eq!(c_kappa(Kappa::Spherical, 0.0).unwrap(), 1.0);
        assert_eq!(c_kappa(Kappa::Hyperbolic, 0.0).unwrap(), 1.0);
        assert!((c_kappa(Kappa::Hyperbolic, 2f64.ln()).unwrap() - 1.25).abs() < 1e-15);
        assert_eq!(c_kappa(Kappa::Flat, 7.0).unwrap(), 1.0);
        assert!((as_kappa(Kappa::Spherical, 1.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(ac_kappa(Kappa::Hyperbolic, 1.0).unwrap(), 0.0);
        assert!((t_kappa(Kappa::Spherical, FRAC_PI_4).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(ct_kappa(Kappa::Flat, 0.3).unwrap(), 0.3);
    }

    #[test]
    fn non_finite_is_a_domain_error() {
        for f in [s_kappa, c_kappa, t_kappa, ct_kappa, as_kappa, ac_kappa] {
            assert!(matches!(f(Kappa::Spherical, f64::NAN), Err(Error::Domain { .. })));
            assert!(matches!(f(Kappa::Hyperbolic, f64::INFINITY), Err(Error::Domain { .. })));
        }
    }

    #[test]
    fn inverse_domains_clamp_then_reject() {
        assert_eq!(ac_kappa(Kappa::Spherical, 1.0 + 1e-12).unwrap(), 0.0);
        assert_eq!(ac_kappa(Kappa::Hyperbolic, 1.0 - 1e-12).unwrap(), 0.0);
        assert!((as_kappa(Kappa::Spherical, -1.0 - 1e-10).unwrap() + FRAC_PI_2).abs() < 1e-15);
        let err = ac_kappa(Kappa::Hyperbolic, 0.5).unwrap_err();
        assert!(matches!(err, Error::Domain { func: "AC_kappa", .. }));
        assert!(as_kappa(Kappa::Spherical, 1.1).is_err());
        assert!(Kappa::Spherical.acos_with(1.0 + 1e-6, 1e-5).is_ok());
        assert!(ct_kappa(Kappa::Hyperbolic, 0.0).is_err());
        assert!(ct_kappa(Kappa::Spherical, 0.0).is_err());
    }

    #[test]
    fn identity_examples() {
        let r = identity_residual(Identity::A1, Kappa::Spherical, 0.7, 0.0).unwrap();
        assert!(r.abs() < 1e-15);
        let r = identity_residual(Identity::A8, Kappa::Hyperbolic, 0.3, 0.0).unwrap();
        assert!(r.abs() < 1e-15);
        let r = identity_residual(Identity::A16, Kappa::Spherical, 1.1, 0.4).unwrap();
        assert!(r.abs() <= 1e-12);
    }

    #[test]
    fn identity_tags_parse() {
        assert_eq!("A-16".parse::<Identity>().unwrap(), Identity::A16);
        assert_eq!("a3".parse::<Identity>().unwrap(), Identity::A3);
        assert!("A-17".parse::<Identity>().unwrap_err().is_usage());
        for id in Identity::ALL {
            assert_eq!(id.tag().parse::<Identity>().unwrap(), id);
        }
    }

    #[test]
    fn identities_reject_flat() {
        assert!(Identity::A2.evaluate(Kappa::Flat, 0.1, 0.2).unwrap_err().is_usage());
    }

    #[test]
    fn kappa_serializes_as_integer() {
        assert_eq!(i8::from(Kappa::Hyperbolic), -1);
        assert_eq!(Kappa::try_from(1i8).unwrap(), Kappa::Spherical);
        assert!(Kappa::try_from(2i8).is_err());
        assert_eq!(Kappa::Flat.to_string(), "0");
    }

    fn curved() -> impl Strategy<Value = Kappa> {
        prop_oneof![Just(Kappa::Hyperbolic), Just(Kappa::Spherical)]
    }

    proptest! {
        #[test]
        fn pythagorean(k in curved(), t in -5.0f64..5.0) {
            let lhs = k.cos(t).powi(2) - 1.0 + k.as_f64() * k.sin(t).powi(2);
            prop_assert!(lhs.abs() <= 1e-12 * k.cos(t).powi(2).max(1.0));
        }

        #[test]
        fn asin_round_trip(t in -1.5f64..1.5) {
            for k in Kappa::ALL {
                let back = k.asin(k.sin(t)).unwrap();
                prop_assert!((back - t).abs() <= 1e-12);
            }
        }

        #[test]
        fn acos_round_trip(t in -3.0f64..3.0) {
            // principal ranges: [0, π] for arccos, [0, ∞) for arcosh
            let k = Kappa::Spherical;
            let back = k.acos(k.cos(t)).unwrap();
            prop_assert!((back - t.abs()).abs() <= 1e-7 || t.abs() < 1e-3);
            let k = Kappa::Hyperbolic;
            if t.abs() > 0.1 {
                let back = k.acos(k.cos(t)).unwrap();
                prop_assert!((back - t.abs()).abs() <= 1e-12 * t.cosh() / t.sinh().abs());
            }
        }

        #[test]
        fn every_identity_holds(k in curved(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
            for id in Identity::ALL {
                let e = id.evaluate(k, a, b).unwrap();
                prop_assert!(e.relative_residual() <= 1e-12, "{} {:?}", id, e);
            }
        }
    }

    #[test]
    fn spherical_acos_round_trip_away_from_ends() {
        for i in 1..1000 {
            let t = PI * f64::from(i) / 1000.0;
            let back = Kappa::Spherical.acos(t.cos()).unwrap();
            assert!((back - t).abs() <= 1e-12 / t.sin().max(1e-3), "{t}");
        }
    }
}
