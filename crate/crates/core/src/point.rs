//! Points of the Riemann sphere.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the Riemann sphere: a finite complex number or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RiemannPoint {
    Finite(Complex64),
    Infinity,
}

impl RiemannPoint {
    pub const ZERO: RiemannPoint = RiemannPoint::Finite(Complex64::new(0.0, 0.0));
    pub const ONE: RiemannPoint = RiemannPoint::Finite(Complex64::new(1.0, 0.0));

    /// Finite point; rejects NaN and infinite components.
    pub fn finite(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(RiemannPoint::Finite(Complex64::new(re, im)))
        } else {
            Err(Error::InvalidParameter(format!(
                "non-finite coordinate ({re}, {im})"
            )))
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        RiemannPoint::Finite(z)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, RiemannPoint::Infinity)
    }

    /// True for the infinity tag and for finite points with NaN/Inf parts.
    pub(crate) fn is_well_formed(&self) -> bool {
        match self {
            RiemannPoint::Finite(z) => z.re.is_finite() && z.im.is_finite(),
            RiemannPoint::Infinity => true,
        }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match *self {
            RiemannPoint::Finite(z) => Some(z),
            RiemannPoint::Infinity => None,
        }
    }

    /// Homogeneous coordinates `[x : y]`; finite `z` is `[z : 1]`, infinity is `[1 : 0]`.
    pub fn homogeneous(&self) -> (Complex64, Complex64) {
        match *self {
            RiemannPoint::Finite(z) => (z, Complex64::new(1.0, 0.0)),
            RiemannPoint::Infinity => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        }
    }

    /// Inverse of [`homogeneous`](Self::homogeneous). `y == 0` is infinity.
    pub fn from_homogeneous(x: Complex64, y: Complex64) -> Self {
        if y.re == 0.0 && y.im == 0.0 {
            RiemannPoint::Infinity
        } else {
            RiemannPoint::Finite(x / y)
        }
    }

    /// Chordal distance on the unit-diameter-2 sphere; lies in `[0, 2]`.
    pub fn chordal_distance(&self, other: &RiemannPoint) -> f64 {
        let (x1, y1) = self.homogeneous();
        let (x2, y2) = other.homogeneous();
        let cross = (x1 * y2 - x2 * y1).norm();
        let n1 = (x1.norm_sqr() + y1.norm_sqr()).sqrt();
        let n2 = (x2.norm_sqr() + y2.norm_sqr()).sqrt();
        2.0 * cross / (n1 * n2)
    }

    /// Chart interpolation between two samples, `s` in `[0, 1]`.
    ///
    /// Finite pairs move on the straight segment in the plane. Pairs involving
    /// infinity move along the line between unit-normalized homogeneous
    /// representatives, which never passes through the zero vector.
    pub fn lerp(&self, other: &RiemannPoint, s: f64) -> RiemannPoint {
        match (*self, *other) {
            (RiemannPoint::Finite(a), RiemannPoint::Finite(b)) => {
                RiemannPoint::Finite(a + (b - a) * s)
            }
            (RiemannPoint::Infinity, RiemannPoint::Infinity) => RiemannPoint::Infinity,
            _ => {
                let (x1, y1) = unit_homogeneous(self);
                let (x2, y2) = unit_homogeneous(other);
                RiemannPoint::from_homogeneous(x1 * (1.0 - s) + x2 * s, y1 * (1.0 - s) + y2 * s)
            }
        }
    }
}

fn unit_homogeneous(p: &RiemannPoint) -> (Complex64, Complex64) {
    let (x, y) = p.homogeneous();
    let n = (x.norm_sqr() + y.norm_sqr()).sqrt();
    (x / n, y / n)
}

impl From<Complex64> for RiemannPoint {
    fn from(z: Complex64) -> Self {
        RiemannPoint::Finite(z)
    }
}

impl fmt::Display for RiemannPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RiemannPoint::Finite(z) => write!(f, "{z}"),
            RiemannPoint::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(re: f64, im: f64) -> RiemannPoint {
        RiemannPoint::finite(re, im).unwrap()
    }

    #[test]
    fn rejects_nan() {
        assert!(RiemannPoint::finite(f64::NAN, 0.0).is_err());
        assert!(RiemannPoint::finite(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn chordal_distance_known_values() {
        // 0 and infinity are antipodal.
        assert!((RiemannPoint::ZERO.chordal_distance(&RiemannPoint::Infinity) - 2.0).abs() < 1e-15);
        // 1 and infinity: 2 / sqrt(2).
        let d = RiemannPoint::ONE.chordal_distance(&RiemannPoint::Infinity);
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(p(0.3, -0.2).chordal_distance(&p(0.3, -0.2)), 0.0);
        assert_eq!(RiemannPoint::Infinity.chordal_distance(&RiemannPoint::Infinity), 0.0);
    }

    #[test]
    fn homogeneous_round_trip() {
        for q in [p(2.0, -1.0), RiemannPoint::Infinity, RiemannPoint::ZERO] {
            let (x, y) = q.homogeneous();
            assert_eq!(RiemannPoint::from_homogeneous(x, y), q);
        }
    }

    #[test]
    fn lerp_through_infinity_stays_finite_inside() {
        let a = RiemannPoint::Infinity;
        let b = p(2.0, 0.0);
        assert_eq!(a.lerp(&b, 0.0), RiemannPoint::Infinity);
        let end = a.lerp(&b, 1.0).as_complex().unwrap();
        assert!((end - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        let mid = a.lerp(&b, 0.5);
        assert!(!mid.is_infinite());
        // Antipodal pair still interpolates without a zero vector.
        let m = RiemannPoint::Infinity.lerp(&RiemannPoint::ZERO, 0.5);
        assert!(m.as_complex().unwrap().norm() > 0.0);
    }
}
