//! Branch-tracked line integrals along closed polylines in `ℂ ∖ {0, 1}`.
//!
//! For a pole `a`, the real part of `ω_a = (1/2πi) dz/(z − a)` is
//! `d arg(z − a) / 2π`. Along each straight segment the continuous branch of
//! `arg(z − a)` is recovered from the principal argument of
//! `(z − a)/(γ_k − a)`, which is exact as long as the segment subtends less
//! than π at the pole.

use std::f64::consts::{FRAC_PI_4, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{NormalizedPath, DELTA_POLE};

/// Integer tolerance for winding sums before they are treated as a branch failure.
pub const WINDING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pole {
    Zero,
    One,
}

impl Pole {
    pub fn position(self) -> Complex64 {
        match self {
            Pole::Zero => Complex64::new(0.0, 0.0),
            Pole::One => Complex64::new(1.0, 0.0),
        }
    }

    pub fn tag(self) -> u8 {
        match self {
            Pole::Zero => 0,
            Pole::One => 1,
        }
    }
}

/// Quadrature parameters for [`hopf_quadrature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Gauss–Legendre nodes per segment.
    pub order: usize,
    /// The check pass uses `order * refinement` nodes.
    pub refinement: usize,
    /// Maximum allowed difference between the two passes.
    pub tol: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            order: 8,
            refinement: 2,
            tol: 1e-4,
        }
    }
}

impl QuadratureSettings {
    pub fn with_tol(tol: f64) -> Self {
        QuadratureSettings {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(Error::InvalidParameter(format!("quadrature order {} < 2", self.order)));
        }
        if self.refinement < 2 {
            return Err(Error::InvalidParameter(format!(
                "refinement factor {} < 2",
                self.refinement
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tolerance {} must be positive", self.tol)));
        }
        Ok(())
    }

    fn fine_order(&self) -> usize {
        self.order * self.refinement
    }
}

/// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
///
/// Roots of `P_n` by Newton iteration from the Chebyshev-like initial guess.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Angle swept about `pole` from `a` to `b`, in turns.
fn turn_increment(a: Complex64, b: Complex64, pole: Complex64) -> f64 {
    ((b - pole) / (a - pole)).arg() / TAU
}

/// Winding number by summing principal-branch argument increments.
pub fn winding_discrete(path: &NormalizedPath, pole: Pole) -> Result<i64> {
    let a = pole.position();
    let mut sum = 0.0;
    for (p, q) in path.segments() {
        let inc = turn_increment(p, q, a);
        if inc.abs() >= 0.5 - 1e-12 {
            return Err(Error::BranchDensity {
                pole: pole.tag(),
                value: f64::NAN,
            });
        }
        sum += inc;
    }
    let rounded = sum.round();
    if (sum - rounded).abs() > WINDING_TOL {
        return Err(Error::BranchDensity {
            pole: pole.tag(),
            value: sum,
        });
    }
    debug_assert!((sum - rounded).abs() < 1e-9);
    Ok(rounded as i64)
}

/// `Re ∮ ω_a` by Gauss–Legendre quadrature of `Im(Δ/(z − a))/2π` on each segment.
pub fn winding_quadrature(path: &NormalizedPath, pole: Pole, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let a = pole.position();
    path.segments()
        .map(|(p, q)| {
            let delta = q - p;
            nodes
                .iter()
                .zip(&weights)
                .map(|(&s, &w)| w * (delta / (p + delta * s - a)).im)
                .sum::<f64>()
        })
        .sum::<f64>()
        / TAU
}

/// The multivalued angle function `λ_a(t) = Re ∫_0^t ω_a`, tracked continuously.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaProfile {
    pole: Pole,
    /// `λ(t_0), …, λ(t_N)`; the last entry closes the loop.
    values: Vec<f64>,
}

impl LambdaProfile {
    pub fn pole(&self) -> Pole {
        self.pole
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn start(&self) -> f64 {
        self.values[0]
    }

    /// `λ(t_N) − λ(t_0)`.
    pub fn total(&self) -> f64 {
        self.values[self.values.len() - 1] - self.values[0]
    }

    /// The winding number about the pole.
    pub fn winding(&self) -> i64 {
        self.total().round() as i64
    }
}

pub fn lambda_profile(path: &NormalizedPath, pole: Pole, start: f64) -> Result<LambdaProfile> {
    let a = pole.position();
    if let Some((k, z)) = path
        .points()
        .iter()
        .enumerate()
        .find(|(_, z)| (**z - a).norm() < DELTA_POLE)
    {
        return Err(Error::PoleProximity {
            sample: k,
            pole: pole.tag(),
            distance: (*z - a).norm(),
        });
    }
    let mut values = Vec::with_capacity(path.len() + 1);
    let mut current = start;
    values.push(current);
    for (p, q) in path.segments() {
        let inc = turn_increment(p, q, a);
        debug_assert!(inc.abs() < FRAC_PI_4 / TAU + 1e-12);
        current += inc;
        values.push(current);
    }
    let total = current - start;
    if (total - total.round()).abs() > WINDING_TOL {
        return Err(Error::BranchDensity {
            pole: pole.tag(),
            value: total,
        });
    }
    Ok(LambdaProfile { pole, values })
}

/// `(∮ λ₀ dλ₁, ∮ λ₁ dλ₀)` with `order` nodes per segment.
fn iterated_pair(path: &NormalizedPath, l0: &LambdaProfile, l1: &LambdaProfile, order: usize) -> (f64, f64) {
    let (nodes, weights) = gauss_legendre(order);
    let one = Complex64::new(1.0, 0.0);
    let mut i01 = 0.0;
    let mut i10 = 0.0;
    for (k, (p, q)) in path.segments().enumerate() {
        let delta = q - p;
        if delta.norm_sqr() == 0.0 {
            continue;
        }
        let (base0, base1) = (l0.values[k], l1.values[k]);
        let (mut s01, mut s10) = (0.0, 0.0);
        for (&s, &w) in nodes.iter().zip(&weights) {
            let z = p + delta * s;
            let lam0 = base0 + (z / p).arg() / TAU;
            let lam1 = base1 + ((z - one) / (p - one)).arg() / TAU;
            let d0 = (delta / z).im / TAU;
            let d1 = (delta / (z - one)).im / TAU;
            s01 += w * lam0 * d1;
            s10 += w * lam1 * d0;
        }
        i01 += s01;
        i10 += s10;
    }
    (i01, i10)
}

fn check_profiles(path: &NormalizedPath, l0: &LambdaProfile, l1: &LambdaProfile) -> Result<()> {
    if l0.pole != Pole::Zero || l1.pole != Pole::One {
        return Err(Error::InvalidParameter("profiles must be (λ₀, λ₁) in that order".into()));
    }
    if l0.values.len() != path.len() + 1 || l1.values.len() != path.len() + 1 {
        return Err(Error::InvalidParameter("profiles were built on a different path".into()));
    }
    Ok(())
}

/// Result of [`hopf_quadrature`]: the refined value and the coarse check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopfEstimate {
    pub value: f64,
    pub coarse: f64,
}

impl HopfEstimate {
    pub fn residual(&self) -> f64 {
        (self.value - self.coarse).abs()
    }
}

/// `½ Re ∮ (λ₀ ω₁ − λ₁ ω₀)` along the path, evaluated at two quadrature orders.
pub fn hopf_quadrature(
    path: &NormalizedPath,
    l0: &LambdaProfile,
    l1: &LambdaProfile,
    q: &QuadratureSettings,
) -> Result<HopfEstimate> {
    q.validate()?;
    check_profiles(path, l0, l1)?;
    let (a, b) = iterated_pair(path, l0, l1, q.order);
    let coarse = 0.5 * (a - b);
    let (a, b) = iterated_pair(path, l0, l1, q.fine_order());
    let fine = 0.5 * (a - b);
    if !((fine - coarse).abs() < q.tol) {
        return Err(Error::NonConvergence { coarse, fine });
    }
    Ok(HopfEstimate { value: fine, coarse })
}

/// The one-sided forms `(∮ λ₀ dλ₁, −∮ λ₁ dλ₀)`; both equal the Hopf integral
/// when both windings vanish.
pub fn hopf_byparts(
    path: &NormalizedPath,
    l0: &LambdaProfile,
    l1: &LambdaProfile,
    q: &QuadratureSettings,
) -> Result<(f64, f64)> {
    q.validate()?;
    check_profiles(path, l0, l1)?;
    let (w0, w1) = (l0.winding(), l1.winding());
    if w0 != 0 || w1 != 0 {
        return Err(Error::BrunnGate { w0, w1 });
    }
    let (a, b) = iterated_pair(path, l0, l1, q.fine_order());
    Ok((a, -b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(center: f64, radius: f64, n: usize, turns: f64) -> NormalizedPath {
        NormalizedPath::from_points(
            (0..n)
                .map(|k| Complex64::new(center, 0.0) + Complex64::from_polar(radius, turns * TAU * k as f64 / n as f64))
                .collect(),
        )
        .unwrap()
    }

    fn constant(n: usize) -> NormalizedPath {
        NormalizedPath::from_points(vec![Complex64::new(2.0, 0.0); n]).unwrap()
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        for n in [2, 3, 8, 16] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
            for deg in 0..(2 * n) {
                let approx: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                assert!((approx - 1.0 / (deg as f64 + 1.0)).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn gauss_legendre_matches_tabulated_two_point_rule() {
        let (x, w) = gauss_legendre(2);
        let r = 0.5 / 3f64.sqrt();
        assert!((x[0] - (0.5 - r)).abs() < 1e-15 && (x[1] - (0.5 + r)).abs() < 1e-15);
        assert!((w[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn winding_examples() {
        let c = circle(0.0, 0.5, 64, 1.0);
        assert_eq!(winding_discrete(&c, Pole::Zero).unwrap(), 1);
        assert_eq!(winding_discrete(&c, Pole::One).unwrap(), 0);
        assert_eq!(winding_discrete(&constant(8), Pole::One).unwrap(), 0);
        let cw = circle(1.0, 0.25, 64, -2.0);
        assert_eq!(winding_discrete(&cw, Pole::One).unwrap(), -2);
        assert!((winding_quadrature(&cw, Pole::One, 8) + 2.0).abs() < 1e-9);
    }

    #[test]
    fn lambda_on_circle() {
        let n = 64;
        let c = circle(0.0, 0.5, n, 1.0);
        let l0 = lambda_profile(&c, Pole::Zero, 0.0).unwrap();
        // Each sample advances by exactly 1/n of a turn.
        for k in 0..=n {
            assert!((l0.values()[k] - k as f64 / n as f64).abs() < 1e-13);
        }
        assert!(l0.values().windows(2).all(|w| w[1] > w[0]));
        let l1 = lambda_profile(&c, Pole::One, 0.0).unwrap();
        assert!(l1.total().abs() < 1e-12);
        let k = lambda_profile(&constant(8), Pole::Zero, 0.7).unwrap();
        assert!(k.values().iter().all(|&v| v == 0.7));
    }

    #[test]
    fn constant_path_has_zero_hopf() {
        let p = constant(8);
        let l0 = lambda_profile(&p, Pole::Zero, 0.0).unwrap();
        let l1 = lambda_profile(&p, Pole::One, 0.0).unwrap();
        let q = QuadratureSettings::default();
        assert_eq!(hopf_quadrature(&p, &l0, &l1, &q).unwrap().value, 0.0);
        assert_eq!(hopf_byparts(&p, &l0, &l1, &q).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn byparts_gate() {
        let c = circle(0.0, 0.5, 64, 1.0);
        let l0 = lambda_profile(&c, Pole::Zero, 0.0).unwrap();
        let l1 = lambda_profile(&c, Pole::One, 0.0).unwrap();
        assert_eq!(
            hopf_byparts(&c, &l0, &l1, &QuadratureSettings::default()).unwrap_err(),
            Error::BrunnGate { w0: 1, w1: 0 }
        );
    }

    #[test]
    fn swapped_profiles_rejected() {
        let c = circle(0.0, 0.5, 64, 1.0);
        let l0 = lambda_profile(&c, Pole::Zero, 0.0).unwrap();
        let l1 = lambda_profile(&c, Pole::One, 0.0).unwrap();
        assert!(hopf_quadrature(&c, &l1, &l0, &QuadratureSettings::default()).is_err());
        let bad = QuadratureSettings { order: 1, ..Default::default() };
        assert!(hopf_quadrature(&c, &l0, &l1, &bad).is_err());
    }
}
