//! Möbius normalization: pin strands 1, 2, 3 at 0, 1, ∞ and extract strand 4.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::braid::{SphericalBraid, DEFAULT_EPS_SEP};
use crate::error::{Error, Result};
use crate::point::RiemannPoint;

/// Minimum distance of the normalized curve from 0 and 1.
pub const DELTA_POLE: f64 = 1e-4;
/// Maximum modulus of the normalized curve.
pub const R_MAX: f64 = 1e6;
/// Largest angle a segment of the normalized curve may subtend at either pole.
pub const MAX_SEGMENT_ANGLE: f64 = PI / 4.0;
/// Densification may grow the sample count at most by this factor.
pub const MAX_DENSIFICATION: usize = 64;
/// Lower bound on `|ad - bc|` after scaling the largest coefficient to 1.
pub const MIN_DETERMINANT: f64 = 1e-12;

/// `z ↦ (az + b) / (cz + d)`, acting on homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MobiusMap {
    pub const IDENTITY: MobiusMap = MobiusMap {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        c: Complex64::new(0.0, 0.0),
        d: Complex64::new(1.0, 0.0),
    };

    /// Scales the coefficients so the largest has modulus 1 and checks the determinant.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let scale = [a, b, c, d].iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::DegenerateMap { det: 0.0 });
        }
        let m = MobiusMap {
            a: a / scale,
            b: b / scale,
            c: c / scale,
            d: d / scale,
        };
        let det = m.determinant().norm();
        if !(det >= MIN_DETERMINANT) {
            return Err(Error::DegenerateMap { det });
        }
        Ok(m)
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Projective evaluation; infinity maps to `a/c` and `-d/c` maps to infinity.
    pub fn apply(&self, p: &RiemannPoint) -> RiemannPoint {
        let (x, y) = p.homogeneous();
        RiemannPoint::from_homogeneous(self.a * x + self.b * y, self.c * x + self.d * y)
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }
}

/// The map sending `z1 ↦ 0`, `z2 ↦ 1`, `z3 ↦ ∞`.
///
/// With homogeneous points `p_i` and `det(p, q) = p.x q.y − p.y q.x` this is
/// `p ↦ det(p, p1)·det(p2, p3) / (det(p, p3)·det(p2, p1))`, the projective
/// form of `(z − z1)(z2 − z3) / ((z − z3)(z2 − z1))`, so infinite inputs need
/// no special casing.
pub fn cross_ratio_map(z1: &RiemannPoint, z2: &RiemannPoint, z3: &RiemannPoint) -> Result<MobiusMap> {
    let distance = z1
        .chordal_distance(z2)
        .min(z1.chordal_distance(z3))
        .min(z2.chordal_distance(z3));
    if !(distance >= DEFAULT_EPS_SEP) {
        return Err(Error::CoincidentPoints { distance });
    }
    let (x1, y1) = z1.homogeneous();
    let (x2, y2) = z2.homogeneous();
    let (x3, y3) = z3.homogeneous();
    let d23 = x2 * y3 - y2 * x3;
    let d21 = x2 * y1 - y2 * x1;
    MobiusMap::new(y1 * d23, -x1 * d23, y3 * d21, -x3 * d21)
}

/// Applies `map` to every sample of every strand.
pub fn transform_braid(f: &SphericalBraid, map: &MobiusMap) -> Result<SphericalBraid> {
    f.map_points(|_, _, p| map.apply(&p))
}

/// The normalized strand-4 curve `γ` in `ℂ ∖ {0, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedPath {
    points: Vec<Complex64>,
    times: Vec<f64>,
    source_samples: usize,
}

impl NormalizedPath {
    /// Wraps an explicit closed polyline (the last point connects back to the first).
    ///
    /// Checks the pole distance, modulus and segment-angle conditions.
    pub fn from_points(points: Vec<Complex64>) -> Result<Self> {
        let n = points.len();
        let times = (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect();
        let path = NormalizedPath {
            points,
            times,
            source_samples: n,
        };
        path.check()?;
        if let Some(k) = (0..n).find(|&k| !segment_is_dense(path.points[k], path.points[(k + 1) % n])) {
            return Err(Error::InvalidParameter(format!(
                "segment {k} subtends more than π/4 at a pole"
            )));
        }
        Ok(path)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// Parameter value of each sample in `[0, 2π)`.
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sample count of the braid this path came from.
    pub fn source_samples(&self) -> usize {
        self.source_samples
    }

    /// Closed segments `(γ_k, γ_{k+1})`, including the wrap-around one.
    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let n = self.points.len();
        (0..n).map(move |k| (self.points[k], self.points[(k + 1) % n]))
    }

    fn check(&self) -> Result<()> {
        for (k, z) in self.points.iter().enumerate() {
            check_point(k, *z)?;
        }
        Ok(())
    }
}

fn check_point(sample: usize, z: Complex64) -> Result<()> {
    let modulus = z.norm();
    if !(modulus <= R_MAX) {
        return Err(Error::Escape { sample, modulus });
    }
    for (pole, at) in [(0u8, 0.0), (1u8, 1.0)] {
        let distance = (z - at).norm();
        if distance < DELTA_POLE {
            return Err(Error::PoleProximity { sample, pole, distance });
        }
    }
    Ok(())
}

fn segment_is_dense(a: Complex64, b: Complex64) -> bool {
    [0.0, 1.0]
        .iter()
        .all(|&pole| ((b - pole) / (a - pole)).arg().abs() < MAX_SEGMENT_ANGLE)
}

fn normalize_config(config: &[RiemannPoint; 4]) -> Result<RiemannPoint> {
    let m = cross_ratio_map(&config[0], &config[1], &config[2])?;
    Ok(m.apply(&config[3]))
}

fn gamma_at(f: &SphericalBraid, t: f64, sample: usize) -> Result<Complex64> {
    gamma_of(&f.at_time(t), sample)
}

fn gamma_of(config: &[RiemannPoint; 4], sample: usize) -> Result<Complex64> {
    let p = normalize_config(config)?;
    let z = p.as_complex().ok_or(Error::Escape {
        sample,
        modulus: f64::INFINITY,
    })?;
    check_point(sample, z)?;
    Ok(z)
}

/// `F(f)`: all four strands pushed through the per-sample cross-ratio map.
pub fn normalized_braid(f: &SphericalBraid) -> Result<SphericalBraid> {
    let maps = (0..f.len())
        .map(|k| {
            let cfg = f.configuration(k);
            cross_ratio_map(&cfg[0], &cfg[1], &cfg[2])
        })
        .collect::<Result<Vec<_>>>()?;
    f.map_points(|_, k, p| maps[k].apply(&p))
}

/// Normalizes `f` and returns strand 4 of `F(f)` as a closed curve.
///
/// Segments subtending [`MAX_SEGMENT_ANGLE`] or more at 0 or 1 are split by
/// re-evaluating the normalization at interpolated source-strand positions,
/// recursively, until every segment passes.
pub fn normalize(f: &SphericalBraid) -> Result<NormalizedPath> {
    let n = f.len();
    let limit = MAX_DENSIFICATION * n;
    let step = 2.0 * PI / n as f64;
    let base: Vec<Complex64> = (0..n)
        .map(|k| gamma_of(&f.configuration(k), k))
        .collect::<Result<_>>()?;

    let mut points = Vec::with_capacity(n);
    let mut times = Vec::with_capacity(n);
    for k in 0..n {
        let (t0, t1) = (step * k as f64, step * (k + 1) as f64);
        let (a, b) = (base[k], base[(k + 1) % n]);
        points.push(a);
        times.push(t0);
        refine(f, (t0, a), (t1, b), k, &mut points, &mut times, limit)?;
    }
    Ok(NormalizedPath {
        points,
        times,
        source_samples: n,
    })
}

/// Appends the interior points needed between `a` and `b` (exclusive).
fn refine(
    f: &SphericalBraid,
    (t0, a): (f64, Complex64),
    (t1, b): (f64, Complex64),
    sample: usize,
    points: &mut Vec<Complex64>,
    times: &mut Vec<f64>,
    limit: usize,
) -> Result<()> {
    if segment_is_dense(a, b) {
        return Ok(());
    }
    if points.len() >= limit {
        return Err(Error::DensificationLimit { limit });
    }
    let tm = 0.5 * (t0 + t1);
    let m = gamma_at(f, tm, sample)?;
    refine(f, (t0, a), (tm, m), sample, points, times, limit)?;
    points.push(m);
    times.push(tm);
    refine(f, (tm, m), (t1, b), sample, points, times, limit)
}
