//! Random reparametrizations, perturbations and Möbius maps for robustness sweeps.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::braid::SphericalBraid;
use crate::error::Result;
use crate::mobius::MobiusMap;
use crate::point::RiemannPoint;

/// Resamples `f` at `φ(t_k)` for a random monotone `φ` of the circle fixing 0.
///
/// `φ(t) = t + a sin t + b sin 2t` with `|a| + 2|b| ≤ 0.6`, so `φ' ≥ 0.4`.
pub fn reparametrize<R: Rng + ?Sized>(f: &SphericalBraid, rng: &mut R) -> Result<SphericalBraid> {
    let a = rng.gen_range(-0.3..0.3);
    let b = rng.gen_range(-0.15..0.15);
    let n = f.len();
    let times: Vec<f64> = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            t + a * t.sin() + b * (2.0 * t).sin()
        })
        .collect();
    f.resample(&times)
}

/// Moves every finite sample by a random offset of modulus at most `max`.
/// Infinite samples stay put. The result is revalidated.
pub fn jitter<R: Rng + ?Sized>(f: &SphericalBraid, rng: &mut R, max: f64) -> Result<SphericalBraid> {
    f.map_points(|_, _, p| match p {
        RiemannPoint::Finite(z) => {
            let r = max * rng.gen::<f64>().sqrt();
            let theta = rng.gen_range(0.0..TAU);
            RiemannPoint::Finite(z + Complex64::from_polar(r, theta))
        }
        RiemannPoint::Infinity => RiemannPoint::Infinity,
    })
}

/// A random Möbius map with coefficients in the unit box and `|ad − bc| ≥ 0.1`.
pub fn random_mobius<R: Rng + ?Sized>(rng: &mut R) -> MobiusMap {
    loop {
        let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let (a, b, cc, d) = (c(), c(), c(), c());
        if (a * d - b * cc).norm() >= 0.1 {
            if let Ok(m) = MobiusMap::new(a, b, cc, d) {
                return m;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::realize_loop;
    use crate::word::parse_loop;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reparametrization_keeps_base_and_count() {
        let f = realize_loop(&parse_loop("[x,y]").unwrap(), 64).unwrap();
        let g = reparametrize(&f, &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
        assert_eq!(g.len(), f.len());
        assert_eq!(g.configuration(0), f.configuration(0));
    }

    #[test]
    fn jitter_is_bounded() {
        let f = realize_loop(&parse_loop("xy").unwrap(), 64).unwrap();
        let g = jitter(&f, &mut ChaCha8Rng::seed_from_u64(5), 1e-3).unwrap();
        for i in 0..4 {
            for k in 0..f.len() {
                match (f.strand(i)[k], g.strand(i)[k]) {
                    (RiemannPoint::Finite(a), RiemannPoint::Finite(b)) => assert!((a - b).norm() <= 1e-3),
                    (a, b) => assert_eq!(a, b),
                }
            }
        }
    }
}
