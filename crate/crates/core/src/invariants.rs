//! Linking numbers, the Brunn gate and the Hopf invariant.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::SphericalBraid;
use crate::error::{Error, Result};
use crate::integrate::{
    hopf_byparts, hopf_quadrature, lambda_profile, winding_discrete, winding_quadrature, Pole,
    QuadratureSettings,
};
use crate::mobius::{normalize, NormalizedPath};
use crate::perm::Permutation;
use crate::random::pure_artin_word;
use crate::realize::realize_artin;

/// Gauss–Legendre order used for the `Re ∮ ω₀` cross-check of [`lk`].
pub const LK_QUADRATURE_ORDER: usize = 16;
/// Maximum deviation of the quadrature winding from the discrete one.
pub const LK_ORACLE_TOL: f64 = 1e-6;
/// Raw Hopf values farther than this from an integer are rejected.
pub const SNAP_THRESHOLD: f64 = 0.1;

/// `LK(f) = Lk(f) ⊕ Lk(f̃)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TotalLinking {
    pub lk: i64,
    pub lk_tilde: i64,
}

impl TotalLinking {
    pub fn is_zero(&self) -> bool {
        self.lk == 0 && self.lk_tilde == 0
    }
}

impl std::ops::Add for TotalLinking {
    type Output = TotalLinking;

    fn add(self, rhs: TotalLinking) -> TotalLinking {
        TotalLinking {
            lk: self.lk + rhs.lk,
            lk_tilde: self.lk_tilde + rhs.lk_tilde,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    /// |refined − coarse| of the Hopf quadrature.
    pub convergence_residual: Option<f64>,
    /// Largest pairwise gap between the quadrature and the two one-sided forms.
    pub byparts_residual: Option<f64>,
    /// `(∮ λ₀ dλ₁, −∮ λ₁ dλ₀)`.
    pub byparts: Option<(f64, f64)>,
    /// Samples of the input braid.
    pub source_samples: usize,
    /// Samples of the normalized curve after densification.
    pub path_samples: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub total: TotalLinking,
    pub brunn: bool,
    pub hopf_raw: Option<f64>,
    pub hopf: Option<i64>,
    pub diagnostics: Diagnostics,
}

/// Winding of `γ` about 0, computed both by summed argument increments and
/// by quadrature of `Re ω₀`; the two must agree.
fn lk_of_path(path: &NormalizedPath) -> Result<i64> {
    let discrete = winding_discrete(path, Pole::Zero)?;
    let quadrature = winding_quadrature(path, Pole::Zero, LK_QUADRATURE_ORDER);
    if (quadrature - discrete as f64).abs() > LK_ORACLE_TOL {
        return Err(Error::OracleMismatch { quadrature, discrete });
    }
    Ok(discrete)
}

/// `Lk(f)`: the winding of the normalized strand 4 about 0.
pub fn lk(f: &SphericalBraid) -> Result<i64> {
    lk_of_path(&normalize(f)?)
}

pub fn total_lk(f: &SphericalBraid) -> Result<TotalLinking> {
    Ok(TotalLinking {
        lk: lk(f)?,
        lk_tilde: lk(&f.tilde())?,
    })
}

pub fn is_brunn(f: &SphericalBraid) -> Result<bool> {
    Ok(total_lk(f)?.is_zero())
}

/// Full report with `λ(t_0) = 0`.
pub fn hopf(f: &SphericalBraid, q: &QuadratureSettings) -> Result<InvariantReport> {
    hopf_with_start(f, q, 0.0)
}

/// Full report; both angle profiles start at `start`.
pub fn hopf_with_start(f: &SphericalBraid, q: &QuadratureSettings, start: f64) -> Result<InvariantReport> {
    q.validate()?;
    let path = normalize(f)?;
    let total = TotalLinking {
        lk: lk_of_path(&path)?,
        lk_tilde: lk(&f.tilde())?,
    };
    let lk_tilde = total.lk_tilde;
    let mut diagnostics = Diagnostics {
        source_samples: f.len(),
        path_samples: path.len(),
        ..Default::default()
    };
    let l0 = lambda_profile(&path, Pole::Zero, start)?;
    let l1 = lambda_profile(&path, Pole::One, start)?;
    // Swapping strands 1 and 2 sends γ to 1 − γ, so Lk(f̃) is the winding about 1.
    if l1.winding() != lk_tilde {
        return Err(Error::OracleMismatch {
            quadrature: l1.total(),
            discrete: lk_tilde,
        });
    }
    if !total.is_zero() {
        return Ok(InvariantReport {
            total,
            brunn: false,
            hopf_raw: None,
            hopf: None,
            diagnostics,
        });
    }
    let estimate = hopf_quadrature(&path, &l0, &l1, q)?;
    let (left, right) = hopf_byparts(&path, &l0, &l1, q)?;
    let raw = estimate.value;
    let spread = (raw - left).abs().max((raw - right).abs()).max((left - right).abs());
    if !(spread < 2.0 * q.tol) {
        return Err(Error::ByPartsMismatch {
            quadrature: raw,
            left,
            right,
        });
    }
    let rounded = raw.round();
    if !((raw - rounded).abs() < SNAP_THRESHOLD) {
        return Err(Error::NotIntegral { raw });
    }
    diagnostics.convergence_residual = Some(estimate.residual());
    diagnostics.byparts_residual = Some(spread);
    diagnostics.byparts = Some((left, right));
    Ok(InvariantReport {
        total,
        brunn: true,
        hopf_raw: Some(raw),
        hopf: Some(rounded as i64),
        diagnostics,
    })
}

/// Rounded `H(σ·f)` for every σ, for a braid in the Brunn subgroup.
///
/// The Brunn subgroup is closed under relabeling, so every entry is defined.
pub fn hopf_action(f: &SphericalBraid, q: &QuadratureSettings) -> Result<Vec<(Permutation, i64)>> {
    let perms = Permutation::all();
    par_map(&perms, |s| -> Result<(Permutation, i64)> {
        let r = hopf(&f.act(s), q)?;
        match r.hopf {
            Some(h) => Ok((*s, h)),
            None => Err(Error::BrunnGate {
                w0: r.total.lk,
                w1: r.total.lk_tilde,
            }),
        }
    })
    .into_iter()
    .collect()
}

/// Empirical `Lk(σ·f) = a·Lk(f) + b·Lk(f̃)` for every σ.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformTable {
    rows: Vec<(Permutation, Option<(i64, i64)>)>,
    consistent: bool,
    samples: usize,
}

impl TransformTable {
    /// `(a, b)` for σ, or `None` if no integer fit exists.
    pub fn row(&self, sigma: &Permutation) -> Option<(i64, i64)> {
        self.rows.iter().find(|(s, _)| s == sigma).and_then(|(_, r)| *r)
    }

    pub fn rows(&self) -> &[(Permutation, Option<(i64, i64)>)] {
        &self.rows
    }

    /// True when every σ admitted an exact integer fit.
    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    /// Action on `(Lk(f), Lk(f̃))ᵀ`: rows are the fits of σ and `(1 2)∘σ`.
    pub fn matrix(&self, sigma: &Permutation) -> Option<[[i64; 2]; 2]> {
        let swap = Permutation::transposition(1, 2);
        let (a, b) = self.row(sigma)?;
        let (c, d) = self.row(&swap.compose(sigma))?;
        Some([[a, b], [c, d]])
    }

    /// Checks `M(στ) = M(σ)·M(τ)` for all 24 × 24 pairs; returns the first failing pair.
    pub fn multiplicativity_violation(&self) -> Option<(Permutation, Permutation)> {
        let all = Permutation::all();
        for s in &all {
            for t in &all {
                let ok = match (self.matrix(s), self.matrix(t), self.matrix(&s.compose(t))) {
                    (Some(ms), Some(mt), Some(mst)) => mat_mul(&ms, &mt) == mst,
                    _ => false,
                };
                if !ok {
                    return Some((*s, *t));
                }
            }
        }
        None
    }
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Samples per half-twist for the braids drawn by [`transform_table`].
const TABLE_SAMPLES_PER_GENERATOR: usize = 48;
const TABLE_ATTEMPTS: usize = 8;

/// Determines the transformation table from `sample_count` random pure braids.
pub fn transform_table(sample_count: usize, seed: u64) -> Result<TransformTable> {
    if sample_count < 4 {
        return Err(Error::InvalidParameter(format!(
            "transform_table needs at least 4 samples, got {sample_count}"
        )));
    }
    let perms = Permutation::all();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TABLE_ATTEMPTS {
        let words: Vec<_> = (0..sample_count)
            .map(|_| {
                let len = rng.gen_range(1..=6);
                pure_artin_word(&mut rng, len)
            })
            .collect();
        // values[i][p] = Lk(perms[p] · f_i)
        let values: Vec<Vec<i64>> = par_map(&words, |w| -> Result<Vec<i64>> {
            let f = realize_artin(w, TABLE_SAMPLES_PER_GENERATOR)?;
            perms.iter().map(|s| lk(&f.act(s))).collect()
        })
        .into_iter()
        .collect::<Result<_>>()?;

        let identity = perms.iter().position(|p| *p == Permutation::IDENTITY).unwrap();
        let swap = perms
            .iter()
            .position(|p| *p == Permutation::transposition(1, 2))
            .unwrap();
        let xs: Vec<(f64, f64)> = values
            .iter()
            .map(|v| (v[identity] as f64, v[swap] as f64))
            .collect();
        let sxx: f64 = xs.iter().map(|(x, _)| x * x).sum();
        let sxy: f64 = xs.iter().map(|(x, y)| x * y).sum();
        let syy: f64 = xs.iter().map(|(_, y)| y * y).sum();
        let det = sxx * syy - sxy * sxy;
        if det.abs() < 0.5 {
            continue;
        }
        let mut consistent = true;
        let rows = perms
            .iter()
            .enumerate()
            .map(|(p, sigma)| {
                let sxv: f64 = xs.iter().zip(&values).map(|((x, _), v)| x * v[p] as f64).sum();
                let syv: f64 = xs.iter().zip(&values).map(|((_, y), v)| y * v[p] as f64).sum();
                let a = ((syy * sxv - sxy * syv) / det).round() as i64;
                let b = ((sxx * syv - sxy * sxv) / det).round() as i64;
                let exact = values
                    .iter()
                    .all(|v| a * v[identity] + b * v[swap] == v[p]);
                if !exact {
                    consistent = false;
                }
                (*sigma, exact.then_some((a, b)))
            })
            .collect();
        return Ok(TransformTable {
            rows,
            consistent,
            samples: sample_count,
        });
    }
    Err(Error::DegenerateSample(format!(
        "linking pairs of {TABLE_ATTEMPTS} random samples never spanned the plane"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::RiemannPoint;
    use crate::realize::realize_loop;
    use crate::word::parse_loop;
    use num_complex::Complex64;
    use std::f64::consts::TAU;

    fn constant() -> SphericalBraid {
        SphericalBraid::constant(
            [RiemannPoint::ZERO, RiemannPoint::ONE, RiemannPoint::Infinity, RiemannPoint::finite(2.0, 0.0).unwrap()],
            16,
        )
        .unwrap()
    }

    fn circle_about_zero() -> SphericalBraid {
        let n = 128;
        let s4 = (0..n)
            .map(|k| RiemannPoint::Finite(Complex64::from_polar(0.5, TAU * k as f64 / n as f64)))
            .collect();
        SphericalBraid::new(vec![
            vec![RiemannPoint::ZERO; n],
            vec![RiemannPoint::ONE; n],
            vec![RiemannPoint::Infinity; n],
            s4,
        ])
        .unwrap()
    }

    fn loop_braid(text: &str) -> SphericalBraid {
        realize_loop(&parse_loop(text).unwrap(), 128).unwrap()
    }

    #[test]
    fn lk_examples() {
        assert_eq!(lk(&constant()).unwrap(), 0);
        assert_eq!(lk(&circle_about_zero()).unwrap(), 1);
        assert_eq!(lk(&loop_braid("x^3 y^-2")).unwrap(), 3);
    }

    #[test]
    fn total_lk_examples() {
        assert_eq!(total_lk(&circle_about_zero()).unwrap(), TotalLinking { lk: 1, lk_tilde: 0 });
        assert_eq!(total_lk(&loop_braid("[x,y]")).unwrap(), TotalLinking::default());
        assert_eq!(total_lk(&loop_braid("x^3 y^-2")).unwrap(), TotalLinking { lk: 3, lk_tilde: -2 });
    }

    #[test]
    fn brunn_gate() {
        assert!(is_brunn(&loop_braid("[x,y]")).unwrap());
        assert!(!is_brunn(&loop_braid("x")).unwrap());
        assert!(is_brunn(&constant()).unwrap());
        let r = hopf(&loop_braid("x"), &QuadratureSettings::default()).unwrap();
        assert!(!r.brunn && r.hopf.is_none() && r.hopf_raw.is_none());
    }

    #[test]
    fn hopf_examples() {
        let q = QuadratureSettings::default();
        assert_eq!(hopf(&loop_braid("[x,y]"), &q).unwrap().hopf, Some(1));
        assert_eq!(hopf(&loop_braid("[x,y]^3"), &q).unwrap().hopf, Some(3));
        assert_eq!(hopf(&loop_braid("[y,x]"), &q).unwrap().hopf, Some(-1));
        let c = hopf(&constant(), &q).unwrap();
        assert_eq!(c.hopf, Some(0));
        assert_eq!(c.hopf_raw, Some(0.0));
    }

    #[test]
    fn hopf_is_invariant_under_klein_four() {
        let q = QuadratureSettings::default();
        let f = loop_braid("[x,y]^2 [x,Y]");
        let h = hopf(&f, &q).unwrap().hopf.unwrap();
        for (s, hs) in hopf_action(&f, &q).unwrap() {
            if s.is_klein() {
                assert_eq!(hs, h, "{s}");
            }
        }
        assert!(hopf_action(&loop_braid("x"), &q).is_err());
    }

    #[test]
    fn matrix_product() {
        let a = [[1, 2], [3, 4]];
        let b = [[0, 1], [1, 0]];
        assert_eq!(mat_mul(&a, &b), [[2, 1], [4, 3]]);
    }

    #[test]
    fn table_rejects_tiny_sample() {
        assert!(transform_table(3, 0).is_err());
    }
}
