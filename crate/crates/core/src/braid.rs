//! Ordered spherical 4-strand braids as sampled strand curves.
//!
//! A braid stores four closed curves on the Riemann sphere, all sampled on the
//! same uniform grid `t_k = 2πk/N`. Sample `N` is sample `0` again, and the
//! curve between samples is the chart interpolation of
//! [`RiemannPoint::lerp`].

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::point::RiemannPoint;

/// Default chordal separation required between strands.
pub const DEFAULT_EPS_SEP: f64 = 1e-6;

/// Minimum number of samples per strand.
pub const MIN_SAMPLES: usize = 8;

/// Chordal tolerance used when matching base configurations in [`SphericalBraid::compose`].
pub const BASE_MATCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalBraid {
    strands: [Vec<RiemannPoint>; 4],
}

impl SphericalBraid {
    /// Builds a braid and validates it at [`DEFAULT_EPS_SEP`].
    pub fn new(strands: Vec<Vec<RiemannPoint>>) -> Result<Self> {
        let braid = Self::from_unchecked(strands)?;
        braid.validate(DEFAULT_EPS_SEP)?;
        Ok(braid)
    }

    /// Structural checks only (strand count, equal lengths, `N >= 8`); no separation check.
    pub fn from_unchecked(strands: Vec<Vec<RiemannPoint>>) -> Result<Self> {
        if strands.len() != 4 {
            return Err(Error::StrandCount(strands.len()));
        }
        let lens: Vec<usize> = strands.iter().map(Vec::len).collect();
        if lens.iter().any(|&l| l != lens[0]) {
            return Err(Error::UnequalStrands(lens));
        }
        if lens[0] < MIN_SAMPLES {
            return Err(Error::TooFewSamples(lens[0]));
        }
        let mut it = strands.into_iter();
        let strands = [
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ];
        Ok(SphericalBraid { strands })
    }

    /// The braid whose strands sit still at the given points.
    pub fn constant(points: [RiemannPoint; 4], samples: usize) -> Result<Self> {
        Self::new(points.iter().map(|&p| vec![p; samples]).collect())
    }

    /// Checks finiteness and pairwise chordal separation `>= eps_sep` at every sample.
    ///
    /// Reports the first violation in `(sample, i, j)` order with 1-based strand labels.
    pub fn validate(&self, eps_sep: f64) -> Result<()> {
        if !(eps_sep > 0.0) {
            return Err(Error::InvalidParameter(format!("eps_sep must be positive, got {eps_sep}")));
        }
        for k in 0..self.len() {
            for (s, strand) in self.strands.iter().enumerate() {
                if !strand[k].is_well_formed() {
                    return Err(Error::NonFinite { strand: s + 1, sample: k });
                }
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let d = self.strands[i][k].chordal_distance(&self.strands[j][k]);
                    if !(d >= eps_sep) {
                        return Err(Error::Collision {
                            sample: k,
                            i: i + 1,
                            j: j + 1,
                            distance: d,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Sample count `N`.
    pub fn len(&self) -> usize {
        self.strands[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn strands(&self) -> &[Vec<RiemannPoint>; 4] {
        &self.strands
    }

    /// Strand `index` (0-based).
    pub fn strand(&self, index: usize) -> &[RiemannPoint] {
        &self.strands[index]
    }

    /// The four points at sample `k` (taken modulo `N`).
    pub fn configuration(&self, k: usize) -> [RiemannPoint; 4] {
        let k = k % self.len();
        [
            self.strands[0][k],
            self.strands[1][k],
            self.strands[2][k],
            self.strands[3][k],
        ]
    }

    /// Strand positions at time `t`, interpolated between the neighbouring samples.
    pub fn at_time(&self, t: f64) -> [RiemannPoint; 4] {
        let n = self.len();
        let u = (t / TAU).rem_euclid(1.0) * n as f64;
        let k = (u.floor() as usize).min(n - 1);
        let frac = u - k as f64;
        let next = (k + 1) % n;
        std::array::from_fn(|i| self.strands[i][k].lerp(&self.strands[i][next], frac))
    }

    /// Concatenation: `self` on the first half of the loop, `other` on the second.
    pub fn compose(&self, other: &SphericalBraid) -> Result<SphericalBraid> {
        for i in 0..4 {
            if self.strands[i][0].chordal_distance(&other.strands[i][0]) > BASE_MATCH_TOL {
                return Err(Error::BaseMismatch { strand: i + 1 });
            }
        }
        let strands = std::array::from_fn(|i| {
            let mut s = Vec::with_capacity(self.len() + other.len());
            s.extend_from_slice(&self.strands[i]);
            s.extend_from_slice(&other.strands[i]);
            s
        });
        Ok(SphericalBraid { strands })
    }

    /// Time reversal, keeping sample 0 fixed.
    pub fn inverse(&self) -> SphericalBraid {
        let n = self.len();
        let strands = std::array::from_fn(|i| {
            (0..n).map(|k| self.strands[i][(n - k) % n]).collect()
        });
        SphericalBraid { strands }
    }

    /// Relabels components: output strand `σ(i)` carries input strand `i`.
    ///
    /// With this convention `act(σ, act(τ, f)) = act(στ, f)`, and `(1 2)` applied
    /// to the constant braid at `(0, 1, ∞, 2)` gives the constant braid at `(1, 0, ∞, 2)`.
    pub fn act(&self, sigma: &Permutation) -> SphericalBraid {
        let inv = sigma.inverse();
        let strands = std::array::from_fn(|j| self.strands[inv.image(j)].clone());
        SphericalBraid { strands }
    }

    /// `f̃`: the action of the transposition `(1 2)`.
    pub fn tilde(&self) -> SphericalBraid {
        self.act(&Permutation::transposition(1, 2))
    }

    /// Drops strand 4.
    pub fn eliminate_last(&self) -> ThreeStrandBraid {
        ThreeStrandBraid {
            strands: [
                self.strands[0].clone(),
                self.strands[1].clone(),
                self.strands[2].clone(),
            ],
        }
    }

    /// Applies `map(strand, sample, point)` to every sample and revalidates.
    pub fn map_points(
        &self,
        mut map: impl FnMut(usize, usize, RiemannPoint) -> RiemannPoint,
    ) -> Result<SphericalBraid> {
        let strands = (0..4)
            .map(|i| {
                self.strands[i]
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| map(i, k, p))
                    .collect()
            })
            .collect();
        SphericalBraid::new(strands)
    }

    /// Resamples all strands at the times `times` (radians, one per output sample).
    pub fn resample(&self, times: &[f64]) -> Result<SphericalBraid> {
        let configs: Vec<[RiemannPoint; 4]> = times.iter().map(|&t| self.at_time(t)).collect();
        let strands = (0..4)
            .map(|i| configs.iter().map(|c| c[i]).collect())
            .collect();
        SphericalBraid::new(strands)
    }
}

/// The three-strand braid left after dropping strand 4.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeStrandBraid {
    strands: [Vec<RiemannPoint>; 3],
}

impl ThreeStrandBraid {
    pub fn strands(&self) -> &[Vec<RiemannPoint>; 3] {
        &self.strands
    }

    pub fn strand_count(&self) -> usize {
        self.strands.len()
    }

    /// True if every strand stays within `tol` (chordal) of `points`.
    pub fn is_constant_at(&self, points: [RiemannPoint; 3], tol: f64) -> bool {
        self.strands
            .iter()
            .zip(points.iter())
            .all(|(s, p)| s.iter().all(|q| q.chordal_distance(p) <= tol))
    }
}
