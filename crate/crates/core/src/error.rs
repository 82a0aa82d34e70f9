use thiserror::Error;

use crate::perm::Permutation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("exponent overflow at offset {offset}")]
    ExponentOverflow { offset: usize },
    #[error("braid word is not pure: induced permutation {permutation}")]
    NotPure { permutation: Permutation },

    #[error("expected 4 strands, got {0}")]
    StrandCount(usize),
    #[error("strands have unequal sample counts {0:?}")]
    UnequalStrands(Vec<usize>),
    #[error("{0} samples per strand, at least 8 required")]
    TooFewSamples(usize),
    #[error("non-finite coordinate at strand {strand}, sample {sample}")]
    NonFinite { strand: usize, sample: usize },
    #[error("strands {i} and {j} collide at sample {sample} (chordal distance {distance:e})")]
    Collision {
        sample: usize,
        i: usize,
        j: usize,
        distance: f64,
    },
    #[error("base configurations differ at strand {strand}")]
    BaseMismatch { strand: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("points are not pairwise distinct (chordal distance {distance:e})")]
    CoincidentPoints { distance: f64 },
    #[error("degenerate Möbius map (|ad - bc| = {det:e})")]
    DegenerateMap { det: f64 },
    #[error("normalized curve passes within {distance:e} of pole {pole} at sample {sample}")]
    PoleProximity {
        sample: usize,
        pole: u8,
        distance: f64,
    },
    #[error("normalized curve escapes to |z| = {modulus:e} at sample {sample}")]
    Escape { sample: usize, modulus: f64 },
    #[error("densification needs more than {limit} samples")]
    DensificationLimit { limit: usize },

    #[error("winding sum {value} about pole {pole} is not an integer")]
    BranchDensity { pole: u8, value: f64 },
    #[error("winding oracles disagree: quadrature {quadrature}, discrete {discrete}")]
    OracleMismatch { quadrature: f64, discrete: i64 },
    #[error("braid is not in the Brunn subgroup (windings {w0}, {w1})")]
    BrunnGate { w0: i64, w1: i64 },
    #[error("quadrature did not converge: {coarse} vs {fine}")]
    NonConvergence { coarse: f64, fine: f64 },
    #[error("Hopf estimates disagree: quadrature {quadrature}, by parts ({left}, {right})")]
    ByPartsMismatch {
        quadrature: f64,
        left: f64,
        right: f64,
    },
    #[error("raw Hopf value {raw} is not close to an integer")]
    NotIntegral { raw: f64 },
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("document error: {0}")]
    Document(String),
}

impl Error {
    /// Numerical failures of the quadrature layer, as opposed to bad input.
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            Error::BranchDensity { .. }
                | Error::OracleMismatch { .. }
                | Error::NonConvergence { .. }
                | Error::ByPartsMismatch { .. }
                | Error::NotIntegral { .. }
        )
    }
}
