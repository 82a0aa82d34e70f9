//! Linking numbers and the second-order Hopf invariant of ordered spherical
//! 4-strand braids.
//!
//! A braid is four closed strand curves on the Riemann sphere. A
//! time-dependent Möbius map pins strands 1, 2, 3 at 0, 1, ∞, which turns
//! strand 4 into a closed curve `γ` in `ℂ ∖ {0, 1}`. The linking numbers are
//! the windings of `γ` about 0 and 1; on braids where both vanish, the Hopf
//! invariant is `½ ∮ (λ₀ dλ₁ − λ₁ dλ₀)`, where `λ₀`, `λ₁` are the
//! continuously tracked winding angles of `γ` about 0 and 1 (in turns).
//!
//! ```
//! use braidlink::{hopf, parse_loop, realize_loop, QuadratureSettings};
//!
//! let borromean = realize_loop(&parse_loop("[x,y]").unwrap(), 128).unwrap();
//! let report = hopf(&borromean, &QuadratureSettings::default()).unwrap();
//! assert_eq!(report.hopf, Some(1));
//! ```

// `!(x < tol)` is deliberate: NaN must fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod braid;
pub mod cli;
pub mod error;
pub mod integrate;
pub mod invariants;
pub mod mobius;
pub mod perm;
pub mod perturb;
pub mod point;
pub mod random;
pub mod realize;
pub mod word;

pub use braid::{SphericalBraid, ThreeStrandBraid, DEFAULT_EPS_SEP};
pub use error::{Error, Result};
pub use integrate::{
    hopf_byparts, hopf_quadrature, lambda_profile, winding_discrete, winding_quadrature, HopfEstimate,
    LambdaProfile, Pole, QuadratureSettings,
};
pub use invariants::{
    hopf, hopf_action, hopf_with_start, is_brunn, lk, total_lk, transform_table, Diagnostics, InvariantReport,
    TotalLinking, TransformTable,
};
pub use mobius::{cross_ratio_map, normalize, normalized_braid, transform_braid, MobiusMap, NormalizedPath};
pub use perm::{theta, Permutation, ThetaValue};
pub use point::RiemannPoint;
pub use realize::{realize_artin, realize_loop};
pub use word::{parse_artin, parse_loop, ArtinLetter, BraidWord, LoopLetter, LoopWord};
