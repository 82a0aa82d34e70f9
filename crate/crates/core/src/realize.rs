//! Geometric realizations of loop words and pure Artin words.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::braid::SphericalBraid;
use crate::error::{Error, Result};
use crate::point::RiemannPoint;
use crate::word::{BraidWord, LoopLetter, LoopWord};

/// Base point of strand 4 in loop realizations.
pub const BASE_POINT: f64 = 2.0;
/// Radius of the loop about 0.
pub const RADIUS_ZERO: f64 = 0.5;
/// Radius of the loop about 1.
pub const RADIUS_ONE: f64 = 0.25;
/// Radius of the circle carrying the four Artin base points.
pub const ARTIN_RADIUS: f64 = 1.0;

/// Minimum `samples_per_letter` accepted by [`realize_loop`].
pub const MIN_SAMPLES_PER_LETTER: usize = 32;
/// Minimum `samples_per_generator` accepted by [`realize_artin`].
pub const MIN_SAMPLES_PER_GENERATOR: usize = 8;

#[derive(Debug, Clone, Copy)]
enum Piece {
    Line { from: Complex64, to: Complex64 },
    /// Arc about `center` from angle `start` sweeping `sweep` radians.
    Arc { center: Complex64, radius: f64, start: f64, sweep: f64 },
}

impl Piece {
    fn length(&self) -> f64 {
        match *self {
            Piece::Line { from, to } => (to - from).norm(),
            Piece::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    fn at(&self, s: f64) -> Complex64 {
        match *self {
            Piece::Line { from, to } => from + (to - from) * s,
            Piece::Arc { center, radius, start, sweep } => center + Complex64::from_polar(radius, start + sweep * s),
        }
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The positive loop for `x` (about 0) or `y` (about 1), starting and ending at 2.
///
/// `x` runs along the real axis, passes over 1 on the upper half of the
/// circle `|z - 1| = ¼`, circles 0 counterclockwise at radius ½ and returns
/// the same way. `y` runs to `1.25` and circles 1 counterclockwise.
fn positive_loop(about_zero: bool) -> Vec<Piece> {
    let one = c(1.0);
    let near = c(1.0 + RADIUS_ONE);
    let base = c(BASE_POINT);
    if about_zero {
        let far = c(1.0 - RADIUS_ONE);
        let touch = c(RADIUS_ZERO);
        vec![
            Piece::Line { from: base, to: near },
            Piece::Arc { center: one, radius: RADIUS_ONE, start: 0.0, sweep: PI },
            Piece::Line { from: far, to: touch },
            Piece::Arc { center: c(0.0), radius: RADIUS_ZERO, start: 0.0, sweep: TAU },
            Piece::Line { from: touch, to: far },
            Piece::Arc { center: one, radius: RADIUS_ONE, start: PI, sweep: -PI },
            Piece::Line { from: near, to: base },
        ]
    } else {
        vec![
            Piece::Line { from: base, to: near },
            Piece::Arc { center: one, radius: RADIUS_ONE, start: 0.0, sweep: TAU },
            Piece::Line { from: near, to: base },
        ]
    }
}

/// Point at arc-length fraction `u` of a piecewise path.
fn along(pieces: &[Piece], u: f64) -> Complex64 {
    let total: f64 = pieces.iter().map(Piece::length).sum();
    let mut remaining = u * total;
    for p in pieces {
        let l = p.length();
        if remaining <= l {
            return p.at(remaining / l);
        }
        remaining -= l;
    }
    pieces.last().map(|p| p.at(1.0)).unwrap_or(c(BASE_POINT))
}

/// `n` samples of one letter's loop, starting at the base point; the
/// closing sample is the next letter's first one.
///
/// Inverse letters are sampled on the reversed parameter so that the
/// sample set of `x⁻¹` is exactly that of `x` in reverse order.
fn letter_samples(letter: LoopLetter, n: usize) -> Vec<Complex64> {
    let (pieces, reversed) = match letter {
        LoopLetter::X => (positive_loop(true), false),
        LoopLetter::XInv => (positive_loop(true), true),
        LoopLetter::Y => (positive_loop(false), false),
        LoopLetter::YInv => (positive_loop(false), true),
    };
    (0..n)
        .map(|k| {
            if k == 0 {
                return c(BASE_POINT);
            }
            let u = k as f64 / n as f64;
            along(&pieces, if reversed { 1.0 - u } else { u })
        })
        .collect()
}

/// Realizes a loop word: strands 1–3 sit at 0, 1, ∞ and strand 4 traces the word from 2.
///
/// The braid has `max(8, len(w)) · samples_per_letter` samples. Each letter
/// receives the same number of samples; any remainder is spent resting at the
/// base point at the end of the loop.
pub fn realize_loop(word: &LoopWord, samples_per_letter: usize) -> Result<SphericalBraid> {
    if samples_per_letter < MIN_SAMPLES_PER_LETTER {
        return Err(Error::InvalidParameter(format!(
            "samples_per_letter must be at least {MIN_SAMPLES_PER_LETTER}, got {samples_per_letter}"
        )));
    }
    let total = word.len().max(8) * samples_per_letter;
    let mut moving: Vec<Complex64> = Vec::with_capacity(total);
    if !word.is_empty() {
        let per_letter = total / word.len();
        for &l in word.letters() {
            moving.extend(letter_samples(l, per_letter));
        }
    }
    moving.resize(total, c(BASE_POINT));
    let strands = vec![
        vec![RiemannPoint::ZERO; total],
        vec![RiemannPoint::ONE; total],
        vec![RiemannPoint::Infinity; total],
        moving.into_iter().map(RiemannPoint::Finite).collect(),
    ];
    SphericalBraid::new(strands)
}

/// Home position of slot `i` (0-based): four points spaced by quarter turns on the unit circle.
pub fn artin_slot(i: usize) -> Complex64 {
    Complex64::from_polar(ARTIN_RADIUS, FRAC_PI_2 * i as f64)
}

/// Realizes a pure Artin word.
///
/// Each half-twist `s_i^{±1}` occupies `samples_per_generator` samples during
/// which the strands in slots `i`, `i+1` rotate by π about their midpoint,
/// counterclockwise for positive exponents. The braid has
/// `max(1, twists) · samples_per_generator` samples.
pub fn realize_artin(word: &BraidWord, samples_per_generator: usize) -> Result<SphericalBraid> {
    if samples_per_generator < MIN_SAMPLES_PER_GENERATOR {
        return Err(Error::InvalidParameter(format!(
            "samples_per_generator must be at least {MIN_SAMPLES_PER_GENERATOR}, got {samples_per_generator}"
        )));
    }
    // occupant[slot] = strand index currently in that slot
    let mut occupant = [0usize, 1, 2, 3];
    let total = word.half_twists().max(1) * samples_per_generator;
    let mut strands: Vec<Vec<RiemannPoint>> = std::array::from_fn::<_, 4, _>(|_| Vec::with_capacity(total)).into();
    for l in word.letters() {
        let a = (l.generator - 1) as usize;
        let b = a + 1;
        let direction = l.exponent.signum() as f64;
        for _ in 0..l.exponent.unsigned_abs() {
            let pa = artin_slot(a);
            let pb = artin_slot(b);
            let mid = (pa + pb) * 0.5;
            for j in 0..samples_per_generator {
                let rot = Complex64::from_polar(1.0, direction * PI * j as f64 / samples_per_generator as f64);
                for (slot, &strand) in occupant.iter().enumerate() {
                    let z = if slot == a {
                        mid + (pa - mid) * rot
                    } else if slot == b {
                        mid + (pb - mid) * rot
                    } else {
                        artin_slot(slot)
                    };
                    strands[strand].push(RiemannPoint::Finite(z));
                }
            }
            occupant.swap(a, b);
        }
    }
    if word.half_twists() == 0 {
        for (i, s) in strands.iter_mut().enumerate() {
            s.resize(total, RiemannPoint::Finite(artin_slot(i)));
        }
    }
    debug_assert_eq!(occupant, [0, 1, 2, 3]);
    SphericalBraid::new(strands)
}
