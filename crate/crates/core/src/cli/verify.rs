//! Seeded property sweeps behind `braidlink verify`.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::SphericalBraid;
use crate::error::Result;
use crate::integrate::{winding_discrete, winding_quadrature, Pole, QuadratureSettings};
use crate::invariants::{
    hopf, hopf_action, par_map, total_lk, transform_table, InvariantReport, LK_ORACLE_TOL, LK_QUADRATURE_ORDER,
};
use crate::mobius::normalize;
use crate::perm::Permutation;
use crate::perturb::reparametrize;
use crate::random::{balanced_loop_word, pure_artin_word};
use crate::realize::{realize_artin, realize_loop};
use crate::word::LoopWord;

use super::{report::round_sig12, EXIT_OK, EXIT_VERIFY_FAILED};

const ARTIN_SAMPLES: usize = 16;
const LOOP_SAMPLES: usize = 64;
const CONVERGENCE_SAMPLES: usize = 128;
const INTEGRALITY_TOL: f64 = 1e-3;
const BYPARTS_TOL: f64 = 2e-4;
const TABLE_SAMPLES: usize = 12;
const ACTION_CASES: usize = 4;

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub case: usize,
    pub input: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub max_residual: f64,
    pub first_failure: Option<Counterexample>,
}

impl SuiteSummary {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// Outcome of one case: its residual, or a failure description.
type Case = std::result::Result<f64, (String, Option<f64>)>;

fn summarize(name: &'static str, inputs: &[String], cases: Vec<Case>) -> SuiteSummary {
    let mut s = SuiteSummary {
        name,
        passed: 0,
        total: cases.len(),
        max_residual: 0.0,
        first_failure: None,
    };
    for (i, c) in cases.into_iter().enumerate() {
        match c {
            Ok(r) => {
                s.passed += 1;
                s.max_residual = s.max_residual.max(r);
            }
            Err((detail, residual)) => {
                if let Some(r) = residual {
                    s.max_residual = s.max_residual.max(r);
                }
                if s.first_failure.is_none() {
                    s.first_failure = Some(Counterexample {
                        suite: name,
                        case: i,
                        input: inputs[i].clone(),
                        detail,
                        residual: residual.map(round_sig12),
                    });
                }
            }
        }
    }
    s
}

fn err_case(e: crate::error::Error) -> (String, Option<f64>) {
    (e.to_string(), None)
}

fn suite_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn hopf_of(f: &SphericalBraid) -> Result<(InvariantReport, i64, f64)> {
    let r = hopf(f, &QuadratureSettings::default())?;
    let h = r.hopf.ok_or(crate::error::Error::BrunnGate {
        w0: r.total.lk,
        w1: r.total.lk_tilde,
    })?;
    let raw = r.hopf_raw.unwrap_or(h as f64);
    Ok((r, h, raw))
}

fn loop_words(rng: &mut ChaCha8Rng, count: usize, max_len: usize) -> Vec<LoopWord> {
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            balanced_loop_word(rng, len)
        })
        .collect()
}

fn lk_oracle(count: usize, seed: u64) -> SuiteSummary {
    let mut rng = suite_rng(seed, 1);
    let pairs: Vec<_> = (0..count)
        .map(|_| {
            let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            (pure_artin_word(&mut rng, m), pure_artin_word(&mut rng, n))
        })
        .collect();
    let inputs: Vec<String> = pairs.iter().map(|(a, b)| format!("{a} | {b}")).collect();
    let cases = par_map(&pairs, |(a, b)| -> Case {
        let f = realize_artin(a, ARTIN_SAMPLES).map_err(err_case)?;
        let g = realize_artin(b, ARTIN_SAMPLES).map_err(err_case)?;
        let mut worst: f64 = 0.0;
        for h in [&f, &f.tilde()] {
            let path = normalize(h).map_err(err_case)?;
            let d = winding_discrete(&path, Pole::Zero).map_err(err_case)?;
            let q = winding_quadrature(&path, Pole::Zero, LK_QUADRATURE_ORDER);
            let r = (q - d as f64).abs();
            worst = worst.max(r);
            if r > LK_ORACLE_TOL {
                return Err((format!("quadrature winding {q} vs discrete {d}"), Some(r)));
            }
        }
        let fg = f.compose(&g).map_err(err_case)?;
        let (lf, lg, lfg) = (
            total_lk(&f).map_err(err_case)?,
            total_lk(&g).map_err(err_case)?,
            total_lk(&fg).map_err(err_case)?,
        );
        if lfg != lf + lg {
            return Err((format!("LK(fg) = {lfg:?}, LK(f) + LK(g) = {:?}", lf + lg), Some(worst)));
        }
        Ok(worst)
    });
    summarize("lk-oracle", &inputs, cases)
}

fn integrality_and_byparts(count: usize, seed: u64) -> (SuiteSummary, SuiteSummary) {
    let mut rng = suite_rng(seed, 2);
    let words = loop_words(&mut rng, count, 10);
    let inputs: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let results = par_map(&words, |w| realize_loop(w, LOOP_SAMPLES).and_then(|f| hopf_of(&f)));
    let integrality = results
        .iter()
        .map(|r| match r {
            Ok((_, h, raw)) => {
                let d = (raw - *h as f64).abs();
                if d < INTEGRALITY_TOL {
                    Ok(d)
                } else {
                    Err((format!("raw {raw} is not within {INTEGRALITY_TOL} of {h}"), Some(d)))
                }
            }
            Err(e) => Err((e.to_string(), None)),
        })
        .collect();
    let byparts = results
        .iter()
        .map(|r| match r {
            Ok((rep, _, raw)) => {
                let d = rep.diagnostics.byparts_residual.unwrap_or(0.0);
                if d < BYPARTS_TOL {
                    Ok(d)
                } else {
                    Err((
                        format!("quadrature {raw} vs one-sided forms {:?}", rep.diagnostics.byparts),
                        Some(d),
                    ))
                }
            }
            Err(e) => Err((e.to_string(), None)),
        })
        .collect();
    (
        summarize("integrality", &inputs, integrality),
        summarize("by-parts", &inputs, byparts),
    )
}

fn homomorphism(count: usize, seed: u64) -> SuiteSummary {
    let mut rng = suite_rng(seed, 3);
    let pairs: Vec<(LoopWord, LoopWord)> = (0..count)
        .map(|_| {
            let a = loop_words(&mut rng, 1, 8).remove(0);
            let b = loop_words(&mut rng, 1, 8).remove(0);
            (a, b)
        })
        .collect();
    let inputs: Vec<String> = pairs.iter().map(|(a, b)| format!("{a} | {b}")).collect();
    let cases = par_map(&pairs, |(a, b)| -> Case {
        let f = realize_loop(a, LOOP_SAMPLES).map_err(err_case)?;
        let g = realize_loop(b, LOOP_SAMPLES).map_err(err_case)?;
        let (_, hf, rf) = hopf_of(&f).map_err(err_case)?;
        let (_, hg, rg) = hopf_of(&g).map_err(err_case)?;
        let (_, hfg, rfg) = hopf_of(&f.compose(&g).map_err(err_case)?).map_err(err_case)?;
        let (_, hinv, rinv) = hopf_of(&f.inverse()).map_err(err_case)?;
        let r = (rfg - rf - rg).abs().max((rinv + rf).abs());
        if hfg != hf + hg {
            return Err((format!("H(fg) = {hfg}, H(f) + H(g) = {}", hf + hg), Some(r)));
        }
        if hinv != -hf {
            return Err((format!("H(f⁻¹) = {hinv}, H(f) = {hf}"), Some(r)));
        }
        Ok(r)
    });
    summarize("homomorphism", &inputs, cases)
}

/// Largest of the Gauss–Legendre refinement gap, the change under doubling
/// the sample count and the change under a random reparametrization.
fn convergence(count: usize, seed: u64, tol: f64) -> SuiteSummary {
    let mut rng = suite_rng(seed, 4);
    let words = loop_words(&mut rng, count, 8);
    let seeds: Vec<u64> = words.iter().map(|_| rng.gen()).collect();
    let inputs: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let jobs: Vec<_> = words.iter().zip(&seeds).collect();
    let cases = par_map(&jobs, |(w, s)| -> Case {
        let f = realize_loop(w, CONVERGENCE_SAMPLES).map_err(err_case)?;
        let f2 = realize_loop(w, 2 * CONVERGENCE_SAMPLES).map_err(err_case)?;
        let g = reparametrize(&f2, &mut ChaCha8Rng::seed_from_u64(**s)).map_err(err_case)?;
        let (rep, _, raw) = hopf_of(&f).map_err(err_case)?;
        let (_, _, raw2) = hopf_of(&f2).map_err(err_case)?;
        let (_, _, rawg) = hopf_of(&g).map_err(err_case)?;
        let r = rep
            .diagnostics
            .convergence_residual
            .unwrap_or(0.0)
            .max((raw2 - raw).abs())
            .max((rawg - raw2).abs());
        if r < tol {
            Ok(r)
        } else {
            Err((format!("residual exceeds tolerance {tol}"), Some(r)))
        }
    });
    summarize("convergence", &inputs, cases)
}

fn table_suite(seed: u64) -> SuiteSummary {
    let inputs = vec![format!("{TABLE_SAMPLES} pure braids, seed {seed}")];
    let case = (|| -> Case {
        let t = transform_table(TABLE_SAMPLES, seed).map_err(err_case)?;
        let expect = |s: Permutation, row: (i64, i64)| -> Case {
            match t.row(&s) {
                Some(r) if r == row => Ok(0.0),
                other => Err((format!("row of {s} is {other:?}, expected {row:?}"), None)),
            }
        };
        expect(Permutation::IDENTITY, (1, 0))?;
        expect(Permutation::transposition(1, 2), (0, 1))?;
        for s in crate::perm::klein_four() {
            expect(s, (1, 0))?;
        }
        if let Some((s, u)) = t.multiplicativity_violation() {
            return Err((format!("M({s}·{u}) ≠ M({s})·M({u})"), None));
        }
        Ok(0.0)
    })();
    summarize("table", &inputs, vec![case])
}

/// `H(σ·f) = sign(σ)·H(f)` for all σ, which includes invariance under V₄.
fn action(count: usize, seed: u64) -> SuiteSummary {
    let mut rng = suite_rng(seed, 5);
    let words = loop_words(&mut rng, count.min(ACTION_CASES), 6);
    let inputs: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let cases = words
        .iter()
        .map(|w| -> Case {
            let f = realize_loop(w, LOOP_SAMPLES).map_err(err_case)?;
            let (_, h, _) = hopf_of(&f).map_err(err_case)?;
            for (s, hs) in hopf_action(&f, &QuadratureSettings::default()).map_err(err_case)? {
                let expected = s.sign() as i64 * h;
                if hs != expected {
                    return Err((format!("H({s}·f) = {hs}, expected {expected}"), None));
                }
            }
            Ok(0.0)
        })
        .collect();
    summarize("action", &inputs, cases)
}

pub fn run_suites(count: usize, seed: u64, tol: f64) -> Vec<SuiteSummary> {
    let (integrality, byparts) = integrality_and_byparts(count, seed);
    vec![
        lk_oracle(count, seed),
        integrality,
        byparts,
        homomorphism(count, seed),
        convergence(count, seed, tol),
        table_suite(seed),
        action(count, seed),
    ]
}

pub fn run(count: usize, seed: u64, tol: f64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !(tol > 0.0 && tol.is_finite()) {
        let _ = writeln!(err, r#"{{"error":"validation","message":"tol must be positive, got {tol}","exit_code":2}}"#);
        return super::EXIT_VALIDATION;
    }
    let suites = run_suites(count, seed, tol);
    for s in &suites {
        let _ = writeln!(
            out,
            "{:<13} {:>4}/{:<4} {}  max residual {:.3e}",
            s.name,
            s.passed,
            s.total,
            if s.ok() { "pass" } else { "FAIL" },
            s.max_residual
        );
    }
    match suites.iter().find_map(|s| s.first_failure.as_ref()) {
        None => EXIT_OK,
        Some(c) => {
            let _ = writeln!(err, "{}", serde_json::to_string(c).expect("counterexample serializes"));
            EXIT_VERIFY_FAILED
        }
    }
}
