use affine_schur::combinatorics::{enumerate_multisegments, partitions, Permutation};
use affine_schur::drinfeld::{g_functor_check, pa, pa_inverse};
use affine_schur::hecke::{affine_mul, ideal_i, ideal_j, AffineHeckeElem, MAX_HECKE_RANK};
use affine_schur::scalar::{Field, QuantumParam};
use affine_schur::schur_functor::{factorization_for, pseudo_hw_report, schur_image, MAX_SCHUR_RANK};
use affine_schur::tensor_space::{CheckReport, TensorSpace};
use affine_schur::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{check_rank, read_grid, MAX_ENUM_RANK};
use crate::{exit, Sizes, Suite};

/// Largest number of window tensors the relation suites will visit.
pub const MAX_WINDOW_TENSORS: u64 = 200_000;

/// Random products checked for associativity in the Hecke suite.
pub const ASSOCIATIVITY_SAMPLES: usize = 16;

#[derive(Serialize)]
struct Config {
    n: usize,
    r: usize,
    #[serde(rename = "N")]
    big_n: usize,
    tmax: usize,
    window: (i64, i64),
    grid: Vec<String>,
    seed: u64,
    v: String,
}

#[derive(Serialize)]
pub struct Check {
    name: String,
    passed: bool,
    checked: usize,
    counterexample: Option<Value>,
}

impl Check {
    fn new(name: impl Into<String>, checked: usize, counterexample: Option<Value>) -> Self {
        Self { name: name.into(), passed: counterexample.is_none(), checked, counterexample }
    }

    fn from_report(name: &str, rep: &CheckReport) -> Self {
        let ce = rep.violations.first().map(|v| serde_json::to_value(v).expect("violations serialize"));
        Self::new(name, rep.checked, ce)
    }
}

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    config: Config,
    checks: Vec<Check>,
    passed: bool,
}

const ALL: [Suite; 7] = [
    Suite::HeckeRelations,
    Suite::Bimodule,
    Suite::Rogawski,
    Suite::Factorization,
    Suite::Bijection,
    Suite::CentralCharacter,
    Suite::Gfunctor,
];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::HeckeRelations => "hecke-relations",
        Suite::Bimodule => "bimodule",
        Suite::Rogawski => "rogawski",
        Suite::Factorization => "factorization",
        Suite::Bijection => "bijection",
        Suite::CentralCharacter => "central-character",
        Suite::Gfunctor => "gfunctor",
        Suite::All => "all",
    }
}

pub fn verify<F: Field>(suite: Suite, sizes: &Sizes, seed: u64, q: &QuantumParam<F>, v: &str) -> Result<(Value, u8)> {
    let n = sizes.n;
    if n == 0 {
        return Err(Error::InvalidInput("--n must be positive".into()));
    }
    let big_n = sizes.big_n.unwrap_or(n + 1);
    if big_n < n {
        return Err(Error::InvalidInput(format!("--N {big_n} must be at least --n {n}")));
    }
    let (grid_text, grid) = read_grid(sizes, q)?;
    let cfg = Config {
        n,
        r: sizes.r.unwrap_or(2),
        big_n,
        tmax: sizes.tmax,
        window: sizes.window.unwrap_or((-(n as i64), 2 * n as i64)),
        grid: grid_text,
        seed,
        v: v.into(),
    };
    let selected: Vec<Suite> = if suite == Suite::All { ALL.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in selected {
        for mut c in run_suite(s, &cfg, &grid, q)? {
            if suite == Suite::All {
                c.name = format!("{}/{}", suite_name(s), c.name);
            }
            checks.push(c);
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport { suite: suite_name(suite).into(), config: cfg, checks, passed };
    let value = serde_json::to_value(&report).expect("reports serialize");
    Ok((value, if passed { exit::OK } else { exit::CHECK_FAILED }))
}

fn run_suite<F: Field>(suite: Suite, cfg: &Config, grid: &[F], q: &QuantumParam<F>) -> Result<Vec<Check>> {
    let (n, r) = (cfg.n, cfg.r);
    match suite {
        Suite::HeckeRelations => {
            check_window(cfg)?;
            let space = TensorSpace::new(n, r, q.clone());
            let rep = space.hecke_relation_violations(cfg.window.0, cfg.window.1);
            Ok(vec![
                Check::from_report("operator-relations", &rep),
                associativity(r, cfg.seed, q),
            ])
        }
        Suite::Bimodule => {
            check_window(cfg)?;
            let space = TensorSpace::new(n, r, q.clone());
            let (lo, hi) = cfg.window;
            Ok(vec![
                Check::from_report("commutation", &space.commutation_witness(lo, hi, cfg.tmax)),
                Check::from_report("quantum-relations", &space.u_relation_violations(lo, hi, cfg.tmax)),
            ])
        }
        Suite::Rogawski => {
            check_rank(r, MAX_HECKE_RANK)?;
            partitions(r)
                .into_iter()
                .map(|mu| {
                    let mu = mu.as_composition();
                    let (i, j) = (ideal_i(&mu, q)?, ideal_j(&mu, q)?);
                    let ce = (i != j).then(|| json!({"mu": mu, "dim_i": i.dim(), "dim_j": j.dim()}));
                    Ok(Check::new(format!("I=J mu={mu}"), 1, ce))
                })
                .collect()
        }
        Suite::Factorization => {
            check_rank(r, MAX_SCHUR_RANK)?;
            partitions(r)
                .into_iter()
                .map(|mu| {
                    let rep = factorization_for(n, &mu.as_composition(), q)?;
                    let ce = (!rep.passed()).then(|| {
                        json!({
                            "mu": rep.mu, "lhs_dim": rep.lhs_dim, "rhs_dim": rep.rhs_dim,
                            "factor_dims": rep.factor_dims, "subspace_equal": rep.subspace_equal,
                            "matches_y_span": rep.matches_y_span,
                        })
                    });
                    Ok(Check::new(format!("factorization mu={mu}"), 1, ce))
                })
                .collect()
        }
        Suite::Bijection => {
            check_rank(r, MAX_ENUM_RANK)?;
            let mut count = 0;
            let mut ce = None;
            for s in enumerate_multisegments(grid, r, Some(n)) {
                count += 1;
                let t = pa(n, r, &s, q)?;
                let back = pa_inverse(n, r, &t, q)?;
                if back != s || pa(n, r, &back, q)? != t || !t.is_dominant(q) {
                    ce = Some(json!({"multisegment": s.to_spec(), "tuple": t.to_spec()}));
                    break;
                }
            }
            Ok(vec![Check::new("round-trip", count, ce)])
        }
        Suite::CentralCharacter => {
            check_rank(r, MAX_SCHUR_RANK)?;
            let cases = enumerate_multisegments(grid, r, Some(n));
            let (mut hw_ce, mut cc_ce) = (None, None);
            for s in &cases {
                let w = schur_image(n, s, q, cfg.tmax)?;
                let rep = pseudo_hw_report(&w, s, cfg.tmax)?;
                if hw_ce.is_none() && (rep.hw_dim == 0 || rep.k_weight.as_ref() != Some(&rep.weight)) {
                    hw_ce = Some(json!({"multisegment": s.to_spec(), "hw_dim": rep.hw_dim, "k_weight": rep.k_weight}));
                }
                if cc_ce.is_none() && !rep.matches {
                    cc_ce = Some(json!({
                        "multisegment": s.to_spec(),
                        "central_series": strings(&rep.central_series),
                        "expected_product": strings(&rep.expected_product),
                    }));
                }
            }
            Ok(vec![
                Check::new("highest-weight", cases.len(), hw_ce),
                Check::new("central-character", cases.len(), cc_ce),
            ])
        }
        Suite::Gfunctor => {
            check_rank(r, MAX_SCHUR_RANK)?;
            let cases = enumerate_multisegments(grid, r, None);
            let mut ce = None;
            for s in &cases {
                let rep = g_functor_check(cfg.big_n, n, s, q, cfg.tmax)?;
                if !rep.passed() {
                    ce = Some(json!({
                        "multisegment": s.to_spec(),
                        "subspace_equal": rep.subspace_equal,
                        "actions_equal": rep.actions_equal,
                        "idempotent": rep.idempotent,
                        "commutes": rep.commutes,
                        "tilde_compatible": rep.tilde_compatible,
                    }));
                    break;
                }
            }
            Ok(vec![Check::new("g-functor", cases.len(), ce)])
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn strings<F: Field>(xs: &[F]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn check_window(cfg: &Config) -> Result<()> {
    check_rank(cfg.r, MAX_HECKE_RANK)?;
    let width = (cfg.window.1 - cfg.window.0 + 1) as u64;
    match width.checked_pow(cfg.r as u32) {
        Some(k) if k <= MAX_WINDOW_TENSORS => Ok(()),
        _ => Err(Error::Resource(format!(
            "window of width {width} in degree {} exceeds {MAX_WINDOW_TENSORS} tensors",
            cfg.r
        ))),
    }
}

/// `(ab)c = a(bc)` for random sums of monomials `T_w X^λ` with `λ ∈ [−1, 1]^r`.
fn associativity<F: Field>(r: usize, seed: u64, q: &QuantumParam<F>) -> Check {
    let perms = Permutation::all(r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| {
        let mut h = AffineHeckeElem::zero(r);
        for _ in 0..2 {
            let w = perms[rng.gen_range(0..perms.len())].clone();
            let lambda = (0..r).map(|_| rng.gen_range(-1..=1)).collect();
            h = h.add(&AffineHeckeElem::monomial(w, lambda));
        }
        h
    };
    let mut ce = None;
    for _ in 0..ASSOCIATIVITY_SAMPLES {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let lhs = affine_mul(&affine_mul(&a, &b, q), &c, q);
        let rhs = affine_mul(&a, &affine_mul(&b, &c, q), q);
        if lhs != rhs {
            ce = Some(json!({"a": a.to_text(), "b": b.to_text(), "c": c.to_text()}));
            break;
        }
    }
    Check::new("affine-associativity", ASSOCIATIVITY_SAMPLES, ce)
}
