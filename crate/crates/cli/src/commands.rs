use std::collections::BTreeMap;
use std::fs;

use affine_schur::combinatorics::{compositions, enumerate_multisegments, partitions, Composition, Multisegment, Partition, SegmentSpec};
use affine_schur::drinfeld::{g_functor_check, pa, pa_inverse, DominantTuple};
use affine_schur::scalar::{Field, QuantumParam};
use affine_schur::schur_functor::{predicted_dimension, pseudo_hw_report, schur_image, MAX_SCHUR_RANK};
use affine_schur::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{exit, suites, Cli, Command, Sizes};

/// Centers used when no `--grid` file is given.
pub const DEFAULT_GRID: [&str; 3] = ["2", "3*v", "5*v^-1"];

/// Largest `r` for enumerations and tensor-window suites.
pub const MAX_ENUM_RANK: usize = 6;

#[derive(Deserialize, Debug)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum Input {
    Multisegment(Vec<SegmentSpec>),
    Tuple(Vec<Vec<String>>),
}

fn read_input(arg: &str) -> Result<Input> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("input does not match the schema: {e}")))
}

pub fn read_grid<F: Field>(sizes: &Sizes, q: &QuantumParam<F>) -> Result<(Vec<String>, Vec<F>)> {
    let texts: Vec<String> = match &sizes.grid {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("grid does not match the schema: {e}")))?
        }
        None => DEFAULT_GRID.iter().map(|s| s.to_string()).collect(),
    };
    let values = texts.iter().map(|t| q.parse(t)).collect::<Result<Vec<F>>>()?;
    if values.iter().any(Field::is_zero) {
        return Err(Error::InvalidInput("grid centers must be nonzero".into()));
    }
    Ok((texts, values))
}

pub fn check_rank(r: usize, limit: usize) -> Result<()> {
    if r > limit {
        return Err(Error::Resource(format!("r = {r} exceeds the bound r <= {limit}")));
    }
    Ok(())
}

pub fn run<F: Field>(cli: &Cli, q: &QuantumParam<F>, v: &str) -> Result<u8> {
    let (report, code) = match &cli.command {
        Command::Dmap { sizes, input } => dmap(sizes, input, q, v)?,
        Command::Dims { sizes, input } => dims(sizes, input, q, v)?,
        Command::Enum { sizes } => enumerate(sizes, q, v)?,
        Command::Verify { suite, sizes } => suites::verify(*suite, sizes, cli.seed, q, v)?,
    };
    if let Some(path) = &cli.out {
        let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
        fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    }
    if cli.json {
        println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    } else {
        print!("{}", summary(&report));
    }
    Ok(code)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

#[derive(Serialize)]
struct DmapReport {
    direction: &'static str,
    n: usize,
    r: usize,
    v: String,
    multisegment: Vec<SegmentSpec>,
    tuple: Vec<Vec<String>>,
    degrees: Composition,
    dominant: bool,
    round_trip: bool,
}

fn dmap<F: Field>(sizes: &Sizes, input: &str, q: &QuantumParam<F>, v: &str) -> Result<(Value, u8)> {
    let n = sizes.n;
    if n == 0 {
        return Err(Error::InvalidInput("--n must be positive".into()));
    }
    let report = match read_input(input)? {
        Input::Multisegment(spec) => {
            let s = Multisegment::from_spec(&spec, q)?;
            let r = expect_rank(sizes, s.size())?;
            let t = pa(n, r, &s, q)?;
            let back = pa_inverse(n, r, &t, q)?;
            DmapReport {
                direction: "forward",
                n,
                r,
                v: v.into(),
                multisegment: s.to_spec(),
                tuple: t.to_spec(),
                degrees: t.degrees(),
                dominant: t.is_dominant(q),
                round_trip: back == s,
            }
        }
        Input::Tuple(spec) => {
            let t = DominantTuple::from_spec(&spec, q)?;
            let r = expect_rank(sizes, t.degree())?;
            let s = pa_inverse(n, r, &t, q)?;
            let back = pa(n, r, &s, q)?;
            DmapReport {
                direction: "inverse",
                n,
                r,
                v: v.into(),
                multisegment: s.to_spec(),
                tuple: t.to_spec(),
                degrees: t.degrees(),
                dominant: t.is_dominant(q),
                round_trip: back == t,
            }
        }
    };
    let code = if report.round_trip { exit::OK } else { exit::CHECK_FAILED };
    Ok((to_value(&report), code))
}

fn expect_rank(sizes: &Sizes, actual: usize) -> Result<usize> {
    match sizes.r {
        Some(r) if r != actual => Err(Error::InvalidInput(format!("--r {r} does not match the input size {actual}"))),
        _ => Ok(actual),
    }
}

#[derive(Serialize)]
struct WeightDim {
    weight: Composition,
    dim: usize,
}

fn weight_list(m: BTreeMap<Composition, usize>) -> Vec<WeightDim> {
    m.into_iter().map(|(weight, dim)| WeightDim { weight, dim }).collect()
}

#[derive(Serialize)]
struct GProjectionReport {
    #[serde(rename = "N")]
    big_n: usize,
    projected_weights: Vec<WeightDim>,
    target_weights: Vec<WeightDim>,
    weights_equal: bool,
    subspace_equal: bool,
    actions_equal: bool,
    idempotent: bool,
    commutes: bool,
    tilde_compatible: bool,
    passed: bool,
}

#[derive(Serialize)]
struct DimsReport {
    n: usize,
    r: usize,
    v: String,
    multisegment: Vec<SegmentSpec>,
    mu: Partition,
    dimension: usize,
    predicted_dimension: usize,
    weights: Vec<WeightDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hw_weight: Option<Composition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hw_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_weight: Option<Composition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    central_series: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_product: Option<Vec<String>>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_projection: Option<GProjectionReport>,
}

fn strings<F: Field>(xs: &[F]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn dims<F: Field>(sizes: &Sizes, input: &str, q: &QuantumParam<F>, v: &str) -> Result<(Value, u8)> {
    let n = sizes.n;
    if n == 0 {
        return Err(Error::InvalidInput("--n must be positive".into()));
    }
    let Input::Multisegment(spec) = read_input(input)? else {
        return Err(Error::InvalidInput("dims expects {\"multisegment\": [...]}".into()));
    };
    let s = Multisegment::from_spec(&spec, q)?;
    let r = expect_rank(sizes, s.size())?;
    check_rank(r, MAX_SCHUR_RANK)?;
    let w = schur_image(n, &s, q, sizes.tmax)?;
    let mut report = DimsReport {
        n,
        r,
        v: v.into(),
        multisegment: s.to_spec(),
        mu: s.wp(),
        dimension: w.dim(),
        predicted_dimension: if s.is_in_srn(n) { predicted_dimension(n, s.wp().parts()) } else { 0 },
        weights: weight_list(w.weight_dimension_report()),
        hw_weight: None,
        hw_dim: None,
        k_weight: None,
        central_series: None,
        expected_product: None,
        matches: None,
        g_projection: None,
    };
    let mut ok = report.dimension == report.predicted_dimension;
    if w.dim() > 0 {
        let hw = pseudo_hw_report(&w, &s, sizes.tmax)?;
        ok &= hw.matches;
        report.hw_weight = Some(hw.weight);
        report.hw_dim = Some(hw.hw_dim);
        report.k_weight = hw.k_weight;
        report.central_series = Some(strings(&hw.central_series));
        report.expected_product = Some(strings(&hw.expected_product));
        report.matches = Some(hw.matches);
    }
    if let Some(big_n) = sizes.big_n.filter(|&m| m != n) {
        if big_n < n {
            return Err(Error::InvalidInput(format!("--N {big_n} must be at least --n {n}")));
        }
        let g = g_functor_check(big_n, n, &s, q, sizes.tmax)?;
        ok &= g.passed();
        report.g_projection = Some(GProjectionReport {
            big_n,
            weights_equal: g.projected_weights == g.target_weights,
            passed: g.passed(),
            projected_weights: weight_list(g.projected_weights),
            target_weights: weight_list(g.target_weights),
            subspace_equal: g.subspace_equal,
            actions_equal: g.actions_equal,
            idempotent: g.idempotent,
            commutes: g.commutes,
            tilde_compatible: g.tilde_compatible,
        });
    }
    Ok((to_value(&report), if ok { exit::OK } else { exit::CHECK_FAILED }))
}

#[derive(Serialize)]
struct EnumReport {
    n: usize,
    r: usize,
    v: String,
    grid: Vec<String>,
    compositions: Vec<Composition>,
    partitions: Vec<Partition>,
    multisegments: Vec<Vec<SegmentSpec>>,
    counts: BTreeMap<&'static str, usize>,
}

fn enumerate<F: Field>(sizes: &Sizes, q: &QuantumParam<F>, v: &str) -> Result<(Value, u8)> {
    let n = sizes.n;
    if n == 0 {
        return Err(Error::InvalidInput("--n must be positive".into()));
    }
    let r = sizes.r.unwrap_or(2);
    check_rank(r, MAX_ENUM_RANK)?;
    let (grid, centers) = read_grid(sizes, q)?;
    let comps = compositions(n, r);
    let parts = partitions(r);
    let segs: Vec<Vec<SegmentSpec>> = enumerate_multisegments(&centers, r, Some(n))
        .iter()
        .map(Multisegment::to_spec)
        .collect();
    let counts = BTreeMap::from([
        ("compositions", comps.len()),
        ("partitions", parts.len()),
        ("multisegments", segs.len()),
    ]);
    let report = EnumReport {
        n,
        r,
        v: v.into(),
        grid,
        compositions: comps,
        partitions: parts,
        multisegments: segs,
        counts,
    };
    Ok((to_value(&report), exit::OK))
}

/// Readable rendering of a report: one line per top-level field, checks listed.
fn summary(report: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = report else {
        return format!("{report}\n");
    };
    for (k, v) in map {
        if k == "checks" {
            for c in v.as_array().into_iter().flatten() {
                let status = if c["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} ({} checked)\n", c["name"].as_str().unwrap_or("?"), c["checked"]));
                if !c["counterexample"].is_null() {
                    out.push_str(&format!("  counterexample: {}\n", c["counterexample"]));
                }
            }
        } else {
            out.push_str(&format!("{k}: {v}\n"));
        }
    }
    out
}
