//! Reproducible verification campaigns: a JSON-configured grid of counting
//! and dynamics cells, incremental CSV output, hypothesis stamps, and
//! least-squares exponent fits. Identical seeds reproduce byte-identical
//! CSV bodies (the trailing elapsed_ms column excepted).

use std::fs::File;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{count_solutions, interval_subgroup_experiment, PointSet};
use crate::dynamics::{
    collision_time, group_bound_value, group_metric, interval_bound_value, interval_metric,
    MapSystem, Metric, SearchMode, SearchOptions,
};
use crate::error::{Error, Result};
use crate::factor::is_absolutely_irreducible;
use crate::ff::FieldContext;
use crate::poly::parse_poly;

pub const COUNTING_CSV_HEADER: &[&str] = &[
    "p",
    "d",
    "delta",
    "H",
    "e",
    "trial_seed",
    "count",
    "bound_value",
    "ratio",
    "error",
    "elapsed_ms",
];

pub const DYNAMICS_CSV_HEADER: &[&str] = &[
    "p",
    "s",
    "degrees",
    "u",
    "N",
    "metric",
    "value",
    "exact",
    "mode",
    "seed",
    "bound_value",
    "ratio",
    "error",
];

/// Least-squares fit of log(count) against log(H).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
    pub points_used: usize,
}

/// Fit the exponent through (H, count) points; counts must be >= 1 (callers
/// exclude and record zero-count rows) and at least three distinct H values
/// are required.
pub fn fit_exponent(points: &[(u64, u64)]) -> Result<FitResult> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(_, c)| c >= 1)
        .map(|&(h, c)| ((h as f64).ln(), (c as f64).ln()))
        .collect();
    let mut distinct: Vec<u64> = points.iter().filter(|&&(_, c)| c >= 1).map(|&(h, _)| h).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(Error::InsufficientPoints {
            needed: 3,
            got: distinct.len(),
        });
    }
    let n = usable.len() as f64;
    let sx: f64 = usable.iter().map(|(x, _)| x).sum();
    let sy: f64 = usable.iter().map(|(_, y)| y).sum();
    let sxx: f64 = usable.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = usable.iter().map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let residual = usable
        .iter()
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    Ok(FitResult {
        slope,
        intercept,
        residual,
        points_used: usable.len(),
    })
}

fn default_n_max() -> u32 {
    6
}

fn default_u() -> Vec<u64> {
    vec![1]
}

fn default_nu() -> u32 {
    1
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CampaignBudget {
    pub nodes: u64,
    pub ms: u64,
}

impl Default for CampaignBudget {
    fn default() -> Self {
        CampaignBudget {
            nodes: 1_000_000,
            ms: 600_000,
        }
    }
}

/// A reproducible parameter grid. Empty lists simply skip that family of
/// cells.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Campaign {
    pub name: String,
    pub seed: u64,
    #[serde(default)]
    pub modulus: Vec<u64>,
    #[serde(default)]
    pub polynomials: Vec<String>,
    /// One system per entry; maps separated by ';' or newlines.
    #[serde(default)]
    pub systems: Vec<String>,
    #[serde(default, rename = "H")]
    pub h: Vec<u64>,
    #[serde(default)]
    pub e: Vec<u64>,
    #[serde(default, rename = "N")]
    pub n: Vec<u64>,
    #[serde(default = "default_nu")]
    pub nu: u32,
    #[serde(default)]
    pub trials: u32,
    #[serde(default = "default_n_max")]
    pub n_max: u32,
    #[serde(default = "default_u")]
    pub u: Vec<u64>,
    #[serde(default)]
    pub budget: CampaignBudget,
    /// Recognized: "absolute-irreducibility", "fxyn-hypothesis".
    #[serde(default)]
    pub waivers: Vec<String>,
}

impl Campaign {
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Campaign = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    fn validate(&self) -> Result<()> {
        if self.budget.nodes == 0 || self.budget.ms == 0 {
            return Err(Error::invalid("campaign budget", "must be positive"));
        }
        Ok(())
    }

    fn waived(&self, key: &str) -> bool {
        self.waivers.iter().any(|w| w == key)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisStamp {
    pub p: u64,
    pub subject: String,
    pub check: String,
    pub outcome: String,
    pub waived: bool,
}

#[derive(Debug, Serialize)]
pub struct CampaignSummary {
    pub name: String,
    pub seed: u64,
    pub counting_rows: u64,
    pub dynamics_rows: u64,
    pub hypotheses: Vec<HypothesisStamp>,
    pub fits: Vec<FitSummary>,
    pub errors: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct FitSummary {
    pub p: u64,
    pub polynomial: String,
    pub fit: Option<FitResult>,
    pub zero_rows_excluded: usize,
}

#[derive(Debug)]
pub struct CampaignOutcome {
    pub counting_csv: PathBuf,
    pub dynamics_csv: PathBuf,
    pub summary_json: PathBuf,
    pub summary: CampaignSummary,
}

struct CsvAppender {
    file: File,
}

impl CsvAppender {
    fn create(path: &Path, header: &[&str]) -> Result<Self> {
        let mut file = File::create(path)?;
        writeln!(file, "{}", header.join(","))?;
        file.flush()?;
        Ok(CsvAppender { file })
    }

    /// Quote-free fields only; writes and flushes one row (crash-safe
    /// append).
    fn row(&mut self, fields: &[String]) -> Result<()> {
        debug_assert!(fields.iter().all(|f| !f.contains(',') && !f.contains('\n')));
        writeln!(self.file, "{}", fields.join(","))?;
        self.file.flush()?;
        Ok(())
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{:.6}", v)
}

fn sanitize(msg: &str) -> String {
    msg.replace([',', '\n'], ";")
}

/// splitmix-style mix of the campaign seed and a cell index.
fn cell_seed(seed: u64, index: u64) -> u64 {
    seed ^ index
}

/// Execute the whole grid. Per-cell errors become rows with a filled error
/// column; the campaign itself only fails on I/O or configuration errors.
pub fn run_campaign(c: &Campaign, outdir: &Path) -> Result<CampaignOutcome> {
    std::fs::create_dir_all(outdir)?;
    let started = Instant::now();
    let counting_path = outdir.join("counting.csv");
    let dynamics_path = outdir.join("dynamics.csv");
    let summary_path = outdir.join("summary.json");
    let mut counting_csv = CsvAppender::create(&counting_path, COUNTING_CSV_HEADER)?;
    let mut dynamics_csv = CsvAppender::create(&dynamics_path, DYNAMICS_CSV_HEADER)?;
    let mut summary = CampaignSummary {
        name: c.name.clone(),
        seed: c.seed,
        counting_rows: 0,
        dynamics_rows: 0,
        hypotheses: Vec::new(),
        fits: Vec::new(),
        errors: Vec::new(),
    };
    let mut cell_index: u64 = 0;
    let deadline_exceeded =
        |started: &Instant| started.elapsed().as_millis() as u64 > c.budget.ms;

    for &p in &c.modulus {
        let ctx = match FieldContext::new(p) {
            Ok(ctx) => ctx,
            Err(err) => {
                summary.errors.push(format!("p={}: {}", p, err));
                continue;
            }
        };
        for poly_text in &c.polynomials {
            let poly = match parse_poly(poly_text, &ctx) {
                Ok(poly) if !poly.is_zero() => poly,
                Ok(_) => {
                    summary
                        .errors
                        .push(format!("p={} poly '{}': zero polynomial", p, poly_text));
                    continue;
                }
                Err(err) => {
                    summary
                        .errors
                        .push(format!("p={} poly '{}': {}", p, poly_text, err));
                    continue;
                }
            };
            let d = poly.total_degree().unwrap();
            let delta = poly.delta()?;

            // hypothesis stamps
            let abs_waived = c.waived("absolute-irreducibility");
            let abs_ok = if abs_waived {
                None
            } else {
                match is_absolutely_irreducible(&poly) {
                    Ok(ok) => Some(ok),
                    Err(err) => {
                        summary
                            .errors
                            .push(format!("p={} poly '{}': {}", p, poly_text, err));
                        Some(false)
                    }
                }
            };
            summary.hypotheses.push(HypothesisStamp {
                p,
                subject: poly_text.clone(),
                check: "absolute-irreducibility".into(),
                outcome: abs_ok.map_or("waived".into(), |b| b.to_string()),
                waived: abs_waived,
            });
            let hypothesis_passed = abs_waived || abs_ok == Some(true);

            // interval-interval trial cells
            let mut max_per_h: Vec<(u64, u64)> = Vec::new();
            for &h in &c.h {
                if !hypothesis_passed {
                    cell_index += c.trials as u64;
                    counting_csv.row(&[
                        p.to_string(),
                        d.to_string(),
                        delta.to_string(),
                        h.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        "hypothesis_failed".into(),
                        "0".into(),
                    ])?;
                    summary.counting_rows += 1;
                    continue;
                }
                if h >= p {
                    counting_csv.row(&[
                        p.to_string(),
                        d.to_string(),
                        delta.to_string(),
                        h.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        sanitize(&Error::IntervalTooLong { h, p }.to_string()),
                        "0".into(),
                    ])?;
                    summary.counting_rows += 1;
                    continue;
                }
                let bound_value = (h as f64).powf(1.0 / d as f64);
                let trial_seeds: Vec<u64> = (0..c.trials as u64)
                    .map(|t| cell_seed(c.seed, cell_index + t))
                    .collect();
                cell_index += c.trials as u64;
                let trials: Vec<(u64, Result<(u64, u64)>)> = trial_seeds
                    .par_iter()
                    .map(|&ts| {
                        let mut rng =
                            <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(ts);
                        let mut run = || -> Result<(u64, u64)> {
                            let ks = rand::Rng::gen_range(&mut rng, 0..p);
                            let ls = rand::Rng::gen_range(&mut rng, 0..p);
                            let a = PointSet::interval(ctx.clone(), ks, h)?;
                            let b = PointSet::interval(ctx.clone(), ls, h)?;
                            let started = Instant::now();
                            let count = count_solutions(&poly, &a, &b)?.count;
                            Ok((count, started.elapsed().as_millis() as u64))
                        };
                        (ts, run())
                    })
                    .collect();
                let mut h_max = 0u64;
                for (ts, outcome) in trials {
                    match outcome {
                        Ok((count, ms)) => {
                            h_max = h_max.max(count);
                            counting_csv.row(&[
                                p.to_string(),
                                d.to_string(),
                                delta.to_string(),
                                h.to_string(),
                                String::new(),
                                ts.to_string(),
                                count.to_string(),
                                fmt_f64(bound_value),
                                fmt_f64(count as f64 / bound_value),
                                String::new(),
                                ms.to_string(),
                            ])?;
                        }
                        Err(err) => {
                            counting_csv.row(&[
                                p.to_string(),
                                d.to_string(),
                                delta.to_string(),
                                h.to_string(),
                                String::new(),
                                ts.to_string(),
                                String::new(),
                                String::new(),
                                String::new(),
                                sanitize(&err.to_string()),
                                "0".into(),
                            ])?;
                        }
                    }
                    summary.counting_rows += 1;
                }
                max_per_h.push((h, h_max));
                if deadline_exceeded(&started) {
                    summary.errors.push("time budget exceeded".into());
                    break;
                }
            }
            if !c.h.is_empty() && hypothesis_passed {
                let fit = fit_exponent(&max_per_h).ok();
                let zero_rows_excluded =
                    max_per_h.iter().filter(|&&(_, m)| m == 0).count();
                summary.fits.push(FitSummary {
                    p,
                    polynomial: poly_text.clone(),
                    fit,
                    zero_rows_excluded,
                });
            }

            // interval-subgroup cells
            if !c.e.is_empty() && !c.h.is_empty() {
                let fxyn_waived = c.waived("fxyn-hypothesis");
                let sub_report = interval_subgroup_experiment(&poly, &c.h, &c.e, c.n_max);
                match sub_report {
                    Ok(report) => {
                        summary.hypotheses.push(HypothesisStamp {
                            p,
                            subject: poly_text.clone(),
                            check: "fxyn-hypothesis".into(),
                            outcome: if report.hypothesis.ok {
                                format!("verified up to n_max = {}", report.hypothesis.n_max)
                            } else {
                                format!(
                                    "failed at n = {}",
                                    report.hypothesis.first_failing_n.unwrap()
                                )
                            },
                            waived: fxyn_waived,
                        });
                        if report.hypothesis.ok || fxyn_waived {
                            for row in &report.rows {
                                cell_index += 1;
                                counting_csv.row(&[
                                    p.to_string(),
                                    d.to_string(),
                                    delta.to_string(),
                                    row.h.to_string(),
                                    row.e.to_string(),
                                    cell_seed(c.seed, cell_index).to_string(),
                                    row.count.to_string(),
                                    fmt_f64(row.bound),
                                    fmt_f64(row.ratio),
                                    String::new(),
                                    "0".into(),
                                ])?;
                                summary.counting_rows += 1;
                            }
                            for (h, e, msg) in &report.errors {
                                counting_csv.row(&[
                                    p.to_string(),
                                    d.to_string(),
                                    delta.to_string(),
                                    h.to_string(),
                                    e.to_string(),
                                    String::new(),
                                    String::new(),
                                    String::new(),
                                    String::new(),
                                    sanitize(msg),
                                    "0".into(),
                                ])?;
                                summary.counting_rows += 1;
                            }
                        } else {
                            for &h in &c.h {
                                for &e in &c.e {
                                    counting_csv.row(&[
                                        p.to_string(),
                                        d.to_string(),
                                        delta.to_string(),
                                        h.to_string(),
                                        e.to_string(),
                                        String::new(),
                                        String::new(),
                                        String::new(),
                                        String::new(),
                                        "hypothesis_failed".into(),
                                        "0".into(),
                                    ])?;
                                    summary.counting_rows += 1;
                                }
                            }
                        }
                    }
                    Err(err) => {
                        summary
                            .errors
                            .push(format!("p={} poly '{}': {}", p, poly_text, err));
                    }
                }
            }
        }

        // dynamics cells
        for system_text in &c.systems {
            let system = match MapSystem::parse(&ctx, system_text) {
                Ok(sys) => sys,
                Err(err) => {
                    summary
                        .errors
                        .push(format!("p={} system '{}': {}", p, system_text, err));
                    continue;
                }
            };
            summary.hypotheses.push(HypothesisStamp {
                p,
                subject: system_text.clone(),
                check: "same-degree".into(),
                outcome: system.all_same_degree().to_string(),
                waived: false,
            });
            summary.hypotheses.push(HypothesisStamp {
                p,
                subject: system_text.clone(),
                check: "non-power-form".into(),
                outcome: (!system.any_power_form()).to_string(),
                waived: false,
            });
            for &u in &c.u {
                cell_index += 1;
                let seed = cell_seed(c.seed, cell_index);
                let opts = SearchOptions {
                    node_budget: c.budget.nodes,
                    seed,
                    ..Default::default()
                };
                let t_report = match collision_time(&system, u, &opts) {
                    Ok(r) => r,
                    Err(err) => {
                        summary
                            .errors
                            .push(format!("p={} system '{}' u={}: {}", p, system_text, u, err));
                        continue;
                    }
                };
                dynamics_csv.row(&[
                    p.to_string(),
                    system.len().to_string(),
                    system.degrees_string(),
                    u.to_string(),
                    String::new(),
                    "T".into(),
                    t_report.value.to_string(),
                    t_report.exact.to_string(),
                    t_report.mode.to_string(),
                    seed.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                ])?;
                summary.dynamics_rows += 1;
                for &n in &c.n {
                    // exhaustive when the tree is small, sampled otherwise
                    let tree = (system.len() as u64).checked_pow(n.min(63) as u32);
                    let sampled = tree.map_or(true, |t| t > 4096) && system.len() > 1;
                    for metric in [Metric::L, Metric::G] {
                        cell_index += 1;
                        let seed = cell_seed(c.seed, cell_index);
                        let opts = SearchOptions {
                            sampled,
                            samples: 512,
                            node_budget: c.budget.nodes,
                            seed,
                            ..Default::default()
                        };
                        if metric == Metric::G && system.any_power_form() {
                            dynamics_csv.row(&[
                                p.to_string(),
                                system.len().to_string(),
                                system.degrees_string(),
                                u.to_string(),
                                n.to_string(),
                                "G".into(),
                                String::new(),
                                String::new(),
                                String::new(),
                                seed.to_string(),
                                String::new(),
                                String::new(),
                                sanitize(&Error::PowerFormExcluded.to_string()),
                            ])?;
                            summary.dynamics_rows += 1;
                            continue;
                        }
                        let result = match metric {
                            Metric::L => interval_metric(&system, u, n, &opts),
                            Metric::G => group_metric(&system, u, n, &opts),
                            Metric::T => unreachable!(),
                        };
                        match result {
                            Ok(report) => {
                                let comparable = t_report.exact && n <= t_report.value;
                                let bound = match metric {
                                    Metric::L
                                        if comparable
                                            && system.all_same_degree()
                                            && system.max_degree() >= 2 =>
                                    {
                                        Some(interval_bound_value(
                                            p,
                                            system.max_degree(),
                                            c.nu,
                                            n,
                                        ))
                                    }
                                    Metric::G if comparable => Some(group_bound_value(
                                        p,
                                        system.max_degree(),
                                        system.len(),
                                        n,
                                    )),
                                    _ => None,
                                };
                                dynamics_csv.row(&[
                                    p.to_string(),
                                    system.len().to_string(),
                                    system.degrees_string(),
                                    u.to_string(),
                                    n.to_string(),
                                    metric.to_string(),
                                    report.value.to_string(),
                                    report.exact.to_string(),
                                    report.mode.to_string(),
                                    seed.to_string(),
                                    bound.map(fmt_f64).unwrap_or_default(),
                                    bound
                                        .map(|b| fmt_f64(report.value as f64 / b))
                                        .unwrap_or_default(),
                                    String::new(),
                                ])?;
                            }
                            Err(err) => {
                                dynamics_csv.row(&[
                                    p.to_string(),
                                    system.len().to_string(),
                                    system.degrees_string(),
                                    u.to_string(),
                                    n.to_string(),
                                    metric.to_string(),
                                    String::new(),
                                    String::new(),
                                    if sampled {
                                        SearchMode::Sampled.to_string()
                                    } else {
                                        SearchMode::Exhaustive.to_string()
                                    },
                                    seed.to_string(),
                                    String::new(),
                                    String::new(),
                                    sanitize(&err.to_string()),
                                ])?;
                            }
                        }
                        summary.dynamics_rows += 1;
                    }
                }
            }
            if deadline_exceeded(&started) {
                summary.errors.push("time budget exceeded".into());
                break;
            }
        }
    }

    let json = serde_json::to_string_pretty(&summary)?;
    std::fs::write(&summary_path, json)?;
    Ok(CampaignOutcome {
        counting_csv: counting_path,
        dynamics_csv: dynamics_path,
        summary_json: summary_path,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_exact_power_law() {
        let points: Vec<(u64, u64)> = vec![(4, 2), (16, 4), (64, 8), (256, 16)];
        let fit = fit_exponent(&points).unwrap();
        assert!((fit.slope - 0.5).abs() < 1e-9, "slope = {}", fit.slope);
        assert!(fit.residual < 1e-18);
    }

    #[test]
    fn fit_constant_counts() {
        let points: Vec<(u64, u64)> = vec![(4, 7), (16, 7), (64, 7)];
        let fit = fit_exponent(&points).unwrap();
        assert!(fit.slope.abs() < 1e-12);
    }

    #[test]
    fn fit_rejects_too_few_points() {
        assert!(matches!(
            fit_exponent(&[(4, 1), (8, 2)]),
            Err(Error::InsufficientPoints { .. })
        ));
        // zero rows are excluded before the distinct-H count
        assert!(matches!(
            fit_exponent(&[(4, 0), (8, 2), (16, 3)]),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    #[test]
    fn fit_reproducible() {
        let points: Vec<(u64, u64)> = vec![(8, 3), (16, 5), (32, 6), (64, 11)];
        let a = fit_exponent(&points).unwrap();
        let b = fit_exponent(&points).unwrap();
        assert_eq!(a.slope.to_bits(), b.slope.to_bits());
        assert_eq!(a.intercept.to_bits(), b.intercept.to_bits());
    }

    #[test]
    fn campaign_json_defaults() {
        let c = Campaign::from_json(
            r#"{"name": "t", "seed": 1, "modulus": [13], "polynomials": ["X*Y-1"],
                "H": [4], "trials": 2}"#,
        )
        .unwrap();
        assert_eq!(c.n_max, 6);
        assert_eq!(c.u, vec![1]);
        assert!(c.e.is_empty());
        assert!(!c.waived("absolute-irreducibility"));
    }

    #[test]
    fn empty_grid_writes_headers_only() {
        let dir = tempfile::tempdir().unwrap();
        let c = Campaign::from_json(r#"{"name": "empty", "seed": 5}"#).unwrap();
        let outcome = run_campaign(&c, dir.path()).unwrap();
        let counting = std::fs::read_to_string(&outcome.counting_csv).unwrap();
        assert_eq!(counting.trim(), COUNTING_CSV_HEADER.join(","));
        let dynamics = std::fs::read_to_string(&outcome.dynamics_csv).unwrap();
        assert_eq!(dynamics.trim(), DYNAMICS_CSV_HEADER.join(","));
        assert_eq!(outcome.summary.counting_rows, 0);
    }

    #[test]
    fn reducible_polynomial_stamped() {
        let dir = tempfile::tempdir().unwrap();
        let c = Campaign::from_json(
            r#"{"name": "hyp", "seed": 2, "modulus": [13],
                "polynomials": ["(Y-X)*(Y+X)"], "H": [4], "trials": 3}"#,
        )
        .unwrap();
        let outcome = run_campaign(&c, dir.path()).unwrap();
        let body = std::fs::read_to_string(&outcome.counting_csv).unwrap();
        assert!(body.contains("hypothesis_failed"));
        let stamp = &outcome.summary.hypotheses[0];
        assert_eq!(stamp.outcome, "false");
    }
}
