//! Semigroup dynamics of rational-map systems over F_p: path trees,
//! collision time T, interval-concentration metric L, and subgroup
//! generation metric G, with pruned/exhaustive search and seeded sampling.
//!
//! Conventions (documented prominently since the definitions need them):
//! - a path terminates when a denominator vanishes (a pole); pole-truncated
//!   paths are excluded from L/G minimization but contribute their prefix
//!   length to T;
//! - |a - b| is the circular distance min((a-b) mod p, (b-a) mod p); a flag
//!   switches to plain distance on representatives for comparison runs;
//! - zero orbit values are skipped as group generators (v*0 is not a unit).

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{lcm_u64, FieldContext};
use crate::poly::{parse_univariate_x, UnivariatePoly};
use crate::ring::Ring;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;
pub const DEFAULT_SAMPLES: u64 = 1_000;
pub const COMPOSE_DEGREE_CAP: u64 = 512;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Value(u64),
    Pole,
}

/// A rational map f/g over F_p, stored reduced (gcd(f, g) = 1, g monic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMap {
    num: UnivariatePoly<FieldContext>,
    den: UnivariatePoly<FieldContext>,
    degree: u32,
}

impl RationalMap {
    pub fn new(
        num: UnivariatePoly<FieldContext>,
        den: UnivariatePoly<FieldContext>,
    ) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = num.gcd(&den);
        let num = num.divmod(&g).0;
        let den = den.divmod(&g).0;
        let scale = num
            .ring()
            .inv(*den.leading_coeff().unwrap())
            .expect("nonzero leading coefficient");
        let num = num.mul_scalar(&scale);
        let den = den.mul_scalar(&scale);
        let degree = num.degree().unwrap().max(den.degree().unwrap()) as u32;
        if degree == 0 {
            return Err(Error::ConstantMap);
        }
        Ok(RationalMap { num, den, degree })
    }

    /// Parse "f / g" or "f" with f, g in the polynomial grammar over X.
    pub fn parse(ctx: &FieldContext, line: &str) -> Result<Self> {
        let (ntext, dtext) = match line.split_once('/') {
            Some((n, d)) => (n, d),
            None => (line, "1"),
        };
        if dtext.contains('/') {
            return Err(Error::invalid("rational map", "more than one '/'"));
        }
        RationalMap::new(
            parse_univariate_x(ntext, ctx)?,
            parse_univariate_x(dtext, ctx)?,
        )
    }

    pub fn num(&self) -> &UnivariatePoly<FieldContext> {
        &self.num
    }

    pub fn den(&self) -> &UnivariatePoly<FieldContext> {
        &self.den
    }

    pub fn context(&self) -> &FieldContext {
        self.num.ring()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// True for a*X^m with m a (possibly negative) integer: after gcd
    /// reduction both numerator and denominator are monomials.
    pub fn is_power_form(&self) -> bool {
        let monomial = |p: &UnivariatePoly<FieldContext>| {
            p.coeffs()
                .iter()
                .filter(|c| !p.ring().is_zero(c))
                .count()
                == 1
        };
        monomial(&self.num) && monomial(&self.den)
    }

    pub fn step(&self, x: u64) -> Step {
        let ctx = self.context();
        let d = self.den.eval(&x);
        if d == 0 {
            return Step::Pole;
        }
        let n = self.num.eval(&x);
        Step::Value(ctx.mul(n, ctx.inv(d).expect("nonzero denominator value")))
    }
}

impl std::fmt::Display for RationalMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

/// An ordered tuple of rational maps with the two hypothesis flags the
/// orbit theorems need.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapSystem {
    maps: Vec<RationalMap>,
    all_same_degree: bool,
    any_power_form: bool,
}

impl MapSystem {
    pub fn new(maps: Vec<RationalMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::invalid("map system", "needs at least one map"));
        }
        let d0 = maps[0].degree();
        let all_same_degree = maps.iter().all(|m| m.degree() == d0);
        let any_power_form = maps.iter().any(|m| m.is_power_form());
        Ok(MapSystem {
            maps,
            all_same_degree,
            any_power_form,
        })
    }

    /// One map per line (or ';'-separated), each "f / g" or "f".
    pub fn parse(ctx: &FieldContext, text: &str) -> Result<Self> {
        let maps = text
            .split(|c| c == '\n' || c == ';')
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| RationalMap::parse(ctx, l))
            .collect::<Result<Vec<_>>>()?;
        MapSystem::new(maps)
    }

    pub fn maps(&self) -> &[RationalMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn context(&self) -> &FieldContext {
        self.maps[0].context()
    }

    pub fn all_same_degree(&self) -> bool {
        self.all_same_degree
    }

    pub fn any_power_form(&self) -> bool {
        self.any_power_form
    }

    pub fn max_degree(&self) -> u32 {
        self.maps.iter().map(|m| m.degree()).max().unwrap()
    }

    pub fn degrees_string(&self) -> String {
        self.maps
            .iter()
            .map(|m| m.degree().to_string())
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Step with a 0-based branch index.
    fn step(&self, branch: usize, x: u64) -> Step {
        self.maps[branch].step(x)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Metric {
    T,
    L,
    G,
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Metric::T => "T",
            Metric::L => "L",
            Metric::G => "G",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    Exhaustive,
    Pruned,
    Sampled,
}

impl std::fmt::Display for SearchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Pruned => "pruned",
            SearchMode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistanceMode {
    Circular,
    Linear,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub sampled: bool,
    pub samples: u64,
    pub node_budget: u64,
    pub seed: u64,
    pub distance: DistanceMode,
    pub depth_cap: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            sampled: false,
            samples: DEFAULT_SAMPLES,
            node_budget: DEFAULT_NODE_BUDGET,
            seed: 0,
            distance: DistanceMode::Circular,
            depth_cap: None,
        }
    }
}

/// Result of one metric search. Re-simulating the witness reproduces the
/// value; `exact` is true only when the search provably covered the whole
/// path tree.
#[derive(Clone, Debug)]
pub struct MetricReport {
    pub metric: Metric,
    pub value: u64,
    /// 1-based branch choices achieving the value.
    pub witness: Vec<u32>,
    pub mode: SearchMode,
    pub nodes_expanded: u64,
    pub exact: bool,
    pub note: Option<String>,
}

/// Fold a word of 1-based branch choices from u; returns the visited
/// values (starting with u) and whether a pole cut the path short.
pub fn simulate(sys: &MapSystem, u: u64, word: &[u32]) -> (Vec<u64>, bool) {
    let mut values = vec![u % sys.context().p()];
    for &j in word {
        match sys.step(j as usize - 1, *values.last().unwrap()) {
            Step::Pole => return (values, true),
            Step::Value(v) => values.push(v),
        }
    }
    (values, false)
}

/// T: the largest T such that every path from u has its first T elements
/// pairwise distinct. Depth-first walk with per-path visited sets, pruning
/// branches that cannot beat the best collision found.
pub fn collision_time(sys: &MapSystem, u: u64, opts: &SearchOptions) -> Result<MetricReport> {
    let p = sys.context().p();
    let u = u % p;
    let s = sys.len();
    let cap = opts.depth_cap.unwrap_or(p);
    let mut best: Option<u64> = None;
    let mut best_witness: Vec<u32> = Vec::new();
    let mut nodes: u64 = 0;
    let mut truncated = false;

    let mut values: Vec<u64> = vec![u];
    let mut visited: HashSet<u64> = HashSet::from([u]);
    let mut choices: Vec<u32> = Vec::new();
    // next_branch[i] = next 0-based branch to try from values[i]
    let mut next_branch: Vec<usize> = vec![0];

    'outer: while let Some(j) = next_branch.last_mut() {
        if *j >= s {
            next_branch.pop();
            if next_branch.is_empty() {
                break;
            }
            visited.remove(&values.pop().expect("stack in sync"));
            choices.pop();
            continue;
        }
        let branch = *j;
        *j += 1;
        nodes += 1;
        if nodes > opts.node_budget {
            truncated = true;
            break 'outer;
        }
        let len = values.len() as u64; // candidate value for collision/pole here
        match sys.step(branch, *values.last().unwrap()) {
            Step::Pole => {
                if best.map_or(true, |b| len < b) {
                    best = Some(len);
                    best_witness = choices.clone();
                    best_witness.push(branch as u32 + 1);
                }
            }
            Step::Value(v) => {
                if visited.contains(&v) {
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                        best_witness = choices.clone();
                        best_witness.push(branch as u32 + 1);
                    }
                } else if len + 1 < best.unwrap_or(cap + 1) {
                    values.push(v);
                    visited.insert(v);
                    choices.push(branch as u32 + 1);
                    next_branch.push(0);
                } else if best.is_none() && len >= cap {
                    // depth cap reached without any collision
                    truncated = true;
                }
            }
        }
    }
    let exact = !truncated;
    let (value, note) = match best {
        Some(b) => (b, None),
        None => (
            cap,
            Some("no collision within depth cap; value is a lower bound".into()),
        ),
    };
    Ok(MetricReport {
        metric: Metric::T,
        value,
        witness: best_witness,
        mode: SearchMode::Pruned,
        nodes_expanded: nodes,
        exact,
        note,
    })
}

/// Smallest radius of an interval (arc) containing all points, measured by
/// circular distance: half the complement of the largest gap.
pub fn circular_enclosing_radius(points: &BTreeSet<u64>, p: u64) -> u64 {
    debug_assert!(!points.is_empty());
    if points.len() == 1 {
        return 0;
    }
    let pts: Vec<u64> = points.iter().copied().collect();
    let mut largest_gap = pts[0] + p - pts[pts.len() - 1];
    for w in pts.windows(2) {
        largest_gap = largest_gap.max(w[1] - w[0]);
    }
    let span = p - largest_gap;
    (span + 1) / 2
}

/// Enclosing radius on plain integer representatives.
pub fn linear_enclosing_radius(points: &BTreeSet<u64>) -> u64 {
    let lo = *points.first().expect("nonempty");
    let hi = *points.last().expect("nonempty");
    (hi - lo + 1) / 2
}

fn orbit_radius(points: &BTreeSet<u64>, p: u64, mode: DistanceMode) -> u64 {
    match mode {
        DistanceMode::Circular => circular_enclosing_radius(points, p),
        DistanceMode::Linear => linear_enclosing_radius(points),
    }
}

/// L(N): over full-length paths and centers v, the smallest max distance
/// from v to the first N+1 orbit elements.
pub fn interval_metric(
    sys: &MapSystem,
    u: u64,
    n: u64,
    opts: &SearchOptions,
) -> Result<MetricReport> {
    let p = sys.context().p();
    let eval = |values: &[u64]| -> u64 {
        let set: BTreeSet<u64> = values.iter().copied().collect();
        orbit_radius(&set, p, opts.distance)
    };
    // radius grows as points are added, so prefix radius prunes soundly
    path_minimization(sys, u, n, opts, Metric::L, eval)
}

/// G(N): over full-length paths and unit scalings v, the smallest order of
/// the subgroup generated by the scaled nonzero orbit elements. The inner
/// minimum over v is the order of the group generated by the ratios to the
/// first nonzero element.
pub fn group_metric(
    sys: &MapSystem,
    u: u64,
    n: u64,
    opts: &SearchOptions,
) -> Result<MetricReport> {
    let ctx = sys.context().clone();
    let eval = move |values: &[u64]| -> u64 { ratio_group_order(&ctx, values) };
    let mut report = path_minimization(sys, u, n, opts, Metric::G, eval)?;
    if report.value == 1 {
        let (values, _) = simulate(sys, u, &report.witness);
        if values.iter().all(|&v| v == 0) {
            report.note = Some("all orbit elements are zero; G reported as 1".into());
        }
    }
    Ok(report)
}

/// Order of the subgroup generated by { w/w0 : w nonzero orbit value },
/// where w0 is the first nonzero value. This equals min over v in F_p^* of
/// the order of <v*u_n>, attained at v = w0^{-1}.
pub fn ratio_group_order(ctx: &FieldContext, values: &[u64]) -> u64 {
    let mut base: Option<u64> = None;
    let mut order = 1u64;
    for &v in values {
        if v == 0 {
            continue;
        }
        match base {
            None => base = Some(v),
            Some(w0) => {
                let r = ctx.mul(v, ctx.inv(w0).expect("nonzero"));
                order = lcm_u64(order, ctx.element_order(r).expect("nonzero"));
            }
        }
    }
    order
}

/// Shared outer search: minimize a monotone path statistic over all
/// pole-free paths of length n.
fn path_minimization(
    sys: &MapSystem,
    u: u64,
    n: u64,
    opts: &SearchOptions,
    metric: Metric,
    eval: impl Fn(&[u64]) -> u64,
) -> Result<MetricReport> {
    let p = sys.context().p();
    let u = u % p;
    if opts.sampled {
        return sampled_minimization(sys, u, n, opts, metric, eval);
    }
    let s = sys.len();
    let mut best: Option<u64> = None;
    let mut best_witness: Vec<u32> = Vec::new();
    let mut nodes: u64 = 0;
    let mut truncated = false;

    let mut values: Vec<u64> = vec![u];
    let mut choices: Vec<u32> = Vec::new();
    let mut next_branch: Vec<usize> = vec![0];

    // handle n = 0 up front: the single-point orbit
    if n == 0 {
        let value = eval(&values);
        return Ok(MetricReport {
            metric,
            value,
            witness: vec![],
            mode: SearchMode::Exhaustive,
            nodes_expanded: 0,
            exact: true,
            note: None,
        });
    }

    while let Some(j) = next_branch.last_mut() {
        if *j >= s {
            next_branch.pop();
            if next_branch.is_empty() {
                break;
            }
            values.pop();
            choices.pop();
            continue;
        }
        let branch = *j;
        *j += 1;
        nodes += 1;
        if nodes > opts.node_budget {
            truncated = true;
            break;
        }
        match sys.step(branch, *values.last().unwrap()) {
            Step::Pole => {} // excluded from minimization
            Step::Value(v) => {
                values.push(v);
                choices.push(branch as u32 + 1);
                let stat = eval(&values);
                let prune = best.map_or(false, |b| stat >= b);
                if values.len() as u64 == n + 1 {
                    if !prune {
                        best = Some(stat);
                        best_witness = choices.clone();
                    }
                    values.pop();
                    choices.pop();
                } else if prune {
                    values.pop();
                    choices.pop();
                } else {
                    next_branch.push(0);
                }
            }
        }
    }
    match best {
        Some(value) => Ok(MetricReport {
            metric,
            value,
            witness: best_witness,
            mode: SearchMode::Exhaustive,
            nodes_expanded: nodes,
            exact: !truncated,
            note: None,
        }),
        None if truncated => Err(Error::BudgetExceeded {
            partial: 0,
            processed: nodes,
        }),
        None => Err(Error::AllPathsTruncated { depth: n }),
    }
}

fn sampled_minimization(
    sys: &MapSystem,
    u: u64,
    n: u64,
    opts: &SearchOptions,
    metric: Metric,
    eval: impl Fn(&[u64]) -> u64,
) -> Result<MetricReport> {
    let s = sys.len() as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<u64> = None;
    let mut best_witness: Vec<u32> = Vec::new();
    let mut nodes = 0u64;
    let mut valid = 0u64;
    let max_attempts = opts.samples.saturating_mul(10).max(10);
    let mut attempts = 0u64;
    while valid < opts.samples && attempts < max_attempts {
        attempts += 1;
        let word: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=s)).collect();
        let (values, poled) = simulate(sys, u, &word);
        nodes += values.len() as u64;
        if poled {
            continue;
        }
        valid += 1;
        let stat = eval(&values);
        if best.map_or(true, |b| stat < b) {
            best = Some(stat);
            best_witness = word;
        }
    }
    match best {
        Some(value) => Ok(MetricReport {
            metric,
            value,
            witness: best_witness,
            mode: SearchMode::Sampled,
            nodes_expanded: nodes,
            exact: false,
            note: None,
        }),
        None => Err(Error::AllPathsTruncated { depth: n }),
    }
}

/// Compose the system's maps along a word of 1-based indices, earliest
/// index applied innermost. The composed degree is the product of the step
/// degrees; the cap rejects blowups before they happen.
pub fn compose(sys: &MapSystem, word: &[u32]) -> Result<RationalMap> {
    compose_with_cap(sys, word, COMPOSE_DEGREE_CAP)
}

pub fn compose_with_cap(sys: &MapSystem, word: &[u32], cap: u64) -> Result<RationalMap> {
    if word.is_empty() {
        return Err(Error::invalid("composition word", "must be nonempty"));
    }
    for &j in word {
        if j == 0 || j as usize > sys.len() {
            return Err(Error::invalid(
                "composition word",
                format!("branch index {} out of range 1..={}", j, sys.len()),
            ));
        }
    }
    let mut degree_bound = 1u64;
    for &j in word {
        degree_bound = degree_bound.saturating_mul(sys.maps[j as usize - 1].degree() as u64);
        if degree_bound > cap {
            return Err(Error::DegreeCapExceeded {
                degree: degree_bound,
                cap,
            });
        }
    }
    let mut acc = sys.maps[word[0] as usize - 1].clone();
    for &j in &word[1..] {
        acc = compose_pair(&sys.maps[j as usize - 1], &acc)?;
    }
    Ok(acc)
}

/// outer(inner(X)) as a reduced rational map.
pub fn compose_pair(outer: &RationalMap, inner: &RationalMap) -> Result<RationalMap> {
    let ctx = outer.context().clone();
    let d = outer.degree() as usize;
    // powers of inner's numerator and denominator up to d
    let mut fpow = vec![UnivariatePoly::one(ctx.clone())];
    let mut gpow = vec![UnivariatePoly::one(ctx.clone())];
    for i in 1..=d {
        fpow.push(fpow[i - 1].mul(inner.num()));
        gpow.push(gpow[i - 1].mul(inner.den()));
    }
    let assemble = |poly: &UnivariatePoly<FieldContext>| {
        let mut acc = UnivariatePoly::zero(ctx.clone());
        for (i, c) in poly.coeffs().iter().enumerate() {
            if ctx.is_zero(c) {
                continue;
            }
            acc = acc.add(&fpow[i].mul(&gpow[d - i]).mul_scalar(c));
        }
        acc
    };
    RationalMap::new(assemble(outer.num()), assemble(outer.den()))
}

/// Bound component of the interval theorem: min(N^(d^nu), p^(1/(2d^(2nu) +
/// d^nu - 1/2))).
pub fn interval_bound_value(p: u64, degree: u32, nu: u32, n: u64) -> f64 {
    let d = degree as f64;
    let dnu = d.powi(nu as i32);
    let first = (n as f64).powf(dnu);
    let second = (p as f64).powf(1.0 / (2.0 * dnu * dnu + dnu - 0.5));
    first.min(second)
}

/// Bound component of the group theorem: min(sqrt(N p)/(d sqrt(s)),
/// N^(3/2)/(d^2 s^(3/2))). Uses d = max(2, max degree) since the statement
/// assumes degree at least 2.
pub fn group_bound_value(p: u64, max_degree: u32, s: usize, n: u64) -> f64 {
    let d = (max_degree.max(2)) as f64;
    let s = s as f64;
    let n = n as f64;
    let first = (n * p as f64).sqrt() / (d * s.sqrt());
    let second = n.powf(1.5) / (d * d * s.powf(1.5));
    first.min(second)
}

#[derive(Clone, Debug)]
pub struct OrbitRow {
    pub n: u64,
    pub report: MetricReport,
    pub bound: Option<f64>,
    pub ratio: Option<f64>,
    pub comparable: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct OrbitExperimentReport {
    pub p: u64,
    pub s: usize,
    pub degrees: String,
    pub u: u64,
    pub nu: u32,
    pub collision: MetricReport,
    pub rows: Vec<OrbitRow>,
    /// (N - nu) / s^nu per N, the pigeonhole floor on the most frequent
    /// composition; reporting only, never asserted.
    pub pigeonhole_floor: Vec<(u64, f64)>,
}

/// Tabulate L and G against the theorem bound expressions. Requesting the
/// G comparison on a system containing a power map is refused.
pub fn theorem_orbit_experiments(
    sys: &MapSystem,
    u: u64,
    n_schedule: &[u64],
    nu: u32,
    metrics: &[Metric],
    opts: &SearchOptions,
) -> Result<OrbitExperimentReport> {
    if metrics.contains(&Metric::G) && sys.any_power_form() {
        return Err(Error::PowerFormExcluded);
    }
    let p = sys.context().p();
    let collision = collision_time(sys, u, opts)?;
    let t_value = collision.value;
    let mut rows = Vec::new();
    for &n in n_schedule {
        for &metric in metrics {
            let (report, bound, comparable, note) = match metric {
                Metric::T => (collision.clone(), None, true, None),
                Metric::L => {
                    let rep = interval_metric(sys, u, n, opts)?;
                    let within = n <= t_value && collision.exact;
                    let same_deg = sys.all_same_degree() && sys.max_degree() >= 2;
                    let comparable = within && same_deg;
                    let note = if !same_deg {
                        Some("mixed or linear degrees: outside the theorem hypotheses".into())
                    } else if !within {
                        Some(format!("N > T = {}: outside the theorem range", t_value))
                    } else {
                        None
                    };
                    let bound =
                        comparable.then(|| interval_bound_value(p, sys.max_degree(), nu, n));
                    (rep, bound, comparable, note)
                }
                Metric::G => {
                    let rep = group_metric(sys, u, n, opts)?;
                    let comparable = n <= t_value && collision.exact;
                    let note = (!comparable)
                        .then(|| format!("N > T = {}: outside the theorem range", t_value));
                    let bound =
                        comparable.then(|| group_bound_value(p, sys.max_degree(), sys.len(), n));
                    (rep, bound, comparable, note)
                }
            };
            let ratio = bound.map(|b| report.value as f64 / b);
            rows.push(OrbitRow {
                n,
                report,
                bound,
                ratio,
                comparable,
                note,
            });
        }
    }
    let pigeonhole_floor = n_schedule
        .iter()
        .map(|&n| {
            let floor =
                (n as f64 - nu as f64).max(0.0) / (sys.len() as f64).powi(nu as i32);
            (n, floor)
        })
        .collect();
    Ok(OrbitExperimentReport {
        p,
        s: sys.len(),
        degrees: sys.degrees_string(),
        u: u % p,
        nu,
        collision,
        rows,
        pigeonhole_floor,
    })
}
