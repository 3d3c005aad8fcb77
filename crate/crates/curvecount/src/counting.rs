//! Exact solution counting N_F(A, B) over intervals, subgroups and explicit
//! sets; rational-map image counts; the integer box counter; and the two
//! experiment drivers that compare counts against the theorem bounds.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{RationalMap, Step};
use crate::error::{Error, Result};
use crate::experiments::{fit_exponent, FitResult};
use crate::factor::{check_fxyn_hypothesis, roots_mod_p, FxynReport};
use crate::ff::{factorize_u64, FieldContext, Subgroup};
use crate::poly::{BivariatePoly, UnivariatePoly};
use crate::ring::IntegerRing;

pub const MAX_BOX_SIDE: u64 = 1_000_000;
const WITNESS_CAP: usize = 10;
const BOX_SCAN_THRESHOLD: u64 = 4_096;

/// An evaluation domain in F_p: a wrapped residue interval [K, K+H] (H+1
/// members), a multiplicative subgroup, or an explicit list.
#[derive(Clone, Debug)]
pub enum PointSet {
    Interval {
        ctx: FieldContext,
        start: u64,
        length: u64,
    },
    SubgroupSet(Subgroup),
    Explicit {
        ctx: FieldContext,
        elems: Vec<u64>,
    },
}

impl PointSet {
    /// Residues of K, K+1, ..., K+H (wrapping mod p). Requires H < p.
    pub fn interval(ctx: FieldContext, start: u64, h: u64) -> Result<Self> {
        if h >= ctx.p() {
            return Err(Error::IntervalTooLong { h, p: ctx.p() });
        }
        Ok(PointSet::Interval {
            start: start % ctx.p(),
            length: h,
            ctx,
        })
    }

    pub fn subgroup(sub: Subgroup) -> Self {
        PointSet::SubgroupSet(sub)
    }

    pub fn explicit(ctx: FieldContext, elems: impl IntoIterator<Item = u64>) -> Self {
        let p = ctx.p();
        let mut v: Vec<u64> = elems.into_iter().map(|x| x % p).collect();
        v.sort_unstable();
        v.dedup();
        PointSet::Explicit { ctx, elems: v }
    }

    /// Specs: `interval:K,H`, `subgroup:e`, `list:a,b,c`.
    pub fn parse(ctx: &FieldContext, spec: &str) -> Result<Self> {
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::invalid("point set", format!("'{}' (want kind:args)", spec)))?;
        let nums = |s: &str| -> Result<Vec<u64>> {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::invalid("point set", format!("bad integer '{}'", t)))
                })
                .collect()
        };
        match kind {
            "interval" => {
                let v = nums(rest)?;
                if v.len() != 2 {
                    return Err(Error::invalid("point set", "interval wants K,H"));
                }
                PointSet::interval(ctx.clone(), v[0], v[1])
            }
            "subgroup" => {
                let v = nums(rest)?;
                if v.len() != 1 {
                    return Err(Error::invalid("point set", "subgroup wants the order e"));
                }
                Ok(PointSet::subgroup(ctx.subgroup_of_order(v[0])?))
            }
            "list" => Ok(PointSet::explicit(ctx.clone(), nums(rest)?)),
            other => Err(Error::invalid(
                "point set",
                format!("unknown kind '{}' (want interval|subgroup|list)", other),
            )),
        }
    }

    pub fn context(&self) -> &FieldContext {
        match self {
            PointSet::Interval { ctx, .. } => ctx,
            PointSet::SubgroupSet(s) => s.context(),
            PointSet::Explicit { ctx, .. } => ctx,
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            PointSet::Interval { length, .. } => length + 1,
            PointSet::SubgroupSet(s) => s.order(),
            PointSet::Explicit { elems, .. } => elems.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            PointSet::Interval { ctx, start, length } => {
                let p = ctx.p();
                (x + p - start) % p <= *length
            }
            PointSet::SubgroupSet(s) => s.contains(x),
            PointSet::Explicit { elems, .. } => elems.binary_search(&x).is_ok(),
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            PointSet::Interval { ctx, start, length } => {
                let p = ctx.p();
                let s = *start;
                Box::new((0..=*length).map(move |t| (s + t) % p))
            }
            PointSet::SubgroupSet(sub) => Box::new(sub.iter()),
            PointSet::Explicit { elems, .. } => Box::new(elems.iter().copied()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PointSet::Interval { start, length, .. } => format!("interval:{},{}", start, length),
            PointSet::SubgroupSet(s) => format!("subgroup:{}", s.order()),
            PointSet::Explicit { elems, .. } => format!("list[{}]", elems.len()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    RowSolve,
    DoubleLoop,
    ImageEnum,
}

impl std::fmt::Display for CountMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountMethod::RowSolve => "row-solve",
            CountMethod::DoubleLoop => "double-loop",
            CountMethod::ImageEnum => "image-enum",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub count: u64,
    pub method: CountMethod,
    /// Up to ten solution pairs, each of which re-verifies by evaluation.
    pub witnesses: Vec<(u64, u64)>,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_units: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_units: u64::MAX,
        }
    }
}

pub fn count_solutions(
    f: &BivariatePoly<FieldContext>,
    a: &PointSet,
    b: &PointSet,
) -> Result<CountResult> {
    count_solutions_with(f, a, b, Budget::default())
}

/// Row-solve: specialize F(a, Y) per a in A, extract the roots in F_p, and
/// test membership in B. Exact. The budget is a unit count (one per row
/// plus one per Y-degree); exceeding it is a soft error carrying progress.
pub fn count_solutions_with(
    f: &BivariatePoly<FieldContext>,
    a: &PointSet,
    b: &PointSet,
    budget: Budget,
) -> Result<CountResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let started = Instant::now();
    let dy = f.deg_y().unwrap_or(0) as u64;
    let mut units = 0u64;
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    for x in a.iter() {
        units += 1 + dy;
        if units > budget.max_units {
            return Err(Error::BudgetExceeded {
                partial: count,
                processed: units,
            });
        }
        let row = f.specialize_x(&x);
        if row.is_zero() {
            // the whole row vanishes: every b is a solution
            count += b.len();
            if witnesses.len() < WITNESS_CAP {
                for y in b.iter().take(WITNESS_CAP - witnesses.len()) {
                    witnesses.push((x, y));
                }
            }
            continue;
        }
        for y in roots_mod_p(&row) {
            if b.contains(y) {
                count += 1;
                if witnesses.len() < WITNESS_CAP {
                    witnesses.push((x, y));
                }
            }
        }
    }
    Ok(CountResult {
        count,
        method: CountMethod::RowSolve,
        witnesses,
        elapsed: started.elapsed(),
    })
}

/// The oracle: brute force over A x B, evaluating term by term. Must agree
/// exactly with the row-solve method.
pub fn count_solutions_oracle(
    f: &BivariatePoly<FieldContext>,
    a: &PointSet,
    b: &PointSet,
) -> Result<CountResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let started = Instant::now();
    let ctx = f.ring().clone();
    let dx = f.deg_x().unwrap_or(0) as usize;
    let dy = f.deg_y().unwrap_or(0) as usize;
    let terms: Vec<((u32, u32), u64)> = f.terms().map(|(&k, &c)| (k, c)).collect();
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    let b_elems: Vec<u64> = b.iter().collect();
    let mut bpows: Vec<Vec<u64>> = Vec::with_capacity(b_elems.len());
    for &y in &b_elems {
        let mut pw = Vec::with_capacity(dy + 1);
        pw.push(1u64);
        for j in 1..=dy {
            let prev = pw[j - 1];
            pw.push(ctx.mul(prev, y));
        }
        bpows.push(pw);
    }
    for x in a.iter() {
        let mut xp = Vec::with_capacity(dx + 1);
        xp.push(1u64);
        for i in 1..=dx {
            let prev = xp[i - 1];
            xp.push(ctx.mul(prev, x));
        }
        for (bi, &y) in b_elems.iter().enumerate() {
            let mut acc = 0u64;
            for &((i, j), c) in &terms {
                let t = ctx.mul(c, ctx.mul(xp[i as usize], bpows[bi][j as usize]));
                acc = ctx.add(acc, t);
            }
            if acc == 0 {
                count += 1;
                if witnesses.len() < WITNESS_CAP {
                    witnesses.push((x, y));
                }
            }
        }
    }
    Ok(CountResult {
        count,
        method: CountMethod::DoubleLoop,
        witnesses,
        elapsed: started.elapsed(),
    })
}

/// The number of distinct values of psi on I (poles skipped) landing in J.
/// Set semantics: image cardinality, not solution pairs.
pub fn count_rational_image(
    psi: &RationalMap,
    i: &PointSet,
    j: &PointSet,
) -> Result<CountResult> {
    let started = Instant::now();
    let mut image: BTreeMap<u64, u64> = BTreeMap::new();
    for x in i.iter() {
        if let Step::Value(v) = psi.step(x) {
            image.entry(v).or_insert(x);
        }
    }
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    for (&v, &x) in &image {
        if j.contains(v) {
            count += 1;
            if witnesses.len() < WITNESS_CAP {
                witnesses.push((x, v));
            }
        }
    }
    Ok(CountResult {
        count,
        method: CountMethod::ImageEnum,
        witnesses,
        elapsed: started.elapsed(),
    })
}

/// Integral points of an integer curve in [K, K+H] x [L, L+H].
#[derive(Clone, Debug)]
pub struct BoxCount {
    pub count: u64,
    /// x rows where the specialized polynomial vanished identically; each
    /// contributes the full H+1 points and is flagged here.
    pub degenerate_rows: Vec<i64>,
    pub points: Option<Vec<(i64, i64)>>,
}

/// Exact enumeration: per integer x, the integer roots of F(x, Y) in
/// [L, L+H], by divisor search on the constant term (with a plain scan for
/// narrow boxes or oversized constant terms).
pub fn count_integer_box(
    fz: &BivariatePoly<IntegerRing>,
    k: i64,
    l: i64,
    h: u64,
    collect_points: bool,
) -> Result<BoxCount> {
    if fz.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h > MAX_BOX_SIDE {
        return Err(Error::invalid(
            "box side",
            format!("H = {} exceeds the cap {}", h, MAX_BOX_SIDE),
        ));
    }
    let hi_x = k
        .checked_add(h as i64)
        .ok_or_else(|| Error::invalid("box", "K + H overflows"))?;
    let hi_y = l
        .checked_add(h as i64)
        .ok_or_else(|| Error::invalid("box", "L + H overflows"))?;
    let mut count = 0u64;
    let mut degenerate_rows = Vec::new();
    let mut points = collect_points.then(Vec::new);
    for x in k..=hi_x {
        let row = fz.specialize_x(&BigInt::from(x));
        if row.is_zero() {
            count += h + 1;
            degenerate_rows.push(x);
            if let Some(pts) = points.as_mut() {
                pts.extend((l..=hi_y).map(|y| (x, y)));
            }
            continue;
        }
        for y in integer_roots_in_range(&row, l, hi_y) {
            count += 1;
            if let Some(pts) = points.as_mut() {
                pts.push((x, y));
            }
        }
    }
    Ok(BoxCount {
        count,
        degenerate_rows,
        points,
    })
}

/// Integer roots of a nonzero integer polynomial within [lo, hi], sorted.
fn integer_roots_in_range(u: &UnivariatePoly<IntegerRing>, lo: i64, hi: i64) -> Vec<i64> {
    let mut roots = Vec::new();
    let mut poly = u.clone();
    // strip Y^v; 0 is a root iff v > 0
    let mut had_zero_root = false;
    while !poly.is_zero() && poly.coeff(0).is_zero() {
        had_zero_root = true;
        let coeffs: Vec<BigInt> = poly.coeffs()[1..].to_vec();
        poly = UnivariatePoly::from_coeffs(IntegerRing, coeffs);
    }
    if had_zero_root && lo <= 0 && 0 <= hi {
        roots.push(0);
    }
    if poly.is_constant() {
        roots.sort_unstable();
        return roots;
    }
    let width = (hi - lo) as u64;
    let c0 = poly.coeff(0);
    let scan = width <= BOX_SCAN_THRESHOLD || c0.abs() > BigInt::from(u64::MAX);
    if scan {
        for y in lo..=hi {
            if y != 0 && poly.eval(&BigInt::from(y)).is_zero() {
                roots.push(y);
            }
        }
    } else {
        // every integer root divides the constant term
        let c0_abs: u64 = c0.abs().try_into().expect("checked above");
        let mut divisors = vec![1u64];
        for (q, e) in factorize_u64(c0_abs) {
            let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
            for &d in &divisors {
                let mut pw = 1u64;
                for _ in 0..=e {
                    if let Some(v) = d.checked_mul(pw) {
                        next.push(v);
                    }
                    pw = match pw.checked_mul(q) {
                        Some(v) => v,
                        None => break,
                    };
                }
            }
            divisors = next;
        }
        divisors.sort_unstable();
        divisors.dedup();
        for &d in &divisors {
            for cand in [d as i64, -(d as i64)] {
                if lo <= cand && cand <= hi && poly.eval(&BigInt::from(cand)).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// One row of the interval-interval trend experiment.
#[derive(Clone, Debug)]
pub struct TrendRow {
    pub h: u64,
    pub trials: u32,
    pub max_count: u64,
    pub mean_count: f64,
    /// Whether H falls inside the admissible range p^(1/((d-1/2)delta+1/2)).
    pub admissible: bool,
    pub row_seed: u64,
}

#[derive(Clone, Debug)]
pub struct TrendReport {
    pub p: u64,
    pub d: u32,
    pub delta: u64,
    /// None when the hypothesis check was waived.
    pub absolutely_irreducible: Option<bool>,
    pub admissible_h_bound: f64,
    pub rows: Vec<TrendRow>,
    pub fit: Option<FitResult>,
    pub zero_rows_excluded: usize,
    pub seed: u64,
}

/// Sample random interval pairs per H, record max and mean counts, and fit
/// the slope of log(max count) against log H.
pub fn interval_trend_experiment(
    f: &BivariatePoly<FieldContext>,
    h_schedule: &[u64],
    trials: u32,
    seed: u64,
    waive_hypothesis: bool,
) -> Result<TrendReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = f.ring().clone();
    let p = ctx.p();
    let d = f.total_degree().unwrap();
    let delta = f.delta()?;
    let absolutely_irreducible = if waive_hypothesis {
        None
    } else {
        let ok = crate::factor::is_absolutely_irreducible(f)?;
        if !ok {
            return Err(Error::HypothesisFailed(
                "polynomial is not absolutely irreducible (waive explicitly to proceed)".into(),
            ));
        }
        Some(ok)
    };
    let admissible_h_bound =
        (p as f64).powf(1.0 / ((d as f64 - 0.5) * delta as f64 + 0.5));
    let mut rows = Vec::with_capacity(h_schedule.len());
    for (hi, &h) in h_schedule.iter().enumerate() {
        let row_seed = seed ^ ((hi as u64 + 1) << 32);
        let mut rng = ChaCha8Rng::seed_from_u64(row_seed);
        let mut max_count = 0u64;
        let mut total = 0u64;
        for _ in 0..trials {
            let ks = rng.gen_range(0..p);
            let ls = rng.gen_range(0..p);
            let a = PointSet::interval(ctx.clone(), ks, h)?;
            let b = PointSet::interval(ctx.clone(), ls, h)?;
            let c = count_solutions(f, &a, &b)?.count;
            max_count = max_count.max(c);
            total += c;
        }
        rows.push(TrendRow {
            h,
            trials,
            max_count,
            mean_count: total as f64 / trials.max(1) as f64,
            admissible: (h as f64) <= admissible_h_bound,
            row_seed,
        });
    }
    let points: Vec<(u64, u64)> = rows
        .iter()
        .filter(|r| r.max_count >= 1)
        .map(|r| (r.h, r.max_count))
        .collect();
    let zero_rows_excluded = rows.len() - points.len();
    let fit = fit_exponent(&points).ok();
    Ok(TrendReport {
        p,
        d,
        delta,
        absolutely_irreducible,
        admissible_h_bound,
        rows,
        fit,
        zero_rows_excluded,
        seed,
    })
}

#[derive(Clone, Debug)]
pub struct SubgroupRow {
    pub h: u64,
    pub e: u64,
    pub count: u64,
    pub bound: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug)]
pub struct SubgroupReport {
    pub p: u64,
    pub d: u32,
    pub dx: u32,
    pub dy: u32,
    pub delta: u64,
    pub hypothesis: FxynReport,
    pub rows: Vec<SubgroupRow>,
    pub errors: Vec<(u64, u64, String)>,
}

/// Exact N_F([1, H], G) per (H, e) against the subgroup bound
/// sqrt(d_X) sqrt(H) max(d e / sqrt(p), d^(2/3) e^(1/3), sqrt(d_X) d_Y^2).
/// H is the interval cardinality, matching the [1, H] statement.
pub fn interval_subgroup_experiment(
    f: &BivariatePoly<FieldContext>,
    h_schedule: &[u64],
    e_schedule: &[u64],
    n_max: u32,
) -> Result<SubgroupReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = f.ring().clone();
    let p = ctx.p();
    let d = f.total_degree().unwrap();
    let dx = f.deg_x().unwrap_or(0);
    let dy = f.deg_y().unwrap_or(0);
    let delta = f.delta()?;
    let hypothesis = check_fxyn_hypothesis(f, n_max)?;
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    if hypothesis.ok {
        for &h in h_schedule {
            for &e in e_schedule {
                let cell = (|| -> Result<SubgroupRow> {
                    if h == 0 || h >= p {
                        return Err(Error::IntervalTooLong { h, p });
                    }
                    let a = PointSet::interval(ctx.clone(), 1, h - 1)?;
                    let b = PointSet::subgroup(ctx.subgroup_of_order(e)?);
                    let count = count_solutions(f, &a, &b)?.count;
                    let bound = (dx as f64).sqrt()
                        * (h as f64).sqrt()
                        * [
                            d as f64 * e as f64 / (p as f64).sqrt(),
                            (d as f64).powf(2.0 / 3.0) * (e as f64).powf(1.0 / 3.0),
                            (dx as f64).sqrt() * (dy as f64).powi(2),
                        ]
                        .into_iter()
                        .fold(f64::MIN, f64::max);
                    Ok(SubgroupRow {
                        h,
                        e,
                        count,
                        bound,
                        ratio: count as f64 / bound,
                    })
                })();
                match cell {
                    Ok(row) => rows.push(row),
                    Err(err) => errors.push((h, e, err.to_string())),
                }
            }
        }
    }
    Ok(SubgroupReport {
        p,
        d,
        dx,
        dy,
        delta,
        hypothesis,
        rows,
        errors,
    })
}
