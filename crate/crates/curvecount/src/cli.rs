//! Command-line front end. Every library operation is reachable through a
//! subcommand with stable flags; `--format csv` emits the documented
//! schemas, `--format json` machine-readable objects. Polynomial and
//! system arguments accept inline text or `@file`. Exit codes: 0 success,
//! 1 domain error, 2 usage error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::counting::{
    count_integer_box, count_rational_image, count_solutions_oracle, count_solutions_with,
    Budget, PointSet,
};
use crate::dynamics::{
    collision_time, group_metric, interval_metric, DistanceMode, MapSystem, Metric, RationalMap,
    SearchOptions,
};
use crate::error::{Error, Result};
use crate::experiments::{run_campaign, Campaign};
use crate::factor::{
    check_fxyn_hypothesis, divisible_by_torsion_form, is_absolutely_irreducible,
    is_irreducible_bivariate, is_torsion_form,
};
use crate::ff::FieldContext;
use crate::poly::{collect_box_solutions, lift_construction, parse_poly, resultant_x};
use crate::ring::IntegerRing;

pub const SEED_ENV: &str = "CURVECOUNT_SEED";

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    T,
    L,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistanceArg {
    Circular,
    Linear,
}

#[derive(Parser)]
#[command(
    name = "curvecount",
    version,
    about = "Exact curve-point counting over prime fields and expansion metrics of rational-map orbits"
)]
struct Cli {
    /// Output format for subcommands that support it
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads for parallel sections (0 = library default)
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the distinct monomial divisors of a polynomial's terms
    Delta {
        #[arg(long = "p")]
        p: u64,
        /// Polynomial in X, Y (inline or @file)
        #[arg(long)]
        poly: String,
    },
    /// Irreducibility of a bivariate polynomial over F_p
    Irreducible {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        poly: String,
        /// Also test irreducibility over every extension level up to deg F
        #[arg(long)]
        absolute: bool,
        /// Check F(X, Y^n) for n = 1..=N as well
        #[arg(long = "yn-max")]
        yn_max: Option<u32>,
    },
    /// Exact number of solutions F(a, b) = 0 with a in A, b in B
    Count {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        poly: String,
        /// interval:K,H | subgroup:e | list:a,b,c
        #[arg(long = "set-a")]
        set_a: String,
        #[arg(long = "set-b")]
        set_b: String,
        /// Force the double-loop oracle instead of row solving
        #[arg(long)]
        oracle: bool,
        /// Soft unit budget for the row solver
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cardinality of psi(I) intersected with J for a rational map psi
    ImageCount {
        #[arg(long = "p")]
        p: u64,
        /// Rational map "f" or "f / g" over X (inline or @file)
        #[arg(long)]
        map: String,
        #[arg(long = "set-a")]
        set_a: String,
        #[arg(long = "set-b")]
        set_b: String,
    },
    /// Resultant in X of F(X, U) and F(X+a, V); output uses X for U, Y for V
    Resultant {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        poly: String,
        /// The shift a
        #[arg(long)]
        shift: u64,
    },
    /// Match a polynomial against the two-term torsion shapes and search
    /// for a torsion-form divisor
    TorsionCheck {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        poly: String,
    },
    /// Integer lift from small solutions: prints the determinants and
    /// verifies the coefficient congruences
    Lift {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        poly: String,
        /// Solutions "x,y;x,y;...". Omit to sample from a box
        #[arg(long)]
        solutions: Option<String>,
        /// Box side for sampling solutions when none are given
        #[arg(long = "box-side")]
        box_side: Option<u64>,
        /// Pivot term "i,j" (default: the lex-largest support point)
        #[arg(long)]
        pivot: Option<String>,
    },
    /// Integral points of an integer curve in [K, K+H] x [L, L+H]
    BoxCount {
        /// Polynomial with integer coefficients (inline or @file)
        #[arg(long)]
        poly: String,
        #[arg(long = "k")]
        k: i64,
        #[arg(long = "l")]
        l: i64,
        #[arg(long = "h")]
        h: u64,
        /// List the points as well
        #[arg(long)]
        points: bool,
    },
    /// Orbit metrics of a rational-map system: collision time T, interval
    /// radius L, or generated-subgroup order G
    Orbit {
        #[arg(long = "p")]
        p: u64,
        /// One map per line or ';'-separated, each "f" or "f / g" (inline
        /// or @file)
        #[arg(long)]
        system: String,
        #[arg(long = "u")]
        u: u64,
        #[arg(long = "N", default_value_t = 0)]
        n: u64,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Sample count in sampled mode
        #[arg(long, default_value_t = crate::dynamics::DEFAULT_SAMPLES)]
        samples: u64,
        /// Node budget for the tree walk
        #[arg(long, default_value_t = crate::dynamics::DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Depth cap for the collision search (default: p)
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value_t = DistanceArg::Circular)]
        distance: DistanceArg,
        /// Seed for sampled mode (CURVECOUNT_SEED overrides)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a JSON-configured verification campaign
    Campaign {
        #[arg(long)]
        config: PathBuf,
        /// Output directory for counting.csv, dynamics.csv, summary.json
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_arg(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(text.to_string()),
    }
}

fn env_seed() -> Option<u64> {
    std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok())
}

fn parse_pair(text: &str) -> Result<(u32, u32)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::invalid("pair", format!("'{}' (want i,j)", text)))?;
    Ok((
        a.trim()
            .parse()
            .map_err(|_| Error::invalid("pair", text.to_string()))?,
        b.trim()
            .parse()
            .map_err(|_| Error::invalid("pair", text.to_string()))?,
    ))
}

fn parse_solutions(text: &str) -> Result<Vec<(u64, u64)>> {
    text.split([';', ' '])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (x, y) = s
                .split_once(',')
                .ok_or_else(|| Error::invalid("solution", format!("'{}' (want x,y)", s)))?;
            Ok((
                x.trim()
                    .parse()
                    .map_err(|_| Error::invalid("solution", s.to_string()))?,
                y.trim()
                    .parse()
                    .map_err(|_| Error::invalid("solution", s.to_string()))?,
            ))
        })
        .collect()
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.workers > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
    }
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {}", err);
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Delta { p, poly } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let delta = f.delta()?;
            match format {
                Format::Human => println!("{}", delta),
                Format::Csv => {
                    println!("p,delta");
                    println!("{},{}", p, delta);
                }
                Format::Json => println!("{}", json!({ "p": p, "delta": delta })),
            }
        }
        Command::Irreducible {
            p,
            poly,
            absolute,
            yn_max,
        } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let plain = is_irreducible_bivariate(&f)?;
            let abs = if absolute {
                Some(is_absolutely_irreducible(&f)?)
            } else {
                None
            };
            let fxyn = match yn_max {
                Some(n_max) => Some(check_fxyn_hypothesis(&f, n_max)?),
                None => None,
            };
            match format {
                Format::Human => {
                    println!("irreducible over F_{}: {}", p, plain);
                    if let Some(a) = abs {
                        println!("absolutely irreducible: {}", a);
                    }
                    if let Some(r) = fxyn {
                        match r.first_failing_n {
                            None => println!(
                                "F(X, Y^n) irreducible for all n <= {} (verified up to n_max only)",
                                r.n_max
                            ),
                            Some(n) => println!("F(X, Y^n) reducible at n = {}", n),
                        }
                    }
                }
                Format::Csv => {
                    println!("p,irreducible,absolutely_irreducible,yn_first_failure");
                    println!(
                        "{},{},{},{}",
                        p,
                        plain,
                        abs.map(|b| b.to_string()).unwrap_or_default(),
                        fxyn.and_then(|r| r.first_failing_n)
                            .map(|n| n.to_string())
                            .unwrap_or_default()
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "irreducible": plain,
                        "absolutely_irreducible": abs,
                        "yn_first_failure": fxyn.and_then(|r| r.first_failing_n),
                        "yn_max": fxyn.map(|r| r.n_max),
                    })
                ),
            }
        }
        Command::Count {
            p,
            poly,
            set_a,
            set_b,
            oracle,
            budget,
        } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let a = PointSet::parse(&ctx, &set_a)?;
            let b = PointSet::parse(&ctx, &set_b)?;
            let result = if oracle {
                count_solutions_oracle(&f, &a, &b)?
            } else {
                count_solutions_with(
                    &f,
                    &a,
                    &b,
                    budget.map(|max_units| Budget { max_units }).unwrap_or_default(),
                )?
            };
            match format {
                Format::Human => println!("{}", result.count),
                Format::Csv => {
                    println!("p,method,count,elapsed_ms");
                    println!(
                        "{},{},{},{}",
                        p,
                        result.method,
                        result.count,
                        result.elapsed.as_millis()
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "method": result.method.to_string(),
                        "count": result.count,
                        "witnesses": result.witnesses,
                        "elapsed_ms": result.elapsed.as_millis() as u64,
                    })
                ),
            }
        }
        Command::ImageCount {
            p,
            map,
            set_a,
            set_b,
        } => {
            let ctx = FieldContext::new(p)?;
            let psi = RationalMap::parse(&ctx, &read_arg(&map)?)?;
            let i = PointSet::parse(&ctx, &set_a)?;
            let j = PointSet::parse(&ctx, &set_b)?;
            let result = count_rational_image(&psi, &i, &j)?;
            match format {
                Format::Human => println!("{}", result.count),
                Format::Csv => {
                    println!("p,degree,count,elapsed_ms");
                    println!(
                        "{},{},{},{}",
                        p,
                        psi.degree(),
                        result.count,
                        result.elapsed.as_millis()
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "degree": psi.degree(),
                        "count": result.count,
                        "witnesses": result.witnesses,
                    })
                ),
            }
        }
        Command::Resultant { p, poly, shift } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let shifted = f.shift(&(shift % p), &0);
            let r = resultant_x(&f, &shifted)?;
            match format {
                Format::Human => {
                    println!("{}", r.format_with("U", "V"));
                    println!("# as X,Y input for torsion-check: {}", r)
                }
                Format::Csv => {
                    println!("p,shift,resultant");
                    println!("{},{},{}", p, shift, r.format_with("U", "V").replace(',', ";"));
                }
                Format::Json => println!(
                    "{}",
                    json!({ "p": p, "shift": shift, "resultant": r.to_string() })
                ),
            }
        }
        Command::TorsionCheck { p, poly } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let shape = is_torsion_form(&f);
            let divisor = divisible_by_torsion_form(&f)?;
            match format {
                Format::Human => {
                    match &shape {
                        Some(t) => println!("torsion form: {}", t),
                        None => println!("torsion form: no"),
                    }
                    match &divisor {
                        Some(t) => println!("torsion divisor: {}", t),
                        None => println!("torsion divisor: none"),
                    }
                }
                Format::Csv => {
                    println!("p,is_torsion_form,torsion_divisor");
                    println!(
                        "{},{},{}",
                        p,
                        shape.is_some(),
                        divisor.map(|t| t.to_string().replace(',', ";")).unwrap_or_default()
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "is_torsion_form": shape.map(|t| t.to_string()),
                        "torsion_divisor": divisor.map(|t| t.to_string()),
                    })
                ),
            }
        }
        Command::Lift {
            p,
            poly,
            solutions,
            box_side,
            pivot,
        } => {
            let ctx = FieldContext::new(p)?;
            let f = parse_poly(&read_arg(&poly)?, &ctx)?;
            let delta = f.delta()?;
            let need = (delta - 1) as usize;
            let sols = match (&solutions, box_side) {
                (Some(text), _) => parse_solutions(text)?,
                (None, side) => {
                    let side = side.unwrap_or_else(|| (p - 1).min(4 * delta * delta));
                    collect_box_solutions(&f, side, need + 8)?
                }
            };
            let pivot = match pivot {
                Some(text) => parse_pair(&text)?,
                None => f.leading_term().map(|(k, _)| k).unwrap(),
            };
            // slide a window over the solutions until the system is regular
            let mut lift = None;
            let mut last_err = Error::InsufficientSolutions {
                needed: need,
                got: sols.len(),
            };
            for start in 0..=sols.len().saturating_sub(need) {
                match lift_construction(&f, pivot, &sols[start..]) {
                    Ok(l) => {
                        lift = Some(l);
                        break;
                    }
                    Err(e @ Error::SingularSystem) => last_err = e,
                    Err(e) => return Err(e),
                }
            }
            let lift = lift.ok_or(last_err)?;
            let congruent = lift.congruences_hold(&f);
            match format {
                Format::Human => {
                    println!("delta = {}", lift.delta());
                    println!("pivot = X^{}*Y^{}", lift.pivot().0, lift.pivot().1);
                    println!("solutions used:");
                    for (x, y) in lift.solutions_used() {
                        println!("  ({}, {})", x, y);
                    }
                    println!("v = {}", lift.pivot_det());
                    for ((i, j), u) in lift.cofactor_dets() {
                        println!("u[{},{}] = {}", i, j, u);
                    }
                    println!("lifted polynomial: {}", lift.lifted());
                    println!(
                        "congruences v*F_ij = u_ij*F_pivot (mod {}): {}",
                        p,
                        if congruent { "verified" } else { "FAILED" }
                    );
                }
                Format::Csv => {
                    println!("term,determinant");
                    println!(
                        "pivot({};{}),{}",
                        lift.pivot().0,
                        lift.pivot().1,
                        lift.pivot_det()
                    );
                    for ((i, j), u) in lift.cofactor_dets() {
                        println!("u({};{}),{}", i, j, u);
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "delta": lift.delta(),
                        "pivot": [lift.pivot().0, lift.pivot().1],
                        "v": lift.pivot_det().to_string(),
                        "u": lift.cofactor_dets().iter()
                            .map(|(&(i, j), u)| json!([i, j, u.to_string()]))
                            .collect::<Vec<_>>(),
                        "lifted": lift.lifted().to_string(),
                        "congruences_verified": congruent,
                        "solutions_used": lift.solutions_used(),
                    })
                ),
            }
        }
        Command::BoxCount {
            poly,
            k,
            l,
            h,
            points,
        } => {
            let f = parse_poly(&read_arg(&poly)?, &IntegerRing)?;
            let result = count_integer_box(&f, k, l, h, points || format == Format::Json)?;
            match format {
                Format::Human => {
                    println!("{}", result.count);
                    if !result.degenerate_rows.is_empty() {
                        println!("degenerate rows (full rows counted): {:?}", result.degenerate_rows);
                    }
                    if points {
                        for (x, y) in result.points.as_deref().unwrap_or(&[]) {
                            println!("({}, {})", x, y);
                        }
                    }
                }
                Format::Csv => {
                    println!("k,l,h,count,degenerate_rows");
                    println!(
                        "{},{},{},{},{}",
                        k,
                        l,
                        h,
                        result.count,
                        result.degenerate_rows.len()
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "k": k, "l": l, "h": h,
                        "count": result.count,
                        "degenerate_rows": result.degenerate_rows,
                        "points": result.points,
                    })
                ),
            }
        }
        Command::Orbit {
            p,
            system,
            u,
            n,
            metric,
            mode,
            samples,
            budget,
            cap,
            distance,
            seed,
        } => {
            let ctx = FieldContext::new(p)?;
            let sys = MapSystem::parse(&ctx, &read_arg(&system)?)?;
            let opts = SearchOptions {
                sampled: mode == ModeArg::Sampled,
                samples,
                node_budget: budget,
                seed: env_seed().unwrap_or(seed),
                distance: match distance {
                    DistanceArg::Circular => DistanceMode::Circular,
                    DistanceArg::Linear => DistanceMode::Linear,
                },
                depth_cap: cap,
            };
            let report = match metric {
                MetricArg::T => collision_time(&sys, u, &opts)?,
                MetricArg::L => interval_metric(&sys, u, n, &opts)?,
                MetricArg::G => group_metric(&sys, u, n, &opts)?,
            };
            match format {
                Format::Human => {
                    println!("{}", report.value);
                    if let Some(note) = &report.note {
                        println!("note: {}", note);
                    }
                }
                Format::Csv => {
                    println!("p,s,degrees,u,N,metric,value,exact,mode,seed,bound_value,ratio,error");
                    println!(
                        "{},{},{},{},{},{},{},{},{},{},,,",
                        p,
                        sys.len(),
                        sys.degrees_string(),
                        u,
                        if report.metric == Metric::T {
                            String::new()
                        } else {
                            n.to_string()
                        },
                        report.metric,
                        report.value,
                        report.exact,
                        report.mode,
                        opts.seed,
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "p": p,
                        "s": sys.len(),
                        "degrees": sys.degrees_string(),
                        "u": u,
                        "N": n,
                        "metric": report.metric.to_string(),
                        "value": report.value,
                        "witness": report.witness,
                        "exact": report.exact,
                        "mode": report.mode.to_string(),
                        "nodes_expanded": report.nodes_expanded,
                        "note": report.note,
                    })
                ),
            }
        }
        Command::Campaign { config, out } => {
            let mut campaign = Campaign::from_path(&config)?;
            if let Some(seed) = env_seed() {
                campaign.seed = seed;
            }
            let outcome = run_campaign(&campaign, &out)?;
            println!("counting rows: {}", outcome.summary.counting_rows);
            println!("dynamics rows: {}", outcome.summary.dynamics_rows);
            println!("errors: {}", outcome.summary.errors.len());
            println!("wrote {}", outcome.counting_csv.display());
            println!("wrote {}", outcome.dynamics_csv.display());
            println!("wrote {}", outcome.summary_json.display());
        }
    }
    Ok(())
}
