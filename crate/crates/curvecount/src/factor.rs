//! Univariate factorization over F_p and F_{p^k} (squarefree split,
//! distinct-degree split, randomized equal-degree split with a pinned
//! seed), bivariate irreducibility via Kronecker substitution, absolute
//! irreducibility via extension levels, and the two-term "torsion form"
//! checks used by the resultant screen.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{ExtensionField, FieldContext};
use crate::poly::{BivariatePoly, UnivariatePoly};
use crate::ring::{FieldOps, Ring};

/// Total-degree cap for the bivariate irreducibility tests.
pub const BIVARIATE_DEGREE_CAP: u32 = 6;
/// Modulus cap for the exhaustive torsion-divisor enumeration.
pub const TORSION_MODULUS_CAP: u64 = 1 << 20;
/// Pinned seed for the randomized equal-degree split.
pub const FACTOR_SEED: u64 = 0x5eed_fac7;

const SUBSET_CAP: u64 = 1 << 18;

/// Result of a univariate factorization; the product of `factors` (with
/// multiplicities) times `unit` equals the input exactly.
#[derive(Clone, Debug)]
pub struct Factorization<F: FieldOps> {
    pub ring: F,
    pub unit: F::Elem,
    pub factors: Vec<(UnivariatePoly<F>, u32)>,
}

impl<F: FieldOps> Factorization<F> {
    pub fn product(&self) -> UnivariatePoly<F> {
        let mut acc = UnivariatePoly::constant(self.ring.clone(), self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn verify(&self, input: &UnivariatePoly<F>) -> bool {
        &self.product() == input
    }
}

pub fn factor_univariate<F: FieldOps>(f: &UnivariatePoly<F>) -> Result<Factorization<F>> {
    factor_univariate_seeded(f, FACTOR_SEED)
}

pub fn factor_univariate_seeded<F: FieldOps>(
    f: &UnivariatePoly<F>,
    seed: u64,
) -> Result<Factorization<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = f.ring().clone();
    let unit = f.leading_coeff().unwrap().clone();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table: BTreeMap<UnivariatePoly<F>, u32> = BTreeMap::new();
    if monic.degree().unwrap() >= 1 {
        let q = field_size_checked(&ring)?;
        for (g, mult) in squarefree_decomposition(&monic) {
            for (h, d0) in distinct_degree_split(&g, q) {
                for irr in equal_degree_split(&h, d0, q, &mut rng) {
                    *table.entry(irr).or_insert(0) += mult;
                }
            }
        }
    }
    Ok(Factorization {
        ring,
        unit,
        factors: table.into_iter().collect(),
    })
}

fn field_size_checked<F: FieldOps>(ring: &F) -> Result<u128> {
    ring.field_size().ok_or(Error::ModulusTooLarge {
        p: ring.characteristic(),
        cap: u64::MAX,
    })
}

/// a^(1/p) via Frobenius: a^(p^(k-1)).
fn elem_pth_root<F: FieldOps>(ring: &F, a: &F::Elem) -> F::Elem {
    let k = ring.extension_degree();
    if k == 1 {
        return a.clone();
    }
    let mut e: u128 = 1;
    for _ in 0..k - 1 {
        e *= ring.characteristic() as u128;
    }
    ring.pow(a, e)
}

fn poly_pth_root<F: FieldOps>(f: &UnivariatePoly<F>) -> UnivariatePoly<F> {
    let ring = f.ring().clone();
    let p = ring.characteristic() as usize;
    let deg = f.degree().unwrap_or(0);
    let coeffs: Vec<F::Elem> = (0..=deg / p)
        .map(|i| elem_pth_root(&ring, &f.coeff(p * i)))
        .collect();
    UnivariatePoly::from_coeffs(ring, coeffs)
}

/// Squarefree decomposition in characteristic p, handling the vanishing
/// derivative branch via p-th roots.
fn squarefree_decomposition<F: FieldOps>(f: &UnivariatePoly<F>) -> Vec<(UnivariatePoly<F>, u32)> {
    let p = f.ring().characteristic() as u32;
    let deriv = f.derivative();
    if deriv.is_zero() {
        return squarefree_decomposition(&poly_pth_root(f))
            .into_iter()
            .map(|(h, m)| (h, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&deriv);
    let mut w = f.divmod(&c).0;
    let mut i = 1u32;
    while w.degree().map_or(false, |d| d >= 1) {
        let y = w.gcd(&c);
        let z = w.divmod(&y).0;
        if z.degree().map_or(false, |d| d >= 1) {
            out.push((z.monic(), i));
        }
        c = c.divmod(&y).0;
        w = y;
        i += 1;
    }
    if c.degree().map_or(false, |d| d >= 1) {
        for (h, m) in squarefree_decomposition(&poly_pth_root(&c)) {
            out.push((h, m * p));
        }
    }
    out
}

/// Split a squarefree monic polynomial into products of irreducibles of
/// equal degree; returns (product, degree) pairs.
fn distinct_degree_split<F: FieldOps>(
    f: &UnivariatePoly<F>,
    q: u128,
) -> Vec<(UnivariatePoly<F>, usize)> {
    let ring = f.ring().clone();
    let x = UnivariatePoly::x(ring);
    let mut out = Vec::new();
    let mut rem = f.clone();
    let mut h = x.rem(&rem);
    let mut d = 0usize;
    while rem.degree().map_or(false, |dd| dd >= 1) {
        d += 1;
        if 2 * d > rem.degree().unwrap() {
            let deg = rem.degree().unwrap();
            out.push((rem, deg));
            break;
        }
        h = h.powmod_u128(q, &rem);
        let g = rem.gcd(&h.sub(&x));
        if g.degree().map_or(false, |dd| dd >= 1) {
            rem = rem.divmod(&g).0;
            out.push((g, d));
            h = h.rem(&rem);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree split (odd q).
fn equal_degree_split<F: FieldOps>(
    f: &UnivariatePoly<F>,
    d0: usize,
    q: u128,
    rng: &mut ChaCha8Rng,
) -> Vec<UnivariatePoly<F>> {
    let n = f.degree().unwrap();
    if n == d0 {
        return vec![f.monic()];
    }
    let ring = f.ring().clone();
    let e = (BigUint::from(q).pow(d0 as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let coeffs: Vec<F::Elem> = (0..n).map(|_| ring.random_elem(rng)).collect();
        let a = UnivariatePoly::from_coeffs(ring.clone(), coeffs);
        if a.is_constant() {
            continue;
        }
        let b = a
            .powmod_biguint(&e, f)
            .sub(&UnivariatePoly::one(ring.clone()));
        let g = f.gcd(&b);
        if let Some(dg) = g.degree() {
            if dg >= 1 && dg < n {
                let rest = f.divmod(&g).0;
                let mut out = equal_degree_split(&g, d0, q, rng);
                out.extend(equal_degree_split(&rest, d0, q, rng));
                return out;
            }
        }
    }
}

/// Degree-n f is irreducible iff X^(q^n) = X mod f and gcd(X^(q^(n/t)) - X, f)
/// is trivial for every prime t | n.
pub fn is_irreducible_univariate<F: FieldOps>(f: &UnivariatePoly<F>) -> Result<bool> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let ring = f.ring().clone();
    let q = field_size_checked(&ring)?;
    let monic = f.monic();
    let x = UnivariatePoly::x(ring).rem(&monic);
    let mut h = x.clone();
    for i in 1..=n {
        h = h.powmod_u128(q, &monic);
        if i < n && n % i == 0 && is_prime_usize(n / i) {
            let g = monic.gcd(&h.sub(&x));
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(h == x)
}

fn is_prime_usize(n: usize) -> bool {
    crate::ff::is_prime_u64(n as u64)
}

/// Roots of a univariate polynomial in F_p, sorted.
pub fn roots_mod_p(u: &UnivariatePoly<FieldContext>) -> Vec<u64> {
    let deg = match u.degree() {
        None | Some(0) => return vec![],
        Some(d) => d,
    };
    let ctx = u.ring().clone();
    let p = ctx.p();
    let monic = u.monic();
    if deg == 1 {
        return vec![ctx.neg(&monic.coeff(0))];
    }
    let x = UnivariatePoly::x(ctx.clone());
    let xq = x.powmod_u128(p as u128, &monic);
    let split = monic.gcd(&xq.sub(&x));
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    collect_linear_roots(&split, &ctx, &mut rng, &mut roots);
    roots.sort_unstable();
    roots
}

fn collect_linear_roots(
    g: &UnivariatePoly<FieldContext>,
    ctx: &FieldContext,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<u64>,
) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(ctx.neg(&g.monic().coeff(0))),
        Some(n) => {
            let p = ctx.p();
            loop {
                let c = ctx.random_elem(rng);
                let shifted =
                    UnivariatePoly::from_coeffs(ctx.clone(), vec![c, 1]); // X + c
                let h = shifted
                    .powmod_u128(((p - 1) / 2) as u128, g)
                    .sub(&UnivariatePoly::one(ctx.clone()));
                let w = g.gcd(&h);
                if let Some(dw) = w.degree() {
                    if dw >= 1 && dw < n {
                        let rest = g.divmod(&w).0;
                        collect_linear_roots(&w, ctx, rng, out);
                        collect_linear_roots(&rest, ctx, rng, out);
                        return;
                    }
                }
            }
        }
    }
}

fn reverse_kronecker<F: FieldOps>(g: &UnivariatePoly<F>, stride: u32) -> BivariatePoly<F> {
    BivariatePoly::from_terms(
        g.ring().clone(),
        g.coeffs().iter().enumerate().filter_map(|(e, c)| {
            if g.ring().is_zero(c) {
                None
            } else {
                Some((((e as u32) % stride, (e as u32) / stride), c.clone()))
            }
        }),
    )
}

/// Bivariate irreducibility by Kronecker substitution Y := X^(deg_X + 1):
/// factor the univariate image and search factor sub-multisets whose
/// reversal divides the input exactly.
pub fn is_irreducible_bivariate<F: FieldOps>(f: &BivariatePoly<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(false);
    }
    let d = f.total_degree().unwrap();
    if d > BIVARIATE_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree: d,
            cap: BIVARIATE_DEGREE_CAP,
            note: Some("bivariate irreducibility test".into()),
        });
    }
    // monomial content first
    let min_i = f.support().map(|(i, _)| i).min().unwrap();
    let min_j = f.support().map(|(_, j)| j).min().unwrap();
    if min_i + min_j > 0 {
        let inner = BivariatePoly::from_terms(
            f.ring().clone(),
            f.terms().map(|(&(i, j), c)| ((i - min_i, j - min_j), c.clone())),
        );
        return Ok(inner.is_constant() && min_i + min_j == 1);
    }
    let ring = f.ring().clone();
    let dx = f.deg_x().unwrap();
    let dy = f.deg_y().unwrap();
    let stride = dx + 1;
    let mut coeffs = vec![ring.zero(); (dx + stride * dy) as usize + 1];
    for (&(i, j), c) in f.terms() {
        coeffs[(i + stride * j) as usize] = c.clone();
    }
    let image = UnivariatePoly::from_coeffs(ring.clone(), coeffs);
    let factorization = factor_univariate(&image)?;
    let items = &factorization.factors;
    let combos: u64 = items
        .iter()
        .map(|(_, m)| *m as u64 + 1)
        .try_fold(1u64, |acc, m| acc.checked_mul(m))
        .unwrap_or(u64::MAX);
    if combos > SUBSET_CAP {
        return Err(Error::FactorSearchTooLarge {
            combinations: combos,
        });
    }
    // mixed-radix counter over factor multiplicities; skip empty and full
    let mut counter = vec![0u32; items.len()];
    loop {
        let mut pos = 0;
        loop {
            if pos == counter.len() {
                return Ok(true);
            }
            counter[pos] += 1;
            if counter[pos] <= items[pos].1 {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
        if counter
            .iter()
            .zip(items)
            .all(|(&c, (_, m))| c == *m)
        {
            continue; // full product reverses to f itself
        }
        let mut prod = UnivariatePoly::one(ring.clone());
        for (cnt, (factor, _)) in counter.iter().zip(items) {
            for _ in 0..*cnt {
                prod = prod.mul(factor);
            }
        }
        let candidate = reverse_kronecker(&prod, stride);
        if candidate.is_constant() {
            continue;
        }
        if let Some(q) = f.div_exact(&candidate) {
            if !q.is_constant() {
                return Ok(false);
            }
        }
    }
}

/// Absolute irreducibility of F over F_p: irreducible over F_{p^k} for
/// every k = 1..=deg F. A nontrivial absolute factorization of an
/// F_p-irreducible polynomial descends to one of these levels because the
/// absolutely irreducible factors are Frobenius conjugates.
pub fn is_absolutely_irreducible(f: &BivariatePoly<FieldContext>) -> Result<bool> {
    if !is_irreducible_bivariate(f)? {
        return Ok(false);
    }
    let d = f.total_degree().unwrap();
    let base = f.ring().clone();
    for k in 2..=d.max(1) {
        let ext = ExtensionField::find(&base, k)?;
        let lifted = f.map_ring(ext.clone(), |c| ext.embed(*c));
        if !is_irreducible_bivariate(&lifted)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FxynReport {
    pub n_max: u32,
    pub ok: bool,
    pub first_failing_n: Option<u32>,
}

/// Check that F(X, Y^n) is irreducible for n = 1..=n_max. The unbounded
/// hypothesis is only ever "verified up to n_max".
pub fn check_fxyn_hypothesis<F: FieldOps>(
    f: &BivariatePoly<F>,
    n_max: u32,
) -> Result<FxynReport> {
    for n in 1..=n_max {
        let g = f.substitute_y_power(n)?;
        let irreducible = is_irreducible_bivariate(&g).map_err(|e| match e {
            Error::DegreeTooLarge { degree, cap, .. } => Error::DegreeTooLarge {
                degree,
                cap,
                note: Some(format!("F(X, Y^n) at n = {}", n)),
            },
            other => other,
        })?;
        if !irreducible {
            return Ok(FxynReport {
                n_max,
                ok: false,
                first_failing_n: Some(n),
            });
        }
    }
    Ok(FxynReport {
        n_max,
        ok: true,
        first_failing_n: None,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorsionShape {
    /// a*X^m*Y^n + b
    Product,
    /// a*X^m + b*Y^n
    Split,
}

/// A two-term exceptional shape: a*X^m*Y^n + b or a*X^m + b*Y^n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TorsionForm {
    pub shape: TorsionShape,
    pub m: u32,
    pub n: u32,
    pub alpha: u64,
    pub beta: u64,
}

impl std::fmt::Display for TorsionForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.shape {
            TorsionShape::Product => write!(
                f,
                "{}*X^{}*Y^{} + {}",
                self.alpha, self.m, self.n, self.beta
            ),
            TorsionShape::Split => {
                write!(f, "{}*X^{} + {}*Y^{}", self.alpha, self.m, self.beta, self.n)
            }
        }
    }
}

impl TorsionForm {
    pub fn to_poly(&self, ctx: &FieldContext) -> BivariatePoly<FieldContext> {
        match self.shape {
            TorsionShape::Product => BivariatePoly::from_terms(
                ctx.clone(),
                [((self.m, self.n), self.alpha), ((0, 0), self.beta)],
            ),
            TorsionShape::Split => BivariatePoly::from_terms(
                ctx.clone(),
                [((self.m, 0), self.alpha), ((0, self.n), self.beta)],
            ),
        }
    }
}

/// Pattern-match a two-term polynomial against the torsion shapes.
pub fn is_torsion_form(f: &BivariatePoly<FieldContext>) -> Option<TorsionForm> {
    if f.term_count() != 2 {
        return None;
    }
    let terms: Vec<((u32, u32), u64)> = f.terms().map(|(&k, &c)| (k, c)).collect();
    let (low, high) = (terms[0], terms[1]); // BTreeMap order: low < high
    if low.0 == (0, 0) {
        return Some(TorsionForm {
            shape: TorsionShape::Product,
            m: high.0 .0,
            n: high.0 .1,
            alpha: high.1,
            beta: low.1,
        });
    }
    if high.0 .1 == 0 && low.0 .0 == 0 && high.0 .0 >= 1 && low.0 .1 >= 1 {
        return Some(TorsionForm {
            shape: TorsionShape::Split,
            m: high.0 .0,
            n: low.0 .1,
            alpha: high.1,
            beta: low.1,
        });
    }
    None
}

/// Exhaustive search for a torsion-form divisor of R, with alpha
/// normalized to 1 and beta ranging over all nonzero residues. Refuses
/// large moduli rather than sampling: a false negative would corrupt the
/// downstream experiments.
pub fn divisible_by_torsion_form(
    r: &BivariatePoly<FieldContext>,
) -> Result<Option<TorsionForm>> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = r.ring().clone();
    let p = ctx.p();
    if p > TORSION_MODULUS_CAP {
        return Err(Error::ModulusTooLarge {
            p,
            cap: TORSION_MODULUS_CAP,
        });
    }
    let du = r.deg_x().unwrap_or(0);
    let dv = r.deg_y().unwrap_or(0);
    for shape in [TorsionShape::Product, TorsionShape::Split] {
        for m in 1..=du {
            for n in 1..=dv {
                for beta in 1..p {
                    let form = TorsionForm {
                        shape,
                        m,
                        n,
                        alpha: 1,
                        beta,
                    };
                    if r.div_exact(&form.to_poly(&ctx)).is_some() {
                        return Ok(Some(form));
                    }
                }
            }
        }
    }
    Ok(None)
}
