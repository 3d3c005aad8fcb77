//! Exact sparse bivariate and dense univariate polynomials over a
//! coefficient ring (prime field, extension field, or the integers).

mod lift;
mod parse;
mod resultant;

pub use lift::{collect_box_solutions, lift_construction, LiftedPoly};
pub use parse::{parse_poly, parse_univariate_x};
pub use resultant::{resultant_x, resultant_x_interpolation, resultant_x_sylvester};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::{FieldOps, Ring};

/// Dense univariate polynomial, coefficients ascending, trailing zeros
/// trimmed (empty vector = zero polynomial).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UnivariatePoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> UnivariatePoly<R> {
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = UnivariatePoly { ring, coeffs };
        p.normalize();
        p
    }

    pub fn zero(ring: R) -> Self {
        UnivariatePoly {
            ring,
            coeffs: vec![],
        }
    }

    pub fn one(ring: R) -> Self {
        let c = ring.one();
        UnivariatePoly {
            ring,
            coeffs: vec![c],
        }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    pub fn x(ring: R) -> Self {
        let (z, o) = (ring.zero(), ring.one());
        UnivariatePoly {
            ring,
            coeffs: vec![z, o],
        }
    }

    pub fn monomial(ring: R, c: R::Elem, deg: usize) -> Self {
        let mut coeffs = vec![ring.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(ring, coeffs)
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .map_or(false, |c| self.ring.is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.add(&self.ring.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i);
                let b = other.coeffs.get(i);
                match (a, b) {
                    (Some(a), Some(b)) => self.ring.add(a, b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UnivariatePoly {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn mul_scalar(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.ring.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ring.mul(&self.ring.from_i64(i as i64), c))
            .collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let s = self.ring.elem_string(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = i == 0 || mag != "1";
            if show_coeff {
                out.push_str(&mag);
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }
}

impl<R: FieldOps> UnivariatePoly<R> {
    /// Divide by a nonzero polynomial, returning (quotient, remainder).
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let lead_inv = self
            .ring
            .inv(d.leading_coeff().unwrap())
            .expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let dd = d.coeffs.len() - 1;
        if rem.coeffs.len() < d.coeffs.len() {
            return (Self::zero(self.ring.clone()), rem);
        }
        let mut q = vec![self.ring.zero(); rem.coeffs.len() - dd];
        while rem.coeffs.len() >= d.coeffs.len() && !rem.is_zero() {
            let shift = rem.coeffs.len() - d.coeffs.len();
            let c = self.ring.mul(rem.leading_coeff().unwrap(), &lead_inv);
            q[shift] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = self.ring.mul(&c, dc);
                rem.coeffs[shift + i] = self.ring.sub(&rem.coeffs[shift + i], &t);
            }
            rem.normalize();
        }
        (Self::from_coeffs(self.ring.clone(), q), rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.inv(lc).expect("nonzero leading coefficient");
                self.mul_scalar(&inv)
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn powmod_u128(&self, mut e: u128, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.ring.clone()).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn powmod_biguint(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.ring.clone()).rem(modulus);
        let mut base = self.rem(modulus);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map_ring<S: Ring>(
        &self,
        ring: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> UnivariatePoly<S> {
        UnivariatePoly::from_coeffs(ring, self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> fmt::Display for UnivariatePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("X"))
    }
}

/// Sparse bivariate polynomial: exponent pair -> nonzero coefficient.
/// The map order (lexicographic, first variable major) doubles as the
/// monomial order for division.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BivariatePoly<R: Ring> {
    ring: R,
    terms: BTreeMap<(u32, u32), R::Elem>,
}

impl<R: Ring> BivariatePoly<R> {
    pub fn zero(ring: R) -> Self {
        BivariatePoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::monomial(ring, c, 0, 0)
    }

    pub fn monomial(ring: R, c: R::Elem, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.is_zero(&c) {
            terms.insert((i, j), c);
        }
        BivariatePoly { ring, terms }
    }

    pub fn from_terms(ring: R, iter: impl IntoIterator<Item = ((u32, u32), R::Elem)>) -> Self {
        let mut p = Self::zero(ring);
        for ((i, j), c) in iter {
            p.insert_add(i, j, c);
        }
        p
    }

    /// Add `c` into the (i, j) coefficient, dropping it if the sum is zero.
    pub fn insert_add(&mut self, i: u32, j: u32, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &R::Elem)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.keys().copied()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> R::Elem {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.insert_add(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.insert_add(i, j, self.ring.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.insert_add(i1 + i2, j1 + j2, self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (&(i, j), a) in &self.terms {
            out.insert_add(i, j, self.ring.mul(a, c));
        }
        out
    }

    pub fn eval(&self, x: &R::Elem, y: &R::Elem) -> R::Elem {
        self.specialize_x(x).eval(y)
    }

    /// Substitute the first variable, leaving a univariate polynomial in the
    /// second.
    pub fn specialize_x(&self, x: &R::Elem) -> UnivariatePoly<R> {
        let dy = self.deg_y().unwrap_or(0) as usize;
        let mut coeffs = vec![self.ring.zero(); dy + 1];
        let dx = self.deg_x().unwrap_or(0) as usize;
        let mut pows = Vec::with_capacity(dx + 1);
        pows.push(self.ring.one());
        for i in 1..=dx {
            let prev = pows[i - 1].clone();
            pows.push(self.ring.mul(&prev, x));
        }
        for (&(i, j), c) in &self.terms {
            let t = self.ring.mul(c, &pows[i as usize]);
            coeffs[j as usize] = self.ring.add(&coeffs[j as usize], &t);
        }
        UnivariatePoly::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn specialize_y(&self, y: &R::Elem) -> UnivariatePoly<R> {
        self.swap_vars().specialize_x(y)
    }

    pub fn swap_vars(&self) -> Self {
        BivariatePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// View a univariate polynomial in X as bivariate (second exponent 0).
    pub fn from_univariate_x(p: &UnivariatePoly<R>) -> Self {
        Self::from_terms(
            p.ring().clone(),
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    /// For each X-exponent up to deg_X, the largest Y-exponent appearing on
    /// a support point with X-exponent at least that value.
    fn column_heights(&self) -> Vec<u32> {
        let dx = self.deg_x().expect("nonzero polynomial") as usize;
        let mut max_at = vec![None::<u32>; dx + 1];
        for &(i, j) in self.terms.keys() {
            let slot = &mut max_at[i as usize];
            *slot = Some(slot.map_or(j, |m| m.max(j)));
        }
        let mut heights = vec![0u32; dx + 1];
        let mut running = 0u32;
        for i in (0..=dx).rev() {
            if let Some(m) = max_at[i] {
                running = running.max(m);
            }
            heights[i] = running;
        }
        heights
    }

    /// Number of distinct monomial divisors of the terms: the size of the
    /// union of the rectangles [0,i]x[0,j] over the support.
    pub fn delta(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .column_heights()
            .iter()
            .map(|&h| h as u64 + 1)
            .sum())
    }

    /// The divisor-closure set itself, in lexicographic order.
    pub fn divisor_closure(&self) -> Result<Vec<(u32, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let heights = self.column_heights();
        let mut out = Vec::new();
        for (i, &h) in heights.iter().enumerate() {
            for j in 0..=h {
                out.push((i as u32, j));
            }
        }
        Ok(out)
    }

    /// Replace Y by Y^n.
    pub fn substitute_y_power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("substitution power", "must be >= 1"));
        }
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let jn = j
                .checked_mul(n)
                .ok_or_else(|| Error::DegreeTooLarge {
                    degree: u32::MAX,
                    cap: u32::MAX,
                    note: Some("exponent overflow in Y^n substitution".into()),
                })?;
            terms.insert((i, jn), c.clone());
        }
        Ok(BivariatePoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// F(X+a, Y+b), expanded exactly.
    pub fn shift(&self, a: &R::Elem, b: &R::Elem) -> Self {
        let dx = self.deg_x().unwrap_or(0) as usize;
        let dy = self.deg_y().unwrap_or(0) as usize;
        // dense coefficient rows of (X+a)^i and (Y+b)^j
        let xpows = binomial_powers(&self.ring, a, dx);
        let ypows = binomial_powers(&self.ring, b, dy);
        let mut out = Self::zero(self.ring.clone());
        for (&(i, j), c) in &self.terms {
            for (ii, cx) in xpows[i as usize].iter().enumerate() {
                if self.ring.is_zero(cx) {
                    continue;
                }
                let cc = self.ring.mul(c, cx);
                for (jj, cy) in ypows[j as usize].iter().enumerate() {
                    if self.ring.is_zero(cy) {
                        continue;
                    }
                    out.insert_add(ii as u32, jj as u32, self.ring.mul(&cc, cy));
                }
            }
        }
        out
    }

    pub fn map_ring<S: Ring>(
        &self,
        ring: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> BivariatePoly<S> {
        BivariatePoly::from_terms(
            ring,
            self.terms.iter().map(|(&k, c)| (k, f(c))),
        )
    }

    pub fn leading_term(&self) -> Option<((u32, u32), &R::Elem)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    pub fn format_with(&self, var_x: &str, var_y: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let s = self.ring.elem_string(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = (i == 0 && j == 0) || mag != "1";
            if show_coeff {
                out.push_str(&mag);
            }
            let mut first = !show_coeff;
            for (var, e) in [(var_x, i), (var_y, j)] {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(var);
                if e > 1 {
                    out.push_str(&format!("^{}", e));
                }
            }
        }
        out
    }
}

impl<R: FieldOps> BivariatePoly<R> {
    /// Exact multivariate division by a single divisor; `None` when the
    /// division is not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let ((di, dj), dlc) = d.leading_term()?;
        let dlc_inv = self.ring.inv(dlc).expect("leading coeff nonzero");
        let mut r = self.clone();
        let mut q = Self::zero(self.ring.clone());
        while let Some(((ri, rj), rlc)) = r.leading_term() {
            if ri < di || rj < dj {
                return None;
            }
            let (mi, mj) = (ri - di, rj - dj);
            let c = self.ring.mul(rlc, &dlc_inv);
            // r -= c * X^mi Y^mj * d
            for (&(i, j), dc) in &d.terms.clone() {
                let t = self.ring.mul(&c, dc);
                r.insert_add(i + mi, j + mj, self.ring.neg(&t));
            }
            q.insert_add(mi, mj, c);
        }
        Some(q)
    }
}

fn binomial_powers<R: Ring>(ring: &R, a: &R::Elem, up_to: usize) -> Vec<Vec<R::Elem>> {
    // powers[i] = dense coefficients of (X + a)^i
    let mut powers: Vec<Vec<R::Elem>> = Vec::with_capacity(up_to + 1);
    powers.push(vec![ring.one()]);
    for i in 1..=up_to {
        let prev = &powers[i - 1];
        let mut next = vec![ring.zero(); i + 1];
        for (k, c) in prev.iter().enumerate() {
            // multiply by (X + a)
            next[k + 1] = ring.add(&next[k + 1], c);
            next[k] = ring.add(&next[k], &ring.mul(c, a));
        }
        powers.push(next);
    }
    powers
}

impl<R: Ring> fmt::Display for BivariatePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("X", "Y"))
    }
}
