//! Prime fields F_p, multiplicative subgroups, and explicit extensions F_{p^k}.
//!
//! Moduli are capped below 2^63 so every product fits in a `u128`. The unit
//! group order p-1 is factored once at context construction (trial division,
//! then Pollard rho) and reused for primitive roots, element orders and
//! subgroup generation.

use rand::Rng;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::poly::UnivariatePoly;
use crate::ring::{FieldOps, Ring};

pub const MAX_MODULUS: u64 = 1 << 63;
pub const MAX_EXTENSION_DEGREE: u32 = 8;
/// Subgroups with at most this many elements are materialized eagerly.
pub const SUBGROUP_MATERIALIZE_CAP: u64 = 1 << 20;
const TRIAL_DIVISION_BOUND: u64 = 1 << 20;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all inputs below 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'next_witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'next_witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // Brent's variant; n is odd, composite, and not a prime power of 2.
    let mut c = 1u64;
    loop {
        let f = |x: u64| add_mod(mul_mod(x, x, n), c, n);
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

/// Factor `n` into sorted (prime, exponent) pairs.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    for d in std::iter::once(2).chain((3..TRIAL_DIVISION_BOUND).step_by(2)) {
        if d * d > n {
            break;
        }
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
    }
    // Remaining cofactor: prime, or split recursively with rho.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            push(m, &mut out);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort_unstable();
    out
}

/// A prime field F_p with the factorization of p-1 and a primitive root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldContext {
    p: u64,
    factorization: Vec<(u64, u32)>,
    primitive_root: u64,
}

impl FieldContext {
    /// Verify primality, factor p-1 and find the least primitive root.
    pub fn new(p: u64) -> Result<Self> {
        if !(3..MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::CompositeModulus(p));
        }
        let factorization = factorize_u64(p - 1);
        let primitive_root = (2..p)
            .find(|&g| {
                factorization
                    .iter()
                    .all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1)
            })
            .expect("a primitive root exists for every prime modulus");
        Ok(FieldContext {
            p,
            factorization,
            primitive_root,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn primitive_root(&self) -> u64 {
        self.primitive_root
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(pow_mod(a, self.p - 2, self.p))
    }

    /// Least t >= 1 with x^t = 1: start from p-1 and strip primes while the
    /// power stays 1.
    pub fn element_order(&self, x: u64) -> Result<u64> {
        if x % self.p == 0 {
            return Err(Error::ZeroElement);
        }
        let mut t = self.p - 1;
        for &(q, e) in &self.factorization {
            for _ in 0..e {
                if t % q == 0 && pow_mod(x, t / q, self.p) == 1 {
                    t /= q;
                } else {
                    break;
                }
            }
        }
        Ok(t)
    }

    pub fn subgroup_of_order(&self, e: u64) -> Result<Subgroup> {
        self.subgroup_of_order_with_cap(e, SUBGROUP_MATERIALIZE_CAP)
    }

    pub fn subgroup_of_order_with_cap(&self, e: u64, cap: u64) -> Result<Subgroup> {
        if e == 0 || (self.p - 1) % e != 0 {
            return Err(Error::NotADivisor {
                e,
                order: self.p - 1,
            });
        }
        let generator = pow_mod(self.primitive_root, (self.p - 1) / e, self.p);
        let elements = if e <= cap {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = 1u64;
            for _ in 0..e {
                v.push(x);
                x = mul_mod(x, generator, self.p);
            }
            v.sort_unstable();
            Some(v)
        } else {
            None
        };
        Ok(Subgroup {
            ctx: self.clone(),
            order: e,
            generator,
            elements,
        })
    }

    /// Order of the subgroup generated by `gens`: the lcm of the element
    /// orders, since the unit group is cyclic. Empty input generates the
    /// trivial group.
    pub fn generated_subgroup_order(&self, gens: &[u64]) -> Result<u64> {
        let mut order = 1u64;
        for &g in gens {
            order = lcm_u64(order, self.element_order(g)?);
        }
        Ok(order)
    }
}

impl Ring for FieldContext {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_decimal(&self, digits: &str) -> Option<u64> {
        let mut acc = 0u64;
        for c in digits.chars() {
            let d = c.to_digit(10)? as u64;
            acc = add_mod(mul_mod(acc, 10, self.p), d, self.p);
        }
        Some(acc)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        if *b == 0 {
            None
        } else {
            Some(mul_mod(*a, pow_mod(*b, self.p - 2, self.p), self.p))
        }
    }
    fn elem_string(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FieldOps for FieldContext {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn extension_degree(&self) -> u32 {
        1
    }
    fn field_size(&self) -> Option<u128> {
        Some(self.p as u128)
    }
    fn elem_from_index(&self, idx: u64) -> Option<u64> {
        (idx < self.p).then_some(idx)
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// A multiplicative subgroup of F_p^* of order `e | p-1`, materialized when
/// small enough; membership beyond the cap is tested by x^e = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    ctx: FieldContext,
    order: u64,
    generator: u64,
    elements: Option<Vec<u64>>,
}

impl Subgroup {
    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Sorted element list when materialized.
    pub fn elements(&self) -> Option<&[u64]> {
        self.elements.as_deref()
    }

    pub fn contains(&self, x: u64) -> bool {
        if x == 0 {
            return false;
        }
        match &self.elements {
            Some(v) => v.binary_search(&x).is_ok(),
            None => pow_mod(x, self.order, self.ctx.p) == 1,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let p = self.ctx.p;
        let g = self.generator;
        let mut x = 1u64;
        (0..self.order).map(move |_| {
            let cur = x;
            x = mul_mod(x, g, p);
            cur
        })
    }
}

/// F_{p^k} presented as F_p[T]/(modulus), elements stored as coefficient
/// vectors of degree < k with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtensionField {
    base: FieldContext,
    k: u32,
    modulus: Vec<u64>,
}

impl ExtensionField {
    /// `modulus` must be monic irreducible of degree k in [1, 8]. The
    /// irreducibility check lives in the factor module.
    pub fn new(base: FieldContext, modulus: UnivariatePoly<FieldContext>) -> Result<Self> {
        let ext = Self::new_unchecked(base, &modulus)?;
        if ext.k > 1 && !crate::factor::is_irreducible_univariate(&modulus)? {
            return Err(Error::invalid(
                "extension modulus",
                format!("{} is reducible", modulus),
            ));
        }
        Ok(ext)
    }

    pub(crate) fn new_unchecked(
        base: FieldContext,
        modulus: &UnivariatePoly<FieldContext>,
    ) -> Result<Self> {
        let k = match modulus.degree() {
            Some(d) if d >= 1 => d as u32,
            _ => return Err(Error::invalid("extension modulus", "degree must be >= 1")),
        };
        if k > MAX_EXTENSION_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: k,
                cap: MAX_EXTENSION_DEGREE,
                note: Some("extension degree".into()),
            });
        }
        if !base.is_one(modulus.leading_coeff().expect("nonzero")) {
            return Err(Error::invalid("extension modulus", "must be monic"));
        }
        Ok(ExtensionField {
            base,
            k,
            modulus: modulus.coeffs().to_vec(),
        })
    }

    /// Deterministic search for an irreducible monic modulus of degree k:
    /// enumerate lower coefficient vectors in counting order.
    pub fn find(base: &FieldContext, k: u32) -> Result<Self> {
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: k,
                cap: MAX_EXTENSION_DEGREE,
                note: Some("extension degree".into()),
            });
        }
        if k == 1 {
            let m = UnivariatePoly::from_coeffs(base.clone(), vec![0, 1]);
            return Self::new_unchecked(base.clone(), &m);
        }
        let p = base.p();
        let mut counter: u128 = 1;
        loop {
            let mut coeffs = vec![0u64; k as usize + 1];
            coeffs[k as usize] = 1;
            let mut c = counter;
            for slot in coeffs.iter_mut().take(k as usize) {
                *slot = (c % p as u128) as u64;
                c /= p as u128;
            }
            if c > 0 {
                // exhausted p^k candidates; cannot happen for k >= 2
                return Err(Error::invalid(
                    "extension search",
                    "no irreducible modulus found",
                ));
            }
            let m = UnivariatePoly::from_coeffs(base.clone(), coeffs);
            if crate::factor::is_irreducible_univariate(&m)? {
                return Self::new_unchecked(base.clone(), &m);
            }
            counter += 1;
        }
    }

    pub fn base(&self) -> &FieldContext {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus_poly(&self) -> UnivariatePoly<FieldContext> {
        UnivariatePoly::from_coeffs(self.base.clone(), self.modulus.clone())
    }

    /// Embed a base-field element.
    pub fn embed(&self, a: u64) -> Vec<u64> {
        if a % self.base.p == 0 {
            vec![]
        } else {
            vec![a % self.base.p]
        }
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        let k = self.k as usize;
        while v.len() > k {
            let d = v.len() - 1;
            let lead = v[d];
            v.pop();
            if lead != 0 {
                for i in 0..k {
                    v[d - k + i] = sub_mod(v[d - k + i], mul_mod(lead, self.modulus[i], p), p);
                }
            }
        }
        Self::trim(&mut v);
        v
    }
}

impl Ring for ExtensionField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![]
    }
    fn one(&self) -> Vec<u64> {
        vec![1]
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        let mut v = vec![0u64; a.len().max(b.len())];
        for (i, slot) in v.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = add_mod(x, y, p);
        }
        Self::trim(&mut v);
        v
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        let mut v = vec![0u64; a.len().max(b.len())];
        for (i, slot) in v.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = sub_mod(x, y, p);
        }
        Self::trim(&mut v);
        v
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let p = self.base.p;
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = add_mod(v[i + j], mul_mod(x, y, p), p);
            }
        }
        self.reduce(v)
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        a.iter()
            .map(|&x| if x == 0 { 0 } else { p - x })
            .collect()
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.reduce_i64(n))
    }
    fn from_decimal(&self, digits: &str) -> Option<Vec<u64>> {
        Some(self.embed(self.base.from_decimal(digits)?))
    }
    fn div_exact(&self, a: &Vec<u64>, b: &Vec<u64>) -> Option<Vec<u64>> {
        let binv = FieldOps::inv(self, b)?;
        Some(self.mul(a, &binv))
    }
    fn elem_string(&self, a: &Vec<u64>) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 if c == 1 => "t".into(),
                1 => format!("{}*t", c),
                _ if c == 1 => format!("t^{}", i),
                _ => format!("{}*t^{}", c, i),
            })
            .collect();
        parts.join(" + ")
    }
}

impl FieldOps for ExtensionField {
    /// Inverse by the extended Euclidean algorithm against the modulus.
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if a.is_empty() {
            return None;
        }
        let p = self.base.p;
        // (r0, t0), (r1, t1) with invariant r = t * a (mod modulus)
        let mut r0 = self.modulus.clone();
        let mut r1 = a.clone();
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut q: Vec<u64> = vec![0; rem.len().saturating_sub(r1.len()) + 1];
            let lead_inv = pow_mod(*r1.last().unwrap(), p - 2, p);
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let c = mul_mod(*rem.last().unwrap(), lead_inv, p);
                q[shift] = c;
                for (i, &m) in r1.iter().enumerate() {
                    rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, m, p), p);
                }
                Self::trim(&mut rem);
            }
            // t_next = t0 - q * t1  (polynomial product, then reduce later)
            let mut qt = vec![0u64; q.len() + t1.len()];
            for (i, &qc) in q.iter().enumerate() {
                if qc == 0 {
                    continue;
                }
                for (j, &tc) in t1.iter().enumerate() {
                    qt[i + j] = add_mod(qt[i + j], mul_mod(qc, tc, p), p);
                }
            }
            Self::trim(&mut qt);
            let mut tn = vec![0u64; t0.len().max(qt.len())];
            for (i, slot) in tn.iter_mut().enumerate() {
                let x = t0.get(i).copied().unwrap_or(0);
                let y = qt.get(i).copied().unwrap_or(0);
                *slot = sub_mod(x, y, p);
            }
            Self::trim(&mut tn);
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = tn;
        }
        // r0 = gcd(modulus, a); must be a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let scale = pow_mod(r0[0], p - 2, p);
        let mut out: Vec<u64> = t0.iter().map(|&c| mul_mod(c, scale, p)).collect();
        Self::trim(&mut out);
        Some(self.reduce(out))
    }
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn extension_degree(&self) -> u32 {
        self.k
    }
    fn field_size(&self) -> Option<u128> {
        let mut q: u128 = 1;
        for _ in 0..self.k {
            q = q.checked_mul(self.base.p as u128)?;
        }
        Some(q)
    }
    fn elem_from_index(&self, idx: u64) -> Option<Vec<u64>> {
        let p = self.base.p as u128;
        let size = self.field_size()?;
        if (idx as u128) >= size {
            return None;
        }
        let mut v = Vec::new();
        let mut c = idx as u128;
        for _ in 0..self.k {
            v.push((c % p) as u64);
            c /= p;
        }
        Self::trim(&mut v);
        Some(v)
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> Vec<u64> {
        let mut v: Vec<u64> = (0..self.k).map(|_| rng.gen_range(0..self.base.p)).collect();
        Self::trim(&mut v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    #[test]
    fn context_13() {
        let ctx = FieldContext::new(13).unwrap();
        assert_eq!(ctx.factorization(), &[(2, 2), (3, 1)]);
        assert_eq!(ctx.primitive_root(), 2);
    }

    #[test]
    fn context_7_root() {
        let ctx = FieldContext::new(7).unwrap();
        assert_eq!(ctx.primitive_root(), 3);
    }

    #[test]
    fn composite_rejected() {
        assert!(matches!(
            FieldContext::new(9),
            Err(Error::CompositeModulus(9))
        ));
        assert!(matches!(FieldContext::new(2), Err(Error::ModulusOutOfRange(2))));
    }

    #[test]
    fn element_orders() {
        let ctx = FieldContext::new(13).unwrap();
        assert_eq!(ctx.element_order(5).unwrap(), 4);
        assert_eq!(ctx.element_order(1).unwrap(), 1);
        assert!(matches!(ctx.element_order(0), Err(Error::ZeroElement)));
        let ctx7 = FieldContext::new(7).unwrap();
        assert_eq!(ctx7.element_order(3).unwrap(), 6);
    }

    #[test]
    fn order_by_enumeration() {
        for p in [13u64, 61, 101] {
            let ctx = FieldContext::new(p).unwrap();
            for x in 1..p {
                let mut t = 1u64;
                let mut acc = x;
                while acc != 1 {
                    acc = mul_mod(acc, x, p);
                    t += 1;
                }
                assert_eq!(ctx.element_order(x).unwrap(), t, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn subgroup_examples() {
        let ctx = FieldContext::new(13).unwrap();
        let s = ctx.subgroup_of_order(4).unwrap();
        assert_eq!(s.elements().unwrap(), &[1, 5, 8, 12]);
        let t = ctx.subgroup_of_order(1).unwrap();
        assert_eq!(t.elements().unwrap(), &[1]);
        assert!(matches!(
            ctx.subgroup_of_order(5),
            Err(Error::NotADivisor { e: 5, order: 12 })
        ));
    }

    #[test]
    fn subgroup_membership_without_materialization() {
        let ctx = FieldContext::new(13).unwrap();
        let s = ctx.subgroup_of_order_with_cap(4, 0).unwrap();
        assert!(s.elements().is_none());
        for x in 1..13 {
            assert_eq!(s.contains(x), [1, 5, 8, 12].contains(&x));
        }
        assert_eq!(s.iter().collect::<BTreeSet<_>>(), BTreeSet::from([1, 5, 8, 12]));
    }

    fn closure(ctx: &FieldContext, gens: &[u64]) -> BTreeSet<u64> {
        let mut set: BTreeSet<u64> = BTreeSet::from([1]);
        let mut frontier: Vec<u64> = vec![1];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = ctx.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn subgroup_matches_closure_all_divisors() {
        for p in [13u64, 61, 211] {
            let ctx = FieldContext::new(p).unwrap();
            for e in 1..=(p - 1) {
                if (p - 1) % e != 0 {
                    continue;
                }
                let s = ctx.subgroup_of_order(e).unwrap();
                let want = closure(&ctx, &[s.generator()]);
                assert_eq!(s.elements().unwrap(), &want.into_iter().collect::<Vec<_>>()[..]);
            }
        }
    }

    #[test]
    fn generated_order_examples() {
        let ctx = FieldContext::new(13).unwrap();
        assert_eq!(ctx.generated_subgroup_order(&[5, 12]).unwrap(), 4);
        assert_eq!(ctx.generated_subgroup_order(&[1]).unwrap(), 1);
        assert_eq!(ctx.generated_subgroup_order(&[]).unwrap(), 1);
        let ctx7 = FieldContext::new(7).unwrap();
        assert_eq!(ctx7.generated_subgroup_order(&[2, 3]).unwrap(), 6);
        assert!(matches!(
            ctx7.generated_subgroup_order(&[3, 0]),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn generated_order_matches_closure_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [13u64, 61, 211] {
            let ctx = FieldContext::new(p).unwrap();
            for _ in 0..50 {
                let n = rng.gen_range(1..4usize);
                let gens: Vec<u64> = (0..n).map(|_| rng.gen_range(1..p)).collect();
                assert_eq!(
                    ctx.generated_subgroup_order(&gens).unwrap(),
                    closure(&ctx, &gens).len() as u64
                );
            }
        }
    }

    #[test]
    fn extension_basics_mod3() {
        let ctx = FieldContext::new(3).unwrap();
        // T^2 + 1 is irreducible over F_3
        let modulus = UnivariatePoly::from_coeffs(ctx.clone(), vec![1, 0, 1]);
        let ext = ExtensionField::new(ctx, modulus).unwrap();
        let t = vec![0, 1];
        assert_eq!(ext.mul(&t, &t), vec![2]);
        let tinv = FieldOps::inv(&ext, &t).unwrap();
        assert_eq!(tinv, vec![0, 2]);
        assert_eq!(ext.mul(&t, &tinv), vec![1]);
        assert!(FieldOps::inv(&ext, &vec![]).is_none());
    }

    #[test]
    fn extension_field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3u64, 5, 13] {
            let ctx = FieldContext::new(p).unwrap();
            for k in 2..=4u32 {
                let ext = ExtensionField::find(&ctx, k).unwrap();
                for _ in 0..40 {
                    let a = ext.random_elem(&mut rng);
                    let b = ext.random_elem(&mut rng);
                    let c = ext.random_elem(&mut rng);
                    let ab_c = ext.mul(&ext.mul(&a, &b), &c);
                    let a_bc = ext.mul(&a, &ext.mul(&b, &c));
                    assert_eq!(ab_c, a_bc);
                    let lhs = ext.mul(&a, &ext.add(&b, &c));
                    let rhs = ext.add(&ext.mul(&a, &b), &ext.mul(&a, &c));
                    assert_eq!(lhs, rhs);
                    if !ext.is_zero(&a) {
                        let ainv = FieldOps::inv(&ext, &a).unwrap();
                        assert_eq!(ext.mul(&a, &ainv), ext.one());
                    }
                }
                // Fermat: a^(q-1) = 1 for nonzero a
                let q = ext.field_size().unwrap();
                let a = loop {
                    let a = ext.random_elem(&mut rng);
                    if !ext.is_zero(&a) {
                        break a;
                    }
                };
                assert_eq!(ext.pow(&a, q - 1), ext.one());
            }
        }
    }

    #[test]
    fn factorize_matches_product() {
        for n in [12u64, 2, 1009 * 1013, 2u64.pow(20) + 7, 600851475143] {
            let f = factorize_u64(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            for &(p, _) in &f {
                assert!(is_prime_u64(p));
            }
        }
    }
}
