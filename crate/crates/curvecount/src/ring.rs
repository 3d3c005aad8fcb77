//! Coefficient-ring abstraction shared by the polynomial types.
//!
//! A `Ring` is a value (not a marker type) so that the prime field carries
//! its modulus and an extension field carries its defining polynomial.
//! Elements are plain data; all arithmetic goes through the ring handle.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::RngCore;

/// Commutative ring with exact division (integral domain at the call sites
/// that rely on `div_exact`). Ring handles are small values (a modulus, a
/// defining polynomial) and hash/order along with the polynomials that
/// carry them.
pub trait Ring: Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug {
    type Elem: Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Canonical image of a decimal literal (used by the parser; the string
    /// is all digits).
    fn from_decimal(&self, digits: &str) -> Option<Self::Elem>;
    /// Exact division: `Some(q)` with `a = q*b`, or `None` if `b` is zero or
    /// does not divide `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn elem_string(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// Ring with inverses of nonzero elements, a characteristic and a size.
pub trait FieldOps: Ring {
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
    fn extension_degree(&self) -> u32;
    /// Field size as `u128`, `None` if it overflows.
    fn field_size(&self) -> Option<u128>;
    /// The `idx`-th element in a fixed enumeration starting at zero; `None`
    /// when `idx` is at least the field size. Used to build evaluation grids.
    fn elem_from_index(&self, idx: u64) -> Option<Self::Elem>;
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The ring of integers with arbitrary-precision elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn from_decimal(&self, digits: &str) -> Option<BigInt> {
        digits.parse().ok()
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(a, b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn elem_string(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl IntegerRing {
    pub fn abs(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Works over any
/// integral domain: every division in the update is exact.
pub fn det_bareiss<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_negative = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&r| !ring.is_zero(&m[r][k])) {
                Some(r) => {
                    m.swap(k, r);
                    sign_negative = !sign_negative;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring
                    .div_exact(&num, &prev)
                    .expect("bareiss update divides exactly");
            }
            m[i][k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_negative {
        ring.neg(&det)
    } else {
        det
    }
}

/// Determinant by Gaussian elimination over a field.
pub fn det_gauss<F: FieldOps>(field: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut det = field.one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !field.is_zero(&m[r][k])) {
            Some(r) => r,
            None => return field.zero(),
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = field.neg(&det);
        }
        let pivot = m[k][k].clone();
        det = field.mul(&det, &pivot);
        let pinv = field.inv(&pivot).expect("nonzero pivot");
        for i in k + 1..n {
            if field.is_zero(&m[i][k]) {
                continue;
            }
            let factor = field.mul(&m[i][k], &pinv);
            for j in k..n {
                let t = field.mul(&factor, &m[k][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
    }
    det
}
