//! Integer lift of a mod-p curve from a handful of small solutions.
//!
//! Given F over F_p, a pivot term and delta(F)-1 solutions with small
//! positive coordinates, Cramer determinants over the integers produce an
//! integer polynomial whose coefficients satisfy
//! `v * F_ij = u_ij * F_pivot (mod p)` on the whole divisor closure, with
//! all determinant heights bounded by the coordinate sizes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ff::FieldContext;
use crate::ring::{det_bareiss, IntegerRing, Ring};

use super::BivariatePoly;

#[derive(Clone, Debug)]
pub struct LiftedPoly {
    lifted: BivariatePoly<IntegerRing>,
    pivot: (u32, u32),
    pivot_det: BigInt,
    cofactor_dets: BTreeMap<(u32, u32), BigInt>,
    modulus: u64,
    delta: u64,
    degree: u32,
    solutions_used: Vec<(u64, u64)>,
}

impl LiftedPoly {
    /// The integer polynomial with the cofactor determinants as
    /// coefficients and the pivot determinant on the pivot term.
    pub fn lifted(&self) -> &BivariatePoly<IntegerRing> {
        &self.lifted
    }

    pub fn pivot(&self) -> (u32, u32) {
        self.pivot
    }

    /// v = det V.
    pub fn pivot_det(&self) -> &BigInt {
        &self.pivot_det
    }

    /// u_ij over the divisor closure minus the pivot.
    pub fn cofactor_dets(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.cofactor_dets
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn solutions_used(&self) -> &[(u64, u64)] {
        &self.solutions_used
    }

    /// Check `v*F_ij = u_ij*F_pivot (mod p)` over the whole divisor
    /// closure of the source polynomial (off-support coefficients are 0).
    pub fn congruences_hold(&self, f: &BivariatePoly<FieldContext>) -> bool {
        let p = BigInt::from(self.modulus);
        let piv_coeff = BigInt::from(f.coeff(self.pivot.0, self.pivot.1));
        let mut points = self.cofactor_dets.clone();
        points.insert(self.pivot, self.pivot_det.clone());
        points.iter().all(|(&(i, j), u)| {
            let fij = BigInt::from(f.coeff(i, j));
            let lhs = &self.pivot_det * &fij;
            let rhs = u * &piv_coeff;
            ((lhs - rhs) % &p).is_zero()
        })
    }

    /// Exact check of `|v|, |u_ij| <= delta! * (2dH/sqrt(N))^(d(delta-1))`
    /// for the box parameters used to sample the solutions: both sides are
    /// squared to stay in integer arithmetic.
    pub fn height_bound_holds(&self, h: u64, n_solutions: u64) -> bool {
        if n_solutions == 0 {
            return false;
        }
        let d = self.degree as u64;
        let exp = (d * (self.delta.saturating_sub(1))) as u32;
        let mut fact = BigInt::one();
        for i in 2..=self.delta {
            fact *= BigInt::from(i);
        }
        let rhs = fact.pow(2) * BigInt::from(2 * d * h).pow(2 * exp);
        let nfac = BigInt::from(n_solutions).pow(exp);
        let check = |det: &BigInt| det.abs().pow(2) * &nfac <= rhs;
        check(&self.pivot_det) && self.cofactor_dets.values().all(check)
    }

    /// Largest |t| possible in `lifted(x, y) = p*t` over the box |x|,|y| <= H:
    /// the triangle-inequality bound with the actual determinant heights.
    pub fn quotient_bound(&self, h: u64) -> BigInt {
        let hh = BigInt::from(h);
        let mut sum = self.pivot_det.abs() * hh.pow(self.pivot.0 + self.pivot.1);
        for (&(i, j), u) in &self.cofactor_dets {
            sum += u.abs() * hh.pow(i + j);
        }
        sum / BigInt::from(self.modulus)
    }
}

/// Build the lift from the first delta-1 solutions. The matrix V has one
/// row per solution, one column per divisor-closure point other than the
/// pivot, entries x^m y^n over the integers. Fails with `SingularSystem`
/// when det V = 0 (the caller should retry with other solutions).
pub fn lift_construction(
    f: &BivariatePoly<FieldContext>,
    pivot: (u32, u32),
    solutions: &[(u64, u64)],
) -> Result<LiftedPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = f.ring().clone();
    let p = ctx.p();
    if f.ring().is_zero(&f.coeff(pivot.0, pivot.1)) {
        return Err(Error::invalid(
            "pivot",
            format!("({}, {}) is not in the support", pivot.0, pivot.1),
        ));
    }
    for &(x, y) in solutions {
        if f.eval(&(x % p), &(y % p)) != 0 {
            return Err(Error::NotASolution { x, y });
        }
    }
    let closure = f.divisor_closure()?;
    let delta = closure.len() as u64;
    let need = (delta - 1) as usize;
    if solutions.len() < need {
        return Err(Error::InsufficientSolutions {
            needed: need,
            got: solutions.len(),
        });
    }
    let used = &solutions[..need];
    let cols: Vec<(u32, u32)> = closure.iter().copied().filter(|&c| c != pivot).collect();

    // power tables per used solution
    let dx = f.deg_x().unwrap();
    let dy = f.deg_y().unwrap();
    let pow_table = |base: u64, up_to: u32| -> Vec<BigInt> {
        let mut v = Vec::with_capacity(up_to as usize + 1);
        v.push(BigInt::one());
        let b = BigInt::from(base);
        for i in 1..=up_to as usize {
            let prev = v[i - 1].clone();
            v.push(prev * &b);
        }
        v
    };
    let xpows: Vec<Vec<BigInt>> = used.iter().map(|&(x, _)| pow_table(x, dx)).collect();
    let ypows: Vec<Vec<BigInt>> = used.iter().map(|&(_, y)| pow_table(y, dy)).collect();

    let z = IntegerRing;
    let entry = |r: usize, (m, n): (u32, u32)| -> BigInt {
        &xpows[r][m as usize] * &ypows[r][n as usize]
    };
    let v_matrix: Vec<Vec<BigInt>> = (0..need)
        .map(|r| cols.iter().map(|&c| entry(r, c)).collect())
        .collect();
    let v_det = det_bareiss(&z, v_matrix.clone());
    if v_det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let rhs: Vec<BigInt> = (0..need).map(|r| -entry(r, pivot)).collect();
    let mut cofactor_dets = BTreeMap::new();
    for (ci, &col) in cols.iter().enumerate() {
        let mut m = v_matrix.clone();
        for (r, row) in m.iter_mut().enumerate() {
            row[ci] = rhs[r].clone();
        }
        cofactor_dets.insert(col, det_bareiss(&z, m));
    }
    let mut lifted = BivariatePoly::zero(z);
    lifted.insert_add(pivot.0, pivot.1, v_det.clone());
    for (&(i, j), u) in &cofactor_dets {
        lifted.insert_add(i, j, u.clone());
    }
    let out = LiftedPoly {
        lifted,
        pivot,
        pivot_det: v_det,
        cofactor_dets,
        modulus: p,
        delta,
        degree: f.total_degree().unwrap(),
        solutions_used: used.to_vec(),
    };
    debug_assert!(out.congruences_hold(f));
    Ok(out)
}

/// Enumerate solutions of F(x, y) = 0 mod p with 1 <= x, y <= max_coord,
/// scanning x in increasing order, up to `limit` points.
pub fn collect_box_solutions(
    f: &BivariatePoly<FieldContext>,
    max_coord: u64,
    limit: usize,
) -> Result<Vec<(u64, u64)>> {
    let p = f.ring().p();
    if max_coord >= p {
        return Err(Error::invalid(
            "box side",
            format!("must be smaller than the modulus {}", p),
        ));
    }
    let mut out = Vec::new();
    for x in 1..=max_coord {
        let row = f.specialize_x(&x);
        if row.is_zero() {
            for y in 1..=max_coord {
                out.push((x, y));
                if out.len() >= limit {
                    return Ok(out);
                }
            }
            continue;
        }
        for y in crate::factor::roots_mod_p(&row) {
            if (1..=max_coord).contains(&y) {
                out.push((x, y));
                if out.len() >= limit {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ctx(p: u64) -> FieldContext {
        FieldContext::new(p).unwrap()
    }

    /// Cofactor-expansion determinant, the independent oracle.
    fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for (c, top) in m[0].iter().enumerate() {
            if top.is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = top * det_cofactor(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn hyperbola_lift_mod_13() {
        let f = ctx(13);
        let poly = parse_poly("X*Y - 2", &f).unwrap();
        // x*y = 2 mod 13: (1,2), (2,1), (3,5)
        let sols = [(1u64, 2u64), (2, 1), (3, 5)];
        let lift = lift_construction(&poly, (1, 1), &sols).unwrap();
        assert_eq!(lift.delta(), 4);
        assert!(lift.congruences_hold(&poly));
        // oracle: recompute v and each u_ij by cofactor expansion
        let cols = [(0u32, 0u32), (0, 1), (1, 0)];
        let entry = |r: usize, (m, n): (u32, u32)| {
            BigInt::from(sols[r].0.pow(m)) * BigInt::from(sols[r].1.pow(n))
        };
        let vm: Vec<Vec<BigInt>> = (0..3)
            .map(|r| cols.iter().map(|&c| entry(r, c)).collect())
            .collect();
        assert_eq!(&det_cofactor(&vm), lift.pivot_det());
        for (ci, &col) in cols.iter().enumerate() {
            let mut m = vm.clone();
            for (r, row) in m.iter_mut().enumerate() {
                row[ci] = -entry(r, (1, 1));
            }
            assert_eq!(&det_cofactor(&m), &lift.cofactor_dets()[&col]);
        }
    }

    #[test]
    fn non_solution_rejected() {
        let f = ctx(13);
        let poly = parse_poly("X*Y - 2", &f).unwrap();
        let err = lift_construction(&poly, (1, 1), &[(1, 2), (2, 2), (3, 5)]);
        assert!(matches!(err, Err(Error::NotASolution { x: 2, y: 2 })));
    }

    #[test]
    fn repeated_solutions_are_singular() {
        let f = ctx(13);
        let poly = parse_poly("X*Y - 2", &f).unwrap();
        let err = lift_construction(&poly, (1, 1), &[(1, 2), (1, 2), (1, 2)]);
        assert!(matches!(err, Err(Error::SingularSystem)));
    }

    #[test]
    fn box_solutions_are_solutions() {
        let f = ctx(101);
        let poly = parse_poly("X*Y - 7", &f).unwrap();
        let sols = collect_box_solutions(&poly, 60, 100).unwrap();
        assert!(!sols.is_empty());
        for (x, y) in sols {
            assert_eq!(poly.eval(&x, &y), 0);
            assert!((1..=60).contains(&x) && (1..=60).contains(&y));
        }
    }
}
