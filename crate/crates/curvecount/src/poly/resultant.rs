//! Resultant of two bivariate polynomials with respect to the shared first
//! variable X.
//!
//! The first input lives in (X, U), the second in (X, V); the result lives
//! in (U, V). Sign convention: the determinant of the Sylvester matrix with
//! the first polynomial's coefficient rows on top. Two independent routes
//! are provided: evaluation/interpolation of scalar Sylvester determinants,
//! and fraction-free elimination over the polynomial ring.

use crate::error::{Error, Result};
use crate::ring::{det_bareiss, det_gauss, FieldOps, Ring};

use super::{BivariatePoly, UnivariatePoly};

/// The ring F[U, V], used as the entry domain of the symbolic Sylvester
/// elimination.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct BivariateRing<R: FieldOps>(R);

impl<R: FieldOps> Ring for BivariateRing<R> {
    type Elem = BivariatePoly<R>;

    fn zero(&self) -> Self::Elem {
        BivariatePoly::zero(self.0.clone())
    }
    fn one(&self) -> Self::Elem {
        BivariatePoly::constant(self.0.clone(), self.0.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        BivariatePoly::constant(self.0.clone(), self.0.from_i64(n))
    }
    fn from_decimal(&self, digits: &str) -> Option<Self::Elem> {
        Some(BivariatePoly::constant(
            self.0.clone(),
            self.0.from_decimal(digits)?,
        ))
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        a.div_exact(b)
    }
    fn elem_string(&self, a: &Self::Elem) -> String {
        a.format_with("U", "V")
    }
}

struct Inputs<R: FieldOps> {
    /// X-coefficients of A, ascending, as univariate polynomials in U.
    a_coeffs: Vec<UnivariatePoly<R>>,
    /// X-coefficients of B, ascending, as univariate polynomials in V.
    b_coeffs: Vec<UnivariatePoly<R>>,
    m: usize,
    n: usize,
}

fn x_coefficients<R: FieldOps>(f: &BivariatePoly<R>) -> Vec<UnivariatePoly<R>> {
    let ring = f.ring().clone();
    let dx = f.deg_x().unwrap_or(0) as usize;
    let dy = f.deg_y().unwrap_or(0) as usize;
    let mut rows = vec![vec![ring.zero(); dy + 1]; dx + 1];
    for (&(i, j), c) in f.terms() {
        rows[i as usize][j as usize] = c.clone();
    }
    rows.into_iter()
        .map(|r| UnivariatePoly::from_coeffs(ring.clone(), r))
        .collect()
}

fn prepare<R: FieldOps>(a: &BivariatePoly<R>, b: &BivariatePoly<R>) -> Result<Inputs<R>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = a.deg_x().unwrap() as usize;
    let n = b.deg_x().unwrap() as usize;
    if m == 0 || n == 0 {
        return Err(Error::DegenerateInX);
    }
    Ok(Inputs {
        a_coeffs: x_coefficients(a),
        b_coeffs: x_coefficients(b),
        m,
        n,
    })
}

/// Fraction-free route: Bareiss elimination on the Sylvester matrix over
/// F[U, V].
pub fn resultant_x_sylvester<R: FieldOps>(
    a: &BivariatePoly<R>,
    b: &BivariatePoly<R>,
) -> Result<BivariatePoly<R>> {
    let inp = prepare(a, b)?;
    let ring = a.ring().clone();
    let pring = BivariateRing(ring.clone());
    let size = inp.m + inp.n;
    let mut mat = vec![vec![pring.zero(); size]; size];
    for r in 0..inp.n {
        for t in 0..=inp.m {
            // coefficient of X^(m-t) in A, as a polynomial in U
            let c = &inp.a_coeffs[inp.m - t];
            mat[r][r + t] = BivariatePoly::from_terms(
                ring.clone(),
                c.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(e, v)| ((e as u32, 0), v.clone())),
            );
        }
    }
    for r in 0..inp.m {
        for t in 0..=inp.n {
            let c = &inp.b_coeffs[inp.n - t];
            mat[inp.n + r][r + t] = BivariatePoly::from_terms(
                ring.clone(),
                c.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(e, v)| ((0, e as u32), v.clone())),
            );
        }
    }
    Ok(det_bareiss(&pring, mat))
}

/// Evaluation/interpolation route: evaluate the Sylvester determinant on a
/// grid of field points and interpolate. Requires the field to hold the
/// grid; callers can use [`resultant_x`] for automatic fallback.
pub fn resultant_x_interpolation<R: FieldOps>(
    a: &BivariatePoly<R>,
    b: &BivariatePoly<R>,
) -> Result<BivariatePoly<R>> {
    let inp = prepare(a, b)?;
    let ring = a.ring().clone();
    // degree bounds of the determinant: n entries from A rows, m from B rows
    let du = inp.n * a.deg_y().unwrap_or(0) as usize;
    let dv = inp.m * b.deg_y().unwrap_or(0) as usize;
    let need = (du + 1).max(dv + 1) as u128;
    if inp_field_too_small(&ring, need) {
        return Err(Error::invalid(
            "interpolation grid",
            format!("field has fewer than {} points", need),
        ));
    }
    let upoints: Vec<R::Elem> = (0..=du as u64)
        .map(|i| ring.elem_from_index(i).unwrap())
        .collect();
    let vpoints: Vec<R::Elem> = (0..=dv as u64)
        .map(|i| ring.elem_from_index(i).unwrap())
        .collect();
    let size = inp.m + inp.n;
    // evaluate all coefficient polynomials once per grid line
    let a_at: Vec<Vec<R::Elem>> = upoints
        .iter()
        .map(|u| inp.a_coeffs.iter().map(|c| c.eval(u)).collect())
        .collect();
    let b_at: Vec<Vec<R::Elem>> = vpoints
        .iter()
        .map(|v| inp.b_coeffs.iter().map(|c| c.eval(v)).collect())
        .collect();
    let mut grid = vec![vec![ring.zero(); dv + 1]; du + 1];
    for (ui, arow) in a_at.iter().enumerate() {
        for (vi, brow) in b_at.iter().enumerate() {
            let mut mat = vec![vec![ring.zero(); size]; size];
            for r in 0..inp.n {
                for t in 0..=inp.m {
                    mat[r][r + t] = arow[inp.m - t].clone();
                }
            }
            for r in 0..inp.m {
                for t in 0..=inp.n {
                    mat[inp.n + r][r + t] = brow[inp.n - t].clone();
                }
            }
            grid[ui][vi] = det_gauss(&ring, mat);
        }
    }
    // interpolate along V per U point, then along U per V coefficient
    let v_polys: Vec<UnivariatePoly<R>> = grid
        .iter()
        .map(|row| lagrange_interpolate(&ring, &vpoints, row))
        .collect();
    let mut out = BivariatePoly::zero(ring.clone());
    for vc in 0..=dv {
        let values: Vec<R::Elem> = v_polys.iter().map(|q| q.coeff(vc)).collect();
        let u_poly = lagrange_interpolate(&ring, &upoints, &values);
        for (uc, c) in u_poly.coeffs().iter().enumerate() {
            out.insert_add(uc as u32, vc as u32, c.clone());
        }
    }
    Ok(out)
}

fn inp_field_too_small<R: FieldOps>(ring: &R, need: u128) -> bool {
    match ring.field_size() {
        Some(q) => q < need,
        None => false,
    }
}

/// Resultant with respect to X; picks interpolation when the field affords
/// the grid, otherwise the fraction-free Sylvester route.
pub fn resultant_x<R: FieldOps>(
    a: &BivariatePoly<R>,
    b: &BivariatePoly<R>,
) -> Result<BivariatePoly<R>> {
    let inp = prepare(a, b)?;
    let du = inp.n * a.deg_y().unwrap_or(0) as usize;
    let dv = inp.m * b.deg_y().unwrap_or(0) as usize;
    let need = (du + 1).max(dv + 1) as u128;
    if inp_field_too_small(a.ring(), need) {
        resultant_x_sylvester(a, b)
    } else {
        resultant_x_interpolation(a, b)
    }
}

/// Lagrange interpolation through distinct x-points.
fn lagrange_interpolate<R: FieldOps>(
    ring: &R,
    xs: &[R::Elem],
    ys: &[R::Elem],
) -> UnivariatePoly<R> {
    debug_assert_eq!(xs.len(), ys.len());
    // master numerator N(X) = prod (X - x_j)
    let mut master = UnivariatePoly::one(ring.clone());
    for x in xs {
        let lin = UnivariatePoly::from_coeffs(ring.clone(), vec![ring.neg(x), ring.one()]);
        master = master.mul(&lin);
    }
    let mut acc = UnivariatePoly::zero(ring.clone());
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if ring.is_zero(yi) {
            continue;
        }
        let lin = UnivariatePoly::from_coeffs(ring.clone(), vec![ring.neg(xi), ring.one()]);
        let (basis, rem) = master.divmod(&lin);
        debug_assert!(rem.is_zero());
        let mut denom = ring.one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                denom = ring.mul(&denom, &ring.sub(xi, xj));
            }
        }
        let scale = ring
            .mul(yi, &ring.inv(&denom).expect("distinct interpolation points"));
        acc = acc.add(&basis.mul_scalar(&scale));
    }
    acc
}
