//! Independent reference implementations used for cross-checking.
//!
//! Everything in this module deliberately avoids the code paths of the
//! primary implementations: dense instead of structured elimination,
//! resultants by Sylvester determinant vs. root products, logarithm/
//! exponential series instead of the chord construction, naive repeated
//! addition instead of the group-law multiplication. The verification
//! batteries compare the two routes.

use crate::finite_field::F3;
use crate::poly::{GradedPoly, Mono, Var};
use crate::ring::Ring;

/// Dense Gaussian elimination oracle for the weight-w slice of an A-span:
/// clear q4-denominators, flatten every entry to an F_3 coefficient vector
/// over an explicit monomial window, and row-reduce the dense matrix.
pub fn dense_slice_rank(rows: &[Vec<GradedPoly<F3>>], basis_weights: &[i64], w: i64) -> usize {
    // shift rows into weight w (as in the structured path, but then work
    // densely over a window of q4-exponents rather than with pinned powers)
    let mut shifted: Vec<Vec<GradedPoly<F3>>> = vec![];
    for row in rows {
        let mut row_w: Option<i64> = None;
        for (e, bw) in row.iter().zip(basis_weights) {
            if let Some(ew) = (!e.is_zero()).then(|| e.weight().unwrap()) {
                row_w = Some(ew + bw);
            }
        }
        let Some(rw) = row_w else { continue };
        if (w - rw) % 4 != 0 {
            continue;
        }
        let q4s = GradedPoly::var_pow(Var::Q4, ((w - rw) / 4) as i16);
        shifted.push(row.iter().map(|e| e.mul(&q4s)).collect());
    }
    if shifted.is_empty() {
        return 0;
    }
    // window of q4 exponents occurring anywhere
    let mut kmin = i16::MAX;
    let mut kmax = i16::MIN;
    for row in &shifted {
        for e in row {
            for (m, _) in e.terms() {
                kmin = kmin.min(m.exp(Var::Q4));
                kmax = kmax.max(m.exp(Var::Q4));
            }
        }
    }
    if kmin > kmax {
        return 0;
    }
    let width = (kmax - kmin + 1) as usize;
    let ncols = shifted[0].len() * width;
    let mut dense = vec![];
    for row in &shifted {
        let mut v = vec![F3(0); ncols];
        for (slot, e) in row.iter().enumerate() {
            for (m, c) in e.terms() {
                let k = (m.exp(Var::Q4) - kmin) as usize;
                v[slot * width + k] = *c;
            }
        }
        dense.push(v);
    }
    crate::linalg::F3Mat::from_rows(dense).rank()
}

/// Cubic discriminant of a·x³ + b·x² + c·x + d by the classical formula
/// 18abcd − 4b³d + b²c² − 4ac³ − 27a²d².
pub fn cubic_discriminant<R: Ring>(
    a: &GradedPoly<R>,
    b: &GradedPoly<R>,
    c: &GradedPoly<R>,
    d: &GradedPoly<R>,
) -> GradedPoly<R> {
    let t1 = a.mul(b).mul(c).mul(d).mul_scalar(&R::from_i64(18));
    let t2 = b.pow(3).mul(d).mul_scalar(&R::from_i64(-4));
    let t3 = b.pow(2).mul(&c.pow(2));
    let t4 = a.mul(&c.pow(3)).mul_scalar(&R::from_i64(-4));
    let t5 = a.pow(2).mul(&d.pow(2)).mul_scalar(&R::from_i64(-27));
    t1.add(&t2).add(&t3).add(&t4).add(&t5)
}

/// Res(f, f') for the monic cubic f = r³ + p·r² + q·r computed through the
/// factorization f = r·(r² + p·r + q): evaluate f' at the root 0 and take
/// the quadratic norm of f' reduced modulo r² + p·r + q.
pub fn etale_resultant_by_roots(
    p: &GradedPoly<num::BigInt>,
    q: &GradedPoly<num::BigInt>,
) -> GradedPoly<num::BigInt> {
    // f'(r) = 3r² + 2p·r + q
    // at root 0: q
    let at_zero = q.clone();
    // reduce modulo r² = −p·r − q: 3r² + 2pr + q = (2p − 3p)r + (q − 3q)
    //   = −p·r − 2q
    let lin_a = p.neg(); // coefficient of r
    let lin_b = q.mul_scalar(&num::BigInt::from(-2));
    // norm of a·ρ + b over the quadratic with sum −p, product q:
    //   (aρ₊ + b)(aρ₋ + b) = a²q − abp + b²
    let norm = lin_a
        .pow(2)
        .mul(q)
        .sub(&lin_a.mul(&lin_b).mul(p))
        .add(&lin_b.pow(2));
    at_zero.mul(&norm)
}

/// Sylvester-matrix resultant of univariate polynomials in `v` with
/// polynomial coefficients (degrees fixed by the caller via coefficient
/// extraction). Expansion by minors; sizes here are at most 5×5.
pub fn sylvester_resultant<R: Ring>(
    f: &GradedPoly<R>,
    g: &GradedPoly<R>,
    v: Var,
) -> GradedPoly<R> {
    let n = f.max_deg(v) as usize;
    let m = g.max_deg(v) as usize;
    let size = n + m;
    let mut rows: Vec<Vec<GradedPoly<R>>> = vec![];
    for i in 0..m {
        let mut row = vec![GradedPoly::zero(); size];
        for (k, c) in coeff_list(f, v, n).into_iter().enumerate() {
            row[i + k] = c;
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![GradedPoly::zero(); size];
        for (k, c) in coeff_list(g, v, m).into_iter().enumerate() {
            row[i + k] = c;
        }
        rows.push(row);
    }
    det(&rows)
}

fn coeff_list<R: Ring>(f: &GradedPoly<R>, v: Var, deg: usize) -> Vec<GradedPoly<R>> {
    // highest degree first
    (0..=deg).rev().map(|k| f.coeff_of(v, k as i16)).collect()
}

fn det<R: Ring>(m: &[Vec<GradedPoly<R>>]) -> GradedPoly<R> {
    let n = m.len();
    if n == 0 {
        return GradedPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = GradedPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GradedPoly<R>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&det(&minor));
        if j % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// q4^k as an F_3-Laurent polynomial (test helper).
pub fn q4pow(k: i16) -> GradedPoly<F3> {
    GradedPoly::monomial(Mono::var(Var::Q4, k), F3(1))
}
