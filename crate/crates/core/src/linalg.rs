//! Linear algebra over F_3 and over the graded field A = F_3[q4^{±1}].
//!
//! A graded field has every nonzero homogeneous element invertible, so
//! Gaussian elimination with monomial pivots computes ranks of spans of
//! homogeneous vectors directly.

use crate::error::{Error, Result};
use crate::finite_field::F3;
use crate::poly::{GradedPoly, Var};
use crate::ring::{Field, Ring};

/// Dense matrix over F_3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F3>,
}

impl F3Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F3Mat {
            rows,
            cols,
            data: vec![F3(0); rows * cols],
        }
    }
    pub fn from_rows(rows: Vec<Vec<F3>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        F3Mat { rows: r, cols: c, data }
    }
    pub fn get(&self, i: usize, j: usize) -> F3 {
        self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F3) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F3] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let (a, b) = (self.get(r, j), self.get(p, j));
                self.set(r, j, b);
                self.set(p, j, a);
            }
            let inv = self.get(r, c).inv();
            for j in 0..self.cols {
                self.set(r, j, self.get(r, j).mul(&inv));
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c);
                    for j in 0..self.cols {
                        let v = self.get(i, j).sub(&f.mul(&self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, in reduced echelon order.
    pub fn kernel_basis(&self) -> Vec<Vec<F3>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F3(0); self.cols];
            v[free] = F3(1);
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(ri, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve M x = b; returns one solution if consistent.
    pub fn solve(&self, b: &[F3]) -> Option<Vec<F3>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = F3Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F3(0); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(ri, self.cols);
        }
        Some(x)
    }
}

/// Reduce a list of F_3 vectors to an independent echelon set; returns the
/// reduced basis (deterministic given input order).
pub fn echelon_span(vectors: &[Vec<F3>]) -> Vec<Vec<F3>> {
    if vectors.is_empty() {
        return vec![];
    }
    let mut m = F3Mat::from_rows(vectors.to_vec());
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// Is `v` in the F_3-span of `basis`?
pub fn in_span(basis: &[Vec<F3>], v: &[F3]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|c| c.is_zero());
    }
    let cols = basis.len();
    let rows = v.len();
    let mut m = F3Mat::zero(rows, cols);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..rows {
            m.set(i, j, b[i]);
        }
    }
    m.solve(v).is_some()
}

/// Rank over the graded field A = F_3[q4^{±1}] of the span of homogeneous
/// vectors. Entries must be homogeneous (hence monomials c·q4^k when only
/// q4 occurs); elimination divides by monomial pivots.
pub fn graded_rank(rows: &[Vec<GradedPoly<F3>>]) -> Result<usize> {
    for row in rows {
        for e in row {
            if !e.is_homogeneous() {
                return Err(Error::pre("graded_rank requires homogeneous entries"));
            }
        }
    }
    let mut work: Vec<Vec<GradedPoly<F3>>> = rows.to_vec();
    let ncols = work.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pi) = (rank..work.len()).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pi);
        let pivot = work[rank][col].clone();
        let pivot_inv = pivot
            .invert_monomial()
            .ok_or_else(|| Error::pre("pivot is not an invertible monomial"))?;
        for j in 0..ncols {
            work[rank][j] = work[rank][j].mul(&pivot_inv);
        }
        for i in 0..work.len() {
            if i != rank && !work[i][col].is_zero() {
                let f = work[i][col].clone();
                for j in 0..ncols {
                    let t = work[rank][j].mul(&f);
                    work[i][j] = work[i][j].sub(&t);
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// The weight-w slice of the A-span of homogeneous vectors in a graded free
/// module with basis weights `basis_weights`: shift each row into weight w
/// by a q4-power when possible, flatten to F_3 coordinates, and return the
/// F_3-rank.
pub fn graded_rank_at_weight(
    rows: &[Vec<GradedPoly<F3>>],
    basis_weights: &[i64],
    w: i64,
) -> Result<usize> {
    let mut flat: Vec<Vec<F3>> = vec![];
    for row in rows {
        assert_eq!(row.len(), basis_weights.len());
        // weight of the row as a homogeneous vector
        let mut row_w: Option<i64> = None;
        for (e, bw) in row.iter().zip(basis_weights) {
            if e.is_zero() {
                continue;
            }
            let ew = e
                .weight()
                .ok_or_else(|| Error::pre("graded_rank requires homogeneous entries"))?;
            let total = ew + bw;
            match row_w {
                None => row_w = Some(total),
                Some(prev) if prev != total => {
                    return Err(Error::pre("row is not homogeneous"));
                }
                _ => {}
            }
        }
        let Some(rw) = row_w else { continue };
        let shift = w - rw;
        if shift % 4 != 0 {
            continue; // no q4-power reaches weight w
        }
        let q4s = GradedPoly::var_pow(Var::Q4, (shift / 4) as i16);
        let mut coords = Vec::with_capacity(row.len());
        for e in row {
            let shifted = e.mul(&q4s);
            // entry is now c·q4^((w - bw)/4); extract c
            let c = shifted
                .terms()
                .next()
                .map(|(_, c)| *c)
                .unwrap_or(F3(0));
            coords.push(c);
        }
        flat.push(coords);
    }
    if flat.is_empty() {
        return Ok(0);
    }
    Ok(F3Mat::from_rows(flat).rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::GradedPoly;

    type A = GradedPoly<F3>;

    fn q4(k: i16) -> A {
        A::var_pow(Var::Q4, k)
    }

    #[test]
    fn graded_rank_examples() {
        // {(1, 0), (q4, 0)}: proportional over A
        let rows = vec![vec![A::one(), A::zero()], vec![q4(1), A::zero()]];
        assert_eq!(graded_rank(&rows).unwrap(), 1);
        // {(1, 0), (0, q4^2)}: independent
        let rows = vec![vec![A::one(), A::zero()], vec![A::zero(), q4(2)]];
        assert_eq!(graded_rank(&rows).unwrap(), 2);
        // empty row set
        let rows: Vec<Vec<A>> = vec![];
        assert_eq!(graded_rank(&rows).unwrap(), 0);
    }

    #[test]
    fn graded_rank_rejects_inhomogeneous() {
        let bad = A::one().add(&q4(1));
        assert!(graded_rank(&[vec![bad]]).is_err());
    }

    #[test]
    fn slice_rank_matches_dense_oracle() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        // random homogeneous rows in A^3 with basis weights (0, 2, 4),
        // compared against dense elimination after clearing denominators
        for _trial in 0..50 {
            let bw = [0i64, 2, 4];
            let nrows = rng.gen_range(1..=8);
            let mut rows = vec![];
            for _ in 0..nrows {
                // choose a target weight ≡ 0 mod 2 reachable by all slots
                let w = 4 * rng.gen_range(-2i64..3);
                let mut row = vec![];
                for b in bw {
                    let shift = w - b;
                    if shift % 4 == 0 {
                        let c = F3::new(rng.gen_range(0..3));
                        row.push(A::monomial(
                            crate::poly::Mono::var(Var::Q4, (shift / 4) as i16),
                            c,
                        ));
                    } else {
                        row.push(A::zero());
                    }
                }
                rows.push(row);
            }
            let w = 0;
            let fast = graded_rank_at_weight(&rows, &bw, w).unwrap();
            let slow = crate::oracles::dense_slice_rank(&rows, &bw, w);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn kernel_and_solve() {
        // x + y = 0 over F_3
        let m = F3Mat::from_rows(vec![vec![F3(1), F3(1)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![F3(2), F3(1)]);
        let sol = m.solve(&[F3(2)]).unwrap();
        assert_eq!(sol[0].add(&sol[1]), F3(2));
    }
}
