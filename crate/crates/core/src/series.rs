//! Truncated power series in the parameters T, T1, T2, T3 with polynomial
//! coefficients. Exponents at or above the precision are discarded;
//! arithmetic results carry the minimum of the operand precisions.

use crate::poly::{GradedPoly, Var};
use crate::ring::Ring;

pub const SERIES_VARS: [Var; 4] = [Var::T, Var::T1, Var::T2, Var::T3];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    pub poly: GradedPoly<R>,
    pub prec: i64,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn new(poly: GradedPoly<R>, prec: i64) -> Self {
        assert!(prec >= 1);
        TruncatedSeries {
            poly: poly.truncate_total(&SERIES_VARS, prec),
            prec,
        }
    }
    pub fn zero(prec: i64) -> Self {
        Self::new(GradedPoly::zero(), prec)
    }
    pub fn var(v: Var, prec: i64) -> Self {
        Self::new(GradedPoly::var(v), prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.poly.add(&o.poly), self.prec.min(o.prec))
    }
    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.poly.sub(&o.poly), self.prec.min(o.prec))
    }
    pub fn neg(&self) -> Self {
        Self::new(self.poly.neg(), self.prec)
    }
    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.poly.mul(&o.poly), self.prec.min(o.prec))
    }
    pub fn mul_scalar(&self, c: &R) -> Self {
        Self::new(self.poly.mul_scalar(c), self.prec)
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::new(GradedPoly::one(), self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Substitute series variables by other series (same precision floor).
    pub fn compose(&self, image: &[(Var, TruncatedSeries<R>)]) -> Self {
        let prec = image
            .iter()
            .map(|(_, s)| s.prec)
            .chain(std::iter::once(self.prec))
            .min()
            .unwrap();
        // truncate after substitution
        let img: Vec<(Var, GradedPoly<R>)> = image
            .iter()
            .map(|(v, s)| (*v, s.poly.clone()))
            .collect();
        // substitution of series with positive valuation keeps degrees
        // bounded, so substituting into the truncated polynomial is exact
        // up to the combined precision
        Self::new(self.poly.subst(&img), prec)
    }

    /// Coefficient of v^k as a polynomial in the non-series variables.
    pub fn coeff(&self, v: Var, k: i16) -> GradedPoly<R> {
        self.poly.coeff_of(v, k)
    }

    /// Multiplicative inverse of a series with unit constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.poly.coeff_of(Var::T, 0);
        // only supported for single-variable series in T whose constant
        // term is a unit scalar
        let lead = c0.constant_term();
        if c0 != GradedPoly::constant(lead.clone()) {
            return None;
        }
        let lead_inv = R::one().try_div(&lead)?;
        let mut inv = Self::new(GradedPoly::constant(lead_inv.clone()), self.prec);
        // Newton: x ← x(2 − a x)
        let two = Self::new(GradedPoly::from_i64(2), self.prec);
        let mut steps = 1;
        while (1i64 << steps) < self.prec + 1 {
            steps += 1;
        }
        for _ in 0..=steps {
            inv = inv.mul(&two.sub(&self.mul(&inv)));
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    type S = TruncatedSeries<BigRational>;

    #[test]
    fn truncation_and_precision() {
        let t = S::var(Var::T, 4);
        let p = t.pow(3).add(&t.pow(5)); // T^5 dies
        assert_eq!(p.poly, GradedPoly::var(Var::T).pow(3));
        let q = S::new(GradedPoly::var(Var::T), 2).mul(&t);
        assert_eq!(q.prec, 2);
    }

    #[test]
    fn series_inverse() {
        // (1 + T)^{-1} = 1 - T + T^2 - ...
        let one_plus_t = S::new(GradedPoly::one().add(&GradedPoly::var(Var::T)), 6);
        let inv = one_plus_t.inverse().unwrap();
        assert_eq!(one_plus_t.mul(&inv).poly, GradedPoly::one());
    }
}
