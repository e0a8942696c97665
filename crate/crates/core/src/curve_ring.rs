//! The coordinate ring of a Weierstrass curve, localized at x.
//!
//! Elements are Laurent polynomials in x together with y-powers; the
//! normal form has y-degree ≤ 1, obtained by rewriting y² with the curve
//! relation. Since x is Laurent-invertible the x-denominator is carried by
//! negative exponents and is automatically minimal.

use crate::error::{Error, Result};
use crate::poly::{GradedPoly, Var};
use num::BigInt;

type ZP = GradedPoly<BigInt>;

/// A registered Weierstrass relation, giving y² as a polynomial in x.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurveRel {
    /// y² = 4x(x² + q2·x + q4)
    QForm,
    /// y² = 4x³ + b2·x² + 2·b4·x + b6
    BForm,
}

impl CurveRel {
    pub fn rhs(self) -> ZP {
        let x = ZP::var(Var::X);
        match self {
            CurveRel::QForm => {
                // 4x³ + 4q2x² + 4q4x
                let four = BigInt::from(4);
                x.pow(3)
                    .mul_scalar(&four)
                    .add(&x.pow(2).mul(&ZP::var(Var::Q2)).mul_scalar(&four))
                    .add(&x.mul(&ZP::var(Var::Q4)).mul_scalar(&four))
            }
            CurveRel::BForm => {
                x.pow(3)
                    .mul_scalar(&BigInt::from(4))
                    .add(&x.pow(2).mul(&ZP::var(Var::B2)))
                    .add(&x.mul(&ZP::var(Var::B4)).mul_scalar(&BigInt::from(2)))
                    .add(&ZP::var(Var::B6))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveRingElement {
    /// Laurent in x, polynomial in y (normalized: y-degree ≤ 1).
    pub value: ZP,
    pub rel: CurveRel,
}

impl CurveRingElement {
    pub fn x(rel: CurveRel) -> Self {
        CurveRingElement {
            value: ZP::var(Var::X),
            rel,
        }
    }
    pub fn y(rel: CurveRel) -> Self {
        CurveRingElement {
            value: ZP::var(Var::Y),
            rel,
        }
    }
    pub fn from_poly(p: ZP, rel: CurveRel) -> Self {
        normalize_raw(p, rel)
    }
    pub fn zero(rel: CurveRel) -> Self {
        CurveRingElement {
            value: ZP::zero(),
            rel,
        }
    }

    fn check_rel(&self, o: &Self) -> Result<()> {
        if self.rel != o.rel {
            return Err(Error::config("curve relation mismatch"));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_rel(o)?;
        Ok(normalize_raw(self.value.add(&o.value), self.rel))
    }
    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_rel(o)?;
        Ok(normalize_raw(self.value.sub(&o.value), self.rel))
    }
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_rel(o)?;
        Ok(normalize_raw(self.value.mul(&o.value), self.rel))
    }
    pub fn neg(&self) -> Self {
        CurveRingElement {
            value: self.value.neg(),
            rel: self.rel,
        }
    }
    /// Multiply by x^k (k may be negative).
    pub fn mul_x_pow(&self, k: i16) -> Self {
        CurveRingElement {
            value: self.value.mul(&ZP::var_pow(Var::X, k)),
            rel: self.rel,
        }
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CurveRingElement {
            value: ZP::one(),
            rel: self.rel,
        };
        for _ in 0..e {
            acc = acc.mul(self).expect("same relation");
        }
        acc
    }
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Rewrite y^(2k+e) ↦ rhs^k·y^e until the y-degree is at most 1.
pub fn curve_ring_normalize(e: &CurveRingElement) -> CurveRingElement {
    normalize_raw(e.value.clone(), e.rel)
}

fn normalize_raw(p: ZP, rel: CurveRel) -> CurveRingElement {
    let rhs = rel.rhs();
    let maxy = p.max_deg(Var::Y);
    let mut out = ZP::zero();
    for k in 0..=maxy.max(0) {
        let c = p.coeff_of(Var::Y, k);
        if c.is_zero() {
            continue;
        }
        let (q, e) = (k / 2, k % 2);
        let reduced = c.mul(&rhs.pow(q as u32)).mul(&ZP::var_pow(Var::Y, e));
        out = out.add(&reduced);
    }
    CurveRingElement { value: out, rel }
}
