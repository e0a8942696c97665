//! Weierstrass curves in q-form and b-form, the ring maps induced by the
//! degree-2 isogeny structure, quotient by the canonical 2-torsion point,
//! and the étale resultant identity.
//!
//! The q-form C_q : y² = 4x(x² + q2·x + q4) implicitly carries the tangent
//! vector ∂/∂z, z = x/y, and the Γ₀(2)-structure generated by (0, 0).

use crate::curve_ring::{curve_ring_normalize, CurveRel, CurveRingElement};
use crate::error::{Error, Result};
use crate::finite_field::F3;
use crate::poly::{GradedPoly, Var};
use crate::ring::Ring;
use num::BigInt;
use serde::Serialize;

type ZP = GradedPoly<BigInt>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassQ<R: Ring> {
    pub q2: GradedPoly<R>,
    pub q4: GradedPoly<R>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassB<R: Ring> {
    pub b2: GradedPoly<R>,
    pub b4: GradedPoly<R>,
    pub b6: GradedPoly<R>,
}

impl WeierstrassQ<BigInt> {
    /// The generic curve over Z[q2, q4].
    pub fn generic() -> Self {
        WeierstrassQ {
            q2: ZP::var(Var::Q2),
            q4: ZP::var(Var::Q4),
        }
    }
}

impl<R: Ring> WeierstrassQ<R> {
    pub fn new(q2: GradedPoly<R>, q4: GradedPoly<R>) -> Self {
        WeierstrassQ { q2, q4 }
    }
    /// b-form coefficients of y² = 4x³ + 4q2x² + 4q4x.
    pub fn to_b_form(&self) -> WeierstrassB<R> {
        WeierstrassB {
            b2: self.q2.mul_scalar(&R::from_i64(4)),
            b4: self.q4.mul_scalar(&R::from_i64(2)),
            b6: GradedPoly::zero(),
        }
    }
}

/// Δ = q4²(16q2² − 64q4), homogeneous of weight 12.
pub fn discriminant<R: Ring>(c: &WeierstrassQ<R>) -> GradedPoly<R> {
    let q2sq = c.q2.mul(&c.q2).mul_scalar(&R::from_i64(16));
    let inner = q2sq.sub(&c.q4.mul_scalar(&R::from_i64(64)));
    c.q4.mul(&c.q4).mul(&inner)
}

/// Discriminant of the b-form via the coefficient formula
/// Δ = −27b6² + (9b2b4 − ¼b2³)b6 − 8b4³ + ¼b2²b4², computed with the
/// quarters cleared: Δ = (−108b6² + (36b2b4 − b2³)b6 − 32b4³ + b2²b4²)/4.
pub fn discriminant_b(c: &WeierstrassB<BigInt>) -> Result<ZP> {
    let four_delta = c
        .b6
        .pow(2)
        .mul_scalar(&BigInt::from(-108))
        .add(
            &c.b2
                .mul(&c.b4)
                .mul_scalar(&BigInt::from(36))
                .sub(&c.b2.pow(3))
                .mul(&c.b6),
        )
        .add(&c.b4.pow(3).mul_scalar(&BigInt::from(-32)))
        .add(&c.b2.pow(2).mul(&c.b4.pow(2)));
    four_delta.div_scalar_exact(&BigInt::from(4))
}

/// Dictionary: the curve 4(x − e1)(x² + g2·x + g4) in b-form.
pub fn gamma_to_b(e1: &ZP, g2: &ZP, g4: &ZP) -> WeierstrassB<BigInt> {
    WeierstrassB {
        b2: g2.sub(e1).mul_scalar(&BigInt::from(4)),
        b4: g4.sub(&e1.mul(g2)).mul_scalar(&BigInt::from(2)),
        b6: g4.mul(e1).mul_scalar(&BigInt::from(-4)),
    }
}

/// Dictionary: shift x ↦ x + e1 puts the γ-curve into q-form.
pub fn gamma_to_q(e1: &ZP, g2: &ZP, g4: &ZP) -> WeierstrassQ<BigInt> {
    WeierstrassQ {
        q2: e1.mul_scalar(&BigInt::from(2)).add(g2),
        q4: e1.pow(2).add(&g2.mul(e1)).add(g4),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapName {
    PhiF,
    PsiD,
    Psi2,
    PhiQ,
    EtaR,
    MuLambda,
}

impl MapName {
    pub fn parse(s: &str) -> Option<MapName> {
        Some(match s {
            "phi_f" => MapName::PhiF,
            "psi_d" => MapName::PsiD,
            "psi_2" => MapName::Psi2,
            "phi_q" => MapName::PhiQ,
            "eta_R" | "eta_r" => MapName::EtaR,
            "mu_lambda" => MapName::MuLambda,
            _ => return None,
        })
    }
    pub fn as_str(self) -> &'static str {
        match self {
            MapName::PhiF => "phi_f",
            MapName::PsiD => "psi_d",
            MapName::Psi2 => "psi_2",
            MapName::PhiQ => "phi_q",
            MapName::EtaR => "eta_R",
            MapName::MuLambda => "mu_lambda",
        }
    }
}

/// A map of the modular-form ring recorded by the images of q2, q4 and r.
/// Maps defined only on the coefficient ring leave the r-image as None.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMapSpec<R: Ring> {
    pub name: MapName,
    pub q2_img: GradedPoly<R>,
    pub q4_img: GradedPoly<R>,
    pub r_img: Option<GradedPoly<R>>,
}

impl<R: Ring> RingMapSpec<R> {
    /// Apply to a polynomial in q2, q4 (and r when the map covers it).
    pub fn apply(&self, f: &GradedPoly<R>) -> Result<GradedPoly<R>> {
        if f.max_deg(Var::R) > 0 && self.r_img.is_none() {
            return Err(Error::pre(format!(
                "map {} is not defined on r",
                self.name.as_str()
            )));
        }
        let mut image = vec![
            (Var::Q2, self.q2_img.clone()),
            (Var::Q4, self.q4_img.clone()),
        ];
        if let Some(r) = &self.r_img {
            image.push((Var::R, r.clone()));
        }
        Ok(f.subst(&image))
    }

    /// Contravariant composition: (f ∘ g)* = g* ∘ f*; this returns the spec
    /// whose generator images are `self` applied to `other`'s images.
    pub fn compose(&self, other: &RingMapSpec<R>, name: MapName) -> Result<RingMapSpec<R>> {
        Ok(RingMapSpec {
            name,
            q2_img: self.apply(&other.q2_img)?,
            q4_img: self.apply(&other.q4_img)?,
            r_img: match &other.r_img {
                None => None,
                Some(r) => Some(self.apply(r)?),
            },
        })
    }

    pub fn same_images(&self, other: &RingMapSpec<R>) -> bool {
        self.q2_img == other.q2_img && self.q4_img == other.q4_img && self.r_img == other.r_img
    }
}

impl RingMapSpec<BigInt> {
    pub fn reduce_mod3(&self) -> RingMapSpec<F3> {
        RingMapSpec {
            name: self.name,
            q2_img: self.q2_img.reduce_mod3(),
            q4_img: self.q4_img.reduce_mod3(),
            r_img: self.r_img.as_ref().map(|r| r.reduce_mod3()),
        }
    }
}

/// The named maps on Z[q2, q4] (and r where defined):
///   phi_f: (q2, q4, r) ↦ (q2, q4, 0)
///   psi_2: (q2, q4, r) ↦ (4q2, 16q4, 4r)
///   psi_d: (q2, q4)    ↦ (−2q2, q2² − 4q4)
///   phi_q: (q2, q4, r) ↦ (−2q2, q2² − 4q4, 0)
///   eta_R: (q2, q4)    ↦ (q2 + 3r, q4 + 2q2r + 3r²), r ↦ r
pub fn induced_map(name: MapName) -> Result<RingMapSpec<BigInt>> {
    let q2 = ZP::var(Var::Q2);
    let q4 = ZP::var(Var::Q4);
    let r = ZP::var(Var::R);
    let spec = match name {
        MapName::PhiF => RingMapSpec {
            name,
            q2_img: q2,
            q4_img: q4,
            r_img: Some(ZP::zero()),
        },
        MapName::Psi2 => RingMapSpec {
            name,
            q2_img: q2.mul_scalar(&BigInt::from(4)),
            q4_img: q4.mul_scalar(&BigInt::from(16)),
            r_img: Some(r.mul_scalar(&BigInt::from(4))),
        },
        MapName::PsiD => RingMapSpec {
            name,
            q2_img: q2.mul_scalar(&BigInt::from(-2)),
            q4_img: q2.pow(2).sub(&q4.mul_scalar(&BigInt::from(4))),
            r_img: None,
        },
        MapName::PhiQ => RingMapSpec {
            name,
            q2_img: q2.mul_scalar(&BigInt::from(-2)),
            q4_img: q2.pow(2).sub(&q4.mul_scalar(&BigInt::from(4))),
            r_img: Some(ZP::zero()),
        },
        MapName::EtaR => RingMapSpec {
            name,
            q2_img: q2.add(&r.mul_scalar(&BigInt::from(3))),
            q4_img: q4
                .add(&q2.mul(&r).mul_scalar(&BigInt::from(2)))
                .add(&r.pow(2).mul_scalar(&BigInt::from(3))),
            r_img: Some(r),
        },
        MapName::MuLambda => {
            return Err(Error::config(
                "mu_lambda needs a scale; use scaling_map(lambda)",
            ))
        }
    };
    Ok(spec)
}

/// μ_λ over F_9: scales a weight-k generator by λ^k.
pub fn scaling_map(lambda: crate::finite_field::F9) -> RingMapSpec<crate::finite_field::F9> {
    use crate::finite_field::F9;
    type FP = GradedPoly<F9>;
    let sc = |v: Var| -> FP {
        let k = v.weight() as u64;
        FP::var(v).mul_scalar(&lambda.pow(k))
    };
    RingMapSpec {
        name: MapName::MuLambda,
        q2_img: sc(Var::Q2),
        q4_img: sc(Var::Q4),
        r_img: Some(sc(Var::R)),
    }
}

/// Quotient of C_q by the 2-torsion point (0,0): returns the b-form
/// (4q2, −8q4, −16q2q4) of the quotient curve and its q-form after the
/// shift x ↦ x − q2, namely (−2q2, q2² − 4q4).
pub fn quotient_by_canonical_2torsion(
    c: &WeierstrassQ<BigInt>,
) -> (WeierstrassB<BigInt>, WeierstrassQ<BigInt>) {
    let b = WeierstrassB {
        b2: c.q2.mul_scalar(&BigInt::from(4)),
        b4: c.q4.mul_scalar(&BigInt::from(-8)),
        b6: c.q2.mul(&c.q4).mul_scalar(&BigInt::from(-16)),
    };
    let q = WeierstrassQ {
        q2: c.q2.mul_scalar(&BigInt::from(-2)),
        q4: c.q2.pow(2).sub(&c.q4.mul_scalar(&BigInt::from(4))),
    };
    (b, q)
}

/// Residue of the quotient-curve equation on (x1, y1) = (x + q4/x,
/// y − q4·y/x²) inside the coordinate ring of C_q. Zero iff the identity
/// y1² = 4x1³ + 4q2x1² − 16q4x1 − 16q2q4 holds.
pub fn quotient_identity_residue() -> CurveRingElement {
    let rel = CurveRel::QForm;
    let x = CurveRingElement::x(rel);
    let y = CurveRingElement::y(rel);
    let q2 = CurveRingElement::from_poly(ZP::var(Var::Q2), rel);
    let q4 = CurveRingElement::from_poly(ZP::var(Var::Q4), rel);
    let x1 = x.add(&q4.clone().mul_x_pow(-1)).unwrap();
    let y1 = y.sub(&y.mul(&q4).unwrap().mul_x_pow(-2)).unwrap();
    let c = |v: i64| CurveRingElement::from_poly(ZP::from_i64(v), rel);
    let rhs = x1
        .pow(3)
        .mul(&c(4))
        .unwrap()
        .add(&x1.pow(2).mul(&q2).unwrap().mul(&c(4)).unwrap())
        .unwrap()
        .sub(&x1.mul(&q4).unwrap().mul(&c(16)).unwrap())
        .unwrap()
        .sub(&q2.mul(&q4).unwrap().mul(&c(16)).unwrap())
        .unwrap();
    let res = y1.pow(2).sub(&rhs).unwrap();
    curve_ring_normalize(&res)
}

/// Res(f, f') for f(r) = r³ + q2·r² + q4·r, as a polynomial in q2, q4,
/// computed by Sylvester determinant; asserts 16·Res + Δ = 0.
pub fn etale_resultant_check(c: &WeierstrassQ<BigInt>) -> Result<ZP> {
    let f = ZP::var(Var::R)
        .pow(3)
        .add(&ZP::var(Var::R).pow(2).mul(&ZP::var(Var::Q2)))
        .add(&ZP::var(Var::R).mul(&ZP::var(Var::Q4)));
    let fp = f.derivative(Var::R);
    let res_generic = crate::oracles::sylvester_resultant(&f, &fp, Var::R);
    // specialize to the given curve
    let res = res_generic.subst(&[(Var::Q2, c.q2.clone()), (Var::Q4, c.q4.clone())]);
    let delta = discriminant(c);
    let lhs = res.mul_scalar(&BigInt::from(16)).add(&delta);
    if !lhs.is_zero() {
        return Err(Error::integrity(format!(
            "16·Res(f, f') + Δ = {lhs}, expected 0"
        )));
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;

    #[test]
    fn discriminant_formula_and_specializations() {
        let c = WeierstrassQ::generic();
        let d = discriminant(&c);
        let expect = ZP::var(Var::Q4).pow(2).mul(
            &ZP::var(Var::Q2)
                .pow(2)
                .mul_scalar(&BigInt::from(16))
                .sub(&ZP::var(Var::Q4).mul_scalar(&BigInt::from(64))),
        );
        assert_eq!(d, expect);
        assert_eq!(d.weight(), Some(12));

        // evaluation at (0, 1) → −64, cross-checked by the classical cubic
        // discriminant of 4x³ + 4q2x² + 4q4x up to the 16-fold normalization
        let at01 = d.subst(&[(Var::Q2, ZP::zero()), (Var::Q4, ZP::one())]);
        assert_eq!(at01, ZP::from_i64(-64));
        let cubic_disc = oracles::cubic_discriminant(
            &ZP::from_i64(4),
            &ZP::var(Var::Q2).mul_scalar(&BigInt::from(4)),
            &ZP::var(Var::Q4).mul_scalar(&BigInt::from(4)),
            &ZP::zero(),
        );
        assert_eq!(cubic_disc, d.mul_scalar(&BigInt::from(16)));

        // mod (3, q2): Δ ≡ −q4³
        let mod3 = d.reduce_mod3().reduce_mod_q2();
        let expect3 = GradedPoly::<F3>::var(Var::Q4)
            .pow(3)
            .mul_scalar(&F3::new(-1));
        assert_eq!(mod3, expect3);
    }

    #[test]
    fn induced_map_formulas() {
        let psi_d = induced_map(MapName::PsiD).unwrap();
        assert_eq!(
            psi_d.q2_img,
            ZP::var(Var::Q2).mul_scalar(&BigInt::from(-2))
        );
        assert_eq!(
            psi_d.q4_img,
            ZP::var(Var::Q2)
                .pow(2)
                .sub(&ZP::var(Var::Q4).mul_scalar(&BigInt::from(4)))
        );
        // (psi_d)² = psi_2 on the coefficient ring
        let sq = psi_d.compose(&psi_d, MapName::Psi2).unwrap();
        let psi_2 = induced_map(MapName::Psi2).unwrap();
        assert_eq!(sq.q2_img, psi_2.q2_img);
        assert_eq!(sq.q4_img, psi_2.q4_img);
        // rel1: phi_q = phi_f ∘ psi_d  (contravariantly psi_d* then phi_f*)
        let phi_f = induced_map(MapName::PhiF).unwrap();
        let phi_q = induced_map(MapName::PhiQ).unwrap();
        let comp = phi_f.compose(&psi_d, MapName::PhiQ).unwrap();
        assert!(comp.same_images(&RingMapSpec {
            r_img: None,
            ..phi_q.clone()
        }));
        // eta_R on q4 comes from matching x-coefficients of the shift
        let eta = induced_map(MapName::EtaR).unwrap();
        let expect = ZP::var(Var::Q4)
            .add(
                &ZP::var(Var::Q2)
                    .mul(&ZP::var(Var::R))
                    .mul_scalar(&BigInt::from(2)),
            )
            .add(&ZP::var(Var::R).pow(2).mul_scalar(&BigInt::from(3)));
        assert_eq!(eta.q4_img, expect);
    }

    #[test]
    fn eta_r_derivation_oracle() {
        // substitute x → x + r into 4x³ + 4q2x² + 4q4x and match
        // coefficients; the constant term dies by r³ + q2r² + q4r = 0
        let x = ZP::var(Var::X);
        let shifted = CurveRel::QForm
            .rhs()
            .subst(&[(Var::X, x.add(&ZP::var(Var::R)))]);
        let c2 = shifted
            .coeff_of(Var::X, 2)
            .div_scalar_exact(&BigInt::from(4))
            .unwrap();
        let c1 = shifted
            .coeff_of(Var::X, 1)
            .div_scalar_exact(&BigInt::from(4))
            .unwrap();
        let c0 = shifted
            .coeff_of(Var::X, 0)
            .div_scalar_exact(&BigInt::from(4))
            .unwrap();
        let eta = induced_map(MapName::EtaR).unwrap();
        assert_eq!(c2, eta.q2_img);
        assert_eq!(c1, eta.q4_img);
        let relation = ZP::var(Var::R)
            .pow(3)
            .add(&ZP::var(Var::R).pow(2).mul(&ZP::var(Var::Q2)))
            .add(&ZP::var(Var::R).mul(&ZP::var(Var::Q4)));
        assert_eq!(c0, relation);
    }

    #[test]
    fn psi_2_is_invertible_three_locally() {
        use num::BigRational;
        // over Q: compose psi_2 with (q2/4, q4/16, r/4) and get the identity
        let psi_2 = induced_map(MapName::Psi2).unwrap();
        let inv = RingMapSpec::<BigRational> {
            name: MapName::Psi2,
            q2_img: GradedPoly::var(Var::Q2)
                .mul_scalar(&BigRational::new(1.into(), 4.into())),
            q4_img: GradedPoly::var(Var::Q4)
                .mul_scalar(&BigRational::new(1.into(), 16.into())),
            r_img: Some(
                GradedPoly::var(Var::R).mul_scalar(&BigRational::new(1.into(), 4.into())),
            ),
        };
        let psi_2q = RingMapSpec::<BigRational> {
            name: MapName::Psi2,
            q2_img: psi_2.q2_img.map_coeffs(|c| BigRational::from(c.clone())),
            q4_img: psi_2.q4_img.map_coeffs(|c| BigRational::from(c.clone())),
            r_img: psi_2
                .r_img
                .as_ref()
                .map(|r| r.map_coeffs(|c| BigRational::from(c.clone()))),
        };
        let comp = inv.compose(&psi_2q, MapName::Psi2).unwrap();
        assert_eq!(comp.q2_img, GradedPoly::var(Var::Q2));
        assert_eq!(comp.q4_img, GradedPoly::var(Var::Q4));
        assert_eq!(comp.r_img.unwrap(), GradedPoly::var(Var::R));
    }

    #[test]
    fn quotient_curve_and_identity() {
        let c = WeierstrassQ::generic();
        let (b, q) = quotient_by_canonical_2torsion(&c);
        assert_eq!(b.b2, ZP::var(Var::Q2).mul_scalar(&BigInt::from(4)));
        assert_eq!(b.b4, ZP::var(Var::Q4).mul_scalar(&BigInt::from(-8)));
        assert_eq!(
            b.b6,
            ZP::var(Var::Q2)
                .mul(&ZP::var(Var::Q4))
                .mul_scalar(&BigInt::from(-16))
        );
        let psi_d = induced_map(MapName::PsiD).unwrap();
        assert_eq!(q.q2, psi_d.q2_img);
        assert_eq!(q.q4, psi_d.q4_img);
        // the coordinate-ring identity itself
        assert!(quotient_identity_residue().is_zero());
    }

    #[test]
    fn etale_resultant() {
        let c = WeierstrassQ::generic();
        let res = etale_resultant_check(&c).unwrap();
        // q4²(4q4 − q2²), cross-checked against the root-product oracle
        let expect = ZP::var(Var::Q4).pow(2).mul(
            &ZP::var(Var::Q4)
                .mul_scalar(&BigInt::from(4))
                .sub(&ZP::var(Var::Q2).pow(2)),
        );
        assert_eq!(res, expect);
        let by_roots =
            oracles::etale_resultant_by_roots(&ZP::var(Var::Q2), &ZP::var(Var::Q4));
        assert_eq!(res, by_roots);
        // evaluation at (0, 1) → 4
        let at01 = res.subst(&[(Var::Q2, ZP::zero()), (Var::Q4, ZP::one())]);
        assert_eq!(at01, ZP::from_i64(4));
    }

    #[test]
    fn gamma_dictionaries_are_consistent() {
        // 4(x − e1)(x² + g2 x + g4) expanded matches the b-form dictionary,
        // and the shift x ↦ x + e1 matches the q-form dictionary
        let e1 = ZP::var(Var::E1);
        let g2 = ZP::var(Var::G2);
        let g4 = ZP::var(Var::G4);
        let x = ZP::var(Var::X);
        let lhs = x
            .sub(&e1)
            .mul(&x.pow(2).add(&g2.mul(&x)).add(&g4))
            .mul_scalar(&BigInt::from(4));
        let b = gamma_to_b(&e1, &g2, &g4);
        let rhs = x
            .pow(3)
            .mul_scalar(&BigInt::from(4))
            .add(&x.pow(2).mul(&b.b2))
            .add(&x.mul(&b.b4).mul_scalar(&BigInt::from(2)))
            .add(&b.b6);
        assert_eq!(lhs, rhs);
        let q = gamma_to_q(&e1, &g2, &g4);
        let shifted = lhs.subst(&[(Var::X, x.add(&e1))]);
        let expect = x
            .pow(3)
            .mul_scalar(&BigInt::from(4))
            .add(&x.pow(2).mul(&q.q2).mul_scalar(&BigInt::from(4)))
            .add(&x.mul(&q.q4).mul_scalar(&BigInt::from(4)));
        assert_eq!(shifted, expect);
    }

    #[test]
    fn mod_i2_congruences_of_the_four_maps() {
        // phi_f(q4^k) = q4^k, psi_2(q4^k) = q4^k, psi_d(q4^k) = (−q4)^k,
        // phi_q(q4^k) = (−q4)^k, all mod (3, q2)
        for k in 1..=6u32 {
            let q4k = ZP::var(Var::Q4).pow(k);
            let half = |name| {
                induced_map(name)
                    .unwrap()
                    .apply(&q4k)
                    .unwrap()
                    .reduce_mod3()
                    .reduce_mod_q2()
            };
            let plus = GradedPoly::<F3>::var(Var::Q4).pow(k);
            let minus = GradedPoly::<F3>::var(Var::Q4).neg().pow(k);
            assert_eq!(half(MapName::PhiF), plus);
            assert_eq!(half(MapName::Psi2), plus);
            assert_eq!(half(MapName::PsiD), minus);
            assert_eq!(half(MapName::PhiQ), minus);
        }
    }

    #[test]
    fn scaling_by_omega_squared_fixes_q4() {
        use crate::finite_field::F9;
        let mu = scaling_map(F9::omega().mul(&F9::omega()));
        // λ = ω²: q4 ↦ ω⁸ q4 = q4, so φ̄_q* agrees with φ_q* on q4-powers
        assert_eq!(mu.q4_img, GradedPoly::<F9>::var(Var::Q4));
        // q2 ↦ ω⁴ q2 = −q2
        assert_eq!(
            mu.q2_img,
            GradedPoly::<F9>::var(Var::Q2).mul_scalar(&F9::one().neg())
        );
    }
}
