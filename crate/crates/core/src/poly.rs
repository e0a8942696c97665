//! Sparse multivariate Laurent polynomials with a weight grading.
//!
//! The variable table is fixed once and for all; monomials are exponent
//! vectors over it, kept in degree-lexicographic order inside a `BTreeMap`.
//! Negative exponents are permitted only on variables flagged invertible
//! (q4 and the curve coordinate x).

use crate::error::{Error, Result};
use crate::finite_field::F3;
use crate::ring::{Ring, rational_reduces_mod3};
use num::{BigInt, BigRational};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[repr(usize)]
pub enum Var {
    Q2 = 0,
    Q4,
    R,
    U1,
    B2,
    B4,
    B6,
    E1,
    G2,
    G4,
    X,
    Y,
    T,
    T1,
    T2,
    T3,
}

pub const ALL_VARS: [Var; NVARS] = [
    Var::Q2,
    Var::Q4,
    Var::R,
    Var::U1,
    Var::B2,
    Var::B4,
    Var::B6,
    Var::E1,
    Var::G2,
    Var::G4,
    Var::X,
    Var::Y,
    Var::T,
    Var::T1,
    Var::T2,
    Var::T3,
];

const NAMES: [&str; NVARS] = [
    "q2", "q4", "r", "u1", "b2", "b4", "b6", "e1", "g2", "g4", "x", "y", "T", "T1", "T2", "T3",
];

/// Modular weight of each variable (series parameters carry weight 0).
const WEIGHTS: [i64; NVARS] = [2, 4, 2, 0, 2, 4, 6, 2, 2, 4, 2, 3, 0, 0, 0, 0];

const INVERTIBLE: [bool; NVARS] = [
    false, true, false, false, false, false, false, false, false, false, true, false, false,
    false, false, false,
];

impl Var {
    pub fn name(self) -> &'static str {
        NAMES[self as usize]
    }
    pub fn weight(self) -> i64 {
        WEIGHTS[self as usize]
    }
    pub fn invertible(self) -> bool {
        INVERTIBLE[self as usize]
    }
    pub fn from_name(s: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == s)
    }
}

/// Exponent vector; ordered degree-lexicographically with the fixed
/// variable order q2 < q4 < r < u1 < ... < T-variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub [i16; NVARS]);

impl Mono {
    pub fn unit() -> Mono {
        Mono([0; NVARS])
    }
    pub fn var(v: Var, e: i16) -> Mono {
        let mut m = Mono::unit();
        m.0[v as usize] = e;
        m
    }
    pub fn exp(&self, v: Var) -> i16 {
        self.0[v as usize]
    }
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
    pub fn weight(&self) -> i64 {
        self.0
            .iter()
            .zip(WEIGHTS.iter())
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..NVARS {
            m.0[i] += o.0[i];
        }
        m
    }
    pub fn is_valid(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e >= 0 || INVERTIBLE[i])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}
impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPoly<R: Ring> {
    terms: BTreeMap<Mono, R>,
}

impl<R: Ring> GradedPoly<R> {
    pub fn zero() -> Self {
        GradedPoly {
            terms: BTreeMap::new(),
        }
    }
    pub fn one() -> Self {
        Self::constant(R::one())
    }
    pub fn constant(c: R) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::unit(), c);
        }
        p
    }
    pub fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::var(v, 1), R::one())
    }
    pub fn var_pow(v: Var, e: i16) -> Self {
        Self::monomial(Mono::var(v, e), R::one())
    }
    pub fn monomial(m: Mono, c: R) -> Self {
        assert!(m.is_valid(), "negative exponent on non-invertible variable");
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &R)> {
        self.terms.iter()
    }
    pub fn coeff(&self, m: &Mono) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }
    pub fn constant_term(&self) -> R {
        self.coeff(&Mono::unit())
    }

    fn insert_add(&mut self, m: Mono, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                let s = e.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Self {
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.insert_add(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }
    pub fn mul_scalar(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, x)| {
                    let p = x.mul(c);
                    if p.is_zero() {
                        None
                    } else {
                        Some((*m, p))
                    }
                })
                .collect(),
        }
    }
    pub fn mul_mono(&self, m: &Mono) -> Self {
        GradedPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by a scalar; error if some coefficient is not divisible.
    pub fn div_scalar_exact(&self, c: &R) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            let q = x
                .try_div(c)
                .ok_or_else(|| Error::arith(format!("coefficient {x} not divisible by {c}")))?;
            terms.insert(*m, q);
        }
        Ok(GradedPoly { terms })
    }

    /// Weight of a nonzero homogeneous polynomial.
    pub fn weight(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        if it.all(|m| m.weight() == w) {
            Some(w)
        } else {
            None
        }
    }
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }

    pub fn max_deg(&self, v: Var) -> i16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }
    pub fn min_deg(&self, v: Var) -> i16 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    /// Total degree in a set of variables (used for series truncation).
    pub fn truncate_total(&self, vars: &[Var], prec: i64) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    vars.iter().map(|&v| m.exp(v) as i64).sum::<i64>() < prec
                })
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i16) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| {
                    let mut m2 = *m;
                    m2.0[v as usize] = 0;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// Formal derivative with respect to a non-Laurent variable.
    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[v as usize] = e - 1;
            out.insert_add(m2, c.mul(&R::from_i64(e as i64)));
        }
        out
    }

    /// Substitute variables simultaneously: vars listed in `image` are
    /// replaced, others kept. Substituted variables must occur with
    /// non-negative exponents unless the image is invertible-monomial.
    pub fn subst(&self, image: &[(Var, GradedPoly<R>)]) -> Self {
        let mut out = Self::zero();
        // cache of powers per (slot, exponent)
        let mut pow_cache: Vec<BTreeMap<i16, GradedPoly<R>>> =
            image.iter().map(|_| BTreeMap::new()).collect();
        'term: for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            let mut rest = *m;
            for (slot, (v, img)) in image.iter().enumerate() {
                let e = m.exp(*v);
                rest.0[*v as usize] = 0;
                if e == 0 {
                    continue;
                }
                let p = pow_cache[slot].entry(e).or_insert_with(|| {
                    if e >= 0 {
                        img.pow(e as u32)
                    } else {
                        // negative exponent: the image must be a unit monomial
                        let inv = img
                            .invert_monomial()
                            .expect("negative exponent needs a monomial image");
                        inv.pow((-e) as u32)
                    }
                });
                acc = acc.mul(p);
                if acc.is_zero() {
                    continue 'term;
                }
            }
            out = out.add(&acc.mul_mono(&rest));
        }
        out
    }

    /// Inverse when the polynomial is c·m with c a unit and m invertible.
    pub fn invert_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let cinv = R::one().try_div(c)?;
        let mut minv = Mono::unit();
        for i in 0..NVARS {
            if m.0[i] != 0 && !INVERTIBLE[i] {
                return None;
            }
            minv.0[i] = -m.0[i];
        }
        Some(Self::monomial(minv, cinv))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> GradedPoly<S> {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let s = f(c);
                    if s.is_zero() {
                        None
                    } else {
                        Some((*m, s))
                    }
                })
                .collect(),
        }
    }
}

impl GradedPoly<BigInt> {
    pub fn reduce_mod3(&self) -> GradedPoly<F3> {
        self.map_coeffs(F3::from_bigint)
    }
    pub fn to_rational(&self) -> GradedPoly<BigRational> {
        self.map_coeffs(|c| BigRational::from(c.clone()))
    }
}

impl GradedPoly<BigRational> {
    /// Reduce mod 3; fails if some denominator is divisible by 3.
    pub fn reduce_mod3(&self) -> Result<GradedPoly<F3>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !rational_reduces_mod3(c) {
                return Err(Error::arith(format!("denominator of {c} divisible by 3")));
            }
            let f = F3::from_rational(c).unwrap();
            if !f.is_zero() {
                terms.insert(*m, f);
            }
        }
        Ok(GradedPoly { terms })
    }
    /// Exact integer content check: all coefficients integral.
    pub fn to_integer(&self) -> Result<GradedPoly<BigInt>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::arith(format!("non-integral coefficient {c}")));
            }
            terms.insert(*m, c.to_integer());
        }
        Ok(GradedPoly { terms })
    }
}

impl GradedPoly<F3> {
    /// Substitute q2 ↦ 0, i.e. reduce modulo the ideal (q2).
    pub fn reduce_mod_q2(&self) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(Var::Q2) == 0)
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }
}

/// Canonical text form: `c * q2^a q4^b ...` joined by ` + `, terms in the
/// canonical monomial order.
impl<R: Ring> fmt::Display for GradedPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if *m != Mono::unit() {
                write!(f, " *")?;
                for v in ALL_VARS {
                    let e = m.exp(v);
                    if e == 0 {
                        continue;
                    }
                    if e == 1 {
                        write!(f, " {}", v.name())?;
                    } else {
                        write!(f, " {}^{}", v.name(), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type ZP = GradedPoly<BigInt>;
    type FP = GradedPoly<F3>;

    fn random_poly<R: Ring>(rng: &mut ChaCha8Rng, coeff: impl Fn(&mut ChaCha8Rng) -> R) -> GradedPoly<R> {
        let vars = [Var::Q2, Var::Q4, Var::R];
        let mut p = GradedPoly::zero();
        for _ in 0..rng.gen_range(0..6) {
            let mut m = Mono::unit();
            for &v in &vars {
                m.0[v as usize] = rng.gen_range(0..4);
            }
            p = p.add(&GradedPoly::monomial(m, coeff(rng)));
        }
        p
    }

    #[test]
    fn ring_axioms_randomized() {
        // 200 random triples per scalar domain
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..200 {
            let a: ZP = random_poly(&mut rng, |r| BigInt::from(r.gen_range(-9i64..10)));
            let b: ZP = random_poly(&mut rng, |r| BigInt::from(r.gen_range(-9i64..10)));
            let c: ZP = random_poly(&mut rng, |r| BigInt::from(r.gen_range(-9i64..10)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.mul(&b), b.mul(&a));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..200 {
            let a: FP = random_poly(&mut rng, |r| F3::new(r.gen_range(0..3)));
            let b: FP = random_poly(&mut rng, |r| F3::new(r.gen_range(0..3)));
            let c: FP = random_poly(&mut rng, |r| F3::new(r.gen_range(0..3)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }

    #[test]
    fn weight_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..100 {
            // homogeneous monomial pairs
            let m1 = Mono::var(Var::Q2, rng.gen_range(0..5)).mul(&Mono::var(Var::Q4, rng.gen_range(0..5)));
            let m2 = Mono::var(Var::R, rng.gen_range(0..5)).mul(&Mono::var(Var::Q4, rng.gen_range(-3..5)));
            let f = ZP::monomial(m1, BigInt::from(2));
            let g = ZP::monomial(m2, BigInt::from(5));
            assert_eq!(
                f.mul(&g).weight().unwrap(),
                f.weight().unwrap() + g.weight().unwrap()
            );
        }
    }

    #[test]
    fn laurent_only_on_invertible() {
        let m = Mono::var(Var::Q4, -2);
        assert!(m.is_valid());
        let m2 = Mono::var(Var::Q2, -1);
        assert!(!m2.is_valid());
    }

    #[test]
    fn display_canonical_form() {
        let p = ZP::var(Var::Q4)
            .pow(2)
            .mul(&ZP::var(Var::Q2).pow(2))
            .mul_scalar(&BigInt::from(16))
            .add(&ZP::var(Var::Q4).pow(3).mul_scalar(&BigInt::from(-64)));
        assert_eq!(p.to_string(), "-64 * q4^3 + 16 * q2^2 q4^2");
        assert_eq!(ZP::zero().to_string(), "0");
        assert_eq!(ZP::from_i64(5).to_string(), "5");
        assert_eq!(ZP::var(Var::Q2).to_string(), "1 * q2");
    }

    #[test]
    fn substitution_and_derivative() {
        // f = q2^2 q4, substitute q2 -> q4 + 1
        let f = ZP::var(Var::Q2).pow(2).mul(&ZP::var(Var::Q4));
        let img = ZP::var(Var::Q4).add(&ZP::one());
        let g = f.subst(&[(Var::Q2, img)]);
        // (q4+1)^2 q4 = q4^3 + 2q4^2 + q4
        let expect = ZP::var(Var::Q4)
            .pow(3)
            .add(&ZP::var(Var::Q4).pow(2).mul_scalar(&BigInt::from(2)))
            .add(&ZP::var(Var::Q4));
        assert_eq!(g, expect);
        let d = expect.derivative(Var::Q4);
        let expect_d = ZP::var(Var::Q4)
            .pow(2)
            .mul_scalar(&BigInt::from(3))
            .add(&ZP::var(Var::Q4).mul_scalar(&BigInt::from(4)))
            .add(&ZP::one());
        assert_eq!(d, expect_d);
    }
}
