//! Characteristic-3 fields: F_3, F_9 = F_3[ω]/(ω² − ω − 1), and the even
//! extension tower F_{9^m} used for point counting.
//!
//! ω is a primitive 8th root of unity: ω⁴ = −1 under this minimal
//! polynomial, which is what makes t = ω² a square root of −1.

use crate::ring::{Field, Ring};
use num::{BigInt, BigRational, Signed, ToPrimitive};
use std::fmt;

/// The prime field F_3, elements 0, 1, 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F3(pub u8);

impl F3 {
    pub fn new(v: i64) -> Self {
        F3(v.rem_euclid(3) as u8)
    }
    pub fn from_bigint(v: &BigInt) -> Self {
        let m = (v % BigInt::from(3)).to_i64().unwrap();
        F3::new(m)
    }
    /// Reduce a rational with denominator prime to 3.
    pub fn from_rational(r: &BigRational) -> Option<Self> {
        let d = F3::from_bigint(&r.denom().abs());
        if d.is_zero() {
            return None;
        }
        let sign = if r.denom().is_negative() { 2 } else { 1 };
        let n = F3::from_bigint(r.numer());
        Some(n.mul(&d.inv()).mul(&F3(sign % 3)))
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for F3 {
    fn zero() -> Self {
        F3(0)
    }
    fn one() -> Self {
        F3(1)
    }
    fn from_i64(v: i64) -> Self {
        F3::new(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        F3((self.0 + rhs.0) % 3)
    }
    fn neg(&self) -> Self {
        F3((3 - self.0) % 3)
    }
    fn mul(&self, rhs: &Self) -> Self {
        F3((self.0 * rhs.0) % 3)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.mul(&rhs.inv()))
        }
    }
}

impl Field for F3 {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F3");
        // 1⁻¹ = 1, 2⁻¹ = 2
        *self
    }
}

/// F_9 = F_3[ω]/(ω² = ω + 1), written a + bω.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F9 {
    pub a: F3,
    pub b: F3,
}

impl F9 {
    pub fn new(a: i64, b: i64) -> Self {
        F9 {
            a: F3::new(a),
            b: F3::new(b),
        }
    }
    pub fn omega() -> Self {
        F9::new(0, 1)
    }
    /// ω^k for any integer k (ω has order 8).
    pub fn omega_pow(k: i64) -> Self {
        F9::omega().pow(k.rem_euclid(8) as u64)
    }
    pub fn from_f3(c: F3) -> Self {
        F9 { a: c, b: F3(0) }
    }
    /// Frobenius x ↦ x³; on F_9 this is ω ↦ ω³ = 1 + 2ω.
    pub fn frob(&self) -> Self {
        // (a + bω)³ = a + bω³ and ω³ = ω·ω² = ω² + ω = 2ω + 1
        F9 {
            a: self.a.add(&self.b),
            b: self.b.mul(&F3(2)),
        }
    }
    pub fn all_elements() -> Vec<F9> {
        let mut v = Vec::with_capacity(9);
        for a in 0..3 {
            for b in 0..3 {
                v.push(F9::new(a, b));
            }
        }
        v
    }
}

impl fmt::Display for F9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.0, self.b.0) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, b) => write!(f, "{b}w"),
            (a, 1) => write!(f, "{a}+w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

impl Ring for F9 {
    fn zero() -> Self {
        F9::new(0, 0)
    }
    fn one() -> Self {
        F9::new(1, 0)
    }
    fn from_i64(v: i64) -> Self {
        F9::new(v, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        F9 {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
        }
    }
    fn neg(&self) -> Self {
        F9 {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a+bω)(c+dω) = ac + bd·ω² + (ad+bc)ω = (ac+bd) + (ad+bc+bd)ω
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        let bd = b.mul(&d);
        F9 {
            a: a.mul(&c).add(&bd),
            b: a.mul(&d).add(&b.mul(&c)).add(&bd),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.mul(&rhs.inv()))
        }
    }
}

impl Field for F9 {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in F9");
        // x·x³ = N(x) ∈ F_3, so x⁻¹ = x³ / N(x)
        let conj = self.frob();
        let n = self.mul(&conj);
        debug_assert!(n.b.is_zero());
        F9 {
            a: conj.a.mul(&n.a.inv()),
            b: conj.b.mul(&n.a.inv()),
        }
    }
}

/// The field F_{9^m}, presented as F_9[s]/(g) for the lexicographically
/// smallest monic irreducible g of degree m. Elements are coefficient
/// vectors of length m over F_9.
#[derive(Clone, Debug)]
pub struct ExtF9 {
    pub m: usize,
    /// monic modulus, length m+1, leading coefficient 1
    pub modulus: Vec<F9>,
}

pub type FEl = Vec<F9>;

fn poly_trim(p: &mut Vec<F9>) {
    while p.len() > 0 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn poly_mul(a: &[F9], b: &[F9]) -> Vec<F9> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![F9::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_rem(a: &[F9], m: &[F9]) -> Vec<F9> {
    let mut r: Vec<F9> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = m[dm].inv();
    while r.len() > dm {
        let d = r.len() - 1;
        let c = r[d].mul(&lead_inv);
        for i in 0..=dm {
            let idx = d - dm + i;
            r[idx] = r[idx].sub(&c.mul(&m[i]));
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[F9], b: &[F9]) -> Vec<F9> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn poly_powmod(base: &[F9], mut e: u128, m: &[F9]) -> Vec<F9> {
    let mut acc = vec![F9::one()];
    let mut b = poly_rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b), m);
        }
        b = poly_rem(&poly_mul(&b, &b), m);
        e >>= 1;
    }
    acc
}

fn is_irreducible(g: &[F9]) -> bool {
    let m = g.len() - 1;
    // x^(9^m) ≡ x mod g, and x^(9^(m/p)) − x coprime to g for primes p | m
    let x = vec![F9::zero(), F9::one()];
    let q_m = 9u128.pow(m as u32);
    let xq = poly_powmod(&x, q_m, g);
    let mut diff = xq.clone();
    // diff = x^(q^m) - x
    if diff.len() < 2 {
        diff.resize(2, F9::zero());
    }
    diff[1] = diff[1].sub(&F9::one());
    poly_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    let mut primes = vec![];
    let mut mm = m;
    let mut p = 2;
    while p * p <= mm {
        if mm % p == 0 {
            primes.push(p);
            while mm % p == 0 {
                mm /= p;
            }
        }
        p += 1;
    }
    if mm > 1 {
        primes.push(mm);
    }
    for p in primes {
        let e = 9u128.pow((m / p) as u32);
        let xq = poly_powmod(&x, e, g);
        let mut diff = xq;
        if diff.len() < 2 {
            diff.resize(2, F9::zero());
        }
        diff[1] = diff[1].sub(&F9::one());
        poly_trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        let g1 = poly_gcd(g, &diff);
        if g1.len() != 1 {
            return false;
        }
    }
    true
}

impl ExtF9 {
    /// Field with 9^m elements. The modulus is found deterministically:
    /// the first monic irreducible of degree m in the enumeration order
    /// of coefficient vectors.
    pub fn new(m: usize) -> Self {
        assert!(m >= 1 && m <= 4, "extension degree out of supported range");
        if m == 1 {
            return ExtF9 {
                m,
                modulus: vec![F9::zero(), F9::one()],
            };
        }
        let elems = F9::all_elements();
        let total = 9usize.pow(m as u32);
        for idx in 0..total {
            let mut g = Vec::with_capacity(m + 1);
            let mut rest = idx;
            for _ in 0..m {
                g.push(elems[rest % 9]);
                rest /= 9;
            }
            g.push(F9::one());
            if is_irreducible(&g) {
                return ExtF9 { m, modulus: g };
            }
        }
        unreachable!("irreducible polynomial exists for every degree");
    }

    pub fn order(&self) -> u64 {
        9u64.pow(self.m as u32)
    }

    pub fn zero(&self) -> FEl {
        vec![F9::zero(); self.m]
    }
    pub fn one(&self) -> FEl {
        let mut v = self.zero();
        v[0] = F9::one();
        v
    }
    pub fn embed(&self, c: F9) -> FEl {
        let mut v = self.zero();
        v[0] = c;
        v
    }
    pub fn from_i64(&self, v: i64) -> FEl {
        self.embed(F9::from_i64(v))
    }

    pub fn is_zero(&self, a: &FEl) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    pub fn add(&self, a: &FEl, b: &FEl) -> FEl {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }
    pub fn sub(&self, a: &FEl, b: &FEl) -> FEl {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }
    pub fn neg(&self, a: &FEl) -> FEl {
        a.iter().map(|x| x.neg()).collect()
    }
    pub fn mul(&self, a: &FEl, b: &FEl) -> FEl {
        if self.m == 1 {
            return vec![a[0].mul(&b[0])];
        }
        let mut r = poly_rem(&poly_mul(a, b), &self.modulus);
        r.resize(self.m, F9::zero());
        r
    }
    pub fn pow(&self, a: &FEl, mut e: u64) -> FEl {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: &FEl) -> FEl {
        assert!(!self.is_zero(a), "inverse of zero");
        self.pow(a, self.order() - 2)
    }
    /// Absolute Frobenius x ↦ x³.
    pub fn frob(&self, a: &FEl) -> FEl {
        self.pow(a, 3)
    }
    /// Enumerate all field elements in a deterministic order.
    pub fn elements(&self) -> Vec<FEl> {
        let elems = F9::all_elements();
        let total = 9usize.pow(self.m as u32);
        let mut out = Vec::with_capacity(total);
        for idx in 0..total {
            let mut v = Vec::with_capacity(self.m);
            let mut rest = idx;
            for _ in 0..self.m {
                v.push(elems[rest % 9]);
                rest /= 9;
            }
            out.push(v);
        }
        out
    }
}
