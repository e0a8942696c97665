//! Truncated Witt vectors of F_9: the ring W(F_9)/3ⁿ realized as
//! (Z/3ⁿ)[ω̃]/(ω̃² − c₁ω̃ − 1) where c₁ is the Hensel lift of 1 with
//! c₁² ≡ −2 (mod 3ⁿ).
//!
//! With this modulus ω̃⁴ = −1 holds exactly at every precision, so ω̃ is a
//! Teichmüller 8th root of unity lifting ω ∈ F_9, and x² − c₁x − 1 divides
//! x⁴ + 1 (mod 3ⁿ).

use crate::error::{Error, Result};
use crate::finite_field::{F3, F9};
use crate::ring::Ring;
use std::fmt;

pub const MAX_PRECISION: u32 = 40;

/// 3^n as u64 (n ≤ 40 fits).
pub fn pow3(n: u32) -> u64 {
    3u64.pow(n)
}

/// An element of Z/3ⁿ. Arithmetic uses u128 intermediates, so n ≤ 40 is safe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Zm3 {
    pub v: u64,
    pub n: u32,
}

impl Zm3 {
    pub fn new(v: i128, n: u32) -> Self {
        assert!(n >= 1 && n <= MAX_PRECISION, "precision out of range");
        let m = pow3(n) as i128;
        Zm3 {
            v: v.rem_euclid(m) as u64,
            n,
        }
    }
    pub fn modulus(&self) -> u64 {
        pow3(self.n)
    }
    pub fn add(&self, o: &Zm3) -> Zm3 {
        assert_eq!(self.n, o.n, "precision mismatch");
        Zm3::new(self.v as i128 + o.v as i128, self.n)
    }
    pub fn sub(&self, o: &Zm3) -> Zm3 {
        assert_eq!(self.n, o.n, "precision mismatch");
        Zm3::new(self.v as i128 - o.v as i128, self.n)
    }
    pub fn neg(&self) -> Zm3 {
        Zm3::new(-(self.v as i128), self.n)
    }
    pub fn mul(&self, o: &Zm3) -> Zm3 {
        assert_eq!(self.n, o.n, "precision mismatch");
        Zm3::new(self.v as i128 * o.v as i128, self.n)
    }
    pub fn is_zero(&self) -> bool {
        self.v == 0
    }
    pub fn is_unit(&self) -> bool {
        self.v % 3 != 0
    }
    /// Inverse of a unit, by lifting the inverse mod 3 with Newton steps.
    pub fn inv(&self) -> Result<Zm3> {
        if !self.is_unit() {
            return Err(Error::arith(format!("{} not invertible mod 3^{}", self.v, self.n)));
        }
        // x ← x(2 − ax) doubles the precision of an approximate inverse
        let mut x = Zm3::new(if self.v % 3 == 1 { 1 } else { 2 }, self.n);
        for _ in 0..7 {
            let two = Zm3::new(2, self.n);
            x = x.mul(&two.sub(&self.mul(&x)));
        }
        debug_assert_eq!(self.mul(&x).v, 1);
        Ok(x)
    }
    pub fn reduce_to(&self, m: u32) -> Zm3 {
        assert!(m <= self.n);
        Zm3::new(self.v as i128, m)
    }
    pub fn to_f3(&self) -> F3 {
        F3::new((self.v % 3) as i64)
    }
}

impl fmt::Display for Zm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// c₁(n): the square root of −2 in Z/3ⁿ with c₁ ≡ 1 (mod 3).
pub fn modulus_c1(n: u32) -> Zm3 {
    // Newton: c ← c − (c² + 2)/(2c)
    let mut c = Zm3::new(1, n);
    for _ in 0..7 {
        let num = c.mul(&c).add(&Zm3::new(2, n));
        let den = Zm3::new(2, n).mul(&c).inv().expect("2c is a unit");
        c = c.sub(&num.mul(&den));
    }
    debug_assert_eq!(c.mul(&c).add(&Zm3::new(2, n)).v, 0);
    debug_assert_eq!(c.v % 3, 1);
    c
}

/// x + y·ω̃ in W(F_9)/3ⁿ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WittEl {
    pub x: Zm3,
    pub y: Zm3,
}

impl WittEl {
    pub fn new(x: i128, y: i128, n: u32) -> Self {
        WittEl {
            x: Zm3::new(x, n),
            y: Zm3::new(y, n),
        }
    }
    pub fn precision(&self) -> u32 {
        self.x.n
    }
    pub fn zero(n: u32) -> Self {
        WittEl::new(0, 0, n)
    }
    pub fn one(n: u32) -> Self {
        WittEl::new(1, 0, n)
    }
    pub fn from_i128(v: i128, n: u32) -> Self {
        WittEl::new(v, 0, n)
    }
    /// The Teichmüller 8th root of unity ω̃.
    pub fn omega(n: u32) -> Self {
        WittEl::new(0, 1, n)
    }
    pub fn omega_pow(k: i64, n: u32) -> Self {
        WittEl::omega(n).pow_u(k.rem_euclid(8) as u64)
    }

    pub fn add(&self, o: &WittEl) -> WittEl {
        WittEl {
            x: self.x.add(&o.x),
            y: self.y.add(&o.y),
        }
    }
    pub fn sub(&self, o: &WittEl) -> WittEl {
        WittEl {
            x: self.x.sub(&o.x),
            y: self.y.sub(&o.y),
        }
    }
    pub fn neg(&self) -> WittEl {
        WittEl {
            x: self.x.neg(),
            y: self.y.neg(),
        }
    }
    pub fn mul(&self, o: &WittEl) -> WittEl {
        // (a + bω̃)(c + dω̃) = ac + bd + (ad + bc + c₁bd)ω̃  using ω̃² = 1 + c₁ω̃
        let n = self.precision();
        let c1 = modulus_c1(n);
        let (a, b, c, d) = (self.x, self.y, o.x, o.y);
        let bd = b.mul(&d);
        WittEl {
            x: a.mul(&c).add(&bd),
            y: a.mul(&d).add(&b.mul(&c)).add(&c1.mul(&bd)),
        }
    }
    pub fn pow_u(&self, mut e: u64) -> WittEl {
        let mut acc = WittEl::one(self.precision());
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
    /// Frobenius lift: σ(ω̃) = c₁ − ω̃ (the conjugate root), σ² = id.
    pub fn sigma(&self) -> WittEl {
        let c1 = modulus_c1(self.precision());
        WittEl {
            x: self.x.add(&self.y.mul(&c1)),
            y: self.y.neg(),
        }
    }
    /// Norm to Z/3ⁿ: x·σ(x) = a² + c₁ab − b².
    pub fn norm(&self) -> Zm3 {
        let p = self.mul(&self.sigma());
        debug_assert!(p.y.is_zero());
        p.x
    }
    pub fn is_unit(&self) -> bool {
        self.norm().is_unit()
    }
    pub fn inv(&self) -> Result<WittEl> {
        let n = self.norm();
        let ninv = n.inv().map_err(|_| Error::arith("non-unit in Witt ring"))?;
        let s = self.sigma();
        Ok(WittEl {
            x: s.x.mul(&ninv),
            y: s.y.mul(&ninv),
        })
    }
    pub fn reduce_to(&self, m: u32) -> WittEl {
        WittEl {
            x: self.x.reduce_to(m),
            y: self.y.reduce_to(m),
        }
    }
    pub fn to_f9(&self) -> F9 {
        F9 {
            a: self.x.to_f3(),
            b: self.y.to_f3(),
        }
    }
}

impl fmt::Display for WittEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}w~", self.x, self.y)
    }
}

/// Deterministic canonical order on F_9 used for root selection.
fn f9_key(v: F9) -> u8 {
    v.a.0 + 3 * v.b.0
}

/// Hensel square root in W(F_9)/3ⁿ.
///
/// The mod-3 root is selected by the ω²-reduction rule when a ≡ 2, and by
/// least canonical representative otherwise; the lift is then unique.
pub fn witt_sqrt(a: &WittEl, n: u32) -> Result<WittEl> {
    assert_eq!(a.precision(), n, "precision mismatch");
    let a9 = a.to_f9();
    if a9.is_zero() {
        return Err(Error::arith("square root requires a unit"));
    }
    // squares in F_9^× are the even powers of ω
    let mut root9: Option<F9> = None;
    for x in F9::all_elements() {
        if x.mul(&x) == a9 {
            root9 = match root9 {
                None => Some(x),
                Some(y) if f9_key(x) < f9_key(y) => Some(x),
                keep => keep,
            };
        }
    }
    let mut r9 = root9.ok_or_else(|| Error::arith(format!("{a9} is not a square in F_9")))?;
    if a9 == F9::from_i64(2) {
        // §-convention: the square root of 2 reduces to ω² = 1 + ω
        r9 = F9::omega().mul(&F9::omega());
    }
    // Newton lift: s ← s − (s² − a)/(2s)
    let mut s = WittEl::new(r9.a.0 as i128, r9.b.0 as i128, n);
    for _ in 0..7 {
        let num = s.mul(&s).sub(a);
        let den = WittEl::from_i128(2, n).mul(&s).inv()?;
        s = s.sub(&num.mul(&den));
    }
    if s.mul(&s) != *a {
        return Err(Error::arith("Hensel iteration failed to converge"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_divides_x4_plus_1() {
        for n in 1..=8 {
            let w = WittEl::omega(n);
            assert_eq!(w.pow_u(4), WittEl::one(n).neg(), "ω̃⁴ = −1 at n={n}");
            assert_eq!(w.pow_u(8), WittEl::one(n));
        }
    }

    #[test]
    fn sigma_is_frobenius_involution() {
        let n = 5;
        let w = WittEl::omega(n);
        assert_eq!(w.sigma().sigma(), w);
        // σ(ω̃) ≡ ω³ mod 3
        assert_eq!(w.sigma().to_f9(), F9::omega().pow(3));
        // σ(ω̃) = ω̃³ exactly (both are the conjugate Teichmüller root)
        assert_eq!(w.sigma(), w.pow_u(3));
    }

    #[test]
    fn sqrt2_mod3_is_omega_squared() {
        let a = WittEl::from_i128(2, 1);
        let s = witt_sqrt(&a, 1).unwrap();
        // ω² = ω + 1
        assert_eq!(s.to_f9(), F9::new(1, 1));
    }

    #[test]
    fn sqrt2_mod9_matches_exhaustive_search() {
        // independent oracle: scan all 81 residues of W/9 for roots of 2
        // reducing to ω + 1
        let n = 2;
        let two = WittEl::from_i128(2, n);
        let mut found = vec![];
        for x in 0..9i128 {
            for y in 0..9i128 {
                let c = WittEl::new(x, y, n);
                if c.mul(&c) == two && c.to_f9() == F9::new(1, 1) {
                    found.push(c);
                }
            }
        }
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], WittEl::new(4, 7, n));
        assert_eq!(witt_sqrt(&two, n).unwrap(), WittEl::new(4, 7, n));
    }

    #[test]
    fn sqrt_of_one_is_one() {
        let a = WittEl::one(3);
        assert_eq!(witt_sqrt(&a, 3).unwrap(), WittEl::one(3));
    }

    #[test]
    fn sqrt_squares_back_at_lower_precision() {
        let n = 6;
        let a = WittEl::from_i128(2, n);
        let s = witt_sqrt(&a, n).unwrap();
        for m in 1..=n {
            assert_eq!(s.reduce_to(m).mul(&s.reduce_to(m)), a.reduce_to(m));
        }
    }

    #[test]
    fn nonsquare_rejected() {
        // ω is an odd power of ω, hence not a square in F_9
        let n = 3;
        let w = WittEl::omega(n);
        assert!(witt_sqrt(&w, n).is_err());
    }

    #[test]
    fn frobenius_negates_sqrt2() {
        let n = 4;
        let s = witt_sqrt(&WittEl::from_i128(2, n), n).unwrap();
        assert_eq!(s.sigma(), s.neg());
        // hence Nrd(√2) = √2·σ(√2) = −2
        assert_eq!(s.norm(), Zm3::new(-2, n));
    }
}
