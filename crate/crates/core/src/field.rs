//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Everything in the crate is generic over [`Field`]; there is no floating
//! point anywhere.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Tag used in serialized formats, e.g. `"Q"` or `"F2"`.
    const NAME: &'static str;
    /// Zero for the rationals.
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn inv(&self) -> Option<Self>;
    fn parse(s: &str) -> Result<Self>;

    /// All elements, when the field is finite.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self -= a * b` without intermediate clones where the backing type allows.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.clone() * b.clone();
        *self = self.clone() - prod;
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.clone() * b.clone();
        *self = self.clone() + prod;
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }
}

/// Rational numbers with arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(num: i64, den: i64) -> Self {
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0 + rhs.0)
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0 - rhs.0)
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        Q(self.0 * rhs.0)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Field for Q {
    const NAME: &'static str = "Q";
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn from_i64(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        // Cap the length so hostile inputs cannot request huge integers.
        if num.is_empty() || den.is_empty() || num.len() > 64 || den.len() > 64 {
            return Err(bad());
        }
        let n = BigInt::from_str(num).map_err(|_| bad())?;
        let d = BigInt::from_str(den).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q(BigRational::new(n, d)))
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        self.0 -= &a.0 * &b.0;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        self.0 += &a.0 * &b.0;
    }
    fn div(&self, other: &Self) -> Self {
        assert!(!other.0.is_zero(), "division by zero");
        Q(&self.0 / &other.0)
    }
}

/// The prime field with `P` elements; `P` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

const fn prime_name(p: u32) -> &'static str {
    match p {
        2 => "F2",
        3 => "F3",
        5 => "F5",
        7 => "F7",
        11 => "F11",
        13 => "F13",
        _ => "Fp",
    }
}

impl<const P: u32> Field for Fp<P> {
    const NAME: &'static str = prime_name(P);
    const CHARACTERISTIC: u64 = P as u64;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let mut base = self.0 as u64;
        let mut exp = P as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            exp >>= 1;
        }
        Some(Fp(acc as u32))
    }
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > 20 {
            return Err(Error::Parse(format!("invalid F{P} element {s:?}")));
        }
        s.parse::<i64>()
            .map(Fp::new)
            .map_err(|_| Error::Parse(format!("invalid F{P} element {s:?}")))
    }
    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self - *a * *b;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self + *a * *b;
    }
}

/// Field with a finite number of elements `q`, or `None` for the rationals.
pub fn field_order<F: Field>() -> Option<u64> {
    F::elements().map(|e| e.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_parse_and_display() {
        assert_eq!(Q::parse("-2/4").unwrap().to_string(), "-1/2");
        assert_eq!(Q::parse("7").unwrap(), Q::from_i64(7));
        assert!(Q::parse("1/0").is_err());
        assert!(Q::parse("").is_err());
        assert!(Q::parse("x").is_err());
    }

    #[test]
    fn prime_field_basics() {
        assert_eq!(F2::one() + F2::one(), F2::zero());
        assert_eq!(F3::from_i64(-1), F3::new(2));
        assert_eq!(F5::new(3).inv().unwrap() * F5::new(3), F5::one());
        assert_eq!(F2::NAME, "F2");
        assert_eq!(field_order::<F3>(), Some(3));
        assert_eq!(field_order::<Q>(), None);
    }

    proptest! {
        #[test]
        fn fp_inverse_roundtrip(a in 1i64..1000) {
            let x = Fp::<13>::new(a);
            if !x.is_zero() {
                prop_assert_eq!(x * x.inv().unwrap(), Fp::<13>::one());
            }
        }

        #[test]
        fn rational_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50) {
            let x = Q::new(a, b);
            let y = Q::new(c, b + 1);
            prop_assert_eq!(x.clone() * (y.clone() + Q::one()), x.clone() * y.clone() + x.clone());
            let mut z = x.clone();
            z.sub_mul_assign(&x, &y);
            prop_assert_eq!(z, x.clone() - x * y);
        }
    }
}
