//! Coefficient fields for exact rank computations.
//!
//! Everything that computes a rank (strand homology, Taylor complexes,
//! simplicial homology) is generic over [`Scalar`]. Two families are
//! provided: the rationals ([`crate::Rational`]) and prime fields
//! [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};

/// An exact field usable as matrix entries.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + Send + Sync + 'static
{
    /// Characteristic of the field; 0 for the rationals.
    fn characteristic() -> u64;

    fn from_i64(v: i64) -> Self;
}

impl Scalar for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// The prime field of order `P`. `P` must be prime; this is not checked.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let m = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp(acc as u32)
    }

    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        self.pow(P as u64 - 2)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
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
        Fp((self.0 as u64 * rhs.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        // every nonzero element divides every element
        assert!(rhs.0 != 0, "remainder by zero in GF({P})");
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u32> Scalar for Fp<P> {
    fn characteristic() -> u64 {
        P as u64
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

/// Prime moduli for which [`FieldChoice::Prime`] can be dispatched at runtime.
pub const SUPPORTED_PRIMES: &[u32] = &[2, 3, 5, 7, 11, 13, 101, 1009, 32003, 65521, 2147483647];

/// Runtime selection of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldChoice {
    #[default]
    Rational,
    Prime(u32),
}

impl FieldChoice {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldChoice::Rational => 0,
            FieldChoice::Prime(p) => p as u64,
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "rational"),
            FieldChoice::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" || s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        let p = s
            .strip_prefix("prime:")
            .ok_or_else(|| Error::Input(format!("unknown field `{s}`; expected `rational` or `prime:<p>`")))?;
        let p: u32 = p
            .parse()
            .map_err(|_| Error::Input(format!("bad prime modulus `{p}`")))?;
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::Input(format!(
                "unsupported prime {p}; supported moduli are {SUPPORTED_PRIMES:?}"
            )));
        }
        Ok(FieldChoice::Prime(p))
    }
}

/// Evaluates `$body` with the type alias `$F` bound to the field selected by
/// a [`FieldChoice`].
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        match $choice {
            $crate::FieldChoice::Rational => {
                type $F = $crate::Rational;
                $body
            }
            $crate::FieldChoice::Prime(p) => $crate::with_field!(@prime p, $F => $body;
                2, 3, 5, 7, 11, 13, 101, 1009, 32003, 65521, 2147483647),
        }
    }};
    (@prime $p:ident, $F:ident => $body:expr; $($q:literal),*) => {{
        match $p {
            $( $q => {
                type $F = $crate::Fp<$q>;
                $body
            } )*
            other => panic!("prime {other} is not in SUPPORTED_PRIMES"),
        }
    }};
}
