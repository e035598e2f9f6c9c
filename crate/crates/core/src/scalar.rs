//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! A [`Scalar`] carries its own domain tag (and modulus, for residues), so the
//! arithmetic operators are total on same-domain operands. Mixing domains is a
//! programming error and panics; ring-level code never constructs such a mix.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// The coefficient domain of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarDomain {
    Rationals,
    PrimeField(u32),
}

impl ScalarDomain {
    /// Builds a prime field, rejecting composite or trivial moduli.
    pub fn prime_field(p: u32) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(ScalarDomain::PrimeField(p))
        } else {
            Err(AlgebraError::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            ScalarDomain::Rationals => 0,
            ScalarDomain::PrimeField(p) => *p,
        }
    }

    /// Number of scalars, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            ScalarDomain::Rationals => None,
            ScalarDomain::PrimeField(p) => Some(u64::from(*p)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> Scalar {
        match self {
            ScalarDomain::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(k.into()))),
            ScalarDomain::PrimeField(p) => {
                let p = i64::from(*p);
                Scalar::Residue(Residue { value: k.rem_euclid(p) as u32, modulus: p as u32 })
            }
        }
    }

    /// Residue `v mod p`; for the rationals the integer `v`.
    pub fn from_u64(&self, v: u64) -> Scalar {
        match self {
            ScalarDomain::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.into()))),
            ScalarDomain::PrimeField(p) => {
                Scalar::Residue(Residue { value: (v % u64::from(*p)) as u32, modulus: *p })
            }
        }
    }

    /// Parses `"3"`, `"-1/2"` (rationals) or a reduced residue `"0".."p-1"`.
    pub fn parse(&self, s: &str) -> Result<Scalar, AlgebraError> {
        let s = s.trim();
        match self {
            ScalarDomain::Rationals => {
                let r = BigRational::from_str(s)
                    .map_err(|_| AlgebraError::Parse(format!("invalid rational scalar {s:?}")))?;
                Ok(Scalar::Rational(Box::new(r)))
            }
            ScalarDomain::PrimeField(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("invalid residue {s:?} (expected 0..{p})")))?;
                if v >= u64::from(*p) {
                    return Err(AlgebraError::Parse(format!("residue {v} is not reduced mod {p}")));
                }
                Ok(Scalar::Residue(Residue { value: v as u32, modulus: *p }))
            }
        }
    }

    /// Whether `k·x = 0` forces `x = 0`.
    pub fn is_k_torsion_free(&self, k: u64) -> bool {
        match self {
            ScalarDomain::Rationals => k > 0,
            ScalarDomain::PrimeField(p) => k > 0 && k.gcd(&u64::from(*p)) == 1,
        }
    }

    /// All scalars in canonical order `0, 1, ..., p-1`.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar> + '_> {
        let p = self.order()?;
        Some((0..p).map(move |v| self.from_u64(v)))
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rationals => write!(f, "Q"),
            ScalarDomain::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while u64::from(d) * u64::from(d) <= u64::from(p) {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn pow(self, mut e: u64) -> Residue {
        let p = u64::from(self.modulus);
        let mut base = u64::from(self.value);
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Residue { value: acc as u32, modulus: self.modulus }
    }
}

/// An exact scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Box<BigRational>),
    Residue(Residue),
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rationals,
            Scalar::Residue(r) => ScalarDomain::PrimeField(r.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(r) => r.value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(Box::new(r.recip())),
            Scalar::Residue(r) => Scalar::Residue(r.pow(u64::from(r.modulus) - 2)),
        })
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= r.as_ref();
                }
                Scalar::Rational(Box::new(acc))
            }
            Scalar::Residue(r) => Scalar::Residue(r.pow(e)),
        }
    }

    /// Residue value; `None` for rationals.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue(r) => Some(r.value),
            Scalar::Rational(_) => None,
        }
    }

    /// Integer value when the scalar is an integral rational that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => Some(i64::from(r.value)),
        }
    }
}

fn residue_pair(a: &Residue, b: &Residue) -> (u64, u64, u32) {
    assert_eq!(a.modulus, b.modulus, "scalars from different prime fields");
    (u64::from(a.value), u64::from(b.value), a.modulus)
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let (x, y, p) = residue_pair(a, b);
                Scalar::Residue(Residue { value: ((x + y) % u64::from(p)) as u32, modulus: p })
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(a.as_ref() + b.as_ref())),
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let (x, y, p) = residue_pair(a, b);
                let p64 = u64::from(p);
                Scalar::Residue(Residue { value: ((x + p64 - y) % p64) as u32, modulus: p })
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(a.as_ref() - b.as_ref())),
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let (x, y, p) = residue_pair(a, b);
                Scalar::Residue(Residue { value: (x * y % u64::from(p)) as u32, modulus: p })
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(a.as_ref() * b.as_ref())),
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Residue(r) => {
                let p = r.modulus;
                Scalar::Residue(Residue { value: (p - r.value) % p, modulus: p })
            }
            Scalar::Rational(r) => Scalar::Rational(Box::new(-r.as_ref())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let (x, y, p) = residue_pair(a, b);
                a.value = ((x + y) % u64::from(p)) as u32;
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => **a += b.as_ref(),
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let (x, y, p) = residue_pair(a, b);
                let p64 = u64::from(p);
                a.value = ((x + p64 - y) % p64) as u32;
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => **a -= b.as_ref(),
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(r) => write!(f, "{}", r.value),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Rational scalar from numerator and denominator.
pub fn rational(num: i64, den: i64) -> Scalar {
    Scalar::Rational(Box::new(BigRational::new(BigInt::from(num), BigInt::from(den))))
}

/// `true` if the rational is negative; residues are never negative.
pub fn is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rational(r) if r.is_negative())
}
