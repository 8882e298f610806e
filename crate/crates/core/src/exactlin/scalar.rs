//! Exact field elements: rationals with a machine-word fast path, or residues
//! modulo a fixed prime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// An exact scalar.
///
/// Rationals are kept reduced with a positive denominator. Small values live in
/// an `i64` ratio and are promoted to big integers on overflow. A residue only
/// combines with residues of the same modulus; combining it with a rational
/// reduces the rational modulo that prime.
#[derive(Clone)]
pub struct Scalar(Repr);

#[derive(Clone)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn demote(r: BigRational) -> Repr {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        // i64::MIN cannot be negated safely inside Ratio arithmetic
        (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Repr::Small(Ratio::new_raw(n, d)),
        _ => Repr::Big(r),
    }
}

fn promote(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

fn big_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(Ratio::from_integer(0)))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(Ratio::from_integer(1)))
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar(Repr::Small(Ratio::from_integer(n)))
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(demote(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar(demote(r))
    }

    /// Residue of `value` modulo the prime `modulus`.
    pub fn residue(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Scalar(Repr::Mod {
            value: v as u64,
            modulus,
        })
    }

    /// Reduce this scalar into the prime field of the given modulus.
    pub fn to_residue(&self, modulus: u64) -> Self {
        match &self.0 {
            Repr::Mod { modulus: m, .. } => {
                assert_eq!(*m, modulus, "mixed prime moduli");
                self.clone()
            }
            Repr::Small(r) => Self::rational_residue(&promote(r), modulus),
            Repr::Big(r) => Self::rational_residue(r, modulus),
        }
    }

    fn rational_residue(r: &BigRational, modulus: u64) -> Self {
        let n = big_mod(r.numer(), modulus);
        let d = big_mod(r.denom(), modulus);
        assert!(d != 0, "denominator divisible by the field characteristic");
        let inv = mod_pow(d, modulus - 2, modulus);
        Scalar(Repr::Mod {
            value: ((n as u128 * inv as u128) % modulus as u128) as u64,
            modulus,
        })
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(r) => r.is_one(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    /// The prime modulus, or `None` for rationals.
    pub fn modulus(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod { modulus, .. } => Some(*modulus),
            _ => None,
        }
    }

    /// The rational value, or `None` for residues.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Small(r) => Some(promote(r)),
            Repr::Big(r) => Some(r.clone()),
            Repr::Mod { .. } => None,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(r) => Scalar(Repr::Small(r.recip())),
            Repr::Big(r) => Scalar(demote(r.recip())),
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    fn binary(
        &self,
        other: &Scalar,
        small: fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: fn(&BigRational, &BigRational) -> BigRational,
        modular: fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        use Repr::*;
        match (&self.0, &other.0) {
            (Small(a), Small(b)) => match small(a, b) {
                Some(r) => Scalar(Small(r)),
                None => Scalar(demote(big(&promote(a), &promote(b)))),
            },
            (Small(a), Big(b)) => Scalar(demote(big(&promote(a), b))),
            (Big(a), Small(b)) => Scalar(demote(big(a, &promote(b)))),
            (Big(a), Big(b)) => Scalar(demote(big(a, b))),
            (
                Mod {
                    value: a,
                    modulus: m,
                },
                Mod {
                    value: b,
                    modulus: n,
                },
            ) => {
                assert_eq!(m, n, "mixed prime moduli");
                Scalar(Mod {
                    value: modular(*a, *b, *m),
                    modulus: *m,
                })
            }
            (Mod { modulus, .. }, _) => {
                self.binary(&other.to_residue(*modulus), small, big, modular)
            }
            (_, Mod { modulus, .. }) => {
                self.to_residue(*modulus).binary(other, small, big, modular)
            }
        }
    }

    fn mod_add(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 + b as u128) % m as u128) as u64
    }
    fn mod_sub(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 + m as u128 - b as u128) % m as u128) as u64
    }
    fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 * b as u128) % m as u128) as u64
    }
    fn mod_div(a: u64, b: u64, m: u64) -> u64 {
        assert!(b != 0, "division by zero");
        Self::mod_mul(a, mod_pow(b, m - 2, m), m)
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        self.binary(o, |a, b| a.checked_add(b), |a, b| a + b, Self::mod_add)
    }
    fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.binary(o, |a, b| a.checked_sub(b), |a, b| a - b, Self::mod_sub)
    }
    fn mul_ref(&self, o: &Scalar) -> Scalar {
        self.binary(o, |a, b| a.checked_mul(b), |a, b| a * b, Self::mod_mul)
    }
    fn div_ref(&self, o: &Scalar) -> Scalar {
        assert!(!o.is_zero(), "division by zero");
        self.binary(o, |a, b| a.checked_div(b), |a, b| a / b, Self::mod_div)
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Small(r) => Scalar(Repr::Small(-*r)),
            Repr::Big(r) => Scalar(demote(-r.clone())),
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }

    /// Image of a rational in `Z/p`, or `None` for residues and for
    /// denominators divisible by `p`.
    pub(crate) fn reduce_mod(&self, p: u64) -> Option<u64> {
        let (n, d) = match &self.0 {
            Repr::Small(r) => {
                let m = p as i128;
                (
                    (*r.numer() as i128).rem_euclid(m) as u64,
                    (*r.denom() as i128).rem_euclid(m) as u64,
                )
            }
            Repr::Big(r) => (big_mod(r.numer(), p), big_mod(r.denom(), p)),
            Repr::Mod { .. } => return None,
        };
        if n == 0 || d == 1 {
            return Some(n);
        }
        (d != 0).then(|| ((n as u128 * mod_pow(d, p - 2, p) as u128) % p as u128) as u64)
    }

    /// Bit-size proxy used to keep pivots and random combinations small.
    pub fn height(&self) -> u64 {
        match &self.0 {
            Repr::Small(r) => {
                (r.numer().unsigned_abs().max(1).ilog2() + r.denom().unsigned_abs().ilog2()) as u64
            }
            Repr::Big(r) => r.numer().bits() + r.denom().bits(),
            Repr::Mod { .. } => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
            Repr::Mod { .. } => false,
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        use Repr::*;
        match (&self.0, &other.0) {
            (Small(a), Small(b)) => a == b,
            (Mod { modulus, .. }, _) => {
                let o = other.to_residue(*modulus);
                matches!((&self.0, &o.0), (Mod { value: a, .. }, Mod { value: b, .. }) if a == b)
            }
            (_, Mod { .. }) => other == self,
            _ => self.to_rational() == other.to_rational(),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    /// Only rationals are ordered.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => Some(a.cmp(&b)),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) => write!(f, "{}", r),
            Repr::Big(r) => write!(f, "{}", r),
            Repr::Mod { value, .. } => write!(f, "{}", value),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { value, modulus } => write!(f, "{} mod {}", value, modulus),
            _ => write!(f, "{}", self),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational number: {:?}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `n` or `n/d` with optional sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Scalar::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}
