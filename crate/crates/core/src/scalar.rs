//! Exact scalar arithmetic over the supported coefficient fields.
//!
//! Everything downstream (row reduction, induced power matrices, Čech
//! differentials) is parameterised at *runtime* by a [`Field`] descriptor:
//! the rationals or a prime field 𝔽_p. A single concrete scalar enum [`K`]
//! keeps the engine free of type parameters while staying exact — rationals
//! are arbitrary precision, 𝔽_p elements are reduced residues.
//!
//! Mixing scalars from different fields is a bug in the caller and panics;
//! all construction goes through a [`Field`] so this cannot happen from the
//! public API.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};

/// Coefficient field descriptor: ℚ or 𝔽_p for a prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements; `p` must be prime (not checked
    /// beyond trivial cases — the CLI only offers 2, 3, 5).
    Fp(u64),
}

impl Field {
    /// The additive identity of this field.
    pub fn zero(self) -> K {
        match self {
            Field::Q => K::Q(BigRational::zero()),
            Field::Fp(p) => K::Fp { p, v: 0 },
        }
    }

    /// The multiplicative identity of this field.
    pub fn one(self) -> K {
        self.scalar_i64(1)
    }

    /// Embed a machine integer.
    pub fn scalar_i64(self, v: i64) -> K {
        match self {
            Field::Q => K::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                K::Fp { p, v: r }
            }
        }
    }

    /// Embed an arbitrary-precision integer.
    pub fn scalar_bigint(self, v: &BigInt) -> K {
        match self {
            Field::Q => K::Q(BigRational::from_integer(v.clone())),
            Field::Fp(p) => {
                let m = v.mod_floor_u64(p);
                K::Fp { p, v: m }
            }
        }
    }

    /// Parse a scalar from its decimal form, `a` or `a/b`.
    pub fn scalar_from_str(self, s: &str) -> Result<K> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>()
                .map_err(|_| CoreError::Input(format!("not an integer: {t:?}")))
        };
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(CoreError::Input(format!("zero denominator in {s:?}")));
            }
            match self {
                Field::Q => Ok(K::Q(BigRational::new(num, den))),
                Field::Fp(_) => {
                    let n = self.scalar_bigint(&num);
                    let d = self.scalar_bigint(&den);
                    let inv = d.inv().ok_or_else(|| {
                        CoreError::Input(format!("denominator of {s:?} vanishes in {self}"))
                    })?;
                    Ok(&n * &inv)
                }
            }
        } else {
            Ok(self.scalar_bigint(&parse_int(s)?))
        }
    }

    /// The characteristic: 0 for ℚ, p for 𝔽_p.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => p,
        }
    }

    /// Parse a CLI label: `Q`, `F2`, `F3`, `F5`, or `F<p>`.
    pub fn parse_label(s: &str) -> Result<Field> {
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Q);
        }
        if let Some(rest) = s.strip_prefix(['F', 'f']) {
            let p: u64 = rest
                .parse()
                .map_err(|_| CoreError::Input(format!("unknown field label {s:?}")))?;
            if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                return Err(CoreError::Input(format!("{p} is not a prime")));
            }
            return Ok(Field::Fp(p));
        }
        Err(CoreError::Input(format!("unknown field label {s:?}")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        // `mod_floor` of a positive modulus is in [0, p).
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

/// An exact scalar of one of the supported fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum K {
    /// A rational number.
    Q(BigRational),
    /// A residue `v` in 𝔽_p, kept reduced: `v < p`.
    Fp {
        /// The prime modulus.
        p: u64,
        /// The reduced residue.
        v: u64,
    },
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl K {
    /// The field this scalar belongs to.
    pub fn field(&self) -> Field {
        match self {
            K::Q(_) => Field::Q,
            K::Fp { p, .. } => Field::Fp(*p),
        }
    }

    /// Is this the additive identity?
    pub fn is_zero(&self) -> bool {
        match self {
            K::Q(r) => r.is_zero(),
            K::Fp { v, .. } => *v == 0,
        }
    }

    /// Is this the multiplicative identity?
    pub fn is_one(&self) -> bool {
        match self {
            K::Q(r) => r.is_one(),
            K::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<K> {
        match self {
            K::Q(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(K::Q(r.recip()))
                }
            }
            K::Fp { p, v } => {
                if *v == 0 {
                    None
                } else {
                    Some(K::Fp {
                        p: *p,
                        v: powmod(*v, p - 2, *p),
                    })
                }
            }
        }
    }

    /// `self / other`; panics on division by zero (caller checks).
    pub fn div(&self, other: &K) -> K {
        let inv = other
            .inv()
            .unwrap_or_else(|| panic!("internal invariant: division by zero"));
        self * &inv
    }

    fn binop(&self, other: &K, f: impl FnOnce(&BigRational, &BigRational) -> BigRational, g: impl FnOnce(u64, u64, u64) -> u64) -> K {
        match (self, other) {
            (K::Q(a), K::Q(b)) => K::Q(f(a, b)),
            (K::Fp { p, v: a }, K::Fp { p: q, v: b }) if p == q => K::Fp { p: *p, v: g(*a, *b, *p) },
            _ => panic!(
                "internal invariant: mixed-field arithmetic ({} vs {})",
                self.field(),
                other.field()
            ),
        }
    }
}

impl Add for &K {
    type Output = K;
    fn add(self, rhs: &K) -> K {
        self.binop(rhs, |a, b| a + b, |a, b, p| {
            let s = a + b;
            if s >= p { s - p } else { s }
        })
    }
}

impl Sub for &K {
    type Output = K;
    fn sub(self, rhs: &K) -> K {
        self.binop(rhs, |a, b| a - b, |a, b, p| {
            if a >= b { a - b } else { a + p - b }
        })
    }
}

impl Mul for &K {
    type Output = K;
    fn mul(self, rhs: &K) -> K {
        self.binop(rhs, |a, b| a * b, mulmod)
    }
}

impl Neg for &K {
    type Output = K;
    fn neg(self) -> K {
        match self {
            K::Q(r) => K::Q(-r),
            K::Fp { p, v } => K::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            K::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl K {
    /// Absolute-value-ish size used only for pivot selection heuristics over ℚ
    /// (number of digits); 𝔽_p scalars are all size 1.
    pub fn size_hint(&self) -> usize {
        match self {
            K::Q(r) => r.numer().abs().to_string().len() + r.denom().to_string().len(),
            K::Fp { .. } => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip_and_arithmetic() {
        let f = Field::Q;
        let a = f.scalar_from_str("3/2").unwrap();
        let b = f.scalar_from_str("-1/3").unwrap();
        let s = &a + &b;
        assert_eq!(s, f.scalar_from_str("7/6").unwrap());
        assert_eq!(&a * &b, f.scalar_from_str("-1/2").unwrap());
        assert!((&a - &a).is_zero());
        assert_eq!(a.inv().unwrap(), f.scalar_from_str("2/3").unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Fp(5);
        let a = f.scalar_i64(7); // = 2
        let b = f.scalar_i64(-1); // = 4
        assert_eq!(&a + &b, f.scalar_i64(1));
        assert_eq!(&a * &b, f.scalar_i64(3));
        assert_eq!(a.inv().unwrap(), f.scalar_i64(3)); // 2·3 = 6 = 1
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn field_labels() {
        assert_eq!(Field::parse_label("Q").unwrap(), Field::Q);
        assert_eq!(Field::parse_label("F3").unwrap(), Field::Fp(3));
        assert!(Field::parse_label("F4").is_err());
        assert!(Field::parse_label("F9").is_err());
        assert!(Field::parse_label("F25").is_err());
        assert_eq!(Field::parse_label("F101").unwrap(), Field::Fp(101));
        assert!(Field::parse_label("R").is_err());
    }

    #[test]
    fn fraction_over_prime_field() {
        let f = Field::Fp(3);
        // 1/2 = 2 in F_3.
        assert_eq!(f.scalar_from_str("1/2").unwrap(), f.scalar_i64(2));
        // 1/3 has a vanishing denominator in F_3.
        assert!(f.scalar_from_str("1/3").is_err());
    }
}
