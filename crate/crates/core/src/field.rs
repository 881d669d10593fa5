//! Exact scalar arithmetic over the two supported base fields: F_p for a
//! prime p below 2^31, and the rationals.
//!
//! A [`Field`] is a lightweight context object; a [`Scalar`] is a value that
//! only makes sense relative to one. Prime-field scalars are canonical
//! residues in 0..p, rationals are kept reduced with positive denominator
//! (num's `BigRational` maintains that invariant), so equality of scalars is
//! structural equality.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A base field: F_p with p prime and p < 2^31, or Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Prime { p: u64 },
    Rational,
}

/// An element of a [`Field`]. `Prime` values are canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime(u64),
    Rational(Box<BigRational>),
}

/// Deterministic Miller-Rabin with bases 2, 3, 5, 7: exact for all n below
/// 3_215_031_751, which covers the whole admissible range p < 2^31.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl Field {
    /// The field F_p. Rejects composites and moduli at or above 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime { p })
    }

    pub const fn rational() -> Field {
        Field::Rational
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime { .. } => Scalar::Prime(0),
            Field::Rational => Scalar::Rational(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime { p } => Scalar::Prime(1 % p),
            Field::Rational => Scalar::Rational(Box::new(BigRational::one())),
        }
    }

    /// Embeds a machine integer (reduces mod p, or injects into Q).
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime { p } => Scalar::Prime(n.rem_euclid(*p as i64) as u64),
            Field::Rational => Scalar::Rational(Box::new(BigRational::from_integer(n.into()))),
        }
    }

    /// True when `s` is a well-formed element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Prime { p }, Scalar::Prime(v)) => v < p,
            (Field::Rational, Scalar::Rational(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime { p }, Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime((x + y) % p)
            }
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(Box::new(&**x + &**y))
            }
            _ => panic!("scalar/field mismatch in add"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime { p }, Scalar::Prime(x)) => Scalar::Prime((p - x) % p),
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(Box::new(-&**x)),
            _ => panic!("scalar/field mismatch in neg"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime { p }, Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(mul_mod(*x, *y, *p))
            }
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(Box::new(&**x * &**y))
            }
            _ => panic!("scalar/field mismatch in mul"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (Field::Prime { p }, Scalar::Prime(x)) => {
                Some(Scalar::Prime(pow_mod(*x, p - 2, *p)))
            }
            (Field::Rational, Scalar::Rational(x)) => {
                Some(Scalar::Rational(Box::new(x.recip())))
            }
            _ => panic!("scalar/field mismatch in inv"),
        }
    }

    /// a + c*b, the fused step used throughout row reduction.
    pub fn add_mul(&self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.mul(c, b))
    }

    /// Parses the canonical text form: a residue for F_p, `n` or `n/d` for Q.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |msg: &str| Error::InvalidFile {
            file: String::new(),
            message: format!("scalar {text:?}: {msg}"),
        };
        match self {
            Field::Prime { p } => {
                let v: u64 = text.trim().parse().map_err(|_| bad("not a residue"))?;
                if v >= *p {
                    return Err(Error::NotACanonicalResidue {
                        value: v,
                        modulus: *p,
                    });
                }
                Ok(Scalar::Prime(v))
            }
            Field::Rational => {
                let t = text.trim();
                let (num, den) = match t.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (t, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Scalar::Rational(Box::new(BigRational::new(n, d))))
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime(v) => *v == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime(v) => *v == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    /// The residue of a prime-field scalar. Panics on rationals.
    pub fn residue(&self) -> u64 {
        match self {
            Scalar::Prime(v) => *v,
            Scalar::Rational(_) => panic!("residue() on a rational scalar"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime(v) => write!(f, "{v}"),
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

/// Sign-aware ordering key used only for deterministic display of rationals.
pub fn scalar_sort_key(s: &Scalar) -> (bool, String) {
    match s {
        Scalar::Prime(v) => (false, format!("{v:020}")),
        Scalar::Rational(r) => (r.is_negative(), r.to_string()),
    }
}
