//! Exact coefficient rings.

use std::fmt;

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A ring element. Values are always kept normalized for their ring: integers
/// for `Z`, and residues in `0..n` for `Z/nZ`.
pub type Scalar = BigRational;

/// The coefficient rings supported by the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum Ring {
    Rationals,
    Integers,
    /// `Z/nZ` with `n ≥ 2`.
    IntegersMod(u64),
}

impl Ring {
    /// `Z/nZ`, rejecting `n < 2`.
    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::Syntax { offset: 0, message: format!("modulus must be at least 2, got {n}") });
        }
        Ok(Ring::IntegersMod(n))
    }

    /// Parses `Q`, `Z`, `Zn:<n>` or `Fp:<p>` (the latter requires `p` prime).
    pub fn parse(text: &str) -> Result<Ring> {
        let text = text.trim();
        let bad = |message: String| Error::Syntax { offset: 0, message };
        match text {
            "Q" => return Ok(Ring::Rationals),
            "Z" => return Ok(Ring::Integers),
            _ => {}
        }
        let (head, n) = text
            .split_once(':')
            .ok_or_else(|| bad(format!("unknown ring `{text}`, expected Q, Z, Zn:<n> or Fp:<p>")))?;
        let n: u64 = n.trim().parse().map_err(|_| Error::Syntax {
            offset: head.len() + 1,
            message: format!("bad modulus `{n}`"),
        })?;
        match head {
            "Zn" => Ring::integers_mod(n),
            "Fp" if is_prime(n) => Ok(Ring::IntegersMod(n)),
            "Fp" => Err(bad(format!("{n} is not prime"))),
            _ => Err(bad(format!("unknown ring `{text}`"))),
        }
    }

    /// Short name used in output: `Q`, `Z`, `Z/nZ`.
    pub fn name(&self) -> String {
        match self {
            Ring::Rationals => "Q".into(),
            Ring::Integers => "Z".into(),
            Ring::IntegersMod(n) => format!("Z/{n}Z"),
        }
    }

    /// The form accepted by [`Ring::parse`].
    pub fn to_literal(&self) -> String {
        match self {
            Ring::Rationals => "Q".into(),
            Ring::Integers => "Z".into(),
            Ring::IntegersMod(n) => format!("Zn:{n}"),
        }
    }

    pub fn is_field(&self) -> bool {
        match *self {
            Ring::Rationals => true,
            Ring::Integers => false,
            Ring::IntegersMod(n) => is_prime(n),
        }
    }

    /// No nontrivial idempotents.
    pub fn is_indecomposable(&self) -> bool {
        match *self {
            Ring::Rationals | Ring::Integers => true,
            Ring::IntegersMod(n) => is_prime_power(n),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, i: i64) -> Scalar {
        self.reduce_int(BigInt::from(i))
    }

    /// Maps a rational number into the ring. In `Z/nZ` a fraction `a/b` is
    /// accepted when `b` is invertible.
    pub fn element(&self, q: &BigRational) -> Result<Scalar> {
        match *self {
            Ring::Rationals => Ok(q.clone()),
            Ring::Integers if q.is_integer() => Ok(q.clone()),
            Ring::Integers => Err(Error::ScalarNotInRing(q.to_string())),
            Ring::IntegersMod(n) => {
                let n = BigInt::from(n);
                let den = q.denom().mod_floor(&n);
                let g = den.extended_gcd(&n);
                if !g.gcd.is_one() {
                    return Err(Error::ScalarNotInRing(q.to_string()));
                }
                let num = q.numer() * g.x;
                Ok(Scalar::from_integer(num.mod_floor(&n)))
            }
        }
    }

    fn reduce_int(&self, i: BigInt) -> Scalar {
        match *self {
            Ring::IntegersMod(n) => Scalar::from_integer(i.mod_floor(&BigInt::from(n))),
            _ => Scalar::from_integer(i),
        }
    }

    fn normalize(&self, x: Scalar) -> Scalar {
        match self {
            Ring::IntegersMod(_) => {
                debug_assert!(x.is_integer());
                self.reduce_int(x.to_integer())
            }
            _ => x,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.normalize(-a)
    }

    /// Renders a normalized scalar: `3`, `-1/2`.
    pub fn format(&self, a: &Scalar) -> String {
        format_scalar(a)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn format_scalar(a: &Scalar) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_factor(n) == n
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = smallest_factor(n);
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn smallest_factor(n: u64) -> u64 {
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn flags() {
        assert!(Ring::Rationals.is_field() && Ring::Rationals.is_indecomposable());
        assert!(!Ring::Integers.is_field() && Ring::Integers.is_indecomposable());
        assert!(Ring::IntegersMod(7).is_field());
        assert!(!Ring::IntegersMod(8).is_field() && Ring::IntegersMod(8).is_indecomposable());
        assert!(!Ring::IntegersMod(6).is_indecomposable());
    }

    #[test]
    fn parsing() {
        assert_eq!(Ring::parse("Q").unwrap(), Ring::Rationals);
        assert_eq!(Ring::parse("Zn:6").unwrap(), Ring::IntegersMod(6));
        assert_eq!(Ring::parse("Fp:2").unwrap(), Ring::IntegersMod(2));
        assert!(Ring::parse("Fp:4").is_err());
        assert!(Ring::parse("Zn:1").is_err());
        assert!(Ring::parse("R").is_err());
        for r in [Ring::Rationals, Ring::Integers, Ring::IntegersMod(12)] {
            assert_eq!(Ring::parse(&r.to_literal()).unwrap(), r);
        }
    }

    #[test]
    fn arithmetic() {
        let z5 = Ring::IntegersMod(5);
        assert_eq!(z5.from_int(-1), q(4, 1));
        assert_eq!(z5.add(&q(3, 1), &q(4, 1)), q(2, 1));
        assert_eq!(z5.element(&q(1, 2)).unwrap(), q(3, 1));
        assert!(Ring::IntegersMod(4).element(&q(1, 2)).is_err());
        assert!(Ring::Integers.element(&q(1, 2)).is_err());
        assert_eq!(Ring::Rationals.mul(&q(1, 2), &q(2, 3)), q(1, 3));
        assert_eq!(format_scalar(&q(-1, 2)), "-1/2");
    }
}
