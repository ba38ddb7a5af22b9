//! Integer coefficients for the Gröbner kernel.
//!
//! Most coefficients in desk-scale D-module computations fit in a machine
//! word, so `Int` keeps an `i64` fast path and promotes to `BigInt` only on
//! overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Int {
        Int::Small(0)
    }

    pub fn one() -> Int {
        Int::Small(1)
    }

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) if v != i64::MIN => Int::Small(v),
            _ => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => Int::Small(v.abs()),
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => Int::Small(-v),
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(*b) {
                if c != i64::MIN {
                    return Int::Small(c);
                }
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(*b) {
                if c != i64::MIN {
                    return Int::Small(c);
                }
            }
        }
        Int::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(*b) {
                if c != i64::MIN {
                    return Int::Small(c);
                }
            }
        }
        match (self, o) {
            (Int::Big(a), Int::Big(b)) => Int::from_big(a * b),
            (Int::Big(a), Int::Small(b)) | (Int::Small(b), Int::Big(a)) => Int::from_big(a * *b),
            (Int::Small(a), Int::Small(b)) => Int::from_big(BigInt::from(*a) * *b),
        }
    }

    /// Exact division; the caller guarantees `o` divides `self`.
    pub fn div_exact(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::Small(a / b),
            _ => Int::from_big(self.to_big() / o.to_big()),
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::Small(a.gcd(b)),
            _ => Int::from_big(self.to_big().gcd(&o.to_big())),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// Residue modulo a word-sized prime.
    pub fn mod_u64(&self, p: u64) -> u64 {
        match self {
            Int::Small(v) => (*v as i128).rem_euclid(p as i128) as u64,
            Int::Big(b) => {
                let r = b.mod_floor(&BigInt::from(p));
                r.to_u64().unwrap_or(0)
            }
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        if v == i64::MIN {
            Int::Big(BigInt::from(v))
        } else {
            Int::Small(v)
        }
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, o: &Int) -> bool {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl PartialOrd for Int {
    fn partial_cmp(&self, o: &Int) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Int {
    fn cmp(&self, o: &Int) -> Ordering {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{}", v),
            Int::Big(b) => write!(f, "{}", b),
        }
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, o: Int) -> Int {
        Int::add(&self, &o)
    }
}

impl One for Int {
    fn one() -> Int {
        Int::Small(1)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, o: Int) -> Int {
        Int::mul(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::from(i64::MAX);
        let b = a.add(&Int::one());
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(b.sub(&Int::one()), a);
        let c = a.mul(&a).div_exact(&a);
        assert_eq!(c, a);
    }

    #[test]
    fn gcd_mixed() {
        let big = Int::from(1i64 << 40).mul(&Int::from(1i64 << 40));
        assert_eq!(big.gcd(&Int::from(6)), Int::from(2));
        assert_eq!(Int::from(-4).gcd(&Int::from(6)), Int::from(2));
    }
}
