//! Arithmetic in the prime field F_p.
//!
//! Elements are canonical representatives in `[0, p)` stored as `u32`.
//! All products fit in `u64`, so no modular tricks are needed at the
//! characteristics this crate targets (small primes).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field F_p. Construction verifies primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u32 {
        let p = self.p as i64;
        (((a % p) + p) % p) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; errors on zero.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::ZeroInverse(self.p));
        }
        Ok(self.pow(a % self.p, self.p as u64 - 2))
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(65537));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91));
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert_eq!(PrimeField::new(4).unwrap_err(), Error::NonPrimeCharacteristic(4));
    }

    #[test]
    fn inverse_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(2).unwrap(), 3);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(1).unwrap(), 1);
        assert_eq!(f7.inv(4).unwrap(), 2);
        assert_eq!(f7.inv(0).unwrap_err(), Error::ZeroInverse(7));
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.mul(4, 5), 6);
        assert_eq!(f.pow(3, 6), 1);
        assert_eq!(f.reduce(-1), 6);
    }
}
