//! Prime field arithmetic.
//!
//! All coefficients live in GF(p) for a prime p < 2^31. Elements are stored
//! as canonical representatives in [0, p) inside plain `u64`s; a `PrimeField`
//! value carries the modulus and performs the arithmetic.

use crate::{Error, Result};

/// Default characteristic used when none is configured.
pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

/// A prime field GF(p), p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Canonical representative of an arbitrary signed integer.
    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    /// Panics on zero input; callers must keep zero out of denominators.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "{} is not invertible mod {}", a, self.p);
        t0.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_oversized() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32001).is_err()); // 3 * 10667
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(DEFAULT_CHARACTERISTIC).is_ok());
    }

    #[test]
    fn field_axioms_small() {
        let f = PrimeField::new(7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
                assert_eq!(f.add(f.sub(a, b), b), a);
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn from_int_wraps_negatives() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.from_int(-1), 32002);
        assert_eq!(f.from_int(32003), 0);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = PrimeField::new(101).unwrap();
        let mut acc = 1;
        for e in 0..20u64 {
            assert_eq!(f.pow(3, e), acc);
            acc = f.mul(acc, 3);
        }
    }
}
