//! Monomials as exponent vectors.

use crate::{Error, Result};

/// Hard cap on any single exponent; multiplications beyond it error out
/// instead of silently wrapping.
pub const EXPONENT_CAP: u32 = 1 << 16;

/// A monomial in n variables, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable x_i (0-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch(format!(
                "monomials over {} and {} variables",
                self.0.len(),
                other.0.len()
            )));
        }
        Ok(())
    }

    /// Componentwise <= test; errors on mismatched variable counts.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_nvars(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Componentwise max; errors on mismatched variable counts.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let s = a + b;
            if s > EXPONENT_CAP {
                return Err(Error::ExponentOverflow(EXPONENT_CAP));
            }
            out.push(s);
        }
        Ok(Monomial(out))
    }

    /// Exact quotient; caller must know `other` divides `self`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if b > a {
                return Err(Error::InvalidInput("monomial quotient is not integral".into()));
            }
            out.push(a - b);
        }
        Ok(Monomial(out))
    }

    pub fn gcd_is_one(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}
