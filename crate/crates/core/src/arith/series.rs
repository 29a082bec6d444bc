use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactPolynomial, ExactRational};
use crate::error::{Error, Result};

/// A power series in `q` with exact coefficients, truncated at degree `cap`.
///
/// Index `d` of the coefficient vector holds the coefficient of `q^d`; the
/// vector always has length `cap + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Builds a series from leading coefficients, zero-padding or truncating to `cap`.
    pub fn new(mut coeffs: Vec<ExactRational>, cap: usize) -> Self {
        coeffs.resize(cap + 1, ExactRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], cap: usize) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| ExactRational::from_integer(BigInt::from(c)))
            .collect();
        Self::new(coeffs, cap)
    }

    /// Builds `sum c * q^d` from `(d, c)` pairs; terms above `cap` are dropped.
    pub fn from_terms(terms: &[(usize, i64)], cap: usize) -> Self {
        let mut s = Self::zero(cap);
        for &(d, c) in terms {
            if d <= cap {
                s.coeffs[d] += ExactRational::from_integer(BigInt::from(c));
            }
        }
        s
    }

    pub fn zero(cap: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactRational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(ExactRational::one(), cap)
    }

    pub fn constant(c: ExactRational, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = c;
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^degree`, or zero above the cap.
    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch {
                left: self.cap(),
                right: other.cap(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated to the shared cap.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let cap = self.cap();
        let mut out = vec![ExactRational::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=cap - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse up to the cap; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let cap = self.cap();
        let inv0 = a0.recip();
        let mut out: Vec<ExactRational> = Vec::with_capacity(cap + 1);
        out.push(inv0.clone());
        for d in 1..=cap {
            let mut acc = ExactRational::zero();
            for i in 1..=d {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[d - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self * other^{-1}`.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        self.multiply(&other.invert()?)
    }

    /// n-fold product; `n = 0` gives the constant series 1.
    pub fn pow(&self, n: usize) -> Self {
        let mut result = Self::one(self.cap());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base).expect("same cap");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same cap");
            }
        }
        result
    }

    /// Re-truncates (or zero-extends) to a new cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        Self::new(self.coeffs.clone(), cap)
    }

    /// Certifies that every coefficient above `degree_bound` (up to the cap)
    /// vanishes and returns the polynomial formed by the rest.
    pub fn to_polynomial(&self, degree_bound: usize) -> Result<ExactPolynomial> {
        if degree_bound > self.cap() {
            return Err(Error::BoundExceedsCap {
                bound: degree_bound,
                cap: self.cap(),
            });
        }
        if let Some(d) = (degree_bound + 1..=self.cap()).find(|&d| !self.coeffs[d].is_zero()) {
            return Err(Error::NotAPolynomial {
                bound: degree_bound,
                degree: d,
            });
        }
        Ok(ExactPolynomial::new(self.coeffs[..=degree_bound].to_vec()))
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self, self.cap() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_terms(f, &self.coeffs)
    }
}
