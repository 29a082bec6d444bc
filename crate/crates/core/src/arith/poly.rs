use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactRational, TruncatedSeries};

/// A polynomial in `q` with exact coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<ExactRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| ExactRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial {
            coeffs: vec![ExactRational::one()],
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|d| self.coeff(d) - other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn coefficient_sum(&self) -> ExactRational {
        self.coeffs.iter().sum()
    }

    pub fn to_series(&self, cap: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.clone(), cap)
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

pub(super) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[ExactRational]) -> fmt::Result {
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (sign, mag) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let show_mag = d == 0 || !mag.is_one();
        match (show_mag, d) {
            (_, 0) => write!(f, "{mag}")?,
            (true, 1) => write!(f, "{mag}q")?,
            (false, 1) => write!(f, "q")?,
            (true, _) => write!(f, "{mag}q^{d}")?,
            (false, _) => write!(f, "q^{d}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = ExactPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ExactPolynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn product_and_display() {
        let p = ExactPolynomial::from_ints(&[1, 1]).mul(&ExactPolynomial::from_ints(&[1, -1]));
        assert_eq!(p, ExactPolynomial::from_ints(&[1, 0, -1]));
        assert_eq!(p.to_string(), "1 - q^2");
        assert_eq!(ExactPolynomial::zero().to_string(), "0");
        assert_eq!(ExactPolynomial::from_ints(&[0, 3, 1]).to_string(), "3q + q^2");
    }
}
