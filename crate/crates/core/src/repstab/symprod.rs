use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{ExactPolynomial, ExactRational, TruncatedSeries};
use crate::error::{Error, Result};

fn binomial(n: &BigUint, k: usize) -> BigUint {
    if *n < BigUint::from(k) {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * (n - BigUint::from(i)) / BigUint::from(i + 1)
    })
}

// Coefficient of t^j in (1 - t)^{-a}.
fn multichoose(a: &BigUint, j: usize) -> BigUint {
    if j == 0 {
        BigUint::one()
    } else {
        binomial(&(a + BigUint::from(j - 1)), j)
    }
}

/// Rational Poincaré series of `Sym^n X` from the Poincaré polynomial of a
/// connected space `X`, truncated at `cap`.
///
/// Takes the `t^n` coefficient of
/// `Π_{d even} (1 - t q^d)^{-a_d} · Π_{d odd} (1 + t q^d)^{a_d} · (1 - t)^{-1}`.
pub fn symmetric_product_series(p_x: &ExactPolynomial, n: usize, cap: usize) -> Result<TruncatedSeries> {
    let mut betti = Vec::new();
    for (d, c) in p_x.coefficients().iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::InvalidInput(format!(
                "Betti number b_{d} = {c} is not a non-negative integer"
            )));
        }
        betti.push(c.to_integer().to_biguint().expect("non-negative"));
    }
    if betti.first() != Some(&BigUint::one()) {
        return Err(Error::InvalidInput(
            "the space must be connected (constant term 1)".into(),
        ));
    }

    // by_t[j] is the q-series coefficient of t^j
    let mut by_t: Vec<TruncatedSeries> = (0..=n).map(|_| TruncatedSeries::zero(cap)).collect();
    by_t[0] = TruncatedSeries::one(cap);
    for (d, a) in betti.iter().enumerate().skip(1) {
        if a.is_zero() || d > cap {
            continue;
        }
        let factor: Vec<TruncatedSeries> = (0..=n)
            .map(|j| {
                let c = if d % 2 == 0 {
                    multichoose(a, j)
                } else {
                    binomial(a, j)
                };
                let mut coeffs = vec![ExactRational::zero(); cap + 1];
                if d * j <= cap {
                    coeffs[d * j] = ExactRational::from_integer(BigInt::from(c));
                }
                TruncatedSeries::new(coeffs, cap)
            })
            .collect();
        let mut next: Vec<TruncatedSeries> = (0..=n).map(|_| TruncatedSeries::zero(cap)).collect();
        for (i, x) in by_t.iter().enumerate() {
            for (j, y) in factor.iter().enumerate().take(n + 1 - i) {
                next[i + j] = next[i + j].add(&x.multiply(y)?)?;
            }
        }
        by_t = next;
    }
    // (1 - t)^{-1}: sum of the coefficients of t^0..t^n
    by_t.iter()
        .try_fold(TruncatedSeries::zero(cap), |acc, s| acc.add(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{centralizer_order, enumerate_partitions, factorial};

    fn p(coeffs: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_ints(coeffs)
    }

    // Average over S_n of the graded trace on (H*X)^{⊗n}, with Koszul signs.
    fn molien_oracle(p_x: &[i64], n: usize, cap: usize) -> TruncatedSeries {
        let mut total = TruncatedSeries::zero(cap);
        for alpha in enumerate_partitions(n) {
            let mut term = TruncatedSeries::one(cap);
            for &len in alpha.parts() {
                let mut c = TruncatedSeries::zero(cap);
                for (d, &a) in p_x.iter().enumerate() {
                    let sign = if d * (len - 1) % 2 == 1 { -a } else { a };
                    c = c.add(&TruncatedSeries::from_terms(&[(d * len, sign)], cap)).unwrap();
                }
                term = term.multiply(&c).unwrap();
            }
            let weight = ExactRational::new(
                BigInt::from(factorial(n) / centralizer_order(&alpha)),
                BigInt::from(factorial(n)),
            );
            total = total.add(&term.scale(&weight)).unwrap();
        }
        total
    }

    #[test]
    fn examples() {
        let circle = symmetric_product_series(&p(&[1, 1]), 3, 8).unwrap();
        assert_eq!(circle, TruncatedSeries::from_ints(&[1, 1], 8));
        let sphere = symmetric_product_series(&p(&[1, 0, 1]), 2, 8).unwrap();
        assert_eq!(sphere, TruncatedSeries::from_ints(&[1, 0, 1, 0, 1], 8));
        let x = p(&[1, 3, 3, 1]);
        assert_eq!(symmetric_product_series(&x, 1, 6).unwrap(), x.to_series(6));
        assert_eq!(
            symmetric_product_series(&x, 0, 6).unwrap(),
            TruncatedSeries::one(6)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(symmetric_product_series(&p(&[2, 1]), 2, 4).is_err());
        assert!(symmetric_product_series(&p(&[1, -1]), 2, 4).is_err());
        assert!(symmetric_product_series(&ExactPolynomial::zero(), 2, 4).is_err());
    }

    #[test]
    fn agrees_with_molien_oracle() {
        for x in [vec![1, 1], vec![1, 0, 1], vec![1, 3, 3, 1], vec![1, 2, 1], vec![1, 0, 2, 1]] {
            for n in 0..=5 {
                assert_eq!(
                    symmetric_product_series(&p(&x), n, 10).unwrap(),
                    molien_oracle(&x, n, 10),
                    "{x:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn stabilises_for_n_at_least_k() {
        for x in [vec![1, 1], vec![1, 0, 1], vec![1, 3, 3, 1]] {
            let series: Vec<_> = (0..=8)
                .map(|n| symmetric_product_series(&p(&x), n, 6).unwrap())
                .collect();
            for k in 0..=6 {
                for n in k..8 {
                    assert_eq!(series[n].coeff(k), series[n + 1].coeff(k), "{x:?} k={k} n={n}");
                }
            }
        }
    }
}
