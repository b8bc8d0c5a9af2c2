//! Two finite identities behind the collapse of the hook-shape sums.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::partition::factorial;
use crate::series::TruncatedSeries;

/// `Σ_{s=0}^m (-1)^s s^p / (s! (m-s)!)`, which is `0` for `p < m` and
/// `(-1)^m` for `p = m`.
pub fn lemma_b1(m: usize, p: usize) -> Result<Rational> {
    if p > m {
        return Err(Error::Precondition(format!("lemma_b1 needs p <= m, got p={p}, m={m}")));
    }
    let mut total = Rational::zero();
    for s in 0..=m {
        let num = Rational::from(s).pow(p as i32)?;
        let den = Rational::from_integer(factorial(s) * factorial(m - s));
        let term = num.checked_div(&den)?;
        if s % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// `P_n = Σ_{s=0}^n (-1)^s / (s! (n-s)!) · ∏_{k=-(n-s)}^{s} f(kx)` to the
/// given order. Its coefficients vanish below `x^n` and
/// `[x^n] P_n = (-1)^n [x^n] f^(n+1)`.
pub fn p_n_series(f: &TruncatedSeries, n: usize, order: usize) -> Result<TruncatedSeries> {
    if order < n {
        return Err(Error::Precondition(format!("p_n_series needs order >= n, got order={order}, n={n}")));
    }
    if !f.constant().is_one() {
        return Err(Error::Precondition(format!("class series needs f(0) = 1, got {}", f.constant())));
    }
    let f = f.truncate(order)?;
    let mut total = TruncatedSeries::zero_like(&Rational::zero(), order);
    for s in 0..=n {
        let mut prod = TruncatedSeries::one(order);
        for k in -((n - s) as i64)..=s as i64 {
            prod = prod.mul(&f.scale_arg(&Rational::from(k)))?;
        }
        let weight = Rational::from_integer(factorial(s) * factorial(n - s)).recip()?;
        let weight = if s % 2 == 0 { weight } else { -weight };
        total = total.add(&prod.scale(&weight))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::chern;

    #[test]
    fn small_cases() {
        assert_eq!(lemma_b1(2, 0).unwrap(), Rational::zero());
        assert_eq!(lemma_b1(2, 2).unwrap(), Rational::one());
        assert_eq!(lemma_b1(25, 25).unwrap(), Rational::from(-1));
        assert!(lemma_b1(2, 3).is_err());
        assert_eq!(lemma_b1(0, 0).unwrap(), Rational::one());
    }

    #[test]
    fn p_series_low_orders() {
        let f = TruncatedSeries::from_ints(&[1, 3, -2, 5], 4).unwrap();
        assert_eq!(p_n_series(&f, 0, 4).unwrap(), TruncatedSeries::one(4));
        // P_1 = f(-x) - f(x)
        let p1 = p_n_series(&f, 1, 4).unwrap();
        assert_eq!(p1, f.negate_arg().sub(&f).unwrap());
        assert_eq!(p1.coeff(1), &Rational::from(-6));
        let p2 = p_n_series(&chern(4).unwrap(), 2, 4).unwrap();
        assert!(p2.coeff(0).is_zero() && p2.coeff(1).is_zero());
        assert_eq!(p2.coeff(2), &Rational::from(3));
        assert!(p_n_series(&f, 5, 4).is_err());
    }
}
