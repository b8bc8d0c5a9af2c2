//! Top-degree coefficients by direct summation over all partitions of `n`.
//!
//! These evaluate the torus-localization sums literally (every λ ⊢ n, the
//! full Murnaghan–Nakayama character) and are independent of the Lagrange
//! inversion route in [`super::classes`].

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::partition::{self, chi_mn, Partition};
use crate::series::TruncatedSeries;

/// Coefficient of `q_n(1)|0⟩` in the degree `n - 1` part of the class `f`
/// of the tangent bundle on `Hilb^n(C^2)`:
///
/// `Σ_{λ ⊢ n} 1/h(λ) · [x^(n-1)] ∏_{w ∈ λ} f(h(w)x) f(-h(w)x) · χ^λ_(n) / z_(n)`.
pub fn oracle_top_tangent(f: &TruncatedSeries, n: usize) -> Result<Rational> {
    top_sum(f, n, |lambda, f| {
        let mut prod = TruncatedSeries::one(f.order());
        for h in lambda.hooks() {
            let scaled = f.scale_arg(&Rational::from(h));
            prod = prod.mul(&scaled)?.mul(&scaled.negate_arg())?;
        }
        Ok(prod)
    })
}

/// Coefficient of `q_n(1)|0⟩` in the degree `n - 1` part of the class `f`
/// of the tautological bundle `O^[n]`. At the fixed point λ the Chern roots
/// of `O^[n]` are `(row - col)·x` over the cells of λ:
///
/// `Σ_{λ ⊢ n} 1/h(λ) · [x^(n-1)] ∏_{w ∈ λ} f(e(w)x) · χ^λ_(n) / z_(n)`.
pub fn oracle_top_taut(f: &TruncatedSeries, n: usize) -> Result<Rational> {
    top_sum(f, n, |lambda, f| {
        let mut prod = TruncatedSeries::one(f.order());
        for e in lambda.cell_weights() {
            prod = prod.mul(&f.scale_arg(&Rational::from(e)))?;
        }
        Ok(prod)
    })
}

fn top_sum(
    f: &TruncatedSeries,
    n: usize,
    product: impl Fn(&Partition, &TruncatedSeries) -> Result<TruncatedSeries> + Sync,
) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Precondition("top-degree oracle needs n >= 1".into()));
    }
    if !f.constant().is_one() {
        return Err(Error::Precondition(format!("class series needs f(0) = 1, got {}", f.constant())));
    }
    let f = f.truncate(n - 1)?;
    let cycle = Partition::row(n);
    let terms: Vec<Rational> = partition::enumerate(n)
        .par_iter()
        .map(|lambda| -> Result<Rational> {
            let chi = chi_mn(lambda, &cycle)?;
            if chi == 0 {
                return Ok(Rational::zero());
            }
            let top = product(lambda, &f)?.coeff(n - 1).clone();
            let denom = Rational::from_integer(lambda.hook_product());
            (top * Rational::from(chi)).checked_div(&denom)
        })
        .collect::<Result<_>>()?;
    // summed in enumeration order
    let total: Rational = terms.into_iter().sum();
    total.checked_div(&Rational::from_integer(cycle.z()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{chern, cprime_pow, tangent_g, taut_g};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn weight_one_is_one() {
        let f = TruncatedSeries::from_ints(&[1, 3, -2], 2).unwrap();
        assert_eq!(oracle_top_tangent(&f, 1).unwrap(), q("1"));
        assert_eq!(oracle_top_taut(&f, 1).unwrap(), q("1"));
    }

    #[test]
    fn chern_values() {
        let f = chern(5).unwrap();
        assert_eq!(oracle_top_tangent(&f, 2).unwrap(), q("0"));
        assert_eq!(oracle_top_tangent(&f, 3).unwrap(), q("-1/3"));
        assert_eq!(oracle_top_taut(&f, 2).unwrap(), q("-1/2"));
        let f2 = cprime_pow(&q("2"), 5).unwrap();
        assert_eq!(oracle_top_taut(&f2, 3).unwrap(), q("5/3"));
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(oracle_top_tangent(&chern(3).unwrap(), 0).is_err());
        assert!(oracle_top_taut(&chern(3).unwrap(), 0).is_err());
    }

    #[test]
    fn agrees_with_lagrange_route() {
        let f = TruncatedSeries::from_rationals(&[q("1"), q("2/3"), q("-1"), q("1/2"), q("3"), q("-5/2"), q("1/7")], 8).unwrap();
        let gt = tangent_g(&f, 8).unwrap();
        let ga = taut_g(&f, 8).unwrap();
        for n in 1..=8 {
            assert_eq!(&oracle_top_tangent(&f, n).unwrap(), gt.coeff(n), "tangent n = {n}");
            assert_eq!(&oracle_top_taut(&f, n).unwrap(), ga.coeff(n), "taut n = {n}");
        }
    }
}
