//! The Fock-space model of `⊕_n H*(Hilb^n(C^2))`.
//!
//! A [`FockElement`] is a finite linear combination of monomials
//! `q_λ|0⟩ = q_{λ_1}(1) ⋯ q_{λ_k}(1)|0⟩`, truncated at a weight bound `N`.
//! The weight-`n` part lives in `H*(Hilb^n(C^2))` and `q_λ|0⟩` has algebraic
//! (half cohomological) degree `‖λ‖ - |λ|`.
//!
//! [`FockElement::mul`] is the product of the symmetric algebra in the
//! `q_k`, not the cup product; the cup product lives in
//! [`crate::hilbert::cup`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{Coeff, Rational};
use crate::partition::{self, factorial, Partition};
use crate::series::TruncatedSeries;

#[derive(Clone, PartialEq, Debug)]
pub struct FockElement<C = Rational> {
    weight_bound: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> FockElement<C> {
    pub fn zero(weight_bound: usize) -> Self {
        FockElement { weight_bound, terms: BTreeMap::new() }
    }

    /// `c * q_λ|0⟩`, or zero when `‖λ‖` exceeds the bound.
    pub fn monomial(weight_bound: usize, lambda: Partition, c: C) -> Self {
        let mut e = Self::zero(weight_bound);
        e.insert(lambda, c);
        e
    }

    /// Collects terms, summing repeats and dropping overweight partitions.
    pub fn from_terms(weight_bound: usize, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut e = Self::zero(weight_bound);
        for (lambda, c) in terms {
            e.insert(lambda, c);
        }
        e
    }

    fn insert(&mut self, lambda: Partition, c: C) {
        if lambda.weight() > self.weight_bound || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.is_zero() {
                    self.terms.remove(&lambda);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    /// Terms sorted by weight, then reverse-lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Option<&C> {
        self.terms.get(lambda)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.weight_bound != other.weight_bound {
            return Err(Error::BoundMismatch(self.weight_bound, other.weight_bound));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.insert(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::negated)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scaled(r))
    }

    fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.weight_bound, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Symmetric-algebra product: monomials multiply by multiset union of
    /// partitions; anything above the weight bound is dropped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.weight_bound);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.weight() + b.weight() > self.weight_bound {
                    continue;
                }
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.insert(Partition::from_unsorted(parts), ca.times(cb));
            }
        }
        Ok(out)
    }

    /// `exp(Σ_k g_k q_k(1))|0⟩` truncated at weight `weight_bound`:
    /// the coefficient of `q_λ` is `∏_i g_{λ_i} / ∏_j m_j(λ)!`.
    pub fn exp_linear(g: &TruncatedSeries<C>, weight_bound: usize) -> Result<Self> {
        if !g.constant().is_zero() {
            return Err(Error::Precondition("exp_linear needs g_0 = 0".into()));
        }
        if g.order() < weight_bound {
            return Err(Error::Precondition(format!(
                "exp_linear to weight {weight_bound} needs g of order >= {weight_bound}, got {}",
                g.order()
            )));
        }
        let mut out = Self::zero(weight_bound);
        for lambda in partition::enumerate_up_to(weight_bound) {
            if lambda.parts().iter().any(|&k| g.coeff(k).is_zero()) {
                continue;
            }
            let mut c = g.constant().one_like();
            for &k in lambda.parts() {
                c = c.times(g.coeff(k));
            }
            let sym: u128 = lambda.multiplicities().iter().map(|&m| factorial(m)).product();
            if sym != 1 {
                c = c.scaled(&Rational::from_integer(sym).recip()?);
            }
            out.insert(lambda, c);
        }
        Ok(out)
    }

    /// The part of weight exactly `n`, i.e. the class on `Hilb^n`.
    pub fn component(&self, n: usize) -> Result<Self> {
        if n > self.weight_bound {
            return Err(Error::Precondition(format!(
                "weight {n} exceeds the bound {}",
                self.weight_bound
            )));
        }
        Ok(self.filter(|l| l.weight() == n))
    }

    /// The part of algebraic degree `d` (`‖λ‖ - |λ| = d`).
    pub fn degree_component(&self, d: usize) -> Self {
        self.filter(|l| l.degree() == d)
    }

    fn filter(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        FockElement {
            weight_bound: self.weight_bound,
            terms: self.terms.iter().filter(|(l, _)| keep(l)).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Same terms under a new bound; errors when a term would not fit.
    pub fn with_bound(&self, weight_bound: usize) -> Result<Self> {
        if let Some(l) = self.terms.keys().find(|l| l.weight() > weight_bound) {
            return Err(Error::Precondition(format!("{l} does not fit weight bound {weight_bound}")));
        }
        Ok(FockElement { weight_bound, terms: self.terms.clone() })
    }

    /// Largest weight carrying a nonzero term.
    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn map_into<D: Coeff>(&self, f: impl Fn(&C) -> D) -> FockElement<D> {
        FockElement::from_terms(self.weight_bound, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }
}

impl FockElement<Rational> {
    /// `|0⟩`.
    pub fn vacuum(weight_bound: usize) -> Self {
        Self::monomial(weight_bound, Partition::empty(), Rational::one())
    }

    /// `|1⟩ = exp(q_1(1))|0⟩`, the sum of the units of all `H*(Hilb^n)`.
    pub fn unit_all(weight_bound: usize) -> Self {
        let g = TruncatedSeries::x(weight_bound.max(1));
        Self::exp_linear(&g, weight_bound).expect("x has zero constant term")
    }

    /// The unit of `H*(Hilb^n)`: `q_1^n|0⟩ / n!`.
    pub fn unit(n: usize) -> Self {
        Self::monomial(n, Partition::column(n), Rational::from_integer(factorial(n)).recip().expect("n! > 0"))
    }

    /// Coefficients with respect to the power-sum normalization
    /// `p_m = m q_m(1)`, i.e. `q_λ = p_λ / ∏ λ_i`.
    pub fn to_power_sum_basis(&self) -> Self {
        Self::from_terms(
            self.weight_bound,
            self.terms.iter().map(|(l, c)| {
                let prod: u128 = l.parts().iter().map(|&p| p as u128).product();
                (l.clone(), c * &Rational::from_integer(prod).recip().expect("parts > 0"))
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn mono(n: usize, parts: &[usize], c: &str) -> FockElement {
        FockElement::monomial(n, p(parts), q(c))
    }

    #[test]
    fn fock_product_is_multiset_union() {
        let n = 6;
        assert_eq!(mono(n, &[2], "1").mul(&mono(n, &[2, 1], "1")).unwrap(), mono(n, &[2, 2, 1], "1"));
        let a = mono(n, &[3, 1], "2/3").add(&mono(n, &[1], "5")).unwrap();
        assert_eq!(a.mul(&FockElement::vacuum(n)).unwrap(), a);
        assert!(mono(5, &[3], "1").mul(&mono(5, &[3], "1")).unwrap().is_zero());
        assert_eq!(mono(5, &[3], "1").mul(&mono(6, &[3], "1")), Err(Error::BoundMismatch(5, 6)));
    }

    #[test]
    fn exp_of_q1_is_the_unit() {
        let one = FockElement::unit_all(5);
        for n in 0..=5 {
            let expected = Rational::from_integer(factorial(n)).recip().unwrap();
            assert_eq!(one.coeff(&Partition::column(n)), Some(&expected));
            assert_eq!(one.component(n).unwrap(), FockElement::unit(n).with_bound(5).unwrap());
        }
        assert_eq!(one.num_terms(), 6);
        assert_eq!(one.component(2).unwrap(), mono(5, &[1, 1], "1/2"));
    }

    #[test]
    fn exp_of_zero_and_of_cube() {
        let zero = TruncatedSeries::zero_like(&Rational::zero(), 6);
        assert_eq!(FockElement::exp_linear(&zero, 6).unwrap(), FockElement::vacuum(6));
        let g = TruncatedSeries::monomial(Rational::one(), 3, 6);
        let e = FockElement::exp_linear(&g, 6).unwrap();
        let expected = FockElement::vacuum(6).add(&mono(6, &[3], "1")).unwrap().add(&mono(6, &[3, 3], "1/2")).unwrap();
        assert_eq!(e, expected);
        assert!(FockElement::exp_linear(&TruncatedSeries::one(6), 6).is_err());
        assert!(FockElement::exp_linear(&g, 7).is_err());
    }

    #[test]
    fn components_partition_an_element() {
        let g = TruncatedSeries::from_rationals(&[q("0"), q("1"), q("-1/2"), q("1/3"), q("2")], 4).unwrap();
        let e = FockElement::exp_linear(&g, 4).unwrap();
        let mut sum = FockElement::zero(4);
        for n in 0..=4 {
            sum = sum.add(&e.component(n).unwrap()).unwrap();
        }
        assert_eq!(sum, e);
        let mut sum = FockElement::zero(4);
        for d in 0..=4 {
            sum = sum.add(&e.degree_component(d)).unwrap();
        }
        assert_eq!(sum, e);
        for n in 0..=4 {
            for d in 0..=4 {
                assert_eq!(
                    e.component(n).unwrap().degree_component(d),
                    e.degree_component(d).component(n).unwrap()
                );
            }
        }
        assert!(e.component(5).is_err());
        assert_eq!(FockElement::vacuum(3).component(0).unwrap(), FockElement::vacuum(3));
    }

    #[test]
    fn degree_components() {
        assert_eq!(mono(5, &[5], "1").degree_component(4), mono(5, &[5], "1"));
        assert!(mono(5, &[1, 1], "1").degree_component(1).is_zero());
        let a = mono(3, &[2, 1], "1").add(&mono(3, &[3], "1")).unwrap();
        assert_eq!(a.degree_component(1), mono(3, &[2, 1], "1"));
    }

    #[test]
    fn power_sum_rescaling() {
        let a = mono(5, &[3, 2], "6").to_power_sum_basis();
        assert_eq!(a, mono(5, &[3, 2], "1"));
    }
}
