//! Cup product on `H*(Hilb^n(C^2))` from products of multiplicative classes.
//!
//! For `g_ρ = t + Σ_k ρ_k t^k` with nilpotent parameters `ρ_k`, the
//! tautological class with `∂g/∂t (x / F) = F`, `F = x / revert(t ∂g_ρ/∂t)`,
//! restricts to `exp(Σ g_ρ,k q_k(1))|0⟩ = exp(q_1) ∏_k exp(ρ_k q_k)|0⟩`.
//! The coefficient of `∏ ρ_k^{m_k(ν)}` is `exp(q_1) q_ν|0⟩ / ∏ m_k(ν)!`,
//! whose weight-`n` part is `q_ν|0⟩` itself. Multiplying two such classes
//! multiplies their series `F`, and the product class again has the form
//! `exp(Σ h_k q_k)|0⟩` with `h = lagrange_g(F_ρ F_ρ')`. Reading off the
//! coefficient of `ρ^ν ρ'^ν'` gives `q_ν|0⟩ ∪ q_ν'|0⟩`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{Coeff, ParamContext, ParamPoly, Rational};
use crate::fock::FockElement;
use crate::partition::{self, factorial, Partition};
use crate::series::TruncatedSeries;

/// `q_ν|0⟩ ∪ q_ν'|0⟩` in `H*(Hilb^n(C^2))`, `n = ‖ν‖ = ‖ν'‖ >= 1`.
pub fn cup_basis(nu: &Partition, nu_prime: &Partition) -> Result<FockElement> {
    let n = nu.weight();
    if n != nu_prime.weight() {
        return Err(Error::WeightMismatch(n, nu_prime.weight()));
    }
    if n == 0 {
        return Err(Error::Precondition("cup product needs weight n >= 1".into()));
    }

    let m = nu.multiplicities();
    let m_prime = nu_prime.multiplicities();
    let mut params = Vec::new();
    let mut target = Vec::new();
    let mut left_index = HashMap::new();
    let mut right_index = HashMap::new();
    for (k, &mk) in m.iter().enumerate().skip(1).filter(|(_, &mk)| mk > 0) {
        left_index.insert(k, params.len());
        params.push((format!("rho{k}"), mk as u32));
        target.push(mk as u32);
    }
    for (k, &mk) in m_prime.iter().enumerate().skip(1).filter(|(_, &mk)| mk > 0) {
        right_index.insert(k, params.len());
        params.push((format!("rho'{k}"), mk as u32));
        target.push(mk as u32);
    }
    let ctx = ParamContext::new(params);

    let f_left = universal_f(&ctx, &left_index, n)?;
    let f_right = universal_f(&ctx, &right_index, n)?;
    let h = TruncatedSeries::lagrange_g(&f_left.mul(&f_right)?, n)?;
    let product = FockElement::exp_linear(&h, n)?;

    let sym: u128 = m.iter().chain(&m_prime).map(|&k| factorial(k)).product();
    let sym = Rational::from_integer(sym);
    let mut out = FockElement::zero(n);
    for (lambda, poly) in product.terms() {
        let c = poly.coeff(&target);
        if c.is_zero() {
            continue;
        }
        if lambda.weight() < n {
            return Err(Error::Consistency(format!(
                "cup {nu} x {nu_prime}: nonzero coefficient {c} on {lambda} below weight {n}"
            )));
        }
        out = out.add(&FockElement::monomial(n, lambda.clone(), c * &sym))?;
    }
    Ok(out)
}

/// `F = x / revert(t ∂g/∂t)` for `g = t + Σ_k ρ_k t^k`, to order `n - 1`;
/// `index` maps a part size `k` to the context position of `ρ_k`.
fn universal_f(
    ctx: &Arc<ParamContext>,
    index: &HashMap<usize, usize>,
    n: usize,
) -> Result<TruncatedSeries<ParamPoly>> {
    let zero = ParamPoly::zero(ctx);
    let mut phi = vec![zero.clone(); n + 1];
    phi[1] = ParamPoly::constant(ctx, Rational::one());
    for (&k, &i) in index {
        let mut exps = vec![0; ctx.len()];
        exps[i] = 1;
        // t ∂/∂t multiplies the t^k coefficient by k
        let term = ParamPoly::monomial(ctx, &exps, Rational::from(k))?;
        phi[k] = phi[k].plus(&term);
    }
    let psi = TruncatedSeries::from_coeffs(phi)?.revert()?;
    psi.shift_down()?.recip()
}

/// Cup product of two classes supported in weight `n`, extended bilinearly
/// from [`cup_basis`].
pub fn cup(a: &FockElement, b: &FockElement, n: usize) -> Result<FockElement> {
    check_support(a, n)?;
    check_support(b, n)?;
    let pairs: Vec<(Partition, Partition)> = a
        .terms()
        .flat_map(|(la, _)| b.terms().map(move |(lb, _)| ordered(la, lb)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let table: HashMap<(Partition, Partition), FockElement> = pairs
        .into_par_iter()
        .map(|(x, y)| cup_basis(&x, &y).map(|p| ((x, y), p)))
        .collect::<Result<_>>()?;
    combine(a, b, n, |x, y| &table[&ordered(x, y)])
}

fn ordered(a: &Partition, b: &Partition) -> (Partition, Partition) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

fn check_support(a: &FockElement, n: usize) -> Result<()> {
    match a.terms().find(|(l, _)| l.weight() != n) {
        Some((l, _)) => Err(Error::Precondition(format!("{l} is not of weight {n}"))),
        None => Ok(()),
    }
}

fn combine<'t>(
    a: &FockElement,
    b: &FockElement,
    n: usize,
    basis: impl Fn(&Partition, &Partition) -> &'t FockElement,
) -> Result<FockElement> {
    let mut out = FockElement::zero(n);
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            out = out.add(&basis(la, lb).scale(&(ca * cb)))?;
        }
    }
    Ok(out)
}

/// All basis cup products on one `Hilb^n`, computed once.
#[derive(Debug, Clone)]
pub struct CupTable {
    n: usize,
    basis: Vec<Partition>,
    products: HashMap<(Partition, Partition), FockElement>,
}

impl CupTable {
    pub fn build(n: usize) -> Result<Self> {
        let basis = partition::enumerate(n);
        let pairs: Vec<(Partition, Partition)> = basis
            .iter()
            .enumerate()
            .flat_map(|(i, a)| basis[i..].iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let products = pairs
            .into_par_iter()
            .map(|(a, b)| cup_basis(&a, &b).map(|p| ((a, b), p)))
            .collect::<Result<_>>()?;
        Ok(CupTable { n, basis, products })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn basis_product(&self, a: &Partition, b: &Partition) -> Result<&FockElement> {
        self.products
            .get(&ordered(a, b))
            .ok_or_else(|| Error::Precondition(format!("{a} x {b} is not a pair of partitions of {}", self.n)))
    }

    pub fn cup(&self, a: &FockElement, b: &FockElement) -> Result<FockElement> {
        check_support(a, self.n)?;
        check_support(b, self.n)?;
        combine(a, b, self.n, |x, y| &self.products[&ordered(x, y)])
    }

    /// `a ∪ a ∪ … ∪ a` (`r` factors; `r = 0` gives the unit).
    pub fn power(&self, a: &FockElement, r: usize) -> Result<FockElement> {
        let mut acc = FockElement::unit(self.n);
        for _ in 0..r {
            acc = self.cup(&acc, a)?;
        }
        Ok(acc)
    }
}
