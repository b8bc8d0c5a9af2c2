use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Coeff, Rational};
use crate::error::{Error, Result};

/// Ordered list of nilpotent parameters with per-parameter exponent bounds.
///
/// A parameter with bound `b` satisfies `p^(b+1) = 0`.
#[derive(Debug, PartialEq, Eq)]
pub struct ParamContext {
    names: Vec<String>,
    bounds: Vec<u32>,
    // Mixed-radix strides; the packed index of an exponent vector orders
    // exactly like the vector does lexicographically.
    strides: Vec<usize>,
    size: usize,
}

impl ParamContext {
    pub fn new<S: Into<String>>(params: impl IntoIterator<Item = (S, u32)>) -> Arc<Self> {
        let (names, bounds): (Vec<String>, Vec<u32>) =
            params.into_iter().map(|(n, b)| (n.into(), b)).unzip();
        let mut strides = vec![0; bounds.len()];
        let mut size = 1usize;
        for i in (0..bounds.len()).rev() {
            strides[i] = size;
            size *= bounds[i] as usize + 1;
        }
        Arc::new(ParamContext { names, bounds, strides, size })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn pack(&self, exps: &[u32]) -> Option<usize> {
        if exps.len() != self.bounds.len() {
            return None;
        }
        let mut idx = 0;
        for ((&e, &b), &s) in exps.iter().zip(&self.bounds).zip(&self.strides) {
            if e > b {
                return None;
            }
            idx += e as usize * s;
        }
        Some(idx)
    }

    fn unpack(&self, mut idx: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let e = idx / s;
                idx %= s;
                e as u32
            })
            .collect()
    }

    /// Largest total degree of a nonzero monomial.
    fn nilpotency_degree(&self) -> u32 {
        self.bounds.iter().sum()
    }
}

/// Truncated polynomial in the parameters of a [`ParamContext`] with rational
/// coefficients. Terms whose exponents exceed a bound are dropped, so the
/// ring is `Q[p_1..p_k] / (p_i^(b_i+1))`.
#[derive(Clone)]
pub struct ParamPoly {
    ctx: Arc<ParamContext>,
    // packed exponent index -> nonzero coefficient
    terms: BTreeMap<usize, Rational>,
}

impl ParamPoly {
    pub fn zero(ctx: &Arc<ParamContext>) -> Self {
        ParamPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Arc<ParamContext>, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(0, c);
        }
        p
    }

    /// `coeff * prod p_i^exps[i]`; zero if any exponent exceeds its bound.
    pub fn monomial(ctx: &Arc<ParamContext>, exps: &[u32], coeff: Rational) -> Result<Self> {
        if exps.len() != ctx.len() {
            return Err(Error::Precondition(format!(
                "exponent vector of length {} in a context of {} parameters",
                exps.len(),
                ctx.len()
            )));
        }
        let mut p = Self::zero(ctx);
        if let Some(idx) = ctx.pack(exps) {
            if !coeff.is_zero() {
                p.terms.insert(idx, coeff);
            }
        }
        Ok(p)
    }

    /// The parameter with the given name, as a polynomial.
    pub fn param(ctx: &Arc<ParamContext>, name: &str) -> Result<Self> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::Precondition(format!("unknown parameter {name}")))?;
        let mut exps = vec![0; ctx.len()];
        exps[i] = 1;
        Self::monomial(ctx, &exps, Rational::one())
    }

    pub fn context(&self) -> &Arc<ParamContext> {
        &self.ctx
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.ctx
            .pack(exps)
            .and_then(|i| self.terms.get(&i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&0).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &Rational)> + '_ {
        self.terms.iter().map(|(&i, c)| (self.ctx.unpack(i), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, subtract: bool) -> Self {
        let mut terms = self.terms.clone();
        for (&i, c) in &other.terms {
            let entry = terms.entry(i).or_insert_with(Rational::zero);
            if subtract {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(&i);
            }
        }
        ParamPoly { ctx: self.ctx.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.terms.is_empty() || other.terms.is_empty() {
            return Self::zero(&self.ctx);
        }
        // scalar fast paths
        if self.terms.len() == 1 && self.terms.contains_key(&0) {
            return other.scale(&self.terms[&0]);
        }
        if other.terms.len() == 1 && other.terms.contains_key(&0) {
            return self.scale(&other.terms[&0]);
        }
        let bounds = &self.ctx.bounds;
        let lhs: Vec<(usize, Vec<u32>, &Rational)> =
            self.terms.iter().map(|(&i, c)| (i, self.ctx.unpack(i), c)).collect();
        let rhs: Vec<(usize, Vec<u32>, &Rational)> =
            other.terms.iter().map(|(&i, c)| (i, self.ctx.unpack(i), c)).collect();
        let mut acc: Vec<Option<Rational>> = vec![None; self.ctx.size];
        for (ia, ea, ca) in &lhs {
            'rhs: for (ib, eb, cb) in &rhs {
                for k in 0..bounds.len() {
                    if ea[k] + eb[k] > bounds[k] {
                        continue 'rhs;
                    }
                }
                let prod = *ca * *cb;
                match &mut acc[ia + ib] {
                    Some(slot) => *slot += &prod,
                    slot @ None => *slot = Some(prod),
                }
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter_map(|(i, c)| c.filter(|c| !c.is_zero()).map(|c| (i, c)))
            .collect();
        ParamPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(&i, c)| (i, c * r)).collect();
        ParamPoly { ctx: self.ctx.clone(), terms }
    }

    /// Inverse of `c + n` with `c` a nonzero rational and `n` nilpotent,
    /// via the finite geometric series `c^-1 * sum (-n/c)^k`.
    pub fn invert(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let c_inv = c.recip()?;
        let mut nil = self.clone();
        nil.terms.remove(&0);
        let step = nil.scale(&-&c_inv);
        let mut result = Self::constant(&self.ctx, Rational::one());
        let mut power = result.clone();
        for _ in 0..self.ctx.nilpotency_degree() {
            power = power.mul_unchecked(&step);
            if power.terms.is_empty() {
                break;
            }
            result = result.add_unchecked(&power, false);
        }
        Ok(result.scale(&c_inv))
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (name, e) in self.ctx.names.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Coeff for ParamPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ctx)
    }

    fn one_like(&self) -> Self {
        Self::constant(&self.ctx, Rational::one())
    }

    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::constant(&self.ctx, r.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rational::is_one)
    }

    fn plus(&self, other: &Self) -> Self {
        debug_assert!(self.same_context(other));
        self.add_unchecked(other, false)
    }

    fn minus(&self, other: &Self) -> Self {
        debug_assert!(self.same_context(other));
        self.add_unchecked(other, true)
    }

    fn times(&self, other: &Self) -> Self {
        debug_assert!(self.same_context(other));
        self.mul_unchecked(other)
    }

    fn negated(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn scaled(&self, r: &Rational) -> Self {
        self.scale(r)
    }

    fn unit_inverse(&self) -> Result<Self> {
        self.invert()
    }

    fn compatible(&self, other: &Self) -> bool {
        self.same_context(other)
    }

    fn rational_part(&self) -> Rational {
        self.constant_term()
    }

    fn to_display_string(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx() -> Arc<ParamContext> {
        ParamContext::new([("rho1", 2), ("rho1'", 1)])
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn distributes() {
        let c = ctx();
        let one = ParamPoly::constant(&c, q(1));
        let r = ParamPoly::param(&c, "rho1").unwrap();
        let rp = ParamPoly::param(&c, "rho1'").unwrap();
        let lhs = one.add(&r).unwrap().mul(&one.add(&rp).unwrap()).unwrap();
        let rhs = one.add(&r).unwrap().add(&rp).unwrap().add(&r.mul(&rp).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 4);
    }

    #[test]
    fn nilpotent_truncation() {
        let c = ParamContext::new([("rho1", 1)]);
        let r = ParamPoly::param(&c, "rho1").unwrap();
        assert!(r.mul(&r).unwrap().is_zero());
        assert!(ParamPoly::monomial(&c, &[2], q(5)).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_geometric_series() {
        let c = ParamContext::new([("rho1", 2)]);
        let one = ParamPoly::constant(&c, q(1));
        let r = ParamPoly::param(&c, "rho1").unwrap();
        let a = one.add(&r).unwrap();
        let inv = a.invert().unwrap();
        assert_eq!(inv.coeff(&[0]), q(1));
        assert_eq!(inv.coeff(&[1]), q(-1));
        assert_eq!(inv.coeff(&[2]), q(1));
        assert_eq!(a.mul(&inv).unwrap(), one);
    }

    #[test]
    fn scalar_inverse_and_non_unit() {
        let c = ctx();
        let two = ParamPoly::constant(&c, q(2));
        assert_eq!(two.invert().unwrap(), ParamPoly::constant(&c, Rational::new(1, 2).unwrap()));
        let r = ParamPoly::param(&c, "rho1").unwrap();
        assert!(matches!(r.invert(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn mismatched_contexts_error() {
        let a = ParamPoly::param(&ctx(), "rho1").unwrap();
        let b = ParamPoly::param(&ParamContext::new([("rho1", 3)]), "rho1").unwrap();
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch));
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
        // structurally equal contexts built separately are the same ring
        let c = ParamPoly::param(&ctx(), "rho1'").unwrap();
        assert!(a.mul(&c).is_ok());
    }

    #[test]
    fn zero_is_empty() {
        let c = ctx();
        let r = ParamPoly::param(&c, "rho1").unwrap();
        let z = r.sub(&r).unwrap();
        assert_eq!(z.num_terms(), 0);
        assert_eq!(z, ParamPoly::zero(&c));
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn terms_in_lex_order() {
        let c = ctx();
        let p = ParamPoly::monomial(&c, &[0, 1], q(3))
            .unwrap()
            .add(&ParamPoly::monomial(&c, &[1, 0], q(2)).unwrap())
            .unwrap()
            .add(&ParamPoly::constant(&c, q(1)))
            .unwrap();
        let exps: Vec<Vec<u32>> = p.terms().map(|(e, _)| e).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    fn arb_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec(-4i64..5, 6).prop_map(|cs| {
            let c = ctx();
            let mut p = ParamPoly::zero(&c);
            for (i, v) in cs.into_iter().enumerate() {
                let exps = [(i / 2) as u32, (i % 2) as u32];
                p = p.add(&ParamPoly::monomial(&c, &exps, q(v)).unwrap()).unwrap();
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn invert_is_two_sided(a in arb_poly()) {
            let one = a.one_like();
            match a.invert() {
                Ok(inv) => {
                    prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
                    prop_assert_eq!(inv.mul(&a).unwrap(), one);
                }
                Err(_) => prop_assert!(a.constant_term().is_zero()),
            }
        }
    }
}
