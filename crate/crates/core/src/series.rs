//! Truncated univariate power series over a [`Coeff`] ring.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`; nothing
//! beyond `N` is ever consulted. Binary operations require equal orders.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Coeff, Rational};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::Precondition("a series needs at least one coefficient".into()));
        };
        if coeffs.iter().any(|c| !c.compatible(first)) {
            return Err(Error::ContextMismatch);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zero_like(template: &C, order: usize) -> Self {
        TruncatedSeries { coeffs: vec![template.zero_like(); order + 1] }
    }

    /// `c * x^k` to the given order (zero when `k > order`).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero_like(&c, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn constant(&self) -> &C {
        &self.coeffs[0]
    }

    fn template(&self) -> &C {
        &self.coeffs[0]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if !self.template().compatible(other.template()) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Keeps coefficients up to `order`, which must not exceed the current one.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Precondition(format!(
                "cannot extend a series of order {} to order {order}",
                self.order()
            )));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, C::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, C::minus))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&C, &C) -> C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(C::negated)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scaled(r))
    }

    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.template().zero_like();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(b));
            }
            out.push(acc);
        }
        TruncatedSeries { coeffs: out }
    }

    /// `self^e`, by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::monomial(self.template().one_like(), 0, self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Exact quotient; the divisor's constant term must be a unit.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv0 = other.coeffs[0]
            .unit_inverse()
            .map_err(|_| Error::NotAUnit(format!("divisor constant term {:?}", other.coeffs[0])))?;
        let n = self.order();
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &other.coeffs[i];
                if !b.is_zero() {
                    acc = acc.minus(&b.times(&q[k - i]));
                }
            }
            q.push(acc.times(&inv0));
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::monomial(self.template().one_like(), 0, self.order()).div(self)
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs constant term 0".into()));
        }
        // n e_n = sum_{k=1}^n k a_k e_{n-k}
        let n = self.order();
        let mut e: Vec<C> = Vec::with_capacity(n + 1);
        e.push(self.template().one_like());
        for m in 1..=n {
            let mut acc = self.template().zero_like();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc.plus(&a.times(&e[m - k]).scaled(&Rational::from(k)));
                }
            }
            e.push(acc.scaled(&Rational::new(1, m as i64)?));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        // a * (log a)' = a'
        let n = self.order();
        let mut l: Vec<C> = Vec::with_capacity(n + 1);
        l.push(self.template().zero_like());
        for m in 1..=n {
            // m l_m = m a_m - sum_{k=1}^{m-1} k l_k a_{m-k}
            let mut acc = self.coeffs[m].scaled(&Rational::from(m));
            for k in 1..m {
                let a = &self.coeffs[m - k];
                if !a.is_zero() {
                    acc = acc.minus(&l[k].times(a).scaled(&Rational::from(k)));
                }
            }
            l.push(acc.scaled(&Rational::new(1, m as i64)?));
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// Square root of a series with constant term 1, with constant term 1.
    pub fn sqrt_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("sqrt needs constant term 1".into()));
        }
        let half = Rational::new(1, 2)?;
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(self.template().one_like());
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                acc = acc.minus(&b[k].times(&b[m - k]));
            }
            b.push(acc.scaled(&half));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `f(x) -> f(-x)`.
    pub fn negate_arg(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// `f(x) -> f(r x)`.
    pub fn scale_arg(&self, r: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.scaled(&power));
            power *= r;
        }
        TruncatedSeries { coeffs: out }
    }

    /// Formal derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero_like(self.template(), 0);
        }
        TruncatedSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scaled(&Rational::from(k + 1)))
                .collect(),
        }
    }

    /// Multiplies by `x`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.template().zero_like());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Divides by `x`, lowering the order by one. The constant term must
    /// vanish.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::Precondition("shift_down needs zero constant term and order >= 1".into()));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Appends zero coefficients up to `order`.
    ///
    /// Only valid when the caller knows the extra coefficients do not
    /// influence the result it is after.
    fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, self.template().zero_like());
        TruncatedSeries { coeffs }
    }

    /// `outer(inner(x))` by Horner's scheme. `inner` must have zero constant
    /// term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        outer.check(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition("inner series of a composition needs constant term 0".into()));
        }
        let n = outer.order();
        let mut acc = Self::monomial(outer.coeffs[n].clone(), 0, n);
        for k in (0..n).rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].plus(&outer.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse of `φ = a_1 x + a_2 x^2 + …` with `a_1` a unit,
    /// by Newton iteration `ψ ← ψ - (φ∘ψ - x) / (φ'∘ψ)`.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("revert needs constant term 0".into()));
        }
        if n == 0 {
            return Err(Error::Precondition("revert needs order >= 1".into()));
        }
        let a1_inv = self.coeffs[1]
            .unit_inverse()
            .map_err(|_| Error::NotAUnit(format!("linear coefficient {:?}", self.coeffs[1])))?;
        let x = Self::monomial(self.template().one_like(), 1, n);
        // The correction numerator vanishes through x^1 at least, so the
        // unknown top coefficient of φ' never reaches the result.
        let dphi = self.derivative().padded(n);
        let mut psi = Self::monomial(a1_inv, 1, n);
        let mut correct_through = 1;
        while correct_through < n {
            let residual = Self::compose(self, &psi)?.sub(&x)?;
            let slope = Self::compose(&dphi, &psi)?;
            psi = psi.sub(&residual.div(&slope)?)?;
            correct_through *= 2;
        }
        Ok(psi)
    }

    /// The series `g` with `∂g/∂t (x / F) = F`, i.e. `t ∂g/∂t` is the
    /// compositional inverse of `x / F`, to order `order`.
    ///
    /// By Lagrange inversion `g_n = [x^(n-1)] F^n / n^2`. `F` needs a unit
    /// constant term and order at least `order - 1`.
    pub fn lagrange_g(f: &Self, order: usize) -> Result<Self> {
        f.coeffs[0]
            .unit_inverse()
            .map_err(|_| Error::NotAUnit(format!("constant term {:?}", f.coeffs[0])))?;
        let mut g = Self::zero_like(f.template(), order);
        if order == 0 {
            return Ok(g);
        }
        if f.order() + 1 < order {
            return Err(Error::Precondition(format!(
                "lagrange_g to order {order} needs F of order >= {}, got {}",
                order - 1,
                f.order()
            )));
        }
        let base = f.truncate(order - 1)?;
        let mut power = base.clone();
        for m in 1..=order {
            if m > 1 {
                power = power.mul_unchecked(&base);
            }
            let denom = Rational::from((m * m) as u64).recip()?;
            g.coeffs[m] = power.coeffs[m - 1].scaled(&denom);
        }
        Ok(g)
    }
}

impl TruncatedSeries<Rational> {
    /// Pads a rational coefficient list with zeros to the given order.
    pub fn from_rationals(coeffs: &[Rational], order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::Precondition(format!(
                "{} coefficients do not fit order {order}",
                coeffs.len()
            )));
        }
        let mut c = coeffs.to_vec();
        c.resize(order + 1, Rational::zero());
        Ok(TruncatedSeries { coeffs: c })
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Result<Self> {
        let c: Vec<Rational> = coeffs.iter().map(|&v| Rational::from(v)).collect();
        Self::from_rationals(&c, order)
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c.to_display_string())?,
                1 => write!(f, "({})x", c.to_display_string())?,
                _ => write!(f, "({})x^{k}", c.to_display_string())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
