use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fock::FockElement;
use crate::series::TruncatedSeries;

/// Which bundle the Chern roots of a multiplicative class belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Tangent,
    Tautological,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(Target::Tangent),
            "tautological" | "taut" => Ok(Target::Tautological),
            other => Err(Error::Parse(format!("unknown target {other:?}"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Tangent => "tangent",
            Target::Tautological => "tautological",
        })
    }
}

/// A multiplicative class `∏ f(root_i)` over the chosen bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSpec {
    f: TruncatedSeries,
    target: Target,
}

impl ClassSpec {
    pub fn new(f: TruncatedSeries, target: Target) -> Result<Self> {
        if !f.constant().is_one() {
            return Err(Error::Precondition(format!("class series needs f(0) = 1, got {}", f.constant())));
        }
        Ok(ClassSpec { f, target })
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn target(&self) -> Target {
        self.target
    }
}

/// The built-in classes, plus a custom coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassName {
    /// `1 + x`
    Chern,
    /// `1 / (1 + x)`
    Segre,
    /// `sqrt(x / (1 - exp(-x)))`
    SqrtTodd,
    /// `x / (1 - exp(-x))`
    Todd,
    /// `(1 + x)^r`
    CprimePow(Rational),
    /// `c_0 + c_1 x + …` with `c_0 = 1`
    Custom(Vec<Rational>),
}

impl ClassName {
    /// The defining series to the given order.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            ClassName::Chern => chern(order),
            ClassName::Segre => segre(order),
            ClassName::SqrtTodd => sqrt_todd(order),
            ClassName::Todd => todd(order),
            ClassName::CprimePow(r) => cprime_pow(r, order),
            ClassName::Custom(coeffs) => {
                if coeffs.first().is_none_or(|c| !c.is_one()) {
                    return Err(Error::Precondition("custom f needs leading coefficient 1".into()));
                }
                let keep = coeffs.len().min(order + 1);
                TruncatedSeries::from_rationals(&coeffs[..keep], order)
            }
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClassName::Chern => "chern",
            ClassName::Segre => "segre",
            ClassName::SqrtTodd => "sqrt-todd",
            ClassName::Todd => "todd",
            ClassName::CprimePow(_) => "cprime-pow",
            ClassName::Custom(_) => "custom",
        }
    }
}

pub fn chern(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_ints(&[1, 1][..order.min(1) + 1], order)
}

pub fn segre(order: usize) -> Result<TruncatedSeries> {
    chern(order)?.recip()
}

pub fn todd(order: usize) -> Result<TruncatedSeries> {
    // (1 - exp(-x)) / x, then invert
    let e = TruncatedSeries::x(order + 1).neg().exp()?;
    let denom = TruncatedSeries::one(order + 1).sub(&e)?.shift_down()?;
    denom.recip()
}

pub fn sqrt_todd(order: usize) -> Result<TruncatedSeries> {
    todd(order)?.sqrt_unit()
}

/// `(1 + x)^r`. Nonnegative integers use the binomial expansion, any other
/// rational goes through `exp(r log(1 + x))`.
pub fn cprime_pow(r: &Rational, order: usize) -> Result<TruncatedSeries> {
    let base = chern(order)?;
    if r.is_integer() && !r.is_negative() {
        let e = u32::try_from(r.numer()).map_err(|_| Error::Precondition(format!("exponent {r} too large")))?;
        return Ok(base.pow(e));
    }
    base.log()?.scale(r).exp()
}

fn check_class_series(f: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if !f.constant().is_one() {
        return Err(Error::Precondition(format!("class series needs f(0) = 1, got {}", f.constant())));
    }
    if order == 0 {
        return f.truncate(0);
    }
    f.truncate(order - 1)
}

/// `g` for the multiplicative class `f` of the tangent bundle: the
/// compositional inverse of `x / (f(x) f(-x))` is `t ∂g/∂t`. Odd, with
/// `g_1 = 1`.
///
/// `f` must have order at least `order - 1`.
pub fn tangent_g(f: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let f = check_class_series(f, order)?;
    let big_f = f.mul(&f.negate_arg())?;
    TruncatedSeries::lagrange_g(&big_f, order)
}

/// `g` for the multiplicative class `f` of the tautological bundle:
/// `∂g/∂t (x / f(-x)) = f(-x)`.
pub fn taut_g(f: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let f = check_class_series(f, order)?;
    TruncatedSeries::lagrange_g(&f.negate_arg(), order)
}

pub fn g_series(spec: &ClassSpec, order: usize) -> Result<TruncatedSeries> {
    match spec.target {
        Target::Tangent => tangent_g(&spec.f, order),
        Target::Tautological => taut_g(&spec.f, order),
    }
}

/// The class on all `Hilb^n(C^2)`, `n <= weight_bound`, as
/// `exp(Σ g_k q_k(1))|0⟩`.
pub fn hilbert_class(spec: &ClassSpec, weight_bound: usize) -> Result<FockElement> {
    let g = g_series(spec, weight_bound.max(1))?;
    let g = if weight_bound == 0 { g.truncate(0)? } else { g };
    FockElement::exp_linear(&g, weight_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn coeffs(g: &TruncatedSeries) -> Vec<String> {
        g.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn chern_tangent() {
        let g = tangent_g(&chern(10).unwrap(), 7).unwrap();
        assert_eq!(coeffs(&g), ["0", "1", "0", "-1/3", "0", "2/5", "0", "-5/7"]);
    }

    #[test]
    fn segre_tangent() {
        let g = tangent_g(&segre(10).unwrap(), 5).unwrap();
        assert_eq!(coeffs(&g), ["0", "1", "0", "1/3", "0", "3/5"]);
    }

    #[test]
    fn sqrt_todd_tangent() {
        // f(x) f(-x) = (x/2) / sinh(x/2) = 1 - x^2/24 + 7x^4/5760 - ...
        let g = tangent_g(&sqrt_todd(8).unwrap(), 5).unwrap();
        assert_eq!(g.coeff(3), &q("-1/72"));
        assert_eq!(g.coeff(5), &q("3/3200"));
    }

    #[test]
    fn lehn_tautological() {
        let g = taut_g(&chern(8).unwrap(), 6).unwrap();
        assert_eq!(coeffs(&g), ["0", "1", "-1/2", "1/3", "-1/4", "1/5", "-1/6"]);
        assert_eq!(taut_g(&TruncatedSeries::one(5), 5).unwrap(), TruncatedSeries::x(5));
        // (1+x)^2, n = 3: C(6, 2)/9
        let g = taut_g(&cprime_pow(&q("2"), 6).unwrap(), 4).unwrap();
        assert_eq!(g.coeff(3), &q("5/3"));
    }

    #[test]
    fn class_series_must_start_at_one() {
        let bad = TruncatedSeries::from_ints(&[2, 1], 4).unwrap();
        assert!(tangent_g(&bad, 4).is_err());
        assert!(taut_g(&bad, 4).is_err());
        assert!(ClassSpec::new(bad, Target::Tangent).is_err());
        assert!(ClassName::Custom(vec![q("2")]).series(3).is_err());
        assert!(ClassName::Custom(vec![]).series(3).is_err());
    }

    #[test]
    fn rational_cprime_power_squares_back() {
        let half = cprime_pow(&q("1/2"), 8).unwrap();
        assert_eq!(half.mul(&half).unwrap(), chern(8).unwrap());
        let inv = cprime_pow(&q("-1"), 8).unwrap();
        assert_eq!(inv, segre(8).unwrap());
    }

    #[test]
    fn trivial_class_is_the_unit() {
        let spec = ClassSpec::new(TruncatedSeries::one(6), Target::Tangent).unwrap();
        assert_eq!(hilbert_class(&spec, 6).unwrap(), FockElement::unit_all(6));
    }

    #[test]
    fn lehn_class_weight_two() {
        let spec = ClassSpec::new(chern(4).unwrap(), Target::Tautological).unwrap();
        let c2 = hilbert_class(&spec, 4).unwrap().component(2).unwrap();
        let expected = FockElement::from_terms(
            4,
            [
                (Partition::new(vec![1, 1]).unwrap(), q("1/2")),
                (Partition::new(vec![2]).unwrap(), q("-1/2")),
            ],
        );
        assert_eq!(c2, expected);
    }

    #[test]
    fn top_degree_of_chern_class() {
        let spec = ClassSpec::new(chern(9).unwrap(), Target::Tangent).unwrap();
        let cls = hilbert_class(&spec, 9).unwrap();
        let g = tangent_g(&chern(9).unwrap(), 9).unwrap();
        for n in 1..=9 {
            let top = cls.component(n).unwrap().degree_component(n - 1);
            let expected = FockElement::monomial(9, Partition::row(n), g.coeff(n).clone());
            assert_eq!(top, expected, "n = {n}");
        }
    }
}
