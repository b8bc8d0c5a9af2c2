//! Exact coefficient rings.
//!
//! [`Rational`] is the base scalar. [`ParamPoly`] is a truncated polynomial
//! ring in nilpotent parameters over it. Both implement [`Coeff`], the one
//! contract the series and Fock code is generic over.

mod poly;
mod rational;

pub use poly::{ParamContext, ParamPoly};
pub use rational::Rational;

use std::fmt::Debug;

use crate::error::Result;

/// A commutative coefficient ring as seen by the series and Fock modules.
///
/// Elements carry whatever context they need (e.g. the parameter list of a
/// [`ParamPoly`]), so constants are produced from an existing element with
/// the `*_like` constructors. Binary operations assume
/// [`compatible`](Coeff::compatible) operands; callers that combine values
/// from different sources check compatibility first.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, r: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;

    /// Inverse of a unit; errors on non-units.
    fn unit_inverse(&self) -> Result<Self>;

    /// Whether the two values live in the same ring.
    fn compatible(&self, other: &Self) -> bool;

    /// The rational part (image under "all parameters to zero").
    fn rational_part(&self) -> Rational;

    fn to_display_string(&self) -> String;
}
