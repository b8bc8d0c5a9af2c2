//! Exact computation of multiplicative characteristic classes on the Hilbert
//! schemes of points on the affine plane, expressed in the basis of
//! Nakajima's creation operators, together with the cup product on
//! `H*(Hilb^n(C^2))`.
//!
//! Everything is exact rational arithmetic. The main entry points are
//! [`hilbert::tangent_g`], [`hilbert::taut_g`], [`hilbert::hilbert_class`]
//! and [`hilbert::cup_basis`].

pub mod error;
pub mod exact;
pub mod fock;
pub mod hilbert;
pub mod json;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Coeff, ParamContext, ParamPoly, Rational};
pub use fock::FockElement;
pub use partition::Partition;
pub use series::TruncatedSeries;

/// Version string embedded in every result document.
pub const ENGINE_VERSION: &str = concat!("hilbert-fock ", env!("CARGO_PKG_VERSION"));
