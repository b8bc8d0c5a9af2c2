//! Multiplicative classes on `Hilb^n(C^2)` and the cup product.
//!
//! A multiplicative class is given by its power series `f` with `f(0) = 1`.
//! Its restriction to `⊕_n H*(Hilb^n(C^2))` is `exp(Σ_k g_k q_k(1))|0⟩`,
//! where `g` comes from `f` by Lagrange inversion:
//!
//! * tangent bundle: `∂g/∂t (x / F) = F` with `F = f(x) f(-x)`,
//! * tautological bundle `O^[n]`: `∂g/∂t (x / F) = F` with `F = f(-x)`.

mod identities;
mod class_algebra;
mod classes;
mod cup;
mod oracle;

pub use identities::{lemma_b1, p_n_series};
pub use class_algebra::{
    calibrate, class_product_full, cross_oracle_check, ls_oracle, Calibration, ClassSum,
    CrossOracleMismatch, MAX_ORACLE_RANK,
};
pub use classes::{
    chern, cprime_pow, g_series, hilbert_class, segre, sqrt_todd, taut_g, tangent_g, todd,
    ClassName, ClassSpec, Target,
};
pub use cup::{cup, cup_basis, CupTable};
pub use oracle::{oracle_top_tangent, oracle_top_taut};
