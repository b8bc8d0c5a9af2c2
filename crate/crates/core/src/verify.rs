//! Self-check suites driven by `hilbert-fock verify <suite>`.
//!
//! Each suite returns a list of [`Check`]s; a failing check carries the
//! exact mismatching values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fock::FockElement;
use crate::hilbert::{
    self, calibrate, cross_oracle_check, cup_basis, hilbert_class, lemma_b1, oracle_top_tangent, oracle_top_taut,
    p_n_series, taut_g, tangent_g, ClassSpec, CupTable, Target,
};
use crate::partition::Partition;
use crate::series::TruncatedSeries;

/// Seed shared by every randomized suite, so reports are reproducible.
pub const DEFAULT_SEED: u64 = 0x5EED_F0C5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Appendix,
    Oracle,
    Examples,
    Ring,
    CrossOracle,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "appendix" => Ok(Suite::Appendix),
            "oracle" => Ok(Suite::Oracle),
            "examples" => Ok(Suite::Examples),
            "ring" => Ok(Suite::Ring),
            "crossoracle" => Ok(Suite::CrossOracle),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?} (expected appendix, oracle, examples, ring, crossoracle or all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Appendix => "appendix",
            Suite::Oracle => "oracle",
            Suite::Examples => "examples",
            Suite::Ring => "ring",
            Suite::CrossOracle => "crossoracle",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = (!passed).then(|| failures.join("; "));
        Check { suite, name: name.into(), passed, detail }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"suite": self.suite, "name": self.name, "passed": self.passed});
        if let Some(d) = &self.detail {
            v["detail"] = Value::String(d.clone());
        }
        v
    }
}

pub fn run(suite: Suite) -> Result<Vec<Check>> {
    match suite {
        Suite::Appendix => appendix(),
        Suite::Oracle => oracle(),
        Suite::Examples => examples(),
        Suite::Ring => ring(),
        Suite::CrossOracle => crossoracle(),
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Examples, Suite::Appendix, Suite::Oracle, Suite::Ring, Suite::CrossOracle] {
                all.extend(run(s)?);
            }
            Ok(all)
        }
    }
}

/// A random class series `1 + c_1 x + … + c_order x^order` with rational
/// `c_k = p/q`, `1 <= q <= 4`, `|c_k| <= 3`.
pub fn random_class_series(rng: &mut impl Rng, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::one()];
    for _ in 0..order {
        let q: i64 = rng.random_range(1..=4);
        let p: i64 = rng.random_range(-3 * q..=3 * q);
        coeffs.push(Rational::new(p, q).expect("q > 0"));
    }
    TruncatedSeries::from_coeffs(coeffs).expect("rational coefficients")
}

pub fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(DEFAULT_SEED)
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn ratio(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

/// Closed forms of the worked examples.
pub mod closed_forms {
    use super::*;

    /// Chern class, tangent: `g_{2m+1} = (-1)^m C(2m, m) / ((m+1)(2m+1))`.
    pub fn chern_tangent(m: usize) -> Rational {
        let v = ratio(binomial(big(2 * m), big(m)), big((m + 1) * (2 * m + 1)));
        if m.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }

    /// Segre class, tangent: `g_{2m+1} = C(3m, m) / (2m+1)^2`.
    pub fn segre_tangent(m: usize) -> Rational {
        ratio(binomial(big(3 * m), big(m)), big((2 * m + 1) * (2 * m + 1)))
    }

    /// Square root of Todd, tangent: `g_{2m+1} = 1 / (4^m (2m+1) (2m+1)!)`.
    pub fn sqrt_todd_tangent(m: usize) -> Rational {
        let fact: BigInt = (1..=2 * m + 1).map(BigInt::from).product();
        ratio(BigInt::from(1), BigInt::from(4).pow(m as u32) * big(2 * m + 1) * fact)
    }

    /// Square root of Todd, tangent, as forced by
    /// `f(x) f(-x) = (x/2) / sinh(x/2)`: `g = ∫ 2 asinh(t/2) / t dt`, so
    /// `g_{2m+1} = (-1)^m C(2m, m) / (16^m (2m+1)^2)`.
    pub fn sqrt_todd_tangent_asinh(m: usize) -> Rational {
        let v = ratio(binomial(big(2 * m), big(m)), BigInt::from(16).pow(m as u32) * big((2 * m + 1) * (2 * m + 1)));
        if m.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }

    /// `(1 + x)^r`, tautological: `g_n = (-1)^(n-1) C(rn, n-1) / n^2`.
    pub fn cprime_pow_taut(r: usize, n: usize) -> Rational {
        let v = ratio(binomial(big(r * n), big(n - 1)), big(n * n));
        if n % 2 == 1 {
            v
        } else {
            -v
        }
    }
}

fn compare(label: &str, got: &Rational, want: &Rational, failures: &mut Vec<String>) {
    if got != want {
        failures.push(format!("{label}: got {got}, expected {want}"));
    }
}

fn examples() -> Result<Vec<Check>> {
    const ORDER: usize = 20;
    let mut checks = Vec::new();

    let odd_series = |name: &str, f: TruncatedSeries, closed: fn(usize) -> Rational| -> Result<Check> {
        let g = tangent_g(&f, ORDER)?;
        let mut failures = Vec::new();
        for k in 0..=ORDER {
            let want = if k % 2 == 1 { closed((k - 1) / 2) } else { Rational::zero() };
            compare(&format!("g_{k}"), g.coeff(k), &want, &mut failures);
        }
        Ok(Check::new("examples", format!("{name} tangent series to order {ORDER}"), failures))
    };
    checks.push(odd_series("chern", hilbert::chern(ORDER)?, closed_forms::chern_tangent)?);
    checks.push(odd_series("segre", hilbert::segre(ORDER)?, closed_forms::segre_tangent)?);
    checks.push(odd_series("sqrt-todd", hilbert::sqrt_todd(ORDER)?, closed_forms::sqrt_todd_tangent)?);
    checks.push(odd_series("sqrt-todd (asinh form)", hilbert::sqrt_todd(ORDER)?, closed_forms::sqrt_todd_tangent_asinh)?);

    for r in 1..=3 {
        let g = taut_g(&hilbert::cprime_pow(&Rational::from(r as i64), ORDER)?, ORDER)?;
        let mut failures = Vec::new();
        for n in 1..=ORDER {
            compare(&format!("g_{n}"), g.coeff(n), &closed_forms::cprime_pow_taut(r, n), &mut failures);
        }
        checks.push(Check::new("examples", format!("(1+x)^{r} tautological series to order {ORDER}"), failures));
    }
    Ok(checks)
}

fn appendix() -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    for m in 0..=25 {
        for p in 0..=m {
            let want = if p < m {
                Rational::zero()
            } else if m % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            compare(&format!("lemma_b1({m}, {p})"), &lemma_b1(m, p)?, &want, &mut failures);
        }
    }
    let mut checks = vec![Check::new("appendix", "alternating power sums for m <= 25", failures)];

    let mut rng = seeded_rng();
    let mut failures = Vec::new();
    for i in 0..5 {
        let f = random_class_series(&mut rng, 9);
        for n in 0..=8 {
            let pn = p_n_series(&f, n, n)?;
            for k in 0..n {
                compare(&format!("f#{i} P_{n} [x^{k}]"), pn.coeff(k), &Rational::zero(), &mut failures);
            }
            let lead = f.truncate(n)?.pow(n as u32 + 1).coeff(n).clone();
            let want = if n % 2 == 0 { lead } else { -lead };
            compare(&format!("f#{i} P_{n} [x^{n}]"), pn.coeff(n), &want, &mut failures);
        }
    }
    checks.push(Check::new("appendix", "P_n vanishing and leading term for n <= 8, 5 random f", failures));
    Ok(checks)
}

fn oracle() -> Result<Vec<Check>> {
    const ORDER: usize = 12;
    const MAX_N: usize = 10;
    let mut rng = seeded_rng();
    let mut tangent_failures = Vec::new();
    let mut taut_failures = Vec::new();
    for i in 0..10 {
        let f = random_class_series(&mut rng, ORDER);
        let gt = tangent_g(&f, ORDER)?;
        let ga = taut_g(&f, ORDER)?;
        for n in 1..=MAX_N {
            compare(&format!("f#{i} n={n}"), &oracle_top_tangent(&f, n)?, gt.coeff(n), &mut tangent_failures);
            compare(&format!("f#{i} n={n}"), &oracle_top_taut(&f, n)?, ga.coeff(n), &mut taut_failures);
        }
    }
    Ok(vec![
        Check::new("oracle", "tangent partition sum = Lagrange coefficient, 10 random f, n <= 10", tangent_failures),
        Check::new("oracle", "tautological partition sum = Lagrange coefficient, 10 random f, n <= 10", taut_failures),
    ])
}

/// Cup-ring axioms on one `Hilb^n` from a precomputed table.
pub fn ring_axiom_failures(table: &CupTable) -> Result<Vec<String>> {
    let n = table.n();
    let basis = table.basis();
    let mono = |l: &Partition| FockElement::monomial(n, l.clone(), Rational::one());
    let unit = FockElement::unit(n);
    let mut failures = Vec::new();
    for a in basis {
        if table.cup(&unit, &mono(a))? != mono(a) || table.cup(&mono(a), &unit)? != mono(a) {
            failures.push(format!("n={n}: unit fails on {a}"));
        }
        for b in basis {
            let ab = table.basis_product(a, b)?;
            if ab != &cup_basis(b, a)? {
                failures.push(format!("n={n}: {a} x {b} not commutative"));
            }
            let d = a.degree() + b.degree();
            if d >= n && !ab.is_zero() {
                failures.push(format!("n={n}: {a} x {b} has degree {d} >= {n} but is nonzero"));
            }
            if let Some((l, _)) = ab.terms().find(|(l, _)| l.degree() != d) {
                failures.push(format!("n={n}: {a} x {b} has a term {l} outside degree {d}"));
            }
            for c in basis {
                let left = table.cup(ab, &mono(c))?;
                let right = table.cup(&mono(a), table.basis_product(b, c)?)?;
                if left != right {
                    failures.push(format!("n={n}: ({a} x {b}) x {c} != {a} x ({b} x {c})"));
                }
            }
        }
    }
    Ok(failures)
}

/// Weight-`n` component of the `(1+x)^r` tautological class against the
/// `r`-th cup power of the `1+x` one.
pub fn cross_path_failures(table: &CupTable, r: usize) -> Result<Vec<String>> {
    let n = table.n();
    let class = |f: TruncatedSeries| -> Result<FockElement> {
        let spec = ClassSpec::new(f, Target::Tautological)?;
        hilbert_class(&spec, n)?.component(n)
    };
    let lehn = class(hilbert::chern(n)?)?;
    let direct = class(hilbert::cprime_pow(&Rational::from(r as i64), n)?)?;
    let power = table.power(&lehn, r)?;
    if direct == power {
        Ok(Vec::new())
    } else {
        Ok(vec![format!("n={n}, r={r}: class {direct:?} vs cup power {power:?}")])
    }
}

fn ring() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let tables = (1..=6).map(CupTable::build).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for t in &tables[..5] {
        failures.extend(ring_axiom_failures(t)?);
    }
    checks.push(Check::new("ring", "cup is a commutative, associative, graded ring with unit for n <= 5", failures));

    let mut failures = Vec::new();
    let expect = |a: &[usize], b: &[usize], want: FockElement, failures: &mut Vec<String>| -> Result<()> {
        let got = cup_basis(&Partition::new(a.to_vec())?, &Partition::new(b.to_vec())?)?;
        if got != want {
            failures.push(format!("{a:?} x {b:?}: got {got:?}, expected {want:?}"));
        }
        Ok(())
    };
    expect(&[1, 1], &[1, 1], FockElement::monomial(2, Partition::column(2), Rational::from(2)), &mut failures)?;
    expect(&[2], &[2], FockElement::zero(2), &mut failures)?;
    expect(&[2, 1], &[2, 1], FockElement::monomial(3, Partition::row(3), Rational::from(4)), &mut failures)?;
    checks.push(Check::new("ring", "anchored basis products", failures));

    for r in [2, 3] {
        let mut failures = Vec::new();
        for t in &tables {
            failures.extend(cross_path_failures(t, r)?);
        }
        checks.push(Check::new("ring", format!("(1+x)^{r} class = {r}-fold cup power of Lehn's class, n <= 6"), failures));
    }
    Ok(checks)
}

fn crossoracle() -> Result<Vec<Check>> {
    let cal = calibrate(&[2, 3])?;
    let mut checks = vec![Check::new(
        "crossoracle",
        "calibration of q_λ ↔ s_λ C_λ on n <= 3 gives s_λ = z_λ",
        cal.failures.clone(),
    )];
    if !cal.passed() {
        return Ok(checks);
    }
    for n in 4..=hilbert::MAX_ORACLE_RANK {
        let failures = cross_oracle_check(n)?
            .into_iter()
            .map(|m| format!("{} x {} on {}: cup {}, class algebra {}", m.lambda, m.mu, m.nu, m.cup, m.predicted))
            .collect();
        checks.push(Check::new("crossoracle", format!("cup structure constants = rescaled class algebra, n = {n}"), failures));
    }
    Ok(checks)
}
