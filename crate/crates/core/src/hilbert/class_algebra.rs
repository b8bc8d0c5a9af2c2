//! Products of conjugacy-class sums in the center of `Q[S_n]`, used as an
//! independent check of the cup product.
//!
//! Under the identification `q_λ|0⟩ ↔ s_λ C_λ`, the cup product on
//! `H*(Hilb^n(C^2))` should match the degree-additive part of the class
//! algebra, where a class of cycle type λ has degree `n - |λ|`. The scalars
//! `s_λ` are not assumed: [`calibrate`] solves for them on small `n` and
//! reports whether they come out as `z_λ`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::cup::CupTable;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fock::FockElement;
use crate::partition::{self, Partition};

/// Largest symmetric-group rank the brute-force oracle accepts.
pub const MAX_ORACLE_RANK: usize = 7;

/// `Σ_ν c_ν C_ν` for class sums `C_ν` of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSum {
    n: usize,
    terms: BTreeMap<Partition, u64>,
}

impl ClassSum {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn multiplicity(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps the classes of degree exactly `d`.
    pub fn degree_part(&self, d: usize) -> ClassSum {
        ClassSum {
            n: self.n,
            terms: self.terms.iter().filter(|(l, _)| l.degree() == d).map(|(l, &c)| (l.clone(), c)).collect(),
        }
    }
}

type Perm = Vec<u8>;

fn cycle_type(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

/// A permutation of cycle type λ built from consecutive cycles.
fn representative(lambda: &Partition) -> Perm {
    let mut p = Vec::with_capacity(lambda.weight());
    let mut base = 0u8;
    for &len in lambda.parts() {
        for j in 0..len as u8 {
            p.push(base + (j + 1) % len as u8);
        }
        base += len as u8;
    }
    p
}

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn check_ranks(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let n = lambda.weight();
    if n != mu.weight() {
        return Err(Error::WeightMismatch(n, mu.weight()));
    }
    if n > MAX_ORACLE_RANK {
        return Err(Error::Precondition(format!(
            "class-algebra oracle supports n <= {MAX_ORACLE_RANK}, got {n}"
        )));
    }
    Ok(n)
}

/// The full product `C_λ C_μ` in the center of `Q[S_n]`.
///
/// One permutation σ of type λ is fixed and multiplied by every τ of type
/// μ; if `N_ν` products land in class ν, then `c_ν = |C_λ| N_ν / |C_ν|`.
pub fn class_product_full(lambda: &Partition, mu: &Partition) -> Result<ClassSum> {
    let n = check_ranks(lambda, mu)?;
    let sigma = representative(lambda);
    let mut counts: BTreeMap<Partition, u128> = BTreeMap::new();
    for tau in all_perms(n) {
        if &cycle_type(&tau) != mu {
            continue;
        }
        let prod: Perm = tau.iter().map(|&t| sigma[t as usize]).collect();
        *counts.entry(cycle_type(&prod)).or_default() += 1;
    }
    let size_lambda = lambda.class_size();
    let mut terms = BTreeMap::new();
    for (nu, count) in counts {
        let total = size_lambda * count;
        let size_nu = nu.class_size();
        if !total.is_multiple_of(size_nu) {
            return Err(Error::Consistency(format!(
                "class product {lambda} x {mu}: {total} pairs do not divide evenly over class {nu}"
            )));
        }
        terms.insert(nu, (total / size_nu) as u64);
    }
    Ok(ClassSum { n, terms })
}

/// The degree-additive part of `C_λ C_μ`: classes ν with
/// `deg ν = deg λ + deg μ`, where `deg λ = n - |λ|`.
pub fn ls_oracle(lambda: &Partition, mu: &Partition) -> Result<ClassSum> {
    Ok(class_product_full(lambda, mu)?.degree_part(lambda.degree() + mu.degree()))
}

/// Outcome of solving for the scalars `s_λ` in `q_λ|0⟩ ↔ s_λ C_λ`.
#[derive(Debug, Clone)]
pub struct Calibration {
    /// Solved scalars per rank.
    pub scalars: BTreeMap<usize, BTreeMap<Partition, Rational>>,
    /// Ranks, and classes within them, that no equation determines
    /// (gauge freedom `s_λ → c^{deg λ} s_λ`, fixed at `s = z` on degree 1).
    pub gauge_fixed: Vec<Partition>,
    /// Every structure-constant equation holds with the solved scalars.
    pub consistent: bool,
    /// The solved scalars equal `z_λ`.
    pub equals_z: bool,
    /// Human-readable description of any failed equation.
    pub failures: Vec<String>,
}

impl Calibration {
    pub fn passed(&self) -> bool {
        self.consistent && self.equals_z
    }
}

struct Constants {
    // (λ, μ) -> coefficients on ν
    machinery: BTreeMap<(Partition, Partition), BTreeMap<Partition, Rational>>,
    oracle: BTreeMap<(Partition, Partition), BTreeMap<Partition, Rational>>,
}

fn structure_constants(n: usize) -> Result<Constants> {
    let table = CupTable::build(n)?;
    let basis = table.basis().to_vec();
    let pairs: Vec<(Partition, Partition)> =
        basis.iter().flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let oracle: Vec<_> = pairs
        .par_iter()
        .map(|(a, b)| -> Result<_> {
            let cs = ls_oracle(a, b)?;
            Ok(((a.clone(), b.clone()), cs.terms().map(|(l, c)| (l.clone(), Rational::from(c))).collect()))
        })
        .collect::<Result<_>>()?;
    let mut machinery = BTreeMap::new();
    for (a, b) in &pairs {
        let prod = table.basis_product(a, b)?;
        machinery.insert((a.clone(), b.clone()), prod.terms().map(|(l, c)| (l.clone(), c.clone())).collect());
    }
    Ok(Constants { machinery, oracle: oracle.into_iter().collect() })
}

/// Solves `M[λ,μ;ν] s_ν = s_λ s_μ O[λ,μ;ν]` on each rank in `ranks`, where
/// `M` are the cup-product structure constants and `O` the class-algebra
/// ones, and checks the result against `s_λ = z_λ`.
///
/// `s_(1^n)` is forced by the unit equation. The graded rescaling
/// `s_λ → c^{deg λ} s_λ` leaves every equation invariant, so the one free
/// scalar per rank is fixed on the degree-one class `(2, 1^{n-2})`; the
/// remaining scalars are propagated through products and then every
/// equation is checked.
pub fn calibrate(ranks: &[usize]) -> Result<Calibration> {
    let mut cal = Calibration {
        scalars: BTreeMap::new(),
        gauge_fixed: Vec::new(),
        consistent: true,
        equals_z: true,
        failures: Vec::new(),
    };
    for &n in ranks {
        let consts = structure_constants(n)?;
        let basis = partition::enumerate(n);
        let mut s: BTreeMap<Partition, Rational> = BTreeMap::new();

        let column = Partition::column(n);
        match consts.machinery[&(column.clone(), column.clone())].get(&column) {
            Some(v) => {
                s.insert(column.clone(), v.clone());
            }
            None => {
                cal.consistent = false;
                cal.failures.push(format!("n={n}: unit class squares to zero"));
                continue;
            }
        }
        if n >= 2 {
            let mut parts = vec![2];
            parts.extend(std::iter::repeat_n(1, n - 2));
            let transposition = Partition::new(parts)?;
            s.insert(transposition.clone(), Rational::from_integer(transposition.z()));
            cal.gauge_fixed.push(transposition);
        }

        // propagate s_ν = s_λ s_μ O / M
        let mut changed = true;
        while changed {
            changed = false;
            for ((a, b), m_row) in &consts.machinery {
                let (Some(sa), Some(sb)) = (s.get(a).cloned(), s.get(b).cloned()) else { continue };
                let o_row = &consts.oracle[&(a.clone(), b.clone())];
                for (nu, m) in m_row {
                    if s.contains_key(nu) {
                        continue;
                    }
                    if let Some(o) = o_row.get(nu) {
                        let v = (&sa * &sb * o).checked_div(m)?;
                        s.insert(nu.clone(), v);
                        changed = true;
                    }
                }
            }
        }

        for lambda in &basis {
            if !s.contains_key(lambda) {
                cal.consistent = false;
                cal.failures.push(format!("n={n}: no equation determines s{lambda}"));
            }
        }

        for ((a, b), m_row) in &consts.machinery {
            let o_row = &consts.oracle[&(a.clone(), b.clone())];
            let support: BTreeSet<&Partition> = m_row.keys().chain(o_row.keys()).collect();
            for nu in support {
                let (Some(sa), Some(sb), Some(sn)) = (s.get(a), s.get(b), s.get(nu)) else { continue };
                let m = m_row.get(nu).cloned().unwrap_or_else(Rational::zero);
                let o = o_row.get(nu).cloned().unwrap_or_else(Rational::zero);
                if &m * sn != sa * sb * &o {
                    cal.consistent = false;
                    cal.failures.push(format!(
                        "n={n}: {a} x {b} on {nu}: cup coefficient {m}, class coefficient {o}"
                    ));
                }
            }
        }

        for (lambda, v) in &s {
            if *v != Rational::from_integer(lambda.z()) {
                cal.equals_z = false;
                cal.failures.push(format!("n={n}: s{lambda} = {v}, z = {}", lambda.z()));
            }
        }
        cal.scalars.insert(n, s);
    }
    Ok(cal)
}

/// One disagreement between the cup product and the rescaled class algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossOracleMismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub cup: Rational,
    pub predicted: Rational,
}

/// Compares every `cup_basis(λ, μ)` on rank `n` with
/// `z_λ z_μ / z_ν · (multiplicity of C_ν in ls_oracle(λ, μ))`.
pub fn cross_oracle_check(n: usize) -> Result<Vec<CrossOracleMismatch>> {
    let table = CupTable::build(n)?;
    cross_oracle_with_table(&table)
}

fn cross_oracle_with_table(table: &CupTable) -> Result<Vec<CrossOracleMismatch>> {
    let basis = table.basis().to_vec();
    let pairs: Vec<(Partition, Partition)> = basis
        .iter()
        .enumerate()
        .flat_map(|(i, a)| basis[i..].iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let per_pair: Vec<Vec<CrossOracleMismatch>> = pairs
        .par_iter()
        .map(|(a, b)| -> Result<_> {
            let cup = table.basis_product(a, b)?;
            let oracle = ls_oracle(a, b)?;
            let scale = Rational::from_integer(a.z() * b.z());
            let predicted = FockElement::from_terms(
                table.n(),
                oracle.terms().map(|(nu, c)| {
                    let v = (&scale * &Rational::from(c))
                        .checked_div(&Rational::from_integer(nu.z()))
                        .expect("z > 0");
                    (nu.clone(), v)
                }),
            );
            let support: BTreeSet<&Partition> =
                cup.terms().map(|(l, _)| l).chain(predicted.terms().map(|(l, _)| l)).collect();
            Ok(support
                .into_iter()
                .filter_map(|nu| {
                    let c = cup.coeff(nu).cloned().unwrap_or_else(Rational::zero);
                    let p = predicted.coeff(nu).cloned().unwrap_or_else(Rational::zero);
                    (c != p).then(|| CrossOracleMismatch {
                        lambda: a.clone(),
                        mu: b.clone(),
                        nu: nu.clone(),
                        cup: c,
                        predicted: p,
                    })
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_pair.into_iter().flatten().collect())
}
