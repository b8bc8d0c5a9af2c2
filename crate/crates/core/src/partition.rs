//! Integer partitions, Young diagram statistics and symmetric-group
//! characters.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by weight first, then reverse-lexicographic within a weight,
/// so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(n - s, 1^s)`.
    pub fn hook(n: usize, s: usize) -> Result<Self> {
        if s >= n {
            return Err(Error::Precondition(format!("hook (n-s, 1^s) needs s < n, got n={n}, s={s}")));
        }
        let mut parts = vec![n - s];
        parts.extend(std::iter::repeat_n(1, s));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Algebraic degree `weight - length` of the Fock monomial `q_λ|0⟩`.
    pub fn degree(&self) -> usize {
        self.weight() - self.len()
    }

    /// `m_j` for `j = 1..=largest part`; index 0 is unused and zero.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Cells `(row, col)` of the Young diagram, English convention, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook lengths `arm + leg + 1`, in cell order.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.0[i] - j - 1;
                let leg = conj.0[j] - i - 1;
                arm + leg + 1
            })
            .collect()
    }

    /// `row - col` for every cell: the torus weights of the tautological
    /// bundle at the fixed point indexed by this partition, in units of the
    /// antidiagonal torus parameter.
    pub fn cell_weights(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| i as i64 - j as i64).collect()
    }

    pub fn hook_product(&self) -> u128 {
        self.hooks().into_iter().map(|h| h as u128).product()
    }

    /// `z_λ = ∏_j j^{m_j} m_j!`, the centralizer order of a permutation of
    /// cycle type λ.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &m)| (j as u128).pow(m as u32) * factorial(m))
            .product()
    }

    /// `Some(s)` when λ = `(n - s, 1^s)`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.0.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    /// Character of the irreducible representation λ on an `n`-cycle:
    /// `(-1)^s` on the hook `(n - s, 1^s)`, zero off hooks.
    pub fn chi_on_n_cycle(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::Precondition("character on an n-cycle needs n >= 1".into()));
        }
        Ok(match self.hook_leg() {
            Some(s) if s % 2 == 0 => 1,
            Some(_) => -1,
            None => 0,
        })
    }

    /// Number of permutations of cycle type λ, `n! / z_λ`.
    pub fn class_size(&self) -> u128 {
        factorial(self.weight()) / self.z()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, reverse-lexicographic.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of weight at most `n`, in [`Partition`] order.
pub fn enumerate_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate).collect()
}

/// Irreducible character `χ^λ_μ` of the symmetric group by the
/// Murnaghan–Nakayama rule.
///
/// Border strips are removed on the beta-set (first-column hook lengths) of
/// λ: removing a strip of length `r` moves one bead from `b` to `b - r`,
/// with sign `(-1)^(beads strictly between)`.
pub fn chi_mn(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(beta, &mu.0, &mut memo))
}

fn mn_rec(beta: Vec<usize>, strips: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = strips.split_first() else {
        return 1;
    };
    let key = (beta, strips.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}
