use std::collections::HashMap;

use hilbert_fock::hilbert::{chern, oracle_top_tangent, oracle_top_taut, segre, taut_g, tangent_g};
use hilbert_fock::partition::{self, chi_mn, Partition};
use hilbert_fock::verify::{random_class_series, seeded_rng};
use hilbert_fock::{Rational, TruncatedSeries};

type Poly = HashMap<Vec<u32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

// Frobenius: χ^λ_μ = [x^(λ + δ)] p_μ(x_1..x_l) · Π_{i<j} (x_i - x_j).
fn frobenius_character(lambda: &Partition, mu: &Partition) -> i64 {
    let l = lambda.len().max(1);
    let unit = |e: Vec<u32>| -> Poly { [(e, 1)].into_iter().collect() };
    let mut acc = unit(vec![0; l]);
    for i in 0..l {
        for j in (i + 1)..l {
            let mut ei = vec![0; l];
            ei[i] = 1;
            let mut ej = vec![0; l];
            ej[j] = 1;
            let factor: Poly = [(ei, 1), (ej, -1)].into_iter().collect();
            acc = poly_mul(&acc, &factor);
        }
    }
    for &k in mu.parts() {
        let power_sum: Poly = (0..l)
            .map(|i| {
                let mut e = vec![0; l];
                e[i] = k as u32;
                (e, 1)
            })
            .collect();
        acc = poly_mul(&acc, &power_sum);
    }
    let target: Vec<u32> = (0..l).map(|i| (lambda.parts().get(i).copied().unwrap_or(0) + l - 1 - i) as u32).collect();
    acc.get(&target).copied().unwrap_or(0)
}

#[test]
fn murnaghan_nakayama_matches_frobenius() {
    for n in 1..=7 {
        let parts = partition::enumerate(n);
        for lambda in &parts {
            for mu in &parts {
                assert_eq!(chi_mn(lambda, mu).unwrap(), frobenius_character(lambda, mu), "χ^{lambda}_{mu}");
            }
        }
    }
}

#[test]
fn character_rows_are_orthonormal() {
    for n in 1..=6 {
        let parts = partition::enumerate(n);
        for a in &parts {
            for b in &parts {
                let s: Rational = parts
                    .iter()
                    .map(|mu| {
                        let v = chi_mn(a, mu).unwrap() * chi_mn(b, mu).unwrap();
                        Rational::new(v, mu.z() as i64).unwrap()
                    })
                    .sum();
                let want = if a == b { Rational::one() } else { Rational::zero() };
                assert_eq!(s, want, "<χ^{a}, χ^{b}>");
            }
        }
    }
}

// ψ with φ(ψ(x)) = x, one coefficient at a time.
fn revert_by_substitution(phi: &TruncatedSeries) -> TruncatedSeries {
    let n = phi.order();
    let a1 = phi.coeff(1).clone();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[1] = a1.recip().unwrap();
    for k in 2..=n {
        let psi = TruncatedSeries::from_coeffs(coeffs.clone()).unwrap();
        let c = TruncatedSeries::compose(phi, &psi).unwrap().coeff(k).clone();
        coeffs[k] = -(c.checked_div(&a1).unwrap());
    }
    TruncatedSeries::from_coeffs(coeffs).unwrap()
}

#[test]
fn catalan_reversion() {
    // x - x^2 reverts to Σ C_{k-1} x^k
    let phi = TruncatedSeries::from_ints(&[0, 1, -1], 14).unwrap();
    let psi = phi.revert().unwrap();
    assert_eq!(psi, revert_by_substitution(&phi));
    let catalan = [0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900];
    assert_eq!(psi, TruncatedSeries::from_ints(&catalan, 14).unwrap());
}

#[test]
fn newton_reversion_matches_substitution() {
    let mut rng = seeded_rng();
    for _ in 0..8 {
        let f = random_class_series(&mut rng, 11);
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(f.coeffs().iter().cloned());
        coeffs[1] = Rational::new(3, 2).unwrap();
        let phi = TruncatedSeries::from_coeffs(coeffs).unwrap();
        assert_eq!(phi.revert().unwrap(), revert_by_substitution(&phi));
    }
}

// g_n = 1/(n n!) · d^(n-1)/dx^(n-1) F^n at 0.
fn lagrange_by_derivatives(f: &TruncatedSeries, n: usize) -> Rational {
    let mut d = f.pow(n as u32);
    for _ in 1..n {
        d = d.derivative();
    }
    let denom = Rational::from_integer(n as u128 * partition::factorial(n));
    d.constant().checked_div(&denom).unwrap()
}

#[test]
fn lagrange_matches_derivative_form() {
    let mut rng = seeded_rng();
    for _ in 0..6 {
        let f = random_class_series(&mut rng, 10);
        let g = TruncatedSeries::lagrange_g(&f, 10).unwrap();
        assert!(g.coeff(0).is_zero());
        for n in 1..=10 {
            assert_eq!(g.coeff(n), &lagrange_by_derivatives(&f, n), "g_{n}");
        }
    }
}

#[test]
fn partition_sums_match_lagrange_for_named_classes() {
    for (name, f) in [("chern", chern(10).unwrap()), ("segre", segre(10).unwrap())] {
        let gt = tangent_g(&f, 9).unwrap();
        let ga = taut_g(&f, 9).unwrap();
        for n in 1..=9 {
            assert_eq!(&oracle_top_tangent(&f, n).unwrap(), gt.coeff(n), "{name} tangent n={n}");
            assert_eq!(&oracle_top_taut(&f, n).unwrap(), ga.coeff(n), "{name} tautological n={n}");
        }
    }
}
