use hilbert_fock::hilbert::{cup, hilbert_class, tangent_g, ClassSpec, Target};
use hilbert_fock::partition;
use hilbert_fock::{FockElement, Rational, TruncatedSeries};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn class_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order).prop_map(|tail| {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(tail);
        TruncatedSeries::from_coeffs(coeffs).unwrap()
    })
}

fn no_constant(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order).prop_map(|tail| {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(tail);
        TruncatedSeries::from_coeffs(coeffs).unwrap()
    })
}

fn weight_n_element(n: usize) -> impl Strategy<Value = FockElement> {
    let basis = partition::enumerate(n);
    prop::collection::vec(rational(), basis.len())
        .prop_map(move |cs| FockElement::from_terms(n, basis.clone().into_iter().zip(cs)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn revert_round_trips(f in class_series(9)) {
        let phi = f.shift_up();
        let psi = phi.revert().unwrap();
        let x = TruncatedSeries::x(phi.order());
        prop_assert_eq!(TruncatedSeries::compose(&phi, &psi).unwrap(), x.clone());
        prop_assert_eq!(TruncatedSeries::compose(&psi, &phi).unwrap(), x);
    }

    #[test]
    fn lagrange_functional_equation(f in class_series(13)) {
        let n = 14;
        let g = TruncatedSeries::lagrange_g(&f, n).unwrap();
        let inner = f.recip().unwrap().shift_up().truncate(n - 1).unwrap();
        let lhs = TruncatedSeries::compose(&g.derivative(), &inner).unwrap();
        prop_assert_eq!(lhs, f.truncate(n - 1).unwrap());
    }

    #[test]
    fn even_series_give_odd_g(f in class_series(10)) {
        let g = tangent_g(&f, 11).unwrap();
        prop_assert!(g.coeff(1).is_one());
        for k in (0..=11).step_by(2) {
            prop_assert!(g.coeff(k).is_zero());
        }
    }

    #[test]
    fn exp_linear_turns_sums_into_products(a in no_constant(6), b in no_constant(6)) {
        let lhs = FockElement::exp_linear(&a.add(&b).unwrap(), 6).unwrap();
        let rhs = FockElement::exp_linear(&a, 6).unwrap().mul(&FockElement::exp_linear(&b, 6).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classes_are_normalized(f in class_series(6)) {
        let spec = ClassSpec::new(f, Target::Tautological).unwrap();
        let class = hilbert_class(&spec, 6).unwrap();
        prop_assert_eq!(class.coeff(&partition::Partition::empty()), Some(&Rational::one()));
        let unit = FockElement::unit(4);
        prop_assert_eq!(class.component(4).unwrap().degree_component(0).with_bound(4).unwrap(), unit);
    }

    #[test]
    fn cup_is_commutative_and_bilinear(a in weight_n_element(4), b in weight_n_element(4), c in weight_n_element(4)) {
        let ab = cup(&a, &b, 4).unwrap();
        prop_assert_eq!(&ab, &cup(&b, &a, 4).unwrap());
        let lhs = cup(&a, &b.add(&c).unwrap(), 4).unwrap();
        prop_assert_eq!(lhs, ab.add(&cup(&a, &c, 4).unwrap()).unwrap());
    }
}
