//! Property tests for the structural invariants.

use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;

use etaconv::algebra::AlgElem;
use etaconv::coeff::{Coefficient, Domain};
use etaconv::io;
use etaconv::numfield::{NFElem, NumberField};
use etaconv::series::{ArithSeries, PowerSeries};

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn arb_nf_elem() -> impl Strategy<Value = NFElem> {
    (arb_rational(), arb_rational()).prop_map(|(a, b)| NFElem::from_coords(vec![a, b]))
}

fn arb_alg_elem() -> impl Strategy<Value = AlgElem> {
    vec((arb_rational(), arb_rational()), 1..5).prop_map(|pairs| {
        let field = NumberField::rationals();
        let terms = pairs.into_iter().map(|(e, c)| {
            (NFElem::from_coords(vec![e]), Coefficient::Rational(c))
        });
        AlgElem::from_terms(field, Domain::Rational, terms).unwrap()
    })
}

fn arb_series(n: usize) -> impl Strategy<Value = ArithSeries> {
    vec(arb_rational(), n).prop_map(move |coeffs| {
        ArithSeries::from_coeffs(
            Domain::Rational,
            coeffs.into_iter().map(Coefficient::Rational).collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_field_axioms(a in arb_nf_elem(), b in arb_nf_elem(), c in arb_nf_elem()) {
        let k = NumberField::quadratic(2).unwrap();
        prop_assert_eq!(k.add(&a, &b), k.add(&b, &a));
        prop_assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        if !a.is_zero() {
            let inv = k.inv(&a).unwrap();
            prop_assert_eq!(k.mul(&a, &inv), k.one());
        }
    }

    #[test]
    fn trace_is_linear(a in arb_nf_elem(), b in arb_nf_elem(), s in arb_rational(), t in arb_rational()) {
        let k = NumberField::quadratic(2).unwrap();
        let sa = NFElem::from_coords(a.coords().iter().map(|c| c * &s).collect());
        let tb = NFElem::from_coords(b.coords().iter().map(|c| c * &t).collect());
        let lhs = k.trace(&k.add(&sa, &tb));
        let rhs = &s * k.trace(&a) + &t * k.trace(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_of_products_multiply(a in arb_nf_elem(), b in arb_nf_elem()) {
        let k = NumberField::quadratic(2).unwrap();
        prop_assume!(!a.is_zero() && !b.is_zero());
        let lhs = k.sign_of(&k.mul(&a, &b)).unwrap();
        let rhs = k.sign_of(&a).unwrap().product(&k.sign_of(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_commute_and_trace_multiplies(f in arb_alg_elem(), g in arb_alg_elem()) {
        prop_assert_eq!(f.cauchy_product(&g).unwrap(), g.cauchy_product(&f).unwrap());
        prop_assert_eq!(f.dirichlet_product(&g).unwrap(), g.dirichlet_product(&f).unwrap());
        let expected = f.coeff_sum().mul(&g.coeff_sum());
        prop_assert_eq!(f.cauchy_product(&g).unwrap().coeff_sum(), expected.clone());
        prop_assert_eq!(f.dirichlet_product(&g).unwrap().coeff_sum(), expected);
    }

    #[test]
    fn grading_reassembles(f in arb_alg_elem()) {
        let graded = f.grade().unwrap();
        prop_assert_eq!(graded.reassemble().unwrap(), f);
    }

    #[test]
    fn dirichlet_inverse_round_trip(mut f in arb_series(48)) {
        f.set(1, Coefficient::from_i64(1));
        let inv = f.dinv().unwrap();
        prop_assert_eq!(f.dconv(&inv).unwrap(), ArithSeries::epsilon(48));
        let back = inv.dinv().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn coprime_inverse_round_trip(mut f in arb_series(48)) {
        f.set(1, Coefficient::from_i64(1));
        let inv = f.coprime_inv().unwrap();
        prop_assert_eq!(f.coprime_conv(&inv).unwrap(), ArithSeries::epsilon(48));
        prop_assert_eq!(inv.coprime_inv().unwrap(), f);
    }

    #[test]
    fn convolutions_agree_at_squarefree_indices(f in arb_series(30), g in arb_series(30)) {
        // At squarefree n every factorization is coprime, so the two
        // convolutions coincide there for arbitrary inputs.
        let full = f.dconv(&g).unwrap();
        let coprime = f.coprime_conv(&g).unwrap();
        for n in [1usize, 2, 3, 5, 6, 7, 10, 14, 15, 21, 22, 26, 30] {
            prop_assert_eq!(full.get(n), coprime.get(n));
        }
    }

    #[test]
    fn power_series_inverse_round_trip(coeffs in vec(arb_rational(), 2..32)) {
        let mut coeffs: Vec<Coefficient> =
            coeffs.into_iter().map(Coefficient::Rational).collect();
        coeffs[0] = Coefficient::from_i64(1);
        let f = PowerSeries::new(Domain::Rational, coeffs).unwrap();
        let inv = f.invert().unwrap();
        prop_assert_eq!(f.mul(&inv).unwrap(), PowerSeries::one(f.order(), Domain::Rational));
        prop_assert_eq!(inv.invert().unwrap(), f);
    }

    #[test]
    fn elem_json_round_trip(f in arb_alg_elem()) {
        let v = io::elem_to_json(&f, None);
        prop_assert_eq!(io::elem_from_json(&v).unwrap(), f);
    }

    #[test]
    fn series_csv_round_trip(f in arb_series(24)) {
        let text = io::series_to_csv(&f, None);
        prop_assert_eq!(io::series_from_csv(&text).unwrap(), f);
    }
}
