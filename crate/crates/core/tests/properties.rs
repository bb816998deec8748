use airyherm::exactnum::TruncatedSeries;
use airyherm::hermite::{gh_pde_residual_exact, gould_hopper, hermite_values, HermiteConvention};
use airyherm::lacunary::{verify_lacunary, LacunaryCase};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const ORDER: usize = 8;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn series(coeffs: Vec<(i64, i64)>) -> TruncatedSeries<BigRational> {
    TruncatedSeries::with_order(coeffs.into_iter().map(|(n, d)| q(n, d)).collect(), ORDER)
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 1..=ORDER)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_commutative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (series(a), series(b), series(c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_inverts_multiplication(a in coeffs(), b in coeffs(), c0 in 1i64..=7) {
        let mut b = series(b).into_coeffs();
        b[0] = q(c0, 1);
        let b = TruncatedSeries::with_order(b, ORDER);
        let a = series(a);
        prop_assert_eq!((&a * &b).divide(&b).unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(a in coeffs()) {
        let mut c = series(a).into_coeffs();
        c[0] = q(1, 1);
        let s = TruncatedSeries::with_order(c, ORDER);
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn exp_is_a_homomorphism(a in coeffs(), b in coeffs()) {
        let zero_const = |v: Vec<(i64, i64)>| {
            let mut c = series(v).into_coeffs();
            c[0] = q(0, 1);
            TruncatedSeries::with_order(c, ORDER)
        };
        let (a, b) = (zero_const(a), zero_const(b));
        prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
    }

    #[test]
    fn composition_with_the_variable_is_identity(a in coeffs()) {
        let a = series(a);
        prop_assert_eq!(a.compose(&TruncatedSeries::variable(ORDER)).unwrap(), a);
    }

    #[test]
    fn gould_hopper_solves_its_equation(n in 2usize..=7, j in 0usize..=30) {
        prop_assert!(gh_pde_residual_exact::<BigRational>(n, j).unwrap().is_zero());
    }

    #[test]
    fn gould_hopper_two_is_scaled_hermite(j in 0usize..=16, x in rational()) {
        // H^{(2)}_j(-1/2, x) = He_j(x)
        let gh = gould_hopper::<BigRational>(2, j).unwrap().eval(&q(-1, 2), &x);
        let he = hermite_values(HermiteConvention::Probabilists, j, &x)[j].clone();
        prop_assert_eq!(gh, he);
    }

    #[test]
    fn lacunary_identity_at_random_points(u in rational()) {
        let v = verify_lacunary(&LacunaryCase::new(u, 6).unwrap()).unwrap();
        prop_assert!(v.pass);
        prop_assert_eq!(v.first_mismatch, None);
    }
}
