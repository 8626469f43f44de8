mod common;

use common::{binomial_hankel_oracle, cofactor_det, convolve_one_minus_x};
use hoggatt_hankel::det::determinant_fraction_free;
use hoggatt_hankel::exact::{rat, rat_frac, rising_factorial};
use hoggatt_hankel::hankel::{build_matrix, d, HankelParams};
use hoggatt_hankel::hoggatt::{
    hoggatt_binomial, l_factorization, row_genfun_hypergeometric, HoggattParams,
};
use hoggatt_hankel::ssyt::ssyt_count_bruteforce;
use hoggatt_hankel::{Gamma, Integer, Poly, Rational, Series};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| rat_frac(p, q))
}

fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer as _;
    q.denom() > &BigInt::zero() && q.numer().gcd(q.denom()) == BigInt::from(1)
        || (q.numer().is_zero() && *q.denom() == BigInt::from(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_ops_stay_canonical(a in small_rational(), b in small_rational()) {
        prop_assert!(is_canonical(&(&a + &b)));
        prop_assert!(is_canonical(&(&a - &b)));
        prop_assert!(is_canonical(&(&a * &b)));
        if !b.is_zero() {
            prop_assert!(is_canonical(&(&a / &b)));
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }
}

proptest! {
    #[test]
    fn rising_factorial_reciprocity(p in -30i64..30, q in 1i64..7, r in 1i64..=6) {
        let x = rat_frac(p, q);
        let down = rising_factorial(&x, -r);
        let up = rising_factorial(&(&x - rat(r)), r);
        if let (Ok(down), Ok(up)) = (down, up) {
            prop_assert_eq!(down * up, rat(1));
        }
    }

    #[test]
    fn gamma_round_trip(gammas in prop::collection::vec(-20i64..20, 1..6), extra in 0usize..3) {
        let n = 2 * (gammas.len() - 1) + extra.min(1);
        let g = Gamma { gammas: gammas.iter().map(|&v| rat(v)).collect(), center: n };
        let p = g.reconstruct();
        prop_assert!(p.is_palindromic(n));
        prop_assert_eq!(p.gamma_decompose(n).unwrap(), g);
    }

    #[test]
    fn one_minus_x_routes_agree(coeffs in prop::collection::vec(-50i64..50, 1..15), n in 0u64..6) {
        let c: Vec<Rational> = coeffs.iter().map(|&v| rat(v)).collect();
        let s = Series::from_coeffs(c.clone()).unwrap();
        let diff = s.scale_by_one_minus_x_power(n as usize);
        prop_assert_eq!(diff.coeffs(), &convolve_one_minus_x(&c, n)[..]);
        prop_assert_eq!(diff.divide_by_one_minus_x_power(n as usize), s);
        // polynomial route, compared through its truncation
        let poly = Poly::from_coeffs(c.clone()).scale_by_one_minus_x_power(n as usize);
        for (i, v) in diff.coeffs().iter().enumerate() {
            prop_assert_eq!(&poly.coeff(i), v);
        }
    }

    #[test]
    fn interpolation_reproduces(coeffs in prop::collection::vec(-9i64..9, 1..8), fresh in 20i64..40) {
        let p = Poly::from_coeffs(coeffs.iter().map(|&v| rat(v)).collect());
        let pts: Vec<(Rational, Rational)> = (0..coeffs.len() as i64)
            .map(|x| (rat_frac(x * 3 - 5, 2), p.eval(&rat_frac(x * 3 - 5, 2))))
            .collect();
        let q = Poly::interpolate(&pts).unwrap();
        prop_assert_eq!(&q, &p);
        for (x, y) in &pts {
            prop_assert_eq!(&q.eval(x), y);
        }
        prop_assert_eq!(q.eval(&rat(fresh)), p.eval(&rat(fresh)));
    }

    #[test]
    fn bareiss_matches_cofactor(n in 1usize..=5, seed in prop::collection::vec(-6i64..6, 25)) {
        let m: Vec<Vec<Integer>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(seed[i * 5 + j])).collect())
            .collect();
        prop_assert_eq!(determinant_fraction_free(&m), cofactor_det(&m));
    }

    #[test]
    fn hankel_structure(k in 0u64..15, m in 0u64..8, r in 1usize..6, s in 1u64..4) {
        let h = build_matrix(HankelParams::new(k, m, r, s).unwrap()).unwrap();
        prop_assert!(h.is_hankel());
        prop_assert_eq!(h.determinant(), cofactor_det(&h.entries));
    }
}

#[test]
fn hoggatt_routes_agree() {
    for r in 1..=4u64 {
        for n in 0..=10i64 {
            let row_sum: Integer = (0..=n).map(|k| hoggatt_binomial(n, k, r)).sum();
            assert_eq!(
                row_genfun_hypergeometric(n as u64, r, &rat(1)),
                Rational::from_integer(row_sum)
            );
            for k in 0..=n {
                let v = hoggatt_binomial(n, k, r);
                let p = HoggattParams::new(n as u64, k, r).unwrap();
                let prod = l_factorization(&p)
                    .unwrap()
                    .into_iter()
                    .fold(rat(1), |acc, f| acc * f.value);
                assert_eq!(prod, Rational::from_integer(v.clone()), "n={n} k={k} r={r}");
                if n >= 1 && k >= 1 && (k as u64) * r <= 16 {
                    assert_eq!(ssyt_count_bruteforce(n as u64, k as u64, r).unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn hoggatt_symmetry() {
    for r in 1..=5 {
        for n in 0..=20i64 {
            for k in 0..=n {
                assert_eq!(hoggatt_binomial(n, k, r), hoggatt_binomial(n, n - k, r));
            }
        }
    }
}

#[test]
fn hoggatt_column_is_polynomial_in_n() {
    // n -> <n over k>_r has degree k*r
    for r in 1..=3u64 {
        for k in 0..=3i64 {
            let deg = (k as u64 * r) as i64;
            let pts: Vec<(Rational, Rational)> = (0..=deg)
                .map(|n| (rat(n), Rational::from_integer(hoggatt_binomial(n, k, r))))
                .collect();
            let p = Poly::interpolate(&pts).unwrap();
            assert_eq!(p.degree().map(|d| d as i64), Some(deg));
            for n in deg + 1..deg + 6 {
                assert_eq!(
                    p.eval(&rat(n)),
                    Rational::from_integer(hoggatt_binomial(n, k, r))
                );
            }
        }
    }
}

#[test]
fn binomial_hankel_vs_oracle() {
    for r in 1..=4usize {
        for m in 0..=6u64 {
            for k in 0..=8u64 {
                assert_eq!(
                    d(HankelParams::binomial(k, m, r)),
                    binomial_hankel_oracle(k, m, r)
                );
            }
        }
    }
}
