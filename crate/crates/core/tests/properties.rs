use intpoly::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::strategy::Strategy;

/// `s_j` as the sum over all `j`-subsets of products, by bitmask enumeration.
fn subset_symmetric(roots: &[i64]) -> Vec<BigInt> {
    let n = roots.len();
    let mut s = vec![BigInt::zero(); n];
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        let prod: BigInt = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| BigInt::from(roots[i]))
            .product();
        s[size - 1] += prod;
    }
    s
}

fn nonzero_root() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

fn root_vec(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(nonzero_root(), 1..=max_len)
}

fn monic(max_degree: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-1000i64..=1000, 0..=max_degree).prop_map(|tail| {
        let mut c = vec![1i64];
        c.extend(tail);
        IntPolynomial::from_i64s(&c).unwrap()
    })
}

#[test]
fn frozen_oracle_values() {
    // expansion oracle: s = [6, 11, 6] for {1, 2, 3}
    assert_eq!(
        subset_symmetric(&[1, 2, 3]),
        vec![BigInt::from(6), BigInt::from(11), BigInt::from(6)]
    );
    let p = from_roots(&RootMultiset::from_i64s(&[1, 2, 3]).unwrap());
    assert_eq!(p, IntPolynomial::from_i64s(&[1, -6, 11, -6]).unwrap());
    // convolution oracle for (x^2 - 3x + 2)(x + 1)
    let lhs = [1i64, -3, 2];
    let rhs = [1i64, 1];
    let mut conv = [0i64; 4];
    for (i, a) in lhs.iter().enumerate() {
        for (k, b) in rhs.iter().enumerate() {
            conv[i + k] += a * b;
        }
    }
    assert_eq!(conv, [1, -2, -1, 2]);
}

proptest! {
    #[test]
    fn roots_evaluate_to_zero(roots in root_vec(5)) {
        let r = RootMultiset::from_i64s(&roots).unwrap();
        let p = from_roots(&r);
        prop_assert_eq!(p.degree(), roots.len());
        prop_assert!(p.coeff(0).is_one());
        for x in r.roots() {
            prop_assert!(p.evaluate(x).is_zero());
        }
    }

    #[test]
    fn symmetric_functions_match_coefficients(roots in root_vec(6)) {
        let r = RootMultiset::from_i64s(&roots).unwrap();
        let s = symmetric_functions(&r);
        prop_assert_eq!(s.values(), &subset_symmetric(&roots)[..]);
        let p = from_roots(&r);
        for j in 1..=roots.len() {
            let signed = if j % 2 == 0 { s.get(j).unwrap().clone() } else { -s.get(j).unwrap() };
            prop_assert_eq!(&signed, p.coeff(j));
        }
    }

    #[test]
    fn union_is_product(a in root_vec(4), b in root_vec(4)) {
        let ra = RootMultiset::from_i64s(&a).unwrap();
        let rb = RootMultiset::from_i64s(&b).unwrap();
        prop_assert_eq!(from_roots(&ra.union(&rb)), multiply(&from_roots(&ra), &from_roots(&rb)));
    }

    #[test]
    fn sign_flip_is_an_involution(p in monic(8)) {
        prop_assert_eq!(sign_flip(&sign_flip(&p)), p);
    }

    #[test]
    fn sign_flip_negates_roots(roots in root_vec(5)) {
        let r = RootMultiset::from_i64s(&roots).unwrap();
        prop_assert_eq!(sign_flip(&from_roots(&r)), from_roots(&r.negated()));
    }

    #[test]
    fn evaluation_matches_power_sum(p in monic(6), x in -20i64..=20) {
        let n = p.degree();
        let x = BigInt::from(x);
        let direct: BigInt = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * x.pow((n - i) as u32))
            .sum();
        prop_assert_eq!(evaluate(&p, &x), direct);
    }

    #[test]
    fn reports_are_reproducible(p in monic(7)) {
        prop_assume!(p.degree() >= 2);
        prop_assert_eq!(check_all(&p).unwrap(), check_all(&p).unwrap());
    }

    #[test]
    fn member_polynomials_pass_every_check(roots in prop::collection::vec(
        prop_oneof![-40i64..=-1, 1i64..=40], 2..=7))
    {
        let p = from_roots(&RootMultiset::from_i64s(&roots).unwrap());
        let report = check_all(&p).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn alpha_radius_is_the_exact_floor(n in 2usize..=12, m in 0i64..=10_000) {
        let cert = root_bound_alpha(n, &BigInt::from(m)).unwrap();
        let r = BigInt::from(cert.radius_value().unwrap().clone());
        let a4 = BigInt::from(alpha(n).unwrap().fourth_power().clone());
        let target = a4 * BigInt::from(m).pow(4);
        prop_assert!(r.pow(4) <= target);
        prop_assert!((r + 1u32).pow(4) > target);
    }

    #[test]
    fn last_pair_search_agrees_with_radius_search(roots in prop::collection::vec(
        prop_oneof![-5i64..=-1, 1i64..=5], 2..=4))
    {
        let p = from_roots(&RootMultiset::from_i64s(&roots).unwrap());
        let n = p.degree();
        let c = PairConstraint::new(n, n - 1, p.coeff(n - 1).clone(), p.coeff(n).clone()).unwrap();
        let by_divisors = enumerate_last_pair(&c).unwrap();
        let by_radius = enumerate_pair_with(&c, &SearchOptions {
            strategy: intpoly::Strategy::RadiusSearch,
            ..SearchOptions::default()
        }).unwrap();
        prop_assert_eq!(&by_divisors.solutions, &by_radius.solutions);
        prop_assert!(by_divisors.solutions.iter().any(|s| s.poly == p));
    }
}

#[test]
fn multiplier_norms_and_constant_terms() {
    for m in 1..=30i64 {
        let f = multiplier_f(m).unwrap();
        assert_eq!(f.degree(), m as usize);
        assert_eq!(
            f.l1_norm(),
            BigInt::one() << ((m + 1) / 2) as usize,
            "m = {m}"
        );
        assert!(f.constant_term().abs().is_one());
    }
}

#[test]
fn multiplier_matches_repeated_products() {
    let minus_one_plus_one = IntPolynomial::from_i64s(&[1, 0, -1]).unwrap();
    for m in 3..=20 {
        let expected = multiplier_f(m - 2).unwrap().multiply(&minus_one_plus_one);
        assert_eq!(multiplier_f(m).unwrap(), expected);
    }
}

#[test]
fn family_polynomials_share_odd_coefficients() {
    let sets: Vec<Vec<i64>> = vec![vec![1, 6], vec![2, 3], vec![1, 1], vec![5, 7]];
    let polys: Vec<IntPolynomial> = sets
        .iter()
        .map(|s| family(&s.iter().map(|&r| BigInt::from(r)).collect::<Vec<_>>()).unwrap())
        .collect();
    for p in &polys {
        for i in (1..=p.degree()).step_by(2) {
            assert!(p.coeff(i).is_zero());
        }
    }
    for i in 0..polys.len() {
        for k in i + 1..polys.len() {
            assert_ne!(polys[i], polys[k]);
        }
    }
    // negative entries give the same polynomial as their absolute values
    assert_eq!(
        family(&[BigInt::from(-2), BigInt::from(3)]).unwrap(),
        family(&[BigInt::from(2), BigInt::from(3)]).unwrap()
    );
}

#[test]
fn chain_complements_follow_fibonacci() {
    let counts: Vec<ChainCount> = (2..=60).map(|n| chain_count_exact(n).unwrap()).collect();
    assert_eq!(counts[0].complement(), 2u32.into());
    assert_eq!(counts[1].complement(), 3u32.into());
    for w in counts.windows(3) {
        assert_eq!(w[2].complement(), w[0].complement() + w[1].complement());
    }
    for w in counts.windows(2) {
        assert!(w[1].good > w[0].good);
        assert!(w[1].ratio() >= w[0].ratio());
    }
}
