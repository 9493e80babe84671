use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qcongruence_core::padic::{
    harmonic2, padic_gamma, padic_gamma_derivative, residue_of_rational, PadicResidue, DEFAULT_GUARD,
};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn functional_equation() {
    for p in [5u64, 7, 11, 13] {
        for k in 1..=4u32 {
            let top = p.pow(k);
            // every m for small moduli, a stride otherwise
            let stride = (top / 400).max(1);
            let mut m = 1;
            while m < top {
                let g = padic_gamma(&r(m as i64, 1), p, k).unwrap();
                let next = padic_gamma(&r(m as i64 + 1, 1), p, k).unwrap();
                let factor = if m % p == 0 { -1 } else { -(m as i64) };
                assert_eq!(next, &PadicResidue::from_i64(p, k, factor) * &g, "p={p} k={k} m={m}");
                m += stride;
            }
        }
    }
}

#[test]
fn gamma_at_one() {
    for p in [3u64, 5, 7, 11, 13, 97] {
        for k in 1..=5 {
            assert_eq!(padic_gamma(&r(1, 1), p, k).unwrap(), PadicResidue::from_i64(p, k, -1));
        }
    }
}

#[test]
fn reflection_at_one_half() {
    for p in [5u64, 7, 11, 13] {
        for k in 1..=3 {
            let g = padic_gamma(&r(1, 2), p, k).unwrap();
            let sign = if ((p + 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(g.pow(2), PadicResidue::from_i64(p, k, sign), "p={p} k={k}");
        }
    }
}

#[test]
fn derivatives_used_by_the_drivers_are_stable() {
    let x = r(1, 4);
    for p in [5u64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97] {
        for k in [1, 3] {
            for order in [1, 2] {
                padic_gamma_derivative(&x, order, p, k, DEFAULT_GUARD)
                    .unwrap_or_else(|e| panic!("p={p} k={k} order={order}: {e}"));
            }
        }
    }
}

#[test]
fn wang_pan_lhs_is_the_harmonic_number() {
    assert_eq!(harmonic2(3).value, r(49, 36));
    assert_eq!(residue_of_rational(&harmonic2(3).value, 13, 1).unwrap().value(), &BigInt::from(49 * 4 % 13));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn representative_independence(
        p in prop::sample::select(vec![5u64, 7, 11, 13]),
        n in -500i64..500,
        d in 1i64..60,
        k in 1u32..4,
    ) {
        prop_assume!(d % p as i64 != 0);
        let x = r(n, d);
        let fine = padic_gamma(&x, p, k + 1).unwrap().reduce(k);
        prop_assert_eq!(fine, padic_gamma(&x, p, k).unwrap());
    }

    #[test]
    fn harmonic_recurrence(m in 1usize..200) {
        let step = &harmonic2(m).value - &harmonic2(m - 1).value;
        prop_assert_eq!(step, r(1, (m * m) as i64));
    }

    #[test]
    fn residue_is_a_ring_map(a in -99i64..99, b in 1i64..99, c in -99i64..99, d in 1i64..99) {
        let p = 7;
        prop_assume!(b % 7 != 0 && d % 7 != 0);
        let (x, y) = (r(a, b), r(c, d));
        let rx = residue_of_rational(&x, p, 3).unwrap();
        let ry = residue_of_rational(&y, p, 3).unwrap();
        prop_assert_eq!(residue_of_rational(&(&x + &y), p, 3).unwrap(), &rx + &ry);
        prop_assert_eq!(residue_of_rational(&(&x * &y), p, 3).unwrap(), &rx * &ry);
    }
}
