use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qcongruence_core::algebra::{Polynomial, RationalFunction};
use qcongruence_core::cyclotomic::cyclotomic;
use qcongruence_core::qseries::{central_q_sum, thm1_rhs};
use qcongruence_core::verify::{check_congruence, verify_thm1, verify_wei_cc, SpecializationSampler, Status};

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-20i64..=20, 0..8).prop_map(|c| Polynomial::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adding_a_multiple_of_the_modulus_passes(f in small_poly(), g in small_poly(), n in 2usize..12) {
        let m = (*cyclotomic(n).unwrap()).clone();
        let base = RationalFunction::from_poly(f);
        let shifted = &base + &RationalFunction::from_poly(&g * &m);
        prop_assert_eq!(check_congruence(&base, &shifted, &m).unwrap().status, Status::Pass);
    }

    #[test]
    fn remainder_is_reduced(f in small_poly(), n in 2usize..12) {
        let m = (*cyclotomic(n).unwrap()).clone();
        let v = check_congruence(&RationalFunction::from_poly(f), &RationalFunction::zero(), &m).unwrap();
        prop_assert!(v.remainder.degree() < m.degree());
        prop_assert_eq!(v.status == Status::Pass, v.remainder.is_zero());
    }

    #[test]
    fn sampler_is_reproducible(seed in any::<u64>()) {
        let (mut a, mut b) = (SpecializationSampler::new(seed), SpecializationSampler::new(seed));
        for _ in 0..16 {
            let x = a.next_point(2);
            prop_assert_eq!(&x, &b.next_point(2));
            prop_assert!(x.iter().all(|r| *r.numer() != 0.into() && r.numer().magnitude() <= &9u32.into()));
        }
    }
}

#[test]
fn trial_reports_depend_only_on_seed() {
    let run = |seed| verify_wei_cc(5, 6, &mut SpecializationSampler::new(seed)).unwrap();
    let (a, b) = (run(11), run(11));
    assert_eq!(a.verdicts, b.verdicts);
    assert_eq!(a.rejections, b.rejections);
    assert!(a.all_pass());
}

// Advisory soundness cross-check: a passing congruence mod Φ_n has a
// numerator vanishing at e^{2πi/n}, evaluated here in 512-bit fixed point.

const BITS: u64 = 512;

fn scale() -> BigInt {
    BigInt::one() << BITS
}

fn atan_inv(x: i64) -> BigInt {
    let s = scale();
    let x2 = BigInt::from(x * x);
    let mut power = &s / x;
    let mut sum = BigInt::zero();
    let mut k = 0i64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `(cos θ, sin θ)` for `θ = 2π/n`, scaled by `2^BITS`.
fn primitive_root(n: usize) -> (BigInt, BigInt) {
    let s = scale();
    let pi = atan_inv(5) * 16 - atan_inv(239) * 4;
    let theta = pi * 2 / n as i64;
    let (mut cos, mut sin) = (BigInt::zero(), BigInt::zero());
    let mut term = s.clone();
    let mut k = 0i64;
    while !term.is_zero() {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        term = term * &theta / &s / k;
    }
    (cos, sin)
}

fn integer_coefficients(p: &Polynomial) -> Vec<BigInt> {
    let coeffs = p.coeffs();
    let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// `|Re|, |Im|` of `p(e^{2πi/n})` divided by the coefficient norm, as
/// fixed-point values.
fn residual_at_root(p: &Polynomial, n: usize) -> (BigInt, BigInt) {
    let s = scale();
    let (c, d) = primitive_root(n);
    let coeffs = integer_coefficients(p);
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for a in coeffs.iter().rev() {
        let r = (&re * &c - &im * &d) / &s;
        let i = (&re * &d + &im * &c) / &s;
        re = r + a * &s;
        im = i;
    }
    let norm: BigInt = coeffs.iter().map(|a| a.abs()).sum::<BigInt>().max(BigInt::one());
    ((re / &norm).abs(), (im / &norm).abs())
}

#[test]
fn passing_congruences_vanish_at_a_primitive_root() {
    let tolerance = scale() / BigInt::from(10u64).pow(20);
    for n in [5usize, 9, 13, 17] {
        let diff = &central_q_sum(n).unwrap() - &thm1_rhs(n).unwrap();
        assert_eq!(verify_thm1(n).unwrap().status, Status::Pass);
        let (re, im) = residual_at_root(diff.numer(), n);
        assert!(re < tolerance && im < tolerance, "n = {n}");
    }
    // control: a perturbed right side does not vanish there
    let diff = &(&central_q_sum(5).unwrap() - &thm1_rhs(5).unwrap()) - &RationalFunction::q();
    let (re, im) = residual_at_root(diff.numer(), 5);
    assert!(re > tolerance || im > tolerance);
}
