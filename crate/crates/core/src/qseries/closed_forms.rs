//! The specific sums and closed forms: both q-Whipple formulas, the central
//! sum shared by the three cyclotomic supercongruences, their right-hand
//! sides, and the two-parameter sum with its glued closed form `Ω_n(a,b)`.

use num_traits::{One, Zero};

use crate::algebra::{BigRational, Polynomial, RationalFunction};

use super::series::{phi_series, q_integer, q_pochhammer, q_pochhammer_product, PhiSeriesSpec};
use super::{QExpression, QSeriesError};

fn qp(e: i64) -> RationalFunction {
    RationalFunction::q_pow(e)
}

fn konst(c: &BigRational) -> RationalFunction {
    RationalFunction::constant(c.clone())
}

fn mono(c: &BigRational, e: i64) -> RationalFunction {
    RationalFunction::monomial(c.clone(), e)
}

fn base(e: usize) -> Polynomial {
    Polynomial::q_power(e)
}

/// `x^e` for a rational function and signed exponent.
fn rf_pow(x: &RationalFunction, e: i64) -> Result<RationalFunction, QSeriesError> {
    let e = i32::try_from(e).map_err(|_| QSeriesError::DegenerateParameters("exponent overflow".into()))?;
    Ok(x.pow(e)?)
}

fn checked_quotient(
    numer: &RationalFunction,
    denom: &RationalFunction,
    what: &str,
) -> Result<RationalFunction, QSeriesError> {
    if denom.is_zero() {
        return Err(QSeriesError::ZeroTermDenominator {
            k: 0,
            parameter: what.into(),
        });
    }
    Ok(numer.checked_div(denom)?)
}

fn require_odd(n: usize) -> Result<(), QSeriesError> {
    if n % 2 == 1 {
        Ok(())
    } else {
        Err(QSeriesError::WrongResidueClass { n, expected: "n odd" })
    }
}

fn require_one_mod_four(n: usize) -> Result<usize, QSeriesError> {
    if n % 4 == 1 {
        Ok((n - 1) / 4)
    } else {
        Err(QSeriesError::WrongResidueClass {
            n,
            expected: "n ≡ 1 (mod 4)",
        })
    }
}

fn require_nonzero(x: &BigRational, name: &str) -> Result<(), QSeriesError> {
    if x.is_zero() {
        Err(QSeriesError::DegenerateParameters(format!("{name} = 0")))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// q-Whipple formulas

/// Both sides of Andrews' q-Whipple formula in base `Q`:
///
/// ```text
/// 4φ3[Q^{-n}, Q^{1+n}, b, -b; -Q, c, b²Q/c; Q, Q]
///     = Q^{n(n+1)/2} (b²Q^{1-n}/c, cQ^{-n}; Q²)_n / (b²Q/c, c; Q)_n
/// ```
pub fn whipple_a_sides_general(
    n: usize,
    q_base: &Polynomial,
    b: &RationalFunction,
    c: &RationalFunction,
) -> Result<(QExpression, QExpression), QSeriesError> {
    if c.is_zero() {
        return Err(QSeriesError::DegenerateParameters("c = 0".into()));
    }
    if b.is_zero() {
        return Err(QSeriesError::DegenerateParameters("b = 0".into()));
    }
    let big_q = RationalFunction::from_poly(q_base.clone());
    let q_neg_n = rf_pow(&big_q, -(n as i64))?;
    let b2 = b * b;
    let b2q_over_c = (&b2 * &big_q).checked_div(c)?;
    let spec = PhiSeriesSpec {
        upper: vec![q_neg_n.clone(), rf_pow(&big_q, n as i64 + 1)?, b.clone(), -b],
        lower: vec![-&big_q, c.clone(), b2q_over_c.clone()],
        base: q_base.clone(),
        argument: big_q.clone(),
        truncation: n,
    };
    let lhs = phi_series(&spec)?;

    let q2 = q_base.pow(2);
    let numer = &q_pochhammer(&(&b2q_over_c * &q_neg_n), &q2, n)
        * &q_pochhammer(&(c * &q_neg_n), &q2, n);
    let denom = &q_pochhammer(&b2q_over_c, q_base, n) * &q_pochhammer(c, q_base, n);
    let prefactor = rf_pow(&big_q, (n * (n + 1) / 2) as i64)?;
    let rhs = &prefactor * &checked_quotient(&numer, &denom, "rhs")?;
    Ok((lhs, rhs))
}

/// Andrews' q-Whipple formula in base `q` with rational `b`, `c`.
pub fn whipple_a_sides(
    n: usize,
    b: &BigRational,
    c: &BigRational,
) -> Result<(QExpression, QExpression), QSeriesError> {
    whipple_a_sides_general(n, &Polynomial::q(), &konst(b), &konst(c))
}

/// Both sides of Jain's q-Whipple formula in base `Q`:
///
/// ```text
/// 4φ3[a, Q/a, Q^{-n}, -Q^{-n}; c, Q^{1-2n}/c, -Q; Q, Q] = (ac, cQ/a; Q²)_n / (c; Q)_{2n}
/// ```
pub fn whipple_b_sides_general(
    n: usize,
    q_base: &Polynomial,
    a: &RationalFunction,
    c: &RationalFunction,
) -> Result<(QExpression, QExpression), QSeriesError> {
    if a.is_zero() {
        return Err(QSeriesError::DegenerateParameters("a = 0".into()));
    }
    if c.is_zero() {
        return Err(QSeriesError::DegenerateParameters("c = 0".into()));
    }
    let big_q = RationalFunction::from_poly(q_base.clone());
    let q_neg_n = rf_pow(&big_q, -(n as i64))?;
    let spec = PhiSeriesSpec {
        upper: vec![a.clone(), big_q.checked_div(a)?, q_neg_n.clone(), -&q_neg_n],
        lower: vec![
            c.clone(),
            rf_pow(&big_q, 1 - 2 * n as i64)?.checked_div(c)?,
            -&big_q,
        ],
        base: q_base.clone(),
        argument: big_q.clone(),
        truncation: n,
    };
    let lhs = phi_series(&spec)?;

    let q2 = q_base.pow(2);
    let numer = &q_pochhammer(&(a * c), &q2, n) * &q_pochhammer(&(c * &big_q).checked_div(a)?, &q2, n);
    let denom = q_pochhammer(c, q_base, 2 * n);
    let rhs = checked_quotient(&numer, &denom, "rhs")?;
    Ok((lhs, rhs))
}

/// Jain's q-Whipple formula in base `q` with rational `a`, `c`.
pub fn whipple_b_sides(
    n: usize,
    a: &BigRational,
    c: &BigRational,
) -> Result<(QExpression, QExpression), QSeriesError> {
    whipple_b_sides_general(n, &Polynomial::q(), &konst(a), &konst(c))
}

// ---------------------------------------------------------------------------
// The central sum and the cyclotomic right-hand sides

/// `Σ_{k=0}^{(n-1)/2} (q;q²)_k² (q²;q⁴)_k / ((q²;q²)_k² (q⁴;q⁴)_k) · q^{2k}`, odd `n`.
///
/// Built as the `4φ3[q, q, q, -q; q², q², -q²; q², q²]` it equals after
/// splitting `(q²;q⁴)_k = (q, -q; q²)_k` and `(q⁴;q⁴)_k = (q², -q²; q²)_k`.
pub fn central_q_sum(n: usize) -> Result<QExpression, QSeriesError> {
    require_odd(n)?;
    let spec = PhiSeriesSpec {
        upper: vec![qp(1), qp(1), qp(1), -qp(1)],
        lower: vec![qp(2), qp(2), -qp(2)],
        base: base(2),
        argument: qp(2),
        truncation: (n - 1) / 2,
    };
    phi_series(&spec)
}

/// `(q²;q⁴)_m² / (q⁴;q⁴)_m²`.
fn central_ratio(m: usize) -> QExpression {
    let r = q_pochhammer(&qp(2), &base(4), m)
        .checked_div(&q_pochhammer(&qp(4), &base(4), m))
        .expect("(q⁴;q⁴)_m is nonzero");
    &r * &r
}

/// Right side of the mod `Φ_n(q)³` congruence for `n ≡ 1 (mod 4)`:
/// `q^{(n-1)/2} (q²;q⁴)²_m/(q⁴;q⁴)²_m · {1 + 2[n]² Σ_{i=1}^{m} q^{4i-2}/[4i-2]²}`
/// with `m = (n-1)/4`.
pub fn thm1_rhs(n: usize) -> Result<QExpression, QSeriesError> {
    let m = require_one_mod_four(n)?;
    let mut inner = RationalFunction::zero();
    for i in 1..=m {
        let bracket = q_integer(4 * i - 2);
        inner = &inner + &qp(4 * i as i64 - 2).checked_div(&(&bracket * &bracket))?;
    }
    let qn = q_integer(n);
    let braces = &RationalFunction::one() + &(&(&qn * &qn) * &inner).scale(&BigRational::from_integer(2.into()));
    Ok(&(&qp(2 * m as i64) * &central_ratio(m)) * &braces)
}

/// Right side of the mod `Φ_n(q)²` congruence for odd `n`: zero when
/// `n ≡ 3 (mod 4)`, and `q^{(n-1)/2} (q²;q⁴)²_m/(q⁴;q⁴)²_m` when
/// `n ≡ 1 (mod 4)`.
///
/// The power of `q` is required: without it the congruence already fails at
/// `n = 5` (see [`guo_a_rhs_unshifted`]).
pub fn guo_a_rhs(n: usize) -> Result<QExpression, QSeriesError> {
    require_odd(n)?;
    if n % 4 == 3 {
        return Ok(RationalFunction::zero());
    }
    let m = (n - 1) / 4;
    Ok(&qp(2 * m as i64) * &central_ratio(m))
}

/// `(q²;q⁴)²_m/(q⁴;q⁴)²_m` alone, i.e. the `n ≡ 1 (mod 4)` branch without
/// the `q^{(n-1)/2}` factor. Kept as a negative control.
pub fn guo_a_rhs_unshifted(n: usize) -> Result<QExpression, QSeriesError> {
    let m = require_one_mod_four(n)?;
    Ok(central_ratio(m))
}

/// `[n] (q³;q⁴)_{(n-1)/2} / (q⁵;q⁴)_{(n-1)/2}` for `n ≡ 3 (mod 4)`.
pub fn guo_b_rhs(n: usize) -> Result<QExpression, QSeriesError> {
    if n % 4 != 3 {
        return Err(QSeriesError::WrongResidueClass {
            n,
            expected: "n ≡ 3 (mod 4)",
        });
    }
    let h = (n - 1) / 2;
    let ratio = q_pochhammer(&qp(3), &base(4), h).checked_div(&q_pochhammer(&qp(5), &base(4), h))?;
    Ok(&q_integer(n) * &ratio)
}

// ---------------------------------------------------------------------------
// Two-parameter sum

/// Series data for
/// `Σ_{k=0}^{(n-1)/2} (aq, q/a, q/b, -q/b; q²)_k / (q², q², -q², q²/b²; q²)_k · q^{2k}`
/// with parameters given as rational functions of `q`.
pub fn thm2_lhs_spec(
    n: usize,
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<PhiSeriesSpec, QSeriesError> {
    require_odd(n)?;
    if a.is_zero() {
        return Err(QSeriesError::DegenerateParameters("a = 0".into()));
    }
    if b.is_zero() {
        return Err(QSeriesError::DegenerateParameters("b = 0".into()));
    }
    let q1 = qp(1);
    let q_over_b = q1.checked_div(b)?;
    Ok(PhiSeriesSpec {
        upper: vec![a * &q1, q1.checked_div(a)?, q_over_b.clone(), -&q_over_b],
        lower: vec![qp(2), -qp(2), &q_over_b * &q_over_b],
        base: base(2),
        argument: qp(2),
        truncation: (n - 1) / 2,
    })
}

/// The two-parameter sum with rational `a`, `b`.
pub fn thm2_lhs(n: usize, a: &BigRational, b: &BigRational) -> Result<QExpression, QSeriesError> {
    phi_series(&thm2_lhs_spec(n, &konst(a), &konst(b))?)
}

/// `(b/q)^{(1-n)/2} (q², b²q²; q⁴)_m / (q⁴, q⁴/b²; q⁴)_m`, `m = (n-1)/4`: the
/// value of the two-parameter sum modulo `(1-aq^n)(a-q^n)`.
///
/// `(b/q)^{(1-n)/2}` is taken as `b^{-2m} q^{2m}`.
pub fn wei_bb_rhs(n: usize, b: &BigRational) -> Result<QExpression, QSeriesError> {
    let m = require_one_mod_four(n)?;
    require_nonzero(b, "b")?;
    let b2 = b * b;
    let numer = q_pochhammer_product(&[qp(2), mono(&b2, 2)], &base(4), m);
    let denom = q_pochhammer_product(&[qp(4), mono(&b2.recip(), 4)], &base(4), m);
    let prefactor = mono(&b2.recip().pow(m as i32), 2 * m as i64);
    Ok(&prefactor * &checked_quotient(&numer, &denom, "(q⁴, q⁴/b²; q⁴)")?)
}

/// `(aq³, q³/a; q⁴)_{(n-1)/2} / (q²;q²)_{n-1}`: the value of the
/// two-parameter sum modulo `(b - q^n)`.
pub fn wei_cc_rhs(n: usize, a: &BigRational) -> Result<QExpression, QSeriesError> {
    require_one_mod_four(n)?;
    require_nonzero(a, "a")?;
    let h = (n - 1) / 2;
    let numer = q_pochhammer_product(&[mono(a, 3), mono(&a.recip(), 3)], &base(4), h);
    let denom = q_pochhammer(&qp(2), &base(2), n - 1);
    Ok(numer.checked_div(&denom)?)
}

/// The CRT idempotents
/// `(b - q^n)(ab - 1 - a² + aq^n) / ((a-b)(1-ab))` and
/// `(1 - aq^n)(a - q^n) / ((a-b)(1-ab))`.
pub fn unit_coefficients(
    n: usize,
    a: &BigRational,
    b: &BigRational,
) -> Result<(QExpression, QExpression), QSeriesError> {
    let scale = (a - b) * (BigRational::one() - a * b);
    if scale.is_zero() {
        return Err(QSeriesError::DegenerateParameters("(a - b)(1 - ab) = 0".into()));
    }
    let inv = scale.recip();
    let qn = qp(n as i64);
    let first = &(&konst(b) - &qn) * &(&konst(&(a * b - BigRational::one() - a * a)) + &(&konst(a) * &qn));
    let [m1, m2, _] = thm2_modulus_factors(n, a, b);
    let second = RationalFunction::from_poly(&m1 * &m2);
    Ok((first.scale(&inv), second.scale(&inv)))
}

/// `Ω_n(a,b)`, the closed form of the two-parameter sum modulo
/// `(1-aq^n)(a-q^n)(b-q^n)`.
pub fn thm2_omega(n: usize, a: &BigRational, b: &BigRational) -> Result<QExpression, QSeriesError> {
    require_one_mod_four(n)?;
    require_nonzero(a, "a")?;
    require_nonzero(b, "b")?;
    let (c1, c2) = unit_coefficients(n, a, b)?;
    Ok(&(&c1 * &wei_bb_rhs(n, b)?) + &(&c2 * &wei_cc_rhs(n, a)?))
}

/// The three moduli `1 - aq^n`, `a - q^n`, `b - q^n` as polynomials.
pub fn thm2_modulus_factors(n: usize, a: &BigRational, b: &BigRational) -> [Polynomial; 3] {
    let qn = Polynomial::q_power(n);
    [
        &Polynomial::one() - &qn.scale(a),
        &Polynomial::constant(a.clone()) - &qn,
        &Polynomial::constant(b.clone()) - &qn,
    ]
}

/// Right side of the `b → 1` congruence modulo `Φ_n(q)(1-aq^n)(a-q^n)`:
/// `q^{(n-1)/2} A + q^{(n-1)/2} (1-aq^n)(a-q^n)/(1-a)² · {A - B(a)}` with
/// `A = (q²;q⁴)²_m/(q⁴;q⁴)²_m` and `B(a) = (aq², q²/a; q⁴)²_m/(q², q⁴; q⁴)²_m`.
pub fn wei_dd_rhs(n: usize, a: &BigRational) -> Result<QExpression, QSeriesError> {
    let m = require_one_mod_four(n)?;
    require_nonzero(a, "a")?;
    let one_minus_a = BigRational::one() - a;
    if one_minus_a.is_zero() {
        return Err(QSeriesError::DegenerateParameters("(1 - a)² = 0".into()));
    }
    let big_a = central_ratio(m);
    let big_b = braced_b(m, &konst(a))?;
    let [m1, m2, _] = thm2_modulus_factors(n, a, &BigRational::one());
    let coeff = RationalFunction::from_poly(&m1 * &m2).scale(&(&one_minus_a * &one_minus_a).recip());
    let shift = qp(2 * m as i64);
    Ok(&(&shift * &big_a) + &(&(&shift * &coeff) * &(&big_a - &big_b)))
}

/// `B(a) = (aq², q²/a; q⁴)²_m / (q², q⁴; q⁴)²_m` for a parameter that may
/// itself be a rational function (the limit check treats `a` as the variable).
pub(crate) fn braced_b(m: usize, a: &RationalFunction) -> Result<QExpression, QSeriesError> {
    let numer = q_pochhammer_product(&[a * &qp(2), qp(2).checked_div(a)?], &base(4), m);
    let denom = q_pochhammer_product(&[qp(2), qp(4)], &base(4), m);
    let r = numer.checked_div(&denom)?;
    Ok(&r * &r)
}

// ---------------------------------------------------------------------------
// Factorizations modulo (b - q^n)

/// One of the three product rewritings used to pass from the two-parameter
/// closed form to the symmetric one. `steps[0]` is the product, the last step
/// its rewritten form; consecutive steps are equal or congruent mod `b - q^n`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub label: &'static str,
    pub steps: Vec<QExpression>,
}

pub fn factorizations(
    n: usize,
    a: &BigRational,
    b: &BigRational,
) -> Result<[Factorization; 3], QSeriesError> {
    let m = require_one_mod_four(n)?;
    require_nonzero(a, "a")?;
    require_nonzero(b, "b")?;
    let ni = n as i64;
    let b4 = base(4);
    let b2inv = (b * b).recip();

    // (q²;q²)_{n-1}
    let f1 = vec![
        q_pochhammer(&qp(2), &base(2), n - 1),
        q_pochhammer_product(&[qp(2), qp(ni + 1), qp(4), qp(ni + 3)], &b4, m),
        &qp((ni - 1) * (3 * ni - 1) / 4)
            * &q_pochhammer_product(&[qp(2), qp(4), qp(2 - 2 * ni), qp(4 - 2 * ni)], &b4, m),
        &mono(&b.pow(n as i32 - 1), (1 - ni * ni) / 4)
            * &q_pochhammer_product(&[qp(2), qp(4), mono(&b2inv, 2), mono(&b2inv, 4)], &b4, m),
    ];

    // (aq³;q⁴)_{(n-1)/2}
    let ab = a * b;
    let shift = -(ni - 1) * (ni - 1) / 8;
    let f2 = vec![
        q_pochhammer(&mono(a, 3), &b4, 2 * m),
        &q_pochhammer(&mono(a, 3), &b4, m) * &q_pochhammer(&mono(a, ni + 2), &b4, m),
        &q_pochhammer(&mono(&ab, 3 - ni), &b4, m) * &q_pochhammer(&mono(&ab, 2), &b4, m),
        &mono(&(-&ab).pow(m as i32), shift)
            * &q_pochhammer_product(&[mono(&ab, 2), mono(&ab.recip(), 2)], &b4, m),
    ];

    // (q³/a;q⁴)_{(n-1)/2}
    let ainv = a.recip();
    let b_over_a = b / a;
    let f3 = vec![
        q_pochhammer(&mono(&ainv, 3), &b4, 2 * m),
        &mono(&(-&b_over_a).pow(m as i32), shift)
            * &q_pochhammer_product(&[mono(&b_over_a, 2), mono(&(a / b), 2)], &b4, m),
    ];

    Ok([
        Factorization { label: "(q^2;q^2)_{n-1}", steps: f1 },
        Factorization { label: "(aq^3;q^4)_{(n-1)/2}", steps: f2 },
        Factorization { label: "(q^3/a;q^4)_{(n-1)/2}", steps: f3 },
    ])
}
