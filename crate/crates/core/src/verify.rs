//! The congruence engine and the drivers that run each q-claim.
//!
//! `f ≡ g (mod m)` holds when the denominator of `f - g` is invertible
//! modulo `m` and `m` divides its numerator. Claims with free parameters
//! `a`, `b` are checked at seeded rational specializations.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{
    poly_crt, poly_gcd, residue_mod, AlgebraError, BigRational, Degree, Polynomial, RationalFunction,
};
use crate::cyclotomic::{cyclotomic, modulus_power, CyclotomicError};
use crate::qseries::{self, QSeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("modulus is zero")]
    ZeroModulus,
    #[error("modulus must have positive degree")]
    ConstantModulus,
    #[error("no admissible specialization after {attempts} attempts")]
    SamplerExhausted { attempts: usize },
    #[error("degenerate evaluation point: {0}")]
    DegenerateEvaluationPoint(String),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one congruence (or, with `modulus_degree = 0`, one exact
/// identity) check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub status: Status,
    pub modulus_degree: usize,
    /// `numerator(f - g) mod m`; for identities, `numerator(f - g)` itself.
    pub remainder: Polynomial,
    /// `gcd(denominator(f - g), m)`, which must be 1 for the check to apply.
    pub coprimality_witness: Polynomial,
}

impl CongruenceVerdict {
    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Exact equality `f = g`, reported in the same shape as a congruence.
    pub fn identity(f: &RationalFunction, g: &RationalFunction) -> Self {
        let diff = f - g;
        let status = if diff.is_zero() { Status::Pass } else { Status::Fail };
        CongruenceVerdict {
            status,
            modulus_degree: 0,
            remainder: diff.numer().clone(),
            coprimality_witness: Polynomial::one(),
        }
    }
}

pub fn check_congruence(
    f: &RationalFunction,
    g: &RationalFunction,
    m: &Polynomial,
) -> Result<CongruenceVerdict, VerifyError> {
    let modulus_degree = match m.degree() {
        Degree::NegInfinity => return Err(VerifyError::ZeroModulus),
        Degree::Finite(0) => return Err(VerifyError::ConstantModulus),
        Degree::Finite(d) => d,
    };
    let diff = f - g;
    let witness = poly_gcd(diff.denom(), m)?;
    let remainder = diff.numer().rem(m)?;
    let status = if !witness.is_one() {
        Status::Inapplicable
    } else if remainder.is_zero() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(CongruenceVerdict {
        status,
        modulus_degree,
        remainder,
        coprimality_witness: witness,
    })
}

// ---------------------------------------------------------------------------
// Sampling

/// Conditions under which a sampled point is discarded before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectionRule {
    /// Some parameter is 0.
    Zero,
    /// Some parameter is 1.
    One,
    /// Some parameter is -1.
    MinusOne,
    /// The first two parameters coincide.
    Equal,
    /// The first two parameters multiply to 1.
    ProductOne,
}

impl RejectionRule {
    pub fn describe(self) -> &'static str {
        match self {
            RejectionRule::Zero => "parameter = 0",
            RejectionRule::One => "parameter = 1",
            RejectionRule::MinusOne => "parameter = -1",
            RejectionRule::Equal => "a = b",
            RejectionRule::ProductOne => "ab = 1",
        }
    }

    fn violated_by(self, params: &[BigRational]) -> bool {
        let any = |target: BigRational| params.iter().any(|x| *x == target);
        match self {
            RejectionRule::Zero => any(BigRational::zero()),
            RejectionRule::One => any(BigRational::one()),
            RejectionRule::MinusOne => any(-BigRational::one()),
            RejectionRule::Equal => params.len() >= 2 && params[0] == params[1],
            RejectionRule::ProductOne => params.len() >= 2 && (&params[0] * &params[1]).is_one(),
        }
    }
}

pub const DEFAULT_HEIGHT_BOUND: i64 = 9;
pub const DEFAULT_MAX_ATTEMPTS: usize = 1000;

/// Deterministic source of small-height nonzero rationals.
#[derive(Clone, Debug)]
pub struct SpecializationSampler {
    pub seed: u64,
    pub height_bound: i64,
    pub rejected_predicates: Vec<RejectionRule>,
    /// Consecutive rejections tolerated for one trial.
    pub max_attempts: usize,
    rng: ChaCha8Rng,
    forced: VecDeque<Vec<BigRational>>,
}

impl SpecializationSampler {
    pub fn new(seed: u64) -> Self {
        SpecializationSampler {
            seed,
            height_bound: DEFAULT_HEIGHT_BOUND,
            rejected_predicates: vec![
                RejectionRule::Zero,
                RejectionRule::One,
                RejectionRule::MinusOne,
                RejectionRule::Equal,
                RejectionRule::ProductOne,
            ],
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            rng: ChaCha8Rng::seed_from_u64(seed),
            forced: VecDeque::new(),
        }
    }

    pub fn with_height_bound(mut self, h: i64) -> Self {
        assert!(h >= 1, "height bound must be positive");
        self.height_bound = h;
        self
    }

    pub fn with_max_attempts(mut self, cap: usize) -> Self {
        self.max_attempts = cap;
        self
    }

    /// Queue a point to be emitted before any random one.
    pub fn force(&mut self, params: Vec<BigRational>) {
        self.forced.push_back(params);
    }

    /// A nonzero rational `u/v` with `|u|, v ≤ height_bound`.
    pub fn next_rational(&mut self) -> BigRational {
        let h = self.height_bound;
        loop {
            let u: i64 = self.rng.gen_range(-h..=h);
            if u == 0 {
                continue;
            }
            let v: i64 = self.rng.gen_range(1..=h);
            return BigRational::new(u.into(), v.into());
        }
    }

    pub fn next_point(&mut self, arity: usize) -> Vec<BigRational> {
        if let Some(p) = self.forced.pop_front() {
            return p;
        }
        (0..arity).map(|_| self.next_rational()).collect()
    }

    fn first_violation(&self, params: &[BigRational]) -> Option<RejectionRule> {
        self.rejected_predicates
            .iter()
            .copied()
            .find(|r| r.violated_by(params))
    }
}

/// One evaluated check at one specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialVerdict {
    pub trial: usize,
    pub params: Vec<(&'static str, BigRational)>,
    pub check: String,
    pub verdict: CongruenceVerdict,
}

/// A discarded specialization and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub trial: usize,
    pub params: Vec<(&'static str, BigRational)>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialReport {
    pub verdicts: Vec<TrialVerdict>,
    pub rejections: Vec<Rejection>,
}

impl TrialReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict.is_pass())
    }

    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| v.verdict.status == Status::Fail).count()
    }
}

type Checks = Vec<(String, CongruenceVerdict)>;

/// Draw points until `evaluate` accepts one, `trials` times.
///
/// Points are discarded when a rejection rule fires, when a constructor
/// reports a vanishing denominator or degenerate parameters, or when any
/// resulting verdict is inapplicable.
fn run_trials<F>(
    names: &[&'static str],
    trials: usize,
    sampler: &mut SpecializationSampler,
    mut evaluate: F,
) -> Result<TrialReport, VerifyError>
where
    F: FnMut(&[BigRational]) -> Result<Checks, VerifyError>,
{
    let mut report = TrialReport::default();
    for trial in 0..trials {
        let mut attempts = 0;
        loop {
            if attempts == sampler.max_attempts {
                return Err(VerifyError::SamplerExhausted { attempts });
            }
            attempts += 1;
            let point = sampler.next_point(names.len());
            let labelled: Vec<_> = names.iter().copied().zip(point.iter().cloned()).collect();
            let reject = |reason: String, report: &mut TrialReport| {
                report.rejections.push(Rejection {
                    trial,
                    params: labelled.clone(),
                    reason,
                })
            };
            if let Some(rule) = sampler.first_violation(&point) {
                reject(rule.describe().to_string(), &mut report);
                continue;
            }
            let checks = match evaluate(&point) {
                Ok(c) => c,
                Err(VerifyError::QSeries(
                    e @ (QSeriesError::ZeroTermDenominator { .. } | QSeriesError::DegenerateParameters(_)),
                )) => {
                    reject(e.to_string(), &mut report);
                    continue;
                }
                Err(e) => return Err(e),
            };
            if let Some((label, _)) = checks
                .iter()
                .find(|(_, v)| v.status == Status::Inapplicable)
            {
                reject(format!("{label}: denominator not invertible modulo the modulus"), &mut report);
                continue;
            }
            for (check, verdict) in checks {
                report.verdicts.push(TrialVerdict {
                    trial,
                    params: labelled.clone(),
                    check,
                    verdict,
                });
            }
            break;
        }
    }
    Ok(report)
}

fn one_check(label: &str, v: CongruenceVerdict) -> Checks {
    vec![(label.to_string(), v)]
}

/// `Φ_n(q)^r`
fn cyclotomic_power(n: usize, r: u32) -> Result<Polynomial, VerifyError> {
    Ok((*modulus_power(n, r)?.modulus).clone())
}

// ---------------------------------------------------------------------------
// Single-variable q-claims

/// Central sum against [`qseries::thm1_rhs`] modulo `Φ_n(q)³`.
pub fn verify_thm1(n: usize) -> Result<CongruenceVerdict, VerifyError> {
    verify_thm1_perturbed(n, &RationalFunction::zero())
}

/// As [`verify_thm1`] with `delta` added to the right side; a nonzero
/// `delta` not divisible by `Φ_n³` must make the check fail.
pub fn verify_thm1_perturbed(n: usize, delta: &RationalFunction) -> Result<CongruenceVerdict, VerifyError> {
    let rhs = &qseries::thm1_rhs(n)? + delta;
    let lhs = qseries::central_q_sum(n)?;
    check_congruence(&lhs, &rhs, &cyclotomic_power(n, 3)?)
}

/// Central sum against [`qseries::guo_a_rhs`] modulo `Φ_n(q)²`, odd `n`.
pub fn verify_guo_a(n: usize) -> Result<CongruenceVerdict, VerifyError> {
    let rhs = qseries::guo_a_rhs(n)?;
    check_congruence(&qseries::central_q_sum(n)?, &rhs, &cyclotomic_power(n, 2)?)
}

/// Central sum against [`qseries::guo_b_rhs`] modulo `Φ_n(q)³`, `n ≡ 3 (mod 4)`.
pub fn verify_guo_b(n: usize) -> Result<CongruenceVerdict, VerifyError> {
    let rhs = qseries::guo_b_rhs(n)?;
    check_congruence(&qseries::central_q_sum(n)?, &rhs, &cyclotomic_power(n, 3)?)
}

fn require_one_mod_four(n: usize) -> Result<(), VerifyError> {
    if n % 4 == 1 {
        Ok(())
    } else {
        Err(QSeriesError::WrongResidueClass {
            n,
            expected: "n ≡ 1 (mod 4)",
        }
        .into())
    }
}

// ---------------------------------------------------------------------------
// Two-parameter claims

const AB: [&str; 2] = ["a", "b"];

/// The two-parameter sum against `Ω_n(a,b)` modulo
/// `(1-aq^n)(a-q^n)(b-q^n)`.
///
/// Each trial carries two checks: `direct` compares with `Ω_n(a,b)` as
/// built from the unit coefficients, `crt-gluing` compares with the CRT
/// combination of the two partial closed forms.
pub fn verify_thm2(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    require_one_mod_four(n)?;
    run_trials(&AB, trials, sampler, |p| {
        let (a, b) = (&p[0], &p[1]);
        let lhs = qseries::thm2_lhs(n, a, b)?;
        let [m1, m2, m3] = qseries::thm2_modulus_factors(n, a, b);
        let m12 = &m1 * &m2;
        let modulus = &m12 * &m3;
        let direct = check_congruence(&lhs, &qseries::thm2_omega(n, a, b)?, &modulus)?;
        let glued = match (
            residue_mod(&qseries::wei_bb_rhs(n, b)?, &m12),
            residue_mod(&qseries::wei_cc_rhs(n, a)?, &m3),
        ) {
            (Ok(r1), Ok(r2)) => {
                let r = RationalFunction::from_poly(poly_crt(&m12, &m3, &r1, &r2)?);
                check_congruence(&lhs, &r, &modulus)?
            }
            (Err(AlgebraError::Coprimality { gcd }), _) | (_, Err(AlgebraError::Coprimality { gcd })) => {
                CongruenceVerdict {
                    status: Status::Inapplicable,
                    modulus_degree: modulus.degree().finite().unwrap_or(0),
                    remainder: Polynomial::zero(),
                    coprimality_witness: gcd,
                }
            }
            (Err(e), _) | (_, Err(e)) => return Err(e.into()),
        };
        Ok(vec![("direct".into(), direct), ("crt-gluing".into(), glued)])
    })
}

/// The two-parameter sum modulo `(1-aq^n)(a-q^n)`.
pub fn verify_wei_bb(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    require_one_mod_four(n)?;
    run_trials(&AB, trials, sampler, |p| {
        let (a, b) = (&p[0], &p[1]);
        let [m1, m2, _] = qseries::thm2_modulus_factors(n, a, b);
        let v = check_congruence(&qseries::thm2_lhs(n, a, b)?, &qseries::wei_bb_rhs(n, b)?, &(&m1 * &m2))?;
        Ok(one_check("mod (1-aq^n)(a-q^n)", v))
    })
}

/// The two-parameter sum modulo `b - q^n`.
pub fn verify_wei_cc(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    require_one_mod_four(n)?;
    run_trials(&AB, trials, sampler, |p| {
        let (a, b) = (&p[0], &p[1]);
        let [_, _, m3] = qseries::thm2_modulus_factors(n, a, b);
        let v = check_congruence(&qseries::thm2_lhs(n, a, b)?, &qseries::wei_cc_rhs(n, a)?, &m3)?;
        Ok(one_check("mod (b-q^n)", v))
    })
}

/// Both unit coefficients are `≡ 1` modulo their own factor, `n` odd.
pub fn verify_unit_congruences(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    if n % 2 == 0 {
        return Err(QSeriesError::WrongResidueClass { n, expected: "n odd" }.into());
    }
    run_trials(&AB, trials, sampler, |p| {
        let (a, b) = (&p[0], &p[1]);
        let (c1, c2) = qseries::unit_coefficients(n, a, b)?;
        let [m1, m2, m3] = qseries::thm2_modulus_factors(n, a, b);
        let one = RationalFunction::one();
        Ok(vec![
            ("C1 mod (1-aq^n)(a-q^n)".into(), check_congruence(&c1, &one, &(&m1 * &m2))?),
            ("C2 mod (b-q^n)".into(), check_congruence(&c2, &one, &m3)?),
        ])
    })
}

/// The three product rewritings modulo `b - q^n`, product against final form.
pub fn verify_factorizations(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    require_one_mod_four(n)?;
    run_trials(&AB, trials, sampler, |p| {
        let (a, b) = (&p[0], &p[1]);
        let [_, _, m3] = qseries::thm2_modulus_factors(n, a, b);
        let mut checks = Vec::new();
        for f in qseries::factorizations(n, a, b)? {
            let first = f.steps.first().expect("nonempty chain");
            let last = f.steps.last().expect("nonempty chain");
            checks.push((f.label.to_string(), check_congruence(first, last, &m3)?));
        }
        Ok(checks)
    })
}

/// The `b → 1` congruence modulo `Φ_n(q)(1-aq^n)(a-q^n)` at sampled `a`.
pub fn verify_wei_dd(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    require_one_mod_four(n)?;
    let phi = cyclotomic(n)?;
    run_trials(&["a"], trials, sampler, |p| {
        let a = &p[0];
        let [m1, m2, _] = qseries::thm2_modulus_factors(n, a, &BigRational::one());
        let modulus = &(&*phi * &m1) * &m2;
        let lhs = qseries::thm2_lhs(n, a, &BigRational::one())?;
        let v = check_congruence(&lhs, &qseries::wei_dd_rhs(n, a)?, &modulus)?;
        Ok(one_check("mod Φ_n(q)(1-aq^n)(a-q^n)", v))
    })
}

/// Andrews' q-Whipple identity at sampled `(b, c)`.
pub fn verify_whipple_a(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    run_trials(&["b", "c"], trials, sampler, |p| {
        let (lhs, rhs) = qseries::whipple_a_sides(n, &p[0], &p[1])?;
        Ok(one_check("identity", CongruenceVerdict::identity(&lhs, &rhs)))
    })
}

/// Jain's q-Whipple identity at sampled `(a, c)`.
pub fn verify_whipple_b(
    n: usize,
    trials: usize,
    sampler: &mut SpecializationSampler,
) -> Result<TrialReport, VerifyError> {
    run_trials(&["a", "c"], trials, sampler, |p| {
        let (lhs, rhs) = qseries::whipple_b_sides(n, &p[0], &p[1])?;
        Ok(one_check("identity", CongruenceVerdict::identity(&lhs, &rhs)))
    })
}

// ---------------------------------------------------------------------------
// The a → 1 limit

/// Result of the limit check at a fixed rational `q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitVerdict {
    pub status: Status,
    /// Whether `(1-a)²` divides the numerator of `A - B(a)`.
    pub double_root: bool,
    /// `lim_{a→1} (1-aq0^n)(a-q0^n)(A - B(a))/(1-a)²`, when it exists.
    pub limit: Option<BigRational>,
    /// `2[n]² A Σ_{i=1}^{m} q0^{4i-2}/[4i-2]²` at `q0`.
    pub expected: BigRational,
}

fn eval_at(f: &RationalFunction, x: &BigRational, what: &str) -> Result<BigRational, VerifyError> {
    f.evaluate(x)
        .map_err(|_| VerifyError::DegenerateEvaluationPoint(format!("{what} has a pole at q = {x}")))
}

/// With `q = q0` fixed, treats `a` as the variable: checks that
/// `A - B(a)` vanishes to order two at `a = 1`, and that
/// `(1-aq0^n)(a-q0^n)(A - B(a))/(1-a)²` at `a = 1` equals
/// `2[n]² A Σ q0^{4i-2}/[4i-2]²`.
pub fn verify_lhopital(n: usize, q0: &BigRational) -> Result<LimitVerdict, VerifyError> {
    require_one_mod_four(n)?;
    let m = (n - 1) / 4;
    if q0.is_zero() || q0.abs().is_one() {
        return Err(VerifyError::DegenerateEvaluationPoint(format!("q0 = {q0}")));
    }
    let qpow = |e: usize| q0.pow(e as i32);

    // constants in q0
    let mut ratio = BigRational::one();
    let mut b_denom = BigRational::one();
    for j in 0..m {
        let num = BigRational::one() - qpow(2 + 4 * j);
        let den = BigRational::one() - qpow(4 + 4 * j);
        ratio = ratio * &num / &den;
        b_denom = b_denom * &num * &den;
    }
    let big_a = &ratio * &ratio;
    let mut sum = BigRational::zero();
    for i in 1..=m {
        let bracket = eval_at(&qseries::q_integer(4 * i - 2), q0, "[4i-2]")?;
        if bracket.is_zero() {
            return Err(VerifyError::DegenerateEvaluationPoint(format!("[{}] vanishes at q0 = {q0}", 4 * i - 2)));
        }
        sum += qpow(4 * i - 2) / (&bracket * &bracket);
    }
    let qn = eval_at(&qseries::q_integer(n), q0, "[n]")?;
    let expected = BigRational::from_integer(2.into()) * &qn * &qn * &big_a * &sum;

    // B(a) as a rational function of the variable a
    let a = Polynomial::q();
    let mut b_numer = RationalFunction::one();
    for j in 0..m {
        let c = qpow(2 + 4 * j);
        let left = Polynomial::one() - a.scale(&c);
        let right = RationalFunction::new(&a - &Polynomial::constant(c), a.clone())?;
        b_numer = &(&b_numer * &RationalFunction::from_poly(left)) * &right;
    }
    let b_of_a = (&b_numer * &b_numer).scale(&(&b_denom * &b_denom).recip());
    let g = &RationalFunction::constant(big_a.clone()) - &b_of_a;

    let double = Polynomial::from_ints(&[1, -1]).pow(2);
    let Some(reduced) = g.numer().div_exact(&double) else {
        return Ok(LimitVerdict {
            status: Status::Fail,
            double_root: false,
            limit: None,
            expected,
        });
    };
    let h = RationalFunction::new(reduced, g.denom().clone())?;
    let one = BigRational::one();
    let at_one = eval_at(&h, &one, "(A - B(a))/(1-a)²")?;
    let qn_pow = qpow(n);
    let limit = (&one - &qn_pow) * (&one - &qn_pow) * at_one;
    let status = if limit == expected { Status::Pass } else { Status::Fail };
    Ok(LimitVerdict {
        status,
        double_root: true,
        limit: Some(limit),
        expected,
    })
}
