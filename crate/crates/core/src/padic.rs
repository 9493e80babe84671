//! Residues modulo `p^k`, Morita's p-adic Gamma function at p-integral
//! rational arguments, finite-difference derivatives, second-order harmonic
//! numbers and the drivers for the p-adic congruences.
//!
//! `Γ_p(m) = (-1)^m ∏_{0<j<m, p∤j} j` for integers `m ≥ 1`. A rational `x` is
//! replaced by its representative `m ≡ x (mod p^N)` in `[1, p^N]`, which
//! gives `Γ_p(x) mod p^N` because `Γ_p` is 1-Lipschitz.
//!
//! The product over `[1, m)` is evaluated in `O(N² log m)` ring operations:
//! each block of `p - 1` consecutive units is a polynomial in the block index
//! whose degree-`d` coefficient is divisible by `p^d`, so it can be truncated
//! below degree `N` and combined by binary doubling with Taylor shifts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{is_prime_u64, BigInt, BigRational};
use crate::verify::Status;

pub const DEFAULT_GUARD: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{p} is not an odd prime")]
    NotOddPrime { p: u64 },
    #[error("p = {p} is outside the residue class {expected}")]
    WrongResidueClass { p: u64, expected: &'static str },
    #[error("p = {p} is below the minimum {min}")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("denominator is divisible by p = {p}")]
    DenominatorDivisibleByP { p: u64 },
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("derivative order must be 1 or 2, got {order}")]
    InvalidOrder { order: u32 },
    #[error("guard must be at least 2, got {guard}")]
    GuardTooSmall { guard: u32 },
    #[error("finite difference of order {order} is not divisible by the step power (p = {p}, k = {k}, guard = {guard})")]
    InexactDifference { order: u32, p: u64, k: u32, guard: u32 },
    #[error("derivative of order {order} at p = {p}, k = {k} differs between guard {guard} and {}", guard + 1)]
    UnstableDerivative { order: u32, p: u64, k: u32, guard: u32 },
}

fn require_odd_prime(p: u64) -> Result<(), PadicError> {
    if p % 2 == 1 && is_prime_u64(p) {
        Ok(())
    } else {
        Err(PadicError::NotOddPrime { p })
    }
}

fn require_one_mod_four(p: u64) -> Result<(), PadicError> {
    require_odd_prime(p)?;
    if p % 4 != 1 {
        return Err(PadicError::WrongResidueClass {
            p,
            expected: "p ≡ 1 (mod 4)",
        });
    }
    Ok(())
}

fn require_at_least(p: u64, min: u64) -> Result<(), PadicError> {
    if p < min {
        Err(PadicError::PrimeTooSmall { p, min })
    } else {
        Ok(())
    }
}

fn prime_power(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

// ---------------------------------------------------------------------------
// Residues

/// An element of `Z/p^k`, stored as its representative in `[0, p^k)`.
///
/// Arithmetic between residues of different `(p, k)` panics; use
/// [`PadicResidue::reduce`] or [`PadicResidue::shift_up`] to change precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicResidue {
    p: u64,
    k: u32,
    value: BigInt,
}

impl PadicResidue {
    pub fn new(p: u64, k: u32, value: BigInt) -> Self {
        assert!(k >= 1, "precision must be at least 1");
        let value = value.mod_floor(&prime_power(p, k));
        PadicResidue { p, k, value }
    }

    pub fn from_i64(p: u64, k: u32, value: i64) -> Self {
        Self::new(p, k, value.into())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> BigInt {
        prime_power(self.p, self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !(&self.value % self.p).is_zero()
    }

    /// Image in `Z/p^j` for `j ≤ k`.
    pub fn reduce(&self, j: u32) -> Self {
        assert!(j <= self.k, "cannot reduce to a higher precision");
        Self::new(self.p, j, self.value.clone())
    }

    /// `p^e · self` as a residue modulo `p^{k+e}`; well defined because the
    /// ambiguity `p^k` in `self` becomes `p^{k+e}`.
    pub fn shift_up(&self, e: u32) -> Self {
        Self::new(self.p, self.k + e, &self.value * prime_power(self.p, e))
    }

    pub fn inv(&self) -> Option<Self> {
        let m = self.modulus();
        self.value
            .modinv(&m)
            .map(|v| Self::new(self.p, self.k, v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let m = self.modulus();
        Self::new(self.p, self.k, self.value.modpow(&BigInt::from(e), &m))
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.p == other.p && self.k == other.k,
            "mixed-precision residue arithmetic: mod {}^{} and mod {}^{}",
            self.p,
            self.k,
            other.p,
            other.k
        );
    }
}

impl Add for &PadicResidue {
    type Output = PadicResidue;
    fn add(self, rhs: &PadicResidue) -> PadicResidue {
        self.assert_compatible(rhs);
        PadicResidue::new(self.p, self.k, &self.value + &rhs.value)
    }
}

impl Sub for &PadicResidue {
    type Output = PadicResidue;
    fn sub(self, rhs: &PadicResidue) -> PadicResidue {
        self.assert_compatible(rhs);
        PadicResidue::new(self.p, self.k, &self.value - &rhs.value)
    }
}

impl Mul for &PadicResidue {
    type Output = PadicResidue;
    fn mul(self, rhs: &PadicResidue) -> PadicResidue {
        self.assert_compatible(rhs);
        PadicResidue::new(self.p, self.k, &self.value * &rhs.value)
    }
}

impl Neg for &PadicResidue {
    type Output = PadicResidue;
    fn neg(self) -> PadicResidue {
        PadicResidue::new(self.p, self.k, -&self.value)
    }
}

impl fmt::Display for PadicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.p, self.k)
    }
}

impl fmt::Debug for PadicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `numerator(x) · denominator(x)^{-1} mod p^k`.
pub fn residue_of_rational(x: &BigRational, p: u64, k: u32) -> Result<PadicResidue, PadicError> {
    if k == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    let m = prime_power(p, k);
    let inv = x
        .denom()
        .modinv(&m)
        .ok_or(PadicError::DenominatorDivisibleByP { p })?;
    Ok(PadicResidue::new(p, k, x.numer() * inv))
}

// ---------------------------------------------------------------------------
// Morita's Gamma

fn mul_truncated(a: &[BigInt], b: &[BigInt], n: usize, m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    for c in &mut out {
        *c = c.mod_floor(m);
    }
    out
}

/// `f(u + shift)` truncated below degree `n`.
fn taylor_shift(f: &[BigInt], shift: &BigInt, n: usize, m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    let mut powers = vec![BigInt::one()];
    for _ in 1..f.len() {
        let next = (powers.last().expect("nonempty") * shift).mod_floor(m);
        powers.push(next);
    }
    for (d, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // binom(d, e) built incrementally
        let mut binom = BigInt::one();
        for e in 0..=d {
            if e < n {
                out[e] += c * &binom * &powers[d - e];
            }
            binom = binom * (d - e) / (e + 1);
        }
    }
    for c in &mut out {
        *c = c.mod_floor(m);
    }
    out
}

/// `∏_{i=1}^{p-1} (p·u + i)` truncated below degree `n`.
fn unit_block(p: u64, n: usize, m: &BigInt) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for i in 1..p {
        let factor = [BigInt::from(i), BigInt::from(p)];
        acc = mul_truncated(&acc, &factor, n, m);
    }
    acc
}

/// `Γ_p(m) mod p^n` for an integer `m ≥ 1`.
fn gamma_integer(m: &BigInt, p: u64, n: u32) -> BigInt {
    debug_assert!(m.is_positive());
    let modulus = prime_power(p, n);
    let width = n as usize;
    let pb = BigInt::from(p);
    let (t, r) = (m - 1u32).div_rem(&pb);

    // blocks[u] for u in [0, len): P_len(u) = ∏_{v<len} Q(u + v)
    let q1 = unit_block(p, width, &modulus);
    let mut acc = vec![BigInt::one()];
    let mut len = BigInt::zero();
    for i in (0..t.bits()).rev() {
        if !len.is_zero() {
            let shifted = taylor_shift(&acc, &len, width, &modulus);
            acc = mul_truncated(&acc, &shifted, width, &modulus);
            len *= 2;
        }
        if t.bit(i) {
            let shifted = taylor_shift(&q1, &len, width, &modulus);
            acc = mul_truncated(&acc, &shifted, width, &modulus);
            len += 1;
        }
    }
    let mut prod = acc[0].clone();
    let start = &pb * &t;
    let r = r.to_u64().expect("remainder below p");
    for i in 1..=r {
        prod = (prod * (&start + i)).mod_floor(&modulus);
    }
    if m.is_odd() {
        prod = (-prod).mod_floor(&modulus);
    }
    prod
}

/// Representative of `x` modulo `p^n` in `[1, p^n]`.
fn representative(x: &BigRational, p: u64, n: u32) -> Result<BigInt, PadicError> {
    let r = residue_of_rational(x, p, n)?;
    let v = r.value;
    Ok(if v.is_zero() { prime_power(p, n) } else { v })
}

pub fn padic_gamma(x: &BigRational, p: u64, k: u32) -> Result<PadicResidue, PadicError> {
    require_odd_prime(p)?;
    if k == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    let m = representative(x, p, k)?;
    Ok(PadicResidue::new(p, k, gamma_integer(&m, p, k)))
}

fn difference_quotient(x: &BigRational, order: u32, p: u64, k: u32, guard: u32) -> Result<BigInt, PadicError> {
    let s = k + guard;
    let w = 3 * s;
    let work = prime_power(p, w);
    let h = BigRational::from_integer(prime_power(p, s));
    let gamma = |y: &BigRational| -> Result<BigInt, PadicError> {
        Ok(gamma_integer(&representative(y, p, w)?, p, w))
    };
    let plus = gamma(&(x + &h))?;
    let minus = gamma(&(x - &h))?;
    let (diff, step) = match order {
        1 => (plus - minus, prime_power(p, s)),
        2 => (plus - 2 * gamma(x)? + minus, prime_power(p, 2 * s)),
        _ => return Err(PadicError::InvalidOrder { order }),
    };
    let diff = diff.mod_floor(&work);
    let (quot, rem) = diff.div_rem(&step);
    if !rem.is_zero() {
        return Err(PadicError::InexactDifference { order, p, k, guard });
    }
    let target = prime_power(p, k);
    let value = if order == 1 {
        let half = BigInt::from(2u32).modinv(&target).expect("p odd");
        quot * half
    } else {
        quot
    };
    Ok(value.mod_floor(&target))
}

/// `Γ_p^{(order)}(x) mod p^k` by symmetric differences with step
/// `p^{k+guard}` at working precision `p^{3(k+guard)}`, cross-checked against
/// the same estimate at `guard + 1`.
pub fn padic_gamma_derivative(
    x: &BigRational,
    order: u32,
    p: u64,
    k: u32,
    guard: u32,
) -> Result<PadicResidue, PadicError> {
    require_odd_prime(p)?;
    if !(1..=2).contains(&order) {
        return Err(PadicError::InvalidOrder { order });
    }
    if guard < 2 {
        return Err(PadicError::GuardTooSmall { guard });
    }
    if k == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    let first = difference_quotient(x, order, p, k, guard)?;
    let second = difference_quotient(x, order, p, k, guard + 1)?;
    if first != second {
        return Err(PadicError::UnstableDerivative { order, p, k, guard });
    }
    Ok(PadicResidue::new(p, k, first))
}

// ---------------------------------------------------------------------------
// Exact sums

/// `H^{(2)}_m = Σ_{j=1}^{m} 1/j²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicValue {
    pub order: u32,
    pub index: usize,
    pub value: BigRational,
}

pub fn harmonic2(m: usize) -> HarmonicValue {
    let mut value = BigRational::zero();
    for j in 1..=m {
        value += BigRational::new(BigInt::one(), BigInt::from(j).pow(2));
    }
    HarmonicValue { order: 2, index: m, value }
}

/// `Σ_{k=0}^{(p-1)/2} (1/2)_k³ / k!³`.
pub fn rising_half_cubed_sum(p: u64) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 1..=(p - 1) / 2 {
        // (1/2)_k / k! = (1/2)_{k-1}/(k-1)! · (2k-1)/(2k)
        let ratio = BigRational::new(BigInt::from(2 * k - 1), BigInt::from(2 * k));
        term = term * ratio.pow(3);
        sum += &term;
    }
    sum
}

/// `(1/2)_m² / m!²` with `m = (p-1)/4`.
fn quarter_ratio(p: u64) -> BigRational {
    let mut r = BigRational::one();
    for j in 1..=(p - 1) / 4 {
        r *= BigRational::new(BigInt::from(2 * j - 1), BigInt::from(2 * j));
    }
    &r * &r
}

// ---------------------------------------------------------------------------
// Drivers

/// One residue comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicCheck {
    pub label: String,
    pub status: Status,
    pub lhs: PadicResidue,
    pub rhs: PadicResidue,
}

impl PadicCheck {
    fn compare(label: impl Into<String>, lhs: PadicResidue, rhs: PadicResidue) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        PadicCheck {
            label: label.into(),
            status,
            lhs,
            rhs,
        }
    }

    pub fn precision(&self) -> u32 {
        self.lhs.precision()
    }
}

/// All residue comparisons for one claim at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicVerdict {
    pub p: u64,
    pub branch: Option<&'static str>,
    pub checks: Vec<PadicCheck>,
}

impl PadicVerdict {
    pub fn status(&self) -> Status {
        if self.checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status() == Status::Pass
    }
}

fn quarter() -> BigRational {
    BigRational::new(1.into(), 4.into())
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn branch_of(p: u64) -> &'static str {
    if p % 4 == 1 {
        "p ≡ 1 (mod 4)"
    } else {
        "p ≡ 3 (mod 4)"
    }
}

/// The truncated sum against `-Γ_p(1/4)⁴` or `0` modulo `p²`.
pub fn verify_hamme(p: u64) -> Result<PadicVerdict, PadicError> {
    require_odd_prime(p)?;
    let lhs = residue_of_rational(&rising_half_cubed_sum(p), p, 2)?;
    let rhs = if p % 4 == 1 {
        -&padic_gamma(&quarter(), p, 2)?.pow(4)
    } else {
        PadicResidue::from_i64(p, 2, 0)
    };
    Ok(PadicVerdict {
        p,
        branch: Some(branch_of(p)),
        checks: vec![PadicCheck::compare("mod p^2", lhs, rhs)],
    })
}

/// The truncated sum against `-Γ_p(1/4)⁴` or `-(p²/16)Γ_p(1/4)⁴` modulo `p³`.
pub fn verify_long_ramakrishna(p: u64) -> Result<PadicVerdict, PadicError> {
    require_odd_prime(p)?;
    require_at_least(p, 5)?;
    let lhs = residue_of_rational(&rising_half_cubed_sum(p), p, 3)?;
    let g4 = padic_gamma(&quarter(), p, 3)?.pow(4);
    let factor = if p % 4 == 1 {
        rational(-1, 1)
    } else {
        rational(-((p * p) as i64), 16)
    };
    let rhs = &residue_of_rational(&factor, p, 3)? * &g4;
    Ok(PadicVerdict {
        p,
        branch: Some(branch_of(p)),
        checks: vec![PadicCheck::compare("mod p^3", lhs, rhs)],
    })
}

fn p_squared_over(p: u64, d: i64) -> BigRational {
    rational((p * p) as i64, d)
}

/// The truncated sum against
/// `(1/2)²_m/m!² · {1 + (p²/2)H^{(2)}_{(p-1)/2} - (p²/8)H^{(2)}_m}` modulo `p³`.
pub fn verify_wei_full(p: u64) -> Result<PadicVerdict, PadicError> {
    require_one_mod_four(p)?;
    require_at_least(p, 5)?;
    let h_half = harmonic2(((p - 1) / 2) as usize).value;
    let h_quarter = harmonic2(((p - 1) / 4) as usize).value;
    let braces = BigRational::one() + p_squared_over(p, 2) * h_half - p_squared_over(p, 8) * h_quarter;
    let lhs = residue_of_rational(&rising_half_cubed_sum(p), p, 3)?;
    let rhs = residue_of_rational(&(quarter_ratio(p) * braces), p, 3)?;
    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![PadicCheck::compare("mod p^3", lhs, rhs)],
    })
}

fn prop1_lhs(p: u64) -> BigRational {
    let h_quarter = harmonic2(((p - 1) / 4) as usize).value;
    quarter_ratio(p) * (BigRational::one() - p_squared_over(p, 8) * h_quarter)
}

/// The truncated sum against `(1/2)²_m/m!² · {1 - (p²/8)H^{(2)}_m}` modulo `p³`.
pub fn verify_corollary(p: u64) -> Result<PadicVerdict, PadicError> {
    require_one_mod_four(p)?;
    require_at_least(p, 5)?;
    let lhs = residue_of_rational(&rising_half_cubed_sum(p), p, 3)?;
    let rhs = residue_of_rational(&prop1_lhs(p), p, 3)?;
    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![PadicCheck::compare("mod p^3", lhs, rhs)],
    })
}

/// `(1/2)²_m/m!² · {1 - (p²/8)H^{(2)}_m}` against `-Γ_p(1/4)⁴` modulo `p³`.
pub fn verify_prop1(p: u64) -> Result<PadicVerdict, PadicError> {
    require_one_mod_four(p)?;
    require_at_least(p, 5)?;
    let lhs = residue_of_rational(&prop1_lhs(p), p, 3)?;
    let rhs = -&padic_gamma(&quarter(), p, 3)?.pow(4);
    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![PadicCheck::compare("mod p^3", lhs, rhs)],
    })
}

/// `H^{(2)}_{(p-1)/2} ≡ 0 (mod p)` for `p > 3`.
pub fn verify_sun(p: u64) -> Result<PadicVerdict, PadicError> {
    require_odd_prime(p)?;
    require_at_least(p, 5)?;
    let lhs = residue_of_rational(&harmonic2(((p - 1) / 2) as usize).value, p, 1)?;
    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![PadicCheck::compare("mod p", lhs, PadicResidue::from_i64(p, 1, 0))],
    })
}

/// `Γ_p(1/4)`, `Γ_p'(1/4)`, `Γ_p''(1/4)` modulo `p^k`.
fn gamma_jet(p: u64, k: u32, guard: u32) -> Result<[PadicResidue; 3], PadicError> {
    let x = quarter();
    Ok([
        padic_gamma(&x, p, k)?,
        padic_gamma_derivative(&x, 1, p, k, guard)?,
        padic_gamma_derivative(&x, 2, p, k, guard)?,
    ])
}

/// `Γ''/Γ - (Γ'/Γ)²` from a jet.
fn log_second(jet: &[PadicResidue; 3]) -> PadicResidue {
    let inv = jet[0].inv().expect("Γ_p takes unit values");
    let first = &jet[1] * &inv;
    &(&jet[2] * &inv) - &(&first * &first)
}

/// `H^{(2)}_{(p-1)/4} ≡ Γ_p''(1/4)/Γ_p(1/4) - {Γ_p'(1/4)/Γ_p(1/4)}²` modulo
/// `p`, and the same relation scaled by `p²/8` inside `1 - (p²/8)(·)`
/// modulo `p³`.
pub fn verify_wang_pan(p: u64, guard: u32) -> Result<PadicVerdict, PadicError> {
    require_one_mod_four(p)?;
    require_at_least(p, 5)?;
    let h = harmonic2(((p - 1) / 4) as usize).value;
    let lhs = residue_of_rational(&h, p, 1)?;
    let rhs = log_second(&gamma_jet(p, 1, guard)?);

    let eighth = residue_of_rational(&rational(1, 8), p, 1)?;
    let one = PadicResidue::from_i64(p, 3, 1);
    let lifted_lhs = residue_of_rational(&(BigRational::one() - p_squared_over(p, 8) * &h), p, 3)?;
    let lifted_rhs = &one - &(&rhs * &eighth).shift_up(2);
    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![
            PadicCheck::compare("mod p", lhs, rhs),
            PadicCheck::compare("lifted mod p^3", lifted_lhs, lifted_rhs),
        ],
    })
}

/// The chain rewriting `(1/2)²_m/m!²` through `Γ_p`:
///
/// - `1a`: `{Γ_p((1+p)/4)Γ_p(1) / (Γ_p(1/2)Γ_p((3+p)/4))}²`
/// - `1b`: `{Γ_p((1+p)/4)Γ_p((1-p)/4) / Γ_p(1/2)}²`
/// - `2`: `-{Γ + Γ'p/4 + Γ''p²/32}² {Γ - Γ'p/4 + Γ''p²/32}²` at `1/4`
/// - `combined`: step 2 times `1 - (p²/8)Γ''/Γ + (p²/8)(Γ'/Γ)²` against
///   `-Γ_p(1/4)⁴`
///
/// each modulo `p³`.
pub fn verify_reflection_expansion(p: u64, guard: u32) -> Result<PadicVerdict, PadicError> {
    require_one_mod_four(p)?;
    require_at_least(p, 5)?;
    let k = 3;
    let g = |x: BigRational| padic_gamma(&x, p, k);
    let r = |x: BigRational| residue_of_rational(&x, p, k);
    let pi = p as i64;
    let unit = |x: &PadicResidue| x.inv().expect("Γ_p takes unit values");

    let ratio = r(quarter_ratio(p))?;
    let up = g(rational(1 + pi, 4))?;
    let half_inv = unit(&g(rational(1, 2))?);
    let step_1a = {
        let v = &(&(&up * &g(BigRational::one())?) * &half_inv) * &unit(&g(rational(3 + pi, 4))?);
        &v * &v
    };
    let step_1b = {
        let v = &(&up * &g(rational(1 - pi, 4))?) * &half_inv;
        &v * &v
    };

    let jet = gamma_jet(p, k, guard)?;
    let linear = &jet[1] * &r(rational(pi, 4))?;
    let quadratic = &jet[2] * &r(rational(pi * pi, 32))?;
    let plus = &(&jet[0] + &linear) + &quadratic;
    let minus = &(&jet[0] - &linear) + &quadratic;
    let step_2 = -&(&(&plus * &plus) * &(&minus * &minus));

    let correction = &PadicResidue::from_i64(p, k, 1) - &(&r(p_squared_over(p, 8))? * &log_second(&jet));
    let combined = &step_2 * &correction;
    let target = -&jet[0].pow(4);

    Ok(PadicVerdict {
        p,
        branch: None,
        checks: vec![
            PadicCheck::compare("step 1a", ratio.clone(), step_1a),
            PadicCheck::compare("step 1b", ratio.clone(), step_1b),
            PadicCheck::compare("step 2", ratio, step_2),
            PadicCheck::compare("combined", combined, target),
        ],
    })
}
