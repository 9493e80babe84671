//! Greatest common divisors and the polynomial Chinese remainder theorem.
//!
//! `poly_gcd` runs a dense modular algorithm over word-size primes: images of
//! the gcd mod `p` are combined by integer CRT until the lifted candidate
//! stabilizes and divides both inputs over `Z`. Rational Euclid is far too
//! slow at the degrees the q-series sums reach (several hundred) because of
//! coefficient swell. `extended_gcd` is plain rational Euclid; it only ever
//! sees moduli of modest degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{modp, zpoly, AlgebraError, Polynomial};

/// Monic gcd of two polynomials, not both zero.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(AlgebraError::BothZero),
        (true, false) => Ok(b.monic()),
        (false, true) => Ok(a.monic()),
        (false, false) => {
            let g = gcd_primitive(&a.primitive_integer(), &b.primitive_integer());
            Ok(Polynomial::from_parts(g, BigInt::one()).monic())
        }
    }
}

/// Gcd of primitive integer polynomials with positive leading coefficients.
/// The result is primitive with positive leading coefficient.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    if a == b {
        return a.to_vec();
    }
    // Powers of q dividing both are split off first; they are common and cheap.
    let va = a.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let vb = b.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let v = va.min(vb);
    if v > 0 {
        let mut g = vec![BigInt::zero(); v];
        g.extend(gcd_primitive(&a[va..], &b[vb..]));
        return g;
    }

    let lc_a = a.last().expect("nonzero");
    let lc_b = b.last().expect("nonzero");
    let lc_gcd = lc_a.gcd(lc_b);
    let max_deg = (a.len() - 1).min(b.len() - 1);

    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut acc_deg = usize::MAX;
    let mut last_candidate: Option<Vec<BigInt>> = None;

    for &p in modp::primes() {
        let pb = BigInt::from(p);
        if lc_a.is_multiple_of(&pb) || lc_b.is_multiple_of(&pb) {
            continue;
        }
        let ap = modp::reduce(a, p);
        let bp = modp::reduce(b, p);
        let mut g = modp::gcd(&ap, &bp, p);
        let deg = g.len() - 1;
        if deg == 0 {
            return vec![BigInt::one()];
        }
        debug_assert!(deg <= max_deg);
        let scale = lc_gcd.mod_floor(&pb).to_u64().expect("fits");
        for c in g.iter_mut() {
            *c = modp::mul_mod(*c, scale, p);
        }

        match deg.cmp(&acc_deg) {
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Less => {
                acc = g.into_iter().map(BigInt::from).collect();
                acc_deg = deg;
                modulus = pb;
                last_candidate = None;
            }
            std::cmp::Ordering::Equal => {
                let m_inv = modp::inv_mod(modulus.mod_floor(&pb).to_u64().expect("fits"), p);
                for (c, &r) in acc.iter_mut().zip(&g) {
                    let c_mod = c.mod_floor(&pb).to_u64().expect("fits");
                    let diff = (r + p - c_mod) % p;
                    let t = modp::mul_mod(diff, m_inv, p);
                    *c += &modulus * BigInt::from(t);
                }
                modulus *= &pb;
            }
        }

        let half = &modulus >> 1;
        let lifted: Vec<BigInt> = acc
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let candidate = zpoly::primitive_part(&lifted);
        if last_candidate.as_ref() == Some(&candidate)
            && zpoly::div_exact(a, &candidate).is_some()
            && zpoly::div_exact(b, &candidate).is_some()
        {
            return candidate;
        }
        last_candidate = Some(candidate);
    }
    panic!("modular gcd exhausted its prime table");
}

/// Extended Euclid: `s*a + t*b = g` with `g` the monic gcd,
/// `deg(s) < deg(b/g)` and `deg(t) < deg(a/g)` whenever those bounds are
/// satisfiable (when `b/g` is constant, `s = 0`).
pub fn extended_gcd(
    a: &Polynomial,
    b: &Polynomial,
) -> Result<(Polynomial, Polynomial, Polynomial), AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
    while !r1.is_zero() {
        let (quot, rem) = r0.divrem(&r1)?;
        let s2 = &s0 - &(&quot * &s1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let inv = r0.leading_coeff().expect("gcd is nonzero").recip();
    let g = r0.scale(&inv);
    if b.is_zero() {
        return Ok((g, Polynomial::constant(inv), Polynomial::zero()));
    }
    // normalize s into its residue class mod b/g, then solve for t
    let b_red = b.div_exact(&g).expect("gcd divides b");
    let s = s0.scale(&inv).rem(&b_red)?;
    let t = (&g - &(&s * a))
        .div_exact(b)
        .expect("Bezout remainder divisible by b");
    Ok((g, s, t))
}

/// The unique `R` with `deg R < deg(m1*m2)`, `R ≡ r1 (mod m1)` and
/// `R ≡ r2 (mod m2)`. Residues are reduced first, so any representatives may
/// be passed.
pub fn poly_crt(
    m1: &Polynomial,
    m2: &Polynomial,
    r1: &Polynomial,
    r2: &Polynomial,
) -> Result<Polynomial, AlgebraError> {
    if m1.is_zero() || m2.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let (g, s, _) = extended_gcd(m1, m2)?;
    if !g.is_one() {
        return Err(AlgebraError::Coprimality { gcd: g });
    }
    let r1 = r1.rem(m1)?;
    let r2 = r2.rem(m2)?;
    // R = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    let lift = (&(&r2 - &r1) * &s).rem(m2)?;
    Ok(&r1 + &(m1 * &lift))
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inverse_mod(a: &Polynomial, m: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let (g, s, _) = extended_gcd(a, m)?;
    if !g.is_one() {
        return Err(AlgebraError::Coprimality { gcd: g });
    }
    s.rem(m)
}
