//! Exact arithmetic: rationals, dense polynomials over the rationals,
//! rational functions in canonical form, Euclidean algorithms and the
//! polynomial Chinese remainder theorem.

mod gcd;
mod modp;
mod poly;
mod ratfunc;
mod zpoly;

pub use gcd::{extended_gcd, inverse_mod, poly_crt, poly_gcd};
pub use modp::is_prime_u64;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Degree, Polynomial};
pub use ratfunc::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("moduli are not coprime (gcd = {gcd})")]
    Coprimality { gcd: Polynomial },
    #[error("denominator vanishes at {at}")]
    Pole { at: BigRational },
}

/// `n/d` as a [`BigRational`]. Panics if `d = 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Residue of a rational function modulo `m`: the unique polynomial of
/// degree below `deg m` congruent to `f`. Requires the denominator of `f` to
/// be invertible modulo `m`.
pub fn residue_mod(f: &RationalFunction, m: &Polynomial) -> Result<Polynomial, AlgebraError> {
    if m.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let inv = inverse_mod(f.denom(), m)?;
    (f.numer() * &inv).rem(m)
}
