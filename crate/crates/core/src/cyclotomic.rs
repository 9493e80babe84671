//! Cyclotomic polynomials `Φ_n(q)` and their powers.
//!
//! `Φ_n` is obtained by exact division of `q^n - 1` by `Φ_d` for the proper
//! divisors `d` of `n`. Results are memoized for the process lifetime; the
//! cache is read-mostly and construction is idempotent, so two threads racing
//! on the same `n` both insert the same value.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

use crate::algebra::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic index must be at least 1")]
    ZeroIndex,
    #[error("modulus exponent must be at least 1")]
    ZeroExponent,
}

/// `Φ_n(q)^r` together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicModulus {
    pub n: usize,
    pub r: u32,
    pub modulus: Arc<Polynomial>,
}

impl CyclotomicModulus {
    pub fn degree(&self) -> usize {
        self.r as usize * euler_phi(self.n)
    }
}

pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<Polynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Polynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn power_cache() -> &'static RwLock<HashMap<(usize, u32), Arc<Polynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, u32), Arc<Polynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> Result<Arc<Polynomial>, CyclotomicError> {
    if n == 0 {
        return Err(CyclotomicError::ZeroIndex);
    }
    if let Some(p) = cache().read().expect("cache poisoned").get(&n) {
        return Ok(Arc::clone(p));
    }
    let mut value = Polynomial::q_power(n) - Polynomial::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d)?;
        value = value
            .div_exact(&phi_d)
            .expect("Φ_d divides q^n - 1 for every d | n");
    }
    let value = Arc::new(value);
    let mut guard = cache().write().expect("cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(value)))
}

/// `Φ_n(q)^r`, cached.
pub fn modulus_power(n: usize, r: u32) -> Result<CyclotomicModulus, CyclotomicError> {
    if r == 0 {
        return Err(CyclotomicError::ZeroExponent);
    }
    let base = cyclotomic(n)?;
    let cached = power_cache()
        .read()
        .expect("cache poisoned")
        .get(&(n, r))
        .cloned();
    let modulus = match cached {
        Some(m) => m,
        None => {
            let m = Arc::new(base.pow(r));
            let mut guard = power_cache().write().expect("cache poisoned");
            Arc::clone(guard.entry((n, r)).or_insert(m))
        }
    };
    Ok(CyclotomicModulus { n, r, modulus })
}
