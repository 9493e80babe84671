//! Word-size prime field arithmetic for the modular gcd.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The primes below 2^62 in descending order, generated on first use.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 512 {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

pub(crate) fn reduce(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `F_p`. Inputs need not be trimmed.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        rem_in_place(&mut r0, &r1, p);
        std::mem::swap(&mut r0, &mut r1);
    }
    if let Some(&lc) = r0.last() {
        let inv = inv_mod(lc, p);
        for c in r0.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    r0
}

fn rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let t = mul_mod(a[top], inv, p);
        if t != 0 {
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate() {
                let s = mul_mod(t, bj, p);
                let x = &mut a[shift + j];
                *x = if *x >= s { *x - s } else { *x + p - s };
            }
        }
        a.pop();
        trim(a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_table_is_prime() {
        let ps = primes();
        assert_eq!(ps.len(), 512);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        // 2^61 - 1 is a Mersenne prime, a known positive
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64((1u64 << 62) - 1));
    }

    #[test]
    fn gcd_mod_p() {
        let p = 1_000_000_007;
        // (x-1)(x+2) and (x-1)(x+5)
        let a = [p - 2, 1, 1];
        let b = [p - 5, 4, 1];
        assert_eq!(gcd(&a, &b, p), vec![p - 1, 1]);
    }
}
