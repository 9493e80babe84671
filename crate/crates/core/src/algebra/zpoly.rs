//! Kernels on integer coefficient vectors (lowest degree first).
//!
//! These back [`Polynomial`](super::Polynomial), which stores a primitive-ish
//! integer vector plus a common denominator. Nothing here allocates rationals.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Gcd of all coefficients, nonnegative. Zero for the zero vector.
pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return Vec::new();
    }
    let neg = v.last().is_some_and(Signed::is_negative);
    v.iter()
        .map(|c| {
            let d = c / &g;
            if neg {
                -d
            } else {
                d
            }
        })
        .collect()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

/// `a*sa + b*sb`.
pub(crate) fn add_scaled(a: &[BigInt], sa: &BigInt, b: &[BigInt], sb: &BigInt) -> Vec<BigInt> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut c = BigInt::zero();
        if let Some(x) = a.get(i) {
            if !x.is_zero() {
                c += x * sa;
            }
        }
        if let Some(y) = b.get(i) {
            if !y.is_zero() {
                c += y * sb;
            }
        }
        out.push(c);
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * s).collect()
}

/// Schoolbook product.
/// Below this length on the shorter factor, schoolbook multiplication wins.
const KRONECKER_MIN_LEN: usize = 12;

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KRONECKER_MIN_LEN {
        mul_schoolbook(a, b)
    } else {
        mul_kronecker(a, b)
    }
}

pub(crate) fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Kronecker substitution: evaluate both factors at `2^s`, multiply the two
/// integers, and read the product coefficients back out of `s`-bit slots.
///
/// Slots are wide enough that every product coefficient `c` satisfies
/// `|c| < 2^{s-1}`; adding `2^{s-1}` to each slot before unpacking makes all
/// slots nonnegative, so no borrows cross slot boundaries.
fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let bits = |v: &[BigInt]| v.iter().map(|c| c.bits()).max().unwrap_or(0) as usize;
    let min_len = a.len().min(b.len());
    let slot = bits(a) + bits(b) + (usize::BITS - min_len.leading_zeros()) as usize + 1;
    let out_len = a.len() + b.len() - 1;

    let x = pack(a, slot);
    let y = pack(b, slot);
    let mut offset_words = vec![0u32; (out_len * slot) / 32 + 2];
    for i in 0..out_len {
        deposit(&mut offset_words, i * slot + slot - 1, &[1]);
    }
    let offset = BigInt::from(BigUint::new(offset_words));
    let shifted = (x * y + &offset).to_biguint().expect("offset makes every slot nonnegative");
    let words = shifted.to_u32_digits();
    let half = BigInt::one() << (slot - 1);
    let mut out: Vec<BigInt> = (0..out_len)
        .map(|i| BigInt::from(extract(&words, i * slot, slot)) - &half)
        .collect();
    trim(&mut out);
    out
}

fn pack(v: &[BigInt], slot: usize) -> BigInt {
    let len = (v.len() * slot) / 32 + 2;
    let mut pos = vec![0u32; len];
    let mut neg = vec![0u32; len];
    for (i, c) in v.iter().enumerate() {
        let (sign, digits) = c.to_u32_digits();
        match sign {
            Sign::Plus => deposit(&mut pos, i * slot, &digits),
            Sign::Minus => deposit(&mut neg, i * slot, &digits),
            Sign::NoSign => {}
        }
    }
    BigInt::from(BigUint::new(pos)) - BigInt::from(BigUint::new(neg))
}

/// OR `digits` into `words` starting at bit `start`.
fn deposit(words: &mut [u32], start: usize, digits: &[u32]) {
    let (w, off) = (start / 32, start % 32);
    for (k, &d) in digits.iter().enumerate() {
        let v = (d as u64) << off;
        words[w + k] |= v as u32;
        let hi = (v >> 32) as u32;
        if hi != 0 {
            words[w + k + 1] |= hi;
        }
    }
}

/// Bits `[start, start + len)` of `words` as an unsigned integer.
fn extract(words: &[u32], start: usize, len: usize) -> BigUint {
    let word = |i: usize| words.get(i).copied().unwrap_or(0) as u64;
    let end = start + len;
    let mut out = Vec::with_capacity(len / 32 + 1);
    let mut pos = start;
    while pos < end {
        let (w, off) = (pos / 32, pos % 32);
        let take = (end - pos).min(32);
        let chunk = ((word(w) >> off) | (word(w + 1) << (32 - off))) & ((1u64 << take) - 1);
        out.push(chunk as u32);
        pos += take;
    }
    BigUint::new(out)
}

/// Division with lazy leading-coefficient scaling.
///
/// Returns `(s, quot, rem)` with `s > 0`, `s*a = quot*b + rem` and
/// `deg(rem) < deg(b)`. When `lc(b)` divides every leading coefficient met
/// along the way (always true for `lc(b) = ±1`), `s = 1`.
pub(crate) fn divrem(a: &[BigInt], b: &[BigInt]) -> (BigInt, Vec<BigInt>, Vec<BigInt>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    if a.len() <= db {
        return (BigInt::one(), Vec::new(), a.to_vec());
    }
    let lc = &b[db];
    let lc_abs = lc.abs();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    let mut s = BigInt::one();
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        if !r[i].is_multiple_of(lc) {
            let g = r[i].gcd(lc);
            let f = &lc_abs / g;
            for c in r[..=i].iter_mut() {
                *c *= &f;
            }
            for c in q.iter_mut() {
                *c *= &f;
            }
            s *= &f;
        }
        let t = &r[i] / lc;
        let base = i - db;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[base + j] -= &t * bj;
            }
        }
        q[base] = t;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (s, q, r)
}

/// Exact quotient `a / d` over the integers, or `None` if `d` does not divide
/// `a` in `Z[x]`. For primitive `d` this is the same as divisibility in `Q[x]`.
pub(crate) fn div_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!d.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    let dd = d.len() - 1;
    if a.len() <= dd {
        return None;
    }
    let lc = &d[dd];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (dd..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (t, rem) = r[i].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        let base = i - dd;
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                r[base + j] -= &t * dj;
            }
        }
        q[base] = t;
    }
    if r[..dd].iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}
