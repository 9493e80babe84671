use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly;
use super::AlgebraError;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

/// Dense univariate polynomial in `q` with rational coefficients.
///
/// Stored as an integer vector over one positive common denominator with
/// `gcd(content, denom) = 1`, so two equal polynomials always have equal
/// representations. The zero polynomial is the empty vector over 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    numer: Vec<BigInt>,
    denom: BigInt,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            numer: Vec::new(),
            denom: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `q^deg`.
    pub fn q_power(deg: usize) -> Self {
        Self::monomial(BigRational::one(), deg)
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut numer = vec![BigInt::zero(); deg + 1];
        let (n, d) = c.into_raw();
        numer[deg] = n;
        Self::from_parts(numer, d)
    }

    /// Builds from rationals, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut denom = BigInt::one();
        for c in &coeffs {
            if !c.is_zero() {
                denom = denom.lcm(c.denom());
            }
        }
        let numer = coeffs
            .into_iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        Self::from_parts(numer, denom)
    }

    /// Builds from small integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_parts(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    /// `numer / denom`, normalized. Panics on a zero denominator.
    pub(crate) fn from_parts(mut numer: Vec<BigInt>, mut denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero common denominator");
        zpoly::trim(&mut numer);
        if numer.is_empty() {
            return Self::zero();
        }
        if denom.is_negative() {
            denom = -denom;
            for c in numer.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !denom.is_one() {
            let mut g = denom.clone();
            for c in &numer {
                if c.is_zero() {
                    continue;
                }
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() {
                for c in numer.iter_mut() {
                    *c = &*c / &g;
                }
                denom /= &g;
            }
        }
        Polynomial { numer, denom }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.numer.len() == 1 && self.denom.is_one() && self.numer[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.numer.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.numer.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Number of stored coefficients (degree + 1, or 0 for zero).
    pub fn len(&self) -> usize {
        self.numer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numer.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        match self.numer.get(i) {
            Some(c) => BigRational::new(c.clone(), self.denom.clone()),
            None => BigRational::zero(),
        }
    }

    /// Coefficients lowest degree first; empty for zero.
    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.numer.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> Option<BigRational> {
        self.numer.len().checked_sub(1).map(|i| self.coeff(i))
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.denom.is_one()
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.numer.iter().position(|c| !c.is_zero())
    }

    /// Primitive integer polynomial with positive leading coefficient that is
    /// a rational multiple of `self`.
    pub(crate) fn primitive_integer(&self) -> Vec<BigInt> {
        zpoly::primitive_part(&self.numer)
    }

    /// `self / lc(self)`; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.numer.last() {
            None => Self::zero(),
            Some(lc) => Self::from_parts(self.numer.clone(), lc.clone()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.numer.last().is_some_and(|lc| lc == &self.denom)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::from_parts(zpoly::scale(&self.numer, c.numer()), &self.denom * c.denom())
    }

    /// `self * q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut numer = vec![BigInt::zero(); k];
        numer.extend(self.numer.iter().cloned());
        Polynomial {
            numer,
            denom: self.denom.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "exponent must be positive");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut numer = vec![BigInt::zero(); (self.numer.len() - 1) * k + 1];
        for (i, c) in self.numer.iter().enumerate() {
            numer[i * k] = c.clone();
        }
        Polynomial {
            numer,
            denom: self.denom.clone(),
        }
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Horner on u/v with everything scaled by v^deg
        let (u, v) = (x.numer(), x.denom());
        let deg = self.numer.len() - 1;
        let mut acc = BigInt::zero();
        let mut vpow = BigInt::one();
        for c in self.numer.iter().rev() {
            acc = acc * u + c * &vpow;
            vpow *= v;
        }
        // acc = sum c_i u^i v^(deg-i)
        BigRational::new(acc, &self.denom * v.pow(deg as u32))
    }

    /// Euclidean division: `self = divisor*quot + rem`, `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.degree() < divisor.degree() {
            return Ok((Self::zero(), self.clone()));
        }
        let (s, q, r) = zpoly::divrem(&self.numer, &divisor.numer);
        // s*A = Q*B + R with self = A/da, divisor = B/db
        let base = &s * &self.denom;
        let quot = Self::from_parts(zpoly::scale(&q, &divisor.denom), base.clone());
        let rem = Self::from_parts(r, base);
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Quotient when `divisor` divides `self` exactly, else `None`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dp = divisor.primitive_integer();
        let q = zpoly::div_exact(&self.numer, &dp)?;
        // divisor = dp * c for the rational c = divisor.lc / dp.lc
        let dp_lc = dp.last().expect("nonzero");
        let div_lc = divisor.numer.last().expect("nonzero");
        // self/divisor = (A/da) / (dp * div_lc / (dp_lc * db)) = A/dp * dp_lc*db / (da*div_lc)
        Some(Self::from_parts(
            zpoly::scale(&q, &(dp_lc * &divisor.denom)),
            &self.denom * div_lc,
        ))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_exact(self).is_some()
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denom == rhs.denom {
            return Polynomial::from_parts(zpoly::add(&self.numer, &rhs.numer), self.denom.clone());
        }
        let l = self.denom.lcm(&rhs.denom);
        let sa = &l / &self.denom;
        let sb = &l / &rhs.denom;
        Polynomial::from_parts(zpoly::add_scaled(&self.numer, &sa, &rhs.numer, &sb), l)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_parts(zpoly::mul(&self.numer, &rhs.numer), &self.denom * &rhs.denom)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            numer: self.numer.iter().map(|c| -c).collect(),
            denom: self.denom.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.numer.len()).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        let a = Polynomial::from_ints(&[-1, 1]);
        let b = Polynomial::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = Polynomial::from_coeffs(vec![r(1, 2), r(-3, 4), r(5, 1)]);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn evaluate_at_rational() {
        let p = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(p.evaluate(&r(2, 3)), r(13, 9));
        assert_eq!(Polynomial::zero().evaluate(&r(7, 5)), r(0, 1));
        assert_eq!(Polynomial::from_ints(&[4]).evaluate(&r(7, 5)), r(4, 1));
    }

    #[test]
    fn divrem_examples() {
        let (q, rem) = Polynomial::from_ints(&[-1, 0, 1])
            .divrem(&Polynomial::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(q, Polynomial::from_ints(&[1, 1]));
        assert!(rem.is_zero());

        let (q, rem) = Polynomial::from_ints(&[0, 0, 0, 1])
            .divrem(&Polynomial::from_ints(&[0, 0, 1]))
            .unwrap();
        assert_eq!(q, Polynomial::q());
        assert!(rem.is_zero());

        let (q, rem) = Polynomial::from_ints(&[1, 0, 0, 1])
            .divrem(&Polynomial::from_ints(&[1, 0, 1]))
            .unwrap();
        assert_eq!(q, Polynomial::q());
        assert_eq!(rem, Polynomial::from_ints(&[1, -1]));
    }

    #[test]
    fn divrem_by_zero() {
        assert_eq!(
            Polynomial::q().divrem(&Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn divrem_rational_divisor() {
        let a = Polynomial::from_coeffs(vec![r(1, 3), r(2, 1), r(-5, 7), r(1, 1)]);
        let b = Polynomial::from_coeffs(vec![r(3, 2), r(7, 5)]);
        let (q, rem) = a.divrem(&b).unwrap();
        assert_eq!(&(&b * &q) + &rem, a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Polynomial::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), Degree::NegInfinity);
    }

    #[test]
    fn canonical_representation() {
        let a = Polynomial::from_coeffs(vec![r(2, 4), r(1, 2)]);
        let b = Polynomial::from_ints(&[1, 1]).scale(&r(1, 2));
        assert_eq!(a, b);
        assert!(a.monic().is_monic());
    }

    #[test]
    fn exact_division_with_rational_divisor() {
        let d = Polynomial::from_coeffs(vec![r(-2, 3), r(4, 1)]);
        let f = Polynomial::from_coeffs(vec![r(5, 7), r(1, 1), r(-1, 9)]);
        let p = &d * &f;
        assert_eq!(p.div_exact(&d), Some(f));
        assert_eq!(Polynomial::from_ints(&[1, 0, 1]).div_exact(&d), None);
    }

    #[test]
    fn display() {
        let p = Polynomial::from_coeffs(vec![r(-1, 1), r(0, 1), r(3, 2), r(1, 1)]);
        assert_eq!(p.to_string(), "q^3 + 3/2*q^2 - 1");
    }
}
