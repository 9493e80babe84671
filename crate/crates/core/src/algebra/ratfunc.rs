use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{poly_gcd, AlgebraError, Polynomial};

/// Quotient of two polynomials in canonical form: coprime numerator and
/// denominator, denominator monic. Zero is `0/1`.
///
/// Every constructor and operation returns a canonical value, so structural
/// equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

impl RationalFunction {
    pub fn new(numer: Polynomial, denom: Polynomial) -> Result<Self, AlgebraError> {
        if denom.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonicalize(numer, denom))
    }

    fn canonicalize(numer: Polynomial, denom: Polynomial) -> Self {
        if numer.is_zero() {
            return Self::zero();
        }
        if denom.is_constant() {
            let c = denom.leading_coeff().expect("nonzero").recip();
            return RationalFunction {
                numer: numer.scale(&c),
                denom: Polynomial::one(),
            };
        }
        let g = poly_gcd(&numer, &denom).expect("denominator nonzero");
        let (numer, denom) = if g.is_one() {
            (numer, denom)
        } else {
            (
                numer.div_exact(&g).expect("gcd divides numerator"),
                denom.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::make_monic(numer, denom)
    }

    /// Assumes coprime inputs.
    fn make_monic(numer: Polynomial, denom: Polynomial) -> Self {
        let lc = denom.leading_coeff().expect("nonzero");
        if lc.is_one() {
            return RationalFunction { numer, denom };
        }
        let inv = lc.recip();
        RationalFunction {
            numer: numer.scale(&inv),
            denom: denom.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            numer: Polynomial::zero(),
            denom: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn q() -> Self {
        Self::from_poly(Polynomial::q())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::from_int(c))
    }

    /// `c * q^e` for any integer `e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if e >= 0 {
            Self::from_poly(Polynomial::monomial(c, e as usize))
        } else {
            RationalFunction {
                numer: Polynomial::constant(c),
                denom: Polynomial::monomial(BigRational::one(), e.unsigned_abs() as usize),
            }
        }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.numer, self.denom)
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    /// Re-runs canonicalization; a no-op on any value built by this module.
    pub fn canonical(&self) -> Self {
        Self::canonicalize(self.numer.clone(), self.denom.clone())
    }

    pub fn is_canonical(&self) -> bool {
        self.denom.is_monic()
            && (self.numer.is_zero() && self.denom.is_one()
                || poly_gcd(&self.numer, &self.denom).is_ok_and(|g| g.is_one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::make_monic(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RationalFunction {
            numer: base.numer.pow(e),
            denom: base.denom.pow(e),
        })
    }

    /// Substitutes `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        Self::make_monic(self.numer.compose_power(k), self.denom.compose_power(k))
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.denom.evaluate(x);
        if d.is_zero() {
            return Err(AlgebraError::Pole { at: x.clone() });
        }
        Ok(self.numer.evaluate(x) / d)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // (a/b)(c/d) with gcd(a,d) and gcd(c,b) cancelled
        let (a, d) = cancel(&self.numer, &rhs.denom);
        let (c, b) = cancel(&rhs.numer, &self.denom);
        Self::make_monic(&a * &c, &b * &d)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denom == rhs.denom {
            return Self::canonicalize(&self.numer + &rhs.numer, self.denom.clone());
        }
        // a + c/d = (ad + c)/d is already reduced
        if self.denom.is_one() {
            return Self::make_monic(&(&self.numer * &rhs.denom) + &rhs.numer, rhs.denom.clone());
        }
        if rhs.denom.is_one() {
            return Self::make_monic(&(&rhs.numer * &self.denom) + &self.numer, self.denom.clone());
        }
        // Henrici: with g = gcd(b, d), the sum's only possible cancellation is
        // against g.
        let g = poly_gcd(&self.denom, &rhs.denom).expect("nonzero");
        if g.is_one() {
            let numer = &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom);
            return Self::make_monic(numer, &self.denom * &rhs.denom);
        }
        let b1 = self.denom.div_exact(&g).expect("gcd divides");
        let d1 = rhs.denom.div_exact(&g).expect("gcd divides");
        let numer = &(&self.numer * &d1) + &(&rhs.numer * &b1);
        if numer.is_zero() {
            return Self::zero();
        }
        let h = poly_gcd(&numer, &g).expect("nonzero");
        if h.is_one() {
            return Self::make_monic(numer, &(&b1 * &d1) * &g);
        }
        let numer = numer.div_exact(&h).expect("gcd divides");
        let g = g.div_exact(&h).expect("gcd divides");
        Self::make_monic(numer, &(&b1 * &d1) * &g)
    }
}

fn cancel(x: &Polynomial, y: &Polynomial) -> (Polynomial, Polynomial) {
    if x.is_constant() || y.is_constant() {
        return (x.clone(), y.clone());
    }
    let g = poly_gcd(x, y).expect("nonzero");
    if g.is_one() {
        (x.clone(), y.clone())
    } else {
        (
            x.div_exact(&g).expect("gcd divides"),
            y.div_exact(&g).expect("gcd divides"),
        )
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_ref(&-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_ref(rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[i64]) -> Polynomial {
        Polynomial::from_ints(xs)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form_cancels_and_normalizes() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert!(f.is_polynomial());
        assert_eq!(
            f.numer(),
            &p(&[1, 1]).scale(&BigRational::new(1.into(), 2.into()))
        );
        assert!(f.is_canonical());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
        assert_eq!(RationalFunction::zero().inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[1, 1]);
        let s = &a + &b; // 2q / (q^2 - 1)
        assert_eq!(s, rf(&[0, 2], &[-1, 0, 1]));
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.denom(), &Polynomial::one());
        let m = &s * &rf(&[-1, 1], &[0, 1]); // 2 / (q + 1)
        assert_eq!(m, rf(&[2], &[1, 1]));
        assert!(m.is_canonical());
    }

    #[test]
    fn henrici_addition_with_shared_factor() {
        // 1/((q-1)(q+1)) + 1/((q-1)(q+2)) = (2q+3)/((q-1)(q+1)(q+2))
        let a = rf(&[1], &[-1, 0, 1]);
        let b = rf(&[1], &[-2, 1, 1]);
        let expect = RationalFunction::new(p(&[3, 2]), &p(&[-1, 0, 1]) * &p(&[2, 1])).unwrap();
        assert_eq!(&a + &b, expect);
        // 2/((q-1)(q+1)) - 3/((q-1)(q+2)) = -(q-1)/(...): the shared factor cancels
        let c = &a.scale(&crate::algebra::rat(2, 1)) - &b.scale(&crate::algebra::rat(3, 1));
        assert_eq!(c, rf(&[-1], &[2, 3, 1]));
    }

    #[test]
    fn negative_powers_and_evaluation() {
        let qi = RationalFunction::q_pow(-3);
        assert_eq!(&qi * &RationalFunction::q_pow(3), RationalFunction::one());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(qi.evaluate(&half).unwrap(), BigRational::from_integer(8.into()));
        assert!(matches!(
            qi.evaluate(&BigRational::zero()),
            Err(AlgebraError::Pole { .. })
        ));
        assert_eq!(rf(&[1, 1], &[0, 1]).pow(-2).unwrap(), rf(&[0, 0, 1], &[1, 2, 1]));
    }
}
