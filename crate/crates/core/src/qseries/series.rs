use crate::algebra::{Polynomial, RationalFunction};

use super::{QExpression, QSeriesError};

/// `(x; base)_count = ∏_{j<count} (1 - x·base^j)`.
pub fn q_pochhammer(x: &RationalFunction, base: &Polynomial, count: usize) -> QExpression {
    let mut acc = RationalFunction::one();
    let mut power = Polynomial::one();
    for _ in 0..count {
        let factor = &RationalFunction::one() - &(x * &RationalFunction::from_poly(power.clone()));
        if factor.is_zero() {
            return RationalFunction::zero();
        }
        acc = &acc * &factor;
        power = &power * base;
    }
    acc
}

/// Compact product `(x_1, …, x_m; base)_count`.
pub fn q_pochhammer_product(xs: &[RationalFunction], base: &Polynomial, count: usize) -> QExpression {
    xs.iter().fold(RationalFunction::one(), |acc, x| &acc * &q_pochhammer(x, base, count))
}

/// `[n] = 1 + q + … + q^{n-1}`.
pub fn q_integer(n: usize) -> QExpression {
    RationalFunction::from_poly(Polynomial::from_ints(&vec![1; n]))
}

/// A terminating `_{r+1}φ_r` truncated after `truncation` terms past the
/// first: `Σ_{k=0}^{N} (upper; base)_k / (base, lower; base)_k · z^k`.
#[derive(Clone, Debug)]
pub struct PhiSeriesSpec {
    pub upper: Vec<RationalFunction>,
    pub lower: Vec<RationalFunction>,
    pub base: Polynomial,
    pub argument: RationalFunction,
    pub truncation: usize,
}

/// Sums a [`PhiSeriesSpec`] in nested (Horner) form
/// `1 + r_0(1 + r_1(1 + …))`, where `r_k` is the ratio of term `k+1` to
/// term `k`. Each step multiplies the accumulated value by a low-degree
/// ratio and adds 1, so no gcd between two large denominators is needed.
///
/// Once a ratio vanishes (an upper parameter terminated the series) the
/// remaining terms are identically zero and are not built.
pub fn phi_series(spec: &PhiSeriesSpec) -> Result<QExpression, QSeriesError> {
    let one = RationalFunction::one();
    let mut ratios = Vec::with_capacity(spec.truncation);
    let mut power = Polynomial::one(); // base^k
    for k in 0..spec.truncation {
        let base_k = RationalFunction::from_poly(power.clone());
        let next_power = &power * &spec.base;
        let mut numer = spec.argument.clone();
        for a in &spec.upper {
            numer = &numer * &(&one - &(a * &base_k));
        }
        if numer.is_zero() {
            break;
        }
        let mut denom = &one - &RationalFunction::from_poly(next_power.clone());
        if denom.is_zero() {
            return Err(QSeriesError::ZeroTermDenominator {
                k: k + 1,
                parameter: "base".into(),
            });
        }
        for (j, b) in spec.lower.iter().enumerate() {
            let f = &one - &(b * &base_k);
            if f.is_zero() {
                return Err(QSeriesError::ZeroTermDenominator {
                    k: k + 1,
                    parameter: format!("lower[{j}]"),
                });
            }
            denom = &denom * &f;
        }
        ratios.push(numer.checked_div(&denom)?);
        power = next_power;
    }
    let mut acc = RationalFunction::one();
    for r in ratios.iter().rev() {
        acc = &one + &(r * &acc);
    }
    Ok(acc)
}
