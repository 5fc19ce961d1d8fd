//! Differentiation and the exp/log/power/reciprocal operations.
//!
//! Differentiation is exact: the derivative of a monomial has one term per
//! branch of its tree, with the branch's edge-label product as coefficient.
//! The transcendental operations route through the canonical decompositions
//! and Maclaurin term streams under the budget contract: the returned series
//! is a prefix of the exact result.

use num::{BigInt, One};

use crate::coeff::{Coeff, Rational};
use crate::error::{Error, Result};
use crate::mono::Monomial;
use crate::series::{Budget, Term, Transseries};
use crate::stream;

/// Exact derivative.
pub fn derivative(t: &Transseries) -> Transseries {
    let mut out = Transseries::zero();
    for term in t.terms() {
        out = out.add(&mono_derivative(&term.mono).scale(&term.coeff));
    }
    out
}

/// Derivative of a single monomial, as a series.
///
/// `x' = 1`; for iterated logs `l_m' = 1/(x l_1 ... l_(m-1))`; for iterated
/// exps `l_(-k)' = exp_1 ... exp_k`; and `exp(L)' = L' exp(L)` recursively.
fn mono_derivative(g: &Monomial) -> Transseries {
    match g {
        Monomial::Leaf(0) => Transseries::one(),
        Monomial::Leaf(m) if *m > 0 => {
            // product of l_j^(-1) for j = 0..m-1, i.e. exp(-(l_1 + ... + l_m))
            let mut exponent = Transseries::zero();
            for j in 1..=*m {
                exponent = exponent.add(&Transseries::leaf(j).neg());
            }
            Transseries::from_mono(Monomial::exp_of(exponent))
        }
        Monomial::Leaf(m) => {
            // product of exp_j for j = 1..k, i.e. exp(l_0 + l_(-1) + ... + l_(m+1))
            let k = -*m;
            let mut exponent = Transseries::zero();
            for j in 1..=k {
                exponent = exponent.add(&Transseries::leaf(1 - j));
            }
            Transseries::from_mono(Monomial::exp_of(exponent))
        }
        Monomial::Exp(l) => derivative(l).mul(&Transseries::from_mono(g.clone())),
    }
}

/// Maclaurin coefficient rule for `exp`: `1/j!`.
pub fn exp_rule() -> impl FnMut(u32) -> Option<Coeff> {
    let mut factorial = BigInt::one();
    let mut j_prev = 0u32;
    move |j| {
        debug_assert!(j == j_prev || j == j_prev + 1 || j == 0);
        while j_prev < j {
            j_prev += 1;
            factorial *= BigInt::from(j_prev);
        }
        Some(Coeff::from_rational(Rational::new(
            BigInt::one(),
            factorial.clone(),
        )))
    }
}

/// Maclaurin coefficient rule for `log(1+u)`: `0, 1, -1/2, 1/3, ...`.
pub fn log_rule() -> impl FnMut(u32) -> Option<Coeff> {
    |j| {
        if j == 0 {
            Some(Coeff::zero())
        } else {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            Some(Coeff::rational(sign, i64::from(j)))
        }
    }
}

/// Geometric rule for `1/(1+u)`: `(-1)^j`.
pub fn reciprocal_rule() -> impl FnMut(u32) -> Option<Coeff> {
    |j| Some(Coeff::from_int(if j % 2 == 0 { 1 } else { -1 }))
}

/// Binomial rule for `(1+u)^c`: `C(c, j)`; terminates for natural `c`.
pub fn binomial_rule(c: &Rational) -> impl FnMut(u32) -> Option<Coeff> {
    let c = c.clone();
    let mut prev = Rational::one();
    let mut j_prev = 0u32;
    move |j| {
        debug_assert!(j == j_prev || j == j_prev + 1 || j == 0);
        while j_prev < j {
            let k = Rational::from(BigInt::from(j_prev));
            prev = &prev * (&c - &k) / (k + Rational::one());
            j_prev += 1;
            if prev == Rational::from(BigInt::from(0)) {
                return None;
            }
        }
        Some(Coeff::from_rational(prev.clone()))
    }
}

/// First `budget` terms of `sum_j rule(j) * u^j`; `u` must be small.
pub fn series_apply(
    rule: impl FnMut(u32) -> Option<Coeff>,
    u: &Transseries,
    budget: Budget,
) -> Result<Transseries> {
    stream::series_apply(rule, u, budget)
}

/// First `budget` terms of `exp(t)`.
///
/// Decomposes `t = L + c + V`; the purely large part becomes a single
/// monomial, the constant must be rational, and the small part feeds the
/// Maclaurin stream.
pub fn exp_ts(t: &Transseries, budget: Budget) -> Result<Transseries> {
    let (large, constant, small) = t.additive_decomp();
    let mono = Monomial::exp_of(large);
    let scalar = constant.exp()?;
    let tail = series_apply(exp_rule(), &small, budget.work())?;
    Ok(tail.mul_term(&Term::new(scalar, mono)).truncated(budget))
}

/// First `budget` terms of `log(t)` for `t > 0`.
pub fn log_ts(t: &Transseries, budget: Budget) -> Result<Transseries> {
    if t.sign() <= 0 {
        return Err(Error::LogOfNonPositive);
    }
    let (a, g, u) = t.mult_decomp()?;
    let scalar = a.log()?;
    let exponent = if g.is_unit() {
        Transseries::zero()
    } else {
        g.exponent()
    };
    let tail = series_apply(log_rule(), &u, budget.work())?;
    Ok(exponent
        .add_constant(&scalar)
        .add(&tail)
        .truncated(budget))
}

/// First `budget` terms of `t^c` for rational `c`. Exact for integer `c`;
/// otherwise `t` must be positive with a representable leading coefficient
/// power.
pub fn power_ts(t: &Transseries, c: &Rational, budget: Budget) -> Result<Transseries> {
    if c.is_integer() {
        use num::ToPrimitive;
        let n = c
            .numer()
            .to_i64()
            .ok_or(Error::CoefficientPowerNotRepresentable)?;
        if n >= 0 {
            return Ok(t.pow_int(n as u32).truncated(budget));
        }
        if t.is_zero() {
            return Err(Error::ZeroSeries);
        }
        return reciprocal(&t.pow_int((-n) as u32), budget);
    }
    if t.is_zero() || t.sign() < 0 {
        return Err(Error::NonPositiveBase);
    }
    let (a, g, u) = t.mult_decomp()?;
    let scalar = a.pow_rational(c)?;
    let mono = g.pow(&Coeff::from_rational(c.clone()));
    let tail = series_apply(binomial_rule(c), &u, budget.work())?;
    Ok(tail.mul_term(&Term::new(scalar, mono)).truncated(budget))
}

/// First `budget` terms of `1/t` for nonzero `t`.
pub fn reciprocal(t: &Transseries, budget: Budget) -> Result<Transseries> {
    if t.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let (a, g, u) = t.mult_decomp()?;
    let lead = Term::new(a.inv()?, g.inv());
    let tail = series_apply(reciprocal_rule(), &u, budget.work())?;
    Ok(tail.mul_term(&lead).truncated(budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rat};

    fn x() -> Transseries {
        Transseries::x()
    }

    fn xpow(n: i64, d: i64) -> Transseries {
        Transseries::from_mono(Monomial::x().pow(&Coeff::rational(n, d)))
    }

    fn b(n: usize) -> Budget {
        Budget::new(n)
    }

    #[test]
    fn derivative_of_powers() {
        let x3 = xpow(3, 1);
        assert_eq!(derivative(&x3), xpow(2, 1).scale(&Coeff::from_int(3)));
        assert_eq!(derivative(&x()), Transseries::one());
        assert_eq!(derivative(&Transseries::one()), Transseries::zero());
        // (x^(1/2))' = 1/2 x^(-1/2)
        assert_eq!(
            derivative(&xpow(1, 2)),
            xpow(-1, 2).scale(&Coeff::rational(1, 2))
        );
    }

    #[test]
    fn derivative_of_log_chain() {
        // (log log x)' = 1/(x log x)
        let l2 = Transseries::leaf(2);
        let expect = Transseries::from_mono(
            Monomial::x().inv().mul(&Monomial::leaf(1).inv()),
        );
        assert_eq!(derivative(&l2), expect);
        // (e^(e^x))' = e^x * e^(e^x)
        let e2 = Transseries::leaf(-2);
        let expect = Transseries::from_mono(Monomial::leaf(-1).mul(&Monomial::leaf(-2)));
        assert_eq!(derivative(&e2), expect);
    }

    #[test]
    fn leibniz_on_samples() {
        let a = x().add(&Transseries::leaf(1));
        let b = xpow(2, 1).sub(&Transseries::one());
        let lhs = derivative(&a.mul(&b));
        let rhs = derivative(&a).mul(&b).add(&a.mul(&derivative(&b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_examples() {
        // exp(log x) = x
        assert_eq!(exp_ts(&Transseries::leaf(1), b(4)).unwrap(), x());
        // exp(2) = e^2
        assert_eq!(
            exp_ts(&Transseries::constant(Coeff::from_int(2)), b(4)).unwrap(),
            Transseries::constant(Coeff::e_power(int(2)))
        );
        // exp(x + 1/x) to 3 terms
        let t = x().add(&xpow(-1, 1));
        let got = exp_ts(&t, b(3)).unwrap();
        let ex = Monomial::leaf(-1);
        let expect = Transseries::from_mono(ex.clone())
            .add(&Transseries::term(
                Coeff::one(),
                ex.clone().mul(&Monomial::x().inv()),
            ))
            .add(&Transseries::term(
                Coeff::rational(1, 2),
                ex.mul(&Monomial::x().pow(&Coeff::from_int(-2))),
            ));
        assert_eq!(got, expect);
        // constant must be rational
        let bad = x().add_constant(&Coeff::e_power(int(1)));
        assert!(matches!(
            exp_ts(&bad, b(3)),
            Err(Error::ConstantNotExponentiable)
        ));
    }

    #[test]
    fn log_examples() {
        // log(e^x) = x
        assert_eq!(log_ts(&Transseries::leaf(-1), b(4)).unwrap(), x());
        // log(E*x) = 1 + log x
        let t = x().scale(&Coeff::e_power(int(1)));
        assert_eq!(
            log_ts(&t, b(4)).unwrap(),
            Transseries::leaf(1).add(&Transseries::one())
        );
        // log(x^2 + x) to 3 terms = 2 log x + 1/x - 1/(2x^2)
        let t = xpow(2, 1).add(&x());
        let got = log_ts(&t, b(3)).unwrap();
        let expect = Transseries::leaf(1)
            .scale(&Coeff::from_int(2))
            .add(&xpow(-1, 1))
            .add(&xpow(-2, 1).scale(&Coeff::rational(-1, 2)));
        assert_eq!(got, expect);
        assert!(matches!(
            log_ts(&x().neg(), b(3)),
            Err(Error::LogOfNonPositive)
        ));
        assert!(matches!(
            log_ts(&Transseries::zero(), b(3)),
            Err(Error::LogOfNonPositive)
        ));
        // log(2x) needs log(2), which leaves the field
        let t = x().scale(&Coeff::from_int(2));
        assert!(matches!(
            log_ts(&t, b(3)),
            Err(Error::LogConstantNotRepresentable)
        ));
    }

    #[test]
    fn power_examples() {
        // (x^2)^(1/2) = x
        assert_eq!(power_ts(&xpow(2, 1), &rat(1, 2), b(4)).unwrap(), x());
        // (x+1)^(-1) to 3 terms
        let got = power_ts(&x().add(&Transseries::one()), &int(-1), b(3)).unwrap();
        let expect = xpow(-1, 1).add(&xpow(-2, 1).neg()).add(&xpow(-3, 1));
        assert_eq!(got, expect);
        // (x + log x)^(1/2) to 2 terms = x^(1/2) + (1/2) x^(-1/2) log x
        let t = x().add(&Transseries::leaf(1));
        let got = power_ts(&t, &rat(1, 2), b(2)).unwrap();
        let expect = xpow(1, 2).add(&Transseries::term(
            Coeff::rational(1, 2),
            Monomial::x()
                .pow(&Coeff::rational(-1, 2))
                .mul(&Monomial::leaf(1)),
        ));
        assert_eq!(got, expect);
        assert!(matches!(
            power_ts(&x().neg(), &rat(1, 2), b(2)),
            Err(Error::NonPositiveBase)
        ));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(reciprocal(&x(), b(4)).unwrap(), xpow(-1, 1));
        // 1/(-2 e^x) = -1/2 e^(-x)
        let t = Transseries::leaf(-1).scale(&Coeff::from_int(-2));
        assert_eq!(
            reciprocal(&t, b(4)).unwrap(),
            Transseries::term(Coeff::rational(-1, 2), Monomial::leaf(-1).inv())
        );
        // 1/(1 - 1/x) to 3 terms
        let t = Transseries::one().sub(&xpow(-1, 1));
        let got = reciprocal(&t, b(3)).unwrap();
        let expect = Transseries::one().add(&xpow(-1, 1)).add(&xpow(-2, 1));
        assert_eq!(got, expect);
        assert!(matches!(
            reciprocal(&Transseries::zero(), b(3)),
            Err(Error::ZeroSeries)
        ));
    }

    #[test]
    fn log_series_oracle() {
        // log(1 + 1/log x) to 3 terms straight from the Maclaurin expansion.
        let u = Transseries::from_mono(Monomial::leaf(1).inv());
        let got = series_apply(log_rule(), &u, b(3)).unwrap();
        let l1_inv = Monomial::leaf(1).inv();
        let expect = Transseries::from_mono(l1_inv.clone())
            .add(&Transseries::term(
                Coeff::rational(-1, 2),
                l1_inv.pow(&Coeff::from_int(2)),
            ))
            .add(&Transseries::term(
                Coeff::rational(1, 3),
                l1_inv.pow(&Coeff::from_int(3)),
            ));
        assert_eq!(got, expect);
    }

    #[test]
    fn exp_maclaurin_identity() {
        assert_eq!(
            series_apply(exp_rule(), &Transseries::zero(), b(5)).unwrap(),
            Transseries::one()
        );
    }

    #[test]
    fn exp_log_round_trip_prefix() {
        // log(exp(T)) returns T's prefix and vice versa
        let t = x().add(&Transseries::one()).add(&xpow(-1, 1));
        let e = exp_ts(&t, b(8)).unwrap();
        let back = log_ts(&e, b(3)).unwrap();
        assert_eq!(back, t);
        let l = log_ts(&x().add(&Transseries::one()), b(8)).unwrap();
        let back = exp_ts(&l, b(2)).unwrap();
        assert_eq!(back, x().add(&Transseries::one()).truncated(b(2)));
    }

    #[test]
    fn derivative_chain_rule_for_exp() {
        // (exp T)' = T' exp T on the common exact prefix
        let t = x().add(&xpow(-1, 1));
        let e = exp_ts(&t, b(10)).unwrap();
        let lhs = derivative(&e).truncated(b(6));
        let rhs = exp_ts(&t, b(12)).unwrap().mul(&derivative(&t)).truncated(b(6));
        assert_eq!(lhs, rhs);
    }
}
