//! Exact ordered coefficient field: fractions over the rational span of
//! `{e^q : q rational}`.
//!
//! Values are `num/den` where both parts are finite sums `sum r_i * e^(q_i)`
//! with rational `r_i`, `q_i`. Distinct powers of `e` are linearly independent
//! over the rationals, so equality is structural once fractions are reduced,
//! and the sign of a nonzero value can always be decided by interval
//! enclosures of `e^q` at high enough precision.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, the base scalar type.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Finite sum `sum r_i * e^(q_i)`, keyed by exponent. No zero coefficients
/// are stored; the zero value is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<Rational, Rational>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly::default()
    }

    pub fn one() -> Self {
        ExpPoly::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Rational::zero(), r);
        }
        ExpPoly { terms }
    }

    /// The single term `r * e^(q)`.
    pub fn single(q: Rational, r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(q, r);
        }
        ExpPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Some(r) when the value is the plain rational r.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(r) = self.terms.get(&Rational::zero()) {
                return Some(r.clone());
            }
        }
        None
    }

    /// Some((q, r)) when the value is the single term `r * e^(q)`.
    pub fn as_single(&self) -> Option<(Rational, Rational)> {
        if self.terms.len() == 1 {
            let (q, r) = self.terms.iter().next().unwrap();
            Some((q.clone(), r.clone()))
        } else {
            None
        }
    }

    fn insert_add(&mut self, q: Rational, r: Rational) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(q) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(r);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + r;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (q, r) in &other.terms {
            out.insert_add(q.clone(), r.clone());
        }
        out
    }

    pub fn neg(&self) -> ExpPoly {
        ExpPoly {
            terms: self.terms.iter().map(|(q, r)| (q.clone(), -r)).collect(),
        }
    }

    pub fn sub(&self, other: &ExpPoly) -> ExpPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (qa, ra) in &self.terms {
            for (qb, rb) in &other.terms {
                out.insert_add(qa + qb, ra * rb);
            }
        }
        out
    }

    /// Multiply by the scalar unit `r * e^(q)`.
    fn scale(&self, q: &Rational, r: &Rational) -> ExpPoly {
        if r.is_zero() {
            return ExpPoly::zero();
        }
        ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|(qa, ra)| (qa + q, ra * r))
                .collect(),
        }
    }

    fn min_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    /// Exact sign. Fast paths cover the all-same-sign cases (every `e^q` is
    /// positive); mixed signs fall back to interval evaluation with doubling
    /// precision, which terminates because a nonzero value is bounded away
    /// from zero.
    pub fn sign(&self) -> i32 {
        if self.terms.is_empty() {
            return 0;
        }
        let mut pos = false;
        let mut neg = false;
        for r in self.terms.values() {
            if r.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (true, false) => return 1,
            (false, true) => return -1,
            _ => {}
        }
        let mut prec: u64 = 64;
        loop {
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for (q, r) in &self.terms {
                let (elo, ehi) = exp_bounds(q, prec);
                if r.is_positive() {
                    lo += r * &elo;
                    hi += r * &ehi;
                } else {
                    lo += r * &ehi;
                    hi += r * &elo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            prec *= 2;
        }
    }
}

/// Directed rational enclosure of `e^q` with width below `2^-prec_bits`.
fn exp_bounds(q: &Rational, prec_bits: u64) -> (Rational, Rational) {
    if q.is_zero() {
        return (Rational::one(), Rational::one());
    }
    if q.is_negative() {
        let (lo, hi) = exp_bounds(&-q, prec_bits);
        // e^q = 1 / e^(-q); both bounds are positive.
        return (hi.recip(), lo.recip());
    }
    let eps = Rational::new(BigInt::one(), BigInt::one() << prec_bits);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut k = BigInt::one();
    loop {
        term = term * q / Rational::from(k.clone());
        sum += &term;
        k += 1;
        // Tail bound: once q/(k+1) < 1, the remaining terms are dominated by
        // the geometric series with ratio q/(k+1).
        let ratio = q / Rational::from(&k + 1);
        if ratio < Rational::one() {
            let bound = &term * &ratio / (Rational::one() - &ratio);
            if bound < eps {
                return (sum.clone(), sum + bound);
            }
        }
    }
}

/// A value of the coefficient field: an `ExpPoly` fraction kept in reduced
/// canonical form (gcd removed, denominator's least term scaled to `1*e^0`),
/// so structural equality coincides with field equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff {
    num: ExpPoly,
    den: ExpPoly,
}

impl Coeff {
    fn make(num: ExpPoly, den: ExpPoly) -> Coeff {
        debug_assert!(!den.is_zero(), "zero denominator");
        let (num, den) = reduce(num, den);
        Coeff { num, den }
    }

    pub fn zero() -> Coeff {
        Coeff {
            num: ExpPoly::zero(),
            den: ExpPoly::one(),
        }
    }

    pub fn one() -> Coeff {
        Coeff {
            num: ExpPoly::one(),
            den: ExpPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Coeff {
        Coeff::from_rational(int(n))
    }

    pub fn rational(n: i64, d: i64) -> Coeff {
        Coeff::from_rational(rat(n, d))
    }

    pub fn from_rational(r: Rational) -> Coeff {
        Coeff {
            num: ExpPoly::from_rational(r),
            den: ExpPoly::one(),
        }
    }

    /// The basis element `e^q`.
    pub fn e_power(q: Rational) -> Coeff {
        Coeff {
            num: ExpPoly::single(q, Rational::one()),
            den: ExpPoly::one(),
        }
    }

    /// `r * e^q`.
    pub fn rational_times_e(r: Rational, q: Rational) -> Coeff {
        Coeff::from_rational(r).mul(&Coeff::e_power(q))
    }

    pub fn numerator(&self) -> &ExpPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ExpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == ExpPoly::one() && self.den == ExpPoly::one()
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den == ExpPoly::one() {
            self.num.as_rational()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        if self.den == other.den {
            return Coeff::make(self.num.add(&other.num), self.den.clone());
        }
        Coeff::make(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        Coeff {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if self.is_zero() || other.is_zero() {
            return Coeff::zero();
        }
        Coeff::make(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::make(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Coeff) -> Result<Coeff> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact sign in {-1, 0, +1}.
    pub fn sign(&self) -> i32 {
        self.num.sign() * self.den.sign()
    }

    pub fn abs(&self) -> Coeff {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `e^self`, defined only for purely rational values.
    pub fn exp(&self) -> Result<Coeff> {
        match self.as_rational() {
            Some(q) => Ok(Coeff::e_power(q)),
            None => Err(Error::ConstantNotExponentiable),
        }
    }

    /// `log(self)`, defined only for exact powers `e^q`.
    pub fn log(&self) -> Result<Coeff> {
        if self.sign() <= 0 {
            return Err(Error::LogOfNonPositive);
        }
        if self.den == ExpPoly::one() {
            if let Some((q, r)) = self.num.as_single() {
                if r.is_one() {
                    return Ok(Coeff::from_rational(q));
                }
            }
        }
        Err(Error::LogConstantNotRepresentable)
    }

    /// Integer power, exact for every nonzero base.
    pub fn pow_int(&self, n: i64) -> Result<Coeff> {
        if n < 0 {
            return self.inv()?.pow_int(-n);
        }
        let mut out = Coeff::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        Ok(out)
    }

    /// `self^c` for rational `c`. Exact when `c` is an integer; otherwise the
    /// base must be positive and of the shape `r * e^q` with `r` a perfect
    /// power, or the result leaves the field.
    pub fn pow_rational(&self, c: &Rational) -> Result<Coeff> {
        if c.is_integer() {
            let n = big_to_i64(c.numer()).ok_or(Error::CoefficientPowerNotRepresentable)?;
            return self.pow_int(n);
        }
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.sign() < 0 {
            return Err(Error::NonPositiveBase);
        }
        // Only unit values r*e^q admit representable rational roots.
        let (qn, rn) = self
            .num
            .as_single()
            .ok_or(Error::CoefficientPowerNotRepresentable)?;
        let (qd, rd) = self
            .den
            .as_single()
            .ok_or(Error::CoefficientPowerNotRepresentable)?;
        let q = qn - qd;
        let r = rn / rd;
        let root_index =
            big_to_u32(c.denom()).ok_or(Error::CoefficientPowerNotRepresentable)?;
        let root = rational_root(&r, root_index).ok_or(Error::CoefficientPowerNotRepresentable)?;
        let p = big_to_i64(c.numer()).ok_or(Error::CoefficientPowerNotRepresentable)?;
        let unit = Coeff::rational_times_e(root, q / Rational::from(BigInt::from(root_index)));
        unit.pow_int(p)
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Coeff) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Coeff) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match self.sub(other).sign() {
            s if s < 0 => Ordering::Less,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

fn big_to_i64(b: &BigInt) -> Option<i64> {
    use num::ToPrimitive;
    b.to_i64()
}

fn big_to_u32(b: &BigInt) -> Option<u32> {
    use num::ToPrimitive;
    b.to_u32()
}

/// Exact n-th root of a positive rational, when it exists.
fn rational_root(r: &Rational, n: u32) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    let num_root = r.numer().nth_root(n);
    let den_root = r.denom().nth_root(n);
    if num_root.pow(n) == *r.numer() && den_root.pow(n) == *r.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

// --- fraction reduction -----------------------------------------------------

/// Reduce a fraction of ExpPolys: cancel the polynomial gcd, then scale so
/// the denominator's least-exponent term is exactly `1*e^0`.
fn reduce(num: ExpPoly, den: ExpPoly) -> (ExpPoly, ExpPoly) {
    if num.is_zero() {
        return (ExpPoly::zero(), ExpPoly::one());
    }
    let (mut num, mut den) = if den.num_terms() == 1 || num.num_terms() == 1 {
        (num, den)
    } else {
        cancel_gcd(num, den)
    };
    // Normalize: divide both sides by the denominator's least term.
    let (q0, c0) = {
        let q0 = den.min_exponent().unwrap().clone();
        let c0 = den.terms.get(&q0).unwrap().clone();
        (q0, c0)
    };
    let inv_c0 = c0.recip();
    let neg_q0 = -q0;
    num = num.scale(&neg_q0, &inv_c0);
    den = den.scale(&neg_q0, &inv_c0);
    (num, den)
}

/// Treat both polys as Laurent polynomials in `t = e^(1/N)` and cancel their
/// monic gcd.
fn cancel_gcd(num: ExpPoly, den: ExpPoly) -> (ExpPoly, ExpPoly) {
    let mut denominators: Vec<BigInt> = Vec::new();
    for (q, _) in num.terms().chain(den.terms()) {
        denominators.push(q.denom().clone());
    }
    let mut n = BigInt::one();
    for d in &denominators {
        n = num::integer::lcm(n, d.clone());
    }
    let (pn, sn) = to_int_poly(&num, &n);
    let (pd, sd) = to_int_poly(&den, &n);
    let g = poly_gcd(pn.clone(), pd.clone());
    if g.len() <= 1 {
        return (num, den);
    }
    let qn = poly_div_exact(&pn, &g);
    let qd = poly_div_exact(&pd, &g);
    (from_int_poly(&qn, sn, &n), from_int_poly(&qd, sd, &n))
}

/// Dense coefficient vector plus the exponent shift, so that
/// `poly = t^shift * sum coeffs[i] * t^i` with `t = e^(1/scale)`.
fn to_int_poly(p: &ExpPoly, scale: &BigInt) -> (Vec<Rational>, Rational) {
    let exps: Vec<BigInt> = p
        .terms
        .keys()
        .map(|q| (q * Rational::from(scale.clone())).to_integer())
        .collect();
    let min = exps.iter().min().unwrap().clone();
    let degree: usize = exps
        .iter()
        .map(|e| big_to_i64(&(e - &min)).expect("exponent span fits in usize") as usize)
        .max()
        .unwrap();
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for ((_, r), e) in p.terms.iter().zip(exps.iter()) {
        let idx = big_to_i64(&(e - &min)).unwrap() as usize;
        coeffs[idx] = r.clone();
    }
    let shift = Rational::new(min, scale.clone());
    (coeffs, shift)
}

fn from_int_poly(coeffs: &[Rational], shift: Rational, scale: &BigInt) -> ExpPoly {
    let mut out = ExpPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let q = &shift + Rational::new(BigInt::from(i), scale.clone());
            out.insert_add(q, c.clone());
        }
    }
    out
}

fn poly_trim(p: &mut Vec<Rational>) {
    while let Some(last) = p.last() {
        if last.is_zero() {
            p.pop();
        } else {
            break;
        }
    }
}

fn poly_monic(mut p: Vec<Rational>) -> Vec<Rational> {
    if let Some(lead) = p.last().cloned() {
        let inv = lead.recip();
        for c in &mut p {
            *c *= &inv;
        }
    }
    p
}

fn poly_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a[da].clone() / &lead;
        for i in 0..=db {
            let v = &b[i] * &factor;
            a[da - db + i] -= v;
        }
        poly_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn poly_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = poly_monic(r);
    }
    poly_monic(a)
}

fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); a.len() - db];
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a[da].clone() / &lead;
        q[da - db] = factor.clone();
        for i in 0..=db {
            let v = &b[i] * &factor;
            a[da - db + i] -= v;
        }
        poly_trim(&mut a);
    }
    debug_assert!(a.is_empty(), "inexact polynomial division");
    q
}

// --- display -----------------------------------------------------------------

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One `r*e^q` term in the grammar of the expression front-end.
fn term_text(q: &Rational, r: &Rational) -> String {
    if q.is_zero() {
        rational_text(r)
    } else if r.is_one() {
        format!("E^({})", rational_text(q))
    } else if (-r).is_one() {
        format!("-E^({})", rational_text(q))
    } else {
        format!("{}*E^({})", rational_text(r), rational_text(q))
    }
}

fn poly_text(p: &ExpPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    // Highest exponent first.
    let mut parts: Vec<(Rational, Rational)> =
        p.terms.iter().map(|(q, r)| (q.clone(), r.clone())).collect();
    parts.reverse();
    let mut out = String::new();
    for (i, (q, r)) in parts.iter().enumerate() {
        let t = term_text(q, r);
        if i == 0 {
            out.push_str(&t);
        } else if let Some(stripped) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

impl fmt::Display for Coeff {
    /// Canonical text in the expression grammar: rationals as `p/q`, basis
    /// elements as `E^(q)`, sums parenthesized, denominators as `(...)^(-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_simple = self.num.num_terms() <= 1;
        let num_text = if num_simple {
            poly_text(&self.num)
        } else {
            format!("({})", poly_text(&self.num))
        };
        if self.den == ExpPoly::one() {
            return write!(f, "{}", num_text);
        }
        let den_text = format!("({})^(-1)", poly_text(&self.den));
        if self.num == ExpPoly::one() {
            write!(f, "{}", den_text)
        } else {
            write!(f, "{}*{}", num_text, den_text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64, d: i64) -> Coeff {
        Coeff::rational(n, d)
    }

    fn e() -> Coeff {
        Coeff::e_power(int(1))
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(c(1, 2).add(&c(1, 3)), c(5, 6));
        assert_eq!(c(2, 1).mul(&c(3, 4)), c(3, 2));
        assert_eq!(c(2, 1).inv().unwrap(), c(1, 2));
    }

    #[test]
    fn e_basis_arithmetic() {
        assert_eq!(e().add(&e()), Coeff::from_int(2).mul(&e()));
        assert_eq!(e().mul(&e()), Coeff::e_power(int(2)));
        assert_eq!(
            Coeff::e_power(rat(1, 2)).mul(&Coeff::e_power(rat(1, 2))),
            e()
        );
        let one_plus_e = Coeff::one().add(&e());
        assert_eq!(one_plus_e.add(&e().neg()), Coeff::one());
    }

    #[test]
    fn inverse_of_sum_keeps_fraction() {
        let a = Coeff::one().add(&e());
        let inv = a.inv().unwrap();
        assert_eq!(inv.mul(&a), Coeff::one());
        assert_eq!(inv.denominator(), a.numerator());
    }

    #[test]
    fn fraction_reduction_cancels_common_factors() {
        let a = Coeff::one().add(&e()); // 1 + e
        let b = Coeff::from_int(2).sub(&e()); // 2 - e
        let prod = a.mul(&b);
        let back = prod.div(&b).unwrap();
        assert_eq!(back, a);
        // (a*b)/b must again have trivial denominator.
        assert_eq!(back.denominator(), &ExpPoly::one());
    }

    #[test]
    fn sign_of_mixed_combinations() {
        assert_eq!(Coeff::zero().sign(), 0);
        assert_eq!(e().sub(&Coeff::from_int(2)).sign(), 1); // e - 2 > 0
        assert_eq!(Coeff::from_int(3).sub(&e()).sign(), 1); // 3 - e > 0
        assert_eq!(e().sub(&Coeff::from_int(3)).sign(), -1);
        // e^2 - 7 > 0, 8 - e^2 > 0
        assert_eq!(Coeff::e_power(int(2)).sub(&Coeff::from_int(7)).sign(), 1);
        assert_eq!(Coeff::from_int(8).sub(&Coeff::e_power(int(2))).sign(), 1);
        // A tighter one: e - 19/7 < 0 (e = 2.71828..., 19/7 = 2.71428...)
        assert_eq!(e().sub(&c(19, 7)).sign(), 1);
        assert_eq!(e().sub(&c(272, 100)).sign(), -1);
    }

    #[test]
    fn exp_and_log_of_constants() {
        assert_eq!(Coeff::zero().exp().unwrap(), Coeff::one());
        assert_eq!(Coeff::from_int(-1).exp().unwrap(), Coeff::e_power(int(-1)));
        assert!(matches!(
            e().exp(),
            Err(Error::ConstantNotExponentiable)
        ));
        assert_eq!(Coeff::one().log().unwrap(), Coeff::zero());
        assert_eq!(Coeff::e_power(int(2)).log().unwrap(), Coeff::from_int(2));
        assert!(matches!(
            Coeff::from_int(2).log(),
            Err(Error::LogConstantNotRepresentable)
        ));
        assert!(matches!(
            Coeff::from_int(-1).log(),
            Err(Error::LogOfNonPositive)
        ));
        assert!(matches!(Coeff::zero().log(), Err(Error::LogOfNonPositive)));
    }

    #[test]
    fn rational_powers() {
        assert_eq!(
            c(9, 4).pow_rational(&rat(1, 2)).unwrap(),
            c(3, 2)
        );
        assert_eq!(
            Coeff::e_power(int(2)).pow_rational(&rat(1, 2)).unwrap(),
            e()
        );
        assert!(matches!(
            c(7, 3).pow_rational(&rat(1, 2)),
            Err(Error::CoefficientPowerNotRepresentable)
        ));
        assert_eq!(c(2, 3).pow_rational(&int(-2)).unwrap(), c(9, 4));
    }

    #[test]
    fn ordering_is_total_and_compatible() {
        let vals = [
            Coeff::zero(),
            Coeff::one(),
            e(),
            c(-1, 2),
            e().neg(),
            c(5, 2),
            Coeff::e_power(int(-1)),
        ];
        for a in &vals {
            for b in &vals {
                let d = a.sub(b).sign();
                match a.cmp(b) {
                    Ordering::Less => assert_eq!(d, -1),
                    Ordering::Equal => assert_eq!(d, 0),
                    Ordering::Greater => assert_eq!(d, 1),
                }
                for x in &vals {
                    // a < b implies a + x < b + x
                    if a < b {
                        assert!(a.add(x) < b.add(x));
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(c(1, 2).to_string(), "1/2");
        assert_eq!(e().to_string(), "E^(1)");
        assert_eq!(c(-3, 2).mul(&Coeff::e_power(int(4))).to_string(), "-3/2*E^(4)");
        assert_eq!(Coeff::one().add(&e()).to_string(), "(E^(1) + 1)");
        assert_eq!(
            Coeff::one().add(&e()).inv().unwrap().to_string(),
            "(E^(1) + 1)^(-1)"
        );
    }
}
