//! Finite transseries: strictly decreasing term lists over the coefficient
//! field, with the ordered-field operations, the canonical additive and
//! multiplicative decompositions and the dominance relations.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::mono::Monomial;

/// One term `coeff * mono` of a transseries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Term {
        Term { coeff, mono }
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term {
            coeff: self.coeff.mul(&other.coeff),
            mono: self.mono.mul(&other.mono),
        }
    }

    pub fn inv(&self) -> Result<Term> {
        Ok(Term {
            coeff: self.coeff.inv()?,
            mono: self.mono.inv(),
        })
    }
}

/// Working-precision contract: the number of leading terms an operation
/// materializes of a possibly infinite exact result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(usize);

impl Budget {
    pub fn new(max_terms: usize) -> Budget {
        assert!(max_terms >= 1, "budget must be at least 1");
        Budget(max_terms)
    }

    pub fn max_terms(self) -> usize {
        self.0
    }

    /// Budget for internal sub-computations: enough slack that merging and
    /// cancellation do not eat into the requested prefix.
    pub fn work(self) -> Budget {
        Budget(2 * self.0 + 8)
    }

    pub fn doubled(self) -> Budget {
        Budget(2 * self.0)
    }

    pub fn scaled(self, k: usize) -> Budget {
        Budget(self.0 * k)
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget(8)
    }
}

/// A finite transseries: terms in strictly decreasing monomial order, all
/// coefficients nonzero. The empty list is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Transseries {
    terms: Vec<Term>,
}

impl Transseries {
    pub fn zero() -> Transseries {
        Transseries { terms: Vec::new() }
    }

    pub fn one() -> Transseries {
        Transseries::constant(Coeff::one())
    }

    pub fn x() -> Transseries {
        Transseries::leaf(0)
    }

    pub fn leaf(m: i32) -> Transseries {
        Transseries::from_mono(Monomial::leaf(m))
    }

    pub fn constant(c: Coeff) -> Transseries {
        Transseries::term(c, Monomial::unit())
    }

    pub fn from_mono(mono: Monomial) -> Transseries {
        Transseries::term(Coeff::one(), mono)
    }

    pub fn term(coeff: Coeff, mono: Monomial) -> Transseries {
        if coeff.is_zero() {
            Transseries::zero()
        } else {
            Transseries {
                terms: vec![Term::new(coeff, mono)],
            }
        }
    }

    /// Build from arbitrary terms: sorts, merges equal monomials, drops
    /// zeros.
    pub fn from_terms(terms: Vec<Term>) -> Transseries {
        let mut terms = terms;
        terms.sort_by(|a, b| b.mono.cmp(&a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Transseries { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff.is_one() && self.terms[0].mono.is_unit()
    }

    /// Sign of the series: the sign of the leading coefficient.
    pub fn sign(&self) -> i32 {
        match self.terms.first() {
            Some(t) => t.coeff.sign(),
            None => 0,
        }
    }

    /// Dominant monomial.
    pub fn mag(&self) -> Result<&Monomial> {
        self.terms
            .first()
            .map(|t| &t.mono)
            .ok_or(Error::ZeroSeries)
    }

    /// Dominant term.
    pub fn dom(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroSeries)
    }

    pub fn add(&self, other: &Transseries) -> Transseries {
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(ta), Some(tb)) => match ta.mono.cmp(&tb.mono) {
                    Ordering::Greater => out.push((*a.next().unwrap()).clone()),
                    Ordering::Less => out.push((*b.next().unwrap()).clone()),
                    Ordering::Equal => {
                        let ta = a.next().unwrap();
                        let tb = b.next().unwrap();
                        let c = ta.coeff.add(&tb.coeff);
                        if !c.is_zero() {
                            out.push(Term::new(c, ta.mono.clone()));
                        }
                    }
                },
                (Some(_), None) => out.push((*a.next().unwrap()).clone()),
                (None, Some(_)) => out.push((*b.next().unwrap()).clone()),
                (None, None) => break,
            }
        }
        Transseries { terms: out }
    }

    pub fn neg(&self) -> Transseries {
        Transseries {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.neg(), t.mono.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Transseries) -> Transseries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Transseries) -> Transseries {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        Transseries::from_terms(terms)
    }

    /// Multiply by a single term; preserves term order directly.
    pub fn mul_term(&self, term: &Term) -> Transseries {
        if term.coeff.is_zero() {
            return Transseries::zero();
        }
        Transseries {
            terms: self.terms.iter().map(|t| t.mul(term)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Transseries {
        if c.is_zero() {
            return Transseries::zero();
        }
        Transseries {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.mul(c), t.mono.clone()))
                .collect(),
        }
    }

    pub fn pow_int(&self, n: u32) -> Transseries {
        let mut out = Transseries::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn add_constant(&self, c: &Coeff) -> Transseries {
        self.add(&Transseries::constant(c.clone()))
    }

    /// First `budget` terms.
    pub fn truncated(&self, budget: Budget) -> Transseries {
        if self.terms.len() <= budget.max_terms() {
            return self.clone();
        }
        Transseries {
            terms: self.terms[..budget.max_terms()].to_vec(),
        }
    }

    pub fn is_purely_large(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_large())
    }

    pub fn is_small(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_small())
    }

    pub fn is_log_free(&self) -> bool {
        self.terms.iter().all(|t| !t.mono.contains_log())
    }

    /// Canonical additive decomposition `self = L + c + V` with `L` purely
    /// large, `c` constant, `V` small.
    pub fn additive_decomp(&self) -> (Transseries, Coeff, Transseries) {
        let mut large = Vec::new();
        let mut constant = Coeff::zero();
        let mut small = Vec::new();
        for t in &self.terms {
            match t.mono.cmp_unit() {
                Ordering::Greater => large.push(t.clone()),
                Ordering::Equal => constant = t.coeff.clone(),
                Ordering::Less => small.push(t.clone()),
            }
        }
        (
            Transseries { terms: large },
            constant,
            Transseries { terms: small },
        )
    }

    /// Canonical multiplicative decomposition `self = a * g * (1 + U)` with
    /// `U` small. Exact: dividing the tail by the dominant term is exact
    /// term by term.
    pub fn mult_decomp(&self) -> Result<(Coeff, Monomial, Transseries)> {
        let lead = self.dom()?.clone();
        let inv = lead.inv()?;
        let small = Transseries {
            terms: self.terms[1..].iter().map(|t| t.mul(&inv)).collect(),
        };
        debug_assert!(small.is_small());
        Ok((lead.coeff, lead.mono, small))
    }

    /// The purely large part of the series.
    pub fn large_part(&self) -> Transseries {
        self.additive_decomp().0
    }

    /// The small part of the series.
    pub fn small_part(&self) -> Transseries {
        self.additive_decomp().2
    }

    pub fn constant_term(&self) -> Coeff {
        self.additive_decomp().1
    }

    /// Dominance relations against `other` (which must be nonzero).
    pub fn dominance(&self, other: &Transseries) -> Result<Dominance> {
        if other.is_zero() {
            return Err(Error::ZeroSeries);
        }
        if self.is_zero() {
            return Ok(Dominance {
                far_smaller: true,
                smaller_eq: true,
                comparable: false,
                equivalent: false,
            });
        }
        let ma = self.mag()?;
        let mb = other.mag()?;
        let cmp = ma.cmp(mb);
        let comparable = cmp == Ordering::Equal;
        let equivalent = comparable && self.dom()?.coeff == other.dom()?.coeff;
        Ok(Dominance {
            far_smaller: cmp == Ordering::Less,
            smaller_eq: cmp != Ordering::Greater,
            comparable,
            equivalent,
        })
    }

    /// `self` is far smaller than `other` in the asymptotic order.
    pub fn is_far_smaller(&self, other: &Transseries) -> Result<bool> {
        Ok(self.dominance(other)?.far_smaller)
    }

    /// Same dominant term.
    pub fn is_equivalent(&self, other: &Transseries) -> Result<bool> {
        if self.is_zero() && other.is_zero() {
            return Ok(true);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(false);
        }
        Ok(self.dominance(other)?.equivalent)
    }
}

/// Query result of the four dominance relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dominance {
    /// `A` far smaller than `B`: |A| below every positive real multiple of |B|.
    pub far_smaller: bool,
    /// `A` dominated by `B`: |A| below some positive real multiple of |B|.
    pub smaller_eq: bool,
    /// Same magnitude.
    pub comparable: bool,
    /// Same dominant term.
    pub equivalent: bool,
}

impl PartialOrd for Transseries {
    fn partial_cmp(&self, other: &Transseries) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Transseries {
    /// Total order of the ordered field: the sign of the difference, read
    /// off by walking the two sorted term lists in parallel.
    fn cmp(&self, other: &Transseries) -> Ordering {
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        let mut ta = a.next();
        let mut tb = b.next();
        loop {
            match (ta, tb) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => {
                    return sign_ordering(x.coeff.sign());
                }
                (None, Some(y)) => {
                    return sign_ordering(-y.coeff.sign());
                }
                (Some(x), Some(y)) => match x.mono.cmp(&y.mono) {
                    Ordering::Greater => return sign_ordering(x.coeff.sign()),
                    Ordering::Less => return sign_ordering(-y.coeff.sign()),
                    Ordering::Equal => {
                        match x.coeff.cmp(&y.coeff) {
                            Ordering::Equal => {
                                ta = a.next();
                                tb = b.next();
                            }
                            ord => return ord,
                        }
                    }
                },
            }
        }
    }
}

fn sign_ordering(s: i32) -> Ordering {
    match s {
        s if s > 0 => Ordering::Greater,
        s if s < 0 => Ordering::Less,
        _ => Ordering::Equal,
    }
}
