//! Priority-queue term merging for budgeted streams.
//!
//! Grid-based operations produce their result terms in strictly decreasing
//! monomial order. Sources arrive with strictly decreasing heads, so a source
//! is activated only once the emission frontier reaches its head; equal
//! monomials merge before emission and exact cancellations are skipped
//! without counting against the budget.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::mono::Monomial;
use crate::series::{Budget, Term, Transseries};

/// Consecutive exact-zero merges tolerated before a stream reports
/// exhaustion. Guards against composites whose exact result terminates
/// (e.g. the square root of a perfect square) while candidate monomials
/// keep arriving.
pub(crate) const ZERO_MERGE_FUSE: usize = 128;

struct Entry {
    term: Term,
    seq: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Entry) -> bool {
        self.term.mono == other.term.mono && self.seq == other.seq
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Entry) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Entry) -> Ordering {
        // Max-heap on the monomial; earlier sources win ties deterministically.
        self.term
            .mono
            .cmp(&other.term.mono)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Pull-based generator emitting `(coeff, monomial)` pairs in strictly
/// decreasing monomial order.
pub struct TermStream<'a> {
    next_source: Box<dyn FnMut() -> Result<Option<Transseries>> + 'a>,
    heap: BinaryHeap<Entry>,
    upcoming: Option<Transseries>,
    sources_done: bool,
    prev_head: Option<Monomial>,
    out_of_order: Option<Error>,
    zero_merges: usize,
    seq: usize,
}

impl<'a> TermStream<'a> {
    /// Merge the sources produced by `next_source`, in order. Source heads
    /// must strictly decrease; when `out_of_order` is set a violation
    /// surfaces as that error, otherwise it is a logic bug.
    pub fn merge(
        mut next_source: impl FnMut() -> Result<Option<Transseries>> + 'a,
        out_of_order: Option<Error>,
    ) -> Result<TermStream<'a>> {
        let upcoming = next_source()?;
        Ok(TermStream {
            next_source: Box::new(next_source),
            heap: BinaryHeap::new(),
            upcoming,
            sources_done: false,
            prev_head: None,
            out_of_order,
            zero_merges: 0,
            seq: 0,
        })
    }

    pub fn from_series(series: Transseries) -> TermStream<'a> {
        let mut produced = false;
        let mut src = move || {
            if produced {
                Ok(None)
            } else {
                produced = true;
                Ok(Some(series.clone()))
            }
        };
        let upcoming = src().unwrap();
        TermStream {
            next_source: Box::new(src),
            heap: BinaryHeap::new(),
            upcoming,
            sources_done: false,
            prev_head: None,
            out_of_order: None,
            zero_merges: 0,
            seq: 0,
        }
    }

    fn activate(&mut self, source: Transseries) -> Result<()> {
        if let Some(head) = source.terms().first() {
            if let Some(prev) = &self.prev_head {
                if head.mono >= *prev {
                    match &self.out_of_order {
                        Some(e) => return Err(e.clone()),
                        None => debug_assert!(false, "source heads must strictly decrease"),
                    }
                }
            }
            self.prev_head = Some(head.mono.clone());
            for term in source.terms() {
                self.heap.push(Entry {
                    term: term.clone(),
                    seq: self.seq,
                });
                self.seq += 1;
            }
        }
        Ok(())
    }

    pub fn next_term(&mut self) -> Result<Option<Term>> {
        loop {
            // Activate every source whose head reaches the current frontier.
            loop {
                let need = match (&self.upcoming, self.heap.peek()) {
                    (None, _) => false,
                    (Some(src), _) if src.is_zero() => true,
                    (Some(src), Some(top)) => src.terms()[0].mono >= top.term.mono,
                    (Some(_), None) => true,
                };
                if !need {
                    break;
                }
                let src = self.upcoming.take().unwrap();
                self.upcoming = (self.next_source)()?;
                if self.upcoming.is_none() {
                    self.sources_done = true;
                }
                self.activate(src)?;
            }
            let top = match self.heap.pop() {
                Some(e) => e,
                None => return Ok(None),
            };
            let mono = top.term.mono;
            let mut coeff = top.term.coeff;
            while let Some(peek) = self.heap.peek() {
                if peek.term.mono == mono {
                    coeff = coeff.add(&self.heap.pop().unwrap().term.coeff);
                } else {
                    break;
                }
            }
            if coeff.is_zero() {
                self.zero_merges += 1;
                if self.zero_merges >= ZERO_MERGE_FUSE {
                    return Ok(None);
                }
                continue;
            }
            self.zero_merges = 0;
            return Ok(Some(Term::new(coeff, mono)));
        }
    }

    /// Materialize at most `budget` terms.
    pub fn take(&mut self, budget: Budget) -> Result<Transseries> {
        let mut terms = Vec::new();
        while terms.len() < budget.max_terms() {
            match self.next_term()? {
                Some(t) => terms.push(t),
                None => break,
            }
        }
        Ok(Transseries::from_terms(terms))
    }
}

/// First `budget` terms of `sum_j rule(j) * u^j` for small `u`; `rule`
/// returning `None` means every later coefficient is zero.
pub fn series_apply(
    mut rule: impl FnMut(u32) -> Option<Coeff>,
    u: &Transseries,
    budget: Budget,
) -> Result<Transseries> {
    if !u.is_small() {
        return Err(Error::NotSmall);
    }
    if u.is_zero() {
        let c = rule(0).unwrap_or_else(Coeff::zero);
        return Ok(Transseries::constant(c));
    }
    // Every emitted term lies within the first budget + fuse distinct
    // monomials of the exact result, so longer powers cannot influence it.
    let power_cap = Budget::new(budget.max_terms() + ZERO_MERGE_FUSE + 8);
    let mut cur_pow = Transseries::one();
    let mut j: u32 = 0;
    let u = u.clone();
    let next_source = move || -> Result<Option<Transseries>> {
        let c = match rule(j) {
            Some(c) => c,
            None => return Ok(None),
        };
        if j > 0 {
            cur_pow = cur_pow.mul(&u).truncated(power_cap);
        }
        j += 1;
        Ok(Some(cur_pow.scale(&c)))
    };
    TermStream::merge(next_source, None)?.take(budget)
}
