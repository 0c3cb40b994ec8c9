use std::collections::VecDeque;

use super::{SomosError, SomosRule};
use crate::algebra::{RationalFunction, Ring};

/// Default bound on numerator size, overridable by `SOMOS_TERM_BUDGET`.
pub const DEFAULT_TERM_BUDGET: usize = 400_000;

fn term_budget() -> usize {
    std::env::var("SOMOS_TERM_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TERM_BUDGET)
}

/// Somos-k terms as rational functions of the initial values `a0..a{k-1}`.
#[derive(Debug, Clone)]
pub struct SymbolicSequence {
    rule: SomosRule,
    ring: Ring,
    lo: i64,
    terms: VecDeque<RationalFunction>,
    budget: usize,
}

impl SymbolicSequence {
    pub fn new(rule: SomosRule) -> Self {
        Self::with_budget(rule, term_budget())
    }

    pub fn with_budget(rule: SomosRule, budget: usize) -> Self {
        let ring = Ring::new(rule.order(), &[]);
        let terms = (0..rule.order()).map(|i| RationalFunction::var(&ring, i)).collect();
        SymbolicSequence { rule, ring, lo: 0, terms, budget }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rule(&self) -> SomosRule {
        self.rule
    }

    fn rhs(&self, w: &[&RationalFunction]) -> Result<RationalFunction, SomosError> {
        let mut acc = RationalFunction::zero(&self.ring);
        for (i, j) in self.rule.pairs() {
            acc = acc.try_add(&w[i].try_mul(w[j])?)?;
        }
        Ok(acc)
    }

    fn check_budget(&self, index: i64, f: &RationalFunction) -> Result<(), SomosError> {
        let terms = f.numerator().len();
        if terms > self.budget {
            return Err(SomosError::Budget { index, terms, budget: self.budget });
        }
        Ok(())
    }

    pub fn get(&mut self, n: i64) -> Result<RationalFunction, SomosError> {
        let k = self.rule.order();
        while n >= self.lo + self.terms.len() as i64 {
            let start = self.terms.len() - k;
            let w: Vec<&RationalFunction> = self.terms.range(start..).collect();
            let mut full = w.clone();
            full.push(w[0]);
            let next = self.rhs(&full)?.try_div(w[0])?;
            let index = self.lo + self.terms.len() as i64;
            self.check_budget(index, &next)?;
            self.terms.push_back(next);
        }
        while n < self.lo {
            let w: Vec<&RationalFunction> = self.terms.range(..k).collect();
            let mut full = vec![w[k - 1]];
            full.extend(&w[..k - 1]);
            let next = self.rhs(&full)?.try_div(w[k - 1])?;
            self.check_budget(self.lo - 1, &next)?;
            self.terms.push_front(next);
            self.lo -= 1;
        }
        Ok(self.terms[(n - self.lo) as usize].clone())
    }
}

/// Term `n` of the Somos-k sequence with symbolic initial values.
pub fn symbolic_term(k: usize, n: i64) -> Result<RationalFunction, SomosError> {
    SymbolicSequence::new(SomosRule::new(k)?).get(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentEntry {
    pub index: i64,
    pub monomial_denominator: bool,
    pub denominator: String,
}

/// Denominator shape of every term in `lo..=hi`.
pub fn check_laurent(k: usize, lo: i64, hi: i64) -> Result<Vec<LaurentEntry>, SomosError> {
    let mut seq = SymbolicSequence::new(SomosRule::new(k)?);
    let mut out = Vec::new();
    // walk outward from the initial window so each side is built once
    let mut order: Vec<i64> = (lo..=hi).filter(|&n| n >= 0).collect();
    order.extend((lo..=hi).filter(|&n| n < 0).rev());
    for n in order {
        let t = seq.get(n)?;
        out.push(LaurentEntry {
            index: n,
            monomial_denominator: t.has_monomial_denominator(),
            denominator: t.denominator().pretty(),
        });
    }
    out.sort_by_key(|e| e.index);
    Ok(out)
}
