use std::collections::VecDeque;
use std::fmt;

use num_traits::Zero;

use super::{SomosError, SomosRule};
use crate::algebra::Rational;

/// Result of asking for one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Value(Rational),
    Blocked { pivot: i64 },
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Value(v) => write!(f, "{v}"),
            Term::Blocked { .. } => write!(f, "blocked"),
        }
    }
}

/// Two-sided Somos-k sequence with an exact, lazily extended cache.
///
/// Once an extension hits a zero pivot the boundary is recorded and every
/// index beyond it reports `Blocked`.
#[derive(Debug, Clone)]
pub struct SomosSequence {
    rule: SomosRule,
    lo: i64,
    terms: VecDeque<Rational>,
    blocked_below: Option<i64>,
    blocked_above: Option<i64>,
}

impl SomosSequence {
    pub fn new(rule: SomosRule, base: i64, init: Vec<Rational>) -> Result<Self, SomosError> {
        let k = rule.order();
        if init.len() != k {
            return Err(SomosError::InitLength { expected: k, found: init.len() });
        }
        Ok(SomosSequence {
            rule,
            lo: base,
            terms: init.into(),
            blocked_below: None,
            blocked_above: None,
        })
    }

    pub fn from_ints(k: usize, base: i64, init: &[i64]) -> Result<Self, SomosError> {
        let rule = SomosRule::new(k)?;
        Self::new(rule, base, init.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// Builds a sequence from at least `k` consecutive terms, checking every
    /// complete window against the rule.
    pub fn from_terms(rule: SomosRule, base: i64, terms: Vec<Rational>) -> Result<Self, SomosError> {
        let k = rule.order();
        if terms.len() < k {
            return Err(SomosError::InitLength { expected: k, found: terms.len() });
        }
        let seq = SomosSequence {
            rule,
            lo: base,
            terms: terms.into(),
            blocked_below: None,
            blocked_above: None,
        };
        seq.check_rule()?;
        Ok(seq)
    }

    pub fn rule(&self) -> SomosRule {
        self.rule
    }

    /// Lowest cached index.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest cached index.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn blocked_below(&self) -> Option<i64> {
        self.blocked_below
    }

    pub fn blocked_above(&self) -> Option<i64> {
        self.blocked_above
    }

    /// Cached value without extending.
    pub fn cached(&self, n: i64) -> Option<&Rational> {
        if n < self.lo || n > self.hi() {
            return None;
        }
        self.terms.get((n - self.lo) as usize)
    }

    /// Cached `(index, value)` pairs in increasing order.
    pub fn cached_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().enumerate().map(move |(i, v)| (self.lo + i as i64, v))
    }

    fn extend_up(&mut self) -> Result<(), SomosError> {
        let index = self.hi() + 1;
        if let Some(b) = self.blocked_above {
            return Err(SomosError::Blocked { index, pivot: b });
        }
        let k = self.rule.order();
        let start = self.terms.len() - k;
        let pivot = &self.terms[start];
        if pivot.is_zero() {
            let p = self.lo + start as i64;
            self.blocked_above = Some(p);
            return Err(SomosError::Blocked { index, pivot: p });
        }
        let mut w: Vec<Rational> = self.terms.range(start..).cloned().collect();
        w.push(Rational::zero());
        let next = self.rule.rhs(&w) / pivot;
        self.terms.push_back(next);
        Ok(())
    }

    fn extend_down(&mut self) -> Result<(), SomosError> {
        let index = self.lo - 1;
        if let Some(b) = self.blocked_below {
            return Err(SomosError::Blocked { index, pivot: b });
        }
        let k = self.rule.order();
        let pivot = &self.terms[k - 1];
        if pivot.is_zero() {
            let p = self.lo + k as i64 - 1;
            self.blocked_below = Some(p);
            return Err(SomosError::Blocked { index, pivot: p });
        }
        let mut w = vec![Rational::zero()];
        w.extend(self.terms.range(..k - 1).cloned());
        let next = self.rule.rhs(&w) / pivot;
        self.terms.push_front(next);
        self.lo -= 1;
        Ok(())
    }

    /// Exact term at `n`, extending the cache in either direction.
    pub fn get(&mut self, n: i64) -> Result<Rational, SomosError> {
        while n > self.hi() {
            self.extend_up()?;
        }
        while n < self.lo {
            self.extend_down()?;
        }
        Ok(self.terms[(n - self.lo) as usize].clone())
    }

    pub fn term(&mut self, n: i64) -> Term {
        match self.get(n) {
            Ok(v) => Term::Value(v),
            Err(SomosError::Blocked { pivot, .. }) => Term::Blocked { pivot },
            Err(e) => unreachable!("extension only fails by blocking: {e}"),
        }
    }

    /// Terms `from..=to`; blocked indices are marked.
    pub fn range(&mut self, from: i64, to: i64) -> Vec<(i64, Term)> {
        (from..=to).map(|n| (n, self.term(n))).collect()
    }

    /// `len` consecutive terms starting at `n`.
    pub fn window(&mut self, n: i64, len: usize) -> Result<Vec<Rational>, SomosError> {
        (n..n + len as i64).map(|i| self.get(i)).collect()
    }

    pub fn is_integral(&mut self, n: i64) -> Result<bool, SomosError> {
        Ok(self.get(n)?.is_integer())
    }

    /// Checks every complete cached window.
    pub fn check_rule(&self) -> Result<(), SomosError> {
        let k = self.rule.order();
        let w: Vec<&Rational> = self.terms.iter().collect();
        for s in 0..w.len().saturating_sub(k) {
            let win: Vec<Rational> = w[s..=s + k].iter().map(|v| (*v).clone()).collect();
            if &win[0] * &win[k] != self.rule.rhs(&win) {
                return Err(SomosError::RuleViolation(self.lo + s as i64));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(seq: &mut SomosSequence, from: i64, to: i64) -> Vec<i64> {
        (from..=to)
            .map(|n| i64::try_from(seq.get(n).unwrap().to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn classical_somos4() {
        let mut s = SomosSequence::from_ints(4, 0, &[1, 1, 1, 1]).unwrap();
        assert_eq!(ints(&mut s, 4, 8), vec![2, 3, 7, 23, 59]);
        assert!(s.check_rule().is_ok());
    }

    #[test]
    fn backward_zero_and_block() {
        let mut s = SomosSequence::from_ints(4, 1, &[1, 1, -1, 1]).unwrap();
        assert_eq!(ints(&mut s, -3, 0), vec![1, -1, -1, 0]);
        assert_eq!(s.get(-4), Err(SomosError::Blocked { index: -4, pivot: 0 }));
        assert_eq!(s.term(-7), Term::Blocked { pivot: 0 });
        assert_eq!(s.blocked_below(), Some(0));
    }

    #[test]
    fn forward_block_on_zero_pivot() {
        let mut s = SomosSequence::from_ints(4, 0, &[0, 1, 1, -1]).unwrap();
        assert!(matches!(s.get(4), Err(SomosError::Blocked { index: 4, pivot: 0 })));
    }

    #[test]
    fn from_terms_validates() {
        let r = SomosRule::new(4).unwrap();
        let good = [1, 1, 1, 1, 2, 3].map(|v| Rational::from_integer(v.into())).to_vec();
        assert!(SomosSequence::from_terms(r, 0, good).is_ok());
        let bad = [1, 1, 1, 1, 2, 4].map(|v| Rational::from_integer(v.into())).to_vec();
        assert_eq!(SomosSequence::from_terms(r, 0, bad).unwrap_err(), SomosError::RuleViolation(1));
    }

    #[test]
    fn somos2_geometric() {
        let mut s = SomosSequence::from_ints(2, 0, &[3, 6]).unwrap();
        assert_eq!(ints(&mut s, 0, 4), vec![3, 6, 12, 24, 48]);
    }
}
