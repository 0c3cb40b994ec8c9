use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{SomosError, SomosSequence, SymbolicSequence};
use crate::algebra::{Rational, RationalFunction};

/// Element `M(b,c) F^m R^e` of the transformation group, acting by
/// `(t a)_n = b c^n a_{s(n+m)}` with `s = -1` when reflecting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformSpec {
    b: Rational,
    c: Rational,
    m: i64,
    reflect: bool,
}

impl TransformSpec {
    pub fn new(b: Rational, c: Rational, m: i64, reflect: bool) -> Result<Self, SomosError> {
        if b.is_zero() || c.is_zero() {
            return Err(SomosError::ZeroScale);
        }
        Ok(TransformSpec { b, c, m, reflect })
    }

    pub fn identity() -> Self {
        TransformSpec { b: Rational::one(), c: Rational::one(), m: 0, reflect: false }
    }

    pub fn scaling(b: Rational, c: Rational) -> Result<Self, SomosError> {
        Self::new(b, c, 0, false)
    }

    pub fn shift(m: i64) -> Self {
        TransformSpec { m, ..Self::identity() }
    }

    pub fn reflection() -> Self {
        TransformSpec { reflect: true, ..Self::identity() }
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn reflect(&self) -> bool {
        self.reflect
    }

    fn sign(&self) -> i64 {
        if self.reflect {
            -1
        } else {
            1
        }
    }

    /// Source index read for output index `n`.
    pub fn source_index(&self, n: i64) -> i64 {
        self.sign() * (n + self.m)
    }

    /// Factor `b c^n` applied at output index `n`.
    pub fn factor(&self, n: i64) -> Rational {
        &self.b * pow_i(&self.c, n)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &TransformSpec) -> TransformSpec {
        let s2 = self.sign();
        TransformSpec {
            b: &first.b * &self.b * pow_i(&first.c, s2 * self.m),
            c: &self.c * pow_i(&first.c, s2),
            m: self.m + s2 * first.m,
            reflect: self.reflect ^ first.reflect,
        }
    }

    pub fn inverse(&self) -> TransformSpec {
        let s = self.sign();
        TransformSpec {
            b: pow_i(&self.c, self.m) / &self.b,
            c: pow_i(&self.c, -s),
            m: -s * self.m,
            reflect: self.reflect,
        }
    }

    /// Transformed terms on `lo..=hi`, stored as a new sequence.
    pub fn apply(&self, seq: &mut SomosSequence, lo: i64, hi: i64) -> Result<SomosSequence, SomosError> {
        let terms = (lo..=hi)
            .map(|n| Ok(self.factor(n) * seq.get(self.source_index(n))?))
            .collect::<Result<Vec<_>, SomosError>>()?;
        SomosSequence::from_terms(seq.rule(), lo, terms)
    }

    pub fn apply_symbolic(
        &self,
        seq: &mut SymbolicSequence,
        lo: i64,
        hi: i64,
    ) -> Result<BTreeMap<i64, RationalFunction>, SomosError> {
        let mut out = BTreeMap::new();
        for n in lo..=hi {
            out.insert(n, seq.get(self.source_index(n))?.scale(&self.factor(n)));
        }
        Ok(out)
    }
}

fn pow_i(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        Rational::one() / p
    } else {
        p
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.b, self.c, self.m, self.reflect)
    }
}

/// Parses `b,c,m,reflect`, e.g. `2,3,0,false` or `1,1/2,-1,true`.
impl FromStr for TransformSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err("expected b,c,m,reflect".into());
        }
        let b: Rational = parts[0].parse().map_err(|_| format!("bad b: {}", parts[0]))?;
        let c: Rational = parts[1].parse().map_err(|_| format!("bad c: {}", parts[1]))?;
        let m: i64 = parts[2].parse().map_err(|_| format!("bad m: {}", parts[2]))?;
        let reflect = match parts[3] {
            "true" | "1" | "yes" => true,
            "false" | "0" | "no" => false,
            other => return Err(format!("bad reflect flag: {other}")),
        };
        TransformSpec::new(b, c, m, reflect).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn scaling_classical_sequence() {
        let mut s = SomosSequence::from_ints(4, 0, &[1, 1, 1, 1]).unwrap();
        let t = TransformSpec::scaling(q(2), q(3)).unwrap();
        let mut img = t.apply(&mut s, 0, 7).unwrap();
        assert_eq!(img.window(0, 5).unwrap(), vec![q(2), q(6), q(18), q(54), q(324)]);
    }

    #[test]
    fn reflection_reads_negative_indices() {
        let mut s = SomosSequence::from_ints(4, 0, &[1, 2, 3, 4]).unwrap();
        let mut img = TransformSpec::reflection().apply(&mut s, -3, 6).unwrap();
        for n in -3..=6 {
            assert_eq!(img.get(n).unwrap(), s.get(-n).unwrap());
        }
    }

    #[test]
    fn twist_relation() {
        let t = TransformSpec::scaling(q(5), q(7)).unwrap();
        let r = TransformSpec::reflection();
        let conj = r.after(&t).after(&r);
        assert_eq!(conj, TransformSpec::scaling(q(5), Rational::new(1.into(), 7.into())).unwrap());
    }

    #[test]
    fn inverse_cancels() {
        let t = TransformSpec::new(q(2), Rational::new(3.into(), 5.into()), 4, true).unwrap();
        assert_eq!(t.inverse().after(&t), TransformSpec::identity());
        assert_eq!(t.after(&t.inverse()), TransformSpec::identity());
    }

    #[test]
    fn parse_spec() {
        let t: TransformSpec = "2,1/3,-1,true".parse().unwrap();
        assert_eq!(t.c(), &Rational::new(1.into(), 3.into()));
        assert!("0,1,0,false".parse::<TransformSpec>().is_err());
    }
}
