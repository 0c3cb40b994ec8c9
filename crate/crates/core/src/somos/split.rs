use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{SomosError, SomosSequence};
use crate::algebra::Rational;

/// Splits terms `lo..=hi` into the even- and odd-indexed subsequences and
/// checks each against the parent rule. Subsequence `j` holds `a_{2j}` resp.
/// `a_{2j+1}`.
pub fn split_even_odd(
    seq: &mut SomosSequence,
    lo: i64,
    hi: i64,
) -> Result<(SomosSequence, SomosSequence), SomosError> {
    let rule = seq.rule();
    let mut part = |parity: i64| -> Result<SomosSequence, SomosError> {
        let first = (lo..=hi).find(|n| n.rem_euclid(2) == parity).ok_or(SomosError::Missing(lo))?;
        let terms = (first..=hi)
            .step_by(2)
            .map(|n| seq.get(n))
            .collect::<Result<Vec<_>, _>>()?;
        SomosSequence::from_terms(rule, first.div_euclid(2), terms)
    };
    let even = part(0)?;
    let odd = part(1)?;
    Ok((even, odd))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignRule {
    Plus,
    Minus,
    /// `(-1)^j` on the subsequence index.
    AltSub,
    /// `(-1)^(j+1)` on the subsequence index.
    AltSubNeg,
    /// `(-1)^i` on the reference index.
    AltRef,
    /// `(-1)^(i+1)` on the reference index.
    AltRefNeg,
}

impl SignRule {
    pub const ALL: [SignRule; 6] = [
        SignRule::Plus,
        SignRule::Minus,
        SignRule::AltSub,
        SignRule::AltSubNeg,
        SignRule::AltRef,
        SignRule::AltRefNeg,
    ];

    fn negative(self, j: i64, i: i64) -> bool {
        match self {
            SignRule::Plus => false,
            SignRule::Minus => true,
            SignRule::AltSub => j.rem_euclid(2) == 1,
            SignRule::AltSubNeg => j.rem_euclid(2) == 0,
            SignRule::AltRef => i.rem_euclid(2) == 1,
            SignRule::AltRefNeg => i.rem_euclid(2) == 0,
        }
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignRule::Plus => "+1",
            SignRule::Minus => "-1",
            SignRule::AltSub => "(-1)^j",
            SignRule::AltSubNeg => "(-1)^(j+1)",
            SignRule::AltRef => "(-1)^i",
            SignRule::AltRefNeg => "(-1)^(i+1)",
        })
    }
}

/// `sub(j) = sign * reference(j + shift)` on every overlapping index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub shift: i64,
    pub sign: SignRule,
    pub overlap: usize,
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sub(j) = {} * ref(j{:+}) on {} terms",
            self.sign, self.shift, self.overlap
        )
    }
}

/// All shifts within `±max_shift` and sign rules that match on at least
/// `min_overlap` indices.
pub fn find_alignments(
    sub: &SomosSequence,
    reference: &BTreeMap<i64, BigInt>,
    max_shift: i64,
    min_overlap: usize,
) -> Vec<Alignment> {
    let mut out = Vec::new();
    for shift in -max_shift..=max_shift {
        for sign in SignRule::ALL {
            let mut overlap = 0;
            let ok = sub.cached_terms().all(|(j, v)| {
                let i = j + shift;
                match reference.get(&i) {
                    None => true,
                    Some(r) => {
                        overlap += 1;
                        let r = Rational::from_integer(r.clone());
                        let expected = if sign.negative(j, i) { -r } else { r };
                        &expected == v
                    }
                }
            });
            if ok && overlap >= min_overlap {
                out.push(Alignment { shift, sign, overlap });
            }
        }
    }
    out
}
