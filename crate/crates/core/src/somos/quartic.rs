use std::collections::BTreeMap;

use super::{SomosError, SomosRule, SymbolicSequence};
use crate::algebra::{parse_polynomial, substitute, Polynomial, Rational, RationalFunction, Ring};
use crate::verdict::Verdict;

/// Quartic condition on four consecutive terms.
pub fn eval_s(w: &[Rational]) -> Rational {
    assert!(w.len() >= 4, "four terms required");
    let (a0, a1, a2, a3) = (&w[0], &w[1], &w[2], &w[3]);
    let two = Rational::from_integer(2.into());
    a0 * a0 * a3 * a3 + a1 * a1 * a2 * a2 + a0 * a2 * a2 * a2 + a3 * a1 * a1 * a1
        + two * a0 * a1 * a2 * a3
}

/// `S` in the first four projective variables of `ring`.
pub fn s_polynomial(ring: &Ring) -> Polynomial {
    s_polynomial_with_cross(ring, 2)
}

/// `S` with the coefficient of `a0 a1 a2 a3` replaced by `cross`.
pub fn s_polynomial_with_cross(ring: &Ring, cross: i64) -> Polynomial {
    let n = |i: usize| ring.name(i).to_string();
    let text = format!(
        "{0}^2*{3}^2 + {1}^2*{2}^2 + {0}*{2}^3 + {3}*{1}^3 + {4}*{0}*{1}*{2}*{3}",
        n(0),
        n(1),
        n(2),
        n(3),
        cross
    );
    parse_polynomial(ring, &text).expect("well-formed quartic")
}

#[derive(Debug, Clone)]
pub struct PropagationReport {
    /// `S(a1..a4) a0^2 = S(a0..a3) (a1 a3 + a2^2)` with `a4` eliminated.
    pub propagation: Verdict,
    /// `S` divides the numerator of `a0 a8 - a2 a6 - a4^2`.
    pub even: Verdict,
    /// `S` divides the numerator of `a1 a9 - a3 a7 - a5^2`.
    pub odd: Verdict,
}

impl PropagationReport {
    pub fn overall(&self) -> Verdict {
        Verdict::all([self.propagation.clone(), self.even.clone(), self.odd.clone()])
    }
}

pub fn verify_s_propagation() -> Result<PropagationReport, SomosError> {
    verify_with_cross(2)
}

/// Same checks with the cross coefficient replaced; a mutation control.
pub fn verify_with_cross(cross: i64) -> Result<PropagationReport, SomosError> {
    verify_propagation_for(&s_polynomial_with_cross(&Ring::new(4, &[]), cross))
}

/// Runs the propagation and eight-step checks for an arbitrary quartic in
/// `a0..a3`.
pub fn verify_propagation_for(s: &Polynomial) -> Result<PropagationReport, SomosError> {
    let mut seq = SymbolicSequence::new(SomosRule::new(4)?);
    let ring = seq.ring().clone();
    let s = &s.embed(&ring)?;

    let shifted: BTreeMap<usize, RationalFunction> =
        (0..4).map(|i| Ok((i, seq.get(i as i64 + 1)?))).collect::<Result<_, SomosError>>()?;
    let s1 = substitute(s, &shifted)?;
    let a0 = Polynomial::var(&ring, 0);
    let q = parse_polynomial(&ring, "a1*a3 + a2^2")?;
    let lhs = s1.try_mul(&RationalFunction::from_poly(&a0 * &a0))?;
    let rhs = RationalFunction::from_poly(s * &q);
    let residual = lhs.try_sub(&rhs)?;
    let propagation = Verdict::check(
        residual.is_zero(),
        if residual.is_zero() {
            "residual 0".to_string()
        } else {
            format!("residual numerator {}", residual.numerator().pretty())
        },
    );

    let mut eight_step = |n: i64| -> Result<Verdict, SomosError> {
        let t = |seq: &mut SymbolicSequence, i: i64| seq.get(n + i);
        let e = t(&mut seq, 0)?
            .try_mul(&t(&mut seq, 8)?)?
            .try_sub(&t(&mut seq, 2)?.try_mul(&t(&mut seq, 6)?)?)?
            .try_sub(&t(&mut seq, 4)?.pow(2))?;
        let num = e.numerator();
        Ok(match num.div_exact(s) {
            Ok(cof) => Verdict::verified(format!(
                "numerator = S * cofactor with {} cofactor terms",
                cof.len()
            )),
            Err(e) => Verdict::refuted(format!("S does not divide numerator: {e}")),
        })
    };
    let even = eight_step(0)?;
    let odd = eight_step(1)?;
    Ok(PropagationReport { propagation, even, odd })
}
