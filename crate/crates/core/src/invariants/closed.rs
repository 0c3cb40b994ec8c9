use std::collections::BTreeMap;

use super::{InvariantError, Representation};
use crate::algebra::{parse_polynomial, Rational, RationalFunction, Ring};
use crate::projmap::{BirationalMap, ProjectivePoint};
use crate::somos::{SomosRule, SymbolicSequence};
use crate::verdict::Verdict;

fn rf(ring: &Ring, text: &str) -> RationalFunction {
    RationalFunction::from_poly(parse_polynomial(ring, text).expect("literal"))
}

/// Printed closed form of `J(alpha)^m` with `U = a0 a2 + alpha a1^2`.
pub fn j_power_closed_form(rep: &Representation, m: u32) -> Result<BirationalMap, InvariantError> {
    if rep.order() != 3 {
        return Err(InvariantError::MissingGenerator("J(alpha)".into()));
    }
    let ring = rep.ring();
    let (a0, a1, a2) = (rf(ring, "a0"), rf(ring, "a1"), rf(ring, "a2"));
    let u = rf(ring, "a0*a2 + alpha*a1^2");
    let n = (m / 2) as i64;
    let sign = |f: RationalFunction| if n % 2 == 1 { f.neg() } else { f };
    let comps = if m % 2 == 0 {
        vec![
            u.powi(2 * n)?,
            sign(a0.powi(n - 1)?.try_mul(&a1)?.try_mul(&a2.powi(n)?)?.try_mul(&u.powi(n)?)?),
            a0.powi(2 * n - 1)?.try_mul(&a2.powi(2 * n + 1)?)?,
        ]
    } else {
        vec![
            a0.powi(2 * n)?.try_mul(&a2.powi(2 * n + 2)?)?,
            sign(a0.powi(n)?.try_mul(&a1)?.try_mul(&a2.powi(n + 1)?)?.try_mul(&u.powi(n)?)?),
            u.powi(2 * n + 1)?.neg(),
        ]
    };
    Ok(BirationalMap::from_fractions(ring, &comps)?)
}

/// `J^m` by repeated composition against the closed form, alpha symbolic.
pub fn verify_j_power(rep: &Representation, power: &BirationalMap, m: u32) -> Result<Verdict, InvariantError> {
    let closed = j_power_closed_form(rep, m)?;
    Ok(Verdict::check(
        power.equal_projective(&closed),
        format!("J^{m}: composed {power} vs closed form {closed}"),
    ))
}

pub fn verify_j_powers(rep: &Representation, m_max: u32) -> Result<Vec<(u32, Verdict)>, InvariantError> {
    let j = rep.get("J(alpha)")?;
    let mut acc = BirationalMap::identity(rep.ring());
    let mut out = Vec::new();
    for m in 1..=m_max {
        acc = j.compose(&acc)?;
        out.push((m, verify_j_power(rep, &acc, m)?));
    }
    Ok(out)
}

/// `J(0)` applied four times to `(2:3:5)` against the closed form for `m = 4`.
pub fn verify_j_spot_check(rep: &Representation) -> Result<Verdict, InvariantError> {
    let params: BTreeMap<String, Rational> = [("alpha".to_string(), Rational::from_integer(0.into()))].into();
    let j = rep.get("J(alpha)")?;
    let start = ProjectivePoint::from_ints(&[2, 3, 5])?;
    let mut p = start.clone();
    for _ in 0..4 {
        p = j.apply(&p, &params)?;
    }
    let q = j_power_closed_form(rep, 4)?.apply(&start, &params)?;
    Ok(Verdict::check(p == q, format!("iterated {p}, closed form {q}")))
}

fn closed_somos(ring: &Ring, k: usize, n: i64) -> Result<RationalFunction, InvariantError> {
    let a0 = rf(ring, "a0");
    let a1 = rf(ring, "a1");
    Ok(match k {
        2 => a1.powi(n)?.try_div(&a0.powi(n - 1)?)?,
        3 => {
            let a2 = rf(ring, "a2");
            let h = n.div_euclid(2);
            if n.rem_euclid(2) == 0 {
                a2.powi(h)?.try_div(&a0.powi(h - 1)?)?
            } else {
                a1.try_mul(&a2.powi(h)?)?.try_div(&a0.powi(h)?)?
            }
        }
        _ => return Err(InvariantError::Order(k)),
    })
}

/// Symbolic Somos-2 and Somos-3 terms against their closed forms, `|n| <= bound`.
pub fn verify_closed_forms(k: usize, bound: i64) -> Result<Verdict, InvariantError> {
    let mut seq = SymbolicSequence::new(SomosRule::new(k)?);
    let ring = seq.ring().clone();
    let mut order: Vec<i64> = (0..=bound).collect();
    order.extend((-bound..0).rev());
    for n in order {
        let got = seq.get(n)?;
        let want = closed_somos(&ring, k, n)?;
        if got != want {
            return Ok(Verdict::refuted(format!(
                "k = {k}, n = {n}: recurrence {}/({}) vs closed form {}/({})",
                got.numerator().pretty(),
                got.denominator().pretty(),
                want.numerator().pretty(),
                want.denominator().pretty()
            )));
        }
    }
    Ok(Verdict::verified(format!("k = {k}: {} terms agree", 2 * bound + 1)))
}
