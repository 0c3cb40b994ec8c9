use std::collections::BTreeMap;

use super::InvariantError;
use crate::algebra::{parse_polynomial, substitute, Monomial, Polynomial, Rational, RationalFunction, Ring};
use crate::verdict::{Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

/// Curve in `P^2` spanned by the monomials `a0^m a1^(d-2m) a2^m`.
#[derive(Debug, Clone)]
pub struct CurveFamily {
    pub degree: u32,
    pub parity: Parity,
    pub parameters: Vec<String>,
    pub polynomial: Polynomial,
}

const CURVE_PARAMS: [&str; 14] = [
    "c", "alpha", "beta", "alpha1", "alpha2", "alpha3", "x1", "x2", "x3", "c1", "c2", "c3", "iota", "x",
];

/// Plane ring with every parameter the curve identities need.
pub fn curve_ring() -> Ring {
    Ring::with_names(&["a0", "a1", "a2"], &CURVE_PARAMS).expect("distinct names")
}

fn default_names(count: usize) -> Vec<String> {
    match count {
        0 => vec![],
        1 => vec!["alpha".into()],
        2 => vec!["alpha".into(), "beta".into()],
        n => (1..=n).map(|i| format!("alpha{i}")).collect(),
    }
}

fn parameter_count(d: u32, parity: Parity) -> usize {
    // m = 0..=d/2 split into pairs (m, d/2 - m), plus m = d/4 when d/2 is even
    let pairs = (d / 2 + 1) / 2;
    let fixed = usize::from(d % 4 == 0);
    match parity {
        Parity::Symmetric => pairs as usize - 1 + fixed,
        Parity::Antisymmetric => pairs as usize - 1,
    }
}

/// Family of degree `d` with parameters named `alpha`, `alpha, beta`, or
/// `alpha1..alphaN`.
pub fn construct_curve(d: u32, parity: Parity) -> Result<CurveFamily, InvariantError> {
    if d < 2 || d % 2 == 1 {
        return Err(InvariantError::Curve(format!("degree {d} must be even and at least 2")));
    }
    let names = default_names(parameter_count(d, parity));
    let ring = if names.len() <= 3 {
        curve_ring()
    } else {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Ring::with_names(&["a0", "a1", "a2"], &refs)?
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    construct_curve_in(&ring, d, parity, &refs)
}

/// Pairs `(m, d/2 - m)` ordered by decreasing power of `a0`; the first pair
/// has coefficient 1, each further pair (and the fixed monomial `m = d/4`
/// in the symmetric case) gets the next parameter.
pub fn construct_curve_in(
    ring: &Ring,
    d: u32,
    parity: Parity,
    names: &[&str],
) -> Result<CurveFamily, InvariantError> {
    if d < 2 || d % 2 == 1 {
        return Err(InvariantError::Curve(format!("degree {d} must be even and at least 2")));
    }
    let need = parameter_count(d, parity);
    if names.len() != need {
        return Err(InvariantError::Curve(format!("degree {d} needs {need} parameters")));
    }
    if ring.projective_len() != 3 {
        return Err(InvariantError::Curve("curves live in the projective plane".into()));
    }
    let half = d / 2;
    let mono = |m: u32| {
        let mut e = vec![0u16; ring.len()];
        e[0] = m as u16;
        e[1] = (d - 2 * m) as u16;
        e[2] = m as u16;
        Polynomial::monomial(ring, Monomial::from_exponents(&e), Rational::from_integer(1.into()))
    };
    let mut params = names.iter();
    let mut poly = Polynomial::zero(ring);
    let mut i = 0;
    while half - i > i {
        let (hi, lo) = (mono(half - i), mono(i));
        let pair = match parity {
            Parity::Symmetric => &hi + &lo,
            Parity::Antisymmetric => &hi - &lo,
        };
        let coeff = if i == 0 {
            Polynomial::one(ring)
        } else {
            Polynomial::var_named(ring, params.next().expect("counted"))?
        };
        poly = &poly + &(&coeff * &pair);
        i += 1;
    }
    if d % 4 == 0 && parity == Parity::Symmetric {
        let p = Polynomial::var_named(ring, params.next().expect("counted"))?;
        poly = &poly + &(&p * &mono(half / 2));
    }
    Ok(CurveFamily {
        degree: d,
        parity,
        parameters: names.iter().map(|s| s.to_string()).collect(),
        polynomial: poly,
    })
}

/// Replaces the family parameters, in order, by the given polynomials.
pub fn specialize(family: &CurveFamily, values: &[Polynomial]) -> Result<Polynomial, InvariantError> {
    if values.len() != family.parameters.len() {
        return Err(InvariantError::Curve("parameter count mismatch".into()));
    }
    let ring = family.polynomial.ring();
    let mut assignment = BTreeMap::new();
    for (name, v) in family.parameters.iter().zip(values) {
        assignment.insert(ring.var_index(name)?, RationalFunction::from_poly(v.embed(ring)?));
    }
    Ok(substitute(&family.polynomial, &assignment)?.numerator().clone())
}

/// Reduces modulo `iota^2 + 1`.
pub fn reduce_iota(p: &Polynomial, iota: usize) -> Polynomial {
    let terms = p.terms().iter().map(|(m, c)| {
        let e = m.exponent(iota);
        let sign = if (e / 2) % 2 == 1 { -c.clone() } else { c.clone() };
        let mut exps = m.exponents().to_vec();
        exps[iota] = e % 2;
        (Monomial::from_exponents(&exps), sign)
    });
    Polynomial::from_terms(p.ring(), terms.collect::<Vec<_>>())
}

/// Identity ids, the statement each one checks, and the expected outcome.
pub const CURVE_IDENTITIES: &[(&str, &str, Status)] = &[
    ("c4_plus2", "C4(2) = C2^2", Status::Verified),
    ("c4_minus2", "C4(-2) = C2a^2", Status::Verified),
    ("c4_zero_complex", "C4(0) = (a0 a2 + i a1^2)(a0 a2 - i a1^2) mod i^2 + 1", Status::Verified),
    ("c4a", "C4a = C2 C2a", Status::Verified),
    ("c6", "C6(alpha) = C4(alpha - 1) C2", Status::Verified),
    ("c6a", "C6a(alpha) = C4(alpha - 1) C2a", Status::Refuted),
    ("c6a_corrected", "C6a(alpha) = C4(alpha + 1) C2a", Status::Verified),
    ("c8", "C8(x1 + x2, 2 + x1 x2) = C4(x1) C4(x2)", Status::Verified),
    ("c8a", "C8a(alpha) = C4(alpha) C2 C2a", Status::Verified),
    ("c12", "C12(s1, 3 + s2, 2 s1 + s3) = C4(x1) C4(x2) C4(x3)", Status::Verified),
    ("c4k2_k1", "C6(c1 + 1) = C2 C4(c1)", Status::Verified),
    ("c4k2_k2", "C10(c1 + 1, c2 + c1) = C2 C8(c1, c2)", Status::Verified),
    ("c4k2_k3", "C14(c1 + 1, c2 + c1, c3 + c2) = C2 C12(c1, c2, c3)", Status::Verified),
    ("resolvent2", "(x - x1)(x - x2) = x^2 - alpha x + (beta - 2) at alpha = x1 + x2, beta = 2 + x1 x2", Status::Verified),
    (
        "resolvent3",
        "(x - x1)(x - x2)(x - x3) = x^3 - alpha1 x^2 + (alpha2 - 3) x - (alpha3 - 2 alpha1) at the C12 correspondence",
        Status::Verified,
    ),
];

fn equal(label: &str, lhs: &Polynomial, rhs: &Polynomial) -> Verdict {
    let residual = lhs - rhs;
    if residual.is_zero() {
        Verdict::verified(format!("{label}: residual 0"))
    } else {
        Verdict::refuted(format!("{label}: residual {}", residual.pretty()))
    }
}

fn family(ring: &Ring, d: u32, parity: Parity, names: &[&str]) -> Result<Polynomial, InvariantError> {
    Ok(construct_curve_in(ring, d, parity, names)?.polynomial)
}

/// Runs one identity from `CURVE_IDENTITIES`.
pub fn curve_identity(id: &str) -> Result<Verdict, InvariantError> {
    let r = curve_ring();
    let p = |s: &str| parse_polynomial(&r, s).expect("literal");
    let sym = Parity::Symmetric;
    let anti = Parity::Antisymmetric;
    let c2 = family(&r, 2, sym, &[])?;
    let c2a = family(&r, 2, anti, &[])?;
    let c4 = construct_curve_in(&r, 4, sym, &["alpha"])?;
    let c4_at = |v: &str| specialize(&c4, &[p(v)]);
    let label = CURVE_IDENTITIES
        .iter()
        .find(|(i, _, _)| *i == id)
        .map(|(_, a, _)| *a)
        .ok_or_else(|| InvariantError::Curve(format!("unknown identity {id}")))?;
    let v = match id {
        "c4_plus2" => equal(label, &c4_at("2")?, &c2.pow(2)),
        "c4_minus2" => equal(label, &c4_at("-2")?, &c2a.pow(2)),
        "c4_zero_complex" => {
            let prod = &p("a0*a2 + iota*a1^2") * &p("a0*a2 - iota*a1^2");
            equal(label, &c4_at("0")?, &reduce_iota(&prod, r.var_index("iota")?))
        }
        "c4a" => equal(label, &family(&r, 4, anti, &[])?, &(&c2 * &c2a)),
        "c6" => {
            let c6 = construct_curve_in(&r, 6, sym, &["alpha"])?.polynomial;
            equal(label, &c6, &(&c4_at("alpha - 1")? * &c2))
        }
        "c6a" | "c6a_corrected" => {
            let c6a = construct_curve_in(&r, 6, anti, &["alpha"])?.polynomial;
            let arg = if id == "c6a" { "alpha - 1" } else { "alpha + 1" };
            equal(label, &c6a, &(&c4_at(arg)? * &c2a))
        }
        "c8" => {
            let c8 = construct_curve_in(&r, 8, sym, &["alpha", "beta"])?;
            let lhs = specialize(&c8, &[p("x1 + x2"), p("2 + x1*x2")])?;
            equal(label, &lhs, &(&c4_at("x1")? * &c4_at("x2")?))
        }
        "c8a" => {
            let c8a = family(&r, 8, anti, &["alpha"])?;
            equal(label, &c8a, &(&(&c4_at("alpha")? * &c2) * &c2a))
        }
        "c12" => {
            let c12 = construct_curve_in(&r, 12, sym, &["alpha1", "alpha2", "alpha3"])?;
            let lhs = specialize(
                &c12,
                &[
                    p("x1 + x2 + x3"),
                    p("3 + x1*x2 + x1*x3 + x2*x3"),
                    p("2*(x1 + x2 + x3) + x1*x2*x3"),
                ],
            )?;
            equal(label, &lhs, &(&(&c4_at("x1")? * &c4_at("x2")?) * &c4_at("x3")?))
        }
        "c4k2_k1" | "c4k2_k2" | "c4k2_k3" => {
            let k: usize = id[id.len() - 1..].parse().expect("digit");
            let names = ["alpha1", "alpha2", "alpha3"];
            let cs = ["c1", "c2", "c3"];
            let even = construct_curve_in(&r, 4 * k as u32, sym, &names[..k])?;
            let odd = construct_curve_in(&r, 4 * k as u32 + 2, sym, &names[..k])?;
            let inner: Vec<Polynomial> = cs[..k].iter().map(|c| p(c)).collect();
            let outer: Vec<Polynomial> = (0..k)
                .map(|i| if i == 0 { p("c1 + 1") } else { p(&format!("{} + {}", cs[i], cs[i - 1])) })
                .collect();
            equal(label, &specialize(&odd, &outer)?, &(&c2 * &specialize(&even, &inner)?))
        }
        "resolvent2" => {
            let roots = &p("x - x1") * &p("x - x2");
            let printed = p("x^2 - (x1 + x2)*x + ((2 + x1*x2) - 2)");
            equal(label, &roots, &printed)
        }
        "resolvent3" => {
            let roots = &(&p("x - x1") * &p("x - x2")) * &p("x - x3");
            let (a1, a2, a3) = (
                "(x1 + x2 + x3)",
                "(3 + x1*x2 + x1*x3 + x2*x3)",
                "(2*(x1 + x2 + x3) + x1*x2*x3)",
            );
            let printed = p(&format!("x^3 - {a1}*x^2 + ({a2} - 3)*x - ({a3} - 2*{a1})"));
            equal(label, &roots, &printed)
        }
        _ => unreachable!("listed above"),
    };
    Ok(v)
}

pub fn verify_curve_identities() -> Result<Vec<(&'static str, Verdict)>, InvariantError> {
    CURVE_IDENTITIES.iter().map(|(id, _, _)| Ok((*id, curve_identity(id)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let r = curve_ring();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        assert_eq!(construct_curve(2, Parity::Symmetric).unwrap().polynomial, p("a0*a2 + a1^2"));
        assert_eq!(construct_curve(2, Parity::Antisymmetric).unwrap().polynomial, p("a0*a2 - a1^2"));
        assert_eq!(
            construct_curve(4, Parity::Symmetric).unwrap().polynomial,
            p("a0^2*a2^2 + a1^4 + alpha*a0*a1^2*a2")
        );
        assert_eq!(construct_curve(4, Parity::Antisymmetric).unwrap().polynomial, p("a0^2*a2^2 - a1^4"));
        let c8 = construct_curve(8, Parity::Symmetric).unwrap();
        assert_eq!(c8.parameters, vec!["alpha", "beta"]);
        assert_eq!(
            c8.polynomial,
            p("a0^4*a2^4 + a1^8 + alpha*(a0^3*a1^2*a2^3 + a0*a1^6*a2) + beta*a0^2*a1^4*a2^2")
        );
        assert!(construct_curve(5, Parity::Symmetric).is_err());
        assert_eq!(construct_curve(20, Parity::Symmetric).unwrap().parameters.len(), 5);
    }

    #[test]
    fn identities_hold() {
        for (id, v) in verify_curve_identities().unwrap() {
            let expected = CURVE_IDENTITIES.iter().find(|c| c.0 == id).unwrap().2;
            assert_eq!(v.status, expected, "{id}: {}", v.witness);
        }
    }

    #[test]
    fn wrong_shift_is_caught() {
        let r = curve_ring();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let c4 = construct_curve_in(&r, 4, Parity::Symmetric, &["alpha"]).unwrap();
        let c6 = construct_curve_in(&r, 6, Parity::Symmetric, &["alpha"]).unwrap().polynomial;
        let c2 = p("a0*a2 + a1^2");
        let wrong = &specialize(&c4, &[p("alpha + 1")]).unwrap() * &c2;
        assert!(!equal("x", &c6, &wrong).is_verified());
    }
}
