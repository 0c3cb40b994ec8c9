use super::InvariantError;
use crate::algebra::Polynomial;
use crate::projmap::BirationalMap;
use crate::verdict::Verdict;

/// Outcome of testing `P ∘ φ = cofactor · P`.
#[derive(Debug, Clone)]
pub struct InvariantCheck {
    pub verdict: Verdict,
    pub cofactor: Option<Polynomial>,
}

pub fn check_invariant(phi: &BirationalMap, p: &Polynomial) -> Result<InvariantCheck, InvariantError> {
    p.homogeneous_degree()?;
    let pulled = phi.pullback(p)?;
    Ok(match pulled.div_exact(p) {
        Ok(cof) if !cof.is_zero() => {
            // re-check by multiplication
            let ok = &cof * p == pulled;
            InvariantCheck {
                verdict: Verdict::check(ok, format!("cofactor {}", cof.pretty())),
                cofactor: Some(cof),
            }
        }
        Ok(_) => InvariantCheck {
            verdict: Verdict::refuted("pullback vanishes identically"),
            cofactor: None,
        },
        Err(e) => InvariantCheck {
            verdict: Verdict::refuted(format!("pullback not divisible: {e}")),
            cofactor: None,
        },
    })
}

/// Swap of the two roots of `P` viewed as a quadratic in projective variable
/// `var`: `v ↦ -c1/c2 - v`, other coordinates fixed, denominators cleared.
pub fn vieta_involution(p: &Polynomial, var: usize) -> Result<BirationalMap, InvariantError> {
    let ring = p.ring();
    let deg = p.degree_in(var);
    if deg != 2 {
        return Err(InvariantError::NotQuadratic { var: ring.name(var).to_string(), found: deg });
    }
    let coeffs = p.coefficients_in(var);
    let (c1, c2) = (&coeffs[1], &coeffs[2]);
    let comps = (0..ring.projective_len())
        .map(|i| {
            let x = Polynomial::var(ring, i);
            if i == var {
                -(c1 + &(c2 * &x))
            } else {
                &x * c2
            }
        })
        .collect();
    Ok(BirationalMap::from_polynomials(ring, comps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Ring};
    use crate::somos::s_polynomial;

    #[test]
    fn symmetric_roots() {
        let r = Ring::new(2, &[]);
        let p = parse_polynomial(&r, "a0^2 - a1^2").unwrap();
        let h = vieta_involution(&p, 0).unwrap();
        let expected = BirationalMap::from_polynomials(
            &r,
            vec![parse_polynomial(&r, "-a0").unwrap(), parse_polynomial(&r, "a1").unwrap()],
        )
        .unwrap();
        assert!(h.equal_projective(&expected));
    }

    #[test]
    fn vieta_on_s() {
        let r = Ring::new(4, &[]);
        let s = s_polynomial(&r);
        let h = vieta_involution(&s, 0).unwrap();
        assert_eq!(h.degree(), 3);
        assert!(h.compose(&h).unwrap().is_identity());
        let chk = check_invariant(&h, &s).unwrap();
        assert!(chk.verdict.is_verified(), "{}", chk.verdict.witness);
        let cubic = parse_polynomial(&r, "a0*a1*a2").unwrap();
        assert!(matches!(vieta_involution(&cubic, 0), Err(InvariantError::NotQuadratic { .. })));
    }
}
