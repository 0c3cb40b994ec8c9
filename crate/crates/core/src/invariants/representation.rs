use std::collections::BTreeMap;

use super::{vieta_involution, InvariantError};
use crate::algebra::{parse_polynomial, Polynomial, RationalFunction, Ring};
use crate::projmap::{BirationalMap, GeneratorSet};
use crate::somos::{s_polynomial, symbolic_term};

/// Generators of the Somos-k symmetry group acting on `P^{k-1}`.
///
/// Keys follow the word syntax: `M(c)`, `R`, `F`, `G`, and where defined
/// `H`, `H1`, `H(alpha)`, `J(alpha)`, `Hp` (the printed variant for k = 4).
#[derive(Debug, Clone)]
pub struct Representation {
    k: usize,
    ring: Ring,
    generators: BTreeMap<String, BirationalMap>,
}

impl Representation {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, key: &str) -> Result<&BirationalMap, InvariantError> {
        self.generators
            .get(key)
            .ok_or_else(|| InvariantError::MissingGenerator(key.to_string()))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(String::as_str)
    }

    pub fn poly(&self, text: &str) -> Polynomial {
        parse_polynomial(&self.ring, text).expect("well-formed literal")
    }

    fn fractions(&self, parts: &[(&str, &str)]) -> Result<BirationalMap, InvariantError> {
        let fr = parts
            .iter()
            .map(|(n, d)| Ok(RationalFunction::new(self.poly(n), self.poly(d))?))
            .collect::<Result<Vec<_>, InvariantError>>()?;
        Ok(BirationalMap::from_fractions(&self.ring, &fr)?)
    }
}

impl GeneratorSet for Representation {
    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn generator(&self, key: &str) -> Option<&BirationalMap> {
        self.generators.get(key)
    }
}

fn embed(f: &RationalFunction, ring: &Ring) -> Result<RationalFunction, InvariantError> {
    Ok(RationalFunction::new(f.numerator().embed(ring)?, f.denominator().embed(ring)?)?)
}

pub fn build_representation(k: usize) -> Result<Representation, InvariantError> {
    let params: &[&str] = match k {
        3 => &["c", "alpha"],
        2 | 4 | 5 => &["c"],
        _ => return Err(InvariantError::Order(k)),
    };
    let ring = Ring::new(k, params);
    let mut rep = Representation { k, ring: ring.clone(), generators: BTreeMap::new() };

    let vars: Vec<RationalFunction> = (0..k).map(|i| RationalFunction::var(&ring, i)).collect();
    let mut shift: Vec<RationalFunction> = vars[1..].to_vec();
    shift.push(embed(&symbolic_term(k, k as i64)?, &ring)?);
    let f = BirationalMap::from_fractions(&ring, &shift)?;

    let c = Polynomial::var_named(&ring, "c")?;
    let m = BirationalMap::from_polynomials(
        &ring,
        (0..k).map(|i| &Polynomial::var(&ring, i) * &c.pow(i as u32)).collect(),
    )?;
    let r = BirationalMap::from_polynomials(&ring, (0..k).rev().map(|i| Polynomial::var(&ring, i)).collect())?;
    let g = r.compose(&f)?;
    rep.generators.insert("F".into(), f);
    rep.generators.insert("M(c)".into(), m);
    rep.generators.insert("R".into(), r.clone());
    rep.generators.insert("G".into(), g);

    match k {
        3 => {
            let h1 = rep.fractions(&[("a0", "1"), ("-a1", "1"), ("a2", "1")])?;
            let ha = rep.fractions(&[("-alpha*a1^2 - a0*a2", "a2"), ("a1", "1"), ("a2", "1")])?;
            let j = r.compose(&ha)?;
            rep.generators.insert("H".into(), h1.clone());
            rep.generators.insert("H1".into(), h1);
            rep.generators.insert("H(alpha)".into(), ha);
            rep.generators.insert("J(alpha)".into(), j);
        }
        4 => {
            let h = vieta_involution(&s_polynomial(&ring), 0)?;
            rep.generators.insert("H".into(), h);
            rep.generators.insert("Hp".into(), printed_h(&rep)?);
        }
        _ => {}
    }
    Ok(rep)
}

/// `G` exactly as printed, for k = 3, 4, 5.
pub fn printed_g(rep: &Representation) -> Result<Option<BirationalMap>, InvariantError> {
    let parts: &[(&str, &str)] = match rep.k {
        3 => &[("a1*a2", "a0"), ("a2", "1"), ("a1", "1")],
        4 => &[("a1*a3 + a2^2", "a0"), ("a3", "1"), ("a2", "1"), ("a1", "1")],
        5 => &[("a1*a4 + a2*a3", "a0"), ("a4", "1"), ("a3", "1"), ("a2", "1"), ("a1", "1")],
        _ => return Ok(None),
    };
    rep.fractions(parts).map(Some)
}

/// The a0-involution of `S` with the printed sign, k = 4 only.
pub fn printed_h(rep: &Representation) -> Result<BirationalMap, InvariantError> {
    if rep.k != 4 {
        return Err(InvariantError::MissingGenerator("Hp".into()));
    }
    rep.fractions(&[
        ("a2^3 - 2*a1*a2*a3 - a0*a3^2", "a3^2"),
        ("a1", "1"),
        ("a2", "1"),
        ("a3", "1"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projmap::{word_to_map, BindingMode, MapWord, Order};

    #[test]
    fn printed_g_is_r_after_f() {
        for k in [3, 4, 5] {
            let rep = build_representation(k).unwrap();
            let g = printed_g(&rep).unwrap().unwrap();
            assert!(rep.get("G").unwrap().equal_projective(&g), "k = {k}");
        }
    }

    #[test]
    fn shift_orders() {
        let r2 = build_representation(2).unwrap();
        assert!(r2.get("F").unwrap().is_identity());
        let r3 = build_representation(3).unwrap();
        assert_eq!(r3.get("F").unwrap().order(4).unwrap(), Order::Finite(2));
    }

    #[test]
    fn words() {
        let rep = build_representation(4).unwrap();
        let w: MapWord = "R.F".parse().unwrap();
        let g = word_to_map(&rep, &w, BindingMode::Symbolic).unwrap();
        assert!(g.equal_projective(rep.get("G").unwrap()));
        let w: MapWord = "M(c).R.M(c).R".parse().unwrap();
        assert!(word_to_map(&rep, &w, BindingMode::Symbolic).unwrap().is_identity());
        assert!(word_to_map(&rep, &w, BindingMode::Numeric).is_err());
        let w: MapWord = "M(c=0)".parse().unwrap();
        assert!(word_to_map(&rep, &w, BindingMode::Numeric).is_err());
        let w: MapWord = "Q".parse().unwrap();
        assert!(word_to_map(&rep, &w, BindingMode::Symbolic).is_err());
    }
}
