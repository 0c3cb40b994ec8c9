use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Exps, Field, FlatPoly};
use super::monomial::Monomial;
use super::{Polynomial, Rational};

/// Primitive, canonically signed gcd of two polynomials.
///
/// `gcd(p, 0)` is the primitive part of `p`; `gcd(0, 0)` is zero.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.check_ring(q).expect("ring mismatch");
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    let ring = p.ring();
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = Polynomial::monomial(ring, mp.gcd(&mq), Rational::one());
    let p1 = p.div_exact(&Polynomial::monomial(ring, mp, Rational::one())).expect("monomial content");
    let q1 = q.div_exact(&Polynomial::monomial(ring, mq, Rational::one())).expect("monomial content");
    if p1.is_constant() || q1.is_constant() {
        return mono;
    }
    let g = modular_gcd(&p1.primitive_part(), &q1.primitive_part());
    (&g * &mono).primitive_part()
}

/// Gcd of any number of polynomials, stopping early at a constant.
pub fn poly_gcd_many<'a, I>(polys: I) -> Option<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc: Option<Polynomial> = None;
    let mut items: Vec<&Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    items.sort_by_key(|p| p.len());
    for p in items {
        acc = Some(match acc {
            None => p.primitive_part(),
            Some(g) => poly_gcd(&g, p),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    acc
}

struct Active {
    vars: Vec<usize>,
}

impl Active {
    fn of(a: &Polynomial, b: &Polynomial) -> Self {
        let vars = (0..a.ring().len())
            .filter(|&v| a.involves(v) || b.involves(v))
            .collect();
        Active { vars }
    }

    fn compress(&self, m: &Monomial) -> Exps {
        self.vars.iter().map(|&v| m.exponent(v)).collect()
    }

    fn expand(&self, e: &Exps, nvars: usize) -> Monomial {
        let mut exps = vec![0u16; nvars];
        for (k, &v) in self.vars.iter().enumerate() {
            exps[v] = e[k];
        }
        Monomial::from_exponents(&exps)
    }
}

/// Integer coefficients keyed by lex-ordered compressed exponents.
fn integer_lex(p: &Polynomial, active: &Active) -> Vec<(Exps, BigInt)> {
    let (_, terms) = p.integer_form();
    let mut out: Vec<(Exps, BigInt)> = terms
        .into_iter()
        .map(|(m, c)| (active.compress(&m), c))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

fn reduce_mod(p: &[(Exps, BigInt)], prime: u64) -> FlatPoly {
    let big_p = BigInt::from(prime);
    p.iter()
        .filter_map(|(e, c)| {
            let r = c.mod_floor(&big_p).to_u64().expect("reduced");
            (r != 0).then(|| (e.clone(), r))
        })
        .collect()
}

fn degree_bounds(
    a: &[(Exps, BigInt)],
    b: &[(Exps, BigInt)],
    nvars: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let prime = modp::primes().nth(7).expect("prime");
    let f = Field { p: prime };
    let ap = reduce_mod(a, prime);
    let bp = reduce_mod(b, prime);
    let deg = |p: &[(Exps, BigInt)], v: usize| p.iter().map(|(e, _)| e[v] as usize).max().unwrap_or(0);
    (0..nvars)
        .map(|v| {
            let (da, db) = (deg(a, v), deg(b, v));
            (0..8)
                .find_map(|_| modp::univariate_degree_bound(f, &ap, &bp, v, (da, db), nvars, rng))
                .unwrap_or(da.min(db))
        })
        .collect()
}

fn symmetric(x: &BigInt, modulus: &BigInt) -> BigInt {
    if (x << 1u32) > *modulus {
        x - modulus
    } else {
        x.clone()
    }
}

fn to_polynomial(
    template: &Polynomial,
    active: &Active,
    coeffs: &BTreeMap<Exps, BigInt>,
) -> Polynomial {
    let nvars = template.ring().len();
    Polynomial::from_terms(
        template.ring(),
        coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (active.expand(e, nvars), Rational::from_integer(c.clone()))),
    )
}

/// Gcd of integer-primitive polynomials by CRT over 62-bit primes.
///
/// A candidate is accepted only if it divides both inputs and its degree
/// in every variable meets an independent univariate upper bound, which
/// together certify it as the gcd.
fn modular_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring();
    let active = Active::of(a, b);
    let n = active.vars.len();
    let al = integer_lex(a, &active);
    let bl = integer_lex(b, &active);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_a1);
    let mut bounds = degree_bounds(&al, &bl, n, &mut rng);
    if bounds.iter().all(|&d| d == 0) {
        return Polynomial::one(ring);
    }
    let degrees = |p: &Polynomial| -> Vec<usize> {
        active.vars.iter().map(|&v| p.degree_in(v) as usize).collect()
    };
    for (x, y) in [(a, b), (b, a)] {
        if degrees(x) == bounds && y.is_divisible_by(x) {
            return x.primitive_part();
        }
    }

    let lca = al[0].1.clone();
    let lcb = bl[0].1.clone();
    let gamma = lca.gcd(&lcb);
    let mut modulus = BigInt::one();
    let mut residues: BTreeMap<Exps, BigInt> = BTreeMap::new();
    let mut lifted: Option<BTreeMap<Exps, BigInt>> = None;
    let mut lead: Option<Exps> = None;
    let mut rechecks = 0;

    for (used, prime) in modp::primes().enumerate() {
        if used > 400 {
            break;
        }
        let big_p = BigInt::from(prime);
        if (&lca % &big_p).is_zero() || (&lcb % &big_p).is_zero() {
            continue;
        }
        let f = Field { p: prime };
        let gp = modp::pgcd(f, &reduce_mod(&al, prime), &reduce_mod(&bl, prime), n, &mut rng);
        if gp.len() == 1 && gp[0].0.iter().all(|&e| e == 0) {
            return Polynomial::one(ring);
        }
        let lm = gp[0].0.clone();
        match &lead {
            Some(cur) if lm > *cur => continue,
            Some(cur) if lm == *cur => {}
            _ => {
                lead = Some(lm);
                modulus = BigInt::one();
                residues.clear();
                lifted = None;
            }
        }
        let g_mod = gamma.mod_floor(&big_p).to_u64().expect("reduced");
        let image: BTreeMap<Exps, u64> = gp.into_iter().map(|(e, c)| (e, f.mul(c, g_mod))).collect();
        let m_mod = (&modulus % &big_p).to_u64().expect("reduced");
        let inv_m = f.inv(m_mod);
        let mut keys: Vec<Exps> = residues.keys().cloned().collect();
        keys.extend(image.keys().cloned());
        keys.sort();
        keys.dedup();
        for key in keys {
            let old = residues.get(&key).cloned().unwrap_or_else(BigInt::zero);
            let old_mod = (&old % &big_p).to_u64().expect("reduced");
            let v = image.get(&key).copied().unwrap_or(0);
            let t = f.mul(f.sub(v, old_mod), inv_m);
            let new = old + &modulus * BigInt::from(t);
            residues.insert(key, new);
        }
        modulus *= &big_p;
        let sym: BTreeMap<Exps, BigInt> = residues
            .iter()
            .map(|(k, v)| (k.clone(), symmetric(v, &modulus)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let stable = lifted.as_ref() == Some(&sym);
        lifted = Some(sym);
        if !stable {
            continue;
        }
        let candidate = to_polynomial(a, &active, lifted.as_ref().unwrap()).primitive_part();
        if !(a.is_divisible_by(&candidate) && b.is_divisible_by(&candidate)) {
            continue;
        }
        loop {
            if degrees(&candidate) == bounds {
                return candidate;
            }
            if rechecks >= 3 {
                break;
            }
            rechecks += 1;
            let fresh = degree_bounds(&al, &bl, n, &mut rng);
            bounds = bounds.iter().zip(&fresh).map(|(x, y)| *x.min(y)).collect();
        }
    }
    super::prs::gcd_prs(a, b)
}
