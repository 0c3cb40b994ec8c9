use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use super::{AlgebraError, Rational};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

fn integer_ratio(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, value: Rational) -> Self {
        if value.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.len()), value)],
        }
    }

    pub fn from_int(ring: &Ring, value: i64) -> Self {
        Self::constant(ring, Rational::from_integer(value.into()))
    }

    /// The variable with index `i`.
    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.len(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.len(), i, 1), Rational::one())],
        }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Ring, monomial: Monomial, coeff: Rational) -> Self {
        assert_eq!(monomial.len(), ring.len(), "monomial length mismatch");
        if coeff.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(monomial, coeff)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.len(), "monomial length mismatch");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_sorted_map(ring, acc)
    }

    fn from_sorted_map(ring: &Ring, acc: BTreeMap<Monomial, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted descending with no zeros.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_integer_terms(
        ring: &Ring,
        mut terms: Vec<(Monomial, BigInt)>,
        denominator: &BigInt,
    ) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let terms = terms
            .into_iter()
            .map(|(m, c)| {
                let r = if denominator.is_one() {
                    integer_ratio(c)
                } else {
                    Rational::new(c, denominator.clone())
                };
                (m, r)
            })
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant value if the polynomial involves no variable.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    /// True when no projective variable occurs.
    pub fn is_projective_constant(&self) -> bool {
        let n = self.ring.projective_len();
        self.terms.iter().all(|(m, _)| m.partial_degree(n) == 0)
    }

    /// Common degree in the projective variables.
    pub fn homogeneous_degree(&self) -> Result<u32, AlgebraError> {
        let n = self.ring.projective_len();
        let mut iter = self.terms.iter().map(|(m, _)| m.partial_degree(n));
        let first = iter.next().ok_or(AlgebraError::ZeroPolynomial)?;
        if iter.all(|d| d == first) {
            Ok(first)
        } else {
            Err(AlgebraError::NotHomogeneous)
        }
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &b[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Integer coefficients and common denominator: `self = terms / denominator`.
    pub(crate) fn integer_form(&self) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let n = if den.is_one() {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                };
                (m.clone(), n)
            })
            .collect();
        (den, terms)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let (da, ta) = self.integer_form();
        let (db, tb) = other.integer_form();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(ta.len() * 2);
        for (ma, ca) in &ta {
            for (mb, cb) in &tb {
                let m = ma.mul(mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        Polynomial::from_integer_terms(&self.ring, acc.into_iter().collect(), &(da * db))
    }

    /// Product with a single term; order is preserved by monomial mult.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), d * c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        if k == 0 {
            return Polynomial::one(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Polynomial::monomial(&self.ring, m.pow(k), num_traits::pow(c.clone(), k as usize));
        }
        let mut result: Option<Polynomial> = None;
        let mut base = self.clone();
        let mut e = k;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul_impl(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_impl(&base);
        }
        result.expect("k > 0")
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()))
            });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Rational content: positive, so that `self / content` has coprime
    /// integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Integer-primitive associate with positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        self.scale(&inv)
    }

    /// Associate whose leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Canonical sign: leading coefficient positive.
    pub fn canonical_sign(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.iter();
        match iter.next() {
            None => Monomial::one(self.ring.len()),
            Some((first, _)) => iter.fold(first.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        if point.len() != self.ring.len() {
            return Err(AlgebraError::MissingAssignment(format!(
                "expected {} values, got {}",
                self.ring.len(),
                point.len()
            )));
        }
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(point.len());
        for (i, v) in point.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut p = Vec::with_capacity(d + 1);
            p.push(Rational::one());
            for k in 1..=d {
                let next = &p[k - 1] * v;
                p.push(next);
            }
            powers.push(p);
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= &powers[i][e as usize];
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluation by variable name; every variable that occurs must be bound.
    pub fn eval_named(&self, point: &BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let mut values = Vec::with_capacity(self.ring.len());
        for i in 0..self.ring.len() {
            match point.get(self.ring.name(i)) {
                Some(v) => values.push(v.clone()),
                None if !self.involves(i) => values.push(Rational::zero()),
                None => {
                    return Err(AlgebraError::MissingAssignment(self.ring.name(i).to_string()))
                }
            }
        }
        self.eval(&values)
    }

    /// Substitutes a number for one variable, keeping the ring.
    pub fn partial_eval(&self, var: usize, value: &Rational) -> Polynomial {
        let d = self.degree_in(var) as usize;
        let mut powers = vec![Rational::one()];
        for k in 1..=d {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(var) as usize;
            (m.with_exponent(var, 0), c * &powers[e])
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes polynomials for the projective variables
    /// (`images.len()` of them); parameters pass through unchanged.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial, AlgebraError> {
        let n = images.len();
        if n > self.ring.len() {
            return Err(AlgebraError::RingMismatch);
        }
        for img in images {
            self.check_ring(img)?;
        }
        let mut caches: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(&self.ring), img.clone()])
            .collect();
        let mut acc = Polynomial::zero(&self.ring);
        // group terms by their projective part to share products
        let mut groups: BTreeMap<Vec<u16>, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.exponents()[..n].to_vec();
            let rest: Vec<u16> = m
                .exponents()
                .iter()
                .enumerate()
                .map(|(i, &e)| if i < n { 0 } else { e })
                .collect();
            groups
                .entry(key)
                .or_default()
                .push((Monomial::from_exponents(&rest), c.clone()));
        }
        for (key, rest) in groups {
            let mut prod = Polynomial::from_terms(&self.ring, rest);
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut caches[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_impl(&cache[1]);
                    cache.push(next);
                }
                prod = prod.mul_impl(&cache[e as usize]);
            }
            acc = acc.merge(&prod, false);
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in a ring that contains all of its
    /// occurring variables (matched by name).
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, AlgebraError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.len());
        for i in 0..self.ring.len() {
            match target.index_of(self.ring.name(i)) {
                Some(j) => map.push(Some(j)),
                None if !self.involves(i) => map.push(None),
                None => return Err(AlgebraError::UnknownVariable(self.ring.name(i).to_string())),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                match dm.quotient_of(m) {
                    Some(q) => terms.push((q, c * &inv)),
                    None => {
                        return Err(AlgebraError::NotDivisible(format_term(&self.ring, m, c)))
                    }
                }
            }
            return Ok(Polynomial::from_sorted_terms(&self.ring, terms));
        }
        let (dp, tp) = self.integer_form();
        let (dq, tq) = divisor.integer_form();
        let cq = tq
            .iter()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let tq: Vec<(Monomial, BigInt)> = tq.into_iter().map(|(m, c)| (m, c / &cq)).collect();
        let quotient = integer_div_exact(&tq, tp).map_err(|(m, c)| {
            AlgebraError::NotDivisible(format_term(
                &self.ring,
                &m,
                &Rational::new(c, dp.clone()),
            ))
        })?;
        let factor = Rational::new(dq, dp * cq);
        let terms = quotient
            .into_iter()
            .map(|(m, c)| (m, integer_ratio(c) * &factor))
            .collect();
        Ok(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    /// True if `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Polynomial) -> bool {
        self.div_exact(divisor).is_ok()
    }

    /// Coefficients with respect to `var`: index `k` holds the coefficient
    /// of `var^k`, a polynomial free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            buckets[e].push((m.with_exponent(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| {
                let mut t = t;
                t.sort_by(|a, b| b.0.cmp(&a.0));
                Polynomial::from_sorted_terms(&self.ring, t)
            })
            .collect()
    }

    pub fn from_coefficients_in(ring: &Ring, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let shifted = c.mul_term(&Monomial::var(ring.len(), var, k as u16), &Rational::one());
            acc = acc.merge(&shifted, false);
        }
        acc
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Compact text such as `a1*a3 + a2^2 - 2*a0`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.total_degree() == 0 {
                factors.push(a.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(v), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Exact division of integer polynomials with primitive divisor.
/// On failure returns the obstructing remainder term.
fn integer_div_exact(
    divisor: &[(Monomial, BigInt)],
    dividend: Vec<(Monomial, BigInt)>,
) -> Result<Vec<(Monomial, BigInt)>, (Monomial, BigInt)> {
    let mut divisor: Vec<(Monomial, BigInt)> = divisor.to_vec();
    divisor.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let (lm, lc) = divisor[0].clone();
    let mut rem: BTreeMap<Monomial, BigInt> = dividend.into_iter().collect();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        let qm = match lm.quotient_of(&m) {
            Some(q) => q,
            None => return Err((m, c)),
        };
        let (qc, r) = c.div_rem(&lc);
        if !r.is_zero() {
            return Err((m, c));
        }
        for (dm, dc) in &divisor[1..] {
            let key = dm.mul(&qm);
            let delta = dc * &qc;
            match rem.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quotient.push((qm, qc));
    }
    Ok(quotient)
}

pub(crate) fn format_term(ring: &Ring, m: &Monomial, c: &Rational) -> String {
    let mut s = String::new();
    write_term(&mut s, ring, m, c, true).expect("string write");
    s
}

fn write_term<W: fmt::Write>(
    f: &mut W,
    ring: &Ring,
    m: &Monomial,
    c: &Rational,
    leading_sign: bool,
) -> fmt::Result {
    if c.is_negative() {
        write!(f, "-")?;
    } else if leading_sign {
        write!(f, "+")?;
    }
    write!(f, "{}", c.abs())?;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            write!(f, "*{}^{}", ring.name(i), e)?;
        }
    }
    Ok(())
}

/// Canonical text: graded-lex order, explicit signs, coefficients and
/// exponents, e.g. `+2*a0^1*a1^1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (m, c) in &self.terms {
            write_term(f, &self.ring, m, c, true)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
