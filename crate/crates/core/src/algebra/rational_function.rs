use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::{AlgebraError, Polynomial, Rational, Ring};

/// Quotient of polynomials in lowest terms.
///
/// The denominator is integer-primitive with a positive leading coefficient,
/// which makes the representation unique.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        num.check_ring(&den)?;
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduce_parts(num, den))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_poly(Polynomial::zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_poly(Polynomial::one(ring))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::from_poly(Polynomial::var(ring, i))
    }

    fn reduce_parts(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.ring());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize(num, den)
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        let prim = den.primitive_part();
        let factor = den.leading_coefficient().expect("nonzero")
            / prim.leading_coefficient().expect("nonzero");
        let num = if factor.is_one() { num } else { num.scale(&factor.recip()) };
        RationalFunction { num, den: prim }
    }

    /// Reduced form of an arbitrary quotient.
    pub fn reduce(&self) -> Self {
        Self::reduce_parts(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Laurent test: the reduced denominator is a single term.
    pub fn has_monomial_denominator(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.num.check_ring(&other.num)?;
        if self.den == other.den {
            return Ok(Self::reduce_parts(&self.num + &other.num, self.den.clone()));
        }
        let g = poly_gcd(&self.den, &other.den);
        let left = other.den.div_exact(&g)?;
        let right = self.den.div_exact(&g)?;
        let num = &(&self.num * &left) + &(&other.num * &right);
        let den = &self.den * &left;
        Ok(Self::reduce_parts(num, den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.num.check_ring(&other.num)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring()));
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1)?;
        let d2 = other.den.div_exact(&g1)?;
        let n2 = other.num.div_exact(&g2)?;
        let d1 = self.den.div_exact(&g2)?;
        Ok(Self::normalize(&n1 * &n2, &d1 * &d2))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFunction {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(k.unsigned_abs()).map_err(|_| AlgebraError::BudgetExceeded("exponent".into()))?;
        Ok(Self::normalize(base.num.pow(k), base.den.pow(k)))
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Substitution into both numerator and denominator.
    pub fn substitute(&self, assignment: &BTreeMap<usize, RationalFunction>) -> Result<Self, AlgebraError> {
        let n = substitute(&self.num, assignment)?;
        let d = substitute(&self.den, assignment)?;
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        n.try_div(&d)
    }
}

/// Replaces each assigned variable of `p` by a rational function over the
/// same ring, clearing all denominators at once before a single reduction.
pub fn substitute(
    p: &Polynomial,
    assignment: &BTreeMap<usize, RationalFunction>,
) -> Result<RationalFunction, AlgebraError> {
    let ring = p.ring();
    for (&v, value) in assignment {
        if v >= ring.len() {
            return Err(AlgebraError::UnknownVariable(format!("index {v}")));
        }
        p.check_ring(&value.num)?;
    }
    struct Powers {
        num: Vec<Polynomial>,
        den: Vec<Polynomial>,
        top: usize,
    }
    let mut powers: BTreeMap<usize, Powers> = BTreeMap::new();
    for (&v, value) in assignment {
        let top = p.degree_in(v) as usize;
        if top == 0 {
            continue;
        }
        let mut num = vec![Polynomial::one(ring)];
        let mut den = vec![Polynomial::one(ring)];
        for k in 1..=top {
            num.push(&num[k - 1] * &value.num);
            den.push(&den[k - 1] * &value.den);
        }
        powers.insert(v, Powers { num, den, top });
    }
    let mut total = Polynomial::zero(ring);
    for (m, c) in p.terms() {
        let mut rest = m.clone();
        let mut factor = Polynomial::one(ring);
        for (&v, pw) in &powers {
            let e = m.exponent(v) as usize;
            rest = rest.with_exponent(v, 0);
            factor = &factor * &(&pw.num[e] * &pw.den[pw.top - e]);
        }
        total = &total + &factor.mul_term(&rest, c);
    }
    let mut den = Polynomial::one(ring);
    for pw in powers.values() {
        den = &den * &pw.den[pw.top];
    }
    RationalFunction::new(total, den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value() == Some(Rational::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
