use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MapError, ProjectivePoint};
use crate::algebra::{poly_gcd_many, Polynomial, Rational, RationalFunction, Ring};

/// Rational self-map of projective space given by homogeneous components.
///
/// Components share no common polynomial factor (parameter-only factors
/// included), have coprime integer coefficients, and the first nonzero
/// component has a positive leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct BirationalMap {
    ring: Ring,
    components: Vec<Polynomial>,
    degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    ExceedsBound(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Exactly(u32),
    AtLeast(u32),
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exactly(m) => write!(f, "={m}"),
            Multiplicity::AtLeast(m) => write!(f, ">={m}"),
        }
    }
}

/// Outcome of comparing a Jacobian determinant with claimed factors.
#[derive(Debug, Clone)]
pub struct JacobianCheck {
    pub determinant: Polynomial,
    pub multiplicities: Vec<u32>,
    pub cofactor: Polynomial,
    pub verified: bool,
    pub detail: String,
}

impl BirationalMap {
    pub fn from_polynomials(ring: &Ring, components: Vec<Polynomial>) -> Result<Self, MapError> {
        if components.len() != ring.projective_len() {
            return Err(MapError::DimensionMismatch {
                expected: ring.projective_len(),
                found: components.len(),
            });
        }
        for c in &components {
            if c.ring() != ring {
                return Err(MapError::Algebra(crate::algebra::AlgebraError::RingMismatch));
            }
        }
        if components.iter().all(Polynomial::is_zero) {
            return Err(MapError::AllZero);
        }
        let g = poly_gcd_many(components.iter()).expect("some component is nonzero");
        let mut components = if g.is_constant() {
            components
        } else {
            components
                .iter()
                .map(|c| c.div_exact(&g))
                .collect::<Result<Vec<_>, _>>()?
        };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &components {
            for (_, coeff) in c.terms() {
                num = num.gcd(coeff.numer());
                den = den.lcm(coeff.denom());
            }
        }
        let first_negative = components
            .iter()
            .find(|c| !c.is_zero())
            .and_then(|c| c.leading_coefficient())
            .is_some_and(|lc| lc.is_negative());
        let mut scale = Rational::new(den, num);
        if first_negative {
            scale = -scale;
        }
        if !scale.is_one() {
            components = components.iter().map(|c| c.scale(&scale)).collect();
        }
        let mut degree = None;
        for c in components.iter().filter(|c| !c.is_zero()) {
            let d = c.homogeneous_degree().map_err(|_| MapError::Inhomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(MapError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(BirationalMap {
            ring: ring.clone(),
            components,
            degree: degree.expect("nonzero component"),
        })
    }

    /// Clears denominators by their least common multiple, then normalizes.
    pub fn from_fractions(ring: &Ring, fractions: &[RationalFunction]) -> Result<Self, MapError> {
        if fractions.len() != ring.projective_len() {
            return Err(MapError::DimensionMismatch {
                expected: ring.projective_len(),
                found: fractions.len(),
            });
        }
        let mut lcm = Polynomial::one(ring);
        for f in fractions {
            let d = f.denominator();
            let g = crate::algebra::poly_gcd(&lcm, d);
            lcm = &lcm * &d.div_exact(&g)?;
        }
        let comps = fractions
            .iter()
            .map(|f| Ok(f.numerator() * &lcm.div_exact(f.denominator())?))
            .collect::<Result<Vec<_>, MapError>>()?;
        Self::from_polynomials(ring, comps)
    }

    pub fn identity(ring: &Ring) -> Self {
        let comps = (0..ring.projective_len())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        BirationalMap {
            ring: ring.clone(),
            components: comps,
            degree: 1,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `self ∘ inner`: substitutes the components of `inner` into `self`.
    pub fn compose(&self, inner: &BirationalMap) -> Result<BirationalMap, MapError> {
        if self.ring != inner.ring {
            return Err(MapError::DimensionMismatch {
                expected: self.dim(),
                found: inner.dim(),
            });
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(&inner.components))
            .collect::<Result<Vec<_>, _>>()?;
        if comps.iter().all(Polynomial::is_zero) {
            return Err(MapError::ZeroComposition);
        }
        Self::from_polynomials(&self.ring, comps)
    }

    /// `n`-fold composite, computed as `self ∘ self^(n-1)`.
    pub fn power(&self, n: usize) -> Result<BirationalMap, MapError> {
        let mut acc = BirationalMap::identity(&self.ring);
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `P ∘ self` as a polynomial.
    pub fn pullback(&self, p: &Polynomial) -> Result<Polynomial, MapError> {
        Ok(p.compose(&self.components)?)
    }

    /// Fixes a parameter at a value.
    pub fn bind(&self, param: &str, value: &Rational) -> Result<BirationalMap, MapError> {
        let v = self.ring.var_index(param)?;
        let comps = self
            .components
            .iter()
            .map(|c| c.partial_eval(v, value))
            .collect();
        Self::from_polynomials(&self.ring, comps)
    }

    /// Evaluates the components; parameters occurring in the map must be bound.
    pub fn apply(
        &self,
        point: &ProjectivePoint,
        params: &BTreeMap<String, Rational>,
    ) -> Result<ProjectivePoint, MapError> {
        if point.dim() != self.dim() {
            return Err(MapError::DimensionMismatch {
                expected: self.dim(),
                found: point.dim(),
            });
        }
        let mut values: Vec<Rational> = point.coords().to_vec();
        for (i, name) in self.ring.parameters() {
            match params.get(name) {
                Some(v) => values.push(v.clone()),
                None if self.components.iter().all(|c| !c.involves(i)) => {
                    values.push(Rational::zero())
                }
                None => return Err(MapError::UnboundParameter(name.to_string())),
            }
        }
        let image = self
            .components
            .iter()
            .map(|c| c.eval(&values))
            .collect::<Result<Vec<_>, _>>()?;
        ProjectivePoint::new(image).map_err(|_| MapError::Indeterminate(point.to_string()))
    }

    /// All 2x2 minors of the stacked component matrix vanish identically.
    pub fn equal_projective(&self, other: &BirationalMap) -> bool {
        if self.ring != other.ring {
            return false;
        }
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                &self.components[i] * &other.components[j]
                    == &self.components[j] * &other.components[i]
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.equal_projective(&BirationalMap::identity(&self.ring))
    }

    pub fn order(&self, bound: usize) -> Result<Order, MapError> {
        let mut acc = BirationalMap::identity(&self.ring);
        for k in 1..=bound {
            acc = self.compose(&acc)?;
            if acc.is_identity() {
                return Ok(Order::Finite(k));
            }
        }
        Ok(Order::ExceedsBound(bound))
    }

    /// Determinant of the matrix of partial derivatives with respect to the
    /// projective variables.
    pub fn jacobian_determinant(&self) -> Polynomial {
        let n = self.dim();
        let matrix: Vec<Vec<Polynomial>> = self
            .components
            .iter()
            .map(|c| (0..n).map(|j| c.derivative(j)).collect())
            .collect();
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        minor(&matrix, (1u32 << n) - 1, &mut memo, &self.ring)
    }

    /// Divides the Jacobian determinant by each claimed factor as often as
    /// possible; verified when the multiplicities match and what remains is
    /// free of projective variables.
    pub fn jacobian_factors(
        &self,
        claimed: &[(Polynomial, Multiplicity)],
    ) -> Result<JacobianCheck, MapError> {
        let det = self.jacobian_determinant();
        if det.is_zero() {
            return Err(MapError::ZeroJacobian);
        }
        let mut rest = det.clone();
        let mut found = Vec::with_capacity(claimed.len());
        let mut problems = Vec::new();
        for (factor, mult) in claimed {
            if factor.is_projective_constant() {
                return Err(MapError::BadFactor(factor.pretty()));
            }
            let mut m = 0u32;
            while let Ok(q) = rest.div_exact(factor) {
                rest = q;
                m += 1;
            }
            let ok = match mult {
                Multiplicity::Exactly(e) => m == *e,
                Multiplicity::AtLeast(e) => m >= *e,
            };
            if !ok {
                problems.push(format!("factor {} has multiplicity {m}, claimed {mult}", factor.pretty()));
            }
            found.push(m);
        }
        if !rest.is_projective_constant() {
            problems.push(format!("cofactor {} involves projective variables", rest.pretty()));
        }
        let verified = problems.is_empty();
        let detail = if verified {
            format!("det = ({}) * claimed factors, multiplicities {found:?}", rest.pretty())
        } else {
            problems.join("; ")
        };
        Ok(JacobianCheck {
            determinant: det,
            multiplicities: found,
            cofactor: rest,
            verified,
            detail,
        })
    }
}

fn minor(
    matrix: &[Vec<Polynomial>],
    cols: u32,
    memo: &mut HashMap<u32, Polynomial>,
    ring: &Ring,
) -> Polynomial {
    let k = cols.count_ones() as usize;
    if k == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let row = k - 1;
    let mut acc = Polynomial::zero(ring);
    // expansion along the last row of the leading k x k block
    for (position, c) in (0..matrix.len()).filter(|c| cols & (1 << c) != 0).enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let term = entry * &minor(matrix, cols & !(1 << c), memo, ring);
        acc = if (row + position) % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    memo.insert(cols, acc.clone());
    acc
}

impl fmt::Display for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{}", c.pretty())?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BirationalMap(deg {}, {self})", self.degree)
    }
}
