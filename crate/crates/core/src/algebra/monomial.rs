use std::cmp::Ordering;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u16; 8]>;

/// Exponent vector over a ring's ordered variable list.
///
/// Ordering is graded lexicographic: higher total degree first, ties broken
/// lexicographically with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Self::from_smallvec(SmallVec::from_slice(exps))
    }

    pub(crate) fn from_smallvec(exps: Exponents) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn var(nvars: usize, i: usize, power: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = power;
        m.degree = power as u32;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    /// Degree counted over the first `count` variables only.
    pub fn partial_degree(&self, count: usize) -> u32 {
        self.exps[..count].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self::from_smallvec(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_smallvec(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| u16::try_from(e as u32 * k).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree * k,
        }
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Self::from_smallvec(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a0sq = Monomial::from_exponents(&[2, 0]);
        let a0a1 = Monomial::from_exponents(&[1, 1]);
        let a1sq = Monomial::from_exponents(&[0, 2]);
        let a0 = Monomial::from_exponents(&[1, 0]);
        assert!(a0sq > a0a1 && a0a1 > a1sq && a1sq > a0);
    }

    #[test]
    fn division_and_gcd() {
        let m = Monomial::from_exponents(&[2, 1, 0]);
        let n = Monomial::from_exponents(&[1, 3, 2]);
        assert_eq!(m.gcd(&n).exponents(), &[1, 1, 0]);
        assert_eq!(m.lcm(&n).exponents(), &[2, 3, 2]);
        assert!(m.quotient_of(&n).is_none());
        let q = m.gcd(&n).quotient_of(&m).unwrap();
        assert_eq!(q.exponents(), &[1, 0, 0]);
        assert_eq!(q.total_degree(), 1);
    }
}
