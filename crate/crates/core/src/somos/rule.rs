use super::SomosError;

/// `a_n a_{n+k} = sum_{i=1}^{k/2} a_{n+i} a_{n+k-i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SomosRule {
    k: usize,
}

impl SomosRule {
    pub fn new(k: usize) -> Result<Self, SomosError> {
        if (2..=7).contains(&k) {
            Ok(SomosRule { k })
        } else {
            Err(SomosError::Order(k))
        }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// Offset pairs `(i, k - i)` of the right-hand side.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.k / 2).map(move |i| (i, self.k - i))
    }

    /// Right-hand side over a window `w[0..=k]` (only the inner terms are read).
    pub fn rhs<T>(&self, w: &[T]) -> T
    where
        T: Clone + std::ops::Add<Output = T>,
        for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    {
        let mut it = self.pairs().map(|(i, j)| &w[i] * &w[j]);
        let first = it.next().expect("k >= 2");
        it.fold(first, |acc, t| acc + t)
    }
}
