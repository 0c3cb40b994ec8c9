use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// Role of a variable in a polynomial ring.
///
/// Projective variables carry degree; parameters behave like coefficients
/// for homogeneity and map-degree accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    Projective,
    Parameter,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Variables {
    names: Vec<String>,
    kinds: Vec<VarKind>,
    projective: usize,
}

/// An ordered variable list shared by every polynomial built over it.
///
/// Projective variables always come first, followed by parameters.
#[derive(Clone)]
pub struct Ring(Arc<Variables>);

impl Ring {
    /// Ring with projective variables `a0..a{n-1}` and the given parameters.
    pub fn new(projective: usize, params: &[&str]) -> Self {
        let names: Vec<String> = (0..projective).map(|i| format!("a{i}")).collect();
        let named: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::with_names(&named, params).expect("generated names are distinct")
    }

    pub fn with_names(projective: &[&str], params: &[&str]) -> Result<Self, AlgebraError> {
        let mut names = Vec::with_capacity(projective.len() + params.len());
        let mut kinds = Vec::with_capacity(names.capacity());
        for (list, kind) in [(projective, VarKind::Projective), (params, VarKind::Parameter)] {
            for name in list {
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(AlgebraError::BadVariable(name.to_string()));
                }
                if names.iter().any(|n| n == name) {
                    return Err(AlgebraError::BadVariable(name.to_string()));
                }
                names.push(name.to_string());
                kinds.push(kind);
            }
        }
        Ok(Ring(Arc::new(Variables {
            names,
            kinds,
            projective: projective.len(),
        })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    /// Number of projective variables.
    pub fn projective_len(&self) -> usize {
        self.0.projective
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.0.kinds[i]
    }

    pub fn is_projective(&self, i: usize) -> bool {
        i < self.0.projective
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn parameters(&self) -> impl Iterator<Item = (usize, &str)> {
        (self.0.projective..self.len()).map(move |i| (i, self.name(i)))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[")?;
        for (i, name) in self.0.names.iter().enumerate() {
            if i == self.0.projective {
                write!(f, "; ")?;
            } else if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "]")
    }
}
