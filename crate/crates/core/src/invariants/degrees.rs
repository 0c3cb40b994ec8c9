use serde::Serialize;

use super::{InvariantError, Representation};
use crate::projmap::BirationalMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    /// `F^n`
    F,
    /// `R F^n`
    RF,
    /// `J(alpha)^n`, k = 3 only
    J,
}

impl std::str::FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "F" | "f" => Ok(Pattern::F),
            "RF" | "rf" => Ok(Pattern::RF),
            "J" | "j" => Ok(Pattern::J),
            _ => Err(format!("unknown pattern {s}; expected F, RF or J")),
        }
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pattern::F => "F",
            Pattern::RF => "RF",
            Pattern::J => "J",
        })
    }
}

/// Degree list printed for each order and pattern, indexed from n = 0.
pub fn paper_degree_list(k: usize, pattern: Pattern) -> Option<Vec<u32>> {
    match (k, pattern) {
        (3, Pattern::J) => Some(vec![1, 2, 4, 6, 8]),
        (_, Pattern::J) => None,
        (3, _) => Some(vec![1, 2, 1, 2, 1, 2, 1, 2]),
        (4, _) => Some(vec![1, 2, 3, 5, 8, 10, 14, 18]),
        (5, _) => Some(vec![1, 2, 3, 4, 6, 9, 11]),
        _ => None,
    }
}

fn budget(k: usize) -> usize {
    if let Some(b) = std::env::var("SOMOS_DEGREE_BUDGET").ok().and_then(|v| v.parse().ok()) {
        return b;
    }
    match k {
        4 => 7,
        5 => 6,
        _ => 12,
    }
}

fn powers(rep: &Representation, pattern: Pattern, n_max: usize) -> Result<Vec<BirationalMap>, InvariantError> {
    if n_max > budget(rep.order()) {
        return Err(InvariantError::Budget { n: n_max, budget: budget(rep.order()) });
    }
    let base = match pattern {
        Pattern::J => rep.get("J(alpha)")?,
        _ => rep.get("F")?,
    };
    let mut acc = BirationalMap::identity(rep.ring());
    let mut out = vec![acc.clone()];
    for _ in 0..n_max {
        acc = base.compose(&acc)?;
        out.push(acc.clone());
    }
    if pattern == Pattern::RF {
        let r = rep.get("R")?;
        out = out.iter().map(|p| r.compose(p)).collect::<Result<_, _>>()?;
    }
    Ok(out)
}

/// Degrees of the normalized powers for n = 0..=n_max.
pub fn degree_sequence(rep: &Representation, pattern: Pattern, n_max: usize) -> Result<Vec<u32>, InvariantError> {
    Ok(powers(rep, pattern, n_max)?.iter().map(BirationalMap::degree).collect())
}

/// Computed degrees against the printed list under two readings: term by
/// term, and as the sorted set of degrees over `{P^n, R P^n, M(c)}`.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeComparison {
    pub k: usize,
    pub pattern: Pattern,
    pub computed: Vec<u32>,
    pub reflected: Vec<u32>,
    pub degree_set: Vec<u32>,
    pub expected: Option<Vec<u32>>,
    pub in_order: Option<bool>,
    pub as_set: Option<bool>,
}

impl DegreeComparison {
    pub fn compute(rep: &Representation, pattern: Pattern, n_max: usize) -> Result<Self, InvariantError> {
        let computed = degree_sequence(rep, pattern, n_max)?;
        let reflected = match pattern {
            Pattern::J => {
                let r = rep.get("R")?;
                powers(rep, pattern, n_max)?
                    .iter()
                    .map(|p| r.compose(p).map(|m| m.degree()))
                    .collect::<Result<_, _>>()?
            }
            Pattern::F => degree_sequence(rep, Pattern::RF, n_max)?,
            Pattern::RF => degree_sequence(rep, Pattern::F, n_max)?,
        };
        let mut degree_set: Vec<u32> = computed.iter().chain(&reflected).copied().chain([1]).collect();
        degree_set.sort_unstable();
        degree_set.dedup();
        let expected = paper_degree_list(rep.order(), pattern)
            .map(|e| e.into_iter().take(n_max + 1).collect::<Vec<_>>());
        let in_order = expected.as_ref().map(|e| computed.iter().zip(e).all(|(a, b)| a == b));
        let as_set = expected.as_ref().map(|e| &degree_set == e);
        Ok(DegreeComparison { k: rep.order(), pattern, computed, reflected, degree_set, expected, in_order, as_set })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::build_representation;

    #[test]
    fn somos3_is_periodic() {
        let rep = build_representation(3).unwrap();
        assert_eq!(degree_sequence(&rep, Pattern::F, 5).unwrap(), vec![1, 2, 1, 2, 1, 2]);
        let cmp = DegreeComparison::compute(&rep, Pattern::F, 4).unwrap();
        assert_eq!(cmp.in_order, Some(true));
        assert_eq!(cmp.as_set, Some(false));
    }

    #[test]
    fn budget_applies() {
        let rep = build_representation(4).unwrap();
        assert!(matches!(degree_sequence(&rep, Pattern::F, 9), Err(InvariantError::Budget { .. })));
    }
}
