use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{known, SomosError, SomosSequence};
use crate::verdict::Status;

#[derive(Debug, Clone, Serialize)]
pub struct DivisibilityInstance {
    pub relation: &'static str,
    pub n: i64,
    pub k: i64,
    pub divisor: String,
    pub dividend: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct DivisibilityReport {
    pub instances: Vec<DivisibilityInstance>,
}

impl DivisibilityReport {
    pub fn count(&self, status: Status) -> usize {
        self.instances.iter().filter(|i| i.status == status).count()
    }

    pub fn first_failure(&self) -> Option<&DivisibilityInstance> {
        self.instances.iter().find(|i| i.status == Status::Refuted)
    }
}

fn integer(seq: &mut SomosSequence, n: i64) -> Result<BigInt, SomosError> {
    let v = seq.get(n)?;
    if !v.is_integer() {
        return Err(SomosError::Missing(n));
    }
    Ok(v.to_integer())
}

fn instance(relation: &'static str, n: i64, k: i64, d: BigInt, x: BigInt) -> DivisibilityInstance {
    let status = if d.is_zero() {
        Status::Skipped
    } else if x.is_multiple_of(&d) {
        Status::Verified
    } else {
        Status::Refuted
    };
    DivisibilityInstance { relation, n, k, divisor: d.to_string(), dividend: x.to_string(), status }
}

/// Index ranges for the divisibility checks.
#[derive(Debug, Clone, Copy)]
pub struct DivisibilityRanges {
    pub eds_n: i64,
    pub eds_k: i64,
    pub n_lo: i64,
    pub n_hi: i64,
    pub k_max: i64,
}

impl Default for DivisibilityRanges {
    fn default() -> Self {
        DivisibilityRanges { eds_n: 8, eds_k: 4, n_lo: 2, n_hi: 6, k_max: 3 }
    }
}

/// `A006769(n) | A006769(nk)`, `A006720(n) | A006720(n + (2n-3)k)` and
/// `A006720(n) | A051138((2n-3)k)`; zero divisors are skipped.
pub fn check_divisibility_relations(r: DivisibilityRanges) -> Result<DivisibilityReport, SomosError> {
    let mut eds = known::a006769();
    let mut classical = known::a006720();
    let mut rep = DivisibilityReport::default();
    for n in 1..=r.eds_n {
        for k in 1..=r.eds_k {
            let d = integer(&mut eds, n)?;
            let x = integer(&mut eds, n * k)?;
            rep.instances.push(instance("A006769(n) | A006769(nk)", n, k, d, x));
        }
    }
    for n in r.n_lo..=r.n_hi {
        for k in 1..=r.k_max {
            let step = (2 * n - 3) * k;
            let d = integer(&mut classical, n)?;
            let x = integer(&mut classical, n + step)?;
            rep.instances.push(instance("A006720(n) | A006720(n+(2n-3)k)", n, k, d.clone(), x));
            let y = integer(&mut eds, 2 * step)?;
            rep.instances.push(instance("A006720(n) | A051138((2n-3)k)", n, k, d, y));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ranges_hold() {
        let rep = check_divisibility_relations(DivisibilityRanges::default()).unwrap();
        assert_eq!(rep.instances.len(), 32 + 30);
        assert_eq!(rep.count(Status::Refuted), 0, "{:?}", rep.first_failure());
    }

    #[test]
    fn zero_divisor_is_skipped() {
        let i = instance("x", 0, 1, BigInt::zero(), BigInt::zero());
        assert_eq!(i.status, Status::Skipped);
    }
}
