//! Seeds for the named integer sequences.

use super::SomosSequence;

/// Elliptic divisibility sequence A006769, seeded with `1,1,-1,1` at indices 1..4.
pub fn a006769() -> SomosSequence {
    SomosSequence::from_ints(4, 1, &[1, 1, -1, 1]).expect("valid seed")
}

/// Classical Somos-4 A006720, seeded with `1,1,1,1` at indices 0..3.
pub fn a006720() -> SomosSequence {
    SomosSequence::from_ints(4, 0, &[1, 1, 1, 1]).expect("valid seed")
}

/// A051138 as the even part of A006769: `a(m) = A006769(2m)`.
pub fn a051138_from_a006769(len: usize) -> SomosSequence {
    let mut s = a006769();
    let terms = (0..len as i64).map(|m| s.get(2 * m).expect("forward extension")).collect();
    SomosSequence::from_terms(s.rule(), 0, terms).expect("even part is Somos-4")
}
