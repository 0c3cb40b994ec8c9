use num_integer::{Integer, Roots};
use serde::Serialize;

use super::{SomosError, SomosSequence};

/// Largest accepted search height.
pub const SEARCH_HEIGHT_CAP: i64 = 200;

/// How far an extension stayed integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Extension {
    Integral { steps: usize },
    NonIntegral { index: i64 },
    Blocked { index: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerWindow {
    pub coords: [i64; 4],
    pub forward: Extension,
    pub backward: Extension,
}

fn extension(seq: &mut SomosSequence, steps: usize, forward: bool) -> Extension {
    for s in 1..=steps as i64 {
        let n = if forward { 3 + s } else { -s };
        match seq.get(n) {
            Ok(v) if v.is_integer() => {}
            Ok(_) => return Extension::NonIntegral { index: n },
            Err(_) => return Extension::Blocked { index: n },
        }
    }
    Extension::Integral { steps }
}

fn canonical(w: [i64; 4]) -> bool {
    w.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1 && w.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Every primitive integer point `(a0:a1:a2:a3)` with `max |ai| <= height` on
/// `S = 0`, one representative per sign class, ordered by height and then
/// lexicographically. Each is extended `len` steps both ways.
pub fn search_integer_windows(height: i64, len: usize) -> Result<Vec<IntegerWindow>, SomosError> {
    if !(0..=SEARCH_HEIGHT_CAP).contains(&height) {
        return Err(SomosError::HeightCap(height));
    }
    let h = height;
    let mut found: Vec<[i64; 4]> = Vec::new();
    for a1 in -h..=h {
        for a2 in -h..=h {
            for a3 in -h..=h {
                let (x1, x2, x3) = (a1 as i128, a2 as i128, a3 as i128);
                // S = A a0^2 + B a0 + C
                let qa = x3 * x3;
                let qb = x2 * x2 * x2 + 2 * x1 * x2 * x3;
                let qc = x1 * x1 * x2 * x2 + x3 * x1 * x1 * x1;
                let mut roots: Vec<i128> = Vec::new();
                if qa == 0 {
                    if qb == 0 {
                        if qc == 0 {
                            roots.extend((-h as i128)..=(h as i128));
                        }
                    } else if qc % qb == 0 {
                        roots.push(-qc / qb);
                    }
                } else {
                    let disc = qb * qb - 4 * qa * qc;
                    if disc >= 0 {
                        let r = disc.sqrt();
                        if r * r == disc {
                            for num in [-qb + r, -qb - r] {
                                if num % (2 * qa) == 0 {
                                    roots.push(num / (2 * qa));
                                }
                            }
                        }
                    }
                }
                roots.sort_unstable();
                roots.dedup();
                for a0 in roots {
                    if a0.abs() > h as i128 {
                        continue;
                    }
                    let w = [a0 as i64, a1, a2, a3];
                    if canonical(w) {
                        found.push(w);
                    }
                }
            }
        }
    }
    found.sort_by_key(|w| (w.iter().map(|x| x.abs()).max(), *w));
    Ok(found
        .into_iter()
        .map(|w| {
            let mut seq = SomosSequence::from_ints(4, 0, &w).expect("four terms");
            let forward = extension(&mut seq, len, true);
            let backward = extension(&mut seq, len, false);
            IntegerWindow { coords: w, forward, backward }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::somos::eval_s;

    #[test]
    fn height_one_and_zero() {
        assert!(search_integer_windows(0, 2).unwrap().is_empty());
        let w = search_integer_windows(1, 2).unwrap();
        assert!(w.iter().any(|x| x.coords == [1, 1, -1, 1]));
        assert!(w.iter().any(|x| x.coords == [0, 1, 1, -1]));
    }

    #[test]
    fn agrees_with_brute_force_at_height_three() {
        let h = 3;
        let mut brute = Vec::new();
        for a0 in -h..=h {
            for a1 in -h..=h {
                for a2 in -h..=h {
                    for a3 in -h..=h {
                        let w = [a0, a1, a2, a3];
                        let q: Vec<Rational> = w.iter().map(|&x| Rational::from_integer(x.into())).collect();
                        if canonical(w) && eval_s(&q) == Rational::from_integer(0.into()) {
                            brute.push(w);
                        }
                    }
                }
            }
        }
        let mut fast: Vec<[i64; 4]> = search_integer_windows(h, 0).unwrap().into_iter().map(|w| w.coords).collect();
        fast.sort();
        brute.sort();
        assert_eq!(fast, brute);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(search_integer_windows(SEARCH_HEIGHT_CAP + 1, 1).is_err());
    }
}
