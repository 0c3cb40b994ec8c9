use std::collections::BTreeMap;

use serde::Serialize;

use super::{InvariantError, Representation};
use crate::projmap::BirationalMap;
use crate::verdict::Verdict;

#[derive(Debug, Clone, Serialize)]
pub struct FaithfulnessReport {
    pub k: usize,
    pub max_len: usize,
    pub words_checked: usize,
    /// Words whose map is projectively the identity.
    pub identity_words: Vec<String>,
    /// Words where observation and the abstract quotient disagree.
    pub mismatches: Vec<String>,
}

impl FaithfulnessReport {
    pub fn verdict(&self) -> Verdict {
        let shown: Vec<&str> = self.identity_words.iter().take(4).map(String::as_str).collect();
        if self.mismatches.is_empty() {
            Verdict::verified(format!(
                "{} reduced words up to length {}; identity words: {}",
                self.words_checked,
                self.max_len,
                if shown.is_empty() { "none".to_string() } else { shown.join(", ") }
            ))
        } else {
            Verdict::refuted(format!("unexpected: {}", self.mismatches.join(", ")))
        }
    }
}

/// Abstract element `F^a R^e` of the dihedral group.
#[derive(Clone, Copy)]
struct Dihedral {
    a: i64,
    e: bool,
}

impl Dihedral {
    fn prepend(self, letter: char) -> Dihedral {
        match letter {
            'R' => Dihedral { a: -self.a, e: !self.e },
            'F' => Dihedral { a: self.a + 1, ..self },
            _ => Dihedral { a: self.a - 1, ..self },
        }
    }

    /// Trivial modulo the relations expected for order `k`.
    fn trivial(self, k: usize) -> bool {
        !self.e
            && match k {
                2 => true,
                3 => self.a % 2 == 0,
                _ => self.a == 0,
            }
    }
}

fn reduced_pair(first: char, second: char) -> bool {
    !matches!((first, second), ('R', 'R') | ('F', 'f') | ('f', 'F'))
}

/// Scans reduced words in `R`, `F` and `f = F^{-1} = R F R` up to `max_len`
/// and compares projective triviality with the expected quotient (`F` trivial
/// for k = 2, `F^2` for k = 3, nothing for k >= 4).
pub fn faithfulness_probe(rep: &Representation, max_len: usize) -> Result<FaithfulnessReport, InvariantError> {
    let k = rep.order();
    let r = rep.get("R")?.clone();
    let f = rep.get("F")?.clone();
    let finv = r.compose(&f)?.compose(&r)?;
    let letter_map = |c: char| match c {
        'R' => &r,
        'F' => &f,
        _ => &finv,
    };
    let mut frontier: BTreeMap<String, (BirationalMap, Dihedral)> = BTreeMap::new();
    frontier.insert(String::new(), (BirationalMap::identity(rep.ring()), Dihedral { a: 0, e: false }));
    let mut report = FaithfulnessReport { k, max_len, words_checked: 0, identity_words: vec![], mismatches: vec![] };
    for _ in 0..max_len {
        let mut next = BTreeMap::new();
        for (word, (map, g)) in &frontier {
            for c in ['R', 'F', 'f'] {
                if let Some(first) = word.chars().next() {
                    if !reduced_pair(c, first) {
                        continue;
                    }
                }
                let w = format!("{c}{word}");
                let m = letter_map(c).compose(map)?;
                let h = g.prepend(c);
                let observed = m.is_identity();
                report.words_checked += 1;
                if observed {
                    report.identity_words.push(w.clone());
                }
                if observed != h.trivial(k) {
                    report.mismatches.push(w.clone());
                }
                next.insert(w, (m, h));
            }
        }
        frontier = next;
    }
    Ok(report)
}
