use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::{BirationalMap, MapError};
use crate::algebra::{Rational, Ring};

/// One generator in a word, e.g. `F`, `M(c)` or `H(alpha=2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    pub parameter: Option<String>,
    pub value: Option<Rational>,
}

impl Letter {
    pub fn plain(name: &str) -> Self {
        Letter {
            name: name.to_string(),
            parameter: None,
            value: None,
        }
    }

    pub fn bound(name: &str, parameter: &str, value: Rational) -> Self {
        Letter {
            name: name.to_string(),
            parameter: Some(parameter.to_string()),
            value: Some(value),
        }
    }

    /// Lookup key in a generator set: `F`, `M(c)`, `H(alpha)`.
    pub fn key(&self) -> String {
        match &self.parameter {
            Some(p) => format!("{}({})", self.name, p),
            None => self.name.clone(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.parameter, &self.value) {
            (Some(p), Some(v)) => write!(f, "{}({}={})", self.name, p, v),
            (Some(p), None) => write!(f, "{}({})", self.name, p),
            _ => write!(f, "{}", self.name),
        }
    }
}

/// Dot-separated product of generators; `A.B` means `A ∘ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapWord(pub Vec<Letter>);

impl MapWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn bad(pos: usize, msg: &str) -> MapError {
    MapError::BadWord {
        pos,
        msg: msg.to_string(),
    }
}

fn parse_value(text: &str, pos: usize) -> Result<Rational, MapError> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| bad(pos, "expected an integer or fraction"))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad(pos, "zero denominator"));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

impl FromStr for MapWord {
    type Err = MapError;

    fn from_str(s: &str) -> Result<Self, MapError> {
        let s = s.trim();
        if s.is_empty() || s == "id" {
            return Ok(MapWord(Vec::new()));
        }
        let mut letters = Vec::new();
        let mut offset = 0;
        for part in s.split('.') {
            let pos = offset;
            offset += part.len() + 1;
            let part = part.trim();
            if part.is_empty() {
                return Err(bad(pos, "empty letter"));
            }
            let (name, arg) = match part.find('(') {
                Some(i) => {
                    if !part.ends_with(')') {
                        return Err(bad(pos + i, "unclosed parenthesis"));
                    }
                    (&part[..i], Some(&part[i + 1..part.len() - 1]))
                }
                None => (part, None),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(bad(pos, "bad generator name"));
            }
            let letter = match arg {
                None => Letter::plain(name),
                Some(arg) => {
                    let (p, v) = match arg.split_once('=') {
                        Some((p, v)) => (p.trim(), Some(parse_value(v, pos)?)),
                        None => (arg.trim(), None),
                    };
                    if p.is_empty() || !p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(bad(pos, "bad parameter name"));
                    }
                    Letter {
                        name: name.to_string(),
                        parameter: Some(p.to_string()),
                        value: v,
                    }
                }
            };
            letters.push(letter);
        }
        Ok(MapWord(letters))
    }
}

/// Named generators available to words.
pub trait GeneratorSet {
    fn ring(&self) -> &Ring;
    fn generator(&self, key: &str) -> Option<&BirationalMap>;
}

impl GeneratorSet for (Ring, HashMap<String, BirationalMap>) {
    fn ring(&self) -> &Ring {
        &self.0
    }

    fn generator(&self, key: &str) -> Option<&BirationalMap> {
        self.1.get(key)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingMode {
    /// Unbound parameters stay symbolic.
    Symbolic,
    /// Every parameterized letter must carry a value.
    Numeric,
}

/// Composes the letters left to right as `w1 ∘ w2 ∘ ... ∘ wk`.
pub fn word_to_map<G: GeneratorSet + ?Sized>(
    gens: &G,
    word: &MapWord,
    mode: BindingMode,
) -> Result<BirationalMap, MapError> {
    let mut acc = BirationalMap::identity(gens.ring());
    for letter in word.letters().iter().rev() {
        let g = gens
            .generator(&letter.key())
            .ok_or_else(|| MapError::UnknownLetter(letter.to_string()))?;
        let g = match (&letter.parameter, &letter.value) {
            (Some(p), Some(v)) => {
                if p == "c" && v.is_zero() {
                    return Err(MapError::BadBinding {
                        name: p.clone(),
                        msg: "scaling by zero".into(),
                    });
                }
                g.bind(p, v)?
            }
            (Some(p), None) if mode == BindingMode::Numeric => {
                return Err(MapError::UnboundParameter(p.clone()))
            }
            _ => g.clone(),
        };
        acc = g.compose(&acc)?;
    }
    Ok(acc)
}
