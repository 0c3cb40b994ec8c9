//! OEIS b-file reader: one `n a(n)` pair per line, `#` starts a comment.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: index {index} does not increase")]
    NotIncreasing { line: usize, index: i64 },
    #[error("no entries")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: Option<String>,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut id = None;
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let (data, comment) = match raw.find('#') {
                Some(i) => (&raw[..i], Some(&raw[i + 1..])),
                None => (raw, None),
            };
            if id.is_none() {
                if let Some(word) = comment.and_then(|c| c.split_whitespace().next()) {
                    if word.starts_with('A') && word.len() == 7 && word[1..].chars().all(|c| c.is_ascii_digit()) {
                        id = Some(word.to_string());
                    }
                }
            }
            let mut fields = data.split_whitespace();
            let Some(first) = fields.next() else { continue };
            let index: i64 = first
                .parse()
                .map_err(|_| BFileError::Parse { line, msg: format!("bad index {first:?}") })?;
            let value = fields
                .next()
                .ok_or_else(|| BFileError::Parse { line, msg: "missing value".into() })?;
            let value: BigInt = value
                .parse()
                .map_err(|_| BFileError::Parse { line, msg: format!("bad value {value:?}") })?;
            if let Some(extra) = fields.next() {
                return Err(BFileError::Parse { line, msg: format!("unexpected field {extra:?}") });
            }
            if entries.last().is_some_and(|(last, _)| *last >= index) {
                return Err(BFileError::NotIncreasing { line, index });
            }
            entries.push((index, value));
        }
        if entries.is_empty() {
            return Err(BFileError::Empty);
        }
        Ok(BFile { id, entries })
    }

    /// First index.
    pub fn offset(&self) -> i64 {
        self.entries[0].0
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_map(&self) -> BTreeMap<i64, BigInt> {
        self.entries.iter().cloned().collect()
    }
}

impl FromStr for BFile {
    type Err = BFileError;

    fn from_str(s: &str) -> Result<Self, BFileError> {
        BFile::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks() {
        let b = BFile::parse("# A006720 classical\n\n0 1\n1 1   # trailing\n2 -3\n").unwrap();
        assert_eq!(b.id.as_deref(), Some("A006720"));
        assert_eq!(b.len(), 3);
        assert_eq!(b.entries[2], (2, BigInt::from(-3)));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            BFile::parse("0 1\n1 x\n").unwrap_err(),
            BFileError::Parse { line: 2, msg: "bad value \"x\"".into() }
        );
        assert_eq!(BFile::parse("0 1\n0 2\n").unwrap_err(), BFileError::NotIncreasing { line: 2, index: 0 });
        assert_eq!(BFile::parse("# only\n").unwrap_err(), BFileError::Empty);
        assert!(matches!(BFile::parse("3\n"), Err(BFileError::Parse { line: 1, .. })));
    }

    #[test]
    fn big_values_are_lossless() {
        let v = "123456789012345678901234567890";
        let b = BFile::parse(&format!("5 {v}\n")).unwrap();
        assert_eq!(b.entries[0].1.to_string(), v);
    }
}
