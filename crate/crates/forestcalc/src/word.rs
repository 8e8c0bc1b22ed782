//! Words over the integers and over the barred alphabet of letters `v^c`
//! (an integer value with a positive copy index). The barred alphabet is
//! totally ordered by (value, copy); underlined points `_i` interleave as
//! `_i < i^1 < i^2 < ... < _(i+1)` and are used by rootlists.

use std::fmt;

use crate::error::{Error, Result};

/// A barred letter `val^copy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub val: i32,
    pub copy: u32,
}

impl Letter {
    pub fn new(val: i32, copy: u32) -> Self {
        assert!(copy >= 1, "copy index must be >= 1");
        Letter { val, copy }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.val, self.copy)
    }
}

/// A point of the extended alphabet: either an underlined integer `_i` or a
/// barred letter. Ordered by `_i < i^j < _(i+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Underlined(i32),
    Barred(Letter),
}

impl Point {
    fn key(&self) -> (i32, u32, u32) {
        match *self {
            Point::Underlined(i) => (i, 0, 0),
            Point::Barred(l) => (l.val, 1, l.copy),
        }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Underlined(i) => write!(f, "_{}", i),
            Point::Barred(l) => write!(f, "{}", l),
        }
    }
}

/// A word in the barred alphabet.
pub type Word = Vec<Letter>;

/// Replaces the t-th left-to-right occurrence of the value `i` by `i^t`.
/// The result is injective and keeps the value sequence.
pub fn to_barred(word: &[i32]) -> Word {
    let mut seen: std::collections::BTreeMap<i32, u32> = std::collections::BTreeMap::new();
    word.iter()
        .map(|&v| {
            let copy = seen.entry(v).or_insert(0);
            *copy += 1;
            Letter::new(v, *copy)
        })
        .collect()
}

pub fn values(word: &[Letter]) -> Vec<i32> {
    word.iter().map(|l| l.val).collect()
}

pub fn is_injective(word: &[Letter]) -> bool {
    let mut set = std::collections::BTreeSet::new();
    word.iter().all(|l| set.insert(*l))
}

pub fn display_word(word: &[Letter]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn display_plain(word: &[i32]) -> String {
    word.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a plain integer word: `1343` (digits-only shorthand) or
/// `1 3 4 3` / `1,3,4,3`.
pub fn parse_plain_word(text: &str) -> Result<Vec<i32>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    if !t.contains(' ') && !t.contains(',') {
        if t.chars().all(|c| c.is_ascii_digit()) {
            return Ok(t.bytes().map(|b| (b - b'0') as i32).collect());
        }
        return t
            .parse::<i32>()
            .map(|v| vec![v])
            .map_err(|_| Error::Parse { position: 0, expected: "digits or separated integers".into() });
    }
    t.split(|c| c == ' ' || c == ',')
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(k, s)| {
            s.parse::<i32>().map_err(|_| Error::Parse {
                position: k,
                expected: "integer letter".into(),
            })
        })
        .collect()
}

/// Parses a barred word `1^1 3^1 4^1 3^2`. A token without `^` is taken as
/// a plain value whose copy index is assigned left to right.
pub fn parse_word(text: &str) -> Result<Word> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    if !t.contains('^') {
        return Ok(to_barred(&parse_plain_word(t)?));
    }
    let mut out = Vec::new();
    for (k, token) in t
        .split(|c| c == ' ' || c == ',')
        .filter(|s| !s.is_empty())
        .enumerate()
    {
        let (v, c) = token.split_once('^').ok_or(Error::Parse {
            position: k,
            expected: "letter of the form v^c".into(),
        })?;
        let val = v.parse::<i32>().map_err(|_| Error::Parse {
            position: k,
            expected: "integer value before ^".into(),
        })?;
        let copy = c.parse::<u32>().map_err(|_| Error::Parse {
            position: k,
            expected: "positive copy index after ^".into(),
        })?;
        if copy == 0 {
            return Err(Error::Parse { position: k, expected: "copy index >= 1".into() });
        }
        out.push(Letter::new(val, copy));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barring() {
        let w = to_barred(&[1, 3, 4, 3]);
        assert_eq!(display_word(&w), "1^1 3^1 4^1 3^2");
        assert!(is_injective(&w));
        assert_eq!(values(&w), vec![1, 3, 4, 3]);

        assert!(to_barred(&[]).is_empty());
        assert_eq!(display_word(&to_barred(&[2, 2, 2, 2])), "2^1 2^2 2^3 2^4");
    }

    #[test]
    fn point_order() {
        let p = |i| Point::Underlined(i);
        let b = |v, c| Point::Barred(Letter::new(v, c));
        assert!(p(4) < b(4, 1));
        assert!(b(4, 1) < b(4, 2));
        assert!(b(4, 2) < p(5));
        assert!(b(3, 9) < p(4));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_plain_word("1343").unwrap(), vec![1, 3, 4, 3]);
        assert_eq!(parse_plain_word("1 3 4 3").unwrap(), vec![1, 3, 4, 3]);
        assert_eq!(parse_plain_word("10,11").unwrap(), vec![10, 11]);
        let w = parse_word("1^1 3^1 4^1 3^2").unwrap();
        assert_eq!(w, to_barred(&[1, 3, 4, 3]));
        let w = parse_word("1343").unwrap();
        assert_eq!(w, to_barred(&[1, 3, 4, 3]));
        assert!(parse_word("3^0").is_err());
    }
}
