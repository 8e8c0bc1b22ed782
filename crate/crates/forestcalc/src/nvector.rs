//! Finitely supported sequences of nonnegative integers indexed by the
//! integers. These serve simultaneously as Lehmer codes, forest shape
//! descriptors and monomial exponents.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finitely supported map `i -> c_i` from the integers to the nonnegative
/// integers. Only strictly positive entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NVector {
    entries: BTreeMap<i32, u32>,
}

impl NVector {
    pub fn zero() -> Self {
        NVector::default()
    }

    /// Builds from entries starting at index 1.
    pub fn from_slice(values: &[u32]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, &v) in values.iter().enumerate() {
            if v > 0 {
                entries.insert(i as i32 + 1, v);
            }
        }
        NVector { entries }
    }

    pub fn from_entries<I: IntoIterator<Item = (i32, u32)>>(iter: I) -> Self {
        let mut entries = BTreeMap::new();
        for (i, v) in iter {
            if v > 0 {
                entries.insert(i, v);
            }
        }
        NVector { entries }
    }

    pub fn get(&self, i: i32) -> u32 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: i32, v: u32) {
        if v == 0 {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.entries.values().sum()
    }

    /// Indices with a strictly positive entry, in increasing order.
    pub fn support(&self) -> Vec<i32> {
        self.entries.keys().copied().collect()
    }

    pub fn min_support(&self) -> Option<i32> {
        self.entries.keys().next().copied()
    }

    pub fn max_support(&self) -> Option<i32> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u32)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    /// True when every supported index is >= 1.
    pub fn positively_supported(&self) -> bool {
        self.min_support().map_or(true, |m| m >= 1)
    }

    /// Omits the zeros, keeping the order of the positive entries.
    pub fn flatten(&self) -> Composition {
        Composition::new(self.entries.values().copied().collect())
    }

    /// Entrywise sum.
    pub fn plus(&self, other: &NVector) -> NVector {
        let mut out = self.clone();
        for (i, v) in other.iter() {
            out.set(i, out.get(i) + v);
        }
        out
    }

    /// Shifts every index by `j`.
    pub fn shifted(&self, j: i32) -> NVector {
        NVector::from_entries(self.iter().map(|(i, v)| (i + j, v)))
    }

    /// Dense rendering over `1..=len` where `len` covers the support.
    /// Requires positive support.
    pub fn to_dense(&self) -> Vec<u32> {
        let hi = self.max_support().unwrap_or(0).max(0);
        (1..=hi).map(|i| self.get(i)).collect()
    }

    /// Parses `[0,2,0,1]` or `0,2,0,1` (entries from index 1, trailing
    /// zeros optional).
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(inner);
        if inner.trim().is_empty() {
            return Ok(NVector::zero());
        }
        let mut values = Vec::new();
        for (k, piece) in inner.split(',').enumerate() {
            let v: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                position: k,
                expected: "nonnegative integer entry".into(),
            })?;
            values.push(v);
        }
        Ok(NVector::from_slice(&values))
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = self.min_support() {
            if m < 1 {
                // General supports only occur internally; render as a map.
                let body: Vec<String> =
                    self.iter().map(|(i, v)| format!("{}:{}", i, v)).collect();
                return write!(f, "{{{}}}", body.join(","));
            }
        }
        let dense: Vec<String> = self.to_dense().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", dense.join(","))
    }
}

/// A strong composition: an ordered sequence of strictly positive parts.
/// The empty composition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be >= 1");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All weak compositions `(c_1..c_n)` whose reversed partial sums obey the
/// ballot bound: `c_n + ... + c_{n+1-j} <= j-1` for every `j`.
pub fn abb_set(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    // Fill from the right so the bound is a running prefix condition.
    fn rec(n: usize, pos: usize, suffix_sum: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == 0 {
            out.push(current.clone());
            return;
        }
        let j = (n - pos + 1) as u32; // entries filled after this one: n - pos
        let bound = j - 1; // suffix including this entry must stay <= j-1
        let max_here = bound.saturating_sub(suffix_sum);
        for v in 0..=max_here {
            current[pos - 1] = v;
            rec(n, pos - 1, suffix_sum + v, current, out);
        }
        current[pos - 1] = 0;
    }
    rec(n, n, 0, &mut current, &mut out);
    out.sort();
    out
}

/// The maximal-weight (= n-1) members of `abb_set(n)`.
pub fn abb_top_set(n: usize) -> Vec<Vec<u32>> {
    abb_set(n)
        .into_iter()
        .filter(|c| c.iter().sum::<u32>() == n as u32 - 1)
        .collect()
}

/// All weak compositions `(c_1..c_n)` with `c_i <= n-i`; these are the
/// codes of permutations supported in `[n]`.
pub fn artin_set(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        let mut next = Vec::new();
        for prefix in &out {
            for v in 0..=(n - i) as u32 {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Membership test against the ballot bound of `abb_set`.
pub fn is_abb(c: &NVector, n: usize) -> bool {
    if c.max_support().unwrap_or(0) > n as i32 || !c.positively_supported() {
        return false;
    }
    let mut suffix = 0u32;
    for j in 1..=n {
        suffix += c.get((n + 1 - j) as i32);
        if suffix > j as u32 - 1 {
            return false;
        }
    }
    true
}

pub fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for i in 1..=n {
        for j in 0..i {
            c[i] += c[j] * c[i - 1 - j];
        }
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_weight_support() {
        let c = NVector::from_slice(&[0, 3, 2, 0, 3]);
        assert_eq!(c.flatten(), Composition::new(vec![3, 2, 3]));
        assert_eq!(c.weight(), 8);
        assert_eq!(c.support(), vec![2, 3, 5]);

        let z = NVector::zero();
        assert_eq!(z.flatten(), Composition::new(vec![]));
        assert_eq!(z.weight(), 0);
        assert!(z.support().is_empty());

        // shape vector of the six-node example forest
        let c = NVector::from_slice(&[0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0]);
        assert_eq!(c.support(), vec![2, 4, 7, 11]);
    }

    #[test]
    fn abb_listings() {
        assert_eq!(abb_set(2), vec![vec![0, 0], vec![1, 0]]);
        let mut expected = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 0],
        ];
        expected.sort();
        assert_eq!(abb_set(3), expected);
        assert_eq!(abb_set(4).len(), 14);
    }

    #[test]
    fn abb_cardinalities() {
        for n in 1..=6 {
            assert_eq!(abb_set(n).len() as u64, catalan(n), "|ABB_{}|", n);
            assert_eq!(abb_top_set(n).len() as u64, catalan(n - 1), "|ABBtop_{}|", n);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(artin_set(n).len() as u64, fact, "|Artin_{}|", n);
        }
    }

    #[test]
    fn parse_and_display() {
        let c = NVector::parse("[0,2,0,1]").unwrap();
        assert_eq!(c, NVector::from_slice(&[0, 2, 0, 1]));
        assert_eq!(c.to_string(), "[0,2,0,1]");
        assert_eq!(NVector::parse("0,2,0,1").unwrap(), c);
        assert_eq!(NVector::parse("[]").unwrap(), NVector::zero());
        assert!(NVector::parse("[0,x]").is_err());
    }
}
