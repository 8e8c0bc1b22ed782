//! Permutations of the integers with finite support, stored as a window of
//! one-line values plus the identity outside. Windows are normalized by
//! trimming fixed endpoints, so equal permutations compare equal regardless
//! of the window they were built from.

use std::fmt;

use crate::error::{Error, Result};
use crate::nvector::NVector;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// First index of the window; meaningless when `window` is empty.
    start: i32,
    /// One-line values on `start..start+window.len()`.
    window: Vec<i32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// One-line values on a window beginning at `start`. The values must be
    /// a rearrangement of the window indices.
    pub fn from_window(start: i32, window: Vec<i32>) -> Result<Self> {
        let mut sorted = window.clone();
        sorted.sort_unstable();
        let expected: Vec<i32> = (start..start + window.len() as i32).collect();
        if sorted != expected {
            return Err(Error::InvalidPermutation(format!(
                "values must rearrange the window starting at {}",
                start
            )));
        }
        let mut p = Permutation { start, window };
        p.normalize();
        Ok(p)
    }

    /// One-line notation starting at index 1.
    pub fn from_one_line(values: &[i32]) -> Result<Self> {
        Permutation::from_window(1, values.to_vec())
    }

    fn normalize(&mut self) {
        while let Some(&last) = self.window.last() {
            if last == self.start + self.window.len() as i32 - 1 {
                self.window.pop();
            } else {
                break;
            }
        }
        let mut trim = 0;
        for (k, &v) in self.window.iter().enumerate() {
            if v == self.start + k as i32 {
                trim += 1;
            } else {
                break;
            }
        }
        if trim > 0 {
            self.window.drain(..trim);
            self.start += trim as i32;
        }
        if self.window.is_empty() {
            self.start = 0;
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    pub fn apply(&self, i: i32) -> i32 {
        if self.window.is_empty() {
            return i;
        }
        let off = i - self.start;
        if off < 0 || off as usize >= self.window.len() {
            i
        } else {
            self.window[off as usize]
        }
    }

    /// Indices moved by the permutation.
    pub fn support(&self) -> Vec<i32> {
        (self.start..self.start + self.window.len() as i32)
            .filter(|&i| self.apply(i) != i)
            .collect()
    }

    pub fn positively_supported(&self) -> bool {
        self.window.is_empty() || self.start >= 1
    }

    /// Window rendered over `1..=max(support)`; requires positive support.
    pub fn one_line(&self) -> Vec<i32> {
        if self.window.is_empty() {
            return vec![1];
        }
        assert!(self.start >= 1, "one_line requires positive support");
        let hi = self.start + self.window.len() as i32 - 1;
        (1..=hi).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.window.len()];
        for (k, &v) in self.window.iter().enumerate() {
            window[(v - self.start) as usize] = self.start + k as i32;
        }
        let mut p = Permutation { start: self.start, window };
        p.normalize();
        p
    }

    /// Function composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        if self.window.is_empty() {
            return other.clone();
        }
        if other.window.is_empty() {
            return self.clone();
        }
        let lo = self.start.min(other.start);
        let hi = (self.start + self.window.len() as i32)
            .max(other.start + other.window.len() as i32);
        let window: Vec<i32> = (lo..hi).map(|i| self.apply(other.apply(i))).collect();
        let mut p = Permutation { start: lo, window };
        p.normalize();
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut len = 0;
        for a in 0..self.window.len() {
            for b in a + 1..self.window.len() {
                if self.window[a] > self.window[b] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Indices `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<i32> {
        if self.window.is_empty() {
            return Vec::new();
        }
        let lo = self.start - 1;
        let hi = self.start + self.window.len() as i32 - 1;
        (lo..=hi).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// `c_i = #{j > i : w(i) > w(j)}`.
    pub fn lehmer_code(&self) -> NVector {
        let mut entries = Vec::new();
        for i in self.start..self.start + self.window.len() as i32 {
            let wi = self.apply(i);
            let mut c = 0;
            for j in i + 1..self.start + self.window.len() as i32 {
                if self.apply(j) < wi {
                    c += 1;
                }
            }
            // indices past the window are fixed and exceed all window values
            if c > 0 {
                entries.push((i, c));
            }
        }
        NVector::from_entries(entries)
    }

    /// Inverse of `lehmer_code`: the unique permutation with the given code.
    pub fn from_lehmer(code: &NVector) -> Permutation {
        if code.is_zero() {
            return Permutation::identity();
        }
        let lo = code.min_support().unwrap();
        let hi = code
            .iter()
            .map(|(i, c)| i + c as i32)
            .max()
            .unwrap()
            .max(code.max_support().unwrap());
        let mut pool: Vec<i32> = (lo..=hi).collect();
        let mut window = Vec::new();
        for i in lo..=hi {
            let k = code.get(i) as usize;
            window.push(pool.remove(k));
        }
        let mut p = Permutation { start: lo, window };
        p.normalize();
        p
    }

    /// Right multiplication by the adjacent transposition `s_i`.
    pub fn times_s(&self, i: i32) -> Permutation {
        let lo = self.start.min(i);
        let hi = (self.start + self.window.len() as i32 - 1).max(i + 1);
        let mut window: Vec<i32> = (lo..=hi).map(|k| self.apply(k)).collect();
        window.swap((i - lo) as usize, (i + 1 - lo) as usize);
        let mut p = Permutation { start: lo, window };
        p.normalize();
        p
    }

    /// The product `s_{i_1} ... s_{i_k}` applied as function composition.
    pub fn from_word(word: &[i32]) -> Permutation {
        let mut p = Permutation::identity();
        for &i in word {
            p = p.times_s(i);
        }
        p
    }

    /// All reduced words, sorted lexicographically. Computed by removing a
    /// descent at each step, so every word has length `self.length()`.
    pub fn reduced_words(&self) -> Vec<Vec<i32>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.descents() {
            let shorter = self.times_s(i);
            for mut u in shorter.reduced_words() {
                u.push(i);
                out.push(u);
            }
        }
        out.sort();
        out
    }

    /// `i + j -> w(i) + j` on the window, fixed elsewhere.
    pub fn shifted(&self, j: i32) -> Permutation {
        let window = self.window.iter().map(|&v| v + j).collect();
        Permutation { start: self.start + j, window }
    }

    /// Largest one-line value (for positively supported permutations).
    pub fn max_moved(&self) -> i32 {
        if self.window.is_empty() {
            0
        } else {
            self.start + self.window.len() as i32 - 1
        }
    }

    /// Parses `21543` (digit shorthand, values <= 9) or `2,1,5,4,3`;
    /// one-line notation starting at index 1.
    pub fn parse(text: &str) -> Result<Permutation> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse { position: 0, expected: "one-line permutation".into() });
        }
        let values: Vec<i32> = if t.contains(',') || t.contains(' ') {
            t.split(|c| c == ',' || c == ' ')
                .filter(|s| !s.is_empty())
                .enumerate()
                .map(|(k, s)| {
                    s.parse::<i32>().map_err(|_| Error::Parse {
                        position: k,
                        expected: "one-line value".into(),
                    })
                })
                .collect::<Result<_>>()?
        } else if t.chars().all(|c| c.is_ascii_digit()) {
            t.bytes().map(|b| (b - b'0') as i32).collect()
        } else {
            return Err(Error::Parse {
                position: 0,
                expected: "digits or comma-separated values".into(),
            });
        };
        Permutation::from_one_line(&values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = self.one_line();
        if line.iter().all(|&v| (1..=9).contains(&v)) {
            for v in line {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            let body: Vec<String> = line.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", body.join(","))
        }
    }
}

/// The longest element of the symmetric group on `[n]`.
pub fn longest_element(n: usize) -> Permutation {
    Permutation::from_one_line(&(1..=n as i32).rev().collect::<Vec<_>>()).unwrap()
}

/// All permutations of `[n]` (as one-line windows at 1).
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut values: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::new();
    permute(&mut values, 0, &mut out);
    out.sort();
    out
}

fn permute(values: &mut Vec<i32>, k: usize, out: &mut Vec<Permutation>) {
    if k == values.len() {
        out.push(Permutation::from_one_line(values).unwrap());
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permute(values, k + 1, out);
        values.swap(k, i);
    }
}

/// Permutations of `[n]` of length `n-1` (the index set of the headline
/// coefficients), sorted by one-line notation.
pub fn coefficient_index_set(n: usize) -> Vec<Permutation> {
    symmetric_group(n)
        .into_iter()
        .filter(|w| w.length() == n - 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn window_normalization() {
        assert_eq!(p("21543"), p("215436"));
        assert_eq!(p("1"), Permutation::identity());
        assert!(Permutation::from_one_line(&[2, 2, 1]).is_err());
    }

    #[test]
    fn lehmer_codes() {
        assert!(Permutation::identity().lehmer_code().is_zero());
        assert_eq!(p("14253").lehmer_code(), NVector::from_slice(&[0, 2, 0, 1]));
        assert_eq!(p("21543").lehmer_code(), NVector::from_slice(&[1, 0, 2, 1]));
    }

    #[test]
    fn lehmer_round_trip() {
        // every code supported in [6] with small entries, and all of S_5
        for w in symmetric_group(5) {
            assert_eq!(Permutation::from_lehmer(&w.lehmer_code()), w);
        }
        for c in crate::nvector::artin_set(6) {
            let c = NVector::from_slice(&c);
            assert_eq!(Permutation::from_lehmer(&c).lehmer_code(), c);
        }
    }

    #[test]
    fn reduced_word_listing() {
        let words = p("21543").reduced_words();
        let expected: Vec<Vec<i32>> = vec![
            vec![1, 3, 4, 3],
            vec![1, 4, 3, 4],
            vec![3, 1, 4, 3],
            vec![3, 4, 1, 3],
            vec![3, 4, 3, 1],
            vec![4, 1, 3, 4],
            vec![4, 3, 1, 4],
            vec![4, 3, 4, 1],
        ];
        assert_eq!(words, expected);
        assert_eq!(Permutation::identity().reduced_words(), vec![Vec::<i32>::new()]);
        // inverse of 14253
        assert_eq!(p("14253").inverse(), p("13524"));
        let words = p("13524").reduced_words();
        assert_eq!(words, vec![vec![2, 4, 3], vec![4, 2, 3]]);
    }

    #[test]
    fn reduced_words_recompose() {
        for w in symmetric_group(4) {
            let words = w.reduced_words();
            for word in &words {
                assert_eq!(Permutation::from_word(word), w);
                assert_eq!(word.len(), w.length());
            }
            assert_eq!(words.len(), w.inverse().reduced_words().len());
        }
    }

    #[test]
    fn shifting() {
        let w = p("21543");
        assert_eq!(w.shifted(0), w);
        assert_eq!(w.shifted(1), p("132654"));
        let shifted_words = w.shifted(1).reduced_words();
        let expected: Vec<Vec<i32>> = w
            .reduced_words()
            .into_iter()
            .map(|word| word.into_iter().map(|i| i + 1).collect())
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(shifted_words, expected);
    }

    #[test]
    fn group_enumeration() {
        assert_eq!(symmetric_group(4).len(), 24);
        assert_eq!(coefficient_index_set(2).len(), 1);
        assert_eq!(coefficient_index_set(3).len(), 2);
        assert_eq!(coefficient_index_set(4).len(), 6);
        assert_eq!(coefficient_index_set(5).len(), 20);
    }
}
