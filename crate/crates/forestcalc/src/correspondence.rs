//! Insertion of injective barred words into labeled forests. Each letter
//! becomes the root of the tree whose support interval it touches: a value
//! outside the occupied set opens a new node at its own position, while a
//! value inside an occupied interval compares with that tree's root label
//! and extends the support one step to the right (larger) or left
//! (smaller), absorbing the neighboring tree when the gap closes. Keeping
//! only the occupied set yields the parking procedure; keeping the letter
//! and arrival order yields inverse-able P- and Q-symbols.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::forest::{self, IndexedForest, IndexedTree, Shape};
use crate::word::{display_word, is_injective, to_barred, Letter, Point, Word};

/// An LBS-labeled indexed forest: the insertion record of a word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PSymbol {
    pub forest: IndexedForest,
    pub labels: BTreeMap<i32, Letter>,
}

/// A decreasingly labeled indexed forest: the arrival-order record.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QSymbol {
    pub forest: IndexedForest,
    pub labels: BTreeMap<i32, u32>,
}

impl PSymbol {
    pub fn empty() -> Self {
        PSymbol { forest: IndexedForest::empty(), labels: BTreeMap::new() }
    }

    pub fn validate(&self) -> Result<()> {
        if !forest::is_lbs(&self.forest, &self.labels) {
            return Err(Error::NotLbs);
        }
        Ok(())
    }

    /// Inorder label sequence.
    pub fn letter_sequence(&self) -> Vec<Letter> {
        self.labels.values().copied().collect()
    }
}

impl fmt::Display for PSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.forest, display_word(&self.letter_sequence()))
    }
}

impl QSymbol {
    pub fn empty() -> Self {
        QSymbol { forest: IndexedForest::empty(), labels: BTreeMap::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.forest.size();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        for &t in self.labels.values() {
            if t < 1 || t > n as u32 || !seen.insert(t) {
                return Err(Error::Invalid("labels must be a bijection onto 1..=size".into()));
            }
        }
        if self.labels.len() != n {
            return Err(Error::Invalid("labels must cover every node".into()));
        }
        let info = self.forest.info();
        for node in info.values() {
            if let Some(p) = node.parent {
                if self.labels[&node.label] > self.labels[&p] {
                    return Err(Error::Invalid("labels must decrease away from roots".into()));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.labels.values().map(|t| t.to_string()).collect();
        write!(f, "{} {}", self.forest, seq.join(" "))
    }
}

/// Which branch of the insertion fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertCase {
    /// The value was unoccupied and claims its own position.
    Free,
    /// The value was occupied and the letter is below the root label;
    /// the support grows one step to the left.
    ParkLeft,
    /// As above with the letter above the root label; grows to the right.
    ParkRight,
}

impl fmt::Display for InsertCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertCase::Free => write!(f, "free"),
            InsertCase::ParkLeft => write!(f, "left"),
            InsertCase::ParkRight => write!(f, "right"),
        }
    }
}

#[derive(Clone, Debug)]
struct LabeledNode {
    letter: Letter,
    time: u32,
    left: Option<Box<LabeledNode>>,
    right: Option<Box<LabeledNode>>,
}

#[derive(Clone, Debug)]
struct LabeledTree {
    start: i32,
    root: LabeledNode,
}

impl LabeledNode {
    fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size())
            + self.right.as_ref().map_or(0, |t| t.size())
    }

    fn shape(&self) -> Shape {
        Shape {
            left: self.left.as_ref().map(|t| Box::new(t.shape())),
            right: self.right.as_ref().map(|t| Box::new(t.shape())),
        }
    }

    fn collect(&self, start: i32, p: &mut BTreeMap<i32, Letter>, q: &mut BTreeMap<i32, u32>) {
        let left_size = self.left.as_ref().map_or(0, |t| t.size()) as i32;
        let label = start + left_size;
        if let Some(l) = &self.left {
            l.collect(start, p, q);
        }
        p.insert(label, self.letter);
        q.insert(label, self.time);
        if let Some(r) = &self.right {
            r.collect(label + 1, p, q);
        }
    }
}

impl LabeledTree {
    fn end(&self) -> i32 {
        self.start + self.root.size() as i32 - 1
    }
}

/// The running state of an insertion: labeled trees on disjoint,
/// non-adjacent intervals, sorted left to right.
#[derive(Clone, Debug, Default)]
pub struct InsertionState {
    trees: Vec<LabeledTree>,
    letters: BTreeSet<Letter>,
    time: u32,
}

impl InsertionState {
    pub fn new() -> Self {
        InsertionState::default()
    }

    pub fn support(&self) -> BTreeSet<i32> {
        self.trees.iter().flat_map(|t| t.start..=t.end()).collect()
    }

    /// Inserts one letter, returning the branch taken and the new support
    /// position.
    pub fn insert(&mut self, letter: Letter) -> Result<(InsertCase, i32)> {
        if !self.letters.insert(letter) {
            return Err(Error::NotInjective(letter.to_string()));
        }
        self.time += 1;
        let time = self.time;
        let val = letter.val;
        let idx = self.trees.iter().position(|t| t.start <= val && val <= t.end());
        let (case, position) = match idx {
            None => {
                // the position is free; adjacent trees become subtrees
                let left = self
                    .trees
                    .iter()
                    .position(|t| t.end() == val - 1)
                    .map(|i| self.trees.remove(i));
                let right = self
                    .trees
                    .iter()
                    .position(|t| t.start == val + 1)
                    .map(|i| self.trees.remove(i));
                let start = left.as_ref().map_or(val, |t| t.start);
                let node = LabeledNode {
                    letter,
                    time,
                    left: left.map(|t| Box::new(t.root)),
                    right: right.map(|t| Box::new(t.root)),
                };
                self.push_tree(LabeledTree { start, root: node });
                (InsertCase::Free, val)
            }
            Some(j) => {
                let root_letter = self.trees[j].root.letter;
                if letter > root_letter {
                    // extend to the right of the occupied interval
                    let end = self.trees[j].end();
                    let tree = self.trees.remove(j);
                    let absorb = self
                        .trees
                        .iter()
                        .position(|t| t.start == end + 2)
                        .map(|i| self.trees.remove(i));
                    let node = LabeledNode {
                        letter,
                        time,
                        left: Some(Box::new(tree.root)),
                        right: absorb.map(|t| Box::new(t.root)),
                    };
                    self.push_tree(LabeledTree { start: tree.start, root: node });
                    (InsertCase::ParkRight, end + 1)
                } else {
                    // extend to the left
                    let start = self.trees[j].start;
                    let tree = self.trees.remove(j);
                    let absorb = self
                        .trees
                        .iter()
                        .position(|t| t.end() == start - 2)
                        .map(|i| self.trees.remove(i));
                    let new_start = absorb.as_ref().map_or(start - 1, |t| t.start);
                    let node = LabeledNode {
                        letter,
                        time,
                        left: absorb.map(|t| Box::new(t.root)),
                        right: Some(Box::new(tree.root)),
                    };
                    self.push_tree(LabeledTree { start: new_start, root: node });
                    (InsertCase::ParkLeft, start - 1)
                }
            }
        };
        Ok((case, position))
    }

    fn push_tree(&mut self, tree: LabeledTree) {
        let at = self.trees.partition_point(|t| t.start < tree.start);
        self.trees.insert(at, tree);
    }

    pub fn symbols(&self) -> (PSymbol, QSymbol) {
        let mut p = BTreeMap::new();
        let mut q = BTreeMap::new();
        let mut trees = Vec::new();
        for t in &self.trees {
            t.root.collect(t.start, &mut p, &mut q);
            trees.push(IndexedTree { start: t.start, shape: t.root.shape() });
        }
        let forest = IndexedForest::from_trees(trees).expect("intervals stay separated");
        (
            PSymbol { forest: forest.clone(), labels: p },
            QSymbol { forest, labels: q },
        )
    }

    /// Root labels of the current trees, left to right.
    pub fn root_letters(&self) -> Vec<Letter> {
        self.trees.iter().map(|t| t.root.letter).collect()
    }
}

/// Runs the insertion over a whole word.
pub fn correspondence(word: &[Letter]) -> Result<(PSymbol, QSymbol)> {
    let mut state = InsertionState::new();
    for &letter in word {
        state.insert(letter)?;
    }
    Ok(state.symbols())
}

/// One line per letter: the letter, the branch taken, the support so far.
pub struct TraceLine {
    pub letter: Letter,
    pub case: InsertCase,
    pub support: BTreeSet<i32>,
}

pub fn insertion_trace(word: &[Letter]) -> Result<Vec<TraceLine>> {
    let mut state = InsertionState::new();
    let mut out = Vec::new();
    for &letter in word {
        let (case, _) = state.insert(letter)?;
        out.push(TraceLine { letter, case, support: state.support() });
    }
    Ok(out)
}

/// Reads the letters of `p` in the arrival order recorded by `q`; the
/// two-sided inverse of `correspondence`.
pub fn read_word(p: &PSymbol, q: &QSymbol) -> Result<Word> {
    if p.forest != q.forest {
        return Err(Error::ShapeMismatch);
    }
    p.validate()?;
    q.validate()?;
    let mut by_time: Vec<(u32, Letter)> = q
        .labels
        .iter()
        .map(|(label, &t)| (t, p.labels[label]))
        .collect();
    by_time.sort();
    Ok(by_time.into_iter().map(|(_, l)| l).collect())
}

/// The occupied set after parking the whole word, tracked without trees:
/// each occupied interval remembers its most recent letter.
pub fn parking_set(word: &[Letter]) -> Result<BTreeSet<i32>> {
    if !is_injective(word) {
        let dup = word
            .iter()
            .enumerate()
            .find(|(k, l)| word[..*k].contains(l))
            .map(|(_, l)| l.to_string())
            .unwrap_or_default();
        return Err(Error::NotInjective(dup));
    }
    // (lo, hi, last letter), sorted and disjoint with gaps >= 1
    let mut intervals: Vec<(i32, i32, Letter)> = Vec::new();
    for &letter in word {
        let val = letter.val;
        let spot = match intervals.iter().position(|&(lo, hi, _)| lo <= val && val <= hi) {
            None => val,
            Some(j) => {
                let (lo, hi, last) = intervals[j];
                if letter > last {
                    hi + 1
                } else {
                    lo - 1
                }
            }
        };
        // occupy `spot` and merge the neighbors it touches
        let mut lo = spot;
        let mut hi = spot;
        if let Some(i) = intervals.iter().position(|&(_, h, _)| h == spot - 1) {
            lo = intervals[i].0;
            intervals.remove(i);
        }
        if let Some(i) = intervals.iter().position(|&(l, _, _)| l == spot + 1) {
            hi = intervals[i].1;
            intervals.remove(i);
        }
        let at = intervals.partition_point(|&(l, _, _)| l < lo);
        intervals.insert(at, (lo, hi, letter));
    }
    Ok(intervals
        .iter()
        .flat_map(|&(lo, hi, _)| lo..=hi)
        .collect())
}

pub fn parking_set_plain(word: &[i32]) -> BTreeSet<i32> {
    parking_set(&to_barred(word)).expect("barring makes any word injective")
}

/// A word parks when it occupies exactly `1..=len`.
pub fn is_parking(word: &[Letter]) -> Result<bool> {
    let set = parking_set(word)?;
    let expected: BTreeSet<i32> = (1..=word.len() as i32).collect();
    Ok(set == expected)
}

pub fn is_parking_plain(word: &[i32]) -> bool {
    is_parking(&to_barred(word)).expect("barring makes any word injective")
}

/// The ordered set of root labels together with the underlined points
/// `_i` present whenever neither `i-1` nor `i` is occupied. Only the
/// occupied set and the root letters are stored; underlines are derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rootlist {
    supp: BTreeSet<i32>,
    roots: BTreeSet<Letter>,
}

impl Rootlist {
    pub fn of_symbol(p: &PSymbol) -> Rootlist {
        let supp: BTreeSet<i32> = p.forest.support().into_iter().collect();
        let roots = p
            .forest
            .roots()
            .into_iter()
            .map(|label| p.labels[&label])
            .collect();
        Rootlist { supp, roots }
    }

    pub fn of_word(word: &[Letter]) -> Result<Rootlist> {
        let (p, _) = correspondence(word)?;
        Ok(Rootlist::of_symbol(&p))
    }

    pub fn has_underline(&self, i: i32) -> bool {
        !self.supp.contains(&(i - 1)) && !self.supp.contains(&i)
    }

    /// All points with values in `lo..=hi`, in increasing order.
    pub fn window_points(&self, lo: i32, hi: i32) -> Vec<Point> {
        let mut out = Vec::new();
        for i in lo..=hi {
            if self.has_underline(i) {
                out.push(Point::Underlined(i));
            }
            for &r in &self.roots {
                if r.val == i {
                    out.push(Point::Barred(r));
                }
            }
        }
        out
    }

    /// Bounds that surely enclose every point adjacent to values inside.
    fn safe_window(&self, around: &[i32]) -> (i32, i32) {
        let mut lo = around.iter().copied().min().unwrap_or(0);
        let mut hi = around.iter().copied().max().unwrap_or(0);
        if let (Some(&smin), Some(&smax)) =
            (self.supp.iter().next(), self.supp.iter().next_back())
        {
            lo = lo.min(smin);
            hi = hi.max(smax);
        }
        (lo - 2, hi + 2)
    }

    /// The two consecutive points `r1 < a < r2`.
    pub fn neighbors(&self, a: Letter) -> (Point, Point) {
        let (lo, hi) = self.safe_window(&[a.val]);
        let points = self.window_points(lo, hi);
        let target = Point::Barred(a);
        let below = points.iter().rev().find(|&&p| p < target).copied();
        let above = points.iter().find(|&&p| p > target).copied();
        (below.expect("tails are infinite"), above.expect("tails are infinite"))
    }

    /// Number of points strictly between two letters.
    pub fn points_between(&self, a: Letter, b: Letter) -> usize {
        let (x, y) = if a < b { (a, b) } else { (b, a) };
        let (lo, hi) = self.safe_window(&[x.val, y.val]);
        self.window_points(lo, hi)
            .into_iter()
            .filter(|&p| Point::Barred(x) < p && p < Point::Barred(y))
            .count()
    }
}

impl fmt::Display for Rootlist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let around: Vec<i32> = self
            .supp
            .iter()
            .copied()
            .chain(self.roots.iter().map(|r| r.val))
            .collect();
        let (lo, hi) = self.safe_window(&around);
        let body: Vec<String> = self
            .window_points(lo, hi)
            .into_iter()
            .map(|p| p.to_string())
            .collect();
        write!(f, "... < {} < ...", body.join(" < "))
    }
}

/// Whether swapping `a b -> b a` right after the prefix `U` keeps the
/// insertion record: at least two rootlist points of `U` must separate the
/// letters.
pub fn swap_allowed(prefix: &[Letter], a: Letter, b: Letter) -> Result<bool> {
    let rl = Rootlist::of_word(prefix)?;
    Ok(rl.points_between(a, b) >= 2)
}

/// Groups words by their insertion record. Returns one entry per record
/// with the member words sorted, ordered by record.
pub fn partition_classes(words: &[Word]) -> Result<Vec<(PSymbol, Vec<Word>)>> {
    let mut classes: BTreeMap<PSymbol, Vec<Word>> = BTreeMap::new();
    for word in words {
        let (p, _) = correspondence(word)?;
        classes.entry(p).or_default().push(word.clone());
    }
    Ok(classes
        .into_iter()
        .map(|(p, mut members)| {
            members.sort();
            (p, members)
        })
        .collect())
}

/// All words of the class of `p`: read the labels along every linear
/// extension of its forest.
pub fn class_words(p: &PSymbol) -> Result<Vec<Word>> {
    p.validate()?;
    let mut out = Vec::new();
    for ext in forest::linear_extensions(&p.forest) {
        let q = QSymbol { forest: p.forest.clone(), labels: ext };
        out.push(read_word(p, &q)?);
    }
    out.sort();
    Ok(out)
}
