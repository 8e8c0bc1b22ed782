//! Indexed forests: binary trees attached to the maximal intervals of a
//! finite set of integers. The canonical label of an internal node is its
//! inorder position inside the tree's interval, so node references are
//! canonical labels throughout. A forest is determined by the vector
//! counting, for every integer i, the nodes whose leftmost descendant has
//! label i; that vector is the canonical serialization.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::nvector::NVector;
use crate::word::Letter;

/// A binary tree shape; a missing child is a leaf.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub left: Option<Box<Shape>>,
    pub right: Option<Box<Shape>>,
}

impl Shape {
    pub fn leaf_node() -> Self {
        Shape::default()
    }

    pub fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size())
            + self.right.as_ref().map_or(0, |t| t.size())
    }

    /// All shapes with `n` internal nodes.
    pub fn enumerate(n: usize) -> Vec<Shape> {
        if n == 0 {
            return Vec::new();
        }
        let mut table: Vec<Vec<Shape>> = vec![Vec::new(); n + 1];
        table[1] = vec![Shape::leaf_node()];
        for size in 2..=n {
            let mut shapes = Vec::new();
            for left in 0..size {
                let right = size - 1 - left;
                let lefts: Vec<Option<Box<Shape>>> = if left == 0 {
                    vec![None]
                } else {
                    table[left].iter().map(|s| Some(Box::new(s.clone()))).collect()
                };
                let rights: Vec<Option<Box<Shape>>> = if right == 0 {
                    vec![None]
                } else {
                    table[right].iter().map(|s| Some(Box::new(s.clone()))).collect()
                };
                for l in &lefts {
                    for r in &rights {
                        shapes.push(Shape { left: l.clone(), right: r.clone() });
                    }
                }
            }
            table[size] = shapes;
        }
        table[n].clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexedTree {
    pub start: i32,
    pub shape: Shape,
}

impl IndexedTree {
    pub fn end(&self) -> i32 {
        self.start + self.shape.size() as i32 - 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexedForest {
    trees: Vec<IndexedTree>,
}

/// Per-node structural facts, keyed by canonical label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeInfo {
    pub label: i32,
    pub parent: Option<i32>,
    pub left: Option<i32>,
    pub right: Option<i32>,
    /// Canonical labels of the subtree rooted here form `lo..=hi`.
    pub lo: i32,
    pub hi: i32,
    /// Label reached by following left edges down: `lo`.
    pub rho: i32,
}

impl NodeInfo {
    pub fn is_terminal(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

impl IndexedForest {
    pub fn empty() -> Self {
        IndexedForest::default()
    }

    pub fn from_trees(mut trees: Vec<IndexedTree>) -> Result<Self> {
        trees.sort_by_key(|t| t.start);
        for pair in trees.windows(2) {
            if pair[0].end() + 1 >= pair[1].start {
                return Err(Error::Invalid(
                    "tree intervals must be disjoint and non-adjacent".into(),
                ));
            }
        }
        Ok(IndexedForest { trees })
    }

    pub fn single(start: i32, shape: Shape) -> Self {
        IndexedForest { trees: vec![IndexedTree { start, shape }] }
    }

    pub fn trees(&self) -> &[IndexedTree] {
        &self.trees
    }

    pub fn size(&self) -> usize {
        self.trees.iter().map(|t| t.shape.size()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// The union of the tree intervals, increasing.
    pub fn support(&self) -> Vec<i32> {
        self.trees
            .iter()
            .flat_map(|t| t.start..=t.end())
            .collect()
    }

    pub fn positively_supported(&self) -> bool {
        self.trees.first().map_or(true, |t| t.start >= 1)
    }

    /// Structural data for every node.
    pub fn info(&self) -> BTreeMap<i32, NodeInfo> {
        let mut nodes = BTreeMap::new();
        for tree in &self.trees {
            collect_info(&tree.shape, tree.start, None, &mut nodes);
        }
        nodes
    }

    /// Root labels of the constituent trees, left to right.
    pub fn roots(&self) -> Vec<i32> {
        self.trees
            .iter()
            .map(|t| {
                t.start + t.shape.left.as_ref().map_or(0, |l| l.size()) as i32
            })
            .collect()
    }

    /// Labels whose left child is a leaf.
    pub fn left_support(&self) -> Vec<i32> {
        self.info()
            .values()
            .filter(|n| n.left.is_none())
            .map(|n| n.label)
            .collect()
    }

    /// Labels of nodes with two leaf children.
    pub fn terminal_nodes(&self) -> Vec<i32> {
        self.info()
            .values()
            .filter(|n| n.is_terminal())
            .map(|n| n.label)
            .collect()
    }

    /// `c_i = #{nodes v : rho(v) = i}`; inverse of `from_nvector`.
    pub fn to_nvector(&self) -> NVector {
        let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
        for node in self.info().values() {
            *counts.entry(node.rho).or_insert(0) += 1;
        }
        NVector::from_entries(counts)
    }

    /// Rebuilds the forest whose rho-count vector is `c`. Every vector
    /// decomposes uniquely this way; the round trip is asserted.
    pub fn from_nvector(c: &NVector) -> Self {
        let mut trees = Vec::new();
        let support = c.support();
        let mut next = 0usize;
        while next < support.len() {
            let a = support[next];
            // grow until the counts fill the interval and the following
            // entry is empty
            let mut j = a;
            let mut deficit: i64 = 0; // (j - a + 1) - sum of counts, always <= 0
            loop {
                deficit += 1 - i64::from(c.get(j));
                if deficit == 0 && c.get(j + 1) == 0 {
                    break;
                }
                assert!(deficit <= 0, "not a valid shape vector");
                j += 1;
            }
            let counts: Vec<u32> = (a..=j).map(|i| c.get(i)).collect();
            let shape = build_tree(&counts).expect("interval counts must build a tree");
            trees.push(IndexedTree { start: a, shape });
            next = support.partition_point(|&s| s <= j + 1);
        }
        let forest = IndexedForest { trees };
        debug_assert_eq!(&forest.to_nvector(), c);
        forest
    }

    /// Removes a terminal node; the tree keeps its left endpoint and its
    /// interval shrinks by one (a single-node tree disappears).
    pub fn trim(&self, label: i32) -> Result<IndexedForest> {
        let idx = self
            .trees
            .iter()
            .position(|t| t.start <= label && label <= t.end())
            .ok_or(Error::NotTerminal(label))?;
        let tree = &self.trees[idx];
        let info = self.info();
        let node = info.get(&label).ok_or(Error::NotTerminal(label))?;
        if !node.is_terminal() {
            return Err(Error::NotTerminal(label));
        }
        let mut trees = self.trees.clone();
        let offset = (label - tree.start) as usize;
        match drop_terminal(tree.shape.clone(), offset) {
            Some(shape) => trees[idx] = IndexedTree { start: tree.start, shape },
            None => {
                trees.remove(idx);
            }
        }
        Ok(IndexedForest { trees })
    }

    /// Adds `j` to every support element.
    pub fn shifted(&self, j: i32) -> IndexedForest {
        IndexedForest {
            trees: self
                .trees
                .iter()
                .map(|t| IndexedTree { start: t.start + j, shape: t.shape.clone() })
                .collect(),
        }
    }

    /// Mirror image inside the interval `[n-1]`: support index i becomes
    /// n-i and every tree shape is reflected.
    pub fn reflected(&self, n: i32) -> IndexedForest {
        let trees = self
            .trees
            .iter()
            .rev()
            .map(|t| IndexedTree {
                start: n - t.end(),
                shape: mirror(&t.shape),
            })
            .collect();
        IndexedForest { trees }
    }

    /// Nested-paren dump with canonical labels.
    pub fn bracket_dump(&self) -> String {
        self.trees
            .iter()
            .map(|t| bracket(&t.shape, t.start).0)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IndexedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_nvector())
    }
}

fn collect_info(
    shape: &Shape,
    start: i32,
    parent: Option<i32>,
    nodes: &mut BTreeMap<i32, NodeInfo>,
) {
    let left_size = shape.left.as_ref().map_or(0, |t| t.size()) as i32;
    let label = start + left_size;
    let lo = start;
    let hi = start + shape.size() as i32 - 1;
    let left_label = shape
        .left
        .as_ref()
        .map(|l| start + l.left.as_ref().map_or(0, |x| x.size()) as i32);
    let right_label = shape
        .right
        .as_ref()
        .map(|r| label + 1 + r.left.as_ref().map_or(0, |x| x.size()) as i32);
    if let Some(left) = &shape.left {
        collect_info(left, start, Some(label), nodes);
    }
    if let Some(right) = &shape.right {
        collect_info(right, label + 1, Some(label), nodes);
    }
    nodes.insert(
        label,
        NodeInfo { label, parent, left: left_label, right: right_label, lo, hi, rho: lo },
    );
}

fn bracket(shape: &Shape, start: i32) -> (String, i32) {
    let left_size = shape.left.as_ref().map_or(0, |t| t.size()) as i32;
    let label = start + left_size;
    let mut out = String::from("(");
    if let Some(left) = &shape.left {
        out.push_str(&bracket(left, start).0);
        out.push(' ');
    }
    out.push_str(&label.to_string());
    if let Some(right) = &shape.right {
        out.push(' ');
        out.push_str(&bracket(right, label + 1).0);
    }
    out.push(')');
    (out, label)
}

/// Builds the tree over an interval from its rho-counts. The root is the
/// smallest split point whose right side is exactly filled; the root itself
/// accounts for one count at the left endpoint.
fn build_tree(counts: &[u32]) -> Option<Shape> {
    if counts.is_empty() {
        return None;
    }
    let b = counts.len(); // interval has positions 1..=b relatively
    let total: u32 = counts.iter().sum();
    assert_eq!(total as usize, b, "tree counts must fill the interval");
    assert!(counts[0] >= 1, "leftmost count must be positive");
    let mut suffix = 0u32;
    let mut root = b; // relative label of the root, 1-based
    for l in (1..=b).rev() {
        if suffix as usize == b - l {
            root = l; // keep scanning: the smallest valid split wins
        }
        suffix += counts[l - 1];
    }
    let left = if root > 1 {
        let mut lc = counts[..root - 1].to_vec();
        lc[0] -= 1; // the root's own leftmost-descendant count
        build_tree(&lc).map(Box::new)
    } else {
        None
    };
    let right = build_tree(&counts[root..]).map(Box::new);
    Some(Shape { left, right })
}

fn drop_terminal(shape: Shape, offset: usize) -> Option<Shape> {
    let left_size = shape.left.as_ref().map_or(0, |t| t.size());
    match offset.cmp(&left_size) {
        std::cmp::Ordering::Less => {
            let left = drop_terminal(*shape.left.unwrap(), offset).map(Box::new);
            Some(Shape { left, right: shape.right })
        }
        std::cmp::Ordering::Equal => {
            assert!(shape.left.is_none() && shape.right.is_none());
            None
        }
        std::cmp::Ordering::Greater => {
            let right =
                drop_terminal(*shape.right.unwrap(), offset - left_size - 1).map(Box::new);
            Some(Shape { left: shape.left, right })
        }
    }
}

fn mirror(shape: &Shape) -> Shape {
    Shape {
        left: shape.right.as_ref().map(|t| Box::new(mirror(t))),
        right: shape.left.as_ref().map(|t| Box::new(mirror(t))),
    }
}

/// A labeling of the internal nodes with distinct integers from `[n]`,
/// strictly decreasing away from the roots.
pub type DecreasingLabeling = BTreeMap<i32, u32>;

/// An injective letter labeling with `left child < node < right child` and
/// each node's value inside its subtree interval.
pub type LbsLabeling = BTreeMap<i32, Letter>;

/// All decreasing labelings of `F` with distinct labels from `[n]`,
/// sorted by their inorder label sequence.
pub fn decreasing_labelings(forest: &IndexedForest, n: usize) -> Vec<DecreasingLabeling> {
    let size = forest.size();
    if n < size {
        return Vec::new();
    }
    let info = forest.info();
    let mut frontier: Vec<i32> = forest.roots();
    let mut current: DecreasingLabeling = BTreeMap::new();
    let mut out = Vec::new();
    assign_decreasing(n as u32, size, &info, &mut frontier, &mut current, &mut out);
    out.sort_by_key(|lab| lab.values().copied().collect::<Vec<_>>());
    out
}

fn assign_decreasing(
    next_label: u32,
    remaining: usize,
    info: &BTreeMap<i32, NodeInfo>,
    frontier: &mut Vec<i32>,
    current: &mut DecreasingLabeling,
    out: &mut Vec<DecreasingLabeling>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if (next_label as usize) < remaining {
        return;
    }
    // skip this label value
    if next_label as usize > remaining {
        assign_decreasing(next_label - 1, remaining, info, frontier, current, out);
    }
    // or place it at any frontier node
    for k in 0..frontier.len() {
        let node = frontier[k];
        current.insert(node, next_label);
        let mut added = 0;
        let ni = &info[&node];
        frontier.remove(k);
        if let Some(l) = ni.left {
            frontier.push(l);
            added += 1;
        }
        if let Some(r) = ni.right {
            frontier.push(r);
            added += 1;
        }
        assign_decreasing(next_label - 1, remaining - 1, info, frontier, current, out);
        for _ in 0..added {
            frontier.pop();
        }
        frontier.insert(k, node);
        current.remove(&node);
    }
}

/// Linear extensions of the forest poset (labels exactly `1..=|F|`).
pub fn linear_extensions(forest: &IndexedForest) -> Vec<DecreasingLabeling> {
    decreasing_labelings(forest, forest.size())
}

/// All LBS labelings using exactly the given distinct letters.
pub fn lbs_labelings(forest: &IndexedForest, letters: &[Letter]) -> Vec<LbsLabeling> {
    let size = forest.size();
    if letters.len() != size {
        return Vec::new();
    }
    let mut pool = letters.to_vec();
    pool.sort();
    pool.dedup();
    if pool.len() != size {
        return Vec::new(); // repeated letters cannot label injectively
    }
    let info = forest.info();
    let order: Vec<i32> = info.keys().copied().collect();
    let mut used = vec![false; pool.len()];
    let mut current: LbsLabeling = BTreeMap::new();
    let mut out = Vec::new();
    assign_lbs(&order, 0, &pool, &mut used, &info, &mut current, &mut out);
    out.sort_by_key(|lab| lab.values().copied().collect::<Vec<_>>());
    out
}

fn assign_lbs(
    order: &[i32],
    at: usize,
    pool: &[Letter],
    used: &mut Vec<bool>,
    info: &BTreeMap<i32, NodeInfo>,
    current: &mut LbsLabeling,
    out: &mut Vec<LbsLabeling>,
) {
    if at == order.len() {
        out.push(current.clone());
        return;
    }
    let node = order[at];
    let ni = &info[&node];
    for k in 0..pool.len() {
        if used[k] {
            continue;
        }
        let letter = pool[k];
        if letter.val < ni.lo || letter.val > ni.hi {
            continue;
        }
        // inorder means the left child and (when this is a right child) the
        // parent are already labeled
        if let Some(l) = ni.left {
            if current[&l] >= letter {
                continue;
            }
        }
        if let Some(p) = ni.parent {
            if let Some(&pl) = current.get(&p) {
                // parent already labeled: this node sits in its right subtree
                if pl >= letter {
                    continue;
                }
            }
        }
        // when this node closes a left subtree, check against the parent later;
        // the parent check above covers right subtrees. The remaining
        // constraint (node < parent for left children) is verified when the
        // parent is placed, via its `left` lookup.
        used[k] = true;
        current.insert(node, letter);
        assign_lbs(order, at + 1, pool, used, info, current, out);
        current.remove(&node);
        used[k] = false;
    }
}

/// The canonical flag: every node labeled by its leftmost descendant,
/// barred in inorder so equal values get copies 1, 2, ... left to right.
pub fn canonical_flag(forest: &IndexedForest) -> LbsLabeling {
    let info = forest.info();
    let mut seen: BTreeMap<i32, u32> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for (&label, node) in &info {
        let copy = seen.entry(node.rho).or_insert(0);
        *copy += 1;
        out.insert(label, Letter::new(node.rho, *copy));
    }
    out
}

/// Checks the LBS conditions for a letter labeling of `F`.
pub fn is_lbs(forest: &IndexedForest, labels: &LbsLabeling) -> bool {
    let info = forest.info();
    if labels.len() != info.len() || !info.keys().all(|k| labels.contains_key(k)) {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    for (label, node) in &info {
        let letter = labels[label];
        if !seen.insert(letter) {
            return false;
        }
        if letter.val < node.lo || letter.val > node.hi {
            return false;
        }
        if let Some(l) = node.left {
            if labels[&l] >= letter {
                return false;
            }
        }
        if let Some(r) = node.right {
            if labels[&r] <= letter {
                return false;
            }
        }
    }
    true
}

/// All LBS labelings whose copy indices are bounded by `|F|` and form an
/// initial run for each value. Contains the canonical flag.
pub fn lbs_labelings_unrestricted(forest: &IndexedForest) -> Vec<LbsLabeling> {
    let size = forest.size();
    if size == 0 {
        return vec![BTreeMap::new()];
    }
    let values = forest.support();
    let mut pool = Vec::new();
    for &v in &values {
        for c in 1..=size as u32 {
            pool.push(Letter::new(v, c));
        }
    }
    let info = forest.info();
    let order: Vec<i32> = info.keys().copied().collect();
    let mut used = vec![false; pool.len()];
    let mut current: LbsLabeling = BTreeMap::new();
    let mut out = Vec::new();
    assign_lbs(&order, 0, &pool, &mut used, &info, &mut current, &mut out);
    out.retain(|lab| {
        let mut per_value: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
        for letter in lab.values() {
            per_value.entry(letter.val).or_default().push(letter.copy);
        }
        per_value.values_mut().all(|copies| {
            copies.sort_unstable();
            copies.iter().enumerate().all(|(k, &c)| c == k as u32 + 1)
        })
    });
    out.sort_by_key(|lab| lab.values().copied().collect::<Vec<_>>());
    out.dedup();
    out
}

/// All forests with support contained in `lo..=hi` and at most `max_size`
/// nodes (including the empty forest).
pub fn forests_within(lo: i32, hi: i32, max_size: usize) -> Vec<IndexedForest> {
    let mut out = vec![IndexedForest::empty()];
    // choose the leftmost tree interval, then recurse to the right
    fn rec(
        lo: i32,
        hi: i32,
        budget: usize,
        prefix: &[IndexedTree],
        out: &mut Vec<IndexedForest>,
    ) {
        if budget == 0 {
            return;
        }
        for start in lo..=hi {
            for len in 1..=budget.min((hi - start + 1).max(0) as usize) {
                for shape in Shape::enumerate(len) {
                    let tree = IndexedTree { start, shape };
                    let mut trees = prefix.to_vec();
                    trees.push(tree.clone());
                    out.push(IndexedForest { trees: trees.clone() });
                    rec(tree.end() + 2, hi, budget - len, &trees, out);
                }
            }
        }
    }
    rec(lo, hi, max_size, &[], &mut out);
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|f| seen.insert(f.clone()));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nvector;
    use crate::word::to_barred;

    fn t0() -> IndexedForest {
        IndexedForest::from_nvector(&NVector::from_slice(&[0, 2, 0, 1]))
    }

    fn f0() -> IndexedForest {
        IndexedForest::from_nvector(&NVector::from_slice(&[
            0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0,
        ]))
    }

    #[test]
    fn bijection_examples() {
        assert!(IndexedForest::from_nvector(&NVector::zero()).is_empty());
        assert!(IndexedForest::empty().to_nvector().is_zero());

        let f = f0();
        assert_eq!(f.size(), 6);
        assert_eq!(f.terminal_nodes().len(), 4);
        assert_eq!(f.support(), vec![2, 3, 4, 7, 11, 12]);
        assert_eq!(f.left_support(), vec![2, 4, 7, 11]);

        let t = t0();
        assert_eq!(t.support(), vec![2, 3, 4]);
        let rho: Vec<i32> = t.info().values().map(|n| n.rho).collect();
        assert_eq!(rho, vec![2, 2, 4]);
    }

    #[test]
    fn bijection_round_trip() {
        // every vector supported in [6] with weight <= 6
        fn vectors(maxw: u32) -> Vec<NVector> {
            let mut out = vec![vec![]];
            for _ in 0..6 {
                let mut next = Vec::new();
                for v in out {
                    let used: u32 = v.iter().sum();
                    for e in 0..=maxw - used {
                        let mut w = v.clone();
                        w.push(e);
                        next.push(w);
                    }
                }
                out = next;
            }
            out.into_iter().map(|v| NVector::from_slice(&v)).collect()
        }
        for c in vectors(6) {
            let f = IndexedForest::from_nvector(&c);
            assert_eq!(f.to_nvector(), c);
        }
    }

    #[test]
    fn rho_counts_match_vector() {
        for f in forests_within(1, 5, 5) {
            let c = f.to_nvector();
            let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
            for n in f.info().values() {
                *counts.entry(n.rho).or_insert(0) += 1;
            }
            assert_eq!(NVector::from_entries(counts), c);
            assert_eq!(IndexedForest::from_nvector(&c), f);
        }
    }

    #[test]
    fn single_node() {
        let f = IndexedForest::from_nvector(&NVector::from_entries([(5, 1)]));
        assert_eq!(f.support(), vec![5]);
        let info = f.info();
        assert_eq!(info[&5].rho, 5);
        assert!(info[&5].is_terminal());
        // trimming removes the tree
        assert!(f.trim(5).unwrap().is_empty());
    }

    #[test]
    fn trim_and_shift() {
        let t = t0();
        // trimming the two terminal nodes of the (0,2,0,1) tree gives the
        // two-node trees with vectors (0,2) and (0,1,1)
        let mut results: Vec<NVector> = t
            .terminal_nodes()
            .into_iter()
            .map(|v| t.trim(v).unwrap().to_nvector())
            .collect();
        results.sort();
        assert_eq!(
            results,
            vec![NVector::from_slice(&[0, 1, 1]), NVector::from_slice(&[0, 2])]
        );
        assert!(t.trim(3).is_err());

        assert_eq!(t.shifted(-1).support(), vec![1, 2, 3]);
        assert_eq!(t.shifted(-1).to_nvector(), NVector::from_slice(&[2, 0, 1]));
    }

    #[test]
    fn decreasing_counts() {
        let t = t0();
        assert_eq!(linear_extensions(&t).len(), 2);
        assert_eq!(decreasing_labelings(&t, 4).len(), 8); // C(4,3) * 2

        let single = IndexedForest::from_nvector(&NVector::from_slice(&[1]));
        assert_eq!(decreasing_labelings(&single, 1).len(), 1);
    }

    #[test]
    fn decreasing_shuffle_product() {
        fn multinomial(parts: &[usize]) -> usize {
            let total: usize = parts.iter().sum();
            let mut num = 1usize;
            let mut k = 0usize;
            for &p in parts {
                for i in 1..=p {
                    k += 1;
                    num = num * k / i; // binomial(k, i) accumulates exactly
                }
            }
            let _ = total;
            num
        }
        for f in forests_within(1, 5, 5) {
            if f.is_empty() {
                continue;
            }
            let per_tree: Vec<usize> = f
                .trees()
                .iter()
                .map(|t| {
                    linear_extensions(&IndexedForest::single(t.start, t.shape.clone())).len()
                })
                .collect();
            let sizes: Vec<usize> = f.trees().iter().map(|t| t.shape.size()).collect();
            let expected = multinomial(&sizes) * per_tree.iter().product::<usize>();
            assert_eq!(linear_extensions(&f).len(), expected, "forest {}", f);
        }
    }

    #[test]
    fn lbs_enumerations() {
        // all shapes over [4] labeled by {2^1, 2^2, 4^1, 4^2}
        let letters = vec![
            Letter::new(2, 1),
            Letter::new(2, 2),
            Letter::new(4, 1),
            Letter::new(4, 2),
        ];
        let mut count = 0;
        for shape in Shape::enumerate(4) {
            let f = IndexedForest::single(1, shape);
            count += lbs_labelings(&f, &letters).len();
        }
        assert_eq!(count, 5);

        // two nodes, letters 1^1 2^1: one labeling per shape
        let letters = to_barred(&[1, 2]);
        let mut count = 0;
        for shape in Shape::enumerate(2) {
            let f = IndexedForest::single(1, shape);
            count += lbs_labelings(&f, &letters).len();
        }
        assert_eq!(count, 2);
    }

    #[test]
    fn canonical_flag_is_lbs() {
        for f in forests_within(1, 5, 5) {
            let flag = canonical_flag(&f);
            assert!(is_lbs(&f, &flag), "forest {}", f);
            if !f.is_empty() {
                let all = lbs_labelings_unrestricted(&f);
                assert!(all.contains(&flag), "forest {}", f);
                // using exactly the canonical letters there is one labeling
                let letters: Vec<Letter> = flag.values().copied().collect();
                assert_eq!(lbs_labelings(&f, &letters).len(), 1, "forest {}", f);
            }
        }
    }

    #[test]
    fn block_structure_matches_catalan() {
        // vectors of maximal weight over [n] decompose as a single tree
        for n in 2..=5usize {
            let tops = nvector::abb_top_set(n);
            for c in tops {
                let f = IndexedForest::from_nvector(&NVector::from_slice(&c));
                assert_eq!(f.trees().len(), 1);
                assert_eq!(f.support(), (1..n as i32).collect::<Vec<_>>());
            }
        }
    }
}
