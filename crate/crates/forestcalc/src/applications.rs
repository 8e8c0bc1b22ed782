//! The headline computations: the permutahedral coefficients by three
//! mutually checking routes, the class decomposition of Schubert
//! polynomials, forest structure constants by expansion and by shuffles,
//! multivariate mixed Eulerian numbers, and the bilabeled-tree model.

use std::collections::BTreeMap;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::bases::{self, Basis, BasisElementId, ForestRoute};
use crate::correspondence::{self, PSymbol};
use crate::error::{Error, Result};
use crate::forest::{self, IndexedForest, Shape};
use crate::nvector::NVector;
use crate::perm::Permutation;
use crate::poly::{q_int, Polynomial, Q};
use crate::quotient::{self, DsRoute, ReductionRoute};
use crate::word::{to_barred, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwRoute {
    Parking,
    Ds,
    Forest,
    All,
}

/// The coefficient of one permutation, with the per-route values and the
/// parking words that witness it.
#[derive(Clone, Debug)]
pub struct AwReport {
    pub w: Permutation,
    pub n: usize,
    pub value: u64,
    pub routes: BTreeMap<&'static str, u64>,
    pub witnesses: Vec<Vec<i32>>,
}

impl AwReport {
    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: Vec<String> = self
            .witnesses
            .iter()
            .map(|w| crate::word::display_plain(w))
            .collect();
        serde_json::json!({
            "w": self.w.to_string(),
            "n": self.n,
            "value": self.value,
            "routes": self.routes,
            "witnesses": witnesses,
        })
    }
}

fn expect_count(q: &Q, what: &str) -> u64 {
    assert!(q.is_integer() && !q.is_negative(), "{} must be a nonnegative integer", what);
    q.to_integer().to_u64().expect("count fits")
}

/// The coefficient `a_w` for `w` of length n-1 inside the symmetric group
/// on `[n]`; `n` is recovered as length + 1.
pub fn a_w(w: &Permutation, route: AwRoute) -> Result<AwReport> {
    let n = w.length() + 1;
    if w.max_moved() > n as i32 || !w.positively_supported() {
        return Err(Error::LengthMustBeNMinusOne { len: w.length(), n: w.max_moved() as usize });
    }
    let words = w.inverse().reduced_words();
    let witnesses: Vec<Vec<i32>> = words
        .iter()
        .filter(|word| correspondence::is_parking_plain(word))
        .cloned()
        .collect();
    let mut routes = BTreeMap::new();
    if matches!(route, AwRoute::Parking | AwRoute::All) {
        routes.insert("parking", witnesses.len() as u64);
    }
    if matches!(route, AwRoute::Ds | AwRoute::All) {
        let value = quotient::divided_symmetrization(&bases::schubert(w)?, n, DsRoute::Direct)?;
        routes.insert("ds", expect_count(&value, "divided symmetrization"));
    }
    if matches!(route, AwRoute::Forest | AwRoute::All) {
        let reduced = quotient::reduce_mod_qsym(&bases::schubert(w)?, n, ReductionRoute::Forest)?;
        routes.insert("forest", expect_count(&reduced.at_ones(), "reduced evaluation"));
    }
    let value = *routes.values().next().expect("at least one route");
    assert!(routes.values().all(|&v| v == value), "routes disagree for {}", w);
    Ok(AwReport { w: w.clone(), n, value, routes, witnesses })
}

/// One summand of the class decomposition of a Schubert polynomial.
#[derive(Clone, Debug)]
pub struct ClassSummand {
    pub symbol: PSymbol,
    /// Members as plain reduced words.
    pub members: Vec<Vec<i32>>,
}

/// Groups the reduced words of the inverse by insertion record; the forest
/// polynomials of the records sum to the Schubert polynomial.
pub fn schubert_forest_expansion(w: &Permutation) -> Result<Vec<ClassSummand>> {
    if !w.positively_supported() {
        return Err(Error::NegativeSupport);
    }
    let words = w.inverse().reduced_words();
    let barred: Vec<Word> = words.iter().map(|word| to_barred(word)).collect();
    let classes = correspondence::partition_classes(&barred)?;
    Ok(classes
        .into_iter()
        .map(|(symbol, members)| ClassSummand {
            symbol,
            members: members.into_iter().map(|m| crate::word::values(&m)).collect(),
        })
        .collect())
}

/// The forest-basis expansion implied by the class decomposition: one unit
/// per class, accumulated per forest.
pub fn class_expansion(summands: &[ClassSummand]) -> bases::BasisExpansion {
    let mut coefficients = BTreeMap::new();
    for s in summands {
        let id = BasisElementId::Forest(s.symbol.forest.to_nvector());
        *coefficients.entry(id).or_insert_with(Q::zero) += q_int(1);
    }
    bases::BasisExpansion { basis: Basis::Forest, coefficients }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureRoute {
    /// Expand the product of the two forest polynomials.
    Expansion,
    /// Shuffle the two word classes on disjoint alphabets and regroup.
    Shuffle,
}

/// Coefficients of the product of two forest polynomials in the forest
/// basis, keyed by the shape vector. Nonnegative integers either way.
pub fn forest_structure_constants(
    f1: &IndexedForest,
    f2: &IndexedForest,
    route: StructureRoute,
) -> Result<BTreeMap<NVector, u64>> {
    if !f1.positively_supported() || !f2.positively_supported() {
        return Err(Error::NegativeSupport);
    }
    match route {
        StructureRoute::Expansion => {
            let product = bases::forest_polynomial(f1, ForestRoute::Recurrence)
                .times(&bases::forest_polynomial(f2, ForestRoute::Recurrence));
            let expansion = bases::expand_in_basis(&product, Basis::Forest)?;
            let mut out = BTreeMap::new();
            for (id, coef) in &expansion.coefficients {
                let BasisElementId::Forest(c) = id else { unreachable!() };
                out.insert(c.clone(), expect_count(coef, "structure constant"));
            }
            Ok(out)
        }
        StructureRoute::Shuffle => {
            let p1 = PSymbol { forest: f1.clone(), labels: forest::canonical_flag(f1) };
            let offset = p1.labels.values().map(|l| l.copy).max().unwrap_or(0);
            let mut labels2 = forest::canonical_flag(f2);
            for letter in labels2.values_mut() {
                *letter = Letter::new(letter.val, letter.copy + offset);
            }
            let p2 = PSymbol { forest: f2.clone(), labels: labels2 };
            let words1 = correspondence::class_words(&p1)?;
            let words2 = correspondence::class_words(&p2)?;
            let mut tally: BTreeMap<NVector, u64> = BTreeMap::new();
            for w1 in &words1 {
                for w2 in &words2 {
                    for shuffle in shuffles(w1, w2) {
                        let (p, _) = correspondence::correspondence(&shuffle)?;
                        *tally.entry(p.forest.to_nvector()).or_insert(0) += 1;
                    }
                }
            }
            let mut out = BTreeMap::new();
            for (c, count) in tally {
                let g = IndexedForest::from_nvector(&c);
                let extensions = forest::linear_extensions(&g).len() as u64;
                assert_eq!(count % extensions, 0, "shuffle tally must split into classes");
                out.insert(c, count / extensions);
            }
            Ok(out)
        }
    }
}

/// All interleavings keeping the relative order of each word.
fn shuffles(a: &[Letter], b: &[Letter]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[Letter], b: &[Letter], current: &mut Word, out: &mut Vec<Word>) {
        if a.is_empty() && b.is_empty() {
            out.push(current.clone());
            return;
        }
        if let Some((&first, rest)) = a.split_first() {
            current.push(first);
            rec(rest, b, current, out);
            current.pop();
        }
        if let Some((&first, rest)) = b.split_first() {
            current.push(first);
            rec(a, rest, current, out);
            current.pop();
        }
    }
    rec(a, b, &mut current, &mut out);
    out
}

/// The content alphabet: `c_i` copies of the value `i`.
pub fn content_alphabet(content: &[u32]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, &count) in content.iter().enumerate() {
        for copy in 1..=count {
            out.push(Letter::new(i as i32 + 1, copy));
        }
    }
    out
}

/// A multivariate mixed Eulerian number: the canonical representative of
/// the staircase-factor product determined by the content.
#[derive(Clone, Debug)]
pub struct MixedEulerian {
    pub content: Vec<u32>,
    pub n: usize,
    pub representative: quotient::AbbRepresentative,
}

impl MixedEulerian {
    pub fn at_ones(&self) -> Q {
        self.representative.at_ones()
    }

    /// Geometric substitution `x_i := q^(i-1)`.
    pub fn at_geometric(&self, q: &Q) -> Q {
        self.representative
            .poly
            .at_geometric(q)
            .expect("representative variables are bounded")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "content": self.content,
            "n": self.n,
            "polynomial": self.representative.poly.to_json(),
            "at_ones": self.at_ones().to_string(),
        })
    }
}

fn check_content(content: &[u32]) -> Result<usize> {
    let n = content.len() + 1;
    let weight: u32 = content.iter().sum();
    if weight as usize != n - 1 {
        return Err(Error::MalformedContent(format!(
            "{} parts must sum to {}",
            n - 1,
            n - 1
        )));
    }
    Ok(n)
}

/// Reduces the product of staircase sums `(x_1+...+x_i)^(c_i)` modulo the
/// quasisymmetric ideal in `n = len(c)+1` variables.
pub fn multivariate_mixed_eulerian(content: &[u32]) -> Result<MixedEulerian> {
    let n = check_content(content)?;
    let mut y = Polynomial::one();
    for (i, &count) in content.iter().enumerate() {
        let staircase: Polynomial = (1..=i as i32 + 1)
            .map(Polynomial::variable)
            .fold(Polynomial::zero(), |acc, x| acc.plus(&x));
        y = y.times(&staircase.pow(count));
    }
    let representative = quotient::reduce_mod_qsym(&y, n, ReductionRoute::Forest)?;
    Ok(MixedEulerian { content: content.to_vec(), n, representative })
}

/// The same polynomial as a sum over letter-labeled trees on the full
/// interval: one forest polynomial per LBS tree labeled by the content
/// alphabet. Returns the labeled trees and the summed polynomial.
pub fn mixed_eulerian_lbs_route(content: &[u32]) -> Result<(Vec<PSymbol>, Polynomial)> {
    let n = check_content(content)?;
    let letters = content_alphabet(content);
    let mut symbols = Vec::new();
    let mut total = Polynomial::zero();
    for shape in Shape::enumerate(n - 1) {
        let tree = IndexedForest::single(1, shape);
        let labelings = forest::lbs_labelings(&tree, &letters);
        if labelings.is_empty() {
            continue;
        }
        let b = bases::forest_polynomial(&tree, ForestRoute::Recurrence);
        for labels in labelings {
            symbols.push(PSymbol { forest: tree.clone(), labels });
            total = total.plus(&b);
        }
    }
    Ok((symbols, total))
}

/// All injective words using the whole content alphabet, and how many of
/// them park.
pub fn content_parking_count(content: &[u32]) -> Result<(usize, usize)> {
    check_content(content)?;
    let letters = content_alphabet(content);
    let mut total = 0usize;
    let mut parking = 0usize;
    let mut current = Vec::with_capacity(letters.len());
    let mut used = vec![false; letters.len()];
    fn rec(
        letters: &[Letter],
        used: &mut Vec<bool>,
        current: &mut Word,
        total: &mut usize,
        parking: &mut usize,
    ) {
        if current.len() == letters.len() {
            *total += 1;
            if correspondence::is_parking(current).expect("distinct letters") {
                *parking += 1;
            }
            return;
        }
        for k in 0..letters.len() {
            if used[k] {
                continue;
            }
            used[k] = true;
            current.push(letters[k]);
            rec(letters, used, current, total, parking);
            current.pop();
            used[k] = false;
        }
    }
    rec(&letters, &mut used, &mut current, &mut total, &mut parking);
    Ok((total, parking))
}

/// A complete binary tree with nodes and leaves labeled bijectively by
/// `1..=2n-1`, search-ordered at every node, whose leaf labels are pinned
/// by the content.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BilabeledTree {
    pub shape: Shape,
    /// Leaf labels left to right.
    pub leaves: Vec<u32>,
    /// Node labels keyed by canonical position on `[n-1]`.
    pub nodes: BTreeMap<i32, u32>,
}

/// Leaf labels forced by the content: `l_i = i + c_1 + ... + c_(i-1)`.
pub fn content_leaf_labels(content: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(content.len() + 1);
    let mut acc = 0u32;
    for i in 0..=content.len() {
        out.push(i as u32 + 1 + acc);
        if i < content.len() {
            acc += content[i];
        }
    }
    out
}

/// All bilabeled trees of the given content.
pub fn bilabeled_trees(content: &[u32]) -> Result<Vec<BilabeledTree>> {
    let n = check_content(content)?;
    let leaves = content_leaf_labels(content);
    debug_assert_eq!(*leaves.last().unwrap() as usize, 2 * n - 1);
    let node_values: Vec<u32> = (1..=2 * n as u32 - 1)
        .filter(|v| !leaves.contains(v))
        .collect();
    let mut out = Vec::new();
    for shape in Shape::enumerate(n - 1) {
        let tree = IndexedForest::single(1, shape.clone());
        let info = tree.info();
        // inorder slot k: leaves sit between consecutive nodes, so the node
        // with canonical label j has leaf neighbors j and j+1 exactly when
        // the corresponding child is missing
        let nodes: Vec<i32> = info.keys().copied().collect();
        let mut assignment: BTreeMap<i32, u32> = BTreeMap::new();
        let mut used = vec![false; node_values.len()];
        enumerate_bilabeled(
            &nodes,
            0,
            &info,
            &leaves,
            &node_values,
            &mut used,
            &mut assignment,
            &mut out,
            &shape,
        );
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_bilabeled(
    nodes: &[i32],
    at: usize,
    info: &BTreeMap<i32, forest::NodeInfo>,
    leaves: &[u32],
    node_values: &[u32],
    used: &mut Vec<bool>,
    assignment: &mut BTreeMap<i32, u32>,
    out: &mut Vec<BilabeledTree>,
    shape: &Shape,
) {
    if at == nodes.len() {
        out.push(BilabeledTree {
            shape: shape.clone(),
            leaves: leaves.to_vec(),
            nodes: assignment.clone(),
        });
        return;
    }
    let v = nodes[at];
    let node = &info[&v];
    for k in 0..node_values.len() {
        if used[k] {
            continue;
        }
        let value = node_values[k];
        // left neighbor: internal child or the leaf at inorder gap v
        let left_ok = match node.left {
            Some(l) => assignment.get(&l).map_or(true, |&lv| lv < value),
            None => leaves[(v - 1) as usize] < value,
        };
        // right neighbor: internal child or the leaf at inorder gap v+1
        let right_ok = match node.right {
            Some(r) => assignment.get(&r).map_or(true, |&rv| rv > value),
            None => leaves[v as usize] > value,
        };
        // also check against an already-assigned parent
        let parent_ok = match node.parent {
            Some(p) => match assignment.get(&p) {
                Some(&pv) => {
                    if info[&p].left == Some(v) {
                        value < pv
                    } else {
                        value > pv
                    }
                }
                None => true,
            },
            None => true,
        };
        if left_ok && right_ok && parent_ok {
            used[k] = true;
            assignment.insert(v, value);
            enumerate_bilabeled(
                nodes, at + 1, info, leaves, node_values, used, assignment, out, shape,
            );
            assignment.remove(&v);
            used[k] = false;
        }
    }
}

/// The order-preserving relabeling of a bilabeled tree into a
/// letter-labeled tree on the full interval.
pub fn bilabeled_to_lbs(tree: &BilabeledTree, content: &[u32]) -> Result<PSymbol> {
    let n = check_content(content)?;
    let leaves = content_leaf_labels(content);
    let node_values: Vec<u32> = (1..=2 * n as u32 - 1)
        .filter(|v| !leaves.contains(v))
        .collect();
    let letters = content_alphabet(content);
    let mapping: BTreeMap<u32, Letter> =
        node_values.into_iter().zip(letters).collect();
    let labels = tree
        .nodes
        .iter()
        .map(|(&pos, lr)| (pos, mapping[lr]))
        .collect();
    let symbol = PSymbol {
        forest: IndexedForest::single(1, tree.shape.clone()),
        labels,
    };
    symbol.validate()?;
    Ok(symbol)
}

/// Number of standard Young tableaux of the given partition shape with
/// exactly `m - 1` descents (entries whose successor sits strictly lower).
pub fn syt_descent_count(shape: &[u32], m: usize) -> u64 {
    let mut parts: Vec<u32> = shape.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.is_empty() {
        return if m == 1 { 1 } else { 0 };
    }
    let total: u32 = parts.iter().sum();
    let mut fill = vec![0u32; parts.len()]; // cells used per row
    let mut row_of = vec![0usize; total as usize + 1];
    let mut count = 0u64;
    fn rec(
        parts: &[u32],
        fill: &mut Vec<u32>,
        row_of: &mut Vec<usize>,
        value: u32,
        total: u32,
        target_descents: usize,
        count: &mut u64,
    ) {
        if value > total {
            let descents = (1..total)
                .filter(|&i| row_of[i as usize + 1] > row_of[i as usize])
                .count();
            if descents == target_descents {
                *count += 1;
            }
            return;
        }
        for r in 0..parts.len() {
            if fill[r] < parts[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                row_of[value as usize] = r;
                rec(parts, fill, row_of, value + 1, total, target_descents, count);
                fill[r] -= 1;
            }
        }
    }
    if m == 0 {
        return 0;
    }
    rec(&parts, &mut fill, &mut row_of, 1, total, m - 1, &mut count);
    count
}

/// The partition carved out of the code by dropping zeros.
pub fn code_partition(w: &Permutation) -> Vec<u32> {
    let mut parts: Vec<u32> = w.lehmer_code().iter().map(|(_, v)| v).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// The unique descent position when there is exactly one.
pub fn grassmannian_descent(w: &Permutation) -> Option<usize> {
    let descents = w.descents();
    if descents.len() == 1 && descents[0] >= 1 {
        Some(descents[0] as usize)
    } else {
        None
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out.to_u64().expect("binomial fits")
}

/// Both sides of the shifted-coefficient identity: the quotient-route
/// evaluation of the shifted Schubert polynomial against the binomially
/// weighted coefficient sum. The two agree for every `j >= 0`.
pub fn shifted_coefficient_identity(w: &Permutation, j: usize) -> Result<(Q, Q)> {
    let n = w.length() + 1;
    if w.max_moved() > n as i32 {
        return Err(Error::LengthMustBeNMinusOne { len: w.length(), n: w.max_moved() as usize });
    }
    let words = w.inverse().reduced_words();
    let max_letter = words
        .iter()
        .flat_map(|word| word.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let p = max_letter + 1;

    let shifted = w.shifted(j as i32);
    let lhs = quotient::reduce_mod_qsym(&bases::schubert(&shifted)?, n + j, ReductionRoute::Forest)?
        .at_ones();

    let mut rhs = Q::zero();
    let low = if p + j > n { p + j - n } else { 0 };
    for m in low..=j {
        let k = j - m; // parking count of the k-shifted permutation
        let parked = words
            .iter()
            .filter(|word| {
                let lifted: Vec<i32> = word.iter().map(|&l| l + k as i32).collect();
                correspondence::is_parking_plain(&lifted)
            })
            .count();
        rhs += q_int(parked as i64) * q_int(binomial(n + m - 1, n - 1) as i64);
    }
    Ok((lhs, rhs))
}

/// Reports for every permutation of length n-1 on `[n]`, computed by all
/// three routes in parallel and merged in one-line order.
pub fn coefficient_sweep(n: usize) -> Result<Vec<AwReport>> {
    use rayon::prelude::*;
    let perms = crate::perm::coefficient_index_set(n);
    let mut out: Vec<AwReport> = perms
        .par_iter()
        .map(|w| a_w(w, AwRoute::All))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|r| r.w.clone());
    Ok(out)
}

/// Whether the letters of the reduced words form an initial interval; the
/// plain-evaluation form of the identity needs this.
pub fn letters_initial_interval(w: &Permutation) -> bool {
    let letters: std::collections::BTreeSet<i32> = w
        .inverse()
        .reduced_words()
        .iter()
        .flat_map(|word| word.iter().copied())
        .collect();
    letters
        .iter()
        .enumerate()
        .all(|(k, &l)| l == k as i32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn headline_coefficient() {
        let report = a_w(&p("21543"), AwRoute::All).unwrap();
        assert_eq!(report.value, 4);
        assert_eq!(report.n, 5);
        assert_eq!(
            report.witnesses,
            vec![
                vec![1, 3, 4, 3],
                vec![3, 1, 4, 3],
                vec![3, 4, 1, 3],
                vec![3, 4, 3, 1]
            ]
        );
        assert_eq!(report.routes.len(), 3);

        let tiny = a_w(&p("21"), AwRoute::All).unwrap();
        assert_eq!(tiny.value, 1);

        // wrong length: 321 has length 3 but would need support in [4]
        assert!(a_w(&p("4321"), AwRoute::Parking).is_err());
    }

    #[test]
    fn class_decomposition() {
        let summands = schubert_forest_expansion(&p("14253")).unwrap();
        assert_eq!(summands.len(), 1);
        assert_eq!(
            summands[0].symbol.forest.to_nvector(),
            NVector::from_slice(&[0, 2, 0, 1])
        );

        let identity = schubert_forest_expansion(&Permutation::identity()).unwrap();
        assert_eq!(identity.len(), 1);
        assert!(identity[0].symbol.forest.is_empty());

        let summands = schubert_forest_expansion(&p("21543")).unwrap();
        let parking_members: usize = summands
            .iter()
            .map(|s| {
                s.members
                    .iter()
                    .filter(|m| correspondence::is_parking_plain(m))
                    .count()
            })
            .sum();
        assert_eq!(parking_members, 4);
    }

    #[test]
    fn class_decomposition_resums() {
        for n in 2..=4usize {
            for w in crate::perm::symmetric_group(n) {
                let summands = schubert_forest_expansion(&w).unwrap();
                let mut total = Polynomial::zero();
                for s in summands {
                    total = total.plus(&bases::forest_polynomial(
                        &s.symbol.forest,
                        ForestRoute::Recurrence,
                    ));
                }
                assert_eq!(total, bases::schubert(&w).unwrap(), "w {}", w);
            }
        }
    }

    #[test]
    fn structure_constants_basics() {
        let single = IndexedForest::from_nvector(&NVector::from_slice(&[1]));
        let empty = IndexedForest::empty();
        let out =
            forest_structure_constants(&single, &empty, StructureRoute::Expansion).unwrap();
        assert_eq!(out, BTreeMap::from([(NVector::from_slice(&[1]), 1)]));
        let out =
            forest_structure_constants(&single, &empty, StructureRoute::Shuffle).unwrap();
        assert_eq!(out, BTreeMap::from([(NVector::from_slice(&[1]), 1)]));

        // x1 * x1 = the left-path polynomial on {1,2}
        for route in [StructureRoute::Expansion, StructureRoute::Shuffle] {
            let out = forest_structure_constants(&single, &single, route).unwrap();
            assert_eq!(out, BTreeMap::from([(NVector::from_slice(&[2]), 1)]), "{:?}", route);
        }
    }

    #[test]
    fn structure_constants_routes_agree() {
        let f1 = IndexedForest::from_nvector(&NVector::from_slice(&[0, 1]));
        for route in [StructureRoute::Expansion, StructureRoute::Shuffle] {
            let out = forest_structure_constants(&f1, &f1, route).unwrap();
            // (x1+x2)^2 expands with nonnegative coefficients
            assert!(out.values().all(|&v| v > 0), "{:?}", route);
            let other = forest_structure_constants(
                &f1,
                &f1,
                if route == StructureRoute::Expansion {
                    StructureRoute::Shuffle
                } else {
                    StructureRoute::Expansion
                },
            )
            .unwrap();
            assert_eq!(out, other);
        }
    }

    #[test]
    fn mixed_eulerian_example() {
        let me = multivariate_mixed_eulerian(&[0, 2, 0, 2]).unwrap();
        let expected = Polynomial::parse(
            "x1*x2*x3*x4 + 2*x1*x2^2*x3 + 2*x1*x2^2*x4 + x1^2*x2^2 + x1^2*x2*x3 + x1^2*x2*x4 + x1*x2^3",
        )
        .unwrap();
        assert_eq!(me.representative.poly, expected);
        assert_eq!(me.at_ones(), q_int(9));

        let (symbols, total) = mixed_eulerian_lbs_route(&[0, 2, 0, 2]).unwrap();
        assert_eq!(symbols.len(), 5);
        assert_eq!(total, expected);

        let (total_words, parked) = content_parking_count(&[0, 2, 0, 2]).unwrap();
        assert_eq!(total_words, 24);
        assert_eq!(parked, 9);
    }

    #[test]
    fn mixed_eulerian_pure_power() {
        // content (n-1, 0, ..., 0): the polynomial is already reduced
        let me = multivariate_mixed_eulerian(&[4, 0, 0, 0]).unwrap();
        let expected = Polynomial::parse("x1^4").unwrap();
        assert_eq!(me.representative.poly, expected);
        assert_eq!(me.at_ones(), q_int(1));
        assert!(multivariate_mixed_eulerian(&[1, 0]).is_err());
    }

    #[test]
    fn bilabeled_model() {
        let trees = bilabeled_trees(&[0, 2, 0, 2]).unwrap();
        assert_eq!(trees.len(), 5);
        assert_eq!(content_leaf_labels(&[0, 2, 0, 2]), vec![1, 2, 5, 6, 9]);

        // the relabeling hits exactly the letter-labeled enumeration
        let (symbols, _) = mixed_eulerian_lbs_route(&[0, 2, 0, 2]).unwrap();
        let mut images: Vec<PSymbol> = trees
            .iter()
            .map(|t| bilabeled_to_lbs(t, &[0, 2, 0, 2]).unwrap())
            .collect();
        images.sort();
        let mut expected = symbols.clone();
        expected.sort();
        assert_eq!(images, expected);

        // pure-power content: leaves 1, n+1, n+2, ...
        let trees = bilabeled_trees(&[4, 0, 0, 0]).unwrap();
        assert_eq!(content_leaf_labels(&[4, 0, 0, 0]), vec![1, 6, 7, 8, 9]);
        assert_eq!(trees.len() as u64, 1);
    }

    #[test]
    fn tableau_descents() {
        assert_eq!(syt_descent_count(&[1], 1), 1);
        // two tableaux of shape (2,1), both with one descent
        assert_eq!(syt_descent_count(&[2, 1], 1), 0);
        assert_eq!(syt_descent_count(&[2, 1], 2), 2);
        let total: u64 = (1..=3).map(|m| syt_descent_count(&[2, 1], m)).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn grassmannian_coefficients_match_tableaux() {
        for w in crate::perm::coefficient_index_set(5) {
            let Some(m) = grassmannian_descent(&w) else { continue };
            let shape = code_partition(&w);
            let expected = syt_descent_count(&shape, m);
            let report = a_w(&w, AwRoute::Parking).unwrap();
            assert_eq!(report.value, expected, "w {}", w);
        }
    }

    #[test]
    fn shifted_identity_for_interval_letters() {
        // letters {1,2,3} form an initial interval here, so the plain
        // evaluation agrees with both sides as well
        let w = p("3142");
        assert!(letters_initial_interval(&w));
        for j in 0..=2usize {
            let (lhs, rhs) = shifted_coefficient_identity(&w, j).unwrap();
            assert_eq!(lhs, rhs, "j = {}", j);
            let literal = bases::schubert(&w.shifted(j as i32)).unwrap();
            let ones = literal.at_ones(literal.max_variable().max(1) as usize);
            assert_eq!(ones, rhs, "literal j = {}", j);
        }

        // a case where the binomial sum genuinely has two terms
        let w = p("321");
        assert!(letters_initial_interval(&w));
        let (lhs, rhs) = shifted_coefficient_identity(&w, 1).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, q_int(5));
    }

    #[test]
    fn shifted_identity_headline() {
        let w = p("21543");
        assert!(!letters_initial_interval(&w));
        for j in 0..=2usize {
            let (lhs, rhs) = shifted_coefficient_identity(&w, j).unwrap();
            assert_eq!(lhs, rhs, "j = {}", j);
        }
    }
}
