//! The polynomial families: slide polynomials of words and vectors,
//! fundamental quasisymmetric polynomials, Schubert polynomials, forest
//! polynomials by three independent routes, dual forest polynomials, and
//! greedy expansion of arbitrary polynomials in any of the graded bases.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num::Zero;

use crate::error::{Error, Result};
use crate::forest::{self, IndexedForest, LbsLabeling};
use crate::nvector::{Composition, NVector};
use crate::perm::Permutation;
use crate::poly::{q_int, revlex_cmp, Polynomial, Q};
use crate::word::{to_barred, Letter};

/// Sum of `x_{a_1}...x_{a_k}` over weakly decreasing sequences bounded by
/// the letter values, with a strict drop wherever the word strictly
/// descends. The empty word gives 1; the sum may be empty.
pub fn slide_of_barred(word: &[Letter]) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut current = Vec::with_capacity(word.len());
    fn rec(
        word: &[Letter],
        at: usize,
        prev: Option<i32>,
        current: &mut Vec<i32>,
        out: &mut Polynomial,
    ) {
        if at == word.len() {
            let mut exp = NVector::zero();
            for &a in current.iter() {
                exp.set(a, exp.get(a) + 1);
            }
            out.add_term(exp, q_int(1));
            return;
        }
        let mut ub = word[at].val;
        if let Some(p) = prev {
            let strict = word[at - 1] > word[at];
            ub = ub.min(if strict { p - 1 } else { p });
        }
        for a in 1..=ub {
            current.push(a);
            rec(word, at + 1, Some(a), current, out);
            current.pop();
        }
    }
    rec(word, 0, None, &mut current, &mut out);
    out
}

/// Slide polynomial of a plain word: ties between equal letters are broken
/// left to right, which forces no strict drop between equal neighbors.
pub fn slide_of_word(word: &[i32]) -> Polynomial {
    slide_of_barred(&to_barred(word))
}

/// Slide polynomial indexed by a vector: the unique nonincreasing word
/// with `c_i` copies of `i`.
pub fn slide_of_nvector(c: &NVector) -> Polynomial {
    let mut word = Vec::new();
    for (i, m) in c.iter().collect::<Vec<_>>().into_iter().rev() {
        for _ in 0..m {
            word.push(i);
        }
    }
    slide_of_word(&word)
}

/// Fundamental quasisymmetric polynomial in `n` variables: the forest
/// polynomial of the indexed linear tree with vector `(0^(n-len), alpha)`.
/// Empty when `n` is smaller than the number of parts.
pub fn fundamental_qsym(alpha: &Composition, n: usize) -> Polynomial {
    if alpha.is_empty() {
        return Polynomial::one();
    }
    if n < alpha.len() {
        return Polynomial::zero();
    }
    let j = n - alpha.len();
    let mut c = NVector::zero();
    for (k, &part) in alpha.parts().iter().enumerate() {
        c.set((j + k + 1) as i32, part);
    }
    forest_polynomial(&IndexedForest::from_nvector(&c), ForestRoute::Recurrence)
}

/// Schubert polynomial: the sum of slide polynomials over the reduced
/// words of the inverse permutation.
pub fn schubert(w: &Permutation) -> Result<Polynomial> {
    if !w.positively_supported() {
        return Err(Error::NegativeSupport);
    }
    let mut out = Polynomial::zero();
    for word in w.inverse().reduced_words() {
        out = out.plus(&slide_of_word(&word));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestRoute {
    /// Enumerate labelings bounded by the canonical flag.
    Definition,
    /// Sum slide polynomials over the linear extensions.
    Slides,
    /// Shift-and-trim recurrence with a shared memo table.
    Recurrence,
}

/// The forest polynomial of `F`.
pub fn forest_polynomial(f: &IndexedForest, route: ForestRoute) -> Polynomial {
    match route {
        ForestRoute::Definition => {
            let flag = forest::canonical_flag(f);
            flagged_enumeration(f, &flag)
        }
        ForestRoute::Slides => {
            let flag = forest::canonical_flag(f);
            slides_route(f, &flag)
        }
        ForestRoute::Recurrence => recurrence_route(&f.to_nvector()),
    }
}

/// The forest polynomial computed from an arbitrary LBS flag; equal to the
/// canonical one for every valid flag.
pub fn flagged_forest_polynomial(f: &IndexedForest, flag: &LbsLabeling) -> Result<Polynomial> {
    if !forest::is_lbs(f, flag) {
        return Err(Error::NotLbs);
    }
    Ok(flagged_enumeration(f, flag))
}

/// Labelings weakly increasing down left edges, strictly increasing down
/// right edges, bounded above by the flag values.
fn flagged_enumeration(f: &IndexedForest, flag: &LbsLabeling) -> Polynomial {
    let info = f.info();
    // parents before children
    let mut order: Vec<i32> = Vec::new();
    let mut stack: Vec<i32> = f.roots();
    while let Some(v) = stack.pop() {
        order.push(v);
        let ni = &info[&v];
        if let Some(l) = ni.left {
            stack.push(l);
        }
        if let Some(r) = ni.right {
            stack.push(r);
        }
    }
    let mut out = Polynomial::zero();
    let mut current: BTreeMap<i32, i32> = BTreeMap::new();
    fn rec(
        order: &[i32],
        at: usize,
        info: &BTreeMap<i32, forest::NodeInfo>,
        flag: &BTreeMap<i32, Letter>,
        current: &mut BTreeMap<i32, i32>,
        out: &mut Polynomial,
    ) {
        if at == order.len() {
            let mut exp = NVector::zero();
            for &v in current.values() {
                exp.set(v, exp.get(v) + 1);
            }
            out.add_term(exp, q_int(1));
            return;
        }
        let v = order[at];
        let ni = &info[&v];
        let ub = flag[&v].val;
        let lb = match ni.parent {
            None => 1,
            Some(p) => {
                let pv = current[&p];
                if info[&p].left == Some(v) {
                    pv // weakly increasing down a left edge
                } else {
                    pv + 1 // strictly increasing down a right edge
                }
            }
        };
        for k in lb..=ub {
            current.insert(v, k);
            rec(order, at + 1, info, flag, current, out);
        }
        current.remove(&v);
    }
    rec(&order, 0, &info, flag, &mut current, &mut out);
    out
}

fn slides_route(f: &IndexedForest, flag: &LbsLabeling) -> Polynomial {
    let mut out = Polynomial::zero();
    for ext in forest::linear_extensions(f) {
        let mut by_time: Vec<(u32, i32)> = ext.iter().map(|(&v, &t)| (t, v)).collect();
        by_time.sort();
        let word: Vec<Letter> = by_time.into_iter().map(|(_, v)| flag[&v]).collect();
        out = out.plus(&slide_of_barred(&word));
    }
    out
}

static RECURRENCE_MEMO: Mutex<BTreeMap<NVector, Polynomial>> = Mutex::new(BTreeMap::new());

/// Product over the constituent trees of the per-tree recurrence. The
/// shift-and-trim recurrence only holds for a single tree: across separate
/// trees the strict bounds at terminal nodes do not propagate, so forests
/// are handled through the multiplicative property.
fn recurrence_route(c: &NVector) -> Polynomial {
    if c.is_zero() {
        return Polynomial::one();
    }
    if c.min_support().unwrap() < 1 {
        return Polynomial::zero();
    }
    let f = IndexedForest::from_nvector(c);
    let mut out = Polynomial::one();
    for t in f.trees() {
        let tree = IndexedForest::single(t.start, t.shape.clone());
        out = out.times(&tree_recurrence(&tree.to_nvector()));
        if out.is_zero() {
            break;
        }
    }
    out
}

/// `B_T = B_(shift down)(T) + sum over terminal v of x_(rho(v)) B_(trim_v T)`
/// for a single indexed tree, with a shared memo table.
fn tree_recurrence(c: &NVector) -> Polynomial {
    if c.is_zero() {
        return Polynomial::one();
    }
    if c.min_support().unwrap() < 1 {
        return Polynomial::zero();
    }
    if let Some(hit) = RECURRENCE_MEMO.lock().unwrap().get(c) {
        return hit.clone();
    }
    let f = IndexedForest::from_nvector(c);
    debug_assert_eq!(f.trees().len(), 1);
    let info = f.info();
    let mut out = tree_recurrence(&f.shifted(-1).to_nvector());
    for v in f.terminal_nodes() {
        let trimmed = f.trim(v).expect("terminal node");
        let x = Polynomial::variable(info[&v].rho);
        out = out.plus(&x.times(&tree_recurrence(&trimmed.to_nvector())));
    }
    RECURRENCE_MEMO.lock().unwrap().insert(c.clone(), out.clone());
    out
}

/// Dual forest polynomial in `n` variables: labelings with every value
/// strictly above the canonical flag, strictly decreasing down left edges
/// and weakly decreasing down right edges. Identically zero as soon as the
/// support leaves `[n-1]`.
pub fn dual_forest_polynomial(f: &IndexedForest, n: usize) -> Polynomial {
    let info = f.info();
    let mut order: Vec<i32> = Vec::new();
    let mut stack: Vec<i32> = f.roots();
    while let Some(v) = stack.pop() {
        order.push(v);
        let ni = &info[&v];
        if let Some(l) = ni.left {
            stack.push(l);
        }
        if let Some(r) = ni.right {
            stack.push(r);
        }
    }
    let mut out = Polynomial::zero();
    let mut current: BTreeMap<i32, i32> = BTreeMap::new();
    fn rec(
        order: &[i32],
        at: usize,
        n: i32,
        info: &BTreeMap<i32, forest::NodeInfo>,
        current: &mut BTreeMap<i32, i32>,
        out: &mut Polynomial,
    ) {
        if at == order.len() {
            let mut exp = NVector::zero();
            for &v in current.values() {
                exp.set(v, exp.get(v) + 1);
            }
            out.add_term(exp, q_int(1));
            return;
        }
        let v = order[at];
        let ni = &info[&v];
        let lb = ni.rho + 1;
        let ub = match ni.parent {
            None => n,
            Some(p) => {
                let pv = current[&p];
                if info[&p].left == Some(v) {
                    pv - 1 // strictly decreasing down a left edge
                } else {
                    pv // weakly decreasing down a right edge
                }
            }
        };
        for k in lb..=ub {
            current.insert(v, k);
            rec(order, at + 1, n, info, current, out);
        }
        current.remove(&v);
    }
    rec(&order, 0, n as i32, &info, &mut current, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Forest,
    Slide,
    Schubert,
    Monomial,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Basis::Forest => "forest",
            Basis::Slide => "slide",
            Basis::Schubert => "schubert",
            Basis::Monomial => "monomial",
        };
        write!(f, "{}", name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElementId {
    Forest(NVector),
    Slide(NVector),
    Schubert(Permutation),
    Monomial(NVector),
}

impl fmt::Display for BasisElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElementId::Forest(c) | BasisElementId::Slide(c) | BasisElementId::Monomial(c) => {
                let dense: Vec<String> =
                    c.to_dense().iter().map(|v| v.to_string()).collect();
                write!(f, "({})", dense.join(","))
            }
            BasisElementId::Schubert(w) => write!(f, "{}", w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coefficients: BTreeMap<BasisElementId, Q>,
}

impl BasisExpansion {
    /// Re-sums the expansion.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (id, q) in &self.coefficients {
            let b = basis_element_polynomial(id);
            out = out.plus(&b.scaled(q));
        }
        out
    }

    /// Entries sorted descending by the term order on their indexing
    /// vector (Schubert ids sort by code).
    pub fn sorted_entries(&self) -> Vec<(BasisElementId, Q)> {
        let mut entries: Vec<(BasisElementId, Q)> = self
            .coefficients
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        entries.sort_by(|a, b| revlex_cmp(&id_vector(&b.0), &id_vector(&a.0)));
        entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .sorted_entries()
            .into_iter()
            .map(|(id, q)| {
                let key = match &id {
                    BasisElementId::Schubert(w) => serde_json::json!(w.one_line()),
                    BasisElementId::Forest(c)
                    | BasisElementId::Slide(c)
                    | BasisElementId::Monomial(c) => serde_json::json!(c.to_dense()),
                };
                serde_json::json!({
                    "id": key,
                    "num": big_json(q.numer()),
                    "den": big_json(q.denom()),
                })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.to_string(), "coefficients": entries })
    }
}

fn big_json(v: &num::BigInt) -> serde_json::Value {
    serde_json::Value::Number(serde_json::Number::from_string_unchecked(v.to_string()))
}

fn id_vector(id: &BasisElementId) -> NVector {
    match id {
        BasisElementId::Forest(c) | BasisElementId::Slide(c) | BasisElementId::Monomial(c) => {
            c.clone()
        }
        BasisElementId::Schubert(w) => w.lehmer_code(),
    }
}

fn basis_element_polynomial(id: &BasisElementId) -> Polynomial {
    match id {
        BasisElementId::Forest(c) => recurrence_route(c),
        BasisElementId::Slide(c) => slide_of_nvector(c),
        BasisElementId::Schubert(w) => schubert(w).expect("positive support"),
        BasisElementId::Monomial(c) => Polynomial::monomial(c.clone(), q_int(1)),
    }
}

/// Expands `f` exactly in the requested graded basis by eliminating the
/// leading term; each step strictly lowers it, so this terminates.
pub fn expand_in_basis(f: &Polynomial, basis: Basis) -> Result<BasisExpansion> {
    for (e, _) in f.terms() {
        if !e.positively_supported() {
            return Err(Error::Invalid(
                "expansion requires positively indexed variables".into(),
            ));
        }
    }
    let mut coefficients = BTreeMap::new();
    for (_, mut component) in f.homogeneous_components() {
        while !component.is_zero() {
            let lead = component.leading_exponent()?;
            if std::env::var("FORESTCALC_TRACE_EXPAND").is_ok() {
                eprintln!("lead {:?} terms {}", lead, component.num_terms());
            }
            let coef = component.coefficient(&lead);
            let id = match basis {
                Basis::Forest => BasisElementId::Forest(lead.clone()),
                Basis::Slide => BasisElementId::Slide(lead.clone()),
                Basis::Schubert => BasisElementId::Schubert(Permutation::from_lehmer(&lead)),
                Basis::Monomial => BasisElementId::Monomial(lead.clone()),
            };
            let b = basis_element_polynomial(&id);
            debug_assert_eq!(b.leading_exponent().unwrap(), lead);
            component = component.minus(&b.scaled(&coef));
            *coefficients.entry(id).or_insert_with(Q::zero) += coef;
        }
    }
    coefficients.retain(|_, v: &mut Q| !v.is_zero());
    Ok(BasisExpansion { basis, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::forests_within;

    fn t0() -> IndexedForest {
        IndexedForest::from_nvector(&NVector::from_slice(&[0, 2, 0, 1]))
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn slide_examples() {
        assert_eq!(
            slide_of_nvector(&NVector::from_slice(&[1, 0, 2])),
            poly("x1*x3^2 + x1*x2^2 + x1*x2*x3")
        );
        assert_eq!(slide_of_word(&[4, 2, 2]), slide_of_word(&[4, 2, 3]));
        assert!(slide_of_word(&[1, 2, 1]).is_zero());
        assert_eq!(slide_of_word(&[]), Polynomial::one());
        assert_eq!(slide_of_word(&[2]), poly("x1 + x2"));
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(
            fundamental_qsym(&Composition::new(vec![2]), 2),
            poly("x1^2 + x1*x2 + x2^2")
        );
        assert_eq!(
            fundamental_qsym(&Composition::new(vec![1, 1]), 3),
            poly("x1*x2 + x1*x3 + x2*x3")
        );
        assert_eq!(fundamental_qsym(&Composition::new(vec![]), 7), Polynomial::one());
        assert!(fundamental_qsym(&Composition::new(vec![1, 1]), 1).is_zero());
    }

    #[test]
    fn schubert_examples() {
        let w = Permutation::parse("14253").unwrap();
        let expected = poly(
            "x2^2*x4 + x2^2*x3 + x1^2*x4 + x1^2*x3 + x1^2*x2 + x1*x2*x4 + x1*x2*x3 + x1*x2^2",
        );
        assert_eq!(schubert(&w).unwrap(), expected);
        assert_eq!(schubert(&Permutation::identity()).unwrap(), Polynomial::one());
        assert_eq!(schubert(&Permutation::parse("132").unwrap()).unwrap(), poly("x1 + x2"));
        let negative = Permutation::from_window(0, vec![1, 0]).unwrap();
        assert!(matches!(schubert(&negative), Err(Error::NegativeSupport)));
        // leading exponent is the code
        let lead = schubert(&w).unwrap().leading_exponent().unwrap();
        assert_eq!(lead, w.lehmer_code());
    }

    #[test]
    fn forest_polynomial_t0() {
        let expected = poly(
            "x2^2*x4 + x1*x2*x4 + x1^2*x4 + x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2 + x1*x2^2",
        );
        for route in [ForestRoute::Definition, ForestRoute::Slides, ForestRoute::Recurrence] {
            assert_eq!(forest_polynomial(&t0(), route), expected, "{:?}", route);
        }
        assert_eq!(
            forest_polynomial(&t0().shifted(-1), ForestRoute::Definition),
            poly("x1^2*x2 + x1^2*x3")
        );
        // support touching 0 kills the polynomial
        assert!(forest_polynomial(&t0().shifted(-2), ForestRoute::Definition).is_zero());
        assert!(forest_polynomial(&t0().shifted(-2), ForestRoute::Slides).is_zero());
        assert!(forest_polynomial(&t0().shifted(-2), ForestRoute::Recurrence).is_zero());
    }

    #[test]
    fn disjoint_trees_multiply() {
        // {1} u {3}: the product form, not the naive trim sum
        let f = IndexedForest::from_nvector(&NVector::from_slice(&[1, 0, 1]));
        let expected = poly("x1^2 + x1*x2 + x1*x3");
        for route in [ForestRoute::Definition, ForestRoute::Slides, ForestRoute::Recurrence] {
            assert_eq!(forest_polynomial(&f, route), expected, "{:?}", route);
        }
    }

    #[test]
    fn tree_trim_identity() {
        // for a single tree the polynomial splits as the shifted tree plus
        // one trim term per terminal node
        for start in 1..=4 {
            for len in 1..=(5 - start) as usize {
                for shape in crate::forest::Shape::enumerate(len) {
                    let t = IndexedForest::single(start, shape);
                    let info = t.info();
                    let mut rhs =
                        forest_polynomial(&t.shifted(-1), ForestRoute::Definition);
                    for v in t.terminal_nodes() {
                        let x = Polynomial::variable(info[&v].rho);
                        let trimmed = forest_polynomial(
                            &t.trim(v).unwrap(),
                            ForestRoute::Definition,
                        );
                        rhs = rhs.plus(&x.times(&trimmed));
                    }
                    assert_eq!(
                        forest_polynomial(&t, ForestRoute::Definition),
                        rhs,
                        "tree {}",
                        t
                    );
                }
            }
        }
    }

    #[test]
    fn forest_polynomial_routes_agree() {
        for f in forests_within(1, 4, 4) {
            let a = forest_polynomial(&f, ForestRoute::Definition);
            let b = forest_polynomial(&f, ForestRoute::Slides);
            let c = forest_polynomial(&f, ForestRoute::Recurrence);
            assert_eq!(a, b, "forest {}", f);
            assert_eq!(a, c, "forest {}", f);
        }
    }

    #[test]
    fn forest_polynomial_multiplicative() {
        for f in forests_within(1, 5, 4) {
            let whole = forest_polynomial(&f, ForestRoute::Recurrence);
            let product = f
                .trees()
                .iter()
                .map(|t| {
                    forest_polynomial(
                        &IndexedForest::single(t.start, t.shape.clone()),
                        ForestRoute::Recurrence,
                    )
                })
                .fold(Polynomial::one(), |acc, p| acc.times(&p));
            assert_eq!(whole, product, "forest {}", f);
        }
    }

    #[test]
    fn flag_independence() {
        for f in forests_within(1, 4, 3) {
            let reference = forest_polynomial(&f, ForestRoute::Definition);
            for flag in forest::lbs_labelings_unrestricted(&f) {
                assert_eq!(
                    flagged_forest_polynomial(&f, &flag).unwrap(),
                    reference,
                    "forest {} flag {:?}",
                    f,
                    flag
                );
            }
        }
        // a non-LBS flag errors
        let f = t0();
        let mut bad = forest::canonical_flag(&f);
        bad.insert(3, Letter::new(9, 1));
        assert!(matches!(flagged_forest_polynomial(&f, &bad), Err(Error::NotLbs)));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_forest_polynomial(&IndexedForest::empty(), 3), Polynomial::one());
        let single = IndexedForest::from_nvector(&NVector::from_slice(&[1]));
        assert_eq!(dual_forest_polynomial(&single, 2), poly("x2"));
        // support outside [n-1] kills it
        assert!(dual_forest_polynomial(&t0(), 4).is_zero());
        assert!(!dual_forest_polynomial(&t0(), 5).is_zero());
    }

    #[test]
    fn expansion_examples() {
        let w = Permutation::parse("14253").unwrap();
        let e = expand_in_basis(&schubert(&w).unwrap(), Basis::Forest).unwrap();
        let mut expected = BTreeMap::new();
        expected.insert(
            BasisElementId::Forest(NVector::from_slice(&[0, 2, 0, 1])),
            q_int(1),
        );
        assert_eq!(e.coefficients, expected);

        let e = expand_in_basis(
            &forest_polynomial(&t0(), ForestRoute::Recurrence),
            Basis::Slide,
        )
        .unwrap();
        let mut expected = BTreeMap::new();
        expected.insert(BasisElementId::Slide(NVector::from_slice(&[0, 2, 0, 1])), q_int(1));
        expected.insert(BasisElementId::Slide(NVector::from_slice(&[1, 2])), q_int(1));
        assert_eq!(e.coefficients, expected);

        let e = expand_in_basis(&Polynomial::variable(1), Basis::Forest).unwrap();
        let mut expected = BTreeMap::new();
        expected.insert(BasisElementId::Forest(NVector::from_slice(&[1])), q_int(1));
        assert_eq!(e.coefficients, expected);
    }

    #[test]
    fn expansion_round_trip() {
        let f = poly("3*x1^2*x2 - 1/2*x2*x3 + x1 + 7");
        for basis in [Basis::Forest, Basis::Slide, Basis::Schubert, Basis::Monomial] {
            eprintln!("expanding in {:?}", basis);
            let e = expand_in_basis(&f, basis).unwrap();
            assert_eq!(e.to_polynomial(), f, "{:?}", basis);
        }
    }

    #[test]
    fn slide_expansion_counts_extensions() {
        // forest polynomials expand into slides with all coefficients 1,
        // as many terms as there are linear extensions with distinct words
        for f in forests_within(1, 4, 4) {
            let p = forest_polynomial(&f, ForestRoute::Recurrence);
            let e = expand_in_basis(&p, Basis::Slide).unwrap();
            for q in e.coefficients.values() {
                assert_eq!(q, &q_int(1), "forest {}", f);
            }
        }
    }
}
