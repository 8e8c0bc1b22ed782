//! Reduction modulo the ideal generated by positive-degree quasisymmetric
//! polynomials in `x_1..x_n`, onto the span of the ballot-bounded
//! monomials; divided symmetrization; and the sign-reversing involution on
//! labeled lower-ideal pairs that proves the dual expansion.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use num::{One, Zero};

use crate::bases::{self, Basis, BasisElementId, ForestRoute};
use crate::error::{Error, Result};
use crate::forest::IndexedForest;
use crate::nvector::{self, Composition, NVector};
use crate::perm;
use crate::poly::{q_int, revlex_cmp, Polynomial, Q};

/// Monomial quasisymmetric polynomial in `n` variables.
pub fn monomial_qsym(alpha: &Composition, n: usize) -> Polynomial {
    let k = alpha.len();
    if k == 0 {
        return Polynomial::one();
    }
    if k > n {
        return Polynomial::zero();
    }
    let mut out = Polynomial::zero();
    let mut positions = Vec::with_capacity(k);
    fn rec(
        alpha: &[u32],
        n: usize,
        from: usize,
        positions: &mut Vec<usize>,
        out: &mut Polynomial,
    ) {
        if positions.len() == alpha.len() {
            let exp = NVector::from_entries(
                positions.iter().zip(alpha.iter()).map(|(&i, &a)| (i as i32, a)),
            );
            out.add_term(exp, q_int(1));
            return;
        }
        for i in from..=n - (alpha.len() - positions.len() - 1) {
            positions.push(i);
            rec(alpha, n, i + 1, positions, out);
            positions.pop();
        }
    }
    rec(alpha.parts(), n, 1, &mut positions, &mut out);
    out
}

/// A polynomial all of whose exponents satisfy the ballot bound for `n`;
/// the canonical representative modulo the quasisymmetric ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbbRepresentative {
    pub poly: Polynomial,
    pub n: usize,
}

impl AbbRepresentative {
    fn checked(poly: Polynomial, n: usize) -> Self {
        for (e, _) in poly.terms() {
            assert!(
                nvector::is_abb(e, n),
                "representative exponent {:?} escapes the ballot set for n = {}",
                e,
                n
            );
        }
        AbbRepresentative { poly, n }
    }

    pub fn at_ones(&self) -> Q {
        self.poly.at_ones(self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionRoute {
    /// Expand in the forest basis and delete the terms whose support
    /// leaves `[n-1]`.
    Forest,
    /// Row-reduce against the ideal generators degree by degree.
    Linear,
}

fn check_variables(f: &Polynomial, n: usize) -> Result<()> {
    let max = f.max_variable();
    if max > n as i32 {
        return Err(Error::VariableOutOfRange { var: max, max: n as i32 });
    }
    for (e, _) in f.terms() {
        if !e.positively_supported() {
            return Err(Error::Invalid("variables must be positively indexed".into()));
        }
    }
    Ok(())
}

/// The representative of `f` modulo the quasisymmetric ideal in
/// `x_1..x_n`, expressed in ballot-bounded monomials.
pub fn reduce_mod_qsym(f: &Polynomial, n: usize, route: ReductionRoute) -> Result<AbbRepresentative> {
    check_variables(f, n)?;
    match route {
        ReductionRoute::Forest => {
            let expansion = bases::expand_in_basis(f, Basis::Forest)?;
            let mut kept = Polynomial::zero();
            for (id, coef) in &expansion.coefficients {
                let BasisElementId::Forest(c) = id else { unreachable!() };
                let forest = IndexedForest::from_nvector(c);
                let supp = forest.support();
                if supp.iter().all(|&i| 1 <= i && i <= n as i32 - 1) {
                    let b = bases::forest_polynomial(&forest, ForestRoute::Recurrence);
                    kept = kept.plus(&b.scaled(coef));
                }
            }
            Ok(AbbRepresentative::checked(kept, n))
        }
        ReductionRoute::Linear => {
            let mut out = Polynomial::zero();
            for (d, component) in f.homogeneous_components() {
                out = out.plus(&reduce_component_linear(&component, n, d));
            }
            Ok(AbbRepresentative::checked(out, n))
        }
    }
}

/// Echelonized ideal generators for one `(n, degree)`: rows keyed by their
/// pivot monomial, mutually reduced, pivot coefficient 1. Pivots prefer
/// monomials outside the ballot set (ties by the term order), which forces
/// remainders into the ballot span.
struct Echelon {
    rows: BTreeMap<NVector, Polynomial>,
}

static ECHELON_CACHE: Mutex<BTreeMap<(usize, usize), &'static Echelon>> =
    Mutex::new(BTreeMap::new());

fn pivot_of(v: &Polynomial, n: usize) -> NVector {
    v.terms()
        .map(|(e, _)| e)
        .max_by(|a, b| {
            let key_a = (!nvector::is_abb(a, n), a);
            let key_b = (!nvector::is_abb(b, n), b);
            // non-ballot monomials beat ballot ones; ties by term order
            key_a
                .0
                .cmp(&key_b.0)
                .then_with(|| revlex_cmp(key_a.1, key_b.1))
        })
        .expect("nonzero row")
        .clone()
}

fn echelon_for(n: usize, d: usize) -> &'static Echelon {
    if let Some(&hit) = ECHELON_CACHE.lock().unwrap().get(&(n, d)) {
        return hit;
    }
    let built: &'static Echelon = Box::leak(Box::new(build_echelon(n, d)));
    let mut cache = ECHELON_CACHE.lock().unwrap();
    *cache.entry((n, d)).or_insert(built)
}

fn build_echelon(n: usize, d: usize) -> Echelon {
    let mut echelon = Echelon { rows: BTreeMap::new() };
    if d == 0 {
        return echelon;
    }
    let mut generators = Vec::new();
    for m in 1..=d {
        for alpha in compositions_of(m, n) {
            let q = monomial_qsym(&Composition::new(alpha), n);
            for b in monomials_of_degree(d - m, n) {
                generators.push(q.times(&Polynomial::monomial(b, q_int(1))));
            }
        }
    }
    for g in generators {
        let mut v = reduce_against(&echelon, g);
        if v.is_zero() {
            continue;
        }
        let pivot = pivot_of(&v, n);
        assert!(
            !nvector::is_abb(&pivot, n),
            "ideal row reduced into the ballot span"
        );
        let lead = v.coefficient(&pivot);
        v = v.scaled(&lead.recip());
        // clear the new pivot from existing rows
        let updates: Vec<(NVector, Q)> = echelon
            .rows
            .iter()
            .filter_map(|(p, row)| {
                let c = row.coefficient(&pivot);
                if c.is_zero() {
                    None
                } else {
                    Some((p.clone(), c))
                }
            })
            .collect();
        for (p, c) in updates {
            let reduced = echelon.rows[&p].minus(&v.scaled(&c));
            echelon.rows.insert(p, reduced);
        }
        echelon.rows.insert(pivot, v);
    }
    echelon
}

fn reduce_against(echelon: &Echelon, mut v: Polynomial) -> Polynomial {
    loop {
        let hit = v
            .terms()
            .find(|(e, _)| echelon.rows.contains_key(*e))
            .map(|(e, c)| (e.clone(), c.clone()));
        match hit {
            None => return v,
            Some((pivot, coef)) => {
                v = v.minus(&echelon.rows[&pivot].scaled(&coef));
            }
        }
    }
}

fn reduce_component_linear(component: &Polynomial, n: usize, d: usize) -> Polynomial {
    reduce_against(echelon_for(n, d), component.clone())
}

/// Dimension of the quotient in one degree: the number of non-pivot
/// monomials; must match the count of ballot vectors of that weight.
pub fn quotient_dimension(n: usize, d: usize) -> (usize, usize) {
    let echelon = echelon_for(n, d);
    let total = monomials_of_degree(d, n).len();
    let from_rows = total - echelon.rows.len();
    let expected = nvector::abb_set(n)
        .iter()
        .filter(|c| c.iter().sum::<u32>() as usize == d)
        .count();
    (from_rows, expected)
}

fn compositions_of(m: usize, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: usize, max_len: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        if current.len() == max_len {
            return;
        }
        for part in 1..=rest {
            current.push(part as u32);
            rec(rest - part, max_len, current, out);
            current.pop();
        }
    }
    rec(m, max_len, &mut current, &mut out);
    out
}

fn monomials_of_degree(d: usize, n: usize) -> Vec<NVector> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(NVector::zero());
        }
        return out;
    }
    let mut current = vec![0u32; n];
    fn rec(d: usize, at: usize, current: &mut Vec<u32>, out: &mut Vec<NVector>) {
        if at + 1 == current.len() {
            current[at] = d as u32;
            out.push(NVector::from_slice(current));
            return;
        }
        for v in 0..=d {
            current[at] = v as u32;
            rec(d - v, at + 1, current, out);
        }
        current[at] = 0;
    }
    rec(d, 0, &mut current, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsRoute {
    /// Evaluate the symmetrized rational function at a generic point.
    Direct,
    /// Reduce modulo the quasisymmetric ideal and set all variables to 1.
    Quotient,
}

/// Divided symmetrization of a homogeneous polynomial of degree `n-1`.
pub fn divided_symmetrization(f: &Polynomial, n: usize, route: DsRoute) -> Result<Q> {
    check_variables(f, n)?;
    if !f.is_homogeneous() || (!f.is_zero() && f.degree() != n - 1) {
        return Err(Error::DegreeMustBeNMinusOne { degree: f.degree(), n });
    }
    match route {
        DsRoute::Direct => {
            let point: Vec<Q> = (1..=n as i32).map(|i| pow_q(3, i)).collect();
            ds_at_point(f, n, &point)
        }
        DsRoute::Quotient => Ok(reduce_mod_qsym(f, n, ReductionRoute::Forest)?.at_ones()),
    }
}

fn pow_q(base: i64, e: i32) -> Q {
    let mut out = Q::one();
    for _ in 0..e {
        out *= q_int(base);
    }
    out
}

/// The symmetrized sum evaluated at one point with distinct coordinates.
/// Constant in the point exactly when the degree precondition holds.
pub fn ds_at_point(f: &Polynomial, n: usize, point: &[Q]) -> Result<Q> {
    let mut total = Q::zero();
    for w in perm::symmetric_group(n) {
        let permuted: Vec<Q> = (1..=n as i32)
            .map(|i| point[(w.apply(i) - 1) as usize].clone())
            .collect();
        let mut denom = Q::one();
        for i in 0..n - 1 {
            denom *= permuted[i].clone() - permuted[i + 1].clone();
        }
        total += f.eval(&permuted)? / denom;
    }
    Ok(total)
}

/// A lower order ideal of the forest poset (roots on top) together with a
/// labeling obeying increasing conditions on the complement and strict
/// flagged decreasing conditions on the ideal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompatiblePair {
    pub forest: IndexedForest,
    pub lower: BTreeSet<i32>,
    pub labels: BTreeMap<i32, u32>,
    pub n: usize,
}

impl CompatiblePair {
    pub fn new(
        forest: IndexedForest,
        lower: BTreeSet<i32>,
        labels: BTreeMap<i32, u32>,
        n: usize,
    ) -> Result<Self> {
        let pair = CompatiblePair { forest, lower, labels, n };
        pair.validate()?;
        Ok(pair)
    }

    fn validate(&self) -> Result<()> {
        let info = self.forest.info();
        if self.labels.len() != info.len() || !info.keys().all(|k| self.labels.contains_key(k)) {
            return Err(Error::InvalidCompatiblePair("every node needs a label".into()));
        }
        for v in &self.lower {
            if !info.contains_key(v) {
                return Err(Error::InvalidCompatiblePair(format!("{} is not a node", v)));
            }
        }
        for (label, node) in &info {
            let val = self.labels[label];
            if val < 1 || val > self.n as u32 {
                return Err(Error::InvalidCompatiblePair(format!(
                    "label {} out of range 1..={}",
                    val, self.n
                )));
            }
            let in_l = self.lower.contains(label);
            // the ideal is downward closed: children of members are members
            if in_l {
                for child in [node.left, node.right].into_iter().flatten() {
                    if !self.lower.contains(&child) {
                        return Err(Error::InvalidCompatiblePair(
                            "ideal must contain the children of its members".into(),
                        ));
                    }
                }
                if val <= node.rho as u32 {
                    return Err(Error::InvalidCompatiblePair(
                        "ideal labels must exceed the flag".into(),
                    ));
                }
            }
            // edge conditions apply within each block only
            if let Some(l) = node.left {
                let child_in = self.lower.contains(&l);
                let lv = self.labels[&l];
                if in_l && child_in && lv >= val {
                    return Err(Error::InvalidCompatiblePair(
                        "ideal labels must strictly decrease down left edges".into(),
                    ));
                }
                if !in_l && !child_in && lv < val {
                    return Err(Error::InvalidCompatiblePair(
                        "complement labels must weakly increase down left edges".into(),
                    ));
                }
            }
            if let Some(r) = node.right {
                let child_in = self.lower.contains(&r);
                let rv = self.labels[&r];
                if in_l && child_in && rv > val {
                    return Err(Error::InvalidCompatiblePair(
                        "ideal labels must weakly decrease down right edges".into(),
                    ));
                }
                if !in_l && !child_in && rv <= val {
                    return Err(Error::InvalidCompatiblePair(
                        "complement labels must strictly increase down right edges".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> NVector {
        let mut exp = NVector::zero();
        for &v in self.labels.values() {
            exp.set(v as i32, exp.get(v as i32) + 1);
        }
        exp
    }

    pub fn sign(&self) -> i64 {
        if self.lower.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// No ideal and every label at most the flag.
    pub fn is_good(&self) -> bool {
        let info = self.forest.info();
        self.lower.is_empty()
            && info
                .values()
                .all(|node| self.labels[&node.label] <= node.rho as u32)
    }

    /// Nodes that can cross between the ideal and its complement without
    /// changing the weight: maximal ideal members whose label does not
    /// drop against the parent, and minimal complement members whose label
    /// exceeds the flag and does not rise against the children.
    pub fn exchangeable_nodes(&self) -> Vec<i32> {
        let info = self.forest.info();
        let mut out = Vec::new();
        for (label, node) in &info {
            let val = self.labels[label];
            if self.lower.contains(label) {
                let maximal = node.parent.map_or(true, |p| !self.lower.contains(&p));
                if !maximal {
                    continue;
                }
                let ok = match node.parent {
                    None => true,
                    Some(p) => {
                        let pv = self.labels[&p];
                        if info[&p].left == Some(*label) {
                            val >= pv
                        } else {
                            val > pv
                        }
                    }
                };
                if ok {
                    out.push(*label);
                }
            } else {
                let minimal = [node.left, node.right]
                    .into_iter()
                    .flatten()
                    .all(|c| self.lower.contains(&c));
                if !minimal || val <= node.rho as u32 {
                    continue;
                }
                let left_ok = node.left.map_or(true, |l| val > self.labels[&l]);
                let right_ok = node.right.map_or(true, |r| val >= self.labels[&r]);
                if left_ok && right_ok {
                    out.push(*label);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Toggles the first exchangeable node in inorder; the identity on
    /// good pairs. An involution that preserves the weight and reverses
    /// the sign away from the good set.
    pub fn psi(&self) -> CompatiblePair {
        if self.is_good() {
            return self.clone();
        }
        let v = *self
            .exchangeable_nodes()
            .first()
            .expect("pairs outside the good set have an exchangeable node");
        let mut lower = self.lower.clone();
        if !lower.remove(&v) {
            lower.insert(v);
        }
        let toggled = CompatiblePair {
            forest: self.forest.clone(),
            lower,
            labels: self.labels.clone(),
            n: self.n,
        };
        toggled
            .validate()
            .expect("toggling an exchangeable node stays compatible");
        toggled
    }
}

/// Every compatible pair on `F` with labels in `1..=n`.
pub fn all_compatible_pairs(forest: &IndexedForest, n: usize) -> Vec<CompatiblePair> {
    let info = forest.info();
    let nodes: Vec<i32> = info.keys().copied().collect();
    let mut out = Vec::new();
    // lower ideals: downward-closed subsets
    let mut ideals: Vec<BTreeSet<i32>> = Vec::new();
    for mask in 0..(1u32 << nodes.len()) {
        let set: BTreeSet<i32> = nodes
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let closed = set.iter().all(|v| {
            let node = &info[v];
            [node.left, node.right]
                .into_iter()
                .flatten()
                .all(|c| set.contains(&c))
        });
        if closed {
            ideals.push(set);
        }
    }
    for lower in ideals {
        let mut labels = BTreeMap::new();
        enumerate_labels(&nodes, 0, forest, &lower, n, &mut labels, &mut out);
    }
    out.sort();
    out
}

fn enumerate_labels(
    nodes: &[i32],
    at: usize,
    forest: &IndexedForest,
    lower: &BTreeSet<i32>,
    n: usize,
    labels: &mut BTreeMap<i32, u32>,
    out: &mut Vec<CompatiblePair>,
) {
    if at == nodes.len() {
        let pair = CompatiblePair {
            forest: forest.clone(),
            lower: lower.clone(),
            labels: labels.clone(),
            n,
        };
        if pair.validate().is_ok() {
            out.push(pair);
        }
        return;
    }
    let v = nodes[at];
    let lo = if lower.contains(&v) {
        forest.info()[&v].rho + 1
    } else {
        1
    };
    for val in lo..=n as i32 {
        if val < 1 {
            continue;
        }
        labels.insert(v, val as u32);
        enumerate_labels(nodes, at + 1, forest, lower, n, labels, out);
    }
    labels.remove(&v);
}

/// The signed weight sum over all compatible pairs with labels in
/// `1..=n`; equals the forest polynomial whenever its variables fit.
pub fn signed_pair_sum(forest: &IndexedForest, n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for pair in all_compatible_pairs(forest, n) {
        out.add_term(pair.weight(), q_int(pair.sign()));
    }
    out
}

/// Substitutes `x_i := -x_(n+1-i)`; pairs with forest reflection.
pub fn reflect_negate(f: &Polynomial, n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for (e, c) in f.terms() {
        let reflected = NVector::from_entries(e.iter().map(|(i, m)| (n as i32 + 1 - i, m)));
        let sign = if e.weight() % 2 == 0 { q_int(1) } else { q_int(-1) };
        out.add_term(reflected, c * &sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{forest_polynomial, schubert, ForestRoute};
    use crate::forest::forests_within;
    use crate::perm::Permutation;

    fn t0() -> IndexedForest {
        IndexedForest::from_nvector(&NVector::from_slice(&[0, 2, 0, 1]))
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn monomial_qsym_basics() {
        assert_eq!(
            monomial_qsym(&Composition::new(vec![2, 1]), 3),
            poly("x1^2*x2 + x1^2*x3 + x2^2*x3")
        );
        assert_eq!(monomial_qsym(&Composition::new(vec![1]), 3), poly("x1 + x2 + x3"));
    }

    #[test]
    fn reduction_keeps_or_kills_forest_polynomials() {
        let b = forest_polynomial(&t0(), ForestRoute::Recurrence);
        for route in [ReductionRoute::Forest, ReductionRoute::Linear] {
            // support {2,3,4} fits inside [4]
            let kept = reduce_mod_qsym(&b, 5, route).unwrap();
            assert_eq!(kept.poly, b, "{:?}", route);
            // but not inside [3]
            let killed = reduce_mod_qsym(&b, 4, route).unwrap();
            assert!(killed.poly.is_zero(), "{:?}", route);
        }
    }

    #[test]
    fn generators_reduce_to_zero() {
        for n in 2..=4usize {
            let sum = monomial_qsym(&Composition::new(vec![1]), n);
            for route in [ReductionRoute::Forest, ReductionRoute::Linear] {
                assert!(reduce_mod_qsym(&sum, n, route).unwrap().poly.is_zero());
            }
        }
    }

    #[test]
    fn variable_out_of_range() {
        let f = poly("x5");
        assert!(matches!(
            reduce_mod_qsym(&f, 4, ReductionRoute::Forest),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn quotient_dimensions_match_ballot_counts() {
        for n in 2..=5usize {
            for d in 0..n {
                let (got, expected) = quotient_dimension(n, d);
                assert_eq!(got, expected, "n {} degree {}", n, d);
            }
        }
    }

    #[test]
    fn reduction_routes_agree_on_samples() {
        let samples = [
            "x1^2*x2 + 3*x3", // mixed degrees
            "x1*x2*x3",
            "x2^3 - x1*x3^2 + 1/2*x1*x2",
            "x4^2*x1",
        ];
        for s in samples {
            let f = poly(s);
            let a = reduce_mod_qsym(&f, 5, ReductionRoute::Forest).unwrap();
            let b = reduce_mod_qsym(&f, 5, ReductionRoute::Linear).unwrap();
            assert_eq!(a.poly, b.poly, "{}", s);
        }
    }

    #[test]
    fn ds_examples() {
        let w = Permutation::parse("21543").unwrap();
        let s = schubert(&w).unwrap();
        assert_eq!(divided_symmetrization(&s, 5, DsRoute::Direct).unwrap(), q_int(4));
        assert_eq!(divided_symmetrization(&s, 5, DsRoute::Quotient).unwrap(), q_int(4));

        for n in 2..=5usize {
            let f = Polynomial::monomial(
                NVector::from_entries([(1, n as u32 - 1)]),
                q_int(1),
            );
            assert_eq!(divided_symmetrization(&f, n, DsRoute::Direct).unwrap(), q_int(1));
            assert_eq!(
                divided_symmetrization(&f, n, DsRoute::Quotient).unwrap(),
                q_int(1)
            );
        }

        // any degree-(n-1) quasisymmetric polynomial lands in the ideal
        for n in 3..=5usize {
            let q = bases::fundamental_qsym(&Composition::new(vec![n as u32 - 1]), n);
            assert_eq!(divided_symmetrization(&q, n, DsRoute::Direct).unwrap(), q_int(0));
            assert_eq!(
                divided_symmetrization(&q, n, DsRoute::Quotient).unwrap(),
                q_int(0)
            );
        }

        let wrong = poly("x1^2");
        assert!(matches!(
            divided_symmetrization(&wrong, 4, DsRoute::Direct),
            Err(Error::DegreeMustBeNMinusOne { .. })
        ));
        let inhomogeneous = poly("x1^3 + x2");
        assert!(matches!(
            divided_symmetrization(&inhomogeneous, 4, DsRoute::Direct),
            Err(Error::DegreeMustBeNMinusOne { .. })
        ));
    }

    #[test]
    fn ds_constant_across_generic_points() {
        let f = poly("x1^2*x3 + 2*x2*x3*x4");
        let p1: Vec<Q> = (1..=5).map(|i| pow_q(3, i)).collect();
        let p2: Vec<Q> = (1..=5).map(|i| pow_q(3, i) + q_int(1)).collect();
        assert_eq!(ds_at_point(&f, 5, &p1).unwrap(), ds_at_point(&f, 5, &p2).unwrap());
    }

    #[test]
    fn involution_on_single_node() {
        let f = IndexedForest::from_nvector(&NVector::from_slice(&[1]));
        let good =
            CompatiblePair::new(f.clone(), BTreeSet::new(), BTreeMap::from([(1, 1)]), 2)
                .unwrap();
        assert!(good.is_good());
        assert_eq!(good.psi(), good);

        let above =
            CompatiblePair::new(f.clone(), BTreeSet::new(), BTreeMap::from([(1, 2)]), 2)
                .unwrap();
        assert!(!above.is_good());
        let moved = above.psi();
        assert_eq!(moved.lower, BTreeSet::from([1]));
        assert_eq!(moved.psi(), above);

        // rejecting a bad pair: ideal label at the flag
        assert!(
            CompatiblePair::new(f, BTreeSet::from([1]), BTreeMap::from([(1, 1)]), 2).is_err()
        );
    }

    #[test]
    fn signed_sum_gives_forest_polynomial() {
        let b = forest_polynomial(&t0(), ForestRoute::Recurrence);
        assert_eq!(signed_pair_sum(&t0(), 4), b);
    }

    #[test]
    fn dual_congruence_samples() {
        for f in forests_within(1, 3, 3) {
            for n in 4..=5usize {
                let b = forest_polynomial(&f, ForestRoute::Recurrence);
                let dual = bases::dual_forest_polynomial(&f, n);
                let sign = if f.size() % 2 == 0 { q_int(1) } else { q_int(-1) };
                let diff = b.minus(&dual.scaled(&sign));
                let reduced = reduce_mod_qsym(&diff, n, ReductionRoute::Linear).unwrap();
                assert!(reduced.poly.is_zero(), "forest {} n {}", f, n);
            }
        }
    }

    #[test]
    fn reflection_congruence_samples() {
        for f in forests_within(1, 3, 3) {
            let n = 4usize;
            if f.support().iter().any(|&i| i > n as i32 - 1) {
                continue;
            }
            let b = forest_polynomial(&f, ForestRoute::Recurrence);
            let reflected =
                forest_polynomial(&f.reflected(n as i32), ForestRoute::Recurrence);
            let diff = b.minus(&reflect_negate(&reflected, n));
            let reduced = reduce_mod_qsym(&diff, n, ReductionRoute::Linear).unwrap();
            assert!(reduced.poly.is_zero(), "forest {}", f);
        }
    }
}
