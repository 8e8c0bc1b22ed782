//! Size-capped invariant suites runnable from the shipped binary. Each
//! suite checks one cluster of identities exactly and reports a short
//! summary; any violation is returned as an error message.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::applications::{self, AwRoute, StructureRoute};
use crate::bases::{self, Basis, ForestRoute};
use crate::correspondence;
use crate::forest::{self, IndexedForest};
use crate::nvector::{self, NVector};
use crate::perm::{self, Permutation};
use crate::poly::{q_int, Polynomial, Q};
use crate::quotient::{self, DsRoute, ReductionRoute};
use crate::word::to_barred;

pub type SuiteOutcome = Result<String, String>;

pub fn suite_names() -> Vec<&'static str> {
    vec![
        "core",
        "forest",
        "routes",
        "correspondence",
        "quotient",
        "involution",
        "coefficients",
        "products",
        "eulerian",
    ]
}

pub fn run_suite(name: &str, max_n: usize) -> SuiteOutcome {
    match name {
        "core" => core_suite(max_n),
        "forest" => forest_suite(max_n),
        "routes" => routes_suite(max_n),
        "correspondence" => correspondence_suite(max_n),
        "quotient" => quotient_suite(max_n),
        "involution" => involution_suite(max_n),
        "coefficients" => coefficients_suite(max_n),
        "products" => products_suite(max_n),
        "eulerian" => eulerian_suite(max_n),
        other => Err(format!("unknown suite {}", other)),
    }
}

fn ensure(cond: bool, message: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn core_suite(max_n: usize) -> SuiteOutcome {
    let n = max_n.clamp(2, 6);
    let mut checks = 0usize;
    for w in perm::symmetric_group(n.min(5)) {
        ensure(
            Permutation::from_lehmer(&w.lehmer_code()) == w,
            format!("code round trip failed at {}", w),
        )?;
        checks += 1;
    }
    for c in nvector::artin_set(n) {
        let c = NVector::from_slice(&c);
        ensure(
            Permutation::from_lehmer(&c).lehmer_code() == c,
            format!("code round trip failed at {:?}", c),
        )?;
        checks += 1;
    }
    for w in perm::symmetric_group(4) {
        ensure(
            w.reduced_words().len() == w.inverse().reduced_words().len(),
            format!("word count not inverse-invariant at {}", w),
        )?;
        checks += 1;
    }
    for k in 1..=n {
        let fact: u64 = (1..=k as u64).product();
        ensure(
            nvector::abb_set(k).len() as u64 == nvector::catalan(k),
            format!("ballot count off at {}", k),
        )?;
        ensure(
            nvector::abb_top_set(k).len() as u64 == nvector::catalan(k - 1),
            format!("top ballot count off at {}", k),
        )?;
        ensure(
            nvector::artin_set(k).len() as u64 == fact,
            format!("staircase count off at {}", k),
        )?;
        checks += 3;
    }
    Ok(format!("{} checks", checks))
}

fn small_vectors(max_index: usize, max_weight: u32) -> Vec<NVector> {
    let mut out = vec![vec![]];
    for _ in 0..max_index {
        let mut next = Vec::new();
        for v in out {
            let used: u32 = v.iter().sum();
            for e in 0..=max_weight - used {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter().map(|v| NVector::from_slice(&v)).collect()
}

fn forest_suite(max_n: usize) -> SuiteOutcome {
    let bound = max_n.clamp(2, 6);
    let mut checks = 0usize;
    for c in small_vectors(bound, bound as u32) {
        let f = IndexedForest::from_nvector(&c);
        ensure(f.to_nvector() == c, format!("bijection failed at {:?}", c))?;
        checks += 1;
    }
    for f in forest::forests_within(1, bound.min(5) as i32, bound.min(5)) {
        let again = IndexedForest::from_nvector(&f.to_nvector());
        ensure(again == f, format!("vector round trip failed at {}", f))?;
        let flag = forest::canonical_flag(&f);
        ensure(forest::is_lbs(&f, &flag), format!("canonical flag not valid at {}", f))?;
        checks += 2;
    }
    Ok(format!("{} checks", checks))
}

fn routes_suite(max_n: usize) -> SuiteOutcome {
    let bound = max_n.clamp(2, 4) as i32;
    let mut checks = 0usize;
    for f in forest::forests_within(1, bound, bound as usize) {
        let a = bases::forest_polynomial(&f, ForestRoute::Definition);
        let b = bases::forest_polynomial(&f, ForestRoute::Slides);
        let c = bases::forest_polynomial(&f, ForestRoute::Recurrence);
        ensure(a == b && a == c, format!("route disagreement at {}", f))?;
        let expansion = bases::expand_in_basis(&a, Basis::Slide).map_err(|e| e.to_string())?;
        ensure(
            expansion.coefficients.values().all(|q| *q == q_int(1)),
            format!("slide expansion has a coefficient other than 1 at {}", f),
        )?;
        checks += 2;
    }
    // principal specialization and the code formula for single trees
    for start in 1..=bound {
        for len in 1..=(bound + 1 - start) as usize {
            for shape in forest::Shape::enumerate(len) {
                let t = IndexedForest::single(start, shape);
                let m = *t.support().last().unwrap() as usize;
                let dec = forest::linear_extensions(&t).len() as u64;
                let ones = bases::forest_polynomial(&t, ForestRoute::Recurrence)
                    .at_ones(m);
                let expected = applications::binomial(m, t.size()) * dec;
                ensure(
                    ones == q_int(expected as i64),
                    format!("specialization mismatch at {}", t),
                )?;
                checks += 1;
                if start == 1 {
                    let n = m + 1;
                    let mut sum = Polynomial::zero();
                    for ext in forest::linear_extensions(&t) {
                        let mut line = vec![0i32; n - 1];
                        for (&node, &label) in &ext {
                            line[(node - 1) as usize] = label as i32;
                        }
                        let ell = Permutation::from_one_line(&line).unwrap();
                        let mut exp = ell.inverse().lehmer_code();
                        for i in 1..n as i32 {
                            exp.set(i, exp.get(i) + 1);
                        }
                        sum.add_term(exp, q_int(1));
                    }
                    ensure(
                        sum == bases::forest_polynomial(&t, ForestRoute::Recurrence),
                        format!("code formula mismatch at {}", t),
                    )?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{} checks", checks))
}

fn correspondence_suite(max_n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    // inverse round trip and support shadow over bounded injective words
    let maxval = max_n.clamp(2, 4) as i32;
    let mut alphabet = Vec::new();
    for v in 1..=maxval {
        for c in 1..=2 {
            alphabet.push(crate::word::Letter::new(v, c));
        }
    }
    let mut words: Vec<Vec<crate::word::Letter>> = vec![Vec::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &words {
            for &l in &alphabet {
                if !w.contains(&l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        for w in next {
            words.push(w);
        }
    }
    for word in &words {
        let (p, q) = correspondence::correspondence(word).map_err(|e| e.to_string())?;
        let back = correspondence::read_word(&p, &q).map_err(|e| e.to_string())?;
        ensure(&back == word, "insertion inverse failed")?;
        let supp: BTreeSet<i32> = p.forest.support().into_iter().collect();
        let parked = correspondence::parking_set(word).map_err(|e| e.to_string())?;
        ensure(supp == parked, "occupied set differs from insertion support")?;
        checks += 2;
    }
    // the reduced words of any inverse split into full classes
    for n in 2..=max_n.min(5) {
        for w in perm::symmetric_group(n) {
            let barred: Vec<_> = w
                .inverse()
                .reduced_words()
                .iter()
                .map(|word| to_barred(word))
                .collect();
            for (p, members) in
                correspondence::partition_classes(&barred).map_err(|e| e.to_string())?
            {
                let expected = forest::linear_extensions(&p.forest).len();
                ensure(
                    members.len() == expected,
                    format!("class of {} under {} is not full", p, w),
                )?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} checks", checks))
}

fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> Polynomial {
    let mut f = Polynomial::zero();
    let terms = rng.gen_range(1..=6);
    for _ in 0..terms {
        let mut exp = NVector::zero();
        let mut left = degree;
        while left > 0 {
            let var = rng.gen_range(1..=n) as i32;
            let e = rng.gen_range(1..=left) as u32;
            exp.set(var, exp.get(var) + e);
            left -= e as usize;
        }
        let coef = rng.gen_range(-4i64..=4);
        f.add_term(exp, q_int(coef));
    }
    f
}

fn quotient_suite(max_n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let top = max_n.clamp(3, 5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=top);
        let degree = rng.gen_range(0..=4);
        let f = random_polynomial(&mut rng, n, degree);
        let a = quotient::reduce_mod_qsym(&f, n, ReductionRoute::Forest)
            .map_err(|e| e.to_string())?;
        let b = quotient::reduce_mod_qsym(&f, n, ReductionRoute::Linear)
            .map_err(|e| e.to_string())?;
        ensure(a.poly == b.poly, format!("reduction routes disagree on {}", f))?;
        checks += 1;
    }
    for n in 2..=top {
        for d in 0..n {
            let (got, expected) = quotient::quotient_dimension(n, d);
            ensure(
                got == expected,
                format!("quotient dimension off at n {} degree {}", n, d),
            )?;
            checks += 1;
        }
    }
    // divided symmetrization: two generic points and the quotient route
    for n in 3..=top {
        let f = random_polynomial(&mut rng, n, n - 1);
        if f.is_zero() || !f.is_homogeneous() {
            continue;
        }
        let p1: Vec<Q> = (1..=n as u32).map(|i| q_int(3i64.pow(i))).collect();
        let p2: Vec<Q> = (1..=n as u32).map(|i| q_int(3i64.pow(i) + 1)).collect();
        let d1 = quotient::ds_at_point(&f, n, &p1).map_err(|e| e.to_string())?;
        let d2 = quotient::ds_at_point(&f, n, &p2).map_err(|e| e.to_string())?;
        ensure(d1 == d2, "symmetrized sum depends on the generic point")?;
        let q = quotient::divided_symmetrization(&f, n, DsRoute::Quotient)
            .map_err(|e| e.to_string())?;
        ensure(d1 == q, "direct and quotient symmetrization disagree")?;
        checks += 2;
    }
    Ok(format!("{} checks", checks))
}

fn involution_suite(max_n: usize) -> SuiteOutcome {
    let bound = max_n.clamp(2, 5);
    let mut checks = 0usize;
    for f in forest::forests_within(1, bound as i32, bound.min(4)) {
        if f.is_empty() {
            continue;
        }
        let pairs = quotient::all_compatible_pairs(&f, bound);
        let mut signed = Polynomial::zero();
        for pair in &pairs {
            let image = pair.psi();
            ensure(image.psi() == *pair, format!("not an involution at {}", f))?;
            ensure(image.weight() == pair.weight(), "weight not preserved")?;
            if pair.is_good() {
                ensure(image == *pair, "good pair moved")?;
            } else {
                ensure(image.sign() == -pair.sign(), "sign not reversed")?;
                ensure(!image.is_good(), "image of a bad pair became good")?;
            }
            signed.add_term(pair.weight(), q_int(pair.sign()));
            checks += 1;
        }
        let truncated: Polynomial = bases::forest_polynomial(&f, ForestRoute::Recurrence);
        let expected: Polynomial = truncated
            .terms()
            .filter(|(e, _)| e.max_support().unwrap_or(0) <= bound as i32)
            .fold(Polynomial::zero(), |mut acc, (e, c)| {
                acc.add_term(e.clone(), c.clone());
                acc
            });
        ensure(signed == expected, format!("signed sum differs at {}", f))?;
        checks += 1;
    }
    Ok(format!("{} checks", checks))
}

fn coefficients_suite(max_n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    for n in 2..=max_n.min(5) {
        let reports = applications::coefficient_sweep(n).map_err(|e| e.to_string())?;
        for report in &reports {
            ensure(report.value > 0, format!("vanishing coefficient at {}", report.w))?;
            ensure(
                report.routes.values().all(|&v| v == report.value),
                format!("route disagreement at {}", report.w),
            )?;
            let inv = applications::a_w(&report.w.inverse(), AwRoute::Parking)
                .map_err(|e| e.to_string())?;
            ensure(
                inv.value == report.value,
                format!("inverse symmetry fails at {}", report.w),
            )?;
            let w0 = perm::longest_element(n);
            let conj = w0.compose(&report.w).compose(&w0);
            let conj_report =
                applications::a_w(&conj, AwRoute::Parking).map_err(|e| e.to_string())?;
            ensure(
                conj_report.value == report.value,
                format!("conjugation symmetry fails at {}", report.w),
            )?;
            checks += 4;
        }
        // tableau model for the single-descent permutations
        for report in &reports {
            if let Some(m) = applications::grassmannian_descent(&report.w) {
                let shape = applications::code_partition(&report.w);
                ensure(
                    applications::syt_descent_count(&shape, m) == report.value,
                    format!("tableau count differs at {}", report.w),
                )?;
                checks += 1;
            }
        }
    }
    if max_n >= 5 {
        let w = Permutation::parse("21543").unwrap();
        for j in 0..=2 {
            let (lhs, rhs) =
                applications::shifted_coefficient_identity(&w, j).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, format!("shifted identity fails at j = {}", j))?;
            checks += 1;
        }
    }
    Ok(format!("{} checks", checks))
}

fn products_suite(max_n: usize) -> SuiteOutcome {
    let bound = max_n.clamp(2, 3) as i32;
    let mut checks = 0usize;
    let family = forest::forests_within(1, bound, 2);
    for f1 in &family {
        for f2 in &family {
            let a = applications::forest_structure_constants(f1, f2, StructureRoute::Expansion)
                .map_err(|e| e.to_string())?;
            let b = applications::forest_structure_constants(f1, f2, StructureRoute::Shuffle)
                .map_err(|e| e.to_string())?;
            ensure(a == b, format!("structure routes disagree at {} x {}", f1, f2))?;
            checks += 1;
        }
    }
    Ok(format!("{} checks", checks))
}

fn eulerian_suite(max_n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    for n in 2..=max_n.min(5) {
        for content in compositions_with_zeros(n - 1) {
            let me = applications::multivariate_mixed_eulerian(&content)
                .map_err(|e| e.to_string())?;
            let (_, lbs_total) = applications::mixed_eulerian_lbs_route(&content)
                .map_err(|e| e.to_string())?;
            ensure(
                me.representative.poly == lbs_total,
                format!("labeled-tree route differs at {:?}", content),
            )?;
            let (total, parked) =
                applications::content_parking_count(&content).map_err(|e| e.to_string())?;
            let fact: usize = (1..n).product();
            ensure(total == fact, "wrong number of arrangements")?;
            ensure(
                me.at_ones() == q_int(parked as i64),
                format!("parking count differs at {:?}", content),
            )?;
            let trees =
                applications::bilabeled_trees(&content).map_err(|e| e.to_string())?;
            let (symbols, _) = applications::mixed_eulerian_lbs_route(&content)
                .map_err(|e| e.to_string())?;
            ensure(
                trees.len() == symbols.len(),
                format!("labeled-tree counts differ at {:?}", content),
            )?;
            checks += 4;
        }
    }
    Ok(format!("{} checks", checks))
}

/// Weak compositions of `k` into `k` parts (the admissible contents).
pub fn compositions_with_zeros(k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for v in out {
            let used: u32 = v.iter().sum();
            for e in 0..=(k as u32 - used) {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter()
        .filter(|v| v.iter().sum::<u32>() == k as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        for name in suite_names() {
            let outcome = run_suite(name, 3);
            assert!(outcome.is_ok(), "{}: {:?}", name, outcome);
        }
    }
}
